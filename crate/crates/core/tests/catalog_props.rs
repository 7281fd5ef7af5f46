mod common;

use std::collections::BTreeSet;

use common::hilbert_function as hf_oracle;
use num::Zero;
use planepairs::borel::i_cdn;
use planepairs::catalog::{
    all_signatures, catalog_ideals, orbit_dimension, orbit_signatures, pair_family_check, pair_family_generators,
    pair_family_ideal, pair_family_initial_terms, pair_family_order, realized, sample_spec, verify_entry, Family,
    PairFamilySpec,
};
use planepairs::groebner::{ideal_equal, is_saturated, Ideal};
use planepairs::hilbert::{hilbert_polynomial, pair_hilbert_polynomial};
use planepairs::poly::{rat, Coeff, Monomial, Polynomial};
use planepairs::tangent::Reducer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SIZES: [(usize, usize); 4] = [(2, 3), (2, 4), (3, 5), (3, 6)];

fn standard_count(gens: &[Monomial], nvars: usize, t: u32) -> i64 {
    Monomial::all_of_degree(nvars, t).iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count() as i64
}

/// Leading terms lie in `C`, and the Hilbert function of `I` equals that of `(C)`; together these force `in(I) = (C)`.
fn family_oracle(spec: &PairFamilySpec) -> bool {
    let (k, n) = (spec.k, spec.n);
    let ord = pair_family_order(k, n);
    let c = pair_family_initial_terms(k, n);
    let gens = pair_family_generators(spec);
    let leads_in_c = gens.iter().all(|g| c.contains(&g.leading_monomial(&ord).unwrap()));
    leads_in_c && (1..=4).all(|t| hf_oracle(&gens, n + 1, t) == standard_count(&c, n + 1, t))
}

#[test]
fn family_initial_ideal_on_every_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for (k, n) in SIZES {
        let hp = pair_hilbert_polynomial(n - k, n - k, n).unwrap();
        for sig in all_signatures(k) {
            let spec = sample_spec(k, n, &sig, &mut rng).unwrap();
            assert!(pair_family_check(&spec).unwrap(), "k={k} n={n} {sig}");
            assert!(family_oracle(&spec), "k={k} n={n} {sig}");
            assert_eq!(hilbert_polynomial(&pair_family_ideal(&spec)), hp);
        }
        let full = &all_signatures(k)[(1 << k) - 1];
        for _ in 0..20 {
            let spec = sample_spec(k, n, full, &mut rng).unwrap();
            assert!(pair_family_check(&spec).unwrap(), "k={k} n={n} {:?}", spec.lambda);
            assert_eq!(hilbert_polynomial(&pair_family_ideal(&spec)), hp);
        }
        let spec = sample_spec(k, n, full, &mut rng).unwrap();
        assert!(family_oracle(&spec));
    }
}

#[test]
fn family_example_k2_n4() {
    let spec = PairFamilySpec::new(2, 4, vec![rat(1), rat(1)]).unwrap();
    let init = pair_family_ideal(&spec).initial_ideal(&pair_family_order(2, 4));
    let expected = Ideal::parse(4, &["x0^2", "x0*x1", "x1^2", "x0*x4"]).unwrap();
    assert!(ideal_equal(&init, &expected));
    assert_eq!(hilbert_polynomial(&init), pair_hilbert_polynomial(2, 2, 4).unwrap());
    let with_x0x3 = Ideal::parse(4, &["x0^2", "x0*x1", "x1^2", "x0*x3", "x0*x4"]).unwrap();
    assert_ne!(hilbert_polynomial(&with_x0x3), pair_hilbert_polynomial(2, 2, 4).unwrap());
}

#[test]
fn family_example_k3_n6() {
    let spec = PairFamilySpec::new(3, 6, vec![rat(1), Coeff::zero(), rat(1)]).unwrap();
    assert_eq!(spec.signature().to_string(), "(nonzero, zero, nonzero)");
    assert_eq!(hilbert_polynomial(&pair_family_ideal(&spec)), pair_hilbert_polynomial(3, 3, 6).unwrap());
    assert!(family_oracle(&spec));
}

#[test]
fn orbit_counts() {
    for (k, n, size) in [(2usize, 4usize, 4usize), (3, 6, 8)] {
        let family = if k == 2 { Family::CodimTwoPairs } else { Family::CodimThreePairs };
        let entries = catalog_ideals(family, n).unwrap();
        assert_eq!(entries.len(), size);
        let reports = orbit_signatures(k, n, 3, 42).unwrap();
        assert!(reports.iter().all(|r| r.pass()));
        assert_eq!(realized(&reports).len(), 1 << k);
        let mut a: Vec<usize> = entries.iter().map(|e| orbit_dimension(&e.ideal)).collect();
        let mut b: Vec<usize> = reports.iter().map(|r| r.orbit_dim).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "k={k}");
    }
}

#[test]
fn entries_are_saturated_with_the_family_polynomial() {
    let families = [
        (Family::CodimTwoPairs, 4),
        (Family::CodimTwoPairs, 5),
        (Family::CodimThreePairs, 6),
        (Family::LinePlane, 4),
        (Family::LinePlane, 5),
        (Family::LinePlaneStratum, 4),
        (Family::LinePlaneStratum, 5),
        (Family::PlaneTwoPoints, 4),
        (Family::PlaneTwoPoints, 5),
        (Family::LineBorel { d: 2 }, 4),
        (Family::Hypersurface { d: 2 }, 3),
        (Family::Hypersurface { d: 3 }, 3),
    ];
    for (f, n) in families {
        let entries = catalog_ideals(f, n).unwrap();
        let keys: BTreeSet<Vec<String>> = entries.iter().map(|e| e.ideal.canonical_strings()).collect();
        assert_eq!(keys.len(), entries.len(), "{f} has repeated entries");
        for e in entries {
            assert!(is_saturated(&e.ideal), "{f} {}", e.label);
            assert_eq!(hilbert_polynomial(&e.ideal), e.hilbert_polynomial, "{f} {}", e.label);
            if let Some(a) = &e.alternative {
                assert!(ideal_equal(a, &e.ideal), "{f} {}", e.label);
            }
        }
    }
}

#[test]
fn entries_verify() {
    for (f, n) in [(Family::CodimTwoPairs, 4), (Family::LinePlane, 4), (Family::LinePlaneStratum, 4), (Family::PlaneTwoPoints, 4)] {
        for e in catalog_ideals(f, n).unwrap() {
            let r = verify_entry(&e, 42).unwrap();
            assert!(r.pass(), "{f} {}: {r:?}", e.label);
            if r.on_pair_component && r.linear_required {
                assert!(r.betti_linear && r.regularity == Some(2));
                let (c, d) = f.pair_type(n).unwrap();
                assert_eq!(r.gin, i_cdn(c, d, n).unwrap().canonical_strings());
            }
        }
    }
}

#[test]
fn standard_monomial_of_the_line_plane_point() {
    let i = i_cdn(1, 2, 4).unwrap();
    let m = Monomial::from_exps(&[0, 0, 1, 1, 0]);
    let gb = i.grevlex();
    assert!(Reducer::new(&gb).is_standard(&m));
    assert!(!i.minimal_monomials().unwrap().iter().any(|g| g.divides(&m)));
    assert!(!i.contains(&Polynomial::monomial(m)));
}

#[test]
fn double_point_ideal_is_saturated() {
    let j3 = Ideal::parse(3, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2"]).unwrap();
    assert!(is_saturated(&j3));
    // (J_3 : m) = J_3 on monomials: m in the colon iff every x_i·m is in J_3
    let gens = j3.minimal_monomials().unwrap();
    let inside = |m: &Monomial| gens.iter().any(|g| g.divides(m));
    for d in 0..=4 {
        for m in Monomial::all_of_degree(4, d) {
            let colon = (0..4).all(|i| inside(&m.times_var(i, 1)));
            assert_eq!(colon, inside(&m), "{m}");
        }
    }
}
