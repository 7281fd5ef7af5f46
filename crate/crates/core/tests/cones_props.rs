use num::{Signed, Zero};
use planepairs::cones::{
    canonical_class, canonical_from_blowups, cone_contains, effective_generators, express_in_basis, intersection_table,
    is_fano, log_fano_witness, nef_generators, perturbed_anticanonical_ample, stated_relations, verify_tables,
    ConeFamily, DivisorClass,
};
use planepairs::poly::{ratio, Coeff};
use proptest::prelude::*;

fn n_range(f: ConeFamily) -> std::ops::RangeInclusive<usize> {
    f.min_n()..=f.min_n() + 4
}

/// Every fully printed curve column satisfies the stated relation entry by entry.
#[test]
fn stated_relations_hold_on_every_printed_column() {
    for f in ConeFamily::all() {
        let t = intersection_table(f);
        let basis = f.basis();
        for (target, coords) in stated_relations(f) {
            let ti = t.divisor_index(target).unwrap();
            let bi: Vec<usize> = basis.iter().map(|b| t.divisor_index(b).unwrap()).collect();
            let mut checked = 0;
            for c in 0..t.curves.len() {
                let Some(lhs) = t.get(ti, c) else { continue };
                let rhs: Option<i64> = bi.iter().zip(&coords).map(|(&b, &a)| t.get(b, c).map(|v| a * v)).sum();
                if let Some(rhs) = rhs {
                    assert_eq!(lhs, rhs, "{f} {target} on {}", t.curves[c]);
                    checked += 1;
                }
            }
            assert!(checked >= basis.len(), "{f} {target}: only {checked} columns");
            let e = express_in_basis(target, &basis, &t).unwrap();
            let ints: Vec<Coeff> = coords.iter().map(|&a| Coeff::from_integer(a.into())).collect();
            assert_eq!(e.coords, ints, "{f} {target}");
        }
    }
}

#[test]
fn canonical_class_formulas() {
    for f in ConeFamily::all() {
        for n in n_range(f) {
            assert_eq!(canonical_class(f, n).unwrap(), canonical_from_blowups(f, n).unwrap(), "{f} n={n}");
        }
    }
    let k = canonical_class(ConeFamily::LinePlane, 5).unwrap();
    assert_eq!(k, DivisorClass::from_ints(ConeFamily::LinePlane, 5, &[-3, -3, -3]).unwrap());
    let k = canonical_class(ConeFamily::CodimThree, 6).unwrap();
    assert_eq!(k, DivisorClass::from_ints(ConeFamily::CodimThree, 6, &[-5, 0, -2]).unwrap());
}

#[test]
fn fano_verdicts_match_coordinate_signs() {
    for f in ConeFamily::all() {
        for n in n_range(f) {
            // the nef cone is spanned by the basis, so ampleness means every coordinate is positive
            let positive = canonical_class(f, n).unwrap().neg().coords.iter().all(|c| c.is_positive());
            assert_eq!(is_fano(f, n).unwrap(), positive, "{f} n={n}");
        }
    }
    for n in 4..=8 {
        assert!(is_fano(ConeFamily::LinePlane, n).unwrap(), "n={n}");
    }
    assert!(is_fano(ConeFamily::CodimThree, 5).unwrap());
    assert!(!is_fano(ConeFamily::CodimThree, 6).unwrap());
    for n in 6..=8 {
        assert!(is_fano(ConeFamily::TwoTwo, n).unwrap(), "n={n}");
    }
}

#[test]
fn log_fano_boundary_at_six() {
    let w = log_fano_witness(ConeFamily::CodimThree, 6).unwrap().expect("witness");
    assert!(w.anti_log_canonical.coords.iter().all(|c| c.is_positive()));
    let eps = ratio(1, 10);
    assert!(!perturbed_anticanonical_ample(ConeFamily::CodimThree, 6, "D2", &eps).unwrap());
    assert!(perturbed_anticanonical_ample(ConeFamily::CodimThree, 6, "D2", &-eps).unwrap());
}

#[test]
fn cones_are_simplicial_and_tables_verify() {
    for f in ConeFamily::all() {
        for n in n_range(f) {
            let r = verify_tables(f, n).unwrap();
            assert!(r.pass(), "{f} n={n}: {r:?}");
            assert!(r.nef_simplicial);
            if let Some(eff) = effective_generators(f, n).unwrap() {
                let nef = nef_generators(f, n);
                for d in &nef {
                    assert!(planepairs::cones::cone_contains_any(d, &eff), "{f} n={n}");
                }
            }
        }
    }
}

fn family_strategy() -> impl Strategy<Value = ConeFamily> {
    prop::sample::select(ConeFamily::all().to_vec())
}

proptest! {
    #[test]
    fn nonnegative_combinations_are_nef(f in family_strategy(), ws in prop::collection::vec((0i64..6, 1i64..4), 4), extra in 0usize..3) {
        let n = f.min_n() + extra;
        let gens = nef_generators(f, n);
        let mut v = DivisorClass::new(f, n, vec![Coeff::zero(); f.picard_rank()]).unwrap();
        for (g, (a, b)) in gens.iter().zip(&ws) {
            v = v.add_scaled(g, &ratio(*a, *b));
        }
        prop_assert!(cone_contains(&v, &gens, false).unwrap());
        let strict = ws.iter().take(gens.len()).all(|(a, _)| *a > 0);
        prop_assert_eq!(cone_contains(&v, &gens, true).unwrap(), strict);
        let w = v.add_scaled(&gens[0], &ratio(-(ws[0].0 + 1), ws[0].1));
        prop_assert!(!cone_contains(&w, &gens, false).unwrap());
    }
}
