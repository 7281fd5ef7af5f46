mod common;

use common::{binom, hilbert_function as hf_oracle, invertible_matrix};
use planepairs::borel::{gin, i_cdn, is_borel_fixed};
use planepairs::catalog::{catalog_ideals, Family};
use planepairs::groebner::{linear_substitution, Ideal};
use planepairs::resolution::{betti_table, ek_betti, free_resolution, minimal_free_resolution, BettiTable};
use proptest::prelude::*;

/// Eliahou–Kervaire totals computed from the generator list alone.
fn ek_oracle(i: &Ideal) -> Vec<usize> {
    let maxes: Vec<u64> = i.minimal_monomials().unwrap().iter().map(|m| m.max_var().unwrap() as u64).collect();
    let mut out = Vec::new();
    for k in 0.. {
        let b: u64 = maxes.iter().filter(|&&m| m >= k).map(|&m| binom(m, k)).sum();
        if b == 0 {
            break;
        }
        out.push(b as usize);
    }
    out
}

/// Hilbert function recovered from the alternating Betti sum.
fn hf_from_betti(b: &BettiTable, nvars: usize, d: i64) -> i64 {
    b.entries()
        .filter(|&(_, j, _)| j <= d)
        .map(|(i, j, v)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * v as i64 * binom((d - j) as u64 + nvars as u64 - 1, nvars as u64 - 1) as i64
        })
        .sum()
}

fn spanning_triples() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for n in 2..=6 {
        for d in 0..n {
            for c in 0..=d {
                if c + d + 1 >= n {
                    v.push((c, d, n));
                }
            }
        }
    }
    v
}

#[test]
fn displayed_totals() {
    let b = betti_table(&i_cdn(1, 2, 4).unwrap()).unwrap();
    assert_eq!(b.totals(), vec![1, 6, 9, 5, 1]);
    let j3 = Ideal::parse(3, &["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2"]).unwrap();
    assert_eq!(betti_table(&j3).unwrap().totals(), vec![1, 5, 6, 2]);
    assert_eq!(ek_betti(&i_cdn(1, 2, 4).unwrap()).unwrap(), vec![6, 9, 5, 1]);
    assert_eq!(ek_oracle(&i_cdn(1, 2, 4).unwrap()), vec![6, 9, 5, 1]);
}

#[test]
fn eliahou_kervaire_on_pair_points() {
    for (c, d, n) in spanning_triples() {
        let i = i_cdn(c, d, n).unwrap();
        let ek = ek_betti(&i).unwrap();
        assert_eq!(ek, ek_oracle(&i), "({c},{d},{n})");
        let res = minimal_free_resolution(&i).unwrap();
        let b = res.betti();
        assert_eq!(b.totals()[1..].to_vec(), ek, "({c},{d},{n})");
        assert!(res.is_complex() && res.is_minimal());
        assert!(b.is_linear(), "({c},{d},{n})");
        assert_eq!(b.regularity(), Some(2), "({c},{d},{n})");
        assert_eq!(b.totals()[1], (n - c) * (n - d), "({c},{d},{n})");
        assert_eq!(b.depth(n + 1), Some(c + d + 2 - n), "({c},{d},{n})");
        for t in 0..=4 {
            assert_eq!(hf_from_betti(&b, n + 1, t), hf_oracle(i.gens(), n + 1, t as u32));
        }
    }
}

#[test]
fn borel_catalog_entries_follow_eliahou_kervaire() {
    let mut seen = 0;
    for (f, n) in [(Family::LineBorel { d: 2 }, 4), (Family::Hypersurface { d: 2 }, 3), (Family::LinePlane, 5)] {
        for e in catalog_ideals(f, n).unwrap() {
            if !e.ideal.is_monomial() || !is_borel_fixed(&e.ideal).unwrap() {
                continue;
            }
            let b = betti_table(&e.ideal).unwrap();
            assert_eq!(b.totals()[1..].to_vec(), ek_betti(&e.ideal).unwrap(), "{} {}", f, e.label);
            seen += 1;
        }
    }
    assert!(seen >= 4);
}

#[test]
fn pair_component_entries_share_betti_table_with_gin() {
    for (f, n) in [(Family::CodimTwoPairs, 4), (Family::LinePlane, 4), (Family::LinePlaneStratum, 4)] {
        for e in catalog_ideals(f, n).unwrap() {
            if !e.component.on_pair_component() {
                continue;
            }
            let b = betti_table(&e.ideal).unwrap();
            let g = betti_table(&gin(&e.ideal, 7).unwrap()).unwrap();
            assert_eq!(b, g, "{} {}", f, e.label);
            assert!(b.is_linear() && b.regularity() == Some(2), "{} {}", f, e.label);
        }
    }
}

#[test]
fn nonminimal_resolution_is_a_complex() {
    let i = Ideal::parse(3, &["x0^2 - x1*x2", "x0*x1", "x2^2"]).unwrap();
    let r = free_resolution(&i).unwrap();
    assert!(r.is_complex());
    let m = minimal_free_resolution(&i).unwrap();
    assert!(m.is_complex() && m.is_minimal());
    for t in 0..=5 {
        assert_eq!(hf_from_betti(&m.betti(), 4, t), hf_oracle(i.gens(), 4, t as u32));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn betti_table_under_substitution(idx in 0usize..3, m in invertible_matrix(5)) {
        let all = [i_cdn(1, 2, 4).unwrap(), i_cdn(2, 2, 4).unwrap(), i_cdn(0, 3, 4).unwrap()];
        let i = &all[idx];
        let j = i.substitute(&linear_substitution(5, &m));
        let r = minimal_free_resolution(&j).unwrap();
        prop_assert!(r.is_complex() && r.is_minimal());
        prop_assert_eq!(r.betti(), betti_table(i).unwrap());
    }
}
