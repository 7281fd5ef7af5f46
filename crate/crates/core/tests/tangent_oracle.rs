mod common;

use common::{hom_dim, invertible_matrix};
use planepairs::borel::i_cdn;
use planepairs::catalog::{catalog_ideals, Family};
use planepairs::groebner::{intersect, linear_substitution, product, Ideal};
use planepairs::poly::MonomialOrder;
use planepairs::tangent::{expected_component_dim, hom_degree_zero_dim, hom_degree_zero_dim_with_order};
use proptest::prelude::*;

fn id(n: usize, g: &[&str]) -> Ideal {
    Ideal::parse(n, g).unwrap()
}

fn both(i: &Ideal) -> (usize, usize) {
    (hom_degree_zero_dim(i).unwrap(), hom_dim(i.gens(), i.nvars(), 2))
}

/// `(x0,x1)·(x0,...,x_{n-1})` in `P^n`.
fn j_n(n: usize) -> Ideal {
    let vars: Vec<usize> = (0..n).collect();
    product(&Ideal::vars(n + 1, [0, 1]), &Ideal::vars(n + 1, vars))
}

#[test]
fn line_plane_point() {
    assert_eq!(both(&i_cdn(1, 2, 4).unwrap()), (18, 18));
    assert_eq!(hom_degree_zero_dim(&i_cdn(1, 3, 5).unwrap()).unwrap(), 24);
}

#[test]
fn transverse_line_and_plane() {
    let z = intersect(&id(4, &["x0", "x1", "x2"]), &id(4, &["x3", "x4"]));
    assert_eq!(both(&z), (12, 12));
    assert_eq!(expected_component_dim(1, 2, 4).unwrap(), 12);
}

#[test]
fn double_point_ideals() {
    assert_eq!(both(&j_n(3)), (14, 14));
    assert_eq!(both(&j_n(4)), (20, 20));
}

#[test]
fn unique_borel_points_of_equidimensional_pairs() {
    // the stated count 2k(n-k+1) is not what the tangent space gives
    assert_eq!(both(&i_cdn(2, 2, 4).unwrap()), (20, 20));
    assert_eq!(hom_degree_zero_dim(&i_cdn(3, 3, 5).unwrap()).unwrap(), 28);
    assert_eq!(hom_degree_zero_dim(&i_cdn(2, 2, 5).unwrap()).unwrap(), 35);
    assert_eq!(hom_degree_zero_dim(&i_cdn(3, 3, 6).unwrap()).unwrap(), 54);
    for (k, n, dim) in [(2usize, 4usize, 20usize), (2, 5, 28), (3, 5, 35), (3, 6, 54)] {
        assert_ne!(dim, 2 * k * (n - k + 1));
    }
}

#[test]
fn stratum_types_at_n_4() {
    let n = 4;
    let mut seen = Vec::new();
    for e in catalog_ideals(Family::LinePlaneStratum, n).unwrap() {
        let (engine, oracle) = both(&e.ideal);
        assert_eq!(engine, oracle, "type {}", e.label);
        assert_eq!(Some(engine), e.tangent_dim, "type {}", e.label);
        seen.push(engine);
    }
    for v in [5 * n - 5, 4 * n - 4, 6 * n - 6] {
        assert!(seen.contains(&v), "{v} in {seen:?}");
    }
}

#[test]
fn codim_two_pairs_tangent() {
    for e in catalog_ideals(Family::CodimTwoPairs, 4).unwrap() {
        let (engine, oracle) = both(&e.ideal);
        assert_eq!(engine, oracle, "type {}", e.label);
        if let Some(t) = e.tangent_dim {
            assert_eq!(engine, t);
        }
    }
}

#[test]
fn order_does_not_matter() {
    for e in catalog_ideals(Family::LinePlane, 4).unwrap() {
        let g = hom_degree_zero_dim(&e.ideal).unwrap();
        let l = hom_degree_zero_dim_with_order(&e.ideal, &MonomialOrder::Lex).unwrap();
        assert_eq!(g, l, "type {}", e.label);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn invariant_under_substitution(which in 0usize..3, m in invertible_matrix(5)) {
        let i = match which {
            0 => i_cdn(1, 2, 4).unwrap(),
            1 => j_n(4),
            _ => intersect(&id(4, &["x0", "x1"]), &id(4, &["x2", "x3", "x4"])),
        };
        let j = i.substitute(&linear_substitution(5, &m));
        prop_assert_eq!(hom_degree_zero_dim(&j).unwrap(), hom_degree_zero_dim(&i).unwrap());
    }
}
