mod common;

use common::{homogeneous_poly, ideal_span, member, to_vector};
use planepairs::groebner::{colon, ideal_equal, intersect, saturate, saturate_m, sum, Ideal};
use planepairs::poly::{Monomial, MonomialOrder, Polynomial};
use proptest::prelude::*;

const NV: usize = 4;

fn quadric_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(homogeneous_poly(NV, 2), 1..4).prop_map(|g| Ideal::new(NV, g).unwrap())
}

fn monomial_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(prop::collection::vec(0u16..3, NV), 1..5).prop_map(|es| {
        Ideal::monomial(NV, es.iter().filter(|e| e.iter().any(|&x| x > 0)).map(|e| Monomial::from_exps(e)).collect::<Vec<_>>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn combinations_are_members(i in quadric_ideal(), cs in prop::collection::vec(homogeneous_poly(NV, 1), 3)) {
        let mut p = Polynomial::zero(NV);
        for (g, c) in i.gens().iter().zip(&cs) {
            p = &p + &(g * c);
        }
        let gb = i.grevlex();
        prop_assert!(gb.normal_form(&p).unwrap().is_zero());
        prop_assert!(member(i.gens(), &p));
    }

    #[test]
    fn membership_agrees_with_linear_algebra(i in quadric_ideal(), q in homogeneous_poly(NV, 3)) {
        prop_assert_eq!(i.contains(&q), member(i.gens(), &q));
        let r = i.grevlex().normal_form(&q).unwrap();
        prop_assert!(member(i.gens(), &(&q - &r)));
    }

    #[test]
    fn reduced_basis_independent_of_generator_order(i in quadric_ideal()) {
        let mut rev = i.gens().to_vec();
        rev.reverse();
        let j = Ideal::new(NV, rev).unwrap();
        prop_assert_eq!(&i.grevlex().elements, &j.grevlex().elements);
        prop_assert!(i.grevlex().verify());
        prop_assert!(i.gb(&MonomialOrder::Lex).verify());
    }

    #[test]
    fn intersection_dimensions(i in quadric_ideal(), j in quadric_ideal()) {
        let k = intersect(&i, &j);
        prop_assert!(i.contains_ideal(&k) && j.contains_ideal(&k));
        let s = sum(&i, &j);
        for d in 2..=4u32 {
            let lhs = ideal_span(k.gens(), NV, d).rank();
            let rhs = ideal_span(i.gens(), NV, d).rank() + ideal_span(j.gens(), NV, d).rank()
                - ideal_span(s.gens(), NV, d).rank();
            prop_assert_eq!(lhs, rhs, "degree {}", d);
        }
    }

    #[test]
    fn monomial_intersection_dimensions(i in monomial_ideal(), j in monomial_ideal()) {
        let k = intersect(&i, &j);
        for d in 0..=5u32 {
            for m in Monomial::all_of_degree(NV, d) {
                let p = Polynomial::monomial(m);
                prop_assert_eq!(k.contains(&p), i.contains(&p) && j.contains(&p));
            }
        }
    }

    #[test]
    fn saturation_is_idempotent(i in monomial_ideal()) {
        let s = saturate_m(&i);
        prop_assert!(s.contains_ideal(&i));
        prop_assert!(ideal_equal(&saturate_m(&s), &s));
    }

    #[test]
    fn saturation_of_quadrics(i in quadric_ideal()) {
        let s = saturate_m(&i);
        prop_assert!(s.contains_ideal(&i));
        prop_assert!(ideal_equal(&saturate_m(&s), &s));
    }

    #[test]
    fn colon_by_variable(i in monomial_ideal(), v in 0..NV) {
        let x = Ideal::vars(NV, [v]);
        let c = colon(&i, &x);
        for d in 0..=4u32 {
            for m in Monomial::all_of_degree(NV, d) {
                let p = Polynomial::monomial(m.clone());
                prop_assert_eq!(c.contains(&p), i.contains(&Polynomial::monomial(m.times_var(v, 1))));
            }
        }
        let s = saturate(&i, &x);
        prop_assert!(s.contains_ideal(&c));
    }
}

#[test]
fn homogeneous_membership_sanity() {
    let i = Ideal::parse(3, &["x0*x1", "x1*x2 - x3^2"]).unwrap();
    let p = planepairs::poly::parse_poly("x0*x1*x2 - x0*x3^2 + x1^2*x0", 3).unwrap();
    assert!(i.contains(&p));
    assert!(member(i.gens(), &p));
    assert!(!to_vector(&p).is_empty());
}
