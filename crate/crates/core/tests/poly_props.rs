mod common;

use common::small_poly;
use planepairs::poly::{parse_poly, MonomialOrder, Polynomial};
use proptest::prelude::*;

const NV: usize = 4;

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::Grevlex,
        MonomialOrder::permuted_lex(vec![2, 0, 3, 1], NV).unwrap(),
        MonomialOrder::Elimination { keep: 2 },
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_is_associative(p in small_poly(NV), q in small_poly(NV), r in small_poly(NV)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_is_commutative(p in small_poly(NV), q in small_poly(NV)) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_is_associative(p in small_poly(NV), q in small_poly(NV), r in small_poly(NV)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn distributivity(p in small_poly(NV), q in small_poly(NV), r in small_poly(NV)) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn additive_inverse(p in small_poly(NV)) {
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &Polynomial::zero(NV), p.clone());
        prop_assert_eq!(&p * &Polynomial::one(NV), p);
    }

    #[test]
    fn leading_term_is_multiplicative(p in small_poly(NV), q in small_poly(NV)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        for ord in orders() {
            let (mp, cp) = p.leading_term(&ord).unwrap();
            let (mq, cq) = q.leading_term(&ord).unwrap();
            let (m, c) = (&p * &q).leading_term(&ord).unwrap();
            prop_assert_eq!(m, mp.mul(&mq));
            prop_assert_eq!(c, cp * cq);
        }
    }

    #[test]
    fn text_round_trip(p in small_poly(NV)) {
        let text = p.to_text();
        let back = parse_poly(&text, NV - 1).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn orders_are_total_and_compatible(p in small_poly(NV), q in small_poly(NV), r in small_poly(NV)) {
        for ord in orders() {
            for (a, _) in p.terms() {
                for (b, _) in q.terms() {
                    prop_assert_eq!(ord.cmp(a, b), ord.cmp(b, a).reverse());
                    for (m, _) in r.terms() {
                        prop_assert_eq!(ord.cmp(a, b), ord.cmp(&a.mul(m), &b.mul(m)));
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_printing_is_grevlex() {
    let p = parse_poly("x3^2 + x0*x2 + x1^2", 3).unwrap();
    assert_eq!(p.to_text(), "x1^2 + x0*x2 + x3^2");
}
