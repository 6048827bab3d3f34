//! Property tests for the exact-arithmetic substrate: ring laws on random
//! Laurent polynomials, exact-division round trips, reciprocal involution,
//! and evaluation as a ring homomorphism.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use vieta_core::exchange::ExchangePoly;
use vieta_core::laurent::LaurentPoly;

const RANK: usize = 3;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (
        prop::collection::vec(-3i64..=3, RANK),
        -6i64..=6,
    );
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(
            RANK,
            terms
                .into_iter()
                .map(|(exps, c)| (exps, BigInt::from(c))),
        )
        .expect("rank-consistent terms")
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_exchange() -> impl Strategy<Value = ExchangePoly> {
    prop::collection::vec(0i64..=5, 0..4).prop_map(|interior| {
        let mut coeffs = vec![1i64];
        coeffs.extend(interior);
        coeffs.push(1);
        ExchangePoly::from_i64(&coeffs).expect("unit ends, nonnegative interior")
    })
}

fn arb_point() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((1i64..=7, 1i64..=7), RANK).prop_map(|pairs| {
        pairs
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect()
    })
}

proptest! {
    #[test]
    fn addition_is_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        let left = p.add(&q).unwrap().add(&r).unwrap();
        let right = p.add(&q.add(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_commutes(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
    }

    #[test]
    fn multiplication_distributes(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        let left = p.mul(&q.add(&r).unwrap()).unwrap();
        let right = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exact_div_inverts_mul(p in arb_poly(), q in arb_nonzero_poly()) {
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(prod.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn reciprocal_is_an_involution(z in arb_exchange()) {
        prop_assert_eq!(z.reciprocal().reciprocal(), z);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), point in arb_point()) {
        let pv = p.eval(&point).unwrap();
        let qv = q.eval(&point).unwrap();
        let sum = p.add(&q).unwrap().eval(&point).unwrap();
        let prod = p.mul(&q).unwrap().eval(&point).unwrap();
        prop_assert_eq!(sum, pv.clone() + qv.clone());
        prop_assert_eq!(prod, pv * qv);
    }

    #[test]
    fn exchange_apply_respects_eval(z in arb_exchange(), p in arb_poly(), point in arb_point()) {
        let out = z.apply(&p).unwrap().eval(&point).unwrap();
        let pv = p.eval(&point).unwrap();
        let mut expected = BigRational::new(BigInt::from(0), BigInt::from(1));
        let mut power = BigRational::new(BigInt::from(1), BigInt::from(1));
        for c in z.coeffs() {
            expected += BigRational::from(c.clone()) * power.clone();
            power *= pv.clone();
        }
        prop_assert_eq!(out, expected);
    }
}
