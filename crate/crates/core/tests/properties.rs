use std::collections::BTreeSet;

use muttjeff::discriminant::{resultant, sylvester_resultant};
use muttjeff::factor::{factor_int, is_probable_prime};
use muttjeff::poly::Parity;
use muttjeff::scalar::ratio;
use muttjeff::{BigInt, BigRational, IntPoly, RatPoly};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_poly(max_len: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-9i64..=9, 0..=max_len).prop_map(|c| RatPoly::from_ints(&c))
}

fn nonconstant(max_len: usize) -> impl Strategy<Value = RatPoly> {
    small_poly(max_len).prop_filter("degree >= 1", |p| p.degree().is_some_and(|d| d >= 1))
}

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn ring_laws(p in small_poly(7), q in small_poly(7), r in small_poly(7)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn derivative_undoes_integrate(p in small_poly(7)) {
        prop_assert_eq!(p.integrate().derivative(), p);
    }

    #[test]
    fn evaluation_is_multiplicative(p in small_poly(7), q in small_poly(7), x0 in small_rat()) {
        prop_assert_eq!((&p * &q).evaluate(&x0), p.evaluate(&x0) * q.evaluate(&x0));
        prop_assert_eq!((&p + &q).evaluate(&x0), p.evaluate(&x0) + q.evaluate(&x0));
    }

    #[test]
    fn even_part_round_trip(q in small_poly(5), drop in 0usize..3) {
        let p = q.inflate(2).shl(drop);
        let parity = if drop % 2 == 0 { Parity::Even } else { Parity::Odd };
        let back = p.even_part_extract(parity, drop).unwrap();
        prop_assert_eq!(back.inflate(2).shl(drop), p);
        prop_assert_eq!(back, q);
    }

    #[test]
    fn shift_is_invertible(p in small_poly(7), a in small_rat()) {
        prop_assert_eq!(p.shift(&a).shift(&-a.clone()), p.clone());
        prop_assert_eq!(p.shift(&a).evaluate(&BigRational::zero()), p.evaluate(&a));
    }

    #[test]
    fn content_times_primitive(p in nonconstant(7), den in 1i64..=12) {
        let p = p.scale(&ratio(1, den));
        let (c, prim) = p.content_primitive().unwrap();
        prop_assert_eq!(prim.scale(&c), p);
        prop_assert!(prim.leading().is_positive());
        let ints = prim.to_integer_coeffs().unwrap();
        let g = ints.iter().fold(BigInt::zero(), |g, v| num_integer::Integer::gcd(&g, v));
        prop_assert!(g.is_one());
    }

    #[test]
    fn resultant_antisymmetry(p in nonconstant(6), q in nonconstant(6)) {
        let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
        let rpq = resultant(&p, &q).unwrap();
        let rqp = resultant(&q, &p).unwrap();
        prop_assert_eq!(rpq, if (dp * dq) % 2 == 1 { -rqp } else { rqp });
    }

    #[test]
    fn resultant_multiplicative(p in nonconstant(5), q in nonconstant(5), r in nonconstant(5)) {
        let lhs = resultant(&p, &(&q * &r)).unwrap();
        prop_assert_eq!(lhs, resultant(&p, &q).unwrap() * resultant(&p, &r).unwrap());
    }

    #[test]
    fn subresultant_matches_sylvester(p in nonconstant(7), q in nonconstant(7)) {
        prop_assert_eq!(resultant(&p, &q).unwrap(), sylvester_resultant(&p, &q).unwrap());
        let ip: IntPoly = p.map(|c| c.to_integer());
        let iq: IntPoly = q.map(|c| c.to_integer());
        prop_assert_eq!(BigRational::from_integer(resultant(&ip, &iq).unwrap()), resultant(&p, &q).unwrap());
    }

    #[test]
    fn factor_round_trip(v in any::<i64>(), k in 0u32..4) {
        let v = BigInt::from(v) * BigInt::from(7919).pow(k);
        let f = factor_int(&v, &BTreeSet::new()).unwrap();
        prop_assert_eq!(f.value(), v);
        for p in f.primes() {
            prop_assert!(is_probable_prime(&p));
        }
    }
}
