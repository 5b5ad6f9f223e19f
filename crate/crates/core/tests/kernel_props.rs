mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use supercat::classical;
use supercat::positivity::gamma_vector;
use supercat::qkernel::{pochhammer, q_binomial, q_catalan, q_narayana, super_catalan, PochSpec};
use supercat::{rat_equal, LaurentPoly, RationalForm};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-20i64..20, 0..8))
        .prop_map(|(lo, cs)| LaurentPoly::from_i64s(lo, &cs))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = RationalForm> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalForm::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_div_inverts_mul(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn eval_at_one_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn rat_equal_is_an_equivalence(x in rational(), f in nonzero_poly(), y in rational()) {
        prop_assert!(rat_equal(&x, &x));
        let scaled = RationalForm::new(x.num() * &f, x.den() * &f).unwrap();
        prop_assert!(rat_equal(&x, &scaled) && rat_equal(&scaled, &x));
        let scaled_y = RationalForm::new(y.num() * &f, y.den() * &f).unwrap();
        prop_assert_eq!(rat_equal(&x, &y), rat_equal(&scaled, &scaled_y));
    }

    #[test]
    fn poly_json_round_trip(a in poly()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), a);
    }

    #[test]
    fn pochhammer_splits(a in -10i64..=10, b in 1u32..=2, m in 0u32..=15, n in 0u32..=15) {
        let spec = PochSpec::q(a).base(b);
        let tail = PochSpec::q(a + (b * m) as i64).base(b);
        prop_assert_eq!(pochhammer(spec, m + n), pochhammer(spec, m) * pochhammer(tail, n));
    }

    #[test]
    fn pochhammer_even_odd(a in -10i64..=10, n in 0u32..=12) {
        let lhs = pochhammer(PochSpec::q(a), 2 * n);
        let rhs = pochhammer(PochSpec::q(a).base(2), n) * pochhammer(PochSpec::q(a + 1).base(2), n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pochhammer_reversal(a in -10i64..=10, b in 1u32..=2, n in 0u32..=12) {
        let (bi, ni) = (b as i64, n as i64);
        let lhs = pochhammer(PochSpec::q(a).base(b), n);
        let flipped = pochhammer(PochSpec::q(bi - bi * ni - a).base(b), n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let rhs = flipped.shift(ni * a + bi * ni * (ni - 1) / 2).scale(&BigInt::from(sign));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_binomial_matches_factorial_route(n in 0u32..=25, k in 0u32..=25) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binomial(n as i64, k as i64), common::q_binomial_by_factorials(n, k));
    }

    #[test]
    fn super_catalan_symmetric_and_specializes(n in 0u32..=16, m in 0u32..=16) {
        let t = super_catalan(n, m);
        prop_assert_eq!(&t, &super_catalan(m, n));
        prop_assert!(t.has_nonnegative_coeffs());
        prop_assert_eq!(t.eval_at_one(), classical::super_catalan(n, m));
        prop_assert_eq!(t.eval_at_one(), common::t1(n as i64, m as i64));
    }

    #[test]
    fn super_catalan_at_m1_is_catalan(n in 0u32..=16) {
        prop_assert_eq!(super_catalan(n, 1), LaurentPoly::from_i64s(0, &[1, 1]) * q_catalan(n));
    }

    #[test]
    fn q_narayana_symmetry(m in 0u32..=8, extra in 0u32..=8, k in 0u32..=16) {
        let n = m + extra;
        prop_assume!(k <= n - m);
        let p = q_narayana(m, n, k).unwrap();
        prop_assert_eq!(&p, &q_narayana(m, n, n - m - k).unwrap());
        let at_one = BigRational::from_integer(p.eval_at_one());
        prop_assert_eq!(at_one, common::nar1(m as i64, n as i64, k as i64));
    }

    #[test]
    fn gamma_vector_reconstructs(gs in prop::collection::vec(-50i64..50, 1..6), extra in 0usize..3) {
        let d = 2 * (gs.len() - 1) + extra;
        let g = supercat::positivity::GammaVector {
            degree: d,
            gammas: gs.iter().map(|&x| BigInt::from(x)).collect(),
        };
        let mut padded = g.gammas.clone();
        padded.resize(d / 2 + 1, BigInt::from(0));
        prop_assert_eq!(gamma_vector(&g.reconstruct(), d).unwrap().gammas, padded);
    }
}
