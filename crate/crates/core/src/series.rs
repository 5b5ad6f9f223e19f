//! Truncated power series in `t` whose coefficients are rational functions of
//! `q`, and the generating functions `f_m(q, t)` of the q-super Catalan
//! numbers.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::identities::{self, IdentityId, Side, VerificationReport};
use crate::poly::LaurentPoly;
use crate::qkernel::{pochhammer, super_catalan, PochSpec};
use crate::rational::{Fraction, RationalForm};

/// Coefficients of `t^0 .. t^order`.
///
/// Coefficients are held as [`Fraction`]s so that sums of products share
/// denominator factors instead of multiplying them out.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Fraction>,
}

impl TruncatedSeries {
    pub fn from_fractions(coeffs: Vec<Fraction>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least t^0");
        TruncatedSeries { coeffs }
    }

    pub fn from_rationals(coeffs: &[RationalForm]) -> Self {
        Self::from_fractions(
            coeffs
                .iter()
                .map(|r| {
                    Fraction::from_poly(r.num().clone())
                        .div_poly(r.den(), "series coefficient")
                        .expect("RationalForm denominators are nonzero")
                })
                .collect(),
        )
    }

    /// `sum_{k <= order} t^k`, the truncation of `1 / (1 - t)`.
    pub fn geometric(order: usize) -> Self {
        Self::from_fractions(vec![Fraction::one(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Fraction::zero(); order + 1];
        coeffs[0] = Fraction::one();
        Self::from_fractions(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> RationalForm {
        self.coeffs[k].to_rational()
    }

    pub fn coeffs(&self) -> Vec<RationalForm> {
        self.coeffs.iter().map(Fraction::to_rational).collect()
    }

    /// Multiplies by `t`, dropping the term pushed past the order.
    pub fn times_t(&self) -> Self {
        let mut coeffs = vec![Fraction::zero()];
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self::from_fractions(coeffs)
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::from_fractions(self.coeffs.iter().map(|c| c.clone().mul_poly(p)).collect())
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Self {
        let n = self.order().min(other.order());
        Self::from_fractions(
            (0..=n)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        )
    }

    pub fn to_side(&self) -> Side {
        Side::Series {
            order: self.order(),
            coeffs: self.coeffs(),
        }
    }

    /// Coefficientwise equality up to the common order.
    pub fn equals(&self, other: &TruncatedSeries) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a.to_rational().rat_equal(&b.to_rational()))
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            order: usize,
            coeffs: Vec<RationalForm>,
        }
        Wire {
            order: self.order(),
            coeffs: self.coeffs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            order: usize,
            coeffs: Vec<RationalForm>,
        }
        let w = Wire::deserialize(d)?;
        if w.coeffs.len() != w.order.saturating_add(1) {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                w.order,
                w.order.saturating_add(1),
                w.coeffs.len()
            )));
        }
        Ok(TruncatedSeries::from_rationals(&w.coeffs))
    }
}

/// Cauchy product, truncated to the smaller order.
pub fn mul_series(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let n = a.order().min(b.order());
    TruncatedSeries::from_fractions(
        (0..=n)
            .map(|k| Fraction::sum_all((0..=k).map(|i| &a.coeffs[i] * &b.coeffs[k - i]).collect()))
            .collect(),
    )
}

/// `s(q^e t)`: the coefficient of `t^k` is multiplied by `q^(e k)`.
pub fn substitute_t_scale(s: &TruncatedSeries, e: i64) -> TruncatedSeries {
    TruncatedSeries::from_fractions(
        s.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone().shift(e * k as i64))
            .collect(),
    )
}

fn neg_q_factors(n: u32) -> Vec<LaurentPoly> {
    PochSpec::neg_q(1).factors(n)
}

/// `f_m(q, t)`: the coefficient of `t^n` is
/// `T_{n,m}(q) / ((-q;q)_m (-q;q)_n (-q;q)_(n+m))`.
pub fn series_fm(m: u32, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order as u32)
        .map(|n| {
            let mut den = neg_q_factors(m);
            den.extend(neg_q_factors(n));
            den.extend(neg_q_factors(n + m));
            Fraction::from_poly(super_catalan(n, m))
                .div_all(&den, "(-q;q)_n")
                .expect("1 + q^j never vanishes")
        })
        .collect();
    TruncatedSeries::from_fractions(coeffs)
}

/// `sum_k (q;q^2)_k / (q^2;q^2)_k t^k`.
pub fn series_f0_closed(order: usize) -> TruncatedSeries {
    let (odd, even) = (PochSpec::q(1).base(2), PochSpec::q(2).base(2));
    let coeffs = (0..=order as u32)
        .map(|k| {
            Fraction::from_poly(pochhammer(odd, k))
                .div_all(&even.factors(k), "(q^2;q^2)_k")
                .expect("1 - q^(2j) vanishes only at j = 0")
        })
        .collect();
    TruncatedSeries::from_fractions(coeffs)
}

pub(crate) fn f0_functional_sides(order: usize) -> (Side, Side) {
    let f0 = series_fm(0, order);
    let lhs = mul_series(&f0, &substitute_t_scale(&f0, 1));
    (lhs.to_side(), TruncatedSeries::geometric(order).to_side())
}

pub(crate) fn f0_closed_form_sides(order: usize) -> (Side, Side) {
    (
        series_fm(0, order).to_side(),
        series_f0_closed(order).to_side(),
    )
}

/// Cleared form `t f_1(t) f_0(t/q) = q (f_0(t/q) - 1)`.
pub(crate) fn f1_formula_sides(order: usize) -> (Side, Side) {
    let f0_down = substitute_t_scale(&series_fm(0, order), -1);
    let lhs = mul_series(&series_fm(1, order), &f0_down).times_t();
    let rhs = f0_down
        .sub(&TruncatedSeries::one(order))
        .scale(&LaurentPoly::q_power(1));
    (lhs.to_side(), rhs.to_side())
}

/// `t f_0(t) f_1(qt) = f_0(t) - 1`.
pub(crate) fn f0_f1_convolution_sides(order: usize) -> (Side, Side) {
    let f0 = series_fm(0, order);
    let f1_up = substitute_t_scale(&series_fm(1, order), 1);
    let lhs = mul_series(&f0, &f1_up).times_t();
    let rhs = f0.sub(&TruncatedSeries::one(order));
    (lhs.to_side(), rhs.to_side())
}

pub fn verify_f0_functional(order: usize) -> VerificationReport {
    identities::verify(IdentityId::F0Functional, &[order as i64])
}

pub fn verify_f0_closed_form(order: usize) -> VerificationReport {
    identities::verify(IdentityId::F0ClosedForm, &[order as i64])
}

pub fn verify_f1_formula(order: usize) -> VerificationReport {
    identities::verify(IdentityId::F1Formula, &[order as i64])
}

pub fn verify_f0_f1_convolution(order: usize) -> VerificationReport {
    identities::verify(IdentityId::F0F1Convolution, &[order as i64])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::binomial;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(num: LaurentPoly, den: LaurentPoly) -> RationalForm {
        RationalForm::new(num, den).unwrap()
    }

    fn one_plus_q() -> LaurentPoly {
        LaurentPoly::from_i64s(0, &[1, 1])
    }

    #[test]
    fn fm_coefficients() {
        let f0 = series_fm(0, 3);
        assert!(f0.coeff(1).rat_equal(&r(LaurentPoly::one(), one_plus_q())));
        let f1 = series_fm(1, 3);
        assert!(f1.coeff(0).rat_equal(&r(LaurentPoly::one(), one_plus_q())));
        for m in 0..6u32 {
            let c0 = series_fm(m, 0).coeff(0).eval_at_one().unwrap();
            let expect = BigRational::new(binomial(2 * m as i64, m as i64), BigInt::from(4).pow(m));
            assert_eq!(c0, expect);
        }
    }

    #[test]
    fn f0_closed_coefficients() {
        let s = series_f0_closed(2);
        assert!(s.coeff(0).rat_equal(&RationalForm::one()));
        assert!(s.coeff(1).rat_equal(&r(LaurentPoly::one(), one_plus_q())));
    }

    #[test]
    fn f0_at_one_is_central_binomial_series() {
        let s = series_fm(0, 10);
        for k in 0..=10 {
            let expect = BigRational::new(binomial(2 * k, k), BigInt::from(4).pow(k as u32));
            assert_eq!(s.coeff(k as usize).eval_at_one().unwrap(), expect);
        }
    }

    #[test]
    fn mul_and_substitute() {
        let one_plus_t = TruncatedSeries::from_rationals(&[
            RationalForm::one(),
            RationalForm::one(),
            RationalForm::zero(),
        ]);
        let one_minus_t = TruncatedSeries::from_rationals(&[
            RationalForm::one(),
            -&RationalForm::one(),
            RationalForm::zero(),
        ]);
        let p = mul_series(&one_plus_t, &one_minus_t);
        assert!(p.coeff(0).rat_equal(&RationalForm::one()));
        assert!(p.coeff(1).is_zero());
        assert!(p.coeff(2).rat_equal(&-&RationalForm::one()));
        assert!(mul_series(&TruncatedSeries::one(2), &one_plus_t).equals(&one_plus_t));

        let short = TruncatedSeries::geometric(1);
        assert_eq!(mul_series(&short, &one_plus_t).order(), 1);

        let g = TruncatedSeries::geometric(4);
        assert!(substitute_t_scale(&g, 0).equals(&g));
        let up = substitute_t_scale(&g, 1);
        assert_eq!(up.coeff(3).num(), &LaurentPoly::q_power(3));
        assert!(substitute_t_scale(&up, -1).equals(&g));
    }

    #[test]
    fn generating_function_identities() {
        for n in [0, 1, 6] {
            assert!(verify_f0_functional(n).is_verified());
            assert!(verify_f0_closed_form(n).is_verified());
            assert!(verify_f0_f1_convolution(n).is_verified());
        }
        for n in [1, 6] {
            assert!(verify_f1_formula(n).is_verified());
        }
    }

    #[test]
    fn f1_lowest_order_by_hand() {
        let (lhs, rhs) = f1_formula_sides(1);
        let (Side::Series { coeffs: l, .. }, Side::Series { coeffs: rr, .. }) = (lhs, rhs) else {
            panic!("series sides");
        };
        assert!(l[0].is_zero() && rr[0].is_zero());
        assert!(rr[1].rat_equal(&r(LaurentPoly::one(), one_plus_q())));
        assert!(l[1].rat_equal(&rr[1]));
    }

    #[test]
    fn json_round_trip_and_order_check() {
        let s = series_fm(1, 2);
        let text = serde_json::to_string(&s).unwrap();
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        assert!(back.equals(&s));
        assert_eq!(back.order(), 2);
        let bad = r#"{"order":1,"coeffs":[{"num":{"minExp":0,"coeffs":["1"]},"den":{"minExp":0,"coeffs":["1"]}}]}"#;
        assert!(serde_json::from_str::<TruncatedSeries>(bad).is_err());
    }
}
