//! Quotients of Laurent polynomials.
//!
//! [`RationalForm`] is an unreduced `num / den` pair compared by
//! cross-multiplication. [`Fraction`] is the construction-time form: its
//! denominator is a multiset of normalized factors, so sums can be taken over
//! the least common multiple of the factor multisets instead of the full
//! product of denominators.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RationalJson")]
pub struct RationalForm {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalJson {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RationalJson> for RationalForm {
    type Error = Error;
    fn try_from(json: RationalJson) -> Result<Self> {
        RationalForm::new(json.num, json.den)
    }
}

impl RationalForm {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalForm { num, den })
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalForm {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `num1 * den2 == num2 * den1`.
    pub fn rat_equal(&self, other: &RationalForm) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Returns the quotient as a polynomial when the division is exact.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    /// Value at `q = 1`, or `None` when the denominator vanishes there.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.eval_at_one();
        (!d.is_zero()).then(|| BigRational::new(self.num.eval_at_one(), d))
    }

    pub fn recip(&self) -> Result<RationalForm> {
        RationalForm::new(self.den.clone(), self.num.clone())
    }

    pub fn shift(&self, e: i64) -> RationalForm {
        RationalForm {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }
}

impl PartialEq for RationalForm {
    fn eq(&self, other: &Self) -> bool {
        self.rat_equal(other)
    }
}

pub fn rat_equal(x: &RationalForm, y: &RationalForm) -> bool {
    x.rat_equal(y)
}

impl Add<&RationalForm> for &RationalForm {
    type Output = RationalForm;
    fn add(self, rhs: &RationalForm) -> RationalForm {
        if self.den == rhs.den {
            return RationalForm {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalForm {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub<&RationalForm> for &RationalForm {
    type Output = RationalForm;
    fn sub(self, rhs: &RationalForm) -> RationalForm {
        self + &(-rhs)
    }
}

impl Mul<&RationalForm> for &RationalForm {
    type Output = RationalForm;
    fn mul(self, rhs: &RationalForm) -> RationalForm {
        RationalForm {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalForm {
    type Output = RationalForm;
    fn neg(self) -> RationalForm {
        RationalForm {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// A numerator over a product of normalized denominator factors.
///
/// Every factor is stored with `min_exp == 0` and a positive constant term;
/// the unit `±q^s` split off during normalization is moved into the
/// numerator.
#[derive(Clone, Debug)]
pub struct Fraction {
    num: LaurentPoly,
    den: BTreeMap<LaurentPoly, u32>,
}

fn normalize_factor(p: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    let s = p.min_exp().ok_or(Error::ZeroDenominator)?;
    let mut f = p.shift(-s);
    let mut unit = LaurentPoly::q_power(-s);
    if f.coeffs()[0].is_negative() {
        f = -f;
        unit = -unit;
    }
    Ok((f, unit))
}

impl Fraction {
    pub fn from_poly(num: LaurentPoly) -> Self {
        Fraction {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divides by one factor; a zero factor is reported as
    /// [`Error::DenominatorVanishes`] with `what` as context.
    pub fn div_poly(mut self, factor: &LaurentPoly, what: &str) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::DenominatorVanishes(what.to_string()));
        }
        if factor.is_one() {
            return Ok(self);
        }
        let (f, unit) = normalize_factor(factor)?;
        self.num = &self.num * &unit;
        if !f.is_one() {
            *self.den.entry(f).or_insert(0) += 1;
        }
        Ok(self)
    }

    pub fn div_all<'a>(
        mut self,
        factors: impl IntoIterator<Item = &'a LaurentPoly>,
        what: &str,
    ) -> Result<Self> {
        for f in factors {
            self = self.div_poly(f, what)?;
        }
        Ok(self)
    }

    pub fn mul_poly(mut self, p: &LaurentPoly) -> Self {
        self.num = &self.num * p;
        self
    }

    pub fn shift(mut self, e: i64) -> Self {
        self.num = self.num.shift(e);
        self
    }

    pub fn scale(mut self, c: &BigInt) -> Self {
        self.num = self.num.scale(c);
        self
    }

    fn den_product(den: &BTreeMap<LaurentPoly, u32>) -> LaurentPoly {
        den.iter()
            .flat_map(|(f, &k)| std::iter::repeat_n(f, k as usize))
            .fold(LaurentPoly::one(), |acc, f| &acc * f)
    }

    pub fn to_rational(&self) -> RationalForm {
        RationalForm {
            num: self.num.clone(),
            den: Self::den_product(&self.den),
        }
    }

    /// Sum over the least common multiple of the factor multisets.
    pub fn sum_all(terms: Vec<Fraction>) -> Fraction {
        let mut lcm: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
        for t in &terms {
            if t.is_zero() {
                continue;
            }
            for (f, &k) in &t.den {
                let e = lcm.entry(f.clone()).or_insert(0);
                *e = (*e).max(k);
            }
        }
        let mut num = LaurentPoly::zero();
        for t in terms {
            if t.is_zero() {
                continue;
            }
            let mut missing = lcm.clone();
            for (f, k) in &t.den {
                *missing.get_mut(f).expect("factor present in lcm") -= k;
            }
            missing.retain(|_, k| *k > 0);
            num += &(&t.num * &Self::den_product(&missing));
        }
        Fraction { num, den: lcm }
    }
}

impl From<LaurentPoly> for Fraction {
    fn from(p: LaurentPoly) -> Self {
        Fraction::from_poly(p)
    }
}

impl Mul<&Fraction> for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        let mut den = self.den.clone();
        for (f, k) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        Fraction {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

impl Add<&Fraction> for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        Fraction::sum_all(vec![self.clone(), rhs.clone()])
    }
}

impl Sub<&Fraction> for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(min, cs)
    }

    fn r(n: LaurentPoly, d: LaurentPoly) -> RationalForm {
        RationalForm::new(n, d).unwrap()
    }

    #[test]
    fn rat_equal_examples() {
        let one_plus_q = p(0, &[1, 1]);
        assert!(rat_equal(
            &r(p(1, &[1]), one_plus_q.clone()),
            &r(p(1, &[1, 1]), &one_plus_q * &one_plus_q)
        ));
        assert!(!rat_equal(
            &r(LaurentPoly::one(), one_plus_q.clone()),
            &r(LaurentPoly::one(), p(0, &[1, 0, 1]))
        ));
        assert!(rat_equal(
            &r(LaurentPoly::zero(), one_plus_q),
            &r(LaurentPoly::zero(), p(3, &[2, 9]))
        ));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalForm::new(LaurentPoly::one(), LaurentPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
        assert!(serde_json::from_str::<RationalForm>(
            r#"{"num":{"minExp":0,"coeffs":["1"]},"den":{"minExp":0,"coeffs":[]}}"#
        )
        .is_err());
    }

    #[test]
    fn fraction_normalizes_units_into_numerator() {
        // 1 / (1 - q^-2) == -q^2 / (1 - q^2)
        let f = Fraction::one().div_poly(&p(-2, &[-1, 0, 1]), "t").unwrap();
        let expect = r(p(2, &[-1]), p(0, &[1, 0, -1]));
        assert!(f.to_rational().rat_equal(&expect));
        assert_eq!(f.to_rational().den(), &p(0, &[1, 0, -1]));
    }

    #[test]
    fn fraction_sum_uses_lcm() {
        // q/(1+q) + 1/(1+q) = 1, with a single (1+q) in the denominator.
        let a = Fraction::from_poly(p(1, &[1]))
            .div_poly(&p(0, &[1, 1]), "a")
            .unwrap();
        let b = Fraction::one().div_poly(&p(0, &[1, 1]), "b").unwrap();
        let s = Fraction::sum_all(vec![a, b]).to_rational();
        assert_eq!(s.den(), &p(0, &[1, 1]));
        assert!(s.rat_equal(&RationalForm::one()));
    }

    #[test]
    fn fraction_zero_factor_reports_context() {
        let err = Fraction::one()
            .div_poly(&LaurentPoly::zero(), "(c;q)_3")
            .unwrap_err();
        assert_eq!(err, Error::DenominatorVanishes("(c;q)_3".into()));
    }

    #[test]
    fn eval_at_one() {
        let x = r(p(0, &[1, 1, 1]), p(0, &[1, 1]));
        assert_eq!(x.eval_at_one(), Some(BigRational::new(3.into(), 2.into())));
        assert_eq!(r(LaurentPoly::one(), p(0, &[1, -1])).eval_at_one(), None);
    }
}
