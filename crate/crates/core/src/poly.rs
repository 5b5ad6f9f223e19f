//! Exact Laurent polynomials in one variable over arbitrary-precision integers.
//!
//! A [`LaurentPoly`] is stored densely: a minimum exponent plus the list of
//! coefficients in ascending exponent order. The representation is kept
//! canonical (no leading or trailing zero coefficients, and the zero
//! polynomial has no coefficients and `min_exp == 0`), so structural equality
//! is value equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "LaurentJson", into = "LaurentJson")]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

/// A number of the form `k/2`, stored as `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger(twice)
    }

    pub fn from_integer(value: i64) -> Self {
        HalfInteger(2 * value)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl LaurentPoly {
    /// Builds a polynomial from `coeffs[i]` at exponent `min_exp + i`,
    /// trimming zero coefficients at either end.
    pub fn new(min_exp: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            min_exp: min_exp + lead as i64,
            coeffs,
        }
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    /// `q^exp`.
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `1 - c q^exp` for an integer `c`.
    pub fn one_minus(c: i64, exp: i64) -> Self {
        Self::one() - Self::monomial(c, exp)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Coefficients in ascending exponent order, starting at `min_exp`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `q = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `(min_exp + max_exp) / 2` when the coefficient list reads the same
    /// reversed, `None` otherwise.
    pub fn palindromic_center(&self) -> Result<Option<HalfInteger>> {
        let max = self.max_exp().ok_or(Error::ZeroPolynomial)?;
        Ok(self
            .is_palindromic()
            .then(|| HalfInteger::from_twice(self.min_exp + max)))
    }

    /// Exact quotient `self / divisor`; fails unless `divisor * c == self`
    /// for some Laurent polynomial `c`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let db = divisor.coeffs.len() - 1;
        let da = self.coeffs.len() - 1;
        if da < db {
            return Err(Error::DivisionNotExact);
        }
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact);
            }
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    rem[i + j] -= &qi * bj;
                }
            }
            quot[i] = qi;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionNotExact);
        }
        Ok(Self::new(self.min_exp - divisor.min_exp, quot))
    }

    /// Pretty printer using `var` as the variable name.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Pretty { poly: self, var }
    }

    fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

fn bit_length(x: usize) -> u64 {
    (usize::BITS - x.leading_zeros()) as u64
}

fn mul_dense(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let len = a.coeffs.len() + b.coeffs.len() - 1;
    let min_exp = a.min_exp + b.min_exp;
    let shorter = a.coeffs.len().min(b.coeffs.len());
    // Products accumulate in i128 when no partial sum can overflow.
    if a.max_bits() + b.max_bits() + bit_length(shorter) <= 126 {
        if let (Some(xs), Some(ys)) = (a.small_coeffs(), b.small_coeffs()) {
            let mut acc = vec![0i128; len];
            for (i, &x) in xs.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in ys.iter().enumerate() {
                    acc[i + j] += x as i128 * y as i128;
                }
            }
            return LaurentPoly::new(min_exp, acc.into_iter().map(BigInt::from).collect());
        }
    }
    let mut acc = vec![BigInt::zero(); len];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
    LaurentPoly::new(min_exp, acc)
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.min_exp - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.min_exp - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::new(lo, out)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_dense(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

struct Pretty<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
}

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.poly.min_exp + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(self.var)?,
                (_, false) => write!(f, "{mag}*{}", self.var)?,
            }
            if exp != 0 && exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("q").fmt(f)
    }
}

/// Wire form: `{"minExp": int, "coeffs": [decimal strings]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LaurentJson {
    #[serde(rename = "minExp")]
    min_exp: i64,
    coeffs: Vec<String>,
}

impl From<LaurentPoly> for LaurentJson {
    fn from(p: LaurentPoly) -> Self {
        LaurentJson {
            min_exp: p.min_exp,
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<LaurentJson> for LaurentPoly {
    type Error = Error;

    fn try_from(json: LaurentJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| parse_decimal(s))
            .collect::<Result<Vec<_>>>()?;
        match (coeffs.first(), coeffs.last()) {
            (None, None) if json.min_exp != 0 => {
                Err(Error::Parse("zero polynomial must have minExp 0".into()))
            }
            (Some(a), Some(b)) if a.is_zero() || b.is_zero() => Err(Error::Parse(
                "first and last coefficients must be nonzero".into(),
            )),
            _ => Ok(LaurentPoly {
                min_exp: json.min_exp,
                coeffs,
            }),
        }
    }
}

fn parse_decimal(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("`{s}` is not a decimal integer")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
