//! Constructors for the q-objects: q-integers, q-factorials, Gaussian
//! binomials, q-Pochhammer symbols, terminating `2phi1` sums, q-super Catalan
//! and q-Catalan numbers, q-m-Narayana numbers and the half-index binomial.
//!
//! Gaussian binomials come from a shared Pascal-recurrence table, and
//! q-factorials and q-super Catalan numbers are memoized; the caches sit
//! behind `RwLock`s so every function here can be called from any thread.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::classical;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rational::{Fraction, RationalForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The parameter `a = sign * q^shift` and base `q^base` of `(a; q^base)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochSpec {
    sign: Sign,
    shift: i64,
    base: u32,
}

impl PochSpec {
    pub fn new(sign: Sign, shift: i64, base: u32) -> Result<Self> {
        if base == 0 {
            return Err(Error::ParameterOutOfRange(
                "Pochhammer base must be >= 1".into(),
            ));
        }
        Ok(PochSpec { sign, shift, base })
    }

    /// `(q^shift; q)`.
    pub fn q(shift: i64) -> Self {
        PochSpec {
            sign: Sign::Plus,
            shift,
            base: 1,
        }
    }

    /// `(-q^shift; q)`.
    pub fn neg_q(shift: i64) -> Self {
        PochSpec {
            sign: Sign::Minus,
            shift,
            base: 1,
        }
    }

    /// Same parameter over base `q^base`.
    ///
    /// # Panics
    /// If `base == 0`.
    pub fn base(self, base: u32) -> Self {
        assert!(base >= 1, "Pochhammer base must be >= 1");
        PochSpec { base, ..self }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn base_exp(&self) -> u32 {
        self.base
    }

    /// The `j`-th factor `1 - sign q^(shift + base j)`.
    pub fn factor(&self, j: u32) -> LaurentPoly {
        LaurentPoly::one_minus(self.sign.as_i64(), self.shift + self.base as i64 * j as i64)
    }

    pub fn factors(&self, n: u32) -> Vec<LaurentPoly> {
        (0..n).map(|j| self.factor(j)).collect()
    }
}

impl fmt::Display for PochSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        write!(f, "({sign}q^{};q^{})", self.shift, self.base)
    }
}

/// `prod_{j<n} (1 - sign q^(shift + base j))`; the empty product is 1.
pub fn pochhammer(spec: PochSpec, n: u32) -> LaurentPoly {
    spec.factors(n).into_iter().product()
}

/// `[i] = 1 + q + ... + q^(i-1)`; `[0] = 0`.
pub fn q_int(i: u32) -> LaurentPoly {
    LaurentPoly::from_i64s(0, &vec![1; i as usize])
}

fn factorial_table() -> &'static RwLock<Vec<LaurentPoly>> {
    static TABLE: OnceLock<RwLock<Vec<LaurentPoly>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![LaurentPoly::one()]))
}

pub fn q_factorial(k: u32) -> LaurentPoly {
    let k = k as usize;
    if let Some(p) = factorial_table().read().unwrap().get(k) {
        return p.clone();
    }
    let mut table = factorial_table().write().unwrap();
    while table.len() <= k {
        let i = table.len() as u32;
        let next = table.last().unwrap() * &q_int(i);
        table.push(next);
    }
    table[k].clone()
}

fn binomial_rows() -> &'static RwLock<Vec<Vec<LaurentPoly>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<LaurentPoly>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![LaurentPoly::one()]]))
}

/// Gaussian binomial `[n choose k]`, zero unless `0 <= k <= n`.
///
/// Rows are built by `[n,k] = [n-1,k-1] + q^k [n-1,k]` and cached.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if let Some(row) = binomial_rows().read().unwrap().get(n) {
        return row[k].clone();
    }
    let mut rows = binomial_rows().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let len = prev.len() + 1;
        let row: Vec<LaurentPoly> = (0..len)
            .map(|j| {
                let left = if j > 0 {
                    prev[j - 1].clone()
                } else {
                    LaurentPoly::zero()
                };
                let right = prev.get(j).map(|p| p.shift(j as i64)).unwrap_or_default();
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows[n][k].clone()
}

impl Default for LaurentPoly {
    fn default() -> Self {
        LaurentPoly::zero()
    }
}

fn super_catalan_cache() -> &'static RwLock<HashMap<(u32, u32), LaurentPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// q-super Catalan number `[2m]! [2n]! / ([m]! [n]! [m+n]!)`, symmetric in
/// `n` and `m`.
pub fn super_catalan(n: u32, m: u32) -> LaurentPoly {
    let key = (n.max(m), n.min(m));
    if let Some(p) = super_catalan_cache().read().unwrap().get(&key) {
        return p.clone();
    }
    let num = q_factorial(2 * m) * q_factorial(2 * n);
    let den = q_factorial(m) * q_factorial(n) * q_factorial(m + n);
    let value = num
        .exact_div(&den)
        .expect("q-super Catalan quotient is a polynomial");
    super_catalan_cache()
        .write()
        .unwrap()
        .insert(key, value.clone());
    value
}

/// `C_n(q) = [2n choose n] / [n+1]`.
pub fn q_catalan(n: u32) -> LaurentPoly {
    q_binomial(2 * n as i64, n as i64)
        .exact_div(&q_int(n + 1))
        .expect("q-Catalan quotient is a polynomial")
}

/// q-m-Narayana number `[2m,m][n,k][n,k+m] / [n,m]` for `m <= n`,
/// `k <= n - m`.
pub fn q_narayana(m: u32, n: u32, k: u32) -> Result<LaurentPoly> {
    if m > n || k > n - m {
        return Err(Error::ParameterOutOfRange(format!(
            "q-Narayana needs m <= n and k <= n - m (m={m}, n={n}, k={k})"
        )));
    }
    let (m, n, k) = (m as i64, n as i64, k as i64);
    let num = q_binomial(2 * m, m) * q_binomial(n, k) * q_binomial(n, k + m);
    num.exact_div(&q_binomial(n, m))
}

/// The half-index binomial, realized as `(q^(1-2k); q^2)_(k+m) / (q^2; q^2)_(k+m)`.
pub fn half_binomial(m: u32, k: u32) -> RationalForm {
    let len = k + m;
    let num = pochhammer(PochSpec::q(1 - 2 * k as i64).base(2), len);
    let den = pochhammer(PochSpec::q(2).base(2), len);
    RationalForm::new(num, den).expect("(q^2;q^2)_n is nonzero")
}

/// The signed monomial `coeff * q^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub exp: i64,
}

impl Monomial {
    pub fn q_power(exp: i64) -> Self {
        Monomial { coeff: 1, exp }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(self.coeff, self.exp)
    }
}

/// Parameters of a terminating `2phi1(a, b; c; q^base; z)`.
///
/// `termination` must be the `N` with `a` or `b` equal to `q^(-N base)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Phi21Params {
    pub a: PochSpec,
    pub b: PochSpec,
    pub c: PochSpec,
    pub z: Monomial,
    pub termination: u32,
}

impl Phi21Params {
    fn validate(&self) -> Result<u32> {
        let base = self.a.base;
        if self.b.base != base || self.c.base != base {
            return Err(Error::ParameterOutOfRange(
                "2phi1 parameters must share one base".into(),
            ));
        }
        let stop = -(self.termination as i64) * base as i64;
        let terminates = |p: &PochSpec| p.sign == Sign::Plus && p.shift == stop;
        if !terminates(&self.a) && !terminates(&self.b) {
            return Err(Error::NonTerminating(format!(
                "neither a={} nor b={} equals q^{}",
                self.a, self.b, stop
            )));
        }
        Ok(base)
    }
}

pub(crate) fn phi21_fraction(p: &Phi21Params) -> Result<Fraction> {
    let base = p.validate()?;
    let qq = PochSpec::q(base as i64).base(base);
    let z = p.z.to_poly();
    let mut terms = Vec::with_capacity(p.termination as usize + 1);
    let mut num = LaurentPoly::one();
    let mut dens: Vec<LaurentPoly> = Vec::new();
    for k in 0..=p.termination {
        if k > 0 {
            let j = k - 1;
            num = num * p.a.factor(j) * p.b.factor(j) * &z;
            dens.push(qq.factor(j));
            dens.push(p.c.factor(j));
        }
        let what = format!("(c;q)_{k} with c = {}", p.c);
        terms.push(Fraction::from_poly(num.clone()).div_all(&dens, &what)?);
    }
    Ok(Fraction::sum_all(terms))
}

/// Exact value of a terminating `2phi1` as a sum of `N + 1` terms.
pub fn phi21_terminating(p: &Phi21Params) -> Result<RationalForm> {
    phi21_fraction(p).map(|f| f.to_rational())
}

/// `sum_k N^(m)_{n,k} t^k` with integer coefficients, as a polynomial in `t`.
pub fn narayana_poly_t(m: u32, n: u32) -> Result<LaurentPoly> {
    if m > n {
        return Err(Error::ParameterOutOfRange(format!(
            "m-Narayana polynomial needs m <= n (m={m}, n={n})"
        )));
    }
    Ok(LaurentPoly::new(
        0,
        (0..=(n - m) as i64)
            .map(|k| classical::m_narayana(m, n, k))
            .collect(),
    ))
}
