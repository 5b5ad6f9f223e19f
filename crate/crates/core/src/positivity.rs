//! Gamma vectors and the positivity, unimodality, log-concavity and
//! log-convexity checks.
//!
//! Theorem checks return booleans; conjecture checks return a
//! [`ConjectureReport`] carrying the first counterexample found, if any.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::classical;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::qkernel::{narayana_poly_t, q_narayana, super_catalan};

/// `gammas[k]` multiplies `t^k (1+t)^(degree-2k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaVector {
    pub degree: usize,
    pub gammas: Vec<BigInt>,
}

impl GammaVector {
    pub fn reconstruct(&self) -> LaurentPoly {
        let one_plus_t = LaurentPoly::from_i64s(0, &[1, 1]);
        self.gammas
            .iter()
            .enumerate()
            .map(|(k, g)| {
                LaurentPoly::monomial(g.clone(), k as i64)
                    * one_plus_t.pow((self.degree - 2 * k) as u32)
            })
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }
}

/// Gamma vector of `p` (a polynomial in `t`) about the center `d/2`.
///
/// Peels off `gamma_k t^k (1+t)^(d-2k)` from the outermost coefficient
/// inwards.
pub fn gamma_vector(p: &LaurentPoly, d: usize) -> Result<GammaVector> {
    let d_i = d as i64;
    let in_range = p.is_zero() || (p.min_exp() >= Some(0) && p.max_exp() <= Some(d_i));
    if !in_range || (0..=d_i).any(|i| p.coeff(i) != p.coeff(d_i - i)) {
        return Err(Error::NotPalindromic(d));
    }
    let one_plus_t = LaurentPoly::from_i64s(0, &[1, 1]);
    let mut rest = p.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let g = rest.coeff(k as i64);
        rest =
            rest - LaurentPoly::monomial(g.clone(), k as i64) * one_plus_t.pow((d - 2 * k) as u32);
        gammas.push(g);
    }
    debug_assert!(rest.is_zero());
    Ok(GammaVector { degree: d, gammas })
}

/// Gamma vector of a Laurent polynomial about its own palindromic center.
pub fn gamma_vector_centered(p: &LaurentPoly) -> Result<GammaVector> {
    let lo = p.min_exp().ok_or(Error::ZeroPolynomial)?;
    let hi = p.max_exp().expect("nonzero");
    gamma_vector(&p.shift(-lo), (hi - lo) as usize)
}

fn need_m_le_n(m: u32, n: u32) -> Result<()> {
    if m > n {
        return Err(Error::ParameterOutOfRange(format!(
            "need m <= n (m={m}, n={n})"
        )));
    }
    Ok(())
}

/// `binom(n-m, 2k) T_{k,m}` for `k = 0..floor((n-m)/2)`.
pub fn msu_gamma_expected(m: u32, n: u32) -> Result<Vec<BigInt>> {
    need_m_le_n(m, n)?;
    let d = (n - m) as i64;
    Ok((0..=d / 2)
        .map(|k| classical::binomial(d, 2 * k) * classical::super_catalan(k as u32, m))
        .collect())
}

/// The m-Narayana polynomial in `t` has gamma vector
/// `binom(n-m,2k) T_{k,m}`, all nonnegative.
pub fn check_msu_gamma_positive(m: u32, n: u32) -> Result<bool> {
    let g = gamma_vector(&narayana_poly_t(m, n)?, (n - m) as usize)?;
    Ok(g.gammas == msu_gamma_expected(m, n)? && g.is_nonnegative())
}

/// Weakly rising then weakly falling.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

/// Unimodality of the dense coefficient list, internal zeros included.
pub fn check_unimodal(p: &LaurentPoly) -> bool {
    is_unimodal(p.coeffs())
}

pub fn check_tnm_coefficient_positivity(n: u32, m: u32) -> bool {
    let t = super_catalan(n, m);
    t.has_nonnegative_coeffs() && t.eval_at_one().is_positive()
}

/// Leading coefficient 1, palindromic, nonnegative integer coefficients.
pub fn check_narayana_monic_palindromic(m: u32, n: u32, k: u32) -> Result<bool> {
    let p = q_narayana(m, n, k)?;
    Ok(p.leading_coeff().is_some_and(One::is_one)
        && p.is_palindromic()
        && p.has_nonnegative_coeffs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjectureName {
    UnimodalQNarayana,
    QLogConcave,
    TLogConvex,
}

impl ConjectureName {
    pub const ALL: [ConjectureName; 3] = [
        ConjectureName::UnimodalQNarayana,
        ConjectureName::QLogConcave,
        ConjectureName::TLogConvex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureName::UnimodalQNarayana => "UNIMODAL_Q_NARAYANA",
            ConjectureName::QLogConcave => "Q_LOG_CONCAVE",
            ConjectureName::TLogConvex => "T_LOG_CONVEX",
        }
    }
}

impl fmt::Display for ConjectureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ConjectureName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for ConjectureName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        ConjectureName::ALL
            .into_iter()
            .find(|c| c.name() == norm || c.name().replace("_Q_NARAYANA", "") == norm)
            .ok_or_else(|| Error::Parse(format!("unknown conjecture `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub name: ConjectureName,
    /// Inclusive bounds of each scanned parameter.
    pub range: BTreeMap<String, (i64, i64)>,
    pub holds: bool,
    /// Parameters of the first violation, in `range` key order of the scan
    /// (`m, n, k` or `m, n`).
    pub counterexample: Option<Vec<i64>>,
}

impl ConjectureReport {
    fn new(
        name: ConjectureName,
        range: &[(&str, i64, i64)],
        counterexample: Option<Vec<i64>>,
    ) -> Self {
        ConjectureReport {
            name,
            range: range
                .iter()
                .map(|&(k, lo, hi)| (k.to_string(), (lo, hi)))
                .collect(),
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

/// First interior `k` with `a_k^2 - a_(k-1) a_(k+1)` having a negative
/// coefficient.
pub fn first_log_concavity_failure(seq: &[LaurentPoly]) -> Option<usize> {
    (1..seq.len().saturating_sub(1))
        .find(|&k| !(&seq[k] * &seq[k] - &seq[k - 1] * &seq[k + 1]).has_nonnegative_coeffs())
}

/// First interior `k` with `p_(k+1) p_(k-1) - p_k^2` having a negative
/// coefficient.
pub fn first_log_convexity_failure(seq: &[LaurentPoly]) -> Option<usize> {
    (1..seq.len().saturating_sub(1))
        .find(|&k| !(&seq[k + 1] * &seq[k - 1] - &seq[k] * &seq[k]).has_nonnegative_coeffs())
}

/// First index whose polynomial has a non-unimodal coefficient list.
pub fn first_unimodality_failure(seq: &[LaurentPoly]) -> Option<usize> {
    seq.iter().position(|p| !check_unimodal(p))
}

fn narayana_row(m: u32, n: u32) -> Result<Vec<LaurentPoly>> {
    need_m_le_n(m, n)?;
    (0..=n - m).map(|k| q_narayana(m, n, k)).collect()
}

/// Unimodality in `q` of `N^(m)_{n,k}(q)` for every `k`.
pub fn check_unimodal_q_narayana(m: u32, n: u32) -> Result<ConjectureReport> {
    let row = narayana_row(m, n)?;
    let bad = first_unimodality_failure(&row).map(|k| vec![m as i64, n as i64, k as i64]);
    Ok(ConjectureReport::new(
        ConjectureName::UnimodalQNarayana,
        &[("m", m as i64, m as i64), ("n", n as i64, n as i64)],
        bad,
    ))
}

/// q-log-concavity in `k` of `N^(m)_{n,k}(q)` for fixed `m, n`.
pub fn check_q_log_concave(m: u32, n: u32) -> Result<ConjectureReport> {
    let row = narayana_row(m, n)?;
    let bad = first_log_concavity_failure(&row).map(|k| vec![m as i64, n as i64, k as i64]);
    Ok(ConjectureReport::new(
        ConjectureName::QLogConcave,
        &[("m", m as i64, m as i64), ("n", n as i64, n as i64)],
        bad,
    ))
}

/// t-log-convexity of `p_n = N^(m)_n(1, t)` for `n = m .. n_max`.
pub fn check_t_log_convex(m: u32, n_max: u32) -> Result<ConjectureReport> {
    if n_max < m + 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "need n_max >= m + 2 (m={m}, n_max={n_max})"
        )));
    }
    let seq = (m..=n_max)
        .map(|n| narayana_poly_t(m, n))
        .collect::<Result<Vec<_>>>()?;
    let bad = first_log_convexity_failure(&seq).map(|i| vec![m as i64, (m as usize + i) as i64]);
    Ok(ConjectureReport::new(
        ConjectureName::TLogConvex,
        &[("m", m as i64, m as i64), ("n", m as i64, n_max as i64)],
        bad,
    ))
}

/// Runs `name` for every `m <= m_max`, `m <= n <= n_max`, and merges the
/// results in parameter order.
pub fn scan(name: ConjectureName, m_max: u32, n_max: u32) -> Result<ConjectureReport> {
    let cells: Vec<(u32, u32)> = match name {
        ConjectureName::TLogConvex => (0..=m_max)
            .filter(|&m| m + 2 <= n_max)
            .map(|m| (m, n_max))
            .collect(),
        _ => (0..=m_max)
            .flat_map(|m| (m..=n_max).map(move |n| (m, n)))
            .collect(),
    };
    let reports = cells
        .par_iter()
        .map(|&(m, n)| match name {
            ConjectureName::UnimodalQNarayana => check_unimodal_q_narayana(m, n),
            ConjectureName::QLogConcave => check_q_log_concave(m, n),
            ConjectureName::TLogConvex => check_t_log_convex(m, n),
        })
        .collect::<Result<Vec<_>>>()?;
    let bad = reports.into_iter().find_map(|r| r.counterexample);
    Ok(ConjectureReport::new(
        name,
        &[("m", 0, m_max as i64), ("n", 0, n_max as i64)],
        bad,
    ))
}

/// Whether a gamma vector alternates in sign (zeros ignored).
pub fn alternates_in_sign(g: &GammaVector) -> bool {
    let signs: Vec<bool> = g
        .gammas
        .iter()
        .filter(|x| !x.is_zero())
        .map(Signed::is_positive)
        .collect();
    signs.windows(2).all(|w| w[0] != w[1])
}
