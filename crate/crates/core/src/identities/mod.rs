//! Registry of identities, each checkable for concrete integer parameters by
//! exact equality, plus sweep drivers over parameter boxes.

mod sides;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::RationalForm;

macro_rules! registry {
    ($($variant:ident => $name:literal, [$($param:literal),*], $about:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// Parameter names, in the order `verify` expects them.
            pub fn params(self) -> &'static [&'static str] {
                match self {
                    $(IdentityId::$variant => &[$($param),*],)*
                }
            }

            pub fn about(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $about,)*
                }
            }
        }
    };
}

registry! {
    QTouchard => "Q_TOUCHARD", ["n", "m"], "q-Touchard expansion of T_{n+m,m}(q)";
    WarnaarTouchard => "WARNAAR_TOUCHARD", ["n", "m"], "double-sum expansion of T_{m,m+n}(q)";
    ClassicalTouchard => "CLASSICAL_TOUCHARD", ["n", "m"], "Touchard expansion of T_{n+m,m} at q = 1";
    QKoshy => "Q_KOSHY", ["n", "m"], "alternating recurrence for T_{n,m}(q), 1 <= m <= n";
    QKoshyM0 => "Q_KOSHY_M0", ["n"], "alternating recurrence for the central q-binomial";
    QReedDawson => "Q_REED_DAWSON", ["n", "m"], "alternating sum of T_{n-k,m}(q); zero when n - m is odd";
    HalfTrick => "HALF_TRICK", ["m", "k"], "half-index binomial as a signed T_{k,m}(q) quotient";
    QSved => "Q_SVED", ["n"], "weighted convolution of central q-binomials summing to 1";
    QSegner => "Q_SEGNER", ["n"], "q-Segner convolution of T_{k,1}(q)";
    QMixedConv => "Q_MIXED_CONV", ["n"], "convolution of T_{k,0}(q) with T_{n-k,1}(q)";
    QVandermonde => "Q_VANDERMONDE", ["a", "b", "k"], "q-Vandermonde convolution";
    GaussII7 => "GAUSS_II7", ["N", "a", "c"], "terminating q-Gauss sum at z = c q^N / a";
    GaussII6 => "GAUSS_II6", ["N", "a", "c"], "terminating q-Gauss sum at z = q";
    PfaffSaalschutz => "PFAFF_SAALSCHUTZ", ["N", "a", "b", "c"], "terminating balanced 3phi2 sum";
    SecondGaussTerm => "SECOND_GAUSS_TERM", ["N", "b"], "terminating second Gauss sum with a = q^-N, c = abq";
    NarayanaDecomp => "NARAYANA_DECOMP", ["n", "m"], "T_{n,m}(q) as a sum of q-m-Narayana numbers";
    QKreweras => "Q_KREWERAS", ["n", "m", "k"], "q-Kreweras recurrence for q-m-Narayana numbers, both forms";
    LeJenShooQ => "LE_JEN_SHOO_Q", ["n", "m", "k"], "Le Jen-Shoo type expansion of q-m-Narayana numbers, k >= m";
    LeJenShooClassical => "LE_JEN_SHOO_CLASSICAL", ["n", "k"], "Le Jen-Shoo identity for squared binomials";
    KrewerasClassicalCor => "KREWERAS_CLASSICAL_COR", ["n", "m", "k"], "Kreweras recurrence for m-Narayana numbers at q = 1";
    NarayanaClassicalCor => "NARAYANA_CLASSICAL_COR", ["n", "k"], "Le Jen-Shoo type expansion of classical Narayana numbers";
    GammaIdQ => "GAMMA_ID_Q", ["n", "m", "k"], "positive expansion of q-m-Narayana numbers, k <= floor((n-m)/2)";
    GammaIdClassical => "GAMMA_ID_CLASSICAL", ["n", "m", "k"], "positive expansion of m-Narayana numbers at q = 1";
    MsuGamma => "MSU_GAMMA", ["n", "m"], "gamma expansion of the m-Narayana polynomial in t";
    F0Functional => "F0_FUNCTIONAL", ["order"], "f_0(q,t) f_0(q,qt) = 1/(1-t) to the given order";
    F0ClosedForm => "F0_CLOSED_FORM", ["order"], "f_0 equals sum (q;q^2)_k/(q^2;q^2)_k t^k";
    F1Formula => "F1_FORMULA", ["order"], "t f_1(q,t) f_0(q,t/q) = q (f_0(q,t/q) - 1)";
    F0F1Convolution => "F0_F1_CONVOLUTION", ["order"], "t f_0(q,t) f_1(q,qt) = f_0(q,t) - 1";
    TypeDGamma => "TYPE_D_GAMMA", ["n"], "gamma expansion of the type D Narayana polynomial";
}

impl IdentityId {
    pub fn arity(self) -> usize {
        self.params().len()
    }

    /// `None` when `p` lies in the identity's domain, else the reason.
    pub fn domain_violation(self, p: &[i64]) -> Option<String> {
        use IdentityId::*;
        if p.len() != self.arity() {
            return Some(format!(
                "{} takes {} parameters ({}), got {}",
                self.name(),
                self.arity(),
                self.params().join(", "),
                p.len()
            ));
        }
        let ok = match self {
            QTouchard | WarnaarTouchard | ClassicalTouchard | HalfTrick | LeJenShooClassical => {
                p.iter().all(|&x| x >= 0)
            }
            QKoshy => 1 <= p[1] && p[1] <= p[0],
            QKoshyM0 | QSved | QSegner | QMixedConv | F0Functional | F0ClosedForm
            | F0F1Convolution => p[0] >= 0,
            F1Formula => p[0] >= 1,
            QReedDawson | NarayanaDecomp | MsuGamma => 0 <= p[1] && p[1] <= p[0],
            QVandermonde => p[0] >= 0 && p[1] >= 0 && 0 <= p[2] && p[2] <= p[0] + p[1],
            GaussII7 | GaussII6 | PfaffSaalschutz | SecondGaussTerm => p[0] >= 0,
            QKreweras | KrewerasClassicalCor | GammaIdClassical => {
                0 <= p[1] && p[1] <= p[0] && 0 <= p[2] && p[2] <= p[0] - p[1]
            }
            LeJenShooQ => 0 <= p[1] && p[1] <= p[0] && p[1] <= p[2] && p[2] <= p[0] - p[1],
            NarayanaClassicalCor => p[1] >= 1 && p[0] > p[1],
            GammaIdQ => 0 <= p[1] && p[1] <= p[0] && 0 <= p[2] && p[2] <= (p[0] - p[1]) / 2,
            TypeDGamma => (2..=crate::noncrossing::DEFAULT_CAP as i64).contains(&p[0]),
        };
        (!ok).then(|| {
            let shown: Vec<String> = self
                .params()
                .iter()
                .zip(p)
                .map(|(name, v)| format!("{name}={v}"))
                .collect();
            format!(
                "{} is outside the domain of {}",
                shown.join(", "),
                self.name()
            )
        })
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts registry names case-insensitively, with `-` for `_`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == norm)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One side of an identity: a single value, or a truncated series in `t`.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Side {
    Scalar(RationalForm),
    Series {
        order: usize,
        coeffs: Vec<RationalForm>,
    },
}

impl Side {
    pub fn equals(&self, other: &Side) -> bool {
        match (self, other) {
            (Side::Scalar(a), Side::Scalar(b)) => a.rat_equal(b),
            (
                Side::Series {
                    order: na,
                    coeffs: a,
                },
                Side::Series {
                    order: nb,
                    coeffs: b,
                },
            ) => na == nb && a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.rat_equal(y)),
            _ => false,
        }
    }

    pub fn as_scalar(&self) -> Option<&RationalForm> {
        match self {
            Side::Scalar(r) => Some(r),
            Side::Series { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Verified,
    Refuted,
    ParameterInvalid,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "Verified",
            Status::Refuted => "Refuted",
            Status::ParameterInvalid => "ParameterInvalid",
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub params: Vec<i64>,
    pub status: Status,
    pub lhs: Option<Side>,
    pub rhs: Option<Side>,
    /// Why the parameters were rejected, or which form failed.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// JSON object; `elapsedMs` is left out when `timing` is false so the
    /// output is reproducible.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "id": self.id.name(),
            "params": self.params,
            "status": self.status.to_string(),
        });
        let obj = v.as_object_mut().expect("object literal");
        if timing {
            obj.insert(
                "elapsedMs".into(),
                json!((self.elapsed.as_secs_f64() * 1e3 * 1e3).round() / 1e3),
            );
        }
        obj.insert(
            "lhs".into(),
            serde_json::to_value(&self.lhs).expect("serializable"),
        );
        obj.insert(
            "rhs".into(),
            serde_json::to_value(&self.rhs).expect("serializable"),
        );
        if let Some(d) = &self.detail {
            obj.insert("detail".into(), json!(d));
        }
        v
    }

    pub fn csv_header(id: IdentityId, timing: bool) -> String {
        let mut cols = vec!["id"];
        cols.extend(id.params());
        cols.push("status");
        if timing {
            cols.push("elapsedMs");
        }
        cols.join(",")
    }

    pub fn to_csv_row(&self, timing: bool) -> String {
        let mut cols = vec![self.id.name().to_string()];
        cols.extend(self.params.iter().map(i64::to_string));
        cols.push(self.status.to_string());
        if timing {
            cols.push(format!("{:.3}", self.elapsed.as_secs_f64() * 1e3));
        }
        cols.join(",")
    }
}

/// Builds both sides for `params` and compares them exactly.
///
/// Out-of-domain parameters and vanishing denominators give
/// [`Status::ParameterInvalid`]; nothing is skipped silently.
pub fn verify(id: IdentityId, params: &[i64]) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        id,
        params: params.to_vec(),
        status: Status::ParameterInvalid,
        lhs: None,
        rhs: None,
        detail: None,
        elapsed: Duration::ZERO,
    };
    if let Some(reason) = id.domain_violation(params) {
        report.detail = Some(reason);
    } else {
        match sides::build(id, params) {
            Ok(built) => {
                report.status = if built.lhs.equals(&built.rhs) {
                    Status::Verified
                } else {
                    Status::Refuted
                };
                report.detail = built.note;
                report.lhs = Some(built.lhs);
                report.rhs = Some(built.rhs);
            }
            Err(e) => report.detail = Some(e.to_string()),
        }
    }
    report.elapsed = start.elapsed();
    report
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub reports: Vec<VerificationReport>,
    /// Tuples in the box that fell outside the identity's domain.
    pub skipped: usize,
}

/// Verifies every in-domain tuple of the Cartesian product of `ranges`.
///
/// Tuples are ordered with the first parameter varying slowest; reports are
/// evaluated in parallel but returned in that order.
pub fn sweep(id: IdentityId, ranges: &[RangeInclusive<i64>]) -> Result<SweepResult> {
    if ranges.len() != id.arity() {
        return Err(Error::ParameterOutOfRange(format!(
            "{} takes ranges for {}",
            id.name(),
            id.params().join(", ")
        )));
    }
    let mut tuples: Vec<Vec<i64>> = vec![Vec::new()];
    for r in ranges {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                r.clone().map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let total = tuples.len();
    tuples.retain(|t| id.domain_violation(t).is_none());
    let skipped = total - tuples.len();
    let reports = tuples.par_iter().map(|t| verify(id, t)).collect();
    Ok(SweepResult { reports, skipped })
}

/// Parses `a..b` (inclusive) or a single integer `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::Parse(format!("`{s}` is not a range `a..b` or an integer"));
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok(int(a)?..=int(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = int(s)?;
            Ok(a..=a)
        }
    }
}
