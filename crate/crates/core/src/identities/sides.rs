//! Left and right sides of each registry identity, written term by term.

use num_bigint::BigInt;
use num_traits::One;

use super::{IdentityId, Side};
use crate::classical;
use crate::error::Result;
use crate::noncrossing;
use crate::poly::LaurentPoly;
use crate::qkernel::{
    half_binomial, phi21_fraction, pochhammer, q_binomial, q_narayana, super_catalan, Monomial,
    Phi21Params, PochSpec,
};
use crate::rational::{Fraction, RationalForm};
use crate::series;

pub(super) struct Built {
    pub lhs: Side,
    pub rhs: Side,
    pub note: Option<String>,
}

fn built(lhs: Side, rhs: Side) -> Built {
    Built {
        lhs,
        rhs,
        note: None,
    }
}

fn u(x: i64) -> u32 {
    u32::try_from(x).expect("nonnegative index checked by the domain")
}

fn qb(n: i64, k: i64) -> LaurentPoly {
    q_binomial(n, k)
}

fn tt(n: i64, m: i64) -> LaurentPoly {
    super_catalan(u(n), u(m))
}

fn nar(m: i64, n: i64, k: i64) -> Result<LaurentPoly> {
    q_narayana(u(m), u(n), u(k))
}

fn qp(e: i64) -> LaurentPoly {
    LaurentPoly::q_power(e)
}

fn sign(k: i64) -> LaurentPoly {
    LaurentPoly::constant(if k % 2 == 0 { 1 } else { -1 })
}

/// `(-q^shift; q)_n`.
fn neg_poch(shift: i64, n: i64) -> LaurentPoly {
    pochhammer(PochSpec::neg_q(shift), u(n))
}

/// `(q^shift; q^base)_n`.
fn poch(shift: i64, base: u32, n: i64) -> LaurentPoly {
    pochhammer(PochSpec::q(shift).base(base), u(n))
}

/// Divides by `(spec)_n` one factor at a time.
fn over(f: Fraction, spec: PochSpec, n: i64) -> Result<Fraction> {
    f.div_all(&spec.factors(u(n)), &format!("{spec}_{n}"))
}

fn over_neg_q(f: Fraction, n: i64) -> Result<Fraction> {
    over(f, PochSpec::neg_q(1), n)
}

fn frac(p: LaurentPoly) -> Fraction {
    Fraction::from_poly(p)
}

fn sum(terms: Result<Vec<Fraction>>) -> Result<Side> {
    Ok(scalar(Fraction::sum_all(terms?)))
}

fn scalar(f: Fraction) -> Side {
    Side::Scalar(f.to_rational())
}

fn poly(p: LaurentPoly) -> Side {
    Side::Scalar(RationalForm::from_poly(p))
}

fn int(c: BigInt) -> Side {
    poly(LaurentPoly::constant(c))
}

fn binom(n: i64, k: i64) -> BigInt {
    classical::binomial(n, k)
}

fn sc(n: i64, m: i64) -> BigInt {
    classical::super_catalan(u(n), u(m))
}

fn m_nar(m: i64, n: i64, k: i64) -> BigInt {
    classical::m_narayana(u(m), u(n), k)
}

/// Checks `lhs` against two right-hand forms; the reported right side is the
/// first form that disagrees, or the second when both agree.
fn two_forms(lhs: Side, first: Side, second: Side) -> Built {
    if !lhs.equals(&first) {
        return Built {
            lhs,
            rhs: first,
            note: Some("first form differs".into()),
        };
    }
    let note = (!lhs.equals(&second)).then(|| "second form differs".to_string());
    Built {
        lhs,
        rhs: second,
        note,
    }
}

pub(super) fn build(id: IdentityId, p: &[i64]) -> Result<Built> {
    use IdentityId::*;
    match id {
        QTouchard => q_touchard(p[0], p[1]),
        WarnaarTouchard => Ok(warnaar_touchard(p[0], p[1])),
        ClassicalTouchard => Ok(classical_touchard(p[0], p[1])),
        QKoshy => q_koshy(p[0], p[1]),
        QKoshyM0 => q_koshy_m0(p[0]),
        QReedDawson => q_reed_dawson(p[0], p[1]),
        HalfTrick => half_trick(p[0], p[1]),
        QSved => q_sved(p[0]),
        QSegner => q_segner(p[0]),
        QMixedConv => q_mixed_conv(p[0]),
        QVandermonde => Ok(q_vandermonde(p[0], p[1], p[2])),
        GaussII7 => gauss(p[0], p[1], p[2], false),
        GaussII6 => gauss(p[0], p[1], p[2], true),
        PfaffSaalschutz => pfaff_saalschutz(p[0], p[1], p[2], p[3]),
        SecondGaussTerm => second_gauss(p[0], p[1]),
        NarayanaDecomp => narayana_decomp(p[0], p[1]),
        QKreweras => q_kreweras(p[0], p[1], p[2]),
        LeJenShooQ => le_jen_shoo_q(p[0], p[1], p[2]),
        LeJenShooClassical => Ok(le_jen_shoo_classical(p[0], p[1])),
        KrewerasClassicalCor => Ok(kreweras_classical(p[0], p[1], p[2])),
        NarayanaClassicalCor => Ok(narayana_classical(p[0], p[1])),
        GammaIdQ => gamma_id_q(p[0], p[1], p[2]),
        GammaIdClassical => Ok(gamma_id_classical(p[0], p[1], p[2])),
        MsuGamma => msu_gamma(p[0], p[1]),
        F0Functional => Ok(pair(series::f0_functional_sides(u(p[0]) as usize))),
        F0ClosedForm => Ok(pair(series::f0_closed_form_sides(u(p[0]) as usize))),
        F1Formula => Ok(pair(series::f1_formula_sides(u(p[0]) as usize))),
        F0F1Convolution => Ok(pair(series::f0_f1_convolution_sides(u(p[0]) as usize))),
        TypeDGamma => {
            let (lhs, rhs) = noncrossing::type_d_gamma_sides(u(p[0]))?;
            Ok(built(poly(lhs), poly(rhs)))
        }
    }
}

fn pair((lhs, rhs): (Side, Side)) -> Built {
    built(lhs, rhs)
}

fn q_touchard(n: i64, m: i64) -> Result<Built> {
    let terms = (0..=n / 2)
        .map(|k| {
            let num = qp(2 * k * (k + m)) * qb(n, 2 * k) * neg_poch(k + m + 1, n - k) * tt(k, m);
            over_neg_q(frac(num), k)
        })
        .collect();
    Ok(built(poly(tt(n + m, m)), sum(terms)?))
}

fn warnaar_touchard(n: i64, m: i64) -> Built {
    let rhs: LaurentPoly = (0..=n / 2)
        .map(|k| {
            let inner: LaurentPoly = (k..=n - k)
                .map(|j| qp(k * (m + k) + j * (m + j)) * qb(n, 2 * k) * qb(n - 2 * k, j - k))
                .sum();
            tt(m, k) * inner
        })
        .sum();
    built(poly(tt(m, m + n)), poly(rhs))
}

fn classical_touchard(n: i64, m: i64) -> Built {
    let rhs: BigInt = (0..=n / 2)
        .map(|k| (BigInt::one() << (n - 2 * k)) * binom(n, 2 * k) * sc(k, m))
        .sum();
    built(int(sc(n + m, m)), int(rhs))
}

fn q_koshy(n: i64, m: i64) -> Result<Built> {
    let terms = (1..=(n + m) / 2)
        .map(|r| {
            let num = sign(r - 1)
                * qp(r * (r - 2 * m + 1))
                * qb(n - r + m, r)
                * tt(n - r, m)
                * neg_poch(n - r + 1, r);
            over_neg_q(frac(num), r)
        })
        .collect();
    Ok(built(poly(tt(n, m)), sum(terms)?))
}

fn q_koshy_m0(n: i64) -> Result<Built> {
    let mut terms = (1..=n / 2)
        .map(|r| {
            let num = sign(r - 1)
                * qp(r * (r + 1))
                * qb(n - r, r)
                * qb(2 * n - 2 * r, n - r)
                * neg_poch(n - r + 1, r);
            over_neg_q(frac(num), r)
        })
        .collect::<Result<Vec<_>>>()?;
    terms.push(frac(neg_poch(1, n)));
    Ok(built(poly(qb(2 * n, n)), sum(Ok(terms))?))
}

fn q_reed_dawson(n: i64, m: i64) -> Result<Built> {
    let terms = (0..=n - m)
        .map(|k| {
            let num = sign(k) * qp(k * (k - 1) / 2) * qb(n - m, k) * tt(n - k, m);
            over_neg_q(frac(num), n - k)
        })
        .collect();
    let lhs = sum(terms)?;
    let rhs = if (n - m) % 2 == 0 {
        let (h, s) = ((n - m) / 2, (n + m) / 2);
        let num = qp((n * n - m * m) / 2) * qb(2 * m, m) * qb(n, h);
        let f = over_neg_q(over_neg_q(frac(num), h)?, s)?;
        scalar(f.div_poly(&qb(n, m), "[n choose m]")?)
    } else {
        Side::Scalar(RationalForm::zero())
    };
    Ok(built(lhs, rhs))
}

fn half_trick(m: i64, k: i64) -> Result<Built> {
    let num = sign(k) * qp(-k * k) * tt(k, m);
    let rhs = over_neg_q(over_neg_q(over_neg_q(frac(num), m)?, k)?, k + m)?;
    Ok(built(Side::Scalar(half_binomial(u(m), u(k))), scalar(rhs)))
}

fn q_sved(n: i64) -> Result<Built> {
    let terms = (0..=n)
        .map(|k| {
            let num = qp(n - k) * qb(2 * k, k) * qb(2 * n - 2 * k, n - k);
            let f = over_neg_q(over_neg_q(frac(num), k)?, k)?;
            over_neg_q(over_neg_q(f, n - k)?, n - k)
        })
        .collect();
    Ok(built(sum(terms)?, poly(LaurentPoly::one())))
}

fn q_segner(n: i64) -> Result<Built> {
    let terms = (0..=n)
        .map(|k| {
            let num = qp(k)
                * neg_poch(k + 1, n - k + 1)
                * neg_poch(k + 2, n - k)
                * tt(k, 1)
                * tt(n - k, 1);
            over_neg_q(over_neg_q(frac(num), n - k + 1)?, n - k)
        })
        .collect();
    let rhs = LaurentPoly::from_i64s(0, &[1, 1]) * tt(n + 1, 1);
    Ok(built(sum(terms)?, poly(rhs)))
}

fn q_mixed_conv(n: i64) -> Result<Built> {
    let top = neg_poch(1, n + 1);
    let one_plus_q = LaurentPoly::from_i64s(0, &[1, 1]);
    let terms = (0..=n)
        .map(|k| {
            let num = qp(n - k) * &top * &top * tt(k, 0) * tt(n - k, 1);
            let f = frac(num).div_poly(&one_plus_q, "1 + q")?;
            let f = over_neg_q(over_neg_q(f, k)?, k)?;
            over_neg_q(over_neg_q(f, n - k)?, n - k + 1)
        })
        .collect();
    Ok(built(sum(terms)?, poly(tt(n + 1, 0))))
}

fn q_vandermonde(a: i64, b: i64, k: i64) -> Built {
    let rhs: LaurentPoly = (0..=k)
        .map(|j| qp(j * (b - k + j)) * qb(a, j) * qb(b, k - j))
        .sum();
    built(poly(qb(a + b, k)), poly(rhs))
}

/// `2phi1(q^a, q^-N; q^c; q; z)` with `z = q^(c+N-a)`, or `z = q` and an extra
/// `a^N` on the right when `at_q` is set.
fn gauss(n: i64, a: i64, c: i64, at_q: bool) -> Result<Built> {
    let z = if at_q { 1 } else { c + n - a };
    let params = Phi21Params {
        a: PochSpec::q(a),
        b: PochSpec::q(-n),
        c: PochSpec::q(c),
        z: Monomial::q_power(z),
        termination: u(n),
    };
    let lhs = phi21_fraction(&params)?;
    let scale = if at_q { qp(a * n) } else { LaurentPoly::one() };
    let rhs = over(frac(poch(c - a, 1, n) * scale), PochSpec::q(c), n)?;
    Ok(built(scalar(lhs), scalar(rhs)))
}

fn pfaff_saalschutz(n: i64, a: i64, b: i64, c: i64) -> Result<Built> {
    let d = a + b + 1 - n - c;
    let (qa, qbb, qn) = (PochSpec::q(a), PochSpec::q(b), PochSpec::q(-n));
    let (qc, qd, qq) = (PochSpec::q(c), PochSpec::q(d), PochSpec::q(1));
    let terms = (0..=n)
        .map(|k| {
            let num = qp(k) * pochhammer(qa, u(k)) * pochhammer(qbb, u(k)) * pochhammer(qn, u(k));
            let f = over(over(frac(num), qq, k)?, qc, k)?;
            over(f, qd, k)
        })
        .collect();
    let num = poch(c - a, 1, n) * poch(c - b, 1, n);
    let rhs = over(over(frac(num), qc, n)?, PochSpec::q(c - a - b), n)?;
    Ok(built(sum(terms)?, scalar(rhs)))
}

/// Second Gauss sum with `a = q^-N`, `b = q^b`, `c = abq`, which terminates.
fn second_gauss(n: i64, b: i64) -> Result<Built> {
    let cs = b - n + 1;
    let terms = (0..=n)
        .map(|k| {
            let num = qp(k * (k + 1) / 2) * poch(-n, 1, k) * poch(b, 1, k);
            over(
                over(frac(num), PochSpec::q(1), k)?,
                PochSpec::q(cs).base(2),
                k,
            )
        })
        .collect();
    let lhs = sum(terms)?;
    let rhs = if n % 2 == 0 {
        scalar(over(
            frac(poch(1 - n, 2, n / 2)),
            PochSpec::q(b + 1 - n).base(2),
            n / 2,
        )?)
    } else {
        Side::Scalar(RationalForm::zero())
    };
    Ok(built(lhs, rhs))
}

fn narayana_decomp(n: i64, m: i64) -> Result<Built> {
    let inner: LaurentPoly = (0..=n - m)
        .map(|k| qp(k * (k + m)) * qb(n, k) * qb(n, k + m))
        .sum();
    let rhs = frac(qb(2 * m, m) * inner).div_poly(&qb(n, m), "[n choose m]")?;
    Ok(built(poly(tt(n, m)), scalar(rhs)))
}

fn q_kreweras(n: i64, m: i64, k: i64) -> Result<Built> {
    let lhs = nar(m, n + k + m, k)?;
    let mut first = LaurentPoly::zero();
    let mut second = LaurentPoly::zero();
    for s in 0..=k {
        first += &(qp((k - s) * (k + m - s)) * nar(m, n, k - s)? * qb(2 * n + s, s));
        second += &(qp(s * (s + m)) * nar(m, n, s)? * qb(2 * n + k - s, 2 * n));
    }
    Ok(two_forms(poly(lhs), poly(first), poly(second)))
}

fn le_jen_shoo_q(n: i64, m: i64, k: i64) -> Result<Built> {
    let mut rhs = LaurentPoly::zero();
    for s in 0..=k - m {
        rhs += &(qp(s * (s + m)) * nar(m, k, s)? * qb(n + k - s - m, 2 * k));
    }
    Ok(built(poly(nar(m, n, k)?), poly(rhs)))
}

fn le_jen_shoo_classical(n: i64, k: i64) -> Built {
    let lhs = binom(n + k, k).pow(2);
    let rhs: BigInt = (0..=k)
        .map(|s| binom(k, s).pow(2) * binom(n + 2 * k - s, 2 * k))
        .sum();
    built(int(lhs), int(rhs))
}

fn kreweras_classical(n: i64, m: i64, k: i64) -> Built {
    let lhs = m_nar(m, n + k + m, k);
    let first: BigInt = (0..=k)
        .map(|s| m_nar(m, n, k - s) * binom(2 * n + s, s))
        .sum();
    let second: BigInt = (0..=k)
        .map(|s| m_nar(m, n, s) * binom(2 * n + k - s, 2 * n))
        .sum();
    two_forms(int(lhs), int(first), int(second))
}

fn narayana_classical(n: i64, k: i64) -> Built {
    let rhs: BigInt = (0..k)
        .map(|s| classical::narayana(u(k), s) * binom(n + k - s - 1, 2 * k))
        .sum();
    built(int(classical::narayana(u(n), k)), int(rhs))
}

fn gamma_id_q(n: i64, m: i64, k: i64) -> Result<Built> {
    let rhs: LaurentPoly = (0..=k)
        .map(|s| qp(s * (s + m)) * qb(n - m, 2 * s) * tt(m, s) * qb(n - 2 * s - m, k - s))
        .sum();
    Ok(built(poly(nar(m, n, k)?), poly(rhs)))
}

fn gamma_id_classical(n: i64, m: i64, k: i64) -> Built {
    let rhs: BigInt = (0..=k)
        .map(|s| binom(n - m, 2 * s) * sc(m, s) * binom(n - 2 * s - m, k - s))
        .sum();
    built(int(m_nar(m, n, k)), int(rhs))
}

/// Both sides are polynomials in `t`, stored in the `q` slot.
fn msu_gamma(n: i64, m: i64) -> Result<Built> {
    let lhs = crate::qkernel::narayana_poly_t(u(m), u(n))?;
    let one_plus_t = LaurentPoly::from_i64s(0, &[1, 1]);
    let d = n - m;
    let rhs: LaurentPoly = (0..=d / 2)
        .map(|k| {
            LaurentPoly::monomial(binom(d, 2 * k) * sc(k, m), k) * one_plus_t.pow(u(d - 2 * k))
        })
        .sum();
    Ok(built(poly(lhs), poly(rhs)))
}
