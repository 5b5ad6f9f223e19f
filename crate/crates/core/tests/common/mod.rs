//! Independent oracles shared by the integration tests and the acceptance
//! runner.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use supercat::identities::IdentityId;
use supercat::noncrossing::SignedBlockPartition;
use supercat::poly::LaurentPoly;
use supercat::qkernel::q_factorial;

/// `[n choose k]` as `[n]! / ([k]! [n-k]!)` by long division.
pub fn q_binomial_by_factorials(n: u32, k: u32) -> LaurentPoly {
    q_factorial(n)
        .exact_div(&(q_factorial(k) * q_factorial(n - k)))
        .expect("Gaussian binomial is a polynomial")
}

/// All type B partitions of `{±1..±n}` with no `a < b < c < d` (circular
/// positions) such that `a, c` share a block and `b, d` share another.
pub fn brute_force_ncb(n: usize) -> Vec<SignedBlockPartition> {
    let elems: Vec<i64> = (1..=n as i64).chain((1..=n as i64).map(|i| -i)).collect();
    let mut out = Vec::new();
    let mut labels = vec![0usize; elems.len()];
    set_partitions(&mut labels, 0, 0, &mut |labels| {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(elems[i]);
        }
        if let Ok(p) = SignedBlockPartition::new(n, blocks) {
            if !has_interleaving(labels) {
                out.push(p);
            }
        }
    });
    out.sort();
    out
}

/// Labels are indexed by circular position, since `elems` lists `1..n` then
/// `-1..-n`.
fn has_interleaving(labels: &[usize]) -> bool {
    let len = labels.len();
    for a in 0..len {
        for b in a + 1..len {
            for c in b + 1..len {
                if labels[c] != labels[a] || labels[b] == labels[a] {
                    continue;
                }
                for d in c + 1..len {
                    if labels[d] == labels[b] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn set_partitions(labels: &mut Vec<usize>, i: usize, used: usize, f: &mut impl FnMut(&[usize])) {
    if i == labels.len() {
        f(labels);
        return;
    }
    for l in 0..=used {
        labels[i] = l;
        set_partitions(labels, i + 1, used.max(l + 1), f);
    }
}

fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

/// Binomial by factorials, zero outside `0 <= k <= n`.
pub fn c(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    fact(n) / (fact(k) * fact(n - k))
}

pub fn t1(n: i64, m: i64) -> BigInt {
    fact(2 * m) * fact(2 * n) / (fact(m) * fact(n) * fact(m + n))
}

pub fn nar1(m: i64, n: i64, k: i64) -> BigRational {
    rat(c(2 * m, m) * c(n, k) * c(n, k + m)) / rat(c(n, m))
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn two_pow(k: i64) -> BigRational {
    rat(BigInt::one() << k)
}

fn sign(k: i64) -> BigRational {
    rat(BigInt::from(if k % 2 == 0 { 1 } else { -1 }))
}

/// Both sides of a q-identity specialized to `q = 1`, computed in plain
/// rational arithmetic: q-binomials become binomials, `(-q;q)_k` becomes
/// `2^k` and powers of `q` become 1.
pub fn sides_at_one(id: IdentityId, p: &[i64]) -> Option<(BigRational, BigRational)> {
    use IdentityId::*;
    let s = |v: Vec<BigRational>| v.into_iter().fold(BigRational::zero(), |a, b| a + b);
    Some(match id {
        QTouchard => {
            let (n, m) = (p[0], p[1]);
            let rhs = s((0..=n / 2)
                .map(|k| rat(c(n, 2 * k) * t1(k, m)) * two_pow(n - k) / two_pow(k))
                .collect());
            (rat(t1(n + m, m)), rhs)
        }
        WarnaarTouchard => {
            let (n, m) = (p[0], p[1]);
            let rhs = s((0..=n / 2)
                .flat_map(|k| {
                    (k..=n - k).map(move |j| rat(t1(m, k) * c(n, 2 * k) * c(n - 2 * k, j - k)))
                })
                .collect());
            (rat(t1(m, m + n)), rhs)
        }
        QKoshy => {
            let (n, m) = (p[0], p[1]);
            let rhs = s((1..=(n + m) / 2)
                .map(|r| sign(r - 1) * rat(c(n - r + m, r) * t1(n - r, m)))
                .collect());
            (rat(t1(n, m)), rhs)
        }
        QKoshyM0 => {
            let n = p[0];
            let rhs = s((1..=n / 2)
                .map(|r| sign(r - 1) * rat(c(n - r, r) * c(2 * n - 2 * r, n - r)))
                .collect())
                + two_pow(n);
            (rat(c(2 * n, n)), rhs)
        }
        QReedDawson => {
            let (n, m) = (p[0], p[1]);
            let lhs = s((0..=n - m)
                .map(|k| sign(k) * rat(c(n - m, k) * t1(n - k, m)) / two_pow(n - k))
                .collect());
            let rhs = if (n - m) % 2 == 0 {
                rat(c(2 * m, m) * c(n, (n - m) / 2)) / (rat(c(n, m)) * two_pow(n))
            } else {
                BigRational::zero()
            };
            (lhs, rhs)
        }
        QSved => {
            let n = p[0];
            let lhs = s((0..=n)
                .map(|k| rat(c(2 * k, k) * c(2 * n - 2 * k, n - k)) / two_pow(2 * n))
                .collect());
            (lhs, BigRational::one())
        }
        QSegner => {
            let n = p[0];
            let lhs = s((0..=n).map(|k| rat(t1(k, 1) * t1(n - k, 1))).collect());
            (lhs, rat(t1(n + 1, 1) * 2))
        }
        QMixedConv => {
            let n = p[0];
            let lhs = s((0..=n)
                .map(|k| {
                    rat(t1(k, 0) * t1(n - k, 1)) * two_pow(2 * (n + 1))
                        / (two_pow(1) * two_pow(2 * k) * two_pow(2 * (n - k) + 1))
                })
                .collect());
            (lhs, rat(t1(n + 1, 0)))
        }
        QVandermonde => {
            let (a, b, k) = (p[0], p[1], p[2]);
            (
                rat(c(a + b, k)),
                s((0..=k).map(|j| rat(c(a, j) * c(b, k - j))).collect()),
            )
        }
        NarayanaDecomp => {
            let (n, m) = (p[0], p[1]);
            let inner = s((0..=n - m).map(|k| rat(c(n, k) * c(n, k + m))).collect());
            (rat(t1(n, m)), rat(c(2 * m, m)) * inner / rat(c(n, m)))
        }
        QKreweras => {
            let (n, m, k) = (p[0], p[1], p[2]);
            let rhs = s((0..=k)
                .map(|x| nar1(m, n, k - x) * rat(c(2 * n + x, x)))
                .collect());
            (nar1(m, n + k + m, k), rhs)
        }
        LeJenShooQ => {
            let (n, m, k) = (p[0], p[1], p[2]);
            let rhs = s((0..=k - m)
                .map(|x| nar1(m, k, x) * rat(c(n + k - x - m, 2 * k)))
                .collect());
            (nar1(m, n, k), rhs)
        }
        GammaIdQ => {
            let (n, m, k) = (p[0], p[1], p[2]);
            let rhs = s((0..=k)
                .map(|x| rat(c(n - m, 2 * x) * t1(m, x) * c(n - 2 * x - m, k - x)))
                .collect());
            (nar1(m, n, k), rhs)
        }
        _ => return None,
    })
}

/// Twenty tuples spread over the q-identities whose sides stay finite at
/// `q = 1`.
pub const SAMPLED_AT_ONE: [(IdentityId, &[i64]); 20] = [
    (IdentityId::QTouchard, &[5, 2]),
    (IdentityId::QTouchard, &[8, 0]),
    (IdentityId::WarnaarTouchard, &[6, 3]),
    (IdentityId::QKoshy, &[7, 3]),
    (IdentityId::QKoshy, &[9, 9]),
    (IdentityId::QKoshyM0, &[10]),
    (IdentityId::QReedDawson, &[8, 2]),
    (IdentityId::QReedDawson, &[9, 4]),
    (IdentityId::QSved, &[7]),
    (IdentityId::QSegner, &[6]),
    (IdentityId::QMixedConv, &[5]),
    (IdentityId::QVandermonde, &[4, 6, 5]),
    (IdentityId::NarayanaDecomp, &[9, 3]),
    (IdentityId::NarayanaDecomp, &[4, 4]),
    (IdentityId::QKreweras, &[5, 2, 3]),
    (IdentityId::QKreweras, &[3, 0, 3]),
    (IdentityId::LeJenShooQ, &[10, 2, 5]),
    (IdentityId::LeJenShooQ, &[6, 0, 3]),
    (IdentityId::GammaIdQ, &[11, 1, 5]),
    (IdentityId::GammaIdQ, &[9, 3, 3]),
];
