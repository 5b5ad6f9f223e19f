//! Integer (q = 1) combinatorial numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `n choose k`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(2m)! (2n)! / (m! n! (m+n)!)`.
pub fn super_catalan(n: u32, m: u32) -> BigInt {
    let num = factorial(2 * m) * factorial(2 * n);
    let den = factorial(m) * factorial(n) * factorial(m + n);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// `binom(2m,m) binom(n,k) binom(n,k+m) / binom(n,m)`; zero outside
/// `0 <= k <= n - m`.
pub fn m_narayana(m: u32, n: u32, k: i64) -> BigInt {
    let (m, n) = (m as i64, n as i64);
    if m > n || k < 0 || k > n - m {
        return BigInt::zero();
    }
    let num = binomial(2 * m, m) * binomial(n, k) * binomial(n, k + m);
    let (q, r) = num.div_rem(&binomial(n, m));
    debug_assert!(r.is_zero());
    q
}

/// Type A Narayana number `binom(n,k) binom(n,k+1) / n` for `n >= 1`.
pub fn narayana(n: u32, k: i64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    binomial(n as i64, k) * binomial(n as i64, k + 1) / n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(super_catalan(2, 1), BigInt::from(4));
        assert_eq!(super_catalan(2, 2), BigInt::from(6));
        assert_eq!(catalan(4), BigInt::from(14));
        assert_eq!(m_narayana(1, 4, 1), BigInt::from(12));
        assert_eq!(narayana(3, 1), BigInt::from(3));
    }

    #[test]
    fn super_catalan_special_cases() {
        for n in 0..12u32 {
            assert_eq!(super_catalan(n, 0), binomial(2 * n as i64, n as i64));
            assert_eq!(super_catalan(n, 1), catalan(n) * 2);
        }
    }
}
