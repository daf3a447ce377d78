use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn pow_big(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    /// Unsigned Stirling numbers of the first kind, |s(n,k)|.
    FirstAbs,
    /// Stirling numbers of the second kind, S(n,k).
    Second,
}

pub fn stirling(kind: StirlingKind, n: u64, k: u64) -> BigInt {
    match kind {
        StirlingKind::FirstAbs => stirling_first_abs(n, k),
        StirlingKind::Second => stirling_second(n, k),
    }
}

fn stirling_table(n: u64, k: u64, step: impl Fn(u64, u64) -> u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // row[j] holds the value at (i, j)
    let mut row = vec![BigInt::zero(); (k + 1) as usize];
    row[0] = BigInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i) as usize).rev() {
            let prev = row[j].clone();
            row[j] = &row[j - 1] + prev * step(i - 1, j as u64);
        }
        row[0] = BigInt::zero();
    }
    row[k as usize].clone()
}

pub fn stirling_first_abs(n: u64, k: u64) -> BigInt {
    stirling_table(n, k, |i, _| i)
}

pub fn stirling_second(n: u64, k: u64) -> BigInt {
    stirling_table(n, k, |_, j| j)
}

pub fn bell(n: u64) -> BigInt {
    (0..=n).map(|k| stirling_second(n, k)).sum()
}

pub fn moebius(k: u64) -> i64 {
    assert!(k >= 1, "moebius is defined on positive integers");
    let mut m = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn euler_phi(k: u64) -> u64 {
    let mut m = k;
    let mut r = k;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
    }

    #[test]
    fn stirling_small() {
        assert_eq!(stirling_second(3, 2), BigInt::from(3));
        assert_eq!(stirling_second(4, 2), BigInt::from(7));
        assert_eq!(stirling_first_abs(3, 2), BigInt::from(3));
        assert_eq!(stirling_first_abs(0, 0), BigInt::from(1));
        assert_eq!(stirling_second(0, 0), BigInt::from(1));
        assert_eq!(stirling_second(3, 0), BigInt::from(0));
    }

    #[test]
    fn first_kind_rows_sum_to_factorial() {
        for n in 0..=8 {
            let s: BigInt = (0..=n).map(|k| stirling_first_abs(n, k)).sum();
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
    }
}
