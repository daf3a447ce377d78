use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational as BigRat;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in the edge weight `t` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPoly {
    coeffs: BTreeMap<i64, BigRat>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::constant(BigRat::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        TPoly::monomial(1, BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        TPoly::monomial(0, c)
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        TPoly::constant(BigRat::from_integer(c.into()))
    }

    pub fn monomial(exp: i64, c: BigRat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        TPoly { coeffs }
    }

    /// `t^exp` with coefficient one.
    pub fn t_pow(exp: i64) -> Self {
        TPoly::monomial(exp, BigRat::one())
    }

    /// `a + b t`.
    pub fn linear(a: BigRat, b: BigRat) -> Self {
        TPoly::constant(a) + TPoly::monomial(1, b)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRat)>>(terms: I) -> Self {
        let mut p = TPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigRat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn scale(&self, c: &BigRat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> TPoly {
        TPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> TPoly {
        let mut r = TPoly::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Replace `t` by `t^k`.
    pub fn power_substitute(&self, k: u32) -> TPoly {
        assert!(k >= 1, "power substitution needs k >= 1");
        self.substitute_exponent(k as i64)
    }

    /// Replace `t` by `t^{-1}`.
    pub fn invert_variable(&self) -> TPoly {
        self.substitute_exponent(-1)
    }

    /// Replace `t` by `-t`.
    pub fn negate_variable(&self) -> TPoly {
        TPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (*e, if e % 2 == 0 { v.clone() } else { -v }))
                .collect(),
        }
    }

    fn substitute_exponent(&self, k: i64) -> TPoly {
        TPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (e * k, v.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, t: &BigRat) -> BigRat {
        let mut s = BigRat::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                num_traits::pow(t.clone(), *e as usize)
            } else {
                assert!(!t.is_zero(), "negative power of t evaluated at zero");
                num_traits::pow(t.recip(), (-e) as usize)
            };
            s += c * p;
        }
        s
    }

    pub fn eval_one(&self) -> BigRat {
        self.coeffs.values().fold(BigRat::zero(), |a, c| a + c)
    }

    /// Exact division; `None` when `divisor` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &TPoly) -> Option<TPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        let dlo = divisor.min_exp().unwrap();
        let dhi = divisor.max_exp().unwrap();
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = TPoly::zero();
        let lo = self.min_exp().unwrap();
        while let Some(hi) = rem.max_exp() {
            if hi - (dhi - dlo) < lo {
                return None;
            }
            let q = rem.coeff(hi) / &lead;
            let term = TPoly::monomial(hi - dhi, q);
            rem = &rem - &(&term * divisor);
            quot = quot + term;
        }
        Some(quot)
    }

    /// Exact inverse in the Laurent ring; only monomials are units.
    pub fn inverse(&self) -> Option<TPoly> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next().unwrap();
        Some(TPoly::monomial(-e, c.recip()))
    }

    /// The constant value when the polynomial has no `t`-dependence.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.coeffs.len() {
            0 => Some(BigRat::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl From<i64> for TPoly {
    fn from(c: i64) -> Self {
        TPoly::from_int(c)
    }
}

impl From<BigRat> for TPoly {
    fn from(c: BigRat) -> Self {
        TPoly::constant(c)
    }
}

impl From<BigInt> for TPoly {
    fn from(c: BigInt) -> Self {
        TPoly::from_int(c)
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut r = self.clone();
        for (e, c) in &rhs.coeffs {
            r.add_term(*e, -c);
        }
        r
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut r = TPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for TPoly {
    fn sum<I: Iterator<Item = TPoly>>(iter: I) -> TPoly {
        iter.fold(TPoly::zero(), |a, b| a + b)
    }
}

/// Renders as `1 + 12t + 16t^2`, `t^-1`, `1/2 - 3t`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else if a.is_integer() {
                write!(f, "{a}{var}")?;
            } else {
                write!(f, "({a}){var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rat;

    #[test]
    fn ring_identities() {
        let a = TPoly::t() + TPoly::one();
        let b = TPoly::t() - TPoly::one();
        assert_eq!(&a * &b, TPoly::t_pow(2) - TPoly::one());
        assert_eq!(TPoly::t_pow(-1) * TPoly::t(), TPoly::one());
    }

    #[test]
    fn display_and_eval() {
        let p = TPoly::from_terms([(0, rat(1, 1)), (1, rat(12, 1)), (2, rat(16, 1))]);
        assert_eq!(p.to_string(), "1 + 12t + 16t^2");
        assert_eq!(p.eval_one(), rat(29, 1));
        assert_eq!(TPoly::t_pow(-1).to_string(), "t^-1");
        let q = TPoly::from_terms([(0, rat(1, 2)), (1, rat(-3, 1))]);
        assert_eq!(q.to_string(), "1/2 - 3t");
        assert_eq!(TPoly::zero().to_string(), "0");
    }

    #[test]
    fn power_substitution() {
        let p = TPoly::t() + TPoly::t_pow(-1);
        assert_eq!(p.power_substitute(2), TPoly::t_pow(2) + TPoly::t_pow(-2));
        assert_eq!(p.power_substitute(1), p);
        let q = TPoly::one() + TPoly::t();
        assert_eq!(q.power_substitute(3), TPoly::one() + TPoly::t_pow(3));
    }

    #[test]
    fn exact_division() {
        let a = TPoly::one() + TPoly::t();
        let b = &a * &(TPoly::t_pow(-2) + TPoly::from_int(3));
        assert_eq!(b.div_exact(&a), Some(TPoly::t_pow(-2) + TPoly::from_int(3)));
        assert_eq!(TPoly::t_pow(2).div_exact(&a), None);
    }
}
