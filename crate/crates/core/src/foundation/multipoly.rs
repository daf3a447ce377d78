use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational as BigRat;

use super::TPoly;

/// Polynomial in `x_1..x_n, y_1..y_n` with `TPoly` coefficients.
///
/// Exponent vectors have length `2n`: the `x` exponents followed by the `y` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, TPoly>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: TPoly) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(vec![0; 2 * n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::constant(n, TPoly::one())
    }

    /// The variable `x_i`, `1 <= i <= n`.
    pub fn x(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut e = vec![0; 2 * n];
        e[i - 1] = 1;
        let mut p = MultiPoly::zero(n);
        p.add_term(e, TPoly::one());
        p
    }

    /// The variable `y_i`, `1 <= i <= n`.
    pub fn y(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut e = vec![0; 2 * n];
        e[n + i - 1] = 1;
        let mut p = MultiPoly::zero(n);
        p.add_term(e, TPoly::one());
        p
    }

    /// `x_{i_1} + ... + x_{i_p}` over the given labels.
    pub fn x_sum(n: usize, labels: &[u32]) -> Self {
        labels.iter().fold(MultiPoly::zero(n), |acc, &i| {
            acc + MultiPoly::x(n, i as usize)
        })
    }

    pub fn y_sum(n: usize, labels: &[u32]) -> Self {
        labels.iter().fold(MultiPoly::zero(n), |acc, &i| {
            acc + MultiPoly::y(n, i as usize)
        })
    }

    /// Monomial `c * prod x_i^{xe_i} * prod y_i^{ye_i}`.
    pub fn monomial(n: usize, xe: &[u32], ye: &[u32], c: TPoly) -> Self {
        assert_eq!(xe.len(), n);
        assert_eq!(ye.len(), n);
        let mut e = xe.to_vec();
        e.extend_from_slice(ye);
        let mut p = MultiPoly::zero(n);
        p.add_term(e, c);
        p
    }

    pub fn num_labels(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &TPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: TPoly) {
        assert_eq!(exps.len(), 2 * self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &TPoly) -> MultiPoly {
        let mut r = MultiPoly::zero(self.n);
        for (e, v) in &self.terms {
            r.add_term(e.clone(), v * c);
        }
        r
    }

    pub fn scale_rat(&self, c: &BigRat) -> MultiPoly {
        self.scale(&TPoly::constant(c.clone()))
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut r = MultiPoly::one(self.n);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Set every `x_i` and `y_i` to one.
    pub fn eval_ones(&self) -> TPoly {
        self.terms.values().cloned().sum()
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n, "variable sets differ");
        let mut r = self.clone();
        for (e, c) in &rhs.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n, "variable sets differ");
        let mut r = MultiPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut mono = Vec::new();
            for (j, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = if j < self.n {
                    format!("x{}", j + 1)
                } else {
                    format!("y{}", j - self.n + 1)
                };
                mono.push(if k == 1 { name } else { format!("{name}^{k}") });
            }
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion() {
        let s = MultiPoly::x_sum(2, &[1, 2]);
        let sq = s.pow(2);
        let expected = MultiPoly::x(2, 1).pow(2)
            + MultiPoly::x(2, 2).pow(2)
            + (MultiPoly::x(2, 1) * MultiPoly::x(2, 2)).scale(&TPoly::from_int(2));
        assert_eq!(sq, expected);
        assert_eq!(sq.eval_ones(), TPoly::from_int(4));
    }
}
