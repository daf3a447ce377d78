//! Truncated cycle index series in the power sums `p₁, p₂, …`, with
//! coefficients in `ℚ[t, t⁻¹]`.

mod bidecorated;
mod builtin;
mod closed;
mod decorated;
mod operad;
mod solve;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::egf::Egf;
use crate::foundation::{factorial, rat, rat_int, z_lambda, BigRat, IntPartition, TPoly};
use crate::{Error, Result};

pub use bidecorated::{
    bidecorated_cis, bidecorated_family, hac_relations, hac_series, hal_relations, hal_series,
    BiKind, BidecoratedFamily, HacSeries, HalSeries,
};
pub use builtin::{
    antiderivative, assoc, character_cis, cis_builtin, comm, cycle, e, lie, pasc, perm, prelie,
    sigma_assoc, sigma_lie, species_cis, x, BUILTIN_NAMES,
};
pub use closed::{lie_cis_closed, prelie_cis_closed, prelie_hollow_closed};
pub use decorated::{decorated_cis, decorated_family, DecoratedFamily};
pub use operad::{lambda_cis, operad_identities, sigma_lie_relation_check, Identity};
pub use solve::{plethystic_inverse, solve_fixed_point, CisEquation, CisExpr};

/// `Σ_λ c_λ(t) p_λ` over partitions of weight at most `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cis {
    max_degree: u32,
    coeffs: BTreeMap<IntPartition, TPoly>,
}

impl Cis {
    pub fn zero(max_degree: u32) -> Self {
        Cis {
            max_degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(max_degree: u32, c: TPoly) -> Self {
        let mut z = Cis::zero(max_degree);
        z.add_term(IntPartition::empty(), c);
        z
    }

    pub fn one(max_degree: u32) -> Self {
        Cis::constant(max_degree, TPoly::one())
    }

    /// The power sum `p_k`.
    pub fn p(max_degree: u32, k: u32) -> Self {
        Cis::monomial(max_degree, IntPartition::new(vec![k]), TPoly::one())
    }

    pub fn p1(max_degree: u32) -> Self {
        Cis::p(max_degree, 1)
    }

    pub fn monomial(max_degree: u32, lambda: IntPartition, c: TPoly) -> Self {
        let mut z = Cis::zero(max_degree);
        z.add_term(lambda, c);
        z
    }

    pub fn from_terms<I: IntoIterator<Item = (IntPartition, TPoly)>>(
        max_degree: u32,
        terms: I,
    ) -> Self {
        let mut z = Cis::zero(max_degree);
        for (l, c) in terms {
            z.add_term(l, c);
        }
        z
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn coeff(&self, lambda: &IntPartition) -> TPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in (weight, reverse-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, &TPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> TPoly {
        self.coeff(&IntPartition::empty())
    }

    /// Adds `c·p_λ`; terms beyond the truncation degree are dropped.
    pub fn add_term(&mut self, lambda: IntPartition, c: TPoly) {
        if c.is_zero() || lambda.weight() > self.max_degree {
            return;
        }
        let slot = self.coeffs.entry(lambda).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    /// Drops everything above degree `n`; `n` may not exceed the current degree.
    pub fn truncate(&self, n: u32) -> Result<Cis> {
        if n > self.max_degree {
            return Err(Error::DegreeMismatch(n as usize, self.max_degree as usize));
        }
        Ok(Cis {
            max_degree: n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.weight() <= n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        })
    }

    /// The terms of weight exactly `n`.
    pub fn homogeneous(&self, n: u32) -> Cis {
        Cis {
            max_degree: self.max_degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.weight() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    fn same_degree(&self, other: &Cis) -> Result<()> {
        if self.max_degree != other.max_degree {
            return Err(Error::DegreeMismatch(
                self.max_degree as usize,
                other.max_degree as usize,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cis) -> Result<Cis> {
        self.same_degree(other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cis) -> Result<Cis> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cis {
        self.map_coeffs(|c| -c)
    }

    pub fn mul(&self, other: &Cis) -> Result<Cis> {
        self.same_degree(other)?;
        let mut acc: BTreeMap<IntPartition, TPoly> = BTreeMap::new();
        for (l1, c1) in &self.coeffs {
            let w1 = l1.weight();
            for (l2, c2) in &other.coeffs {
                if w1 + l2.weight() > self.max_degree {
                    continue;
                }
                *acc.entry(l1.union(l2)).or_default() += &(c1 * c2);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Cis {
            max_degree: self.max_degree,
            coeffs: acc,
        })
    }

    pub fn scale(&self, c: &TPoly) -> Cis {
        self.map_coeffs(|v| v * c)
    }

    pub fn scale_rat(&self, c: &BigRat) -> Cis {
        self.map_coeffs(|v| v.scale(c))
    }

    pub fn pow(&self, k: u32) -> Cis {
        let mut r = Cis::one(self.max_degree);
        for _ in 0..k {
            r = r.mul(self).expect("same degree");
        }
        r
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&TPoly) -> TPoly) -> Cis {
        Cis::from_terms(
            self.max_degree,
            self.coeffs.iter().map(|(l, c)| (l.clone(), f(c))),
        )
    }

    /// Applies `f(λ, c)` to every coefficient.
    pub fn map_terms(&self, f: impl Fn(&IntPartition, &TPoly) -> TPoly) -> Cis {
        Cis::from_terms(
            self.max_degree,
            self.coeffs.iter().map(|(l, c)| (l.clone(), f(l, c))),
        )
    }

    /// `p_k ∘ f`: every `p_i` becomes `p_{ki}` and `t` becomes `t^k`.
    pub fn adams(&self, k: u32) -> Cis {
        let mut out = Cis::zero(self.max_degree);
        for (l, c) in &self.coeffs {
            if l.weight() * k <= self.max_degree {
                out.add_term(l.scaled(k), c.power_substitute(k));
            }
        }
        out
    }

    /// `f ∘ g = Σ c_λ ∏_i (p_{λ_i} ∘ g)`; the coefficients of `f` are not substituted.
    pub fn plethysm(&self, g: &Cis) -> Result<Cis> {
        self.same_degree(g)?;
        if !g.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let n = self.max_degree;
        let mut powers: HashMap<u32, Vec<Cis>> = HashMap::new();
        let mut out = Cis::zero(n);
        for (l, c) in &self.coeffs {
            if l.weight() > n {
                continue;
            }
            let mut term = Cis::constant(n, c.clone());
            for (k, m) in l.multiplicities() {
                let pw = powers.entry(k).or_insert_with(|| vec![Cis::one(n)]);
                if pw.len() <= m as usize {
                    let base = g.adams(k);
                    while pw.len() <= m as usize {
                        let next = pw.last().unwrap().mul(&base)?;
                        pw.push(next);
                    }
                }
                term = term.mul(&pw[m as usize])?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// `∂/∂p₁`; the truncation degree drops by one.
    pub fn derivative(&self) -> Cis {
        let mut out = Cis::zero(self.max_degree.saturating_sub(1));
        for (l, c) in &self.coeffs {
            let m = l.multiplicity(1);
            if m > 0 {
                out.add_term(l.without_part(1).unwrap(), c.scale(&rat_int(m)));
            }
        }
        out
    }

    /// `Σ_t f = −t⁻¹ f(−t p₁, −t² p₂, …)`, or `Σ f = −f(−p₁, −p₂, …)` when
    /// `use_t` is false. The `t` of the coefficients is the same variable.
    pub fn suspension(&self, use_t: bool) -> Cis {
        self.map_terms(|l, c| {
            let sign = if l.len() % 2 == 0 { -c } else { c.clone() };
            if use_t {
                sign.shift(l.weight() as i64 - 1)
            } else {
                sign
            }
        })
    }

    /// `t ↦ t⁻¹` in every coefficient.
    pub fn invert_t(&self) -> Cis {
        self.map_coeffs(TPoly::invert_variable)
    }

    /// `t ↦ −t` in every coefficient.
    pub fn negate_t(&self) -> Cis {
        self.map_coeffs(TPoly::negate_variable)
    }

    /// `p_i ↦ t^{ki} p_i`.
    pub fn grade(&self, k: i64) -> Cis {
        self.map_terms(|l, c| c.shift(k * l.weight() as i64))
    }

    /// `z_λ · [p_λ]`: the (t-weighted) number of structures fixed by a
    /// permutation of cycle type `λ`.
    pub fn fixed_count(&self, lambda: &IntPartition) -> TPoly {
        self.coeff(lambda)
            .scale(&BigRat::from_integer(z_lambda(lambda)))
    }

    /// The exponential generating series `Z(x, 0, 0, …)`, as counts `n!·[p₁ⁿ]`.
    pub fn egf(&self) -> Egf {
        Egf::from_coeffs(
            (0..=self.max_degree)
                .map(|n| {
                    self.coeff(&IntPartition::ones(n))
                        .scale(&BigRat::from_integer(factorial(n as u64)))
                })
                .collect(),
        )
    }

    /// `exp(f)` for `f` without constant term.
    pub fn exp(&self) -> Result<Cis> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let mut r = Cis::one(self.max_degree);
        let mut term = Cis::one(self.max_degree);
        for m in 1..=self.max_degree as i64 {
            term = term.mul(self)?.scale_rat(&rat(1, m));
            r = r.add(&term)?;
        }
        Ok(r)
    }

    /// `log(1 + f)` for `f` without constant term.
    pub fn log1p(&self) -> Result<Cis> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let mut r = Cis::zero(self.max_degree);
        let mut term = Cis::one(self.max_degree);
        for m in 1..=self.max_degree as i64 {
            term = term.mul(self)?;
            let sign = if m % 2 == 1 { 1 } else { -1 };
            r = r.add(&term.scale_rat(&rat(sign, m)))?;
        }
        Ok(r)
    }

    /// Multiplicative inverse; the constant term must be a unit of `ℚ[t, t⁻¹]`.
    pub fn inverse(&self) -> Result<Cis> {
        let c = self.constant_term();
        let ci = c.inverse().ok_or(Error::NonInvertible)?;
        let rest = self.sub(&Cis::constant(self.max_degree, c))?.scale(&ci);
        let mut r = Cis::zero(self.max_degree);
        let mut term = Cis::one(self.max_degree);
        for m in 0..=self.max_degree {
            let s = if m % 2 == 0 { term.clone() } else { term.neg() };
            r = r.add(&s)?;
            term = term.mul(&rest)?;
        }
        Ok(r.scale(&ci))
    }

    /// `f / p₁`, when every term contains `p₁`; the degree drops by one.
    pub fn div_p1(&self) -> Result<Cis> {
        let mut out = Cis::zero(self.max_degree.saturating_sub(1));
        for (l, c) in &self.coeffs {
            let rest = l
                .without_part(1)
                .ok_or_else(|| Error::Invalid(format!("term p{l} is not divisible by p1")))?;
            out.add_term(rest, c.clone());
        }
        Ok(out)
    }

    /// Terms containing at least one part equal to 1.
    pub fn with_p1(&self) -> Cis {
        Cis {
            max_degree: self.max_degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| l.multiplicity(1) > 0)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Cis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if l.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "p{l}")?;
            } else {
                write!(f, "({c})p{l}")?;
            }
        }
        Ok(())
    }
}

/// Shorthand for `c·t^k`.
pub(crate) fn tmono(k: i64, c: i64) -> TPoly {
    TPoly::monomial(k, rat_int(c))
}

/// `Σ_{|λ| ≤ N} χ(λ)/z_λ p_λ` for a class function `χ`.
pub(crate) fn from_class_function(max_degree: u32, f: impl Fn(&IntPartition) -> TPoly) -> Cis {
    let mut out = Cis::zero(max_degree);
    for l in crate::foundation::partitions_up_to(max_degree) {
        let z = BigRat::from_integer(z_lambda(&l));
        out.add_term(l.clone(), f(&l).scale(&z.recip()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples(n: u32) -> Vec<Cis> {
        let mut v = vec![comm(n), assoc(n), lie(n), prelie(n), cycle(n), perm(n)];
        v.push(sigma_lie(n).scale(&(TPoly::one() + TPoly::t())));
        v
    }

    #[test]
    fn ring_basics() {
        let p1 = Cis::p1(3);
        let sq = p1.mul(&p1).unwrap();
        assert_eq!(sq.coeff(&IntPartition::ones(2)), TPoly::one());
        assert_eq!(p1.add(&Cis::zero(3)).unwrap(), p1);
        assert_eq!(p1.add(&Cis::p1(4)), Err(Error::DegreeMismatch(3, 4)));
        assert_eq!(sq.derivative(), Cis::p1(2).scale(&TPoly::from_int(2)));
    }

    #[test]
    fn plethysm_laws() {
        let n = 5;
        let s = samples(n);
        for f in &s {
            assert_eq!(&f.plethysm(&Cis::p1(n)).unwrap(), f);
            assert_eq!(Cis::p1(n).plethysm(f).unwrap(), *f);
            assert_eq!(f.suspension(false).suspension(false), *f);
            assert_eq!(
                f.suspension(false).neg(),
                f.plethysm(&Cis::p1(n).neg()).unwrap()
            );
        }
        for (i, f) in s.iter().enumerate() {
            let g = &s[(i + 1) % s.len()];
            let h = &s[(i + 3) % s.len()];
            let left = f.plethysm(&g.plethysm(h).unwrap()).unwrap();
            let right = f.plethysm(g).unwrap().plethysm(h).unwrap();
            assert_eq!(left, right);
            assert_eq!(
                f.plethysm(g).unwrap().suspension(false),
                f.suspension(false).plethysm(&g.suspension(false)).unwrap()
            );
        }
        assert_eq!(
            Cis::one(2).plethysm(&Cis::one(2)),
            Err(Error::NonzeroConstant)
        );
    }

    #[test]
    fn set_partitions_by_plethysm() {
        let z = e(3).plethysm(&comm(3)).unwrap();
        assert_eq!(z.coeff(&IntPartition::ones(3)), TPoly::constant(rat(5, 6)));
    }

    #[test]
    fn derivatives_of_builtins() {
        assert_eq!(cycle(6).derivative(), assoc(5).add(&Cis::one(5)).unwrap());
        assert_eq!(e(6).derivative(), e(5));
    }

    /// `(1+Comm)∘(t·Lie) = ∏_{k,l} (1 − p_{kl})^{−t^k μ(l)/(kl)}`, expanded factor by factor.
    #[test]
    fn exponential_of_graded_lie() {
        let n = 4;
        let lhs = e(n).plethysm(&lie(n).scale(&TPoly::t())).unwrap();
        let mut rhs = Cis::one(n);
        for k in 1..=n {
            for l in 1..=n / k {
                let mu = crate::foundation::moebius(l as u64);
                if mu == 0 {
                    continue;
                }
                // (1 − x)^{−a} = Σ_j C(a+j−1, j) x^j with a = t^k μ(l)/(kl)
                let a = TPoly::monomial(k as i64, rat(mu, (k * l) as i64));
                let mut factor = Cis::one(n);
                let mut c = TPoly::one();
                for j in 1..=n / (k * l) {
                    c = &c * &(&a + &TPoly::from_int(j as i64 - 1));
                    c = c.scale(&rat(1, j as i64));
                    factor.add_term(IntPartition::new(vec![k * l; j as usize]), c.clone());
                }
                rhs = rhs.mul(&factor).unwrap();
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_log() {
        let f = Cis::one(5).add(&comm(5)).unwrap();
        assert_eq!(f.mul(&f.inverse().unwrap()).unwrap(), Cis::one(5));
        assert_eq!(comm(5).log1p().unwrap().exp().unwrap(), f);
        assert_eq!(Cis::p1(3).inverse(), Err(Error::NonInvertible));
    }

    #[test]
    fn t_substitutions() {
        let f = pasc(4);
        assert_eq!(f.invert_t().invert_t(), f);
        assert_eq!(f.negate_t().negate_t(), f);
        assert_eq!(f.grade(1).grade(-1), f);
    }
}
