use super::Cis;
use crate::foundation::TPoly;
use crate::{Error, Result};

/// Right-hand side of an equation `Z = F(Z)` in one unknown series.
#[derive(Clone, Debug)]
pub enum CisExpr {
    Const(Cis),
    Unknown,
    Add(Box<CisExpr>, Box<CisExpr>),
    Sub(Box<CisExpr>, Box<CisExpr>),
    Mul(Box<CisExpr>, Box<CisExpr>),
    /// `outer ∘ inner` with a fixed outer series.
    Compose(Cis, Box<CisExpr>),
    Scale(TPoly, Box<CisExpr>),
}

impl CisExpr {
    pub fn unknown() -> Self {
        CisExpr::Unknown
    }

    pub fn constant(c: Cis) -> Self {
        CisExpr::Const(c)
    }

    pub fn compose_into(outer: Cis, inner: CisExpr) -> Self {
        CisExpr::Compose(outer, Box::new(inner))
    }

    pub fn scale(self, c: TPoly) -> Self {
        CisExpr::Scale(c, Box::new(self))
    }

    /// Evaluates at `z`; constant operands are truncated to the degree of `z`.
    pub fn eval(&self, z: &Cis) -> Result<Cis> {
        let n = z.max_degree();
        Ok(match self {
            CisExpr::Const(c) => c.truncate(n)?,
            CisExpr::Unknown => z.clone(),
            CisExpr::Add(a, b) => a.eval(z)?.add(&b.eval(z)?)?,
            CisExpr::Sub(a, b) => a.eval(z)?.sub(&b.eval(z)?)?,
            CisExpr::Mul(a, b) => a.eval(z)?.mul(&b.eval(z)?)?,
            CisExpr::Compose(f, g) => f.truncate(n)?.plethysm(&g.eval(z)?)?,
            CisExpr::Scale(c, a) => a.eval(z)?.scale(c),
        })
    }
}

impl std::ops::Add for CisExpr {
    type Output = CisExpr;
    fn add(self, other: CisExpr) -> CisExpr {
        CisExpr::Add(Box::new(self), Box::new(other))
    }
}

impl std::ops::Sub for CisExpr {
    type Output = CisExpr;
    fn sub(self, other: CisExpr) -> CisExpr {
        CisExpr::Sub(Box::new(self), Box::new(other))
    }
}

impl std::ops::Mul for CisExpr {
    type Output = CisExpr;
    fn mul(self, other: CisExpr) -> CisExpr {
        CisExpr::Mul(Box::new(self), Box::new(other))
    }
}

/// The equation `Z = rhs`.
#[derive(Clone, Debug)]
pub struct CisEquation {
    pub rhs: CisExpr,
}

impl CisEquation {
    pub fn new(rhs: CisExpr) -> Self {
        CisEquation { rhs }
    }
}

/// Iterates `Z ← rhs(Z)` from `Z = 0` until it stabilises. A well-founded
/// equation fixes one more degree per step, so `N + 2` steps always suffice.
pub fn solve_fixed_point(eq: &CisEquation, max_degree: u32) -> Result<Cis> {
    let mut z = Cis::zero(max_degree);
    for _ in 0..max_degree + 3 {
        let next = eq.rhs.eval(&z)?;
        if next == z {
            return Ok(z);
        }
        z = next;
    }
    Err(Error::NotWellFounded(format!(
        "no fixed point after {} iterations",
        max_degree + 3
    )))
}

/// The `g` with `f ∘ g = p₁`, for `f = c·p₁ + …` with `c` a unit.
pub fn plethystic_inverse(f: &Cis, max_degree: u32) -> Result<Cis> {
    let f = f.truncate(max_degree)?;
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstant);
    }
    let p1 = Cis::p1(max_degree);
    let ci = f
        .coeff(p1.terms().next().unwrap().0)
        .inverse()
        .ok_or(Error::NonInvertible)?;
    let mut g = Cis::zero(max_degree);
    for _ in 0..max_degree + 3 {
        let err = p1.sub(&f.plethysm(&g)?)?;
        if err.is_zero() {
            return Ok(g);
        }
        g = g.add(&err.scale(&ci))?;
    }
    Err(Error::NotWellFounded(
        "plethystic inversion did not converge".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cis::{comm, e, prelie};

    #[test]
    fn trivial_equation() {
        let eq = CisEquation::new(CisExpr::constant(Cis::p1(4)));
        assert_eq!(solve_fixed_point(&eq, 4).unwrap(), Cis::p1(4));
    }

    #[test]
    fn rooted_trees_equation() {
        let n = 5;
        let eq = CisEquation::new(
            CisExpr::constant(Cis::p1(n)) * CisExpr::compose_into(e(n), CisExpr::unknown()),
        );
        assert_eq!(solve_fixed_point(&eq, n).unwrap(), prelie(n));
    }

    #[test]
    fn ill_founded_equation_is_rejected() {
        // Z = p1 + 2Z doubles every step
        let eq = CisEquation::new(
            CisExpr::constant(Cis::p1(3)) + CisExpr::unknown().scale(TPoly::from_int(2)),
        );
        assert!(matches!(
            solve_fixed_point(&eq, 3),
            Err(Error::NotWellFounded(_))
        ));
    }

    #[test]
    fn inverse_of_p1_and_of_one_plus_comm() {
        assert_eq!(plethystic_inverse(&Cis::p1(4), 4).unwrap(), Cis::p1(4));
        let f = Cis::p1(5).add(&comm(5).sub(&Cis::p1(5)).unwrap()).unwrap();
        let g = plethystic_inverse(&f, 5).unwrap();
        assert_eq!(f.plethysm(&g).unwrap(), Cis::p1(5));
        assert_eq!(g.plethysm(&f).unwrap(), Cis::p1(5));
        let bad = Cis::p1(3).scale(&(TPoly::one() + TPoly::t()));
        assert_eq!(plethystic_inverse(&bad, 3), Err(Error::NonInvertible));
    }
}
