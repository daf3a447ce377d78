//! Truncated exponential generating functions with coefficients in `Q[t, t⁻¹]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::foundation::{binomial, rat_int, BigRat, MultiPoly, TPoly};
use crate::hypertree::Kind;
use crate::species::{BlockSpecies, SpeciesName};
use crate::{Error, Result};

/// `Σ_{n≤N} c_n xⁿ/n!`, stored as the counts `c_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Egf {
    coeffs: Vec<TPoly>,
}

impl Egf {
    pub fn zero(max_degree: u32) -> Self {
        Egf {
            coeffs: vec![TPoly::zero(); max_degree as usize + 1],
        }
    }

    /// Coefficients `c_0..c_N`.
    pub fn from_coeffs(coeffs: Vec<TPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "an Egf has at least the constant coefficient"
        );
        Egf { coeffs }
    }

    pub fn max_degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, n: u32) -> &TPoly {
        &self.coeffs[n as usize]
    }

    pub fn set_coeff(&mut self, n: u32, c: TPoly) {
        self.coeffs[n as usize] = c;
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    fn check(&self, other: &Egf) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DegreeMismatch(
                self.max_degree() as usize,
                other.max_degree() as usize,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Egf) -> Result<Egf> {
        self.check(other)?;
        Ok(Egf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Egf) -> Result<Egf> {
        self.check(other)?;
        Ok(Egf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Product of EGFs: `c_n = Σ_j C(n,j) a_j b_{n−j}`.
    pub fn mul(&self, other: &Egf) -> Result<Egf> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut out = vec![TPoly::zero(); n];
        for (m, slot) in out.iter_mut().enumerate() {
            for j in 0..=m {
                let (a, b) = (&self.coeffs[j], &other.coeffs[m - j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let c = rat_int(binomial(m as u64, j as u64));
                *slot += &(a * b).scale(&c);
            }
        }
        Ok(Egf { coeffs: out })
    }

    pub fn scale(&self, c: &TPoly) -> Egf {
        Egf {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Coefficients evaluated at a rational `t`.
    pub fn eval(&self, t: &BigRat) -> Vec<BigRat> {
        self.coeffs.iter().map(|c| c.eval(t)).collect()
    }
}

impl fmt::Display for Egf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

/// A count under the convention `t^{max(k−1,0)}` rewritten in the series
/// convention, where the one-vertex plain and rooted structures weigh `t⁻¹`.
pub fn count_to_series(kind: Kind, n: u32, count: &TPoly) -> TPoly {
    if n == 1 && matches!(kind, Kind::Plain | Kind::Rooted) {
        count.shift(-1)
    } else {
        count.clone()
    }
}

fn nt(n: u32) -> TPoly {
    TPoly::monomial(1, rat_int(n))
}

fn ensure_block(b: &BlockSpecies) -> Result<()> {
    if !b.dim(0).is_zero() {
        return Err(Error::Unsupported(format!(
            "{b} has structures on the empty set"
        )));
    }
    Ok(())
}

/// The count series of `B`-decorated structures of the given kind.
pub fn closed_series(kind: Kind, b: &BlockSpecies, max_degree: u32) -> Result<Egf> {
    ensure_block(b)?;
    let e = |k: u32, n: u32| TPoly::from(b.e_count(k, n));
    let big_n = max_degree;
    let mut rooted = Egf::zero(big_n);
    let mut hollow = Egf::zero(big_n);
    let mut plain = Egf::zero(big_n);
    for n in 1..=big_n {
        if n == 1 {
            rooted.set_coeff(1, TPoly::t_pow(-1));
            plain.set_coeff(1, TPoly::t_pow(-1));
        } else {
            let mut r = TPoly::zero();
            let mut p = TPoly::zero();
            for k in 1..n {
                let ek = e(k, n - 1);
                if ek.is_zero() {
                    continue;
                }
                let m = nt(n).pow(k - 1);
                r += &(&(&ek * &m) * &nt(n)).shift(-1);
                p += &(&ek * &m);
            }
            rooted.set_coeff(n, r);
            plain.set_coeff(n, p);
        }
        let mut h = TPoly::zero();
        for k in 1..=n {
            h += &(&e(k, n) * &nt(n).pow(k - 1));
        }
        hollow.set_coeff(n, h);
    }
    Ok(match kind {
        Kind::Rooted => rooted,
        Kind::Hollow => hollow,
        Kind::Plain => plain,
        Kind::RootedEdgePointed => rooted.mul(&hollow)?.scale(&TPoly::t()),
        Kind::EdgePointed => {
            let re = rooted.mul(&hollow)?.scale(&TPoly::t());
            plain.add(&re)?.sub(&rooted)?
        }
    })
}

/// `(n + tn − 1)`.
fn prelie_base(n: u32) -> TPoly {
    TPoly::linear(rat_int(n as i64 - 1), rat_int(n))
}

/// Closed forms for `PreLie` blocks.
pub fn prelie_closed(kind: Kind, max_degree: u32) -> Egf {
    let mut s = Egf::zero(max_degree);
    for n in 1..=max_degree {
        let nn = rat_int(n);
        let c = match (kind, n) {
            (Kind::Plain | Kind::Rooted, 1) => TPoly::t_pow(-1),
            (Kind::Plain, _) => prelie_base(n).pow(n - 2),
            (Kind::Rooted, _) => prelie_base(n).pow(n - 2).scale(&nn),
            (Kind::Hollow, _) => TPoly::linear(nn.clone(), nn).pow(n - 1),
            (Kind::RootedEdgePointed | Kind::EdgePointed, 1) => TPoly::zero(),
            // the negative power cancels against the linear factor
            (Kind::RootedEdgePointed, 2) => TPoly::from(2),
            (Kind::EdgePointed, 2) => TPoly::one(),
            (Kind::RootedEdgePointed, _) => {
                let f = TPoly::linear(BigRat::one(), rat_int(2));
                (&prelie_base(n).pow(n - 3) * &f).scale(&(&nn * rat_int(n - 1)))
            }
            (Kind::EdgePointed, _) => {
                let f = TPoly::linear(BigRat::one(), nn);
                (&prelie_base(n).pow(n - 3) * &f).scale(&rat_int(n - 1))
            }
        };
        s.set_coeff(n, c);
    }
    s
}

/// `∏_{k=lo}^{hi} (a t + k)`, empty when `hi < lo`.
fn rising(a: u32, lo: i64, hi: i64) -> TPoly {
    (lo..=hi).fold(TPoly::one(), |acc, k| {
        &acc * &TPoly::linear(rat_int(k), rat_int(a))
    })
}

/// Closed forms for `Lie` blocks; the edge-pointed series comes from
/// `S^e = S + S^{re} − S^r`.
pub fn lie_closed(kind: Kind, max_degree: u32) -> Result<Egf> {
    let big_n = max_degree as i64;
    let mut rooted = Egf::zero(max_degree);
    let mut plain = Egf::zero(max_degree);
    let mut hollow = Egf::zero(max_degree);
    let mut re = Egf::zero(max_degree);
    for n in 1..=big_n {
        let nu = n as u32;
        rooted.set_coeff(nu, rising(nu, 0, n - 2).shift(-1));
        plain.set_coeff(
            nu,
            if n == 1 {
                TPoly::t_pow(-1)
            } else {
                rising(nu, 1, n - 2)
            },
        );
        hollow.set_coeff(nu, rising(nu, 1, n - 1));
        let mut c = TPoly::zero();
        for p in 1..n {
            let q = n - p;
            let term = &rising(p as u32, 0, p - 2) * &rising(q as u32, 1, q - 1);
            c += &term.scale(&rat_int(binomial(n as u64, p as u64)));
        }
        re.set_coeff(nu, c);
    }
    Ok(match kind {
        Kind::Rooted => rooted,
        Kind::Plain => plain,
        Kind::Hollow => hollow,
        Kind::RootedEdgePointed => re,
        Kind::EdgePointed => plain.add(&re)?.sub(&rooted)?,
    })
}

/// A literal reading of the printed `Lie` edge-pointed formula:
/// `∏_{k=0}^{n−2}(nt+k) − Σ_{p=0}^{n−1} C(n,p) ∏_{k=0}^{p−2}(pt+k) ∏_{l=1}^{n−p−1}((n−p)t+l)`.
/// Reported by `verify`, never asserted.
pub fn lie_edge_pointed_printed(max_degree: u32) -> Egf {
    let mut s = Egf::zero(max_degree);
    for n in 2..=max_degree as i64 {
        let mut c = rising(n as u32, 0, n - 2);
        for p in 0..n {
            let q = n - p;
            let term = &rising(p as u32, 0, p - 2) * &rising(q as u32, 1, q - 1);
            c = &c - &term.scale(&rat_int(binomial(n as u64, p as u64)));
        }
        s.set_coeff(n as u32, c);
    }
    s
}

/// Weighted closed forms: `X·Σ_k E(k,n−1)(Xt)^{k−1}` for rooted and
/// `Σ_k E(k,n)(Xt)^{k−1}` for hollow, with `X = x₁+⋯+xₙ`. With `y`-weights
/// (PreLie only) the forest counts become `(Xt + Y)^{n−1}` (hollow) and
/// `Σ_r x_r (Xt + Y − y_r)^{n−2}` (rooted).
pub fn weighted_closed(kind: Kind, b: &BlockSpecies, n: u32, with_y: bool) -> Result<MultiPoly> {
    if !matches!(kind, Kind::Rooted | Kind::Hollow) {
        return Err(Error::Invalid(format!("weighted series for {kind}")));
    }
    if with_y && b.name() != SpeciesName::PreLie {
        return Err(Error::Invalid(format!("y-weights need PreLie, got {b}")));
    }
    ensure_block(b)?;
    let nn = n as usize;
    let labels: Vec<u32> = (1..=n).collect();
    let x = MultiPoly::x_sum(nn, &labels);
    let xt = x.scale(&TPoly::t());
    if kind == Kind::Rooted && n == 1 {
        return Ok(MultiPoly::one(nn));
    }
    if with_y {
        let y = MultiPoly::y_sum(nn, &labels);
        return Ok(match kind {
            Kind::Hollow => (&xt + &y).pow(n - 1),
            _ => labels.iter().fold(MultiPoly::zero(nn), |acc, &r| {
                let yr = MultiPoly::y(nn, r as usize).scale_rat(&rat_int(-1));
                let base = &(&xt + &y) + &yr;
                acc + &MultiPoly::x(nn, r as usize) * &base.pow(n - 2)
            }),
        });
    }
    let (m, lead) = match kind {
        Kind::Hollow => (n, MultiPoly::one(nn)),
        _ => (n - 1, x.clone()),
    };
    let mut total = MultiPoly::zero(nn);
    for k in 1..=m {
        let e: BigInt = b.e_count(k, m);
        if e.is_zero() {
            continue;
        }
        total = total + (&lead * &xt.pow(k - 1)).scale_rat(&rat_int(e));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypertree::{decorated_count, weighted_count};

    fn b(s: &str) -> BlockSpecies {
        BlockSpecies::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        let plain = closed_series(Kind::Plain, &b("Comm"), 4).unwrap();
        assert_eq!(plain.coeff(4).to_string(), "1 + 12t + 16t^2");
        let rooted = closed_series(Kind::Rooted, &b("Comm"), 3).unwrap();
        assert_eq!(rooted.coeff(3).eval_one(), rat_int(12));
        let hollow = closed_series(Kind::Hollow, &b("Comm"), 2).unwrap();
        assert_eq!(hollow.coeff(2).to_string(), "1 + 2t");
        let re = rooted
            .mul(&closed_series(Kind::Hollow, &b("Comm"), 3).unwrap())
            .unwrap();
        assert_eq!(re.scale(&TPoly::t()).coeff(3).eval_one(), rat_int(15));
        assert_eq!(prelie_closed(Kind::Plain, 3).coeff(3).to_string(), "2 + 3t");
        assert_eq!(
            prelie_closed(Kind::Hollow, 2).coeff(2).eval_one(),
            rat_int(4)
        );
        assert_eq!(
            prelie_closed(Kind::EdgePointed, 3).coeff(3).eval_one(),
            rat_int(8)
        );
        let lie = lie_closed(Kind::Plain, 4).unwrap();
        assert_eq!(lie.coeff(3).to_string(), "1 + 3t");
        assert_eq!(lie.coeff(4).eval_one(), rat_int(30));
        assert_eq!(
            lie_closed(Kind::Rooted, 2).unwrap().coeff(2).to_string(),
            "2"
        );
    }

    #[test]
    fn closed_series_match_brute_force() {
        for name in ["Comm", "Assoc", "Perm", "Cycle", "PreLie", "Lie"] {
            for kind in Kind::ALL {
                let s = closed_series(kind, &b(name), 5).unwrap();
                for n in 1..=5 {
                    let brute = decorated_count(kind, &b(name), n).unwrap();
                    assert_eq!(
                        *s.coeff(n),
                        count_to_series(kind, n, &brute),
                        "{name} {kind} {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn specialised_forms_agree() {
        for kind in Kind::ALL {
            let general = closed_series(kind, &b("PreLie"), 8).unwrap();
            assert_eq!(prelie_closed(kind, 8), general, "{kind}");
            let lie = closed_series(kind, &b("Lie"), 8).unwrap();
            assert_eq!(lie_closed(kind, 8).unwrap(), lie, "{kind}");
            assert_eq!(closed_series(kind, &b("Cycle"), 8).unwrap(), lie);
        }
    }

    #[test]
    fn weighted_forms_match_brute_force() {
        for name in ["Comm", "PreLie", "Assoc"] {
            for kind in [Kind::Rooted, Kind::Hollow] {
                for n in 1..=4 {
                    let w = weighted_closed(kind, &b(name), n, false).unwrap();
                    assert_eq!(w, weighted_count(kind, &b(name), n, false).unwrap());
                }
            }
        }
        for kind in [Kind::Rooted, Kind::Hollow] {
            for n in 1..=4 {
                let w = weighted_closed(kind, &b("PreLie"), n, true).unwrap();
                assert_eq!(w, weighted_count(kind, &b("PreLie"), n, true).unwrap());
            }
        }
    }
}
