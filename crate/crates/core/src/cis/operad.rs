use super::{decorated_family, e, lie, pasc, plethystic_inverse, prelie, sigma_lie, Cis};
use crate::foundation::{IntPartition, TPoly};
use crate::Result;

/// A claimed equality of two series. Identities that are not `asserted` are
/// reported for information only.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub lhs: Cis,
    pub rhs: Cis,
    pub asserted: bool,
}

impl Identity {
    pub fn new(name: &str, lhs: Cis, rhs: Cis) -> Self {
        Identity {
            name: name.to_string(),
            lhs,
            rhs,
            asserted: true,
        }
    }

    pub fn informational(name: &str, lhs: Cis, rhs: Cis) -> Self {
        Identity {
            asserted: false,
            ..Identity::new(name, lhs, rhs)
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// The smallest partition where the two sides differ, with both coefficients.
    pub fn first_difference(&self) -> Option<(IntPartition, TPoly, TPoly)> {
        let mut keys: Vec<&IntPartition> = self
            .lhs
            .terms()
            .chain(self.rhs.terms())
            .map(|(l, _)| l)
            .collect();
        keys.sort();
        keys.into_iter()
            .find(|l| self.lhs.coeff(l) != self.rhs.coeff(l))
            .map(|l| (l.clone(), self.lhs.coeff(l), self.rhs.coeff(l)))
    }
}

/// `Λ`, the plethystic inverse of `Σ Pasc`.
pub fn lambda_cis(max_degree: u32) -> Result<Cis> {
    plethystic_inverse(&pasc(max_degree).suspension(false), max_degree)
}

/// The identities between PreLie, Pasc, `Λ`, Lie and `ΣLie`.
pub fn operad_identities(max_degree: u32) -> Result<Vec<Identity>> {
    let n = max_degree;
    let p1 = Cis::p1(n);
    let t = TPoly::t();
    let mut out = Vec::new();

    let outer = p1.mul(&e(n))?.neg();
    out.push(Identity::new(
        "(-p1(1+Comm)) o (-PreLie) = p1",
        outer.plethysm(&prelie(n).neg())?,
        p1.clone(),
    ));

    let sp = pasc(n).suspension(false);
    let lam = lambda_cis(n)?;
    out.push(Identity::new(
        "SigmaPasc o Lambda = p1",
        sp.plethysm(&lam)?,
        p1.clone(),
    ));
    out.push(Identity::new(
        "Lambda o SigmaPasc = p1",
        lam.plethysm(&sp)?,
        p1.clone(),
    ));

    let hollow_lie = decorated_family(&lie(n), None, &t, n)?.hollow;
    let hollow_sl = decorated_family(&sigma_lie(n), None, &t, n)?.hollow;
    let hollow_sl_neg = decorated_family(&sigma_lie(n), None, &-t.clone(), n)?.hollow;
    out.push(Identity::new(
        "Z^h_Lie(t) = Sigma Z^h_SigmaLie(-t), edge weight -t",
        hollow_lie.clone(),
        hollow_sl_neg.suspension(false),
    ));
    out.push(Identity::informational(
        "Z^h_Lie(t) = Sigma Z^h_SigmaLie(-t), coefficients at -t",
        hollow_lie,
        hollow_sl.negate_t().suspension(false),
    ));
    let lam_inv = lam.invert_t();
    out.push(Identity::new(
        "Z^h_SigmaLie = t^-1 Lambda(t^-1, t^i p_i)",
        hollow_sl.clone(),
        lam_inv.grade(1).scale(&TPoly::t_pow(-1)),
    ));
    out.push(Identity::new(
        "Z^h_SigmaLie = Sigma Sigma_t Lambda(t^-1, p)",
        hollow_sl,
        lam_inv.suspension(true).suspension(false),
    ));
    Ok(out)
}

/// Both `ΣLie` relations: with Lie, and with `Λ`.
pub fn sigma_lie_relation_check(max_degree: u32) -> Result<bool> {
    Ok(operad_identities(max_degree)?
        .iter()
        .filter(|i| i.asserted && i.name.starts_with("Z^h"))
        .all(Identity::holds))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_asserted_identities_hold() {
        for id in operad_identities(5).unwrap() {
            if id.asserted {
                assert!(id.holds(), "{}: {:?}", id.name, id.first_difference());
            }
        }
        assert!(sigma_lie_relation_check(4).unwrap());
    }

    #[test]
    fn degree_one() {
        let lam = lambda_cis(1).unwrap();
        assert_eq!(lam, Cis::p1(1));
    }
}
