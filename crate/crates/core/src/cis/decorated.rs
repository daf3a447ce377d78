use super::{antiderivative, comm, solve_fixed_point, species_cis, Cis, CisEquation, CisExpr};
use crate::foundation::TPoly;
use crate::hypertree::Kind;
use crate::species::BlockSpecies;
use crate::{Error, Result};

/// The cycle index series of every kind of `B`-decorated hypertree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedFamily {
    /// `R = t·H^r`, the solution of `R = p₁ + p₁·Comm ∘ (w·B ∘ R)`.
    pub t_rooted: Cis,
    pub rooted: Cis,
    pub hollow: Cis,
    pub rooted_edge_pointed: Cis,
    /// Present when an antiderivative of `B` was supplied.
    pub edge_pointed: Option<Cis>,
    pub plain: Option<Cis>,
}

impl DecoratedFamily {
    pub fn get(&self, kind: Kind) -> Result<&Cis> {
        let missing = || Error::MissingAntiderivative("the block species".into());
        Ok(match kind {
            Kind::Rooted => &self.rooted,
            Kind::Hollow => &self.hollow,
            Kind::RootedEdgePointed => &self.rooted_edge_pointed,
            Kind::EdgePointed => self.edge_pointed.as_ref().ok_or_else(missing)?,
            Kind::Plain => self.plain.as_ref().ok_or_else(missing)?,
        })
    }
}

/// Solves for all kinds from the block series `b = S′`, an optional `s = S`,
/// and the weight `w` of an edge (the usual grading is `w = t`).
pub fn decorated_family(
    b: &Cis,
    s: Option<&Cis>,
    w: &TPoly,
    max_degree: u32,
) -> Result<DecoratedFamily> {
    let n = max_degree;
    let b = b.truncate(n)?;
    if !b.constant_term().is_zero() {
        return Err(Error::Unsupported(
            "block series with a constant term".into(),
        ));
    }
    let p1 = Cis::p1(n);
    let rhs = CisExpr::constant(p1.clone())
        + CisExpr::constant(p1)
            * CisExpr::compose_into(
                comm(n),
                CisExpr::compose_into(b.clone(), CisExpr::unknown()).scale(w.clone()),
            );
    let r = solve_fixed_point(&CisEquation::new(rhs), n)?;
    let rooted = r.scale(&TPoly::t_pow(-1));
    let hollow = b.plethysm(&r)?;
    let rooted_edge_pointed = hollow.mul(&r)?;
    let (edge_pointed, plain) = match s {
        Some(s) => {
            let e = s.truncate(n)?.plethysm(&r)?;
            let h = rooted.add(&e)?.sub(&rooted_edge_pointed)?;
            (Some(e), Some(h))
        }
        None => (None, None),
    };
    Ok(DecoratedFamily {
        t_rooted: r,
        rooted,
        hollow,
        rooted_edge_pointed,
        edge_pointed,
        plain,
    })
}

/// The cycle index series of `B`-decorated hypertrees of one kind. The one-vertex
/// plain and rooted structures weigh `t⁻¹`.
pub fn decorated_cis(kind: Kind, b: &BlockSpecies, max_degree: u32) -> Result<Cis> {
    let bc = species_cis(&b.0, max_degree);
    let s = match kind {
        Kind::EdgePointed | Kind::Plain => Some(antiderivative(b.name(), max_degree)?),
        _ => None,
    };
    let fam = decorated_family(&bc, s.as_ref(), &TPoly::t(), max_degree)?;
    Ok(fam.get(kind)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egf::{closed_series, count_to_series};
    use crate::foundation::{integer_partitions, IntPartition};
    use crate::hypertree::count_fixed_weighted;
    use crate::species::SpeciesName;

    #[test]
    fn hollow_prelie_degree_two() {
        let b = BlockSpecies::new(SpeciesName::PreLie);
        let h = decorated_cis(Kind::Hollow, &b, 2).unwrap();
        let want = TPoly::one() + TPoly::t();
        assert_eq!(
            h.homogeneous(2),
            Cis::monomial(2, IntPartition::ones(2), want)
        );
    }

    #[test]
    fn plain_comm_fixed_counts() {
        let b = BlockSpecies::new(SpeciesName::Comm);
        let h = decorated_cis(Kind::Plain, &b, 3).unwrap();
        assert_eq!(
            h.fixed_count(&IntPartition::new(vec![2, 1])).eval_one(),
            crate::foundation::rat_int(2)
        );
        assert_eq!(
            h.fixed_count(&IntPartition::new(vec![3])).eval_one(),
            crate::foundation::rat_int(1)
        );
    }

    #[test]
    fn fixed_counts_match_brute_force() {
        // plain and edge-pointed edges carry the species whose derivative is B
        let cases = [
            ("Comm", Some("Comm")),
            ("Assoc", Some("Cycle")),
            ("Cycle", None),
            ("Perm", None),
            ("PreLie", None),
        ];
        for (name, whole_edge) in cases {
            let b = BlockSpecies::parse(name).unwrap();
            for kind in Kind::ALL {
                let d = match kind {
                    Kind::Plain | Kind::EdgePointed => match whole_edge {
                        Some(s) => BlockSpecies::parse(s).unwrap().0,
                        None => continue,
                    },
                    _ => b.0,
                };
                let z = decorated_cis(kind, &b, 4).unwrap();
                for n in 1..=4 {
                    for l in integer_partitions(n) {
                        let want = count_fixed_weighted(kind, &l, Some(&d)).unwrap();
                        assert_eq!(
                            z.fixed_count(&l),
                            count_to_series(kind, n, &want),
                            "{name} {kind:?} {l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn specialisation_matches_closed_series() {
        for name in ["Comm", "Assoc", "PreLie", "Lie"] {
            let b = BlockSpecies::parse(name).unwrap();
            for kind in Kind::ALL {
                let z = decorated_cis(kind, &b, 6).unwrap();
                assert_eq!(
                    z.egf(),
                    closed_series(kind, &b, 6).unwrap(),
                    "{name} {kind:?}"
                );
            }
        }
    }

    #[test]
    fn cycle_has_no_edge_pointed_series() {
        let b = BlockSpecies::new(SpeciesName::Cycle);
        assert!(decorated_cis(Kind::Rooted, &b, 3).is_ok());
        assert!(matches!(
            decorated_cis(Kind::Plain, &b, 3),
            Err(Error::MissingAntiderivative(_))
        ));
    }
}
