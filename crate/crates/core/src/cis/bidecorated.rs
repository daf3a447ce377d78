use super::{
    assoc, comm, cycle, sigma_assoc, sigma_lie, solve_fixed_point, Cis, CisEquation, CisExpr,
    Identity,
};
use crate::foundation::{IntPartition, TPoly};
use crate::{Error, Result};

/// Kinds of bi-decorated hypertrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BiKind {
    Ar,
    Br,
    Hollow,
    EdgePointed,
    RootedEdgePointed,
    Plain,
}

impl BiKind {
    pub const ALL: [BiKind; 6] = [
        BiKind::Ar,
        BiKind::Br,
        BiKind::Hollow,
        BiKind::EdgePointed,
        BiKind::RootedEdgePointed,
        BiKind::Plain,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BiKind::Ar => "ar",
            BiKind::Br => "br",
            BiKind::Hollow => "hollow",
            BiKind::EdgePointed => "edge_pointed",
            BiKind::RootedEdgePointed => "rooted_edge_pointed",
            BiKind::Plain => "plain",
        }
    }

    pub fn parse(s: &str) -> Result<BiKind> {
        BiKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidecoratedFamily {
    pub t_br: Cis,
    pub br: Cis,
    pub hollow: Cis,
    pub t_ar: Cis,
    pub ar: Cis,
    pub edge_pointed: Cis,
    pub rooted_edge_pointed: Cis,
    pub plain: Cis,
}

impl BidecoratedFamily {
    pub fn get(&self, kind: BiKind) -> &Cis {
        match kind {
            BiKind::Ar => &self.ar,
            BiKind::Br => &self.br,
            BiKind::Hollow => &self.hollow,
            BiKind::EdgePointed => &self.edge_pointed,
            BiKind::RootedEdgePointed => &self.rooted_edge_pointed,
            BiKind::Plain => &self.plain,
        }
    }
}

/// Series for edge decorations `se` and vertex decorations `sv`, both given to
/// degree at least `N + 1` since their derivatives enter the equations.
pub fn bidecorated_family(se: &Cis, sv: &Cis, max_degree: u32) -> Result<BidecoratedFamily> {
    let n = max_degree;
    let se1 = se.truncate(n + 1)?;
    let sv1 = sv.truncate(n + 1)?;
    let p = IntPartition::ones(1);
    if !sv1.constant_term().is_zero() || !sv1.coeff(&p).is_one() {
        return Err(Error::Invalid(
            "vertex species must have one structure on one label and none on the empty set".into(),
        ));
    }
    if !se1.constant_term().is_zero() || !se1.coeff(&p).is_zero() {
        return Err(Error::Invalid(
            "edge species must have no structure on fewer than two labels".into(),
        ));
    }
    let se_d = se1.derivative();
    let sv_d = sv1.derivative().sub(&Cis::one(n))?;
    let (se, sv) = (se1.truncate(n)?, sv1.truncate(n)?);
    let p1 = Cis::p1(n);
    let t = TPoly::t();
    let rhs = CisExpr::constant(p1.clone())
        + CisExpr::constant(p1.clone())
            * CisExpr::compose_into(
                sv_d,
                CisExpr::compose_into(se_d.clone(), CisExpr::unknown()).scale(t.clone()),
            );
    let t_br = solve_fixed_point(&CisEquation::new(rhs), n)?;
    let hollow = se_d.plethysm(&t_br)?;
    let t_ar = p1.add(&p1.mul(&sv.plethysm(&hollow.scale(&t))?)?)?;
    let edge_pointed = se.plethysm(&t_br)?;
    let rooted_edge_pointed = hollow.mul(&t_br)?;
    let inv_t = TPoly::t_pow(-1);
    let ar = t_ar.scale(&inv_t);
    let plain = ar.add(&edge_pointed)?.sub(&rooted_edge_pointed)?;
    Ok(BidecoratedFamily {
        br: t_br.scale(&inv_t),
        t_br,
        hollow,
        t_ar,
        ar,
        edge_pointed,
        rooted_edge_pointed,
        plain,
    })
}

pub fn bidecorated_cis(kind: BiKind, se: &Cis, sv: &Cis, max_degree: u32) -> Result<Cis> {
    Ok(bidecorated_family(se, sv, max_degree)?.get(kind).clone())
}

/// Cyclic hypertree series from their own equations.
#[derive(Clone, Debug)]
pub struct HacSeries {
    pub pa: Cis,
    pub yc: Cis,
    pub a: Cis,
    pub p: Cis,
    pub total: Cis,
}

/// `Z ↦ t⁻¹·p₁·(outer ∘ t·Comm ∘ (p₁ + c·t·Z))`.
fn pa_equation(outer: Cis, c: i64, n: u32) -> CisEquation {
    let p1 = Cis::p1(n);
    let inner = CisExpr::constant(p1.clone()) + CisExpr::unknown().scale(super::tmono(1, c));
    let rhs = CisExpr::constant(p1)
        * CisExpr::compose_into(
            outer,
            CisExpr::compose_into(comm(n), inner).scale(TPoly::t()),
        );
    CisEquation::new(rhs.scale(TPoly::t_pow(-1)))
}

pub fn hac_series(max_degree: u32) -> Result<HacSeries> {
    let n = max_degree;
    let p1 = Cis::p1(n);
    let t = TPoly::t();
    let pa = solve_fixed_point(&pa_equation(assoc(n), 1, n), n)?;
    let g = p1.add(&pa.scale(&t))?;
    let yc = comm(n).plethysm(&g)?;
    let a = comm(n).sub(&p1)?.plethysm(&g)?;
    let p = p1
        .mul(&cycle(n).plethysm(&yc.scale(&t))?)?
        .scale(&TPoly::t_pow(-1));
    let total = a.add(&p)?.sub(&pa)?;
    Ok(HacSeries {
        pa,
        yc,
        a,
        p,
        total,
    })
}

/// Hypertree poset series from their own equations.
#[derive(Clone, Debug)]
pub struct HalSeries {
    pub pa: Cis,
    pub a: Cis,
    pub p: Cis,
    pub total: Cis,
}

pub fn hal_series(max_degree: u32) -> Result<HalSeries> {
    let n = max_degree;
    let p1 = Cis::p1(n);
    let t = TPoly::t();
    let pa = solve_fixed_point(&pa_equation(sigma_assoc(n), -1, n), n)?;
    let g = p1.sub(&pa.scale(&t))?;
    let a = comm(n).sub(&p1)?.plethysm(&g)?;
    let inner = comm(n).plethysm(&g)?.scale(&t);
    let p = p1
        .mul(&sigma_lie(n).plethysm(&inner)?)?
        .scale(&TPoly::t_pow(-1));
    let total = a.add(&p)?.sub(&pa)?;
    Ok(HalSeries { pa, a, p, total })
}

fn edge_series(n: u32) -> Result<Cis> {
    comm(n + 1).sub(&Cis::p1(n + 1))
}

/// The comparison between cyclic hypertrees and bi-decorated hypertrees with
/// `Se = Comm − X`, `Sv = Cycle`.
pub fn hac_relations(max_degree: u32) -> Result<Vec<Identity>> {
    let n = max_degree;
    let h = hac_series(n)?;
    let b = bidecorated_family(&edge_series(n)?, &cycle(n + 1), n)?;
    let p1 = Cis::p1(n);
    let x_t = p1.scale(&TPoly::t_pow(-1));
    Ok(vec![
        Identity::new("HAC^a = H^e", h.a, b.edge_pointed),
        Identity::new(
            "X + t HAC^pa = t H^Br",
            p1.add(&h.pa.scale(&TPoly::t()))?,
            b.t_br,
        ),
        Identity::new("YC = H^h", h.yc, b.hollow),
        Identity::new("HAC^pa = H^re", h.pa, b.rooted_edge_pointed),
        Identity::new("HAC^p = H^Ar - t^-1 X", h.p.clone(), b.ar.sub(&x_t)?),
        Identity::informational("HAC^p = t^-1 X + H^Ar", h.p, b.ar.add(&x_t)?),
        Identity::new("HAC = H - t^-1 X", h.total, b.plain.sub(&x_t)?),
    ])
}

/// The comparison between the hypertree poset series and bi-decorated
/// hypertrees with `Se = Comm − X`, `Sv = ΣLie`.
pub fn hal_relations(max_degree: u32) -> Result<Vec<Identity>> {
    let n = max_degree;
    let h = hal_series(n)?;
    let b = bidecorated_family(&edge_series(n)?, &sigma_lie(n + 1), n)?;
    let p1 = Cis::p1(n);
    let x_t = p1.scale(&TPoly::t_pow(-1));
    Ok(vec![
        Identity::new(
            "p1 - t HAL^pa = t H^Br",
            p1.sub(&h.pa.scale(&TPoly::t()))?,
            b.t_br,
        ),
        Identity::new("HAL^a = H^e", h.a, b.edge_pointed),
        Identity::new("HAL^pa = H^re", h.pa, b.rooted_edge_pointed),
        Identity::new("HAL^p = H^Ar - t^-1 p1", h.p.clone(), b.ar.sub(&x_t)?),
        Identity::informational("HAL^p = t^-1 p1 + H^Ar", h.p, b.ar.add(&x_t)?),
        Identity::new("HAL = H - t^-1 p1", h.total.clone(), b.plain.sub(&x_t)?),
        Identity::informational("HAL = t^-1 p1 + H", h.total, b.plain.add(&x_t)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cis::{decorated_cis, Cis};
    use crate::hypertree::Kind;
    use crate::species::{BlockSpecies, SpeciesName};

    #[test]
    fn comm_vertices_reduce_to_edge_decorations() {
        let n = 5;
        let fam = bidecorated_family(&edge_series(n).unwrap(), &comm(n + 1), n).unwrap();
        let b = BlockSpecies::new(SpeciesName::Comm);
        for (bk, k) in [
            (BiKind::Ar, Kind::Rooted),
            (BiKind::Br, Kind::Rooted),
            (BiKind::Hollow, Kind::Hollow),
            (BiKind::EdgePointed, Kind::EdgePointed),
            (BiKind::RootedEdgePointed, Kind::RootedEdgePointed),
            (BiKind::Plain, Kind::Plain),
        ] {
            assert_eq!(fam.get(bk), &decorated_cis(k, &b, n).unwrap(), "{bk:?}");
        }
    }

    #[test]
    fn hac_and_hal_relations() {
        for id in hac_relations(5)
            .unwrap()
            .into_iter()
            .chain(hal_relations(5).unwrap())
        {
            if id.asserted {
                assert!(id.holds(), "{}: {:?}", id.name, id.first_difference());
            }
        }
    }

    #[test]
    fn constraint_violations() {
        let n = 3;
        let r = bidecorated_family(&comm(n + 1), &cycle(n + 1), n);
        assert!(matches!(r, Err(Error::Invalid(_))));
        let r = bidecorated_family(&edge_series(n).unwrap(), &Cis::p(n + 1, 2), n);
        assert!(matches!(r, Err(Error::Invalid(_))));
    }
}
