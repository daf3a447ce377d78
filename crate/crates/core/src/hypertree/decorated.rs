use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::enumerate::{check_limit, enumerate_with_limit};
use super::{Kind, Variant, GAP};
use crate::foundation::{IntPartition, MultiPoly, Permutation, TPoly};
use crate::species::{BlockSpecies, Decoration, SpeciesHandle, SpeciesName};
use crate::{Error, Result};

/// Largest `n` for the decorated brute-force routines.
pub const DECORATED_LIMIT: u32 = 6;

/// A structure together with one decoration per edge (in canonical edge order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedHypertree {
    pub variant: Variant,
    pub decorations: Vec<Decoration>,
}

impl DecoratedHypertree {
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> DecoratedHypertree {
        let (variant, pos) = self.variant.relabel(&f);
        let mut decorations = self.decorations.clone();
        for (i, d) in self.decorations.iter().enumerate() {
            decorations[pos[i]] = d.relabel(&f);
        }
        DecoratedHypertree {
            variant,
            decorations,
        }
    }

    /// `∏ x_i^{p(i)} ∏ y_i^{s(i)}`, where `p(i)` counts edges with petiole `i` and
    /// `s(i)` counts children of `i` in tree-shaped decorations.
    pub fn monomial_exponents(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.variant.n() as usize;
        let mut xe = vec![0; n];
        let mut ye = vec![0; n];
        if let Some(pet) = self.variant.petioles() {
            for p in pet {
                if p != GAP {
                    xe[p as usize - 1] += 1;
                }
            }
        }
        for d in &self.decorations {
            for v in d.labels() {
                ye[v as usize - 1] += d.children_count(v);
            }
        }
        (xe, ye)
    }
}

impl std::fmt::Display for DecoratedHypertree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ds: Vec<String> = self.decorations.iter().map(|d| d.to_string()).collect();
        write!(f, "{} [{}]", self.variant, ds.join(" "))
    }
}

fn explicit(d: &SpeciesHandle, labels: &[u32]) -> Result<Vec<Decoration>> {
    d.enumerate(labels)
        .ok_or_else(|| Error::NotEnumerable(d.to_string()))
}

/// All `D`-decorated structures of the given kind. Edges of plain and
/// edge-pointed structures carry `D` on all their labels; the others carry it
/// on the labels other than the petiole.
pub fn enumerate_decorated(
    kind: Kind,
    n: u32,
    d: &SpeciesHandle,
) -> Result<Vec<DecoratedHypertree>> {
    check_limit(n, DECORATED_LIMIT)?;
    if !d.is_enumerable() {
        return Err(Error::NotEnumerable(d.to_string()));
    }
    let mut out = Vec::new();
    for v in enumerate_with_limit(kind, n, DECORATED_LIMIT)? {
        let choices: Vec<Vec<Decoration>> = v
            .decoration_label_sets()
            .iter()
            .map(|l| explicit(d, l))
            .collect::<Result<_>>()?;
        let mut acc: Vec<Vec<Decoration>> = vec![Vec::new()];
        for c in &choices {
            let mut next = Vec::with_capacity(acc.len() * c.len());
            for prefix in &acc {
                for x in c {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    next.push(p);
                }
            }
            acc = next;
        }
        for decorations in acc {
            out.push(DecoratedHypertree {
                variant: v.clone(),
                decorations,
            });
        }
    }
    Ok(out)
}

/// `Σ_H t^{max(k−1,0)} ∏_e B.dim(|e|−1)`.
pub fn decorated_count(kind: Kind, b: &BlockSpecies, n: u32) -> Result<TPoly> {
    let mut total = TPoly::zero();
    for v in enumerate_with_limit(kind, n, super::DEFAULT_LIMIT)? {
        let mut w = BigInt::one();
        for e in v.tree().edge_masks() {
            w *= b.dim(e.count_ones() - 1);
            if w.is_zero() {
                break;
            }
        }
        if !w.is_zero() {
            total.add_term(v.weight_exponent(), w.into());
        }
    }
    Ok(total)
}

/// `H + H^{re} = H^r + H^e` on `n` labels.
pub fn dissymmetry_check(n: u32, b: &BlockSpecies) -> Result<bool> {
    let c = |k| decorated_count(k, b, n);
    Ok(c(Kind::Plain)? + c(Kind::RootedEdgePointed)? == c(Kind::Rooted)? + c(Kind::EdgePointed)?)
}

/// Number of (decorated) structures fixed by a permutation of cycle type `λ`,
/// graded by `t^{max(k−1,0)}`.
pub fn count_fixed_weighted(
    kind: Kind,
    lambda: &IntPartition,
    d: Option<&SpeciesHandle>,
) -> Result<TPoly> {
    let n = lambda.weight();
    let limit = if d.is_some() {
        DECORATED_LIMIT
    } else {
        super::DEFAULT_LIMIT
    };
    check_limit(n, limit)?;
    if let Some(d) = d {
        if !d.is_enumerable() {
            return Err(Error::NotEnumerable(d.to_string()));
        }
    }
    let sigma = Permutation::canonical(lambda);
    let f = |x: u32| sigma.apply(x);
    let mut total = TPoly::zero();
    for v in enumerate_with_limit(kind, n, limit)? {
        let (image, pos) = v.relabel(f);
        if image != v {
            continue;
        }
        let count = match d {
            None => BigInt::one(),
            Some(d) => fixed_decorations(&v, &pos, d, &sigma)?,
        };
        if !count.is_zero() {
            total.add_term(v.weight_exponent(), count.into());
        }
    }
    Ok(total)
}

/// Decoration tuples fixed by `σ` on a `σ`-fixed structure. Along each cycle of
/// edges of length `c`, one decoration determines the rest and must be fixed by `σ^c`.
fn fixed_decorations(
    v: &Variant,
    pos: &[usize],
    d: &SpeciesHandle,
    sigma: &Permutation,
) -> Result<BigInt> {
    let labels = v.decoration_label_sets();
    let mut seen = vec![false; pos.len()];
    let mut count = BigInt::one();
    for start in 0..pos.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = pos[i];
            len += 1;
        }
        let power = sigma.pow(len);
        let fixed = explicit(d, &labels[start])?
            .iter()
            .filter(|s| s.relabel(|x| power.apply(x)) == **s)
            .count();
        count *= fixed;
        if count.is_zero() {
            break;
        }
    }
    Ok(count)
}

pub fn count_fixed(kind: Kind, lambda: &IntPartition, d: Option<&SpeciesHandle>) -> Result<BigInt> {
    let p = count_fixed_weighted(kind, lambda, d)?;
    Ok(p.eval_one().to_integer())
}

/// `Σ_H t^{max(k−1,0)} ∏ x_i^{p(i)}` (times `∏ y_i^{s(i)}` when `with_y`).
pub fn weighted_count(kind: Kind, b: &BlockSpecies, n: u32, with_y: bool) -> Result<MultiPoly> {
    if !matches!(kind, Kind::Rooted | Kind::Hollow) {
        return Err(Error::Invalid(format!("weighted count for {kind}")));
    }
    if with_y && b.name() != SpeciesName::PreLie {
        return Err(Error::Invalid(format!("y-weights need PreLie, got {b}")));
    }
    let nn = n as usize;
    let mut total = MultiPoly::zero(nn);
    if with_y {
        for s in enumerate_decorated(kind, n, &b.0)? {
            let (xe, ye) = s.monomial_exponents();
            total = total
                + MultiPoly::monomial(nn, &xe, &ye, TPoly::t_pow(s.variant.weight_exponent()));
        }
        return Ok(total);
    }
    check_limit(n, DECORATED_LIMIT)?;
    for v in enumerate_with_limit(kind, n, DECORATED_LIMIT)? {
        let mut w = BigInt::one();
        for e in v.tree().edge_masks() {
            w *= b.dim(e.count_ones() - 1);
        }
        if w.is_zero() {
            continue;
        }
        let s = DecoratedHypertree {
            variant: v.clone(),
            decorations: Vec::new(),
        };
        let (xe, _) = s.monomial_exponents();
        let c = TPoly::monomial(v.weight_exponent(), w.into());
        total = total + MultiPoly::monomial(nn, &xe, &vec![0; nn], c);
    }
    Ok(total)
}
