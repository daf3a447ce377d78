use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;

use super::{mask_elems, sort_edges, Hypertree, Kind, Variant, GAP};
use crate::{Error, Result};

/// Largest `n` accepted by the brute-force enumerators unless overridden.
pub const DEFAULT_LIMIT: u32 = 7;

/// Grows hypertrees covering `full` from `start`, one edge at a time.
/// When `sealed` is set, `start` may only be used by the first edge.
fn grow(full: u32, start: u32, sealed: bool) -> Vec<Vec<u32>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut frontier: Vec<(u32, Vec<u32>)> = vec![(1 << start, Vec::new())];
    let mut done = Vec::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (covered, edges) in frontier {
            if covered == full {
                done.push(edges);
                continue;
            }
            let rest = full & !covered;
            for v in mask_elems(covered) {
                if sealed && v == start && !edges.is_empty() {
                    continue;
                }
                // nonempty submasks of `rest`
                let mut s = rest;
                while s != 0 {
                    let mut e = edges.clone();
                    e.push(s | 1 << v);
                    e.sort_unstable();
                    if seen.insert(e.clone()) {
                        next.push((covered | s, e));
                    }
                    s = (s - 1) & rest;
                }
            }
        }
        frontier = next;
    }
    done
}

fn labels_mask(n: u32) -> u32 {
    ((1u64 << (n + 1)) - 2) as u32
}

/// Plain hypertrees on `{1..n}` (`gap = false`) or hollow ones, in canonical order.
fn base_trees(n: u32, hollow: bool) -> Vec<Hypertree> {
    if n == 0 {
        return Vec::new();
    }
    let (full, start) = if hollow {
        (labels_mask(n) | 1 << GAP, GAP)
    } else {
        (labels_mask(n), 1)
    };
    let mut trees: Vec<Hypertree> = grow(full, start, hollow)
        .into_iter()
        .map(|mut e| {
            sort_edges(&mut e);
            Hypertree {
                n,
                gap: hollow,
                edges: e,
            }
        })
        .collect();
    trees.sort_by_cached_key(|h| h.edges());
    trees
}

pub(crate) fn check_limit(n: u32, limit: u32) -> Result<()> {
    if n > limit {
        return Err(Error::OverLimit { n, limit });
    }
    Ok(())
}

/// All structures of the given kind on `{1..n}`, in canonical order.
pub fn enumerate(kind: Kind, n: u32) -> Result<Vec<Variant>> {
    enumerate_with_limit(kind, n, DEFAULT_LIMIT)
}

pub fn enumerate_with_limit(kind: Kind, n: u32, limit: u32) -> Result<Vec<Variant>> {
    check_limit(n, limit)?;
    let trees = base_trees(n, kind == Kind::Hollow);
    let mut out = Vec::new();
    for h in trees {
        match kind {
            Kind::Plain | Kind::Hollow => out.push(Variant::new_unchecked(kind, h, None, None)),
            Kind::Rooted => {
                for r in 1..=n {
                    out.push(Variant::new_unchecked(kind, h.clone(), Some(r), None));
                }
            }
            Kind::EdgePointed => {
                for e in 0..h.num_edges() {
                    out.push(Variant::new_unchecked(kind, h.clone(), None, Some(e)));
                }
            }
            Kind::RootedEdgePointed => {
                for e in 0..h.num_edges() {
                    for r in mask_elems(h.edges[e]) {
                        out.push(Variant::new_unchecked(kind, h.clone(), Some(r), Some(e)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Number of structures on `{1..n}` grouped by edge count.
pub fn count_by_edges(kind: Kind, n: u32) -> Result<BTreeMap<usize, BigInt>> {
    let mut m = BTreeMap::new();
    for v in enumerate(kind, n)? {
        *m.entry(v.num_edges()).or_insert_with(|| BigInt::from(0)) += 1;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::stirling_second;

    fn totals(kind: Kind, n: u32) -> u64 {
        enumerate(kind, n).unwrap().len() as u64
    }

    #[test]
    fn plain_counts() {
        let want = [1u64, 1, 4, 29, 311, 4447];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(totals(Kind::Plain, i as u32 + 1), w);
        }
    }

    #[test]
    fn rooted_counts_by_edges_match_formula() {
        for n in 1..=5 {
            assert_eq!(totals(Kind::Rooted, n), n as u64 * totals(Kind::Plain, n));
        }
        let m = count_by_edges(Kind::Rooted, 3).unwrap();
        assert_eq!(m[&1], BigInt::from(3));
        assert_eq!(m[&2], BigInt::from(9));
    }

    #[test]
    fn hollow_counts_by_edges() {
        // hollow structures with k edges: S(n, k) n^{k-1}
        for n in 1..=5u32 {
            let m = count_by_edges(Kind::Hollow, n).unwrap();
            for (&k, c) in &m {
                let want =
                    stirling_second(n as u64, k as u64) * num_traits::pow(BigInt::from(n), k - 1);
                assert_eq!(*c, want, "n={n} k={k}");
            }
        }
        assert_eq!(totals(Kind::Hollow, 1), 1);
        assert_eq!(totals(Kind::Hollow, 2), 3);
    }

    #[test]
    fn every_enumerated_structure_is_valid_and_distinct() {
        for kind in Kind::ALL {
            for n in 1..=4 {
                let all = enumerate(kind, n).unwrap();
                let texts: HashSet<String> = all.iter().map(|v| v.to_text()).collect();
                assert_eq!(texts.len(), all.len());
                for v in &all {
                    assert_eq!(&Variant::from_text(kind, &v.to_text()).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn limit() {
        assert!(matches!(
            enumerate(Kind::Plain, 8),
            Err(Error::OverLimit { n: 8, limit: 7 })
        ));
        assert!(enumerate_with_limit(Kind::Plain, 3, 3).is_ok());
    }
}
