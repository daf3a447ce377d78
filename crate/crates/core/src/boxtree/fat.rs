use std::collections::VecDeque;
use std::fmt;

use crate::foundation::{set_partitions, SetPartition};
use crate::hypertree::{elems_mask, DecoratedHypertree, Hypertree, Kind, Variant, GAP};
use crate::species::Decoration;
use crate::{Error, Result};

/// Boxes of labels joined by label-to-label edges into a tree, with a root label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedFatTree {
    blocks: SetPartition,
    edges: Vec<(u32, u32)>,
    root: u32,
}

impl RootedFatTree {
    pub fn new(blocks: SetPartition, edges: Vec<(u32, u32)>, root: u32) -> Result<Self> {
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        let ft = RootedFatTree {
            blocks,
            edges,
            root,
        };
        if !ft.is_valid() {
            return Err(Error::Invalid(format!("not a rooted fat tree: {ft}")));
        }
        Ok(ft)
    }

    pub fn blocks(&self) -> &SetPartition {
        &self.blocks
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    /// Edges join distinct boxes and the boxes with these edges form a tree.
    pub fn is_valid(&self) -> bool {
        let k = self.blocks.num_blocks();
        if self.blocks.block_of(self.root).is_none() || self.edges.len() + 1 != k {
            return false;
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            match (self.blocks.block_of(a), self.blocks.block_of(b)) {
                (Some(x), Some(y)) if x != y => {
                    adj[x].push(y);
                    adj[y].push(x);
                }
                _ => return false,
            }
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// For each non-root box, the edge `(end, petiole)` joining it towards the root.
    fn oriented(&self) -> Vec<(usize, u32, u32)> {
        let k = self.blocks.num_blocks();
        let root_box = self.blocks.block_of(self.root).unwrap();
        let mut seen = vec![false; k];
        seen[root_box] = true;
        let mut queue = VecDeque::from([root_box]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let (ba, bb) = (
                    self.blocks.block_of(a).unwrap(),
                    self.blocks.block_of(b).unwrap(),
                );
                let (near, far, pet, end) = if ba == x {
                    (ba, bb, a, b)
                } else {
                    (bb, ba, b, a)
                };
                if near == x && !seen[far] {
                    seen[far] = true;
                    out.push((far, end, pet));
                    queue.push_back(far);
                }
            }
        }
        out
    }
}

impl fmt::Display for RootedFatTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{} ; {} ; root={}", self.blocks, es.join(","), self.root)
    }
}

/// Rooted fat trees on `{1..n}` by brute force over box partitions and edge sets.
pub fn enumerate_rooted_fat_trees(n: u32) -> Vec<RootedFatTree> {
    let labels: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    for p in set_partitions(&labels, None) {
        let k = p.num_blocks();
        let cross: Vec<(u32, u32)> = labels
            .iter()
            .flat_map(|&a| labels.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a < b && p.block_of(a) != p.block_of(b))
            .collect();
        for subset in combinations(cross.len(), k - 1) {
            let edges: Vec<(u32, u32)> = subset.iter().map(|&i| cross[i]).collect();
            for &r in &labels {
                if let Ok(ft) = RootedFatTree::new(p.clone(), edges.clone(), r) {
                    out.push(ft);
                }
            }
        }
    }
    out.sort();
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn pointed(d: &Decoration) -> Result<(Vec<u32>, u32)> {
    match d {
        Decoration::Pointed { set, point } => Ok((set.clone(), *point)),
        _ => Err(Error::Invalid(format!("expected a pointed set, got {d}"))),
    }
}

/// A hollow hypertree whose edges carry pointed sets, as a rooted fat tree.
pub fn hollow_to_fat(h: &DecoratedHypertree) -> Result<RootedFatTree> {
    let v = &h.variant;
    if v.kind() != Kind::Hollow {
        return Err(Error::Invalid("expected a hollow hypertree".into()));
    }
    let pet = v.petioles().unwrap();
    let mut blocks = Vec::new();
    let mut edges = Vec::new();
    let mut root = None;
    for (i, d) in h.decorations.iter().enumerate() {
        let (set, point) = pointed(d)?;
        blocks.push(set);
        if pet[i] == GAP {
            root = Some(point);
        } else {
            edges.push((point, pet[i]));
        }
    }
    RootedFatTree::new(SetPartition::new(blocks), edges, root.unwrap())
}

pub fn fat_to_hollow(ft: &RootedFatTree) -> Result<DecoratedHypertree> {
    let g = ft.blocks.ground();
    let n = g.len() as u32;
    if g != (1..=n).collect::<Vec<_>>() {
        return Err(Error::Invalid("fat tree labels must be 1..n".into()));
    }
    let root_box = ft.blocks.block_of(ft.root).unwrap();
    let boxes = ft.blocks.blocks();
    let mut edges = vec![(
        elems_mask(&boxes[root_box]) | 1 << GAP,
        Decoration::Pointed {
            set: boxes[root_box].clone(),
            point: ft.root,
        },
    )];
    for (b, end, pet) in ft.oriented() {
        edges.push((
            elems_mask(&boxes[b]) | 1 << pet,
            Decoration::Pointed {
                set: boxes[b].clone(),
                point: end,
            },
        ));
    }
    let tree = Hypertree::from_masks(n, true, edges.iter().map(|e| e.0).collect());
    let mut decorations = vec![None; edges.len()];
    for (m, d) in edges {
        decorations[tree.edge_index(m).unwrap()] = Some(d);
    }
    let variant = Variant::new(Kind::Hollow, tree, None, None)?;
    Ok(DecoratedHypertree {
        variant,
        decorations: decorations.into_iter().map(Option::unwrap).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypertree::enumerate_decorated;
    use crate::species::builtin_species;

    #[test]
    fn bijection_on_all_small_structures() {
        let perm = builtin_species("Perm").unwrap();
        for n in 1..=4 {
            let hs = enumerate_decorated(Kind::Hollow, n, &perm).unwrap();
            let mut fts: Vec<RootedFatTree> =
                hs.iter().map(|h| hollow_to_fat(h).unwrap()).collect();
            for (h, ft) in hs.iter().zip(&fts) {
                assert_eq!(&fat_to_hollow(ft).unwrap(), h);
            }
            fts.sort();
            assert_eq!(fts, enumerate_rooted_fat_trees(n));
        }
        assert_eq!(enumerate_rooted_fat_trees(2).len(), 4);
    }
}
