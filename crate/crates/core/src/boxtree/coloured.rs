use std::collections::BTreeMap;
use std::fmt;

use crate::hypertree::{elems_mask, DecoratedHypertree, Hypertree, Kind, Variant, GAP};
use crate::species::{rooted_trees, Decoration};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Blue,
    Red,
}

/// Vertices of a blue component and its blue `(child, parent)` pairs.
type BlueComponent = (Vec<u32>, Vec<(u32, u32)>);

/// Rooted tree on `{1..n}` with blue and red edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoColouredRootedTree {
    n: u32,
    root: u32,
    /// `(child, parent, colour)`, sorted by child.
    parent: Vec<(u32, u32, Colour)>,
}

impl TwoColouredRootedTree {
    pub fn new(n: u32, root: u32, mut parent: Vec<(u32, u32, Colour)>) -> Result<Self> {
        parent.sort_unstable();
        let t = TwoColouredRootedTree { n, root, parent };
        if !t.is_valid() {
            return Err(Error::Invalid(format!("not a rooted tree: {t}")));
        }
        Ok(t)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn edges(&self) -> &[(u32, u32, Colour)] {
        &self.parent
    }

    pub fn red_edges(&self) -> usize {
        self.parent.iter().filter(|e| e.2 == Colour::Red).count()
    }

    fn parent_of(&self, v: u32) -> Option<(u32, Colour)> {
        self.parent.iter().find(|e| e.0 == v).map(|e| (e.1, e.2))
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n;
        if !(1..=n).contains(&self.root) || self.parent.len() + 1 != n as usize {
            return false;
        }
        let children: Vec<u32> = self.parent.iter().map(|e| e.0).collect();
        let expected: Vec<u32> = (1..=n).filter(|&v| v != self.root).collect();
        if children != expected || self.parent.iter().any(|e| !(1..=n).contains(&e.1)) {
            return false;
        }
        (1..=n).all(|v| {
            let mut x = v;
            for _ in 0..n {
                if x == self.root {
                    return true;
                }
                x = self.parent_of(x).unwrap().0;
            }
            x == self.root
        })
    }

    /// Top of the blue component of `v`: climb blue edges as far as possible.
    fn top(&self, v: u32) -> u32 {
        let mut x = v;
        while let Some((p, Colour::Blue)) = self.parent_of(x) {
            x = p;
        }
        x
    }

    /// Blue components keyed by their top vertex, with the blue parent pairs inside.
    fn blue_components(&self) -> BTreeMap<u32, BlueComponent> {
        let mut comps: BTreeMap<u32, BlueComponent> = BTreeMap::new();
        for v in 1..=self.n {
            let c = comps.entry(self.top(v)).or_default();
            c.0.push(v);
            if let Some((p, Colour::Blue)) = self.parent_of(v) {
                c.1.push((v, p));
            }
        }
        comps
    }
}

impl fmt::Display for TwoColouredRootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self
            .parent
            .iter()
            .map(|&(c, p, col)| {
                let tag = if col == Colour::Red { "r" } else { "b" };
                format!("{c}>{p}{tag}")
            })
            .collect();
        write!(f, "root={} {}", self.root, es.join(","))
    }
}

/// All 2-coloured rooted trees on `{1..n}`.
pub fn enumerate_two_coloured_trees(n: u32) -> Vec<TwoColouredRootedTree> {
    let labels: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    for (root, parent) in rooted_trees(&labels) {
        let m = parent.len();
        for mask in 0..(1u32 << m) {
            let p = parent
                .iter()
                .enumerate()
                .map(|(i, &(c, q))| {
                    let col = if mask >> i & 1 == 1 {
                        Colour::Red
                    } else {
                        Colour::Blue
                    };
                    (c, q, col)
                })
                .collect();
            out.push(TwoColouredRootedTree { n, root, parent: p });
        }
    }
    out.sort();
    out
}

fn tree_decoration(d: &Decoration) -> Result<(u32, Vec<(u32, u32)>)> {
    match d {
        Decoration::RootedTree { root, parent } => Ok((*root, parent.clone())),
        _ => Err(Error::Invalid(format!("expected a rooted tree, got {d}"))),
    }
}

fn build(
    kind: Kind,
    n: u32,
    root: Option<u32>,
    pointed: Option<u32>,
    edges: Vec<(u32, Decoration)>,
) -> Result<DecoratedHypertree> {
    let tree = Hypertree::from_masks(n, kind == Kind::Hollow, edges.iter().map(|e| e.0).collect());
    let mut decorations = vec![None; edges.len()];
    for (m, d) in edges {
        let i = tree
            .edge_index(m)
            .ok_or_else(|| Error::Invalid("repeated edge".into()))?;
        decorations[i] = Some(d);
    }
    let edge = pointed.map(|m| tree.edge_index(m).unwrap());
    let variant = Variant::new(kind, tree, root, edge)?;
    Ok(DecoratedHypertree {
        variant,
        decorations: decorations.into_iter().map(Option::unwrap).collect(),
    })
}

/// Blue edges inside each decorating tree, red edges from each petiole to the
/// root of the tree of its edge; rooted at the root of the hollow edge's tree.
pub fn hollow_to_two_coloured(h: &DecoratedHypertree) -> Result<TwoColouredRootedTree> {
    let v = &h.variant;
    if v.kind() != Kind::Hollow {
        return Err(Error::Invalid("expected a hollow hypertree".into()));
    }
    let pet = v.petioles().unwrap();
    let mut parent = Vec::new();
    let mut root = None;
    for (i, d) in h.decorations.iter().enumerate() {
        let (r, inner) = tree_decoration(d)?;
        parent.extend(inner.into_iter().map(|(c, p)| (c, p, Colour::Blue)));
        if pet[i] == GAP {
            root = Some(r);
        } else {
            parent.push((r, pet[i], Colour::Red));
        }
    }
    TwoColouredRootedTree::new(v.n(), root.unwrap(), parent)
}

pub fn two_coloured_to_hollow(t: &TwoColouredRootedTree) -> Result<DecoratedHypertree> {
    let mut edges = Vec::new();
    for (top, (verts, blue)) in t.blue_components() {
        let d = Decoration::rooted_tree(top, blue);
        let attach = match t.parent_of(top) {
            None => GAP,
            Some((p, _)) => p,
        };
        edges.push((elems_mask(&verts) | 1 << attach, d));
    }
    build(Kind::Hollow, t.n, None, None, edges)
}

/// The root joins the tree of the pointed edge by a blue edge; other petioles
/// join the roots of their trees by red edges.
pub fn rooted_edge_pointed_to_two_coloured(
    h: &DecoratedHypertree,
) -> Result<TwoColouredRootedTree> {
    let v = &h.variant;
    if v.kind() != Kind::RootedEdgePointed {
        return Err(Error::Invalid(
            "expected a rooted edge-pointed hypertree".into(),
        ));
    }
    let pet = v.petioles().unwrap();
    let pointed = v.pointed_edge().unwrap();
    let mut parent = Vec::new();
    for (i, d) in h.decorations.iter().enumerate() {
        let (r, inner) = tree_decoration(d)?;
        parent.extend(inner.into_iter().map(|(c, p)| (c, p, Colour::Blue)));
        let col = if i == pointed {
            Colour::Blue
        } else {
            Colour::Red
        };
        parent.push((r, pet[i], col));
    }
    TwoColouredRootedTree::new(v.n(), v.root().unwrap(), parent)
}

pub fn two_coloured_to_rooted_edge_pointed(
    t: &TwoColouredRootedTree,
) -> Result<DecoratedHypertree> {
    let blue_children: Vec<u32> = t
        .parent
        .iter()
        .filter(|e| e.1 == t.root && e.2 == Colour::Blue)
        .map(|e| e.0)
        .collect();
    if blue_children.len() != 1 {
        return Err(Error::Invalid(format!(
            "root must have exactly one blue child, found {}",
            blue_children.len()
        )));
    }
    let c = blue_children[0];
    let mut edges = Vec::new();
    let mut pointed = None;
    for (top, (verts, blue)) in t.blue_components() {
        if top == t.root {
            // drop the root and its blue edge; what remains hangs from c
            let rest: Vec<u32> = verts.into_iter().filter(|&v| v != t.root).collect();
            let inner: Vec<(u32, u32)> = blue.into_iter().filter(|e| e.0 != c).collect();
            let m = elems_mask(&rest) | 1 << t.root;
            pointed = Some(m);
            edges.push((m, Decoration::rooted_tree(c, inner)));
        } else {
            let (p, _) = t.parent_of(top).unwrap();
            edges.push((
                elems_mask(&verts) | 1 << p,
                Decoration::rooted_tree(top, blue),
            ));
        }
    }
    build(Kind::RootedEdgePointed, t.n, Some(t.root), pointed, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypertree::enumerate_decorated;
    use crate::species::builtin_species;

    #[test]
    fn hollow_bijection() {
        let prelie = builtin_species("PreLie").unwrap();
        for n in 1..=4u32 {
            let hs = enumerate_decorated(Kind::Hollow, n, &prelie).unwrap();
            let mut ts = Vec::new();
            for h in &hs {
                let t = hollow_to_two_coloured(h).unwrap();
                assert_eq!(t.red_edges() + 1, h.variant.num_edges());
                assert_eq!(&two_coloured_to_hollow(&t).unwrap(), h);
                ts.push(t);
            }
            ts.sort();
            assert_eq!(ts, enumerate_two_coloured_trees(n));
            assert_eq!(ts.len() as u64, (2 * n as u64).pow(n - 1));
        }
    }

    #[test]
    fn rooted_edge_pointed_bijection() {
        let prelie = builtin_species("PreLie").unwrap();
        for n in 2..=4u32 {
            let hs = enumerate_decorated(Kind::RootedEdgePointed, n, &prelie).unwrap();
            let mut ts = Vec::new();
            for h in &hs {
                let t = rooted_edge_pointed_to_two_coloured(h).unwrap();
                assert_eq!(t.red_edges() + 1, h.variant.num_edges());
                assert_eq!(&two_coloured_to_rooted_edge_pointed(&t).unwrap(), h);
                ts.push(t);
            }
            ts.sort();
            let want: Vec<_> = enumerate_two_coloured_trees(n)
                .into_iter()
                .filter(|t| two_coloured_to_rooted_edge_pointed(t).is_ok())
                .collect();
            assert_eq!(ts, want);
        }
    }

    #[test]
    fn rejects_wrong_blue_degree() {
        let t = TwoColouredRootedTree::new(2, 1, vec![(2, 1, Colour::Red)]).unwrap();
        assert!(two_coloured_to_rooted_edge_pointed(&t).is_err());
    }
}
