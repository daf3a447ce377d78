//! Hypertrees and their rooted, pointed and hollow variants.

mod decorated;
mod enumerate;

pub use decorated::{
    count_fixed, count_fixed_weighted, decorated_count, dissymmetry_check, enumerate_decorated,
    weighted_count, DecoratedHypertree,
};
pub use enumerate::{count_by_edges, enumerate, enumerate_with_limit, DEFAULT_LIMIT};

use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result};

/// The gap of a hollow hypertree is encoded as label 0.
pub const GAP: u32 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Plain,
    Rooted,
    EdgePointed,
    RootedEdgePointed,
    Hollow,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::Plain,
        Kind::Rooted,
        Kind::EdgePointed,
        Kind::RootedEdgePointed,
        Kind::Hollow,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Plain => "plain",
            Kind::Rooted => "rooted",
            Kind::EdgePointed => "edge_pointed",
            Kind::RootedEdgePointed => "rooted_edge_pointed",
            Kind::Hollow => "hollow",
        }
    }

    pub fn parse(s: &str) -> Result<Kind> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == norm)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }

    /// Whether edges are decorated on their non-petiole labels only.
    pub fn uses_petioles(&self) -> bool {
        matches!(self, Kind::Rooted | Kind::RootedEdgePointed | Kind::Hollow)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn mask_elems(m: u32) -> Vec<u32> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

pub(crate) fn elems_mask(v: &[u32]) -> u32 {
    v.iter().fold(0, |m, &i| m | 1 << i)
}

/// A hypertree on `{1..n}`, or on `{#} ∪ {1..n}` when `gap` is set.
///
/// Edges are bitmasks over labels, sorted by their ascending element lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypertree {
    n: u32,
    gap: bool,
    edges: Vec<u32>,
}

impl Hypertree {
    /// Canonicalizes and validates.
    pub fn new(n: u32, gap: bool, edges: Vec<Vec<u32>>) -> Result<Self> {
        let masks = edges.iter().map(|e| elems_mask(e)).collect();
        let h = Hypertree::from_masks(n, gap, masks);
        if !h.is_valid() {
            return Err(Error::Invalid(format!("not a hypertree: {h}")));
        }
        Ok(h)
    }

    pub(crate) fn from_masks(n: u32, gap: bool, mut edges: Vec<u32>) -> Self {
        sort_edges(&mut edges);
        Hypertree { n, gap, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_gap(&self) -> bool {
        self.gap
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> &[u32] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Vec<u32> {
        mask_elems(self.edges[i])
    }

    pub fn edges(&self) -> Vec<Vec<u32>> {
        self.edges.iter().map(|&m| mask_elems(m)).collect()
    }

    pub fn vertex_mask(&self) -> u32 {
        let labels = ((1u64 << (self.n + 1)) - 2) as u32;
        if self.gap {
            labels | 1
        } else {
            labels
        }
    }

    /// Connected incidence graph and `Σ|e| = |V| + |E| − 1`.
    pub fn is_valid(&self) -> bool {
        validate(self.vertex_mask(), &self.edges)
    }

    /// Index of `edge_mask` in the canonical edge list.
    pub fn edge_index(&self, edge_mask: u32) -> Option<usize> {
        self.edges.iter().position(|&e| e == edge_mask)
    }

    /// For each edge, its vertex closest to `root`.
    pub fn petioles(&self, root: u32) -> Vec<u32> {
        let mut pet = vec![u32::MAX; self.edges.len()];
        let mut seen = 1u32 << root;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (i, &e) in self.edges.iter().enumerate() {
                if pet[i] == u32::MAX && e >> v & 1 == 1 {
                    pet[i] = v;
                    for w in mask_elems(e & !seen) {
                        seen |= 1 << w;
                        queue.push_back(w);
                    }
                }
            }
        }
        pet
    }

    /// Image under a relabelling of `{1..n}`; the gap stays fixed.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> (Hypertree, Vec<usize>) {
        let mapped: Vec<u32> = self
            .edges
            .iter()
            .map(|&e| {
                mask_elems(e)
                    .into_iter()
                    .fold(0, |m, x| m | 1 << if x == GAP { GAP } else { f(x) })
            })
            .collect();
        let h = Hypertree::from_masks(self.n, self.gap, mapped.clone());
        // new position of each old edge
        let pos = mapped.iter().map(|m| h.edge_index(*m).unwrap()).collect();
        (h, pos)
    }

    /// Edge list part of the canonical text form, e.g. `{1,2}|{2,3}`.
    pub fn edges_text(&self) -> String {
        self.edges
            .iter()
            .map(|&e| edge_text(e))
            .collect::<Vec<_>>()
            .join("|")
    }
}

pub(crate) fn edge_text(e: u32) -> String {
    let s: Vec<String> = mask_elems(e)
        .into_iter()
        .map(|x| {
            if x == GAP {
                "#".to_string()
            } else {
                x.to_string()
            }
        })
        .collect();
    format!("{{{}}}", s.join(","))
}

impl fmt::Display for Hypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.n, self.edges_text())
    }
}

/// Orders edges by their ascending element lists.
pub(crate) fn sort_edges(edges: &mut [u32]) {
    edges.sort_by_cached_key(|&e| mask_elems(e));
}

pub(crate) fn validate(vertices: u32, edges: &[u32]) -> bool {
    let nv = vertices.count_ones();
    if nv == 0 {
        return false;
    }
    let mut total = 0;
    for (i, &e) in edges.iter().enumerate() {
        if e.count_ones() < 2 || e & !vertices != 0 || edges[..i].contains(&e) {
            return false;
        }
        total += e.count_ones();
    }
    if total + 1 != nv + edges.len() as u32 {
        return false;
    }
    let start = vertices.trailing_zeros();
    let mut reached = 1u32 << start;
    loop {
        let before = reached;
        for &e in edges {
            if e & reached != 0 {
                reached |= e;
            }
        }
        if reached == before {
            break;
        }
    }
    reached == vertices
}

/// A hypertree together with the pointing data of its kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variant {
    kind: Kind,
    tree: Hypertree,
    root: Option<u32>,
    edge: Option<usize>,
}

impl Variant {
    pub fn new(
        kind: Kind,
        tree: Hypertree,
        root: Option<u32>,
        edge: Option<usize>,
    ) -> Result<Self> {
        let bad = |m: &str| Err(Error::Invalid(format!("{kind}: {m}")));
        let want_root = matches!(kind, Kind::Rooted | Kind::RootedEdgePointed);
        let want_edge = matches!(kind, Kind::EdgePointed | Kind::RootedEdgePointed);
        if tree.has_gap() != (kind == Kind::Hollow) {
            return bad("gap mismatch");
        }
        if root.is_some() != want_root || edge.is_some() != want_edge {
            return bad("pointing data mismatch");
        }
        if let Some(r) = root {
            if !(1..=tree.n()).contains(&r) {
                return bad("root out of range");
            }
        }
        if let Some(e) = edge {
            if e >= tree.num_edges() {
                return bad("edge index out of range");
            }
            if let Some(r) = root {
                if tree.edge_masks()[e] >> r & 1 == 0 {
                    return bad("root outside the pointed edge");
                }
            }
        }
        if kind == Kind::Hollow {
            let deg = tree.edge_masks().iter().filter(|&&e| e & 1 == 1).count();
            if deg != 1 {
                return bad("gap must lie in exactly one edge");
            }
        }
        if !tree.is_valid() {
            return bad("not a hypertree");
        }
        Ok(Variant {
            kind,
            tree,
            root,
            edge,
        })
    }

    pub(crate) fn new_unchecked(
        kind: Kind,
        tree: Hypertree,
        root: Option<u32>,
        edge: Option<usize>,
    ) -> Self {
        Variant {
            kind,
            tree,
            root,
            edge,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn tree(&self) -> &Hypertree {
        &self.tree
    }

    pub fn root(&self) -> Option<u32> {
        self.root
    }

    pub fn pointed_edge(&self) -> Option<usize> {
        self.edge
    }

    pub fn n(&self) -> u32 {
        self.tree.n()
    }

    pub fn num_edges(&self) -> usize {
        self.tree.num_edges()
    }

    /// Exponent of `t` under the counting convention `t^{max(k−1, 0)}`.
    pub fn weight_exponent(&self) -> i64 {
        (self.num_edges() as i64 - 1).max(0)
    }

    /// The vertex the petioles are measured from: the root, or the gap.
    pub fn anchor(&self) -> Option<u32> {
        match self.kind {
            Kind::Hollow => Some(GAP),
            _ => self.root,
        }
    }

    pub fn petioles(&self) -> Option<Vec<u32>> {
        if !self.kind.uses_petioles() {
            return None;
        }
        self.anchor().map(|a| self.tree.petioles(a))
    }

    /// Per edge, the labels carrying the decoration: the whole edge, or the
    /// edge minus its petiole.
    pub fn decoration_label_sets(&self) -> Vec<Vec<u32>> {
        let pet = self.petioles();
        (0..self.num_edges())
            .map(|i| {
                let e = self.tree.edge_masks()[i];
                let m = match &pet {
                    Some(p) => e & !(1 << p[i]),
                    None => e,
                };
                mask_elems(m)
            })
            .collect()
    }

    /// Image under a relabelling of `{1..n}`, with the new positions of the old edges.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> (Variant, Vec<usize>) {
        let (tree, pos) = self.tree.relabel(&f);
        let v = Variant {
            kind: self.kind,
            tree,
            root: self.root.map(&f),
            edge: self.edge.map(|e| pos[e]),
        };
        (v, pos)
    }

    /// Canonical text form: `n;edges[;edge={..}][;root=r]`.
    pub fn to_text(&self) -> String {
        let mut s = self.tree.to_string();
        if let Some(e) = self.edge {
            s.push_str(&format!(";edge={}", edge_text(self.tree.edge_masks()[e])));
        }
        if let Some(r) = self.root {
            s.push_str(&format!(";root={r}"));
        }
        s
    }

    pub fn from_text(kind: Kind, text: &str) -> Result<Variant> {
        let bad = || Error::Invalid(format!("cannot parse {text:?}"));
        let mut fields = text.split(';');
        let n: u32 = fields.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let edges_field = fields.next().ok_or_else(bad)?;
        let parse_edge = |s: &str| -> Result<u32> {
            let inner = s
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(bad)?;
            let mut m = 0u32;
            for x in inner.split(',') {
                let v = if x == "#" {
                    GAP
                } else {
                    x.parse().map_err(|_| bad())?
                };
                m |= 1 << v;
            }
            Ok(m)
        };
        let mut masks = Vec::new();
        if !edges_field.is_empty() {
            for e in edges_field.split('|') {
                masks.push(parse_edge(e)?);
            }
        }
        let tree = Hypertree::from_masks(n, kind == Kind::Hollow, masks);
        let mut root = None;
        let mut edge = None;
        for f in fields {
            if let Some(r) = f.strip_prefix("root=") {
                root = Some(r.parse().map_err(|_| bad())?);
            } else if let Some(e) = f.strip_prefix("edge=") {
                let m = parse_edge(e)?;
                edge = Some(tree.edge_index(m).ok_or_else(bad)?);
            } else {
                return Err(bad());
            }
        }
        Variant::new(kind, tree, root, edge)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walks_unique(n: u32, edges: &[Vec<u32>]) -> bool {
        // a hypergraph is a hypertree iff between any two vertices there is
        // exactly one walk alternating vertices and distinct edges
        fn count(
            at: u32,
            target: u32,
            edges: &[Vec<u32>],
            used_e: &mut Vec<bool>,
            used_v: &mut Vec<bool>,
        ) -> usize {
            if at == target {
                return 1;
            }
            let mut c = 0;
            for (i, e) in edges.iter().enumerate() {
                if used_e[i] || !e.contains(&at) {
                    continue;
                }
                used_e[i] = true;
                for &w in e {
                    if w != at && !used_v[w as usize] {
                        used_v[w as usize] = true;
                        c += count(w, target, edges, used_e, used_v);
                        used_v[w as usize] = false;
                    }
                }
                used_e[i] = false;
            }
            c
        }
        if edges.iter().any(|e| e.len() < 2) {
            return false;
        }
        for a in 1..=n {
            for b in a + 1..=n {
                let mut ue = vec![false; edges.len()];
                let mut uv = vec![false; n as usize + 1];
                uv[a as usize] = true;
                if count(a, b, edges, &mut ue, &mut uv) != 1 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn validate_examples() {
        assert!(Hypertree::new(3, false, vec![vec![1, 2], vec![2, 3]]).is_ok());
        assert!(Hypertree::new(3, false, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).is_err());
        assert!(Hypertree::new(4, false, vec![vec![1, 2, 3], vec![3, 4]]).is_ok());
        assert!(Hypertree::new(1, false, vec![]).is_ok());
    }

    #[test]
    fn validity_agrees_with_walk_uniqueness() {
        // every family of distinct subsets of size >= 2 on up to 4 vertices
        for n in 1..=4u32 {
            let all = (1u32 << (n + 1)) - 2;
            let subsets: Vec<u32> = (1..=all)
                .filter(|s| s & !all == 0 && s.count_ones() >= 2)
                .collect();
            for fam in 0u64..(1u64 << subsets.len()) {
                if fam.count_ones() > n {
                    continue;
                }
                let edges: Vec<u32> = (0..subsets.len())
                    .filter(|i| fam >> i & 1 == 1)
                    .map(|i| subsets[i])
                    .collect();
                let lists: Vec<Vec<u32>> = edges.iter().map(|&e| mask_elems(e)).collect();
                assert_eq!(validate(all, &edges), walks_unique(n, &lists), "{lists:?}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let h = Hypertree::new(4, false, vec![vec![3, 4], vec![1, 2, 3]]).unwrap();
        assert_eq!(h.to_string(), "4;{1,2,3}|{3,4}");
        let v = Variant::new(Kind::RootedEdgePointed, h, Some(4), Some(1)).unwrap();
        assert_eq!(v.to_text(), "4;{1,2,3}|{3,4};edge={3,4};root=4");
        assert_eq!(
            Variant::from_text(Kind::RootedEdgePointed, &v.to_text()).unwrap(),
            v
        );
        let one = Variant::from_text(Kind::Plain, "1;").unwrap();
        assert_eq!(one.to_text(), "1;");
        let hol = Variant::from_text(Kind::Hollow, "2;{#,1}|{1,2}").unwrap();
        assert_eq!(hol.decoration_label_sets(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn petioles_of_a_path() {
        let h = Hypertree::new(4, false, vec![vec![1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(h.petioles(1), vec![1, 2]);
        assert_eq!(h.petioles(4), vec![2, 4]);
    }
}
