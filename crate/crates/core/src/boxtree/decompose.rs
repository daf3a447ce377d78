use super::BoxTree;
use crate::foundation::SetPartition;
use crate::hypertree::{elems_mask, DecoratedHypertree, Hypertree, Kind, Variant, GAP};
use crate::species::Decoration;
use crate::{Error, Result};

/// A set of labels carrying its `S′`-structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedBlock {
    pub labels: Vec<u32>,
    pub decoration: Decoration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTriple {
    pub root: u32,
    pub blocks: Vec<DecoratedBlock>,
    pub box_tree: BoxTree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HollowPair {
    pub blocks: Vec<DecoratedBlock>,
    pub box_tree: BoxTree,
}

fn invalid(m: &str) -> Error {
    Error::Invalid(m.to_string())
}

/// Blocks (edges minus petioles) with their decorations and petioles.
fn split(h: &DecoratedHypertree) -> Vec<(Vec<u32>, Decoration, u32)> {
    let v = &h.variant;
    let pet = v
        .petioles()
        .expect("petioles exist for rooted and hollow kinds");
    let mut out: Vec<_> = v
        .decoration_label_sets()
        .into_iter()
        .zip(h.decorations.iter().cloned())
        .zip(pet)
        .map(|((l, d), p)| (l, d, p))
        .collect();
    out.sort();
    out
}

pub fn decompose_rooted(h: &DecoratedHypertree) -> Result<RootedTriple> {
    if h.variant.kind() != Kind::Rooted {
        return Err(invalid("decompose_rooted expects a rooted hypertree"));
    }
    let root = h.variant.root().unwrap();
    let parts = split(h);
    let mut sets: Vec<Vec<u32>> = parts.iter().map(|p| p.0.clone()).collect();
    sets.push(vec![root]);
    let blocks = SetPartition::new(sets);
    let parent = blocks
        .blocks()
        .iter()
        .map(|b| parts.iter().find(|p| &p.0 == b).map(|p| p.2))
        .collect();
    let root_idx = blocks.block_of(root).unwrap();
    let box_tree = BoxTree::new(blocks, root_idx, parent)?;
    Ok(RootedTriple {
        root,
        blocks: parts
            .into_iter()
            .map(|(labels, decoration, _)| DecoratedBlock { labels, decoration })
            .collect(),
        box_tree,
    })
}

pub fn decompose_hollow(h: &DecoratedHypertree) -> Result<HollowPair> {
    if h.variant.kind() != Kind::Hollow {
        return Err(invalid("decompose_hollow expects a hollow hypertree"));
    }
    let parts = split(h);
    let blocks = SetPartition::new(parts.iter().map(|p| p.0.clone()).collect());
    let parent: Vec<Option<u32>> = blocks
        .blocks()
        .iter()
        .map(|b| {
            let p = parts.iter().find(|p| &p.0 == b).unwrap().2;
            (p != GAP).then_some(p)
        })
        .collect();
    let root_idx = parent
        .iter()
        .position(|p| p.is_none())
        .ok_or_else(|| invalid("no hollow edge"))?;
    let box_tree = BoxTree::new(blocks, root_idx, parent)?;
    Ok(HollowPair {
        blocks: parts
            .into_iter()
            .map(|(labels, decoration, _)| DecoratedBlock { labels, decoration })
            .collect(),
        box_tree,
    })
}

fn labels_are_initial(bt: &BoxTree) -> Result<u32> {
    let g = bt.blocks().ground();
    let n = g.len() as u32;
    if g != (1..=n).collect::<Vec<_>>() {
        return Err(invalid("box tree labels must be 1..n"));
    }
    Ok(n)
}

/// Decoration of box `b`, checked against the decorated blocks.
fn decoration_for<'a>(blocks: &'a [DecoratedBlock], b: &[u32]) -> Result<&'a Decoration> {
    let db = blocks
        .iter()
        .find(|d| d.labels == b)
        .ok_or_else(|| invalid("box without a decorated block"))?;
    if db.decoration.labels() != b {
        return Err(invalid("decoration does not live on its block"));
    }
    Ok(&db.decoration)
}

fn assemble(
    kind: Kind,
    n: u32,
    root: Option<u32>,
    edges: Vec<(u32, Decoration)>,
) -> Result<DecoratedHypertree> {
    let masks: Vec<u32> = edges.iter().map(|e| e.0).collect();
    let tree = Hypertree::from_masks(n, kind == Kind::Hollow, masks);
    let mut decorations = vec![None; edges.len()];
    for (m, d) in edges {
        let i = tree.edge_index(m).ok_or_else(|| invalid("repeated edge"))?;
        decorations[i] = Some(d);
    }
    let variant = Variant::new(kind, tree, root, None)?;
    Ok(DecoratedHypertree {
        variant,
        decorations: decorations.into_iter().map(Option::unwrap).collect(),
    })
}

pub fn recompose_rooted(t: &RootedTriple) -> Result<DecoratedHypertree> {
    let bt = &t.box_tree;
    let n = labels_are_initial(bt)?;
    if bt.root_block() != [t.root] {
        return Err(invalid("box tree root must be the root label alone"));
    }
    if t.blocks.len() + 1 != bt.num_blocks() {
        return Err(invalid("block count mismatch"));
    }
    let mut edges = Vec::new();
    for (i, b) in bt.blocks().blocks().iter().enumerate() {
        if i == bt.root() {
            continue;
        }
        let p = bt.parent(i).unwrap();
        let d = decoration_for(&t.blocks, b)?;
        edges.push((elems_mask(b) | 1 << p, d.clone()));
    }
    let h = assemble(Kind::Rooted, n, Some(t.root), edges)?;
    Ok(h)
}

pub fn recompose_hollow(p: &HollowPair) -> Result<DecoratedHypertree> {
    let bt = &p.box_tree;
    let n = labels_are_initial(bt)?;
    if p.blocks.len() != bt.num_blocks() {
        return Err(invalid("block count mismatch"));
    }
    let mut edges = Vec::new();
    for (i, b) in bt.blocks().blocks().iter().enumerate() {
        let attach = bt.parent(i).unwrap_or(GAP);
        let d = decoration_for(&p.blocks, b)?;
        edges.push((elems_mask(b) | 1 << attach, d.clone()));
    }
    assemble(Kind::Hollow, n, None, edges)
}
