//! Fixed worked examples of the bijections, used by tests and by `verify`.

use super::{
    BoxTree, Colour, DecoratedBlock, HollowPair, RootedFatTree, RootedTriple, TwoColouredRootedTree,
};
use crate::foundation::{MultiPoly, SetPartition, TPoly};
use crate::hypertree::{elems_mask, DecoratedHypertree, Hypertree, Kind, Variant, GAP};
use crate::species::Decoration;

fn decorated(
    kind: Kind,
    n: u32,
    root: Option<u32>,
    edges: Vec<(Vec<u32>, Decoration)>,
) -> DecoratedHypertree {
    let masks: Vec<u32> = edges.iter().map(|e| elems_mask(&e.0)).collect();
    let tree = Hypertree::from_masks(n, kind == Kind::Hollow, masks.clone());
    let mut decorations = vec![None; edges.len()];
    for (m, (_, d)) in masks.into_iter().zip(edges) {
        decorations[tree.edge_index(m).unwrap()] = Some(d);
    }
    DecoratedHypertree {
        variant: Variant::new(kind, tree, root, None).expect("valid example"),
        decorations: decorations.into_iter().map(Option::unwrap).collect(),
    }
}

fn pointed(set: &[u32], point: u32) -> Decoration {
    Decoration::Pointed {
        set: set.to_vec(),
        point,
    }
}

fn list(v: &[u32]) -> Decoration {
    Decoration::List(v.to_vec())
}

fn monomial(n: usize, powers: &[(u32, u32)]) -> MultiPoly {
    let mut xe = vec![0; n];
    for &(i, e) in powers {
        xe[i as usize - 1] = e;
    }
    MultiPoly::monomial(n, &xe, &vec![0; n], TPoly::one())
}

/// Hollow hypertree on 9 labels whose edges carry pointed sets.
pub fn hollow_pointed() -> DecoratedHypertree {
    decorated(
        Kind::Hollow,
        9,
        None,
        vec![
            (vec![GAP, 1, 2, 3], pointed(&[1, 2, 3], 1)),
            (vec![2, 6, 7], pointed(&[6, 7], 7)),
            (vec![7, 8], pointed(&[8], 8)),
            (vec![7, 9], pointed(&[9], 9)),
            (vec![3, 4], pointed(&[4], 4)),
            (vec![4, 5], pointed(&[5], 5)),
        ],
    )
}

/// The box tree of [`hollow_pointed`].
pub fn hollow_pointed_box_tree() -> HollowPair {
    let sets: Vec<(Vec<u32>, u32, Option<u32>)> = vec![
        (vec![1, 2, 3], 1, None),
        (vec![6, 7], 7, Some(2)),
        (vec![8], 8, Some(7)),
        (vec![9], 9, Some(7)),
        (vec![4], 4, Some(3)),
        (vec![5], 5, Some(4)),
    ];
    let blocks = SetPartition::new(sets.iter().map(|s| s.0.clone()).collect());
    let parent = blocks
        .blocks()
        .iter()
        .map(|b| sets.iter().find(|s| &s.0 == b).unwrap().2)
        .collect();
    let root = blocks.block_of(1).unwrap();
    let mut decorated_blocks: Vec<DecoratedBlock> = sets
        .iter()
        .map(|(l, p, _)| DecoratedBlock {
            labels: l.clone(),
            decoration: pointed(l, *p),
        })
        .collect();
    decorated_blocks.sort();
    HollowPair {
        blocks: decorated_blocks,
        box_tree: BoxTree::new(blocks, root, parent).expect("valid example"),
    }
}

/// `x₂x₃x₄x₇²`.
pub fn hollow_pointed_weight() -> MultiPoly {
    monomial(9, &[(2, 1), (3, 1), (4, 1), (7, 2)])
}

/// The rooted fat tree matching [`hollow_pointed`].
pub fn fat_tree() -> RootedFatTree {
    let blocks = SetPartition::new(vec![
        vec![1, 2, 3],
        vec![6, 7],
        vec![4],
        vec![5],
        vec![8],
        vec![9],
    ]);
    RootedFatTree::new(blocks, vec![(7, 2), (4, 3), (8, 7), (9, 7), (5, 4)], 1)
        .expect("valid example")
}

/// Rooted hypertree on 15 labels, root 3, whose non-petiole labels carry lists.
pub fn rooted_lists() -> DecoratedHypertree {
    decorated(
        Kind::Rooted,
        15,
        Some(3),
        vec![
            (vec![3, 1, 15], list(&[15, 1])),
            (vec![3, 4, 5, 6], list(&[4, 5, 6])),
            (vec![3, 9, 10], list(&[10, 9])),
            (vec![9, 11], list(&[11])),
            (vec![6, 12], list(&[12])),
            (vec![6, 8], list(&[8])),
            (vec![12, 2, 7, 13, 14], list(&[14, 7, 13, 2])),
        ],
    )
}

/// The triple of [`rooted_lists`].
pub fn rooted_lists_triple() -> RootedTriple {
    let sets: Vec<(Vec<u32>, Option<Decoration>, Option<u32>)> = vec![
        (vec![3], None, None),
        (vec![1, 15], Some(list(&[15, 1])), Some(3)),
        (vec![4, 5, 6], Some(list(&[4, 5, 6])), Some(3)),
        (vec![9, 10], Some(list(&[10, 9])), Some(3)),
        (vec![11], Some(list(&[11])), Some(9)),
        (vec![12], Some(list(&[12])), Some(6)),
        (vec![8], Some(list(&[8])), Some(6)),
        (vec![2, 7, 13, 14], Some(list(&[14, 7, 13, 2])), Some(12)),
    ];
    let blocks = SetPartition::new(sets.iter().map(|s| s.0.clone()).collect());
    let parent = blocks
        .blocks()
        .iter()
        .map(|b| sets.iter().find(|s| &s.0 == b).unwrap().2)
        .collect();
    let root = blocks.block_of(3).unwrap();
    let mut decorated_blocks: Vec<DecoratedBlock> = sets
        .into_iter()
        .filter_map(|(labels, d, _)| d.map(|decoration| DecoratedBlock { labels, decoration }))
        .collect();
    decorated_blocks.sort();
    RootedTriple {
        root: 3,
        blocks: decorated_blocks,
        box_tree: BoxTree::new(blocks, root, parent).expect("valid example"),
    }
}

/// `x₃³x₆²x₉x₁₂`.
pub fn rooted_lists_weight() -> MultiPoly {
    monomial(15, &[(3, 3), (6, 2), (9, 1), (12, 1)])
}

/// 2-coloured rooted tree on 11 labels rooted at 2.
pub fn two_coloured() -> TwoColouredRootedTree {
    use Colour::{Blue, Red};
    TwoColouredRootedTree::new(
        11,
        2,
        vec![
            (1, 2, Blue),
            (7, 2, Blue),
            (3, 1, Blue),
            (4, 1, Blue),
            (11, 1, Red),
            (5, 1, Red),
            (6, 3, Red),
            (9, 5, Blue),
            (8, 7, Red),
            (10, 8, Red),
        ],
    )
    .expect("valid example")
}

/// The hollow hypertree with rooted-tree decorations matching [`two_coloured`].
pub fn hollow_trees() -> DecoratedHypertree {
    let tree = |root, parent: &[(u32, u32)]| Decoration::rooted_tree(root, parent.to_vec());
    decorated(
        Kind::Hollow,
        11,
        None,
        vec![
            (
                vec![GAP, 1, 2, 3, 4, 7],
                tree(2, &[(1, 2), (7, 2), (3, 1), (4, 1)]),
            ),
            (vec![1, 11], tree(11, &[])),
            (vec![3, 6], tree(6, &[])),
            (vec![1, 5, 9], tree(5, &[(9, 5)])),
            (vec![7, 8], tree(8, &[])),
            (vec![8, 10], tree(10, &[])),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxtree::*;

    #[test]
    fn hollow_pointed_pairs() {
        let h = hollow_pointed();
        assert_eq!(decompose_hollow(&h).unwrap(), hollow_pointed_box_tree());
        assert_eq!(recompose_hollow(&hollow_pointed_box_tree()).unwrap(), h);
        assert_eq!(
            hollow_pointed_box_tree().box_tree.weight(9),
            hollow_pointed_weight()
        );
        assert_eq!(hollow_to_fat(&h).unwrap(), fat_tree());
        assert_eq!(fat_to_hollow(&fat_tree()).unwrap(), h);
    }

    #[test]
    fn rooted_lists_pairs() {
        let h = rooted_lists();
        assert_eq!(decompose_rooted(&h).unwrap(), rooted_lists_triple());
        assert_eq!(recompose_rooted(&rooted_lists_triple()).unwrap(), h);
        assert_eq!(
            rooted_lists_triple().box_tree.weight(15),
            rooted_lists_weight()
        );
    }

    #[test]
    fn two_coloured_pair() {
        assert_eq!(
            two_coloured_to_hollow(&two_coloured()).unwrap(),
            hollow_trees()
        );
        assert_eq!(
            hollow_to_two_coloured(&hollow_trees()).unwrap(),
            two_coloured()
        );
    }
}
