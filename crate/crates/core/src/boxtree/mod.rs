//! Box trees and the bijections between decorated hypertrees and tree-like structures.

mod coloured;
mod decompose;
pub mod examples;
mod fat;

pub use coloured::{
    enumerate_two_coloured_trees, hollow_to_two_coloured, rooted_edge_pointed_to_two_coloured,
    two_coloured_to_hollow, two_coloured_to_rooted_edge_pointed, Colour, TwoColouredRootedTree,
};
pub use decompose::{
    decompose_hollow, decompose_rooted, recompose_hollow, recompose_rooted, DecoratedBlock,
    HollowPair, RootedTriple,
};
pub use fat::{enumerate_rooted_fat_trees, fat_to_hollow, hollow_to_fat, RootedFatTree};

use std::fmt;

use num_bigint::BigInt;

use crate::foundation::{MultiPoly, SetPartition, TPoly};
use crate::{Error, Result};

/// A partition of labels into boxes, one of them the root, where every other
/// box hangs from a label of another box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxTree {
    blocks: SetPartition,
    root: usize,
    parent: Vec<Option<u32>>,
}

impl BoxTree {
    pub fn new(blocks: SetPartition, root: usize, parent: Vec<Option<u32>>) -> Result<Self> {
        let bt = BoxTree {
            blocks,
            root,
            parent,
        };
        if !bt.is_valid() {
            return Err(Error::Invalid(format!("not a box tree: {bt}")));
        }
        Ok(bt)
    }

    pub fn blocks(&self) -> &SetPartition {
        &self.blocks
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn root_block(&self) -> &[u32] {
        &self.blocks.blocks()[self.root]
    }

    /// Parent label of block `i`; `None` for the root.
    pub fn parent(&self, i: usize) -> Option<u32> {
        self.parent[i]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.num_blocks()
    }

    pub fn is_valid(&self) -> bool {
        let k = self.blocks.num_blocks();
        if self.root >= k || self.parent.len() != k || self.parent[self.root].is_some() {
            return false;
        }
        for i in 0..k {
            if i == self.root {
                continue;
            }
            // walk towards the root; more than k steps means a cycle
            let mut j = i;
            let mut steps = 0;
            while j != self.root {
                let Some(l) = self.parent[j] else {
                    return false;
                };
                match self.blocks.block_of(l) {
                    Some(b) if b != j => j = b,
                    _ => return false,
                }
                steps += 1;
                if steps > k {
                    return false;
                }
            }
        }
        true
    }

    /// `∏ x_i^{c(i)}` where `c(i)` is the number of boxes hanging from label `i`.
    pub fn weight(&self, num_vars: usize) -> MultiPoly {
        let mut xe = vec![0u32; num_vars];
        for l in self.parent.iter().flatten() {
            xe[*l as usize - 1] += 1;
        }
        MultiPoly::monomial(num_vars, &xe, &vec![0; num_vars], TPoly::one())
    }
}

impl fmt::Display for BoxTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                match self.parent[i] {
                    None if i == self.root => format!("[{}]*", s.join(",")),
                    None => format!("[{}]", s.join(",")),
                    Some(p) => format!("[{}]->{p}", s.join(",")),
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Every box tree on the given boxes with the given root box.
pub fn enumerate_box_trees(blocks: &SetPartition, root: usize) -> Vec<BoxTree> {
    let k = blocks.num_blocks();
    let ground = blocks.ground();
    let choices: Vec<Vec<Option<u32>>> = (0..k)
        .map(|i| {
            if i == root {
                vec![None]
            } else {
                ground
                    .iter()
                    .filter(|l| !blocks.blocks()[i].contains(l))
                    .map(|&l| Some(l))
                    .collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    if choices.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let parent = (0..k).map(|i| choices[i][idx[i]]).collect();
        let bt = BoxTree {
            blocks: blocks.clone(),
            root,
            parent,
        };
        if bt.is_valid() {
            out.push(bt);
        }
        // odometer over the choices
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// `n₀·n^{k−1}` box trees with a root box of size `n₀` and `k` further boxes.
pub fn count_box_trees_formula(root_size: u32, other_sizes: &[u32]) -> BigInt {
    let k = other_sizes.len() as u32;
    if k == 0 {
        return BigInt::from(1);
    }
    let n: u32 = root_size + other_sizes.iter().sum::<u32>();
    BigInt::from(root_size) * num_traits::pow(BigInt::from(n), (k - 1) as usize)
}

/// `(Σ_{i∈root} x_i)(Σ_i x_i)^{k−1}` over labels `{1..n}`, with `k` non-root boxes.
pub fn weighted_box_count_formula(root: &[u32], n: u32, k: u32) -> MultiPoly {
    let nn = n as usize;
    if k == 0 {
        return MultiPoly::one(nn);
    }
    let all: Vec<u32> = (1..=n).collect();
    MultiPoly::x_sum(nn, root) * MultiPoly::x_sum(nn, &all).pow(k - 1)
}
