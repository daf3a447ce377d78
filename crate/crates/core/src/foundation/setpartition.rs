use std::fmt;

/// Partition of a finite label set into nonempty blocks.
///
/// Each block is sorted and blocks are ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Canonicalizes the given blocks. Panics on empty or overlapping blocks.
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            assert!(!b.is_empty(), "empty block");
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), len, "blocks overlap");
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    /// Index of the block containing `label`.
    pub fn block_of(&self, label: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&label))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        write!(f, "{}", bs.join("|"))
    }
}

/// All set partitions of `ground` (optionally with exactly `k` blocks), in
/// restricted-growth-string order.
pub fn set_partitions(ground: &[u32], k: Option<usize>) -> Vec<SetPartition> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    let mut out = Vec::new();
    if g.is_empty() {
        if k.unwrap_or(0) == 0 {
            out.push(SetPartition { blocks: Vec::new() });
        }
        return out;
    }
    let n = g.len();
    let mut rgs = vec![0usize; n];
    fn rec(
        i: usize,
        used: usize,
        g: &[u32],
        k: Option<usize>,
        rgs: &mut Vec<usize>,
        out: &mut Vec<SetPartition>,
    ) {
        let n = g.len();
        if let Some(k) = k {
            if used > k || used + (n - i) < k {
                return;
            }
        }
        if i == n {
            let mut blocks = vec![Vec::new(); used];
            for (j, &b) in rgs.iter().enumerate() {
                blocks[b].push(g[j]);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=used {
            rgs[i] = b;
            rec(i + 1, used.max(b + 1), g, k, rgs, out);
        }
    }
    rgs[0] = 0;
    rec(1, 1, &g, k, &mut rgs, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::{bell, stirling_second};
    use num_bigint::BigInt;

    #[test]
    fn counts() {
        assert_eq!(set_partitions(&[1, 2, 3], Some(2)).len(), 3);
        assert_eq!(set_partitions(&[1], None).len(), 1);
        assert_eq!(set_partitions(&[1, 2, 3, 4], Some(2)).len(), 7);
    }

    #[test]
    fn bell_and_stirling() {
        for n in 1..=8u32 {
            let g: Vec<u32> = (1..=n).collect();
            assert_eq!(BigInt::from(set_partitions(&g, None).len()), bell(n as u64));
            for k in 1..=n as usize {
                assert_eq!(
                    BigInt::from(set_partitions(&g, Some(k)).len()),
                    stirling_second(n as u64, k as u64)
                );
            }
        }
    }

    #[test]
    fn canonical_blocks() {
        for p in set_partitions(&[1, 2, 3, 4], None) {
            assert_eq!(SetPartition::new(p.blocks().to_vec()), p);
        }
    }
}
