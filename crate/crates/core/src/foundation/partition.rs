use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::numbers::factorial;

/// Integer partition, parts stored in weakly decreasing order.
///
/// Ordered by weight, then reverse-lexicographically: `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPartition {
    parts: Vec<u32>,
}

impl IntPartition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    pub fn empty() -> Self {
        IntPartition::default()
    }

    /// The partition `(1^n)`.
    pub fn ones(n: u32) -> Self {
        IntPartition {
            parts: vec![1; n as usize],
        }
    }

    /// Build from a map `i -> λ_i`.
    pub fn from_multiplicities(m: &BTreeMap<u32, u32>) -> Self {
        let mut parts = Vec::new();
        for (&i, &k) in m {
            parts.extend(std::iter::repeat_n(i, k as usize));
        }
        IntPartition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &IntPartition) -> IntPartition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        IntPartition::new(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: u32) -> IntPartition {
        IntPartition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// Remove one part equal to `i`, if present.
    pub fn without_part(&self, i: u32) -> Option<IntPartition> {
        let pos = self.parts.iter().position(|&p| p == i)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(IntPartition { parts })
    }
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn integer_partitions(n: u32) -> Vec<IntPartition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
        if n == 0 {
            out.push(IntPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `n`, in the canonical order.
pub fn partitions_up_to(n: u32) -> Vec<IntPartition> {
    (0..=n).flat_map(integer_partitions).collect()
}

/// `z_λ = prod_i i^{λ_i} λ_i!`.
pub fn z_lambda(lambda: &IntPartition) -> BigInt {
    let mut z = BigInt::one();
    for (i, m) in lambda.multiplicities() {
        z *= num_traits::pow(BigInt::from(i), m as usize) * factorial(m as u64);
    }
    z
}
