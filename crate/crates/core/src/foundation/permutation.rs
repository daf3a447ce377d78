use std::fmt;

use super::IntPartition;

/// Bijection of `{1..n}`; `images[i - 1]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Returns `None` unless `images` is a bijection of `{1..n}`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i as usize > n || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Permutation { images })
    }

    /// Build from disjoint cycles on `{1..n}`; unlisted points are fixed.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Option<Self> {
        let mut images: Vec<u32> = (1..=n).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                images[(a - 1) as usize] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// The canonical permutation of cycle type `λ`: cycles on consecutive labels, largest first.
    pub fn canonical(lambda: &IntPartition) -> Self {
        let mut images = Vec::new();
        let mut start = 1u32;
        for &len in lambda.parts() {
            for j in 0..len {
                images.push(start + (j + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Permutation {
        let mut r = Permutation::identity(self.n());
        for _ in 0..k {
            r = self.compose(&r);
        }
        r
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n as usize + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s as usize] {
                continue;
            }
            let mut c = vec![s];
            seen[s as usize] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x as usize] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> IntPartition {
        IntPartition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Every permutation of `{1..|λ|}` with cycle type `λ`, in lexicographic order of images.
pub fn permutations_of_cycle_type(lambda: &IntPartition) -> Vec<Permutation> {
    let n = lambda.weight();
    let mut out = Vec::new();
    let mut images = vec![0u32; n as usize];
    let mut used = vec![false; n as usize + 1];
    fn rec(
        i: usize,
        n: usize,
        images: &mut Vec<u32>,
        used: &mut Vec<bool>,
        target: &IntPartition,
        out: &mut Vec<Permutation>,
    ) {
        if i == n {
            let p = Permutation {
                images: images.clone(),
            };
            if p.cycle_type() == *target {
                out.push(p);
            }
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                images[i] = v as u32;
                rec(i + 1, n, images, used, target, out);
                used[v] = false;
            }
        }
    }
    rec(0, n as usize, &mut images, &mut used, lambda, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::{factorial, integer_partitions, z_lambda};
    use num_bigint::BigInt;

    #[test]
    fn cycle_types() {
        assert_eq!(
            permutations_of_cycle_type(&IntPartition::new(vec![1, 1])),
            vec![Permutation::identity(2)]
        );
        let t = permutations_of_cycle_type(&IntPartition::new(vec![2]));
        assert_eq!(t, vec![Permutation::from_images(vec![2, 1]).unwrap()]);
        assert_eq!(
            permutations_of_cycle_type(&IntPartition::new(vec![2, 1])).len(),
            3
        );
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=6u32 {
            let mut total = BigInt::from(0);
            for l in integer_partitions(n) {
                let c = permutations_of_cycle_type(&l).len();
                assert_eq!(BigInt::from(c), factorial(n as u64) / z_lambda(&l));
                total += c;
            }
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn canonical_has_requested_type() {
        for n in 0..=7 {
            for l in integer_partitions(n) {
                assert_eq!(Permutation::canonical(&l).cycle_type(), l);
            }
        }
    }
}
