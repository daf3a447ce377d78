//! Decorating species: dimensions, explicit structures and characters.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational as BigRat;
use num_traits::{One, Zero};

use crate::foundation::{
    binomial, euler_phi, factorial, moebius, pow_big, stirling_first_abs, stirling_second,
    IntPartition, Permutation,
};
use crate::{Error, Result};

/// An explicit structure of an enumerable species on a finite label set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Singleton(u32),
    Set(Vec<u32>),
    List(Vec<u32>),
    /// Cyclic order, rotated so that the smallest label comes first.
    Cycle(Vec<u32>),
    Pointed {
        set: Vec<u32>,
        point: u32,
    },
    /// Rooted tree; `parent` lists `(child, parent)` sorted by child.
    RootedTree {
        root: u32,
        parent: Vec<(u32, u32)>,
    },
    /// Rooted tree whose edges carry a colour (`true` = red).
    ColouredTree {
        root: u32,
        parent: Vec<(u32, u32, bool)>,
    },
}

impl Decoration {
    /// Sorted label set the structure lives on.
    pub fn labels(&self) -> Vec<u32> {
        let mut l = match self {
            Decoration::Singleton(a) => vec![*a],
            Decoration::Set(s) | Decoration::List(s) | Decoration::Cycle(s) => s.clone(),
            Decoration::Pointed { set, .. } => set.clone(),
            Decoration::RootedTree { root, parent } => {
                let mut v: Vec<u32> = parent.iter().map(|p| p.0).collect();
                v.push(*root);
                v
            }
            Decoration::ColouredTree { root, parent } => {
                let mut v: Vec<u32> = parent.iter().map(|p| p.0).collect();
                v.push(*root);
                v
            }
        };
        l.sort_unstable();
        l
    }

    /// Transport of structure along a relabelling, returned in canonical form.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Decoration {
        match self {
            Decoration::Singleton(a) => Decoration::Singleton(f(*a)),
            Decoration::Set(s) => {
                let mut v: Vec<u32> = s.iter().map(|&x| f(x)).collect();
                v.sort_unstable();
                Decoration::Set(v)
            }
            Decoration::List(s) => Decoration::List(s.iter().map(|&x| f(x)).collect()),
            Decoration::Cycle(s) => Decoration::cycle(s.iter().map(|&x| f(x)).collect()),
            Decoration::Pointed { set, point } => {
                let mut v: Vec<u32> = set.iter().map(|&x| f(x)).collect();
                v.sort_unstable();
                Decoration::Pointed {
                    set: v,
                    point: f(*point),
                }
            }
            Decoration::RootedTree { root, parent } => {
                let mut p: Vec<(u32, u32)> = parent.iter().map(|&(c, q)| (f(c), f(q))).collect();
                p.sort_unstable();
                Decoration::RootedTree {
                    root: f(*root),
                    parent: p,
                }
            }
            Decoration::ColouredTree { root, parent } => {
                let mut p: Vec<(u32, u32, bool)> =
                    parent.iter().map(|&(c, q, r)| (f(c), f(q), r)).collect();
                p.sort_unstable();
                Decoration::ColouredTree {
                    root: f(*root),
                    parent: p,
                }
            }
        }
    }

    pub fn cycle(mut v: Vec<u32>) -> Decoration {
        if let Some(pos) = v
            .iter()
            .enumerate()
            .min_by_key(|(_, x)| **x)
            .map(|(i, _)| i)
        {
            v.rotate_left(pos);
        }
        Decoration::Cycle(v)
    }

    pub fn rooted_tree(root: u32, mut parent: Vec<(u32, u32)>) -> Decoration {
        parent.sort_unstable();
        Decoration::RootedTree { root, parent }
    }

    /// Number of children of `v` in a tree-shaped decoration; zero otherwise.
    pub fn children_count(&self, v: u32) -> u32 {
        match self {
            Decoration::RootedTree { parent, .. } => {
                parent.iter().filter(|p| p.1 == v).count() as u32
            }
            Decoration::ColouredTree { parent, .. } => {
                parent.iter().filter(|p| p.1 == v).count() as u32
            }
            _ => 0,
        }
    }

    /// Root of a tree-shaped decoration.
    pub fn root(&self) -> Option<u32> {
        match self {
            Decoration::RootedTree { root, .. } | Decoration::ColouredTree { root, .. } => {
                Some(*root)
            }
            _ => None,
        }
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Decoration::Singleton(a) => write!(f, "x{a}"),
            Decoration::Set(s) => write!(f, "{{{}}}", join(s)),
            Decoration::List(s) => write!(f, "[{}]", join(s)),
            Decoration::Cycle(s) => write!(f, "<{}>", join(s)),
            Decoration::Pointed { set, point } => write!(f, "{{{}}}@{point}", join(set)),
            Decoration::RootedTree { root, parent } => {
                let e: Vec<String> = parent.iter().map(|(c, p)| format!("{p}>{c}")).collect();
                write!(f, "tree({root};{})", e.join(","))
            }
            Decoration::ColouredTree { root, parent } => {
                let e: Vec<String> = parent
                    .iter()
                    .map(|(c, p, r)| format!("{p}{}{c}", if *r { "=" } else { ">" }))
                    .collect();
                write!(f, "ctree({root};{})", e.join(","))
            }
        }
    }
}

/// The species known to the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpeciesName {
    X,
    E,
    Comm,
    Assoc,
    Cycle,
    Perm,
    PreLie,
    Lie,
    TwoColouredForestEdgeFactor,
}

impl SpeciesName {
    pub const ALL: [SpeciesName; 9] = [
        SpeciesName::X,
        SpeciesName::E,
        SpeciesName::Comm,
        SpeciesName::Assoc,
        SpeciesName::Cycle,
        SpeciesName::Perm,
        SpeciesName::PreLie,
        SpeciesName::Lie,
        SpeciesName::TwoColouredForestEdgeFactor,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpeciesName::X => "X",
            SpeciesName::E => "E",
            SpeciesName::Comm => "Comm",
            SpeciesName::Assoc => "Assoc",
            SpeciesName::Cycle => "Cycle",
            SpeciesName::Perm => "Perm",
            SpeciesName::PreLie => "PreLie",
            SpeciesName::Lie => "Lie",
            SpeciesName::TwoColouredForestEdgeFactor => "TwoColouredForestEdgeFactor",
        }
    }

    pub fn parse(s: &str) -> Result<SpeciesName> {
        let lower = s.to_ascii_lowercase();
        SpeciesName::ALL
            .into_iter()
            .find(|n| n.as_str().to_ascii_lowercase() == lower)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for SpeciesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A decorating species given by its dimensions, and optionally its explicit
/// structures and its character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpeciesHandle {
    name: SpeciesName,
}

pub fn builtin_species(name: &str) -> Result<SpeciesHandle> {
    Ok(SpeciesHandle::new(SpeciesName::parse(name)?))
}

impl SpeciesHandle {
    pub fn new(name: SpeciesName) -> Self {
        SpeciesHandle { name }
    }

    pub fn name(&self) -> SpeciesName {
        self.name
    }

    /// Number of structures (or dimension) on `n` labels.
    pub fn dim(&self, n: u32) -> BigInt {
        let n64 = n as u64;
        match self.name {
            SpeciesName::X => BigInt::from((n == 1) as u32),
            SpeciesName::E => BigInt::one(),
            _ if n == 0 => BigInt::zero(),
            SpeciesName::Comm => BigInt::one(),
            SpeciesName::Assoc => factorial(n64),
            SpeciesName::Cycle | SpeciesName::Lie => factorial(n64 - 1),
            SpeciesName::Perm => BigInt::from(n),
            SpeciesName::PreLie => pow_big(n as i64, n - 1),
            SpeciesName::TwoColouredForestEdgeFactor => pow_big(2 * n as i64, n - 1),
        }
    }

    pub fn is_enumerable(&self) -> bool {
        self.name != SpeciesName::Lie
    }

    /// All explicit structures on `labels`, or `None` for linear species.
    pub fn enumerate(&self, labels: &[u32]) -> Option<Vec<Decoration>> {
        let mut l = labels.to_vec();
        l.sort_unstable();
        let n = l.len();
        let out = match self.name {
            SpeciesName::Lie => return None,
            SpeciesName::X => {
                if n == 1 {
                    vec![Decoration::Singleton(l[0])]
                } else {
                    vec![]
                }
            }
            SpeciesName::E => vec![Decoration::Set(l)],
            _ if n == 0 => vec![],
            SpeciesName::Comm => vec![Decoration::Set(l)],
            SpeciesName::Assoc => permutations_of(&l)
                .into_iter()
                .map(Decoration::List)
                .collect(),
            SpeciesName::Cycle => permutations_of(&l[1..])
                .into_iter()
                .map(|mut rest| {
                    rest.insert(0, l[0]);
                    Decoration::Cycle(rest)
                })
                .collect(),
            SpeciesName::Perm => l
                .iter()
                .map(|&p| Decoration::Pointed {
                    set: l.clone(),
                    point: p,
                })
                .collect(),
            SpeciesName::PreLie => rooted_trees(&l)
                .into_iter()
                .map(|(root, parent)| Decoration::RootedTree { root, parent })
                .collect(),
            SpeciesName::TwoColouredForestEdgeFactor => {
                let mut out = Vec::new();
                for (root, parent) in rooted_trees(&l) {
                    let m = parent.len();
                    for mask in 0..(1u32 << m) {
                        let p = parent
                            .iter()
                            .enumerate()
                            .map(|(i, &(c, q))| (c, q, mask >> i & 1 == 1))
                            .collect();
                        out.push(Decoration::ColouredTree { root, parent: p });
                    }
                }
                out
            }
        };
        Some(out)
    }

    /// Trace of a permutation of cycle type `λ` (the number of fixed structures
    /// for set species).
    pub fn character(&self, lambda: &IntPartition) -> BigRat {
        let n = lambda.weight();
        let int = |v: BigInt| BigRat::from_integer(v);
        match self.name {
            SpeciesName::X => int(BigInt::from((lambda.parts() == [1]) as u32)),
            SpeciesName::E => BigRat::one(),
            _ if n == 0 => BigRat::zero(),
            SpeciesName::Comm => BigRat::one(),
            SpeciesName::Assoc => {
                if lambda.multiplicity(1) == n {
                    int(factorial(n as u64))
                } else {
                    BigRat::zero()
                }
            }
            SpeciesName::Perm => int(BigInt::from(lambda.multiplicity(1))),
            SpeciesName::Cycle | SpeciesName::Lie => {
                let k = lambda.largest_part();
                let m = lambda.len() as u32;
                if lambda.multiplicity(k) != m {
                    return BigRat::zero();
                }
                let lead = if self.name == SpeciesName::Cycle {
                    BigInt::from(euler_phi(k as u64))
                } else {
                    BigInt::from(moebius(k as u64))
                };
                int(lead * pow_big(k as i64, m - 1) * factorial(m as u64 - 1))
            }
            SpeciesName::PreLie | SpeciesName::TwoColouredForestEdgeFactor => {
                let sigma = Permutation::canonical(lambda);
                let labels: Vec<u32> = (1..=n).collect();
                let structures = self.enumerate(&labels).unwrap_or_default();
                let fixed = structures
                    .iter()
                    .filter(|s| s.relabel(|x| sigma.apply(x)) == **s)
                    .count();
                int(BigInt::from(fixed))
            }
        }
    }
}

impl fmt::Display for SpeciesHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A species playing the role of `S′`, the decorator of the non-petiole labels
/// of each edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlockSpecies(pub SpeciesHandle);

impl BlockSpecies {
    pub fn new(name: SpeciesName) -> Self {
        BlockSpecies(SpeciesHandle::new(name))
    }

    pub fn parse(name: &str) -> Result<Self> {
        Ok(BlockSpecies(builtin_species(name)?))
    }

    pub fn name(&self) -> SpeciesName {
        self.0.name()
    }

    pub fn dim(&self, n: u32) -> BigInt {
        self.0.dim(n)
    }

    /// Dimension of the decoration of an undistinguished edge of size `m`.
    pub fn edge_dim(&self, m: u32) -> Result<BigInt> {
        if m < 2 {
            return Err(Error::Invalid(format!("edge of size {m}")));
        }
        Ok(self.dim(m - 1))
    }

    /// `E_S(k, n)`: sets of `k` blocks covering `n` labels, each block carrying an
    /// `S′`-structure, with `E_S(1, 1) = 1`.
    pub fn e_count(&self, k: u32, n: u32) -> BigInt {
        if (k, n) == (1, 1) {
            return BigInt::one();
        }
        e_count_table(self, n)[k as usize][n as usize].clone()
    }

    /// The closed forms for the builtin block species.
    pub fn e_count_closed(&self, k: u32, n: u32) -> Result<BigInt> {
        if k == 0 || k > n {
            return Ok(BigInt::zero());
        }
        let (k64, n64) = (k as u64, n as u64);
        Ok(match self.name() {
            SpeciesName::Assoc => binomial(n64 - 1, k64 - 1) * factorial(n64) / factorial(k64),
            SpeciesName::Perm => binomial(n64, k64) * pow_big(k as i64, n - k),
            SpeciesName::Comm => stirling_second(n64, k64),
            SpeciesName::Cycle | SpeciesName::Lie => stirling_first_abs(n64, k64),
            SpeciesName::PreLie => binomial(n64 - 1, k64 - 1) * pow_big(n as i64, n - k),
            other => return Err(Error::Unsupported(format!("closed E_S for {other}"))),
        })
    }
}

impl fmt::Display for BlockSpecies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `table[k][m]` = Σ over partitions of an `m`-set into `k` blocks of ∏ dim(|block|).
fn e_count_table(b: &BlockSpecies, n: u32) -> Vec<Vec<BigInt>> {
    let n = n as usize;
    let dims: Vec<BigInt> = (0..=n as u32).map(|j| b.dim(j)).collect();
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    t[0][0] = BigInt::one();
    for k in 1..=n {
        for m in 1..=n {
            let mut s = BigInt::zero();
            // size of the block holding the smallest label
            for j in 1..=m {
                if t[k - 1][m - j].is_zero() || dims[j].is_zero() {
                    continue;
                }
                s += binomial((m - 1) as u64, (j - 1) as u64) * &dims[j] * &t[k - 1][m - j];
            }
            t[k][m] = s;
        }
    }
    t
}

fn permutations_of(l: &[u32]) -> Vec<Vec<u32>> {
    if l.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..l.len() {
        let mut rest = l.to_vec();
        let x = rest.remove(i);
        for mut p in permutations_of(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// All rooted trees on `labels` as `(root, sorted (child, parent) list)`.
pub(crate) fn rooted_trees(labels: &[u32]) -> Vec<(u32, Vec<(u32, u32)>)> {
    let n = labels.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for (ri, &root) in labels.iter().enumerate() {
        let others: Vec<usize> = (0..n).filter(|&i| i != ri).collect();
        let m = others.len();
        let mut choice = vec![0usize; m];
        loop {
            // parent index of others[j] is choice[j] (an index into labels)
            let valid = others.iter().enumerate().all(|(j, &i)| choice[j] != i)
                && reaches_root(&others, &choice, ri, n);
            if valid {
                let mut parent: Vec<(u32, u32)> = others
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| (labels[i], labels[choice[j]]))
                    .collect();
                parent.sort_unstable();
                out.push((root, parent));
            }
            let mut j = 0;
            while j < m {
                choice[j] += 1;
                if choice[j] < n {
                    break;
                }
                choice[j] = 0;
                j += 1;
            }
            if j == m {
                break;
            }
        }
    }
    out
}

fn reaches_root(others: &[usize], choice: &[usize], root: usize, n: usize) -> bool {
    let mut par = vec![usize::MAX; n];
    for (j, &i) in others.iter().enumerate() {
        par[i] = choice[j];
    }
    for &start in others {
        let mut x = start;
        let mut steps = 0;
        while x != root {
            x = par[x];
            steps += 1;
            if steps > n {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::{integer_partitions, set_partitions};

    fn h(name: &str) -> SpeciesHandle {
        builtin_species(name).unwrap()
    }

    #[test]
    fn dims() {
        assert_eq!(h("PreLie").dim(3), BigInt::from(9));
        assert_eq!(h("Lie").dim(4), BigInt::from(6));
        assert_eq!(h("Cycle").enumerate(&[1, 2, 3]).unwrap().len(), 2);
        assert!(builtin_species("Foo").is_err());
    }

    #[test]
    fn lie_character_of_degree_three() {
        let lie = h("Lie");
        let vals: Vec<BigRat> = integer_partitions(3)
            .iter()
            .map(|l| lie.character(l))
            .collect();
        assert_eq!(
            vals,
            vec![
                BigRat::from_integer((-1).into()),
                BigRat::zero(),
                BigRat::from_integer(2.into())
            ]
        );
    }

    #[test]
    fn enumeration_matches_dim_and_character() {
        for name in SpeciesName::ALL {
            let s = SpeciesHandle::new(name);
            for n in 0..=5u32 {
                let ident = s.character(&IntPartition::ones(n));
                assert_eq!(ident, BigRat::from_integer(s.dim(n)), "{name} {n}");
                if let Some(list) = s.enumerate(&(1..=n).collect::<Vec<_>>()) {
                    assert_eq!(BigInt::from(list.len()), s.dim(n), "{name} {n}");
                }
            }
        }
    }

    #[test]
    fn characters_count_fixed_structures() {
        for name in SpeciesName::ALL {
            let s = SpeciesHandle::new(name);
            if !s.is_enumerable() {
                continue;
            }
            for n in 1..=4u32 {
                let labels: Vec<u32> = (1..=n).collect();
                let all = s.enumerate(&labels).unwrap();
                for l in integer_partitions(n) {
                    let sigma = Permutation::canonical(&l);
                    let fixed = all
                        .iter()
                        .filter(|d| d.relabel(|x| sigma.apply(x)) == **d)
                        .count();
                    assert_eq!(
                        s.character(&l),
                        BigRat::from_integer(fixed.into()),
                        "{name} {l}"
                    );
                }
            }
        }
    }

    fn e_count_by_set_partitions(b: &BlockSpecies, k: u32, n: u32) -> BigInt {
        let g: Vec<u32> = (1..=n).collect();
        set_partitions(&g, Some(k as usize))
            .iter()
            .map(|p| {
                p.blocks()
                    .iter()
                    .map(|bl| b.dim(bl.len() as u32))
                    .product::<BigInt>()
            })
            .sum()
    }

    #[test]
    fn e_count_examples() {
        let pl = BlockSpecies::parse("PreLie").unwrap();
        assert_eq!(pl.e_count(2, 3), BigInt::from(6));
        assert_eq!(pl.e_count_closed(1, 3).unwrap(), BigInt::from(9));
        let assoc = BlockSpecies::parse("Assoc").unwrap();
        assert_eq!(assoc.e_count(2, 3), BigInt::from(6));
        let perm = BlockSpecies::parse("Perm").unwrap();
        assert_eq!(perm.e_count_closed(2, 3).unwrap(), BigInt::from(6));
        let lie = BlockSpecies::parse("Lie").unwrap();
        assert_eq!(lie.e_count_closed(2, 3).unwrap(), BigInt::from(3));
        assert_eq!(pl.edge_dim(3).unwrap(), BigInt::from(2));
        assert_eq!(lie.edge_dim(3).unwrap(), BigInt::from(1));
        assert!(lie.edge_dim(1).is_err());
    }

    #[test]
    fn e_count_agrees_with_closed_forms_and_set_partitions() {
        for name in ["Assoc", "Perm", "Comm", "Cycle", "PreLie", "Lie"] {
            let b = BlockSpecies::parse(name).unwrap();
            for n in 1..=7 {
                for k in 1..=n {
                    let e = b.e_count(k, n);
                    assert_eq!(e, b.e_count_closed(k, n).unwrap(), "{name} {k} {n}");
                    if n <= 6 {
                        assert_eq!(e, e_count_by_set_partitions(&b, k, n), "{name} {k} {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_sums() {
        let comm = BlockSpecies::parse("Comm").unwrap();
        let lie = BlockSpecies::parse("Lie").unwrap();
        let pl = BlockSpecies::parse("PreLie").unwrap();
        for n in 1..=7u32 {
            let s = |b: &BlockSpecies| (1..=n).map(|k| b.e_count(k, n)).sum::<BigInt>();
            assert_eq!(s(&comm), crate::foundation::bell(n as u64));
            assert_eq!(s(&lie), factorial(n as u64));
            assert_eq!(s(&pl), pow_big(n as i64 + 1, n - 1));
        }
    }
}
