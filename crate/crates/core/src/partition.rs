//! Set partitions of `0..n` in canonical restricted-growth form.

use std::fmt;

use crate::relation::PairRelation;

/// A partition stored as a restricted growth string: `labels[0] = 0` and
/// every label is at most one more than the largest label before it.
/// Class `k` is the `k`-th class by least member.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Canonicalizes an arbitrary class assignment.
    pub fn from_class_map(map: &[usize]) -> Self {
        let mut rename = std::collections::HashMap::new();
        let labels = map
            .iter()
            .map(|c| {
                let next = rename.len();
                *rename.entry(*c).or_insert(next)
            })
            .collect();
        Self { labels }
    }

    /// Builds a partition from explicit blocks; elements not mentioned become
    /// singletons. Returns `None` if the blocks overlap or leave the range.
    pub fn from_blocks(size: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut map: Vec<Option<usize>> = vec![None; size];
        for (k, block) in blocks.iter().enumerate() {
            for &e in block {
                if e >= size || map[e].is_some() {
                    return None;
                }
                map[e] = Some(k);
            }
        }
        let mut fresh = blocks.len();
        let map: Vec<usize> = map
            .into_iter()
            .map(|m| {
                m.unwrap_or_else(|| {
                    fresh += 1;
                    fresh
                })
            })
            .collect();
        Some(Self::from_class_map(&map))
    }

    /// The partition into classes of an equivalence relation.
    pub fn from_equivalence(r: &PairRelation) -> Option<Self> {
        if !r.is_equivalence() {
            return None;
        }
        let n = r.size();
        let map: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| r.contains(a, b)).expect("reflexive"))
            .collect();
        Some(Self::from_class_map(&map))
    }

    pub fn discrete(size: usize) -> Self {
        Self {
            labels: (0..size).collect(),
        }
    }

    pub fn indiscrete(size: usize) -> Self {
        Self {
            labels: vec![0; size],
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.labels[a]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.labels
    }

    pub fn num_classes(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    /// Classes ordered by least member, each listed in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (e, &c) in self.labels.iter().enumerate() {
            out[c].push(e);
        }
        out
    }

    /// The least element of each class, indexed by class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_classes()];
        for (e, &c) in self.labels.iter().enumerate() {
            reps[c] = reps[c].min(e);
        }
        reps
    }

    pub fn is_discrete(&self) -> bool {
        self.num_classes() == self.size()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.num_classes() <= 1
    }

    /// `self ⊆ other` as relations, i.e. `self` is finer.
    pub fn refines(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let reps = self.representatives();
        (0..self.size()).all(|a| other.same(a, reps[self.labels[a]]))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let map: Vec<(usize, usize)> = (0..self.size())
            .map(|a| (self.labels[a], other.labels[a]))
            .collect();
        let mut rename = std::collections::HashMap::new();
        let labels = map
            .iter()
            .map(|k| {
                let next = rename.len();
                *rename.entry(*k).or_insert(next)
            })
            .collect();
        Partition { labels }
    }

    pub fn to_relation(&self) -> PairRelation {
        PairRelation::from_fn(self.size(), |a, b| self.same(a, b))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for class in self.classes() {
            write!(f, "{{")?;
            for (i, e) in class.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// All set partitions of `0..n` in restricted-growth-string order.
pub struct SetPartitions {
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        Self {
            rgs: vec![0; n],
            maxes: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition {
            labels: self.rgs.clone(),
        };
        // maxes[i] is the largest label among rgs[..i].
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.maxes[i] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(self.rgs[j - 1]);
                }
                return Some(out);
            }
        }
        self.done = true;
        Some(out)
    }
}

/// The Bell number `B(n)`.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}
