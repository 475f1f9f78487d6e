//! Binary relations on a finite carrier, stored as a dense bit matrix.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered pair of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementPair<E = usize> {
    pub left: E,
    pub right: E,
}

impl<E> ElementPair<E> {
    pub const fn new(left: E, right: E) -> Self {
        Self { left, right }
    }
}

impl<E: Clone> ElementPair<E> {
    pub fn swapped(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }
}

impl<E> From<(E, E)> for ElementPair<E> {
    fn from((left, right): (E, E)) -> Self {
        Self { left, right }
    }
}

impl<E: fmt::Display> fmt::Display for ElementPair<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// A subset of `A × A` for a carrier of `size` elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairRelation {
    size: usize,
    bits: Vec<bool>,
}

impl PairRelation {
    pub fn empty(size: usize) -> Self {
        Self {
            size,
            bits: vec![false; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut r = Self::empty(size);
        for a in 0..size {
            r.insert(a, a);
        }
        r
    }

    pub fn full(size: usize) -> Self {
        Self {
            size,
            bits: vec![true; size * size],
        }
    }

    pub fn from_pairs(
        size: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut r = Self::empty(size);
        for (a, b) in pairs {
            for id in [a, b] {
                if id >= size {
                    return Err(Error::ElementOutOfRange { id, size });
                }
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(size);
        for a in 0..size {
            for b in 0..size {
                if f(a, b) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.size + b]
    }

    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        let slot = &mut self.bits[a * self.size + b];
        !std::mem::replace(slot, true)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = ElementPair> + '_ {
        let n = self.size;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| ElementPair::new(i / n, i % n))
    }

    fn same_owner(&self, other: &Self) -> Result<()> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(Error::OwnerMismatch(self.size, other.size))
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        Ok(self.zip_with(other, |x, y| x || y))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        Ok(self.zip_with(other, |x, y| x && y))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        Self {
            size: self.size,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&x, &y)| f(x, y))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.size == other.size && self.bits.iter().zip(&other.bits).all(|(&x, &y)| !x || y)
    }

    pub fn inverse(&self) -> Self {
        Self::from_fn(self.size, |a, b| self.contains(b, a))
    }

    /// `R ∘ R' = {(a, c) : (a, b) ∈ R and (b, c) ∈ R' for some b}`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let n = self.size;
        let mut out = Self::empty(n);
        for a in 0..n {
            for b in (0..n).filter(|&b| self.contains(a, b)) {
                for c in 0..n {
                    if other.contains(b, c) {
                        out.insert(a, c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `R^∞ = R ∪ R² ∪ …` (Warshall).
    pub fn transitive_closure(&self) -> Self {
        let n = self.size;
        let mut out = self.clone();
        for k in 0..n {
            for i in 0..n {
                if out.contains(i, k) {
                    for j in 0..n {
                        if out.contains(k, j) {
                            out.insert(i, j);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(R ∪ R⁻¹ ∪ id)^∞`, the smallest equivalence containing `R`.
    pub fn equivalence_closure(&self) -> Self {
        let sym = self.zip_with(&self.inverse(), |x, y| x || y);
        sym.zip_with(&Self::identity(self.size), |x, y| x || y)
            .transitive_closure()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|p| self.contains(p.right, p.left))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitive_closure() == *self
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }
}

impl fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|p| (p.left, p.right)))
            .finish()
    }
}
