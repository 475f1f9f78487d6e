//! Zero sets of polynomial congruence equations and the structures around
//! them.
//!
//! For finite `B` every quantifier over `S = A[x_1, …, x_n]` is evaluated on
//! the [`FunctionSemiring`]: membership of `P` in a zero set and of `(f, g)`
//! in a vanishing congruence depend only on the functions `f` and `g` induce.

mod hom;
mod nullstellensatz;
mod topology;
mod vanishing;
pub mod window;

use std::collections::HashMap;
use std::fmt::Write as _;

pub use hom::{hom_count, HomCount};
pub use nullstellensatz::{
    nullstellensatz_check, sqrt_over, NullstellensatzConfig, NullstellensatzReport, SqrtOver,
};
pub use topology::{is_irreducible, materialize_topology, Topology, TOPOLOGY_MAX_POINTS};
pub use vanishing::{closure, vanishing, VanishingCongruence};

use crate::congruence::{classify, same_size, Congruence};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::polynomial::{affine_points, EmbeddedSemiring, FunctionSemiring, PolyRing, Polynomial};
use crate::relation::ElementPair;
use crate::semiring::SemiringTable;
use crate::twisted::twisted_mul;

/// Points scanned by [`zero_set`] before it gives up.
pub const MAX_SCAN_POINTS: usize = 1 << 20;

/// A non-empty set of polynomial pairs `T ⊂ S × S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSystem {
    ctx: EmbeddedSemiring,
    num_vars: usize,
    pairs: Vec<(Polynomial, Polynomial)>,
}

impl PairSystem {
    pub fn new(
        ctx: EmbeddedSemiring,
        num_vars: usize,
        pairs: Vec<(Polynomial, Polynomial)>,
    ) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Parameter("a system needs at least one pair".into()));
        }
        for (f, g) in &pairs {
            for p in [f, g] {
                if p.num_vars() != num_vars {
                    return Err(Error::Arity {
                        expected: num_vars,
                        actual: p.num_vars(),
                    });
                }
                if let Some(&c) = p.terms().values().find(|&&c| c >= ctx.coeff().size()) {
                    return Err(Error::ElementOutOfRange {
                        id: c,
                        size: ctx.coeff().size(),
                    });
                }
            }
        }
        Ok(Self {
            ctx,
            num_vars,
            pairs,
        })
    }

    pub fn ctx(&self) -> &EmbeddedSemiring {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn pairs(&self) -> &[(Polynomial, Polynomial)] {
        &self.pairs
    }

    /// `T_1 ∗ T_2`: all twisted products of a pair from each system.
    pub fn star(&self, other: &PairSystem) -> Result<PairSystem> {
        if self.num_vars != other.num_vars {
            return Err(Error::Arity {
                expected: self.num_vars,
                actual: other.num_vars,
            });
        }
        let ring = PolyRing::new(self.ctx.coeff(), self.num_vars);
        let mut pairs = Vec::with_capacity(self.pairs.len() * other.pairs.len());
        for (f1, g1) in &self.pairs {
            for (f2, g2) in &other.pairs {
                let p = twisted_mul(
                    &ring,
                    &ElementPair::new(f1.clone(), g1.clone()),
                    &ElementPair::new(f2.clone(), g2.clone()),
                );
                pairs.push((p.left, p.right));
            }
        }
        PairSystem::new(self.ctx.clone(), self.num_vars, pairs)
    }

    /// `T_1 ∪ T_2`.
    pub fn union(&self, other: &PairSystem) -> Result<PairSystem> {
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().cloned());
        PairSystem::new(self.ctx.clone(), self.num_vars, pairs)
    }

    /// Function ids of both sides of every pair.
    pub fn function_pairs(&self, fs: &FunctionSemiring) -> Result<Vec<(usize, usize)>> {
        check_space(fs, self)?;
        self.pairs
            .iter()
            .map(|(f, g)| Ok((fs.function_of(f)?, fs.function_of(g)?)))
            .collect()
    }

    pub fn display(&self) -> String {
        let a = self.ctx.coeff();
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(f, g)| format!("{} = {}", f.display(a), g.display(a)))
            .collect();
        parts.join("; ")
    }
}

/// A set of points of `B^n`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variety {
    num_vars: usize,
    points: Vec<Vec<usize>>,
}

impl Variety {
    pub fn new(num_vars: usize, mut points: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != num_vars) {
            return Err(Error::Arity {
                expected: num_vars,
                actual: p.len(),
            });
        }
        points.sort();
        points.dedup();
        Ok(Self { num_vars, points })
    }

    pub fn empty(num_vars: usize) -> Self {
        Self {
            num_vars,
            points: Vec::new(),
        }
    }

    /// All of `B^n` for `|B| = size`.
    pub fn full(size: usize, num_vars: usize) -> Self {
        Self {
            num_vars,
            points: affine_points(size, num_vars),
        }
    }

    /// The points whose lexicographic indices are set in `mask`.
    pub fn from_mask(size: usize, num_vars: usize, mask: u64) -> Self {
        let points = affine_points(size, num_vars)
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i < 64 && mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        Self { num_vars, points }
    }

    /// Inverse of [`Variety::from_mask`]; requires `size^n ≤ 64`.
    pub fn to_mask(&self, size: usize) -> u64 {
        self.points
            .iter()
            .fold(0, |m, p| m | 1u64 << point_index(size, p))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn points(&self) -> &[Vec<usize>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(p))
            .is_ok()
    }

    pub fn is_subset(&self, other: &Variety) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    pub fn union(&self, other: &Variety) -> Variety {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        points.sort();
        points.dedup();
        Variety {
            num_vars: self.num_vars,
            points,
        }
    }

    pub fn intersection(&self, other: &Variety) -> Variety {
        Variety {
            num_vars: self.num_vars,
            points: self
                .points
                .iter()
                .filter(|p| other.contains(p))
                .cloned()
                .collect(),
        }
    }

    /// One point per line, e.g. `(2, 3)`.
    pub fn display(&self, b: &SemiringTable) -> String {
        let mut out = String::new();
        for p in &self.points {
            let coords: Vec<&str> = p.iter().map(|&c| b.label(c)).collect();
            let _ = writeln!(out, "({})", coords.join(", "));
        }
        out
    }
}

/// Lexicographic index of a point of `B^n` with `|B| = size`.
pub fn point_index(size: usize, p: &[usize]) -> usize {
    p.iter().fold(0, |acc, &c| acc * size + c)
}

fn check_space(fs: &FunctionSemiring, t: &PairSystem) -> Result<()> {
    if fs.arity() != t.num_vars {
        return Err(Error::Arity {
            expected: fs.arity(),
            actual: t.num_vars,
        });
    }
    same_size(fs.target().size(), t.ctx.target().size())
}

/// `Z_ρ(T)(B)` by evaluating every pair at every point.
pub fn zero_set(t: &PairSystem, rho: &Congruence) -> Result<Variety> {
    let b = t.ctx.target();
    same_size(b.size(), rho.size())?;
    let count = (b.size() as f64).powi(t.num_vars as i32);
    if count > MAX_SCAN_POINTS as f64 {
        return Err(Error::BoundExceeded {
            what: "points scanned for a zero set",
            actual: count.min(usize::MAX as f64) as usize,
            bound: MAX_SCAN_POINTS,
        });
    }
    let mut points = Vec::new();
    for p in affine_points(b.size(), t.num_vars) {
        let mut inside = true;
        for (f, g) in &t.pairs {
            if !rho.contains(t.ctx.evaluate(f, &p)?, t.ctx.evaluate(g, &p)?) {
                inside = false;
                break;
            }
        }
        if inside {
            points.push(p);
        }
    }
    Ok(Variety {
        num_vars: t.num_vars,
        points,
    })
}

/// Zero set of a set of function pairs.
pub fn zero_set_of_functions(
    fs: &FunctionSemiring,
    pairs: &[(usize, usize)],
    rho: &Congruence,
) -> Result<Variety> {
    same_size(fs.target().size(), rho.size())?;
    let points = fs
        .points()
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            pairs
                .iter()
                .all(|&(f, g)| rho.contains(fs.value(f, i), fs.value(g, i)))
        })
        .map(|(_, p)| p.clone())
        .collect();
    Ok(Variety {
        num_vars: fs.arity(),
        points,
    })
}

/// Zero set of a partition of the function semiring: the points where every
/// class takes `ρ`-equivalent values.
pub fn zero_set_of_partition(
    fs: &FunctionSemiring,
    p: &Partition,
    rho: &Congruence,
) -> Result<Variety> {
    same_size(fs.target().size(), rho.size())?;
    same_size(fs.len(), p.size())?;
    let reps = p.representatives();
    let points = fs
        .points()
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            (0..fs.len()).all(|f| rho.contains(fs.value(f, i), fs.value(reps[p.class_of(f)], i)))
        })
        .map(|(_, pt)| pt.clone())
        .collect();
    Ok(Variety {
        num_vars: fs.arity(),
        points,
    })
}

/// `Z_ρ(T^c)(B)`, with `T^c` generated on the function semiring.
pub fn zero_set_of_generated(
    fs: &FunctionSemiring,
    t: &PairSystem,
    rho: &Congruence,
) -> Result<Variety> {
    let seeds = t.function_pairs(fs)?;
    zero_set_of_partition(fs, &fs.generated_congruence(seeds), rho)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarUnion {
    /// `Z_ρ(T_1 ∗ T_2)(B)`.
    pub direct: Variety,
    /// `Z_ρ(T_1)(B) ∪ Z_ρ(T_2)(B)`.
    pub union: Variety,
    pub rho_prime: bool,
}

impl StarUnion {
    pub fn equal(&self) -> bool {
        self.direct == self.union
    }
}

/// Both sides of `Z(T_1) ∪ Z(T_2) ⊂ Z(T_1 ∗ T_2)`; they agree when `ρ` is
/// prime.
pub fn star_union(t1: &PairSystem, t2: &PairSystem, rho: &Congruence) -> Result<StarUnion> {
    let b = t1.ctx.target();
    let direct = zero_set(&t1.star(t2)?, rho)?;
    let union = zero_set(t1, rho)?.union(&zero_set(t2, rho)?);
    Ok(StarUnion {
        direct,
        union,
        rho_prime: classify(b, rho)?.prime,
    })
}

/// Groups items by a key vector; classes are numbered by first appearance.
pub(crate) fn partition_by_key<K: std::hash::Hash + Eq>(
    keys: impl Iterator<Item = K>,
) -> Partition {
    let mut ids: HashMap<K, usize> = HashMap::new();
    let map: Vec<usize> = keys
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect();
    Partition::from_class_map(&map)
}
