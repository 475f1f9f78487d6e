//! Congruences on finite commutative semirings.
//!
//! A [`Congruence`] is a [`Partition`] of the carrier that is compatible with
//! both operations. The owning semiring is not stored; operations take the
//! table explicitly and check carrier sizes.

mod classify;
mod closure;
mod enumerate;
mod radical;
mod search;

use std::cmp::Ordering;
use std::fmt;

pub use classify::{
    classify, ideal_congruence_maps, principal_relation, spectrum, zariski_closed,
    CongruenceClassification, SpectrumKind,
};
pub use closure::{
    close_under_maps, close_under_translations, generated_congruence, generated_congruence_literal,
    translate_saturate, witness_chain, ChainLink, WitnessChain,
};
pub use enumerate::{enumerate_congruences, enumerate_congruences_unbounded, DEFAULT_MAX_SIZE};
pub use radical::{flat, flat_partition, nil_relations, radical, radical_alt, NilRelations};
pub use search::{
    random_semiring, search_maximal_nonprime, MaximalNonprimeHit, SearchConfig, SearchReport,
};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::PairRelation;
use crate::semiring::SemiringTable;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn identity(size: usize) -> Self {
        Self {
            partition: Partition::discrete(size),
        }
    }

    /// The improper congruence `A × A`.
    pub fn full(size: usize) -> Self {
        Self {
            partition: Partition::indiscrete(size),
        }
    }

    pub fn from_partition(t: &SemiringTable, partition: Partition) -> Result<Self> {
        same_size(t.size(), partition.size())?;
        if is_compatible(t, &partition) {
            Ok(Self { partition })
        } else {
            Err(Error::NotCongruence)
        }
    }

    pub fn from_relation(t: &SemiringTable, r: &PairRelation) -> Result<Self> {
        same_size(t.size(), r.size())?;
        let p = Partition::from_equivalence(r).ok_or(Error::NotEquivalence)?;
        Self::from_partition(t, p)
    }

    pub(crate) fn from_partition_unchecked(partition: Partition) -> Self {
        Self { partition }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn size(&self) -> usize {
        self.partition.size()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.partition.same(a, b)
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.partition.class_of(a)
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_classes()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.partition.classes()
    }

    pub fn is_identity(&self) -> bool {
        self.partition.is_discrete()
    }

    pub fn is_full(&self) -> bool {
        self.partition.is_indiscrete()
    }

    /// `(1, 0) ∉ ρ`.
    pub fn is_proper(&self, t: &SemiringTable) -> bool {
        !self.contains(t.one(), t.zero())
    }

    pub fn is_subset(&self, other: &Congruence) -> bool {
        self.partition.refines(&other.partition)
    }

    pub fn to_relation(&self) -> PairRelation {
        self.partition.to_relation()
    }

    /// `ρ ∩ σ`.
    pub fn meet(&self, other: &Congruence) -> Result<Congruence> {
        same_size(self.size(), other.size())?;
        Ok(Self {
            partition: self.partition.meet(&other.partition),
        })
    }

    /// `ρ ∨ σ = (ρ ∘ σ)^∞`.
    pub fn join(&self, t: &SemiringTable, other: &Congruence) -> Result<Congruence> {
        same_size(self.size(), other.size())?;
        let composed = self.to_relation().compose(&other.to_relation())?;
        Congruence::from_relation(t, &composed.transitive_closure())
    }

    /// The join computed as the congruence generated by `ρ ∪ σ`.
    pub fn join_generated(&self, t: &SemiringTable, other: &Congruence) -> Result<Congruence> {
        same_size(self.size(), other.size())?;
        generated_congruence(t, &self.to_relation().union(&other.to_relation())?)
    }

    /// `ρ_+`, which is again a congruence containing `ρ`.
    pub fn plus_saturate(&self, t: &SemiringTable) -> Result<Congruence> {
        same_size(t.size(), self.size())?;
        Congruence::from_relation(t, &plus_saturate(t, &self.to_relation())?)
    }

    /// Classes written with element labels, e.g. `{0 2}{1 3}`.
    pub fn display(&self, t: &SemiringTable) -> String {
        let mut out = String::new();
        for class in self.classes() {
            out.push('{');
            let names: Vec<&str> = class.iter().map(|&e| t.label(e)).collect();
            out.push_str(&names.join(" "));
            out.push('}');
        }
        out
    }
}

/// Canonical order: lexicographic on the class list.
impl Ord for Congruence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.classes()
            .cmp(&other.classes())
            .then_with(|| self.partition.cmp(&other.partition))
    }
}

impl PartialOrd for Congruence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence{:?}", self.partition)
    }
}

pub(crate) fn same_size(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::OwnerMismatch(a, b))
    }
}

/// Whether the partition is compatible with `+` and `·`.
///
/// By transitivity it suffices to compare every element with its class
/// representative under each translation and scaling.
pub fn is_compatible(t: &SemiringTable, p: &Partition) -> bool {
    let reps = p.representatives();
    t.elements().all(|a| {
        let r = reps[p.class_of(a)];
        a == r
            || t.elements()
                .all(|c| p.same(t.add(a, c), t.add(r, c)) && p.same(t.mul(a, c), t.mul(r, c)))
    })
}

pub fn is_congruence(t: &SemiringTable, r: &PairRelation) -> bool {
    r.size() == t.size() && Partition::from_equivalence(r).is_some_and(|p| is_compatible(t, &p))
}

/// `R_+ = {(a, b) : (a + c, b + c) ∈ R for some c}`.
pub fn plus_saturate(t: &SemiringTable, r: &PairRelation) -> Result<PairRelation> {
    same_size(t.size(), r.size())?;
    Ok(PairRelation::from_fn(t.size(), |a, b| {
        t.elements().any(|c| r.contains(t.add(a, c), t.add(b, c)))
    }))
}

/// The quotient `A/ρ` together with the projection `A → A/ρ`.
///
/// Class `k` of `ρ` becomes element `k`, labelled by its least member.
pub fn quotient(t: &SemiringTable, rho: &Congruence) -> Result<(SemiringTable, Vec<usize>)> {
    if !rho.is_proper(t) {
        return Err(Error::ImproperQuotient);
    }
    quotient_unchecked(t, rho)
}

/// As [`quotient`] but also accepts the improper congruence, producing the
/// one-element structure with `1 = 0` (not a semiring in the strict sense).
pub fn quotient_unchecked(
    t: &SemiringTable,
    rho: &Congruence,
) -> Result<(SemiringTable, Vec<usize>)> {
    same_size(t.size(), rho.size())?;
    let p = rho.partition();
    let reps = p.representatives();
    let labels = reps.iter().map(|&r| t.label(r).to_string()).collect();
    let table = SemiringTable::from_fn(
        format!("{}/{}", t.name(), rho.display(t)),
        labels,
        p.class_of(t.zero()),
        p.class_of(t.one()),
        |x, y| p.class_of(t.add(reps[x], reps[y])),
        |x, y| p.class_of(t.mul(reps[x], reps[y])),
    )?;
    Ok((table, p.class_map().to_vec()))
}
