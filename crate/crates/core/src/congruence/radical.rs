use super::{plus_saturate, same_size, Congruence};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::{ElementPair, PairRelation};
use crate::semiring::SemiringTable;
use crate::twisted::{first_power_where, twisted_mul};

/// For every pair `p` (indexed `a·n + b`), whether some power `p^{∗k}`,
/// `k ≥ 1`, lies in `rho`.
fn powers_reach(t: &SemiringTable, rho: &Congruence) -> Vec<bool> {
    let n = t.size();
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let hit = first_power_where(t, &ElementPair::new(a, b), |q| {
                rho.contains(q.left, q.right)
            });
            out.push(hit.is_some());
        }
    }
    out
}

/// `√ρ = {(a, b) : (a + c, b + c)^{∗k} ∈ ρ for some c ∈ A and k ≥ 1}`.
///
/// Powers are followed until the orbit cycles, so the search is exact.
pub fn radical(t: &SemiringTable, rho: &Congruence) -> Result<Congruence> {
    same_size(t.size(), rho.size())?;
    let n = t.size();
    let reach = powers_reach(t, rho);
    let r = PairRelation::from_fn(n, |a, b| {
        t.elements().any(|c| reach[t.add(a, c) * n + t.add(b, c)])
    });
    Congruence::from_relation(t, &r)
}

/// The same radical through the alternative description
/// `(a, b)^{∗k} + (c, c) ∈ ρ`, using an independent orbit walk.
pub fn radical_alt(t: &SemiringTable, rho: &Congruence) -> Result<Congruence> {
    same_size(t.size(), rho.size())?;
    let n = t.size();
    let r = PairRelation::from_fn(n, |a, b| {
        let p = ElementPair::new(a, b);
        let mut orbit: Vec<ElementPair> = Vec::new();
        let mut q = p;
        while !orbit.contains(&q) {
            orbit.push(q);
            q = twisted_mul(t, &q, &p);
        }
        orbit.iter().any(|q| {
            t.elements()
                .any(|c| rho.contains(t.add(q.left, c), t.add(q.right, c)))
        })
    });
    Congruence::from_relation(t, &r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilRelations {
    /// Pairs some positive twisted power of which is diagonal.
    pub r_nil: PairRelation,
    /// `(R_nil)_+`, the nilpotent congruence.
    pub rho_nil: Congruence,
    /// The congruence generated by `R_nil`.
    pub generated: Congruence,
    /// `R_nil = id`.
    pub reduced: bool,
    /// `ρ_nil = id`.
    pub strongly_reduced: bool,
}

pub fn nil_relations(t: &SemiringTable) -> Result<NilRelations> {
    let n = t.size();
    let reach = powers_reach(t, &Congruence::identity(n));
    let r_nil = PairRelation::from_fn(n, |a, b| reach[a * n + b]);
    let rho_nil = Congruence::from_relation(t, &plus_saturate(t, &r_nil)?)?;
    let generated = super::generated_congruence(t, &r_nil)?;
    Ok(NilRelations {
        reduced: r_nil == PairRelation::identity(n),
        strongly_reduced: rho_nil.is_identity(),
        r_nil,
        rho_nil,
        generated,
    })
}

/// `E^♭ = {(a, b) : (ax + y, bx + y) ∈ E for all x, y}`, the largest
/// congruence contained in the equivalence `E`.
pub fn flat(t: &SemiringTable, e: &PairRelation) -> Result<Congruence> {
    same_size(t.size(), e.size())?;
    if !e.is_equivalence() {
        return Err(Error::NotEquivalence);
    }
    let r = PairRelation::from_fn(t.size(), |a, b| {
        t.elements().all(|x| {
            let (ax, bx) = (t.mul(a, x), t.mul(b, x));
            t.elements().all(|y| e.contains(t.add(ax, y), t.add(bx, y)))
        })
    });
    Congruence::from_relation(t, &r)
}

/// `E^♭` for an equivalence given as a partition.
pub fn flat_partition(t: &SemiringTable, e: &Partition) -> Result<Congruence> {
    flat(t, &e.to_relation())
}
