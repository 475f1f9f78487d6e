use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use super::{same_size, Congruence};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::{ElementPair, PairRelation};
use crate::semiring::SemiringTable;

/// Least partition of `0..n` that contains `seeds` and is stable under
/// `a ~ b ⇒ a + c ~ b + c` and `a·c ~ b·c` for every `c`.
///
/// Merge-propagation fixpoint: each successful union schedules the
/// translates of the merged pair. A pair that is already equivalent needs no
/// propagation because it is implied by a chain of pairs that were.
pub fn close_under_translations(
    n: usize,
    seeds: impl IntoIterator<Item = (usize, usize)>,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Partition {
    let mut uf = UnionFind::<usize>::new(n);
    let mut work: Vec<(usize, usize)> = seeds.into_iter().collect();
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for c in 0..n {
                work.push((add(a, c), add(b, c)));
                work.push((mul(a, c), mul(b, c)));
            }
        }
    }
    Partition::from_class_map(&uf.into_labeling())
}

/// Least partition of `0..n` containing `seeds` and stable under each of the
/// unary maps `apply(k, ·)` for `k < num_maps`.
pub fn close_under_maps(
    n: usize,
    seeds: impl IntoIterator<Item = (usize, usize)>,
    num_maps: usize,
    apply: impl Fn(usize, usize) -> usize,
) -> Partition {
    let mut uf = UnionFind::<usize>::new(n);
    let mut work: Vec<(usize, usize)> = seeds.into_iter().collect();
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for k in 0..num_maps {
                work.push((apply(k, a), apply(k, b)));
            }
        }
    }
    Partition::from_class_map(&uf.into_labeling())
}

/// `R^c`, the smallest congruence containing `R`.
pub fn generated_congruence(t: &SemiringTable, r: &PairRelation) -> Result<Congruence> {
    same_size(t.size(), r.size())?;
    let seeds = r.pairs().map(|p| (p.left, p.right));
    let p = close_under_translations(t.size(), seeds, |a, b| t.add(a, b), |a, b| t.mul(a, b));
    Ok(Congruence::from_partition_unchecked(p))
}

/// `R^c` computed literally as `(R^L)^e`.
pub fn generated_congruence_literal(t: &SemiringTable, r: &PairRelation) -> Result<Congruence> {
    let rl = translate_saturate(t, r)?;
    Congruence::from_relation(t, &rl.equivalence_closure())
}

/// `R^L = {(ax + y, bx + y) : (a, b) ∈ R, x, y ∈ A}`.
pub fn translate_saturate(t: &SemiringTable, r: &PairRelation) -> Result<PairRelation> {
    same_size(t.size(), r.size())?;
    let mut out = PairRelation::empty(t.size());
    for p in r.pairs() {
        for x in t.elements() {
            let (ax, bx) = (t.mul(p.left, x), t.mul(p.right, x));
            for y in t.elements() {
                out.insert(t.add(ax, y), t.add(bx, y));
            }
        }
    }
    Ok(out)
}

/// One step `z_i → z_{i+1}` of a chain; `forward` means `(z_i, z_{i+1}) ∈ R^L`,
/// otherwise `(z_{i+1}, z_i) ∈ R^L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub to: usize,
    pub forward: bool,
}

/// A sequence `a = z_1, …, z_n = b` whose consecutive members are related by
/// `R^L` or its inverse. Empty when `a = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessChain {
    pub endpoints: ElementPair,
    pub links: Vec<ChainLink>,
}

impl WitnessChain {
    /// The elements `z_1, …, z_n`.
    pub fn elements(&self) -> Vec<usize> {
        std::iter::once(self.endpoints.left)
            .chain(self.links.iter().map(|l| l.to))
            .collect()
    }

    /// Checks the chain against `R` directly, recomputing `R^L` membership
    /// by search over `x, y`.
    pub fn verify(&self, t: &SemiringTable, r: &PairRelation) -> bool {
        let in_rl = |u: usize, v: usize| {
            r.pairs().any(|p| {
                t.elements().any(|x| {
                    t.elements().any(|y| {
                        t.add(t.mul(p.left, x), y) == u && t.add(t.mul(p.right, x), y) == v
                    })
                })
            })
        };
        let mut at = self.endpoints.left;
        for link in &self.links {
            let ok = if link.forward {
                in_rl(at, link.to)
            } else {
                in_rl(link.to, at)
            };
            if !ok {
                return false;
            }
            at = link.to;
        }
        at == self.endpoints.right
    }
}

/// A shortest chain proving `(a, b) ∈ R^c`, or `None` when the pair is not
/// in the generated congruence. Forward steps are tried before backward ones.
pub fn witness_chain(
    t: &SemiringTable,
    r: &PairRelation,
    a: usize,
    b: usize,
) -> Result<Option<WitnessChain>> {
    t.check_element(a)?;
    t.check_element(b)?;
    let rl = translate_saturate(t, r)?;
    let n = t.size();
    let mut prev: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        let forward = (0..n).filter(|&v| rl.contains(u, v)).map(|v| (v, true));
        let backward = (0..n).filter(|&v| rl.contains(v, u)).map(|v| (v, false));
        for (v, dir) in forward.chain(backward) {
            if !visited[v] {
                visited[v] = true;
                prev[v] = Some((u, dir));
                queue.push_back(v);
            }
        }
    }
    if !visited[b] {
        return Ok(None);
    }
    let mut links = Vec::new();
    let mut at = b;
    while at != a {
        let (from, forward) = prev[at].ok_or(Error::NotEquivalence)?;
        links.push(ChainLink { to: at, forward });
        at = from;
    }
    links.reverse();
    Ok(Some(WitnessChain {
        endpoints: ElementPair::new(a, b),
        links,
    }))
}
