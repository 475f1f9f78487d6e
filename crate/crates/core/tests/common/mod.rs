//! Helpers shared by the integration suites: strategies over the builtin
//! tables and brute-force oracles written straight from the definitions.

#![allow(dead_code)]

use proptest::prelude::*;
use semicong::congruence::enumerate_congruences_unbounded;
use semicong::semiring::builtins_up_to;
use semicong::{Congruence, PairRelation, SemiringTable};

pub fn any_builtin(max_size: usize) -> impl Strategy<Value = SemiringTable> {
    prop::sample::select(builtins_up_to(max_size))
}

/// A builtin together with `k` of its elements.
pub fn builtin_with_elements(
    max_size: usize,
    k: usize,
) -> impl Strategy<Value = (SemiringTable, Vec<usize>)> {
    any_builtin(max_size).prop_flat_map(move |t| {
        let n = t.size();
        (Just(t), prop::collection::vec(0..n, k))
    })
}

/// A builtin together with one of its congruences.
pub fn builtin_with_congruence(
    max_size: usize,
) -> impl Strategy<Value = (SemiringTable, Congruence)> {
    any_builtin(max_size).prop_flat_map(|t| {
        let all = enumerate_congruences_unbounded(&t);
        (Just(t), prop::sample::select(all))
    })
}

pub fn tw(t: &SemiringTable, (a, b): (usize, usize), (c, d): (usize, usize)) -> (usize, usize) {
    (
        t.add(t.mul(a, c), t.mul(b, d)),
        t.add(t.mul(a, d), t.mul(b, c)),
    )
}

pub fn tw_pow(t: &SemiringTable, p: (usize, usize), n: u32) -> (usize, usize) {
    (0..n).fold((t.one(), t.zero()), |acc, _| tw(t, acc, p))
}

/// Membership in `√ρ` from the definition. The powers of a pair in a
/// carrier of `n` elements repeat within `n²` steps, so exponents up to
/// `n² + 1` see the whole orbit.
pub fn radical_by_definition(t: &SemiringTable, rho: &Congruence, a: usize, b: usize) -> bool {
    let n = t.size();
    let bound = (n * n + 1) as u32;
    t.elements().any(|c| {
        let p = (t.add(a, c), t.add(b, c));
        (1..=bound).any(|k| {
            let q = tw_pow(t, p, k);
            rho.contains(q.0, q.1)
        })
    })
}

/// `R_+ = {(a, b) : (a + c, b + c) ∈ R for some c}`.
pub fn plus_by_definition(t: &SemiringTable, r: &PairRelation) -> PairRelation {
    PairRelation::from_fn(t.size(), |a, b| {
        t.elements().any(|c| r.contains(t.add(a, c), t.add(b, c)))
    })
}

/// Intersection of every congruence containing `r`.
pub fn least_congruence_containing(t: &SemiringTable, r: &PairRelation) -> PairRelation {
    let mut acc = PairRelation::full(t.size());
    for rho in enumerate_congruences_unbounded(t) {
        let rel = rho.to_relation();
        if r.is_subset(&rel) {
            acc = acc.intersection(&rel).unwrap();
        }
    }
    acc
}

/// Primality straight from the quadruple condition.
pub fn prime_by_definition(t: &SemiringTable, rho: &Congruence) -> bool {
    if rho.contains(t.one(), t.zero()) {
        return false;
    }
    let n = t.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let q = tw(t, (a, b), (c, d));
                    if rho.contains(q.0, q.1) && !rho.contains(a, b) && !rho.contains(c, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
