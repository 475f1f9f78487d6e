use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{
    close_under_translations, enumerate_congruences, plus_saturate, radical, same_size, Congruence,
};
use crate::error::{Error, Result};
use crate::relation::{ElementPair, PairRelation};
use crate::semiring::{Ideal, SemiringTable};
use crate::twisted::twisted_mul;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CongruenceClassification {
    pub proper: bool,
    pub prime: bool,
    pub semi_prime: bool,
    pub maximal: bool,
    pub semi_maximal: bool,
    pub radical: bool,
    pub quasi_radical: bool,
    /// `ρ = ρ_+`.
    pub plus_saturated: bool,
}

impl CongruenceClassification {
    pub fn flags(&self) -> [(&'static str, bool); 8] {
        [
            ("proper", self.proper),
            ("prime", self.prime),
            ("semi_prime", self.semi_prime),
            ("maximal", self.maximal),
            ("semi_maximal", self.semi_maximal),
            ("radical", self.radical),
            ("quasi_radical", self.quasi_radical),
            ("plus_saturated", self.plus_saturated),
        ]
    }
}

/// Every condition is checked exhaustively. Since membership in `ρ` only
/// depends on classes, the scans range over class representatives.
pub fn classify(t: &SemiringTable, rho: &Congruence) -> Result<CongruenceClassification> {
    same_size(t.size(), rho.size())?;
    let proper = rho.is_proper(t);
    let reps = rho.partition().representatives();
    let plus = rho.plus_saturate(t)?;
    let root = radical(t, rho)?;
    Ok(CongruenceClassification {
        proper,
        prime: proper && is_prime(t, rho, &reps),
        semi_prime: proper && is_semi_prime(t, rho, &reps),
        maximal: proper && is_maximal(t, rho, &reps),
        semi_maximal: proper && is_semi_maximal(t, rho, &reps),
        radical: root == *rho,
        quasi_radical: root == plus,
        plus_saturated: plus == *rho,
    })
}

fn is_prime(t: &SemiringTable, rho: &Congruence, reps: &[usize]) -> bool {
    let outside: Vec<ElementPair> = reps
        .iter()
        .flat_map(|&a| reps.iter().map(move |&b| ElementPair::new(a, b)))
        .filter(|p| !rho.contains(p.left, p.right))
        .collect();
    outside.iter().all(|p| {
        outside.iter().all(|q| {
            let r = twisted_mul(t, p, q);
            !rho.contains(r.left, r.right)
        })
    })
}

fn is_semi_prime(t: &SemiringTable, rho: &Congruence, reps: &[usize]) -> bool {
    let z = t.zero();
    reps.iter().all(|&a| {
        reps.iter()
            .all(|&b| !rho.contains(t.mul(a, b), z) || rho.contains(a, z) || rho.contains(b, z))
    })
}

fn is_maximal(t: &SemiringTable, rho: &Congruence, reps: &[usize]) -> bool {
    let base: Vec<(usize, usize)> = t.elements().map(|a| (a, reps[rho.class_of(a)])).collect();
    reps.iter().enumerate().all(|(i, &a)| {
        reps[i + 1..].iter().all(|&b| {
            let seeds = base.iter().copied().chain([(a, b)]);
            close_under_translations(t.size(), seeds, |x, y| t.add(x, y), |x, y| t.mul(x, y))
                .is_indiscrete()
        })
    })
}

fn is_semi_maximal(t: &SemiringTable, rho: &Congruence, reps: &[usize]) -> bool {
    reps.iter().all(|&a| {
        rho.contains(a, t.zero()) || t.elements().any(|b| rho.contains(t.mul(a, b), t.one()))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    Prime,
    SemiPrime,
    Maximal,
    SemiMaximal,
}

impl SpectrumKind {
    pub fn holds(self, c: &CongruenceClassification) -> bool {
        match self {
            SpectrumKind::Prime => c.prime,
            SpectrumKind::SemiPrime => c.semi_prime,
            SpectrumKind::Maximal => c.maximal,
            SpectrumKind::SemiMaximal => c.semi_maximal,
        }
    }
}

impl FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" => Ok(SpectrumKind::Prime),
            "semiprime" => Ok(SpectrumKind::SemiPrime),
            "maximal" => Ok(SpectrumKind::Maximal),
            "semimaximal" => Ok(SpectrumKind::SemiMaximal),
            other => Err(Error::Parameter(format!("unknown spectrum kind `{other}`"))),
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumKind::Prime => "prime",
            SpectrumKind::SemiPrime => "semiprime",
            SpectrumKind::Maximal => "maximal",
            SpectrumKind::SemiMaximal => "semimaximal",
        })
    }
}

/// All congruences of the given kind, in canonical order.
pub fn spectrum(t: &SemiringTable, kind: SpectrumKind, max_size: usize) -> Result<Vec<Congruence>> {
    let mut out = Vec::new();
    for rho in enumerate_congruences(t, max_size)? {
        if kind.holds(&classify(t, &rho)?) {
            out.push(rho);
        }
    }
    Ok(out)
}

/// `V^co(σ)`: the prime congruences containing `σ`.
pub fn zariski_closed(
    t: &SemiringTable,
    sigma: &Congruence,
    max_size: usize,
) -> Result<Vec<Congruence>> {
    same_size(t.size(), sigma.size())?;
    Ok(spectrum(t, SpectrumKind::Prime, max_size)?
        .into_iter()
        .filter(|rho| sigma.is_subset(rho))
        .collect())
}

/// `R(a, b) = {(ax + by + z, bx + ay + z)}` together with `R(a, b)_+`.
pub fn principal_relation(
    t: &SemiringTable,
    a: usize,
    b: usize,
) -> Result<(PairRelation, Congruence)> {
    t.check_element(a)?;
    t.check_element(b)?;
    let mut r = PairRelation::empty(t.size());
    for x in t.elements() {
        for y in t.elements() {
            let u = t.add(t.mul(a, x), t.mul(b, y));
            let v = t.add(t.mul(b, x), t.mul(a, y));
            for z in t.elements() {
                r.insert(t.add(u, z), t.add(v, z));
            }
        }
    }
    let plus = Congruence::from_relation(t, &plus_saturate(t, &r)?)?;
    Ok((r, plus))
}

/// `ρ_J = {(a, b) : a + J = b + J}` and `I_σ = {a : (a, 0) ∈ σ}`.
pub fn ideal_congruence_maps(
    t: &SemiringTable,
    j: &Ideal,
    sigma: &Congruence,
) -> Result<(Congruence, Ideal)> {
    same_size(t.size(), sigma.size())?;
    let translate =
        |a: usize| -> BTreeSet<usize> { j.members().iter().map(|&m| t.add(a, m)).collect() };
    let cosets: Vec<BTreeSet<usize>> = t.elements().map(translate).collect();
    let rho_j = Congruence::from_relation(
        t,
        &PairRelation::from_fn(t.size(), |a, b| cosets[a] == cosets[b]),
    )?;
    let members = t
        .elements()
        .filter(|&a| sigma.contains(a, t.zero()))
        .collect();
    Ok((rho_j, Ideal::new(t, members)?))
}
