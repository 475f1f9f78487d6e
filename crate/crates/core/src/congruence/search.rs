//! Seeded search for maximal congruences that are not prime.
//!
//! Whether such congruences exist in general is not known; this only looks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{classify, enumerate_congruences, Congruence};
use crate::error::{Error, Result};
use crate::semiring::{classify_semiring, SemiringTable};

/// Attempts at a multiplication table before the addition table is redrawn.
const MUL_RETRIES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub min_size: usize,
    pub max_size: usize,
    pub seed: u64,
    pub count: usize,
}

impl SearchConfig {
    pub fn new(seed: u64, count: usize, max_size: usize) -> Self {
        Self {
            min_size: 2,
            max_size,
            seed,
            count,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalNonprimeHit {
    pub sample: usize,
    pub table: SemiringTable,
    pub congruence: Congruence,
    pub plus_saturated: bool,
    pub additively_idempotent: bool,
}

impl MaximalNonprimeHit {
    /// A hit that contradicts a known sufficient condition for primality
    /// (`ρ = ρ_+`, or an additively idempotent carrier) and so points at a bug.
    pub fn contradicts_known_results(&self) -> bool {
        self.plus_saturated || self.additively_idempotent
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub samples: usize,
    pub additively_idempotent_samples: usize,
    pub maximal: usize,
    pub maximal_plus_saturated: usize,
    pub hits: Vec<MaximalNonprimeHit>,
}

impl SearchReport {
    pub fn flagged(&self) -> usize {
        self.hits
            .iter()
            .filter(|h| h.contradicts_known_results())
            .count()
    }

    /// Stable `key=value` rendering.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("samples={}", self.samples),
            format!(
                "additively_idempotent_samples={}",
                self.additively_idempotent_samples
            ),
            format!("maximal={}", self.maximal),
            format!("maximal_plus_saturated={}", self.maximal_plus_saturated),
            format!("maximal_nonprime={}", self.hits.len()),
            format!("flagged={}", self.flagged()),
        ];
        for h in &self.hits {
            out.push(format!(
                "hit sample={} size={} congruence={} plus_saturated={} additively_idempotent={}",
                h.sample,
                h.table.size(),
                h.congruence.display(&h.table),
                h.plus_saturated,
                h.additively_idempotent
            ));
        }
        out
    }
}

/// A uniformly drawn table accepted by the axiom validator, with zero at id
/// 0 and one at id 1. The addition table is drawn and checked for
/// associativity first, then multiplication tables are drawn against it.
pub fn random_semiring(rng: &mut impl Rng, size: usize, name: &str) -> Result<SemiringTable> {
    if size < 2 {
        return Err(Error::Parameter(format!(
            "random semirings need size >= 2, got {size}"
        )));
    }
    let labels: Vec<String> = (0..size).map(|i| i.to_string()).collect();
    loop {
        let add = draw_symmetric(rng, size, |a, b| match (a, b) {
            (0, x) | (x, 0) => Some(x),
            _ => None,
        });
        if !associative(size, &add) {
            continue;
        }
        for _ in 0..MUL_RETRIES {
            let mul = draw_symmetric(rng, size, |a, b| match (a, b) {
                (0, _) | (_, 0) => Some(0),
                (1, x) | (x, 1) => Some(x),
                _ => None,
            });
            let t = SemiringTable::from_fn(
                name,
                labels.clone(),
                0,
                1,
                |a, b| add[a * size + b],
                |a, b| mul[a * size + b],
            )?;
            if t.is_semiring() {
                return Ok(t);
            }
        }
    }
}

fn draw_symmetric(
    rng: &mut impl Rng,
    n: usize,
    forced: impl Fn(usize, usize) -> Option<usize>,
) -> Vec<usize> {
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let v = forced(a, b).unwrap_or_else(|| rng.gen_range(0..n));
            table[a * n + b] = v;
            table[b * n + a] = v;
        }
    }
    table
}

fn associative(n: usize, op: &[usize]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| op[op[a * n + b] * n + c] == op[a * n + op[b * n + c]]))
    })
}

pub fn search_maximal_nonprime(config: &SearchConfig) -> Result<SearchReport> {
    if config.min_size < 2 || config.min_size > config.max_size {
        return Err(Error::Parameter(format!(
            "size range {}..={} is empty or below 2",
            config.min_size, config.max_size
        )));
    }
    if config.max_size > super::DEFAULT_MAX_SIZE {
        return Err(Error::BoundExceeded {
            what: "random semiring size",
            actual: config.max_size,
            bound: super::DEFAULT_MAX_SIZE,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = SearchReport::default();
    for sample in 0..config.count {
        let size = rng.gen_range(config.min_size..=config.max_size);
        let t = random_semiring(&mut rng, size, &format!("random{sample}"))?;
        let idempotent = classify_semiring(&t).additively_idempotent;
        report.samples += 1;
        report.additively_idempotent_samples += usize::from(idempotent);
        for rho in enumerate_congruences(&t, super::DEFAULT_MAX_SIZE)? {
            let c = classify(&t, &rho)?;
            if !c.maximal {
                continue;
            }
            report.maximal += 1;
            report.maximal_plus_saturated += usize::from(c.plus_saturated);
            if !c.prime {
                report.hits.push(MaximalNonprimeHit {
                    sample,
                    table: t.clone(),
                    congruence: rho,
                    plus_saturated: c.plus_saturated,
                    additively_idempotent: idempotent,
                });
            }
        }
    }
    Ok(report)
}
