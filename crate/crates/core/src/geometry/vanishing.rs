use std::collections::HashMap;

use super::{partition_by_key, point_index, zero_set_of_partition, Variety};
use crate::congruence::{quotient_unchecked, same_size, Congruence};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::polynomial::{FunctionSemiring, Polynomial};

/// Largest image of the function semiring in `(B/ρ)^Y` that the primality
/// test will scan (the scan is quartic).
pub const PRIME_SCAN_MAX: usize = 128;

/// `ρ_B(Y)` as a partition of the function semiring.
///
/// Each function is keyed by the `ρ`-classes of its values on `Y`; two
/// functions are related exactly when their keys agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingCongruence {
    partition: Partition,
    /// Indices of the points of `Y`.
    points: Vec<usize>,
}

pub fn vanishing(
    fs: &FunctionSemiring,
    y: &Variety,
    rho: &Congruence,
) -> Result<VanishingCongruence> {
    same_size(fs.target().size(), rho.size())?;
    if y.num_vars() != fs.arity() {
        return Err(Error::Arity {
            expected: fs.arity(),
            actual: y.num_vars(),
        });
    }
    let size = fs.target().size();
    let points: Vec<usize> = y.points().iter().map(|p| point_index(size, p)).collect();
    let partition = partition_by_key((0..fs.len()).map(|f| {
        points
            .iter()
            .map(|&i| rho.class_of(fs.value(f, i)))
            .collect::<Vec<_>>()
    }));
    Ok(VanishingCongruence { partition, points })
}

impl VanishingCongruence {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_classes()
    }

    pub fn contains_functions(&self, f: usize, g: usize) -> bool {
        self.partition.same(f, g)
    }

    /// Membership of a syntactic pair, decided through the induced functions.
    pub fn contains(&self, fs: &FunctionSemiring, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        Ok(self.contains_functions(fs.function_of(f)?, fs.function_of(g)?))
    }

    /// Whether `ρ_B(Y)` is a prime congruence on `S`.
    ///
    /// `S/ρ_B(Y)` is isomorphic to the image `Q` of the function semiring in
    /// `(B/ρ)^Y` under pointwise operations, so primality of `ρ_B(Y)` is
    /// primality of the identity on `Q`: properness plus
    /// `ac + bd = ad + bc ⇒ a = b or c = d`.
    pub fn is_prime(&self, fs: &FunctionSemiring, rho: &Congruence) -> Result<bool> {
        same_size(fs.target().size(), rho.size())?;
        same_size(fs.len(), self.partition.size())?;
        if self.partition.same(fs.zero(), fs.one()) {
            return Ok(false);
        }
        let q = self.partition.num_classes();
        if q > PRIME_SCAN_MAX {
            return Err(Error::BoundExceeded {
                what: "image size for the primality scan",
                actual: q,
                bound: PRIME_SCAN_MAX,
            });
        }
        let (quot, _) = quotient_unchecked(fs.target(), rho)?;
        let key = |f: usize| -> Vec<usize> {
            self.points
                .iter()
                .map(|&i| rho.class_of(fs.value(f, i)))
                .collect()
        };
        let keys: Vec<Vec<usize>> = self
            .partition
            .representatives()
            .into_iter()
            .map(key)
            .collect();
        let index: HashMap<&[usize], usize> = keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.as_slice(), i))
            .collect();
        let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
            let mut out = Vec::with_capacity(q * q);
            for a in &keys {
                for b in &keys {
                    let v: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect();
                    out.push(index[v.as_slice()]);
                }
            }
            out
        };
        let add = table(&|x, y| quot.add(x, y));
        let mul = table(&|x, y| quot.mul(x, y));
        let (add, mul) = (
            |x: usize, y: usize| add[x * q + y],
            |x: usize, y: usize| mul[x * q + y],
        );
        for a in 0..q {
            for b in a + 1..q {
                for c in a..q {
                    for d in c + 1..q {
                        if add(mul(a, c), mul(b, d)) == add(mul(a, d), mul(b, c)) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `Z_ρ(ρ_B(Y))(B)`, the closure of `Y` when `ρ` is prime.
pub fn closure(fs: &FunctionSemiring, y: &Variety, rho: &Congruence) -> Result<Variety> {
    let v = vanishing(fs, y, rho)?;
    zero_set_of_partition(fs, &v.partition, rho)
}
