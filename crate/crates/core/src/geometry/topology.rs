use super::Variety;
use crate::congruence::{classify, same_size, Congruence};
use crate::error::{Error, Result};
use crate::polynomial::FunctionSemiring;

pub const TOPOLOGY_MAX_POINTS: usize = 16;

/// The closed sets of the Zariski `ρ`-topology on a small `B^n`, as point
/// masks in lexicographic point order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    size: usize,
    num_vars: usize,
    closed: Vec<u64>,
}

/// Zero sets of single function pairs, closed under finite unions and
/// intersections.
///
/// The single-pair sets are read off by comparing value vectors over `B/ρ`
/// packed one byte per point, so a pair of functions costs a handful of
/// word operations.
pub fn materialize_topology(fs: &FunctionSemiring, rho: &Congruence) -> Result<Topology> {
    let b = fs.target();
    same_size(b.size(), rho.size())?;
    let np = fs.points().len();
    if np > TOPOLOGY_MAX_POINTS {
        return Err(Error::BoundExceeded {
            what: "points for a materialized topology",
            actual: np,
            bound: TOPOLOGY_MAX_POINTS,
        });
    }
    if !classify(b, rho)?.prime {
        return Err(Error::Parameter(
            "the Zariski topology needs a prime congruence".into(),
        ));
    }
    let mut vectors: Vec<u128> = (0..fs.len())
        .map(|f| {
            (0..np).fold(0u128, |acc, i| {
                acc | (rho.class_of(fs.value(f, i)) as u128) << (8 * i)
            })
        })
        .collect();
    vectors.sort_unstable();
    vectors.dedup();

    let full_mask: u64 = if np == 64 { u64::MAX } else { (1u64 << np) - 1 };
    let universe = 1usize << np;
    let mut seen = vec![false; universe];
    let mut family: Vec<u64> = Vec::new();
    let add = |m: u64, seen: &mut Vec<bool>, family: &mut Vec<u64>| {
        if !std::mem::replace(&mut seen[m as usize], true) {
            family.push(m);
        }
    };
    'pairs: for (i, &v) in vectors.iter().enumerate() {
        for &w in &vectors[i..] {
            add(equal_lanes(v ^ w) & full_mask, &mut seen, &mut family);
            if family.len() == universe {
                break 'pairs;
            }
        }
    }
    let mut i = 0;
    while i < family.len() && family.len() < universe {
        let x = family[i];
        let mut j = 0;
        while j <= i {
            let y = family[j];
            add(x | y, &mut seen, &mut family);
            add(x & y, &mut seen, &mut family);
            j += 1;
        }
        i += 1;
    }
    family.sort_unstable();
    Ok(Topology {
        size: b.size(),
        num_vars: fs.arity(),
        closed: family,
    })
}

/// Bit `i` set iff byte lane `i` of `x` is zero.
fn equal_lanes(x: u128) -> u64 {
    const LOW: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;
    let mut y = x | x >> 4;
    y |= y >> 2;
    y |= y >> 1;
    let mut f = !y & LOW;
    f = (f | f >> 7) & 0x0003_0003_0003_0003_0003_0003_0003_0003;
    f = (f | f >> 14) & 0x0000_000F_0000_000F_0000_000F_0000_000F;
    f = (f | f >> 28) & 0x0000_0000_0000_00FF_0000_0000_0000_00FF;
    f = (f | f >> 56) & 0xFFFF;
    f as u64
}

impl Topology {
    pub fn len(&self) -> usize {
        self.closed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.closed
    }

    pub fn closed_sets(&self) -> Vec<Variety> {
        self.closed
            .iter()
            .map(|&m| Variety::from_mask(self.size, self.num_vars, m))
            .collect()
    }

    pub fn is_closed(&self, y: &Variety) -> bool {
        self.closed.binary_search(&y.to_mask(self.size)).is_ok()
    }

    /// The intersection of all closed sets containing `y`.
    pub fn smallest_closed_superset(&self, y: &Variety) -> Variety {
        let m = y.to_mask(self.size);
        let meet = self
            .closed
            .iter()
            .filter(|&&c| c & m == m)
            .fold(u64::MAX, |acc, &c| acc & c);
        Variety::from_mask(self.size, self.num_vars, meet)
    }

    /// Whether `y` is non-empty and not the union of two proper subsets
    /// closed in the subspace topology of `y`.
    pub fn is_irreducible(&self, y: &Variety) -> bool {
        let m = y.to_mask(self.size);
        if m == 0 {
            return false;
        }
        let mut traces: Vec<u64> = self
            .closed
            .iter()
            .map(|&c| c & m)
            .filter(|&t| t != m)
            .collect();
        traces.sort_unstable();
        traces.dedup();
        !traces
            .iter()
            .enumerate()
            .any(|(i, &a)| traces[i..].iter().any(|&b| a | b == m))
    }
}

/// Irreducibility of `y` in the materialized topology.
pub fn is_irreducible(fs: &FunctionSemiring, y: &Variety, rho: &Congruence) -> Result<bool> {
    Ok(materialize_topology(fs, rho)?.is_irreducible(y))
}
