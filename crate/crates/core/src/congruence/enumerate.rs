use super::{is_compatible, Congruence};
use crate::error::{Error, Result};
use crate::partition::SetPartitions;
use crate::semiring::SemiringTable;

/// Carrier-size limit for exhaustive enumeration; `Bell(8) = 4140` partitions.
pub const DEFAULT_MAX_SIZE: usize = 8;

/// Every congruence of `t`, in canonical order. Refuses carriers larger than
/// `max_size`.
pub fn enumerate_congruences(t: &SemiringTable, max_size: usize) -> Result<Vec<Congruence>> {
    if t.size() > max_size {
        return Err(Error::BoundExceeded {
            what: "carrier size for congruence enumeration",
            actual: t.size(),
            bound: max_size,
        });
    }
    Ok(enumerate_congruences_unbounded(t))
}

pub fn enumerate_congruences_unbounded(t: &SemiringTable) -> Vec<Congruence> {
    let mut out: Vec<Congruence> = SetPartitions::new(t.size())
        .filter(|p| is_compatible(t, p))
        .map(Congruence::from_partition_unchecked)
        .collect();
    out.sort();
    out
}
