use std::collections::BTreeSet;

use super::{zero_set, PairSystem};
use crate::congruence::{quotient_unchecked, Congruence};
use crate::error::Result;
use crate::polynomial::affine_points;

/// Both sides of `♯ Z_ρ(T)(B)/ρ = ♯ Hom_A(S/T^c, B/ρ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomCount {
    pub points: usize,
    pub homs: usize,
}

impl HomCount {
    pub fn agree(&self) -> bool {
        self.points == self.homs
    }
}

/// Counts points of the zero set up to `ρ`, and, separately, the
/// `A`-algebra maps `S/T^c → B/ρ`.
///
/// Such a map is determined by the images of the variables, and a tuple of
/// images extends to `S/T^c` exactly when every pair of `T` evaluates to
/// equal elements of `B/ρ`; the second count enumerates those tuples
/// without looking at `B` itself.
pub fn hom_count(t: &PairSystem, rho: &Congruence) -> Result<HomCount> {
    let z = zero_set(t, rho)?;
    let classes: BTreeSet<Vec<usize>> = z
        .points()
        .iter()
        .map(|p| p.iter().map(|&c| rho.class_of(c)).collect())
        .collect();

    let (quot, proj) = quotient_unchecked(t.ctx().target(), rho)?;
    let embed = |&c: &usize| proj[t.ctx().embed(c)];
    let mut homs = 0;
    for u in affine_points(quot.size(), t.num_vars()) {
        let mut ok = true;
        for (f, g) in t.pairs() {
            if f.evaluate(&quot, embed, &u)? != g.evaluate(&quot, embed, &u)? {
                ok = false;
                break;
            }
        }
        homs += usize::from(ok);
    }
    Ok(HomCount {
        points: classes.len(),
        homs,
    })
}
