use crate::error::{Error, Result};
use crate::semiring::SemiringTable;

/// A coefficient semiring `A` sitting inside a target semiring `B` through an
/// injective homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedSemiring {
    coeff: SemiringTable,
    target: SemiringTable,
    embed: Vec<usize>,
}

impl EmbeddedSemiring {
    /// Checks the map exhaustively: injective, preserves `0`, `1`, `+`, `·`.
    pub fn new(coeff: SemiringTable, target: SemiringTable, embed: Vec<usize>) -> Result<Self> {
        if let Some(reason) = embedding_defect(&coeff, &target, &embed) {
            return Err(Error::Embedding(reason));
        }
        Ok(Self {
            coeff,
            target,
            embed,
        })
    }

    /// `A ⊂ A` via the identity.
    pub fn identity(t: SemiringTable) -> Self {
        let embed = t.elements().collect();
        Self {
            coeff: t.clone(),
            target: t,
            embed,
        }
    }

    /// Finds an embedding: first by matching labels, then by backtracking
    /// over injective maps in lexicographic order.
    pub fn find(coeff: SemiringTable, target: SemiringTable) -> Result<Self> {
        let by_label: Option<Vec<usize>> =
            coeff.labels().iter().map(|l| target.element(l)).collect();
        if let Some(map) = by_label {
            if embedding_defect(&coeff, &target, &map).is_none() {
                return Ok(Self {
                    coeff,
                    target,
                    embed: map,
                });
            }
        }
        let mut map = Vec::with_capacity(coeff.size());
        let mut used = vec![false; target.size()];
        if backtrack(&coeff, &target, &mut map, &mut used) {
            return Ok(Self {
                coeff,
                target,
                embed: map,
            });
        }
        Err(Error::Embedding(format!(
            "no embedding of {} into {}",
            coeff.name(),
            target.name()
        )))
    }

    pub fn coeff(&self) -> &SemiringTable {
        &self.coeff
    }

    pub fn target(&self) -> &SemiringTable {
        &self.target
    }

    pub fn embed(&self, a: usize) -> usize {
        self.embed[a]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embed
    }

    /// The image of `A` in `B`, in increasing order of `B`-ids.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.embed.clone();
        v.sort_unstable();
        v
    }

    /// The element of `A` mapping to `b`, if any.
    pub fn preimage(&self, b: usize) -> Option<usize> {
        self.embed.iter().position(|&x| x == b)
    }

    pub fn evaluate(&self, f: &super::Polynomial, point: &[usize]) -> Result<usize> {
        f.evaluate(&self.target, |&c| self.embed[c], point)
    }
}

fn embedding_defect(a: &SemiringTable, b: &SemiringTable, map: &[usize]) -> Option<String> {
    if map.len() != a.size() {
        return Some(format!(
            "map has {} entries for {} elements",
            map.len(),
            a.size()
        ));
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= b.size()) {
        return Some(format!("image {bad} out of range"));
    }
    let mut seen = vec![false; b.size()];
    for &x in map {
        if std::mem::replace(&mut seen[x], true) {
            return Some("map is not injective".into());
        }
    }
    if map[a.zero()] != b.zero() || map[a.one()] != b.one() {
        return Some("map does not preserve 0 and 1".into());
    }
    for x in a.elements() {
        for y in a.elements() {
            if map[a.add(x, y)] != b.add(map[x], map[y])
                || map[a.mul(x, y)] != b.mul(map[x], map[y])
            {
                return Some(format!(
                    "operations not preserved at ({}, {})",
                    a.label(x),
                    a.label(y)
                ));
            }
        }
    }
    None
}

fn backtrack(
    a: &SemiringTable,
    b: &SemiringTable,
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = map.len();
    if i == a.size() {
        return embedding_defect(a, b, map).is_none();
    }
    for v in 0..b.size() {
        if used[v] {
            continue;
        }
        map.push(v);
        used[v] = true;
        // Prune on every equation whose operands are already mapped.
        let consistent = (0..=i).all(|x| {
            (0..=i).all(|y| {
                let check = |r: usize, w: usize| r > i || map[r] == w;
                check(a.add(x, y), b.add(map[x], map[y]))
                    && check(a.mul(x, y), b.mul(map[x], map[y]))
            })
        }) && (a.zero() > i || map[a.zero()] == b.zero())
            && (a.one() > i || map[a.one()] == b.one());
        if consistent && backtrack(a, b, map, used) {
            return true;
        }
        used[v] = false;
        map.pop();
    }
    false
}
