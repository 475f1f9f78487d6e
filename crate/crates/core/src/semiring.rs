//! Finite commutative semirings given by operation tables.
//!
//! A [`SemiringTable`] has carrier `0..size` with explicit `zero` and `one`
//! ids; display labels are metadata. Construction only checks the table
//! *shape*. Whether the axioms hold is reported separately by
//! [`validate_axioms`], so that broken tables can still be inspected.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// The two operations of a commutative semiring over some element type.
///
/// Implemented by finite tables, by the natural numbers and by polynomial
/// semirings, so that the twisted-product calculus is written once.
pub trait SemiringOps {
    type Elem: Clone + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// `k·x`, i.e. `x + … + x` with `k` summands (the natural-number action).
    fn nat_multiple(&self, k: u64, x: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    fn pow(&self, x: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }
}

/// Which table an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemiringTable {
    name: String,
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl SemiringTable {
    /// Builds a table from row-major `size × size` operation tables.
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        let flatten = |op: &str, rows: Vec<Vec<usize>>| -> Result<Vec<usize>> {
            if rows.len() != size {
                return Err(Error::MalformedTable(format!(
                    "{op} table has {} rows, expected {size}",
                    rows.len()
                )));
            }
            let mut flat = Vec::with_capacity(size * size);
            for (i, row) in rows.into_iter().enumerate() {
                if row.len() != size {
                    return Err(Error::MalformedTable(format!(
                        "{op} row {i} has {} entries, expected {size}",
                        row.len()
                    )));
                }
                flat.extend(row);
            }
            Ok(flat)
        };
        let add = flatten("add", add)?;
        let mul = flatten("mul", mul)?;
        Self::from_flat(name.into(), labels, add, mul, zero, one)
    }

    /// Builds a table by evaluating `add`/`mul` on every pair of ids.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let size = labels.len();
        let mut a = Vec::with_capacity(size * size);
        let mut m = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                a.push(add(x, y));
                m.push(mul(x, y));
            }
        }
        Self::from_flat(name.into(), labels, a, m, zero, one)
    }

    fn from_flat(
        name: String,
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&e| e >= size) {
            return Err(Error::MalformedTable(format!(
                "entry {bad} out of range for carrier of size {size}"
            )));
        }
        for (what, id) in [("zero", zero), ("one", one)] {
            if id >= size {
                return Err(Error::MalformedTable(format!(
                    "{what} id {id} out of range"
                )));
            }
        }
        let distinct: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        if distinct.len() != size {
            return Err(Error::MalformedTable("duplicate element labels".into()));
        }
        Ok(Self {
            name,
            labels,
            add,
            mul,
            zero,
            one,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn op(&self, op: Op, a: usize, b: usize) -> usize {
        match op {
            Op::Add => self.add(a, b),
            Op::Mul => self.mul(a, b),
        }
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn check_element(&self, id: usize) -> Result<()> {
        if id < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                id,
                size: self.size(),
            })
        }
    }

    /// Copy with a single table entry replaced.
    pub fn with_entry(&self, op: Op, a: usize, b: usize, value: usize) -> Result<Self> {
        for id in [a, b] {
            self.check_element(id)?;
        }
        if value >= self.size() {
            return Err(Error::MalformedTable(format!(
                "entry {value} out of range for carrier of size {}",
                self.size()
            )));
        }
        let mut out = self.clone();
        let idx = a * self.size() + b;
        match op {
            Op::Add => out.add[idx] = value,
            Op::Mul => out.mul[idx] = value,
        }
        Ok(out)
    }

    /// The isomorphic copy in which element `x` is renamed `perm[x]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Parameter("relabeling is not a permutation".into()));
        }
        let mut inverse = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inverse[p] = x;
        }
        let labels = (0..n).map(|i| self.labels[inverse[i]].clone()).collect();
        Self::from_fn(
            self.name.clone(),
            labels,
            perm[self.zero],
            perm[self.one],
            |x, y| perm[self.add(inverse[x], inverse[y])],
            |x, y| perm[self.mul(inverse[x], inverse[y])],
        )
    }

    /// Fails with [`Error::AxiomsViolated`] unless every axiom holds.
    pub fn require_valid(&self) -> Result<()> {
        let report = validate_axioms(self);
        if report.passed {
            Ok(())
        } else {
            Err(Error::AxiomsViolated(format!(
                "{}: {}",
                self.name,
                report
                    .violations
                    .iter()
                    .map(|v| v.axiom.name())
                    .collect::<Vec<_>>()
                    .join(", ")
            )))
        }
    }

    /// Fast yes/no axiom check that stops at the first violation.
    pub fn is_semiring(&self) -> bool {
        scan_axioms(self, true).is_empty()
    }
}

impl SemiringOps for SemiringTable {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn one(&self) -> usize {
        self.one
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        SemiringTable::add(self, *a, *b)
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        SemiringTable::mul(self, *a, *b)
    }
}

/// The semiring `(ℤ≥0, +, ·)` with exact `u64` arithmetic.
///
/// Only used for bounded-window evaluation; overflow panics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Naturals;

impl SemiringOps for Naturals {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        a.checked_add(*b)
            .expect("natural-number overflow in window arithmetic")
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a.checked_mul(*b)
            .expect("natural-number overflow in window arithmetic")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    ZeroAbsorbing,
    OneNotZero,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::AddIdentity,
        Axiom::MulAssociative,
        Axiom::MulCommutative,
        Axiom::MulIdentity,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
        Axiom::ZeroAbsorbing,
        Axiom::OneNotZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulAssociative => "mul-associative",
            Axiom::MulCommutative => "mul-commutative",
            Axiom::MulIdentity => "mul-identity",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
            Axiom::ZeroAbsorbing => "zero-absorbing",
            Axiom::OneNotZero => "one-not-zero",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// The element ids that break the axiom, in the order they appear in it.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Exhaustively checks every semiring axiom; one violation (with the first
/// witness found) is listed per broken axiom.
pub fn validate_axioms(table: &SemiringTable) -> AxiomReport {
    let violations = scan_axioms(table, false);
    AxiomReport {
        passed: violations.is_empty(),
        violations,
    }
}

fn scan_axioms(t: &SemiringTable, stop_at_first: bool) -> Vec<Violation> {
    let n = t.size();
    let mut out: Vec<Violation> = Vec::new();
    let record = |out: &mut Vec<Violation>, axiom: Axiom, witness: Vec<usize>| {
        if !out.iter().any(|v| v.axiom == axiom) {
            out.push(Violation { axiom, witness });
        }
    };

    if t.one == t.zero {
        record(&mut out, Axiom::OneNotZero, vec![t.one]);
        if stop_at_first {
            return out;
        }
    }
    // Cheap pairwise axioms first so the fast path rejects early.
    for a in 0..n {
        if t.add(a, t.zero) != a || t.add(t.zero, a) != a {
            record(&mut out, Axiom::AddIdentity, vec![a]);
        }
        if t.mul(a, t.one) != a || t.mul(t.one, a) != a {
            record(&mut out, Axiom::MulIdentity, vec![a]);
        }
        if t.mul(a, t.zero) != t.zero || t.mul(t.zero, a) != t.zero {
            record(&mut out, Axiom::ZeroAbsorbing, vec![a]);
        }
        for b in 0..n {
            if t.add(a, b) != t.add(b, a) {
                record(&mut out, Axiom::AddCommutative, vec![a, b]);
            }
            if t.mul(a, b) != t.mul(b, a) {
                record(&mut out, Axiom::MulCommutative, vec![a, b]);
            }
        }
        if stop_at_first && !out.is_empty() {
            return out;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab_sum = t.add(a, b);
            let ab_prod = t.mul(a, b);
            for c in 0..n {
                if t.add(ab_sum, c) != t.add(a, t.add(b, c)) {
                    record(&mut out, Axiom::AddAssociative, vec![a, b, c]);
                }
                if t.mul(ab_prod, c) != t.mul(a, t.mul(b, c)) {
                    record(&mut out, Axiom::MulAssociative, vec![a, b, c]);
                }
                if t.mul(a, t.add(b, c)) != t.add(ab_prod, t.mul(a, c)) {
                    record(&mut out, Axiom::LeftDistributive, vec![a, b, c]);
                }
                if t.mul(ab_sum, c) != t.add(t.mul(a, c), t.mul(b, c)) {
                    record(&mut out, Axiom::RightDistributive, vec![a, b, c]);
                }
                if stop_at_first && !out.is_empty() {
                    return out;
                }
            }
        }
    }
    out.sort_by_key(|v| v.axiom);
    out
}

/// The builtin families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `{0, 1}` with `1 + 1 = 1`.
    Boolean,
    /// Integers modulo `n` (`n ≥ 2`).
    ZMod(usize),
    /// `{0, …, k}` with addition and multiplication saturating at `k` (`k ≥ 1`).
    TruncatedNat(usize),
    /// `{∞, 0, 1, …, k}` with `⊕ = min` and `⊗` = addition saturating at `k` (`k ≥ 1`).
    MinPlusChain(usize),
}

impl Builtin {
    pub fn parse(kind: &str, param: Option<usize>) -> Result<Self> {
        let need = |what: &str| {
            param.ok_or_else(|| Error::Parameter(format!("builtin {what} needs a parameter")))
        };
        match kind {
            "boolean" => match param {
                None => Ok(Builtin::Boolean),
                Some(_) => Err(Error::Parameter(
                    "builtin boolean takes no parameter".into(),
                )),
            },
            "zmod" => Ok(Builtin::ZMod(need("zmod")?)),
            "truncated_nat" => Ok(Builtin::TruncatedNat(need("truncated_nat")?)),
            "minplus_chain" => Ok(Builtin::MinPlusChain(need("minplus_chain")?)),
            other => Err(Error::Parameter(format!("unknown builtin kind `{other}`"))),
        }
    }

    pub fn carrier_size(self) -> usize {
        match self {
            Builtin::Boolean => 2,
            Builtin::ZMod(n) => n,
            Builtin::TruncatedNat(k) => k + 1,
            Builtin::MinPlusChain(k) => k + 2,
        }
    }

    pub fn build(self) -> Result<SemiringTable> {
        match self {
            Builtin::Boolean => {
                SemiringTable::from_fn("boolean", numerals(2), 0, 1, |a, b| a | b, |a, b| a & b)
            }
            Builtin::ZMod(n) => {
                if n < 2 {
                    return Err(Error::Parameter(format!("zmod needs n >= 2, got {n}")));
                }
                SemiringTable::from_fn(
                    format!("zmod {n}"),
                    numerals(n),
                    0,
                    1,
                    |a, b| (a + b) % n,
                    |a, b| (a * b) % n,
                )
            }
            Builtin::TruncatedNat(k) => {
                if k < 1 {
                    return Err(Error::Parameter(format!(
                        "truncated_nat needs k >= 1, got {k}"
                    )));
                }
                SemiringTable::from_fn(
                    format!("truncated_nat {k}"),
                    numerals(k + 1),
                    0,
                    1,
                    |a, b| (a + b).min(k),
                    |a, b| (a * b).min(k),
                )
            }
            Builtin::MinPlusChain(k) => {
                if k < 1 {
                    return Err(Error::Parameter(format!(
                        "minplus_chain needs k >= 1, got {k}"
                    )));
                }
                // id 0 is ∞; id i + 1 is the value i.
                let mut labels = vec!["inf".to_string()];
                labels.extend(numerals(k + 1));
                SemiringTable::from_fn(
                    format!("minplus_chain {k}"),
                    labels,
                    0,
                    1,
                    |a, b| match (a, b) {
                        (0, x) | (x, 0) => x,
                        (x, y) => x.min(y),
                    },
                    |a, b| match (a, b) {
                        (0, _) | (_, 0) => 0,
                        (x, y) => ((x - 1) + (y - 1)).min(k) + 1,
                    },
                )
            }
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Boolean => write!(f, "boolean"),
            Builtin::ZMod(n) => write!(f, "zmod {n}"),
            Builtin::TruncatedNat(k) => write!(f, "truncated_nat {k}"),
            Builtin::MinPlusChain(k) => write!(f, "minplus_chain {k}"),
        }
    }
}

fn numerals(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn builtin(kind: Builtin) -> Result<SemiringTable> {
    kind.build()
}

/// Every builtin whose carrier has at most `max_size` elements, in a fixed order.
pub fn builtins_up_to(max_size: usize) -> Vec<SemiringTable> {
    let mut kinds = vec![Builtin::Boolean];
    kinds.extend((2..=max_size).map(Builtin::ZMod));
    kinds.extend((1..max_size).map(Builtin::TruncatedNat));
    kinds.extend((1..max_size.saturating_sub(1)).map(Builtin::MinPlusChain));
    kinds
        .into_iter()
        .filter(|k| k.carrier_size() <= max_size)
        .map(|k| k.build().expect("builtin parameters are in range"))
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SemiringFlags {
    pub semidomain: bool,
    pub semifield: bool,
    pub additive_annihilation: bool,
    pub additively_idempotent: bool,
}

pub fn classify_semiring(t: &SemiringTable) -> SemiringFlags {
    let n = t.size();
    let nonzero = || (0..n).filter(move |&a| a != t.zero());
    let semidomain = nonzero().all(|a| nonzero().all(|b| t.mul(a, b) != t.zero()));
    let semifield = semidomain && nonzero().all(|a| nonzero().any(|b| t.mul(a, b) == t.one()));
    let additive_annihilation =
        (0..n).all(|a| (0..n).all(|b| a == b || (0..n).all(|c| t.add(a, c) != t.add(b, c))));
    let additively_idempotent = (0..n).all(|a| t.add(a, a) == a);
    SemiringFlags {
        semidomain,
        semifield,
        additive_annihilation,
        additively_idempotent,
    }
}

/// `A × A` with componentwise addition and the twisted product
/// `(a, b) ∗ (c, d) = (ac + bd, ad + bc)`; the pair `(a, b)` has id `a·|A| + b`.
pub fn pair_semiring(t: &SemiringTable) -> SemiringTable {
    let n = t.size();
    let split = |x: usize| (x / n, x % n);
    let labels = (0..n * n)
        .map(|x| {
            let (a, b) = split(x);
            format!("{}:{}", t.label(a), t.label(b))
        })
        .collect();
    SemiringTable::from_fn(
        format!("pairs({})", t.name()),
        labels,
        t.zero() * n + t.zero(),
        t.one() * n + t.zero(),
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            t.add(a, c) * n + t.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            let left = t.add(t.mul(a, c), t.mul(b, d));
            let right = t.add(t.mul(a, d), t.mul(b, c));
            left * n + right
        },
    )
    .expect("pair semiring has in-range entries")
}

/// An ideal: a subset containing zero, closed under addition and under
/// multiplication by arbitrary elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    members: BTreeSet<usize>,
}

impl Ideal {
    pub fn new(t: &SemiringTable, members: BTreeSet<usize>) -> Result<Self> {
        for &m in &members {
            t.check_element(m)?;
        }
        if ideal_check(t, &members) {
            Ok(Self { members })
        } else {
            Err(Error::NotIdeal)
        }
    }

    pub fn zero_ideal(t: &SemiringTable) -> Self {
        Self {
            members: BTreeSet::from([t.zero()]),
        }
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(&a)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }
}

pub fn ideal_check(t: &SemiringTable, members: &BTreeSet<usize>) -> bool {
    if !members.contains(&t.zero()) || members.iter().any(|&m| m >= t.size()) {
        return false;
    }
    members.iter().all(|&a| {
        members.iter().all(|&b| members.contains(&t.add(a, b)))
            && t.elements().all(|x| members.contains(&t.mul(x, a)))
    })
}

/// All ideals, by subset enumeration (carriers of at most 16 elements).
pub fn all_ideals(t: &SemiringTable) -> Result<Vec<Ideal>> {
    let n = t.size();
    if n > 16 {
        return Err(Error::BoundExceeded {
            what: "carrier size for ideal enumeration",
            actual: n,
            bound: 16,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if ideal_check(t, &members) {
            out.push(Ideal { members });
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_is_idempotent() {
        let b = builtin(Builtin::Boolean).unwrap();
        assert_eq!(b.add(1, 1), 1);
        assert!(validate_axioms(&b).passed);
    }

    #[test]
    fn truncated_nat_saturates() {
        let t = builtin(Builtin::TruncatedNat(2)).unwrap();
        assert_eq!(t.add(1, 2), 2);
        assert_eq!(t.mul(2, 2), 2);
        assert!(validate_axioms(&t).passed);
    }

    #[test]
    fn minplus_chain_infinity() {
        let t = builtin(Builtin::MinPlusChain(2)).unwrap();
        let inf = t.element("inf").unwrap();
        let one = t.element("1").unwrap();
        assert_eq!(t.add(inf, one), one);
        assert_eq!(t.mul(inf, one), inf);
        assert_eq!(t.zero(), inf);
        assert_eq!(t.label(t.one()), "0");
        assert!(validate_axioms(&t).passed);
    }

    #[test]
    fn builtin_parameters_checked() {
        assert!(matches!(Builtin::ZMod(1).build(), Err(Error::Parameter(_))));
        assert!(matches!(
            Builtin::TruncatedNat(0).build(),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            Builtin::MinPlusChain(0).build(),
            Err(Error::Parameter(_))
        ));
        assert!(Builtin::parse("zmod", None).is_err());
        assert!(Builtin::parse("octonions", Some(3)).is_err());
    }

    #[test]
    fn zmod6_passes_and_flipped_entry_fails() {
        let z = builtin(Builtin::ZMod(6)).unwrap();
        assert!(validate_axioms(&z).passed);
        let broken = z.with_entry(Op::Add, 2, 3, 4).unwrap();
        let report = validate_axioms(&broken);
        assert!(!report.passed);
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::AddCommutative && v.witness == vec![2, 3]));
    }

    #[test]
    fn out_of_range_entry_is_structural() {
        let z = builtin(Builtin::ZMod(3)).unwrap();
        assert!(matches!(
            z.with_entry(Op::Mul, 1, 1, 7),
            Err(Error::MalformedTable(_))
        ));
        let labels = numerals(2);
        let err = SemiringTable::from_tables(
            "bad",
            labels,
            vec![vec![0, 1], vec![1, 2]],
            vec![vec![0, 0], vec![0, 1]],
            0,
            1,
        );
        assert!(matches!(err, Err(Error::MalformedTable(_))));
    }

    #[test]
    fn noncommutative_multiplication_rejected() {
        // Left-zero multiplication on {0, 1, 2} apart from the forced rows.
        let z = builtin(Builtin::TruncatedNat(2)).unwrap();
        let broken = z.with_entry(Op::Mul, 2, 1, 1).unwrap();
        let report = validate_axioms(&broken);
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::MulCommutative));
    }

    #[test]
    fn classify_examples() {
        let b = classify_semiring(&builtin(Builtin::Boolean).unwrap());
        assert!(b.semifield && b.semidomain && b.additively_idempotent);
        assert!(!b.additive_annihilation);
        let z6 = classify_semiring(&builtin(Builtin::ZMod(6)).unwrap());
        assert!(!z6.semidomain && z6.additive_annihilation);
        let t2 = classify_semiring(&builtin(Builtin::TruncatedNat(2)).unwrap());
        assert!(t2.semidomain && !t2.semifield && !t2.additive_annihilation);
    }

    #[test]
    fn pair_semiring_units() {
        for t in builtins_up_to(4) {
            let p = pair_semiring(&t);
            assert!(validate_axioms(&p).passed, "{}", t.name());
            let n = t.size();
            for a in t.elements() {
                for b in t.elements() {
                    let x = a * n + b;
                    assert_eq!(p.mul(x, p.one()), x);
                    assert_eq!(p.add(x, p.zero()), x);
                }
            }
        }
    }

    #[test]
    fn ideals_of_zmod6() {
        let z = builtin(Builtin::ZMod(6)).unwrap();
        assert!(ideal_check(&z, &BTreeSet::from([0, 2, 4])));
        assert!(ideal_check(&z, &BTreeSet::from([0])));
        assert!(!ideal_check(&z, &BTreeSet::from([0, 2])));
        assert_eq!(all_ideals(&z).unwrap().len(), 4);
    }

    #[test]
    fn nat_multiple_matches_repeated_addition() {
        let z = builtin(Builtin::ZMod(7)).unwrap();
        for k in 0..20u64 {
            let mut acc = 0;
            for _ in 0..k {
                acc = z.add(acc, 3);
            }
            assert_eq!(SemiringOps::nat_multiple(&z, k, &3), acc);
        }
    }

    #[test]
    fn relabeling_is_an_isomorphism() {
        let t = builtin(Builtin::MinPlusChain(2)).unwrap();
        let perm = [3, 1, 0, 2];
        let r = t.relabeled(&perm).unwrap();
        assert!(validate_axioms(&r).passed);
        for a in t.elements() {
            for b in t.elements() {
                assert_eq!(perm[t.add(a, b)], r.add(perm[a], perm[b]));
                assert_eq!(perm[t.mul(a, b)], r.mul(perm[a], perm[b]));
            }
        }
        assert!(t.relabeled(&[0, 0, 1, 2]).is_err());
    }
}
