//! Membership-style geometry over the natural numbers, checked on the
//! window `{0, …, N}^n`.
//!
//! The only congruences handled are `a ≡ b (mod m)` (with `m = 0` meaning
//! equality). Every result describes the window only: zero sets are the
//! window points satisfying the system, and Nullstellensatz comparisons are
//! made on polynomials of bounded degree and coefficients.

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;

use super::partition_by_key;
use crate::congruence::{radical, Congruence};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::polynomial::{affine_points, Monomial, Polynomial};
use crate::semiring::{builtin, Builtin, Naturals};

pub const DEFAULT_WINDOW: u64 = 50;

/// Window points scanned before giving up.
pub const MAX_WINDOW_POINTS: usize = 1 << 20;

/// `a ≡ b (mod m)` on `ℤ≥0`; modulus 0 is the identity congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NatCongruence {
    modulus: u64,
}

impl NatCongruence {
    pub fn new(modulus: u64) -> Self {
        Self { modulus }
    }

    pub fn identity() -> Self {
        Self { modulus: 0 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn class_of(&self, a: u64) -> u64 {
        if self.modulus == 0 {
            a
        } else {
            a % self.modulus
        }
    }

    pub fn contains(&self, a: u64, b: u64) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    /// `√ρ`. Since `ℤ≥0 → ℤ/m` is onto, the radical is pulled back from the
    /// radical of the identity on `ℤ/m`, which is again `mod d` for some
    /// `d | m`. On `ℤ≥0` itself the identity is already radical.
    pub fn radical(&self) -> Result<NatCongruence> {
        match self.modulus {
            0 | 1 => Ok(*self),
            m => {
                let size = usize::try_from(m)
                    .map_err(|_| Error::Window(format!("modulus {m} too large")))?;
                let z = builtin(Builtin::ZMod(size))?;
                let r = radical(&z, &Congruence::identity(size))?;
                let d = (1..size).find(|&a| r.contains(a, 0)).unwrap_or(size);
                Ok(NatCongruence::new(d as u64))
            }
        }
    }
}

/// A non-empty system of pairs of polynomials over `ℤ≥0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatSystem {
    num_vars: usize,
    pairs: Vec<(Polynomial<u64>, Polynomial<u64>)>,
}

impl NatSystem {
    pub fn new(num_vars: usize, pairs: Vec<(Polynomial<u64>, Polynomial<u64>)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Parameter("a system needs at least one pair".into()));
        }
        if let Some(p) = pairs
            .iter()
            .flat_map(|(f, g)| [f, g])
            .find(|p| p.num_vars() != num_vars)
        {
            return Err(Error::Arity {
                expected: num_vars,
                actual: p.num_vars(),
            });
        }
        Ok(Self { num_vars, pairs })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn pairs(&self) -> &[(Polynomial<u64>, Polynomial<u64>)] {
        &self.pairs
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(f, g)| format!("{} = {}", render(f), render(g)))
            .collect();
        parts.join("; ")
    }
}

pub fn render(f: &Polynomial<u64>) -> String {
    f.render(|c| c.to_string(), |&c| c == 1, "0")
}

/// `f(P)` reduced by the congruence; exact (overflow is an error) when the
/// modulus is 0.
pub fn evaluate_mod(f: &Polynomial<u64>, point: &[u64], rho: &NatCongruence) -> Result<u64> {
    if point.len() != f.num_vars() {
        return Err(Error::Arity {
            expected: f.num_vars(),
            actual: point.len(),
        });
    }
    let m = rho.modulus;
    if m == 0 {
        let overflow = || Error::Window("value overflows u64".into());
        let mut acc: u64 = 0;
        for (mono, &c) in f.terms() {
            let mut term = c;
            for (&x, &e) in point.iter().zip(mono.exponents()) {
                term = term
                    .checked_mul(x.checked_pow(e).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
            acc = acc.checked_add(term).ok_or_else(overflow)?;
        }
        return Ok(acc);
    }
    let m = m as u128;
    let mut acc = 0u128;
    for (mono, &c) in f.terms() {
        let mut term = c as u128 % m;
        for (&x, &e) in point.iter().zip(mono.exponents()) {
            for _ in 0..e {
                term = term * (x as u128 % m) % m;
            }
        }
        acc = (acc + term) % m;
    }
    Ok(acc as u64)
}

fn window_points(window: u64, num_vars: usize) -> Result<Vec<Vec<u64>>> {
    let side = window
        .checked_add(1)
        .ok_or_else(|| Error::Window("window too large".into()))?;
    let count = (side as f64).powi(num_vars as i32);
    if count > MAX_WINDOW_POINTS as f64 {
        return Err(Error::BoundExceeded {
            what: "window points",
            actual: count.min(usize::MAX as f64) as usize,
            bound: MAX_WINDOW_POINTS,
        });
    }
    Ok(affine_points(side as usize, num_vars)
        .into_iter()
        .map(|p| p.into_iter().map(|c| c as u64).collect())
        .collect())
}

fn satisfies(t: &NatSystem, p: &[u64], rho: &NatCongruence) -> Result<bool> {
    for (f, g) in &t.pairs {
        if evaluate_mod(f, p, rho)? != evaluate_mod(g, p, rho)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Z_ρ(T) ∩ {0, …, N}^n`, sorted.
pub fn window_zero_set(t: &NatSystem, rho: &NatCongruence, window: u64) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for p in window_points(window, t.num_vars)? {
        if satisfies(t, &p, rho)? {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowHomCount {
    /// Residue classes of window zero-set points.
    pub points: usize,
    /// Tuples over `ℤ/m` satisfying the system.
    pub homs: usize,
    pub window: u64,
    /// Whether the window meets every residue class, so that `points`
    /// counts all of `Z_ρ(T)/ρ`.
    pub complete: bool,
}

impl WindowHomCount {
    pub fn line(&self) -> String {
        format!(
            "points={} homs={} window={}",
            self.points, self.homs, self.window
        )
    }
}

pub fn window_hom_count(t: &NatSystem, rho: &NatCongruence, window: u64) -> Result<WindowHomCount> {
    let m = rho.modulus;
    if m == 0 {
        return Err(Error::Window(
            "the identity congruence has infinitely many classes; use a modulus".into(),
        ));
    }
    let classes: BTreeSet<Vec<u64>> = window_zero_set(t, rho, window)?
        .into_iter()
        .map(|p| p.into_iter().map(|c| c % m).collect())
        .collect();
    let mut homs = 0;
    for u in window_points(m - 1, t.num_vars)? {
        homs += usize::from(satisfies(t, &u, rho)?);
    }
    Ok(WindowHomCount {
        points: classes.len(),
        homs,
        window,
        complete: window >= m - 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowNullstellensatzConfig {
    pub window: u64,
    pub degree_cap: u32,
    /// Largest coefficient enumerated; `None` means the modulus of `ρ`.
    pub coeff_cap: Option<u64>,
    pub max_polynomials: usize,
}

impl Default for WindowNullstellensatzConfig {
    fn default() -> Self {
        Self {
            window: DEFAULT_WINDOW,
            degree_cap: 3,
            coeff_cap: None,
            max_polynomials: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowNullstellensatzReport {
    pub window: u64,
    pub degree_cap: u32,
    pub coeff_cap: u64,
    pub polynomials: usize,
    pub zero_set_size: usize,
    pub lhs_classes: usize,
    pub rhs_classes: usize,
    pub inclusion_holds: bool,
    pub equality_holds: bool,
    pub violations: Vec<(Polynomial<u64>, Polynomial<u64>)>,
}

impl WindowNullstellensatzReport {
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("window={}", self.window),
            format!("degree_cap={}", self.degree_cap),
            format!("coeff_cap={}", self.coeff_cap),
            format!("polynomials={}", self.polynomials),
            format!("zero_set_size={}", self.zero_set_size),
            format!("lhs_classes={}", self.lhs_classes),
            format!("rhs_classes={}", self.rhs_classes),
            format!("inclusion_holds={}", self.inclusion_holds),
            format!("equality_holds={}", self.equality_holds),
        ];
        for (f, g) in &self.violations {
            out.push(format!("violation {} ~ {}", render(f), render(g)));
        }
        out.push(format!("verified for all values <= {}", self.window));
        out
    }
}

/// Capped polynomials as coefficient vectors over a fixed monomial list,
/// indexed in mixed radix `cap + 1`.
struct CappedSpace {
    monomials: Vec<Monomial>,
    cap: u64,
    num_vars: usize,
}

impl CappedSpace {
    fn count(&self) -> f64 {
        ((self.cap + 1) as f64).powi(self.monomials.len() as i32)
    }

    fn coeffs(&self, mut index: usize) -> Vec<u64> {
        let base = (self.cap + 1) as usize;
        (0..self.monomials.len())
            .map(|_| {
                let d = index % base;
                index /= base;
                d as u64
            })
            .collect()
    }

    fn index(&self, coeffs: &[u64]) -> Option<usize> {
        let base = (self.cap + 1) as usize;
        coeffs.iter().rev().try_fold(0usize, |acc, &c| {
            (c <= self.cap).then(|| acc * base + c as usize)
        })
    }

    /// Coefficient vector of `f`, if `f` lies in the capped space.
    fn vector(&self, f: &Polynomial<u64>) -> Option<Vec<u64>> {
        let mut v = vec![0; self.monomials.len()];
        for (m, &c) in f.terms() {
            let k = self.monomials.binary_search(m).ok()?;
            if c > self.cap {
                return None;
            }
            v[k] = c;
        }
        Some(v)
    }

    fn polynomial(&self, coeffs: &[u64]) -> Polynomial<u64> {
        self.monomials
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c != 0)
            .fold(Polynomial::zero(self.num_vars), |acc, (m, &c)| {
                acc.add(&Polynomial::term(&Naturals, m.clone(), c), &Naturals)
                    .expect("same arity")
            })
    }
}

/// Compares `(√(σ/ρ))^c` with `(√ρ)_A(Z_ρ(σ)(A))` for `σ = T^c` on the
/// polynomials of degree `≤ D` with coefficients `≤ C`.
///
/// The left side is approximated from below: `σ` is replaced by the pairs
/// `(a·x^e + y, b·x^e + y)` with `(a, b) ∈ T` that stay inside the cap, and
/// `√σ` by `σ`. The right side is evaluated on the window zero set. When the
/// two agree, equality holds on the capped polynomials.
pub fn window_nullstellensatz(
    t: &NatSystem,
    rho: &NatCongruence,
    cfg: &WindowNullstellensatzConfig,
) -> Result<WindowNullstellensatzReport> {
    let root = rho.radical()?;
    let cap = cfg.coeff_cap.unwrap_or(rho.modulus);
    if cap == 0 {
        return Err(Error::Window("coefficient cap must be positive".into()));
    }
    let space = CappedSpace {
        monomials: Monomial::up_to_degree(t.num_vars, cfg.degree_cap),
        cap,
        num_vars: t.num_vars,
    };
    if space.count() > cfg.max_polynomials as f64 {
        return Err(Error::BoundExceeded {
            what: "number of capped polynomials",
            actual: space.count().min(usize::MAX as f64) as usize,
            bound: cfg.max_polynomials,
        });
    }
    let total = space.count() as usize;
    let vectors: Vec<Vec<u64>> = (0..total).map(|i| space.coeffs(i)).collect();
    let lhs = lhs_partition(t, &root, &space, &vectors)?;

    let z = window_zero_set(t, rho, cfg.window)?;
    let polys: Vec<Polynomial<u64>> = vectors.iter().map(|v| space.polynomial(v)).collect();
    let keys = polys
        .iter()
        .map(|f| {
            z.iter()
                .map(|p| evaluate_mod(f, p, &root))
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = partition_by_key(keys.into_iter());

    let lreps = lhs.representatives();
    let mut violations = Vec::new();
    let mut inclusion_holds = true;
    for i in 0..total {
        let r = lreps[lhs.class_of(i)];
        if !rhs.same(i, r) {
            inclusion_holds = false;
            if violations.len() < 5 {
                violations.push((polys[r].clone(), polys[i].clone()));
            }
        }
    }
    Ok(WindowNullstellensatzReport {
        window: cfg.window,
        degree_cap: cfg.degree_cap,
        coeff_cap: cap,
        polynomials: total,
        zero_set_size: z.len(),
        lhs_classes: lhs.num_classes(),
        rhs_classes: rhs.num_classes(),
        inclusion_holds,
        equality_holds: lhs == rhs,
        violations,
    })
}

/// The `(√(σ/ρ))^c` classes of [`window_nullstellensatz`], exposed for
/// membership queries: whether `f` and `g` are related within the cap.
pub fn window_sqrt_related(
    t: &NatSystem,
    rho: &NatCongruence,
    cfg: &WindowNullstellensatzConfig,
    f: &Polynomial<u64>,
    g: &Polynomial<u64>,
) -> Result<Option<bool>> {
    let root = rho.radical()?;
    let cap = cfg.coeff_cap.unwrap_or(rho.modulus);
    let space = CappedSpace {
        monomials: Monomial::up_to_degree(t.num_vars, cfg.degree_cap),
        cap,
        num_vars: t.num_vars,
    };
    let (Some(vf), Some(vg)) = (space.vector(f), space.vector(g)) else {
        return Ok(None);
    };
    if space.count() > cfg.max_polynomials as f64 {
        return Err(Error::BoundExceeded {
            what: "number of capped polynomials",
            actual: space.count().min(usize::MAX as f64) as usize,
            bound: cfg.max_polynomials,
        });
    }
    let vectors: Vec<Vec<u64>> = (0..space.count() as usize)
        .map(|i| space.coeffs(i))
        .collect();
    let lhs = lhs_partition(t, &root, &space, &vectors)?;
    let (i, j) = (
        space.index(&vf).expect("in cap"),
        space.index(&vg).expect("in cap"),
    );
    Ok(Some(lhs.same(i, j)))
}

/// Components of the union of the capped `T^L` pairs and coefficientwise
/// `√ρ`-equivalence.
fn lhs_partition(
    t: &NatSystem,
    root: &NatCongruence,
    space: &CappedSpace,
    vectors: &[Vec<u64>],
) -> Result<Partition> {
    let total = vectors.len();
    let mut uf = UnionFind::<usize>::new(total);
    for (a, b) in &t.pairs {
        for m in &space.monomials {
            let x = Polynomial::term(&Naturals, m.clone(), 1);
            let (Some(u0), Some(v0)) = (
                space.vector(&a.mul(&x, &Naturals)?),
                space.vector(&b.mul(&x, &Naturals)?),
            ) else {
                continue;
            };
            for y in vectors {
                let u: Vec<u64> = u0.iter().zip(y).map(|(p, q)| p + q).collect();
                let v: Vec<u64> = v0.iter().zip(y).map(|(p, q)| p + q).collect();
                if let (Some(i), Some(j)) = (space.index(&u), space.index(&v)) {
                    uf.union(i, j);
                }
            }
        }
    }
    let groups = partition_by_key(
        vectors
            .iter()
            .map(|v| v.iter().map(|&c| root.class_of(c)).collect::<Vec<_>>()),
    );
    let reps = groups.representatives();
    for i in 0..total {
        uf.union(i, reps[groups.class_of(i)]);
    }
    Ok(Partition::from_class_map(
        &(0..total).map(|i| uf.find(i)).collect::<Vec<_>>(),
    ))
}
