//! Sparse multivariate polynomials over a coefficient semiring.

mod embed;
mod functions;

use std::cmp::Ordering;
use std::collections::BTreeMap;

pub use embed::EmbeddedSemiring;
pub use functions::{affine_points, FunctionBounds, FunctionSemiring, PolyFunction};

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::relation::ElementPair;
use crate::semiring::{SemiringOps, SemiringTable};
use crate::twisted;

/// An exponent vector, ordered graded-lexicographically: total degree
/// first, then the exponents compared left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Self(vec![0; num_vars])
    }

    pub fn variable(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Every monomial in `num_vars` variables of total degree at most
    /// `max_degree`, in increasing order.
    pub fn up_to_degree(num_vars: usize, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; num_vars];
        fn rec(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == current.len() {
                out.push(Monomial(current.clone()));
                return;
            }
            for e in 0..=left {
                current[i] = e;
                rec(i + 1, left - e, current, out);
            }
            current[i] = 0;
        }
        rec(0, max_degree, &mut current, &mut out);
        out.sort();
        out
    }

    fn render(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        factors.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `num_vars` variables. Zero coefficients are never stored,
/// so the zero polynomial has no terms and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E = usize> {
    num_vars: usize,
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone + Eq + std::fmt::Debug> Polynomial<E> {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn term<S: SemiringOps<Elem = E>>(ring: &S, monomial: Monomial, coeff: E) -> Self {
        let num_vars = monomial.0.len();
        let mut p = Self::zero(num_vars);
        if !ring.is_zero(&coeff) {
            p.terms.insert(monomial, coeff);
        }
        p
    }

    pub fn constant<S: SemiringOps<Elem = E>>(ring: &S, num_vars: usize, c: E) -> Self {
        Self::term(ring, Monomial::one(num_vars), c)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn variable<S: SemiringOps<Elem = E>>(ring: &S, num_vars: usize, i: usize) -> Result<Self> {
        if i >= num_vars {
            return Err(Error::Arity {
                expected: num_vars,
                actual: i + 1,
            });
        }
        Ok(Self::term(
            ring,
            Monomial::variable(num_vars, i),
            ring.one(),
        ))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, E> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The coefficient of `m`, zero when absent.
    pub fn coefficient<S: SemiringOps<Elem = E>>(&self, ring: &S, m: &Monomial) -> E {
        self.terms.get(m).cloned().unwrap_or_else(|| ring.zero())
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.num_vars == other.num_vars {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: self.num_vars,
                actual: other.num_vars,
            })
        }
    }

    pub fn add<S: SemiringOps<Elem = E>>(&self, other: &Self, ring: &S) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(ring, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul<S: SemiringOps<Elem = E>>(&self, other: &Self, ring: &S) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.num_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(ring, m1.mul(m2), ring.mul(c1, c2));
            }
        }
        Ok(out)
    }

    fn add_term<S: SemiringOps<Elem = E>>(&mut self, ring: &S, m: Monomial, c: E) {
        let sum = match self.terms.get(&m) {
            Some(old) => ring.add(old, &c),
            None => c,
        };
        if ring.is_zero(&sum) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    /// Evaluates at `point` in a target semiring, mapping coefficients
    /// through `embed`.
    pub fn evaluate<R: SemiringOps>(
        &self,
        target: &R,
        embed: impl Fn(&E) -> R::Elem,
        point: &[R::Elem],
    ) -> Result<R::Elem> {
        if point.len() != self.num_vars {
            return Err(Error::Arity {
                expected: self.num_vars,
                actual: point.len(),
            });
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = embed(c);
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = target.mul(&term, &target.pow(x, e));
                }
            }
            acc = target.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Renders terms from the leading one down, e.g. `x1^2 + 3*x1 + 1`.
    /// Coefficients equal to one are omitted on non-constant terms.
    pub fn render(
        &self,
        label: impl Fn(&E) -> String,
        is_one: impl Fn(&E) -> bool,
        zero_label: &str,
    ) -> String {
        if self.terms.is_empty() {
            return zero_label.to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_constant() {
                    label(c)
                } else if is_one(c) {
                    m.render()
                } else {
                    format!("{}*{}", label(c), m.render())
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl Polynomial<usize> {
    pub fn display(&self, t: &SemiringTable) -> String {
        self.render(
            |&c| t.label(c).to_string(),
            |&c| c == t.one(),
            t.label(t.zero()),
        )
    }
}

/// `A[x_1, …, x_n]` as a semiring, so that generic algorithms (twisted
/// powers in particular) apply to polynomials.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a, S> {
    pub coeff: &'a S,
    pub num_vars: usize,
}

impl<'a, S: SemiringOps> PolyRing<'a, S> {
    pub fn new(coeff: &'a S, num_vars: usize) -> Self {
        Self { coeff, num_vars }
    }
}

impl<S: SemiringOps> SemiringOps for PolyRing<'_, S> {
    type Elem = Polynomial<S::Elem>;

    fn zero(&self) -> Self::Elem {
        Polynomial::zero(self.num_vars)
    }

    fn one(&self) -> Self::Elem {
        Polynomial::constant(self.coeff, self.num_vars, self.coeff.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b, self.coeff)
            .expect("operands share the ring's arity")
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b, self.coeff)
            .expect("operands share the ring's arity")
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

/// `(f, g)^{∗m}` computed in the polynomial pair semiring.
pub fn twisted_pow_poly<S: SemiringOps>(
    coeff: &S,
    pair: &ElementPair<Polynomial<S::Elem>>,
    m: u32,
) -> Result<ElementPair<Polynomial<S::Elem>>> {
    pair.left.check_arity(&pair.right)?;
    let ring = PolyRing::new(coeff, pair.left.num_vars());
    Ok(twisted::twisted_pow(&ring, pair, m))
}

/// `f ≡ g (mod θ)`: every pair of corresponding coefficients (absent terms
/// count as zero) lies in `θ`.
pub fn coeffwise_congruent(
    t: &SemiringTable,
    f: &Polynomial,
    g: &Polynomial,
    theta: &Congruence,
) -> Result<bool> {
    f.check_arity(g)?;
    crate::congruence::same_size(t.size(), theta.size())?;
    let monomials = f.terms.keys().chain(g.terms.keys());
    Ok(monomials
        .into_iter()
        .all(|m| theta.contains(f.coefficient(t, m), g.coefficient(t, m))))
}

/// Every polynomial over `t` in `num_vars` variables with total degree at
/// most `max_degree`, in a fixed order. Refuses to produce more than
/// `limit` polynomials.
pub fn enumerate_polynomials(
    t: &SemiringTable,
    num_vars: usize,
    max_degree: u32,
    limit: usize,
) -> Result<Vec<Polynomial>> {
    let monomials = Monomial::up_to_degree(num_vars, max_degree);
    let count = (t.size() as f64).powi(monomials.len() as i32);
    if count > limit as f64 {
        return Err(Error::BoundExceeded {
            what: "number of capped polynomials",
            actual: count.min(usize::MAX as f64) as usize,
            bound: limit,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut digits = vec![0usize; monomials.len()];
    loop {
        let mut p = Polynomial::zero(num_vars);
        for (m, &d) in monomials.iter().zip(&digits) {
            if d != t.zero() {
                p.terms.insert(m.clone(), d);
            }
        }
        out.push(p);
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < t.size() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
