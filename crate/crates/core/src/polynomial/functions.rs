//! The finite semiring of functions `B^n → B` induced by polynomials over `A`.
//!
//! Two polynomials with the same values everywhere are indistinguishable to
//! every geometric question, so quantifiers over `A[x_1, …, x_n]` range over
//! this set instead.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{EmbeddedSemiring, Monomial, Polynomial};
use crate::congruence::close_under_maps;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::semiring::SemiringTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctionBounds {
    /// Largest `|B|^n`; point sets are kept as 64-bit masks elsewhere.
    pub max_points: usize,
    pub max_functions: usize,
}

impl Default for FunctionBounds {
    fn default() -> Self {
        Self {
            max_points: 64,
            max_functions: 250_000,
        }
    }
}

/// A function in tabulated form with one polynomial inducing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFunction {
    /// Values at the points of `B^n`, in lexicographic point order.
    pub table: Vec<usize>,
    pub witness: Polynomial,
}

/// All points of `B^n` for `|B| = size`, in lexicographic order.
pub fn affine_points(size: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..size).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    out
}

pub struct FunctionSemiring {
    ctx: EmbeddedSemiring,
    arity: usize,
    points: Vec<Vec<usize>>,
    /// Row-major: function `k` occupies `values[k * np .. (k + 1) * np]`.
    values: Vec<u8>,
    index: HashMap<Box<[u8]>, u32>,
    witnesses: Vec<Polynomial>,
    /// Monomial functions `a·x^e`, which generate the additive monoid.
    additive_generators: Vec<usize>,
    /// Projections followed by constants; together with the additive
    /// generators they generate everything.
    multiplicative_generators: Vec<usize>,
    generator_maps: OnceLock<Vec<Vec<u32>>>,
}

impl std::fmt::Debug for FunctionSemiring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FunctionSemiring")
            .field("arity", &self.arity)
            .field("points", &self.points.len())
            .field("functions", &self.len())
            .finish()
    }
}

impl FunctionSemiring {
    /// Least set of functions containing the constants of `A` and the
    /// projections, closed under pointwise `+` and `·`.
    ///
    /// Monomial functions are generated first (closed under multiplication
    /// by each variable); every polynomial function is a sum of those, so a
    /// breadth-first additive closure from zero finishes the job. Witnesses
    /// are the first polynomial reaching each function in that order.
    pub fn new(ctx: &EmbeddedSemiring, arity: usize, bounds: FunctionBounds) -> Result<Self> {
        let b = ctx.target();
        if b.size() > u8::MAX as usize {
            return Err(Error::BoundExceeded {
                what: "target carrier size for function tables",
                actual: b.size(),
                bound: u8::MAX as usize,
            });
        }
        let np = (b.size() as f64).powi(arity as i32);
        if np > bounds.max_points as f64 {
            return Err(Error::BoundExceeded {
                what: "points in the affine space",
                actual: np.min(usize::MAX as f64) as usize,
                bound: bounds.max_points,
            });
        }
        let points = affine_points(b.size(), arity);
        let np = points.len();

        // Pure monomials x^e as functions, breadth first.
        let mut pure: Vec<(Vec<u8>, Monomial)> =
            vec![(vec![b.one() as u8; np], Monomial::one(arity))];
        let mut pure_seen: HashMap<Vec<u8>, ()> = HashMap::from([(pure[0].0.clone(), ())]);
        let mut i = 0;
        while i < pure.len() {
            for v in 0..arity {
                let table: Vec<u8> = pure[i]
                    .0
                    .iter()
                    .zip(&points)
                    .map(|(&m, p)| b.mul(m as usize, p[v]) as u8)
                    .collect();
                if pure_seen.insert(table.clone(), ()).is_none() {
                    let exps = pure[i].1.mul(&Monomial::variable(arity, v));
                    pure.push((table, exps));
                }
            }
            i += 1;
        }

        let mut fs = Self {
            ctx: ctx.clone(),
            arity,
            points,
            values: Vec::new(),
            index: HashMap::new(),
            witnesses: Vec::new(),
            additive_generators: Vec::new(),
            multiplicative_generators: Vec::new(),
            generator_maps: OnceLock::new(),
        };

        let a = ctx.coeff();
        let mut generators: Vec<(Vec<u8>, Polynomial)> = Vec::new();
        let mut gen_seen: HashMap<Vec<u8>, ()> = HashMap::new();
        for (table, exps) in &pure {
            for c in a.elements().filter(|&c| c != a.zero()) {
                let ec = ctx.embed(c);
                let scaled: Vec<u8> = table.iter().map(|&m| b.mul(ec, m as usize) as u8).collect();
                if gen_seen.insert(scaled.clone(), ()).is_none() {
                    generators.push((scaled, Polynomial::term(a, exps.clone(), c)));
                }
            }
        }

        fs.insert(vec![b.zero() as u8; np], Polynomial::zero(arity));
        let mut k = 0;
        while k < fs.witnesses.len() {
            for (g, gw) in &generators {
                let sum: Vec<u8> = fs
                    .row(k)
                    .iter()
                    .zip(g)
                    .map(|(&x, &y)| b.add(x as usize, y as usize) as u8)
                    .collect();
                if !fs.index.contains_key(sum.as_slice()) {
                    if fs.witnesses.len() >= bounds.max_functions {
                        return Err(Error::BoundExceeded {
                            what: "polynomial functions",
                            actual: fs.witnesses.len() + 1,
                            bound: bounds.max_functions,
                        });
                    }
                    let w = fs.witnesses[k].add(gw, a)?;
                    fs.insert(sum, w);
                }
            }
            k += 1;
        }

        fs.additive_generators = generators
            .iter()
            .map(|(g, _)| fs.index[g.as_slice()] as usize)
            .collect();
        let mut mult = Vec::new();
        for v in 0..arity {
            let x = Polynomial::variable(a, arity, v)?;
            mult.push(fs.function_of(&x)?);
        }
        for c in a.elements() {
            mult.push(fs.function_of(&Polynomial::constant(a, arity, c))?);
        }
        fs.multiplicative_generators = mult;
        Ok(fs)
    }

    fn insert(&mut self, table: Vec<u8>, witness: Polynomial) -> usize {
        let id = self.witnesses.len();
        self.values.extend_from_slice(&table);
        self.index.insert(table.into_boxed_slice(), id as u32);
        self.witnesses.push(witness);
        id
    }

    fn row(&self, f: usize) -> &[u8] {
        let np = self.points.len();
        &self.values[f * np..(f + 1) * np]
    }

    pub fn ctx(&self) -> &EmbeddedSemiring {
        &self.ctx
    }

    pub fn target(&self) -> &SemiringTable {
        self.ctx.target()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn points(&self) -> &[Vec<usize>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// The zero function has id 0.
    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        let t = self.target();
        self.lookup(&vec![t.one(); self.points.len()])
            .expect("constants are polynomial functions")
    }

    /// `F(P)` for the point with index `point`.
    pub fn value(&self, f: usize, point: usize) -> usize {
        self.values[f * self.points.len() + point] as usize
    }

    pub fn table(&self, f: usize) -> Vec<usize> {
        self.row(f).iter().map(|&v| v as usize).collect()
    }

    pub fn witness(&self, f: usize) -> &Polynomial {
        &self.witnesses[f]
    }

    pub fn function(&self, f: usize) -> PolyFunction {
        PolyFunction {
            table: self.table(f),
            witness: self.witnesses[f].clone(),
        }
    }

    pub fn lookup(&self, table: &[usize]) -> Option<usize> {
        let key: Vec<u8> = table.iter().map(|&v| v as u8).collect();
        self.index.get(key.as_slice()).map(|&i| i as usize)
    }

    /// The function induced by a polynomial over `A`.
    pub fn function_of(&self, f: &Polynomial) -> Result<usize> {
        let table = self
            .points
            .iter()
            .map(|p| self.ctx.evaluate(f, p))
            .collect::<Result<Vec<usize>>>()?;
        Ok(self
            .lookup(&table)
            .expect("every polynomial over A induces a member"))
    }

    fn combine(&self, f: usize, g: usize, op: impl Fn(usize, usize) -> usize) -> usize {
        let key: Vec<u8> = self
            .row(f)
            .iter()
            .zip(self.row(g))
            .map(|(&x, &y)| op(x as usize, y as usize) as u8)
            .collect();
        *self
            .index
            .get(key.as_slice())
            .expect("function set is closed under pointwise operations") as usize
    }

    pub fn add(&self, f: usize, g: usize) -> usize {
        let t = self.target();
        self.combine(f, g, |x, y| t.add(x, y))
    }

    pub fn mul(&self, f: usize, g: usize) -> usize {
        let t = self.target();
        self.combine(f, g, |x, y| t.mul(x, y))
    }

    /// Whether pointwise `+` and `·` of any two members land in the set.
    pub fn is_closed(&self) -> bool {
        let t = self.target();
        let n = self.len();
        (0..n).all(|f| {
            (0..n).all(|g| {
                let s: Vec<usize> = (0..self.points.len())
                    .map(|p| t.add(self.value(f, p), self.value(g, p)))
                    .collect();
                let m: Vec<usize> = (0..self.points.len())
                    .map(|p| t.mul(self.value(f, p), self.value(g, p)))
                    .collect();
                self.lookup(&s).is_some() && self.lookup(&m).is_some()
            })
        })
    }

    fn generator_maps(&self) -> &[Vec<u32>] {
        self.generator_maps.get_or_init(|| {
            let adds = self.additive_generators.iter().map(|&g| {
                (0..self.len())
                    .map(|f| self.add(f, g) as u32)
                    .collect::<Vec<u32>>()
            });
            let muls = self.multiplicative_generators.iter().map(|&g| {
                (0..self.len())
                    .map(|f| self.mul(f, g) as u32)
                    .collect::<Vec<u32>>()
            });
            adds.chain(muls).collect()
        })
    }

    /// The congruence on the function semiring generated by `pairs`.
    ///
    /// Stability under the generator translations `F ↦ F + m` and scalings
    /// `F ↦ F·x_i`, `F ↦ F·a` already forces stability under every
    /// translation and scaling, so only those maps are propagated.
    pub fn generated_congruence(
        &self,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Partition {
        let maps = self.generator_maps();
        close_under_maps(self.len(), pairs, maps.len(), |k, f| maps[k][f] as usize)
    }

    /// The quotient by a congruence as an explicit table; class `k` is
    /// labelled `f<rep>` after its least member.
    pub fn quotient_table(&self, p: &Partition, max_size: usize) -> Result<SemiringTable> {
        let q = p.num_classes();
        if q > max_size {
            return Err(Error::BoundExceeded {
                what: "classes of the function-semiring quotient",
                actual: q,
                bound: max_size,
            });
        }
        let reps = p.representatives();
        SemiringTable::from_fn(
            "functions/quotient",
            reps.iter().map(|r| format!("f{r}")).collect(),
            p.class_of(self.zero()),
            p.class_of(self.one()),
            |x, y| p.class_of(self.add(reps[x], reps[y])),
            |x, y| p.class_of(self.mul(reps[x], reps[y])),
        )
    }

    /// The whole function semiring as a table (small instances only).
    pub fn to_table(&self, max_size: usize) -> Result<SemiringTable> {
        self.quotient_table(&Partition::discrete(self.len()), max_size)
    }
}
