//! The relation `√(σ/ρ)` and the inclusion
//! `(√(σ/ρ))^c ⊂ (√ρ)_B(Z_ρ(σ)(B))`.
//!
//! `σ` is the congruence generated by a pair system. Its radical is taken on
//! the function semiring, where `σ` becomes a finite congruence `σ_f` and
//! `√σ_f` is read off the finite quotient. Every pair of `√σ` maps into
//! `√σ_f`, and the inclusion still holds for the larger function-level
//! relation, so checking it there is at least as strict. The syntactic side
//! is a degree-capped enumeration, so statements about it hold within the
//! cap only.

use petgraph::unionfind::UnionFind;

use super::{partition_by_key, point_index, zero_set, PairSystem};
use crate::congruence::{radical, same_size, Congruence};
use crate::error::Result;
use crate::partition::Partition;
use crate::polynomial::{enumerate_polynomials, FunctionSemiring, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NullstellensatzConfig {
    /// Total degree cap for the enumerated polynomials.
    pub degree_cap: u32,
    pub max_polynomials: usize,
    /// Largest quotient `S_f/σ_f` whose radical is computed.
    pub max_quotient: usize,
}

impl Default for NullstellensatzConfig {
    fn default() -> Self {
        Self {
            degree_cap: 3,
            max_polynomials: 200_000,
            max_quotient: 400,
        }
    }
}

/// `√(σ/ρ)` restricted to the capped polynomials, with the components of
/// its generated equivalence.
#[derive(Clone, Debug)]
pub struct SqrtOver {
    polynomials: Vec<Polynomial>,
    functions: Vec<usize>,
    group: Vec<usize>,
    /// Sorted `√σ_f` classes met by each coefficient group.
    group_classes: Vec<Vec<usize>>,
    generated: Partition,
    sigma: Partition,
    sigma_radical: Partition,
}

impl SqrtOver {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// Function id of the `i`-th polynomial.
    pub fn function(&self, i: usize) -> usize {
        self.functions[i]
    }

    /// `(f_i, f_j) ∈ √(σ/ρ)`: some `g_i ≡ f_i` and `g_j ≡ f_j` (mod `√ρ`),
    /// both within the cap, have `(g_i, g_j) ∈ √σ`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let (a, b) = (
            &self.group_classes[self.group[i]],
            &self.group_classes[self.group[j]],
        );
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Classes of `(√(σ/ρ))^c` on the capped polynomials. The relation is
    /// already closed under translations and scalings, so only transitivity
    /// is added.
    pub fn generated(&self) -> &Partition {
        &self.generated
    }

    /// `σ_f` on the function semiring.
    pub fn sigma(&self) -> &Partition {
        &self.sigma
    }

    /// `√σ_f` on the function semiring.
    pub fn sigma_radical(&self) -> &Partition {
        &self.sigma_radical
    }
}

pub fn sqrt_over(
    fs: &FunctionSemiring,
    sigma: &PairSystem,
    rho: &Congruence,
    cfg: &NullstellensatzConfig,
) -> Result<SqrtOver> {
    let b = fs.target();
    same_size(b.size(), rho.size())?;
    let seeds = sigma.function_pairs(fs)?;
    let sig = fs.generated_congruence(seeds);
    let sigma_radical = if sig.same(fs.zero(), fs.one()) {
        Partition::indiscrete(fs.len())
    } else {
        let q = fs.quotient_table(&sig, cfg.max_quotient)?;
        let r = radical(&q, &Congruence::identity(q.size()))?;
        Partition::from_class_map(
            &(0..fs.len())
                .map(|f| r.class_of(sig.class_of(f)))
                .collect::<Vec<_>>(),
        )
    };

    let ctx = fs.ctx();
    let a = ctx.coeff();
    let root = radical(b, rho)?;
    let polynomials = enumerate_polynomials(a, fs.arity(), cfg.degree_cap, cfg.max_polynomials)?;
    let functions = polynomials
        .iter()
        .map(|p| fs.function_of(p))
        .collect::<Result<Vec<usize>>>()?;
    let monomials = Monomial::up_to_degree(fs.arity(), cfg.degree_cap);
    let groups = partition_by_key(polynomials.iter().map(|p| {
        monomials
            .iter()
            .map(|m| root.class_of(ctx.embed(p.coefficient(a, m))))
            .collect::<Vec<_>>()
    }));
    let group: Vec<usize> = groups.class_map().to_vec();
    let num_groups = groups.num_classes();

    let mut group_classes = vec![Vec::new(); num_groups];
    for (i, &f) in functions.iter().enumerate() {
        group_classes[group[i]].push(sigma_radical.class_of(f));
    }
    for c in &mut group_classes {
        c.sort_unstable();
        c.dedup();
    }

    // Groups and radical classes as one bipartite graph.
    let mut uf = UnionFind::<usize>::new(num_groups + sigma_radical.num_classes());
    for (g, classes) in group_classes.iter().enumerate() {
        for &c in classes {
            uf.union(g, num_groups + c);
        }
    }
    let generated =
        Partition::from_class_map(&group.iter().map(|&g| uf.find(g)).collect::<Vec<_>>());
    Ok(SqrtOver {
        polynomials,
        functions,
        group,
        group_classes,
        generated,
        sigma: sig,
        sigma_radical,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullstellensatzReport {
    pub degree_cap: u32,
    pub polynomials: usize,
    /// Distinct functions realized by the capped polynomials.
    pub functions_covered: usize,
    pub functions_total: usize,
    pub zero_set_size: usize,
    pub lhs_classes: usize,
    pub rhs_classes: usize,
    pub inclusion_holds: bool,
    /// Whether the two congruences coincide on the capped polynomials.
    pub equality_holds: bool,
    /// Pairs related on the left but not on the right (at most five).
    pub violations: Vec<(Polynomial, Polynomial)>,
    pub warnings: Vec<String>,
}

impl NullstellensatzReport {
    pub fn lines(&self, a: &crate::semiring::SemiringTable) -> Vec<String> {
        let mut out = vec![
            format!("degree_cap={}", self.degree_cap),
            format!("polynomials={}", self.polynomials),
            format!(
                "functions_covered={}/{}",
                self.functions_covered, self.functions_total
            ),
            format!("zero_set_size={}", self.zero_set_size),
            format!("lhs_classes={}", self.lhs_classes),
            format!("rhs_classes={}", self.rhs_classes),
            format!("inclusion_holds={}", self.inclusion_holds),
            format!("equality_holds={}", self.equality_holds),
        ];
        for (f, g) in &self.violations {
            out.push(format!("violation {} ~ {}", f.display(a), g.display(a)));
        }
        for w in &self.warnings {
            out.push(format!("warning {w}"));
        }
        out
    }
}

/// Compares `(√(σ/ρ))^c` with `(√ρ)_B(Z_ρ(σ)(B))` on every capped
/// polynomial.
pub fn nullstellensatz_check(
    fs: &FunctionSemiring,
    sigma: &PairSystem,
    rho: &Congruence,
    cfg: &NullstellensatzConfig,
) -> Result<NullstellensatzReport> {
    let s = sqrt_over(fs, sigma, rho, cfg)?;
    let b = fs.target();
    let z = zero_set(sigma, rho)?;
    let root = radical(b, rho)?;
    let idx: Vec<usize> = z
        .points()
        .iter()
        .map(|p| point_index(b.size(), p))
        .collect();
    let rhs = partition_by_key((0..s.len()).map(|i| {
        idx.iter()
            .map(|&p| root.class_of(fs.value(s.function(i), p)))
            .collect::<Vec<_>>()
    }));
    let lhs = s.generated();

    let mut violations = Vec::new();
    let mut inclusion_holds = true;
    let reps = lhs.representatives();
    for i in 0..s.len() {
        let r = reps[lhs.class_of(i)];
        if !rhs.same(i, r) {
            inclusion_holds = false;
            if violations.len() < 5 {
                violations.push((s.polynomials[r].clone(), s.polynomials[i].clone()));
            }
        }
    }
    let mut covered: Vec<usize> = s.functions.clone();
    covered.sort_unstable();
    covered.dedup();
    let mut warnings = Vec::new();
    if covered.len() < fs.len() {
        warnings.push(format!(
            "degree cap {} realizes {} of {} functions",
            cfg.degree_cap,
            covered.len(),
            fs.len()
        ));
    }
    Ok(NullstellensatzReport {
        degree_cap: cfg.degree_cap,
        polynomials: s.len(),
        functions_covered: covered.len(),
        functions_total: fs.len(),
        zero_set_size: z.len(),
        lhs_classes: lhs.num_classes(),
        rhs_classes: rhs.num_classes(),
        inclusion_holds,
        equality_holds: *lhs == rhs,
        violations,
        warnings,
    })
}
