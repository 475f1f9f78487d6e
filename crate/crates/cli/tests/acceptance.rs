//! Acceptance run: ten criteria, each with a time limit, reported as one
//! PASS/FAIL line apiece. Runs without the libtest harness so the report is
//! always printed.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semicong::congruence::{
    classify, enumerate_congruences_unbounded, generated_congruence, generated_congruence_literal,
    nil_relations, quotient_unchecked, radical, radical_alt, random_semiring,
    search_maximal_nonprime, spectrum, witness_chain, zariski_closed, SearchConfig, SpectrumKind,
};
use semicong::geometry::window::{
    window_hom_count, window_nullstellensatz, NatCongruence, NatSystem, WindowNullstellensatzConfig,
};
use semicong::geometry::{
    closure, hom_count, materialize_topology, nullstellensatz_check, star_union, vanishing,
    zero_set, zero_set_of_generated, NullstellensatzConfig, PairSystem, Variety,
};
use semicong::polynomial::{
    enumerate_polynomials, twisted_pow_poly, EmbeddedSemiring, FunctionBounds, FunctionSemiring,
    Polynomial,
};
use semicong::semiring::{
    builtin, builtins_up_to, classify_semiring, pair_semiring, validate_axioms, Naturals,
};
use semicong::twisted::{twisted_mul, twisted_pow, twisted_pow_binomial, twisted_sum_pow_binomial};
use semicong::{Builtin, Congruence, ElementPair, PairRelation, SemiringTable};

type Check = Result<(), String>;

/// Number, title, time limit in seconds and the check itself.
type Criterion = (u32, &'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- oracles

fn tw(t: &SemiringTable, (a, b): (usize, usize), (c, d): (usize, usize)) -> (usize, usize) {
    (
        t.add(t.mul(a, c), t.mul(b, d)),
        t.add(t.mul(a, d), t.mul(b, c)),
    )
}

fn tw_pow(t: &SemiringTable, p: (usize, usize), n: u32) -> (usize, usize) {
    (0..n).fold((t.one(), t.zero()), |acc, _| tw(t, acc, p))
}

fn pair(p: (usize, usize)) -> ElementPair {
    ElementPair::new(p.0, p.1)
}

fn unpair(p: ElementPair) -> (usize, usize) {
    (p.left, p.right)
}

/// Every commutative-semiring axiom by brute force.
fn axioms_hold(t: &SemiringTable) -> bool {
    let e = || t.elements();
    let (z, o) = (t.zero(), t.one());
    e().all(|a| {
        t.add(a, z) == a
            && t.mul(a, o) == a
            && t.mul(a, z) == z
            && e().all(|b| {
                t.add(a, b) == t.add(b, a)
                    && t.mul(a, b) == t.mul(b, a)
                    && e().all(|c| {
                        t.add(t.add(a, b), c) == t.add(a, t.add(b, c))
                            && t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c))
                            && t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c))
                    })
            })
    })
}

fn prime_by_definition(t: &SemiringTable, rho: &Congruence) -> bool {
    if rho.contains(t.one(), t.zero()) {
        return false;
    }
    let n = t.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                (0..n).all(|d| {
                    let q = tw(t, (a, b), (c, d));
                    !rho.contains(q.0, q.1) || rho.contains(a, b) || rho.contains(c, d)
                })
            })
        })
    })
}

/// `√ρ` from the definition; powers of a pair repeat within `n²` steps.
fn radical_by_definition(t: &SemiringTable, rho: &Congruence) -> PairRelation {
    let n = t.size();
    let bound = (n * n + 1) as u32;
    PairRelation::from_fn(n, |a, b| {
        t.elements().any(|c| {
            let p = (t.add(a, c), t.add(b, c));
            (1..=bound).any(|k| {
                let q = tw_pow(t, p, k);
                rho.contains(q.0, q.1)
            })
        })
    })
}

fn plus_by_definition(t: &SemiringTable, r: &PairRelation) -> PairRelation {
    PairRelation::from_fn(t.size(), |a, b| {
        t.elements().any(|c| r.contains(t.add(a, c), t.add(b, c)))
    })
}

fn least_congruence_containing(all: &[Congruence], r: &PairRelation) -> PairRelation {
    let mut acc = PairRelation::full(r.size());
    for rho in all {
        let rel = rho.to_relation();
        if r.is_subset(&rel) {
            acc = acc.intersection(&rel).unwrap();
        }
    }
    acc
}

fn composite(r: &PairRelation, s: &PairRelation) -> PairRelation {
    let n = r.size();
    PairRelation::from_fn(n, |a, b| {
        (0..n).any(|x| r.contains(a, x) && s.contains(x, b))
    })
}

fn transitive_closure(r: &PairRelation) -> PairRelation {
    let n = r.size();
    let mut m: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| r.contains(a, b)).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                let row = m[k].clone();
                for (cell, &via) in m[i].iter_mut().zip(&row) {
                    *cell |= via;
                }
            }
        }
    }
    PairRelation::from_fn(n, |a, b| m[a][b])
}

fn maximal_by_enumeration(t: &SemiringTable, all: &[Congruence], rho: &Congruence) -> bool {
    rho.is_proper(t)
        && !all
            .iter()
            .any(|s| s != rho && s.is_proper(t) && rho.is_subset(s))
}

fn primes_by_definition(t: &SemiringTable, all: &[Congruence]) -> Vec<Congruence> {
    all.iter()
        .filter(|c| prime_by_definition(t, c))
        .cloned()
        .collect()
}

// ------------------------------------------------------------- criteria

fn c1_structure() -> Check {
    for t in builtins_up_to(10) {
        let r = validate_axioms(&t);
        ensure(r.passed && r.violations.is_empty(), || {
            format!("{} fails its axioms", t.name())
        })?;
        ensure(axioms_hold(&t), || {
            format!("{} fails the brute-force axioms", t.name())
        })?;
    }
    for t in builtins_up_to(6) {
        let p = pair_semiring(&t);
        ensure(validate_axioms(&p).passed, || {
            format!("pair semiring of {} fails", t.name())
        })?;
        ensure(axioms_hold(&p), || {
            format!("pair semiring of {} fails brute force", t.name())
        })?;
        ensure(
            p.one() == t.one() * t.size() + t.zero() && p.zero() == t.zero() * t.size() + t.zero(),
            || format!("pair semiring of {} has the wrong units", t.name()),
        )?;
    }
    Ok(())
}

fn c2_twisted() -> Check {
    for t in builtins_up_to(6) {
        let n = t.size();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let mul = |p, q| unpair(twisted_mul(&t, &pair(p), &pair(q)));
        for &p in &pairs {
            let (a, b) = p;
            ensure(mul(p, (t.one(), t.zero())) == p, || {
                format!("{}: unit fails at {p:?}", t.name())
            })?;
            ensure(mul(p, (t.zero(), t.one())) == (b, a), || {
                format!("{}: swap fails at {p:?}", t.name())
            })?;
            ensure(mul(p, (t.zero(), t.zero())) == (t.zero(), t.zero()), || {
                format!("{}: zero fails", t.name())
            })?;
            for k in 1..=8u32 {
                let swapped = tw_pow(&t, (b, a), k);
                let want = if k % 2 == 0 {
                    tw_pow(&t, p, k)
                } else {
                    tw(&t, tw_pow(&t, p, k), (t.zero(), t.one()))
                };
                ensure(swapped == want, || {
                    format!("{}: parity law fails at {p:?}^{k}", t.name())
                })?;
            }
            for k in 1..=6u32 {
                let it = unpair(twisted_pow(&t, &pair(p), k));
                ensure(it == tw_pow(&t, p, k), || {
                    format!("{}: power {k} of {p:?}", t.name())
                })?;
                ensure(unpair(twisted_pow_binomial(&t, &pair(p), k)) == it, || {
                    format!("{}: binomial power {k} of {p:?}", t.name())
                })?;
            }
            for &q in &pairs {
                let pq = mul(p, q);
                ensure(pq == tw(&t, p, q) && pq == mul(q, p), || {
                    format!("{}: product of {p:?},{q:?}", t.name())
                })?;
                for c in t.elements() {
                    let d = mul(p, (c, c));
                    ensure(d.0 == d.1, || {
                        format!("{}: diagonal factor fails", t.name())
                    })?;
                }
                let sum = (t.add(p.0, q.0), t.add(p.1, q.1));
                for k in 1..=6u32 {
                    ensure(
                        unpair(twisted_sum_pow_binomial(&t, &pair(p), &pair(q), k))
                            == tw_pow(&t, sum, k),
                        || format!("{}: sum power {k} of {p:?}+{q:?}", t.name()),
                    )?;
                }
                for &r in &pairs {
                    ensure(mul(mul(p, q), r) == mul(p, mul(q, r)), || {
                        format!("{}: associativity", t.name())
                    })?;
                    let lhs = mul(sum, r);
                    let (x, y) = (mul(p, r), mul(q, r));
                    ensure(lhs == (t.add(x.0, y.0), t.add(x.1, y.1)), || {
                        format!("{}: distributivity", t.name())
                    })?;
                }
            }
        }
        let one_zero = (t.zero(), t.one());
        for k in 1..=8u32 {
            let want = if k % 2 == 0 {
                (t.one(), t.zero())
            } else {
                one_zero
            };
            ensure(tw_pow(&t, one_zero, k) == want, || {
                format!("{}: (0,1)^{k}", t.name())
            })?;
        }
    }
    Ok(())
}

fn c3_closure() -> Check {
    for t in builtins_up_to(4) {
        let n = t.size();
        let all = enumerate_congruences_unbounded(&t);
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let mut relations = vec![vec![]];
        for (i, &p) in cells.iter().enumerate() {
            relations.push(vec![p]);
            for &q in &cells[i + 1..] {
                relations.push(vec![p, q]);
            }
        }
        for pairs in relations {
            let r = PairRelation::from_pairs(n, pairs.clone()).unwrap();
            let g = generated_congruence(&t, &r).unwrap();
            let lit = generated_congruence_literal(&t, &r).unwrap();
            let oracle = least_congruence_containing(&all, &r);
            ensure(g == lit && g.to_relation() == oracle, || {
                format!("{}: generation of {pairs:?}", t.name())
            })?;
            for a in 0..n {
                for b in 0..n {
                    let chain = witness_chain(&t, &r, a, b).unwrap();
                    match chain {
                        Some(c) => ensure(g.contains(a, b) && c.verify(&t, &r), || {
                            format!("{}: bad chain {a}~{b} for {pairs:?}", t.name())
                        })?,
                        None => ensure(!g.contains(a, b), || {
                            format!("{}: missing chain {a}~{b}", t.name())
                        })?,
                    }
                }
            }
        }
    }
    Ok(())
}

fn c4_radicals() -> Check {
    for t in builtins_up_to(5) {
        let all = enumerate_congruences_unbounded(&t);
        let roots: Vec<Congruence> = all.iter().map(|r| radical(&t, r).unwrap()).collect();
        for (i, rho) in all.iter().enumerate() {
            let root = &roots[i];
            let name = || format!("{} at {}", t.name(), rho.display(&t));
            ensure(root.to_relation() == radical_by_definition(&t, rho), || {
                format!("radical differs from definition: {}", name())
            })?;
            ensure(radical_alt(&t, rho).unwrap() == *root, || {
                format!("radical_alt differs: {}", name())
            })?;
            ensure(
                semicong::congruence::is_congruence(&t, &root.to_relation()),
                || format!("radical not a congruence: {}", name()),
            )?;
            ensure(
                plus_by_definition(&t, &root.to_relation()) == root.to_relation(),
                || format!("radical not saturated: {}", name()),
            )?;
            ensure(radical(&t, root).unwrap() == *root, || {
                format!("radical not idempotent: {}", name())
            })?;
            let plus = rho.plus_saturate(&t).unwrap();
            ensure(
                plus.to_relation() == plus_by_definition(&t, &rho.to_relation()),
                || format!("plus differs: {}", name()),
            )?;
            ensure(radical(&t, &plus).unwrap() == *root, || {
                format!("radical of plus differs: {}", name())
            })?;
            ensure(plus.is_subset(root), || {
                format!("plus not inside radical: {}", name())
            })?;
            if prime_by_definition(&t, rho) {
                ensure(*root == plus, || {
                    format!("prime radical differs from plus: {}", name())
                })?;
            }
            for (j, sigma) in all.iter().enumerate() {
                if rho.is_subset(sigma) {
                    ensure(root.is_subset(&roots[j]), || {
                        format!("monotonicity fails: {}", name())
                    })?;
                }
            }
        }
        let nil = nil_relations(&t).unwrap();
        let id = Congruence::identity(t.size());
        ensure(nil.rho_nil == radical(&t, &id).unwrap(), || {
            format!("{}: nilpotent congruence differs", t.name())
        })?;
    }
    let t2 = builtin(Builtin::TruncatedNat(2)).unwrap();
    let nil = nil_relations(&t2).unwrap();
    ensure(
        nil.generated.is_subset(&nil.rho_nil) && nil.generated != nil.rho_nil,
        || {
            "truncated_nat 2: generated nil congruence is not strictly inside the nilpotent one"
                .into()
        },
    )
}

fn c5_lattice() -> Check {
    for t in builtins_up_to(5) {
        let all = enumerate_congruences_unbounded(&t);
        for r in &all {
            for s in &all {
                let j = r.join(&t, s).unwrap();
                let chain = transitive_closure(&composite(&r.to_relation(), &s.to_relation()));
                ensure(j.to_relation() == chain, || {
                    format!(
                        "{}: join of {} and {}",
                        t.name(),
                        r.display(&t),
                        s.display(&t)
                    )
                })?;
            }
        }
    }
    for t in builtins_up_to(6)
        .into_iter()
        .filter(|t| classify_semiring(t).semifield)
    {
        let all = enumerate_congruences_unbounded(&t);
        for r in &all {
            for s in &all {
                let rs = composite(&r.to_relation(), &s.to_relation());
                if rs == composite(&s.to_relation(), &r.to_relation()) {
                    ensure(r.join(&t, s).unwrap().to_relation() == rs, || {
                        format!("{}: permuting join", t.name())
                    })?;
                }
            }
        }
    }
    for t in builtins_up_to(4) {
        let all = enumerate_congruences_unbounded(&t);
        let primes = primes_by_definition(&t, &all);
        let v = |s: &Congruence| -> BTreeSet<Congruence> {
            primes.iter().filter(|p| s.is_subset(p)).cloned().collect()
        };
        let lib = |s: &Congruence| -> BTreeSet<Congruence> {
            zariski_closed(&t, s, 8).unwrap().into_iter().collect()
        };
        for s in &all {
            ensure(lib(s) == v(s), || {
                format!("{}: closed set of {}", t.name(), s.display(&t))
            })?;
        }
        for (i, a) in all.iter().enumerate() {
            for b in &all[i..] {
                let union: BTreeSet<Congruence> = v(a).union(&v(b)).cloned().collect();
                ensure(union == lib(&a.meet(b).unwrap()), || {
                    format!("{}: union of closed sets", t.name())
                })?;
            }
        }
        for i in 0..all.len() {
            for j in i..all.len() {
                for k in j..all.len() {
                    let family = [&all[i], &all[j], &all[k]];
                    let meet: BTreeSet<Congruence> = primes
                        .iter()
                        .filter(|p| family.iter().all(|s| s.is_subset(p)))
                        .cloned()
                        .collect();
                    let mut r = PairRelation::empty(t.size());
                    for s in family {
                        r = r.union(&s.to_relation()).unwrap();
                    }
                    let g = generated_congruence(&t, &r).unwrap();
                    ensure(meet == lib(&g), || {
                        format!("{}: intersection of closed sets", t.name())
                    })?;
                }
            }
        }
        let spec: BTreeSet<Congruence> = spectrum(&t, SpectrumKind::Prime, 8)
            .unwrap()
            .into_iter()
            .collect();
        ensure(lib(&Congruence::identity(t.size())) == spec, || {
            format!("{}: closed set of id", t.name())
        })?;
        ensure(lib(&Congruence::full(t.size())).is_empty(), || {
            format!("{}: closed set of the full relation", t.name())
        })?;
    }
    let z6 = builtin(Builtin::ZMod(6)).unwrap();
    let spec = spectrum(&z6, SpectrumKind::Prime, 8).unwrap();
    let classes: Vec<Vec<Vec<usize>>> = spec.iter().map(|c| c.classes()).collect();
    ensure(
        classes
            == vec![
                vec![vec![0, 2, 4], vec![1, 3, 5]],
                vec![vec![0, 3], vec![1, 4], vec![2, 5]],
            ],
        || format!("zmod 6 spectrum is {classes:?}"),
    )
}

fn maximal_plus_prime(t: &SemiringTable, label: &str) -> Check {
    let all = enumerate_congruences_unbounded(t);
    let idempotent = classify_semiring(t).additively_idempotent;
    for rho in &all {
        let c = classify(t, rho).unwrap();
        let maximal = maximal_by_enumeration(t, &all, rho);
        let prime = prime_by_definition(t, rho);
        ensure(c.maximal == maximal && c.prime == prime, || {
            format!("{label}: classification of {}", rho.display(t))
        })?;
        let plus = rho.plus_saturate(t).unwrap() == *rho;
        if maximal && plus {
            ensure(prime, || {
                format!("{label}: maximal saturated {} is not prime", rho.display(t))
            })?;
        }
        if maximal && idempotent {
            ensure(prime, || {
                format!(
                    "{label}: maximal {} on an idempotent carrier is not prime",
                    rho.display(t)
                )
            })?;
        }
    }
    Ok(())
}

fn c6_maximal() -> Check {
    for t in builtins_up_to(5) {
        maximal_plus_prime(&t, t.name())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for i in 0..200 {
        let size = rng.gen_range(2..=4);
        let t =
            random_semiring(&mut rng, size, &format!("sample {i}")).map_err(|e| e.to_string())?;
        ensure(axioms_hold(&t), || format!("sample {i} is not a semiring"))?;
        maximal_plus_prime(&t, t.name())?;
    }
    let report =
        search_maximal_nonprime(&SearchConfig::new(6, 200, 4)).map_err(|e| e.to_string())?;
    ensure(report.samples == 200 && report.flagged() == 0, || {
        format!("search flagged {:?}", report.lines())
    })
}

fn ctx(t: &SemiringTable) -> EmbeddedSemiring {
    EmbeddedSemiring::identity(t.clone())
}

fn space(t: &SemiringTable, n: usize) -> FunctionSemiring {
    FunctionSemiring::new(&ctx(t), n, FunctionBounds::default()).unwrap()
}

fn random_system(
    rng: &mut ChaCha8Rng,
    polys: &[Polynomial],
    t: &SemiringTable,
    n: usize,
    max_pairs: usize,
) -> PairSystem {
    let k = rng.gen_range(1..=max_pairs);
    let pairs = (0..k)
        .map(|_| {
            (
                polys[rng.gen_range(0..polys.len())].clone(),
                polys[rng.gen_range(0..polys.len())].clone(),
            )
        })
        .collect();
    PairSystem::new(ctx(t), n, pairs).unwrap()
}

/// Zero-set and star-union laws; single-pair systems exhaustively where
/// the distinct function pairs allow it, sampled two-pair systems elsewhere.
fn c7_closed_sets() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for t in builtins_up_to(4) {
        let all = enumerate_congruences_unbounded(&t);
        for rho in primes_by_definition(&t, &all) {
            for n in 1..=2usize {
                let polys = enumerate_polynomials(&t, n, 2, 1 << 13).unwrap();
                let fs = space(&t, n);
                let label = || format!("{} n={n} rho={}", t.name(), rho.display(&t));
                let zero = Polynomial::zero(n);
                let one = Polynomial::constant(&t, n, t.one());
                let whole =
                    PairSystem::new(ctx(&t), n, vec![(zero.clone(), zero.clone())]).unwrap();
                let none = PairSystem::new(ctx(&t), n, vec![(zero, one)]).unwrap();
                ensure(
                    zero_set(&whole, &rho).unwrap() == Variety::full(t.size(), n),
                    || format!("{}: whole space", label()),
                )?;
                ensure(zero_set(&none, &rho).unwrap().is_empty(), || {
                    format!("{}: empty set", label())
                })?;

                // one representative polynomial per function
                let mut reps: HashMap<usize, Polynomial> = HashMap::new();
                for p in &polys {
                    reps.entry(fs.function_of(p).unwrap())
                        .or_insert_with(|| p.clone());
                }
                let mut reps: Vec<(usize, Polynomial)> = reps.into_iter().collect();
                reps.sort_by_key(|(f, _)| *f);
                let singles: Vec<PairSystem> = reps
                    .iter()
                    .flat_map(|(_, f)| reps.iter().map(move |(_, g)| (f.clone(), g.clone())))
                    .map(|p| PairSystem::new(ctx(&t), n, vec![p]).unwrap())
                    .collect();
                if singles.len() <= 1200 {
                    for a in &singles {
                        let za = zero_set(a, &rho).unwrap();
                        for b in &singles {
                            let zb = zero_set(b, &rho).unwrap();
                            let su = star_union(a, b, &rho).unwrap();
                            ensure(
                                su.rho_prime && su.equal() && su.union == za.union(&zb),
                                || format!("{}: star union", label()),
                            )?;
                            ensure(
                                zero_set(&a.union(b).unwrap(), &rho).unwrap()
                                    == za.intersection(&zb),
                                || format!("{}: intersection", label()),
                            )?;
                        }
                    }
                }
                for _ in 0..3000 {
                    let a = random_system(&mut rng, &polys, &t, n, 2);
                    let b = random_system(&mut rng, &polys, &t, n, 2);
                    let (za, zb) = (zero_set(&a, &rho).unwrap(), zero_set(&b, &rho).unwrap());
                    let su = star_union(&a, &b, &rho).unwrap();
                    ensure(su.equal() && su.direct == za.union(&zb), || {
                        format!("{}: sampled star union", label())
                    })?;
                    ensure(
                        zero_set(&a.union(&b).unwrap(), &rho).unwrap() == za.intersection(&zb),
                        || format!("{}: sampled intersection", label()),
                    )?;
                }
            }
        }
    }
    Ok(())
}

/// Spaces with `|B|^n ≤ 9` whose function tables fit the default bound.
fn small_spaces() -> Vec<(SemiringTable, usize)> {
    let mut out = Vec::new();
    for t in builtins_up_to(9) {
        for n in 1..=3usize {
            if t.size().pow(n as u32) <= 9 && t.name() != "zmod 7" {
                out.push((t.clone(), n));
            }
        }
    }
    out
}

fn class_map(fs: &FunctionSemiring, y: &Variety, rho: &Congruence) -> Vec<usize> {
    vanishing(fs, y, rho)
        .unwrap()
        .partition()
        .class_map()
        .to_vec()
}

fn is_meet(joint: &[usize], a: &[usize], b: &[usize]) -> bool {
    let mut fwd: HashMap<(usize, usize), usize> = HashMap::new();
    let mut back: HashMap<usize, (usize, usize)> = HashMap::new();
    joint.iter().zip(a.iter().zip(b)).all(|(&j, (&x, &y))| {
        *fwd.entry((x, y)).or_insert(j) == j && *back.entry(j).or_insert((x, y)) == (x, y)
    })
}

fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    let mut m: HashMap<usize, usize> = HashMap::new();
    fine.iter()
        .zip(coarse)
        .all(|(&f, &c)| *m.entry(f).or_insert(c) == c)
}

/// The Galois laws for vanishing congruences over every subset, plus the
/// system-side laws on sampled systems.
fn c7_galois() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0037);
    for (t, n) in small_spaces() {
        let fs = space(&t, n);
        let np = fs.points().len();
        let polys = enumerate_polynomials(&t, n, 2, 1 << 13).unwrap();
        for rho in enumerate_congruences_unbounded(&t) {
            let label = || format!("{} n={n} rho={}", t.name(), rho.display(&t));
            let maps: Vec<Vec<usize>> = (0..1u64 << np)
                .map(|m| class_map(&fs, &Variety::from_mask(t.size(), n, m), &rho))
                .collect();
            ensure(maps[0].iter().all(|&c| c == 0), || {
                format!("{}: empty set", label())
            })?;
            for m in 0..1u64 << np {
                for p in 0..np {
                    if m >> p & 1 == 0 {
                        let bigger = &maps[(m | 1 << p) as usize];
                        ensure(refines(bigger, &maps[m as usize]), || {
                            format!("{}: antitone at {m:b}+{p}", label())
                        })?;
                        ensure(is_meet(bigger, &maps[m as usize], &maps[1 << p]), || {
                            format!("{}: union law at {m:b}+{p}", label())
                        })?;
                    }
                }
            }
            for _ in 0..20 {
                let a = random_system(&mut rng, &polys, &t, n, 2);
                let b = random_system(&mut rng, &polys, &t, n, 1);
                let both = a.union(&b).unwrap();
                let za = zero_set(&a, &rho).unwrap();
                ensure(zero_set(&both, &rho).unwrap().is_subset(&za), || {
                    format!("{}: larger system", label())
                })?;
                ensure(zero_set_of_generated(&fs, &a, &rho).unwrap() == za, || {
                    format!("{}: generated system", label())
                })?;
                let v = &maps[za.to_mask(t.size()) as usize];
                for (f, g) in a.function_pairs(&fs).unwrap() {
                    ensure(v[f] == v[g], || {
                        format!("{}: system outside its vanishing congruence", label())
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// Zero-set masks of single function pairs, closed under intersection.
fn closed_masks_by_pairs(fs: &FunctionSemiring, rho: &Congruence) -> BTreeSet<u64> {
    let np = fs.points().len();
    let mut vectors: Vec<Vec<usize>> = (0..fs.len())
        .map(|f| (0..np).map(|i| rho.class_of(fs.value(f, i))).collect())
        .collect();
    vectors.sort();
    vectors.dedup();
    let mut masks = BTreeSet::new();
    for f in &vectors {
        for g in &vectors {
            masks.insert(
                (0..np)
                    .filter(|&i| f[i] == g[i])
                    .fold(0u64, |m, i| m | 1 << i),
            );
        }
    }
    loop {
        let list: Vec<u64> = masks.iter().copied().collect();
        let before = masks.len();
        for &a in &list {
            for &b in &list {
                masks.insert(a & b);
            }
        }
        if masks.len() == before {
            return masks;
        }
    }
}

fn c7_topology() -> Check {
    for (t, n) in small_spaces() {
        let fs = space(&t, n);
        let np = fs.points().len();
        let all = enumerate_congruences_unbounded(&t);
        for rho in primes_by_definition(&t, &all) {
            let label = || format!("{} n={n} rho={}", t.name(), rho.display(&t));
            let top = materialize_topology(&fs, &rho).unwrap();
            if fs.len() <= 4096 {
                let oracle = closed_masks_by_pairs(&fs, &rho);
                let lib: BTreeSet<u64> = top.masks().iter().copied().collect();
                ensure(lib == oracle, || {
                    format!("{}: closed sets differ from the pairwise oracle", label())
                })?;
            }
            for &a in top.masks() {
                for &b in top.masks() {
                    ensure(top.masks().binary_search(&(a | b)).is_ok(), || {
                        format!("{}: union not closed", label())
                    })?;
                }
            }
            for m in 0..1u64 << np {
                let y = Variety::from_mask(t.size(), n, m);
                let cl = closure(&fs, &y, &rho).unwrap();
                ensure(cl == top.smallest_closed_superset(&y), || {
                    format!("{}: closure of {m:b}", label())
                })?;
            }
        }
    }
    for p in [3, 5] {
        let t = builtin(Builtin::ZMod(p)).unwrap();
        let fs = space(&t, 1);
        let rho = Congruence::identity(p);
        let top = materialize_topology(&fs, &rho).unwrap();
        let masks: Vec<u64> = top.masks().to_vec();
        for m in 0..1u64 << p {
            let y = Variety::from_mask(p, 1, m);
            let traces: BTreeSet<u64> = masks.iter().map(|&c| c & m).filter(|&c| c != m).collect();
            let reducible = traces.iter().any(|&a| traces.iter().any(|&b| a | b == m));
            let irreducible = m != 0 && !reducible;
            ensure(top.is_irreducible(&y) == irreducible, || {
                format!("zmod {p}: irreducibility of {m:b}")
            })?;
            if irreducible {
                ensure(
                    vanishing(&fs, &y, &rho)
                        .unwrap()
                        .is_prime(&fs, &rho)
                        .unwrap(),
                    || format!("zmod {p}: irreducible {m:b} has a non-prime vanishing congruence"),
                )?;
            }
        }
    }
    Ok(())
}

fn c7_powers() -> Check {
    for t in builtins_up_to(4) {
        for n in 1..=2usize {
            if n == 2 && t.size() > 2 {
                continue;
            }
            let polys = enumerate_polynomials(&t, n, 2, 1 << 13).unwrap();
            let points = semicong::polynomial::affine_points(t.size(), n);
            for f in &polys {
                for g in &polys {
                    for m in 1..=4u32 {
                        let pw = twisted_pow_poly(&t, &ElementPair::new(f.clone(), g.clone()), m)
                            .unwrap();
                        for p in &points {
                            let ev = |h: &Polynomial| h.evaluate(&t, |&c| c, p).unwrap();
                            ensure(
                                (ev(&pw.left), ev(&pw.right)) == tw_pow(&t, (ev(f), ev(g)), m),
                                || format!("{}: power {m} of a polynomial pair at {p:?}", t.name()),
                            )?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn c7_geometry() -> Check {
    c7_closed_sets()?;
    c7_galois()?;
    c7_topology()?;
    c7_powers()
}

fn example_system(n: usize) -> NatSystem {
    NatSystem::new(
        n,
        vec![(
            Polynomial::variable(&Naturals, n, 0).unwrap(),
            Polynomial::zero(n),
        )],
    )
    .unwrap()
}

/// The vanishing side computed straight from the points: the number of
/// classes of capped polynomials under "equal modulo √ρ on Z".
fn rhs_classes(t: &SemiringTable, sys: &PairSystem, rho: &Congruence, cap: u32) -> usize {
    let z = zero_set(sys, rho).unwrap();
    let root = radical(t, rho).unwrap();
    let polys = enumerate_polynomials(t, sys.num_vars(), cap, 200_000).unwrap();
    let keys: BTreeSet<Vec<usize>> = polys
        .iter()
        .map(|f| {
            z.points()
                .iter()
                .map(|p| root.class_of(sys.ctx().evaluate(f, p).unwrap()))
                .collect()
        })
        .collect();
    keys.len()
}

fn c8_nullstellensatz() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let tables = builtins_up_to(4);
    for i in 0..100 {
        let t = &tables[rng.gen_range(0..tables.len())];
        let n = if t.size() <= 3 {
            rng.gen_range(1..=2)
        } else {
            1
        };
        let all = enumerate_congruences_unbounded(t);
        let rho = &all[rng.gen_range(0..all.len())];
        let polys = enumerate_polynomials(t, n, 2, 1 << 13).unwrap();
        let sys = random_system(&mut rng, &polys, t, n, 2);
        let fs = space(t, n);
        let cfg = NullstellensatzConfig {
            degree_cap: 2,
            ..NullstellensatzConfig::default()
        };
        let r = nullstellensatz_check(&fs, &sys, rho, &cfg)
            .map_err(|e| format!("instance {i}: {e}"))?;
        ensure(r.inclusion_holds && r.violations.is_empty(), || {
            format!("instance {i} on {}: {:?}", t.name(), r.lines(t))
        })?;
        ensure(r.rhs_classes == rhs_classes(t, &sys, rho, 2), || {
            format!("instance {i}: vanishing side miscounted")
        })?;
        ensure(
            r.zero_set_size == zero_set(&sys, rho).unwrap().len(),
            || format!("instance {i}: zero set size"),
        )?;
    }
    for p in [2u64, 3, 5] {
        let r = window_nullstellensatz(
            &example_system(1),
            &NatCongruence::new(p),
            &WindowNullstellensatzConfig::default(),
        )
        .map_err(|e| e.to_string())?;
        ensure(
            r.window == 50 && r.inclusion_holds && r.equality_holds && r.rhs_classes == p as usize,
            || format!("mod {p}: {:?}", r.lines()),
        )?;
        ensure(
            r.zero_set_size == (0..=50).filter(|a| a % p == 0).count(),
            || format!("mod {p}: zero set"),
        )?;
    }
    Ok(())
}

/// Points up to `ρ` and algebra maps into `B/ρ`, both by brute force.
fn hom_oracle(sys: &PairSystem, rho: &Congruence) -> (usize, usize) {
    let b = sys.ctx().target();
    let n = sys.num_vars();
    let points = semicong::polynomial::affine_points(b.size(), n);
    let satisfied = |p: &[usize]| {
        sys.pairs().iter().all(|(f, g)| {
            rho.contains(
                sys.ctx().evaluate(f, p).unwrap(),
                sys.ctx().evaluate(g, p).unwrap(),
            )
        })
    };
    let classes: BTreeSet<Vec<usize>> = points
        .iter()
        .filter(|p| satisfied(p))
        .map(|p| p.iter().map(|&c| rho.class_of(c)).collect())
        .collect();
    // maps are tuples of class representatives satisfying every pair modulo ρ
    let reps: Vec<usize> = rho.partition().representatives();
    let tuples = semicong::polynomial::affine_points(reps.len(), n);
    let homs = tuples
        .iter()
        .filter(|u| {
            let p: Vec<usize> = u.iter().map(|&k| reps[k]).collect();
            satisfied(&p)
        })
        .count();
    (classes.len(), homs)
}

fn c9_homs() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let tables = builtins_up_to(5);
    for i in 0..100 {
        let t = &tables[rng.gen_range(0..tables.len())];
        let n = if t.size() <= 5 {
            rng.gen_range(1..=2)
        } else {
            1
        };
        let all = enumerate_congruences_unbounded(t);
        let rho = &all[rng.gen_range(0..all.len())];
        let polys = enumerate_polynomials(t, n, 2, 1 << 16).unwrap();
        let sys = random_system(&mut rng, &polys, t, n, 2);
        let h = hom_count(&sys, rho).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(
            h.agree() && (h.points, h.homs) == hom_oracle(&sys, rho),
            || format!("instance {i} on {} rho={}: {h:?}", t.name(), rho.display(t)),
        )?;
        let (quot, _) = quotient_unchecked(t, rho).unwrap();
        ensure(h.homs <= quot.size().pow(n as u32), || {
            format!("instance {i}: too many maps")
        })?;
    }
    for p in [2u64, 3, 5] {
        let h = window_hom_count(&example_system(1), &NatCongruence::new(p), 50)
            .map_err(|e| e.to_string())?;
        ensure(h.line() == "points=1 homs=1 window=50", || {
            format!("mod {p}: {}", h.line())
        })?;
    }
    Ok(())
}

fn c10_goldens() -> Check {
    let cases = common::cases();
    ensure(!cases.is_empty(), || "no golden cases".into())?;
    for case in &cases {
        let first = common::transcript(case);
        let second = common::transcript(case);
        ensure(first == second, || {
            format!("{}: two runs differ", case.name)
        })?;
        let stored = std::fs::read_to_string(common::expected_path(case)).unwrap_or_default();
        ensure(first == stored, || {
            format!("{}: differs from the stored transcript", case.name)
        })?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "axioms and pair semirings", 5, c1_structure),
        (2, "twisted calculus", 30, c2_twisted),
        (
            3,
            "generated congruences and witness chains",
            60,
            c3_closure,
        ),
        (4, "radicals", 60, c4_radicals),
        (5, "joins and the spectrum topology", 60, c5_lattice),
        (6, "maximal and prime congruences", 120, c6_maximal),
        (
            7,
            "varieties, closures and irreducibility",
            180,
            c7_geometry,
        ),
        (8, "nullstellensatz inclusion", 120, c8_nullstellensatz),
        (9, "point and homomorphism counts", 60, c9_homs),
        (10, "golden transcripts", 120, c10_goldens),
    ];
    let mut failed = 0;
    for (k, title, limit, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || {
                format!("took {elapsed:.2?}, limit {limit}s")
            })
        });
        match outcome {
            Ok(()) => println!("criterion {k:>2} PASS {title} ({elapsed:.2?}, limit {limit}s)"),
            Err(e) => {
                failed += 1;
                println!("criterion {k:>2} FAIL {title} ({elapsed:.2?}, limit {limit}s): {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
