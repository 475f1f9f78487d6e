//! The twisted product on pairs: `(a, b) ∗ (c, d) = (ac + bd, ad + bc)`.
//!
//! Written against [`SemiringOps`] so the same code serves finite tables,
//! the naturals and polynomial semirings.

use crate::relation::ElementPair;
use crate::semiring::SemiringOps;

pub fn twisted_add<S: SemiringOps>(
    s: &S,
    p: &ElementPair<S::Elem>,
    q: &ElementPair<S::Elem>,
) -> ElementPair<S::Elem> {
    ElementPair::new(s.add(&p.left, &q.left), s.add(&p.right, &q.right))
}

pub fn twisted_mul<S: SemiringOps>(
    s: &S,
    p: &ElementPair<S::Elem>,
    q: &ElementPair<S::Elem>,
) -> ElementPair<S::Elem> {
    let (a, b, c, d) = (&p.left, &p.right, &q.left, &q.right);
    ElementPair::new(
        s.add(&s.mul(a, c), &s.mul(b, d)),
        s.add(&s.mul(a, d), &s.mul(b, c)),
    )
}

/// The multiplicative unit `(1, 0)`.
pub fn twisted_one<S: SemiringOps>(s: &S) -> ElementPair<S::Elem> {
    ElementPair::new(s.one(), s.zero())
}

/// `p^{∗n}` by iteration, with `p^{∗0} = (1, 0)`.
pub fn twisted_pow<S: SemiringOps>(
    s: &S,
    p: &ElementPair<S::Elem>,
    n: u32,
) -> ElementPair<S::Elem> {
    let mut acc = twisted_one(s);
    for _ in 0..n {
        acc = twisted_mul(s, &acc, p);
    }
    acc
}

/// `n` choose `k` as an ordinary integer.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `p^{∗n}` through the binomial closed form: even-index terms
/// `C(n,i) a^{n-i} b^i` go left, odd-index terms go right. Coefficients act
/// as repeated addition.
pub fn twisted_pow_binomial<S: SemiringOps>(
    s: &S,
    p: &ElementPair<S::Elem>,
    n: u32,
) -> ElementPair<S::Elem> {
    let mut left = s.zero();
    let mut right = s.zero();
    for i in 0..=n {
        let term = s.mul(&s.pow(&p.left, n - i), &s.pow(&p.right, i));
        let term = s.nat_multiple(binomial(n, i), &term);
        if i % 2 == 0 {
            left = s.add(&left, &term);
        } else {
            right = s.add(&right, &term);
        }
    }
    ElementPair::new(left, right)
}

/// `(p + q)^{∗n}` expanded as `Σ_i C(n,i) p^{∗i} ∗ q^{∗(n-i)}`.
pub fn twisted_sum_pow_binomial<S: SemiringOps>(
    s: &S,
    p: &ElementPair<S::Elem>,
    q: &ElementPair<S::Elem>,
    n: u32,
) -> ElementPair<S::Elem> {
    let mut acc = ElementPair::new(s.zero(), s.zero());
    for i in 0..=n {
        let term = twisted_mul(s, &twisted_pow(s, p, i), &twisted_pow(s, q, n - i));
        let k = binomial(n, i);
        let term = ElementPair::new(
            s.nat_multiple(k, &term.left),
            s.nat_multiple(k, &term.right),
        );
        acc = twisted_add(s, &acc, &term);
    }
    acc
}

/// Walks the orbit `p, p^{∗2}, p^{∗3}, …` until it repeats and reports the
/// first exponent `n ≥ 1` whose power satisfies `hit`.
///
/// Exact for finite carriers: once a power repeats, every later power has
/// already been seen.
pub fn first_power_where<S: SemiringOps>(
    s: &S,
    p: &ElementPair<S::Elem>,
    mut hit: impl FnMut(&ElementPair<S::Elem>) -> bool,
) -> Option<u32> {
    let mut seen: Vec<ElementPair<S::Elem>> = Vec::new();
    let mut current = p.clone();
    let mut n = 1u32;
    loop {
        if hit(&current) {
            return Some(n);
        }
        if seen.contains(&current) {
            return None;
        }
        let next = twisted_mul(s, &current, p);
        seen.push(current);
        current = next;
        n += 1;
    }
}
