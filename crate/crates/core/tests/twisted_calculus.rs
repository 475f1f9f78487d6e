mod common;

use common::{builtin_with_elements, tw, tw_pow};
use proptest::prelude::*;
use semicong::semiring::{builtin, builtins_up_to};
use semicong::twisted::{twisted_add, twisted_mul, twisted_pow, twisted_pow_binomial};
use semicong::{Builtin, ElementPair, SemiringTable};

fn ep(p: (usize, usize)) -> ElementPair {
    ElementPair::new(p.0, p.1)
}

fn mul(t: &SemiringTable, p: (usize, usize), q: (usize, usize)) -> (usize, usize) {
    let r = twisted_mul(t, &ep(p), &ep(q));
    (r.left, r.right)
}

#[test]
fn worked_values_in_zmod5() {
    let t = builtin(Builtin::ZMod(5)).unwrap();
    assert_eq!(mul(&t, (2, 1), (3, 2)), (3, 2));
    assert_eq!(twisted_pow(&t, &ep((2, 1)), 2), ep((0, 4)));
    assert_eq!(twisted_pow(&t, &ep((3, 4)), 0), ep((1, 0)));
}

#[test]
fn product_matches_formula_everywhere_up_to_six() {
    for t in builtins_up_to(6) {
        for a in t.elements() {
            for b in t.elements() {
                for c in t.elements() {
                    for d in t.elements() {
                        assert_eq!(mul(&t, (a, b), (c, d)), tw(&t, (a, b), (c, d)));
                    }
                }
            }
        }
    }
}

#[test]
fn binomial_form_matches_iteration_up_to_six() {
    for t in builtins_up_to(6) {
        for a in t.elements() {
            for b in t.elements() {
                for n in 1..=6 {
                    let p = ep((a, b));
                    assert_eq!(
                        twisted_pow_binomial(&t, &p, n),
                        twisted_pow(&t, &p, n),
                        "{} {p} {n}",
                        t.name()
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn associative((t, e) in builtin_with_elements(6, 6)) {
        let (p, q, r) = ((e[0], e[1]), (e[2], e[3]), (e[4], e[5]));
        prop_assert_eq!(mul(&t, mul(&t, p, q), r), mul(&t, p, mul(&t, q, r)));
    }

    #[test]
    fn commutative((t, e) in builtin_with_elements(6, 4)) {
        let (p, q) = ((e[0], e[1]), (e[2], e[3]));
        prop_assert_eq!(mul(&t, p, q), mul(&t, q, p));
    }

    #[test]
    fn distributes_over_sum((t, e) in builtin_with_elements(6, 6)) {
        let (p, q, r) = (ep((e[0], e[1])), ep((e[2], e[3])), ep((e[4], e[5])));
        let lhs = twisted_mul(&t, &p, &twisted_add(&t, &q, &r));
        let rhs = twisted_add(&t, &twisted_mul(&t, &p, &q), &twisted_mul(&t, &p, &r));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn diagonal_factor_gives_diagonal((t, e) in builtin_with_elements(6, 3)) {
        let r = mul(&t, (e[0], e[1]), (e[2], e[2]));
        prop_assert_eq!(r.0, r.1);
    }

    #[test]
    fn unit_swap_and_zero((t, e) in builtin_with_elements(6, 2)) {
        let p = (e[0], e[1]);
        prop_assert_eq!(mul(&t, p, (t.one(), t.zero())), p);
        prop_assert_eq!(mul(&t, p, (t.zero(), t.one())), (e[1], e[0]));
        prop_assert_eq!(mul(&t, p, (t.zero(), t.zero())), (t.zero(), t.zero()));
    }

    #[test]
    fn swapped_powers_by_parity((t, e) in builtin_with_elements(6, 2), n in 0u32..9) {
        let p = (e[0], e[1]);
        let swapped = twisted_pow(&t, &ep((e[1], e[0])), n);
        let direct = twisted_pow(&t, &ep(p), n);
        let expected = if n % 2 == 0 {
            direct
        } else {
            twisted_mul(&t, &direct, &ep((t.zero(), t.one())))
        };
        prop_assert_eq!(swapped, expected);
        let flip = twisted_pow(&t, &ep((t.zero(), t.one())), n);
        let parity = if n % 2 == 0 { (t.one(), t.zero()) } else { (t.zero(), t.one()) };
        prop_assert_eq!(flip, ep(parity));
    }

    #[test]
    fn powers_match_oracle((t, e) in builtin_with_elements(6, 2), n in 0u32..12) {
        let p = (e[0], e[1]);
        let r = twisted_pow(&t, &ep(p), n);
        prop_assert_eq!((r.left, r.right), tw_pow(&t, p, n));
    }
}
