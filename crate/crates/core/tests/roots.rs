//! Frobenius roots: containment, minimality, composition, scaling and
//! agreement of the digit recursion with the direct root.

mod common;

use charp_core::{bracket_power, frob_root, mixed_root, Ideal, Polynomial};
use common::*;
use proptest::prelude::*;

const PRIMES: &[u64] = &[2, 3, 5];

fn trim(raw: &RawPoly, n: usize) -> RawPoly {
    raw.iter().map(|(e, c)| (e[..n].to_vec(), *c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// b ⊆ (b^{[1/q]})^{[q]}
    #[test]
    fn root_contains((p, n, g) in poly_case(PRIMES, 2..=3, 9, 4), h in raw_poly(3, 9, 3), e in 1u32..=2) {
        let r = ring(p, n);
        let b = ideal_of(&r, &[g, trim(&h, n)]);
        let root = frob_root(&b, e).unwrap();
        prop_assert!(b.is_subset_of(&bracket_power(&root, e).unwrap()).unwrap());
    }

    /// b ⊆ J^{[q]} forces b^{[1/q]} ⊆ J, checked with b = J^{[q]}·(stuff).
    #[test]
    fn root_is_minimal((p, n, j) in poly_case(PRIMES, 2..=3, 2, 3), k in raw_poly(3, 2, 2), m in raw_poly(3, 6, 3), e in 1u32..=2) {
        let r = ring(p, n);
        let jdeal = ideal_of(&r, &[j, trim(&k, n)]);
        let bracket = bracket_power(&jdeal, e).unwrap();
        let b = bracket.scale(&build(&r, &trim(&m, n))).unwrap();
        prop_assert!(frob_root(&b, e).unwrap().is_subset_of(&jdeal).unwrap());
        // and J^{[q]} itself roots back to J
        prop_assert_eq!(frob_root(&bracket, e).unwrap(), jdeal);
    }

    /// (b^{[1/p]})^{[1/p]} = b^{[1/p²]}
    #[test]
    fn roots_compose((p, n, g) in poly_case(PRIMES, 2..=3, 12, 4), h in raw_poly(3, 12, 3)) {
        let r = ring(p, n);
        let b = ideal_of(&r, &[g, trim(&h, n)]);
        let twice = frob_root(&frob_root(&b, 1).unwrap(), 1).unwrap();
        prop_assert_eq!(twice, frob_root(&b, 2).unwrap());
    }

    /// (g^{q}·b)^{[1/q]} = g·b^{[1/q]}
    #[test]
    fn scaled_root((p, n, g) in poly_case(PRIMES, 2..=3, 2, 3), h in raw_poly(3, 8, 4), e in 1u32..=2) {
        let r = ring(p, n);
        let g = build(&r, &g);
        let b = ideal_of(&r, &[trim(&h, n)]);
        let lhs = frob_root(&b.scale(&g.frob_power(e).unwrap()).unwrap(), e).unwrap();
        let rhs = frob_root(&b, e).unwrap().scale(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// a ⊆ b ⇒ a^{[1/q]} ⊆ b^{[1/q]}
    #[test]
    fn roots_are_monotone((p, n, g) in poly_case(PRIMES, 2..=3, 8, 3), h in raw_poly(3, 8, 3), m in raw_poly(3, 3, 2), e in 1u32..=2) {
        let r = ring(p, n);
        let big = ideal_of(&r, &[g.clone(), trim(&h, n)]);
        let small = Ideal::new(&r, vec![build(&r, &g).mul(&build(&r, &trim(&m, n))).unwrap()]).unwrap();
        prop_assert!(frob_root(&small, e).unwrap().is_subset_of(&frob_root(&big, e).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The digit recursion matches the root of the full power.
    #[test]
    fn mixed_root_matches_direct((p, n, f) in poly_case(PRIMES, 2..=3, 3, 3), h in raw_poly(3, 3, 2), m in 0u64..30, e in 1u32..=2) {
        let r = ring(p, n);
        let f = build(&r, &f);
        let i = ideal_of(&r, &[trim(&h, n)]);
        let direct = frob_root(&i.scale(&f.pow(m).unwrap()).unwrap(), e).unwrap();
        prop_assert_eq!(mixed_root(&f, m, &i, e).unwrap(), direct);
    }
}

#[test]
fn root_of_unit_and_zero() {
    let r = ring(3, 2);
    assert!(frob_root(&Ideal::unit(&r), 3).unwrap().is_unit().unwrap());
    assert!(frob_root(&Ideal::zero(&r), 1).unwrap().is_zero());
    let x = Polynomial::var(&r, 0);
    assert_eq!(frob_root(&Ideal::principal(&x.pow(8).unwrap()), 2).unwrap(), Ideal::unit(&r));
}
