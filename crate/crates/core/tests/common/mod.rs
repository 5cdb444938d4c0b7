#![allow(dead_code)]

use charp_core::{Ideal, Monomial, MonomialOrder, Polynomial, RingContext};
use proptest::prelude::*;

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring(p: u64, n: usize) -> RingContext {
    RingContext::new(p, NAMES[..n].iter().copied(), MonomialOrder::GrevLex).unwrap()
}

pub fn ring_with(p: u64, n: usize, order: MonomialOrder) -> RingContext {
    RingContext::new(p, NAMES[..n].iter().copied(), order).unwrap()
}

pub type RawPoly = Vec<(Vec<u64>, u64)>;

/// Terms with total degree at most `max_deg`.
pub fn raw_poly(n: usize, max_deg: u64, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), 1..1000u64), 1..=max_terms).prop_map(
        move |terms| {
            terms
                .into_iter()
                .map(|(mut e, c)| {
                    // squeeze into the degree bound
                    while e.iter().sum::<u64>() > max_deg {
                        let i = (0..e.len()).max_by_key(|&i| e[i]).unwrap();
                        e[i] -= 1;
                    }
                    (e, c)
                })
                .collect()
        },
    )
}

pub fn build(r: &RingContext, raw: &RawPoly) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::new(e), *c)))
}

pub fn ideal_of(r: &RingContext, raws: &[RawPoly]) -> Ideal {
    Ideal::new(r, raws.iter().map(|g| build(r, g)).collect()).unwrap()
}

/// (p, nvars, polynomial terms)
pub fn poly_case(primes: &'static [u64], nvars: std::ops::RangeInclusive<usize>, max_deg: u64, max_terms: usize) -> impl Strategy<Value = (u64, usize, RawPoly)> {
    (prop::sample::select(primes), nvars).prop_flat_map(move |(p, n)| (Just(p), Just(n), raw_poly(n, max_deg, max_terms)))
}

pub fn parse_ideal(r: &RingContext, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| charp_core::parse_poly(r, s).unwrap()).collect()).unwrap()
}

pub fn maximal_power(r: &RingContext, k: u32) -> Ideal {
    let m = Ideal::new(r, (0..r.nvars()).map(|i| Polynomial::var(r, i)).collect()).unwrap();
    (1..k).fold(m.clone(), |acc, _| acc.product(&m).unwrap())
}

pub fn fermat(p: u64, a: u64) -> Polynomial {
    let r = ring(p, 3);
    charp_core::parse_poly(&r, &format!("x^{a} + y^{a} + z^{a}")).unwrap()
}

/// All exponent vectors of total degree ≤ d.
pub fn monomials_up_to(n: usize, d: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, d: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let used: u64 = prefix.iter().sum();
        for k in 0..=d - used {
            prefix.push(k);
            rec(n, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}
