//! Base-p digit combinatorics and a membership oracle for roots of powers of
//! diagonal polynomials `x₁^a + ⋯ + x_n^a`.
//!
//! The oracle shares nothing with the Gröbner or root machinery: it expands
//! `(Σ x_i^a)^N` term by term with multinomial coefficients computed through
//! Lucas' theorem, buckets the terms by residue class, and decides membership
//! of a monomial by linear algebra in a single degree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field;
use crate::monomial::Monomial;
use crate::ring::RingContext;

/// Canonical base-p expansion, least significant digit first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitVector {
    base: u64,
    digits: Vec<u64>,
}

impl DigitVector {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Digit at position `i`, zero past the end.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u128 {
        self.digits.iter().rev().fold(0u128, |acc, &d| acc * self.base as u128 + d as u128)
    }
}

pub fn digits_base_p(m: u64, p: u64) -> DigitVector {
    assert!(p >= 2, "base must be at least 2");
    let mut digits = Vec::new();
    let mut rest = m;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    DigitVector { base: p, digits }
}

/// `C(a, b) mod p` for `a < p`.
fn small_binom(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1;
    let mut den = 1;
    for i in 0..b {
        num = field::mul(num, a - i, p);
        den = field::mul(den, i + 1, p);
    }
    field::mul(num, field::inv(den, p), p)
}

/// `C(m, n) mod p` as the product of digitwise binomials (Lucas).
pub fn binom_mod_p(m: u64, n: u64, p: u64) -> u64 {
    if n > m {
        return 0;
    }
    let (mut m, mut n) = (m, n);
    let mut acc = 1 % p;
    while n > 0 {
        let (mi, ni) = (m % p, n % p);
        if ni > mi {
            return 0;
        }
        acc = field::mul(acc, small_binom(mi, ni, p), p);
        m /= p;
        n /= p;
    }
    acc
}

/// `C(m, n) ≢ 0 (mod p)`, i.e. every digit of `n` is at most the matching
/// digit of `m`.
pub fn binom_nonzero(m: u64, n: u64, p: u64) -> bool {
    if n > m {
        return false;
    }
    let (mut m, mut n) = (m, n);
    while n > 0 {
        if n % p > m % p {
            return false;
        }
        m /= p;
        n /= p;
    }
    true
}

/// Whether the multinomial coefficient `m! / Π parts_i!` is nonzero mod p:
/// the parts add up to `m` in base p without carries.
pub fn multinomial_nonzero(m: u64, parts: &[u64], p: u64) -> Result<bool> {
    let total = parts.iter().try_fold(0u64, |acc, &k| acc.checked_add(k));
    if total != Some(m) {
        return Err(Error::PartsMismatch);
    }
    let mut rest: Vec<u64> = parts.to_vec();
    while rest.iter().any(|&k| k > 0) {
        let mut column = 0u64;
        for k in rest.iter_mut() {
            column += *k % p;
            *k /= p;
        }
        if column >= p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multinomial coefficient mod p as the telescoping binomial product.
pub fn multinomial_mod_p(m: u64, parts: &[u64], p: u64) -> Result<u64> {
    let total = parts.iter().try_fold(0u64, |acc, &k| acc.checked_add(k));
    if total != Some(m) {
        return Err(Error::PartsMismatch);
    }
    let mut left = m;
    let mut acc = 1 % p;
    for &k in parts {
        acc = field::mul(acc, binom_mod_p(left, k, p), p);
        if acc == 0 {
            return Ok(0);
        }
        left -= k;
    }
    Ok(acc)
}

/// Decides `target ∈ ((x₁^a + ⋯ + x_n^a)^N)^{[1/p^e]}` in the ring `ctx`.
///
/// Terms of the expansion that share a residue class modulo `p^e` are summed
/// exactly, so cancellation inside a class is accounted for. A class whose
/// aggregated coefficient is a single monomial dividing the target answers
/// immediately; otherwise membership is settled by Gaussian elimination in
/// the target's degree (every class coefficient is homogeneous).
pub fn diagonal_root_membership(a: u64, target: &Monomial, n_power: u64, e: u32, ctx: &RingContext) -> Result<bool> {
    let n = ctx.nvars();
    if target.len() != n {
        return Err(Error::InvalidArgument("target arity differs from ring"));
    }
    if a == 0 {
        return Err(Error::InvalidArgument("exponent a must be positive"));
    }
    let p = ctx.p();
    let q = ctx.frobenius_power(e)?;
    let d = target.degree();
    // a term x^{⌊a k_i / q⌋} has degree ≤ d only if every a·k_i < (d+1)·q
    let kmax = (((d as u128 + 1) * q as u128 - 1) / a as u128).min(n_power as u128) as u64;
    let span = (kmax as u128 + 1).checked_pow(n as u32 - 1).unwrap_or(u128::MAX);
    if span > ctx.limits().max_oracle_tuples as u128 {
        return Err(Error::limit(format!("oracle search space {span} tuples")));
    }

    // residue class -> (quotient exponents -> coefficient)
    let mut classes: BTreeMap<Vec<u64>, BTreeMap<Vec<u64>, u64>> = BTreeMap::new();
    let mut k = vec![0u64; n];
    loop {
        ctx.checkpoint()?;
        let head: u64 = k[..n - 1].iter().sum();
        if head <= n_power && n_power - head <= kmax {
            k[n - 1] = n_power - head;
            if multinomial_nonzero(n_power, &k, p)? {
                let coeff = multinomial_mod_p(n_power, &k, p)?;
                let mut quot = Vec::with_capacity(n);
                let mut rem = Vec::with_capacity(n);
                for &ki in &k {
                    let v = a as u128 * ki as u128;
                    quot.push((v / q as u128) as u64);
                    rem.push((v % q as u128) as u64);
                }
                if quot.iter().sum::<u64>() <= d {
                    let slot = classes.entry(rem).or_default().entry(quot).or_insert(0);
                    *slot = field::add(*slot, coeff, p);
                }
            }
        }
        // odometer over the first n-1 coordinates
        let mut i = 0;
        loop {
            if i == n - 1 {
                return decide(classes, target, d, p);
            }
            if k[i] < kmax {
                k[i] += 1;
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if n == 1 {
            return decide(classes, target, d, p);
        }
    }
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn decide(classes: BTreeMap<Vec<u64>, BTreeMap<Vec<u64>, u64>>, target: &Monomial, d: u64, p: u64) -> Result<bool> {
    let t = target.exps();
    let gens: Vec<Vec<(Vec<u64>, u64)>> = classes
        .into_values()
        .map(|terms| terms.into_iter().filter(|(_, c)| *c != 0).collect::<Vec<_>>())
        .filter(|g: &Vec<_>| !g.is_empty())
        .collect();
    if gens.iter().any(|g| g.len() == 1 && divides(&g[0].0, t)) {
        return Ok(true);
    }
    if !gens.iter().flatten().any(|(m, _)| divides(m, t)) {
        return Ok(false);
    }

    // degree-d slice: span of x^u · g with |u| = d - deg g
    let n = t.len();
    let mut columns: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, u64>> = Vec::new();
    for g in &gens {
        let deg: u64 = g[0].0.iter().sum();
        for u in monomials_of_degree(n, d - deg) {
            let mut row = BTreeMap::new();
            for (m, c) in g {
                let prod: Vec<u64> = m.iter().zip(&u).map(|(x, y)| x + y).collect();
                let next = columns.len();
                let col = *columns.entry(prod).or_insert(next);
                row.insert(col, *c);
            }
            rows.push(row);
        }
    }
    let Some(&target_col) = columns.get(t) else {
        return Ok(false);
    };
    let echelon = row_echelon(rows, p);
    let mut v: BTreeMap<usize, u64> = BTreeMap::new();
    v.insert(target_col, 1);
    for (pivot, row) in &echelon {
        if let Some(&c) = v.get(pivot) {
            let factor = field::neg(c, p);
            for (&col, &x) in row {
                let entry = v.entry(col).or_insert(0);
                *entry = field::add(*entry, field::mul(factor, x, p), p);
                if *entry == 0 {
                    v.remove(&col);
                }
            }
        }
    }
    Ok(v.is_empty())
}

/// Rows normalized so each pivot entry is one; pivots are distinct.
fn row_echelon(rows: Vec<BTreeMap<usize, u64>>, p: u64) -> Vec<(usize, BTreeMap<usize, u64>)> {
    let mut basis: Vec<(usize, BTreeMap<usize, u64>)> = Vec::new();
    for mut row in rows {
        for (pivot, b) in &basis {
            if let Some(&c) = row.get(pivot) {
                let factor = field::neg(c, p);
                for (&col, &x) in b {
                    let entry = row.entry(col).or_insert(0);
                    *entry = field::add(*entry, field::mul(factor, x, p), p);
                    if *entry == 0 {
                        row.remove(&col);
                    }
                }
            }
        }
        if let Some((&pivot, &c)) = row.iter().next() {
            let inv = field::inv(c, p);
            for x in row.values_mut() {
                *x = field::mul(*x, inv, p);
            }
            // keep earlier rows reduced at the new pivot
            for (_, b) in basis.iter_mut() {
                if let Some(&c) = b.get(&pivot) {
                    let factor = field::neg(c, p);
                    for (&col, &x) in &row {
                        let entry = b.entry(col).or_insert(0);
                        *entry = field::add(*entry, field::mul(factor, x, p), p);
                        if *entry == 0 {
                            b.remove(&col);
                        }
                    }
                }
            }
            basis.push((pivot, row));
        }
    }
    basis
}

fn monomials_of_degree(n: usize, d: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
