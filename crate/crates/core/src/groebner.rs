//! Multivariate division and reduced Gröbner bases (Buchberger with the
//! Gebauer–Möller pair criteria and the normal selection strategy).

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Result;
use crate::field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// Remainder of full multivariate division of `f` by `basis`.
///
/// Divisors are tried in the listed order; no monomial of the result is
/// divisible by any leading monomial of `basis`. Zero divisors are ignored.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    for g in basis {
        f.ring().same(g.ring())?;
    }
    Ok(reduce(f, basis))
}

pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_by(f, basis.iter().filter(|g| !g.is_zero()).collect::<Vec<_>>().as_slice())
}

fn reduce_by(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = f.ring();
    if basis.is_empty() || f.is_zero() {
        return f.clone();
    }
    let p = ring.p();
    let order = ring.order();
    let leads: Vec<(&Monomial, u64)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.lead().expect("nonzero");
            (m, field::inv(*c, p))
        })
        .collect();

    let mut rem: Vec<(Monomial, u64)> = Vec::new();
    let mut cur: Vec<(Monomial, u64)> = f.terms().to_vec();
    let mut pos = 0;
    while pos < cur.len() {
        let (m, c) = &cur[pos];
        let hit = leads.iter().position(|(lm, _)| lm.divides(m));
        let Some(k) = hit else {
            rem.push(cur[pos].clone());
            pos += 1;
            continue;
        };
        // cur[pos..] -= (c / lc_g) * (m / lm_g) * g, lead cancels exactly
        let q = m.div(leads[k].0);
        let factor = field::neg(field::mul(*c, leads[k].1, p), p);
        let g = basis[k].terms();
        let mut merged = Vec::with_capacity(cur.len() - pos + g.len());
        let mut a = cur[pos + 1..].iter().peekable();
        let mut b = g[1..]
            .iter()
            .map(|(t, k)| (t.mul(&q), field::mul(*k, factor, p)))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.compare(x.0.exps(), y.0.exps()),
            };
            match ord {
                Ordering::Greater => merged.push(a.next().unwrap().clone()),
                Ordering::Less => merged.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (t, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = field::add(*x, y, p);
                    if s != 0 {
                        merged.push((t.clone(), s));
                    }
                }
            }
        }
        cur = merged;
        pos = 0;
    }
    Polynomial::from_sorted(ring, rem)
}

/// Minimal generators of a monomial ideal, as monic terms in descending order.
pub(crate) fn minimalize_monomials(ring: &RingContext, monos: impl IntoIterator<Item = Monomial>) -> Vec<Polynomial> {
    let order = ring.order();
    let mut all: Vec<Monomial> = monos.into_iter().collect();
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.compare(a.exps(), b.exps())));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in all {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| order.compare(b.exps(), a.exps()));
    kept.into_iter().map(|m| Polynomial::term(ring, m, 1)).collect()
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Returns `[1]` for the unit ideal and `[]` for the zero ideal. The only
/// failure is cooperative interruption.
pub fn buchberger(ring: &RingContext, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut input: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    if input.iter().any(|g| g.is_unit()) {
        return Ok(alloc::vec![Polynomial::one(ring)]);
    }
    if input.iter().all(|g| g.is_monomial()) {
        return Ok(minimalize_monomials(
            ring,
            input.iter().map(|g| g.lead_monomial().unwrap().clone()),
        ));
    }
    let order = ring.order();
    input.sort_by(|a, b| {
        let (x, y) = (a.lead_monomial().unwrap(), b.lead_monomial().unwrap());
        x.degree().cmp(&y.degree()).then_with(|| order.compare(x.exps(), y.exps()))
    });

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let insert = |h: Polynomial, basis: &mut Vec<Polynomial>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        let h_idx = basis.len();
        let lh = h.lead_monomial().unwrap().clone();
        // candidate pairs (g, h)
        let mut cands: Vec<(usize, Monomial, bool)> = (0..basis.len())
            .filter(|&g| active[g])
            .map(|g| {
                let lg = basis[g].lead_monomial().unwrap();
                (g, lg.lcm(&lh), lg.is_coprime(&lh))
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g1, l1, cop1)) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l1));
            if cop1 || !dominated {
                kept.push((g1, l1, cop1));
            }
        }
        // old pairs made redundant by h
        pairs.retain(|pr| {
            if !lh.divides(&pr.lcm) {
                return true;
            }
            let li = basis[pr.i].lead_monomial().unwrap().lcm(&lh);
            let lj = basis[pr.j].lead_monomial().unwrap().lcm(&lh);
            li == pr.lcm || lj == pr.lcm
        });
        // product criterion
        for (g, l, coprime) in kept {
            if !coprime {
                let degree = l.degree();
                pairs.push(Pair { i: g, j: h_idx, lcm: l, degree });
            }
        }
        for g in 0..basis.len() {
            if active[g] && lh.divides(basis[g].lead_monomial().unwrap()) {
                active[g] = false;
            }
        }
        basis.push(h);
        active.push(true);
    };

    for g in input {
        let current: Vec<&Polynomial> = basis.iter().zip(&active).filter(|(_, a)| **a).map(|(b, _)| b).collect();
        let h = reduce_by(g, &current);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(alloc::vec![Polynomial::one(ring)]);
        }
        insert(h.monic(), &mut basis, &mut active, &mut pairs);
    }

    while !pairs.is_empty() {
        ring.checkpoint()?;
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (x, y) = (&pairs[a], &pairs[b]);
                x.degree
                    .cmp(&y.degree)
                    .then_with(|| order.compare(x.lcm.exps(), y.lcm.exps()))
                    .then_with(|| (x.i, x.j).cmp(&(y.i, y.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let gi = &basis[pair.i];
        let gj = &basis[pair.j];
        let mi = pair.lcm.div(gi.lead_monomial().unwrap());
        let mj = pair.lcm.div(gj.lead_monomial().unwrap());
        let s = gi.mul_term(&mi, 1).add_scaled(gj, &mj, ring.p() - 1);
        let current: Vec<&Polynomial> = basis.iter().zip(&active).filter(|(_, a)| **a).map(|(b, _)| b).collect();
        let h = reduce_by(&s, &current);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(alloc::vec![Polynomial::one(ring)]);
        }
        insert(h.monic(), &mut basis, &mut active, &mut pairs);
    }

    let minimal: Vec<Polynomial> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(b, _)| b).collect();
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, h)| h).collect();
        let (lead, tail) = g.terms().split_first().unwrap();
        let tail = Polynomial::from_sorted(ring, tail.to_vec());
        let tail = reduce_by(&tail, &others);
        let mut terms = alloc::vec![lead.clone()];
        terms.extend(tail.into_terms());
        reduced.push(Polynomial::from_sorted(ring, terms));
    }
    reduced.sort_by(|a, b| order.compare(b.lead_monomial().unwrap().exps(), a.lead_monomial().unwrap().exps()));
    Ok(reduced)
}

/// `f ∈ I`
pub fn ideal_contains(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.product(b)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.sum(b)
}

/// The ideal `f · I`.
pub fn scale_ideal(f: &Polynomial, ideal: &Ideal) -> Result<Ideal> {
    ideal.scale(f)
}
