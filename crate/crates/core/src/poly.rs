//! Sparse multivariate polynomials over 𝔽_p.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field;
use crate::monomial::Monomial;
use crate::ring::{MonomialOrder, RingContext};

/// A polynomial in the ring of its context.
///
/// Terms are kept strictly descending in the ring's monomial order with
/// coefficients in `1..p`, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingContext,
    terms: Vec<(Monomial, u64)>,
}

/// Exponent sums beyond this are refused instead of risking overflow.
const MAX_DEGREE: u64 = 1 << 62;

impl Polynomial {
    pub fn zero(ring: &RingContext) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingContext) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &RingContext, c: u64) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn term(ring: &RingContext, m: Monomial, c: u64) -> Self {
        assert_eq!(m.len(), ring.nvars(), "monomial arity");
        let c = c % ring.p();
        let terms = if c == 0 { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable `x_i`.
    pub fn var(ring: &RingContext, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), 1)
    }

    /// Builds a polynomial from arbitrary terms: coefficients are reduced,
    /// duplicates merged, zeros dropped.
    pub fn from_terms(ring: &RingContext, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let p = ring.p();
        let order = ring.order();
        let mut raw: Vec<(Monomial, u64)> = terms
            .into_iter()
            .map(|(m, c)| {
                assert_eq!(m.len(), ring.nvars(), "monomial arity");
                (m, c % p)
            })
            .collect();
        raw.sort_by(|a, b| order.compare(b.0.exps(), a.0.exps()));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field::add(*lc, c, p),
                _ => {
                    if let Some((_, 0)) = out.last() {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, 0)) = out.last() {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted(ring: &RingContext, terms: Vec<(Monomial, u64)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| *c != 0 && *c < ring.p()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(w[0].0.exps(), w[1].0.exps()) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u64)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> u64 {
        self.terms.first().map_or(0, |t| t.1)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.ring.p();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), p - c)).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let p = self.ring.p();
        let c = c % p;
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field::mul(*a, c, p))).collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.lead() {
            None => self.clone(),
            Some(&(_, 1)) => self.clone(),
            Some(&(_, c)) => self.scale(field::inv(c, self.ring.p())),
        }
    }

    /// `c · x^m · self`
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let p = self.ring.p();
        let c = c % p;
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), field::mul(*a, c, p))).collect(),
        }
    }

    /// `self + c · x^m · other`, the workhorse of addition and reduction.
    pub(crate) fn add_scaled(&self, other: &Polynomial, m: &Monomial, c: u64) -> Polynomial {
        let p = self.ring.p();
        let order = self.order();
        let c = c % p;
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(t, k)| (t.mul(m), field::mul(*k, c, p)))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.compare(x.0.exps(), y.0.exps()),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (t, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = field::add(*x, y, p);
                    if s != 0 {
                        out.push((t.clone(), s));
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.same(&other.ring)?;
        Ok(self.add_scaled(other, &Monomial::one(self.ring.nvars()), 1))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.same(&other.ring)?;
        let p = self.ring.p();
        Ok(self.add_scaled(other, &Monomial::one(self.ring.nvars()), p - 1))
    }

    /// Exact product via a heap merge of the term products.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, *c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, *c);
        }
        let (outer, inner) = if self.terms.len() <= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        let p = self.ring.p();
        let order = self.order();

        struct Entry {
            mono: Monomial,
            i: usize,
            j: usize,
            order: MonomialOrder,
        }
        impl PartialEq for Entry {
            fn eq(&self, other: &Self) -> bool {
                self.cmp(other) == Ordering::Equal
            }
        }
        impl Eq for Entry {}
        impl PartialOrd for Entry {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl Ord for Entry {
            fn cmp(&self, other: &Self) -> Ordering {
                self.order
                    .compare(self.mono.exps(), other.mono.exps())
                    .then_with(|| other.i.cmp(&self.i))
            }
        }

        let mut heap = BinaryHeap::with_capacity(outer.len());
        for (i, (m, _)) in outer.iter().enumerate() {
            heap.push(Entry {
                mono: m.mul(&inner[0].0),
                i,
                j: 0,
                order,
            });
        }
        let mut out: Vec<(Monomial, u64)> = Vec::new();
        while let Some(Entry { mono, i, j, .. }) = heap.pop() {
            let c = field::mul(outer[i].1, inner[j].1, p);
            match out.last_mut() {
                Some((lm, lc)) if *lm == mono => *lc = field::add(*lc, c, p),
                _ => {
                    if let Some((_, 0)) = out.last() {
                        out.pop();
                    }
                    out.push((mono, c));
                }
            }
            if j + 1 < inner.len() {
                heap.push(Entry {
                    mono: outer[i].0.mul(&inner[j + 1].0),
                    i,
                    j: j + 1,
                    order,
                });
            }
        }
        if let Some((_, 0)) = out.last() {
            out.pop();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn check_degree(&self, k: u64) -> Result<()> {
        let d = self.degree().unwrap_or(0);
        match d.checked_mul(k) {
            Some(t) if t <= MAX_DEGREE => Ok(()),
            _ => Err(Error::limit(format!("degree {d} raised to power {k}"))),
        }
    }

    /// `self^m` by binary exponentiation.
    pub fn pow(&self, m: u64) -> Result<Polynomial> {
        if m == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        self.check_degree(m)?;
        if self.terms.len() == 1 {
            let (mono, c) = &self.terms[0];
            let mono = mono.checked_pow(m).expect("degree checked");
            return Ok(Polynomial::term(&self.ring, mono, field::pow(*c, m, self.ring.p())));
        }
        let mut base = self.clone();
        let mut acc: Option<Polynomial> = None;
        let mut k = m;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul_unchecked(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        Ok(acc.expect("m > 0"))
    }

    /// `self^{p^e}`: every exponent multiplied by `p^e`, coefficients fixed by
    /// Frobenius.
    pub fn frob_power(&self, e: u32) -> Result<Polynomial> {
        let q = self.ring.frobenius_power(e)?;
        self.check_degree(q)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.checked_pow(q).expect("degree checked"), *c))
                .collect(),
        })
    }

    /// `self^m` assembled from Frobenius powers of `self^{m_j}` over the
    /// base-p digits `m_j` of `m`.
    pub fn pow_base_p(&self, m: u64) -> Result<Polynomial> {
        if m == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        self.check_degree(m)?;
        let p = self.ring.p();
        let mut acc = Polynomial::one(&self.ring);
        let mut rest = m;
        let mut j = 0u32;
        while rest > 0 {
            let digit = rest % p;
            if digit > 0 {
                let piece = self.pow(digit)?;
                let piece = if j == 0 { piece } else { piece.frob_power(j)? };
                acc = acc.mul_unchecked(&piece);
            }
            rest /= p;
            j += 1;
        }
        Ok(acc)
    }

    /// Evaluates the coefficient of `m`, zero when absent.
    pub fn coeff(&self, m: &Monomial) -> u64 {
        let order = self.order();
        self.terms
            .binary_search_by(|(t, _)| order.compare(m.exps(), t.exps()))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingContext, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.vars()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if *c != 1 {
                    write!(f, "{c}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ring(p: u64, vars: &[&str]) -> RingContext {
        RingContext::new(p, vars.iter().copied(), MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn freshmans_dream_in_char_two() {
        let r = ring(2, &["x", "y"]);
        let s = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1)).unwrap();
        assert_eq!(s.pow(2).unwrap().to_string(), "x^2 + y^2");
    }

    #[test]
    fn product_with_cancellation() {
        let r = ring(3, &["x"]);
        let x = Polynomial::var(&r, 0);
        let a = x.add(&Polynomial::one(&r)).unwrap();
        let b = x.add(&Polynomial::constant(&r, 2)).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "x^2 + 2");
    }

    #[test]
    fn zeroth_power_is_one() {
        let r = ring(5, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        assert_eq!(x.pow(0).unwrap(), Polynomial::one(&r));
        assert_eq!(x.pow_base_p(0).unwrap(), Polynomial::one(&r));
    }

    #[test]
    fn frobenius_examples() {
        let r = ring(5, &["x", "y"]);
        let s = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1)).unwrap();
        assert_eq!(s.frob_power(1).unwrap().to_string(), "x^5 + y^5");
        let r3 = ring(3, &["x"]);
        let two_x = Polynomial::var(&r3, 0).scale(2);
        let direct = two_x.pow(9).unwrap();
        assert_eq!(two_x.frob_power(2).unwrap(), direct);
        assert_eq!(direct.to_string(), "2*x^9");
    }

    #[test]
    fn base_p_power_of_monomial() {
        let r = ring(7, &["x"]);
        let x = Polynomial::var(&r, 0);
        assert_eq!(x.pow_base_p(8).unwrap().to_string(), "x^8");
    }

    #[test]
    fn printer_format() {
        let r = ring(7, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x
            .pow(2)
            .unwrap()
            .add(&x.mul(&y).unwrap().scale(6))
            .unwrap()
            .add(&Polynomial::constant(&r, 3))
            .unwrap();
        assert_eq!(f.to_string(), "x^2 + 6*x*y + 3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn ring_mismatch() {
        let a = ring(7, &["x"]);
        let b = ring(5, &["x"]);
        assert_eq!(
            Polynomial::var(&a, 0).mul(&Polynomial::var(&b, 0)).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn frobenius_guard() {
        let r = ring(2, &["x"]);
        let x = Polynomial::var(&r, 0);
        assert!(matches!(x.frob_power(41), Err(Error::ResourceLimit(_))));
        assert!(x.frob_power(40).is_ok());
    }
}
