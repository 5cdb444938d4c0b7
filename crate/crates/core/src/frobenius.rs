//! Bracket powers `J^{[p^e]}` and Frobenius roots `b^{[1/p^e]}`.
//!
//! The root of an ideal is generated by the coefficients `a_{i,j}` in the
//! decompositions `h_i = Σ_j a_{i,j}^{p^e} u_j` of its generators over the
//! monomials `u_j` with all exponents below `p^e`. Splitting each exponent
//! vector as `v = p^e·q + r`, the term `c·x^v` contributes `c·x^q` to the
//! coefficient of the class `r` (coefficients in 𝔽_p are Frobenius-fixed).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Result;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// A polynomial bucketed by exponent residue class modulo `p^e`.
#[derive(Clone, Debug)]
pub struct RootBasisIndex {
    e: u32,
    classes: BTreeMap<Monomial, Polynomial>,
}

impl RootBasisIndex {
    pub fn decompose(h: &Polynomial, e: u32) -> Result<Self> {
        let ring = h.ring();
        let q = ring.frobenius_power(e)?;
        let mut buckets: BTreeMap<Monomial, Vec<(Monomial, u64)>> = BTreeMap::new();
        for (m, c) in h.terms() {
            let (quot, rem) = m.div_rem(q);
            buckets.entry(rem).or_default().push((quot, *c));
        }
        // The quotient map preserves the monomial order, so each bucket is
        // already sorted.
        let classes = buckets
            .into_iter()
            .map(|(r, terms)| (r, Polynomial::from_sorted(ring, terms)))
            .collect();
        Ok(RootBasisIndex { e, classes })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `(u_j, a_j)` pairs with `h = Σ a_j^{p^e} u_j`.
    pub fn classes(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.classes.iter()
    }

    pub fn into_coefficients(self) -> impl Iterator<Item = Polynomial> {
        self.classes.into_values()
    }
}

fn cmp_poly(ring: &RingContext, a: &Polynomial, b: &Polynomial) -> Ordering {
    let order = ring.order();
    for (x, y) in a.terms().iter().zip(b.terms()) {
        let o = order.compare(y.0.exps(), x.0.exps()).then(x.1.cmp(&y.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// Monic, deduplicated generators in a fixed order.
pub(crate) fn tidy_generators(ring: &RingContext, gens: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    out.sort_by(|a, b| cmp_poly(ring, a, b));
    out.dedup();
    out
}

/// `J^{[p^e]}`: generated by the `p^e`-th powers of the generators.
pub fn bracket_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.frob_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `b^{[1/p^e]}`, the smallest ideal `J` with `b ⊆ J^{[p^e]}`.
pub fn frob_root(b: &Ideal, e: u32) -> Result<Ideal> {
    let ring = b.ring();
    if e == 0 {
        return Ok(b.clone());
    }
    let mut coeffs = Vec::new();
    for h in b.gens() {
        ring.checkpoint()?;
        coeffs.extend(RootBasisIndex::decompose(h, e)?.into_coefficients());
    }
    Ideal::new(ring, tidy_generators(ring, coeffs))
}

/// Cache of the small powers `f^r`, `r < p`, used by the digit recursion.
#[derive(Clone, Debug)]
pub struct PowerCache {
    f: Polynomial,
    table: BTreeMap<u64, Polynomial>,
}

impl PowerCache {
    pub fn new(f: &Polynomial) -> Self {
        PowerCache {
            f: f.clone(),
            table: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> &Polynomial {
        &self.f
    }

    pub fn get(&mut self, r: u64) -> Result<&Polynomial> {
        if !self.table.contains_key(&r) {
            // grow from the nearest cached lower power when there is one
            let lower = self.table.range(..r).next_back().map(|(k, v)| (*k, v.clone()));
            let value = match lower {
                Some((k, v)) if r - k <= 4 => {
                    let mut acc = v;
                    for _ in k..r {
                        acc = acc.mul_unchecked(&self.f);
                    }
                    acc
                }
                _ => self.f.pow(r)?,
            };
            self.table.insert(r, value);
        }
        Ok(&self.table[&r])
    }

    /// One step of the recursion: `(f^r · J)^{[1/p]}` for `r < p`.
    fn root_step(&mut self, r: u64, ideal: &Ideal) -> Result<Ideal> {
        let ring = ideal.ring().clone();
        let fr = self.get(r)?.clone();
        let mut coeffs = Vec::new();
        for g in ideal.canonical()? {
            ring.checkpoint()?;
            let h = g.mul_unchecked(&fr);
            coeffs.extend(RootBasisIndex::decompose(&h, 1)?.into_coefficients());
        }
        Ideal::new(&ring, tidy_generators(&ring, coeffs))?.canonicalized()
    }

    /// `(f^m · I)^{[1/p^e]}` without forming `f^m`.
    ///
    /// With `m = q·p + r`, `(f^m·I)^{[1/p]} = f^q · (f^r·I)^{[1/p]}`; applying
    /// this `e` times keeps every intermediate degree below
    /// `deg(f)·(p−1)` plus the generator degrees.
    pub fn mixed_root(&mut self, m: u64, ideal: &Ideal, e: u32) -> Result<Ideal> {
        let ring = ideal.ring().clone();
        ring.same(self.f.ring())?;
        if e > 0 {
            ring.frobenius_power(e)?;
        }
        let p = ring.p();
        let mut current = ideal.canonicalized()?;
        let mut rest = m;
        for _ in 0..e {
            ring.checkpoint()?;
            let r = rest % p;
            rest /= p;
            current = self.root_step(r, &current)?;
        }
        if rest > 0 {
            let lift = self.f.pow_base_p(rest)?;
            current = current.scale(&lift)?;
        }
        Ok(current)
    }
}

/// `(f^m · I)^{[1/p^e]}` by the bounded-degree digit recursion.
pub fn mixed_root(f: &Polynomial, m: u64, ideal: &Ideal, e: u32) -> Result<Ideal> {
    PowerCache::new(f).mixed_root(m, ideal, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::MonomialOrder;
    use alloc::string::ToString;

    fn ring(p: u64) -> RingContext {
        RingContext::new(p, ["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(r: &RingContext, src: &[&str]) -> Ideal {
        Ideal::new(r, src.iter().map(|s| parse_poly(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn bracket_power_examples() {
        let r = ring(5);
        assert_eq!(bracket_power(&ideal(&r, &["x", "y"]), 1).unwrap(), ideal(&r, &["x^5", "y^5"]));
        assert_eq!(bracket_power(&Ideal::unit(&r), 2).unwrap(), Ideal::unit(&r));
        let r2 = ring(2);
        let b = bracket_power(&ideal(&r2, &["x + y"]), 1).unwrap();
        assert_eq!(b.gens().len(), 1);
        assert_eq!(b.gens()[0].to_string(), "x^2 + y^2");
    }

    #[test]
    fn monomial_roots() {
        let r = ring(3);
        let b = ideal(&r, &["x^6", "x*y^3"]);
        assert_eq!(frob_root(&b, 1).unwrap(), ideal(&r, &["x^2", "y"]));
        assert_eq!(frob_root(&ideal(&r, &["x^9"]), 2).unwrap(), ideal(&r, &["x"]));
    }

    #[test]
    fn quintic_root_at_p7() {
        let r = ring(7);
        let f = parse_poly(&r, "x^5+y^5+z^5").unwrap();
        let b = Ideal::principal(&f.pow(6).unwrap());
        let root = frob_root(&b, 1).unwrap();
        assert_eq!(root, ideal(&r, &["x^2", "y^2", "z^2", "x*y*z"]));
        assert_eq!(mixed_root(&f, 6, &Ideal::unit(&r), 1).unwrap(), root);
    }

    #[test]
    fn mixed_root_examples() {
        let r = ring(5);
        let x = parse_poly(&r, "x").unwrap();
        let got = mixed_root(&x, 6, &ideal(&r, &["y"]), 1).unwrap();
        assert_eq!(got, ideal(&r, &["x"]));
        let i = ideal(&r, &["x^7 + y^5", "z^11"]);
        let f = parse_poly(&r, "x*y + z^2").unwrap();
        assert_eq!(mixed_root(&f, 0, &i, 2).unwrap(), frob_root(&i, 2).unwrap());
    }

    #[test]
    fn decomposition_reassembles() {
        let r = ring(3);
        let h = parse_poly(&r, "x^7*y + 2*x^4*y^4 + z^3 + x*y*z + 1").unwrap();
        let idx = RootBasisIndex::decompose(&h, 1).unwrap();
        let mut acc = Polynomial::zero(&r);
        for (u, a) in idx.classes() {
            assert!(u.exps().iter().all(|&k| k < 3));
            let piece = a.frob_power(1).unwrap().mul_term(u, 1);
            acc = acc.add(&piece).unwrap();
        }
        assert_eq!(acc, h);
    }
}
