use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::Result;
use crate::groebner;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// Finitely generated ideal with a lazily computed reduced Gröbner basis.
///
/// The basis is filled at most once per value; concurrent readers may both
/// compute it, but only one result is ever published.
pub struct Ideal {
    ring: RingContext,
    gens: Vec<Polynomial>,
    canon: OnceBox<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let canon = OnceBox::new();
        if let Some(c) = self.canon.get() {
            let _ = canon.set(Box::new(c.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            canon,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl Ideal {
    pub fn new(ring: &RingContext, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.same(g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            canon: OnceBox::new(),
        })
    }

    /// An ideal whose generators are already its reduced Gröbner basis.
    pub(crate) fn from_canonical(ring: &RingContext, basis: Vec<Polynomial>) -> Ideal {
        let canon = OnceBox::new();
        let _ = canon.set(Box::new(basis.clone()));
        Ideal {
            ring: ring.clone(),
            gens: basis,
            canon,
        }
    }

    pub fn unit(ring: &RingContext) -> Ideal {
        Self::from_canonical(ring, alloc::vec![Polynomial::one(ring)])
    }

    pub fn zero(ring: &RingContext) -> Ideal {
        Self::from_canonical(ring, Vec::new())
    }

    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal {
            ring: f.ring().clone(),
            gens: alloc::vec![f.clone()],
            canon: OnceBox::new(),
        }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() <= 1)
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn canonical(&self) -> Result<&[Polynomial]> {
        if let Some(c) = self.canon.get() {
            return Ok(c);
        }
        let basis = groebner::buchberger(&self.ring, &self.gens)?;
        Ok(self.canon.get_or_init(|| Box::new(basis)))
    }

    /// Same ideal, generated by its reduced Gröbner basis.
    pub fn canonicalized(&self) -> Result<Ideal> {
        Ok(Ideal::from_canonical(&self.ring, self.canonical()?.to_vec()))
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_unit()) {
            return Ok(true);
        }
        Ok(self.canonical()?.first().is_some_and(|g| g.is_unit()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        Ok(groebner::reduce(f, self.canonical()?).is_zero())
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.ring.same(&other.ring)?;
        let basis = other.canonical()?;
        let gens = match self.canon.get() {
            Some(c) => c.as_slice(),
            None => &self.gens,
        };
        Ok(gens.iter().all(|g| groebner::reduce(g, basis).is_zero()))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.ring.same(&other.ring)?;
        Ok(self.canonical()? == other.canonical()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul_unchecked(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn scale(&self, f: &Polynomial) -> Result<Ideal> {
        self.ring.same(f.ring())?;
        let gens = match self.canon.get() {
            Some(c) => c.as_slice(),
            None => &self.gens,
        };
        Ideal::new(&self.ring, gens.iter().map(|g| g.mul_unchecked(f)).collect())
    }
}

/// Mathematical equality through the reduced Gröbner bases.
///
/// Panics if the basis computation is interrupted; use [`Ideal::equals`]
/// where an interrupt callback is installed.
impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.equals(other).expect("Gröbner basis interrupted")
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = match self.canonical() {
            Ok(c) => c,
            Err(_) => &self.gens,
        };
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
