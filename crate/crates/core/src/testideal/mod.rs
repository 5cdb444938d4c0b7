//! Test ideals `τ(f^λ)` of a principal ideal, their left limits, F-jumping
//! certification and enumeration, F-pure thresholds and the counting bounds.
//!
//! Every λ-chain is driven by the Cartier step `T(J) = (f^r·J)^{[1/p^s]}`.
//! `T` is monotone, so a chain that starts monotone stays monotone and the
//! first repeated term is its limit.

mod bounds;
mod pfrac;
mod search;

use alloc::collections::BTreeMap;
use core::cell::RefCell;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frobenius::PowerCache;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::rational::ExactRational;
use crate::ring::RingContext;

pub use bounds::{gap_certificate, gap_interval, jump_count_bound, transport_jump, GapInterval};
pub use pfrac::{multiplicative_order, pfrac_form, PFracForm};
pub use search::{FptResult, NuValue};

pub(crate) use bounds::binomial;
use pfrac::small;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JumpStatus {
    CertifiedJump,
    CertifiedNotJump,
    /// An interval known to contain a jump that no candidate certified.
    Candidate,
}

impl JumpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            JumpStatus::CertifiedJump => "certified-jump",
            JumpStatus::CertifiedNotJump => "certified-not-jump",
            JumpStatus::Candidate => "candidate",
        }
    }
}

/// `τ(f^λ)` next to its left limit.
///
/// For a `Candidate`, `interval = (lo, hi)` is known to contain a jump whose
/// exact position was not pinned down; `value` is `hi`, `tau_left` is
/// `τ(f^lo)` and `tau_at` the value `τ` has dropped to just below `hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpCertificate {
    pub value: ExactRational,
    pub tau_at: Ideal,
    pub tau_left: Ideal,
    pub status: JumpStatus,
    pub interval: Option<(ExactRational, ExactRational)>,
}

impl JumpCertificate {
    pub fn is_certified_jump(&self) -> bool {
        self.status == JumpStatus::CertifiedJump
    }
}

/// A hypersurface `f` with memoized test ideals.
///
/// Not `Sync`: the memo tables use interior mutability. Build one per
/// thread.
pub struct Hypersurface {
    f: Polynomial,
    powers: RefCell<PowerCache>,
    tau_memo: RefCell<BTreeMap<ExactRational, Ideal>>,
    left_memo: RefCell<BTreeMap<ExactRational, Ideal>>,
}

impl Hypersurface {
    pub fn new(f: &Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Hypersurface {
            f: f.clone(),
            powers: RefCell::new(PowerCache::new(f)),
            tau_memo: RefCell::new(BTreeMap::new()),
            left_memo: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &RingContext {
        self.f.ring()
    }

    pub fn p(&self) -> u64 {
        self.f.ring().p()
    }

    pub(crate) fn require_nonunit(&self) -> Result<()> {
        if self.f.is_unit() {
            return Err(Error::UnitPolynomial);
        }
        Ok(())
    }

    /// `(f^m · I)^{[1/p^e]}`.
    pub fn mixed_root(&self, m: u64, ideal: &Ideal, e: u32) -> Result<Ideal> {
        self.powers.borrow_mut().mixed_root(m, ideal, e)
    }

    /// `τ(f^{m/p^e}) = (f^m)^{[1/p^e]}`.
    pub fn tau_ppower(&self, m: u64, e: u32) -> Result<Ideal> {
        self.mixed_root(m, &Ideal::unit(self.ring()), e)
    }

    /// Iterates `J ↦ (f^r·J)^{[1/p^s]}` from `seed` to its fixed point.
    pub fn cartier_chain(&self, r: u64, s: u32, seed: &Ideal) -> Result<Ideal> {
        let limit = self.ring().limits().max_chain_steps;
        let mut cur = seed.canonicalized()?;
        let mut next = self.mixed_root(r, &cur, s)?;
        if next.equals(&cur)? {
            return Ok(cur);
        }
        let descending = next.is_subset_of(&cur)?;
        if !descending && !cur.is_subset_of(&next)? {
            return Err(Error::InvariantViolation("Cartier chain from seed is not monotone"));
        }
        let mut steps = 1;
        loop {
            steps += 1;
            if steps > limit {
                return Err(Error::limit(alloc::format!("Cartier chain exceeded {limit} steps")));
            }
            cur = next;
            next = self.mixed_root(r, &cur, s)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
        }
    }

    fn f_power(&self, k: &BigUint) -> Result<Polynomial> {
        self.f.pow_base_p(small(k, "Skoda exponent")?)
    }

    pub fn tau(&self, lam: &ExactRational) -> Result<Ideal> {
        if lam.is_negative() {
            return Err(Error::InvalidArgument("lambda must be non-negative"));
        }
        if lam.is_zero() {
            return Ok(Ideal::unit(self.ring()));
        }
        if let Some(hit) = self.tau_memo.borrow().get(lam) {
            return Ok(hit.clone());
        }
        let k = lam.floor().magnitude().clone();
        let frac = lam - &ExactRational::from_integer(k.clone());
        let result = if frac.is_zero() {
            Ideal::principal(&self.f_power(&k)?).canonicalized()?
        } else {
            let base = self.tau_fraction(&frac)?;
            if k.is_zero() {
                base
            } else {
                base.scale(&self.f_power(&k)?)?.canonicalized()?
            }
        };
        self.tau_memo.borrow_mut().insert(lam.clone(), result.clone());
        Ok(result)
    }

    /// `τ(f^λ)` for `0 < λ < 1`.
    fn tau_fraction(&self, frac: &ExactRational) -> Result<Ideal> {
        let p = self.p();
        let form = pfrac_form(frac, p)?;
        let ring = self.ring();
        // λ' = p^a·λ = r/(p^s − 1) = k' + r'/(p^s − 1)
        let ps1 = BigUint::from(ring.frobenius_power(form.s)? - 1);
        ring.frobenius_power(form.a)?;
        let k_prime = small(&(&form.r / &ps1), "p-power numerator")?;
        let r_prime = small(&(&form.r % &ps1), "chain numerator")?;
        let inner = if r_prime == 0 {
            Ideal::unit(ring)
        } else {
            let seed = self.tau_ppower(r_prime + 1, form.s)?;
            self.cartier_chain(r_prime, form.s, &seed)?
        };
        self.mixed_root(k_prime, &inner, form.a)
    }

    /// `τ(f^μ)` for every `μ < λ` close enough to `λ`.
    pub fn tau_left(&self, lam: &ExactRational) -> Result<Ideal> {
        if !lam.is_positive() {
            return Err(Error::InvalidArgument("lambda must be positive"));
        }
        if let Some(hit) = self.left_memo.borrow().get(lam) {
            return Ok(hit.clone());
        }
        let ring = self.ring();
        // λ = k + frac with frac ∈ (0, 1]
        let k = (lam.ceil() - 1u32).magnitude().clone();
        let frac = lam - &ExactRational::from_integer(k.clone());
        let form = pfrac_form(&frac, self.p())?;
        let ps1 = BigUint::from(ring.frobenius_power(form.s)? - 1);
        ring.frobenius_power(form.a)?;
        // λ' = p^a·frac ∈ (0, p^a] split as k' + r'/(p^s − 1) with r' ≥ 1
        let k_prime = (&form.r - 1u32) / &ps1;
        let r_prime = small(&(&form.r - &k_prime * &ps1), "chain numerator")?;
        let k_prime = small(&k_prime, "p-power numerator")?;
        let seed = self.tau_ppower(r_prime, form.s)?;
        let inner = self.cartier_chain(r_prime, form.s, &seed)?;
        let base = self.mixed_root(k_prime, &inner, form.a)?;
        let result = if k.is_zero() {
            base
        } else {
            base.scale(&self.f_power(&k)?)?.canonicalized()?
        };
        self.left_memo.borrow_mut().insert(lam.clone(), result.clone());
        Ok(result)
    }

    pub fn is_fjumping(&self, lam: &ExactRational) -> Result<JumpCertificate> {
        let tau_at = self.tau(lam)?;
        let tau_left = self.tau_left(lam)?;
        let status = if tau_at.equals(&tau_left)? {
            JumpStatus::CertifiedNotJump
        } else {
            JumpStatus::CertifiedJump
        };
        Ok(JumpCertificate {
            value: lam.clone(),
            tau_at,
            tau_left,
            status,
            interval: None,
        })
    }
}

pub fn tau_ppower(f: &Polynomial, m: u64, e: u32) -> Result<Ideal> {
    Hypersurface::new(f)?.tau_ppower(m, e)
}

pub fn cartier_chain(f: &Polynomial, r: u64, s: u32, seed: &Ideal) -> Result<Ideal> {
    Hypersurface::new(f)?.cartier_chain(r, s, seed)
}

pub fn tau(f: &Polynomial, lam: &ExactRational) -> Result<Ideal> {
    Hypersurface::new(f)?.tau(lam)
}

pub fn tau_left(f: &Polynomial, lam: &ExactRational) -> Result<Ideal> {
    Hypersurface::new(f)?.tau_left(lam)
}

pub fn is_fjumping(f: &Polynomial, lam: &ExactRational) -> Result<JumpCertificate> {
    Hypersurface::new(f)?.is_fjumping(lam)
}

pub fn nu(f: &Polynomial, e: u32) -> Result<NuValue> {
    Hypersurface::new(f)?.nu(e)
}

pub fn fpt(f: &Polynomial, e_max: u32, s_max: u32) -> Result<FptResult> {
    Hypersurface::new(f)?.fpt(e_max, s_max)
}

pub fn jumps_in_unit_interval(f: &Polynomial, e_res: u32, s_max: u32) -> Result<alloc::vec::Vec<JumpCertificate>> {
    Hypersurface::new(f)?.jumps_in_unit_interval(e_res, s_max)
}

#[cfg(test)]
mod tests;
