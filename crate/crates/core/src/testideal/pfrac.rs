use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// `λ = r / (p^a (p^s − 1))` with `s` the multiplicative order of `p` modulo
/// the prime-to-p part of the denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFracForm {
    pub r: BigUint,
    pub a: u32,
    pub s: u32,
}

impl PFracForm {
    pub fn value(&self, p: u64) -> ExactRational {
        let pa = BigUint::from(p).pow(self.a);
        let ps1 = BigUint::from(p).pow(self.s) - 1u32;
        ExactRational::new(self.r.clone(), pa * ps1).expect("nonzero denominator")
    }
}

// Orders beyond this are never needed for the denominators the engine meets.
const MAX_ORDER: u32 = 1 << 20;

/// Smallest `s ≥ 1` with `p^s ≡ 1 (mod d)`; `d` must be coprime to `p`.
pub fn multiplicative_order(p: u64, d: &BigUint) -> Result<u32> {
    if d.is_one() {
        return Ok(1);
    }
    let pm = BigUint::from(p) % d;
    let mut acc = pm.clone();
    for s in 1..=MAX_ORDER {
        if acc.is_one() {
            return Ok(s);
        }
        acc = (acc * &pm) % d;
    }
    Err(Error::limit("multiplicative order search"))
}

pub fn pfrac_form(lam: &ExactRational, p: u64) -> Result<PFracForm> {
    if !lam.is_positive() {
        return Err(Error::InvalidArgument("pfrac_form needs a positive rational"));
    }
    let pb = BigUint::from(p);
    let mut d = lam.denom().magnitude().clone();
    let mut a = 0u32;
    loop {
        let (q, rem) = d.div_rem(&pb);
        if !rem.is_zero() {
            break;
        }
        d = q;
        a += 1;
    }
    let s = multiplicative_order(p, &d)?;
    let den = pb.pow(a) * (pb.pow(s) - 1u32);
    let scaled = lam.scale(&den);
    debug_assert!(scaled.is_integer());
    let r = scaled.numer().magnitude().clone();
    Ok(PFracForm { r, a, s })
}

/// `BigUint -> u64`, or a resource error naming the quantity.
pub(crate) fn small(x: &BigUint, what: &str) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::limit(alloc::format!("{what} exceeds 64 bits")))
}
