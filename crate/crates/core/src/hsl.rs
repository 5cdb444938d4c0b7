//! HSL numbers of hypersurfaces through the chain
//! `I₀ = (1)`, `I_{ℓ+1} = (f^{p−1}·I_ℓ)^{[1/p]}`, which satisfies
//! `I_ℓ = τ(f^{(p^ℓ−1)/p^ℓ})`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::testideal::Hypersurface;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HslReport {
    pub hsl: usize,
    /// `I₀ ⊋ I₁ ⊋ ⋯ ⊋ I_hsl = I_{hsl+1}`.
    pub chain: Vec<Ideal>,
    pub stabilized: Ideal,
}

/// An HSL computation that failed, with whatever chain it had built.
#[derive(Clone, Debug)]
pub struct HslFailure {
    pub error: Error,
    pub partial_chain: Vec<Ideal>,
}

impl fmt::Display for HslFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (after {} chain terms)", self.error, self.partial_chain.len())
    }
}

impl core::error::Error for HslFailure {}

impl From<Error> for HslFailure {
    fn from(error: Error) -> Self {
        HslFailure {
            error,
            partial_chain: Vec::new(),
        }
    }
}

impl Hypersurface {
    pub fn cartier_step(&self, ideal: &Ideal) -> Result<Ideal> {
        self.mixed_root(self.p() - 1, ideal, 1)
    }

    pub fn hsl_number(&self, l_max: usize) -> Result<HslReport, HslFailure> {
        self.require_nonunit()?;
        let mut chain = alloc::vec![Ideal::unit(self.ring())];
        let fail = |error, chain: Vec<Ideal>| HslFailure {
            error,
            partial_chain: chain,
        };
        loop {
            let ell = chain.len() - 1;
            if ell >= l_max.max(1) + 1 {
                return Err(fail(Error::limit(format!("hsl chain longer than {l_max}")), chain));
            }
            let next = match self.cartier_step(&chain[ell]) {
                Ok(n) => n,
                Err(e) => return Err(fail(e, chain)),
            };
            let same = match next.equals(&chain[ell]) {
                Ok(b) => b,
                Err(e) => return Err(fail(e, chain)),
            };
            chain.push(next);
            // the convention ℓ ≥ 1 ignores a repeat at ℓ = 0
            if same && ell >= 1 {
                let stabilized = chain[ell].clone();
                return Ok(HslReport {
                    hsl: ell,
                    chain,
                    stabilized,
                });
            }
        }
    }
}

pub fn cartier_step(f: &Polynomial, ideal: &Ideal) -> Result<Ideal> {
    Hypersurface::new(f)?.cartier_step(ideal)
}

pub fn hsl_number(f: &Polynomial, l_max: usize) -> Result<HslReport, HslFailure> {
    Hypersurface::new(f)?.hsl_number(l_max)
}

/// `C(n + M, n) + 1`.
pub fn hsl_upper_bound(n: u64, m: u64) -> Result<BigUint> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("n and M must be positive"));
    }
    Ok(crate::testideal::binomial(n + m, n) + 1u32)
}
