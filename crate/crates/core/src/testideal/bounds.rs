//! The counting side: transport of jumps by `μ ↦ p^e·μ − r`, gap intervals
//! below `r/(p^e − 1)`, and the degree-count bound on the number of jumps.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::Hypersurface;
use crate::error::{Error, Result};
use crate::rational::ExactRational;

fn pow_rational(p: u64, e: u32) -> ExactRational {
    ExactRational::from_integer(BigInt::from(p).pow(e))
}

/// `λ_m = (1 − p^{−me})·λ` for `λ = r/(p^e − 1)`.
fn lambda_m(r: u64, e: u32, m: u32, p: u64) -> Result<(ExactRational, ExactRational)> {
    if e == 0 || r == 0 {
        return Err(Error::InvalidArgument("r and e must be positive"));
    }
    let pe = BigInt::from(p).pow(e);
    let lam = ExactRational::new(BigInt::from(r), &pe - 1)?;
    let pme = BigInt::from(p).pow(e * m);
    let factor = ExactRational::new(&pme - 1, pme)?;
    Ok((&factor * &lam, lam))
}

/// `p^e·μ − r` for `μ ∈ (λ_1, λ)`, `λ = r/(p^e − 1)`.
///
/// If `μ ∈ (λ_m, λ_{m+1}]` then the image lies in `(λ_{m−1}, λ_m]`, and it is
/// a jump whenever `μ` is.
pub fn transport_jump(mu: &ExactRational, r: u64, e: u32, p: u64) -> Result<ExactRational> {
    let (lam1, lam) = lambda_m(r, e, 1, p)?;
    if !(&lam1 < mu && mu < &lam) {
        return Err(Error::OutOfInterval);
    }
    Ok(&(mu * &pow_rational(p, e)) - &ExactRational::from_integer(r))
}

/// The open interval `(λ_d, λ)` that carries no jumps once `d` jumps are
/// known below `λ = r/(p^e − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapInterval {
    pub lower: ExactRational,
    pub upper: ExactRational,
}

pub fn gap_interval(r: u64, e: u32, d: u32, p: u64) -> Result<GapInterval> {
    let (lower, upper) = lambda_m(r, e, d, p)?;
    Ok(GapInterval { lower, upper })
}

/// The gap claim for `f`: with `d` the number of jumps of `f` below
/// `λ = r/(p^e − 1)`, there are none in `(λ_d, λ)`.
///
/// Pure arithmetic: the result is only as good as the supplied `d`. Check it
/// with [`Hypersurface::verify_gap`].
pub fn gap_certificate(f: &crate::poly::Polynomial, r: u64, e: u32, d: u32) -> Result<GapInterval> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    gap_interval(r, e, d, f.ring().p())
}

impl Hypersurface {
    /// `τ` is constant on `[lower, upper)`, i.e. no jump in `(lower, upper)`.
    pub fn verify_gap(&self, gap: &GapInterval) -> Result<bool> {
        let at = self.tau(&gap.lower)?;
        at.equals(&self.tau_left(&gap.upper)?)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C(n + ⌊M·λ⌋, n)`, the number of monomials of degree at most `⌊M·λ⌋` in
/// `n` variables; bounds the jumps below `λ` of a polynomial of degree `M`.
pub fn jump_count_bound(n: u64, m: u64, lam: &ExactRational) -> Result<BigUint> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("n and M must be positive"));
    }
    if lam.is_negative() {
        return Err(Error::InvalidArgument("lambda must be non-negative"));
    }
    let top = lam.scale(&BigUint::from(m)).floor();
    let top: u64 = top
        .magnitude()
        .try_into()
        .map_err(|_| Error::limit("degree bound exceeds 64 bits"))?;
    Ok(binomial(n + top, n))
}
