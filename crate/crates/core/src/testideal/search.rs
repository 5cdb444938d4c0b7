//! Localization of jumps: ν-values, the F-pure threshold and the enumeration
//! of jumps in `(0, 1)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{Hypersurface, JumpCertificate, JumpStatus};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::rational::ExactRational;

/// Largest `m` with `(f^m)^{[1/p^e]} = (1)`, so `fpt ∈ (ν/p^e, (ν+1)/p^e]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NuValue {
    pub e: u32,
    pub nu: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FptResult {
    Certified(JumpCertificate),
    /// Uncertified: the threshold lies in `(lo, hi]`.
    Interval { lo: ExactRational, hi: ExactRational },
}

/// What the candidate sweep found after `cur`.
enum Step {
    /// First candidate with `τ ≠ τ_cur`, together with `τ` there.
    Drop(ExactRational, Ideal),
    /// No candidate in range leaves `τ_cur`.
    Nothing,
}

/// `s ≤ s_max` not dividing any other `s' ≤ s_max`; these families contain
/// all the others.
fn maximal_periods(s_max: u32) -> Vec<u32> {
    (1..=s_max).filter(|&s| !(s + 1..=s_max).any(|t| t % s == 0)).collect()
}

fn rat(num: BigUint, den: &BigUint) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den.clone())).expect("nonzero denominator")
}

impl Hypersurface {
    pub fn nu(&self, e: u32) -> Result<NuValue> {
        if e == 0 {
            return Err(Error::InvalidArgument("e must be positive"));
        }
        self.require_nonunit()?;
        let q = self.ring().frobenius_power(e)?;
        // τ(f^0) = (1) and τ(f^1) = (f) ≠ (1)
        let nu = self.nu_between(0, q, e)?;
        Ok(NuValue { e, nu })
    }

    /// Binary search for the last unit ideal in `[lo, hi)`, given that
    /// `τ(f^{lo/p^e}) = (1)` and `τ(f^{hi/p^e}) ≠ (1)`.
    fn nu_between(&self, mut lo: u64, mut hi: u64, e: u32) -> Result<u64> {
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.tau_ppower(mid, e)?.is_unit()? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(lo)
    }

    pub fn fpt(&self, e_max: u32, s_max: u32) -> Result<FptResult> {
        if e_max == 0 || s_max == 0 {
            return Err(Error::InvalidArgument("e_max and s_max must be positive"));
        }
        self.require_nonunit()?;
        let p = self.p();
        self.ring().frobenius_power(e_max)?;
        let mut nu = self.nu_between(0, p, 1)?;
        for e in 2..=e_max {
            nu = self.nu_between(p * nu, p * (nu + 1), e)?;
        }
        let q = BigUint::from(self.ring().frobenius_power(e_max)?);
        let lo = rat(BigUint::from(nu), &q);
        let hi = rat(BigUint::from(nu + 1), &q);
        let unit = Ideal::unit(self.ring());
        if let Step::Drop(c, tau_c) = self.first_drop(&lo, &unit, &hi, true, e_max, s_max)? {
            let left = self.tau_left(&c)?;
            if left.is_unit()? {
                return Ok(FptResult::Certified(JumpCertificate {
                    value: c,
                    tau_at: tau_c,
                    tau_left: left,
                    status: JumpStatus::CertifiedJump,
                    interval: None,
                }));
            }
        }
        Ok(FptResult::Interval { lo, hi })
    }

    /// Smallest candidate `r/(p^a(p^s−1))` in `(lo, hi]` (or `(lo, hi)`)
    /// where `τ` differs from `tau_lo = τ(lo)`.
    ///
    /// `τ` is monotone, so inside one family the candidates where it still
    /// equals `tau_lo` form an initial segment and binary search applies.
    fn first_drop(
        &self,
        lo: &ExactRational,
        tau_lo: &Ideal,
        hi: &ExactRational,
        inclusive: bool,
        a_max: u32,
        s_max: u32,
    ) -> Result<Step> {
        let p = BigUint::from(self.p());
        let mut best: Option<(ExactRational, Ideal)> = None;
        for s in maximal_periods(s_max) {
            self.ring().frobenius_power(s)?;
            let den = p.pow(a_max) * (p.pow(s) - 1u32);
            let r_lo = lo.scale(&den).floor().magnitude().clone() + 1u32;
            // an earlier family already bounds the search
            let (end, end_inclusive) = match &best {
                Some((c, _)) => (c, false),
                None => (hi, inclusive),
            };
            let scaled = end.scale(&den);
            let r_hi = if end_inclusive {
                scaled.floor().magnitude().clone()
            } else {
                let c = scaled.ceil();
                if c <= BigInt::from(0) {
                    continue;
                }
                c.magnitude().clone() - 1u32
            };
            if r_lo > r_hi {
                continue;
            }
            let top = rat(r_hi.clone(), &den);
            let tau_top = self.tau(&top)?;
            if tau_top.equals(tau_lo)? {
                continue;
            }
            // τ(r_lo − 1) = tau_lo by convention, τ(hi_r) ≠ tau_lo
            let mut lo_r = r_lo - 1u32;
            let mut hi_r = r_hi;
            let mut tau_hi = tau_top;
            while &hi_r - &lo_r > BigUint::one() {
                let mid: BigUint = (&lo_r + &hi_r) >> 1u32;
                let t = self.tau(&rat(mid.clone(), &den))?;
                if t.equals(tau_lo)? {
                    lo_r = mid;
                } else {
                    hi_r = mid;
                    tau_hi = t;
                }
            }
            best = Some((rat(hi_r, &den), tau_hi));
        }
        Ok(match best {
            Some((c, t)) => Step::Drop(c, t),
            None => Step::Nothing,
        })
    }

    /// Jumps in `(lo, hi]` (or `(lo, hi)` when `!inclusive`), given
    /// `τ(lo)` and the ideal `τ` settles on at the right end.
    fn jumps_in_cell(
        &self,
        lo: ExactRational,
        tau_lo: Ideal,
        hi: &ExactRational,
        inclusive: bool,
        tau_end: &Ideal,
        a_max: u32,
        s_max: u32,
        out: &mut Vec<JumpCertificate>,
    ) -> Result<()> {
        let mut cur = lo;
        let mut tau_cur = tau_lo;
        while !tau_cur.equals(tau_end)? {
            self.ring().checkpoint()?;
            match self.first_drop(&cur, &tau_cur, hi, inclusive, a_max, s_max)? {
                Step::Drop(c, tau_c) => {
                    let left = self.tau_left(&c)?;
                    if !left.equals(&tau_cur)? {
                        // a jump hides strictly between cur and c
                        out.push(JumpCertificate {
                            value: c.clone(),
                            tau_at: left.clone(),
                            tau_left: tau_cur.clone(),
                            status: JumpStatus::Candidate,
                            interval: Some((cur.clone(), c.clone())),
                        });
                    }
                    if !left.equals(&tau_c)? {
                        out.push(JumpCertificate {
                            value: c.clone(),
                            tau_at: tau_c.clone(),
                            tau_left: left,
                            status: JumpStatus::CertifiedJump,
                            interval: None,
                        });
                    }
                    cur = c;
                    tau_cur = tau_c;
                }
                Step::Nothing => {
                    out.push(JumpCertificate {
                        value: hi.clone(),
                        tau_at: tau_end.clone(),
                        tau_left: tau_cur.clone(),
                        status: JumpStatus::Candidate,
                        interval: Some((cur, hi.clone())),
                    });
                    break;
                }
            }
        }
        Ok(())
    }

    /// All jumps in `(0, 1)`, ascending. Uncertified regions appear as
    /// `Candidate` entries.
    pub fn jumps_in_unit_interval(&self, e_res: u32, s_max: u32) -> Result<Vec<JumpCertificate>> {
        if e_res == 0 || s_max == 0 {
            return Err(Error::InvalidArgument("e_res and s_max must be positive"));
        }
        self.require_nonunit()?;
        let ring = self.ring();
        let q = ring.frobenius_power(e_res)?;
        if q > ring.limits().max_grid {
            return Err(Error::limit(format!("grid of size {q}")));
        }
        let mut grid: BTreeMap<u64, Ideal> = BTreeMap::new();
        let mut drops = Vec::new();
        // equal ends certify a constant stretch, so only split unequal spans
        let mut stack = alloc::vec![(0u64, q - 1)];
        while let Some((a, b)) = stack.pop() {
            if a == b {
                continue;
            }
            let ta = self.grid_value(&mut grid, a, e_res)?;
            let tb = self.grid_value(&mut grid, b, e_res)?;
            if ta.equals(&tb)? {
                continue;
            }
            if b == a + 1 {
                drops.push(b);
                continue;
            }
            let mid = a + (b - a) / 2;
            stack.push((mid, b));
            stack.push((a, mid));
        }
        drops.sort_unstable();

        let qb = BigUint::from(q);
        let a_max = e_res + 2;
        let mut out = Vec::new();
        for m in drops {
            let lo = rat(BigUint::from(m - 1), &qb);
            let hi = rat(BigUint::from(m), &qb);
            let tau_lo = grid[&(m - 1)].clone();
            let tau_hi = grid[&m].clone();
            self.jumps_in_cell(lo, tau_lo, &hi, true, &tau_hi, a_max, s_max, &mut out)?;
        }
        // last stretch ((q−1)/q, 1): compare against the left limit at 1
        let lo = rat(BigUint::from(q - 1), &qb);
        let tau_lo = self.grid_value(&mut grid, q - 1, e_res)?;
        let one = ExactRational::one();
        let tau_end = self.tau_left(&one)?;
        self.jumps_in_cell(lo, tau_lo, &one, false, &tau_end, a_max, s_max, &mut out)?;
        Ok(out)
    }

    fn grid_value(&self, grid: &mut BTreeMap<u64, Ideal>, m: u64, e: u32) -> Result<Ideal> {
        if let Some(t) = grid.get(&m) {
            return Ok(t.clone());
        }
        let t = self.tau_ppower(m, e)?;
        grid.insert(m, t.clone());
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periods() {
        assert_eq!(maximal_periods(1), [1]);
        assert_eq!(maximal_periods(3), [2, 3]);
        assert_eq!(maximal_periods(4), [3, 4]);
        assert_eq!(maximal_periods(6), [4, 5, 6]);
    }
}
