//! Structural properties of τ(f^λ): monotonicity, the two computation paths,
//! Skoda, p-scaling, transport of jumps and threshold consistency.

mod common;

use charp_core::{
    transport_jump, ExactRational, FptResult, Hypersurface, Ideal, JumpStatus, Polynomial, RingContext,
};
use common::*;
use proptest::prelude::*;

const PRIMES: &[u64] = &[2, 3, 5];

fn engine(p: u64, n: usize, raw: &RawPoly) -> Option<(RingContext, Polynomial, Hypersurface)> {
    let r = ring(p, n);
    let f = build(&r, raw);
    if f.is_zero() || f.is_unit() {
        return None;
    }
    let h = Hypersurface::new(&f).unwrap();
    Some((r, f, h))
}

fn rat(n: u64, d: u64) -> ExactRational {
    ExactRational::frac(n as i64, d as i64)
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn tau_is_monotone((p, n, f) in poly_case(PRIMES, 2..=3, 4, 4), a in 1u64..20, b in 1u64..20, d in 1u64..=10) {
        let Some((_, _, h)) = engine(p, n, &f) else { return Ok(()) };
        let (lo, hi) = (rat(a.min(b), d), rat(a.max(b), d));
        let t_lo = h.tau(&lo).unwrap();
        let t_hi = h.tau(&hi).unwrap();
        prop_assert!(t_hi.is_subset_of(&t_lo).unwrap());
        // the left limit sits between
        let left = h.tau_left(&hi).unwrap();
        prop_assert!(t_hi.is_subset_of(&left).unwrap());
        if lo < hi {
            prop_assert!(left.is_subset_of(&t_lo).unwrap());
        }
    }

    #[test]
    fn grid_chain_ascends((p, n, f) in poly_case(PRIMES, 2..=3, 4, 4), num in 1u64..24, d in 1u64..=12, e in 1u32..=2) {
        let Some((_, _, h)) = engine(p, n, &f) else { return Ok(()) };
        let q = p.pow(e);
        let a = h.tau_ppower(ceil_div(num * q, d), e).unwrap();
        let b = h.tau_ppower(ceil_div(num * q * p, d), e + 1).unwrap();
        prop_assert!(a.is_subset_of(&b).unwrap());
        // grid values approach τ(f^λ) from below
        prop_assert!(b.is_subset_of(&h.tau(&rat(num, d)).unwrap()).unwrap());
    }

    #[test]
    fn two_paths_agree((p, n, f) in poly_case(PRIMES, 2..=3, 4, 4), m in 0u64..60, e in 1u32..=3) {
        let Some((_, f, h)) = engine(p, n, &f) else { return Ok(()) };
        let q = p.pow(e);
        let chain_path = h.tau(&rat(m, q)).unwrap();
        let fresh = Hypersurface::new(&f).unwrap();
        prop_assert_eq!(chain_path, fresh.tau_ppower(m, e).unwrap());
    }

    #[test]
    fn skoda((p, n, f) in poly_case(PRIMES, 2..=3, 4, 4), num in 0u64..12, d in 1u64..=12) {
        let Some((_, f, h)) = engine(p, n, &f) else { return Ok(()) };
        let frac = rat(num % d, d);
        let lam = &frac + &ExactRational::one();
        prop_assert_eq!(h.tau(&lam).unwrap(), h.tau(&frac).unwrap().scale(&f).unwrap());
        // independent route through p-power grid points m/q ≥ 1
        let q = p * p;
        let m = q + (num * q) / d.max(1) % q;
        let direct = h.tau_ppower(m, 2).unwrap();
        prop_assert_eq!(direct, h.tau_ppower(m - q, 2).unwrap().scale(&f).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Every certified jump in (0, 1) stays a jump under λ ↦ pλ, λ ↦ λ + 1 and
    /// under the transport map of every window containing it.
    #[test]
    fn jumps_scale_shift_and_transport((p, n, f) in poly_case(PRIMES, 2..=3, 4, 4)) {
        let Some((_, _, h)) = engine(p, n, &f) else { return Ok(()) };
        let jumps = h.jumps_in_unit_interval(2, 2).unwrap();
        for j in jumps.iter().filter(|j| j.status == JumpStatus::CertifiedJump) {
            let mu = &j.value;
            let scaled = mu.scale(&p.into());
            prop_assert!(h.is_fjumping(&scaled).unwrap().is_certified_jump(), "pλ for {}", mu);
            let shifted = mu + &ExactRational::one();
            prop_assert!(h.is_fjumping(&shifted).unwrap().is_certified_jump(), "λ+1 for {}", mu);
            for e in 1u32..=2 {
                let top = p.pow(e) - 1;
                for r in 1..=top {
                    if let Ok(image) = transport_jump(mu, r, e, p) {
                        prop_assert!(h.is_fjumping(&image).unwrap().is_certified_jump(), "transport {} r={} e={}", mu, r, e);
                    }
                }
            }
        }
        // non-jumps stay non-jumps after the Skoda shift
        if jumps.iter().any(|j| j.status == JumpStatus::Candidate) {
            return Ok(());
        }
        for w in jumps.windows(2) {
            let mid = &(&w[0].value + &w[1].value) * &ExactRational::frac(1, 2);
            let c = h.is_fjumping(&(&mid + &ExactRational::one())).unwrap();
            prop_assert_eq!(c.status, JumpStatus::CertifiedNotJump);
        }
    }

    #[test]
    fn fpt_is_consistent((p, n, f) in poly_case(PRIMES, 2..=3, 4, 4)) {
        let Some((r, _, h)) = engine(p, n, &f) else { return Ok(()) };
        match h.fpt(3, 3).unwrap() {
            FptResult::Certified(c) => {
                prop_assert!(h.tau_left(&c.value).unwrap().is_unit().unwrap());
                prop_assert!(!h.tau(&c.value).unwrap().is_unit().unwrap());
                let nu = h.nu(2).unwrap().nu;
                let q = p * p;
                prop_assert!(rat(nu, q) < c.value && c.value <= rat(nu + 1, q));
                prop_assert_eq!(c.tau_left, Ideal::unit(&r));
            }
            FptResult::Interval { lo, hi } => {
                prop_assert!(h.tau(&lo).unwrap().is_unit().unwrap());
                prop_assert!(!h.tau(&hi).unwrap().is_unit().unwrap());
            }
        }
    }
}

#[test]
fn quintic_transport_examples() {
    let h = Hypersurface::new(&fermat(7, 5)).unwrap();
    for (mu, image) in [(rat(48, 49), rat(6, 7))] {
        assert!(h.is_fjumping(&mu).unwrap().is_certified_jump());
        let t = transport_jump(&mu, 6, 1, 7).unwrap();
        assert_eq!(t, image);
        assert!(h.is_fjumping(&t).unwrap().is_certified_jump());
    }
    let h3 = Hypersurface::new(&fermat(3, 5)).unwrap();
    let t = transport_jump(&rat(8, 9), 2, 1, 3).unwrap();
    assert!(h3.is_fjumping(&t).unwrap().is_certified_jump());
}

#[test]
fn quintic_gap_against_scan() {
    // p = 2, λ = 1/3 = 1/(2² − 1), one jump (1/4) below it
    let h = Hypersurface::new(&fermat(2, 5)).unwrap();
    let below: Vec<_> = h
        .jumps_in_unit_interval(4, 3)
        .unwrap()
        .into_iter()
        .filter(|j| j.value < rat(1, 3))
        .collect();
    assert_eq!(below.len(), 1);
    let gap = charp_core::gap_certificate(h.f(), 1, 2, below.len() as u32).unwrap();
    assert_eq!(gap.lower, rat(1, 4));
    assert!(h.verify_gap(&gap).unwrap());
}
