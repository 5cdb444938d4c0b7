use alloc::string::ToString;
use alloc::vec::Vec;

use super::*;
use crate::parse::parse_poly;
use crate::ring::MonomialOrder;

fn ring(p: u64) -> RingContext {
    RingContext::new(p, ["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
}

fn quintic(p: u64) -> Hypersurface {
    Hypersurface::new(&parse_poly(&ring(p), "x^5 + y^5 + z^5").unwrap()).unwrap()
}

fn ideal(r: &RingContext, src: &[&str]) -> Ideal {
    Ideal::new(r, src.iter().map(|s| parse_poly(r, s).unwrap()).collect()).unwrap()
}

fn maximal_power(r: &RingContext, k: u32) -> Ideal {
    let m = ideal(r, &["x", "y", "z"]);
    (1..k).fold(m.clone(), |acc, _| acc.product(&m).unwrap())
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::frac(n, d)
}

#[test]
fn tau_ppower_examples() {
    let h = quintic(7);
    let r = h.ring().clone();
    assert_eq!(h.tau_ppower(6, 1).unwrap(), ideal(&r, &["x^2", "y^2", "z^2", "x*y*z"]));
    assert_eq!(h.tau_ppower(48, 2).unwrap(), maximal_power(&r, 3));
    let x = Hypersurface::new(&parse_poly(&r, "x").unwrap()).unwrap();
    assert_eq!(x.tau_ppower(100, 2).unwrap(), ideal(&r, &["x^2"]));
}

#[test]
fn tau_values_at_p7() {
    let h = quintic(7);
    let r = h.ring().clone();
    assert_eq!(h.tau(&q(4, 7)).unwrap(), ideal(&r, &["x", "y", "z"]));
    assert_eq!(h.tau(&q(5, 7)).unwrap(), maximal_power(&r, 2));
    assert_eq!(h.tau(&q(6, 7)).unwrap(), ideal(&r, &["x^2", "y^2", "z^2", "x*y*z"]));
    let t = h.tau(&q(48, 49)).unwrap();
    assert_eq!(t, maximal_power(&r, 3));
    assert_eq!(t.canonical().unwrap().len(), 10);
    assert!(h.tau(&ExactRational::zero()).unwrap().is_unit().unwrap());
}

#[test]
fn tau_of_a_variable() {
    let r = ring(3);
    let x = Hypersurface::new(&parse_poly(&r, "x").unwrap()).unwrap();
    assert_eq!(x.tau(&q(3, 2)).unwrap(), ideal(&r, &["x"]));
    assert!(x.tau(&q(7, 8)).unwrap().is_unit().unwrap());
    assert_eq!(x.tau(&q(2, 1)).unwrap(), ideal(&r, &["x^2"]));
    assert!(x.tau_left(&q(1, 1)).unwrap().is_unit().unwrap());
}

#[test]
fn tau_left_examples() {
    let h = quintic(7);
    let r = h.ring().clone();
    assert!(h.tau_left(&q(4, 7)).unwrap().is_unit().unwrap());
    // the spec text lists (x²,y²,z²,xyz) first and then corrects to m³
    assert_eq!(h.tau_left(&q(1, 1)).unwrap(), maximal_power(&r, 3));
    assert_eq!(h.tau_left(&q(48, 49)).unwrap(), ideal(&r, &["x^2", "y^2", "z^2", "x*y*z"]));
}

#[test]
fn cartier_chain_examples() {
    let r = ring(5);
    let x = parse_poly(&r, "x").unwrap();
    let unit = Ideal::unit(&r);
    assert!(cartier_chain(&x, 4, 1, &unit).unwrap().is_unit().unwrap());
    let h = quintic(7);
    let seed = h.tau_ppower(6, 1).unwrap();
    let fixed = h.cartier_chain(6, 1, &seed).unwrap();
    assert_eq!(fixed, maximal_power(h.ring(), 3));
    assert_eq!(h.cartier_chain(6, 1, &fixed).unwrap(), fixed);
}

#[test]
fn jump_certificates() {
    let h = quintic(7);
    assert_eq!(h.is_fjumping(&q(4, 7)).unwrap().status, JumpStatus::CertifiedJump);
    assert_eq!(h.is_fjumping(&q(1, 2)).unwrap().status, JumpStatus::CertifiedNotJump);
    let x = parse_poly(&ring(7), "x").unwrap();
    assert!(is_fjumping(&x, &q(1, 1)).unwrap().is_certified_jump());
}

#[test]
fn nu_examples() {
    assert_eq!(quintic(7).nu(1).unwrap().nu, 3);
    assert_eq!(quintic(11).nu(1).unwrap().nu, 6);
    let x = parse_poly(&ring(5), "x").unwrap();
    assert_eq!(nu(&x, 2).unwrap().nu, 24);
    let one = parse_poly(&ring(5), "3").unwrap();
    assert_eq!(nu(&one, 1), Err(Error::UnitPolynomial));
}

fn certified_fpt(h: &Hypersurface, e_max: u32) -> ExactRational {
    match h.fpt(e_max, 3).unwrap() {
        FptResult::Certified(c) => {
            assert!(c.tau_left.is_unit().unwrap());
            c.value
        }
        other => panic!("uncertified: {other:?}"),
    }
}

#[test]
fn fpt_examples() {
    assert_eq!(certified_fpt(&quintic(7), 2), q(4, 7));
    assert_eq!(certified_fpt(&quintic(11), 2), q(3, 5));
    assert_eq!(certified_fpt(&quintic(2), 3), q(1, 4));
}

fn jump_values(h: &Hypersurface, e_res: u32) -> Vec<ExactRational> {
    let jumps = h.jumps_in_unit_interval(e_res, 3).unwrap();
    assert!(jumps.iter().all(|j| j.is_certified_jump()), "{jumps:?}");
    jumps.into_iter().map(|j| j.value).collect()
}

#[test]
fn quintic_jumps_small_primes() {
    assert_eq!(jump_values(&quintic(2), 3), [q(1, 4), q(1, 2), q(3, 4)]);
    assert_eq!(jump_values(&quintic(3), 3), [q(1, 3), q(2, 3), q(8, 9)]);
    assert_eq!(jump_values(&quintic(7), 2), [q(4, 7), q(5, 7), q(6, 7), q(48, 49)]);
}

#[test]
fn variable_has_no_jumps_below_one() {
    let x = parse_poly(&ring(3), "x").unwrap();
    assert!(jumps_in_unit_interval(&x, 2, 3).unwrap().is_empty());
}

#[test]
fn gap_verification() {
    let h = quintic(7);
    let gap = gap_certificate(h.f(), 6, 1, 4).unwrap();
    assert!(h.verify_gap(&gap).unwrap());
    let x = Hypersurface::new(&parse_poly(&ring(7), "x").unwrap()).unwrap();
    assert!(x.verify_gap(&gap_interval(6, 1, 0, 7).unwrap()).unwrap());
}

#[test]
fn rejects_zero() {
    let z = Polynomial::zero(&ring(5));
    assert!(matches!(Hypersurface::new(&z), Err(Error::ZeroPolynomial)));
    assert_eq!(q(4, 7).to_string(), "4/7");
}
