#![no_std]
extern crate alloc;

pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod hsl;
pub mod ideal;
pub mod lucas;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod testideal;

pub use error::{Error, Result};
pub use frobenius::{bracket_power, frob_root, mixed_root, RootBasisIndex};
pub use groebner::{buchberger, normal_form};
pub use hsl::{cartier_step, hsl_number, hsl_upper_bound, HslFailure, HslReport};
pub use ideal::Ideal;
pub use lucas::{binom_mod_p, binom_nonzero, diagonal_root_membership, digits_base_p, multinomial_nonzero, DigitVector};
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::Polynomial;
pub use rational::ExactRational;
pub use ring::{InterruptFn, Limits, MonomialOrder, RingContext};
pub use testideal::{
    cartier_chain, fpt, gap_certificate, is_fjumping, jump_count_bound, jumps_in_unit_interval, nu, pfrac_form, tau,
    tau_left, tau_ppower, transport_jump, FptResult, GapInterval, Hypersurface, JumpCertificate, JumpStatus, NuValue,
    PFracForm,
};
