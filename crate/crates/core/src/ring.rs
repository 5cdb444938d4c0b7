use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field;

/// Monomial order shared by every polynomial and ideal of a ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    /// Compares two exponent vectors of equal length.
    pub fn compare(self, a: &[u64], b: &[u64]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u128 = a.iter().map(|&x| x as u128).sum();
                let db: u128 = b.iter().map(|&x| x as u128).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// Callback polled at cooperative checkpoints; returning `true` aborts the
/// running computation with [`Error::Interrupted`].
pub type InterruptFn = Arc<dyn Fn() -> bool + Send + Sync>;

/// Resource guards consulted by the long-running operations.
#[derive(Clone)]
pub struct Limits {
    /// Largest admissible `p^e` in a Frobenius power or root.
    pub max_frobenius_power: u64,
    /// Iteration cap for Cartier-operator chains.
    pub max_chain_steps: usize,
    /// Largest grid `p^e` scanned by the jumping-number search.
    pub max_grid: u64,
    /// Cap on exponent tuples enumerated by the diagonal membership oracle.
    pub max_oracle_tuples: u64,
    pub interrupt: Option<InterruptFn>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_frobenius_power: 1 << 40,
            max_chain_steps: 64,
            max_grid: 1 << 24,
            max_oracle_tuples: 1 << 26,
            interrupt: None,
        }
    }
}

impl fmt::Debug for Limits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Limits")
            .field("max_frobenius_power", &self.max_frobenius_power)
            .field("max_chain_steps", &self.max_chain_steps)
            .field("max_grid", &self.max_grid)
            .field("max_oracle_tuples", &self.max_oracle_tuples)
            .field("interrupt", &self.interrupt.is_some())
            .finish()
    }
}

#[derive(Debug)]
struct RingInner {
    p: u64,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

/// The ambient ring 𝔽_p[x₁, …, x_n] with a fixed monomial order.
///
/// Cheap to clone. Two contexts are compatible when prime, variables and
/// order agree; the limits are not part of the identity.
#[derive(Clone, Debug)]
pub struct RingContext(Arc<RingInner>);

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<I, S>(p: u64, vars: I, order: MonomialOrder) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if !field::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::EmptyVariableList);
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidVariableName(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(RingContext(Arc::new(RingInner {
            p,
            vars,
            order,
            limits: Limits::default(),
        })))
    }

    /// Same ring with different resource guards.
    pub fn with_limits(&self, limits: Limits) -> Self {
        RingContext(Arc::new(RingInner {
            p: self.0.p,
            vars: self.0.vars.clone(),
            order: self.0.order,
            limits,
        }))
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn limits(&self) -> &Limits {
        &self.0.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Polls the interrupt callback.
    pub fn checkpoint(&self) -> Result<()> {
        match &self.0.limits.interrupt {
            Some(stop) if stop() => Err(Error::Interrupted),
            _ => Ok(()),
        }
    }

    /// `p^e`, subject to the Frobenius power guard.
    pub fn frobenius_power(&self, e: u32) -> Result<u64> {
        let q = self
            .0
            .p
            .checked_pow(e)
            .filter(|&q| q <= self.0.limits.max_frobenius_power)
            .ok_or_else(|| Error::limit(alloc::format!("p^e with p = {}, e = {e}", self.0.p)))?;
        Ok(q)
    }

    pub fn same(&self, other: &RingContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.order == other.0.order
                && self.0.vars == other.0.vars)
    }
}

impl Eq for RingContext {}
