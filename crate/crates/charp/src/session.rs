//! One polynomial over one prime, with optional caching of results.

use charp_core::{Error, ExactRational, Hypersurface, Polynomial, RingContext};
use serde_json::{json, Value};

use crate::cache::{self, Cache};
use crate::error::CliError;
use crate::report;

pub struct Session<'a> {
    ring: RingContext,
    engine: Hypersurface,
    cache: Option<&'a Cache>,
    fingerprint: String,
    audit_fraction: f64,
}

impl<'a> Session<'a> {
    pub fn new(f: &Polynomial, cache: Option<&'a Cache>, audit_fraction: f64) -> Result<Self, CliError> {
        Ok(Session {
            ring: f.ring().clone(),
            engine: Hypersurface::new(f)?,
            fingerprint: cache::fingerprint(f.ring(), f),
            cache,
            audit_fraction,
        })
    }

    pub fn engine(&self) -> &Hypersurface {
        &self.engine
    }

    fn cached(&self, key: &str, compute: impl Fn() -> Result<Value, CliError>) -> Result<Value, CliError> {
        let Some(cache) = self.cache else {
            return compute();
        };
        if let Some(hit) = cache.get(&self.fingerprint, key) {
            if cache::audit_selected(&self.fingerprint, key, self.audit_fraction) {
                let fresh = compute()?;
                if !report::same_result(&self.ring, &hit, &fresh)? {
                    return Err(Error::InvariantViolation("cached result disagrees with recomputation").into());
                }
            }
            return Ok(hit);
        }
        let value = compute()?;
        cache.put(&self.fingerprint, key, &value)?;
        Ok(value)
    }

    pub fn root(&self, m: u64, e: u32) -> Result<Value, CliError> {
        self.cached(&format!("root m={m} e={e}"), || {
            let ideal = self.engine.tau_ppower(m, e)?;
            Ok(json!({ "generators": report::ideal_json(&ideal)? }))
        })
    }

    pub fn tau(&self, lam: &ExactRational, left: bool) -> Result<Value, CliError> {
        let op = if left { "tau_left" } else { "tau" };
        self.cached(&format!("{op} lambda={lam}"), || {
            let ideal = if left { self.engine.tau_left(lam)? } else { self.engine.tau(lam)? };
            Ok(json!({ "lambda": lam.to_string(), "left": left, "generators": report::ideal_json(&ideal)? }))
        })
    }

    pub fn fpt(&self, e_max: u32, s_max: u32) -> Result<Value, CliError> {
        self.cached(&format!("fpt e={e_max} s={s_max}"), || {
            Ok(report::fpt_json(&self.engine.fpt(e_max, s_max)?)?)
        })
    }

    pub fn jumps(&self, e_res: u32, s_max: u32) -> Result<Value, CliError> {
        self.cached(&format!("jumps e={e_res} s={s_max}"), || {
            Ok(report::jumps_json(&self.engine.jumps_in_unit_interval(e_res, s_max)?)?)
        })
    }

    pub fn is_jump(&self, lam: &ExactRational) -> Result<Value, CliError> {
        self.cached(&format!("is_fjumping lambda={lam}"), || {
            Ok(report::certificate_json(&self.engine.is_fjumping(lam)?)?)
        })
    }

    pub fn hsl(&self, depth: usize) -> Result<Value, CliError> {
        self.cached(&format!("hsl depth={depth}"), || Ok(report::hsl_json(&self.engine.hsl_number(depth)?)?))
    }
}
