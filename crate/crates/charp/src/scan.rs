//! Invariants of one polynomial over a range of primes, computed by a worker
//! pool and emitted in ascending prime order.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc};
use std::time::{Duration, Instant};

use charp_core::{field::is_prime, parse_poly, Error, Limits, RingContext};
use serde_json::{json, Value};

use crate::args::{Format, Invariant, ScanArgs};
use crate::cache::{self, Cache};
use crate::error::CliError;
use crate::report;
use crate::session::Session;

pub const CSV_HEADER: [&str; 5] = ["prime", "invariant", "value", "status", "wall_ms"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub prime: u64,
    pub invariant: &'static str,
    pub value: String,
    pub status: String,
    pub wall_ms: u128,
}

impl Row {
    pub fn failed(&self) -> bool {
        matches!(self.status.as_str(), "timeout" | "resource-limit" | "error" | "invariant-violation" | "degenerate")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub primes: usize,
    pub failed_primes: usize,
}

/// `lo..hi`, `lo..=hi` or a single prime; both ends inclusive.
pub fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("invalid prime range `{s}`; expected lo..hi"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let lo = lo.parse().map_err(|_| bad())?;
    let hi = hi.parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if lo > hi {
        return Vec::new();
    }
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

fn failure_status(e: &CliError) -> &'static str {
    let core = match e {
        CliError::Core(e) => e,
        CliError::Hsl(h) => &h.error,
        _ => return "error",
    };
    match core {
        Error::Interrupted => "timeout",
        Error::ResourceLimit(_) => "resource-limit",
        Error::InvariantViolation(_) => "invariant-violation",
        _ => "error",
    }
}

fn scan_prime(p: u64, args: &ScanArgs, invariants: &[Invariant], cache: Option<&Cache>) -> Vec<Row> {
    let deadline = Instant::now() + Duration::from_secs(args.timeout_secs);
    let limits = Limits {
        interrupt: Some(Arc::new(move || Instant::now() >= deadline)),
        ..Limits::default()
    };
    let row = |inv: Invariant, value: String, status: &str, started: Instant| Row {
        prime: p,
        invariant: inv.name(),
        value,
        status: status.to_string(),
        wall_ms: if args.no_timing { 0 } else { started.elapsed().as_millis() },
    };
    let start = Instant::now();
    let order = crate::run::order_of(args.order);
    let f = RingContext::new(p, args.vars.iter().cloned(), order)
        .map(|r| r.with_limits(limits))
        .and_then(|r| parse_poly(&r, &args.poly));
    let f = match f {
        Ok(f) if f.is_zero() || f.is_unit() => {
            let what = if f.is_zero() { "zero mod p" } else { "unit mod p" };
            return invariants.iter().map(|&i| row(i, what.into(), "degenerate", start)).collect();
        }
        Ok(f) => f,
        Err(e) => return invariants.iter().map(|&i| row(i, e.to_string(), "error", start)).collect(),
    };
    let session = match Session::new(&f, cache, args.audit_fraction) {
        Ok(s) => s,
        Err(e) => return invariants.iter().map(|&i| row(i, e.to_string(), failure_status(&e), start)).collect(),
    };
    let mut rows = Vec::new();
    for &inv in invariants {
        let started = Instant::now();
        let result = match inv {
            Invariant::Fpt => session.fpt(args.e, args.s_max).map(|v| report::fpt_cell(&v)),
            Invariant::Hsl => session.hsl(args.depth).map(|v| report::hsl_cell(&v)),
            Invariant::Jumps => session.jumps(args.resolution_e, args.s_max).map(|v| report::jumps_cell(&v)),
        };
        rows.push(match result {
            Ok((value, status)) => row(inv, value, &status, started),
            Err(e) => row(inv, e.to_string(), failure_status(&e), started),
        });
    }
    rows
}

fn row_json(r: &Row, timing: bool) -> Value {
    let mut v = json!({
        "prime": r.prime,
        "invariant": r.invariant,
        "value": r.value,
        "status": r.status,
    });
    if timing {
        v["wall_ms"] = json!(r.wall_ms as u64);
    }
    v
}

fn csv_bytes(records: impl IntoIterator<Item = [String; 5]>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in records {
        w.write_record(&rec).map_err(|e| CliError::Io(e.into()))?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

pub fn scan(args: &ScanArgs, out: &mut dyn Write) -> Result<ScanSummary, CliError> {
    let (lo, hi) = parse_range(&args.primes)?;
    let primes = primes_in(lo, hi);
    let mut invariants = args.report.clone();
    invariants.dedup();
    if args.threads == 0 {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    let cache = match cache::resolve_dir(args.cache_dir.as_deref()) {
        Some(dir) => Some(Cache::open(&dir)?),
        None => None,
    };
    let mut summary = ScanSummary {
        primes: primes.len(),
        failed_primes: 0,
    };
    if primes.is_empty() {
        return Ok(summary);
    }

    if args.format == Format::Csv {
        out.write_all(&csv_bytes([CSV_HEADER.map(String::from)])?)?;
    }
    let mut json_rows = Vec::new();
    let mut emit = |rows: Vec<Row>, out: &mut dyn Write| -> Result<(), CliError> {
        match args.format {
            Format::Csv => {
                let records = rows.iter().map(|r| {
                    [r.prime.to_string(), r.invariant.to_string(), r.value.clone(), r.status.clone(), r.wall_ms.to_string()]
                });
                out.write_all(&csv_bytes(records)?)?;
            }
            Format::Json => json_rows.extend(rows.iter().map(|r| row_json(r, !args.no_timing))),
            Format::Text => {
                for r in &rows {
                    writeln!(out, "{} {} {} {}", r.prime, r.invariant, r.value, r.status)?;
                }
            }
        }
        out.flush()?;
        Ok(())
    };

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Vec<Row>)>();
    let workers = args.threads.min(primes.len());
    let result = std::thread::scope(|scope| -> Result<(), CliError> {
        for _ in 0..workers {
            let tx = tx.clone();
            let (next, primes, invariants, cache) = (&next, &primes, &invariants, cache.as_ref());
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= primes.len() {
                    break;
                }
                let rows = scan_prime(primes[i], args, invariants, cache);
                if tx.send((i, rows)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        // release results in prime order as soon as the prefix is complete
        let mut pending: BTreeMap<usize, Vec<Row>> = BTreeMap::new();
        let mut emitted = 0;
        for (i, rows) in rx {
            pending.insert(i, rows);
            while let Some(rows) = pending.remove(&emitted) {
                if rows.iter().all(Row::failed) {
                    summary.failed_primes += 1;
                }
                emit(rows, out)?;
                emitted += 1;
            }
        }
        Ok(())
    });
    result?;
    if args.format == Format::Json {
        serde_json::to_writer_pretty(&mut *out, &Value::Array(json_rows)).map_err(|e| CliError::Io(e.into()))?;
        writeln!(out)?;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..19").unwrap(), (2, 19));
        assert_eq!(parse_range("5..=7").unwrap(), (5, 7));
        assert_eq!(parse_range("11").unwrap(), (11, 11));
        assert!(parse_range("a..b").is_err());
        assert_eq!(primes_in(2, 19), [2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(primes_in(20, 10).is_empty());
        assert!(primes_in(24, 28).is_empty());
    }
}
