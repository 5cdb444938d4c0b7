//! On-disk result cache.
//!
//! One JSON-lines file per (ring, polynomial); each line is
//! `{"version", "key", "value"}`. Files only grow, and every update writes a
//! complete new copy beside the old one and renames it into place, so a
//! reader never sees a torn line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use charp_core::{Polynomial, RingContext};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const VERSION: u64 = 1;
pub const ENV_VAR: &str = "CHARP_CACHE_DIR";

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// The explicit directory, else `$CHARP_CACHE_DIR`, else no cache.
pub fn resolve_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from))
}

/// Stable identity of a polynomial over a ring: prime, order, variables and
/// the normalized polynomial text.
pub fn fingerprint(ring: &RingContext, f: &Polynomial) -> String {
    let mut h = Sha256::new();
    h.update(format!("charp-cache/v{VERSION}\n"));
    h.update(format!("p={}\norder={:?}\nvars={}\n", ring.p(), ring.order(), ring.vars().join(",")));
    h.update(format!("poly={f}\n"));
    hex::encode(h.finalize())
}

/// Whether a hit should be recomputed; deterministic in the key so repeated
/// runs audit the same entries.
pub fn audit_selected(fp: &str, key: &str, fraction: f64) -> bool {
    if fraction <= 0.0 {
        return false;
    }
    let digest = Sha256::digest(format!("{fp}/{key}"));
    let word = u64::from_be_bytes(digest[..8].try_into().expect("8 bytes"));
    (word as f64) < fraction * (u64::MAX as f64)
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, fp: &str) -> PathBuf {
        self.dir.join(format!("{fp}.jsonl"))
    }

    pub fn get(&self, fp: &str, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(fp)).ok()?;
        text.lines()
            .filter_map(|line| serde_json::from_str::<Value>(line).ok())
            .find(|entry| entry["version"] == VERSION && entry["key"] == key)
            .map(|mut entry| entry["value"].take())
    }

    /// Adds an entry unless the key is already present.
    pub fn put(&self, fp: &str, key: &str, value: &Value) -> io::Result<()> {
        let path = self.path(fp);
        let existing = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(e),
        };
        let present = existing
            .lines()
            .filter_map(|line| serde_json::from_str::<Value>(line).ok())
            .any(|entry| entry["version"] == VERSION && entry["key"] == key);
        if present {
            return Ok(());
        }
        let tmp = self.dir.join(format!(
            ".{fp}.{}.{}.tmp",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut file = fs::File::create(&tmp)?;
        file.write_all(existing.as_bytes())?;
        if !existing.is_empty() && !existing.ends_with('\n') {
            file.write_all(b"\n")?;
        }
        let line = json!({ "version": VERSION, "key": key, "value": value });
        writeln!(file, "{line}")?;
        file.sync_all()?;
        drop(file);
        fs::rename(&tmp, &path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use charp_core::{parse_poly, MonomialOrder};

    fn poly(p: u64) -> (RingContext, Polynomial) {
        let r = RingContext::new(p, ["x", "y"], MonomialOrder::GrevLex).unwrap();
        let f = parse_poly(&r, "x^2 + y^3").unwrap();
        (r, f)
    }

    #[test]
    fn fingerprint_depends_on_prime_and_text() {
        let (r5, f5) = poly(5);
        let (r7, f7) = poly(7);
        assert_ne!(fingerprint(&r5, &f5), fingerprint(&r7, &f7));
        let g = parse_poly(&r5, "y^3 + x^2 + 5*x").unwrap();
        assert_eq!(fingerprint(&r5, &f5), fingerprint(&r5, &g));
    }

    #[test]
    fn put_then_get() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let (r, f) = poly(5);
        let fp = fingerprint(&r, &f);
        assert!(cache.get(&fp, "hsl").is_none());
        cache.put(&fp, "hsl", &json!({"hsl": 1})).unwrap();
        cache.put(&fp, "fpt", &json!("x")).unwrap();
        // entries are immutable
        cache.put(&fp, "hsl", &json!({"hsl": 9})).unwrap();
        assert_eq!(cache.get(&fp, "hsl").unwrap(), json!({"hsl": 1}));
        assert_eq!(cache.get(&fp, "fpt").unwrap(), json!("x"));
        let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(files.len(), 1);
    }

    #[test]
    fn version_mismatch_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let line = json!({"version": VERSION + 1, "key": "hsl", "value": 3});
        fs::write(dir.path().join("abc.jsonl"), format!("{line}\n")).unwrap();
        assert!(cache.get("abc", "hsl").is_none());
    }

    #[test]
    fn audit_fraction_is_roughly_respected() {
        let hits = (0..2000).filter(|i| audit_selected("fp", &i.to_string(), 0.05)).count();
        assert!((50..150).contains(&hits), "{hits}");
        assert!(audit_selected("fp", "k", 1.0));
        assert!(!audit_selected("fp", "k", 0.0));
    }
}
