//! Command dispatch.

use std::ffi::OsString;
use std::io::Write;

use charp_core::lucas::{binom_mod_p, binom_nonzero, digits_base_p, multinomial_mod_p, multinomial_nonzero};
use charp_core::{field::is_prime, parse_poly, Error, ExactRational, MonomialOrder, Polynomial, RingContext};
use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format, Order, OutputArgs, RingArgs};
use crate::cache::{self, Cache};
use crate::error::CliError;
use crate::report;
use crate::scan;
use crate::session::Session;

pub fn order_of(o: Order) -> MonomialOrder {
    match o {
        Order::Grevlex => MonomialOrder::GrevLex,
        Order::Lex => MonomialOrder::Lex,
    }
}

fn polynomial(ring: &RingArgs) -> Result<Polynomial, CliError> {
    let r = RingContext::new(ring.p, ring.vars.iter().cloned(), order_of(ring.order))?;
    Ok(parse_poly(&r, &ring.poly)?)
}

fn lambda(text: &str) -> Result<ExactRational, CliError> {
    text.parse::<ExactRational>().map_err(|_| CliError::Usage(format!("lambda `{text}` is not a rational number")))
}

fn open_cache(out: &OutputArgs) -> Result<Option<Cache>, CliError> {
    match cache::resolve_dir(out.cache_dir.as_deref()) {
        Some(dir) => Ok(Some(Cache::open(&dir)?)),
        None => Ok(None),
    }
}

/// Result of a single-polynomial command: JSON plus its text rendering.
struct Output {
    json: Value,
    text: String,
}

fn single(ring: &RingArgs, out: &OutputArgs, work: impl FnOnce(&Session) -> Result<Output, CliError>) -> Result<Output, CliError> {
    if out.format == Format::Csv {
        return Err(CliError::Usage("csv output is only available for scan".into()));
    }
    let f = polynomial(ring)?;
    let cache = open_cache(out)?;
    let session = Session::new(&f, cache.as_ref(), 0.05)?;
    work(&session)
}

fn lucas(p: u64, m: u64, k: Option<u64>, parts: Option<Vec<u64>>) -> Result<Output, CliError> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p).into());
    }
    let digits = |n: u64| digits_base_p(n, p).digits().to_vec();
    match (k, parts) {
        (Some(k), None) => {
            let residue = binom_mod_p(m, k, p);
            let nonzero = binom_nonzero(m, k, p);
            Ok(Output {
                text: format!("C({m}, {k}) = {residue} mod {p}\n"),
                json: json!({ "p": p, "m": m, "k": k, "residue": residue, "nonzero": nonzero, "digitsM": digits(m), "digitsK": digits(k) }),
            })
        }
        (None, Some(parts)) => {
            let nonzero = multinomial_nonzero(m, &parts, p)?;
            let residue = multinomial_mod_p(m, &parts, p)?;
            let list: Vec<String> = parts.iter().map(u64::to_string).collect();
            Ok(Output {
                text: format!("C({m}; {}) = {residue} mod {p}\n", list.join(", ")),
                json: json!({ "p": p, "m": m, "parts": parts, "residue": residue, "nonzero": nonzero }),
            })
        }
        _ => Err(CliError::Usage("lucas needs exactly one of -k or --parts".into())),
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(Option<Output>, Format, i32), CliError> {
    let generators = |v: Value| Output {
        text: report::ideal_text(&v["generators"]),
        json: v,
    };
    let (output, format) = match command {
        Command::Root { ring, m, e, out } => (single(&ring, &out, |s| Ok(generators(s.root(m, e)?)))?, out.format),
        Command::Tau { ring, lambda: lam, left, out } => {
            let lam = lambda(&lam)?;
            (single(&ring, &out, |s| Ok(generators(s.tau(&lam, left)?)))?, out.format)
        }
        Command::Fpt { ring, e, s_max, out } => (
            single(&ring, &out, |s| {
                let v = s.fpt(e, s_max)?;
                Ok(Output { text: report::fpt_text(&v), json: v })
            })?,
            out.format,
        ),
        Command::Jumps { ring, resolution_e, s_max, lambda: lam, out } => {
            let lam = lam.as_deref().map(lambda).transpose()?;
            (
                single(&ring, &out, |s| {
                    Ok(match &lam {
                        Some(l) => {
                            let v = s.is_jump(l)?;
                            Output { text: report::certificate_text(&v), json: v }
                        }
                        None => {
                            let v = s.jumps(resolution_e, s_max)?;
                            Output { text: report::jumps_text(&v), json: v }
                        }
                    })
                })?,
                out.format,
            )
        }
        Command::Hsl { ring, depth, out } => (
            single(&ring, &out, |s| {
                let v = s.hsl(depth)?;
                Ok(Output { text: format!("{}\n", v["hsl"]), json: v })
            })?,
            out.format,
        ),
        Command::Lucas { p, m, k, parts, format } => {
            if format == Format::Csv {
                return Err(CliError::Usage("csv output is only available for scan".into()));
            }
            (lucas(p, m, k, parts)?, format)
        }
        Command::Scan(args) => {
            let summary = scan::scan(&args, stdout)?;
            let code = if summary.primes > 0 && summary.failed_primes == summary.primes { 2 } else { 0 };
            return Ok((None, args.format, code));
        }
    };
    Ok((Some(output), format, 0))
}

fn wants_json(args: &[OsString]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json")
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 success, 1 usage or input error, 2 resource limit or timeout,
/// 3 internal invariant violation.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_errors = wants_json(&args);
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = write!(stderr, "{e}");
            return 1;
        }
    };
    match execute(cli.command, stdout) {
        Ok((output, format, code)) => {
            if let Some(o) = output {
                let written = match format {
                    Format::Json => serde_json::to_string_pretty(&o.json).map(|s| s + "\n").unwrap_or_default(),
                    _ => o.text,
                };
                if let Err(e) = stdout.write_all(written.as_bytes()) {
                    let _ = writeln!(stderr, "charp: {e}");
                    return 1;
                }
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "charp: {e}");
            if json_errors {
                let _ = writeln!(stdout, "{}", json!({ "error": e.to_string(), "exitCode": e.exit_code() }));
            }
            e.exit_code()
        }
    }
}
