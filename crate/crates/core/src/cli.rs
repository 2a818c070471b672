//! Command-line front end. Every command prints text by default and JSON
//! with `--json`; exit status is 0 on success, 1 when a checked verdict
//! fails, 2 on usage errors.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance::{self, Config};
use crate::analysis::{nugatory_scan, odd_change_check, parity_consistency, Verdict};
use crate::braid::{BraidWord, CrossingId, Sign};
use crate::homfly::{certify_braid_index_3, homfly_oracle, jones, mfw_lower_bound, to_homfly, Certificate};
use crate::mtws::{exchange_pair, flype_pair, search_exchange_divergence, ExchangeInstance, FlypeInstance};
use crate::resolve::{compare_basepoints, label_only, resolution_tree, resolve, resolve_with, BasepointRule};

#[derive(Debug, Parser)]
#[command(name = "braidskein", version, about = "Skein resolution of closed braid diagrams")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coordinates of the closure in the partition basis.
    Resolve {
        word: String,
        /// First basepoint: a strand position, or `all` to compare every choice.
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Good/bad label of every crossing.
    Labels { word: String },
    /// The binary resolution tree.
    Tree { word: String },
    /// Checks that the A^k exponent equals positive minus negative bad crossings.
    Parity { word: String },
    /// Resolves every single crossing change and compares.
    Nugatory { word: String },
    /// Changes a set of crossings at once and compares.
    OddChange {
        word: String,
        /// Crossing ids, e.g. `c1 c3` or `1 3`.
        #[arg(required = true)]
        crossings: Vec<CrossingId>,
    },
    /// HOMFLY polynomial through the resolution output.
    Homfly {
        word: String,
        /// Use the direct skein recursion instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Jones polynomial.
    Jones { word: String },
    /// Morton–Franks–Williams braid index lower bound.
    Mfw { word: String },
    /// Certifies braid index 3 for a 3-braid closure.
    Certify3 { word: String },
    /// Both sides of the flype σ1^a σ2^b σ1^c σ2^ε.
    #[command(allow_negative_numbers = true)]
    FlypeTest { a: i32, b: i32, c: i32, epsilon: i32 },
    /// Both sides of the exchange u σ_{n-1} v σ_{n-1}^-1.
    ExchangeTest {
        u: String,
        v: String,
        /// Strand count n; defaults to one more than the blocks use.
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Exchange pairs whose resolution outputs differ.
    ExchangeSearch {
        #[arg(long, default_value_t = 4)]
        strands: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Runs the acceptance criteria.
    Selftest {
        #[arg(long)]
        quick: bool,
    },
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, json: impl Serialize, ok: bool) -> Outcome {
        Outcome { text: text.into(), json: serde_json::to_value(json).expect("plain data"), ok }
    }
}

fn word(s: &str) -> Result<BraidWord, String> {
    s.parse().map_err(|e| format!("invalid word {s:?}: {e}"))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let printed = if cli.json {
                serde_json::to_string_pretty(&o.json).expect("plain data")
            } else {
                o.text.trim_end().to_string()
            };
            let _ = writeln!(out, "{printed}");
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Resolve { word: w, basepoint } => {
            let w = word(&w)?;
            match basepoint.as_deref() {
                None => {
                    let v = resolve(&w);
                    Ok(Outcome::new(v.to_string(), &v, true))
                }
                Some("all") => {
                    let report = compare_basepoints(&w);
                    let mut text: String = report.outputs.iter().map(|(s, v)| format!("{s}: {v}\n")).collect();
                    text.push_str(if report.consistent { "consistent" } else { "inconsistent" });
                    // a report, not a verdict: only the canonical rule computes basis coordinates
                    Ok(Outcome::new(text, &report, true))
                }
                Some(s) => {
                    let s: usize = s.parse().map_err(|_| format!("basepoint must be a strand position or `all`, got {s:?}"))?;
                    if !(1..=w.strands()).contains(&s) {
                        return Err(format!("basepoint {s} outside 1..={}", w.strands()));
                    }
                    let v = resolve_with(&w, BasepointRule::StartAt(s));
                    Ok(Outcome::new(v.to_string(), &v, true))
                }
            }
        }
        Command::Labels { word: w } => {
            let labels = label_only(&word(&w)?);
            Ok(Outcome::new(labels.to_string(), &labels, true))
        }
        Command::Tree { word: w } => {
            let tree = resolution_tree(&word(&w)?);
            Ok(Outcome::new(tree.render(), &tree, true))
        }
        Command::Parity { word: w } => {
            let r = parity_consistency(&word(&w)?).map_err(|e| e.to_string())?;
            let status = if r.consistent { "ok" } else { "mismatch" };
            let text = format!("k={} p={} n={} {status}", r.k, r.positive_bad, r.negative_bad);
            Ok(Outcome::new(text, &r, r.consistent))
        }
        Command::Nugatory { word: w } => {
            let w = word(&w)?;
            let report = nugatory_scan(&w);
            let certificate = (w.strands() == 3).then(|| certify_braid_index_3(&w).map_err(|e| e.to_string())).transpose()?;
            let mut text = format!("{}: {}\n", report.word, report.output);
            for e in &report.entries {
                text.push_str(&format!(
                    "{} {} (k {:+}) {}: {}\n",
                    e.crossing, e.verdict, e.exponent_delta, e.changed_word, e.changed_output
                ));
            }
            text.push_str(&format!(
                "braid index 3: {}",
                certificate.map_or("not a 3-braid".to_string(), |c| c.to_string())
            ));
            let ok = certificate != Some(Certificate::Certified) || report.all_different();
            Ok(Outcome::new(text, json!({ "scan": report, "certificate": certificate }), ok))
        }
        Command::OddChange { word: w, crossings } => {
            let w = word(&w)?;
            let r = odd_change_check(&w, &crossings).map_err(|e| e.to_string())?;
            let text = format!(
                "changed word: {}\noriginal: {}\nchanged: {}\n{} (k {:+})",
                r.changed_word, r.original, r.changed, r.verdict, r.exponent_delta
            );
            let ok = crossings.len() % 2 == 0 || r.verdict == Verdict::Different;
            Ok(Outcome::new(text, &r, ok))
        }
        Command::Homfly { word: w, oracle } => {
            let w = word(&w)?;
            let h = if oracle { homfly_oracle(&w) } else { to_homfly(&resolve(&w)) };
            Ok(Outcome::new(h.to_string(), &h, true))
        }
        Command::Jones { word: w } => {
            let j = jones(&homfly_oracle(&word(&w)?)).map_err(|e| e.to_string())?;
            Ok(Outcome::new(j.to_string(), &j, true))
        }
        Command::Mfw { word: w } => {
            let h = homfly_oracle(&word(&w)?);
            let bound = mfw_lower_bound(&h).map_err(|e| e.to_string())?;
            Ok(Outcome::new(bound.to_string(), json!({ "bound": bound, "homfly": h }), true))
        }
        Command::Certify3 { word: w } => {
            let w = word(&w)?;
            let c = certify_braid_index_3(&w).map_err(|e| e.to_string())?;
            let bound = mfw_lower_bound(&homfly_oracle(&w)).map_err(|e| e.to_string())?;
            Ok(Outcome::new(format!("{c} (mfw bound {bound})"), json!({ "certificate": c, "bound": bound }), true))
        }
        Command::FlypeTest { a, b, c, epsilon } => {
            let epsilon = Sign::from_i32(epsilon).ok_or_else(|| format!("epsilon must be 1 or -1, got {epsilon}"))?;
            let f = FlypeInstance { a, b, c, epsilon };
            pair_outcome(flype_pair(&f), json!({ "instance": f }), false)
        }
        Command::ExchangeTest { u, v, strands } => {
            let (u, v) = (word(&u)?, word(&v)?);
            let n = strands.unwrap_or(u.strands().max(v.strands()) + 1);
            let e = ExchangeInstance::new(&u, &v);
            let pair = exchange_pair(&e, n).map_err(|e| e.to_string())?;
            pair_outcome(pair, json!({ "instance": e, "strands": n }), n > 3)
        }
        Command::ExchangeSearch { strands, max_len } => {
            let report = search_exchange_divergence(strands, max_len).map_err(|e| e.to_string())?;
            let knots = report.divergences.iter().filter(|d| d.is_knot).count();
            let mut text = format!(
                "strands={} max_len={} instances={} divergences={} knots={knots}\n",
                report.strands,
                report.max_block_len,
                report.instances,
                report.divergences.len()
            );
            for d in &report.divergences {
                text.push_str(&format!(
                    "{} | {} | {} | {}\n",
                    d.left,
                    d.right,
                    if d.is_knot { "knot" } else { "link" },
                    if d.same_link { "same homfly" } else { "HOMFLY MISMATCH" }
                ));
            }
            let ok = report.divergences.iter().all(|d| d.same_link);
            Ok(Outcome::new(text, &report, ok))
        }
        Command::Selftest { quick } => {
            let cfg = if quick { Config::quick() } else { Config::default() };
            let results = acceptance::run_all(&cfg);
            let text: String = results.iter().map(|r| format!("{r}\n")).collect();
            let ok = results.iter().all(|r| r.passed);
            Ok(Outcome::new(text, &results, ok))
        }
    }
}

/// Both sides of a template; outputs must agree unless `may_diverge`, and
/// the HOMFLY oracle must always agree.
fn pair_outcome((left, right): (BraidWord, BraidWord), mut meta: Value, may_diverge: bool) -> Result<Outcome, String> {
    let (lo, ro) = (resolve(&left), resolve(&right));
    let verdict = if lo == ro { Verdict::Equal } else { Verdict::Different };
    let same_link = homfly_oracle(&left) == homfly_oracle(&right);
    let text = format!(
        "{left}: {lo}\n{right}: {ro}\n{verdict}{}",
        if same_link { "" } else { " (HOMFLY MISMATCH)" }
    );
    let ok = same_link && (may_diverge || verdict == Verdict::Equal);
    let extra = json!({
        "left": left, "right": right, "left_output": lo, "right_output": ro,
        "verdict": verdict, "same_link": same_link,
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut meta, extra) {
        m.extend(e);
    }
    Ok(Outcome::new(text, meta, ok))
}
