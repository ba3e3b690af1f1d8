//! Command-line front end for the `achow` binary.
//!
//! Exit codes: 0 when everything evaluated and every check passed, 1 when a
//! check failed (an inadmissible curve, a disagreeing regulator branch, a
//! failing verdict), 2 on syntax, parameter or evaluation errors.

use std::collections::HashSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::boundary::{boundary, check_admissible};
use crate::cycle::catalog::CATALOG;
use crate::cycle::{CycleSum, ParamCurve};
use crate::dsl;
use crate::error::Error;
use crate::regulator::{r2, r2_breakdown};
use crate::tensor::g_map;
use crate::verify::{self, Options};

#[derive(Parser, Debug)]
#[command(name = "achow", version, about = "Exact computations with additive higher Chow 1-cycles")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check every curve of EXPR for admissibility.
    Admissible { expr: String },
    /// Print the boundary 0-cycle of EXPR.
    Boundary { expr: String },
    /// Print R2(EXPR).
    Regulator {
        expr: String,
        /// Also evaluate the second branch where both modulus conditions hold.
        #[arg(long)]
        crosscheck: bool,
        /// Print the local contribution of every point over x = 0.
        #[arg(long)]
        per_point: bool,
    },
    /// Print g(dEXPR) in Q (x) Q^x.
    Tensor { expr: String },
    /// Run registered checks (all by default).
    Verify {
        #[arg(long = "check", value_name = "ID")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// List the named cycles of the expression language.
    Catalog,
}

/// Outcome of a command before it is written out.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(&cli.cmd) {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json"))
            } else {
                write!(out, "{}", report.text)
            };
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({"error": e.to_string()}));
            }
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: &Cmd) -> Result<Report, Error> {
    match cmd {
        Cmd::Admissible { expr } => admissible(&dsl::eval_str(expr)?),
        Cmd::Boundary { expr } => {
            let d = boundary(&dsl::eval_str(expr)?)?;
            Ok(Report::ok(format!("{d}\n"), d.to_json()))
        }
        Cmd::Regulator { expr, crosscheck, per_point } => {
            regulator(&dsl::eval_str(expr)?, *crosscheck, *per_point)
        }
        Cmd::Tensor { expr } => {
            let t = g_map(&boundary(&dsl::eval_str(expr)?)?);
            Ok(Report::ok(format!("{t}\n"), t.to_json()))
        }
        Cmd::Verify { checks, samples, seed } => {
            let opts = Options { samples: *samples, seed: *seed, ..Options::default() };
            let verdicts = verify::run(checks, &opts)?;
            Ok(Report {
                text: verify::render_text(&verdicts),
                json: verify::to_json(&verdicts),
                ok: verdicts.iter().all(|v| v.passed()),
            })
        }
        Cmd::Catalog => Ok(catalog()),
    }
}

fn admissible(z: &CycleSum) -> Result<Report, Error> {
    let mut seen: HashSet<&ParamCurve> = HashSet::new();
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for curve in z.curves() {
        if !seen.insert(curve) {
            continue;
        }
        let report = check_admissible(curve)?;
        ok &= report.is_admissible();
        let verdict = if report.is_admissible() { "admissible" } else { "NOT admissible" };
        text.push_str(&format!("{curve}: {verdict}\n"));
        for v in &report.violations {
            text.push_str(&format!("    violation: {v}\n"));
        }
        for w in &report.warnings {
            text.push_str(&format!("    warning: {w}\n"));
        }
        let mut j = report.to_json();
        j["curve"] = Value::String(curve.to_string());
        items.push(j);
    }
    if seen.is_empty() {
        text.push_str("0 (empty cycle)\n");
    }
    Ok(Report { text, json: json!({"admissible": ok, "curves": items}), ok })
}

fn regulator(z: &CycleSum, crosscheck: bool, per_point: bool) -> Result<Report, Error> {
    let value = r2(z)?;
    let mut text = format!("{value}\n");
    let mut json = json!({"value": value.to_string()});
    let mut ok = true;
    if crosscheck || per_point {
        let parts = r2_breakdown(z, crosscheck)?;
        for part in &parts {
            for pv in &part.points {
                ok &= pv.branches_agree();
                if per_point || !pv.branches_agree() {
                    let alt = match &pv.alternative {
                        Some(a) if a == &pv.value => format!(" (other branch agrees: {a})"),
                        Some(a) => format!(" (other branch DISAGREES: {a})"),
                        None => String::new(),
                    };
                    text.push_str(&format!(
                        "  term {} weight {}: t = {} via {}: {}{alt}\n",
                        part.term, part.weight, pv.point, pv.branch, pv.value
                    ));
                }
            }
        }
        json["terms"] = Value::Array(parts.iter().map(|p| p.to_json()).collect());
        json["branches_agree"] = Value::Bool(ok);
    }
    Ok(Report { text, json, ok })
}

fn catalog() -> Report {
    let mut text = String::new();
    for e in CATALOG {
        text.push_str(&format!("{}\n    {}\n    claim: {}\n", e.syntax, e.definition, e.anchor));
    }
    let json = Value::Array(
        CATALOG
            .iter()
            .map(|e| json!({"name": e.name, "syntax": e.syntax, "definition": e.definition, "paper_anchor": e.anchor}))
            .collect(),
    );
    Report::ok(text, json)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("achow").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn regulator_of_gamma3() {
        assert_eq!(call(&["regulator", "Gamma3"]), (0, "7/24\n".into(), String::new()));
    }

    #[test]
    fn boundary_of_gamma_bar1() {
        assert_eq!(call(&["boundary", "GammaBar1"]).1, "+1·(1, 2)\n");
    }

    #[test]
    fn syntax_error_exits_2() {
        let (code, _, err) = call(&["boundary", "Gamma1 +"]);
        assert_eq!(code, 2);
        assert!(err.contains("syntax error at byte 8"), "{err}");
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn failing_verdict_exits_1() {
        let (code, out, _) = call(&["verify", "--check", "V6"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("V6 fail"));
    }
}
