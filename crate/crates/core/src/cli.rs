//! Command-line front end.
//!
//! [`run`] parses `argv`, writes the report to `out` and diagnostics to
//! `err`, and returns the process exit code: 0 on success, 1 when a
//! precondition fails, 2 when an internal consistency check fails and 64
//! for usage errors.
//!
//! JSON output has sorted keys. Rationals are strings `"num/den"` (always
//! with a denominator), integers are numbers, and arbitrary-precision reals
//! are objects `{"value", "prec", "err"}`. The text format flattens the
//! same report into `path: value` lines.

use std::io::Write;
use std::str::FromStr;

use astro_float::BigFloat;
use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result, Var};
use crate::numeric::{self, Approx, BigComplex, ComplexApprox};
use crate::series::{LogSeries, RationalSeries};
use crate::{acceptance, gw, mirror_map, picard_fuchs, topology};

pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// The solution tower I_{p,q} and its diagonal series
    Tower,
    /// Applies the Picard-Fuchs operator to every I_{0,q}
    PfCheck,
    /// The mirror map G(Q) and the coordinate changes between Q and q
    MirrorMap,
    /// Genus-one invariants N_1(0..order)
    Gw1,
    /// Genus-zero instanton numbers of the quintic (n = 4)
    Gw0,
    /// Residual of the parity-split identity among the I_{p,p}
    Identity,
    /// Hodge and Betti numbers, Euler characteristics and closed-form constants
    Topology,
    /// kappa_inf and rho_inf with the routes that confirm kappa_inf
    Kappa,
    /// Vanishing orders of eta_k at an ordinary double point
    OdpOrders,
    /// The period I_0(psi) by series and, with --m, by torus quadrature
    Period,
    /// F_1^B(psi) at arbitrary precision
    F1b,
    /// The Γ-value product for p = n + 1
    ChowlaSelberg,
    /// Runs every acceptance criterion
    Selftest,
}

#[derive(Debug, Parser)]
#[command(name = "genus-one", version, about = "Exact genus-one mirror symmetry for projective hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Dimension parameter: degree n+1 hypersurfaces in P^n
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    /// Truncation order D of every series
    #[arg(long, global = true, default_value_t = 10)]
    order: usize,
    /// Precision target in bits for numeric commands
    #[arg(long, global = true, default_value_t = 128)]
    prec: usize,
    /// Complex parameter as "re,im"
    #[arg(long, global = true, default_value = "2,0", allow_hyphen_values = true)]
    psi: String,
    /// Points per dimension for the torus quadrature
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Validated settings of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub order: usize,
    pub prec: usize,
    pub psi: String,
    pub m: Option<usize>,
    pub format: Format,
    pub command: Command,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Result<Self> {
        crate::check_n(cli.n)?;
        if cli.prec < numeric::MIN_PREC {
            return Err(Error::pre(format!("--prec must be at least {}", numeric::MIN_PREC)));
        }
        Ok(Self {
            n: cli.n,
            order: cli.order,
            prec: cli.prec,
            psi: cli.psi,
            m: cli.m,
            format: cli.format,
            command: cli.command,
        })
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    match execute(&config) {
        Ok((report, code)) => {
            let _ = match config.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("JSON value")),
                Format::Text => write!(out, "{}", render_text(&report)),
            };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Builds the report of one command and its exit code.
pub fn execute(config: &RunConfig) -> Result<(Value, i32)> {
    let (n, order) = (config.n, config.order);
    let report = match config.command {
        Command::Tower => tower_report(n, order)?,
        Command::PfCheck => return pf_check_report(n, order),
        Command::MirrorMap => {
            let table = picard_fuchs::build_tower(n, order)?;
            let map = mirror_map::mirror_map(&table)?;
            json!({
                "n": n,
                "order": order,
                "G": series_json(&map.g),
                "q_of_Q": series_json(&map.q_of_big_q),
                "Q_of_q": series_json(&map.big_q_of_q),
            })
        }
        Command::Gw1 => {
            let table = picard_fuchs::build_tower(n, order)?;
            let map = mirror_map::mirror_map(&table)?;
            let report = gw::extract_gw1(&table, &map)?;
            let round_trip = report.round_trip_holds(&map)?;
            if !round_trip {
                return Err(Error::inconsistent("N_1 round trip does not reproduce S(Q)"));
            }
            json!({
                "n": n,
                "order": order,
                "n1_zero": rational_json(&report.n1zero),
                "n1": report.n1.iter().map(rational_json).collect::<Vec<_>>(),
                "s_series": series_json(&report.s_series),
                "round_trip": round_trip,
            })
        }
        Command::Gw0 => {
            let table = picard_fuchs::build_tower(n, order)?;
            let map = mirror_map::mirror_map(&table)?;
            let report = gw::genus0_quintic(&table, &map, order)?;
            json!({
                "order": order,
                "coupling": series_json(&report.coupling),
                "n0": report.n0.iter().map(rational_json).collect::<Vec<_>>(),
                "all_integral": report.all_integral,
            })
        }
        Command::Identity => {
            let table = picard_fuchs::build_tower(n, order)?;
            let mut readings = Map::new();
            for reading in [gw::Reading::Squared, gw::Reading::Literal] {
                let r = gw::identity_residual_with(&table, reading)?;
                readings.insert(
                    reading.name().to_string(),
                    json!({
                        "residual": series_json(&r.residual),
                        "first_nonzero_degree": r.first_nonzero_degree(),
                        "holds": r.holds(),
                    }),
                );
            }
            let parity = match gw::Parity::of(n) {
                gw::Parity::Even => "even",
                gw::Parity::Odd => "odd",
            };
            json!({
                "n": n,
                "order": order,
                "parity": parity,
                "primary_reading": gw::Reading::Squared.name(),
                "readings": Value::Object(readings),
            })
        }
        Command::Topology => topology_json(n)?,
        Command::Kappa => {
            let [closed, via_abc, via_chern] = topology::kappa_routes(n)?;
            let (kappa, rho) = topology::kappa_rho(n)?;
            json!({
                "n": n,
                "kappa_inf": rational_json(&kappa),
                "rho_inf": rational_json(&rho),
                "routes": {
                    "closed_form": rational_json(&closed),
                    "b_minus_a": rational_json(&via_abc),
                    "chern": rational_json(&via_chern),
                },
            })
        }
        Command::OdpOrders => {
            let orders = (0..n)
                .map(|k| Ok(json!({"k": k, "order": topology::eta_order_odp(n, k)?})))
                .collect::<Result<Vec<_>>>()?;
            json!({"n": n, "orders": orders})
        }
        Command::Period => {
            let wp = numeric::working_precision(config.prec);
            let psi = BigComplex::parse(&config.psi, wp)?;
            let series = numeric::period_i0(n, &psi, config.prec)?;
            let mut report = json!({
                "n": n,
                "psi": psi_json(&psi),
                "series": complex_json(&series.value),
                "terms": series.terms,
            });
            if let Some(m) = config.m {
                let q = numeric::torus_quadrature(n, psi.to_c64(), m)?;
                let diff = (q.value - series.value.value.to_c64()).norm();
                report["quadrature"] = json!({
                    "m": m,
                    "re": q.value.re,
                    "im": q.value.im,
                    "err": q.err,
                    "min_modulus": q.min_modulus,
                    "distance_to_series": diff,
                });
            }
            report
        }
        Command::F1b => {
            let wp = numeric::working_precision(config.prec);
            let psi = BigComplex::parse(&config.psi, wp)?;
            let v = numeric::f1b_eval(n, &psi, order, config.prec)?;
            json!({
                "n": n,
                "order": order,
                "psi": psi_json(&psi),
                "value": complex_json(&v.value),
                "t": {"re": v.t.re.to_string(), "im": v.t.im.to_string()},
                "tail_estimate": v.tail.to_string(),
            })
        }
        Command::ChowlaSelberg => {
            let p = n + 1;
            let v = numeric::chowla_selberg_log(p, config.prec)?;
            let reflection = numeric::reflection_check(p, config.prec)?;
            let exponents: Vec<Value> = (1..p)
                .map(|k| json!({"k": k, "exponent": rational_json(&v.data.total_exponent(k))}))
                .collect();
            json!({
                "p": p,
                "chi_Z": int_json(&v.data.chi_z),
                "chi_over_12": rational_json(&v.data.chi_over_12),
                "outer_power": v.data.outer_power,
                "sigma": rational_json(&v.data.sigma),
                "gamma_exponents": exponents,
                "log_value": approx_json(&v.value),
                "reflection": {
                    "passed": reflection.passed,
                    "difference": reflection.diff.to_string(),
                    "tolerance": reflection.tolerance.to_string(),
                },
            })
        }
        Command::Selftest => {
            let outcomes = acceptance::run_all();
            let passed = outcomes.iter().all(|o| o.passed);
            let list: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "name": o.name,
                        "passed": o.passed,
                        "detail": o.detail,
                        "seconds": o.seconds,
                    })
                })
                .collect();
            let code = if passed { 0 } else { 2 };
            return Ok((json!({"criteria": list, "passed": passed}), code));
        }
    };
    Ok((report, 0))
}

fn tower_report(n: usize, order: usize) -> Result<Value> {
    let table = picard_fuchs::build_tower(n, order)?;
    let mut entries = Vec::new();
    for p in 0..n {
        for q in p..n {
            let e = table.entry(p, q).expect("p <= q < n");
            entries.push(json!({"p": p, "q": q, "tdeg": e.tdeg(), "parts": log_series_json(e)}));
        }
    }
    let probe = picard_fuchs::product_probe(&table);
    Ok(json!({
        "n": n,
        "order": order,
        "f": (0..n).map(|q| series_json(table.f_series(q))).collect::<Vec<_>>(),
        "diagonals": table.diagonals().iter().map(series_json).collect::<Vec<_>>(),
        "entries": entries,
        "product_probe": {"holds": probe.holds(), "first_mismatch": probe.first_mismatch},
    }))
}

fn pf_check_report(n: usize, order: usize) -> Result<(Value, i32)> {
    let solutions = picard_fuchs::i_0q(n, order)?;
    let mut checks = Vec::new();
    let mut all_zero = true;
    for (q, x) in solutions.iter().enumerate() {
        let r = picard_fuchs::pf_apply(n, x)?;
        let zero = r.is_zero();
        all_zero &= zero;
        let residual = if zero { json!("0") } else { json!(r.to_string()) };
        checks.push(json!({"q": q, "residual": residual}));
    }
    let report = json!({
        "n": n,
        "order": order,
        "checked_to_degree": order.saturating_sub(1),
        "checks": checks,
        "all_zero": all_zero,
    });
    Ok((report, if all_zero { 0 } else { 2 }))
}

fn topology_json(n: usize) -> Result<Value> {
    let t = topology::topology_report(n)?;
    let m = n - 1;
    let hodge: Vec<Vec<Value>> = (0..=m)
        .map(|p| (0..=m).map(|q| int_json(&t.hodge[&(p, q)])).collect())
        .collect();
    Ok(json!({
        "n": n,
        "hodge": hodge,
        "h11": int_json(&t.hodge[&(1, 1)]),
        "betti": t.betti.iter().map(int_json).collect::<Vec<_>>(),
        "chi_X": int_json(&t.chi_x),
        "chi_Z": int_json(&t.chi_z),
        "int_c_top_minus_1_H": int_json(&t.c_integral),
        "a": rational_json(&t.abc.a),
        "b": rational_json(&t.abc.b),
        "c": rational_json(&t.abc.c),
        "b_matches_displayed_sign": t.abc.b_matches_displayed_sign,
        "kappa_inf": rational_json(&t.kappa_inf),
        "rho_inf": rational_json(&t.rho_inf),
        "sigma": t.sigma.as_ref().map(rational_json),
        "n1_zero": rational_json(&gw::n1_zero(n)?),
    }))
}

/// `"num/den"`, always with an explicit denominator.
pub fn rational_json(r: &BigRational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

/// Inverse of [`rational_json`]; also accepts a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::pre(format!("not a rational \"num/den\": {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => Value::String(v.to_string()),
    }
}

pub fn series_json(s: &RationalSeries) -> Value {
    json!({
        "var": s.var().name(),
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

/// Inverse of [`series_json`] for the variables used by this crate.
pub fn parse_series(v: &Value) -> Result<RationalSeries> {
    let bad = || Error::pre("not a serialized series");
    let var = match v["var"].as_str().ok_or_else(bad)? {
        "Q" => Var::Q,
        "q" => Var::SMALL_Q,
        "w" => Var::W,
        "H" => Var::H,
        _ => return Err(bad()),
    };
    let coeffs = v["coeffs"]
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|c| parse_rational(c.as_str().ok_or_else(bad)?))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(bad());
    }
    Ok(RationalSeries::from_coeffs(var, coeffs))
}

fn log_series_json(x: &LogSeries) -> Value {
    Value::Array(x.parts().iter().map(series_json).collect())
}

pub fn float_json(value: &BigFloat, prec: usize, err: &BigFloat) -> Value {
    json!({"value": value.to_string(), "prec": prec, "err": err.to_string()})
}

pub fn approx_json(a: &Approx) -> Value {
    float_json(&a.value, a.prec, &a.err)
}

pub fn complex_json(a: &ComplexApprox) -> Value {
    json!({
        "re": float_json(&a.value.re, a.prec, &a.err),
        "im": float_json(&a.value.im, a.prec, &a.err),
    })
}

fn psi_json(psi: &BigComplex) -> Value {
    json!({"re": psi.re.to_string(), "im": psi.im.to_string()})
}

fn is_series(map: &Map<String, Value>) -> bool {
    map.len() == 3 && map.contains_key("var") && map.contains_key("order") && map.contains_key("coeffs")
}

/// Flattens a report into `path: value` lines; series print in closed form.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    let join = |key: &str| if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match v {
        Value::Object(map) if is_series(map) => match parse_series(v) {
            Ok(s) => out.push_str(&format!("{path}: {s}\n")),
            Err(_) => out.push_str(&format!("{path}: {v}\n")),
        },
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&join(k), inner, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{path}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), inner, out);
            }
        }
        _ => out.push_str(&format!("{path}: {}\n", scalar_text(v))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("genus-one").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rationals_round_trip() {
        for r in [rat(-25, 12), rat(3, 1), rat(0, 1), rat(7, -9)] {
            let s = rational_json(&r);
            assert_eq!(parse_rational(s.as_str().unwrap()).unwrap(), r);
        }
        assert_eq!(rational_json(&rat(3, 1)), json!("3/1"));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn gw1_json() {
        let (code, out, _) = run_str(&["gw1", "--n", "4", "--order", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["n1_zero"], json!("-25/12"));
        assert_eq!(v["n1"][0], json!("2875/12"));
    }

    #[test]
    fn topology_text_and_json() {
        let (code, out, _) = run_str(&["topology", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("chi_X: -200"));
        assert!(out.contains("h11: 101"));
        let (_, out, _) = run_str(&["topology", "--n", "4", "--format", "json"]);
        assert!(out.contains("\"chi_X\": -200"));
        assert!(out.contains("\"h11\": 101"));
    }

    #[test]
    fn pf_check_text() {
        let (code, out, _) = run_str(&["pf-check", "--n", "5", "--order", "10"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("residual: 0").count(), 5);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["topology", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["topology", "--n", "3"]).0, 1);
        assert_eq!(run_str(&["gw0", "--n", "5", "--order", "2"]).0, 1);
        assert_eq!(run_str(&["period", "--psi", "0.5,0"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
