use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use mincone::classify::{congruence_class_count, delta, realizability_scan, DimensionReport};
use mincone::clifford::{direct_sum, system_invariants, verify_system, CliffordSystem, SystemInvariants};
use mincone::cones::{
    cartan_cubic, clifford_cone, clifford_polynomial, determinant_cone, fkm_quartic, hsiang_cubic, quadric_cone,
    reducible_example, ConeInput, ConeSpec, Family,
};
use mincone::diffgeom::{tau_invariant, verify_eigenfunction};
use mincone::selftest::{self, Options};
use mincone::text::format_scalar;

#[derive(Parser)]
#[command(name = "mincone", version, about = "Construct and verify algebraic minimal cones")]
struct Cli {
    /// Emit a JSON object instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a cone: header line, then the polynomial.
    Construct {
        #[command(subcommand)]
        family: Construct,
    },
    /// Check whether a polynomial is an eigenfunction of the mean curvature operator.
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Invariants of a Clifford system or of a cone.
    Invariants {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Admissible pairs and congruence classes for one dimension.
    Classify {
        #[arg(long)]
        n: u64,
    },
    /// List the non-realizable dimensions in a range.
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Reproduce a table.
    Table {
        #[command(subcommand)]
        table: Table,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Also check the d = 8 Cartan cubic within this many seconds.
        #[arg(long)]
        budget_seconds: Option<u64>,
    },
}

#[derive(Args)]
struct CliffordArgs {
    #[arg(long)]
    q: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    kplus: Option<usize>,
    #[arg(long)]
    kminus: Option<usize>,
}

#[derive(Subcommand)]
enum Construct {
    /// Cubic cone of a Clifford system, irreducible or a direct sum.
    Clifford(CliffordArgs),
    /// Quadratic cone (q-1)|u|² - (p-1)|v|² on R^(p+q).
    Quadric {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Determinant of a generic m×m matrix.
    Det {
        #[arg(long)]
        m: usize,
    },
    /// Cartan isoparametric cubic over the division algebra of dimension d.
    Cartan {
        #[arg(long)]
        d: usize,
    },
    /// Hsiang's cubic in nine variables.
    Hsiang,
    /// Non-radial product x6·(2x1² + 2x2² - x3² - x4² - x5²).
    Reducible,
    /// Quartic |y|⁴ - 2·Σ(yᵀA_i y)² of a Clifford system.
    Fkm(CliffordArgs),
}

#[derive(Subcommand)]
enum Table {
    /// Congruence class counts c(n) for 4 <= n <= max-n.
    Congruence {
        #[arg(long)]
        max_n: u64,
    },
}

/// A failed command: exit status 1 for mathematical failures, 2 for usage errors.
struct Failure {
    code: u8,
    output: Option<String>,
    message: Option<String>,
}

fn usage(msg: impl ToString) -> Failure {
    Failure { code: 2, output: None, message: Some(msg.to_string()) }
}

fn math_failure(output: String, msg: impl ToString) -> Failure {
    Failure { code: 1, output: Some(output), message: Some(msg.to_string()) }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| usage(format!("--input {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn lines(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn to_json(v: Value) -> String {
    format!("{v}\n")
}

/// `(k₊, k₋)` defaulting to all-positive summands.
fn sum_split(a: &CliffordArgs) -> Result<(usize, usize), Failure> {
    if a.q == 0 {
        return Err(usage("--q must be at least 1"));
    }
    let h = delta(a.q as u64);
    if h > a.m as u64 || a.m as u64 % h != 0 {
        return Err(usage(format!("--m {} is not a multiple of δ({}) = {h}", a.m, a.q)));
    }
    let k = a.m / h as usize;
    match (a.kplus, a.kminus) {
        (None, None) => Ok((k, 0)),
        (Some(p), None) => Ok((p, k.saturating_sub(p))),
        (None, Some(n)) => Ok((k.saturating_sub(n), n)),
        (Some(p), Some(n)) => Ok((p, n)),
    }
}

fn construct(family: &Construct) -> Result<ConeSpec, Failure> {
    let spec = match family {
        Construct::Clifford(a) => {
            let (kp, km) = sum_split(a)?;
            clifford_cone(a.q, a.m, kp, km)
        }
        Construct::Fkm(a) => {
            let (kp, km) = sum_split(a)?;
            let s = direct_sum(a.q, kp, km).map_err(usage)?;
            if s.m != a.m {
                return Err(usage(format!("--kplus + --kminus must equal m/δ(q) = {}", a.m / delta(a.q as u64) as usize)));
            }
            fkm_quartic(&s)
        }
        Construct::Quadric { p, q } => quadric_cone(*p, *q),
        Construct::Det { m } => determinant_cone(*m),
        Construct::Cartan { d } => cartan_cubic(*d),
        Construct::Hsiang => Ok(hsiang_cubic()),
        Construct::Reducible => Ok(reducible_example()),
    };
    spec.map_err(usage)
}

fn cone_json(spec: &ConeSpec) -> Value {
    let params: Map<String, Value> = spec.family.params().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "family": spec.family.tag(),
        "n": spec.n,
        "params": params,
        "polynomial": spec.polynomial.to_string(),
    })
}

fn report_value(key: &str, v: &str) -> Value {
    match (key, v) {
        (_, "true") => Value::Bool(true),
        (_, "false") => Value::Bool(false),
        (_, "none" | "undefined") => Value::Null,
        ("elapsed_ms", v) => v.parse::<u64>().map_or_else(|_| json!(v), |n| json!(n)),
        (_, v) => json!(v),
    }
}

fn verify(input: &Option<PathBuf>, as_json: bool) -> Result<String, Failure> {
    let text = read_input(input)?;
    let cone: ConeInput = text.parse().map_err(usage)?;
    let report = verify_eigenfunction(&cone.polynomial);
    let fields = report.fields();
    let out = if as_json {
        to_json(Value::Object(fields.iter().map(|(k, v)| (k.to_string(), report_value(k, v))).collect()))
    } else {
        lines(&fields)
    };
    if report.is_eigenfunction {
        Ok(out)
    } else {
        Err(math_failure(out, "not an eigenfunction"))
    }
}

fn invariant_pairs(inv: &SystemInvariants) -> Vec<(&'static str, String)> {
    vec![
        ("q", inv.q.to_string()),
        ("m", inv.m.to_string()),
        ("omega_trace_abs", inv.omega_trace_abs.as_ref().map_or_else(|| "undefined".into(), format_scalar)),
    ]
}

fn render(pairs: &[(&str, String)], as_json: bool) -> String {
    if as_json {
        to_json(Value::Object(pairs.iter().map(|(k, v)| (k.to_string(), report_value(k, v))).collect()))
    } else {
        lines(pairs)
    }
}

fn invariants(input: &Option<PathBuf>, as_json: bool) -> Result<String, Failure> {
    let text = read_input(input)?;
    if text.trim_start().starts_with("clifford") {
        let s: CliffordSystem = text.parse().map_err(usage)?;
        let check = verify_system(&s);
        if let Some(f) = check.failure {
            let pairs = [("valid", "false".to_string()), ("failure", f.clone())];
            return Err(math_failure(render(&pairs, as_json), format!("not a Clifford system: {f}")));
        }
        let mut pairs = vec![("valid", "true".to_string())];
        pairs.extend(invariant_pairs(&system_invariants(&s)));
        return Ok(render(&pairs, as_json));
    }
    let cone: ConeInput = text.parse().map_err(usage)?;
    let f = &cone.polynomial;
    let mut pairs = vec![
        ("n", f.nvars().to_string()),
        ("degree", f.degree().map_or_else(|| "undefined".into(), |d| d.to_string())),
        ("tau", tau_invariant(f).as_ref().map_or_else(|| "undefined".into(), format_scalar)),
    ];
    if let Some(Family::Clifford { q, k_plus, k_minus, .. } | Family::Fkm { q, k_plus, k_minus, .. }) = cone.family {
        let s = direct_sum(q, k_plus, k_minus).map_err(usage)?;
        let expected = match cone.family {
            Some(Family::Fkm { .. }) => fkm_quartic(&s).map_err(usage)?.polynomial,
            _ => clifford_polynomial(&s),
        };
        if &expected != f {
            return Err(math_failure(render(&pairs, as_json), "polynomial does not match the header's system"));
        }
        pairs.extend(invariant_pairs(&system_invariants(&s)));
    }
    Ok(render(&pairs, as_json))
}

fn dimension_json(r: &DimensionReport) -> Value {
    json!({
        "n": r.n,
        "realizable": r.realizable,
        "class_count": r.class_count,
        "pairs": r.admissible_pairs.iter().map(|(q, m)| json!({"q": q, "m": m})).collect::<Vec<_>>(),
        "classes": r.class_list.iter().map(|c| json!({"q": c.q, "m": c.m, "kplus": c.k_plus, "kminus": c.k_minus})).collect::<Vec<_>>(),
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let as_json = cli.json;
    match &cli.command {
        Command::Construct { family } => {
            let spec = construct(family)?;
            Ok(if as_json { to_json(cone_json(&spec)) } else { spec.to_string() })
        }
        Command::Verify { input } => verify(input, as_json),
        Command::Invariants { input } => invariants(input, as_json),
        Command::Classify { n } => {
            let r = congruence_class_count(*n).map_err(usage)?;
            Ok(if as_json { to_json(dimension_json(&r)) } else { r.to_string() })
        }
        Command::Scan { from, to } => {
            let found = realizability_scan(*from, *to).map_err(usage)?;
            if as_json {
                return Ok(to_json(json!({"from": from, "to": to, "count": found.len(), "non_realizable": found})));
            }
            let mut out = lines(&[("from", from.to_string()), ("to", to.to_string()), ("count", found.len().to_string())]);
            for n in found {
                out.push_str(&format!("non_realizable: {n}\n"));
            }
            Ok(out)
        }
        Command::Table { table: Table::Congruence { max_n } } => {
            if *max_n < 4 {
                return Err(usage("--max-n must be at least 4"));
            }
            let mut rows = Vec::new();
            for n in 4..=*max_n {
                rows.push((n, congruence_class_count(n).map_err(usage)?.class_count));
            }
            if as_json {
                let rows: Vec<Value> = rows.iter().map(|(n, c)| json!({"n": n, "classes": c})).collect();
                return Ok(to_json(json!({ "table": "congruence", "rows": rows })));
            }
            Ok(rows.iter().map(|(n, c)| format!("c({n}): {c}\n")).collect())
        }
        Command::Selftest { budget_seconds } => {
            let opts = Options { budget: budget_seconds.map(Duration::from_secs), ..Options::default() };
            let results = selftest::run_all(&opts);
            let failed = results.iter().filter(|r| !r.passed).count();
            let out = if as_json {
                let rows: Vec<Value> = results
                    .iter()
                    .map(|r| json!({"id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail, "elapsed_ms": r.elapsed.as_millis() as u64}))
                    .collect();
                to_json(json!({"criteria": rows, "passed": results.len() - failed, "failed": failed}))
            } else {
                let mut out: String = results.iter().map(|r| format!("{r}\n")).collect();
                out.push_str(&format!("selftest: {} passed, {failed} failed\n", results.len() - failed));
                out
            };
            if failed == 0 {
                Ok(out)
            } else {
                Err(math_failure(out, format!("{failed} criteria failed")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.output {
                print!("{out}");
            }
            if let Some(msg) = f.message {
                eprintln!("error: {msg}");
            }
            ExitCode::from(f.code)
        }
    }
}
