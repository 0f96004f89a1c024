//! The `dyadic` command line: `decide`, `oracle`, `invariants`, `sweep` and
//! `selftest`. Results go to stdout as JSON, errors to stderr as JSON.
//!
//! Exit codes: `0` decided, `2` invalid input, `3` the deciders (or the
//! oracle) disagree, `4` budget or precision exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bong::GoodBongLattice;
use crate::error::{Error, Result};
use crate::field::{default_precision, DyadicField, FieldElement, FieldSpec};
use crate::lattice::{bong_to_gram, gram_invariants, GramLattice};
use crate::oracle::{oracle_defect, oracle_represents_with_budget, oracle_universal_with_budget, DEFAULT_BUDGET};
use crate::sweep::{run_sweep, three_way, SweepConfig, SweepMode};
use crate::symbols::{quadratic_defect, square_class_reps};
use crate::universality::{decide_universal_lemma, decide_universal_thm, explain, UniversalityVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_RESOURCES: i32 = 4;

/// Valuations up to this size fit the library default precision.
const DEFAULT_ORD_ROOM: u32 = 16;

#[derive(Parser, Debug)]
#[command(name = "dyadic", version, about = "Universality of lattices over dyadic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Field: Q2, Q2sqrt2, Q4, or a JSON field spec.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Working precision N in digits of pi.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Compact single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Theorem,
    Lemma,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide universality of a good BONG lattice.
    Decide {
        /// [FIELD] INPUT, e.g. `Q2 "<1,1,1,1>"`.
        #[arg(required = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Theorem)]
        route: RouteArg,
    },
    /// Brute-force representation or universality by residue enumeration.
    Oracle {
        /// [FIELD] [gram] INPUT, e.g. `Q2 gram "diag(1,2)"`.
        #[arg(required = true)]
        args: Vec<String>,
        /// Decide whether this one element is represented.
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// R_i, alpha_i, norm, scale and determinant class.
    Invariants {
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Compare both deciders with the oracle over a box of lattices.
    Sweep {
        /// Field name or JSON spec (default Q2).
        field_arg: Option<String>,
        #[arg(long, default_value_t = 2)]
        min_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        min_order: i64,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        max_order: i64,
        /// Pin R_1.
        #[arg(long, allow_hyphen_values = true)]
        first_order: Option<i64>,
        /// Draw this many valid lattices at random instead of the whole box.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u128>,
        /// Compare the two deciders only.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Quick internal consistency checks over Q2.
    Selftest,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::PrecisionTooSmall { .. } | Error::PrecisionLoss(_) => {
            EXIT_RESOURCES
        }
        _ => EXIT_INVALID,
    }
}

fn error_json(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string() })
}

/// `Q2`, `Q2sqrt2` (also `Q2(sqrt2)`, `x^2-2`), `Q4`, or a JSON spec.
pub fn parse_field_spec(s: &str) -> Result<FieldSpec> {
    let t = s.trim();
    let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "Q2" => return Ok(FieldSpec::q2()),
        "Q2sqrt2" | "Q2(sqrt2)" | "Q2(√2)" | "x^2-2" => {
            return Ok(FieldSpec::Tower {
                unramified: None,
                eisenstein: Some(vec![vec![-2], vec![0], vec![1]]),
                precision: None,
            })
        }
        "Q4" | "x^2+x+1" => {
            return Ok(FieldSpec::Tower {
                unramified: Some(vec![1, 1, 1]),
                eisenstein: None,
                precision: None,
            })
        }
        _ => {}
    }
    serde_json::from_str(t).map_err(|_| Error::Parse(format!("unknown field {t:?}")))
}

fn looks_like_input(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with('<') || t.starts_with('≺') || t.starts_with('[') || t.starts_with("diag(") || t.starts_with('{')
}

/// An element as written: shorthand text or a JSON encoding.
#[derive(Clone, Debug)]
enum Raw {
    Text(String),
    Json(Value),
}

#[derive(Clone, Debug)]
enum RawInput {
    Bong(Vec<Raw>),
    Gram(Vec<Vec<Raw>>),
}

fn split_list(inner: &str) -> Vec<Raw> {
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Raw::Text(s.to_string()))
        .collect()
}

fn raw_row(v: &Value) -> Result<Vec<Raw>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array".into()))
        .map(|xs| xs.iter().cloned().map(Raw::Json).collect())
}

fn raw_matrix(v: &Value) -> Result<Vec<Vec<Raw>>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("Gram matrix must be an array of rows".into()))?
        .iter()
        .map(raw_row)
        .collect()
}

/// Parses the input text; returns it with a field spec embedded in JSON input.
fn parse_raw(text: &str, gram: bool) -> Result<(RawInput, Option<FieldSpec>)> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("diag(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse("diag(...) is not closed".into()))?;
        let d = split_list(inner);
        let n = d.len();
        let mut g = vec![vec![Raw::Text("0".into()); n]; n];
        for (i, x) in d.into_iter().enumerate() {
            g[i][i] = x;
        }
        return Ok((RawInput::Gram(g), None));
    }
    for (open, close) in [('<', '>'), ('≺', '≻')] {
        if let Some(rest) = t.strip_prefix(open) {
            if gram {
                return Err(Error::Parse("`gram` needs diag(...) or a JSON matrix".into()));
            }
            let inner = rest
                .strip_suffix(close)
                .ok_or_else(|| Error::Parse(format!("{open}...{close} is not closed")))?;
            return Ok((RawInput::Bong(split_list(inner)), None));
        }
    }
    let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad input {t:?}: {e}")))?;
    match &v {
        Value::Array(rows) if rows.first().map_or(false, Value::is_array) => {
            Ok((RawInput::Gram(raw_matrix(&v)?), None))
        }
        Value::Array(_) if !gram => Ok((RawInput::Bong(raw_row(&v)?), None)),
        Value::Object(map) => {
            let spec = match map.get("field") {
                Some(f) => Some(
                    serde_json::from_value::<FieldSpec>(f.clone())
                        .map_err(|e| Error::Parse(format!("bad field spec: {e}")))?,
                ),
                None => None,
            };
            if let Some(b) = map.get("bong") {
                Ok((RawInput::Bong(raw_row(b)?), spec))
            } else if let Some(g) = map.get("gram") {
                Ok((RawInput::Gram(raw_matrix(g)?), spec))
            } else {
                Err(Error::Parse("input object needs \"bong\" or \"gram\"".into()))
            }
        }
        _ => Err(Error::Parse(format!("cannot read {t:?} as a BONG or Gram matrix"))),
    }
}

fn build_element(k: &DyadicField, r: &Raw) -> Result<FieldElement> {
    match r {
        Raw::Text(s) => k.parse_rational(s),
        Raw::Json(v) => k.element_from_json(v),
    }
}

/// A parsed lattice over a field whose precision fits its valuations.
#[derive(Clone, Debug)]
pub enum Input {
    Bong(GoodBongLattice),
    Gram(GramLattice),
}

impl Input {
    pub fn field(&self) -> &DyadicField {
        match self {
            Input::Bong(l) => l.field(),
            Input::Gram(g) => g.field(),
        }
    }

    fn gram(&self) -> Result<GramLattice> {
        match self {
            Input::Bong(l) => bong_to_gram(l),
            Input::Gram(g) => Ok(g.clone()),
        }
    }
}

fn elements(k: &DyadicField, raw: &RawInput) -> Result<Vec<Vec<FieldElement>>> {
    match raw {
        RawInput::Bong(xs) => Ok(vec![xs.iter().map(|x| build_element(k, x)).collect::<Result<_>>()?]),
        RawInput::Gram(rows) => rows
            .iter()
            .map(|row| row.iter().map(|x| build_element(k, x)).collect())
            .collect(),
    }
}

/// Resolves the field and builds the lattice. Unless a precision is given,
/// the field is rebuilt with more digits when the input has valuations
/// beyond the library default.
pub fn resolve_input(
    field_arg: Option<&str>,
    precision: Option<u32>,
    positional: &[String],
) -> Result<Input> {
    let mut rest = positional;
    let mut field_text = field_arg.map(str::to_string);
    if rest.len() > 1 && rest[0] != "gram" && !looks_like_input(&rest[0]) {
        if field_text.is_some() {
            return Err(Error::Parse("field given both as --field and positionally".into()));
        }
        field_text = Some(rest[0].clone());
        rest = &rest[1..];
    }
    let gram = rest.first().map_or(false, |s| s == "gram");
    if gram {
        rest = &rest[1..];
    }
    let [text] = rest else {
        return Err(Error::Parse("expected [FIELD] [gram] INPUT".into()));
    };
    let (raw, embedded) = parse_raw(text, gram)?;
    let spec = match (field_text, embedded) {
        (Some(t), _) => parse_field_spec(&t)?,
        (None, Some(s)) => s,
        (None, None) => FieldSpec::q2(),
    };
    let spec = match precision {
        Some(n) => spec.with_precision(n),
        None => spec,
    };
    let mut k = DyadicField::from_spec(&spec)?;
    let mut xs = elements(&k, &raw)?;
    if precision.is_none() {
        let max_ord = xs.iter().flatten().filter_map(|x| x.ord()).map(|v| v.unsigned_abs()).max();
        if let Some(v) = max_ord.filter(|&v| v > DEFAULT_ORD_ROOM as u64) {
            let n = default_precision(k.e(), v as u32);
            k = DyadicField::from_spec(&spec.with_precision(n))?;
            xs = elements(&k, &raw)?;
        }
    }
    match raw {
        RawInput::Bong(_) => Ok(Input::Bong(GoodBongLattice::new(&k, xs.remove(0))?)),
        RawInput::Gram(_) => Ok(Input::Gram(GramLattice::new(&k, xs)?)),
    }
}

fn verdict_json(v: &UniversalityVerdict) -> Value {
    let mut j = v.to_json();
    j["explanation"] = Value::String(explain(v));
    j
}

fn cmd_decide(field: Option<&str>, precision: Option<u32>, args: &[String], route: RouteArg) -> Result<(Value, i32)> {
    let Input::Bong(l) = resolve_input(field, precision, args)? else {
        return Err(Error::Parse("decide needs a good BONG, not a Gram matrix".into()));
    };
    Ok(match route {
        RouteArg::Theorem => (verdict_json(&decide_universal_thm(&l)), EXIT_OK),
        RouteArg::Lemma => (verdict_json(&decide_universal_lemma(&l)), EXIT_OK),
        RouteArg::Both => {
            let t = decide_universal_thm(&l);
            let m = decide_universal_lemma(&l);
            let agree = t.universal == m.universal;
            let out = json!({
                "universal": t.universal,
                "route": "both",
                "agree": agree,
                "theorem": verdict_json(&t),
                "lemma": verdict_json(&m),
            });
            (out, if agree { EXIT_OK } else { EXIT_DISAGREE })
        }
    })
}

fn cmd_oracle(
    field: Option<&str>,
    precision: Option<u32>,
    args: &[String],
    target: Option<&str>,
    budget: u128,
) -> Result<(Value, i32)> {
    let input = resolve_input(field, precision, args)?;
    let k = input.field().clone();
    let g = input.gram()?;
    let out = match target {
        Some(t) => {
            let b = match t.trim_start().starts_with('{') {
                true => k.element_from_json(
                    &serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad target: {e}")))?,
                )?,
                false => k.parse_rational(t)?,
            };
            let rep = oracle_represents_with_budget(&g, &b, budget)?;
            json!({ "represents": rep, "target": k.element_to_json(&b) })
        }
        None => {
            let r = oracle_universal_with_budget(&g, budget)?;
            let missing: Vec<Value> = r.missing.iter().map(|x| k.element_to_json(x)).collect();
            json!({ "universal": r.universal, "missing": missing })
        }
    };
    Ok((out, EXIT_OK))
}

fn cmd_invariants(field: Option<&str>, precision: Option<u32>, args: &[String]) -> Result<(Value, i32)> {
    let input = resolve_input(field, precision, args)?;
    let k = input.field().clone();
    let g = input.gram()?;
    let inv = gram_invariants(&g)?;
    let sc = k.square_classes()?;
    let mut out = json!({
        "field": k.spec(),
        "norm_ord": inv.norm_ord,
        "scale_ord": inv.scale_ord,
        "det_class": k.element_to_json(sc.rep(inv.det_class)),
        "gram": g.to_json(),
    });
    if let Input::Bong(l) = &input {
        out["bong"] = Value::String(l.display());
        out["m"] = json!(l.rank());
        out["R"] = json!(l.orders());
        out["alpha"] = json!(l.alphas());
    }
    Ok((out, EXIT_OK))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    field: Option<&str>,
    precision: Option<u32>,
    cfg_args: (usize, usize, i64, i64, Option<i64>),
    random: Option<usize>,
    seed: u64,
    budget: u128,
    oracle: bool,
    err: &mut dyn Write,
) -> Result<(Value, i32)> {
    let spec = parse_field_spec(field.unwrap_or("Q2"))?;
    let (min_rank, max_rank, min_order, max_order, first_order) = cfg_args;
    let max_abs = min_order.unsigned_abs().max(max_order.unsigned_abs()) as u32;
    let spec = match precision {
        Some(n) => spec.with_precision(n),
        None if max_abs > DEFAULT_ORD_ROOM => spec.with_precision(default_precision(spec.ramification(), max_abs)),
        None => spec,
    };
    let k = DyadicField::from_spec(&spec)?;
    let mut cfg = SweepConfig::new(&k)?;
    cfg.min_rank = min_rank;
    cfg.max_rank = max_rank;
    cfg.min_order = min_order;
    cfg.max_order = max_order;
    cfg.first_order = first_order;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.oracle = oracle;
    cfg.mode = random.map_or(SweepMode::Exhaustive, |count| SweepMode::Random { count });
    let start = Instant::now();
    let report = run_sweep(&cfg)?;
    let _ = writeln!(err, "sweep finished in {:.3}s", start.elapsed().as_secs_f64());
    let code = if report.mismatches.is_empty() { EXIT_OK } else { EXIT_DISAGREE };
    Ok((serde_json::to_value(&report).expect("reports serialize"), code))
}

fn cmd_selftest() -> Result<(Value, i32)> {
    let k = DyadicField::q2();
    let mut checks = Vec::new();
    let pinned: [(&[&str], bool); 7] = [
        (&["1", "1", "1"], false),
        (&["1", "1", "1", "1"], true),
        (&["1", "2"], false),
        (&["1", "-1/4"], true),
        (&["1", "3/4"], false),
        (&["1", "2", "8", "16"], false),
        (&["1", "2", "2", "4"], true),
    ];
    for (xs, want) in pinned {
        let a = xs.iter().map(|s| k.parse_rational(s)).collect::<Result<Vec<_>>>()?;
        let l = GoodBongLattice::new(&k, a)?;
        let r = three_way(&l, true, DEFAULT_BUDGET)?;
        let ok = r.agrees() && r.theorem.universal == want;
        checks.push(json!({ "name": format!("verdict {}", l.display()), "ok": ok }));
    }
    let mut defect_ok = true;
    for u in square_class_reps(&k, &[0, 1])? {
        defect_ok &= quadratic_defect(&k, &u)? == oracle_defect(&k, &u)?;
    }
    checks.push(json!({ "name": "defect equals oracle on Q2 classes", "ok": defect_ok }));
    let report = run_sweep(&SweepConfig::new(&k)?)?;
    checks.push(json!({
        "name": "Q2 exhaustive sweep, m in 2..=3, R in [-2, 2]",
        "ok": report.mismatches.is_empty(),
        "valid": report.valid,
    }));
    let passed = checks.iter().all(|c| c["ok"] == json!(true));
    Ok((json!({ "passed": passed, "checks": checks }), if passed { EXIT_OK } else { EXIT_DISAGREE }))
}

/// Runs the command line on `args` (program name first), writing to the
/// given streams, and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let field = cli.field.as_deref();
    let precision = cli.precision;
    let result = match &cli.command {
        Command::Decide { args, route } => cmd_decide(field, precision, args, *route),
        Command::Oracle { args, target, budget } => {
            cmd_oracle(field, precision, args, target.as_deref(), budget.unwrap_or(DEFAULT_BUDGET))
        }
        Command::Invariants { args } => cmd_invariants(field, precision, args),
        Command::Sweep {
            field_arg,
            min_rank,
            max_rank,
            min_order,
            max_order,
            first_order,
            random,
            seed,
            budget,
            no_oracle,
        } => {
            if field_arg.is_some() && field.is_some() {
                Err(Error::Parse("field given both as --field and positionally".into()))
            } else {
                cmd_sweep(
                    field_arg.as_deref().or(field),
                    precision,
                    (*min_rank, *max_rank, *min_order, *max_order, *first_order),
                    *random,
                    *seed,
                    budget.unwrap_or(DEFAULT_BUDGET),
                    !no_oracle,
                    err,
                )
            }
        }
        Command::Selftest => cmd_selftest(),
    };
    match result {
        Ok((v, code)) => {
            let text = if cli.json {
                serde_json::to_string(&v)
            } else {
                serde_json::to_string_pretty(&v)
            };
            let _ = writeln!(out, "{}", text.expect("JSON values serialize"));
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(&e));
            exit_code(&e)
        }
    }
}

/// Entry point for the `dyadic` binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
