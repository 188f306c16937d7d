//! Text-in, JSON-out front end over `qolab-core`.
//!
//! [`run_command`] executes one analysis and returns its report as a JSON
//! value; a negative verdict is still a successful run. Only usage, parse
//! and internal failures come back as `Err`.

use std::io::BufRead;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use qolab_core::adic::approximate_root;
use qolab_core::charseq::{semigroup_generators, CharSeq, SemigroupMode};
use qolab_core::embedding::{
    default_fuel, embedding_decide, qo_property_decide, verify_chain, AutomorphismChain,
    ElementaryMap, EmbeddingVerdict, QoPropertyOutcome, QoStep,
};
use qolab_core::gnp::GnpData;
use qolab_core::irreducibility::{
    family_invariance, irreducibility_test, is_quasi_ordinary, Convention as CoreConvention,
    IrreducibilityReport, Verdict,
};
use qolab_core::roots::{conjugate_product_check, expand_root};
use qolab_core::text::{default_names, format_laurent, format_plain, parse_laurent, parse_poly};
use qolab_core::{BigInt, Error, ExponentVec, LaurentPoly, YPoly, Q};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "qolab", version, about = "Quasi-ordinary polynomial analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Quasi-ordinarity of the discriminant.
    QoCheck(Opts),
    /// Irreducibility criterion with approximate roots and sequences.
    Irreducible(Opts),
    /// Semigroup generators of an irreducible polynomial.
    Semigroup {
        #[command(flatten)]
        opts: Opts,
        /// Semigroup of App_{d_k} instead of the full one.
        #[arg(long)]
        stage: Option<usize>,
    },
    /// Approximate roots App_d for every divisor d of the degree.
    ApproxRoots(Opts),
    /// Truncated fractional power series root.
    ExpandRoot(Opts),
    /// Whether the hypersurface is a coordinate, with a witness chain.
    Embedding(Opts),
    /// Newton polygon decision for a polynomial in X, Y.
    QoProperty(Opts),
    /// Semigroup and approximate roots of F - lambda.
    Family {
        #[command(flatten)]
        opts: Opts,
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambdas: Vec<String>,
    },
    /// Newline-delimited commands from stdin, one JSON report per line.
    Batch,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Number of coefficient variables x1..xe.
    #[arg(long = "vars", default_value_t = 1)]
    pub vars: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Local)]
    pub convention: ConventionArg,
    /// Root expansion precision (total t-degree).
    #[arg(long, default_value_t = 12)]
    pub precision: i64,
    /// Step budget for qo-property: a number or `auto`.
    #[arg(long, default_value = "auto")]
    pub fuel: String,
    /// Print the JSON report instead of the text summary.
    #[arg(long)]
    pub json: bool,
    pub polynomial: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConventionArg {
    Local,
    #[value(alias = "meromorphic")]
    Mero,
}

impl From<ConventionArg> for CoreConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Local => CoreConvention::Local,
            ConventionArg::Mero => CoreConvention::Meromorphic,
        }
    }
}

/// Failures that are not verdicts.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Analysis(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{}", m),
            CliError::Analysis(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Analysis(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn plane_names() -> Vec<String> {
    vec!["X".into(), "Y".into()]
}

/// Polynomials over `X, Y` print in plain diagonal order, everything else
/// with `y` leading.
fn poly_text(p: &LaurentPoly<Q>, names: &[String]) -> String {
    if names.last().map(String::as_str) == Some("y") {
        format_laurent(p, names)
    } else {
        format_plain(p, names)
    }
}

fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn exp(v: &ExponentVec) -> Value {
    json!(v.coords())
}

fn exps(vs: &[ExponentVec]) -> Value {
    Value::Array(vs.iter().map(exp).collect())
}

fn text(f: &YPoly<Q>) -> String {
    format_laurent(&f.to_laurent(), &default_names(f.nvars()))
}

fn charseq_json(cs: &CharSeq) -> Value {
    json!({
        "n": cs.n,
        "m": exps(&cs.m),
        "r": exps(&cs.r),
        "D": cs.big_d.iter().map(int).collect::<Vec<_>>(),
        "d": cs.d,
        "e": cs.e_seq,
    })
}

fn gnp_json(g: &GnpData) -> Value {
    json!({
        "degree": g.d,
        "base_order": exp(&g.base_order),
        "classification": g.classification.as_str(),
        "points": g.points.iter().map(|p| json!({
            "k": p.k,
            "order": p.order.as_ref().map(exp),
            "base_part": exp(&p.base_part),
        })).collect::<Vec<_>>(),
    })
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Irreducible => json!({"verdict": "irreducible"}),
        Verdict::Reducible { stage, reason } => json!({
            "verdict": "reducible",
            "stage": stage,
            "reason": {"code": reason.code(), "detail": reason.to_string()},
        }),
    }
}

fn irreducibility_json(rep: &IrreducibilityReport<Q>) -> Value {
    let mut out = verdict_json(&rep.verdict);
    let o = out.as_object_mut().unwrap();
    o.insert("depressed".into(), json!(text(&rep.depressed)));
    o.insert(
        "shift".into(),
        json!(format_laurent(
            &rep.shift,
            &default_names(rep.shift.nvars())
        )),
    );
    o.insert("n".into(), json!(rep.n));
    o.insert("d".into(), json!(rep.d));
    o.insert(
        "D".into(),
        Value::Array(rep.big_d.iter().map(int).collect()),
    );
    o.insert("r".into(), exps(&rep.r));
    o.insert("m".into(), exps(&rep.m));
    o.insert(
        "approx_roots".into(),
        Value::Array(rep.approx_roots.iter().map(|g| json!(text(g))).collect()),
    );
    o.insert(
        "gnp".into(),
        Value::Array(rep.gnp_evidence.iter().map(gnp_json).collect()),
    );
    o.insert(
        "charseq".into(),
        rep.charseq.as_ref().map_or(Value::Null, charseq_json),
    );
    out
}

/// JSON form of one elementary map over `names`.
pub fn map_json(m: &ElementaryMap<Q>, names: &[String]) -> Value {
    match m {
        ElementaryMap::TranslateVar { var, image } => json!({
            "translate_var": names[*var],
            "by": poly_text(image, names),
        }),
        ElementaryMap::Scale { var, factor } => json!({
            "scale_var": names[*var],
            "factor": factor.to_string(),
        }),
        ElementaryMap::Permute { perm } => json!({
            "permute": perm.iter().map(|&i| names[i].clone()).collect::<Vec<_>>(),
        }),
    }
}

pub fn chain_json(c: &AutomorphismChain<Q>, names: &[String]) -> Value {
    Value::Array(c.maps.iter().map(|m| map_json(m, names)).collect())
}

fn var_index(v: &Value, names: &[String]) -> CliResult<usize> {
    let s = v
        .as_str()
        .ok_or_else(|| CliError::Usage("variable name expected".into()))?;
    names
        .iter()
        .position(|n| n == s)
        .ok_or_else(|| CliError::Analysis(Error::UndeclaredVariable(s.into())))
}

/// Reads a chain back from its JSON form.
pub fn chain_from_json(v: &Value, names: &[String]) -> CliResult<AutomorphismChain<Q>> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::Usage("chain must be an array".into()))?;
    let mut maps = Vec::new();
    for item in items {
        let m = if let Some(var) = item.get("translate_var") {
            let by = item["by"]
                .as_str()
                .ok_or_else(|| CliError::Usage("`by` must be a string".into()))?;
            ElementaryMap::translate(var_index(var, names)?, parse_laurent(by, names)?)?
        } else if let Some(var) = item.get("scale_var") {
            let factor = item["factor"].as_str().unwrap_or_default();
            let c = parse_laurent::<Q>(factor, names)?
                .as_constant()
                .ok_or_else(|| CliError::Usage("scale factor must be a constant".into()))?;
            ElementaryMap::Scale {
                var: var_index(var, names)?,
                factor: c,
            }
        } else if let Some(p) = item.get("permute").and_then(Value::as_array) {
            let perm = p
                .iter()
                .map(|x| var_index(x, names))
                .collect::<CliResult<Vec<_>>>()?;
            ElementaryMap::Permute { perm }
        } else {
            return Err(CliError::Usage(format!("unknown map {}", item)));
        };
        maps.push(m);
    }
    Ok(AutomorphismChain::from_maps(names.len(), maps)?)
}

fn path_json(path: &[QoStep]) -> Value {
    Value::Array(
        path.iter()
            .map(|s| json!({"branch": s.branch, "r": s.r}))
            .collect(),
    )
}

fn report(command: &str, o: &Opts, analyzed: Option<&YPoly<Q>>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert(
        "convention".into(),
        json!(CoreConvention::from(o.convention).as_str()),
    );
    m.insert("vars".into(), json!(o.vars));
    m.insert("input".into(), json!(o.polynomial));
    if let Some(f) = analyzed {
        m.insert("analyzed".into(), json!(text(f)));
    }
    m
}

fn merge(mut base: serde_json::Map<String, Value>, extra: Value) -> Value {
    if let Value::Object(e) = extra {
        base.extend(e);
    }
    Value::Object(base)
}

/// Parses the input and applies the convention: in the meromorphic one the
/// analysis runs on `f(x^{-1}, y)`.
fn load(o: &Opts) -> CliResult<YPoly<Q>> {
    if o.vars == 0 {
        return Err(CliError::Usage("--vars must be at least 1".into()));
    }
    let f: YPoly<Q> = parse_poly(&o.polynomial, o.vars)?;
    Ok(match o.convention {
        ConventionArg::Local => f,
        ConventionArg::Mero => f.mero_involute(),
    })
}

fn irreducibility_or_na(
    f: &YPoly<Q>,
    o: &Opts,
) -> CliResult<Result<IrreducibilityReport<Q>, Value>> {
    match irreducibility_test(f, o.convention.into()) {
        Ok(rep) => Ok(Ok(rep)),
        Err(Error::NotQuasiOrdinary(why)) => Ok(Err(json!({
            "verdict": "not_applicable",
            "reason": {"code": "not_quasi_ordinary", "detail": why},
        }))),
        Err(e) => Err(e.into()),
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn parse_fuel(o: &Opts, d: &LaurentPoly<Q>) -> CliResult<usize> {
    if o.fuel == "auto" {
        return Ok(default_fuel(d));
    }
    o.fuel.parse().map_err(|_| {
        CliError::Usage(format!(
            "--fuel expects a number or `auto`, got `{}`",
            o.fuel
        ))
    })
}

/// Runs one command. `Batch` is handled by [`run_batch`].
pub fn run_command(cmd: &Command) -> CliResult<Value> {
    match cmd {
        Command::QoCheck(o) => {
            let f = load(o)?;
            let v = is_quasi_ordinary(&f)?;
            let names = default_names(o.vars);
            Ok(merge(
                report("qo-check", o, Some(&f)),
                json!({
                    "verdict": if v.is_qo { "quasi_ordinary" } else { "not_quasi_ordinary" },
                    "discriminant": format_laurent(&v.discriminant, &names),
                    "n_exp": v.n_exp.as_ref().map(exp),
                    "offending": v.offending.as_ref().map(exp),
                }),
            ))
        }
        Command::Irreducible(o) => {
            let f = load(o)?;
            let body = match irreducibility_or_na(&f, o)? {
                Ok(rep) => irreducibility_json(&rep),
                Err(na) => na,
            };
            Ok(merge(report("irreducible", o, Some(&f)), body))
        }
        Command::Semigroup { opts: o, stage } => {
            let f = load(o)?;
            let body = match irreducibility_or_na(&f, o)? {
                Err(na) => na,
                Ok(rep) => match (&rep.verdict, &rep.charseq) {
                    (Verdict::Irreducible, Some(cs)) => {
                        let mode = stage.map_or(SemigroupMode::Full, SemigroupMode::ApproxRoot);
                        let negate = o.convention == ConventionArg::Mero;
                        let g = semigroup_generators(cs, mode, negate)?;
                        json!({
                            "verdict": "irreducible",
                            "stage": stage,
                            "generators": exps(&g.generators),
                            "note": g.note,
                            "charseq": charseq_json(cs),
                        })
                    }
                    _ => verdict_json(&rep.verdict),
                },
            };
            Ok(merge(report("semigroup", o, Some(&f)), body))
        }
        Command::ApproxRoots(o) => {
            let f = load(o)?;
            if !f.is_monic() {
                return Err(Error::NotMonic.into());
            }
            let n = f.deg();
            let mut roots = Vec::new();
            for d in divisors(n) {
                let g = approximate_root(&f, d)?;
                let rest = &f - &g.pow(d as u32);
                roots.push(json!({
                    "d": d,
                    "root": text(&g),
                    "remainder_degree": rest.degree(),
                }));
            }
            Ok(merge(
                report("approx-roots", o, Some(&f)),
                json!({"verdict": "computed", "n": n, "roots": roots}),
            ))
        }
        Command::ExpandRoot(o) => {
            let f = load(o)?;
            let root = match expand_root(&f, o.precision) {
                Ok(r) => r,
                Err(Error::NotQuasiOrdinary(why)) => {
                    return Ok(merge(
                        report("expand-root", o, Some(&f)),
                        json!({"verdict": "not_applicable", "reason": {"code": "not_quasi_ordinary", "detail": why}}),
                    ))
                }
                Err(e) => return Err(e.into()),
            };
            let t: Vec<String> = (1..=o.vars).map(|i| format!("t{}", i)).collect();
            let check = conjugate_product_check(&f, &root.param).ok();
            Ok(merge(
                report("expand-root", o, Some(&f)),
                json!({
                    "verdict": "computed",
                    "p": root.param.p,
                    "series": format_laurent(&root.param.series, &t),
                    "precision": if root.param.exact { Value::Null } else { json!(root.param.precision) },
                    "exact": root.param.exact,
                    "m": exps(&root.m),
                    "conjugate_check": check,
                }),
            ))
        }
        Command::Embedding(o) => {
            let f: YPoly<Q> = parse_poly(&o.polynomial, o.vars)?;
            let names = default_names(o.vars);
            let body = match embedding_decide(&f)? {
                EmbeddingVerdict::NotApplicable(why) => {
                    json!({"verdict": "not_applicable", "reason": {"code": "not_applicable", "detail": why}})
                }
                EmbeddingVerdict::NotCoordinate(reason) => json!({
                    "verdict": "not_coordinate",
                    "reason": {"code": reason.code(), "detail": reason.to_string()},
                }),
                EmbeddingVerdict::Coordinate(w) => {
                    let image = verify_chain(&w.chain, &f)?;
                    json!({
                        "verdict": "coordinate",
                        "k": w.k.map(|k| names[k].clone()),
                        "chain": chain_json(&w.chain, &names),
                        "image": format_laurent(&w.image, &names),
                        "verified_image": text(&image),
                        "charseq": w.charseq.as_ref().map_or(Value::Null, charseq_json),
                        "cascade": w.cascade.iter().map(|s| json!({
                            "stage": s.stage,
                            "e": s.e,
                            "middle": s.middle.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "c": s.c.to_string(),
                        })).collect::<Vec<_>>(),
                        "unit_witness": w.unit_witness,
                    })
                }
            };
            let mut r = report("embedding", o, None);
            r.insert(
                "convention".into(),
                json!(CoreConvention::Meromorphic.as_str()),
            );
            Ok(merge(r, body))
        }
        Command::QoProperty(o) => {
            let names = plane_names();
            let d: LaurentPoly<Q> = parse_laurent(&o.polynomial, &names)?;
            let fuel = parse_fuel(o, &d)?;
            let body = match qo_property_decide(&d, fuel)? {
                QoPropertyOutcome::HasQo {
                    change,
                    substitution,
                    image,
                    n_exp,
                    path,
                } => json!({
                    "verdict": "has_qo",
                    "change": change.components()?.iter().map(|c| format_plain(c, &names)).collect::<Vec<_>>(),
                    "substitution": chain_json(&substitution, &names),
                    "image": format_plain(&image, &names),
                    "n_exp": exp(&n_exp),
                    "path": path_json(&path),
                }),
                QoPropertyOutcome::NoQo { branch, r, path } => json!({
                    "verdict": "no_qo",
                    "branch": branch,
                    "r": r,
                    "path": path_json(&path),
                }),
                QoPropertyOutcome::FuelExhausted { path } => json!({
                    "verdict": "fuel_exhausted",
                    "path": path_json(&path),
                }),
            };
            let mut r = report("qo-property", o, None);
            r.insert("vars".into(), json!(2));
            r.insert("fuel".into(), json!(fuel));
            Ok(merge(r, body))
        }
        Command::Family { opts: o, lambdas } => {
            let f = load(o)?;
            let lambdas: Vec<Q> = if lambdas.is_empty() {
                [1, -1, 2]
                    .iter()
                    .map(|&k| Q::from_integer(k.into()))
                    .collect()
            } else {
                lambdas
                    .iter()
                    .map(|s| {
                        parse_laurent::<Q>(s, &[])?.as_constant().ok_or_else(|| {
                            CliError::Usage(format!("lambda `{}` is not a constant", s))
                        })
                    })
                    .collect::<CliResult<_>>()?
            };
            let body = match irreducibility_or_na(&f, o)? {
                Err(na) => na,
                Ok(base) if !base.is_irreducible() => {
                    let mut v = verdict_json(&base.verdict);
                    v["verdict"] = json!("base_reducible");
                    v
                }
                Ok(_) => {
                    let fam = family_invariance(&f, &lambdas, o.convention.into())?;
                    let all = fam.members.iter().all(|m| m.holds());
                    json!({
                        "verdict": if all { "invariant" } else { "not_invariant" },
                        "base": irreducibility_json(&fam.base),
                        "members": fam.members.iter().map(|m| {
                            let mut v = irreducibility_json(&m.report);
                            let o = v.as_object_mut().unwrap();
                            o.insert("lambda".into(), json!(m.lambda.to_string()));
                            o.insert("same_semigroup".into(), json!(m.same_semigroup));
                            o.insert("same_approx_roots".into(), json!(m.same_approx_roots));
                            o.insert("holds".into(), json!(m.holds()));
                            v
                        }).collect::<Vec<_>>(),
                    })
                }
            };
            Ok(merge(report("family", o, Some(&f)), body))
        }
        Command::Batch => Err(CliError::Usage("batch cannot be nested".into())),
    }
}

/// Whether the command asked for JSON output.
pub fn wants_json(cmd: &Command) -> bool {
    match cmd {
        Command::QoCheck(o)
        | Command::Irreducible(o)
        | Command::ApproxRoots(o)
        | Command::ExpandRoot(o)
        | Command::Embedding(o)
        | Command::QoProperty(o) => o.json,
        Command::Semigroup { opts, .. } | Command::Family { opts, .. } => opts.json,
        Command::Batch => true,
    }
}

/// Short human-readable rendering: one `key: value` line per field.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(m) = v {
        for (k, val) in m {
            if val.is_null() {
                continue;
            }
            let shown = match val {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{}: {}\n", k, shown));
        }
    }
    out
}

pub fn error_json(e: &CliError) -> Value {
    let kind = match e {
        CliError::Usage(_) => "usage",
        CliError::Analysis(Error::Parse { .. } | Error::UndeclaredVariable(_)) => "parse",
        CliError::Analysis(_) => "analysis",
    };
    json!({"error": {"kind": kind, "message": e.to_string()}})
}

/// Parses one batch line as if it followed `qolab` on the command line.
pub fn parse_line(line: &str) -> CliResult<Command> {
    let words = shlex::split(line).ok_or_else(|| CliError::Usage("unbalanced quotes".into()))?;
    let cli = Cli::try_parse_from(std::iter::once("qolab".to_string()).chain(words))
        .map_err(|e| CliError::Usage(e.to_string().trim().to_string()))?;
    Ok(cli.command)
}

/// Runs newline-delimited commands, writing one compact JSON line each.
/// Returns the number of lines that failed.
pub fn run_batch(input: impl BufRead, mut out: impl std::io::Write) -> std::io::Result<usize> {
    let mut failed = 0;
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let result = parse_line(trimmed).and_then(|cmd| run_command(&cmd));
        let v = result.unwrap_or_else(|e| {
            failed += 1;
            error_json(&e)
        });
        writeln!(out, "{}", v)?;
    }
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_integers_become_strings() {
        assert_eq!(int(&BigInt::from(-12)), json!(-12));
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        assert_eq!(int(&big), json!("36893488147419103228"));
    }

    #[test]
    fn chain_json_roundtrip() {
        let names = default_names(2);
        let c = AutomorphismChain::from_maps(
            3,
            vec![
                ElementaryMap::translate(0, parse_laurent("x1 + y^2 - 3/2*x2", &names).unwrap())
                    .unwrap(),
                ElementaryMap::Scale {
                    var: 2,
                    factor: Q::new(2.into(), 3.into()),
                },
                ElementaryMap::Permute {
                    perm: vec![1, 0, 2],
                },
            ],
        )
        .unwrap();
        let v = chain_json(&c, &names);
        assert_eq!(v[1], json!({"scale_var": "y", "factor": "2/3"}));
        assert_eq!(chain_from_json(&v, &names).unwrap(), c);
    }
}
