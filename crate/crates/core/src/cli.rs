//! Command-line front end. `run` takes the argument list and output sinks so
//! the whole interface is testable in-process; the binary only forwards
//! `std::env::args` and the exit code.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::decide::{decide, match_euclidean_family, Criterion};
use crate::enumerate::{
    all_candidates_n3_genus, euclidean_candidates, hyperbolic_triangular_census_up_to, positive_chi_candidates,
    triangular_candidates, CENSUS_MAX_DEGREE,
};
use crate::euler::{
    geometry_class, induced_orbifold_cover, orbifold_euler_characteristic, validate_candidate, validate_orbifold_cover,
};
use crate::model::{parse_candidate, CandidateCover, Decision, ModelError, RawCandidate, Verdict};
use crate::oracle::{
    count_transitive, count_tuples, exhaustive_decide, find_witness, ExhaustiveVerdict, OracleError, PermutationWitness,
    SearchBudget, SearchMode, SearchOutcome,
};
use crate::quadform::{congruence_equivalence, density, prime_support, represent, Constraint, FormId};
use crate::witness::affine::{construct_witness, torus_witness, verify_torus_witness, verify_witness, WitnessError};
use crate::witness::monodromy::euclidean_permutation_witness;

pub const EXIT_OK: i32 = 0;
pub const EXIT_EXCEPTIONAL: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

const EXIT_HELP: &str = "\
Exit codes:
  0   success (for decide and oracle: realizable)
  1   exceptional: decide verdict, oracle proves no tuple, witness criterion fails,
      or a selfcheck suite failed
  2   undecided, or the oracle search ran out of budget
  64  usage error
  65  candidate or orbifold text does not parse or fails validation
  70  internal inconsistency (no family matches, or decide and oracle disagree)

Candidates are written as DEGREE: (PARTITION)(PARTITION)..., for example
\"5: (2,2,1)(4,1)(4,1)\", with an optional \"g=G\" prefix for the base genus.";

#[derive(Debug, Parser)]
#[command(name = "hurwitz", version, about = "Realizability of branched covers of the sphere", after_help = EXIT_HELP)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps (defaults to all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Node budget for the permutation search.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Seed for the randomized search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl OracleArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget::nodes(self.budget).with_seed(self.seed)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleMode {
    Search,
    Exhaustive,
    Count,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QuadOp {
    Represent,
    Density,
    Primes,
    Congruence,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a candidate against the Riemann-Hurwitz conditions.
    Validate { candidate: String },
    /// Print the induced orbifold cover and its covering instructions.
    Induce { candidate: String },
    /// Geometry of the induced source and target, with the Euclidean family if any.
    Classify { candidate: String },
    /// Decide realizability from the geometry of the induced cover.
    Decide {
        candidate: String,
        /// Cross-check the verdict with the permutation oracle.
        #[arg(long)]
        with_oracle: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Build and verify an explicit Euclidean certificate.
    Witness {
        candidate: String,
        /// Also print the permutation tuple read off the certificate.
        #[arg(long)]
        tuple: bool,
    },
    /// Search for or count permutation tuples directly.
    Oracle {
        candidate: String,
        #[arg(long, value_enum, default_value = "search")]
        mode: OracleMode,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// List candidates.
    #[command(group = clap::ArgGroup::new("kind").required(true))]
    Enum {
        /// Degree (exact for --triangular and --n3, an upper bound otherwise).
        #[arg(long)]
        degree: Option<u32>,
        /// Triples inducing covers between triangular orbifolds.
        #[arg(long, group = "kind")]
        triangular: bool,
        /// Candidates with positive orbifold Euler characteristic of the target.
        #[arg(long, group = "kind")]
        positive_chi: bool,
        /// Candidates between Euclidean orbifolds.
        #[arg(long, group = "kind")]
        euclidean: bool,
        /// Covers between hyperbolic triangular orbifolds (degree defaults to the proven bound).
        #[arg(long, group = "kind")]
        census: bool,
        /// All three-point candidates of the given degree.
        #[arg(long, group = "kind")]
        n3: bool,
        /// Genus of the covering surface for --n3.
        #[arg(long, default_value_t = 0)]
        cover_genus: u32,
    },
    /// Representability by x^2+y^2, x^2+xy+y^2 or x^2+3xy+3y^2.
    Quadform {
        #[arg(long)]
        form: FormId,
        #[arg(long, value_enum)]
        op: QuadOp,
        /// Integer to represent (represent).
        #[arg(long)]
        target: Option<u64>,
        /// Side conditions joined by '+': different_parity, not_both_even, incongruent_mod_3.
        #[arg(long, default_value = "none")]
        constraint: Constraint,
        /// Upper end of the sweep (density, primes, congruence).
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
        #[arg(long, default_value_t = 1)]
        residue: u64,
        #[arg(long, default_value_t = 4)]
        modulus: u64,
    },
    /// Reproduce the degree-8 tables.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        table: u8,
    },
    /// Run the invariant suites.
    Selfcheck {
        /// Smaller ranges, a few seconds in total.
        #[arg(long)]
        quick: bool,
    },
}

/// Failure that maps to an exit code with a message on the error stream.
struct Failure {
    code: i32,
    message: String,
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        Failure { code: EXIT_PARSE, message: e.to_string() }
    }
}

type Outcome = Result<i32, Failure>;

fn internal(msg: impl ToString) -> Failure {
    Failure { code: EXIT_INTERNAL, message: msg.to_string() }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    if let Some(n) = cli.jobs {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let mut text = String::new();
    let result = execute(&cli, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut String) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { candidate } => cmd_validate(candidate, json, out),
        Command::Induce { candidate } => cmd_induce(candidate, json, out),
        Command::Classify { candidate } => cmd_classify(candidate, json, out),
        Command::Decide { candidate, with_oracle, oracle } => {
            cmd_decide(candidate, with_oracle.then(|| oracle.budget()), json, out)
        }
        Command::Witness { candidate, tuple } => cmd_witness(candidate, *tuple, json, out),
        Command::Oracle { candidate, mode, oracle } => cmd_oracle(candidate, *mode, oracle.budget(), json, out),
        Command::Enum { degree, triangular, positive_chi, euclidean, census, n3, cover_genus } => {
            let kind = if *triangular {
                EnumKind::Triangular
            } else if *positive_chi {
                EnumKind::PositiveChi
            } else if *euclidean {
                EnumKind::Euclidean
            } else if *census {
                EnumKind::Census
            } else {
                debug_assert!(*n3);
                EnumKind::N3(*cover_genus)
            };
            cmd_enum(kind, *degree, json, out)
        }
        Command::Quadform { form, op, target, constraint, limit, residue, modulus } => {
            cmd_quadform(*form, *op, *target, *constraint, *limit, *residue, *modulus, json, out)
        }
        Command::Tables { table } => {
            out.push_str(&crate::tables::table(*table).expect("range checked by clap"));
            Ok(EXIT_OK)
        }
        Command::Selfcheck { quick } => cmd_selfcheck(*quick, json, out),
    }
}

fn emit_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("values serialize"));
    out.push('\n');
}

fn evidence_json(d: &Decision) -> Value {
    let map: Map<String, Value> = d.evidence.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    Value::Object(map)
}

/// The stable record shared by every candidate command.
fn record(c: &str, d: Option<&Decision>, oracle: Value) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("candidate".into(), json!(c));
    m.insert("verdict".into(), d.map_or(Value::Null, |d| json!(d.verdict.to_string())));
    m.insert("reason".into(), d.map_or(Value::Null, |d| json!(d.reason.code())));
    m.insert("evidence".into(), d.map_or(json!({}), evidence_json));
    m.insert("oracle".into(), oracle);
    m
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Realizable => EXIT_OK,
        Verdict::Exceptional => EXIT_EXCEPTIONAL,
        Verdict::Undecided => EXIT_UNDECIDED,
    }
}

fn cmd_validate(text: &str, json: bool, out: &mut String) -> Outcome {
    let raw = RawCandidate::parse(text)?;
    let report = validate_candidate(&raw);
    let canonical = CandidateCover::from_raw(raw).map(|c| c.to_string()).ok();
    if json {
        let mut m = record(canonical.as_deref().unwrap_or(text), None, Value::Null);
        m.insert("report".into(), json!(report));
        emit_json(out, &Value::Object(m));
    } else {
        if let Some(c) = &canonical {
            out.push_str(&format!("candidate {c}\n"));
        }
        out.push_str(&report.to_string());
    }
    Ok(if report.ok { EXIT_OK } else { EXIT_PARSE })
}

fn cmd_induce(text: &str, json: bool, out: &mut String) -> Outcome {
    let c = parse_candidate(text)?;
    let oc = induced_orbifold_cover(&c);
    let report = validate_orbifold_cover(&oc);
    if json {
        let mut m = record(&c.to_string(), None, Value::Null);
        m.insert("cover".into(), json!(oc));
        m.insert("report".into(), json!(report));
        emit_json(out, &Value::Object(m));
    } else {
        out.push_str(&format!("{oc}\n"));
        for ins in &oc.instructions {
            out.push_str(&format!("  {ins}\n"));
        }
        out.push_str(&report.to_string());
    }
    Ok(if report.ok { EXIT_OK } else { EXIT_INTERNAL })
}

fn cmd_classify(text: &str, json: bool, out: &mut String) -> Outcome {
    let c = parse_candidate(text)?;
    let oc = induced_orbifold_cover(&c);
    let family = match_euclidean_family(&c).ok();
    let side = |o: &crate::model::Orbifold| {
        json!({"orbifold": o.to_string(), "geometry": geometry_class(o).letter().to_string(),
               "chi": orbifold_euler_characteristic(o).to_string()})
    };
    if json {
        let mut m = record(&c.to_string(), None, Value::Null);
        m.insert("source".into(), side(&oc.source));
        m.insert("target".into(), side(&oc.target));
        m.insert("family".into(), json!(family));
        emit_json(out, &Value::Object(m));
    } else {
        for (label, o) in [("source", &oc.source), ("target", &oc.target)] {
            let chi = orbifold_euler_characteristic(o);
            out.push_str(&format!("{label} {o} {} chi={chi}\n", geometry_class(o).letter()));
        }
        if let Some(f) = family {
            out.push_str(&format!("{f} ({})\n", f.template().label()));
        }
    }
    Ok(EXIT_OK)
}

/// Oracle verdict from the randomized search: a found tuple proves
/// realizability, a completed restart proves the opposite.
fn oracle_verdict(c: &CandidateCover, budget: &SearchBudget) -> (Option<Verdict>, Option<PermutationWitness>) {
    match find_witness(c, budget) {
        Ok(SearchOutcome::Found(w)) => (Some(Verdict::Realizable), Some(w)),
        Ok(SearchOutcome::KnownRealizable) => (Some(Verdict::Realizable), None),
        Ok(SearchOutcome::NotFound) => (Some(Verdict::Exceptional), None),
        Err(OracleError::BudgetExceeded { .. }) => (None, None),
    }
}

fn cmd_decide(text: &str, oracle: Option<SearchBudget>, json: bool, out: &mut String) -> Outcome {
    let c = parse_candidate(text)?;
    let d = decide(&c).map_err(internal)?;
    let mut code = verdict_code(d.verdict);
    let mut oracle_json = Value::Null;
    let mut oracle_line = None;
    if let Some(budget) = oracle {
        let (ov, w) = oracle_verdict(&c, &budget);
        let label = ov.map_or("BUDGET_EXCEEDED".to_string(), |v| v.to_string());
        let agrees = match (d.verdict, ov) {
            (Verdict::Undecided, _) | (_, None) => None,
            (v, Some(o)) => Some(v == o),
        };
        oracle_json = json!({
            "verdict": label,
            "agrees": agrees,
            "witness": w.as_ref().map(|w| w.perms.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
            "seed": budget.seed,
            "budget": budget.max_nodes,
        });
        let mut line = format!("oracle {label}");
        match agrees {
            Some(true) => line.push_str(" agrees"),
            Some(false) => {
                line.push_str(" DISAGREES");
                code = EXIT_INTERNAL;
            }
            None => {}
        }
        if d.verdict == Verdict::Undecided {
            if let Some(v) = ov {
                code = verdict_code(v);
            }
        }
        oracle_line = Some((line, w));
    }
    if json {
        emit_json(out, &Value::Object(record(&c.to_string(), Some(&d), oracle_json)));
    } else {
        out.push_str(&format!("{d}\n"));
        if let Some((line, w)) = oracle_line {
            out.push_str(&format!("{line}\n"));
            if let Some(w) = w {
                out.push_str(&format!("{w}\n"));
            }
        }
    }
    Ok(code)
}

fn cmd_witness(text: &str, tuple: bool, json: bool, out: &mut String) -> Outcome {
    let c = parse_candidate(text)?;
    let d = decide(&c).ok();
    let mut m = record(&c.to_string(), d.as_ref(), Value::Null);
    let mut lines = Vec::new();
    let code = match construct_witness(&c) {
        Ok(Some(w)) => {
            let report = verify_witness(&c, &w).map_err(internal)?;
            lines.push(w.to_string());
            for img in w.images().map_err(internal)? {
                lines.push(format!("  {img}"));
            }
            lines.push(report.to_string().trim_end().to_string());
            m.insert("witness".into(), json!(w));
            m.insert("report".into(), json!(report));
            if report.ok {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }
        }
        Ok(None) => {
            let crit = match_euclidean_family(&c).map(|f| f.template().criterion).unwrap_or(Criterion::Never);
            let why = format!("none: {} fails for d = {}", crit.describe(), c.degree());
            lines.push(why.clone());
            m.insert("witness".into(), Value::Null);
            m.insert("why".into(), json!(why));
            EXIT_EXCEPTIONAL
        }
        Err(WitnessError::TorusSource(_)) => {
            let w = torus_witness(&c).map_err(internal)?;
            let report = verify_torus_witness(&c, &w);
            lines.push(w.to_string());
            lines.push(report.to_string().trim_end().to_string());
            m.insert("witness".into(), json!(w));
            m.insert("report".into(), json!(report));
            if report.ok {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }
        }
        Err(e) => {
            let why = format!("none: {e}");
            lines.push(why.clone());
            m.insert("witness".into(), Value::Null);
            m.insert("why".into(), json!(why));
            EXIT_UNDECIDED
        }
    };
    if tuple && code == EXIT_OK {
        match euclidean_permutation_witness(&c) {
            Ok(Some(w)) => {
                lines.push("tuple".into());
                lines.extend(w.perms.iter().map(|p| format!("  {p}")));
                m.insert("tuple".into(), json!(w.perms));
            }
            Ok(None) => {}
            Err(e) => {
                lines.push(format!("tuple unavailable: {e}"));
                m.insert("tuple".into(), Value::Null);
            }
        }
    }
    if json {
        emit_json(out, &Value::Object(m));
    } else {
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    Ok(code)
}

fn perms_json(w: &PermutationWitness) -> Value {
    json!(w.perms.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn cmd_oracle(text: &str, mode: OracleMode, budget: SearchBudget, json: bool, out: &mut String) -> Outcome {
    let c = parse_candidate(text)?;
    let (label, witness, extra, code): (String, Option<PermutationWitness>, Map<String, Value>, i32) = match mode {
        OracleMode::Search => {
            let (v, w) = oracle_verdict(&c, &budget);
            let label = v.map_or("BUDGET_EXCEEDED".to_string(), |v| v.to_string());
            (label, w, Map::new(), v.map_or(EXIT_UNDECIDED, verdict_code))
        }
        OracleMode::Exhaustive => {
            let v = exhaustive_decide(&c, &budget.with_mode(SearchMode::Backtracking));
            let code = match v {
                ExhaustiveVerdict::Realizable(_) | ExhaustiveVerdict::KnownRealizable => EXIT_OK,
                ExhaustiveVerdict::Exceptional => EXIT_EXCEPTIONAL,
                ExhaustiveVerdict::BudgetExceeded => EXIT_UNDECIDED,
            };
            let w = match &v {
                ExhaustiveVerdict::Realizable(w) => Some(w.clone()),
                _ => None,
            };
            (v.to_string(), w, Map::new(), code)
        }
        OracleMode::Count => {
            let all = count_tuples(c.partitions(), c.degree());
            let transitive = count_transitive(c.partitions(), c.degree());
            let positive = transitive > 0.into();
            let mut m = Map::new();
            m.insert("tuples".into(), json!(all.to_string()));
            m.insert("transitive".into(), json!(transitive.to_string()));
            let label = if positive { "REALIZABLE" } else { "EXCEPTIONAL" };
            (label.to_string(), None, m, if positive { EXIT_OK } else { EXIT_EXCEPTIONAL })
        }
    };
    let mode_name = format!("{mode:?}").to_lowercase();
    if json {
        let mut o = extra.clone();
        o.insert("mode".into(), json!(mode_name));
        o.insert("verdict".into(), json!(label));
        o.insert("witness".into(), witness.as_ref().map_or(Value::Null, perms_json));
        o.insert("seed".into(), json!(budget.seed));
        o.insert("budget".into(), json!(budget.max_nodes));
        let d = decide(&c).ok();
        emit_json(out, &Value::Object(record(&c.to_string(), d.as_ref(), Value::Object(o))));
    } else {
        out.push_str(&format!("{label}\n"));
        for (k, v) in &extra {
            out.push_str(&format!("{k} {}\n", v.as_str().unwrap_or_default()));
        }
        if let Some(w) = witness {
            out.push_str(&format!("{w}\n"));
        }
    }
    Ok(code)
}

enum EnumKind {
    Triangular,
    PositiveChi,
    Euclidean,
    Census,
    N3(u32),
}

fn cmd_enum(kind: EnumKind, degree: Option<u32>, json: bool, out: &mut String) -> Outcome {
    let need = || degree.ok_or_else(|| Failure { code: EXIT_USAGE, message: "--degree is required".into() });
    let list = match kind {
        EnumKind::Triangular => triangular_candidates(need()?),
        EnumKind::PositiveChi => positive_chi_candidates(need()?),
        EnumKind::Euclidean => euclidean_candidates(need()?),
        EnumKind::Census => hyperbolic_triangular_census_up_to(degree.unwrap_or(CENSUS_MAX_DEGREE)),
        EnumKind::N3(g) => all_candidates_n3_genus(need()?, g),
    };
    if json {
        let items: Vec<Value> = list
            .iter()
            .map(|c| Value::Object(record(&c.to_string(), decide(c).ok().as_ref(), Value::Null)))
            .collect();
        emit_json(out, &Value::Array(items));
    } else {
        for c in &list {
            out.push_str(&format!("{c}\n"));
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_quadform(
    form: FormId,
    op: QuadOp,
    target: Option<u64>,
    constraint: Constraint,
    limit: u64,
    residue: u64,
    modulus: u64,
    json: bool,
    out: &mut String,
) -> Outcome {
    let usage = |m: &str| Failure { code: EXIT_USAGE, message: m.into() };
    let value = match op {
        QuadOp::Represent => {
            let t = target.ok_or_else(|| usage("--target is required for represent"))?;
            let rep = represent(form, t, constraint);
            if !json {
                out.push_str(&rep.map_or("none\n".into(), |(x, y)| format!("x={x} y={y}\n")));
            }
            json!({"form": form.name(), "target": t, "constraint": constraint.to_string(),
                   "representation": rep.map(|(x, y)| json!({"x": x, "y": y}))})
        }
        QuadOp::Density => {
            if limit == 0 {
                return Err(usage("--limit must be positive"));
            }
            let d = density(form, limit);
            if !json {
                out.push_str(&format!("{d}\n"));
            }
            json!({"form": form.name(), "limit": limit, "count": d.count, "density": d.to_string()})
        }
        QuadOp::Primes | QuadOp::Congruence => {
            if modulus == 0 {
                return Err(usage("--modulus must be positive"));
            }
            let bad = match op {
                QuadOp::Primes => prime_support(form, residue, modulus, limit),
                _ => congruence_equivalence(form, constraint, residue, modulus, limit.max(1)),
            };
            if !json {
                if bad.is_empty() {
                    out.push_str("none\n");
                }
                for b in &bad {
                    out.push_str(&format!("{b}\n"));
                }
            }
            json!({"form": form.name(), "constraint": constraint.to_string(), "residue": residue,
                   "modulus": modulus, "limit": limit, "counterexamples": bad})
        }
    };
    if json {
        emit_json(out, &value);
    }
    Ok(EXIT_OK)
}

fn cmd_selfcheck(quick: bool, json: bool, out: &mut String) -> Outcome {
    let results = crate::selfcheck::run_all(quick);
    let ok = results.iter().all(|r| r.passed);
    if json {
        let items: Vec<Value> = results
            .iter()
            .map(|r| json!({"suite": r.name, "passed": r.passed, "detail": r.detail,
                            "seconds": r.elapsed.as_secs_f64()}))
            .collect();
        emit_json(out, &json!({"passed": ok, "suites": items}));
    } else {
        for r in &results {
            let status = if r.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{status} {:<22} {:>8.3}s  {}\n", r.name, r.elapsed.as_secs_f64(), r.detail));
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_EXCEPTIONAL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hurwitz").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn decide_examples() {
        assert_eq!(call(&["decide", "5: (2,2,1)(4,1)(4,1)"]), (0, "REALIZABLE EUCL_C1F1_SUM2SQ x=1 y=2\n".into(), String::new()));
        let (code, out, _) = call(&["decide", "8: (5,1,1,1)(4,4)(2,2,2,2)"]);
        assert_eq!((code, out.as_str()), (1, "EXCEPTIONAL HYP_ROW_2\n"));
    }

    #[test]
    fn exit_codes_for_bad_input() {
        assert_eq!(call(&["decide", "5: (2,2,1)(4,1"]).0, EXIT_PARSE);
        assert_eq!(call(&["decide", "5: (2,2)(4,1)(4,1)"]).0, EXIT_PARSE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["tables", "--table", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["enum", "--triangular"]).0, EXIT_USAGE);
        assert_eq!(call(&["enum", "--degree", "8"]).0, EXIT_USAGE);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Exit codes") && out.contains("65"));
    }

    #[test]
    fn enum_triangular_matches_table() {
        let (code, out, _) = call(&["enum", "--degree", "8", "--triangular"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn json_record_has_stable_fields() {
        let (_, out, _) = call(&["--json", "decide", "5: (2,2,1)(4,1)(4,1)", "--with-oracle"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        for key in ["candidate", "verdict", "reason", "evidence", "oracle"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["evidence"]["x"], 1);
        assert_eq!(v["oracle"]["agrees"], true);
    }

    #[test]
    fn oracle_modes() {
        let row2 = "8: (5,1,1,1)(4,4)(2,2,2,2)";
        assert_eq!(call(&["oracle", row2, "--mode", "exhaustive"]).0, EXIT_EXCEPTIONAL);
        let (code, out, _) = call(&["oracle", row2, "--mode", "count"]);
        assert_eq!(code, EXIT_EXCEPTIONAL);
        assert!(out.contains("transitive 0"));
        assert_eq!(call(&["oracle", "5: (2,2,1)(4,1)(4,1)"]).0, EXIT_OK);
    }

    #[test]
    fn witness_and_quadform() {
        let (code, out, _) = call(&["witness", "5: (2,2,1)(4,1)(4,1)", "--tuple"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("ok = true") && out.contains("tuple"));
        let (code, out, _) = call(&["witness", "21: (2,2,2,2,2,2,2,2,2,2,1)(4,4,4,4,4,1)(4,4,4,4,4,1)"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("none"));
        assert_eq!(call(&["quadform", "--form", "X2_Y2", "--op", "represent", "--target", "5"]).1, "x=1 y=2\n");
        assert_eq!(call(&["quadform", "--form", "X2_Y2", "--op", "density", "--limit", "10"]).1, "7/10\n");
        let primes = call(&["quadform", "--form", "X2_Y2", "--op", "primes", "--residue", "3", "--limit", "20"]).1;
        assert_eq!(primes, "3\n7\n11\n19\n");
    }
}
