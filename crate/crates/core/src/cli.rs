//! Command-line surface: `pair`, `verify` and `rect`.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (the full report is still written), 2 for usage and parse errors, 3 when a
//! resource bound is exceeded.

use crate::diagrams::{parse, Diagram};
use crate::error::{Error, Result};
use crate::exact::BivariatePoly;
use crate::multiplicity::{root_lattice_partitions, PositiveRule};
use crate::nilpairs::{
    biexponents, centralizer, classify, grassmann_limit, limit_space, module_limit_check,
    parse_pair, weak_lefschetz_report, Ambient, Grading,
};
use crate::rectangular::{
    centrally_symmetric_so, classify_thm85, decompose_g, is_rectangular_pnpair,
    so_nonrectangular_pair, Algebra, EmbeddingSpec,
};
use crate::suites::{self, MultiplicityCase, SuiteReport, RECT_LIMIT, RECT_MULTIBLOCK_CROSSCHECK};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "nilpair",
    version,
    about = "Exact checks for principal nilpotent pairs"
)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every command.
#[derive(Debug, Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Worker threads for surveys (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Use the alternate ordering when choosing the positive system.
    #[arg(long, global = true)]
    pub alt_positive_system: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build e_λ for one diagram (or a sum "A+B") and report on it.
    Pair {
        /// "3,2,1" (Young), "3,2/1" (skew), "(0,0);(1,0)" (boxes), a leading "-" negates,
        /// "A+B" is a direct sum.
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
        /// Highest weight for `limits` (a partition, e.g. "3").
        #[arg(long)]
        lambda: Option<String>,
        /// Root-lattice weight for `limits` (default 0).
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(value_enum)]
        what: PairView,
    },
    /// Run an invariant suite on one diagram or on all diagrams up to a size.
    Verify {
        /// A single diagram, in the same syntax as `pair --diagram`.
        #[arg(long, conflicts_with = "all", allow_hyphen_values = true)]
        diagram: Option<String>,
        /// Every diagram of the suite's kind with at most this many boxes (dimension bound for
        /// `rectangular`).
        #[arg(long)]
        all: Option<usize>,
        /// Highest weight for `multiplicity` (a partition).
        #[arg(long)]
        lambda: Option<String>,
        /// Restrict `multiplicity` output to this root-lattice weight.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Diagram bound for the character check in `harmonics`.
        #[arg(long, default_value_t = 8)]
        characters: usize,
        #[arg(value_enum)]
        suite: SuiteName,
    },
    /// Rectangular pairs: classification table, a single embedding, or the explicit constructions.
    Rect {
        /// sl, sp or so (with BOUND), or omitted with --spec / --so-pair / --central.
        #[arg(value_enum)]
        algebra: Option<AlgebraArg>,
        /// Upper bound on dim V for the classification table.
        bound: Option<usize>,
        /// A single embedding such as "so:3x1,1x3".
        #[arg(long)]
        spec: Option<String>,
        /// The non-rectangular pair in so(4n+2).
        #[arg(long)]
        so_pair: Option<usize>,
        /// A centrally symmetric diagram with its orthogonal form.
        #[arg(long)]
        central: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairView {
    Build,
    Centralizer,
    Biexponents,
    Classify,
    Lefschetz,
    Limits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Structure,
    Skew,
    Cohomology,
    Multiplicity,
    Harmonics,
    Rectangular,
    Strictness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Sl,
    Sp,
    So,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Sl => Algebra::Sl,
            AlgebraArg::Sp => Algebra::Sp,
            AlgebraArg::So => Algebra::So,
        }
    }
}

/// A command's result: the JSON payload, a human rendering and the verdict.
#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub table: String,
    pub passed: bool,
}

impl Outcome {
    fn info(json: Value) -> Self {
        let table = render_value(&json);
        Outcome {
            json,
            table,
            passed: true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json value serializes");
                s.push('\n');
                s
            }
            Format::Table => self.table.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("bad {what} entry {x:?} in {s:?}")))
        })
        .collect()
}

fn rule(cfg: &RunConfig) -> PositiveRule {
    if cfg.alt_positive_system {
        PositiveRule::Alternate
    } else {
        PositiveRule::Standard
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Pair {
            diagram,
            lambda,
            mu,
            what,
        } => cmd_pair(diagram, *what, lambda.as_deref(), mu.as_deref()),
        Command::Verify {
            diagram,
            all,
            lambda,
            mu,
            characters,
            suite,
        } => cmd_verify(
            &cli.run,
            diagram.as_deref(),
            *all,
            *suite,
            lambda.as_deref(),
            mu.as_deref(),
            *characters,
        ),
        Command::Rect {
            algebra,
            bound,
            spec,
            so_pair,
            central,
        } => cmd_rect(
            algebra.map(Algebra::from),
            *bound,
            spec.as_deref(),
            *so_pair,
            central.as_deref(),
        ),
    }
}

pub fn cmd_pair(
    spec: &str,
    what: PairView,
    lambda: Option<&str>,
    mu: Option<&str>,
) -> Result<Outcome> {
    let (pair, h) = parse_pair(spec)?;
    let json = match what {
        PairView::Build => pair.to_json(Some(&h)),
        PairView::Centralizer => {
            let z = centralizer(&pair, Ambient::Sl);
            let graded = Grading::new(&h)
                .and_then(|g| g.bigrade(&z, "centralizer"))
                .ok();
            json!({
                "diagram": spec,
                "dim": z.dim(),
                "basis": z.basis_matrices(pair.n),
                "bigraded_dims": graded,
            })
        }
        PairView::Biexponents => json!({ "diagram": spec, "biexponents": biexponents(&pair, &h)? }),
        PairView::Classify => {
            serde_json::to_value(classify(&pair, Some(&h))).expect("classification serializes")
        }
        PairView::Lefschetz => {
            let r = weak_lefschetz_report(&pair, &h)?;
            let passed = r.all_pass;
            let json = serde_json::to_value(&r).expect("report serializes");
            let table = format!("weak Lefschetz: {}\n", if passed { "pass" } else { "FAIL" })
                + &render_value(&json);
            return Ok(Outcome {
                json,
                table,
                passed,
            });
        }
        PairView::Limits => match lambda {
            Some(l) => {
                let lambda: Vec<usize> = parse_list(l, "lambda")?;
                let v = crate::multiplicity::WeightModule::realize(pair.n, &lambda)?;
                let mu: Vec<i64> = match mu {
                    Some(m) => parse_list(m, "mu")?,
                    None => vec![0; pair.n],
                };
                let r = module_limit_check(&pair, &v, &mu)?;
                json!({ "diagram": spec, "lambda": lambda, "module_dim": v.dim(), "limit": r })
            }
            None => {
                // Adjoint case: the limit of the Cartan subalgebra.
                let g = Grading::new(&h)?;
                let cartan = g.block((0, 0), Ambient::Gl);
                let (x1, x2) = (pair.e1.ad_matrix(), pair.e2.ad_matrix());
                let lim = grassmann_limit(&x1.add(&x2), &cartan)?;
                let bif = limit_space(&x1, &x2, &cartan).ok();
                let z = centralizer(&pair, Ambient::Gl);
                json!({
                    "diagram": spec,
                    "dim_limit": lim.dim(),
                    "dim_centralizer_gl": z.dim(),
                    "limit_equals_centralizer": lim == z,
                    "bifiltration_matches": bif.as_ref() == Some(&lim),
                })
            }
        },
    };
    Ok(Outcome::info(json))
}

pub fn cmd_verify(
    cfg: &RunConfig,
    diagram: Option<&str>,
    all: Option<usize>,
    suite: SuiteName,
    lambda: Option<&str>,
    mu: Option<&str>,
    characters: usize,
) -> Result<Outcome> {
    let single: Option<Diagram> = diagram.map(parse).transpose()?;
    let bound = all.or(single.as_ref().map(Diagram::len));
    let report: SuiteReport = match suite {
        SuiteName::Structure => match &single {
            Some(d) => suites::structure_for(std::slice::from_ref(d), d.len())?,
            None => suites::structure_suite(need(all)?)?,
        },
        SuiteName::Skew => match &single {
            Some(d) => suites::skew_for(std::slice::from_ref(d), d.len())?,
            None => suites::skew_suite(need(all)?)?,
        },
        SuiteName::Cohomology => match &single {
            Some(d) => suites::cohomology_for(std::slice::from_ref(d), d.len())?,
            None => suites::cohomology_suite(need(all)?)?,
        },
        SuiteName::Multiplicity => {
            let cases = multiplicity_cases(&single, lambda, all)?;
            let mut r = suites::multiplicity_for(&cases, rule(cfg))?;
            if let Some(m) = mu {
                let mu: Vec<i64> = parse_list(m, "mu")?;
                restrict_to_mu(&mut r, &mu);
            }
            r
        }
        SuiteName::Harmonics => match &single {
            Some(_) => return Err(Error::Precondition("harmonics runs on --all N".into())),
            None => suites::harmonics_suite(need(all)?, characters.max(need(all)?))?,
        },
        SuiteName::Rectangular => suites::rectangular_suite(bound.unwrap_or(20))?,
        SuiteName::Strictness => {
            let w = suites::strictness_witness()?;
            let json = serde_json::to_value(&w).expect("report serializes");
            let table = format!(
                "strictness witness {} on S^{}: dim lim = {}, dim V^z(e) = {}, strict = {}\n",
                w.diagram, w.lambda[0], w.report.dim_limit, w.report.dim_invariants, w.strict
            );
            return Ok(Outcome {
                json,
                table,
                passed: w.strict,
            });
        }
    };
    Ok(suite_outcome(&report))
}

fn need(all: Option<usize>) -> Result<usize> {
    all.ok_or_else(|| Error::Precondition("give --diagram or --all N".into()))
}

fn multiplicity_cases(
    single: &Option<Diagram>,
    lambda: Option<&str>,
    all: Option<usize>,
) -> Result<Vec<MultiplicityCase>> {
    match (single, lambda) {
        (Some(d), Some(l)) => Ok(vec![MultiplicityCase {
            group: "single".into(),
            diagram: d.to_spec(),
            lambda: parse_list(l, "lambda")?,
        }]),
        (Some(d), None) => Ok(root_lattice_partitions(d.len(), 6)
            .into_iter()
            .map(|lambda| MultiplicityCase {
                group: "single".into(),
                diagram: d.to_spec(),
                lambda,
            })
            .collect()),
        (None, Some(_)) => Err(Error::Precondition("--lambda needs --diagram".into())),
        (None, None) => {
            let max = all.unwrap_or(6);
            Ok(suites::multiplicity_cases()
                .into_iter()
                .filter(|c| c.lambda.iter().sum::<usize>() <= max)
                .collect())
        }
    }
}

/// Keeps only the entries at μ inside each multiplicity report.
fn restrict_to_mu(r: &mut SuiteReport, mu: &[i64]) {
    let target = json!(mu);
    for d in &mut r.details {
        if let Some(entries) = d
            .pointer_mut("/report/entries")
            .and_then(Value::as_array_mut)
        {
            entries.retain(|e| e.get("mu") == Some(&target));
        }
    }
}

pub fn suite_outcome(r: &SuiteReport) -> Outcome {
    let mut table = format!(
        "suite {} (bound {}, {} items): {}\n",
        r.suite,
        r.bound,
        r.items,
        verdict(r.passed)
    );
    for c in &r.checks {
        table += &check_line(c, "");
    }
    for c in &r.informational {
        table += &check_line(c, "info ");
    }
    if r.suite == "multiplicity" {
        table += &multiplicity_table(r);
    }
    Outcome {
        json: serde_json::to_value(r).expect("report serializes"),
        table,
        passed: r.passed,
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check_line(c: &suites::Check, prefix: &str) -> String {
    let ok = c.checked - c.failures.len();
    let mut s = format!(
        "  {prefix}{:<40} {} {ok}/{}",
        c.name,
        verdict(c.passed),
        c.checked
    );
    if !c.failures.is_empty() {
        let shown: Vec<&str> = c.failures.iter().take(8).map(String::as_str).collect();
        s += &format!("  failing: {}", shown.join(" | "));
        if c.failures.len() > 8 {
            s += &format!(" … (+{})", c.failures.len() - 8);
        }
    }
    s.push('\n');
    s
}

/// Per-μ rows: μ, dominant?, direct polynomial, formula polynomial, equal?
fn multiplicity_table(r: &SuiteReport) -> String {
    let mut out = String::new();
    for d in &r.details {
        let Some(rep) = d.get("report") else { continue };
        out += &format!(
            "\n{} λ={} admissible={}\n",
            d["diagram"].as_str().unwrap_or("?"),
            rep["lambda"],
            rep["admissible"]
        );
        for e in rep["entries"].as_array().into_iter().flatten() {
            out += &format!(
                "  μ={:<16} dom={:<5} direct={:<28} formula={:<28} {}\n",
                e["mu"].to_string(),
                e["dominant"].to_string(),
                poly_text(&e["p_direct"]),
                poly_text(&e["p_formula"]),
                if e["equal"] == json!(true) {
                    "="
                } else {
                    "≠"
                }
            );
        }
    }
    out
}

/// Renders a serialized [i, j, "c"] triple list back as a polynomial in s, t.
fn poly_text(v: &Value) -> String {
    let Some(terms) = v.as_array() else {
        return v.to_string();
    };
    let mut p = BivariatePoly::zero();
    for t in terms {
        let parsed = (|| {
            let i = t.get(0)?.as_i64()?;
            let j = t.get(1)?.as_i64()?;
            let c: num_bigint::BigInt = t.get(2)?.as_str()?.parse().ok()?;
            Some((i, j, c))
        })();
        match parsed {
            Some((i, j, c)) => p.add_term(i, j, c),
            None => return v.to_string(),
        }
    }
    p.to_string()
}

pub fn cmd_rect(
    algebra: Option<Algebra>,
    bound: Option<usize>,
    spec: Option<&str>,
    so_pair: Option<usize>,
    central: Option<&str>,
) -> Result<Outcome> {
    if let Some(s) = spec {
        let spec: EmbeddingSpec = s.parse()?;
        let dec = decompose_g(&spec)?;
        let v = is_rectangular_pnpair(&spec)?;
        return Ok(Outcome::info(
            json!({ "spec": spec.to_spec(), "decomposition": dec, "verdict": v }),
        ));
    }
    if let Some(n) = so_pair {
        let r = so_nonrectangular_pair(n)?;
        let passed = r.holds();
        let json = serde_json::to_value(&r).expect("report serializes");
        let table = format!(
            "so({}) pair: dim z = {} (rank {}), stated basis spans: {}, Jordan types {:?} / {:?}, bi-exponents {:?}: {}\n",
            r.dim_v,
            r.dim_centralizer,
            r.rank,
            r.basis_spans,
            r.jordan_e1,
            r.jordan_e2,
            r.biexponents,
            verdict(passed)
        );
        return Ok(Outcome {
            json,
            table,
            passed,
        });
    }
    if let Some(d) = central {
        let r = centrally_symmetric_so(&parse(d)?)?;
        return Ok(Outcome::info(
            serde_json::to_value(&r).expect("report serializes"),
        ));
    }
    let algebra = algebra.ok_or_else(|| {
        Error::Precondition("give TYPE BOUND, --spec, --so-pair or --central".into())
    })?;
    let bound = bound.ok_or_else(|| Error::Precondition("missing BOUND".into()))?;
    if bound > RECT_LIMIT {
        return Err(Error::Resource(format!(
            "bound {bound} exceeds {RECT_LIMIT}"
        )));
    }
    let report = classify_thm85(bound, RECT_MULTIBLOCK_CROSSCHECK.min(bound))?;
    let t = report
        .types
        .iter()
        .find(|t| t.algebra == algebra)
        .expect("every type is reported");
    let crosscheck: Vec<_> = if algebra == Algebra::Sl {
        report.sl_crosscheck.clone()
    } else {
        Vec::new()
    };
    let passed = t.holds() && crosscheck.iter().all(|c| c.agrees);
    let mut table = format!(
        "{algebra}, Σ nm ≤ {bound}: {} J enumerated, {} without a compatible form, {} accepted: {}\n",
        t.enumerated,
        t.form_invalid,
        t.accepted.len(),
        verdict(passed)
    );
    for a in &t.accepted {
        table += &format!("  {a}\n");
    }
    for m in &t.mismatches {
        table += &format!("  MISMATCH {m}\n");
    }
    if !crosscheck.is_empty() {
        let bad = crosscheck.iter().filter(|c| !c.agrees).count();
        table += &format!(
            "module cross-check: {} specs, {bad} disagreements\n",
            crosscheck.len()
        );
    }
    let json = json!({ "bound": bound, "type": t, "sl_crosscheck": crosscheck });
    Ok(Outcome {
        json,
        table,
        passed,
    })
}

/// Generic human rendering of a JSON payload.
fn render_value(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let mut s = String::new();
            for (k, x) in map {
                s += &format!("{k:<24} {}\n", compact(x));
            }
            s
        }
        other => format!("{}\n", compact(other)),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses arguments, runs, writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(j) = cli.run.jobs {
        // Fails only if a global pool already exists, in which case it is reused.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(out) => {
            let text = out.render(cli.run.format);
            if let Err(e) = emit(&text, cli.run.out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return 2;
            }
            out.exit_code()
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.run.format == Format::Json {
                let payload = json!({ "error": e.kind(), "message": e.to_string() });
                let text =
                    serde_json::to_string_pretty(&payload).expect("json value serializes") + "\n";
                let _ = emit(&text, cli.run.out.as_ref());
            }
            eprintln!("error: {e}");
            code
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
