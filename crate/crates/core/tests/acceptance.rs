//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Run a subset with `cargo test -p nilpair --test acceptance -- 3 7`.

use nilpair::multiplicity::PositiveRule;
use nilpair::suites::{self, SuiteReport};
use std::process::Command;
use std::time::{Duration, Instant};

/// Criterion id, description, and a runner producing one or more labelled lines.
type Criterion = (&'static str, &'static str, fn() -> Vec<(String, Outcome)>);

const MULTIPLICITY_BUDGET: Duration = Duration::from_secs(600);

struct Outcome {
    passed: bool,
    summary: String,
    report: Vec<String>,
}

impl Outcome {
    fn from_suite(r: &SuiteReport) -> Self {
        let counted: usize = r.checks.iter().map(|c| c.checked).sum();
        let mut report = failing_checks(r);
        for c in &r.informational {
            report.push(format!(
                "info {}: {} {}/{}",
                c.name,
                if c.passed { "pass" } else { "fail" },
                c.checked - c.failures.len(),
                c.checked
            ));
        }
        Outcome {
            passed: r.passed,
            summary: format!("{} items, {} counted checks", r.items, counted),
            report,
        }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome {
            passed: false,
            summary: format!("error: {e}"),
            report: Vec::new(),
        }
    }
}

fn failing_checks(r: &SuiteReport) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| {
            let shown: Vec<&str> = c.failures.iter().take(12).map(String::as_str).collect();
            let more = c.failures.len().saturating_sub(shown.len());
            let tail = if more > 0 {
                format!(" (+{more} more)")
            } else {
                String::new()
            };
            format!(
                "{}: {}/{} failed: {}{}",
                c.name,
                c.failures.len(),
                c.checked,
                shown.join("; "),
                tail
            )
        })
        .collect()
}

fn suite(r: nilpair::Result<SuiteReport>) -> Outcome {
    match r {
        Ok(r) => Outcome::from_suite(&r),
        Err(e) => Outcome::error(e),
    }
}

fn structure() -> Outcome {
    suite(suites::structure_suite(8))
}

fn skew() -> Outcome {
    suite(suites::skew_suite(7))
}

fn cohomology() -> Outcome {
    suite(suites::cohomology_suite(8))
}

/// Returns the combined line plus one line per part (a), (b), (c).
fn multiplicity() -> Vec<(String, Outcome)> {
    let start = Instant::now();
    let cases = suites::multiplicity_cases();
    let mut reports = Vec::new();
    for case in &cases {
        match suites::multiplicity_case(case, PositiveRule::Standard) {
            Ok(r) => reports.push((case, r)),
            Err(e) => return vec![("4 multiplicity".into(), Outcome::error(e))],
        }
    }
    let elapsed = start.elapsed();
    let part = |group: &str| -> Outcome {
        let mut checked = 0;
        let mut report = Vec::new();
        for (case, r) in reports.iter().filter(|(c, _)| c.group == group) {
            if !r.admissible {
                continue;
            }
            checked += 1;
            if r.all_equal {
                continue;
            }
            report.push(format!(
                "{} λ={:?}: {} of {} weights differ (dominant weights agree: {})",
                case.diagram,
                case.lambda,
                r.entries.iter().filter(|e| !e.equal).count(),
                r.entries.len(),
                r.dominant_equal
            ));
            for e in r.entries.iter().filter(|e| !e.equal) {
                report.push(format!(
                    "    μ={:?} dominant={} direct={} formula={}",
                    e.mu, e.dominant, e.p_direct, e.p_formula
                ));
            }
        }
        let failed = report.iter().filter(|l| !l.starts_with(' ')).count();
        Outcome {
            passed: failed == 0,
            summary: format!("{} admissible cases, {} disagree", checked, failed),
            report,
        }
    };
    let a = part("degenerate");
    let b = part("hook_square");
    let bad_c: Vec<String> = reports
        .iter()
        .filter(|(_, r)| !r.classical_ok)
        .map(|(c, r)| format!("{} λ={:?} n={}", c.diagram, c.lambda, r.n))
        .collect();
    let c = Outcome {
        passed: bad_c.is_empty(),
        summary: format!("{} cases, P(1,1) = Kostant", reports.len()),
        report: bad_c,
    };
    let timing = Outcome {
        passed: elapsed < MULTIPLICITY_BUDGET,
        summary: format!(
            "{:.1}s of {}s",
            elapsed.as_secs_f64(),
            MULTIPLICITY_BUDGET.as_secs()
        ),
        report: Vec::new(),
    };
    let all = Outcome {
        passed: a.passed && b.passed && c.passed && timing.passed,
        summary: "parts (a), (b), (c) and time budget".into(),
        report: Vec::new(),
    };
    vec![
        ("4 multiplicity".into(), all),
        ("4a degenerate pairs, every weight".into(), a),
        ("4b hook and square, every weight".into(), b),
        ("4c classical specialization".into(), c),
        ("4t multiplicity time budget".into(), timing),
    ]
}

fn harmonics() -> Outcome {
    suite(suites::harmonics_suite(5, 8))
}

fn rectangular() -> Outcome {
    suite(suites::rectangular_suite(20))
}

fn strictness() -> Outcome {
    match suites::strictness_witness() {
        Ok(r) => Outcome {
            passed: r.strict,
            summary: format!(
                "{} on S^3, μ=0: dim lim = {}, dim V^z(e) = {}, contained = {}",
                r.diagram, r.report.dim_limit, r.report.dim_invariants, r.report.contained
            ),
            report: Vec::new(),
        },
        Err(e) => Outcome::error(e),
    }
}

fn determinism() -> Outcome {
    let mut report = Vec::new();
    // Library: the same suite under different thread counts.
    let run = |threads: usize| -> Option<String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .ok()?;
        pool.install(|| suites::structure_suite(6).ok().map(|r| r.to_json()))
    };
    match (run(1), run(4)) {
        (Some(a), Some(b)) if a == b => {}
        _ => report.push("structure_suite(6) JSON differs between 1 and 4 threads".into()),
    }
    // CLI: byte-identical stdout across runs and job counts.
    let cli = |args: &[&str]| -> Option<Vec<u8>> {
        Command::new(env!("CARGO_BIN_EXE_nilpair"))
            .args(args)
            .output()
            .ok()
            .map(|o| o.stdout)
    };
    let invocations: [&[&str]; 3] = [
        &["verify", "--all", "6", "structure"],
        &["rect", "--spec", "so:3x1,1x3"],
        &[
            "verify",
            "--diagram",
            "2,1",
            "--lambda",
            "2,1",
            "multiplicity",
        ],
    ];
    for args in invocations {
        let mut outs = Vec::new();
        for jobs in ["1", "4", "4"] {
            let mut full = vec!["--format", "json", "--jobs", jobs];
            full.extend_from_slice(args);
            outs.push(cli(&full));
        }
        let ok = outs[0].as_ref().is_some_and(|o| !o.is_empty())
            && outs.windows(2).all(|w| w[0] == w[1]);
        if !ok {
            report.push(format!("CLI output differs: {}", args.join(" ")));
        }
    }
    Outcome {
        passed: report.is_empty(),
        summary: "library and CLI JSON byte-identical across runs and thread counts".into(),
        report,
    }
}

fn main() {
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let wanted = |id: &str| filter.is_empty() || filter.iter().any(|f| f == id);
    let criteria: [Criterion; 8] = [
        ("1", "structure |d| <= 8", || {
            vec![("1 structure".into(), structure())]
        }),
        ("2", "skew |d| <= 7", || vec![("2 skew".into(), skew())]),
        ("3", "cohomology |d| <= 8", || {
            vec![("3 cohomology".into(), cohomology())]
        }),
        ("4", "multiplicity", multiplicity),
        ("5", "harmonics", || {
            vec![("5 harmonics".into(), harmonics())]
        }),
        ("6", "rectangular", || {
            vec![("6 rectangular".into(), rectangular())]
        }),
        ("7", "strictness", || {
            vec![("7 strictness".into(), strictness())]
        }),
        ("8", "determinism", || {
            vec![("8 determinism".into(), determinism())]
        }),
    ];
    let mut failed = Vec::new();
    for (id, _, run) in criteria {
        if !wanted(id) {
            continue;
        }
        let start = Instant::now();
        let lines = run();
        let secs = start.elapsed().as_secs_f64();
        for (i, (label, o)) in lines.iter().enumerate() {
            let status = if o.passed { "PASS" } else { "FAIL" };
            let time = if i == 0 {
                format!(" [{secs:.1}s]")
            } else {
                String::new()
            };
            println!("{status} {label}: {}{time}", o.summary);
            for l in &o.report {
                println!("       {l}");
            }
        }
        if let Some((label, o)) = lines.first() {
            if !o.passed {
                failed.push(label.clone());
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!(
            "acceptance: {} criteria fail: {}",
            failed.len(),
            failed.join(", ")
        );
        std::process::exit(1);
    }
}
