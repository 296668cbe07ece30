//! `lacolor`: build, verify, search and export matrix-labeled graphs.
//!
//! Exit codes: 0 success, 1 verification failure (or search timeout),
//! 2 usage error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lacolor::dot::to_dot;
use lacolor::families::FAMILY_TAGS;
use lacolor::matrix::{matrix_5x2k, matrix_6x4n, matrix_kx10};
use lacolor::search::{chi_la_exact, SearchOptions, SearchOutcome, DEFAULT_MAX_EDGES};
use lacolor::{check_expected, induced_coloring, Family, GraphDocument, LabelMatrix, MatrixKind};

#[derive(Parser)]
#[command(name = "lacolor", version, about = "Matrix-labeled graphs and local antimagic colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a label matrix as CSV or JSON
    Matrix(MatrixArgs),
    /// Build a labeled graph family and write it as a JSON document
    Build(BuildArgs),
    /// Verify the labeling stored in a document
    Verify(InputArgs),
    /// Exact local antimagic chromatic number of a small graph
    Search(SearchArgs),
    /// Export a document to another format
    Export(ExportArgs),
    /// Run every validator and builder over a default grid
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct MatrixArgs {
    /// 5x2k, 6x4n or kx10
    kind: String,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: MatrixFormat,
    /// Print the sequences T_1..T_2n instead of the grid (6x4n only)
    #[arg(long)]
    sequences: bool,
    /// Run the matching validator; exit 1 if any check fails
    #[arg(long)]
    validate: bool,
}

#[derive(Args)]
struct BuildArgs {
    /// Family tag, e.g. FB, rDF, nC482, rG82
    family: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Write the document here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Attach the verification report; exit 1 on any mismatch
    #[arg(long)]
    verify: bool,
    /// Allow experimental constructions
    #[arg(long)]
    experimental: bool,
}

#[derive(Args)]
struct InputArgs {
    /// Document path, or `-` for stdin
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
    /// Time budget in seconds
    #[arg(long, env = "ANTIMAGIC_SEARCH_BUDGET")]
    budget: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "dot")]
    format: ExportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Largest matrix parameter validated
    #[arg(long, default_value_t = 20)]
    max: u64,
}

/// Failure carrying its exit code.
struct Fail {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Fail {
    Fail {
        code: 2,
        message: message.to_string(),
    }
}

fn failed(message: impl ToString) -> Fail {
    Fail {
        code: 1,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Matrix(a) => cmd_matrix(a),
        Command::Build(a) => cmd_build(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Search(a) => cmd_search(a),
        Command::Export(a) => cmd_export(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Fail> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| failed(format!("cannot write output: {e}")))
        }
    }
}

fn read_document(path: &Path) -> Result<GraphDocument, Fail> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(usage)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
    };
    GraphDocument::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn build_matrix(kind: MatrixKind, p: u64) -> Result<LabelMatrix, Fail> {
    match kind {
        MatrixKind::FiveBy2k => matrix_5x2k(p),
        MatrixKind::SixBy4n => matrix_6x4n(p),
        MatrixKind::KBy10 => matrix_kx10(p),
    }
    .map_err(usage)
}

fn cmd_matrix(a: MatrixArgs) -> Result<(), Fail> {
    let kind: MatrixKind = a.kind.parse().map_err(usage)?;
    let p = match (kind, a.k, a.n) {
        (_, Some(_), Some(_)) => return Err(usage("give either --k or --n, not both")),
        (MatrixKind::SixBy4n, None, Some(n)) => n,
        (MatrixKind::SixBy4n, Some(_), None) => return Err(usage("the 6x4n matrix takes --n")),
        (_, Some(k), None) => k,
        (_, None, Some(_)) => return Err(usage(format!("the {kind} matrix takes --k"))),
        (_, None, None) => return Err(usage("missing matrix parameter")),
    };
    let m = build_matrix(kind, p)?;
    if a.sequences && m.sequences.is_none() {
        return Err(usage("--sequences only applies to 6x4n"));
    }
    let text = match (a.format, a.sequences) {
        (MatrixFormat::Csv, false) => m.to_csv(),
        (MatrixFormat::Csv, true) => m.sequences_csv().unwrap_or_default(),
        (MatrixFormat::Json, false) => pretty(&m),
        (MatrixFormat::Json, true) => pretty(&m.sequences),
    };
    emit(&text, None)?;
    if a.validate {
        let report = m.validate();
        for c in report.checks.iter().filter(|c| !c.passed) {
            let tag = if c.advisory { "advisory" } else { "FAIL" };
            eprintln!("{tag}: {} {}", c.name, c.detail.as_deref().unwrap_or(""));
        }
        if !report.passed() {
            return Err(failed(format!("{} checks failed", report.failures().len())));
        }
        eprintln!("all {} checks passed", report.checks.len());
    }
    Ok(())
}

fn family_from_args(a: &BuildArgs) -> Result<Family, Fail> {
    if !FAMILY_TAGS.contains(&a.family.as_str()) {
        return Err(usage(format!(
            "unknown family `{}`; known: {}",
            a.family,
            FAMILY_TAGS.join(", ")
        )));
    }
    let mut params = BTreeMap::new();
    for (name, value) in [("k", a.k), ("n", a.n), ("r", a.r), ("s", a.s), ("m", a.m)] {
        if let Some(v) = value {
            params.insert(name.to_string(), v);
        }
    }
    let family = Family::from_tag(&a.family, &params).map_err(usage)?;
    let extra: Vec<&String> = params.keys().filter(|k| !family.params().contains_key(*k)).collect();
    if !extra.is_empty() {
        return Err(usage(format!("{} does not take --{}", a.family, extra[0])));
    }
    Ok(family)
}

fn cmd_build(a: BuildArgs) -> Result<(), Fail> {
    let family = family_from_args(&a)?;
    if family.is_experimental() && !a.experimental {
        return Err(usage(format!("{} is experimental; pass --experimental", family.tag())));
    }
    let built = family.build().map_err(usage)?;
    for w in &built.warnings {
        eprintln!("warning: {w}");
    }
    for d in &built.discrepancies {
        eprintln!(
            "note: {} at {}: printed {} = {}, verified {}",
            d.quantity, d.vertex, d.printed_formula, d.printed, d.verified
        );
    }
    if let Some(amb) = &built.ambiguity {
        eprintln!("note: {amb}");
    }
    let mut doc = GraphDocument::from_built(&built);
    let mut verdict = Ok(());
    if a.verify {
        let report = induced_coloring(&built.graph).map_err(failed)?;
        let check = check_expected(&built.graph, &built.expected).map_err(failed)?;
        eprintln!(
            "{family}: {} edges, colors {:?}, local antimagic: {}",
            built.graph.size(),
            report.colors(),
            report.local_antimagic
        );
        if !check.passed {
            for d in &check.diffs {
                eprintln!("mismatch: {d}");
            }
            verdict = Err(failed("construction does not match its expected coloring"));
        }
        doc.verification = Some(report);
    }
    emit(&doc.to_json(), a.out.as_deref())?;
    verdict
}

fn cmd_verify(a: InputArgs) -> Result<(), Fail> {
    let doc = read_document(&a.input)?;
    let g = doc.to_graph().map_err(usage)?;
    let report = induced_coloring(&g).map_err(failed)?;
    let mut problems: Vec<String> = report.label_errors.clone();
    for c in &report.conflicts {
        problems.push(format!(
            "edge {}{} (label {}): both ends have sum {}",
            c.u, c.v, c.label, c.sum
        ));
    }
    let expected = match &doc.expected_colors {
        Some(exp) => {
            let check = check_expected(&g, exp).map_err(failed)?;
            for d in &check.diffs {
                if !problems.contains(d) {
                    problems.push(d.clone());
                }
            }
            Some(check)
        }
        None => None,
    };
    let out = json!({
        "local_antimagic": report.local_antimagic,
        "color_count": report.color_count,
        "colors": report.colors(),
        "class_sizes": report.class_sizes(),
        "expected_matches": expected.as_ref().map(|c| c.passed),
        "problems": problems,
        "report": report,
    });
    emit(&pretty(&out), None)?;
    if problems.is_empty() {
        Ok(())
    } else {
        for p in &problems {
            eprintln!("problem: {p}");
        }
        Err(failed("verification failed"))
    }
}

fn cmd_search(a: SearchArgs) -> Result<(), Fail> {
    let doc = read_document(&a.input)?;
    let g = doc.to_graph().map_err(usage)?;
    let budget = match a.budget {
        Some(b) if b.is_finite() && b >= 0.0 => Some(Duration::from_secs_f64(b)),
        Some(b) => return Err(usage(format!("invalid budget {b}"))),
        None => None,
    };
    let options = SearchOptions {
        max_edges: a.max_edges,
        budget,
    };
    let result = chi_la_exact(&g, &options).map_err(usage)?;
    let labels = |w: &lacolor::LabeledGraph| w.labels();
    let (summary, body, code) = match &result.outcome {
        SearchOutcome::Value { colors, witness } => (
            format!("Value({colors})"),
            json!({ "outcome": "value", "colors": colors, "witness": labels(witness) }),
            0,
        ),
        SearchOutcome::NoLabelingExists => (
            "NoLabelingExists".to_string(),
            json!({ "outcome": "no_labeling_exists" }),
            0,
        ),
        SearchOutcome::Timeout { budget, best } => (
            format!("Timeout({:.3}s)", budget.as_secs_f64()),
            json!({
                "outcome": "timeout",
                "budget_seconds": budget.as_secs_f64(),
                "best_colors": best.as_ref().map(|b| b.0),
                "best_witness": best.as_ref().map(|b| labels(&b.1)),
            }),
            1,
        ),
    };
    let mut body = body;
    body["stats"] = serde_json::to_value(result.stats).expect("serializable");
    body["summary"] = json!(summary);
    emit(&pretty(&body), None)?;
    eprintln!("{summary}");
    if code == 0 {
        Ok(())
    } else {
        Err(failed("search budget exhausted"))
    }
}

fn cmd_export(a: ExportArgs) -> Result<(), Fail> {
    let doc = read_document(&a.input)?;
    let g = doc.to_graph().map_err(usage)?;
    let text = match a.format {
        ExportFormat::Dot => {
            let title = doc.family.map_or_else(|| "G".to_string(), |f| f.to_string());
            to_dot(&g, &title)
        }
        ExportFormat::Json => doc.to_json(),
    };
    emit(&text, a.out.as_deref())
}

/// Family points checked by `selftest`.
fn selftest_families() -> Vec<Family> {
    let mut out = Vec::new();
    for k in 1..=4 {
        out.extend([
            Family::FbUnits { k },
            Family::Fb { k },
            Family::C8Units { k },
            Family::Bk { k },
            Family::KC82 { k },
            Family::KD82 { k },
        ]);
    }
    for n in 1..=3 {
        out.push(Family::NC482 { n });
        for m in 1..=3 {
            out.push(Family::H { m, n });
        }
    }
    for (r, s) in [(2, 2), (3, 2), (2, 4), (3, 4)] {
        out.extend([Family::RFb { r, s }, Family::Fb1 { r, s }, Family::Fb2 { r, s }]);
    }
    for (r, s) in [(1, 2), (2, 1), (3, 2), (2, 3)] {
        out.push(Family::RDf { r, s });
        for v in 1..=4u8 {
            if r >= 2 && (v != 4 || r % 2 == 0) {
                out.push(Family::DfVariant { v, r, s });
            }
        }
    }
    for (r, s) in [(1, 2), (2, 2), (1, 4)] {
        out.extend([Family::DfR { r, s }, Family::RG82 { r, s }]);
    }
    for (r, s) in [(1, 2), (2, 2), (1, 3)] {
        out.extend([Family::G1 { r, s }, Family::G2 { r, s }]);
        for m in 1..=3 {
            out.push(Family::HmRs { m, r, s });
        }
    }
    out
}

fn cmd_selftest(a: SelftestArgs) -> Result<(), Fail> {
    if a.max == 0 {
        return Err(usage("--max must be at least 1"));
    }
    let mut failures = 0usize;
    let mut checks = 0usize;
    for p in 1..=a.max {
        for kind in [MatrixKind::FiveBy2k, MatrixKind::SixBy4n, MatrixKind::KBy10] {
            let m = build_matrix(kind, p)?;
            let report = m.validate();
            checks += 1;
            if !report.passed() {
                failures += 1;
                for c in report.failures() {
                    eprintln!("FAIL {kind}({p}): {} {}", c.name, c.detail.as_deref().unwrap_or(""));
                }
            }
        }
    }
    for family in selftest_families() {
        checks += 1;
        let outcome = family
            .build()
            .map_err(|e| e.to_string())
            .and_then(|b| check_expected(&b.graph, &b.expected).map_err(|e| e.to_string()));
        match outcome {
            Ok(c) if c.passed => {}
            Ok(c) => {
                failures += 1;
                eprintln!("FAIL {family}: {}", c.diffs.join("; "));
            }
            Err(e) => {
                failures += 1;
                eprintln!("FAIL {family}: {e}");
            }
        }
    }
    println!("selftest: {} of {checks} checks passed", checks - failures);
    if failures == 0 {
        Ok(())
    } else {
        Err(failed(format!("{failures} checks failed")))
    }
}
