//! Command-line front end.
//!
//! Every subcommand loads its objects through [`trilie::files`] (so any
//! argument may be a file path or a catalog name), runs the matching library
//! operation, and prints either prose or, with `--json`, a machine-readable
//! report that parses back into the emitting structure.
//!
//! Exit codes are a stable contract: 0 means every check passed, 1 means a
//! verified mathematical failure (the report carries a witness), 2 means the
//! input was malformed or out of contract.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use trilie::action::{check_action, semidirect_product};
use trilie::catalog;
use trilie::cohomology::{classify_deformation, cohomology_dims, d_t};
use trilie::error::Error;
use trilie::files::{
    self, algebra_to_file, load_action, load_algebra, load_map, load_operator, load_post_lie,
    map_to_file, parse_rat, post_lie_to_file, FileKind,
};
use trilie::linalg::rat_string;
use trilie::linfty::{cochain_keys, mc_check, mc_twisted_check, twisted_l1, Cochain};
use trilie::post_lie::{check_post_lie, post_lie_from_rb, subadjacent};
use trilie::report::Verification;
use trilie::rota_baxter::{
    check_rb, check_rb_via_graph, descendent_algebra, search_rb, RBOperator,
};

#[derive(Parser)]
#[command(
    name = "trilie",
    version,
    about = "Exact checks and constructions for 3-Lie algebras, weighted operators, and their cohomology"
)]
struct Cli {
    /// Emit JSON reports instead of prose.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the defining identities of an object file or catalog entry.
    Verify {
        /// File path or catalog name.
        spec: String,
        /// Object kind: algebra | action | operator | postlie.
        #[arg(long)]
        kind: String,
    },
    /// Build the semidirect product algebra of an action at a weight.
    Semidirect {
        action: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Weighted operator commands.
    #[command(subcommand)]
    Rb(RbCommand),
    /// 3-post-Lie algebra commands.
    #[command(subcommand)]
    Postlie(PostlieCommand),
    /// Maurer-Cartan checks in the controlling graded algebra.
    #[command(subcommand)]
    Mc(McCommand),
    /// Cohomology of a verified operator.
    #[command(subcommand)]
    Cohomology(CohomologyCommand),
    /// Infinitesimal deformations of a verified operator.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// Run the whole theorem chain over one operator file.
    Pipeline { operator: String },
    /// Inspect the built-in example catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum RbCommand {
    /// Check the defining identity of a weighted operator.
    Check { operator: String },
    /// Enumerate all operators over an action with entries from a finite set.
    Search {
        action: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// Comma-separated entry candidates, e.g. -1,0,1.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        entries: String,
        /// Restrict the search to diagonal matrices.
        #[arg(long)]
        diagonal_only: bool,
    },
}

#[derive(Subcommand)]
enum PostlieCommand {
    /// Check the 3-post-Lie axioms.
    Check { postlie: String },
    /// Transport a verified operator to its induced 3-post-Lie algebra.
    FromRb { operator: String },
}

#[derive(Subcommand)]
enum McCommand {
    /// Check the Maurer-Cartan equation for an operator.
    Check { operator: String },
    /// Check whether T + T' is again an operator, through the twisted brackets.
    TwistedCheck {
        operator: String,
        /// Map file for T' (same shape as the operator matrix).
        t_prime: String,
    },
}

#[derive(Subcommand)]
enum CohomologyCommand {
    /// Cocycle, coboundary, and cohomology dimensions at one degree.
    Dims {
        operator: String,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum DeformCommand {
    /// Classify a candidate deformation direction.
    Classify {
        operator: String,
        /// Map file for the direction (same shape as the operator matrix).
        direction: String,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the shipped entries.
    List,
    /// Print one entry's JSON payload.
    Show { name: String },
}

/// Outcome of one subcommand: prose lines, a JSON document, and whether any
/// verified check failed.
struct Outcome {
    prose: String,
    json: serde_json::Value,
    failed: bool,
}

impl Outcome {
    fn report(v: &Verification, what: &str) -> Self {
        let prose = if v.passed {
            format!("{what}: PASS ({} instances checked)", v.checked)
        } else if let Some(w) = v.witness.as_ref() {
            format!(
                "{what}: FAIL at indices {:?} ({})\n  lhs = [{}]\n  rhs = [{}]",
                w.indices,
                w.identity,
                w.lhs.join(", "),
                w.rhs.join(", ")
            )
        } else {
            format!("{what}: FAIL")
        };
        Outcome {
            prose,
            json: serde_json::to_value(v).expect("verification serializes"),
            failed: !v.passed,
        }
    }

    fn value<T: Serialize>(value: &T, prose: String, failed: bool) -> Self {
        Outcome {
            prose,
            json: serde_json::to_value(value).expect("report serializes"),
            failed,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DimsReport {
    #[serde(rename = "Z")]
    z: usize,
    #[serde(rename = "B")]
    b: usize,
    #[serde(rename = "H")]
    h: usize,
}

#[derive(Serialize, Deserialize)]
struct ClassifyReport {
    is_cocycle: bool,
    cohomology_class_trivial: bool,
    witness_x: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SearchReport {
    lambda: String,
    count: usize,
    operators: Vec<files::MapFile>,
}

#[derive(Serialize, Deserialize)]
struct StepReport {
    step: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize, Deserialize)]
struct PipelineReport {
    steps: Vec<StepReport>,
    passed: bool,
}

#[derive(Serialize, Deserialize)]
struct CatalogListEntry {
    name: String,
    kind: String,
    description: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            // Write via io so a consumer that closes the pipe early (e.g. `| head`)
            // ends the program quietly instead of panicking.
            let mut out = std::io::stdout().lock();
            let write_result = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("valid json")
                )
            } else {
                writeln!(out, "{}", outcome.prose)
            };
            if let Err(e) = write_result {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> trilie::Result<Outcome> {
    match command {
        Command::Verify { spec, kind } => cmd_verify(spec, kind),
        Command::Semidirect { action, lambda } => cmd_semidirect(action, lambda),
        Command::Rb(RbCommand::Check { operator }) => {
            let op = load_operator(operator)?;
            Ok(Outcome::report(&check_rb(&op)?, "operator identity"))
        }
        Command::Rb(RbCommand::Search {
            action,
            lambda,
            entries,
            diagonal_only,
        }) => cmd_search(action, lambda, entries, *diagonal_only),
        Command::Postlie(PostlieCommand::Check { postlie }) => {
            let p = load_post_lie(postlie)?;
            Ok(Outcome::report(&check_post_lie(&p)?, "3-post-Lie axioms"))
        }
        Command::Postlie(PostlieCommand::FromRb { operator }) => cmd_postlie_from_rb(operator),
        Command::Mc(McCommand::Check { operator }) => cmd_mc_check(operator),
        Command::Mc(McCommand::TwistedCheck { operator, t_prime }) => {
            cmd_mc_twisted(operator, t_prime)
        }
        Command::Cohomology(CohomologyCommand::Dims { operator, degree }) => {
            cmd_dims(operator, *degree)
        }
        Command::Deform(DeformCommand::Classify {
            operator,
            direction,
        }) => cmd_classify(operator, direction),
        Command::Pipeline { operator } => cmd_pipeline(operator),
        Command::Catalog(CatalogCommand::List) => cmd_catalog_list(),
        Command::Catalog(CatalogCommand::Show { name }) => cmd_catalog_show(name),
    }
}

fn cmd_verify(spec: &str, kind: &str) -> trilie::Result<Outcome> {
    let kind: FileKind = kind.parse()?;
    let v = match kind {
        FileKind::Algebra => load_algebra(spec)?.check_fundamental_identity(),
        FileKind::Action => check_action(&load_action(spec)?)?,
        FileKind::Operator => check_rb(&load_operator(spec)?)?,
        FileKind::PostLie => check_post_lie(&load_post_lie(spec)?)?,
        FileKind::Map => {
            return Err(Error::Input(
                "bare maps have no defining identity to verify".into(),
            ))
        }
    };
    Ok(Outcome::report(&v, kind.as_str()))
}

fn cmd_semidirect(action: &str, lambda: &str) -> trilie::Result<Outcome> {
    let a = load_action(action)?;
    let check = check_action(&a)?;
    if !check.passed {
        return Ok(Outcome::report(&check, "action axioms"));
    }
    let product = semidirect_product(&a, &parse_rat(lambda)?)?;
    let file = algebra_to_file(&product);
    let fi = product.check_fundamental_identity();
    let prose = format!(
        "semidirect product of dimension {} (fundamental identity re-checked on {} instances)\n{}",
        product.dim(),
        fi.checked,
        serde_json::to_string_pretty(&file)?
    );
    Ok(Outcome::value(&file, prose, false))
}

fn cmd_search(
    action: &str,
    lambda: &str,
    entries: &str,
    diagonal_only: bool,
) -> trilie::Result<Outcome> {
    let a = load_action(action)?;
    let lambda = parse_rat(lambda)?;
    let entry_set = entries
        .split(',')
        .map(|s| parse_rat(s))
        .collect::<trilie::Result<Vec<_>>>()?;
    let found = search_rb(&a, &lambda, &entry_set, diagonal_only)?;
    let report = SearchReport {
        lambda: rat_string(&lambda),
        count: found.len(),
        operators: found.iter().map(|op| map_to_file(&op.t)).collect(),
    };
    let mut prose = format!(
        "{} operator(s) with entries in {{{}}} at weight {}",
        report.count, entries, report.lambda
    );
    for (i, op) in found.iter().enumerate() {
        prose.push_str(&format!("\n  #{i}: {:?}", map_to_file(&op.t).matrix));
    }
    Ok(Outcome::value(&report, prose, false))
}

fn cmd_postlie_from_rb(operator: &str) -> trilie::Result<Outcome> {
    let op = load_operator(operator)?;
    let check = check_rb(&op)?;
    if !check.passed {
        return Ok(Outcome::report(&check, "operator identity"));
    }
    let p = post_lie_from_rb(&op)?;
    let file = post_lie_to_file(&p);
    let prose = format!(
        "induced 3-post-Lie algebra of dimension {}\n{}",
        p.dim(),
        serde_json::to_string_pretty(&file)?
    );
    Ok(Outcome::value(&file, prose, false))
}

fn cmd_mc_check(operator: &str) -> trilie::Result<Outcome> {
    let op = load_operator(operator)?;
    let holds = mc_check(&op)?;
    let v = if holds {
        Verification::pass(1)
    } else {
        Verification {
            passed: false,
            checked: 1,
            witness: None,
        }
    };
    let mut out = Outcome::report(&v, "Maurer-Cartan equation");
    if !holds {
        out.prose = "Maurer-Cartan equation: FAIL (l1(T) + 1/6 l3(T,T,T) is nonzero)".into();
    }
    Ok(out)
}

fn cmd_mc_twisted(operator: &str, t_prime: &str) -> trilie::Result<Outcome> {
    let op = load_operator(operator)?;
    let tp = load_map(t_prime)?;
    let holds = mc_twisted_check(&op, &tp)?;
    let v = if holds {
        Verification::pass(1)
    } else {
        Verification {
            passed: false,
            checked: 1,
            witness: None,
        }
    };
    let mut out = Outcome::report(&v, "twisted Maurer-Cartan equation");
    if !holds {
        out.prose =
            "twisted Maurer-Cartan equation: FAIL (T + T' does not satisfy the operator identity)"
                .into();
    }
    Ok(out)
}

fn cmd_dims(operator: &str, degree: usize) -> trilie::Result<Outcome> {
    let op = load_operator(operator)?;
    let check = check_rb(&op)?;
    if !check.passed {
        return Ok(Outcome::report(&check, "operator identity"));
    }
    let (z, b, h) = cohomology_dims(&op, degree)?;
    let report = DimsReport { z, b, h };
    let prose = format!("degree {degree}: Z = {z}, B = {b}, H = {h}");
    Ok(Outcome::value(&report, prose, false))
}

fn cmd_classify(operator: &str, direction: &str) -> trilie::Result<Outcome> {
    let op = load_operator(operator)?;
    let check = check_rb(&op)?;
    if !check.passed {
        return Ok(Outcome::report(&check, "operator identity"));
    }
    let dir = load_map(direction)?;
    let verdict = classify_deformation(&op, &dir)?;
    let report = ClassifyReport {
        is_cocycle: verdict.is_cocycle,
        cohomology_class_trivial: verdict.cohomology_class_trivial,
        witness_x: verdict
            .witness_x
            .as_ref()
            .map(|x| x.iter().map(rat_string).collect()),
    };
    let prose = match (&report.is_cocycle, &report.cohomology_class_trivial) {
        (false, _) => "not a 2-cocycle: the direction does not deform the operator".into(),
        (true, false) => "2-cocycle with nontrivial class: a genuine deformation direction".into(),
        (true, true) => format!(
            "2-cocycle with trivial class: equivalent to the unchanged operator\n  witness wedge coefficients: [{}]",
            report.witness_x.as_ref().expect("trivial class has witness").join(", ")
        ),
    };
    Ok(Outcome::value(&report, prose, false))
}

fn cmd_pipeline(operator: &str) -> trilie::Result<Outcome> {
    let op = load_operator(operator)?;
    let mut steps: Vec<StepReport> = Vec::new();
    let push = |steps: &mut Vec<StepReport>, step: &str, passed: bool, detail: String| {
        steps.push(StepReport {
            step: step.into(),
            passed,
            detail,
        });
        passed
    };

    let passed = 'chain: {
        let v = check_rb(&op)?;
        let detail = match &v.witness {
            Some(w) => format!("fails at {:?} ({})", w.indices, w.identity),
            None => format!("{} instances", v.checked),
        };
        if !push(&mut steps, "operator identity", v.passed, detail) {
            break 'chain false;
        }

        let graph = check_rb_via_graph(&op)?;
        if !push(
            &mut steps,
            "graph is a subalgebra of the semidirect product",
            graph,
            String::new(),
        ) {
            break 'chain false;
        }

        let desc = descendent_algebra(&op)?;
        let fi = desc.check_fundamental_identity();
        if !push(
            &mut steps,
            "descendent bracket satisfies the fundamental identity",
            fi.passed,
            format!("{} instances", fi.checked),
        ) {
            break 'chain false;
        }

        let p = post_lie_from_rb(&op)?;
        let axioms = check_post_lie(&p)?;
        if !push(
            &mut steps,
            "induced 3-post-Lie axioms",
            axioms.passed,
            format!("{} instances", axioms.checked),
        ) {
            break 'chain false;
        }

        let sub = subadjacent(&p)?;
        if !push(
            &mut steps,
            "subadjacent algebra equals the descendent algebra",
            sub.same_structure(&desc),
            String::new(),
        ) {
            break 'chain false;
        }

        let mc = mc_check(&op)?;
        if !push(&mut steps, "Maurer-Cartan equation", mc, String::new()) {
            break 'chain false;
        }

        let agree = coboundary_matches_twisted(&op)?;
        push(
            &mut steps,
            "operator coboundary matches the twisted differential",
            agree,
            String::new(),
        )
    };

    let report = PipelineReport { steps, passed };
    let mut prose = String::new();
    for s in &report.steps {
        let mark = if s.passed { "PASS" } else { "FAIL" };
        prose.push_str(&format!("[{mark}] {}", s.step));
        if !s.detail.is_empty() {
            prose.push_str(&format!(" ({})", s.detail));
        }
        prose.push('\n');
    }
    prose.push_str(if passed {
        "pipeline: PASS"
    } else {
        "pipeline: FAIL"
    });
    Ok(Outcome {
        prose,
        json: serde_json::to_value(&report)?,
        failed: !passed,
    })
}

/// `d_T f = l1^T f` on every basis 1-cochain (the degree where the sign
/// `(-1)^(n-1)` is `+1`).
fn coboundary_matches_twisted(op: &RBOperator) -> trilie::Result<bool> {
    let h_dim = op.action.h.dim();
    let g_dim = op.action.g.dim();
    for (slots, last) in cochain_keys(0, h_dim) {
        for target in 0..g_dim {
            let mut f = Cochain::zero(0, h_dim, g_dim);
            let mut v = vec![trilie::linalg::rint(0); g_dim];
            v[target] = trilie::linalg::rint(1);
            f.set_value(&slots, last, v)?;
            let lhs = d_t(op, &f, 1)?;
            let rhs = twisted_l1(op, &f)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cmd_catalog_list() -> trilie::Result<Outcome> {
    let list: Vec<CatalogListEntry> = catalog::entries()
        .iter()
        .map(|e| CatalogListEntry {
            name: e.name.into(),
            kind: e.kind.as_str().into(),
            description: e.description.into(),
        })
        .collect();
    let prose = list
        .iter()
        .map(|e| format!("{:<28} {:<9} {}", e.name, e.kind, e.description))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::value(&list, prose, false))
}

fn cmd_catalog_show(name: &str) -> trilie::Result<Outcome> {
    let entry = catalog::lookup(name)
        .ok_or_else(|| Error::Input(format!("no catalog entry named {name:?}")))?;
    let json: serde_json::Value = serde_json::from_str(entry.json)?;
    Ok(Outcome {
        prose: serde_json::to_string_pretty(&json)?,
        json,
        failed: false,
    })
}
