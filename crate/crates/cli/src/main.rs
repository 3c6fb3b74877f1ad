//! hnlab: exact tensor calculus and basic-class classification for almost
//! hypercomplex structures with Hermitian-Norden metrics on 4-dimensional
//! real Lie algebras.

mod registry;
mod render;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use hnlab_core::analysis::analyze;
use hnlab_core::curvature::Sign;
use hnlab_core::exactalg::{format_rational, parse_rational, Poly, Rational};
use hnlab_core::hnstruct::standard_frame;
use hnlab_core::liealg::{catalog, LieAlgebraSpec};
use hnlab_core::verify::{run_all, CheckStatus};

#[derive(Parser)]
#[command(
    name = "hnlab",
    version,
    about = "Exact tensor calculus and basic-class classification for almost \
             hypercomplex structures with Hermitian-Norden metrics on \
             4-dimensional real Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an algebra symbolically or at an exact parameter point
    Analyze(AnalyzeArgs),
    /// Re-check every pinned published value and theorem claim
    VerifyPaper(VerifyPaperArgs),
    /// Evaluate signs and minimal classes over a rational parameter grid
    Sweep(SweepArgs),
    /// List built-in and registered algebras, or register a new one
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Catalog name, registered name, or path to an algebra definition file
    #[arg(long)]
    algebra: String,
    /// Keep the parameters symbolic
    #[arg(long)]
    symbolic: bool,
    /// Exact value for the parameter `a` (forms: `2`, `-1/3`, `0.25`)
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Exact value for the parameter `b`
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Additional parameter assignment NAME=VALUE (repeatable)
    #[arg(long = "param", value_name = "NAME=VALUE", allow_hyphen_values = true)]
    params: Vec<String>,
    /// Emit the JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyPaperArgs {
    /// Emit JSON results instead of text
    #[arg(long)]
    json: bool,
    /// Print only the summary line and any non-passing checks
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Catalog name, registered name, or path to an algebra definition file
    #[arg(long)]
    algebra: String,
    /// First-parameter range lo:hi:step with exact rational entries
    #[arg(long = "a-range", value_name = "LO:HI:STEP", allow_hyphen_values = true)]
    a_range: String,
    /// Second-parameter range lo:hi:step
    #[arg(long = "b-range", value_name = "LO:HI:STEP", allow_hyphen_values = true)]
    b_range: String,
    /// Emit JSON rows instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    action: CatalogAction,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Show all available algebras with brackets and constraints
    List,
    /// Validate an algebra definition file and add it to the registry
    Add { file: PathBuf },
}

fn main() {
    // Die quietly when the consumer of stdout goes away (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(run());
}

fn exit_code(err: &hnlab_core::Error) -> i32 {
    match err {
        hnlab_core::Error::DomainViolation(_) => 3,
        hnlab_core::Error::JacobiViolation(..) => 4,
        _ => 2,
    }
}

fn fail(err: &hnlab_core::Error) -> i32 {
    eprintln!("error: {err}");
    exit_code(err)
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::VerifyPaper(args) => cmd_verify_paper(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Catalog(args) => cmd_catalog(args),
    }
}

/// Builds the parameter assignment from --a/--b/--param for the algebra's
/// parameter names.
fn assignment_from_flags(
    alg: &LieAlgebraSpec,
    args: &AnalyzeArgs,
) -> Result<BTreeMap<String, Rational>, String> {
    let mut asgn: BTreeMap<String, Rational> = BTreeMap::new();
    let mut put = |name: &str, text: &str| -> Result<(), String> {
        let value = parse_rational(text).map_err(|e| e.to_string())?;
        asgn.insert(name.to_string(), value);
        Ok(())
    };
    if let Some(a) = &args.a {
        put("a", a)?;
    }
    if let Some(b) = &args.b {
        put("b", b)?;
    }
    for entry in &args.params {
        let (name, value) = entry
            .split_once('=')
            .ok_or_else(|| format!("--param `{entry}` is not NAME=VALUE"))?;
        put(name.trim(), value.trim())?;
    }
    for name in alg.vars().names() {
        if !asgn.contains_key(name) {
            return Err(format!(
                "missing a value for parameter `{name}` (use --{name} or --param {name}=VALUE, or --symbolic)"
            ));
        }
    }
    Ok(asgn)
}

fn cmd_analyze(args: AnalyzeArgs) -> i32 {
    let alg = match registry::resolve(&args.algebra) {
        Ok(alg) => alg,
        Err(e) => return fail(&e),
    };
    if args.symbolic && (args.a.is_some() || args.b.is_some() || !args.params.is_empty()) {
        eprintln!("error: --symbolic excludes --a/--b/--param");
        return 2;
    }
    let at = if args.symbolic || alg.vars().is_empty() {
        None
    } else if args.a.is_none() && args.b.is_none() && args.params.is_empty() {
        eprintln!("error: give parameter values (--a/--b/--param) or --symbolic");
        return 2;
    } else {
        match assignment_from_flags(&alg, &args) {
            Ok(asgn) => Some(asgn),
            Err(msg) => {
                eprintln!("error: {msg}");
                return 2;
            }
        }
    };

    if args.json {
        match analyze(&alg, &standard_frame(), at.as_ref()) {
            Ok(report) => {
                println!("{}", report.to_json());
                0
            }
            Err(e) => fail(&e),
        }
    } else {
        let computed = match render::computed_for(&alg) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        if let Some(asgn) = &at {
            if let Err(e) = alg.check_constraints(asgn) {
                return fail(&e);
            }
        }
        match render::text_report(&alg, &computed, at.as_ref()) {
            Ok(text) => {
                print!("{text}");
                0
            }
            Err(e) => fail(&e),
        }
    }
}

fn cmd_verify_paper(args: VerifyPaperArgs) -> i32 {
    let report = match run_all() {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if args.json {
        let rows: Vec<serde_json::Value> = report
            .checks
            .iter()
            .map(|c| match &c.status {
                CheckStatus::Pass => serde_json::json!({"id": c.id, "status": "pass"}),
                CheckStatus::Discrepancy(d) => serde_json::json!({
                    "id": c.id,
                    "status": "discrepancy",
                    "published": d.published,
                    "computed": d.computed,
                    "corroborated_by": d.corroborated_by,
                }),
                CheckStatus::Fail { expected, computed } => serde_json::json!({
                    "id": c.id,
                    "status": "fail",
                    "expected": expected,
                    "computed": computed,
                }),
            })
            .collect();
        let summary = serde_json::json!({
            "total": report.total(),
            "passed": report.passed(),
            "failed": report.failed(),
            "discrepancies": report.discrepancies().len(),
            "checks": rows,
        });
        println!("{}", serde_json::to_string_pretty(&summary).unwrap());
    } else {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for c in &report.checks {
            match &c.status {
                CheckStatus::Pass => {
                    if !args.quiet {
                        let _ = writeln!(out, "PASS  {}", c.id);
                    }
                }
                CheckStatus::Discrepancy(d) => {
                    let _ = writeln!(
                        out,
                        "DISCREPANCY  {}: published `{}`, computed `{}`\n             corroborated by {}",
                        c.id, d.published, d.computed, d.corroborated_by
                    );
                }
                CheckStatus::Fail { expected, computed } => {
                    let _ = writeln!(
                        out,
                        "FAIL  {}: expected `{expected}`, computed `{computed}`",
                        c.id
                    );
                }
            }
        }
        let _ = writeln!(
            out,
            "{} checks passed, {} failed, {} source discrepancies reported (each printed with both values)",
            report.passed(),
            report.failed(),
            report.discrepancies().len()
        );
    }
    if report.all_green() {
        0
    } else {
        1
    }
}

fn parse_range(spec: &str) -> Result<Vec<Rational>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("range `{spec}` is not LO:HI:STEP"));
    }
    let lo = parse_rational(parts[0]).map_err(|e| e.to_string())?;
    let hi = parse_rational(parts[1]).map_err(|e| e.to_string())?;
    let step = parse_rational(parts[2]).map_err(|e| e.to_string())?;
    if step <= Rational::from_integer(0.into()) {
        return Err(format!("range `{spec}` has a nonpositive step"));
    }
    let mut out = Vec::new();
    let mut x = lo;
    while x <= hi {
        out.push(x.clone());
        x += &step;
    }
    if out.is_empty() {
        return Err(format!("range `{spec}` is empty"));
    }
    Ok(out)
}

fn cmd_sweep(args: SweepArgs) -> i32 {
    let alg = match registry::resolve(&args.algebra) {
        Ok(alg) => alg,
        Err(e) => return fail(&e),
    };
    if alg.vars().len() != 2 {
        eprintln!("error: sweep expects a two-parameter algebra");
        return 2;
    }
    let (a_values, b_values) = match (parse_range(&args.a_range), parse_range(&args.b_range)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let computed = match render::computed_for(&alg) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let names = alg.vars().names().to_vec();

    struct Row {
        a: Rational,
        b: Rational,
        tau: Sign,
        tau_ss: [Sign; 3],
        sectional: Vec<(String, Sign)>,
        classes: [String; 3],
    }

    let grid: Vec<(Rational, Rational)> = a_values
        .iter()
        .flat_map(|a| b_values.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let total = grid.len();

    // Points are independent; evaluate them in parallel.
    let results: Vec<Option<Row>> = grid
        .par_iter()
        .map(|(a, b)| {
            let asgn: BTreeMap<String, Rational> = [
                (names[0].clone(), a.clone()),
                (names[1].clone(), b.clone()),
            ]
            .into();
            if alg.check_constraints(&asgn).is_err() {
                return None;
            }
            let eval_sign = |p: &Poly| Sign::of(&p.eval(&asgn).expect("full assignment"));
            let tau = eval_sign(&computed.bundle.tau);
            let tau_ss = [
                eval_sign(&computed.bundle.tau_star_star[0]),
                eval_sign(&computed.bundle.tau_star_star[1]),
                eval_sign(&computed.bundle.tau_star_star[2]),
            ];
            let sectional: Vec<(String, Sign)> = computed
                .table
                .entries
                .iter()
                .map(|e| {
                    (
                        format!("k{}{}", e.plane.i, e.plane.j),
                        eval_sign(&e.value),
                    )
                })
                .collect();
            let classes = [
                computed.reports[0].minimal_at(&asgn).unwrap().to_string(),
                computed.reports[1].minimal_at(&asgn).unwrap().to_string(),
                computed.reports[2].minimal_at(&asgn).unwrap().to_string(),
            ];
            Some(Row {
                a: a.clone(),
                b: b.clone(),
                tau,
                tau_ss,
                sectional,
                classes,
            })
        })
        .collect();

    let rows: Vec<Row> = results.into_iter().flatten().collect();
    let skipped = total - rows.len();

    if args.json {
        let json_rows: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    names[0].clone(): format_rational(&r.a),
                    names[1].clone(): format_rational(&r.b),
                    "tau": r.tau.to_string(),
                    "tau_star_star": [r.tau_ss[0].to_string(), r.tau_ss[1].to_string(), r.tau_ss[2].to_string()],
                    "sectional": r.sectional.iter().map(|(k, s)| serde_json::json!({k.clone(): s.to_string()})).collect::<Vec<_>>(),
                    "classes": [r.classes[0].clone(), r.classes[1].clone(), r.classes[2].clone()],
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "algebra": alg.name(),
                "points": json_rows,
                "skipped": skipped,
            }))
            .unwrap()
        );
    } else {
        println!(
            "{:>8} {:>8}  tau  tau**1 tau**2 tau**3  k12 k13 k14 k23 k24 k34  J1 / J2 / J3",
            names[0], names[1]
        );
        for r in &rows {
            let ks: Vec<String> = r.sectional.iter().map(|(_, s)| format!("{s:>3}")).collect();
            println!(
                "{:>8} {:>8}  {:>3}  {:>6} {:>6} {:>6}  {}  {} / {} / {}",
                format_rational(&r.a),
                format_rational(&r.b),
                r.tau.to_string(),
                r.tau_ss[0].to_string(),
                r.tau_ss[1].to_string(),
                r.tau_ss[2].to_string(),
                ks.join(" "),
                r.classes[0],
                r.classes[1],
                r.classes[2]
            );
        }
        println!(
            "{} grid points evaluated, {} skipped by domain constraints",
            rows.len(),
            skipped
        );
    }
    0
}

fn cmd_catalog(args: CatalogArgs) -> i32 {
    match args.action {
        CatalogAction::List => {
            let mut specs: Vec<LieAlgebraSpec> =
                catalog::NAMES.iter().map(|n| catalog::get(n).unwrap()).collect();
            match registry::registered() {
                Ok(regs) => specs.extend(regs),
                Err(e) => {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
            for alg in &specs {
                println!("{}", alg.name());
                for (i, j, coeffs) in alg.bracket_entries() {
                    println!(
                        "  {}",
                        hnlab_core::analysis::bracket_string(i, j, &coeffs)
                    );
                }
                if !alg.constraints().is_empty() {
                    let cs: Vec<String> =
                        alg.constraints().iter().map(|c| c.to_string()).collect();
                    println!("  domain: {}", cs.join(", "));
                }
            }
            0
        }
        CatalogAction::Add { file } => match registry::add(&file) {
            Ok(name) => {
                println!("registered `{name}` in {}", registry::registry_dir().display());
                0
            }
            Err(registry::AddError::Duplicate(name)) => {
                eprintln!("error: an algebra named `{name}` already exists");
                2
            }
            Err(registry::AddError::Core(e)) => fail(&e),
            Err(registry::AddError::Io(msg)) => {
                eprintln!("error: {msg}");
                1
            }
        },
    }
}
