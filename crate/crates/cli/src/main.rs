//! `ttspec`: spectral-space properties, radical ideals and verification runs.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ttspec_core::dot;
use ttspec_core::format::SpaceFile;
use ttspec_core::order::DEFAULT_DOWN_SET_CAP;
use ttspec_core::topology;
use ttspec_core::tt::{self, RadicalIdealCount};
use ttspec_core::verify::{self, CheckResult, Scope, Statement};
use ttspec_core::{Error, SpaceExpr, SymbolicSubset};

#[derive(Parser)]
#[command(name = "ttspec", version, about = "Point-set topology of spectral spaces and tt-ideals")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    /// JSON with stable key names.
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Topological properties, finite-generation flags and witnesses.
    Props { file: PathBuf },
    /// Count or list the radical ideals.
    Ideals(IdealsArgs),
    /// Check one statement on a space file, the builtin catalog or small posets.
    Check(CheckArgs),
    /// Write the Hochster dual.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the Hasse diagram of a finite space.
    Hasse {
        file: PathBuf,
        /// Emit Graphviz DOT (the only supported format).
        #[arg(long, required = true)]
        dot: bool,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every statement on posets and the catalog, plus random posets.
    Verify {
        #[arg(long, default_value_t = 5)]
        posets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct IdealsArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "enumerate", required_unless_present = "enumerate")]
    count: bool,
    #[arg(long)]
    enumerate: bool,
    /// Largest number of points for enumeration.
    #[arg(long, default_value_t = DEFAULT_DOWN_SET_CAP)]
    cap: usize,
}

#[derive(Args)]
struct CheckArgs {
    /// `[FILE] STATEMENT`; FILE is omitted when using --builtin or --posets.
    #[arg(num_args = 1..=2, required = true, value_names = ["FILE", "STATEMENT"])]
    targets: Vec<String>,
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    /// All labeled posets with at most this many elements.
    #[arg(long)]
    posets: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Catalog,
}

enum Failure {
    Check,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Props { file } => props(cli.format, file),
        Command::Ideals(args) => ideals(cli.format, args),
        Command::Check(args) => check(cli.format, args),
        Command::Dual { file, output } => {
            SpaceFile::read(file)?.dual().write(output)?;
            Ok(())
        }
        Command::Hasse { file, output, .. } => {
            let text = dot::space_dot(&SpaceFile::read(file)?.space)?;
            match output {
                Some(path) => std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Verify { posets, seed } => {
            let results = verify::verify(*posets, *seed)?;
            report_checks(cli.format, &results)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn describe(e: &SpaceExpr, s: &SymbolicSubset) -> String {
    e.describe_subset(s).unwrap_or_else(|_| format!("{s:?}"))
}

fn props(format: Format, file: &Path) -> Result<(), Failure> {
    let file = SpaceFile::read(file)?;
    let e = file.space.normalize();
    let report = tt::cohen_report(&e)?;
    let p = &report.props;

    let count = match &report.radical_ideals {
        RadicalIdealCount::Finite(k) => k.to_string(),
        RadicalIdealCount::Infinite(_) => "infinite".into(),
    };
    let flags = [
        ("finite", p.is_finite),
        ("Noetherian", p.is_noetherian),
        ("inverse-Noetherian", p.is_inverse_noetherian),
        ("weakly-Noetherian", p.is_weakly_noetherian),
        ("every-radical-ideal-fg", report.every_radical_fg),
        ("every-prime-fg", report.every_prime_fg),
    ];

    let mut witnesses: Vec<(String, String)> = Vec::new();
    if let Some(chain) = &p.descending_chain {
        let members: Vec<String> = (0..3).map(|k| describe(&e, &chain.member(k))).collect();
        witnesses.push(("descending chain of closed sets".into(), format!("{} ⊋ …", members.join(" ⊋ "))));
    }
    if let Some(chain) = &p.inverse_descending_chain {
        let dual = e.dual();
        let members: Vec<String> = (0..3).map(|k| describe(&dual, &chain.member(k))).collect();
        witnesses.push(("descending chain of closed sets in the dual".into(), format!("{} ⊋ …", members.join(" ⊋ "))));
    }
    for w in &p.visibility {
        let class = e.describe_class(&w.class);
        let text = match (&w.visible, &w.pair) {
            (true, Some((w1, w2))) => format!("weakly visible: W1 = {}, W2 = {}", describe(&e, w1), describe(&e, w2)),
            (true, None) => "weakly visible (locally closed in the dual)".into(),
            (false, _) => "not weakly visible".into(),
        };
        witnesses.push((format!("point {class}"), text));
    }
    if let Some(ideal) = &report.non_fg_radical {
        witnesses.push(("radical ideal not finitely generated".into(), format!("support {}", describe(&e, ideal.support()))));
    }
    if let Some(prime) = &report.non_fg_prime {
        witnesses.push((
            "prime not finitely generated".into(),
            format!("at {}, support {}", e.describe_point(prime.point()), describe(&e, &prime.support())),
        ));
    }

    let mut subset_rows = Vec::new();
    for (name, s) in &file.subsets {
        subset_rows.push((
            name.clone(),
            describe(&e, s),
            [
                ("open", topology::is_open(&e, s)?),
                ("closed", topology::is_closed(&e, s)?),
                ("quasi-compact-open", topology::is_quasi_compact_open(&e, s)?),
                ("thomason", topology::is_thomason(&e, s)?),
                ("constructible", topology::is_constructible(&e, s)?),
                ("weakly-visible", topology::is_weakly_visible(&e, s)?),
            ],
        ));
    }

    match format {
        Format::Table => {
            println!("space: {e:?}");
            for (k, v) in &flags {
                println!("  {k:<24} {}", yes_no(*v));
            }
            println!("  {:<24} {count}", "radical-ideals");
            println!("witnesses:");
            for (k, v) in &witnesses {
                println!("  {k}: {v}");
            }
            for (name, text, flags) in &subset_rows {
                println!("subset {name} = {text}");
                for (k, v) in flags {
                    println!("  {k:<24} {}", yes_no(*v));
                }
            }
        }
        Format::Structured => {
            let mut properties: serde_json::Map<String, Value> =
                flags.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            properties.insert("radical-ideals".into(), json!(count));
            let subsets: serde_json::Map<String, Value> = subset_rows
                .iter()
                .map(|(name, text, fl)| {
                    let mut m = serde_json::Map::new();
                    m.insert("subset".into(), json!(text));
                    for (k, v) in fl {
                        m.insert(k.to_string(), json!(v));
                    }
                    (name.clone(), Value::Object(m))
                })
                .collect();
            let out = json!({
                "space": format!("{e:?}"),
                "properties": properties,
                "witnesses": witnesses.iter().map(|(k, v)| json!({"kind": k, "value": v})).collect::<Vec<_>>(),
                "subsets": subsets,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
        }
    }
    Ok(())
}

fn ideals(format: Format, args: &IdealsArgs) -> Result<(), Failure> {
    let file = SpaceFile::read(&args.file)?;
    let e = file.space.normalize();
    if args.count {
        match tt::count_radical_ideals(&e)? {
            RadicalIdealCount::Finite(k) => match format {
                Format::Table => println!("{k}"),
                Format::Structured => println!("{}", json!({"count": k.to_string()})),
            },
            RadicalIdealCount::Infinite(family) => {
                let heads: Vec<String> = (0..3).map(|k| describe(&e, &family.support(k))).collect();
                match format {
                    Format::Table => {
                        println!("infinite");
                        for h in &heads {
                            println!("  support {h}");
                        }
                        println!("  …");
                    }
                    Format::Structured => println!("{}", json!({"count": "infinite", "witnesses": heads})),
                }
            }
        }
        return Ok(());
    }
    let poset = dot::finite_poset(&e, "enumerating radical ideals")?;
    let supports: Vec<String> = poset
        .down_sets(args.cap)?
        .map(|d| {
            let labels: Vec<&str> = d.iter().map(|i| poset.label(i)).collect();
            format!("{{{}}}", labels.join(", "))
        })
        .collect();
    match format {
        Format::Table => {
            for s in &supports {
                println!("{s}");
            }
        }
        Format::Structured => println!("{}", json!({"count": supports.len().to_string(), "supports": supports})),
    }
    Ok(())
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, msg).exit()
}

fn check(format: Format, args: &CheckArgs) -> Result<(), Failure> {
    let (file, statement) = match args.targets.as_slice() {
        [statement] => (None, statement),
        [file, statement] => (Some(file), statement),
        _ => unreachable!("clap enforces one or two values"),
    };
    let statement: Statement = statement.parse().unwrap_or_else(|e: Error| usage_error(e));
    let scope = match (file, args.builtin, args.posets) {
        (Some(path), None, None) => {
            let file = SpaceFile::read(path)?;
            Scope::Spaces(vec![(path.clone(), file.space, file.expected)])
        }
        (Some(_), _, _) => usage_error("give either a space file or --builtin/--posets, not both"),
        (None, Some(Builtin::Catalog), Some(n)) => Scope::Both(n),
        (None, Some(Builtin::Catalog), None) => Scope::Catalog,
        (None, None, Some(n)) => Scope::Posets(n),
        (None, None, None) => usage_error("nothing to check: give a space file, --builtin catalog or --posets N"),
    };
    let result = verify::check_statement(statement, &scope)?;
    report_checks(format, std::slice::from_ref(&result))
}

fn report_checks(format: Format, results: &[CheckResult]) -> Result<(), Failure> {
    match format {
        Format::Table => {
            println!("{:<22} {:>10} {:>9} {:>10}  result", "statement", "instances", "failures", "seconds");
            for r in results {
                println!(
                    "{:<22} {:>10} {:>9} {:>10.3}  {}",
                    r.statement,
                    r.instances,
                    r.failures.len(),
                    r.elapsed.as_secs_f64(),
                    if r.passed() { "pass" } else { "FAIL" }
                );
                if let Some(f) = r.failures.first() {
                    println!("  first failure: {}", f.instance);
                    println!("    expected {}", f.expected);
                    println!("    actual   {}", f.actual);
                }
            }
        }
        Format::Structured => {
            let out: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "statement": r.statement,
                        "instances": r.instances,
                        "failures": r.failures.iter().map(|f| json!({
                            "instance": f.instance,
                            "expected": f.expected,
                            "actual": f.actual,
                        })).collect::<Vec<_>>(),
                        "elapsed_seconds": r.elapsed.as_secs_f64(),
                        "passed": r.passed(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
        }
    }
    if results.iter().all(CheckResult::passed) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
