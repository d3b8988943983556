use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use artinx_core::artin::{Method, ReportOptions};
use artinx_core::sweep::{run_sweep_with, Enumerate, LatticeSource, SweepConfig};
use artinx_core::{build_group, build_mark_table, exponent_report, parse_group_spec, Family, GroupTable, SubgroupLattice};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

mod cache;
mod render;

use cache::LatticeCacheDir;

/// Burnside ring and Artin exponent computations for finite groups.
///
/// Group specs: C<n>, D<order>, Q<order>, SD<order>, S<n>, A<n>, H<p>,
/// products such as C2xC2xC4, or perm:(1 2),(1 2 3).
#[derive(Parser)]
#[command(name = "artinx", version)]
struct Cli {
    /// Directory for cached subgroup lattices.
    #[arg(long, global = true, env = "ARTINX_CACHE_DIR")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Artin exponent of a group.
    Compute {
        #[arg(long)]
        group: String,
        /// Family of subgroup classes.
        #[arg(long, value_enum, default_value = "cyclic", conflicts_with = "family_classes")]
        family: FamilyArg,
        /// Explicit family as comma-separated class indices.
        #[arg(long, value_delimiter = ',')]
        family_classes: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
        /// List every congruence pair and mark the binding ones.
        #[arg(long)]
        audit: bool,
        /// Cross-check counts for central cyclic U in V/U^p.
        #[arg(long)]
        central_reduction: bool,
    },
    /// Print the table of marks.
    Marks {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Run check suites over the built-in catalog.
    Sweep {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Comma-separated: cyclic,oddp,twogroup,conductor,lemmas,crossmethod,sylow,ring,invariance
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the sweep summary as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include per-group timings in the JSON output.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Both,
    Congruence,
    Marks,
}

/// Failures that map to a specific exit status.
enum Outcome {
    Ok,
    CheckFailed,
}

fn load(spec_text: &str, cache: Option<&LatticeCacheDir>) -> Result<(String, GroupTable, SubgroupLattice)> {
    let spec = parse_group_spec(spec_text).with_context(|| format!("cannot parse group `{spec_text}`"))?;
    let group = build_group(&spec)?;
    let lattice = match cache {
        Some(c) => c.lattice(&spec, &group)?,
        None => Enumerate.lattice(&spec, &group)?,
    };
    Ok((spec.to_string(), group, lattice))
}

fn run(cli: Cli) -> Result<Outcome> {
    let cache = cli.cache.map(LatticeCacheDir::new);
    match cli.command {
        Command::Compute { group, family: _, family_classes, method, json, audit, central_reduction } => {
            let (label, group, lattice) = load(&group, cache.as_ref())?;
            let family = match family_classes {
                Some(classes) => Family::ExplicitClasses(classes.into_iter().collect()),
                None => Family::AllCyclic,
            };
            let method = match method {
                MethodArg::Both => Method::Both,
                MethodArg::Congruence => Method::Congruence,
                MethodArg::Marks => Method::Marks,
            };
            let opts = ReportOptions { method, audit, central_reduction, sylow: true };
            let report = exponent_report(&label, &group, &lattice, &family, opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", render::exponent_report(&lattice, &report));
            }
            if !report.methods_agree {
                eprintln!(
                    "error: methods disagree: congruence {:?}, marks {:?}",
                    report.exponent_congruence, report.exponent_marks
                );
                return Ok(Outcome::CheckFailed);
            }
            Ok(Outcome::Ok)
        }
        Command::Marks { group, json } => {
            let (label, group, lattice) = load(&group, cache.as_ref())?;
            let table = build_mark_table(&group, &lattice);
            if json {
                let out = json!({
                    "schema": 1,
                    "group": label,
                    "class_orders": lattice.classes().iter().map(|c| c.order()).collect::<Vec<_>>(),
                    "class_labels": render::class_labels(&lattice),
                    "marks": table.m,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("table of marks for {label} (order {})", group.order());
                print!("{}", render::mark_table(&lattice, &table));
            }
            Ok(Outcome::Ok)
        }
        Command::Sweep { max_order, checks, jobs, json, timings } => {
            let mut config = SweepConfig::new(max_order)?.with_jobs(jobs);
            if let Some(text) = checks {
                config = config.with_checks(render::parse_checks(&text)?);
            }
            let start = Instant::now();
            let result = match &cache {
                Some(c) => run_sweep_with(&config, c)?,
                None => run_sweep_with(&config, &Enumerate)?,
            };
            let elapsed = start.elapsed();
            print!("{}", render::sweep_summary(&result));
            println!("elapsed {:.2}s with {} job(s)", elapsed.as_secs_f64(), config.jobs);
            if let Some(path) = json {
                let mut value = serde_json::to_value(&result)?;
                if timings {
                    value["timings"] = json!({
                        "total_ms": elapsed.as_millis() as u64,
                        "groups": result.groups.iter().map(|g| json!({"group": g.group, "ms": g.elapsed.as_secs_f64() * 1e3})).collect::<Vec<_>>(),
                    });
                }
                std::fs::write(&path, serde_json::to_string_pretty(&value)? + "\n")
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(if result.passed() { Outcome::Ok } else { Outcome::CheckFailed })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
