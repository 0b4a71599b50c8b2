use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use srgdim::export::{render, Format};
use srgdim::harness::{analyze, sweep, AnalyzeOptions, CaseFilter, OracleOutcome, VerificationReport};
use srgdim::{Execution, RingSpec};

#[derive(Parser, Debug)]
#[command(name = "srgdim", version, about = "Strong metric dimension of intersection graphs of ideals")]
struct Cli {
    /// Maximum number of vertices of G(R) to build.
    #[arg(long, global = true, default_value_t = 512)]
    vertex_budget: usize,

    /// Largest graph handed to the brute-force oracles.
    #[arg(long, global = true, default_value_t = 12)]
    oracle_cap: usize,

    /// Search-node limit for the exact independent-set solver.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    solver_node_budget: u64,

    /// Run on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one ring, e.g. `--ring 2,2`.
    Analyze {
        #[arg(long)]
        ring: RingSpec,
        /// Also run the brute-force strong/plain metric dimension oracles.
        #[arg(long)]
        oracle: bool,
        /// Write G_SR as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Analyze every canonical ring up to a vertex count.
    Sweep {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long = "case", value_enum, default_value_t = CaseArg::All)]
        case: CaseArg,
        /// JSONL output, one report per line.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV summary.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write G(R) or G_SR as DOT or JSON.
    Export {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CaseArg {
    Reduced,
    Nonreduced,
    Mixed,
    All,
}

impl From<CaseArg> for CaseFilter {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Reduced => CaseFilter::Reduced,
            CaseArg::Nonreduced => CaseFilter::Nonreduced,
            CaseArg::Mixed => CaseFilter::Mixed,
            CaseArg::All => CaseFilter::All,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Base,
    Srg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a must-hold claim failed.
fn run(cli: Cli) -> Result<bool> {
    let opts = AnalyzeOptions {
        vertex_budget: cli.vertex_budget,
        oracle_cap: cli.oracle_cap,
        solver_node_budget: cli.solver_node_budget,
        run_oracle: false,
        execution: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
    };
    match cli.command {
        Command::Analyze {
            ring,
            oracle,
            dot,
            json,
        } => {
            let opts = AnalyzeOptions {
                run_oracle: oracle,
                ..opts
            };
            let analysis = analyze(&ring, &opts)?;
            print_report(&analysis.report);
            if let Some(path) = dot {
                let name = format!("G_SR {ring}");
                write(&path, &render(&ring, &name, &analysis.srg.srg, Format::Dot))?;
            }
            if let Some(path) = json {
                let mut text = serde_json::to_string_pretty(&analysis.report)?;
                text.push('\n');
                write(&path, &text)?;
            }
            Ok(analysis.report.must_hold_failures().is_empty())
        }
        Command::Sweep {
            max_vertices,
            case,
            out,
            csv,
        } => {
            let outcome = sweep(max_vertices, case.into(), &opts);
            write(&out, &outcome.to_jsonl())?;
            if let Some(path) = csv {
                let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                outcome.write_csv(file)?;
            }
            println!("{} specs, {} errors", outcome.records.len(), outcome.errors());
            println!("{:<6} {:>6} {:>6} {:>6} {:>10}", "claim", "pass", "fail", "n/a", "convention");
            for (id, t) in outcome.tally() {
                println!(
                    "{:<6} {:>6} {:>6} {:>6} {:>10}",
                    id.to_string(),
                    t.pass,
                    t.fail,
                    t.not_applicable,
                    t.convention
                );
            }
            if outcome.errors() > 0 {
                anyhow::bail!("{} specs failed to analyze", outcome.errors());
            }
            Ok(!outcome.any_must_hold_failure())
        }
        Command::Export {
            ring,
            what,
            format,
            out,
        } => {
            let analysis = analyze(&ring, &opts)?;
            let (name, graph) = match what {
                What::Base => (format!("G(R) {ring}"), &analysis.ideal_graph.graph),
                What::Srg => (format!("G_SR {ring}"), &analysis.srg.srg),
            };
            write(&out, &render(&ring, &name, graph, format.into()))?;
            Ok(true)
        }
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn print_report(r: &VerificationReport) {
    let c = &r.computed;
    let p = &r.predicted;
    let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
    println!("ring {}  case {:?}", r.spec, p.case_tag);
    println!(
        "  |V| {}  diameter {}  G_SR edges {}  MMD support {}  components {:?}",
        c.vertex_count, c.diameter, c.srg_edge_count, c.mmd_support_size, c.srg_component_sizes
    );
    println!(
        "  beta {} (predicted {})  sdim {} (predicted {})",
        c.beta,
        opt(p.predicted_beta),
        c.sdim,
        opt(p.predicted_sdim)
    );
    for check in &r.claim_checks {
        println!("  {} {:<14} {}", check.claim_id, check.status.to_string(), check.detail);
    }
    match &r.oracle {
        Some(OracleOutcome::Ran {
            brute_sdim,
            brute_dim_m,
            agreement,
            ..
        }) => println!("  oracle: sdim {brute_sdim}, dim_M {brute_dim_m}, agrees {agreement}"),
        Some(OracleOutcome::NotApplicable { reason }) => println!("  oracle: not applicable ({reason})"),
        None => {}
    }
}
