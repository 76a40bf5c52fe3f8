//! `eqdom`: generate graphs, compute coloring invariants, build and verify
//! equitable dominator colorings, and survey closed forms against the solver.
//!
//! Exit codes: 0 success or valid, 1 input error or invalid coloring,
//! 2 budget exhausted, 3 internal invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use eqdom::constructions::construct;
use eqdom::io::{read_coloring, read_graph, write_coloring, write_graph};
use eqdom::partitions::{equitable_pair_direct, min_equitable_pair, EquitablePair, PARTITION_CAP};
use eqdom::survey::{parse_families, run_bound_chain, run_survey, SurveyConfig, DEFAULT_SEED};
use eqdom::{solve, validate, Budget, ConstraintSet, FamilyKind, GraphClassSpec, SolveError};

const EXIT_INVALID: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "eqdom",
    version,
    about = "Equitable dominator colorings of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a named graph.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute χ, χ_e, χ_d or χ_ed of a graph file.
    Chromatic {
        graph: PathBuf,
        #[arg(long, default_value = "chi-ed")]
        invariant: ConstraintSet,
        /// Search node budget.
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        budget: u64,
        /// Write the witness coloring here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring; prints a JSON report and exits 0 iff it is an
    /// equitable dominator coloring.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Build the explicit coloring of a named graph and verify it.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// χ_ed of K_{a,b} with an optimal pair of equitable partitions.
    Bipartite { a: usize, b: usize },
    /// Compare closed forms with the exact solver over a family grid.
    Survey {
        /// Comma-separated families, e.g. `path,complement-cycle`, or `all`.
        #[arg(long, default_value = "all")]
        families: String,
        #[arg(long, default_value_t = 1)]
        min_size: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check χ ≤ χ_e ≤ χ_ed and χ ≤ χ_d ≤ χ_ed on seeded random connected graphs.
    Bounds {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        budget: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct SpecArgs {
    /// Use the complement of the named graph.
    #[arg(long)]
    complement: bool,
    /// path, cycle, complete, complete-bipartite, bistar, wheel or helm.
    family: FamilyKind,
    #[arg(required = true)]
    params: Vec<usize>,
}

impl SpecArgs {
    fn spec(&self) -> Result<GraphClassSpec> {
        let family = self.family.with_params(&self.params)?;
        Ok(GraphClassSpec {
            family,
            complement: self.complement,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<eqdom::Graph> {
    read_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { spec, out } => {
            let g = spec.spec()?.build()?;
            emit(out.as_deref(), &write_graph(&g))?;
            Ok(0)
        }
        Command::Chromatic {
            graph,
            invariant,
            budget,
            out,
        } => {
            let g = load_graph(&graph)?;
            match solve(&g, invariant, Budget::nodes(budget)) {
                Ok(r) => {
                    println!("{invariant} = {}", r.value);
                    if let Some(path) = out {
                        emit(Some(&path), &write_coloring(&r.witness))?;
                    }
                    Ok(0)
                }
                Err(SolveError::BudgetExhausted {
                    lower,
                    upper,
                    nodes,
                }) => {
                    eprintln!(
                        "budget exhausted after {nodes} nodes: {lower} ≤ {invariant} ≤ {upper}"
                    );
                    Ok(EXIT_BUDGET)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { graph, coloring } => {
            let g = load_graph(&graph)?;
            let c = read_coloring(&read(&coloring)?)
                .with_context(|| format!("parsing {}", coloring.display()))?;
            let report = validate(&g, &c)?;
            print!("{}", report.to_json());
            Ok(if report.equitable_dominator {
                0
            } else {
                EXIT_INVALID
            })
        }
        Command::Construct { spec, out } => {
            let spec = spec.spec()?;
            let coloring = construct(&spec)?;
            let report = validate(&spec.build()?, &coloring)?;
            if !report.equitable_dominator {
                eprintln!("internal error: constructed coloring of {spec} fails verification");
                eprint!("{}", report.to_json());
                return Ok(EXIT_INTERNAL);
            }
            let summary = format!("{spec}: {} colors", coloring.num_colors());
            match out {
                Some(path) => {
                    emit(Some(&path), &write_coloring(&coloring))?;
                    println!("{summary}");
                }
                None => {
                    print!("{}", write_coloring(&coloring));
                    eprintln!("{summary}");
                }
            }
            Ok(0)
        }
        Command::Bipartite { a, b } => {
            if a == 0 || b == 0 {
                bail!("both sides need at least one vertex");
            }
            let pair = if a + b <= PARTITION_CAP {
                min_equitable_pair(a, b)?
            } else {
                equitable_pair_direct(a, b)
            };
            print_pair(a, b, &pair);
            Ok(0)
        }
        Command::Survey {
            families,
            min_size,
            max_size,
            budget,
            format,
            out,
        } => {
            let families = parse_families(&families).map_err(anyhow::Error::msg)?;
            if families.is_empty() {
                bail!("no families given");
            }
            let report = run_survey(&SurveyConfig {
                families,
                min_size,
                max_size,
                budget,
            });
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Bounds {
            count,
            max_n,
            seed,
            budget,
            out,
        } => {
            if max_n == 0 {
                bail!("--max-n must be at least 1");
            }
            let report = run_bound_chain(count, max_n, seed, budget);
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            emit(out.as_deref(), &text)?;
            eprintln!(
                "{} graphs, {} violations, {} unknown",
                report.graphs, report.violations, report.unknown
            );
            Ok(if report.violations > 0 {
                EXIT_INTERNAL
            } else if report.unknown > 0 {
                EXIT_BUDGET
            } else {
                0
            })
        }
    }
}

fn print_pair(a: usize, b: usize, pair: &EquitablePair) {
    let join = |parts: &[usize]| {
        parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("+")
    };
    println!("chi-ed(K_{{{a},{b}}}) = {}", pair.color_count());
    println!("{a} = {}", join(pair.part_a.parts()));
    println!("{b} = {}", join(pair.part_b.parts()));
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
