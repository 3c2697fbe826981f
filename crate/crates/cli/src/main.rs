//! `fibercone` command-line front end.
//!
//! Exit codes: 0 success, 1 analysis error, 2 usage or I/O error,
//! 3 verification failure.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fibercone::algebra::{analyze, AnalyzeOptions};
use fibercone::covers::enumerate_basic_with;
use fibercone::drawing::gdim_with;
use fibercone::generate::{generate, GraphSpec};
use fibercone::hilbert::{hilbert_function_with, DEFAULT_WINDOW};
use fibercone::hypergraph::{
    degree_bounds, degree_bounds_check_with, enumerate_basic_h_with, hyper_counts, DEFAULT_BOX_BUDGET,
};
use fibercone::lattice::build_lattice;
use fibercone::verify::{run, run_all, CRITERIA};
use fibercone::{BipartiteGraph, Error, Exec, WeightedHypergraph};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "fibercone", version, about = "Vertex-cover algebra invariants of bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: available parallelism; 1 runs sequentially).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Source {
    /// Graph file (`-` for stdin).
    input: Option<PathBuf>,
    /// Generate the graph instead, e.g. `cycle:6`, `caterpillar:4,6,6`, `random:4,5,0.5`.
    #[arg(long = "gen", value_name = "SPEC", conflicts_with = "input")]
    generator: Option<String>,
    /// Seed for random generators.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full algebra report, with the gdim witness and the lattice when unmixed.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        /// Largest multiset size for the zero-divisor search.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
        m_max: u64,
        /// Trailing window for the finite-difference stabilisation.
        #[arg(long, default_value_t = DEFAULT_WINDOW as u64, value_parser = clap::value_parser!(u64).range(2..))]
        window: u64,
        /// Also report the degree bound with the sides exchanged.
        #[arg(long)]
        degree_extension: bool,
    },
    /// Basic k-covers.
    Covers {
        #[command(flatten)]
        source: Source,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Graphical dimension with a witness drawing.
    Gdim {
        #[command(flatten)]
        source: Source,
        /// Include a two-row rendering of the witness drawing.
        #[arg(long)]
        render: bool,
    },
    /// Hilbert function, dimension and multiplicity estimates.
    Hilbert {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        #[arg(long, default_value_t = DEFAULT_WINDOW as u64, value_parser = clap::value_parser!(u64).range(2..))]
        window: u64,
    },
    /// Lattice of basic 1-covers of an unmixed graph.
    Lattice {
        #[command(flatten)]
        source: Source,
    },
    /// Weighted hypergraph: basic-cover counts and the growth-degree bounds.
    Hypergraph {
        /// Hypergraph file (`-` for stdin).
        input: PathBuf,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        /// List the basic k-covers for this k instead.
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_WINDOW as u64, value_parser = clap::value_parser!(u64).range(2..))]
        window: u64,
        /// Cap on the enumeration box volume.
        #[arg(long, default_value_t = DEFAULT_BOX_BUDGET, value_parser = clap::value_parser!(u128))]
        budget: u128,
    },
    /// Write a generated graph in the text format.
    Gen {
        /// Generator spec, e.g. `path:6`, `whisker-path:3`, `random-tree:10`.
        spec: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (default stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Verify {
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=CRITERIA as u64))]
        criterion: Option<u64>,
    },
}

/// Failure classes, each with its own exit code.
enum Failure {
    Usage(anyhow::Error),
    Analysis(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Analysis(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Analysis(e)) => {
            eprintln!("analysis error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(3),
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let exec = match cli.workers {
        Some(1) => Exec::Sequential,
        Some(n) => {
            configure_pool(n as usize).map_err(Failure::Usage)?;
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    run_command(cli.command, cli.format, exec)
}

#[cfg(feature = "parallel")]
fn configure_pool(n: usize) -> anyhow::Result<()> {
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the worker pool")
}

#[cfg(not(feature = "parallel"))]
fn configure_pool(_: usize) -> anyhow::Result<()> {
    Ok(())
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(src: &Source) -> Result<BipartiteGraph, Failure> {
    match (&src.input, &src.generator) {
        (Some(path), None) => {
            let text = read_input(path).map_err(Failure::Usage)?;
            Ok(BipartiteGraph::parse(&text)?)
        }
        (None, Some(spec)) => build(spec, src.seed),
        _ => Err(Failure::Usage(anyhow!("give a graph file or --gen SPEC"))),
    }
}

/// Generator problems are usage errors: the graph never existed.
fn build(spec: &str, seed: Option<u64>) -> Result<BipartiteGraph, Failure> {
    let usage = |e: Error| Failure::Usage(anyhow!(e).context(format!("generator `{spec}`")));
    let parsed: GraphSpec = spec.parse().map_err(usage)?;
    let parsed = match seed {
        Some(s) => parsed.with_seed(s),
        None => parsed,
    };
    generate(&parsed).map_err(usage)
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) -> Result<(), Failure> {
    let out = match format {
        Format::Json => serde_json::to_string(value).expect("reports serialise") + "\n",
        Format::Text => text(),
    };
    io::stdout().write_all(out.as_bytes()).map_err(|e| Failure::Usage(anyhow!(e).context("writing output")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialise")
}

fn run_command(command: Command, format: Format, exec: Exec) -> Result<(), Failure> {
    match command {
        Command::Analyze { source, kmax, m_max, window, degree_extension } => {
            let g = load_graph(&source)?;
            let opts = AnalyzeOptions { kmax, m_max: m_max as usize, window: window as usize, degree_extension, exec };
            let report = analyze(&g, &opts)?;
            let witness = gdim_with(&g, exec)?.report();
            let lattice = if report.unmixed { Some(build_lattice(&g)?.report()) } else { None };
            let mut v = to_value(&report);
            v["gdim_witness"] = to_value(&witness);
            v["lattice"] = to_value(&lattice);
            emit(format, &v, || {
                let mut s = format!(
                    "n = {} (a = {}, b = {})\nwsc = {}, domain = {}, unmixed = {}\nbasic 1-covers = {}\nHF(1..{kmax}) = {:?}\n",
                    report.n, report.a, report.b, report.wsc, report.domain, report.unmixed,
                    report.basic_one_covers, report.hilbert.counts
                );
                match (report.dim_estimate, report.dim_range) {
                    (Some(d), _) => s += &format!("dim = {d}, multiplicity = {}\n", report.multiplicity_estimate.unwrap()),
                    (None, Some([lo, hi])) => s += &format!("unstable: {lo} <= dim <= {hi}\n"),
                    _ => {}
                }
                s += &format!("gdim = {}\n", report.gdim);
                s += &format!(
                    "dim upper bounds: a+1 = {}, a-s+2 = {}\n",
                    report.dim_upper_bounds.a_plus_one, report.dim_upper_bounds.degree.bound
                );
                if let Some(w) = &report.zero_divisor_witness {
                    s += &format!("zero-divisor witness: {w:?}\n");
                }
                if let Some(r) = report.lattice_rank {
                    s += &format!("lattice rank = {r}, maximal chains = {}\n", report.lattice_maximal_chains.as_deref().unwrap_or("?"));
                }
                let bounds: Vec<String> =
                    report.ara_upper_bounds.iter().map(|b| format!("{} ({})", b.bound, b.provenance)).collect();
                s += &format!("ara <= {} from {}\n", report.ara_upper_bound, bounds.join(", "));
                s
            })
        }
        Command::Covers { source, k, count } => {
            let g = load_graph(&source)?;
            let set = enumerate_basic_with(&g, k, exec)?;
            let v = if count { json!({ "k": k, "count": set.count() }) } else { to_value(&set) };
            emit(format, &v, || {
                let mut s = format!("{} basic {k}-covers\n", set.count());
                if !count {
                    for c in &set.covers {
                        s += &format!("{c}\n");
                    }
                }
                s
            })
        }
        Command::Gdim { source, render } => {
            let g = load_graph(&source)?;
            let res = gdim_with(&g, exec)?;
            let mut v = to_value(&res.report());
            if render {
                v["rendering"] = Value::String(res.drawing.render(&g));
            }
            emit(format, &v, || {
                let mut s = format!("{}\n", res.gdim);
                if render {
                    s += &res.drawing.render(&g);
                }
                s
            })
        }
        Command::Hilbert { source, kmax, window } => {
            let g = load_graph(&source)?;
            let p = hilbert_function_with(&g, kmax, window as usize, exec)?;
            emit(format, &to_value(&p), || {
                let mut s = format!("HF(1..{kmax}) = {:?}\n", p.counts);
                match (p.dim, p.dim_range) {
                    (Some(d), _) => s += &format!("dim = {d}, multiplicity = {}\n", p.multiplicity.unwrap()),
                    (None, Some([lo, hi])) => s += &format!("unstable: {lo} <= dim <= {hi}\n"),
                    _ => {}
                }
                s
            })
        }
        Command::Lattice { source } => {
            let g = load_graph(&source)?;
            let report = build_lattice(&g)?.report();
            emit(format, &to_value(&report), || {
                let mut s = format!(
                    "{} elements, rank {}, {} maximal chains\n",
                    report.elements.len(),
                    report.rank,
                    report.maximal_chain_count
                );
                for (i, e) in report.elements.iter().enumerate() {
                    s += &format!("{i}: {e:?}\n");
                }
                for [lo, hi] in &report.hasse {
                    s += &format!("{lo} < {hi}\n");
                }
                s
            })
        }
        Command::Hypergraph { input, kmax, k, window, budget } => {
            let text = read_input(&input).map_err(Failure::Usage)?;
            let h = WeightedHypergraph::parse(&text)?;
            if let Some(k) = k {
                let set = enumerate_basic_h_with(&h, k, exec, budget)?;
                return emit(format, &to_value(&set), || {
                    let mut s = format!("{} basic {k}-covers\n", set.count());
                    for c in &set.covers {
                        s += &format!("{c}\n");
                    }
                    s
                });
            }
            let v = match degree_bounds_check_with(&h, kmax, window as usize, exec, budget) {
                Ok(r) => {
                    let mut v = to_value(&r);
                    v["stable"] = Value::Bool(true);
                    v
                }
                Err(Error::Unstable { .. }) => {
                    let (lower, upper) = degree_bounds(&h);
                    json!({
                        "n": h.n(),
                        "max_face_size": h.max_face_size(),
                        "counts": hyper_counts(&h, kmax, exec, budget)?,
                        "stable": false,
                        "lower": lower,
                        "upper": upper,
                    })
                }
                Err(e) => return Err(e.into()),
            };
            emit(format, &v, || {
                let mut s = format!("counts(1..{kmax}) = {}\n", v["counts"]);
                if v["stable"] == true {
                    s += &format!(
                        "degree = {} (period {}), bounds {} <= deg <= {}: {}\n",
                        v["degree"], v["period"], v["lower"], v["upper"],
                        if v["within_bounds"] == true { "within" } else { "outside" }
                    );
                } else {
                    s += &format!("unstable up to k = {kmax}; bounds {} <= deg <= {}\n", v["lower"], v["upper"]);
                }
                s
            })
        }
        Command::Gen { spec, seed, output } => {
            let g = build(&spec, seed)?;
            let text = g.to_text();
            match output {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(Failure::Usage),
                None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.into())),
            }
        }
        Command::Verify { criterion } => {
            let results = match criterion {
                Some(id) => vec![run(id as usize, exec)],
                None => run_all(exec),
            };
            emit(format, &to_value(&results), || results.iter().map(|r| format!("{r}\n")).collect())?;
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}
