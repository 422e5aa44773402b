mod cache;
mod config;
mod export;
mod render;
mod verify;

use anyhow::{Context, Result};
use cache::Cache;
use clap::{Args, Parser, Subcommand, ValueEnum};
use config::{read_diagram_file, DiagramSpec, Problem, RunConfig};
use ncp_core::ExactPipeline;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "ncph", version, about = "Non-crossing partition lattices, X(c) and generic slices of reflection arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, h, |W|, |T|, s and the root order.
    Info {
        #[command(flatten)]
        common: Common,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run invariant suites; exits 1 on failure, 3 if a budget is exceeded.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run every suite.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// Run one suite (repeatable).
        #[arg(long)]
        suite: Vec<String>,
    },
    /// Draw a rank-3 SVG.
    Render {
        #[command(flatten)]
        common: Common,
    },
    /// Write a JSON document.
    Export {
        target: Target,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Ncp,
    Xc,
    Lattice,
    Embed,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Ncp => "ncp",
            Target::Xc => "xc",
            Target::Lattice => "lattice",
            Target::Embed => "embed",
        }
    }
}

#[derive(Args)]
struct Common {
    /// Type letter: A, B, C, D, E, F, H, or I<m> for dihedral groups.
    #[arg(value_name = "TYPE")]
    kind: String,
    rank: usize,
    /// Diagram file (`type=B rank=3` or `m = [[1,3,2],[3,1,4],[2,4,1]]`).
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Output directory; also holds the cache.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "N", default_value_t = ncp_core::arrangement::DEFAULT_LAMBDA_DENOMINATOR)]
    lambda_denom: u32,
    #[arg(long)]
    no_cache: bool,
    /// Put the other color class of the Coxeter graph first.
    #[arg(long)]
    swap_bipartition: bool,
    #[arg(long, value_name = "N", default_value_t = ncp_core::coxeter::DEFAULT_GROUP_CAP)]
    group_cap: usize,
    #[arg(long, value_name = "N", default_value_t = ncp_core::complexes::DEFAULT_SIMPLEX_BUDGET)]
    simplex_budget: usize,
}

impl Common {
    fn config(&self) -> Result<RunConfig> {
        let mut problem = Problem::new(&self.kind, self.rank);
        if let Some(path) = &self.matrix {
            match read_diagram_file(path)? {
                DiagramSpec::Type { kind, rank } => problem = Problem::new(&kind, rank),
                DiagramSpec::Matrix(m) => problem.matrix = Some(m),
            }
        }
        problem.swap_bipartition = self.swap_bipartition;
        problem.lambda_denominator = self.lambda_denom;
        problem.group_cap = self.group_cap;
        problem.simplex_budget = self.simplex_budget;
        Ok(RunConfig {
            problem,
            out_dir: self.out.clone().unwrap_or_else(|| PathBuf::from(".")),
            use_cache: !self.no_cache && self.out.is_some(),
        })
    }

    fn writes_files(&self) -> bool {
        self.out.is_some()
    }
}

fn build(config: &RunConfig) -> Result<ExactPipeline> {
    let diagram = config.problem.diagram()?;
    let p = ExactPipeline::build(&diagram, &config.problem.options())?;
    if config.use_cache {
        Cache::open(&config.out_dir, &config.problem).store_system(&config.problem, &p)?;
    }
    Ok(p)
}

fn file_label(config: &RunConfig) -> Result<String> {
    let label = config.problem.diagram()?.label().to_string();
    Ok(label.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect::<String>().trim_end_matches('_').to_string())
}

/// Produces `name` from the cache or by `make`, and stores fresh results.
fn cached(config: &RunConfig, name: &str, make: impl FnOnce() -> Result<String>) -> Result<String> {
    let cache = Cache::open(&config.out_dir, &config.problem);
    if config.use_cache {
        if let Some(hit) = cache.get(name) {
            return Ok(hit);
        }
    }
    let text = make()?;
    if config.use_cache {
        cache.put(name, &text)?;
    }
    Ok(text)
}

fn emit(common: &Common, config: &RunConfig, file: &str, text: &str) -> Result<()> {
    if common.writes_files() {
        std::fs::create_dir_all(&config.out_dir)?;
        let path = config.out_dir.join(file);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    } else {
        print!("{text}");
    }
    Ok(())
}

fn info_text(p: &ExactPipeline) -> String {
    let sys = &p.system;
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("type {}", sys.input_diagram().label()));
    line(format!("n={} h={} |W|={} |T|={} s={}", sys.rank(), sys.coxeter_number(), sys.group().len(), sys.reflections().len(), sys.s()));
    line(format!("bipartite order {:?}", sys.bipartite_order().iter().map(|i| i + 1).collect::<Vec<_>>()));
    line("root order (simple-root coordinates):".into());
    for (i, r) in p.ordered.roots().iter().enumerate() {
        let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        let tau = p.ordered.tau_positions().iter().position(|&t| t == i);
        let mark = tau.map(|k| format!("  tau_{}", k + 1)).unwrap_or_default();
        line(format!("  rho_{:<3} ({}){mark}", i + 1, coords.join(", ")));
    }
    out
}

fn info_json(config: &RunConfig, p: &ExactPipeline) -> String {
    let sys = &p.system;
    let enc = export::Encoder::new(sys);
    let roots: Vec<_> = p.ordered.roots().iter().map(|r| enc.vector(r)).collect();
    export::to_text(&serde_json::json!({
        "header": export::header(&config.problem, sys),
        "n": sys.rank(),
        "h": sys.coxeter_number(),
        "order": sys.group().len(),
        "reflections": sys.reflections().len(),
        "s": sys.s(),
        "roots": roots,
        "tau": p.ordered.tau_positions(),
    }))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Info { common, json } => {
            let config = common.config()?;
            let name = if json { "info.json" } else { "info.txt" };
            let text = cached(&config, name, || {
                let p = build(&config)?;
                Ok(if json { info_json(&config, &p) } else { info_text(&p) })
            })?;
            print!("{text}");
            Ok(0)
        }
        Command::Verify { common, all, suite } => {
            let config = common.config()?;
            let names: Vec<String> = if all || suite.is_empty() {
                verify::SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suite
            };
            let p = build(&config)?;
            let report = verify::run(&config.problem, &p, &names)?;
            for s in &report.suites {
                println!("[{}] {} {}", if s.passed { "PASS" } else { "FAIL" }, s.name, s.details);
                for f in &s.failures {
                    println!("       {f}");
                }
            }
            println!(
                "{}: {} bounded regions, {} facets",
                if report.passed { "all suites passed" } else { "FAILED" },
                p.bounded_count(),
                p.facet_count()
            );
            if common.writes_files() {
                let file = format!("verify-{}.json", file_label(&config)?);
                std::fs::create_dir_all(&config.out_dir)?;
                let path = config.out_dir.join(file);
                std::fs::write(&path, export::to_text(&serde_json::to_value(&report)?))?;
                println!("wrote {}", path.display());
            }
            Ok(if report.passed { 0 } else { EXIT_FAILED })
        }
        Command::Render { common } => {
            let config = common.config()?;
            let text = cached(&config, "render.svg", || render::render(&build(&config)?))?;
            emit(&common, &config, &format!("{}.svg", file_label(&config)?), &text)?;
            Ok(0)
        }
        Command::Export { target, common } => {
            let config = common.config()?;
            let name = format!("{}.json", target.name());
            let text = cached(&config, &name, || {
                let p = build(&config)?;
                let doc = match target {
                    Target::Ncp => export::ncp(&config.problem, &p),
                    Target::Xc => export::xc(&config.problem, &p),
                    Target::Lattice => export::lattice(&config.problem, &p)?,
                    Target::Embed => export::embed(&config.problem, &p)?,
                };
                Ok(export::to_text(&doc))
            })?;
            emit(&common, &config, &format!("{}-{}.json", target.name(), file_label(&config)?), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<ncp_core::Error>() {
                Some(ncp_core::Error::BudgetExceeded(_) | ncp_core::Error::GroupCapExceeded(_)) => EXIT_BUDGET,
                Some(
                    ncp_core::Error::InvalidDiagram(_)
                    | ncp_core::Error::NotFiniteType
                    | ncp_core::Error::UnsupportedScalar(_),
                ) => EXIT_INPUT,
                Some(_) => EXIT_FAILED,
                None => EXIT_INPUT,
            };
            ExitCode::from(code)
        }
    }
}
