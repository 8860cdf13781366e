//! `crystal`: enumerate tableaux, build crystal graphs, verify axioms and
//! expand Schur and Schur-P polynomials from the command line.
//!
//! Counts and summaries go to stdout, diagnostics to stderr. Exit codes:
//! 0 success, 1 axiom violations, 2 invalid input, 3 I/O failure,
//! 4 vertex budget exceeded.

mod config;
mod error;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crystal::axioms::{check_01_components, check_02_components, check_queer_regular, check_stembridge, Mode};
use crystal::graph::{
    character, from_json, shifted_crystal, standard_crystal, to_dot, to_json, type_a_colors, young_crystal, Color,
    CrystalGraph,
};
use crystal::queer::{queer_highest_weights, tensor};
use crystal::shifted::{enumerate_yamanouchi, shifted_string};
use crystal::symfunc::{product_expand, render_schur, render_schur_p, schur_p_to_schur};
use crystal::tableau::{enumerate_ssht, enumerate_ssyt, Partition, ShiftedTableau, StrictPartition, YoungTableau};
use crystal::young::{e_young, f_young};

use config::Config;
use error::CliError;

#[derive(Parser)]
#[command(name = "crystal", version, about = "Crystals on Young and shifted tableaux")]
struct Cli {
    /// TOML file with `max_vertices`, `threads` and `output_dir`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker thread count; overrides the configuration file.
    #[arg(long, global = true, env = "CRYSTAL_THREADS")]
    threads: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lists tableaux, one per line, and prints their number.
    Enum {
        kind: EnumKind,
        /// Comma-separated parts, e.g. `3,1`.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
        /// Output file; defaults to a file in the configured output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Builds a crystal graph, writes it as DOT or JSON and prints a summary.
    Graph {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; defaults to a file in the configured output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks a JSON graph against an axiom family; prints the verdict as JSON.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum)]
        axioms: Axioms,
        #[arg(long, value_enum, default_value_t = CheckMode::Exhaustive)]
        mode: CheckMode,
    },
    /// Expands `P_γ` in Schur polynomials.
    Expand {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        n: usize,
    },
    /// Expands `P_γ · P_δ` in Schur-P polynomials.
    Product {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        delta: String,
        #[arg(long)]
        n: usize,
    },
    /// Prints the character of a crystal graph.
    Char {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Prints the full `i`-string through a tableau, top to bottom.
    String {
        /// Bottom-up rows, e.g. `[[1,1,2'],[2]]`.
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        i: u32,
        /// Treat the tableau as an ordinary Young tableau instead of a shifted one.
        #[arg(long)]
        young: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Ssyt,
    Ssht,
    Yam,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Young,
    Shifted,
    Queer,
    Standard,
    Tensor,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Axioms {
    Stembridge,
    Queer,
    Components01,
    Components02,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Exhaustive,
    Fast,
}

#[derive(Args)]
struct GraphSource {
    #[arg(long, value_enum)]
    model: Model,
    /// Shape for the young, shifted and queer models.
    #[arg(long)]
    shape: Option<String>,
    /// Dimension; required except for tensor products.
    #[arg(long)]
    n: Option<usize>,
    /// Left factor (JSON graph file) of a tensor product.
    #[arg(long)]
    left: Option<PathBuf>,
    /// Right factor (JSON graph file) of a tensor product.
    #[arg(long)]
    right: Option<PathBuf>,
    /// Include the queer operator for the standard and tensor models.
    #[arg(long)]
    queer: bool,
    /// Overrides the configured vertex budget.
    #[arg(long)]
    max_vertices: Option<usize>,
}

fn strict_shape(text: &str) -> Result<StrictPartition, CliError> {
    text.parse().map_err(|e| CliError::Invalid(format!("shape {text:?}: {e}")))
}

fn young_shape(text: &str) -> Result<Partition, CliError> {
    text.parse().map_err(|e| CliError::Invalid(format!("shape {text:?}: {e}")))
}

fn require<T: Clone>(value: &Option<T>, flag: &str, model: &str) -> Result<T, CliError> {
    value.clone().ok_or_else(|| CliError::Invalid(format!("--{flag} is required for the {model} model")))
}

fn positive_n(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        Err(CliError::Invalid("--n must be at least 1".into()))
    } else {
        Ok(n)
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_text(path: &Path, text: &str, newline: bool) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let mut text = text.to_string();
    if newline && !text.ends_with('\n') {
        text.push('\n');
    }
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// The explicit `--out`, else `default_name` inside the output directory.
fn destination(out: &Option<PathBuf>, config: &Config, default_name: impl FnOnce() -> String) -> Option<PathBuf> {
    out.clone().or_else(|| config.output_dir.as_ref().map(|d| d.join(default_name())))
}

struct Built {
    graph: CrystalGraph,
    queer: bool,
    label: String,
}

fn build(source: &GraphSource, config: &Config) -> Result<Built, CliError> {
    let budget = source.max_vertices.unwrap_or(config.max_vertices);
    let name = match source.model {
        Model::Young => "young",
        Model::Shifted => "shifted",
        Model::Queer => "queer",
        Model::Standard => "standard",
        Model::Tensor => "tensor",
    };
    let built = match source.model {
        Model::Young | Model::Shifted | Model::Queer => {
            let shape = require(&source.shape, "shape", name)?;
            let n = positive_n(require(&source.n, "n", name)?)?;
            let graph = if source.model == Model::Young {
                young_crystal(&young_shape(&shape)?, n, budget)?
            } else {
                shifted_crystal(&strict_shape(&shape)?, n, source.model == Model::Queer, budget)?
            };
            let label = format!("{name}_{}_n{n}", shape.replace(',', "-"));
            Built { graph, queer: source.model == Model::Queer && n >= 2, label }
        }
        Model::Standard => {
            let n = positive_n(require(&source.n, "n", name)?)?;
            let queer = source.queer && n >= 2;
            Built { graph: standard_crystal(n, queer), queer, label: format!("standard_n{n}") }
        }
        Model::Tensor => {
            let left = from_json(&read_text(&require(&source.left, "left", name)?)?)?;
            let right = from_json(&read_text(&require(&source.right, "right", name)?)?)?;
            let graph = tensor(&left, &right, source.queer)?;
            if graph.len() > budget {
                return Err(CliError::Budget(format!(
                    "tensor product has {} vertices, over the budget of {budget}",
                    graph.len()
                )));
            }
            Built { queer: source.queer && graph.n() >= 2, graph, label: "tensor".into() }
        }
    };
    Ok(built)
}

fn weight_text(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn summary(b: &Built) -> Result<String, CliError> {
    let g = &b.graph;
    let mut lines = vec![format!("vertices: {}", g.len())];
    let counts: Vec<String> = g.edge_counts().iter().map(|(c, k)| format!("{c}={k}")).collect();
    lines.push(format!("edges: {}", if counts.is_empty() { "none".into() } else { counts.join(" ") }));
    lines.push(format!("components: {}", g.component_sets().len()));
    let type_a = g.subgraph(&type_a_colors(g.n()));
    lines.push(format!("type A components: {}", type_a.component_sets().len()));
    let (label, tops) = if b.queer {
        ("queer highest weights", queer_highest_weights(g)?)
    } else {
        ("highest weights", g.highest_weights(&type_a_colors(g.n())))
    };
    let tops: Vec<String> = tops.iter().map(|&v| weight_text(g.weight(v))).collect();
    lines.push(format!("{label}: {}", tops.join(" ")));
    Ok(lines.join("\n"))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let config = Config::load(cli.config.as_deref(), cli.threads.as_deref())?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build_global()
        .map_err(|e| CliError::Invalid(format!("thread pool: {e}")))?;
    match cli.command {
        Command::Enum { kind, shape, n, out } => {
            let n = positive_n(n)?;
            let lines: Vec<String> = match kind {
                EnumKind::Ssyt => enumerate_ssyt(&young_shape(&shape)?, n).iter().map(|t| t.to_string()).collect(),
                EnumKind::Ssht => enumerate_ssht(&strict_shape(&shape)?, n).iter().map(|t| t.to_string()).collect(),
                EnumKind::Yam => {
                    enumerate_yamanouchi(&strict_shape(&shape)?, n).iter().map(|t| t.to_string()).collect()
                }
            };
            let kind_name = match kind {
                EnumKind::Ssyt => "ssyt",
                EnumKind::Ssht => "ssht",
                EnumKind::Yam => "yam",
            };
            if let Some(path) =
                destination(&out, &config, || format!("{kind_name}_{}_n{n}.txt", shape.replace(',', "-")))
            {
                // An empty listing is an empty file rather than a lone newline.
                write_text(&path, &lines.join("\n"), !lines.is_empty())?;
            }
            println!("{}", lines.len());
            Ok(0)
        }
        Command::Graph { source, format, out } => {
            let built = build(&source, &config)?;
            let (text, ext) = match format {
                Format::Dot => (to_dot(&built.graph), "dot"),
                Format::Json => (to_json(&built.graph), "json"),
            };
            if let Some(path) = destination(&out, &config, || format!("{}.{ext}", built.label)) {
                write_text(&path, &text, true)?;
            }
            println!("{}", summary(&built)?);
            Ok(0)
        }
        Command::Verify { input, axioms, mode } => {
            let g = from_json(&read_text(&input)?)?;
            let mode = match mode {
                CheckMode::Exhaustive => Mode::Exhaustive,
                CheckMode::Fast => Mode::Fast,
            };
            let verdict = match axioms {
                Axioms::Stembridge => check_stembridge(&g, mode),
                Axioms::Queer => check_queer_regular(&g, mode),
                Axioms::Components01 => check_01_components(&g),
                Axioms::Components02 => check_02_components(&g),
            };
            println!("{}", verdict.to_json());
            if !verdict.ok {
                eprintln!("{} violation(s) of {}", verdict.violations.len(), verdict.axioms().join(", "));
            }
            Ok(if verdict.ok { 0 } else { 1 })
        }
        Command::Expand { gamma, n } => {
            let terms = schur_p_to_schur(&strict_shape(&gamma)?, positive_n(n)?)?;
            println!("{}", render_schur(&terms));
            Ok(0)
        }
        Command::Product { gamma, delta, n } => {
            let terms: BTreeMap<StrictPartition, u64> =
                product_expand(&strict_shape(&gamma)?, &strict_shape(&delta)?, n)?;
            println!("{}", render_schur_p(&terms));
            Ok(0)
        }
        Command::Char { source } => {
            let built = build(&source, &config)?;
            println!("{}", character(&built.graph)?);
            Ok(0)
        }
        Command::String { tableau, i, young } => {
            if i == 0 {
                return Err(CliError::Invalid("--i must be at least 1".into()));
            }
            let string: Vec<String> = if young {
                let t: YoungTableau = tableau.parse()?;
                young_string(&t, i).iter().map(|t| t.to_string()).collect()
            } else {
                let t: ShiftedTableau = tableau.parse()?;
                shifted_string(&t, i).iter().map(|t| t.to_string()).collect()
            };
            for line in &string {
                println!("{line}");
            }
            eprintln!("{}-string of length {}", Color::Even(i), string.len());
            Ok(0)
        }
    }
}

fn young_string(t: &YoungTableau, i: u32) -> Vec<YoungTableau> {
    let mut top = t.clone();
    while let Some(u) = e_young(&top, i) {
        top = u;
    }
    let mut out = vec![top];
    while let Some(u) = f_young(out.last().expect("non-empty"), i) {
        out.push(u);
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
