//! `fusionkit`: level-l fusion products and crossingless-match diagrams.
//!
//! Exit codes: 0 on success, 1 on domain or verification failure, 2 on usage
//! errors.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fusionkit_core::verify::Suite;
use fusionkit_core::Level;

#[derive(Debug, Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "Level-l sl2 fusion products via crossingless matches"
)]
struct Cli {
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "FUSIONKIT_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Level-l fusion product of simple modules.
    Fuse(FuseArgs),
    /// Ordinary tensor product, optionally reduced modulo the level-l ideal.
    Tensor(TensorArgs),
    /// List lower crossingless matches.
    Matches(MatchesArgs),
    /// Irreducible components of the (truncated) tensor product variety.
    Components(ComponentsArgs),
    /// Run bounded property sweeps.
    Verify(VerifyArgs),
    /// Draw a single match as ASCII art or SVG.
    Render(RenderArgs),
    /// Basis and E, F, H matrices of the truncated module.
    Module(ModuleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

/// `--level`: a positive integer or `none` for the untruncated case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelArg(pub Option<Level>);

fn parse_level(s: &str) -> Result<LevelArg, String> {
    if s.eq_ignore_ascii_case("none") {
        return Ok(LevelArg(None));
    }
    let l: u32 = s
        .parse()
        .map_err(|_| format!("expected a positive integer or \"none\", got {s:?}"))?;
    Level::new(l)
        .map(|l| LevelArg(Some(l)))
        .map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(short, long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FuseArgs {
    #[arg(short, long, value_delimiter = ',', required = true)]
    weights: Vec<u32>,
    #[arg(short, long, value_parser = parse_level)]
    level: LevelArg,
    /// Bracketing such as "(1(23))"; defaults to the left comb.
    #[arg(short = 's', long)]
    bracketing: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(short, long, value_delimiter = ',', required = true)]
    weights: Vec<u32>,
    #[arg(short, long, value_parser = parse_level)]
    level: Option<LevelArg>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
pub struct MatchesArgs {
    #[arg(short, long, value_delimiter = ',', required = true)]
    boxes: Vec<u32>,
    #[arg(short, long)]
    mu: Option<u32>,
    #[arg(short, long, value_parser = parse_level)]
    level: Option<LevelArg>,
    #[arg(short = 's', long)]
    bracketing: Option<String>,
    /// List every orientation of each match.
    #[arg(long)]
    oriented: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
pub struct ComponentsArgs {
    #[arg(short, long, value_delimiter = ',', required = true)]
    boxes: Vec<u32>,
    #[arg(short, long, value_parser = parse_level)]
    level: Option<LevelArg>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    suite: String,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=7))]
    max_rank: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    max_weight: u32,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_level: u32,
    /// Replace the two-factor fusion rule by a corrupted one.
    #[arg(long, hide = true, value_parser = ["off-by-one"])]
    inject_fault: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Canonical key such as "1,1|1-2".
    #[arg(short, long, conflicts_with_all = ["boxes", "index"])]
    key: Option<String>,
    #[arg(short, long, value_delimiter = ',', requires = "index")]
    boxes: Vec<u32>,
    /// Position in the canonical listing of `matches` with the same flags.
    #[arg(short, long, requires = "boxes")]
    index: Option<usize>,
    #[arg(short, long)]
    mu: Option<u32>,
    #[arg(short, long, value_parser = parse_level)]
    level: Option<LevelArg>,
    #[arg(short = 's', long)]
    bracketing: Option<String>,
    /// Draw orientation marks; `--downs` implies this.
    #[arg(long)]
    oriented: bool,
    /// Number of down-arrows (on the rightmost unmatched vertices).
    #[arg(short, long)]
    downs: Option<u32>,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    #[arg(short, long, value_delimiter = ',', required = true)]
    boxes: Vec<u32>,
    #[arg(short, long, value_parser = parse_level)]
    level: LevelArg,
    #[arg(short = 's', long)]
    bracketing: Option<String>,
    #[command(flatten)]
    output: Output,
}

/// A flag combination that parsed but cannot be honoured; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Rendered output plus whether the command succeeded.
pub struct Outcome {
    pub body: String,
    pub ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(n))
            .build_global();
    }
    let (result, output) = match &cli.command {
        Command::Fuse(a) => (commands::fuse(a), &a.output),
        Command::Tensor(a) => (commands::tensor(a), &a.output),
        Command::Matches(a) => (commands::matches(a), &a.output),
        Command::Components(a) => (commands::components(a), &a.output),
        Command::Verify(a) => (commands::verify(a), &a.output),
        Command::Render(a) => (commands::render(a), &a.output),
        Command::Module(a) => (commands::module(a), &a.output),
    };
    let outcome = match result.and_then(|o| emit(o, output)) {
        Ok(ok) => ok,
        Err(err) => {
            eprintln!("error: {err:#}");
            return if err.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            };
        }
    };
    if outcome {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(outcome: Outcome, output: &Output) -> anyhow::Result<bool> {
    let mut body = outcome.body;
    if !body.is_empty() && !body.ends_with('\n') {
        body.push('\n');
    }
    match &output.out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{body}"),
    }
    Ok(outcome.ok)
}
