//! `ruledmotion`: rational motions guiding a line along a ruled surface.

mod commands;
mod expr;
mod failure;
mod mesh;
mod wire;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ruled_motion::Tolerance;
use serde_json::Value;

use failure::{code, Failure};
use mesh::MeshOptions;
use wire::Mode;

#[derive(Parser)]
#[command(name = "ruledmotion", version, about = "Minimal rational motions for ruled surfaces, motion factorization and three-line interpolation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input document, `-` for stdin.
    #[arg(long, short, default_value = "-")]
    input: String,
    /// Output document, `-` for stdout.
    #[arg(long, short, default_value = "-")]
    output: String,
    /// Coefficient field; inferred from the document when omitted.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Relative tolerance for float mode.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Kinematicity, saturation and content of a line polynomial.
    Analyze {
        #[command(flatten)]
        common: Common,
    },
    /// Minimal motion whose moving k-axis traces the line polynomial.
    Synthesize {
        #[command(flatten)]
        common: Common,
        /// Seed of the random tail of the rotation schedule.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Document `{"q": {w, x, y, z}}` fixing the primal cofactor.
        #[arg(long)]
        inject_q: Option<PathBuf>,
        /// Translation polynomial selecting a member of the solution family, e.g. `t^2+1`.
        #[arg(long)]
        nu: Option<String>,
        /// Right unit `v0 + v3 k` of the family member, as `v0,v3`.
        #[arg(long)]
        unit: Option<String>,
    },
    /// Checks that a motion moves k along a multiple of the line polynomial.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Separate line document; by default the input carries both.
        #[arg(long)]
        line: Option<PathBuf>,
    },
    /// Linear factors of a motion polynomial.
    Factor {
        #[command(flatten)]
        common: Common,
        /// Monic quadratic norm of the next right factor; repeat for each factor.
        #[arg(long)]
        order: Vec<String>,
        /// Split off a translation factor `f^m + eps e k`, given as `f,m`.
        #[arg(long)]
        peel_translation: Option<String>,
    },
    /// Degree-two motion through three lines and its two factorizations.
    Interpolate {
        #[command(flatten)]
        common: Common,
        /// Write the sampled surface and the revolute axes as OBJ.
        #[arg(long)]
        mesh: Option<PathBuf>,
        /// Rulings in the mesh.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Half edge of the clipping box.
        #[arg(long, default_value_t = 10.0)]
        clip: f64,
    },
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::io("stdin", e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::io(path, e))
    }
}

fn read_json(path: &str) -> Result<Value, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{path}: {e}")))
}

fn write_out(path: &str, doc: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| Failure::parse(e.to_string()))?;
    text.push('\n');
    if path == "-" {
        io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::io("stdout", e))
    } else {
        fs::write(path, text).map_err(|e| Failure::io(path, e))
    }
}

fn tolerance(t: Option<f64>) -> Tolerance {
    t.map(Tolerance::new).unwrap_or_default()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let (common, result) = match &cli.command {
        Command::Analyze { common } => {
            let doc = read_json(&common.input)?;
            let mode = wire::resolve_mode(&doc, common.mode)?;
            (common, commands::analyze(&doc, mode, tolerance(common.tolerance))?)
        }
        Command::Synthesize { common, seed, inject_q, nu, unit } => {
            let doc = read_json(&common.input)?;
            let mode = wire::resolve_mode(&doc, common.mode)?;
            let inject_q = inject_q.as_ref().map(|p| read_json(&p.to_string_lossy())).transpose()?;
            let flags = commands::SynthesisFlags { inject_q, seed: *seed, nu: nu.clone(), unit: unit.clone() };
            (common, commands::synthesize_cmd(&doc, mode, &flags)?)
        }
        Command::Verify { common, line } => {
            let doc = read_json(&common.input)?;
            let line_doc = line.as_ref().map(|p| read_json(&p.to_string_lossy())).transpose()?;
            let mut mode = wire::resolve_mode(&doc, common.mode)?;
            if let Some(l) = &line_doc {
                let line_mode = wire::resolve_mode(l, Some(mode))?;
                mode = line_mode;
            }
            (common, commands::verify(&doc, line_doc.as_ref(), mode, tolerance(common.tolerance))?)
        }
        Command::Factor { common, order, peel_translation } => {
            let doc = read_json(&common.input)?;
            let mode = wire::resolve_mode(&doc, common.mode)?;
            let flags = commands::FactorFlags { order: order.clone(), peel_translation: peel_translation.clone() };
            (common, commands::factor(&doc, mode, tolerance(common.tolerance), &flags)?)
        }
        Command::Interpolate { common, mesh, samples, clip } => {
            let doc = read_json(&common.input)?;
            let mode = wire::resolve_mode(&doc, common.mode.or(Some(Mode::Float)))?;
            let mesh_opts = mesh.as_ref().map(|_| MeshOptions { samples: *samples, clip: *clip });
            let out = commands::interpolate(&doc, mode, common.tolerance.map(Tolerance::new), mesh_opts)?;
            if let (Some(path), Some(obj)) = (mesh, out.mesh) {
                fs::write(path, obj).map_err(|e| Failure::io(&path.to_string_lossy(), e))?;
            }
            (common, (out.result, code::OK))
        }
    };
    let (doc, status) = result;
    write_out(&common.output, &doc)?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the parse exit code
            return ExitCode::from(if e.use_stderr() { code::PARSE } else { code::OK });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
