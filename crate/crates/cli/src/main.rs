//! `qslope`: slope stability computations over JSON input files.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "qslope", version, about = "Slope stability for quiver representations")]
struct Cli {
    /// Coefficient field: `q` or `fp:<p>`. Rational inputs are reduced mod p.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Enumeration budget (subspace tuples, matrix tuples).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    guard: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check an algebra and representations against its relations.
    Validate {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long = "rep")]
        reps: Vec<String>,
    },
    /// Slope values of classes and their pairwise comparisons.
    Slope {
        #[arg(long)]
        slope: String,
        #[arg(long = "class", required = true)]
        classes: Vec<String>,
    },
    /// Integer character reproducing the slope's signs below a class.
    Character {
        #[arg(long)]
        slope: String,
        #[arg(long)]
        class: String,
    },
    /// Stability verdict, with the maximal destabilizer when unstable.
    Stability {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        slope: String,
    },
    /// Harder–Narasimhan filtration.
    Hn {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        slope: String,
    },
    /// S-equivalence classes of semistable representations of a class.
    Moduli {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        class: String,
        #[arg(long)]
        slope: String,
    },
    /// Search for slope coefficients making a class stable relative to a
    /// set of subobject classes.
    Certify {
        /// Built-in weight data: `sl2` or `sl3`.
        #[arg(long, default_value = "sl3")]
        weights: String,
        /// Use Verma class `k` of the sl3 data with its default subobjects.
        #[arg(long, conflicts_with_all = ["target", "subs"])]
        verma: Option<usize>,
        #[arg(long)]
        target: Option<String>,
        #[arg(long = "sub")]
        subs: Vec<String>,
    },
    /// List built-in examples, optionally exporting them as input files.
    Catalog {
        #[arg(long)]
        export: Option<PathBuf>,
        /// Also export the sl2 slope at this coefficient.
        #[arg(long)]
        x2: Option<String>,
    },
}

pub struct Options {
    pub field: Option<String>,
    pub guard: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    let opts = Options { field: cli.field, guard: cli.guard };
    match commands::run(&cli.command, &opts) {
        Ok(report) => {
            let text = quiver_slope::io::to_json(&report);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("qslope: error[io]: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("qslope: error[{}]: {}", failure.code, failure.message.replace('\n', " "));
            ExitCode::from(failure.exit)
        }
    }
}
