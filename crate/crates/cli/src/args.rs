use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tlschur", version, about = "Schur and Temperley-Lieb algebras at quantum characteristic 2")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decomposition matrix of S(2,d) over characteristic 2.
    Decomp {
        #[arg(long)]
        d: usize,
    },
    /// Δ-multiplicities and twisted filtration of the tilting module T(m).
    Tilting {
        #[arg(long)]
        m: usize,
    },
    /// Δ-column of the projective P_d(m) and its dominant dimension class.
    Projective {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
    },
    /// Cover report: dominant dimensions and Hemmer-Nakano dimension.
    Domdim {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = regime_names())]
        regime: String,
        /// Report every degree from --d up to this one, as a CSV batch.
        #[arg(long)]
        to: Option<usize>,
    },
    /// Hemmer-Nakano dimension of the Ringel-dual cover of TL_d.
    Hn {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = regime_names())]
        ring: String,
    },
    /// Evaluate a Temperley-Lieb word and check the defining relations.
    Tl(TlArgs),
    /// Run the oracle verification suite.
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = config_names())]
        config: String,
        /// Coresolution cap, default 4d.
        #[arg(long)]
        cap: Option<usize>,
        /// Report progress on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Dump the action matrix of a generator on tensor space.
    Action {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = config_names())]
        config: String,
        /// Generator index i, acting on tensor positions i and i+1.
        #[arg(long)]
        generator: usize,
        #[arg(long, value_enum, default_value_t = ActionKind::Hecke)]
        kind: ActionKind,
    },
}

#[derive(Args, Debug)]
pub struct TlArgs {
    #[arg(long)]
    pub d: usize,
    /// Loop parameter, read in the field given by --field.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: String,
    /// Word in the generators, e.g. "U1 U2 U1"; empty for the unit.
    #[arg(long, default_value = "")]
    pub word: String,
    /// `Q` or a prime `p` (also written `GF(p)`).
    #[arg(long, default_value = "Q")]
    pub field: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActionKind {
    Hecke,
    Tl,
}

fn regime_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(tlschur::domdim::Regime::NAMES)
}

fn config_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(tlschur::hecke::BlessedConfig::ALL.map(|c| c.name()))
}
