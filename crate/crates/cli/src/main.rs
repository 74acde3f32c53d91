use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kulikov_core::eisenstein::CompareMode;
use kulikov_core::report::{
    self, BlochOption, HomologyTarget, Options, RunReport, TableKind,
};

#[derive(Parser)]
#[command(name = "kulikov", version, about = "Abelian cover computations for Kulikov surfaces")]
struct Cli {
    #[command(flatten)]
    output: Output,
    /// Stop comparing fixtures after the first mismatch.
    #[arg(long, global = true)]
    fail_fast: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct Output {
    /// Emit the report as JSON (default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit a plain-text summary.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Smoothness report and invariants K², χ, p_g, q of a cover.
    Invariants {
        /// Config file, or one of kulikov, kulikov_quadrangle, maximal_cover.
        #[arg(long, default_value = "kulikov")]
        config: String,
    },
    /// Eigensheaf decomposition tables.
    Tables {
        #[arg(value_enum)]
        which: Which,
        #[arg(long, default_value = "kulikov")]
        config: String,
        /// Reference table to compare against instead of the bundled one.
        #[arg(long)]
        fixtures: Option<String>,
    },
    /// First homology of Γ or of an index-3 subgroup.
    Homology {
        #[arg(value_enum, default_value = "gamma")]
        target: Target,
    },
    /// Ideal membership of z(G²) in the ideal of subgroup sums.
    Bloch {
        #[arg(value_enum, default_value = "full")]
        option: Bloch,
        /// Triples for `custom`, e.g. "w1, xi1*w2, xi1*w3; w2, xi2*w3, w1".
        #[arg(long, default_value = "")]
        list: String,
    },
    /// Fixed points of G² on E³ and the relation suite.
    FreeAction,
    /// Checks a relation between two words in g1..g3, t1..t3, tp1..tp3.
    RelationCheck {
        lhs: String,
        rhs: String,
        /// Compare as maps of E³ rather than of C³.
        #[arg(long)]
        mod_lattice: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Tangent,
    Bicanonical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Gamma,
    Sigma1,
    Sigma2,
    Sigma3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bloch {
    Full,
    WithoutExtra,
    Custom,
}

fn run(cli: &Cli) -> kulikov_core::Result<RunReport> {
    let opts = Options {
        fail_fast: cli.fail_fast,
    };
    match &cli.command {
        Command::Invariants { config } => {
            let text = report::load_config_text(config)?;
            report::cmd_invariants(config, &text, opts)
        }
        Command::Tables {
            which,
            config,
            fixtures,
        } => {
            let text = report::load_config_text(config)?;
            let fixture = match fixtures {
                Some(path) => Some(std::fs::read_to_string(path).map_err(|e| {
                    kulikov_core::Error::Config(format!("{path}: {e}"))
                })?),
                None => None,
            };
            let kind = match which {
                Which::Tangent => TableKind::Tangent,
                Which::Bicanonical => TableKind::Bicanonical,
            };
            report::cmd_tables(config, &text, kind, fixture.as_deref(), opts)
        }
        Command::Homology { target } => {
            let t = match target {
                Target::Gamma => HomologyTarget::Gamma,
                Target::Sigma1 => HomologyTarget::Sigma(1),
                Target::Sigma2 => HomologyTarget::Sigma(2),
                Target::Sigma3 => HomologyTarget::Sigma(3),
            };
            report::cmd_homology(t, opts)
        }
        Command::Bloch { option, list } => {
            let o = match option {
                Bloch::Full => BlochOption::Full,
                Bloch::WithoutExtra => BlochOption::WithoutExtra,
                Bloch::Custom => BlochOption::Custom(list.clone()),
            };
            report::cmd_bloch(&o, opts)
        }
        Command::FreeAction => report::cmd_free_action(opts),
        Command::RelationCheck {
            lhs,
            rhs,
            mod_lattice,
        } => {
            let mode = if *mod_lattice {
                CompareMode::ModLattice
            } else {
                CompareMode::Strict
            };
            report::cmd_relation_check(lhs, rhs, mode, opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = if cli.output.text {
                report.to_text()
            } else {
                report.to_json() + "\n"
            };
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
