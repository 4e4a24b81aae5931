//! `ncsieve`: exact verification of sieving identities on noncrossing
//! partition lattices of well-generated complex reflection groups.
//!
//! Every command prints one report document (JSON or text) to stdout and
//! exits 0 when all checked claims hold, 1 when a check fails, and 2 when
//! the command cannot run (bad spec, size budget, malformed flags).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ncsieve_core::Result;
use serde_json::json;

use commands::Action;
use report::{CommandOutcome, ReportDocument, Status};

/// Output rendering selectable with `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Line-oriented human-readable text.
    Text,
    /// Key-sorted pretty-printed JSON.
    Json,
}

/// Flag spelling of a `csp-nc` action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ActionFlag {
    Conj,
    Kreweras,
    Armstrong,
    Rotation,
}

impl From<ActionFlag> for Action {
    fn from(flag: ActionFlag) -> Action {
        match flag {
            ActionFlag::Conj => Action::Conj,
            ActionFlag::Kreweras => Action::Kreweras,
            ActionFlag::Armstrong => Action::Armstrong,
            ActionFlag::Rotation => Action::Rotation,
        }
    }
}

const DEFAULT_MAX_GROUP_SIZE: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "ncsieve",
    version,
    about = "Noncrossing partition lattices and cyclic sieving, exactly",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the report document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees, codegrees, Coxeter number, Catalan coefficients, regular
    /// numbers, and center order of a group.
    GroupInfo {
        /// Group spec: A3, B4, D5, I2(7), H3, F4, E8, G(4,4,3), ...
        spec: String,
        /// Directory of catalog files overriding the built-in entries.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Sieving on the noncrossing partition lattice of a group, or on its
    /// m-divisible tuples.
    CspNc {
        /// Group spec.
        spec: String,
        /// Tuple parameter for the armstrong and rotation actions.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Cyclic action: conj (order h), kreweras (2h), armstrong (mh),
        /// or rotation ((m+1)h).
        #[arg(long, value_enum, default_value_t = ActionFlag::Conj)]
        action: ActionFlag,
        /// Largest group order the command will enumerate.
        #[arg(long, default_value_t = DEFAULT_MAX_GROUP_SIZE,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_group_size: u64,
        /// Directory of catalog files overriding the built-in entries.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Rotation sieving on noncrossing set partitions of an n-element
    /// ground set, optionally refined to one block type.
    CspClassical {
        /// Size of the ground set.
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Block type as size:count pairs, e.g. 2:3 or 1:2,3:1.
        #[arg(long)]
        block_type: Option<String>,
    },
    /// Reverse-step sieving on antichains of a crystallographic root poset.
    CspPanyushev {
        /// Crystallographic type: A1..A5, B2, B3, C3, D4, G2, F4, ...
        name: String,
    },
    /// Fixed points and orbits of a Weyl group on its root lattice mod p.
    Torus {
        /// Crystallographic type.
        name: String,
        /// Modulus for the finite torus.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
    },
    /// Both sides of the interval restriction at a divisor d of h.
    Restriction {
        /// Group spec.
        spec: String,
        /// Divisor of the Coxeter number.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        /// Largest group order the command will enumerate.
        #[arg(long, default_value_t = DEFAULT_MAX_GROUP_SIZE,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_group_size: u64,
        /// Directory of catalog files overriding the built-in entries.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// The full verification matrix: every identity and conjecture at desk
    /// scale, one keyed line per item.
    VerifyAll {
        /// Only run items whose enumerated object has at most this rank.
        #[arg(long)]
        max_rank: Option<usize>,
        /// Largest group order any item may enumerate.
        #[arg(long, default_value_t = DEFAULT_MAX_GROUP_SIZE,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_group_size: u64,
        /// Stop starting new items after this many seconds.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        time_budget: Option<u64>,
    },
}

/// Validated configuration of one invocation, echoed in the document.
struct RunConfig {
    command: Command,
    format: Format,
}

impl RunConfig {
    fn new(cli: Cli) -> RunConfig {
        RunConfig { command: cli.command, format: cli.format }
    }

    /// Canonical command echo: subcommand, positionals, then the flags that
    /// shape the result, with effective values.
    fn echo(&self) -> String {
        match &self.command {
            Command::GroupInfo { spec, .. } => format!("group-info {spec}"),
            Command::CspNc { spec, m, action, .. } => {
                let action: Action = (*action).into();
                format!("csp-nc {spec} --m {m} --action {}", action.as_str())
            }
            Command::CspClassical { n, block_type } => match block_type {
                Some(t) => format!("csp-classical {n} --block-type {t}"),
                None => format!("csp-classical {n}"),
            },
            Command::CspPanyushev { name } => format!("csp-panyushev {name}"),
            Command::Torus { name, p } => format!("torus {name} --p {p}"),
            Command::Restriction { spec, d, .. } => format!("restriction {spec} --d {d}"),
            Command::VerifyAll { max_rank, max_group_size, time_budget } => {
                let mut echo = String::from("verify-all");
                if let Some(rank) = max_rank {
                    echo.push_str(&format!(" --max-rank {rank}"));
                }
                if *max_group_size != DEFAULT_MAX_GROUP_SIZE {
                    echo.push_str(&format!(" --max-group-size {max_group_size}"));
                }
                if let Some(secs) = time_budget {
                    echo.push_str(&format!(" --time-budget {secs}"));
                }
                echo
            }
        }
    }

    fn dispatch(&self) -> Result<CommandOutcome> {
        match &self.command {
            Command::GroupInfo { spec, catalog } => {
                commands::group_info(spec, catalog.as_deref())
            }
            Command::CspNc { spec, m, action, max_group_size, catalog } => commands::csp_nc(
                spec,
                *m,
                (*action).into(),
                catalog.as_deref(),
                *max_group_size,
            ),
            Command::CspClassical { n, block_type } => {
                let parsed = match block_type {
                    Some(text) => Some(commands::parse_block_type(text)?),
                    None => None,
                };
                commands::csp_classical(*n as usize, parsed.as_ref())
            }
            Command::CspPanyushev { name } => commands::csp_panyushev(name),
            Command::Torus { name, p } => commands::torus(name, *p),
            Command::Restriction { spec, d, max_group_size, catalog } => {
                commands::restriction(spec, *d, catalog.as_deref(), *max_group_size)
            }
            Command::VerifyAll { max_rank, max_group_size, time_budget } => {
                commands::verify_all(*max_rank, *max_group_size, *time_budget)
            }
        }
    }
}

fn run(config: &RunConfig) -> (ReportDocument, i32) {
    let start = Instant::now();
    let outcome = match config.dispatch() {
        Ok(outcome) => outcome,
        Err(error) => CommandOutcome {
            group: None,
            result: json!({ "error": error.to_string() }),
            status: Status::Error,
            findings: Vec::new(),
        },
    };
    let document = ReportDocument {
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: config.echo(),
        group: outcome.group,
        result: outcome.result,
        status: outcome.status,
        findings: outcome.findings,
        wall_ms: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
    };
    let code = document.status.exit_code();
    (document, code)
}

fn main() -> ExitCode {
    let config = RunConfig::new(Cli::parse());
    let (document, code) = run(&config);
    match config.format {
        Format::Json => print!("{}", document.to_json()),
        Format::Text => print!("{}", document.to_text()),
    }
    ExitCode::from(u8::try_from(code).unwrap_or(2))
}
