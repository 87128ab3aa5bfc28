use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lambek::commands::{self, DecomposeMode, GroupAction};
use lambek::particles::Registry;
use lambek::report::{Format, ReportEnvelope};

/// Exact quaternion reports for first-generation particle charges.
#[derive(Parser)]
#[command(name = "lambek", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Sum,
    Diff,
    Doublet,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupName {
    Q8,
    Q24,
    Q48,
    Q120,
}

impl GroupName {
    fn as_str(self) -> &'static str {
        match self {
            GroupName::Q8 => "q8",
            GroupName::Q24 => "q24",
            GroupName::Q48 => "q48",
            GroupName::Q120 => "q120",
        }
    }
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Group order and field.
    Order,
    /// Element list and multiplication table by index.
    Cayley,
    /// Conjugacy classes.
    Classes,
    /// Every normal subgroup, smallest first.
    NormalSubgroups,
    /// Whether another group is a normal subgroup of this one.
    CheckNormal { sub: GroupName },
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate one of the three charge tables.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run every check; exits 1 if any fails.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Corrupt one registry row before checking (negative control).
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Sum, difference or doublet decompositions into Hurwitz units.
    Decompose {
        /// Quaternion text such as "(1,-1,0,0)" or a particle name.
        #[arg(required = true, num_args = 1..=2)]
        targets: Vec<String>,
        #[arg(long, value_enum, default_value = "sum")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Finite quaternion groups.
    Groups {
        name: GroupName,
        #[command(subcommand)]
        action: GroupCmd,
        #[arg(long, value_enum, default_value = "text", global = true)]
        format: FormatArg,
    },
    /// The 24 elements of Q48 outside Q24 with their charges.
    ExploreQ48 {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Check the vertex catalog plus any extra vertices like "e- + e+ -> gamma".
    Vertices {
        extra: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn execute(cmd: Command) -> lambek::Result<ReportEnvelope> {
    let reg = Registry::standard();
    let (report, format) = match cmd {
        Command::Tables { which, format } => (commands::cmd_tables(which, &reg)?, format),
        Command::Verify { format, corrupt } => {
            let reg = match corrupt {
                Some(name) => Registry::corrupted(&name)?,
                None => reg,
            };
            (commands::cmd_verify(&reg), format)
        }
        Command::Decompose {
            targets,
            mode,
            format,
        } => {
            let mode = match mode {
                ModeArg::Sum => DecomposeMode::Sum,
                ModeArg::Diff => DecomposeMode::Diff,
                ModeArg::Doublet => DecomposeMode::Doublet,
            };
            let targets: Vec<&str> = targets.iter().map(String::as_str).collect();
            (commands::cmd_decompose(&reg, &targets, mode)?, format)
        }
        Command::Groups {
            name,
            action,
            format,
        } => {
            let action = match action {
                GroupCmd::Order => GroupAction::Order,
                GroupCmd::Cayley => GroupAction::Cayley,
                GroupCmd::Classes => GroupAction::Classes,
                GroupCmd::NormalSubgroups => GroupAction::NormalSubgroups,
                GroupCmd::CheckNormal { sub } => GroupAction::CheckNormal(sub.as_str().into()),
            };
            (commands::cmd_groups(name.as_str(), &action)?, format)
        }
        Command::ExploreQ48 { format } => (commands::cmd_explore_q48(), format),
        Command::Vertices { extra, format } => {
            let extra: Vec<&str> = extra.iter().map(String::as_str).collect();
            (commands::cmd_vertices(&reg, &extra)?, format)
        }
    };
    Ok(report.with_format(format.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = match report.render() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if std::io::stdout().lock().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    if report.fail_count > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
