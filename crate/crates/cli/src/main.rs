use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperell::Error;
use hyperell_cli::{commands, Report};
use serde::Serialize;

/// Invariants of line bundles on hyperelliptic curves, keyed by factorization type (m,b).
///
/// Every value may be given either as a flag (`--g 10`) or positionally, in the
/// order shown in each subcommand's usage line.
#[derive(Parser)]
#[command(name = "hyperell", version)]
struct Cli {
    /// Print a JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology, ampleness, morphism and scroll model of a type.
    Classify(TypeArgs),
    /// Graded Betti diagram of the embedded curve.
    Betti(TypeArgs),
    /// Rao module dimensions gamma_1..gamma_{j-max} in low degree.
    Rao(RaoArgs),
    /// Very ample types of a given degree.
    Enumerate(DegreeArgs),
    /// Low-degree summary table over a range of degrees.
    Table(TableArgs),
    /// Recover (m,b) from (g, d, nu, p).
    Invert(InvertArgs),
    /// Secant-plane obstruction to the next property N_p.
    Obstruction(TypeArgs),
}

/// Declares an argument struct whose values come from `--name` or from the
/// matching positional slot.
macro_rules! value_args {
    ($name:ident { $($field:ident / $pos:ident : $flag:literal),* } $(, $extra:ident : $ty:ty = $default:literal / $extra_flag:literal)?) => {
        #[derive(Args)]
        #[command(allow_negative_numbers = true)]
        struct $name {
            $(
                #[arg(long = $flag, value_name = "INT")]
                $field: Option<i64>,
                #[arg(value_name = $flag, conflicts_with = stringify!($field))]
                $pos: Option<i64>,
            )*
            $(
                #[arg(long = $extra_flag, value_name = "INT", default_value_t = $default)]
                $extra: $ty,
            )?
        }

        impl $name {
            $(
                fn $field(&self) -> Result<i64, Error> {
                    self.$field.or(self.$pos).ok_or_else(|| {
                        Error::InvalidArgument(concat!("missing value for --", $flag).into())
                    })
                }
            )*
        }
    };
}

value_args!(TypeArgs { g / g_pos: "g", m / m_pos: "m", b / b_pos: "b" });
value_args!(RaoArgs { g / g_pos: "g", m / m_pos: "m", b / b_pos: "b" }, j_max: i64 = 7 / "j-max");
value_args!(DegreeArgs { g / g_pos: "g", d / d_pos: "d" });
value_args!(TableArgs { g / g_pos: "g", d_min / d_min_pos: "d-min", d_max / d_max_pos: "d-max" }, j_max: i64 = 7 / "j-max");
value_args!(InvertArgs { g / g_pos: "g", d / d_pos: "d", nu / nu_pos: "nu", p / p_pos: "p" });

fn emit<R: Serialize>(report: Report<R>, json: bool) -> Result<(), Error> {
    if json {
        let s = serde_json::to_string(&report.record)
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        println!("{s}");
    } else {
        print!("{}", report.text);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    let json = cli.json;
    match cli.command {
        Command::Classify(a) => emit(commands::classify(a.g()?, a.m()?, a.b()?)?, json),
        Command::Betti(a) => emit(commands::betti(a.g()?, a.m()?, a.b()?)?, json),
        Command::Rao(a) => emit(commands::rao(a.g()?, a.m()?, a.b()?, a.j_max)?, json),
        Command::Enumerate(a) => emit(commands::enumerate(a.g()?, a.d()?)?, json),
        Command::Table(a) => emit(
            commands::table(a.g()?, a.d_min()?, a.d_max()?, a.j_max)?,
            json,
        ),
        Command::Invert(a) => emit(commands::invert(a.g()?, a.d()?, a.nu()?, a.p()?)?, json),
        Command::Obstruction(a) => emit(commands::obstruction(a.g()?, a.m()?, a.b()?)?, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
