use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use nccov::suite::{run_suite, Fault, Format, SuiteConfig, SuiteKind};
use nccov_cli::demo::{run_demo, DemoInputs, DemoKind};

/// Exact-arithmetic checks of coordinate-transformation laws over the
/// rational quaternions.
#[derive(Parser)]
#[command(name = "nccov", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run randomized property suites; exits 0 iff every trial passes.
    Check(CheckArgs),
    /// Print a worked transformation example with an EQUAL/UNEQUAL verdict.
    Demo(DemoArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// matrix, vspace, transform, linear, polylinear, skew, geo or all
    #[arg(long, default_value = "all")]
    suite: SuiteKind,
    /// Maximum dimension (1..=8); each trial draws its own dimension.
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Random instances per property.
    #[arg(long, default_value_t = 200)]
    trials: u32,
    /// Arity of polylinear maps (1..=3).
    #[arg(long, default_value_t = 2)]
    arity: usize,
    /// Maximum number of terms per tensor component.
    #[arg(long, default_value_t = 3)]
    max_terms: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// json or text
    #[arg(long, default_value = "json")]
    format: Format,
    /// Record wall time in the report (makes it non-reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long, hide = true)]
    inject_fault: Option<Fault>,
}

#[derive(Args)]
struct DemoArgs {
    /// basis-change, endo, polylinear or skew
    #[arg(long)]
    kind: DemoKind,
    /// Passive transformation, e.g. `1,i;0,1`.
    #[arg(long)]
    g: Option<String>,
    /// Endomorphism matrix (endo).
    #[arg(long)]
    f: Option<String>,
    /// Tensor-sum map, e.g. `0,1,0: i,1,j | 1,0,0: 1,k,1` (polylinear, skew).
    #[arg(long)]
    a: Option<String>,
    /// Coordinates; for polylinear, one argument per row.
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Second argument (skew).
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
}

fn check(args: CheckArgs) -> ExitCode {
    let cfg = SuiteConfig {
        suite: args.suite,
        dim: args.dim,
        trials: args.trials,
        arity: args.arity,
        max_terms: args.max_terms,
        seed: args.seed,
        format: args.format,
        timing: args.timing,
        fault: args.inject_fault,
    };
    let start = Instant::now();
    match run_suite(&cfg) {
        Ok(report) => {
            println!("{}", report.render().trim_end());
            eprintln!(
                "{} failures in {} ms",
                report.failures(),
                start.elapsed().as_millis()
            );
            if report.all_passed() {
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

fn demo(args: DemoArgs) -> ExitCode {
    let inputs = DemoInputs {
        g: args.g,
        f: args.f,
        a: args.a,
        u: args.u,
        v: args.v,
    };
    match run_demo(args.kind, &inputs) {
        Ok(out) => {
            print!("{}", out.text);
            if out.equal {
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

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check(args) => check(args),
        Command::Demo(args) => demo(args),
    }
}
