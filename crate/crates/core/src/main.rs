//! Command-line front end: parse one job, run it, emit the report, and
//! reflect the outcome in the exit code (0 all-match, 1 verification
//! failure, 2 input or schema error).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use artinl::kmodel::DEFAULT_N_MAX;
use artinl::runner::{run_job, JobSpec, RunContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Parser)]
#[command(
    name = "artinl",
    version,
    about = "Exact orders of vanishing of Artin and Dirichlet L-functions at non-positive \
             integers, computed along two independent routes"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Write the report to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Directory for the character/Bernoulli cache
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Disable the on-disk cache
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank table of odd K-groups from a signature (r1, r2)
    Ranks {
        #[arg(long)]
        r1: u64,
        #[arg(long)]
        r2: u64,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u32,
    },
    /// List the characters mod N in their deterministic index order
    Characters {
        #[arg(long)]
        modulus: u64,
    },
    /// Compare the two order-of-vanishing routes for one character
    Gross {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        char_index: u64,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u32,
    },
    /// Rank table of the N-th cyclotomic field, cross-checked against the
    /// trivial-coefficient orders
    Zeta {
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: u32,
    },
    /// Run a JSON-described job: an explicit group, embedding data, and a
    /// coefficient representation
    Artin {
        #[arg(long)]
        input: PathBuf,
        /// Also emit Euler factors for the (inertia, frob) pairs in the job
        #[arg(long)]
        euler: bool,
    },
    /// Full verification sweep; nonzero exit on any failed check
    Verify {
        /// Largest modulus to sweep
        #[arg(long, default_value_t = 24)]
        n_upto: u64,
        /// Largest n (order at s = 1 - n) to check
        #[arg(long, default_value_t = 6)]
        degree_upto: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let ctx = if cli.no_cache {
        RunContext::without_cache()
    } else {
        let dir = cli
            .cache_dir
            .clone()
            .unwrap_or_else(|| std::env::temp_dir().join("artinl-cache"));
        match RunContext::with_cache(dir) {
            Ok(ctx) => ctx,
            Err(e) => {
                eprintln!("error: cannot open cache: {e}");
                return ExitCode::from(2);
            }
        }
    };

    let job = match cli.command {
        Command::Ranks { r1, r2, n_max } => JobSpec::Ranks { r1, r2, n_max },
        Command::Characters { modulus } => JobSpec::Characters { modulus },
        Command::Gross {
            modulus,
            char_index,
            n_max,
        } => JobSpec::Gross {
            modulus,
            char_index,
            n_max,
        },
        Command::Zeta { modulus, n_max } => JobSpec::Zeta { modulus, n_max },
        Command::Artin { input, euler } => JobSpec::Artin { input, euler },
        Command::Verify {
            n_upto,
            degree_upto,
        } => JobSpec::Verify {
            n_upto,
            degree_upto,
        },
    };

    // every Err here is an input, schema, or i/o problem; verification
    // mismatches are reported in-band and drive exit code 1 below
    let report = match run_job(&ctx, &job) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let rendered = match cli.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };

    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        if stdout.write_all(rendered.as_bytes()).is_err() {
            return ExitCode::from(2);
        }
    }

    if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
