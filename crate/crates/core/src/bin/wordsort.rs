use std::ffi::OsString;
use std::io::Write;
use std::os::unix::ffi::OsStrExt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wordsort::bench::{parse_sizes, run_scaling};
use wordsort::cli::{
    cmd_compare, cmd_rearrange, cmd_root, cmd_sort, parse_word_list, read_input, CliError,
    Delimiter, SortMode, SortOptions,
};
use wordsort::Objective;

/// Sort words by their infinite repetitions and build optimal concatenations.
#[derive(Parser)]
#[command(name = "wordsort", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Word list file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Words are NUL-terminated instead of LF-terminated.
    #[arg(long)]
    null: bool,
}

impl InputArgs {
    fn delimiter(&self) -> Delimiter {
        if self.null {
            Delimiter::Nul
        } else {
            Delimiter::Newline
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print each word with its primitive root, exponent and primitivity.
    Root(InputArgs),
    /// Compare two words by their infinite repetitions.
    Compare { a: OsString, b: OsString },
    /// Sort words by repetition (`repeat`) or by the total order on words (`inf`).
    Sort {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Repeat)]
        mode: ModeArg,
        /// Separate tie groups with an empty record.
        #[arg(long)]
        groups: bool,
        /// Cross-check against the comparison-sort reference.
        #[arg(long)]
        verify: bool,
    },
    /// Print the smallest or largest concatenation and its permutation.
    Rearrange {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Min)]
        objective: ObjectiveArg,
        /// Cross-check against exhaustive search (at most 8 words).
        #[arg(long)]
        verify: bool,
    },
    /// Time the linear sorter against the comparison sort.
    Bench {
        /// Comma-separated `n:m` pairs: n words sharing an m-symbol prefix.
        #[arg(long, default_value = "256:10000,512:10000,1024:10000")]
        sizes: String,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Also write `n,m,L,t_linear_ns,t_naive_ns` lines to this file.
        #[arg(long)]
        record: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Repeat,
    Inf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

fn load(input: &InputArgs) -> Result<Vec<wordsort::Word>, CliError> {
    parse_word_list(&read_input(input.input.as_deref())?, input.delimiter())
}

fn run(command: Command) -> Result<Vec<u8>, CliError> {
    match command {
        Command::Root(input) => cmd_root(&load(&input)?, input.delimiter()),
        Command::Compare { a, b } => cmd_compare(a.as_bytes(), b.as_bytes()),
        Command::Sort {
            input,
            mode,
            groups,
            verify,
        } => {
            let mode = match mode {
                ModeArg::Repeat => SortMode::Repeat,
                ModeArg::Inf => SortMode::Inf,
            };
            let opts = SortOptions {
                mode,
                groups,
                verify,
            };
            cmd_sort(&load(&input)?, opts, input.delimiter())
        }
        Command::Rearrange {
            input,
            objective,
            verify,
        } => {
            let objective = match objective {
                ObjectiveArg::Min => Objective::Minimal,
                ObjectiveArg::Max => Objective::Maximal,
            };
            cmd_rearrange(&load(&input)?, objective, verify, input.delimiter())
        }
        Command::Bench {
            sizes,
            reps,
            record,
        } => {
            let report = run_scaling(&parse_sizes(&sizes)?, reps)?;
            if let Some(path) = record {
                std::fs::write(path, report.records())?;
            }
            let table = report.table().into_bytes();
            if !report.all_agree() {
                std::io::stdout().write_all(&table)?;
                return Err(CliError::Verify(
                    "linear and comparison sorts disagree".into(),
                ));
            }
            Ok(table)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|out| {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(&out)?;
        stdout.flush()?;
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wordsort: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
