use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use repfree::bench::{bench_dyadic, bench_ordered, tsv_header, tsv_row, BenchRow};
use repfree::detect::{run_detect, DetectMode, DetectOutcome};
use repfree::script::{parse_script, run_script};
use repfree::{
    generate, oracle_first_repetition, Exponent, GeneratorConfig, GeneratorOutcome,
    GeneratorPolicy, SuffixTracker,
};

#[derive(Parser)]
#[command(
    name = "repfree",
    version,
    about = "Online e-repetition detection and generation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Dyadic,
    Ordered,
    Both,
}

impl From<Mode> for DetectMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Dyadic => DetectMode::Dyadic,
            Mode::Ordered => DetectMode::Ordered,
            Mode::Both => DetectMode::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Retry,
    PeriodCut,
}

#[derive(Subcommand)]
enum Command {
    /// Report the shortest prefix of the input containing an e-repetition.
    Detect {
        #[arg(short, value_parser = parse_exponent)]
        e: Exponent,
        #[arg(long, value_enum, default_value = "dyadic")]
        mode: Mode,
        /// Exit with status 2 when a repetition is found.
        #[arg(long)]
        fail_on_find: bool,
        #[arg(long, conflicts_with = "file")]
        text: Option<String>,
        file: Option<PathBuf>,
    },
    /// Run a read/backtrack script, printing the status after each op.
    Script {
        #[arg(short, value_parser = parse_exponent)]
        e: Exponent,
        file: PathBuf,
    },
    /// Generate a random e-repetition-free word.
    Generate {
        #[arg(short, value_parser = parse_exponent)]
        e: Exponent,
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: u64,
        #[arg(long, value_enum, default_value = "retry")]
        policy: Policy,
    },
    /// Print the shortest unioccurrent suffix length after each letter.
    Unioccurrent { file: Option<PathBuf> },
    /// Brute-force answer for the same question as `detect`.
    Oracle {
        #[arg(short, value_parser = parse_exponent)]
        e: Exponent,
        file: Option<PathBuf>,
    },
    /// Basic-operation counts and timings on square-free input, as TSV.
    Bench {
        #[arg(short, value_parser = parse_exponent)]
        e: Exponent,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value = "dyadic")]
        mode: Mode,
    },
}

type BenchFn = fn(Exponent, usize) -> BenchRow;

fn parse_exponent(s: &str) -> Result<Exponent, String> {
    s.parse().map_err(|e: repfree::Error| e.to_string())
}

fn open(file: Option<&PathBuf>) -> io::Result<Box<dyn Read>> {
    Ok(match file {
        Some(path) => Box::new(io::BufReader::new(File::open(path)?)),
        None => Box::new(io::stdin().lock()),
    })
}

fn read_all(file: Option<&PathBuf>) -> io::Result<Vec<u8>> {
    let mut buf = Vec::new();
    open(file)?.read_to_end(&mut buf)?;
    Ok(buf)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut out = BufWriter::new(io::stdout().lock());
    let code = match cli.command {
        Command::Detect {
            e,
            mode,
            fail_on_find,
            text,
            file,
        } => {
            let result = match text {
                Some(t) => run_detect(t.as_bytes(), e, mode.into()),
                None => run_detect(
                    open(file.as_ref()).map_err(|e| e.to_string())?,
                    e,
                    mode.into(),
                ),
            }
            .map_err(|e| e.to_string())?;
            writeln!(out, "{result}").map_err(|e| e.to_string())?;
            if fail_on_find && result.is_found() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Script { e, file } => {
            let src = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
            let ops = parse_script(&src).map_err(|e| e.to_string())?;
            for status in run_script(&ops, e).map_err(|e| e.to_string())? {
                writeln!(out, "{status}").map_err(|e| e.to_string())?;
            }
            ExitCode::SUCCESS
        }
        Command::Generate {
            e,
            alphabet,
            length,
            seed,
            max_steps,
            policy,
        } => {
            let cfg = GeneratorConfig {
                e,
                alphabet: alphabet.into_bytes(),
                target_length: length,
                seed,
                max_steps,
                policy: match policy {
                    Policy::Retry => GeneratorPolicy::Retry,
                    Policy::PeriodCut => GeneratorPolicy::PeriodCut,
                },
            };
            match generate(&cfg).map_err(|e| e.to_string())? {
                GeneratorOutcome::Complete(word) => {
                    out.write_all(&word)
                        .and_then(|_| writeln!(out))
                        .map_err(|e| e.to_string())?;
                    ExitCode::SUCCESS
                }
                GeneratorOutcome::Exhausted { longest, steps, .. } => {
                    out.write_all(&longest)
                        .and_then(|_| writeln!(out))
                        .map_err(|e| e.to_string())?;
                    eprintln!(
                        "exhausted after {steps} steps; longest word has length {}",
                        longest.len()
                    );
                    ExitCode::from(3)
                }
            }
        }
        Command::Unioccurrent { file } => {
            let text = read_all(file.as_ref()).map_err(|e| e.to_string())?;
            let mut tracker = SuffixTracker::new();
            for c in text {
                writeln!(out, "{}", tracker.push(c)).map_err(|e| e.to_string())?;
            }
            ExitCode::SUCCESS
        }
        Command::Oracle { e, file } => {
            let text = read_all(file.as_ref()).map_err(|e| e.to_string())?;
            let result = match oracle_first_repetition(&text, e) {
                Some(r) => DetectOutcome::Found {
                    prefix: r.prefix,
                    start: r.start,
                    period: r.period,
                },
                None => DetectOutcome::Free { length: text.len() },
            };
            writeln!(out, "{result}").map_err(|e| e.to_string())?;
            ExitCode::SUCCESS
        }
        Command::Bench { e, sizes, mode } => {
            let runs: &[(&str, BenchFn)] = match mode {
                Mode::Dyadic => &[("dyadic", bench_dyadic)],
                Mode::Ordered => &[("ordered", bench_ordered)],
                Mode::Both => &[("dyadic", bench_dyadic), ("ordered", bench_ordered)],
            };
            for (name, bench) in runs {
                if runs.len() > 1 {
                    writeln!(out, "# {name}").map_err(|e| e.to_string())?;
                }
                writeln!(out, "{}", tsv_header()).map_err(|e| e.to_string())?;
                for &n in &sizes {
                    writeln!(out, "{}", tsv_row(&bench(e, n))).map_err(|e| e.to_string())?;
                }
            }
            ExitCode::SUCCESS
        }
    };
    out.flush().map_err(|e| e.to_string())?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
