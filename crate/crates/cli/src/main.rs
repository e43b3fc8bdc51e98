mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use p5mwc::bench::run_bench;
use p5mwc::oracle::{brute_force_chi_w_budget, OracleError, DEFAULT_BUDGET};
use p5mwc::recognition::is_prime;
use p5mwc::{
    build_tree, color_prime, find_induced, generate, is_in_class, max_weighted_clique,
    parse_instance, solve_seeded, validate_coloring, write_instance, ColorError, GenerateError,
    Pattern, WeightedColoring, WeightedGraph,
};

use report::{BenchReport, ColorReport, DecomposeReport, RecognizeReport};

#[derive(Parser)]
#[command(
    name = "p5mwc",
    version,
    about = "Minimum weighted coloring of (P5, co-P5)-free graphs"
)]
struct Cli {
    /// Instance file (DIMACS edge format with `n <v> <w>` weight records)
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a minimum weighted coloring
    Color {
        /// Check the coloring and report the heaviest clique as a lower bound
        #[arg(long)]
        verify: bool,
        /// Reject inputs containing an induced P5 or co-P5 (exit 2)
        #[arg(long)]
        check_class: bool,
        /// Skip decomposition; the input must be a single leaf
        #[arg(long)]
        prime_only: bool,
    },
    /// Print the decomposition tree
    Decompose {
        /// Emit Graphviz instead of the indented listing
        #[arg(long)]
        dot: bool,
    },
    /// Write a random class member
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        max_weight: u64,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact weighted chromatic number by exhaustive search
    Oracle {
        /// Largest total weight attempted (at most 128)
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Look for induced P5, co-P5 and C5 and decide primality
    Recognize,
    /// Time the solver on generated instances
    Bench {
        /// Comma-separated vertex counts
        #[arg(long, default_value = "100,200")]
        sizes: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
    fn class(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<ColorError> for Failure {
    fn from(e: ColorError) -> Self {
        match e {
            ColorError::OutsideClass(_) | ColorError::NoStrongStableSet => {
                Failure::class(e.to_string())
            }
            _ => Failure::internal(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    let input = || load(cli.input.as_deref());
    match cli.command {
        Command::Color {
            verify,
            check_class,
            prime_only,
        } => color(&input()?, cli.seed, format, verify, check_class, prime_only),
        Command::Decompose { dot } => decompose(&input()?, format, dot),
        Command::Generate { n, max_weight, out } => {
            generate_cmd(n, max_weight, cli.seed, out.as_deref())
        }
        Command::Oracle { budget } => oracle(&input()?, budget, format),
        Command::Recognize => recognize(&input()?, format),
        Command::Bench { sizes, trials } => bench(&sizes, trials, cli.seed, format),
    }
}

fn load(path: Option<&Path>) -> Result<WeightedGraph, Failure> {
    let path = path.ok_or_else(|| Failure::usage("--input is required for this command"))?;
    let bytes = fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure::usage(format!("{}: not valid UTF-8", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(format: Format, text: String, structured: impl serde::Serialize) {
    let body = match format {
        Format::Text => text,
        Format::Structured => serde_json::to_string(&structured).expect("reports serialize") + "\n",
    };
    // a closed pipe is not an error worth reporting
    let _ = io::stdout().lock().write_all(body.as_bytes());
}

fn pattern_witness(wg: &WeightedGraph) -> Option<(Pattern, [usize; 5])> {
    [Pattern::P5, Pattern::CoP5]
        .into_iter()
        .find_map(|p| find_induced(wg.graph(), p).map(|e| (p, e)))
}

fn color(
    wg: &WeightedGraph,
    seed: u64,
    format: Format,
    verify: bool,
    check_class: bool,
    prime_only: bool,
) -> Result<(), Failure> {
    let n = wg.graph().n();
    if check_class && !is_in_class(wg.graph()) {
        let (p, e) = pattern_witness(wg)
            .ok_or_else(|| Failure::internal("class check disagrees with search"))?;
        return Err(Failure::class(format!(
            "induced {} on vertices {}",
            report::pattern_name(p),
            report::one_based(&e)
        )));
    }
    let coloring: WeightedColoring = if prime_only {
        if build_tree(wg.graph()).len() != 1 {
            return Err(Failure::usage(
                "--prime-only needs a prime, complete or edgeless graph",
            ));
        }
        color_prime(wg)?
    } else {
        solve_seeded(wg, seed)?
    };
    let mut report = ColorReport::new(&coloring);
    if verify {
        let valid = validate_coloring(wg, &coloring)?;
        let (_, bound) = max_weighted_clique(wg);
        report.valid = Some(valid);
        report.lower_bound = Some(bound);
        if !valid {
            return Err(Failure::internal("solver returned an invalid coloring"));
        }
        if coloring.total() < bound || coloring.len() > (2 * n).saturating_sub(1).max(1) {
            return Err(Failure::internal("coloring violates a structural bound"));
        }
    }
    emit(format, report.text(), &report);
    Ok(())
}

fn decompose(wg: &WeightedGraph, format: Format, dot: bool) -> Result<(), Failure> {
    let tree = build_tree(wg.graph());
    if dot {
        emit(Format::Text, tree.render_dot(), ());
        return Ok(());
    }
    let report = DecomposeReport::new(&tree, wg.graph());
    emit(format, report.text(&tree), &report);
    Ok(())
}

fn generate_cmd(n: usize, max_weight: u64, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let wg = generate(n, max_weight, seed).map_err(|e| match e {
        GenerateError::Empty => Failure::usage(e.to_string()),
        GenerateError::Verification(_) => Failure::internal(e.to_string()),
    })?;
    let text = format!(
        "c generated n={n} max_weight={max_weight} seed={seed}\n{}",
        write_instance(&wg)
    );
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
        }
        None => {
            emit(Format::Text, text, ());
            Ok(())
        }
    }
}

fn oracle(wg: &WeightedGraph, budget: u64, format: Format) -> Result<(), Failure> {
    let (_, coloring) =
        brute_force_chi_w_budget(wg, budget).map_err(|e @ OracleError::TooLarge { .. }| {
            Failure {
                code: 4,
                message: e.to_string(),
            }
        })?;
    let mut report = ColorReport::new(&coloring);
    report.valid = Some(validate_coloring(wg, &coloring)?);
    report.lower_bound = Some(max_weighted_clique(wg).1);
    emit(format, report.text(), &report);
    Ok(())
}

fn recognize(wg: &WeightedGraph, format: Format) -> Result<(), Failure> {
    let g = wg.graph();
    let report = RecognizeReport {
        in_class: is_in_class(g),
        p5: find_induced(g, Pattern::P5).map(|e| report::to_one_based(&e)),
        co_p5: find_induced(g, Pattern::CoP5).map(|e| report::to_one_based(&e)),
        c5: find_induced(g, Pattern::C5).map(|e| report::to_one_based(&e)),
        prime: g.n() >= 3 && is_prime(g),
    };
    emit(format, report.text(), &report);
    Ok(())
}

fn bench(sizes: &str, trials: usize, seed: u64, format: Format) -> Result<(), Failure> {
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::usage(format!("bad size {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    let rows = run_bench(&sizes, trials, seed).map_err(|e| Failure::internal(e.to_string()))?;
    let report = BenchReport::new(&rows);
    emit(format, report.text(), &report);
    Ok(())
}
