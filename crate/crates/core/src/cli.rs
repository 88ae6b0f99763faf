//! Command-line front end.
//!
//! Exit codes: 0 success, 1 generation or validation failure, 2 usage
//! error, 3 simulation property violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bft::{self, BftParameters, RuleVariants, MIN_REPLICATION};
use crate::engine::{MergeSignature, PipelineStats};
use crate::fsm::{deserialize, serialize, validate};
use crate::render::{render, Format, RenderOptions};
use crate::sim::{check_agreement, run_simulation, seeded_fault_plan, Delivery, Scenario, SimConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "metafsm", version, about = "Generate, render and simulate BFT commit state machines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate the minimized machine for a replication factor.
    Generate {
        #[arg(short = 'r', long = "replication", value_parser = replication_factor)]
        r: u32,
        /// Output document; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MergeMode::SelfLoopAware)]
        merge: MergeMode,
    },
    /// Render a machine document.
    Render {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: RenderFormat,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Module name used in generated source.
        #[arg(long, default_value = "commit_machine")]
        module_name: String,
        /// Leave out state and transition commentary.
        #[arg(long)]
        no_annotations: bool,
    },
    /// Run seeded simulations and print one verdict per seed.
    Simulate(SimArgs),
    /// Generate minimal machines for several fault tolerances and time them.
    Bench {
        #[arg(long = "f", value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..=40))]
        f: Vec<u32>,
        #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
        format: BenchFormat,
        /// Also print per-stage statistics rows to stderr.
        #[arg(long)]
        stages: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MergeMode {
    SelfLoopAware,
    Literal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Text,
    Dot,
    Source,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScenarioArg {
    #[value(name = "single_update")]
    SingleUpdate,
    #[value(name = "concurrent_updates")]
    ConcurrentUpdates,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DeliveryArg {
    #[value(name = "fifo_per_link")]
    FifoPerLink,
    #[value(name = "random_interleave")]
    RandomInterleave,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BenchFormat {
    Csv,
}

fn replication_factor(s: &str) -> Result<u32, String> {
    let r: u32 = s.parse().map_err(|e| format!("`{s}` is not a replication factor: {e}"))?;
    if r < MIN_REPLICATION {
        return Err(format!(
            "replication factor must be at least {MIN_REPLICATION}, the smallest configuration tolerating one fault"
        ));
    }
    if r > 301 {
        return Err("replication factor above 301 is not supported".into());
    }
    Ok(r)
}

/// Formats `x` with two significant figures.
pub fn two_significant(x: f64) -> String {
    if x <= 0.0 || !x.is_finite() {
        return "0.0".into();
    }
    let magnitude = x.log10().floor() as i32;
    let scale = 10f64.powi(1 - magnitude);
    let rounded = (x * scale).round() / scale;
    // Rounding can carry into the next decade, e.g. 0.00998 becomes 0.010.
    let magnitude = rounded.log10().floor() as i32;
    let decimals = (1 - magnitude).max(0) as usize;
    format!("{rounded:.decimals$}")
}

fn write_output(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

/// Parses `args` and runs the command, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Generate { r, output, merge } => generate(r, output.as_deref(), merge),
        Command::Render { input, format, output, module_name, no_annotations } => {
            render_cmd(&input, format, output.as_deref(), module_name, !no_annotations)
        }
        Command::Simulate(args) => simulate(args),
        Command::Bench { f, format: BenchFormat::Csv, stages } => bench(&f, stages),
    }
}

fn generate(r: u32, output: Option<&Path>, merge: MergeMode) -> i32 {
    let signature = match merge {
        MergeMode::SelfLoopAware => MergeSignature::SelfLoopAware,
        MergeMode::Literal => MergeSignature::Literal,
    };
    let (machine, stats) = match bft::generate_with(r, RuleVariants::default(), signature) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    let diagnostics = validate(&machine);
    if !diagnostics.is_empty() {
        for d in diagnostics {
            eprintln!("error: {d}");
        }
        return EXIT_FAILURE;
    }
    if let Err(e) = write_output(output, &serialize(&machine)) {
        eprintln!("error: cannot write document: {e}");
        return EXIT_FAILURE;
    }
    let lines = format!("{}\n{}\n", PipelineStats::CSV_HEADER, stats.csv_row());
    if output.is_some() {
        print!("{lines}");
    } else {
        eprint!("{lines}");
    }
    EXIT_OK
}

fn render_cmd(input: &Path, format: RenderFormat, output: Option<&Path>, module_name: String, notes: bool) -> i32 {
    let text = match fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return EXIT_FAILURE;
        }
    };
    let machine = match deserialize(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_FAILURE;
        }
    };
    let diagnostics = validate(&machine);
    if !diagnostics.is_empty() {
        for d in diagnostics {
            eprintln!("error: {}: {d}", input.display());
        }
        return EXIT_FAILURE;
    }
    let options = RenderOptions {
        format: match format {
            RenderFormat::Text => Format::Text,
            RenderFormat::Dot => Format::Dot,
            RenderFormat::Source => Format::Source,
        },
        include_annotations: notes,
        source_module_name: module_name,
    };
    let rendered = match render(&machine, &options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = write_output(output, &rendered) {
        eprintln!("error: cannot write output: {e}");
        return EXIT_FAILURE;
    }
    EXIT_OK
}

#[derive(Debug, Args)]
struct SimArgs {
    #[arg(short = 'r', long = "replication", value_parser = replication_factor)]
    r: u32,
    #[arg(long, value_enum, default_value_t = ScenarioArg::SingleUpdate)]
    scenario: ScenarioArg,
    #[arg(long, default_value_t = 0)]
    silent: usize,
    #[arg(long, default_value_t = 0)]
    crash: usize,
    #[arg(long, default_value_t = 0)]
    byzantine: usize,
    /// Global step at which crashing nodes stop; drawn per seed when omitted.
    #[arg(long)]
    crash_at: Option<u64>,
    #[arg(long, default_value_t = 100)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_start: u64,
    #[arg(long, value_enum, default_value_t = DeliveryArg::RandomInterleave)]
    delivery: DeliveryArg,
    /// Write every trace to this directory.
    #[arg(long)]
    trace_dir: Option<PathBuf>,
}

fn simulate(a: SimArgs) -> i32 {
    let faulty = a.silent + a.crash + a.byzantine;
    if faulty >= a.r as usize {
        eprintln!("error: {faulty} faulty nodes leave no correct node among {}", a.r);
        return EXIT_USAGE;
    }
    let machine = match bft::generate(a.r) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    if let Some(dir) = &a.trace_dir {
        if let Err(e) = fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {e}", dir.display());
            return EXIT_FAILURE;
        }
    }
    let scenario = match a.scenario {
        ScenarioArg::SingleUpdate => Scenario::SingleUpdate,
        ScenarioArg::ConcurrentUpdates => Scenario::ConcurrentUpdates,
    };
    let delivery = match a.delivery {
        DeliveryArg::FifoPerLink => Delivery::FifoPerLink,
        DeliveryArg::RandomInterleave => Delivery::RandomInterleave,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = writeln!(out, "scenario,r,faults,seed,verdict");
    let mut first_failure: Option<PathBuf> = None;
    for seed in a.seed_start..a.seed_start.saturating_add(a.seeds) {
        let faults = match seeded_fault_plan(a.r, seed, a.silent, a.crash, a.byzantine, a.crash_at) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let config = SimConfig { r: a.r, seed, scenario, faults, delivery };
        let trace = match run_simulation(&machine, &config) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAILURE;
            }
        };
        let verdict = check_agreement(&trace, &config);
        let _ = writeln!(out, "{},{},{},{},{}", scenario.as_str(), a.r, config.fault_summary(), seed, verdict);
        let file_name = format!("trace-{}-r{}-seed{}.csv", scenario.as_str(), a.r, seed);
        if let Some(dir) = &a.trace_dir {
            if let Err(e) = fs::write(dir.join(&file_name), trace.to_text()) {
                eprintln!("error: cannot write trace: {e}");
                return EXIT_FAILURE;
            }
        }
        // Byzantine runs are judged on safety; liveness stays visible in the CSV.
        let violation = if a.byzantine > 0 { !verdict.safety_holds() } else { !verdict.is_pass() };
        if violation && first_failure.is_none() {
            let path = match &a.trace_dir {
                Some(dir) => dir.join(&file_name),
                None => {
                    let p = std::env::temp_dir().join(&file_name);
                    if let Err(e) = fs::write(&p, trace.to_text()) {
                        eprintln!("error: cannot write trace: {e}");
                    }
                    p
                }
            };
            eprintln!("seed {seed}: {}", verdict.reason().unwrap_or("failed"));
            first_failure = Some(path);
        }
    }
    match first_failure {
        Some(path) => {
            eprintln!("first failing trace: {}", path.display());
            EXIT_VIOLATION
        }
        None => EXIT_OK,
    }
}

fn bench(fs_list: &[u32], stages: bool) -> i32 {
    println!("f,r,initial,final,seconds");
    for &f in fs_list {
        let params = match BftParameters::for_faults(f) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let started = Instant::now();
        let result = bft::generate_with(params.r, RuleVariants::default(), MergeSignature::default());
        let seconds = started.elapsed().as_secs_f64();
        match result {
            Ok((_, stats)) => {
                println!("{},{},{},{},{}", f, params.r, stats.initial, stats.final_count, two_significant(seconds));
                if stages {
                    eprintln!("{} passes={:?}", stats.csv_row(), stats.pass_counts);
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAILURE;
            }
        }
    }
    EXIT_OK
}
