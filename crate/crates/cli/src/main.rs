mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hhzk::complex::{from_spec, parse_json, parse_text, to_json, to_text, SimplicialComplex};
use hhzk::fuzz::{run_fuzz, FuzzConfig};
use hhzk::linalg::{Integers, PrimeField, Rationals};
use hhzk::verify::{check_names, run_checks};

use report::{compute, Report, What};

/// Warn above this many vertices: every pipeline visits all 2^m subsets.
const WARN_VERTICES: usize = 16;

#[derive(Parser)]
#[command(
    name = "hhzk",
    version,
    about = "Bigraded (double) cohomology of moment-angle complexes"
)]
struct Cli {
    /// Size of the worker pool (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute H, HH or HH_* of a complex.
    Compute(ComputeArgs),
    /// Run the reference checklist.
    VerifyPaper {
        /// Run only checks whose name contains this string.
        #[arg(long)]
        only: Option<String>,
    },
    /// Cross-check both pipelines on seeded random complexes.
    Fuzz(FuzzArgs),
    /// Write a named complex to a file (or stdout).
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Coeff {
    #[value(name = "Z")]
    Z,
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Complex file: JSON `{"m": .., "maximal_faces": [..]}` or one face per line.
    input: Option<PathBuf>,
    /// Named complex, e.g. `cycle:5`, `boundary:4`, `points:3`, `simplex:2`, `rp2`.
    #[arg(long = "gen", value_name = "SPEC", conflicts_with = "input")]
    generator: Option<String>,
    #[arg(long, value_enum, default_value = "Z")]
    coeff: Coeff,
    /// The prime for `--coeff Fp`.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_enum, default_value = "all")]
    what: What,
    /// Also run the Koszul pipeline and the bicomplex identity checks.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    m_max: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Corrupt one sign of d'; the run is expected to fail.
    #[arg(long)]
    inject_sign_fault: bool,
    /// Where to write the offending complex on failure.
    #[arg(long)]
    save: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct GenerateArgs {
    /// Named complex, as for `compute --gen`.
    spec: String,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Exit status: 1 for bad input, 2 for a failed verification.
enum Failure {
    Input(anyhow::Error),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Input(e)
    }
}

fn load(args: &ComputeArgs) -> anyhow::Result<(String, SimplicialComplex)> {
    if let Some(spec) = &args.generator {
        return Ok((spec.clone(), from_spec(spec)?));
    }
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| anyhow!("give an input file or --gen SPEC"))?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_json =
        path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    let k = if is_json {
        parse_json(&text)?
    } else {
        parse_text(&text)?
    };
    Ok((path.display().to_string(), k))
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), Failure> {
    let (source, k) = load(args)?;
    if k.m() > WARN_VERTICES {
        eprintln!(
            "warning: {} vertices; the computation visits 2^{} subsets",
            k.m(),
            k.m()
        );
    }
    let started = std::time::Instant::now();
    let report: Report = match args.coeff {
        Coeff::Z => compute(&Integers, &source, &k, args.what, args.verify),
        Coeff::Q => compute(&Rationals, &source, &k, args.what, args.verify),
        Coeff::Fp => {
            let p = args
                .p
                .ok_or_else(|| anyhow!("--coeff Fp needs --p <prime>"))?;
            compute(
                &PrimeField::new(p).map_err(anyhow::Error::from)?,
                &source,
                &k,
                args.what,
                args.verify,
            )
        }
    }
    .map_err(|e| Failure::Verification(e.to_string()))?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", report.render());
    }
    eprintln!("finished in {:.2?}", started.elapsed());
    match report.agreement {
        Some(false) => Err(Failure::Verification("the two pipelines disagree".into())),
        _ => Ok(()),
    }
}

fn cmd_verify(only: Option<&str>) -> Result<(), Failure> {
    let outcomes = run_checks(only);
    if outcomes.is_empty() {
        return Err(Failure::Input(anyhow!(
            "no check matches; available: {}",
            check_names().join(", ")
        )));
    }
    let mut failed = 0;
    for o in &outcomes {
        println!(
            "[{}] {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.message
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "{}/{} checks passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} checks failed")));
    }
    Ok(())
}

fn cmd_fuzz(args: &FuzzArgs) -> Result<(), Failure> {
    if args.m_max == 0 || args.m_max > hhzk::complex::MAX_VERTICES {
        return Err(Failure::Input(anyhow!(
            "--m-max must be between 1 and {}",
            hhzk::complex::MAX_VERTICES
        )));
    }
    if args.m_max > 8 {
        eprintln!("warning: --m-max above 8 makes each trial slow");
    }
    let cfg = FuzzConfig {
        seed: args.seed,
        m_max: args.m_max,
        trials: args.trials,
        inject_sign_fault: args.inject_sign_fault,
    };
    match run_fuzz(&cfg) {
        Ok(s) => {
            println!(
                "seed {}: {} trials, largest m {}, total HH rank {}, 0 violations",
                args.seed, s.trials, s.largest_m, s.total_hh_rank
            );
            Ok(())
        }
        Err(v) => {
            println!("violation in trial {}: {}", v.trial, v.reason);
            println!("{}", v.complex_json);
            if let Some(path) = &args.save {
                fs::write(path, &v.complex_json)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Err(Failure::Verification(v.reason))
        }
    }
}

fn cmd_generate(args: &GenerateArgs) -> Result<(), Failure> {
    let k = from_spec(&args.spec).map_err(anyhow::Error::from)?;
    let text = match args.format {
        Format::Json => to_json(&k) + "\n",
        Format::Text => to_text(&k),
    };
    match &args.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::VerifyPaper { only } => cmd_verify(only.as_deref()),
        Command::Fuzz(a) => cmd_fuzz(a),
        Command::Generate(a) => cmd_generate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
