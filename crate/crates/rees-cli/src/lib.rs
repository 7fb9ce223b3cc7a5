//! Command-line frontend. Exit codes: 0 on success with all verdicts true,
//! 1 on usage errors (bad flags, malformed polynomials, invalid setups),
//! 2 on verification failures, theorem violations, or exhausted budgets.

pub mod corpus;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rees_core::rees::{
    classify, downgrade_sequence, rees_ideal_downgrade, rees_ideal_saturation, verify_main_theorem,
    ReesSetup, Strategy,
};
use rees_core::{parse_polynomial, Error, Field, Polynomial, Ring};

use corpus::CorpusSpec;
use report::{CaseJson, DowngradeJson, EnvelopeJson, IdealJson, VerifyJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rees",
    version,
    about = "Defining ideal of the Rees algebra of the maximal ideal of a hypersurface ring",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Min,
    Max,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Min => Strategy::MinIndex,
            StrategyArg::Max => Strategy::MaxIndex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Downgrade,
    Saturation,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Number of x variables (n >= 2)
    #[arg(long)]
    n: usize,
    /// Hypersurface polynomial in x1..xn, e.g. "x1^2*x2 + x1*x3^2"
    #[arg(long)]
    f: String,
    /// Coefficient field: an odd prime modulus, or "rational"
    #[arg(long, default_value = "32003")]
    field: String,
    /// Exchange strategy for partial columns
    #[arg(long, value_enum, default_value_t = StrategyArg::Min)]
    strategy: StrategyArg,
    /// Reduction-step budget for basis computations
    #[arg(long)]
    budget: Option<u64>,
    /// Emit machine-readable JSON on stdout
    #[arg(long)]
    json: bool,
    /// Thread count for data-parallel stages (1 = sequential)
    #[arg(long)]
    jobs: Option<usize>,
}

impl InstanceArgs {
    fn field(&self) -> Result<Field, Error> {
        if self.field == "rational" {
            return Ok(Field::Rational);
        }
        let p: u64 = self
            .field
            .parse()
            .map_err(|_| Error::InvalidSetup(format!("bad field {:?}", self.field)))?;
        Field::prime(p)
    }

    fn setup(&self) -> Result<(ReesSetup, Polynomial), Error> {
        let ring = Ring::new(self.n, self.field()?)?;
        let f = parse_polynomial(&self.f, ring)?;
        let setup = match self.budget {
            Some(b) => ReesSetup::with_budget(self.n, f.clone(), b)?,
            None => ReesSetup::new(self.n, f.clone())?,
        };
        Ok((setup, f))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the downgraded sequence f_0 .. f_d of f
    Downgrade(InstanceArgs),
    /// Generators of the defining ideal, by construction or by saturation
    ReesIdeal {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Downgrade)]
        method: MethodArg,
    },
    /// Check the defining-ideal identity four ways on one instance
    Verify(InstanceArgs),
    /// Verify and classify one instance (generators, relation type, fiber,
    /// dimension, depth, Cohen-Macaulayness)
    Classify {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Seed for the depth-probe random linear forms
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Omit wall-clock timings from output
        #[arg(long)]
        no_timings: bool,
    },
    /// Run a corpus of instances and emit an aggregate JSON report
    Corpus {
        /// Corpus spec file (JSON); the built-in grid when omitted
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Global seed override
        #[arg(long)]
        seed: Option<u64>,
        /// Thread count for case execution (1 = sequential)
        #[arg(long)]
        jobs: Option<usize>,
        /// Omit wall-clock timings so output is byte-reproducible
        #[arg(long)]
        no_timings: bool,
    },
}

/// Run `f` inside a rayon pool of the requested size; `jobs = 1` gives
/// sequential execution. Without the `parallel` feature everything is
/// already sequential.
fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(k) if k >= 1 => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool")
                .install(f),
            _ => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidModulus(_)
        | Error::InvalidRing(_)
        | Error::InvalidSetup(_)
        | Error::NonInvertibleDenominator { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Entry point shared by the binary and the tests: parse `argv`, run the
/// subcommand, stream human or JSON output, and return the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_exit_code(&e)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Error> {
    match cli.command {
        Command::Downgrade(instance) => {
            let (setup, _) = instance.setup()?;
            let strategy: Strategy = instance.strategy.into();
            let seq = with_jobs(instance.jobs, || downgrade_sequence(&setup, strategy))?;
            if instance.json {
                let j = DowngradeJson {
                    schema: "rees-downgrade/1",
                    n: setup.n(),
                    d: setup.degree(),
                    f: setup.hypersurface().format(),
                    strategy: format!("{:?}", instance.strategy).to_lowercase(),
                    sequence: seq.entries.iter().map(|p| p.format()).collect(),
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&j).unwrap());
            } else {
                let _ = writeln!(
                    out,
                    "n = {}, d = {}, strategy = {}",
                    setup.n(),
                    setup.degree(),
                    format!("{:?}", instance.strategy).to_lowercase()
                );
                for (i, fi) in seq.entries.iter().enumerate() {
                    let _ = writeln!(out, "f{i} = {}", fi.format());
                }
            }
            Ok(EXIT_OK)
        }
        Command::ReesIdeal { instance, method } => {
            let (setup, _) = instance.setup()?;
            let strategy: Strategy = instance.strategy.into();
            let (gens, sat_index, method_name) = with_jobs(instance.jobs, || match method {
                MethodArg::Downgrade => {
                    let ideal = rees_ideal_downgrade(&setup, strategy)?;
                    Ok::<_, Error>((ideal.generators().to_vec(), None, "downgrade"))
                }
                MethodArg::Saturation => {
                    let (ideal, idx) = rees_ideal_saturation(&setup)?;
                    Ok((ideal.generators().to_vec(), Some(idx), "saturation"))
                }
            })?;
            if instance.json {
                let j = IdealJson {
                    schema: "rees-ideal/1",
                    n: setup.n(),
                    d: setup.degree(),
                    f: setup.hypersurface().format(),
                    method: method_name.to_string(),
                    generators: gens.iter().map(|p| p.format()).collect(),
                    saturation_index: sat_index,
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&j).unwrap());
            } else {
                let _ = writeln!(
                    out,
                    "defining ideal via {method_name}: {} generators",
                    gens.len()
                );
                for g in &gens {
                    let _ = writeln!(out, "  {}", g.format());
                }
                if let Some(idx) = sat_index {
                    let _ = writeln!(out, "saturation index: {idx}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify(instance) => {
            let (setup, _) = instance.setup()?;
            let record = with_jobs(instance.jobs, || verify_main_theorem(&setup))?;
            let chain_ok = record.minors_contained && record.chain_flags.iter().all(|&b| b);
            if instance.json {
                let j = VerifyJson {
                    schema: "rees-verify/1",
                    n: setup.n(),
                    d: setup.degree(),
                    f: setup.hypersurface().format(),
                    verdict: record.verdict,
                    strategies_agree: record.strategies_agree,
                    downgrade_equals_saturation: record.downgrade_equals_saturation,
                    symmetric_saturation_agrees: record.symmetric_saturation_agrees,
                    chain_ok,
                    saturation_index: record.saturation_index,
                    symmetric_saturation_index: record.symmetric_saturation_index,
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&j).unwrap());
            } else {
                let _ = writeln!(out, "verdict: {}", record.verdict);
                let _ = writeln!(
                    out,
                    "  strategies agree:            {}",
                    record.strategies_agree
                );
                let _ = writeln!(
                    out,
                    "  downgrade = saturation:      {}",
                    record.downgrade_equals_saturation
                );
                let _ = writeln!(
                    out,
                    "  symmetric saturation agrees: {}",
                    record.symmetric_saturation_agrees
                );
                let _ = writeln!(out, "  containment chain holds:     {chain_ok}");
                let _ = writeln!(
                    out,
                    "  saturation index:            {}",
                    record.saturation_index
                );
            }
            Ok(if record.verdict {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Classify {
            instance,
            seed,
            no_timings,
        } => {
            let (setup, _) = instance.setup()?;
            let report = with_jobs(instance.jobs, || classify(&setup, seed))?;
            if instance.json {
                let case = CaseJson::from_report(&report);
                let total: u128 = report.timings.iter().map(|(_, d)| d.as_millis()).sum();
                let timings = (!no_timings).then(|| report::TimingsJson {
                    total_ms: total,
                    cases_ms: vec![total],
                });
                let envelope = EnvelopeJson::new(vec![case], timings);
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&envelope).unwrap());
                Ok(if envelope.all_passed() {
                    EXIT_OK
                } else {
                    EXIT_FAILURE
                })
            } else {
                let _ = writeln!(out, "n = {}, d = {}", report.n, report.d);
                let _ = writeln!(out, "f = {}", report.f.format());
                let _ = writeln!(out, "main identity verdict:  {}", report.verdict);
                let _ = writeln!(out, "saturation index:       {}", report.saturation_index);
                let _ = writeln!(
                    out,
                    "minimal generators:     {}",
                    report.minimal_generator_count
                );
                let _ = writeln!(out, "relation type:          {}", report.relation_type);
                let _ = writeln!(
                    out,
                    "fiber generator:        {}",
                    report.fiber_generator.format()
                );
                let _ = writeln!(out, "fiber T-regularity:     {}", report.fiber_regularity_t);
                let _ = writeln!(out, "dimension:              {}", report.dimension);
                let _ = writeln!(out, "depth:                  {}", report.depth);
                let _ = writeln!(out, "Cohen-Macaulay:         {}", report.cm);
                let _ = writeln!(out, "almost Cohen-Macaulay:  {}", report.almost_cm);
                if !no_timings {
                    let parts: Vec<String> = report
                        .timings
                        .iter()
                        .map(|(k, v)| format!("{k} {} ms", v.as_millis()))
                        .collect();
                    let _ = writeln!(out, "timings:                {}", parts.join(", "));
                }
                Ok(if report.verdict {
                    EXIT_OK
                } else {
                    EXIT_FAILURE
                })
            }
        }
        Command::Corpus {
            spec,
            seed,
            jobs,
            no_timings,
        } => {
            let spec_value = match &spec {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::InvalidSetup(format!("cannot read {}: {e}", path.display()))
                    })?;
                    serde_json::from_str::<CorpusSpec>(&text).map_err(|e| {
                        Error::InvalidSetup(format!("bad corpus spec {}: {e}", path.display()))
                    })?
                }
                None => CorpusSpec::default_corpus(),
            };
            let global_seed = seed.unwrap_or(1);
            let envelope = with_jobs(jobs, || {
                corpus::run_corpus(&spec_value, global_seed, !no_timings)
            })?;

            // Summary table goes to stderr so stdout stays pure JSON.
            let mut table = String::new();
            table.push_str("  #  n  d  verdict  rt  depth  cm     result\n");
            for (i, c) in envelope.cases.iter().enumerate() {
                table.push_str(&format!(
                    "{:>3}  {}  {}  {:<7}  {:<2}  {:<5}  {:<5}  {}\n",
                    i,
                    c.n,
                    c.d.map(|d| d.to_string()).unwrap_or_else(|| "?".into()),
                    c.verdict
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "-".into()),
                    c.relation_type
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "-".into()),
                    c.depth.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                    c.cm.map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                    if c.passed() {
                        "pass".to_string()
                    } else {
                        c.error.clone().unwrap_or_else(|| "FAIL".into())
                    }
                ));
            }
            table.push_str(&format!(
                "passed {} / failed {}\n",
                envelope.passed, envelope.failed
            ));
            eprint!("{table}");

            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&envelope).unwrap());
            Ok(if envelope.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
    }
}
