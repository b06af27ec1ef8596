//! Command-line frontend for the `orderfix` engine.
//!
//! Exit codes: 0 on success, 1 on usage errors and unsupported requests,
//! 2 on malformed input, 3 on internal failures.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orderfix::engine::sample_signs;
use orderfix::equivalence::{canonical_form, canonical_key, count_classes, enumerate_classes};
use orderfix::format::{self, ConfigurationJson};
use orderfix::landmark::{scan, PointCloud};
use orderfix::{Configuration, Engine, EngineOptions, Error, FixityVerdict};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "orderfix", version, about = "Decide whether coordinate orderings fix a simplex orientation")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text, env = "ORDERFIX_FORMAT")]
    format: OutputFormat,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0, env = "ORDERFIX_SEED")]
    seed: u64,
    /// Number of random realizations for `sample` and for unknown verdicts.
    #[arg(long, global = true, default_value_t = 1000, env = "ORDERFIX_SAMPLES")]
    samples: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "ORDERFIX_THREADS")]
    threads: Option<usize>,
    /// At four labels, re-derive every verdict three ways and fail on disagreement.
    #[arg(long, global = true, env = "ORDERFIX_DEBUG_CROSSCHECK")]
    debug_crosscheck: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide fixity of a configuration.
    Decide(Source),
    /// List the linear extensions of a configuration.
    Extensions(Source),
    /// Canonical form of a linear configuration and the element mapping to it.
    Canon(Source),
    /// Count classes of linear configurations with N labels.
    CountClasses(Classes),
    /// One representative per class of linear configurations with N labels.
    EnumerateClasses(Classes),
    /// Decide every (d+1)-subset of a labelled point cloud.
    Scan {
        /// CSV file with a `label,x,y,z` header, or `-` for stdin.
        csv: PathBuf,
        /// Break ties with a seeded perturbation (results are not exact).
        #[arg(long, value_name = "SEED")]
        jitter: Option<u64>,
    },
    /// Decide and, if not fixed, print two realizations of opposite sign.
    Witness(Source),
    /// Histogram of determinant signs over random realizations.
    Sample(Source),
}

#[derive(Debug, Args)]
struct Source {
    /// Configuration file (text or JSON), or `-` for stdin.
    #[arg(required_unless_present = "inline")]
    input: Option<PathBuf>,
    /// Configuration given inline, e.g. `-e 'x: A<B<C; y: B<C<A'`.
    #[arg(short = 'e', long, conflicts_with = "input")]
    inline: Option<String>,
}

#[derive(Debug, Args)]
struct Classes {
    n: usize,
    /// Permit runs that can take a long time.
    #[arg(long, env = "ORDERFIX_ALLOW_LONG")]
    allow_long: bool,
}

/// Label count from which `count-classes` needs `--allow-long`.
const LONG_COUNT_LABELS: usize = 6;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } => Failure::Usage(e.to_string()),
            Error::DimensionMismatch(_) | Error::NotLinear(_) => Failure::Input(e.to_string()),
            _ if e.is_input_format() => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
    }
}

impl Source {
    fn load(&self) -> Result<Configuration, Failure> {
        let text = match (&self.inline, &self.input) {
            (Some(inline), _) => inline.replace(';', "\n"),
            (None, Some(path)) => read_input(path)?,
            (None, None) => return Err(Failure::Usage("no configuration given".into())),
        };
        Ok(format::parse(&text)?)
    }
}

fn engine(global: &Global) -> Engine {
    Engine::new(EngineOptions {
        debug_crosscheck: global.debug_crosscheck,
        seed: global.seed,
        frontier_samples: global.samples,
        ..EngineOptions::default()
    })
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize") + "\n"
}

fn chains_line(cfg: &Configuration) -> String {
    format::to_text(cfg)
        .lines()
        .skip(1)
        .collect::<Vec<_>>()
        .join("; ")
}

fn verdict_text(v: &FixityVerdict) -> String {
    let mut out = v.summary() + "\n";
    if let FixityVerdict::Unknown { samples: Some(h), .. } = v {
        out.push_str(&format!("samples: + {} - {} 0 {}\n", h.pos, h.neg, h.zero));
    }
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    let g = &cli.global;
    let json = g.format == OutputFormat::Json;
    Ok(match &cli.command {
        Command::Decide(src) => {
            let cfg = src.load()?;
            let v = engine(g).decide(&cfg)?;
            if json {
                serde_json::to_string_pretty(&v).expect("verdicts serialize") + "\n"
            } else {
                verdict_text(&v)
            }
        }
        Command::Extensions(src) => {
            let cfg = src.load()?;
            let count = cfg.extension_count();
            let limit = EngineOptions::default().max_extensions;
            if count > limit {
                return Err(Failure::Usage(format!("{count} linear extensions exceed the limit of {limit}")));
            }
            if json {
                let list: Vec<ConfigurationJson> = cfg.extensions().map(|e| ConfigurationJson::from(&e)).collect();
                pretty(&json!({ "count": count, "extensions": list }))
            } else {
                cfg.extensions().map(|e| chains_line(&e) + "\n").collect()
            }
        }
        Command::Canon(src) => {
            let cfg = src.load()?;
            let (canon, element) = canonical_form(&cfg)?;
            let key = canonical_key(&cfg)?;
            if json {
                pretty(&json!({
                    "key": key.to_string(),
                    "canonical": ConfigurationJson::from(&canon),
                    "element": element,
                    "sign_parity": element.sign_parity(),
                }))
            } else {
                format!(
                    "key: {key}\n{}element: axes {:?} labels {:?} reversed {:?} (parity {})\n",
                    format::to_text(&canon),
                    element.axis_perm(),
                    element.label_perm(),
                    element.reversed(),
                    element.sign_parity()
                )
            }
        }
        Command::CountClasses(c) => {
            if c.n >= LONG_COUNT_LABELS && !c.allow_long {
                return Err(Failure::Usage(format!(
                    "counting classes for n = {} is gated; pass --allow-long",
                    c.n
                )));
            }
            let count = count_classes(c.n)?;
            if json {
                format!("{{\"n\":{},\"classes\":{count}}}\n", c.n)
            } else {
                format!("{count}\n")
            }
        }
        Command::EnumerateClasses(c) => {
            let reps = enumerate_classes(c.n, c.allow_long)?;
            if json {
                let list: Vec<Value> = reps
                    .iter()
                    .map(|r| {
                        json!({
                            "key": canonical_key(r).expect("linear").to_string(),
                            "configuration": ConfigurationJson::from(r),
                        })
                    })
                    .collect();
                pretty(&Value::Array(list))
            } else {
                reps.iter()
                    .map(|r| format!("{}\t{}\n", canonical_key(r).expect("linear"), chains_line(r)))
                    .collect()
            }
        }
        Command::Scan { csv, jitter } => {
            let mut cloud = PointCloud::from_csv(&read_input(csv)?)?;
            if let Some(seed) = jitter {
                cloud = cloud.jitter(*seed);
            }
            let report = scan(&cloud, &engine(g))?;
            if json {
                report.to_json_lines()
            } else {
                report.to_table()
            }
        }
        Command::Witness(src) => {
            let cfg = src.load()?;
            let (v, pair) = engine(g).witness(&cfg)?;
            match (json, pair) {
                (true, pair) => pretty(&json!({
                    "verdict": v,
                    "witness": pair.map(|p| p.to_json()),
                })),
                (false, Some(pair)) => verdict_text(&v) + &pair.to_text(),
                (false, None) => verdict_text(&v),
            }
        }
        Command::Sample(src) => {
            let cfg = src.load()?;
            let h = sample_signs(&cfg, g.seed, g.samples)?;
            if json {
                pretty(&json!({ "seed": g.seed, "samples": g.samples, "histogram": h }))
            } else {
                format!("+ {}\n- {}\n0 {}\n", h.pos, h.neg, h.zero)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
