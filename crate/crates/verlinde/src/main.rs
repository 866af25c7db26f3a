use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use verlinde::commands::{datum_dump, image_query, resolve_datum, subalgebra_sweep, subalgebras_query};
use verlinde::labels::LabelConvention;
use verlinde::suites::{self, Suite, SuiteParams};
use verlinde::{CliError, CliResult, SharedCache};
use verlinde_core::rootsys::CartanType;

#[derive(Parser)]
#[command(name = "verlinde", version, about = "Verlinde-category combinatorics and verification suites")]
struct Cli {
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Labels {
    Bourbaki,
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Weyl factors and Ver_p image of a simple module L(λ).
    Image {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
        /// `adjoint`, `0`, `2w1+w3`, `[1,0,2]`, optionally prefixed `paper:`.
        #[arg(long)]
        weight: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "bourbaki")]
        labels: Labels,
        #[arg(long)]
        json: bool,
    },
    /// Subalgebras of sl(L_{n-1}) in Ver_p, or a conformance sweep.
    Subalgebras {
        #[arg(long, required_unless_present = "sweep")]
        n: Option<u64>,
        #[arg(long, required_unless_present = "sweep")]
        p: Option<u64>,
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 5)]
        p_min: u64,
        #[arg(long, default_value_t = 101)]
        p_max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        /// tables, images, typeD, invertibles, minuscule, thm-main,
        /// equivalences, dims, subalgebras, identities, cross-oracle or all.
        suite: String,
        #[arg(long)]
        p_max: Option<u64>,
        #[arg(long)]
        max_rank: Option<usize>,
        /// Include the slower optional oracles.
        #[arg(long)]
        deep: bool,
        /// Write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// List passing checks too.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Dump a root datum as JSON.
    Datum {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn parse_type(s: &str) -> CliResult<CartanType> {
    s.parse::<CartanType>().map_err(|e| CliError::Usage(e.to_string()))
}

fn load_cache() -> CliResult<SharedCache> {
    match SharedCache::env_path() {
        Some(path) => SharedCache::load(&path),
        None => Ok(SharedCache::new()),
    }
}

fn save_cache(cache: &SharedCache) -> CliResult<()> {
    if let Some(path) = SharedCache::env_path() {
        cache.save(&path)?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<u8> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Image { ty, rank, weight, p, labels, json } => {
            let datum = resolve_datum(parse_type(&ty)?, rank)?;
            let convention = match labels {
                Labels::Bourbaki => LabelConvention::Bourbaki,
                Labels::Paper => LabelConvention::Paper,
            };
            let cache = load_cache()?;
            let out = image_query(&datum, &weight, p, convention, &cache)?;
            save_cache(&cache)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("{} L({}) p={}", out.group, out.weight, out.p);
                let weyl: Vec<String> = out.weyl.iter().map(|m| format!("Δ_{m}")).collect();
                println!("weyl  = [{}]", weyl.join(", "));
                println!("image = {}", out.image_text);
            }
            Ok(0)
        }
        Command::Subalgebras { n, p, sweep, p_min, p_max, json } => {
            if sweep {
                let cells = subalgebra_sweep(p_min, p_max)?;
                let failing: Vec<_> = cells.iter().filter(|c| !c.passed()).collect();
                if json {
                    let rows: Vec<_> = cells
                        .iter()
                        .map(|c| serde_json::json!({ "p": c.p, "n": c.n, "subalgebras": c.labels, "passed": c.passed() }))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows)?);
                } else {
                    for c in &cells {
                        let verdict = if c.passed() { "ok" } else { "DEVIATES" };
                        println!("p={:<3} n={:<3} {:<8} {}", c.p, c.n, verdict, c.labels.join(" "));
                    }
                    if failing.is_empty() {
                        println!("all {} cells conform", cells.len());
                    } else {
                        println!("{} of {} cells deviate", failing.len(), cells.len());
                    }
                }
                return Ok(if failing.is_empty() { 0 } else { 1 });
            }
            let (n, p) = (n.unwrap_or_default(), p.unwrap_or_default());
            let lines = subalgebras_query(n, p)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&lines)?);
            } else {
                for l in &lines {
                    println!("{}:{}", l.mask, l.families);
                }
            }
            Ok(0)
        }
        Command::Verify { suite, p_max, max_rank, deep, json, format, verbose } => {
            let suite: Suite = suite.parse()?;
            let params = SuiteParams { p_max, max_rank, deep };
            let cache = load_cache()?;
            let report = suites::run(suite, &params, &cache);
            save_cache(&cache)?;
            match format {
                Format::Text => print!("{}", report.to_text(verbose)),
                Format::Markdown => print!("{}", report.to_markdown()),
            }
            if let Some(path) = json {
                fs::write(path, report.to_json()? + "\n")?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Datum { ty, rank } => {
            let datum = resolve_datum(parse_type(&ty)?, rank)?;
            println!("{}", serde_json::to_string_pretty(&datum_dump(&datum))?);
            Ok(0)
        }
    }
}
