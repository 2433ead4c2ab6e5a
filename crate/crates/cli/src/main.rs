use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use maxpair_cli::{cmd_classify, cmd_oracle, cmd_parse, cmd_scan, CliError, Family, ScanFormat, CACHE_ENV};
use maxpair_core::arith::{export_cache, import_cache};

#[derive(Parser)]
#[command(name = "maxpair", version, about = "Coprime maximal subgroups of finite simple groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleFamily {
    Psl2,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one group, e.g. `PSL(2,23)`, `PSU(7,2)`, `M23`.
    Classify { spec: String },
    /// Classify a parameter grid and write one row per pair.
    Scan {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 200)]
        q_max: u64,
        #[arg(long, default_value_t = 23)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: ScanFormat,
        /// Write here instead of stdout, with a `.meta.json` sidecar.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the classifier with a full subgroup lattice.
    Oracle {
        #[arg(value_enum)]
        family: OracleFamily,
        q: u64,
    },
    /// Parse an ATLAS structure string and print its order.
    ParseStructure { text: String },
}

fn cache_file() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| Path::new(&d).join("cyclotomic.jsonl"))
}

fn load_cache(path: &Path) {
    if let Ok(text) = std::fs::read_to_string(path) {
        if let Err(e) = import_cache(&text) {
            eprintln!("warning: ignoring cache {}: {e}", path.display());
        }
    }
}

fn save_cache(path: &Path) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, export_cache())
}

fn write_with_meta(out: &Path, body: &str, args: &[String]) -> std::io::Result<()> {
    std::fs::write(out, body)?;
    let generated = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let meta = serde_json::json!({
        "tool": "maxpair",
        "version": env!("CARGO_PKG_VERSION"),
        "args": args,
        "generated_unix": generated,
    });
    let mut meta_path = out.as_os_str().to_owned();
    meta_path.push(".meta.json");
    std::fs::write(meta_path, serde_json::to_string_pretty(&meta).expect("json") + "\n")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { spec } => print!("{}", cmd_classify(&spec)?),
        Command::Scan {
            family,
            q_max,
            n_max,
            format,
            out,
        } => {
            let body = cmd_scan(family, q_max, n_max, format)?;
            match out {
                Some(path) => {
                    let args: Vec<String> = std::env::args().skip(1).collect();
                    write_with_meta(&path, &body, &args)?;
                }
                None => print!("{body}"),
            }
        }
        Command::Oracle {
            family: OracleFamily::Psl2,
            q,
        } => match cmd_oracle(q) {
            Ok(text) => print!("{text}"),
            Err(e @ CliError::Disagreement { .. }) => {
                if let CliError::Disagreement { report, .. } = &e {
                    print!("{report}");
                }
                return Err(e);
            }
            Err(e) => return Err(e),
        },
        Command::ParseStructure { text } => print!("{}", cmd_parse(&text)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache_file();
    if let Some(path) = &cache {
        load_cache(path);
    }
    let result = run(cli);
    if let Some(path) = &cache {
        if let Err(e) = save_cache(path) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
