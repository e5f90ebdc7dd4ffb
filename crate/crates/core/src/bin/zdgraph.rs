use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zdgraph::harness::{check_range, write_rows};
use zdgraph::{analyze, audit, build_explicit, export_dot, sweep, Format, Oracle};

#[derive(Parser, Debug)]
#[command(
    name = "zdgraph",
    version,
    about = "Connectivity of zero divisor graphs of Z_n, computed and predicted"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Row encoding
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for range commands
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Connectivity algorithm
    #[arg(long, global = true, value_enum, default_value_t = OracleArg::Flow)]
    oracle: OracleArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Computed vs predicted connectivity for one modulus
    Analyze {
        #[arg(long)]
        n: u64,
    },
    /// One row per modulus in a range
    Sweep {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Report mismatching and skipped rows; exit 2 on any mismatch
    Audit {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Graphviz DOT for the explicit graph
    ExportDot {
        #[arg(long)]
        n: u64,
        /// Fill each divisor class with its own color
        #[arg(long)]
        color_classes: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleArg {
    Exhaustive,
    Flow,
}

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<u8, String> {
    let format = match cli.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let oracle = match cli.oracle {
        OracleArg::Flow => Oracle::Flow,
        OracleArg::Exhaustive => Oracle::Exhaustive,
    };
    if cli.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let io_err = |e: io::Error| format!("cannot write output: {e}");

    match cli.command {
        Command::Analyze { n } => {
            let row = analyze(n, oracle);
            let mut out = open_output(&cli.output).map_err(io_err)?;
            write_rows(&mut out, &[row], format).map_err(io_err)?;
            out.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Sweep { from, to } => {
            let rows = sweep(from, to, cli.jobs, oracle).map_err(|e| e.to_string())?;
            let mut out = open_output(&cli.output).map_err(io_err)?;
            write_rows(&mut out, &rows, format).map_err(io_err)?;
            out.flush().map_err(io_err)?;
            Ok(0)
        }
        Command::Audit { from, to } => {
            check_range(from, to).map_err(|e| e.to_string())?;
            let summary = audit(from, to, cli.jobs, oracle).map_err(|e| e.to_string())?;
            let mut out = open_output(&cli.output).map_err(io_err)?;
            write_rows(&mut out, &summary.reported, format).map_err(io_err)?;
            out.flush().map_err(io_err)?;
            eprintln!("{summary}");
            Ok(if summary.exit_code() == 0 {
                0
            } else {
                EXIT_MISMATCH
            })
        }
        Command::ExportDot { n, color_classes } => {
            let g = build_explicit(n).map_err(|e| e.to_string())?;
            let mut out = open_output(&cli.output).map_err(io_err)?;
            out.write_all(export_dot(&g, color_classes).as_bytes())
                .map_err(io_err)?;
            out.flush().map_err(io_err)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("zdgraph: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
