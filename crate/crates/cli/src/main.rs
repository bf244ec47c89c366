use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qdrg::report::{
    cmd_analyze, cmd_enumerate, cmd_scan, cmd_verify_atlas, exit_code, parse_fixture, render_analysis,
    render_enumeration, render_scan, AnalyzeOptions, CheckTag, VerifyOptions,
};
use qdrg::{Error, Result};

/// q-distance spectra of distance-regular graphs.
#[derive(Debug, Parser)]
#[command(name = "qdrg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum and classifications of an intersection array at one q.
    Analyze {
        /// Intersection array, e.g. "{9,4,1;1,4,9}".
        array: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        q: String,
        /// Atlas graph to cross-check against, e.g. cycle-7 or johnson-8-3.
        #[arg(long)]
        graph: Option<String>,
        /// Compare with a dense eigensolve of --graph.
        #[arg(long, requires = "graph")]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Critical q values of a diameter-3 array and the distinct count at each.
    Scan {
        array: String,
        #[arg(long)]
        json: bool,
    },
    /// Feasible antipodal r-covers of diameter 3 with smallest eigenvalue -r-1.
    Enumerate {
        r: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant suite over the bundled graphs.
    VerifyAtlas {
        /// Only run checks with this tag (drg, formula, antipodal, diameter3, regression).
        #[arg(long)]
        filter: Option<String>,
        /// Extra adjacency-list graph to check; repeatable.
        #[arg(long)]
        fixture: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

macro_rules! to_json {
    ($v:expr) => {
        serde_json::to_string_pretty(&$v).expect("reports serialize")
    };
}

fn run(cmd: Command) -> Result<(String, i32)> {
    match cmd {
        Command::Analyze { array, q, graph, oracle, json } => {
            let report = cmd_analyze(&array, &q, &AnalyzeOptions { graph, oracle })?;
            let code = if report.ok() { 0 } else { 1 };
            Ok((if json { to_json!(report) } else { render_analysis(&report) }, code))
        }
        Command::Scan { array, json } => {
            let report = cmd_scan(&array)?;
            Ok((if json { to_json!(report) } else { render_scan(&report) }, 0))
        }
        Command::Enumerate { r, json } => {
            let e = cmd_enumerate(r)?;
            Ok((if json { to_json!(e) } else { render_enumeration(&e) }, 0))
        }
        Command::VerifyAtlas { filter, fixture, json } => {
            let filter = filter.as_deref().map(str::parse::<CheckTag>).transpose()?;
            let mut fixtures = Vec::new();
            for path in fixture {
                let text =
                    std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                let name = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into());
                fixtures.push(parse_fixture(&name, &text)?);
            }
            let summary = cmd_verify_atlas(&VerifyOptions { filter, fixtures, ..Default::default() });
            Ok((if json { to_json!(summary) } else { summary.render() }, summary.exit_code()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            let newline = if out.ends_with('\n') { "" } else { "\n" };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = write!(stdout, "{out}{newline}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
