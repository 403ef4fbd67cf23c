use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use planecurve_cli::{exit, exit_code, fixtures, parse_job, render_report, run_job};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Report,
    Summary,
    Both,
}

/// Exact invariants of plane curve singularities and their global
/// consequences, driven by JSON job documents.
#[derive(Parser, Debug)]
#[command(name = "planecurve", version)]
struct Args {
    /// Job document (JSON); reads stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Where to write the result; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "report")]
    format: Format,
    /// Run the built-in example jobs and print a pass/fail table.
    #[arg(long)]
    fixtures: bool,
}

fn write_out(path: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();

    if args.fixtures {
        let outcomes = fixtures::run_all();
        let table = fixtures::render_table(&outcomes);
        if let Err(e) = write_out(&args.output, &table) {
            eprintln!("error: {e}");
            return ExitCode::from(exit::COMPUTATION);
        }
        let ok = outcomes.iter().all(|o| o.passed);
        return ExitCode::from(if ok { exit::OK } else { exit::COMPUTATION });
    }

    let document = match &args.input {
        Some(p) => fs::read_to_string(p),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let document = match document {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(exit::SCHEMA);
        }
    };

    let job = match parse_job(&document) {
        Ok(job) => job,
        Err(e) => {
            eprintln!("schema violation:\n{e}");
            return ExitCode::from(exit::SCHEMA);
        }
    };
    let report = match run_job(&job) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = match args.format {
        Format::Report => render_report(&report),
        Format::Summary => report.summary.clone(),
        Format::Both => format!("{}\n{}", report.summary, render_report(&report)),
    };
    if let Err(e) = write_out(&args.output, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(exit::COMPUTATION);
    }
    ExitCode::from(exit::OK)
}
