mod args;
mod run;

use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command, Format};
use rihahn::Error;
use run::{command_name, Outcome, Violation};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;

fn default_format(c: &Command) -> Format {
    match c {
        Command::Verify { .. } => Format::Json,
        Command::Tabulate { .. } | Command::Limit { .. } => Format::Csv,
    }
}

fn render(out: &Outcome, format: Format) -> io::Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut doc = json!({
                "command": out.command,
                "params": out.params,
                "identity": out.identity,
                "status": if out.passed() { "ok" } else { "violation" },
                "violations": out.violations,
            });
            if let Some(extra) = out.payload.as_object() {
                for (k, v) in extra {
                    doc[k] = v.clone();
                }
            }
            let mut buf = serde_json::to_vec_pretty(&doc)?;
            buf.push(b'\n');
            Ok(buf)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match &out.table {
                Some(rows) => {
                    for r in rows {
                        w.write_record(r)?;
                    }
                }
                None => {
                    w.write_record(["identity", "location", "lhs", "rhs"])?;
                    for v in &out.violations {
                        w.write_record([&out.identity, &v.location, &v.lhs, &v.rhs])?;
                    }
                }
            }
            w.into_inner().map_err(|e| e.into_error())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli
        .opts
        .format
        .unwrap_or_else(|| default_format(&cli.command));
    let out = match run::run(&cli.command, &cli.opts) {
        Ok(out) => out,
        Err(e @ (Error::InvalidParameters(_) | Error::Parse(_) | Error::PoleInDenominator(_))) => {
            eprintln!("rihahn: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
        Err(e) => {
            // any other library failure is a failed check, still reported in full
            eprintln!("rihahn: {e}");
            Outcome {
                command: command_name(&cli.command),
                params: json!({}),
                identity: "error".into(),
                violations: vec![Violation {
                    location: "run".into(),
                    lhs: e.to_string(),
                    rhs: String::new(),
                }],
                payload: json!({}),
                table: None,
            }
        }
    };
    let bytes = match render(&out, format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("rihahn: {e}");
            return ExitCode::from(EXIT_IO);
        }
    };
    let written = match &cli.opts.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&bytes)),
        None => io::stdout().lock().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("rihahn: {e}");
        return ExitCode::from(EXIT_IO);
    }
    if out.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}
