mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

use args::Cli;
use commands::{CliError, Report};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            print_report(&report, cli.json);
            match &report.failure {
                Some(theorem) => {
                    eprintln!("error: verification failed: {theorem}");
                    ExitCode::from(EXIT_VERIFICATION)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            let (code, msg) = match e {
                CliError::Usage(m) => (EXIT_USAGE, m),
                CliError::Verification(m) => (EXIT_VERIFICATION, m),
                CliError::Budget(m) => (
                    EXIT_BUDGET,
                    format!("{m} (raise with --max-order or WEYLKIT_MAX_ORDER)"),
                ),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn print_report(report: &Report, json: bool) {
    let value = report.to_json();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("JSON values serialize")
        );
        return;
    }
    let Value::Object(map) = value else {
        unreachable!()
    };
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    for (key, v) in map.iter().filter(|(k, _)| k.as_str() != "schema") {
        match v {
            Value::Array(rows) if rows.iter().any(Value::is_object) => {
                println!("{key}:");
                for row in rows {
                    println!("  {}", inline(row));
                }
            }
            Value::Object(inner) if !inner.is_empty() => {
                println!("{key}:");
                let w = inner.keys().map(|k| k.len()).max().unwrap_or(0);
                for (k, v) in inner {
                    println!("  {k:<w$}  {}", inline(v));
                }
            }
            _ => println!("{key:<width$}  {}", inline(v)),
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
