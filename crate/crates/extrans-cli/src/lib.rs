//! Command-line front end of the `extrans` library.
//!
//! [`run`] parses the arguments, dispatches to a subcommand and returns the
//! exit code together with what should go to stdout and stderr. Exit codes
//! are 0 on success, 1 when a verification fails and 2 on usage errors.

pub mod args;
pub mod commands;
pub mod output;
pub mod suites;

use clap::error::ErrorKind;
use clap::Parser;
use extrans::Error;
use serde_json::json;

use args::{Cli, Command, Format};
use output::{Doc, Output};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn wants_json<S: AsRef<str>>(argv: &[S]) -> bool {
    argv.iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || argv.iter().any(|a| a.as_ref() == "--format=json")
}

fn error_outcome(code: i32, kind: &str, message: String, json_mode: bool) -> Outcome {
    if json_mode {
        let body = json!({"error": {"kind": kind, "message": message, "exit_code": code}});
        Outcome {
            code,
            stdout: format!(
                "{}\n",
                serde_json::to_string_pretty(&body).expect("serializable")
            ),
            stderr: String::new(),
        }
    } else {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn exit_code(e: &Error) -> (i32, &'static str) {
    match e {
        Error::Precondition(_) | Error::Unsupported(_) | Error::ModulusCap { .. } => {
            (EXIT_USAGE, "usage")
        }
        Error::Verification(_) | Error::TableMismatch(_) => (EXIT_VERIFICATION, "verification"),
        _ => (EXIT_VERIFICATION, "computation"),
    }
}

/// Runs the command line `argv`, whose first element is the program name.
pub fn run<S: AsRef<str>>(argv: &[S]) -> Outcome {
    let json_mode = wants_json(argv);
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: EXIT_OK,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => {
            if json_mode {
                let msg = e.to_string();
                let first = msg
                    .lines()
                    .next()
                    .unwrap_or_default()
                    .trim_start_matches("error: ")
                    .to_string();
                return error_outcome(EXIT_USAGE, "usage", first, true);
            }
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: e.render().to_string(),
            };
        }
    };
    let g = cli.global;
    let digits = g.precision as usize;
    if !(g.tolerance > 0.0) {
        return error_outcome(
            EXIT_USAGE,
            "usage",
            "--tolerance must be positive".into(),
            json_mode,
        );
    }
    let result = match cli.command {
        Command::Constants { d } => commands::constants(d),
        Command::Series { d, order } => commands::series(d, order),
        Command::Mirror { d, order } => commands::mirror(d, order),
        Command::Eisenstein { d, order } => commands::eisenstein(d, order),
        Command::Limit { d, cusp } => commands::limit(d, cusp),
        Command::Path {
            d,
            dirs,
            samples,
            s_max,
        } => commands::path(d, dirs, samples, s_max),
        Command::Verify { suite, order } => {
            let checks = suites::run_suite(suite, order, g.tolerance);
            let failed = checks.iter().filter(|c| !c.pass).count();
            let out = if g.format == Format::Text {
                let mut s = String::new();
                for c in &checks {
                    s.push_str(&format!(
                        "{} {} {}: {}\n",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.suite,
                        c.name,
                        c.detail
                    ));
                }
                s.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
                s
            } else {
                let doc = Doc::map([
                    (
                        "checks",
                        Doc::List(checks.iter().map(|c| c.doc()).collect()),
                    ),
                    ("total", Doc::Int(checks.len() as i64)),
                    ("failed", Doc::Int(failed as i64)),
                    ("pass", Doc::Bool(failed == 0)),
                ]);
                Output::doc(doc).render(g.format, digits)
            };
            let code = if failed == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            return Outcome {
                code,
                stdout: out,
                stderr: String::new(),
            };
        }
    };
    match result {
        Ok(out) => Outcome {
            code: EXIT_OK,
            stdout: out.render(g.format, digits),
            stderr: String::new(),
        },
        Err(e) => {
            let (code, kind) = exit_code(&e);
            error_outcome(code, kind, e.to_string(), json_mode)
        }
    }
}
