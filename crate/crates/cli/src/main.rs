mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command, FreeCommand};
use commands::{Context, Failure};
use skewbrace::Caps;

fn verb(command: &Command) -> &'static str {
    match command {
        Command::VerifyGroup { .. } => "verify-group",
        Command::VerifyBrace { .. } => "verify-brace",
        Command::Classify { .. } => "classify",
        Command::Construct { .. } => "construct",
        Command::Enumerate { .. } => "enumerate",
        Command::System { .. } => "system",
        Command::Structure { .. } => "structure",
        Command::Freegroup { command } => match command {
            FreeCommand::VerifyCyclic { .. } => "freegroup verify-cyclic",
            FreeCommand::T4 { .. } => "freegroup t4",
            FreeCommand::Sample { .. } => "freegroup sample",
            FreeCommand::Rb { .. } => "freegroup rb",
        },
        Command::Lattice { .. } => "lattice",
        Command::Rb { .. } => "rb",
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.global.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let caps = Caps { max_group_order: g.max_order, ..Caps::default() };
    let ctx = Context { seed: g.seed, samples: g.samples, caps, format: g.format };
    let config = json!({ "seed": g.seed, "samples": g.samples, "max_order": g.max_order, "caps": caps });

    let (ok, result, dot) = match commands::run(&ctx, &cli.command) {
        Ok(o) => (o.ok, o.result, o.dot),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(e)) => (false, json!({ "error": e.to_string() }), None),
    };
    let text = match dot {
        Some(dot) => dot,
        None => {
            let report = json!({ "command": verb(&cli.command), "config": config, "ok": ok, "result": result });
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    if let Err(msg) = emit(&cli, &text) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
