mod args;
mod commands;
mod config;
mod error;
mod json;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Map, Value};

use args::{Cli, Command, Format, GlobalArgs};
use commands::{Payload, Report};
use config::{merge, ConfigFile};
use error::CliError;

const DEFAULT_PRECISION_BITS: u32 = 53;

fn inputs<T: serde::Serialize>(args: &T) -> Value {
    serde_json::to_value(args).unwrap_or(Value::Null)
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    let file = match &cli.global.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let global: GlobalArgs = merge(&cli.global, file.globals(), "global")?;
    if let Some(n) = global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("cannot set thread count {n}: {e}")))?;
    }
    let bits = global.precision_bits.unwrap_or(DEFAULT_PRECISION_BITS);
    let name = cli.command.name();
    let section = file.section(name);
    let (report, used): (Report, Value) = match &cli.command {
        Command::Jones(a) => {
            let a = merge(a, section, name)?;
            (commands::jones(&a, bits)?, inputs(&a))
        }
        Command::Bracket(a) => {
            let a = merge(a, section, name)?;
            (commands::bracket(&a)?, inputs(&a))
        }
        Command::Tqft(a) => {
            let a = merge(a, section, name)?;
            (commands::tqft(&a)?, inputs(&a))
        }
        Command::GeomVerify(a) => {
            let a = merge(a, section, name)?;
            (commands::geom_verify(&a)?, inputs(&a))
        }
        Command::KnotState(a) => {
            let a = merge(a, section, name)?;
            (commands::knot_state(&a, bits)?, inputs(&a))
        }
        Command::VolumeSeq(a) => {
            let a = merge(a, section, name)?;
            let format = global.format.unwrap_or(Format::Csv);
            (commands::volume_seq(&a, bits, format)?, inputs(&a))
        }
        Command::Rt(a) => {
            let a = merge(a, section, name)?;
            (commands::rt(&a)?, inputs(&a))
        }
    };
    let manifest = json!({
        "tool": "so3q",
        "version": so3q::VERSION,
        "conventions": so3q::CONVENTIONS,
        "command": name,
        "inputs": used,
        "precision_bits": bits,
    });
    emit(report.payload, manifest, global.out.as_deref())?;
    Ok(report.failed)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn emit(payload: Payload, manifest: Value, out: Option<&Path>) -> Result<(), CliError> {
    match payload {
        Payload::Json(result) => {
            let mut doc = Map::new();
            doc.insert("manifest".into(), manifest);
            doc.insert("result".into(), result);
            write_target(out, &pretty(&Value::Object(doc)))
        }
        Payload::Csv(text) => {
            write_target(out, &text)?;
            match out {
                Some(p) => {
                    let mut m = p.as_os_str().to_owned();
                    m.push(".manifest.json");
                    fs::write(m, pretty(&manifest))?;
                }
                None => io::stderr().write_all(pretty(&manifest).as_bytes())?,
            }
            Ok(())
        }
    }
}

fn write_target(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failed)) => {
            let e = CliError::Verification(failed);
            eprintln!("so3q: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(e) => {
            eprintln!("so3q: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
