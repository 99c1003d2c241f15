use std::fs;
use std::path::Path;

use clap::{Args, Command as ClapCommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::CliError;

/// Parsed configuration file: top-level globals plus one table per command.
#[derive(Debug, Default)]
pub struct ConfigFile {
    root: Map<String, Value>,
}

const GLOBAL_KEYS: [&str; 4] = ["precision_bits", "threads", "out", "format"];
const COMMANDS: [&str; 7] = [
    "jones",
    "bracket",
    "tqft",
    "geom-verify",
    "knot-state",
    "volume-seq",
    "rt",
];

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text =
            fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let table: toml::Table = text
            .parse()
            .map_err(|e| CliError::Config(format!("invalid TOML: {e}")))?;
        let Value::Object(root) = serde_json::to_value(table).map_err(|e| CliError::Config(e.to_string()))? else {
            unreachable!("a TOML table is an object");
        };
        for (k, v) in &root {
            let known = GLOBAL_KEYS.contains(&k.as_str()) || (COMMANDS.contains(&k.as_str()) && v.is_object());
            if !known {
                return Err(CliError::Config(format!(
                    "unknown key '{k}'; expected one of {} or a [command] table ({})",
                    GLOBAL_KEYS.join(", "),
                    COMMANDS.join(", ")
                )));
            }
        }
        Ok(Self { root })
    }

    pub fn globals(&self) -> Map<String, Value> {
        self.root
            .iter()
            .filter(|(k, _)| GLOBAL_KEYS.contains(&k.as_str()))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    pub fn section(&self, command: &str) -> Map<String, Value> {
        match self.root.get(command) {
            Some(Value::Object(m)) => m.clone(),
            _ => Map::new(),
        }
    }
}

/// Overlay the flags given on the command line onto `base`.
pub fn merge<T>(flags: &T, base: Map<String, Value>, command: &str) -> Result<T, CliError>
where
    T: Serialize + DeserializeOwned + Args,
{
    let ids: Vec<String> = T::augment_args(ClapCommand::new("config"))
        .get_arguments()
        .map(|a| a.get_id().to_string())
        .collect();
    for k in base.keys() {
        if !ids.contains(k) {
            return Err(CliError::Config(format!(
                "unknown key '{k}' in [{command}]; expected one of {}",
                ids.join(", ")
            )));
        }
    }
    let mut merged = base;
    if let Value::Object(over) = serde_json::to_value(flags).map_err(|e| CliError::Config(e.to_string()))? {
        merged.extend(over);
    }
    serde_json::from_value(Value::Object(merged))
        .map_err(|e| CliError::Config(format!("bad value in [{command}]: {e}")))
}
