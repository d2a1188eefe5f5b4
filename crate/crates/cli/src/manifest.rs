use std::path::Path;

use hierarchyrank::mvr::SamplerConfig;
use serde::{Deserialize, Serialize};

use crate::args::FilterArgs;
use crate::error::CliError;

pub const MANIFEST_FILE: &str = "manifest.json";

/// Record of one invocation. `args` replays it exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub args: Vec<String>,
    pub inputs: Vec<String>,
    pub filter: Option<FilterEcho>,
    pub sampler: Option<SamplerConfig>,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub outputs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterEcho {
    pub years: Option<String>,
    pub disciplines: Vec<String>,
    pub whitelist: Option<String>,
}

impl From<&FilterArgs> for FilterEcho {
    fn from(f: &FilterArgs) -> Self {
        FilterEcho {
            years: f.years.map(|y| y.to_string()),
            disciplines: f.disciplines.clone(),
            whitelist: f.whitelist.as_ref().map(|p| p.display().to_string()),
        }
    }
}

impl RunManifest {
    pub fn new(command: &str, args: &[String]) -> Self {
        RunManifest {
            command: command.to_string(),
            args: args.to_vec(),
            inputs: Vec::new(),
            filter: None,
            sampler: None,
            seed: None,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            outputs: Vec::new(),
        }
    }

    pub fn input(mut self, path: &Path) -> Self {
        self.inputs.push(path.display().to_string());
        self
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("{} is not a run manifest: {e}", path.display())))
    }

    /// The recorded arguments with `--out` pointed at `out`.
    pub fn args_with_out(&self, out: &Path) -> Vec<String> {
        let out = out.display().to_string();
        let mut args = Vec::with_capacity(self.args.len());
        let mut iter = self.args.iter();
        while let Some(a) = iter.next() {
            if a == "--out" {
                iter.next();
                args.push("--out".to_string());
                args.push(out.clone());
            } else if a.starts_with("--out=") {
                args.push(format!("--out={out}"));
            } else {
                args.push(a.clone());
            }
        }
        args
    }
}
