//! Experiment reports: named checks plus the resolved configuration, written
//! as sorted-key JSON and as a short text summary.

use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub config: Value,
    pub checks: Vec<Check>,
    /// Measurements worth keeping beyond pass/fail.
    pub data: Value,
}

impl Report {
    pub fn new(name: &str, config: Value) -> Self {
        Report { name: name.to_string(), config, checks: Vec::new(), data: Value::Object(Default::default()) }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn record(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        if let Value::Object(map) = &mut self.data {
            map.insert(key.to_string(), v);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(flatten)]
            report: &'a Report,
            passed: bool,
        }
        crate::formats::to_sorted_json(&Doc { report: self, passed: self.passed() })
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
        }
        let n_ok = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{}: {}/{} checks passed\n", self.name, n_ok, self.checks.len()));
        out
    }

    /// Write `<name>.json` and `<name>.txt` into `dir`.
    pub fn write_to(&self, dir: &Path) -> Result<(), CliError> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{}.json", self.name)), self.to_json()?)?;
        std::fs::write(dir.join(format!("{}.txt", self.name)), self.summary())?;
        Ok(())
    }
}
