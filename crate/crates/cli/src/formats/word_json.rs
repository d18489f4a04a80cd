//! Word descriptions as JSON, letters written as integers:
//!
//! ```json
//! {"variant": "periodic", "period": [0, 2, 3]}
//! {"variant": "explicit", "letters": [1, 0, 1]}
//! {"variant": "sturmian", "slope": {"prefix": [], "period": [1]}, "intercept": [0, 1], "letters": [0, 1]}
//! {"variant": "sturmian", "slope": {"num": 2, "den": 5}}
//! {"variant": "substitution", "rules": {"0": [0], "1": [1, 0, 1, 0]}, "seed": 1}
//! ```
//!
//! On the command line a spec may also be one of the shorthands `golden`,
//! `psi`, `periodic:<digits>` and `explicit:<digits>`, a JSON object, or a
//! path to a JSON file.

use std::collections::BTreeMap;

use cwlab_core::words::{FiniteWord, Letter, Rotation, Slope, Substitution, WordSpec};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SlopeDoc {
    Rational { num: u64, den: u64 },
    ContinuedFraction {
        #[serde(default)]
        prefix: Vec<u64>,
        period: Vec<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum WordSpecDoc {
    Periodic {
        period: Vec<u8>,
    },
    Explicit {
        letters: Vec<u8>,
    },
    Sturmian {
        slope: SlopeDoc,
        #[serde(default = "default_intercept")]
        intercept: (u64, u64),
        #[serde(default = "default_letters")]
        letters: [u8; 2],
    },
    Substitution {
        rules: BTreeMap<String, Vec<u8>>,
        seed: u8,
    },
}

fn default_intercept() -> (u64, u64) {
    (0, 1)
}

fn default_letters() -> [u8; 2] {
    [0, 1]
}

fn word(values: &[u8]) -> Result<FiniteWord, CliError> {
    Ok(FiniteWord::new(values.iter().map(|&v| Letter::new(v)).collect::<Result<_, _>>()?))
}

fn values(w: &FiniteWord) -> Vec<u8> {
    w.letters().iter().map(|l| l.value()).collect()
}

impl WordSpecDoc {
    pub fn from_spec(w: &WordSpec) -> Self {
        match w {
            WordSpec::Periodic(p) => WordSpecDoc::Periodic { period: values(p) },
            WordSpec::Explicit(p) => WordSpecDoc::Explicit { letters: values(p) },
            WordSpec::Sturmian(r) => WordSpecDoc::Sturmian {
                slope: match &r.slope {
                    Slope::Rational { num, den } => SlopeDoc::Rational { num: *num, den: *den },
                    Slope::ContinuedFraction { prefix, period } => {
                        SlopeDoc::ContinuedFraction { prefix: prefix.clone(), period: period.clone() }
                    }
                },
                intercept: r.intercept,
                letters: [r.letters[0].value(), r.letters[1].value()],
            },
            WordSpec::Substitution(s) => WordSpecDoc::Substitution {
                rules: s.rules.iter().map(|(l, w)| (l.value().to_string(), values(w))).collect(),
                seed: s.seed.value(),
            },
        }
    }

    pub fn to_spec(&self) -> Result<WordSpec, CliError> {
        let spec = match self {
            WordSpecDoc::Periodic { period } => WordSpec::Periodic(word(period)?),
            WordSpecDoc::Explicit { letters } => WordSpec::Explicit(word(letters)?),
            WordSpecDoc::Sturmian { slope, intercept, letters } => WordSpec::Sturmian(Rotation {
                slope: match slope {
                    SlopeDoc::Rational { num, den } => Slope::Rational { num: *num, den: *den },
                    SlopeDoc::ContinuedFraction { prefix, period } => {
                        Slope::ContinuedFraction { prefix: prefix.clone(), period: period.clone() }
                    }
                },
                intercept: *intercept,
                letters: [Letter::new(letters[0])?, Letter::new(letters[1])?],
            }),
            WordSpecDoc::Substitution { rules, seed } => {
                let mut out = BTreeMap::new();
                for (k, v) in rules {
                    let key: u8 = k.parse().map_err(|_| CliError::Usage(format!("rule key {k:?} is not a letter")))?;
                    out.insert(Letter::new(key)?, word(v)?);
                }
                WordSpec::Substitution(Substitution { rules: out, seed: Letter::new(*seed)? })
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Resolve a `--spec` argument.
pub fn resolve(arg: &str) -> Result<WordSpec, CliError> {
    let arg = arg.trim();
    if arg == "golden" {
        return Ok(WordSpec::golden());
    }
    if arg == "psi" {
        return Ok(WordSpec::psi());
    }
    if let Some(digits) = arg.strip_prefix("periodic:") {
        return Ok(WordSpec::periodic(digits)?);
    }
    if let Some(digits) = arg.strip_prefix("explicit:") {
        return Ok(WordSpec::explicit(digits)?);
    }
    let text = if arg.starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read word spec {arg:?}: {e}")))?
    };
    parse(&text)
}

pub fn parse(text: &str) -> Result<WordSpec, CliError> {
    let doc: WordSpecDoc = serde_json::from_str(text)?;
    doc.to_spec()
}

pub fn print(w: &WordSpec) -> Result<String, CliError> {
    super::to_sorted_json(&WordSpecDoc::from_spec(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for w in [WordSpec::golden(), WordSpec::psi(), WordSpec::periodic("023").unwrap(), WordSpec::explicit("1101").unwrap()] {
            assert_eq!(parse(&print(&w).unwrap()).unwrap(), w);
        }
    }

    #[test]
    fn shorthands_and_errors() {
        assert_eq!(resolve("periodic:10").unwrap(), WordSpec::periodic("10").unwrap());
        assert_eq!(resolve(r#"{"variant":"sturmian","slope":{"num":2,"den":5}}"#).unwrap().prefix(5).unwrap().to_string().len(), 5);
        assert!(resolve(r#"{"variant":"periodic","period":[]}"#).is_err());
        assert!(resolve(r#"{"variant":"periodic","period":[4]}"#).is_err());
        assert!(resolve("no/such/file.json").is_err());
    }
}
