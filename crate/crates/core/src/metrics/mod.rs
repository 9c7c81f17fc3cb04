//! Exact distances under uniform costs: ED, NED, GED, CED and CED′.

mod ced;
mod ned;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::edit_model::{EditPath, Word};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub use ced::{ced, ced_prime, AlphabetMode, CedSearchConfig, RESTRICTED_LENGTH_SLACK};
pub use ned::{ed, ned, ned_value};

/// Identifies a distance function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Ed,
    Ned,
    Ged,
    Ced,
    #[serde(rename = "cedp")]
    CedPrime,
    /// `ed(a, b) / (|a| + |b|)`; not a metric, kept to demonstrate a triangle violation.
    #[serde(rename = "postnorm")]
    PostNormalized,
}

impl Metric {
    pub fn id(self) -> &'static str {
        match self {
            Metric::Ed => "ed",
            Metric::Ned => "ned",
            Metric::Ged => "ged",
            Metric::Ced => "ced",
            Metric::CedPrime => "cedp",
            Metric::PostNormalized => "postnorm",
        }
    }

    /// Computes the value only (no witness where that is cheaper).
    pub fn value(self, a: &Word, b: &Word, cfg: &CedSearchConfig) -> Result<Rational> {
        Ok(match self {
            Metric::Ed => ed(a, b).value,
            Metric::Ned => ned_value(a, b),
            Metric::Ged => ged(a, b).value,
            Metric::Ced => ced(a, b, cfg)?.value,
            Metric::CedPrime => ced_prime(a, b, cfg)?.value,
            Metric::PostNormalized => post_normalized(a, b).value,
        })
    }

    /// Computes the distance together with its witness.
    pub fn compute(self, a: &Word, b: &Word, cfg: &CedSearchConfig) -> Result<DistanceResult> {
        match self {
            Metric::Ed => Ok(ed(a, b)),
            Metric::Ned => Ok(ned(a, b)),
            Metric::Ged => Ok(ged(a, b)),
            Metric::Ced => ced(a, b, cfg),
            Metric::CedPrime => ced_prime(a, b, cfg),
            Metric::PostNormalized => Ok(post_normalized(a, b)),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "ed" => Metric::Ed,
            "ned" => Metric::Ned,
            "ged" => Metric::Ged,
            "ced" => Metric::Ced,
            "cedp" | "ced'" | "ced-prime" => Metric::CedPrime,
            "postnorm" => Metric::PostNormalized,
            _ => return Err(Error::Parse(format!("unknown metric {s:?}"))),
        })
    }
}

/// What backs a distance value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A Blank-free edit path from the first word to the second.
    Path(EditPath),
    /// The chain of words visited by a CED search, endpoints included.
    Chain(Vec<Word>),
}

/// A computed distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub metric: Metric,
    pub value: Rational,
    pub witness: Option<Witness>,
}

impl DistanceResult {
    pub fn path(&self) -> Option<&EditPath> {
        match &self.witness {
            Some(Witness::Path(p)) => Some(p),
            _ => None,
        }
    }

    pub fn chain(&self) -> Option<&[Word]> {
        match &self.witness {
            Some(Witness::Chain(c)) => Some(c),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawWitness {
    Path(String),
    Chain(Vec<Word>),
}

#[derive(Serialize, Deserialize)]
struct RawResult {
    metric: Metric,
    value: Rational,
    value_decimal: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witness: Option<RawWitness>,
}

impl Serialize for DistanceResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawResult {
            metric: self.metric,
            value: self.value,
            value_decimal: self.value.approx(),
            witness: self.witness.as_ref().map(|w| match w {
                Witness::Path(p) => RawWitness::Path(p.to_string()),
                Witness::Chain(c) => RawWitness::Chain(c.clone()),
            }),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DistanceResult {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawResult::deserialize(deserializer)?;
        let witness = match raw.witness {
            None => None,
            Some(RawWitness::Path(s)) => Some(Witness::Path(s.parse().map_err(serde::de::Error::custom)?)),
            Some(RawWitness::Chain(c)) => Some(Witness::Chain(c)),
        };
        Ok(DistanceResult {
            metric: raw.metric,
            value: raw.value,
            witness,
        })
    }
}

/// `2·ed / (|a| + |b| + ed)`, zero for two empty words. The witness is ED's.
pub fn ged(a: &Word, b: &Word) -> DistanceResult {
    let base = ed(a, b);
    let d = base.value.numer();
    let den = (a.len() + b.len()) as u64 + d;
    let value = if den == 0 {
        Rational::ZERO
    } else {
        Rational::new(2 * d, den)
    };
    DistanceResult {
        metric: Metric::Ged,
        value,
        witness: base.witness,
    }
}

/// `ed / (|a| + |b|)`, zero for two empty words.
pub fn post_normalized(a: &Word, b: &Word) -> DistanceResult {
    let base = ed(a, b);
    let den = (a.len() + b.len()) as u64;
    let value = if den == 0 {
        Rational::ZERO
    } else {
        Rational::new(base.value.numer(), den)
    };
    DistanceResult {
        metric: Metric::PostNormalized,
        value,
        witness: base.witness,
    }
}
