//! Exact normalized edit distance under uniform costs.
//!
//! The crate computes the normalized edit distance (NED: the minimum over edit
//! paths of weight divided by path length) with exact rational arithmetic, next
//! to the companion distances ED, GED, CED and CED′. It also implements the
//! twelve-case edit-path composition whose projection witnesses the triangle
//! inequality for NED, brute-force oracles for cross-checking, and a seeded
//! verification harness for the metric axioms and the comparison properties.
//!
//! ```
//! use nedlib::{metrics, Rational, Word};
//!
//! let r = metrics::ned(&Word::from("acbb"), &Word::from("cc"));
//! assert_eq!(r.value, Rational::new(3, 4));
//! assert_eq!(r.path().unwrap().bare(), "xnxc");
//! ```

pub mod compose;
pub mod edit_model;
pub mod error;
pub mod metrics;
pub mod oracle;
pub mod propcheck;
pub mod rational;

pub use compose::{cmps_h, compose, ComposeOutcome};
pub use edit_model::{AlphabetSet, EditLetter, EditOp, EditPath, Symbol, Word};
pub use error::{Error, Result};
pub use metrics::{CedSearchConfig, DistanceResult, Metric, Witness};
pub use rational::Rational;
