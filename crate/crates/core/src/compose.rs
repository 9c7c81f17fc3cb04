//! Composition of edit paths.
//!
//! Given `p12` taking `s1` to `s2` and `p23` taking `s2` to `s3`, [`cmps_h`]
//! scans both paths letter by letter and produces a path over the edit alphabet
//! extended with the blank letter `B`. Dropping the blanks gives an edit path
//! from `s1` to `s3` whose weight is at most `wgt(p12) + wgt(p23)` and whose raw
//! length is at least `max(len(p12), len(p23))`. That pair of bounds is what
//! makes NED satisfy the triangle inequality.

use serde::{Deserialize, Serialize};

use crate::edit_model::{infer_subscripts, EditLetter, EditOp, EditPath, Word};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which clause of the definition fired for one output letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseTrace {
    pub case: u8,
    pub emitted: EditLetter,
}

/// Composes two Blank-free paths. See the module docs.
///
/// Returns [`Error::Undefined`] when no clause applies; the indices are
/// 1-based positions of the next unread letter of each path.
pub fn cmps_h(p12: &EditPath, p23: &EditPath) -> Result<EditPath> {
    cmps_h_traced(p12, p23).map(|trace| trace.into_iter().map(|t| t.emitted).collect())
}

/// Like [`cmps_h`], but records the clause number behind every emitted letter.
pub fn cmps_h_traced(p12: &EditPath, p23: &EditPath) -> Result<Vec<CaseTrace>> {
    use EditLetter::*;

    for p in [p12, p23] {
        if let Some(i) = p.letters().iter().position(|l| *l == Blank) {
            return Err(Error::BlankInPath { index: i + 1 });
        }
    }

    let (left, right) = (p12.letters(), p23.letters());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(left.len() + right.len());
    let mut emit = |case: u8, emitted: EditLetter| out.push(CaseTrace { case, emitted });

    loop {
        let (l, r) = (left.get(i).copied(), right.get(j).copied());
        // (0)
        if l.is_none() && r.is_none() {
            break;
        }
        // (1)
        if let Some(Delete { sym }) = l {
            emit(1, Delete { sym });
            i += 1;
            continue;
        }
        // (2)
        if let Some(Insert { sym }) = r {
            emit(2, Insert { sym });
            j += 1;
            continue;
        }
        let undefined = Error::Undefined {
            left: i + 1,
            right: j + 1,
        };
        let (Some(l), Some(r)) = (l, r) else {
            return Err(undefined);
        };
        let (case, letter) = match (l, r) {
            (NoChange { sym: a }, NoChange { sym: b }) if a == b => (3, NoChange { sym: a }),
            (NoChange { sym: a }, Change { from, to }) if a == from => (4, Change { from: a, to }),
            (NoChange { sym: a }, Delete { sym: b }) if a == b => (5, Delete { sym: a }),
            (Change { from: s1, to: s2 }, Change { from: s2b, to: s3 }) if s2 == s2b => {
                (6, Change { from: s1, to: s3 })
            }
            (Change { from: s1, to: s2 }, Delete { sym }) if s2 == sym => (7, Delete { sym: s1 }),
            (Change { from, to }, NoChange { sym }) if to == sym => (8, Change { from, to }),
            (Insert { sym: a }, NoChange { sym: b }) if a == b => (9, Insert { sym: a }),
            (Insert { sym: a }, Change { from, to }) if a == from => (10, Insert { sym: to }),
            (Insert { sym: a }, Delete { sym: b }) if a == b => (11, Blank),
            // (12)
            _ => return Err(undefined),
        };
        emit(case, letter);
        i += 1;
        j += 1;
    }
    Ok(out)
}

/// The composed path with the six quantities the triangle argument talks about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeOutcome {
    /// Output of [`cmps_h`]; may contain blanks.
    pub raw: EditPath,
    /// `raw` with blanks removed.
    pub projected: EditPath,
    pub wgt_raw: usize,
    pub len_raw: usize,
    pub wgt_proj: usize,
    pub len_proj: usize,
}

impl ComposeOutcome {
    pub fn cost_raw(&self) -> Rational {
        self.raw.cost()
    }

    pub fn cost_proj(&self) -> Rational {
        self.projected.cost()
    }
}

pub fn compose(p12: &EditPath, p23: &EditPath) -> Result<ComposeOutcome> {
    let raw = cmps_h(p12, p23)?;
    let projected = raw.project_h();
    Ok(ComposeOutcome {
        wgt_raw: raw.wgt(),
        len_raw: raw.len(),
        wgt_proj: projected.wgt(),
        len_proj: projected.len(),
        raw,
        projected,
    })
}

/// The three bound checks on a composed chain `s1 -> s2 -> s3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainChecks {
    /// `apply(projected, s1) == s3`
    pub apply_correct: bool,
    /// `wgt(raw) <= wgt(p12) + wgt(p23)`
    pub weight_bound: bool,
    /// `len(raw) >= max(len(p12), len(p23))`
    pub length_bound: bool,
}

impl ChainChecks {
    pub fn all(&self) -> bool {
        self.apply_correct && self.weight_bound && self.length_bound
    }
}

pub fn check_chain(outcome: &ComposeOutcome, p12: &EditPath, p23: &EditPath, s1: &Word, s3: &Word) -> ChainChecks {
    ChainChecks {
        apply_correct: outcome.projected.apply(s1).as_ref() == Ok(s3),
        weight_bound: outcome.wgt_raw <= p12.wgt() + p23.wgt(),
        length_bound: outcome.len_raw >= p12.len().max(p23.len()),
    }
}

/// Composes two bare paths by first inferring their subscripts from the word triple.
pub fn compose_bare(
    p12: &[EditOp],
    p23: &[EditOp],
    s1: &Word,
    s2: &Word,
    s3: &Word,
) -> Result<(EditPath, EditPath, ComposeOutcome)> {
    let p12 = infer_subscripts(p12, s1, s2)?;
    let p23 = infer_subscripts(p23, s2, s3)?;
    let outcome = compose(&p12, &p23)?;
    Ok((p12, p23, outcome))
}
