//! Symbols, words, edit letters and edit paths.
//!
//! An edit path is a string over the edit alphabet: `n(σ)` keeps a symbol,
//! `c(σ>σ')` changes one, `v(σ)` inserts, `x(σ)` deletes. The blank letter `B`
//! abbreviates an insert immediately followed by a delete of the same symbol; it
//! only ever appears in the raw output of composition (see [`crate::compose`]).
//!
//! Word positions in error payloads are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An alphabet element. Symbols are opaque; the textual front ends map each
/// distinct input character to one symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(pub char);

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol(c)
    }
}

pub type AlphabetSet = BTreeSet<Symbol>;

/// Builds an alphabet from the characters of `s`.
pub fn alphabet(s: &str) -> AlphabetSet {
    s.chars().map(Symbol).collect()
}

/// A finite, possibly empty, sequence of symbols.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// The symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// `w^k`.
    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn alphabet(&self) -> AlphabetSet {
        self.0.iter().copied().collect()
    }

    pub fn shares_symbol_with(&self, other: &Word) -> bool {
        let mine = self.alphabet();
        other.0.iter().any(|s| mine.contains(s))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.0.contains(&s)
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().map(Symbol).collect())
    }
}

impl From<String> for Word {
    fn from(s: String) -> Self {
        Word::from(s.as_str())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(Word::from(s.as_str()))
    }
}

/// The operation of an edit letter with its symbols erased (the bare edit alphabet).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EditOp {
    NoChange,
    Change,
    Insert,
    Delete,
    Blank,
}

impl EditOp {
    pub fn glyph(self) -> char {
        match self {
            EditOp::NoChange => 'n',
            EditOp::Change => 'c',
            EditOp::Insert => 'v',
            EditOp::Delete => 'x',
            EditOp::Blank => 'b',
        }
    }

    pub fn from_glyph(c: char) -> Option<EditOp> {
        Some(match c {
            'n' => EditOp::NoChange,
            'c' => EditOp::Change,
            'v' => EditOp::Insert,
            'x' => EditOp::Delete,
            'b' | 'B' => EditOp::Blank,
            _ => return None,
        })
    }

    pub fn weight(self) -> usize {
        match self {
            EditOp::NoChange => 0,
            EditOp::Change | EditOp::Insert | EditOp::Delete => 1,
            EditOp::Blank => 2,
        }
    }

    pub fn length(self) -> usize {
        match self {
            EditOp::Blank => 2,
            _ => 1,
        }
    }
}

/// One subscripted edit operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum EditLetter {
    #[serde(rename = "n")]
    NoChange { sym: Symbol },
    #[serde(rename = "c")]
    Change { from: Symbol, to: Symbol },
    #[serde(rename = "v")]
    Insert { sym: Symbol },
    #[serde(rename = "x")]
    Delete { sym: Symbol },
    #[serde(rename = "b")]
    Blank,
}

impl EditLetter {
    pub fn n(s: impl Into<Symbol>) -> Self {
        EditLetter::NoChange { sym: s.into() }
    }

    pub fn c(from: impl Into<Symbol>, to: impl Into<Symbol>) -> Self {
        EditLetter::Change {
            from: from.into(),
            to: to.into(),
        }
    }

    pub fn v(s: impl Into<Symbol>) -> Self {
        EditLetter::Insert { sym: s.into() }
    }

    pub fn x(s: impl Into<Symbol>) -> Self {
        EditLetter::Delete { sym: s.into() }
    }

    pub fn op(&self) -> EditOp {
        match self {
            EditLetter::NoChange { .. } => EditOp::NoChange,
            EditLetter::Change { .. } => EditOp::Change,
            EditLetter::Insert { .. } => EditOp::Insert,
            EditLetter::Delete { .. } => EditOp::Delete,
            EditLetter::Blank => EditOp::Blank,
        }
    }

    pub fn weight(&self) -> usize {
        self.op().weight()
    }

    pub fn length(&self) -> usize {
        self.op().length()
    }

    /// The letter read from the source word, if any.
    pub fn source(&self) -> Option<Symbol> {
        match *self {
            EditLetter::NoChange { sym } | EditLetter::Delete { sym } => Some(sym),
            EditLetter::Change { from, .. } => Some(from),
            EditLetter::Insert { .. } | EditLetter::Blank => None,
        }
    }

    /// The letter written to the target word, if any.
    pub fn target(&self) -> Option<Symbol> {
        match *self {
            EditLetter::NoChange { sym } | EditLetter::Insert { sym } => Some(sym),
            EditLetter::Change { to, .. } => Some(to),
            EditLetter::Delete { .. } | EditLetter::Blank => None,
        }
    }

    /// The dual letter used to reverse a path; `None` for the blank letter.
    pub fn reversed(&self) -> Option<EditLetter> {
        Some(match *self {
            EditLetter::NoChange { sym } => EditLetter::NoChange { sym },
            EditLetter::Change { from, to } => EditLetter::Change { from: to, to: from },
            EditLetter::Insert { sym } => EditLetter::Delete { sym },
            EditLetter::Delete { sym } => EditLetter::Insert { sym },
            EditLetter::Blank => return None,
        })
    }
}

impl fmt::Display for EditLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditLetter::NoChange { sym } => write!(f, "n({sym})"),
            EditLetter::Change { from, to } => write!(f, "c({from}>{to})"),
            EditLetter::Insert { sym } => write!(f, "v({sym})"),
            EditLetter::Delete { sym } => write!(f, "x({sym})"),
            EditLetter::Blank => write!(f, "B"),
        }
    }
}

/// A sequence of edit letters.
///
/// `Display` and `FromStr` use the dotted text form, e.g.
/// `x(a).n(b).c(c>a).n(d).v(e).v(e)`; the empty path is the empty string.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EditPath(Vec<EditLetter>);

impl EditPath {
    pub fn new(letters: Vec<EditLetter>) -> Self {
        EditPath(letters)
    }

    pub fn empty() -> Self {
        EditPath(Vec::new())
    }

    pub fn letters(&self) -> &[EditLetter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<EditLetter> {
        self.0
    }

    pub fn push(&mut self, letter: EditLetter) {
        self.0.push(letter);
    }

    /// Number of letters, `|p|`.
    pub fn num_letters(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn wgt(&self) -> usize {
        self.0.iter().map(EditLetter::weight).sum()
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(EditLetter::length).sum()
    }

    /// `wgt / len`, or zero for a path of length zero.
    pub fn cost(&self) -> Rational {
        let len = self.len();
        if len == 0 {
            Rational::ZERO
        } else {
            Rational::new(self.wgt() as u64, len as u64)
        }
    }

    pub fn blank_count(&self) -> usize {
        self.0.iter().filter(|l| **l == EditLetter::Blank).count()
    }

    fn first_blank(&self) -> Option<usize> {
        self.0.iter().position(|l| *l == EditLetter::Blank)
    }

    /// Applies the path to `w`.
    ///
    /// Fails with [`Error::InvalidPath`] carrying the 1-based index of the first
    /// letter that cannot be applied (one past the end when the path runs out
    /// before the word does).
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if let Some(i) = self.first_blank() {
            return Err(Error::BlankInPath { index: i + 1 });
        }
        let input = w.symbols();
        let mut out = Vec::with_capacity(input.len() + self.0.len());
        let mut pos = 0;
        for (k, letter) in self.0.iter().enumerate() {
            let bad = Error::InvalidPath { index: k + 1 };
            match *letter {
                EditLetter::Insert { sym } => out.push(sym),
                EditLetter::Change { from, to } => {
                    if input.get(pos) != Some(&from) {
                        return Err(bad);
                    }
                    out.push(to);
                    pos += 1;
                }
                EditLetter::NoChange { sym } => {
                    if input.get(pos) != Some(&sym) {
                        return Err(bad);
                    }
                    out.push(sym);
                    pos += 1;
                }
                EditLetter::Delete { sym } => {
                    if input.get(pos) != Some(&sym) {
                        return Err(bad);
                    }
                    pos += 1;
                }
                EditLetter::Blank => unreachable!(),
            }
        }
        if pos != input.len() {
            return Err(Error::InvalidPath {
                index: self.0.len() + 1,
            });
        }
        Ok(Word(out))
    }

    /// The letterwise dual path: inserts and deletes swap, changes flip.
    pub fn reverse_path(&self) -> Result<EditPath> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, l)| l.reversed().ok_or(Error::BlankInPath { index: i + 1 }))
            .collect::<Result<Vec<_>>>()
            .map(EditPath)
    }

    /// Drops every blank letter.
    pub fn project_h(&self) -> EditPath {
        EditPath(
            self.0
                .iter()
                .copied()
                .filter(|l| *l != EditLetter::Blank)
                .collect(),
        )
    }

    /// Projects a path over `core ∪ side1 ∪ side2` onto the core alphabet.
    ///
    /// Letters over the core pass through; a change from a `side1` symbol into a
    /// core symbol becomes an insert of that core symbol; a change from a core
    /// symbol into a `side2` symbol becomes a delete; everything else vanishes.
    pub fn project_f(
        &self,
        core: &AlphabetSet,
        side1: &AlphabetSet,
        side2: &AlphabetSet,
    ) -> Result<EditPath> {
        for (a, b) in [(core, side1), (core, side2), (side1, side2)] {
            if let Some(s) = a.intersection(b).next() {
                return Err(Error::OverlappingAlphabets { symbol: s.0 });
            }
        }
        let mapped = self.0.iter().filter_map(|l| match *l {
            EditLetter::NoChange { sym } | EditLetter::Insert { sym } | EditLetter::Delete { sym }
                if core.contains(&sym) =>
            {
                Some(*l)
            }
            EditLetter::Change { from, to } if core.contains(&from) && core.contains(&to) => Some(*l),
            EditLetter::Change { from, to } if side1.contains(&from) && core.contains(&to) => {
                Some(EditLetter::Insert { sym: to })
            }
            EditLetter::Change { from, to } if core.contains(&from) && side2.contains(&to) => {
                Some(EditLetter::Delete { sym: from })
            }
            _ => None,
        });
        Ok(EditPath(mapped.collect()))
    }

    /// The bare form without subscripts, e.g. `xncnvv`.
    pub fn bare(&self) -> String {
        self.0.iter().map(|l| l.op().glyph()).collect()
    }

    pub fn ops(&self) -> Vec<EditOp> {
        self.0.iter().map(EditLetter::op).collect()
    }

    /// Renders the alignment view of applying this path to `w`.
    pub fn render_alignment(&self, w: &Word) -> Result<Alignment> {
        self.apply(w)?;
        let mut top = Vec::with_capacity(self.0.len());
        let mut bottom = Vec::with_capacity(self.0.len());
        for letter in &self.0 {
            top.push(letter.source());
            bottom.push(letter.target());
        }
        Ok(Alignment { top, bottom })
    }
}

impl From<Vec<EditLetter>> for EditPath {
    fn from(v: Vec<EditLetter>) -> Self {
        EditPath(v)
    }
}

impl FromIterator<EditLetter> for EditPath {
    fn from_iter<I: IntoIterator<Item = EditLetter>>(iter: I) -> Self {
        EditPath(iter.into_iter().collect())
    }
}

impl fmt::Display for EditPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EditPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EditPath({self})")
    }
}

impl FromStr for EditPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        let err = |i: usize, what: &str| Error::Parse(format!("{what} at offset {i} in edit path {s:?}"));
        while i < chars.len() {
            if !letters.is_empty() {
                if chars[i] != '.' {
                    return Err(err(i, "expected '.'"));
                }
                i += 1;
            }
            let op = chars
                .get(i)
                .and_then(|&c| EditOp::from_glyph(c))
                .ok_or_else(|| err(i, "expected one of n, c, v, x, B"))?;
            i += 1;
            if op == EditOp::Blank {
                letters.push(EditLetter::Blank);
                continue;
            }
            if chars.get(i) != Some(&'(') {
                return Err(err(i, "expected '('"));
            }
            let first = *chars.get(i + 1).ok_or_else(|| err(i + 1, "missing symbol"))?;
            i += 2;
            let letter = if op == EditOp::Change {
                if chars.get(i) != Some(&'>') {
                    return Err(err(i, "expected '>'"));
                }
                let second = *chars.get(i + 1).ok_or_else(|| err(i + 1, "missing symbol"))?;
                i += 2;
                EditLetter::c(first, second)
            } else {
                match op {
                    EditOp::NoChange => EditLetter::n(first),
                    EditOp::Insert => EditLetter::v(first),
                    _ => EditLetter::x(first),
                }
            };
            if chars.get(i) != Some(&')') {
                return Err(err(i, "expected ')'"));
            }
            i += 1;
            letters.push(letter);
        }
        Ok(EditPath(letters))
    }
}

/// Parses the bare form (`xncnvv`, blanks as `b`). Whitespace is ignored.
pub fn parse_bare(s: &str) -> Result<Vec<EditOp>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| EditOp::from_glyph(c).ok_or_else(|| Error::Parse(format!("unknown edit letter {c:?}"))))
        .collect()
}

/// Two equal-length rows; `None` is the padding glyph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    pub top: Vec<Option<Symbol>>,
    pub bottom: Vec<Option<Symbol>>,
}

impl Alignment {
    /// Columns where the rows disagree (the Hamming distance of the padded words).
    pub fn mismatches(&self) -> usize {
        self.top.iter().zip(&self.bottom).filter(|(a, b)| a != b).count()
    }

    pub fn render_row(row: &[Option<Symbol>], pad: char) -> String {
        row.iter().map(|s| s.map_or(pad, |s| s.0)).collect()
    }

    pub fn rows(&self, pad: char) -> (String, String) {
        (
            Self::render_row(&self.top, pad),
            Self::render_row(&self.bottom, pad),
        )
    }
}

/// The subsequence of `w` made of symbols in `keep`.
pub fn project_word(w: &Word, keep: &AlphabetSet) -> Word {
    w.symbols().iter().copied().filter(|s| keep.contains(s)).collect()
}

/// Fills in subscripts for a bare path so that it takes `from` to `to`.
///
/// Fails with [`Error::InvalidPath`] at the first letter that cannot be
/// subscripted consistently.
pub fn infer_subscripts(ops: &[EditOp], from: &Word, to: &Word) -> Result<EditPath> {
    let (src, dst) = (from.symbols(), to.symbols());
    let (mut i, mut j) = (0, 0);
    let mut letters = Vec::with_capacity(ops.len());
    for (k, op) in ops.iter().enumerate() {
        let bad = Error::InvalidPath { index: k + 1 };
        let letter = match op {
            EditOp::NoChange => {
                let (a, b) = (src.get(i), dst.get(j));
                match (a, b) {
                    (Some(a), Some(b)) if a == b => EditLetter::n(*a),
                    _ => return Err(bad),
                }
            }
            EditOp::Change => match (src.get(i), dst.get(j)) {
                (Some(a), Some(b)) => EditLetter::c(*a, *b),
                _ => return Err(bad),
            },
            EditOp::Insert => EditLetter::v(*dst.get(j).ok_or(bad)?),
            EditOp::Delete => EditLetter::x(*src.get(i).ok_or(bad)?),
            EditOp::Blank => return Err(Error::BlankInPath { index: k + 1 }),
        };
        if letter.source().is_some() {
            i += 1;
        }
        if letter.target().is_some() {
            j += 1;
        }
        letters.push(letter);
    }
    if i != src.len() || j != dst.len() {
        return Err(Error::InvalidPath {
            index: ops.len() + 1,
        });
    }
    Ok(EditPath(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_path() -> EditPath {
        "x(a).n(b).c(c>a).n(d).v(e).v(e)".parse().unwrap()
    }

    #[test]
    fn apply_worked_example() {
        assert_eq!(example_path().apply(&"abcd".into()).unwrap(), Word::from("badee"));
    }

    #[test]
    fn apply_empty() {
        assert_eq!(EditPath::empty().apply(&Word::empty()).unwrap(), Word::empty());
    }

    #[test]
    fn apply_mismatch_reports_index() {
        let p = EditPath::new(vec![EditLetter::n('a')]);
        assert_eq!(p.apply(&"b".into()), Err(Error::InvalidPath { index: 1 }));
        // path exhausted before the word
        assert_eq!(p.apply(&"ab".into()), Err(Error::InvalidPath { index: 2 }));
        // word exhausted before the path
        assert_eq!(p.apply(&"".into()), Err(Error::InvalidPath { index: 1 }));
    }

    #[test]
    fn apply_rejects_blank() {
        let p = EditPath::new(vec![EditLetter::n('a'), EditLetter::Blank]);
        assert_eq!(p.apply(&"a".into()), Err(Error::BlankInPath { index: 2 }));
    }

    #[test]
    fn change_to_same_symbol_is_valid() {
        let p = EditPath::new(vec![EditLetter::c('a', 'a')]);
        assert_eq!(p.apply(&"a".into()).unwrap(), Word::from("a"));
        assert_eq!(p.wgt(), 1);
    }

    #[test]
    fn weights_lengths_costs() {
        let p = example_path();
        assert_eq!(p.wgt(), 4);
        assert_eq!(p.len(), 6);
        assert_eq!(p.cost(), Rational::new(2, 3));

        let e = EditPath::empty();
        assert_eq!((e.wgt(), e.len(), e.cost()), (0, 0, Rational::ZERO));

        let b = EditPath::new(vec![EditLetter::Blank]);
        assert_eq!(b.wgt(), 2);
        let bn = EditPath::new(vec![EditLetter::Blank, EditLetter::n('a')]);
        assert_eq!(bn.len(), 3);

        let nnn: EditPath = "n(a).n(b).n(c)".parse().unwrap();
        assert_eq!(nnn.cost(), Rational::ZERO);
    }

    #[test]
    fn reverse() {
        let p: EditPath = "x(a).n(b)".parse().unwrap();
        assert_eq!(p.reverse_path().unwrap().to_string(), "v(a).n(b)");
        let n: EditPath = "n(a)".parse().unwrap();
        assert_eq!(n.reverse_path().unwrap(), n);
        let c: EditPath = "c(a>b)".parse().unwrap();
        assert_eq!(c.reverse_path().unwrap().to_string(), "c(b>a)");
        let blank = EditPath::new(vec![EditLetter::Blank]);
        assert_eq!(blank.reverse_path(), Err(Error::BlankInPath { index: 1 }));
    }

    #[test]
    fn projection_h() {
        let ops = [EditOp::Insert, EditOp::Change, EditOp::Insert, EditOp::NoChange];
        let mut p: EditPath = ops
            .iter()
            .map(|op| match op {
                EditOp::Insert => EditLetter::v('a'),
                EditOp::Change => EditLetter::c('b', 'a'),
                _ => EditLetter::n('b'),
            })
            .collect();
        p.push(EditLetter::Blank);
        p.push(EditLetter::n('a'));
        p.push(EditLetter::n('b'));
        assert_eq!(p.bare(), "vcvnbnn");
        assert_eq!(p.project_h().bare(), "vcvnnn");
        assert!(EditPath::new(vec![EditLetter::Blank]).project_h().is_empty());
        let plain = example_path();
        assert_eq!(plain.project_h(), plain);
    }

    #[test]
    fn projection_f() {
        let core = alphabet("ab");
        let side1 = alphabet("X");
        let side2 = alphabet("Y");
        let f = |s: &str| {
            s.parse::<EditPath>()
                .unwrap()
                .project_f(&core, &side1, &side2)
                .unwrap()
                .to_string()
        };
        assert_eq!(f("c(X>a)"), "v(a)");
        assert_eq!(f("c(a>Y)"), "x(a)");
        assert_eq!(f("n(a)"), "n(a)");
        assert_eq!(f("c(a>b)"), "c(a>b)");
        assert_eq!(f("x(X)"), "");
        assert_eq!(f("v(Y)"), "");
        assert_eq!(f("c(X>Y)"), "");

        let overlap = EditPath::empty().project_f(&core, &alphabet("a"), &side2);
        assert_eq!(overlap, Err(Error::OverlappingAlphabets { symbol: 'a' }));
    }

    #[test]
    fn projection_word() {
        let w = Word::from("abcbacc");
        assert_eq!(project_word(&w, &alphabet("ab")), Word::from("abba"));
        assert_eq!(project_word(&w, &w.alphabet()), w);
        assert_eq!(project_word(&w, &AlphabetSet::new()), Word::empty());
    }

    #[test]
    fn alignment_views() {
        let p: EditPath = "x(a).n(c).x(b).c(b>c)".parse().unwrap();
        let al = p.render_alignment(&"acbb".into()).unwrap();
        assert_eq!(al.rows('_'), ("acbb".to_string(), "_c_c".to_string()));
        assert_eq!(al.mismatches(), 3);

        let al = example_path().render_alignment(&"abcd".into()).unwrap();
        assert_eq!(al.rows('_'), ("abcd__".to_string(), "_badee".to_string()));
        assert_eq!(al.mismatches(), 4);

        let nn: EditPath = "n(a).n(b)".parse().unwrap();
        let al = nn.render_alignment(&"ab".into()).unwrap();
        assert_eq!(al.rows('_'), ("ab".to_string(), "ab".to_string()));
    }

    #[test]
    fn text_forms() {
        let p = example_path();
        assert_eq!(p.to_string(), "x(a).n(b).c(c>a).n(d).v(e).v(e)");
        assert_eq!(p.bare(), "xncnvv");
        assert_eq!("".parse::<EditPath>().unwrap(), EditPath::empty());
        assert_eq!("n(a).B".parse::<EditPath>().unwrap().blank_count(), 1);
        assert!("n(a)x(b)".parse::<EditPath>().is_err());
        assert!("q(a)".parse::<EditPath>().is_err());
        assert!("c(a)".parse::<EditPath>().is_err());
        // symbols that collide with the syntax still parse positionally
        assert_eq!("c(>>))".parse::<EditPath>().unwrap(), EditPath::new(vec![EditLetter::c('>', ')')]));
    }

    #[test]
    fn json_form() {
        let p: EditPath = "n(a).c(a>b).B".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"op":"n","sym":"a"},{"op":"c","from":"a","to":"b"},{"op":"b"}]"#
        );
        let back: EditPath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn subscripts_from_bare_path() {
        let ops = parse_bare("xncnvv").unwrap();
        let p = infer_subscripts(&ops, &"abcd".into(), &"badee".into()).unwrap();
        assert_eq!(p, example_path());
        let ops = parse_bare("n").unwrap();
        assert_eq!(
            infer_subscripts(&ops, &"a".into(), &"b".into()),
            Err(Error::InvalidPath { index: 1 })
        );
    }
}
