//! Brute-force reference implementations.
//!
//! These are deliberately simple and slow. They share no code with
//! [`crate::metrics`] beyond the basic word and path types.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::edit_model::{EditLetter, EditPath, Symbol, Word};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default cap on `|a| + |b|` for alignment enumeration.
pub const MAX_ALIGNMENT_LEN: usize = 12;

/// Words over `alphabet` of length at most `max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_len: usize,
    pub alphabet: Vec<Symbol>,
    /// Cap on the total number of enumerated words.
    pub cap: u128,
}

impl EnumBudget {
    pub fn new(alphabet: &str, max_len: usize) -> Self {
        EnumBudget {
            max_len,
            alphabet: alphabet.chars().map(Symbol).collect(),
            cap: 1 << 24,
        }
    }

    /// `sum_{i=0..=max_len} |alphabet|^i`
    pub fn size(&self) -> u128 {
        let k = self.alphabet.len() as u128;
        let mut total = 0u128;
        let mut term = 1u128;
        for _ in 0..=self.max_len {
            total = total.saturating_add(term);
            term = term.saturating_mul(k);
        }
        total
    }
}

/// Every word within the budget, shortest first, lexicographic (by alphabet order) within a length.
pub fn enumerate_words(budget: &EnumBudget) -> Result<impl Iterator<Item = Word> + '_> {
    let needed = budget.size();
    if needed > budget.cap {
        return Err(Error::BudgetExceeded {
            needed,
            cap: budget.cap,
        });
    }
    let k = budget.alphabet.len();
    let per_len = (0..=budget.max_len).flat_map(move |len| {
        let count = if k == 0 && len > 0 { 0 } else { k.pow(len as u32) };
        (0..count).map(move |mut idx| {
            let mut symbols = vec![Symbol(' '); len];
            for slot in symbols.iter_mut().rev() {
                *slot = budget.alphabet[idx % k];
                idx /= k;
            }
            Word::new(symbols)
        })
    });
    Ok(per_len)
}

/// Calls `visit` with every edit path from `a` to `b` that never puts a delete
/// directly after an insert. Such a pair can always be replaced by a single
/// change or no-change of no greater cost, so minima are preserved.
fn for_each_alignment(a: &[Symbol], b: &[Symbol], visit: &mut dyn FnMut(&[EditLetter])) {
    fn go(a: &[Symbol], b: &[Symbol], path: &mut Vec<EditLetter>, visit: &mut dyn FnMut(&[EditLetter])) {
        if a.is_empty() && b.is_empty() {
            visit(path);
            return;
        }
        if let (Some(&x), Some(&y)) = (a.first(), b.first()) {
            path.push(if x == y { EditLetter::n(x) } else { EditLetter::c(x, y) });
            go(&a[1..], &b[1..], path, visit);
            path.pop();
        }
        if let Some(&x) = a.first() {
            if !matches!(path.last(), Some(EditLetter::Insert { .. })) {
                path.push(EditLetter::x(x));
                go(&a[1..], b, path, visit);
                path.pop();
            }
        }
        if let Some(&y) = b.first() {
            path.push(EditLetter::v(y));
            go(a, &b[1..], path, visit);
            path.pop();
        }
    }
    let mut path = Vec::with_capacity(a.len() + b.len());
    go(a, b, &mut path, visit);
}

fn check_alignment_budget(a: &Word, b: &Word, limit: usize) -> Result<()> {
    let total = a.len() + b.len();
    if total > limit {
        return Err(Error::BudgetExceeded {
            needed: total as u128,
            cap: limit as u128,
        });
    }
    Ok(())
}

/// Minimum cost over all alignments of `a` and `b`, with `|a| + |b| <= limit`.
pub fn brute_force_ned_with_limit(a: &Word, b: &Word, limit: usize) -> Result<Rational> {
    check_alignment_budget(a, b, limit)?;
    if a.is_empty() && b.is_empty() {
        return Ok(Rational::ZERO);
    }
    let mut best: Option<Rational> = None;
    for_each_alignment(a.symbols(), b.symbols(), &mut |p| {
        let wgt: usize = p.iter().map(EditLetter::weight).sum();
        let cost = Rational::new(wgt as u64, p.len() as u64);
        if best.is_none_or(|b| cost < b) {
            best = Some(cost);
        }
    });
    Ok(best.unwrap_or(Rational::ZERO))
}

pub fn brute_force_ned(a: &Word, b: &Word) -> Result<Rational> {
    brute_force_ned_with_limit(a, b, MAX_ALIGNMENT_LEN)
}

/// Minimum weight over all alignments.
pub fn brute_force_ed(a: &Word, b: &Word) -> Result<u64> {
    check_alignment_budget(a, b, MAX_ALIGNMENT_LEN)?;
    let mut best = u64::MAX;
    for_each_alignment(a.symbols(), b.symbols(), &mut |p| {
        best = best.min(p.iter().map(EditLetter::weight).sum::<usize>() as u64);
    });
    Ok(best)
}

/// Every canonical alignment as an explicit edit path.
pub fn all_alignments(a: &Word, b: &Word) -> Result<Vec<EditPath>> {
    check_alignment_budget(a, b, MAX_ALIGNMENT_LEN)?;
    let mut out = Vec::new();
    for_each_alignment(a.symbols(), b.symbols(), &mut |p| out.push(EditPath::new(p.to_vec())));
    Ok(out)
}

fn single_edits(u: &[Symbol], alphabet: &[Symbol], max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    for i in 0..u.len() {
        let mut d = u.to_vec();
        d.remove(i);
        out.push(d);
        for &s in alphabet {
            if s != u[i] {
                let mut c = u.to_vec();
                c[i] = s;
                out.push(c);
            }
        }
    }
    if u.len() < max_len {
        for i in 0..=u.len() {
            for &s in alphabet {
                let mut v = u.to_vec();
                v.insert(i, s);
                out.push(v);
            }
        }
    }
    out
}

/// CED over a loosened search space: the alphabet of both words plus one
/// fresh symbol, and intermediate lengths up to `max(|a|, |b|) + 4`.
///
/// `relaxed.max_len` caps the input lengths; `relaxed.alphabet`, when
/// non-empty, adds further symbols to the search alphabet.
pub fn brute_force_ced(a: &Word, b: &Word, relaxed: &EnumBudget) -> Result<Rational> {
    for w in [a, b] {
        if w.len() > relaxed.max_len {
            return Err(Error::BudgetExceeded {
                needed: w.len() as u128,
                cap: relaxed.max_len as u128,
            });
        }
    }
    let mut alphabet: Vec<Symbol> = a.alphabet().union(&b.alphabet()).copied().collect();
    for s in &relaxed.alphabet {
        if !alphabet.contains(s) {
            alphabet.push(*s);
        }
    }
    let fresh = (0x2460..)
        .filter_map(char::from_u32)
        .map(Symbol)
        .find(|s| !alphabet.contains(s))
        .unwrap();
    alphabet.push(fresh);
    let max_len = a.len().max(b.len()) + 4;

    let start = a.symbols().to_vec();
    let goal = b.symbols().to_vec();
    let mut dist: HashMap<Vec<Symbol>, Rational> = HashMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert(start.clone(), Rational::ZERO);
    heap.push(Reverse((Rational::ZERO, start)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if u == goal {
            return Ok(d);
        }
        if dist.get(&u).is_some_and(|best| *best < d) {
            continue;
        }
        for v in single_edits(&u, &alphabet, max_len) {
            let nd = d + Rational::new(1, u.len().max(v.len()) as u64);
            if dist.get(&v).is_none_or(|old| nd < *old) {
                dist.insert(v.clone(), nd);
                heap.push(Reverse((nd, v)));
            }
        }
        if dist.len() as u128 > relaxed.cap {
            return Err(Error::BudgetExceeded {
                needed: dist.len() as u128,
                cap: relaxed.cap,
            });
        }
    }
    unreachable!("goal is reachable by deletions and insertions")
}
