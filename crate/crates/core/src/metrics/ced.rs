//! Contextual edit distance by shortest path over an implicit word graph.
//!
//! Nodes are words; an edge joins two words at edit distance one and costs
//! `1 / max(|u|, |v|)`. All edge costs are unit fractions with denominators no
//! larger than the length bound `B`, so the search runs on integers scaled by
//! `lcm(1..=B)` and converts back to an exact [`Rational`] at the end.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use crate::edit_model::{Symbol, Word};
use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{DistanceResult, Metric, Witness};

/// Extra intermediate length allowed above `max(|a|, |b|)` in restricted mode.
///
/// Detours through longer words can pay off: `ab -> aba -> ba` costs 2/3
/// while two substitutions cost 1. A slack of 2 agrees with every larger
/// bound tried on all pairs over {a, b} up to length 4.
pub const RESTRICTED_LENGTH_SLACK: usize = 2;

/// Longest intermediate word the packed representation can hold.
const MAX_PACKED_LEN: usize = 28;
const BITS: u32 = 4;
const MAX_SYMBOLS: usize = 1 << BITS;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetMode {
    /// Only symbols of the two inputs; lengths up to `max(|a|,|b|) + RESTRICTED_LENGTH_SLACK`.
    Restricted,
    /// Adds `extra_symbols` fresh symbols and `extra_slack` more length on top of restricted mode.
    Relaxed {
        extra_symbols: usize,
        extra_slack: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CedSearchConfig {
    /// Cap on the input word lengths.
    pub max_word_len: usize,
    pub alphabet_mode: AlphabetMode,
    /// Cap on the number of discovered nodes.
    pub node_cap: usize,
}

impl Default for CedSearchConfig {
    fn default() -> Self {
        CedSearchConfig {
            max_word_len: 12,
            alphabet_mode: AlphabetMode::Restricted,
            node_cap: 1_000_000,
        }
    }
}

impl CedSearchConfig {
    pub fn with_max_word_len(mut self, max_word_len: usize) -> Self {
        self.max_word_len = max_word_len;
        self
    }

    pub fn relaxed(mut self, extra_symbols: usize, extra_slack: usize) -> Self {
        self.alphabet_mode = AlphabetMode::Relaxed {
            extra_symbols,
            extra_slack,
        };
        self
    }

    fn length_bound(&self, a: &Word, b: &Word) -> usize {
        let base = a.len().max(b.len()) + RESTRICTED_LENGTH_SLACK;
        match self.alphabet_mode {
            AlphabetMode::Restricted => base,
            AlphabetMode::Relaxed { extra_slack, .. } => base + extra_slack,
        }
    }

    fn extra_symbols(&self) -> usize {
        match self.alphabet_mode {
            AlphabetMode::Restricted => 0,
            AlphabetMode::Relaxed { extra_symbols, .. } => extra_symbols,
        }
    }
}

/// A word packed as 4-bit symbol codes with its length in the top byte.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Packed(u128);

impl Packed {
    fn len(self) -> usize {
        (self.0 >> 120) as usize
    }

    fn get(self, i: usize) -> u8 {
        ((self.0 >> (BITS as usize * i)) & 0xF) as u8
    }

    fn body(self) -> u128 {
        self.0 & ((1u128 << 120) - 1)
    }

    fn from_codes(codes: &[u8]) -> Packed {
        let mut v = 0u128;
        for (i, &c) in codes.iter().enumerate() {
            v |= u128::from(c) << (BITS as usize * i);
        }
        Packed(v | ((codes.len() as u128) << 120))
    }

    fn with_len(body: u128, len: usize) -> Packed {
        Packed(body | ((len as u128) << 120))
    }

    fn low_mask(i: usize) -> u128 {
        (1u128 << (BITS as usize * i)) - 1
    }

    fn insert(self, i: usize, code: u8) -> Packed {
        let body = self.body();
        let lo = body & Self::low_mask(i);
        let hi = (body & !Self::low_mask(i)) << BITS;
        Packed::with_len(lo | hi | (u128::from(code) << (BITS as usize * i)), self.len() + 1)
    }

    fn delete(self, i: usize) -> Packed {
        let body = self.body();
        let lo = body & Self::low_mask(i);
        let hi = (body >> BITS) & !Self::low_mask(i);
        Packed::with_len(lo | hi, self.len() - 1)
    }

    fn substitute(self, i: usize, code: u8) -> Packed {
        let shift = BITS as usize * i;
        Packed((self.0 & !(0xFu128 << shift)) | (u128::from(code) << shift))
    }
}

fn lcm_upto(n: usize) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n as u64).fold(1, |acc, k| acc / gcd(acc, k) * k)
}

/// Contextual edit distance; the witness is the chain of intermediate words.
pub fn ced(a: &Word, b: &Word, cfg: &CedSearchConfig) -> Result<DistanceResult> {
    for w in [a, b] {
        if w.len() > cfg.max_word_len {
            return Err(Error::WordTooLong {
                len: w.len(),
                limit: cfg.max_word_len,
            });
        }
    }
    if a == b {
        return Ok(DistanceResult {
            metric: Metric::Ced,
            value: Rational::ZERO,
            witness: Some(Witness::Chain(vec![a.clone()])),
        });
    }

    let mut symbols: Vec<Symbol> = a.alphabet().union(&b.alphabet()).copied().collect();
    let fresh = cfg.extra_symbols();
    let alpha = symbols.len() + fresh;
    let bound = cfg.length_bound(a, b);
    if alpha > MAX_SYMBOLS {
        return Err(Error::Parse(format!(
            "CED search supports at most {MAX_SYMBOLS} distinct symbols, got {alpha}"
        )));
    }
    if bound > MAX_PACKED_LEN {
        return Err(Error::WordTooLong {
            len: bound,
            limit: MAX_PACKED_LEN,
        });
    }
    // Fresh symbols only need to be distinct codes; give them private-use glyphs for display.
    for k in 0..fresh {
        symbols.push(Symbol(char::from_u32(0xE000 + k as u32).unwrap()));
    }
    let encode = |w: &Word| -> Packed {
        let codes: Vec<u8> = w
            .symbols()
            .iter()
            .map(|s| symbols.iter().position(|x| x == s).unwrap() as u8)
            .collect();
        Packed::from_codes(&codes)
    };
    let decode = |p: Packed| -> Word { (0..p.len()).map(|i| symbols[p.get(i) as usize]).collect() };

    let scale = lcm_upto(bound);
    let source = encode(a);
    let target = encode(b);

    let mut dist: HashMap<Packed, (u64, Packed)> = HashMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert(source, (0, source));
    heap.push(Reverse((0u64, source)));
    let mut neighbours = Vec::new();

    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[&u].0 < d {
            continue;
        }
        if u == target {
            let mut chain = vec![decode(u)];
            let mut cur = u;
            while cur != source {
                cur = dist[&cur].1;
                chain.push(decode(cur));
            }
            chain.reverse();
            return Ok(DistanceResult {
                metric: Metric::Ced,
                value: Rational::new(d, scale),
                witness: Some(Witness::Chain(chain)),
            });
        }

        let len = u.len();
        neighbours.clear();
        if len < bound {
            for i in 0..=len {
                for c in 0..alpha as u8 {
                    neighbours.push(u.insert(i, c));
                }
            }
        }
        for i in 0..len {
            neighbours.push(u.delete(i));
            let here = u.get(i);
            for c in 0..alpha as u8 {
                if c != here {
                    neighbours.push(u.substitute(i, c));
                }
            }
        }
        for &v in &neighbours {
            let step = scale / len.max(v.len()) as u64;
            let nd = d + step;
            match dist.entry(v) {
                Entry::Occupied(mut e) => {
                    if nd < e.get().0 {
                        e.insert((nd, u));
                        heap.push(Reverse((nd, v)));
                    }
                }
                Entry::Vacant(e) => {
                    e.insert((nd, u));
                    heap.push(Reverse((nd, v)));
                }
            }
        }
        if dist.len() > cfg.node_cap {
            return Err(Error::SearchBudgetExceeded { cap: cfg.node_cap });
        }
    }
    unreachable!("the target is always reachable within the length bound")
}

/// `min(1, ced(a, b))`.
pub fn ced_prime(a: &Word, b: &Word, cfg: &CedSearchConfig) -> Result<DistanceResult> {
    let mut r = ced(a, b, cfg)?;
    r.metric = Metric::CedPrime;
    if r.value > Rational::ONE {
        r.value = Rational::ONE;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::harmonic;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn value(a: &str, b: &str) -> Rational {
        ced(&w(a), &w(b), &CedSearchConfig::default()).unwrap().value
    }

    #[test]
    fn packing() {
        let p = Packed::from_codes(&[1, 2, 3]);
        assert_eq!(p.len(), 3);
        assert_eq!(p.insert(1, 7), Packed::from_codes(&[1, 7, 2, 3]));
        assert_eq!(p.insert(3, 7), Packed::from_codes(&[1, 2, 3, 7]));
        assert_eq!(p.delete(0), Packed::from_codes(&[2, 3]));
        assert_eq!(p.delete(2), Packed::from_codes(&[1, 2]));
        assert_eq!(p.substitute(1, 0), Packed::from_codes(&[1, 0, 3]));
    }

    #[test]
    fn repetition_values() {
        assert_eq!(value("aab", "aaab"), Rational::new(1, 4));
        assert_eq!(value("aabaab", "aaabaaab"), Rational::new(15, 56));
        assert_eq!(value("aabaabaab", "aaabaaabaaab"), Rational::new(181, 660));
    }

    #[test]
    fn harmonic_from_empty() {
        for n in 0..=8 {
            assert_eq!(value("", &"a".repeat(n)), harmonic(n as u64), "n = {n}");
        }
        assert_eq!(value("", "aaa"), Rational::new(11, 6));
    }

    #[test]
    fn detour_through_longer_word() {
        let r = ced(&w("ab"), &w("ba"), &CedSearchConfig::default()).unwrap();
        assert_eq!(r.value, Rational::new(2, 3));
        assert_eq!(r.chain().unwrap().iter().map(Word::len).max(), Some(3));
    }

    #[test]
    fn chain_steps_are_single_edits() {
        let r = ced(&w("aabaab"), &w("aaabaaab"), &CedSearchConfig::default()).unwrap();
        let chain = r.chain().unwrap();
        assert_eq!(chain.first(), Some(&w("aabaab")));
        assert_eq!(chain.last(), Some(&w("aaabaaab")));
        let total: Rational = chain
            .windows(2)
            .map(|p| {
                assert_eq!(super::super::ed(&p[0], &p[1]).value, Rational::ONE);
                Rational::new(1, p[0].len().max(p[1].len()) as u64)
            })
            .sum();
        assert_eq!(total, r.value);
    }

    #[test]
    fn identity_and_prime() {
        assert_eq!(value("abc", "abc"), Rational::ZERO);
        let cfg = CedSearchConfig::default();
        assert_eq!(ced_prime(&w("a"), &w("aaaa"), &cfg).unwrap().value, Rational::ONE);
        assert_eq!(ced_prime(&w("aab"), &w("aaab"), &cfg).unwrap().value, Rational::new(1, 4));
        assert_eq!(ced_prime(&w("ab"), &w("ab"), &cfg).unwrap().value, Rational::ZERO);
    }

    #[test]
    fn limits() {
        let cfg = CedSearchConfig::default().with_max_word_len(3);
        assert_eq!(
            ced(&w("aaaa"), &w("a"), &cfg),
            Err(Error::WordTooLong { len: 4, limit: 3 })
        );
        let tiny = CedSearchConfig {
            node_cap: 5,
            ..CedSearchConfig::default()
        };
        assert_eq!(
            ced(&w("abab"), &w("baba"), &tiny),
            Err(Error::SearchBudgetExceeded { cap: 5 })
        );
    }

    #[test]
    fn uniformity_witness_scaled() {
        let a5 = w("aaaaa");
        let a10 = w("a").repeat(10);
        let padded = a5.concat(&w("ccccc"));
        let cfg = CedSearchConfig::default();
        assert_eq!(ced(&a5, &a10, &cfg).unwrap().value, harmonic(10) - harmonic(5));
        assert_eq!(ced(&padded, &a10, &cfg).unwrap().value, Rational::new(1, 2));
    }
}
