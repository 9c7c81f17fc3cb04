//! Edit distance and normalized edit distance by dynamic programming.
//!
//! NED uses a layered table: `D[L][i][j]` is the minimum weight of an edit path
//! of length exactly `L` taking `a[..i]` to `b[..j]`. Only cells with
//! `max(i, j) <= L <= i + j` are reachable. The distance is the minimum of
//! `D[L][m][n] / L` over `L` in `[max(m, n), m + n]`, compared exactly.

use crate::edit_model::{EditLetter, EditPath, Symbol, Word};
use crate::rational::Rational;

use super::{DistanceResult, Metric, Witness};

const INF: u32 = u32::MAX / 2;

/// Backtracking choice for one cell. Declaration order is the tie-break preference.
#[derive(Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
enum Step {
    None,
    Keep,
    Change,
    Delete,
    Insert,
}

/// Classic Levenshtein distance with a minimum-weight witness.
pub fn ed(a: &Word, b: &Word) -> DistanceResult {
    let (s, t) = (a.symbols(), b.symbols());
    let (m, n) = (s.len(), t.len());
    let w = n + 1;
    let mut d = vec![0u32; (m + 1) * w];
    for i in 0..=m {
        d[i * w] = i as u32;
    }
    for (j, cell) in d.iter_mut().take(w).enumerate() {
        *cell = j as u32;
    }
    for i in 1..=m {
        for j in 1..=n {
            let sub = d[(i - 1) * w + j - 1] + u32::from(s[i - 1] != t[j - 1]);
            let del = d[(i - 1) * w + j] + 1;
            let ins = d[i * w + j - 1] + 1;
            d[i * w + j] = sub.min(del).min(ins);
        }
    }

    let mut letters = Vec::with_capacity(m + n);
    let (mut i, mut j) = (m, n);
    while i > 0 || j > 0 {
        let cur = d[i * w + j];
        if i > 0 && j > 0 {
            let same = s[i - 1] == t[j - 1];
            if d[(i - 1) * w + j - 1] + u32::from(!same) == cur {
                letters.push(if same {
                    EditLetter::n(s[i - 1])
                } else {
                    EditLetter::c(s[i - 1], t[j - 1])
                });
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && d[(i - 1) * w + j] + 1 == cur {
            letters.push(EditLetter::x(s[i - 1]));
            i -= 1;
        } else {
            letters.push(EditLetter::v(t[j - 1]));
            j -= 1;
        }
    }
    letters.reverse();

    DistanceResult {
        metric: Metric::Ed,
        value: Rational::from(u64::from(d[m * w + n])),
        witness: Some(Witness::Path(EditPath::new(letters))),
    }
}

struct Layers<'a> {
    s: &'a [Symbol],
    t: &'a [Symbol],
    width: usize,
}

impl<'a> Layers<'a> {
    fn new(s: &'a [Symbol], t: &'a [Symbol]) -> Self {
        Layers {
            s,
            t,
            width: t.len() + 1,
        }
    }

    fn cells(&self) -> usize {
        (self.s.len() + 1) * self.width
    }

    /// Fills layer `len` from layer `len - 1`, optionally recording backtracking steps.
    fn advance(&self, len: usize, prev: &[u32], cur: &mut [u32], mut steps: Option<&mut [Step]>) {
        let (m, n, w) = (self.s.len(), self.t.len(), self.width);
        cur.fill(INF);
        for i in len.saturating_sub(n)..=m.min(len) {
            for j in len.saturating_sub(i)..=n.min(len) {
                let mut best = INF;
                let mut step = Step::None;
                if i > 0 && j > 0 {
                    let same = self.s[i - 1] == self.t[j - 1];
                    let v = prev[(i - 1) * w + j - 1].saturating_add(u32::from(!same));
                    if v < best {
                        best = v;
                        step = if same { Step::Keep } else { Step::Change };
                    }
                }
                if i > 0 {
                    let v = prev[(i - 1) * w + j].saturating_add(1);
                    if v < best {
                        best = v;
                        step = Step::Delete;
                    }
                }
                if j > 0 {
                    let v = prev[i * w + j - 1].saturating_add(1);
                    if v < best {
                        best = v;
                        step = Step::Insert;
                    }
                }
                if best < INF {
                    cur[i * w + j] = best;
                    if let Some(steps) = steps.as_deref_mut() {
                        steps[i * w + j] = step;
                    }
                }
            }
        }
    }
}

fn better(weight: u32, len: usize, best: Option<(Rational, usize)>) -> Option<(Rational, usize)> {
    let cost = Rational::new(u64::from(weight), len as u64);
    match best {
        Some((c, _)) if c <= cost => best,
        _ => Some((cost, len)),
    }
}

/// NED value only, in `O(mn)` space.
pub fn ned_value(a: &Word, b: &Word) -> Rational {
    let (s, t) = (a.symbols(), b.symbols());
    let (m, n) = (s.len(), t.len());
    if m + n == 0 {
        return Rational::ZERO;
    }
    let layers = Layers::new(s, t);
    let mut prev = vec![INF; layers.cells()];
    let mut cur = vec![INF; layers.cells()];
    prev[0] = 0;
    let mut best = None;
    for len in 1..=m + n {
        layers.advance(len, &prev, &mut cur, None);
        if len >= m.max(n) {
            let wgt = cur[m * layers.width + n];
            if wgt < INF {
                best = better(wgt, len, best);
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    best.map(|(c, _)| c).unwrap_or(Rational::ZERO)
}

/// NED with an optimal witness path.
///
/// Among optimal paths the shortest is returned; backtracking prefers
/// no-change, then change, delete and insert. Witness reconstruction keeps one
/// byte per cell of every layer.
pub fn ned(a: &Word, b: &Word) -> DistanceResult {
    let (s, t) = (a.symbols(), b.symbols());
    let (m, n) = (s.len(), t.len());
    if m + n == 0 {
        return DistanceResult {
            metric: Metric::Ned,
            value: Rational::ZERO,
            witness: Some(Witness::Path(EditPath::empty())),
        };
    }
    let layers = Layers::new(s, t);
    let cells = layers.cells();
    let mut steps = vec![Step::None; cells * (m + n + 1)];
    let mut prev = vec![INF; cells];
    let mut cur = vec![INF; cells];
    prev[0] = 0;
    let mut best = None;
    for len in 1..=m + n {
        let slab = &mut steps[len * cells..(len + 1) * cells];
        layers.advance(len, &prev, &mut cur, Some(slab));
        if len >= m.max(n) {
            let wgt = cur[m * layers.width + n];
            if wgt < INF {
                best = better(wgt, len, best);
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let (value, best_len) = best.expect("the all-delete-then-insert path always exists");

    let w = layers.width;
    let mut letters = Vec::with_capacity(best_len);
    let (mut i, mut j) = (m, n);
    for len in (1..=best_len).rev() {
        match steps[len * cells + i * w + j] {
            Step::Keep => {
                letters.push(EditLetter::n(s[i - 1]));
                i -= 1;
                j -= 1;
            }
            Step::Change => {
                letters.push(EditLetter::c(s[i - 1], t[j - 1]));
                i -= 1;
                j -= 1;
            }
            Step::Delete => {
                letters.push(EditLetter::x(s[i - 1]));
                i -= 1;
            }
            Step::Insert => {
                letters.push(EditLetter::v(t[j - 1]));
                j -= 1;
            }
            Step::None => unreachable!("backtracking left the reachable band"),
        }
    }
    debug_assert_eq!((i, j), (0, 0));
    letters.reverse();

    DistanceResult {
        metric: Metric::Ned,
        value,
        witness: Some(Witness::Path(EditPath::new(letters))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn check_witness(a: &str, b: &str) -> DistanceResult {
        let r = ned(&w(a), &w(b));
        let p = r.path().unwrap();
        assert_eq!(p.apply(&w(a)).unwrap(), w(b));
        assert_eq!(p.cost(), r.value);
        assert_eq!(ned_value(&w(a), &w(b)), r.value);
        r
    }

    #[test]
    fn worked_examples() {
        assert_eq!(check_witness("acbb", "cc").value, Rational::new(3, 4));
        assert_eq!(check_witness("aabcde", "abpcg").value, Rational::new(4, 7));
        assert_eq!(check_witness("", "a").value, Rational::ONE);
        assert_eq!(check_witness("abc", "abc").value, Rational::ZERO);
        assert_eq!(check_witness("", "").value, Rational::ZERO);
    }

    #[test]
    fn long_repetition_example() {
        let a = w("a").repeat(96).concat(&w("b").repeat(4));
        let b = w("a").repeat(100);
        let r = ned(&a, &b);
        assert_eq!(r.value, Rational::new(1, 25));
        assert_eq!(r.path().unwrap().apply(&a).unwrap(), b);
        assert_eq!(ed(&a, &b).value, Rational::from(4));
    }

    #[test]
    fn witness_prefers_shortest_and_keep() {
        let r = check_witness("acbb", "cc");
        // xnxc and xnc x-variants tie on cost 3/4 at length 4
        assert_eq!(r.path().unwrap().len(), 4);
        let same = check_witness("abab", "abab");
        assert_eq!(same.path().unwrap().bare(), "nnnn");
    }

    #[test]
    fn edit_distance() {
        assert_eq!(ed(&w("aabcde"), &w("abpcg")).value, Rational::from(4));
        assert_eq!(ed(&w("acbb"), &w("cc")).value, Rational::from(3));
        assert_eq!(ed(&w("kitten"), &w("sitting")).value, Rational::from(3));
        let r = ed(&w("abcd"), &w("badee"));
        let p = r.path().unwrap();
        assert_eq!(p.apply(&w("abcd")).unwrap(), w("badee"));
        assert_eq!(Rational::from(p.wgt() as u64), r.value);
    }
}
