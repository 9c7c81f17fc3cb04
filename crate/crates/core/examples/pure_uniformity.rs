//! Padding words with fresh symbols.
//!
//! NED never drops below the unpadded distance, and an optimal padded path
//! projects back to a path between the original words. GED and CED can drop.

use nedlib::edit_model::alphabet;
use nedlib::metrics::{ced, ged, ned, CedSearchConfig};
use nedlib::Word;

fn main() -> nedlib::Result<()> {
    let (s1, s2) = (Word::from("abca"), Word::from("cab"));
    let (p1, p2) = (Word::from("aXbcYa"), Word::from("c0ab1"));
    let plain = ned(&s1, &s2);
    let padded = ned(&p1, &p2);
    println!("ned({s1}, {s2}) = {}  ned({p1}, {p2}) = {}", plain.value, padded.value);

    let path = padded.path().unwrap();
    let projected = path.project_f(&alphabet("abc"), &alphabet("XY"), &alphabet("01"))?;
    println!("{path}\n  projects to {projected}, cost {}, reaching {}", projected.cost(), projected.apply(&s1)?);

    let a = Word::from("a");
    let c = Word::from("c");
    let g = |x: &Word| ged(x, &a.repeat(100)).value;
    println!("ged(a^50, a^100) = {}  ged(a^50c^50, a^100) = {}", g(&a.repeat(50)), g(&a.repeat(50).concat(&c.repeat(50))));
    let cfg = CedSearchConfig::default();
    let k = |x: &Word| ced(x, &a.repeat(10), &cfg).map(|r| r.value);
    println!("ced(a^5, a^10) = {}  ced(a^5c^5, a^10) = {}", k(&a.repeat(5))?, k(&a.repeat(5).concat(&c.repeat(5)))?);
    Ok(())
}
