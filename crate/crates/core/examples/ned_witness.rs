//! Normalized edit distance with an optimal path.
//!
//! Usage: `cargo run --example ned_witness -- <a> <b>`

use nedlib::metrics::{ed, ned};
use nedlib::Word;

fn main() -> nedlib::Result<()> {
    let mut args = std::env::args().skip(1);
    let a = Word::from(args.next().unwrap_or_else(|| "aabcde".into()).as_str());
    let b = Word::from(args.next().unwrap_or_else(|| "abpcg".into()).as_str());

    let r = ned(&a, &b);
    let p = r.path().expect("ned always has a path witness");
    println!("ned({a}, {b}) = {} ~ {}", r.value, r.value.decimal());
    println!("witness {p} (bare {})", p.bare());
    let (top, bottom) = p.render_alignment(&a)?.rows('_');
    println!("{top}\n{bottom}");

    // the ED optimum is not always the NED optimum
    let e = ed(&a, &b);
    let q = e.path().unwrap();
    println!("ed = {}, its path costs {} under normalization", e.value, q.cost());
    Ok(())
}
