//! NED does not grow when both words are repeated; CED does.

use nedlib::metrics::{ced, ned_value, CedSearchConfig};
use nedlib::Word;

fn main() -> nedlib::Result<()> {
    let (u, v) = (Word::from("aab"), Word::from("aaab"));
    let cfg = CedSearchConfig::default();
    println!("{:>2}  {:>8}  {:>10}", "k", "ned", "ced");
    for k in 1..=3 {
        let (a, b) = (u.repeat(k), v.repeat(k));
        let c = ced(&a, &b, &cfg)?;
        println!("{k:>2}  {:>8}  {:>10}  ({})", ned_value(&a, &b).to_string(), c.value.to_string(), c.value.decimal());
    }
    Ok(())
}
