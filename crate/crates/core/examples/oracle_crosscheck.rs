//! Compares the DP and search implementations against brute force on every
//! pair of short words over {a, b}.

use nedlib::metrics::{ced, ned_value, CedSearchConfig};
use nedlib::oracle::{brute_force_ced, brute_force_ned, enumerate_words, EnumBudget};
use nedlib::Word;

fn main() -> nedlib::Result<()> {
    let words: Vec<Word> = enumerate_words(&EnumBudget::new("ab", 4))?.collect();
    let cfg = CedSearchConfig::default();
    let relaxed = EnumBudget::new("", 4);
    let (mut ned_bad, mut ced_bad) = (0, 0);
    for a in &words {
        for b in &words {
            ned_bad += usize::from(ned_value(a, b) != brute_force_ned(a, b)?);
            ced_bad += usize::from(ced(a, b, &cfg)?.value != brute_force_ced(a, b, &relaxed)?);
        }
    }
    let pairs = words.len() * words.len();
    println!("{pairs} pairs: {ned_bad} ned disagreements, {ced_bad} ced disagreements");
    Ok(())
}
