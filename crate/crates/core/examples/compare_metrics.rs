use nedlib::metrics::CedSearchConfig;
use nedlib::{Metric, Word};

fn main() -> nedlib::Result<()> {
    let metrics = [
        Metric::Ed,
        Metric::Ned,
        Metric::Ged,
        Metric::Ced,
        Metric::CedPrime,
        Metric::PostNormalized,
    ];
    let pairs = [("acbb", "cc"), ("aa", "bb"), ("aab", "b"), ("a", "aaaa"), ("ab", "ba"), ("", "abc")];
    let cfg = CedSearchConfig::default();

    print!("{:<12}", "pair");
    for m in metrics {
        print!("{:>10}", m.id());
    }
    println!();
    for (a, b) in pairs {
        print!("{:<12}", format!("{a}/{b}"));
        for m in metrics {
            let v = m.value(&Word::from(a), &Word::from(b), &cfg)?;
            print!("{:>10}", v.to_string());
        }
        println!();
    }
    Ok(())
}
