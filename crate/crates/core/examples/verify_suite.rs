//! Runs the verification suite with a small budget and prints one line per property.
//!
//! Usage: `cargo run --release --example verify_suite -- [seed] [trials]`

use nedlib::propcheck::{run_all, FuzzConfig};

fn main() -> nedlib::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let cfg = FuzzConfig { seed, trials, ..FuzzConfig::default() };

    let reports = run_all(&cfg, false)?;
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!("{status} {:<20} {:>8} trials", r.property_id, r.trials_run);
        if let Some(c) = r.counterexample() {
            println!("     {:?}: {}", c.words, c.detail);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    std::process::exit(i32::from(failed > 0));
}
