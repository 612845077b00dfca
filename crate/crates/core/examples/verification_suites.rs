//! Runs every built-in verification suite with its default size and prints
//! a one-line summary per suite.
//!
//!     cargo run --release --example verification_suites [seed]

use std::time::Instant;

use realroots::verify::{run_suite, suite_names, SuiteConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let config = SuiteConfig {
        seed,
        ..SuiteConfig::default()
    };
    let mut failed = false;
    for name in suite_names() {
        let start = Instant::now();
        let report = run_suite(name, &config).expect("built-in suite");
        println!("{report} in {:.2?}", start.elapsed());
        failed |= !report.passed();
    }
    if failed {
        std::process::exit(1);
    }
}
