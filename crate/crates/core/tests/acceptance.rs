//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//!     cargo test --release --test acceptance

use std::process::ExitCode;
use std::time::{Duration, Instant};

use realroots::verify::{run_suite, SuiteConfig, DEFAULT_SEED};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    max_n: usize,
    samples: usize,
    instances: usize,
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

// Exhaustive instance counts: 29 partitions of 1..=6; 29 * 7 values of m;
// 1007 labelled posets on at most 4 elements up to label order.
const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "diamond product keeps roots in [-1,0]",
        suite: "diamond-closure",
        max_n: 8,
        samples: 200,
        instances: 200,
        limit: secs(30),
    },
    Criterion {
        id: 2,
        title: "diamond product preserves interlacing",
        suite: "diamond-interlace",
        max_n: 8,
        samples: 200,
        instances: 200,
        limit: secs(60),
    },
    Criterion {
        id: 3,
        title: "derivative chain is strictly interlacing",
        suite: "chain",
        max_n: 8,
        samples: 100,
        instances: 100,
        limit: secs(300),
    },
    Criterion {
        id: 4,
        title: "Schur product is real- and simple-rooted",
        suite: "schur",
        max_n: 8,
        samples: 200,
        instances: 200,
        limit: secs(300),
    },
    Criterion {
        id: 5,
        title: "diamond product through the E operator",
        suite: "e-identity",
        max_n: 8,
        samples: 200,
        instances: 200,
        limit: secs(300),
    },
    Criterion {
        id: 6,
        title: "L_phi equals H_xi(d/dz) f(xi+z)",
        suite: "lphi-identity",
        max_n: 8,
        samples: 100,
        instances: 100,
        limit: secs(300),
    },
    Criterion {
        id: 7,
        title: "hook-content formula counts reverse SSYT",
        suite: "hook-content",
        max_n: 6,
        samples: 0,
        instances: 203,
        limit: secs(60),
    },
    Criterion {
        id: 8,
        title: "Young covers give interlacing E-polynomials",
        suite: "ferrers",
        max_n: 6,
        samples: 0,
        instances: 29,
        limit: secs(300),
    },
    Criterion {
        id: 9,
        title: "series-parallel element deletion interlaces",
        suite: "sp-deletion",
        max_n: 8,
        samples: 300,
        instances: 300,
        limit: secs(300),
    },
    Criterion {
        id: 10,
        title: "ordinal sum and disjoint union identities",
        suite: "ordinal-sum",
        max_n: 6,
        samples: 100,
        instances: 100,
        limit: secs(300),
    },
    Criterion {
        id: 11,
        title: "labelled posets on <= 4 elements are [-1,0]-rooted",
        suite: "ns-small",
        max_n: 4,
        samples: 0,
        instances: 1007,
        limit: secs(300),
    },
    Criterion {
        id: 12,
        title: "alternate diamond product keeps roots in [-1,0]",
        suite: "alt-product",
        max_n: 8,
        samples: 200,
        instances: 200,
        limit: secs(300),
    },
    Criterion {
        id: 13,
        title: "real-rooted coefficients are strictly log-concave",
        suite: "log-concavity",
        max_n: 10,
        samples: 300,
        instances: 300,
        limit: secs(300),
    },
    Criterion {
        id: 14,
        title: "multiple roots of f(D)g are multiple roots of g",
        suite: "hermite-poulain",
        max_n: 8,
        samples: 100,
        instances: 100,
        limit: secs(300),
    },
];

fn check(c: &Criterion) -> Result<String, String> {
    let config = SuiteConfig {
        max_n: Some(c.max_n),
        samples: Some(c.samples),
        seed: Some(DEFAULT_SEED),
    };
    let start = Instant::now();
    let report = run_suite(c.suite, &config).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if report.instances != c.instances {
        return Err(format!(
            "ran {} instances, expected {}",
            report.instances, c.instances
        ));
    }
    if let Some(first) = report.failures.first() {
        return Err(format!(
            "{} of {} instances failed; first: {}",
            report.failures.len(),
            report.instances,
            serde_json::to_string(first).unwrap_or_default()
        ));
    }
    if elapsed > c.limit {
        return Err(format!("took {elapsed:.2?}, limit {:?}", c.limit));
    }
    Ok(format!("{} instances in {elapsed:.2?}", report.instances))
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        match check(c) {
            Ok(detail) => println!("PASS {:>2} {}: {detail}", c.id, c.title),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {}: {detail}", c.id, c.title);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
