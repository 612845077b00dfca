//! Sturm-sequence root counting and exact isolation.
//!
//!     cargo run --example root_isolation -- "-1 1 1"

use realroots::poly::int;
use realroots::rootedness::{count_roots, is_real_rooted, isolate_roots, roots_in_interval, Bound};
use realroots::Polynomial;

fn main() -> realroots::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "0 0 -2 0 1".into());
    let f = Polynomial::parse_any(&text)?;
    println!("f = {}", f.pretty());
    println!("classification: {:?}", is_real_rooted(&f)?);
    println!(
        "real roots: {} distinct, {} in (-inf, 0]",
        count_roots(&f, &Bound::NegInfinity, &Bound::PosInfinity)?,
        count_roots(&f, &Bound::NegInfinity, &Bound::Finite(int(0)))?
    );
    let iso = isolate_roots(&f)?;
    for root in &iso.roots {
        println!("  {} (multiplicity {})", root.location, root.multiplicity);
    }
    println!(
        "all roots in [-1, 0]: {}",
        roots_in_interval(&f, &int(-1), &int(0), true)?
    );
    Ok(())
}
