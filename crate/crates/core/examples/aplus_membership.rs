//! Condition-by-condition membership of `f` in the class preserved by
//! `p ↦ p ◇ h`.
//!
//!     cargo run --example aplus_membership

use realroots::interlacing::chain_check;
use realroots::poly::{int, rat};
use realroots::transforms::{aplus_check_diamond, diamond_derivative_chain};
use realroots::Polynomial;

fn main() -> realroots::Result<()> {
    let h = Polynomial::from_roots(int(1), &[rat(-1, 5), rat(-2, 3)]);
    let candidates = [
        Polynomial::from_roots(int(1), &[int(-2), rat(-1, 2), int(1)]),
        Polynomial::from_ints(&[1, 0, 1]),
    ];
    for f in &candidates {
        let report = aplus_check_diamond(f, &h, &[int(-3), rat(1, 7), int(4)])?;
        println!("f = {}", f.pretty());
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        if report.member {
            println!(
                "derivative chain strict: {}",
                chain_check(&diamond_derivative_chain(f, &h))?
            );
        }
    }
    Ok(())
}
