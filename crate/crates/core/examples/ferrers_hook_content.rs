//! Column-strict Ferrers posets: hook-content order polynomials and
//! interlacing along Young's lattice.
//!
//!     cargo run --example ferrers_hook_content -- 3 2 1

use realroots::ferrers::{
    count_reverse_ssyt, ferrers_e_poly, hook_content_order_poly, hooks_and_contents,
    verify_cover_interlacing, EMethod, Partition,
};
use realroots::poly::int;

fn main() -> realroots::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lambda: Partition = if args.is_empty() {
        "3 2 1".parse()?
    } else {
        args.join(" ").parse()?
    };
    println!("λ = {lambda}");
    for c in hooks_and_contents(&lambda) {
        println!(
            "  cell {:?}: hook {}, content {}",
            c.cell, c.hook, c.content
        );
    }
    let omega = hook_content_order_poly(&lambda);
    println!("Ω = {}", omega.pretty());
    for m in 0..=4 {
        println!(
            "  m = {m}: Ω(m) = {}, reverse SSYT = {}",
            omega.evaluate(&int(m)),
            count_reverse_ssyt(&lambda, m as usize)
        );
    }
    for method in [
        EMethod::HookContent,
        EMethod::Recursion,
        EMethod::Enumeration,
    ] {
        println!(
            "E via {method:?}: {}",
            ferrers_e_poly(&lambda, method)?.pretty()
        );
    }
    let report = verify_cover_interlacing(&lambda)?;
    for c in &report.covers {
        println!("  μ = {}: E(P_μ) ⪯ E(P_λ) is {}", c.mu, c.interlaces);
    }
    println!("passed: {}", report.passed());
    Ok(())
}
