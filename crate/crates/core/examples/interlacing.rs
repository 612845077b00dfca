//! Alternation, interlacing and Sturm-type chains.
//!
//!     cargo run --example interlacing

use realroots::interlacing::{
    alternates, chain_check, interlace_verdict, obreschkoff_probe, sturm_sign_condition,
};
use realroots::poly::int;
use realroots::Polynomial;

fn main() -> realroots::Result<()> {
    let f = Polynomial::from_roots(int(1), &[int(-3), int(-1), int(2)]);
    let g = f.derivative(1);
    println!("f = {}\ng = f' = {}", f.pretty(), g.pretty());
    let v = interlace_verdict(&g, &f, true)?;
    println!("g ≺ f: {:?}", v.relation);

    let h = Polynomial::from_roots(int(1), &[int(0), int(1)]);
    let v = interlace_verdict(&h, &f, false)?;
    println!(
        "h = {}: relation {:?}, witness {}",
        h.pretty(),
        v.relation,
        serde_json::to_string(&v.witness).unwrap()
    );

    let p = Polynomial::from_ints(&[-1, 0, 1]);
    let q = Polynomial::from_ints(&[0, 1, 1]);
    println!("x^2 - 1 vs x^2 + x: {:?}", alternates(&p, &q)?);
    let probe = obreschkoff_probe(&f, &g, 200, 1)?;
    println!("a f + b g real-rooted on 200 samples: {}", probe.passed());

    let chain: Vec<Polynomial> = (0..=3).rev().map(|k| f.derivative(k)).collect();
    println!("f''' ≺ f'' ≺ f' ≺ f: {}", chain_check(&chain)?);
    println!("sign condition: {}", sturm_sign_condition(&chain)?);
    Ok(())
}
