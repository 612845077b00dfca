//! Products and transforms that preserve real-rootedness.
//!
//!     cargo run --example diamond_product

use realroots::poly::{int, rat};
use realroots::posets::{e_inverse, e_operator};
use realroots::rootedness::roots_in_interval;
use realroots::transforms::{
    alt_diamond, diamond, h_xi, hermite_poulain, laguerre_transform, lphi_diamond, schur_product,
};
use realroots::Polynomial;

fn main() -> realroots::Result<()> {
    let f = Polynomial::from_roots(int(1), &[rat(-1, 3), rat(-1, 2), int(-1)]);
    let h = Polynomial::from_roots(int(2), &[rat(-1, 4), rat(-3, 4)]);
    let d = diamond(&f, &h);
    println!("f ◇ h = {}", d.pretty());
    println!(
        "  roots in [-1, 0]: {}",
        roots_in_interval(&d, &int(-1), &int(0), true)?
    );
    println!(
        "  equals ℰ(ℰ⁻¹f · ℰ⁻¹h): {}",
        d == e_operator(&(&e_inverse(&f) * &e_inverse(&h)))
    );
    let a = alt_diamond(&f, &h);
    println!(
        "alternate product: {}, in [-1, 0]: {}",
        a.pretty(),
        roots_in_interval(&a, &int(-1), &int(0), true)?
    );

    let g = Polynomial::from_roots(int(1), &[int(-2), int(-5)]);
    println!("f ⊙ g = {}", schur_product(&f, &g).pretty());
    println!("g(D) f = {}", hermite_poulain(&g, &f).pretty());
    println!(
        "Laguerre transform of f: {}",
        laguerre_transform(&f).pretty()
    );

    let xi = rat(1, 2);
    let l = lphi_diamond(&f, &h, &xi);
    println!("L(f)(1/2, z) = {}", l.pretty_in("z"));
    println!(
        "  via H_ξ: {}",
        l == hermite_poulain(&h_xi(&h, &xi), &f.translate(&xi))
    );
    Ok(())
}
