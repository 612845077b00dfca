//! E-polynomials of labelled posets, series-parallel constructions and
//! element deletion.
//!
//!     cargo run --example poset_e_polynomials -- "s0(L,du(L,s1(L,L)))"

use realroots::interlacing::interlaces;
use realroots::poly::int;
use realroots::posets::{
    disjoint_union, ordinal_sum, sp_build, LabelledPoset, OrdinalVariant, SpExpr,
};
use realroots::rootedness::roots_in_interval;
use realroots::transforms::diamond;

fn main() -> realroots::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "s1(du(L,L),s0(L,du(L,L)))".into());
    let expr: SpExpr = text.parse()?;
    let s = sp_build(&expr);
    let e = s.e_polynomial()?;
    println!("{expr}: {} elements", s.len());
    println!("{}", serde_json::to_string(&s.to_json()).unwrap());
    println!("E = {}", e.pretty());
    println!("Ω = {}", s.order_polynomial()?.pretty());
    println!(
        "roots in [-1, 0]: {}",
        roots_in_interval(&e, &int(-1), &int(0), true)?
    );
    for x in 0..s.len() {
        let ex = s.delete_element(x)?.e_polynomial()?;
        println!(
            "  E(S \\ {}) = {}, interlaces: {}",
            s.names()[x],
            ex.pretty(),
            interlaces(&ex, &e, false)?
        );
    }

    let p = LabelledPoset::chain(&[2, 1])?;
    let q = LabelledPoset::antichain(2);
    let (ep, eq) = (p.e_polynomial()?, q.e_polynomial()?);
    println!("E(P) = {}, E(Q) = {}", ep.pretty(), eq.pretty());
    println!(
        "E(P ⊕₁ Q) = {}",
        ordinal_sum(&p, &q, OrdinalVariant::One)
            .e_polynomial()?
            .pretty()
    );
    println!(
        "E(P ⊕₀ Q) = {}",
        ordinal_sum(&p, &q, OrdinalVariant::Zero)
            .e_polynomial()?
            .pretty()
    );
    let u = disjoint_union(&p, &q).e_polynomial()?;
    println!(
        "E(P ⊔ Q) = {} = E(P) ◇ E(Q): {}",
        u.pretty(),
        u == diamond(&ep, &eq)
    );
    Ok(())
}
