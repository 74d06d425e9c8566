//! A positive-depth four-variable monomial quotient where the classical
//! Burch index vanishes but every variable carries a positive principal
//! Burch index: resolving a module whose generators sit inside those
//! principal Burch ideals drives the entry ideals up to the maximal ideal.

use burch_cas::analysis::{display_mod, verify_big2, verify_dualpos};
use burch_cas::burch::{burch_ideal, burch_index};
use burch_cas::ideals::is_depth_zero;
use burch_cas::resolution::{
    column_ideal, entry_ideal, resolve, PresentedModule, QuotientRing, ResolveOptions,
};
use burch_cas::{Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    let ring = Ring::with_vars(&["x", "y", "z", "w"]);
    let ideal = Ideal::parse(&ring, &["x*z", "y*z", "z*w", "x*w"])?;
    let quotient = QuotientRing::new(&ring, ideal.clone())?;
    println!("I = {ideal}, depth zero: {}", is_depth_zero(&ideal)?);

    for var in ["x", "y", "z", "w"] {
        let n = Ideal::parse(&ring, &[var])?;
        let bi = burch_ideal(&ideal, &n)?;
        println!(
            "BI_({var}) = {} mod I,   Burch_({var}) = {}",
            display_mod(&bi, &quotient),
            burch_index(&ideal, &n)?
        );
    }

    // each generator of J lands inside one of the principal Burch ideals
    let j = Ideal::parse(&ring, &["x^2*y^2", "z^3", "y*w"])?;
    let res = resolve(
        &quotient,
        &PresentedModule::Ideal(j.clone()),
        8,
        &ResolveOptions::default(),
    )?;
    let a0 = res.matrix(0).expect("generator row");
    for c in 0..a0.cols() {
        println!("column {c} of A_0 generates {}", column_ideal(a0, c)?);
    }
    for step in 0..=3 {
        let e = entry_ideal(&quotient, res.matrix(step).expect("computed"));
        println!("I_1(A_{step}) = {}", display_mod(&e, &quotient));
    }

    let big2 = verify_big2(&quotient, &PresentedModule::Ideal(j.clone()), 6)?;
    println!("\nshared-realizer check: {:?}", big2.conclusion);
    println!("{}", serde_json::to_string_pretty(&big2.data).expect("serializable"));

    let dualpos = verify_dualpos(&res)?;
    println!("infinite projective dimension on the prefix: {:?}", dualpos.conclusion);
    Ok(())
}
