//! A depth-zero ring with vanishing Burch index where the column-wise
//! approach still forces constant entry ideals: both the classical and the
//! N-Burch index vanish, yet every entry ideal past the generator row is the
//! full maximal ideal, because the principal ideals of the generators carry
//! positive Burch indices.

use burch_cas::analysis::{display_mod, periodicity_report, verify_dual2};
use burch_cas::burch::burch_index;
use burch_cas::resolution::{
    entry_ideal, resolve, PresentedModule, QuotientRing, ResolveOptions,
};
use burch_cas::{Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    let ring = Ring::with_vars(&["x", "y", "z"]);
    let ideal = Ideal::parse(&ring, &["x^2*y", "y^2*z", "z^2*x"])?;
    let quotient = QuotientRing::new(&ring, ideal.clone())?;
    let n = Ideal::parse(&ring, &["x^2", "y^2", "z^2"])?;

    println!("Burch(I) = {}", burch_index(&ideal, &Ideal::maximal(&ring))?);
    println!("Burch_N(I) = {}", burch_index(&ideal, &n)?);
    for var in ["x", "y", "z"] {
        for gen in [var.to_string(), format!("{var}^2")] {
            let p = Ideal::parse(&ring, &[gen.as_str()])?;
            println!("Burch_(({gen})) = {}", burch_index(&ideal, &p)?);
        }
    }

    let res = resolve(
        &quotient,
        &PresentedModule::Ideal(n.clone()),
        8,
        &ResolveOptions::default(),
    )?;
    for j in 0..=res.last_index() {
        let e = entry_ideal(&quotient, res.matrix(j).expect("computed"));
        println!("I_1(A_{j}) = {}", display_mod(&e, &quotient));
    }
    println!("betti ranks: {:?}", res.betti_ranks());

    let periodic = periodicity_report(&res, 4)?;
    println!(
        "periodicity: {:?} {}",
        periodic.conclusion,
        serde_json::to_string(&periodic.data).expect("serializable")
    );

    // each generator column escapes the Burch ideal of the ideal it spans,
    // so the column-wise persistence applies at the generator row itself
    let a0 = res.matrix(0).expect("generator row");
    for c in 0..a0.cols() {
        let span = burch_cas::resolution::column_ideal(a0, c)?;
        let dual2 = verify_dual2(&res, &span, 0, c)?;
        println!(
            "column {c} spans {span}: persistence {:?}",
            dual2.conclusion
        );
    }
    Ok(())
}
