//! Periodicity over a positive-depth hypersurface-like quotient: the
//! principal ideals of both variables have positive Burch index, so the
//! resolution of the maximal ideal never dies and its entry ideals are
//! constant from the second step.

use burch_cas::analysis::{display_mod, periodicity_report, verify_dualpos};
use burch_cas::burch::burch_index;
use burch_cas::ideals::is_depth_zero;
use burch_cas::resolution::{
    entry_ideal, equal_up_to_permutation_and_scaling, resolve, PresentedModule, QuotientRing,
    ResolveOptions,
};
use burch_cas::{Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    let ring = Ring::with_vars(&["x", "y"]);
    let ideal = Ideal::parse(&ring, &["x^2*y"])?;
    let quotient = QuotientRing::new(&ring, ideal.clone())?;
    println!(
        "I = {ideal}, depth zero: {}, Burch(I) = {}",
        is_depth_zero(&ideal)?,
        burch_index(&ideal, &Ideal::maximal(&ring))?
    );
    for var in ["x", "y"] {
        let p = Ideal::parse(&ring, &[var])?;
        println!("Burch_(({var})) = {}", burch_index(&ideal, &p)?);
    }

    let res = resolve(
        &quotient,
        &PresentedModule::Ideal(Ideal::maximal(&ring)),
        9,
        &ResolveOptions::default(),
    )?;
    for j in 0..=res.last_index() {
        let m = res.matrix(j).expect("computed");
        let e = entry_ideal(&quotient, m);
        println!("A_{j}: {}x{}  I_1 = {}", m.rows(), m.cols(), display_mod(&e, &quotient));
        print!("{m}");
    }

    let periodic = periodicity_report(&res, 4)?;
    println!(
        "entry-ideal periodicity: {:?} {}",
        periodic.conclusion,
        serde_json::to_string(&periodic.data).expect("serializable")
    );

    // matrix-level 2-periodicity, up to row/column permutation and scaling
    for j in 2..=res.last_index() - 2 {
        let same = equal_up_to_permutation_and_scaling(
            res.matrix(j).expect("computed"),
            res.matrix(j + 2).expect("computed"),
        );
        println!("A_{j} ~ A_{}: {same}", j + 2);
    }

    let report = verify_dualpos(&res)?;
    println!("no vanishing tail: {:?}", report.conclusion);
    Ok(())
}
