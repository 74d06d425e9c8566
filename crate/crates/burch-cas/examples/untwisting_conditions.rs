//! The untwisting condition scanner: per-generator Burch positivity of an
//! ideal N, plus the tagged-column search in the resolutions of its
//! colength-one subideals.

use burch_cas::analysis::check_twist1_conditions;
use burch_cas::resolution::QuotientRing;
use burch_cas::{Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    // a maximal-ideal instance over the four-variable edge ideal
    let ring = Ring::with_vars(&["x", "y", "z", "w"]);
    let ideal = Ideal::parse(&ring, &["x*z", "y*z", "z*w", "x*w"])?;
    let quotient = QuotientRing::new(&ring, ideal)?;
    let report = check_twist1_conditions(&quotient, &Ideal::maximal(&ring), 5)?;
    println!("maximal ideal over the edge ideal: {:?}", report.conclusion);
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    // a principal N degenerates to a single subideal check
    let ring2 = Ring::with_vars(&["x", "y"]);
    let ideal2 = Ideal::parse(&ring2, &["x^2*y"])?;
    let quotient2 = QuotientRing::new(&ring2, ideal2)?;
    let principal = Ideal::parse(&ring2, &["x"])?;
    let report2 = check_twist1_conditions(&quotient2, &principal, 5)?;
    println!("\nprincipal N over the hypersurface: {:?}", report2.conclusion);
    println!("{}", serde_json::to_string_pretty(&report2.data).expect("serializable"));
    Ok(())
}
