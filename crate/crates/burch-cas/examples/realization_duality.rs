//! Realization and realized witness sets, the realizing-pair relation, and
//! the duality that swaps their roles.

use burch_cas::burch::{
    burch_ideal, burch_index, duality_check, realization_witnesses, realized_witnesses, realizes,
};
use burch_cas::{Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    let ring = Ring::with_vars(&["x", "y", "z"]);
    let ideal = Ideal::parse(&ring, &["x^2*y", "x*y^2*z", "z^3"])?;
    let n = Ideal::parse(&ring, &["x^2", "y", "z^2"])?;

    println!("I = {ideal}");
    println!("N = {n}");
    println!("(I : N) = {}", ideal.colon(&n)?);
    println!("BI_N(I) = {}", burch_ideal(&ideal, &n)?);
    println!("Burch_N(I) = {}", burch_index(&ideal, &n)?);

    let witnesses = realization_witnesses(&ideal, &n)?;
    let realized = realized_witnesses(&ideal, &n)?;
    println!("realization set representatives: {witnesses}");
    println!("realized set representatives: {realized}");
    for x_star in &witnesses.elements {
        for x in &realized.elements {
            if realizes(&ideal, x_star, x)? {
                println!("{x_star} realizes {x}: product {} is a minimal generator", x_star.mul(x));
            }
        }
    }

    let report = duality_check(&ideal, &n)?;
    println!("\nduality: {:?}", report.conclusion);
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(())
}
