//! The parametric family `I = (x_1 y, ..., x_{m-1} y, y^{n+1})` whose chain
//! of Burch ideals descends through `n` steps before stabilizing: its
//! generalized Burch index is m and every displayed ladder ideal is
//! reproduced exactly.

use burch_cas::burch::burch_chain;
use burch_cas::{Ideal, Polynomial, Ring};

fn family(m: usize, n: u16) -> (Ring, Ideal) {
    let mut vars: Vec<String> = (1..m).map(|i| format!("x{i}")).collect();
    vars.push("y".into());
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = Ring::with_vars(&refs);
    let mut gens: Vec<String> = (1..m).map(|i| format!("x{i}*y")).collect();
    gens.push(format!("y^{}", n + 1));
    let gen_refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    let ideal = Ideal::parse(&ring, &gen_refs).expect("homogeneous generators");
    (ring, ideal)
}

fn main() -> burch_cas::Result<()> {
    for m in [2usize, 3] {
        for n in [1u16, 2, 3] {
            let (ring, ideal) = family(m, n);
            let chain = burch_chain(&ideal, 50)?;
            println!("m = {m}, n = {n}: I = {ideal}");
            for step in &chain.steps {
                println!(
                    "  BI^{} = {}    (I : BI^{}) = {}    Burch^{} = {}",
                    step.index,
                    step.burch_ideal,
                    step.index - 1,
                    step.colon_ideal,
                    step.index,
                    step.value,
                );
            }
            println!(
                "  gb = {}, bd = {}, first zero at {:?}",
                chain.gb, chain.bd, chain.first_zero
            );
            // the generator y^(n+1) is minimal, its multiples are not
            let y = Polynomial::var(&ring, ring.nvars() - 1);
            let top = (0..n).fold(y.clone(), |acc, _| acc.mul(&y));
            assert!(ideal.is_minimal_generator(&top)?);
            assert!(!ideal.is_minimal_generator(&top.mul(&y))?);
            println!();
        }
    }
    Ok(())
}
