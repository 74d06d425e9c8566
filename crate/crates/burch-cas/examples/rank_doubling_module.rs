//! A Burch-index-one quotient whose syzygies never split off the residue
//! field: the first syzygy of M = R/(a, b^2) is two copies of M, so the
//! Betti numbers double forever and every entry ideal stays (a, b^2).

use burch_cas::analysis::display_mod;
use burch_cas::burch::burch_index;
use burch_cas::resolution::{
    entry_ideal, resolve, tor_dims, FreeModule, GradedMatrix, PresentedModule, QuotientRing,
    ResolveOptions,
};
use burch_cas::{Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    let ring = Ring::with_vars(&["a", "b"]);
    let base = Ideal::parse(&ring, &["a", "b^2"])?;
    let ideal = base.power(2)?;
    let quotient = QuotientRing::new(&ring, ideal.clone())?;
    println!("I = (a, b^2)^2 = {}", ideal);
    println!("Burch index: {}", burch_index(&ideal, &Ideal::maximal(&ring))?);

    let presentation = GradedMatrix::new(
        &ring,
        FreeModule::new(vec![1, 2]),
        FreeModule::new(vec![0]),
        vec![vec![
            ring.parse_polynomial("a")?,
            ring.parse_polynomial("b^2")?,
        ]],
    )?;
    let res = resolve(
        &quotient,
        &PresentedModule::Cokernel(presentation),
        8,
        &ResolveOptions::default(),
    )?;
    println!("betti ranks: {:?}", res.betti_ranks());
    for j in 1..=res.last_index() {
        let e = entry_ideal(&quotient, res.matrix(j).expect("computed"));
        println!("I_1(A_{j}) = {}", display_mod(&e, &quotient));
    }

    // against the residue field, Tor dimensions recover the Betti numbers
    let dims = tor_dims(&res, &Ideal::maximal(&ring), 4)?;
    println!("dim Tor_j(M, k) for j = 0..4: {dims:?}");
    Ok(())
}
