//! A chain with generalized Burch index 2 whose consecutive entry-ideal sums
//! stabilize: the full pipeline on a non-monomial ideal, from the iterated
//! chain through resolution minors to the stabilization checker.

use burch_cas::analysis::{verify_big1, display_mod};
use burch_cas::resolution::{entry_ideal, resolve, PresentedModule, QuotientRing, ResolveOptions};
use burch_cas::{burch, Ideal, Ring};

fn main() -> burch_cas::Result<()> {
    let ring = Ring::with_vars(&["x1", "x2", "x3"]);
    let ideal = Ideal::parse(
        &ring,
        &["x2*x3 + 28*x3^2", "x2^2 - 30*x3^2", "x1*x3^2", "x1^3*x3"],
    )?;
    let quotient = QuotientRing::new(&ring, ideal.clone())?;

    let t0 = std::time::Instant::now();
    let chain = burch::burch_chain(&ideal, 20)?;
    println!("chain computed in {:.2?}", t0.elapsed());
    for step in &chain.steps {
        println!(
            "  BI^{} = {}   Burch^{} = {}",
            step.index,
            step.burch_ideal,
            step.index,
            step.value
        );
    }
    println!("  gb = {}, bd = {}, status = {:?}", chain.gb, chain.bd, chain.status);

    // resolve the first chain ideal and watch its minors stabilize
    let bi1 = chain.steps[0].burch_ideal.clone();
    let t1 = std::time::Instant::now();
    let res = resolve(
        &quotient,
        &PresentedModule::Ideal(bi1.clone()),
        8,
        &ResolveOptions::default(),
    )?;
    println!("resolution of BI^1 to index 8 in {:.2?}", t1.elapsed());
    for j in res.start_index()..=res.last_index() {
        let e = entry_ideal(&quotient, res.matrix(j).unwrap());
        println!("  I_1(A_{j}) = {}", display_mod(&e, &quotient));
    }
    println!("  betti ranks: {:?}", res.betti_ranks());

    // the second displayed resolution: the principal ideal (x2 + 28 x3)
    let principal = Ideal::parse(&ring, &["x2 + 28*x3"])?;
    let t2 = std::time::Instant::now();
    let res_b = resolve(
        &quotient,
        &PresentedModule::Ideal(principal),
        8,
        &ResolveOptions::default(),
    )?;
    println!("resolution of (x2 + 28*x3) to index 8 in {:.2?}", t2.elapsed());
    for j in res_b.start_index()..=res_b.last_index() {
        let e = entry_ideal(&quotient, res_b.matrix(j).unwrap());
        println!("  I_1(B_{j}) = {}", display_mod(&e, &quotient));
    }

    let t3 = std::time::Instant::now();
    let report = verify_big1(&quotient, &PresentedModule::Ideal(bi1), 8)?;
    println!("stabilization check in {:.2?}", t3.elapsed());
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(())
}
