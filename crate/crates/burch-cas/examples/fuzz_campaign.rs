//! Seeded randomized verification: chain monotonicity, depth-zero bounds,
//! double-colon bounds, duality, and triggered column-wise persistence over
//! short resolutions. Re-running with the same seed reproduces the summary
//! byte for byte.

use burch_cas::analysis::{fuzz, FuzzConfig};

fn main() -> burch_cas::Result<()> {
    let config = FuzzConfig {
        seed: 1,
        cases: 100,
        nvars: 3,
        max_degree: 3,
        max_gens: 5,
        binomials: true,
        resolve_steps: 4,
    };
    let summary = fuzz(&config)?;
    println!(
        "cases: {}  verified: {}  falsified: {}  inconclusive: {}",
        summary.cases, summary.verified, summary.falsified, summary.inconclusive
    );
    println!(
        "monotonicity {}/{} ok, bounds {}/{} ok",
        summary.monotonicity_checks - summary.monotonicity_failures,
        summary.monotonicity_checks,
        summary.bound_checks - summary.bound_failures,
        summary.bound_checks
    );
    assert!(summary.clean(), "a falsified report marks a bug");
    let again = fuzz(&config)?;
    assert_eq!(
        serde_json::to_string(&summary).expect("serializable"),
        serde_json::to_string(&again).expect("serializable"),
        "summaries must be byte-identical across runs"
    );
    println!("deterministic: summary reproduced byte for byte");
    Ok(())
}
