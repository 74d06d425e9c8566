//! The Burch-type invariants: N-Burch ideal and index, the iterated chain
//! with generalized Burch index and Burch depth, realization and realized
//! witness sets, and the duality check.
//!
//! All functions are pure over immutable ideals. Burch ideals are returned as
//! S-ideals; reports display their reduction modulo the defining ideal.

use crate::algebra::Polynomial;
use crate::analysis::{Conclusion, Precondition, Report, Subject};
use crate::error::{Error, Result};
use crate::ideals::{colength, is_depth_zero, Ideal, Length};
use serde::Serialize;
use serde_json::json;
use std::fmt;

/// `BI_N(I) = (maximal * I) : (I : N)`, as an S-ideal.
pub fn burch_ideal(ideal: &Ideal, n: &Ideal) -> Result<Ideal> {
    if ideal.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper_nonzero() || !n.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let nn = Ideal::maximal(ideal.ring());
    let scaled = nn.product(ideal)?;
    let conductor = ideal.colon(n)?;
    scaled.colon(&conductor)
}

/// `Burch_N(I) = length(N / (BI_N(I) ∩ N))`.
///
/// When `S/I` has positive depth and `N` is the maximal ideal, the value is 0
/// by convention; the literal formula is still available through
/// [`burch_ideal`].
pub fn burch_index(ideal: &Ideal, n: &Ideal) -> Result<Length> {
    let nn = Ideal::maximal(ideal.ring());
    if n.equals(&nn)? && !is_depth_zero(ideal)? {
        return Ok(Length::Finite(0));
    }
    let bi = burch_ideal(ideal, n)?;
    colength(n, &bi.intersect(n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChainStatus {
    #[serde(rename = "STABILIZED")]
    Stabilized,
    #[serde(rename = "CAPPED")]
    Capped,
}

/// One step of the iterated chain: `BI^j`, the colon `(I : BI^{j-1})` that
/// produced it, and `Burch^j`.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub index: usize,
    pub burch_ideal: Ideal,
    pub colon_ideal: Ideal,
    pub value: Length,
}

/// The decreasing sequence `BI^0 = maximal ⊇ BI^1 ⊇ ...` with its derived
/// classification.
#[derive(Clone, Debug)]
pub struct BurchChain {
    pub steps: Vec<ChainStep>,
    pub first_zero: Option<usize>,
    /// Generalized Burch index; a prefix supremum when the chain was capped.
    pub gb: Length,
    /// Burch depth: the length of the initial run of `Burch^j = 1`.
    pub bd: usize,
    pub status: ChainStatus,
    pub positive_depth: bool,
}

impl BurchChain {
    /// `BI^j` for `0 <= j <= recorded length`; `BI^0` is the maximal ideal.
    pub fn burch_ideal_at<'a>(&'a self, ring_max: &'a Ideal, j: usize) -> Option<&'a Ideal> {
        if j == 0 {
            return Some(ring_max);
        }
        self.steps.get(j - 1).map(|s| &s.burch_ideal)
    }
}

fn length_max(a: Length, b: Length) -> Length {
    match (a, b) {
        (Length::Infinite, _) | (_, Length::Infinite) => Length::Infinite,
        (Length::Finite(x), Length::Finite(y)) => Length::Finite(x.max(y)),
    }
}

/// Iterate `BI^j(I) = BI_{BI^{j-1}(I)}(I)` until the chain stabilizes (the
/// first zero index) or the iteration cap is hit.
pub fn burch_chain(ideal: &Ideal, max_iter: usize) -> Result<BurchChain> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let ring = ideal.ring();
    let nn = Ideal::maximal(ring);
    let scaled = nn.product(ideal)?;
    let positive_depth = !is_depth_zero(ideal)?;
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut prev = nn.clone();
    let mut first_zero = None;
    for j in 1..=max_iter.max(1) {
        let colon_ideal = ideal.colon(&prev)?;
        let bi = scaled.colon(&colon_ideal)?;
        let value = if j == 1 && positive_depth {
            Length::Finite(0)
        } else {
            colength(&prev, &bi.intersect(&prev)?)?
        };
        steps.push(ChainStep {
            index: j,
            burch_ideal: bi.clone(),
            colon_ideal,
            value,
        });
        if value == Length::Finite(0) {
            first_zero = Some(j);
            break;
        }
        prev = bi;
    }
    let gb = match first_zero {
        Some(1) => Length::Finite(0),
        Some(n0) => steps[..n0 - 1]
            .iter()
            .fold(Length::Finite(0), |acc, s| length_max(acc, s.value)),
        None => steps
            .iter()
            .fold(Length::Finite(0), |acc, s| length_max(acc, s.value)),
    };
    let bd = steps
        .iter()
        .take_while(|s| s.value == Length::Finite(1))
        .count();
    let status = if first_zero.is_some() {
        ChainStatus::Stabilized
    } else {
        ChainStatus::Capped
    };
    Ok(BurchChain {
        steps,
        first_zero,
        gb,
        bd,
        status,
        positive_depth,
    })
}

/// Finite monic representatives of a witness set.
#[derive(Clone, Debug)]
pub struct WitnessSet {
    pub elements: Vec<Polynomial>,
}

impl WitnessSet {
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }
}

impl fmt::Display for WitnessSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Minimal generators `x*` of `(I : N)` with `x* N` not inside `maximal * I`.
pub fn realization_witnesses(ideal: &Ideal, n: &Ideal) -> Result<WitnessSet> {
    if ideal.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper_nonzero() || !n.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let nn = Ideal::maximal(ideal.ring());
    let scaled = nn.product(ideal)?;
    let conductor = ideal.colon(n)?;
    let mut elements = Vec::new();
    for x in conductor.mingens().elements {
        let escapes = n
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .any(|g| !scaled.contains_poly(&x.mul(g)));
        if escapes {
            elements.push(x);
        }
    }
    Ok(WitnessSet { elements })
}

/// Minimal generators of `N` that lie outside `BI_N(I)`.
pub fn realized_witnesses(ideal: &Ideal, n: &Ideal) -> Result<WitnessSet> {
    let bi = burch_ideal(ideal, n)?;
    let elements = n
        .mingens()
        .elements
        .into_iter()
        .filter(|x| !bi.contains_poly(x))
        .collect();
    Ok(WitnessSet { elements })
}

/// `x*` realizes `x` when the product is a minimal generator of the ideal.
pub fn realizes(ideal: &Ideal, x_star: &Polynomial, x: &Polynomial) -> Result<bool> {
    let product = x_star.checked_mul(x)?;
    ideal.is_minimal_generator(&product)
}

/// Check the duality `Burch_N(I) > 0  =>  Burch_(I:N)(I) > 0`, confirming the
/// role swap on every realizing pair found among the witness representatives.
pub fn duality_check(ideal: &Ideal, n: &Ideal) -> Result<Report> {
    let index = burch_index(ideal, n)?;
    let met = index.is_positive();
    let preconditions = vec![Precondition {
        name: "burch_index_positive".into(),
        met,
        witness: format!("Burch_N(I) = {index}"),
    }];
    if !met {
        return Ok(Report {
            subject: Subject::Duality,
            preconditions,
            conclusion: Conclusion::Inconclusive,
            data: json!({ "note": "not applicable: Burch_N(I) = 0" }),
            prefix_length: 0,
            seed: None,
        });
    }
    let dual_n = ideal.colon(n)?;
    if dual_n.is_unit() {
        // N sits inside I, so the dual side degenerates to the unit ideal
        let mut preconditions = preconditions;
        preconditions.push(Precondition {
            name: "colon_ideal_proper".into(),
            met: false,
            witness: "(I : N) = (1)".into(),
        });
        return Ok(Report {
            subject: Subject::Duality,
            preconditions,
            conclusion: Conclusion::Inconclusive,
            data: json!({ "note": "not applicable: (I : N) is the unit ideal" }),
            prefix_length: 0,
            seed: None,
        });
    }
    let dual_index = burch_index(ideal, &dual_n)?;
    let mut conclusion = if dual_index.is_positive() {
        Conclusion::Verified
    } else {
        Conclusion::Falsified
    };
    let nn = Ideal::maximal(ideal.ring());
    let scaled = nn.product(ideal)?;
    let double = ideal.colon(&dual_n)?;
    let realization = realization_witnesses(ideal, n)?;
    let realized = realized_witnesses(ideal, n)?;
    let mut pairs = Vec::new();
    for x_star in &realization.elements {
        for x in &realized.elements {
            if !realizes(ideal, x_star, x)? {
                continue;
            }
            // swapped roles: x must witness the dual ideal and realize x*
            let in_double = double.contains_poly(x);
            let escapes = dual_n
                .generators()
                .iter()
                .filter(|g| !g.is_zero())
                .any(|g| !scaled.contains_poly(&x.mul(g)));
            let swapped = in_double && escapes && realizes(ideal, x, x_star)?;
            if !swapped {
                conclusion = Conclusion::Falsified;
            }
            pairs.push(json!({
                "witness": x_star.to_string(),
                "realized": x.to_string(),
                "swapped_confirmed": swapped,
            }));
        }
    }
    Ok(Report {
        subject: Subject::Duality,
        preconditions,
        conclusion,
        data: json!({
            "burch_index": index,
            "dual_ideal": dual_n.to_string(),
            "dual_index": dual_index,
            "realization_witnesses": realization.to_string(),
            "realized_witnesses": realized.to_string(),
            "pairs": pairs,
        }),
        prefix_length: 0,
        seed: None,
    })
}
