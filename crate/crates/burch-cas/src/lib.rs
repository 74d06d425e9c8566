//! Exact computer algebra for Burch-type invariants of ideals in polynomial
//! rings over a prime field, and minimal graded free resolutions over the
//! corresponding quotient rings.
//!
//! The library computes N-Burch ideals and indices, iterated Burch chains
//! with the generalized Burch index and Burch depth, realization and realized
//! witness sets, minimal free resolutions with entry-ideal (1x1 minor)
//! tracking, Betti tables and Tor dimensions, and runs mechanical checkers
//! for the periodicity statements these invariants control.
//!
//! Every computation is exact over GF(p) (default p = 32003) and
//! deterministic: the same inputs and seeds produce byte-identical output.
//! See the `examples/` directory for one runnable example per capability and
//! the `burch` binary for the session-file front end.

pub mod algebra;
pub mod analysis;
pub mod burch;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideals;
pub mod linalg;
pub mod resolution;

pub use algebra::{Monomial, Polynomial, Ring};
pub use error::{Error, Result};
pub use groebner::GroebnerBasis;
pub use ideals::{colength, is_depth_zero, Ideal, Length, MingenSet};
pub use resolution::{
    entry_ideal, resolve, FreeModule, GradedMatrix, PresentedModule, QuotientRing, Resolution,
};
