//! Shared test support: a combinatorial monomial-ideal oracle built on
//! exponent-vector arithmetic only, independent of the Gröbner engine, plus
//! sampling helpers.

use burch_cas::algebra::{monomials_of_degree, Monomial, Polynomial, Ring};
use burch_cas::Ideal;

/// Monomial ideal as a pruned set of exponent vectors.
#[derive(Clone, Debug, PartialEq)]
#[allow(dead_code)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub gens: Vec<Vec<u16>>,
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

#[allow(dead_code)]
impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Vec<u16>>) -> MonomialIdeal {
        let mut pruned: Vec<Vec<u16>> = Vec::new();
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        for g in sorted {
            debug_assert_eq!(g.len(), nvars);
            if !pruned.iter().any(|h| divides(h, &g)) {
                pruned.retain(|h| !divides(&g, h));
                pruned.push(g);
            }
        }
        pruned.sort();
        MonomialIdeal {
            nvars,
            gens: pruned,
        }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn maximal(nvars: usize) -> MonomialIdeal {
        let gens = (0..nvars)
            .map(|i| {
                let mut e = vec![0u16; nvars];
                e[i] = 1;
                e
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_mono(&self, m: &[u16]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_mono(g))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b.iter()).map(|(x, y)| x + y).collect());
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect());
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(self : x^m)` via saturating subtraction of exponent vectors.
    pub fn colon_mono(&self, m: &[u16]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .zip(m.iter())
                    .map(|(x, y)| x.saturating_sub(*y))
                    .collect()
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for b in &other.gens {
            let piece = self.colon_mono(b);
            acc = Some(match acc {
                None => piece,
                Some(prev) => prev.intersect(&piece),
            });
        }
        acc.unwrap_or_else(|| {
            // colon by the zero ideal is the unit ideal
            MonomialIdeal::new(self.nvars, vec![vec![0; self.nvars]])
        })
    }

    pub fn burch_ideal(&self, n: &MonomialIdeal) -> MonomialIdeal {
        let scaled = MonomialIdeal::maximal(self.nvars).product(self);
        scaled.colon(&self.colon(n))
    }

    pub fn hilbert_dim(&self, d: u64) -> u64 {
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| !self.contains_mono(m.exps()))
            .count() as u64
    }

    pub fn to_ideal(&self, ring: &Ring) -> Ideal {
        let gens = self
            .gens
            .iter()
            .map(|e| Polynomial::from_monomial(ring, Monomial::from_exps(e)))
            .collect();
        Ideal::new(ring, gens).expect("monomials are homogeneous")
    }
}

/// Convert a library ideal with monomial generators into the oracle shape;
/// panics if a generator is not a single term.
#[allow(dead_code)]
pub fn from_ideal(ideal: &Ideal) -> MonomialIdeal {
    let nvars = ideal.ring().nvars();
    let gens = ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert_eq!(g.terms().len(), 1, "not a monomial ideal: {g}");
            g.terms()[0].mono.exps().to_vec()
        })
        .collect();
    MonomialIdeal::new(nvars, gens)
}

/// The canonical generators of a computed monomial ideal (its reduced basis)
/// as an oracle value; panics if any generator has several terms.
#[allow(dead_code)]
pub fn from_computed(ideal: &Ideal) -> MonomialIdeal {
    let nvars = ideal.ring().nvars();
    let gens = ideal
        .gb()
        .generators()
        .iter()
        .map(|g| {
            assert_eq!(g.terms().len(), 1, "not a monomial ideal: {g}");
            g.terms()[0].mono.exps().to_vec()
        })
        .collect();
    MonomialIdeal::new(nvars, gens)
}
