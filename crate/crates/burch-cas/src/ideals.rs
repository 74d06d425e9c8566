//! Ideal arithmetic and graded-length computations: sum, product,
//! intersection, colon, minimal generators, Hilbert functions, colength,
//! and the depth-zero test.
//!
//! Ideals are immutable; the cached Gröbner basis is computed at most once.
//! Equality of ideals means equality of reduced Gröbner bases, never equality
//! of generator lists.

use crate::algebra::{grevlex, monomials_of_degree, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{syzygies, GroebnerBasis, ModuleGb, ModuleOrder, ModuleVec};
use serde::ser::Serializer;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

/// Length of a graded module: a k-dimension when finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn is_positive(&self) -> bool {
        !matches!(self, Length::Finite(0))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(*n),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(n) => s.serialize_u64(*n),
            Length::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Homogeneous ideal in the ambient ring, with cached Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            g.require_homogeneous()?;
            if !g.is_zero() {
                kept.push(g);
            }
        }
        if kept.is_empty() {
            kept.push(Polynomial::zero(ring));
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    /// Parse a generator list; the workhorse for tests and the session format.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| ring.parse_polynomial(s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![]).expect("zero ideal")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    /// The irrelevant maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("maximal ideal")
    }

    /// Rebuild from the reduced Gröbner basis so the generator list itself is
    /// canonical; used by colon/intersection outputs.
    fn canonical(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let raw = Ideal::new(ring, gens)?;
        let gb = raw.gb().clone();
        let gens = if gb.is_zero_ideal() {
            vec![Polynomial::zero(ring)]
        } else {
            gb.generators().to_vec()
        };
        let ideal = Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        };
        let _ = ideal.gb.set(gb);
        Ok(ideal)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::new(&self.ring, &self.gens).expect("generators validated at construction")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit_ideal()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(other.gens.iter().all(|g| self.contains_poly(g)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.gb().generators() == other.gb().generators())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a.checked_mul(b)?;
                if !p.is_zero() {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection via the kernel of `(f, u, v) -> (f + sum u_i a_i, f + sum v_j b_j)`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ring = &self.ring;
        let mut columns = Vec::new();
        let one = Polynomial::one(ring);
        columns.push(ModuleVec::from_components(vec![one.clone(), one]));
        for a in &self.gens {
            columns.push(ModuleVec::from_components(vec![
                a.clone(),
                Polynomial::zero(ring),
            ]));
        }
        for b in &other.gens {
            columns.push(ModuleVec::from_components(vec![
                Polynomial::zero(ring),
                b.clone(),
            ]));
        }
        let syz = syzygies(ring, 2, &columns);
        let gens: Vec<Polynomial> = syz
            .iter()
            .filter_map(|v| v.component(0).cloned())
            .collect();
        Ideal::canonical(ring, gens)
    }

    /// Colon by a single polynomial via the kernel of `[b, a_1, ..., a_g]`.
    fn colon_poly(&self, b: &Polynomial) -> Result<Ideal> {
        let ring = &self.ring;
        if b.is_zero() {
            return Ok(Ideal::unit(ring));
        }
        let mut columns = vec![ModuleVec::single(1, 0, b.clone())];
        for a in &self.gens {
            if !a.is_zero() {
                columns.push(ModuleVec::single(1, 0, a.clone()));
            }
        }
        let syz = syzygies(ring, 1, &columns);
        let gens: Vec<Polynomial> = syz
            .iter()
            .filter_map(|v| v.component(0).cloned())
            .collect();
        Ideal::canonical(ring, gens)
    }

    /// `(self : other)`, elements multiplying `other` into `self`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut acc: Option<Ideal> = None;
        for b in &other.gens {
            if b.is_zero() {
                continue;
            }
            let piece = self.colon_poly(b)?;
            acc = Some(match acc {
                None => piece,
                Some(prev) => prev.intersect(&piece)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(self : (self : other))`, the largest ideal with the same colon as `other`.
    pub fn double_colon(&self, other: &Ideal) -> Result<Ideal> {
        let inner = self.colon(other)?;
        self.colon(&inner)
    }

    /// Minimal generating subset: lowest degree first, then grevlex-smallest
    /// leading monomial, then input order; an element is kept exactly when it
    /// is not in the ideal generated by those already kept.
    pub fn mingens(&self) -> MingenSet {
        let ring = &self.ring;
        let mut candidates: Vec<(usize, Polynomial)> = self
            .gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.monic())
            .enumerate()
            .collect();
        candidates.sort_by(|(ia, a), (ib, b)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| match (a.leading_monomial(), b.leading_monomial()) {
                    (Some(ma), Some(mb)) => grevlex(ma, mb),
                    _ => Ordering::Equal,
                })
                .then_with(|| ia.cmp(ib))
        });
        let mut engine = ModuleGb::new(ring, ModuleOrder::plain(ring.nvars(), 1), true);
        let mut elements = Vec::new();
        for (_, g) in candidates {
            let wrapped = ModuleVec::single(1, 0, g.clone());
            if engine.normal_form(&wrapped).is_zero() {
                continue;
            }
            engine.add_generator(wrapped);
            engine.complete();
            elements.push(g);
        }
        let degrees = elements.iter().map(|g| g.degree()).collect();
        MingenSet { elements, degrees }
    }

    /// True exactly when `f` lies in the ideal but not in `maximal * ideal`.
    pub fn is_minimal_generator(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        f.require_homogeneous()?;
        if f.is_zero() || !self.contains_poly(f) {
            return Ok(false);
        }
        let nn = Ideal::maximal(&self.ring);
        let scaled = nn.product(self)?;
        Ok(!scaled.contains_poly(f))
    }

    /// Dimension over k of the degree-`d` piece of `S / self`.
    pub fn hilbert_dim(&self, d: u64) -> u64 {
        let leads = self.gb().lead_monomials();
        monomials_of_degree(self.ring.nvars(), d)
            .iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count() as u64
    }

    /// Minimal generators of the image of this ideal in `S / quotient`,
    /// reduced to normal form; the empty list means the image is zero.
    pub fn mingens_mod(&self, quotient: &Ideal) -> Vec<Polynomial> {
        let ring = &self.ring;
        let qgb = quotient.gb();
        let mut candidates: Vec<Polynomial> = self
            .gb()
            .generators()
            .iter()
            .map(|g| qgb.normal_form(g))
            .filter(|g| !g.is_zero())
            .map(|g| g.monic())
            .collect();
        candidates.sort_by(|a, b| {
            a.degree().cmp(&b.degree()).then_with(|| {
                match (a.leading_monomial(), b.leading_monomial()) {
                    (Some(ma), Some(mb)) => grevlex(ma, mb),
                    _ => Ordering::Equal,
                }
            })
        });
        let mut engine = ModuleGb::new(ring, ModuleOrder::plain(ring.nvars(), 1), true);
        for g in qgb.generators() {
            engine.add_generator(ModuleVec::single(1, 0, g.clone()));
        }
        engine.complete();
        let mut kept = Vec::new();
        for g in candidates {
            let wrapped = ModuleVec::single(1, 0, g.clone());
            if engine.normal_form(&wrapped).is_zero() {
                continue;
            }
            engine.add_generator(wrapped);
            engine.complete();
            kept.push(g);
        }
        kept
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Chosen minimal generators of a homogeneous ideal.
#[derive(Clone, Debug)]
pub struct MingenSet {
    pub elements: Vec<Polynomial>,
    pub degrees: Vec<u64>,
}

impl MingenSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `length_S(N / Q)` for `Q` contained in `N`, as a graded k-dimension.
///
/// Finiteness is decided by testing that `(Q : N)` contains a power of every
/// variable (power bound 40); the dimension is then summed degree by degree
/// up to a provable vanishing bound.
pub fn colength(outer: &Ideal, inner: &Ideal) -> Result<Length> {
    if outer.ring() != inner.ring() {
        return Err(Error::RingMismatch);
    }
    if !outer.contains(inner)? {
        return Err(Error::NotContained);
    }
    let ring = outer.ring();
    let conductor = inner.colon(outer)?;
    const POWER_BOUND: u16 = 40;
    let mut total_power: u64 = 0;
    for i in 0..ring.nvars() {
        let mut found = None;
        for t in 0..=POWER_BOUND {
            let mut exps = vec![0u16; ring.nvars()];
            exps[i] = t;
            let mono = Polynomial::from_monomial(ring, Monomial::from_exps(&exps));
            if conductor.contains_poly(&mono) {
                found = Some(t);
                break;
            }
        }
        match found {
            Some(t) => total_power += t.saturating_sub(1) as u64,
            None => return Ok(Length::Infinite),
        }
    }
    let max_gen_degree = outer
        .gb()
        .generators()
        .iter()
        .map(|g| g.degree())
        .max()
        .unwrap_or(0);
    let bound = 1 + total_power + max_gen_degree;
    let mut sum = 0u64;
    for d in 0..=bound {
        let qd = inner.hilbert_dim(d);
        let nd = outer.hilbert_dim(d);
        debug_assert!(qd >= nd, "containment violated in degree {d}");
        sum += qd - nd;
    }
    Ok(Length::Finite(sum))
}

/// Depth-zero test for `S / I`: true exactly when `(I : maximal)` strictly
/// contains `I`, i.e. the quotient has a nonzero socle element.
pub fn is_depth_zero(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::NotProperNonzero);
    }
    let nn = Ideal::maximal(ideal.ring());
    let socle = ideal.colon(&nn)?;
    Ok(!socle.equals(ideal)?)
}

/// Equality of the images of two ideals in `S / quotient`.
pub fn eq_mod(a: &Ideal, b: &Ideal, quotient: &Ideal) -> Result<bool> {
    a.sum(quotient)?.equals(&b.sum(quotient)?)
}

/// Containment `a ⊇ b` of images in `S / quotient`.
pub fn contains_mod(a: &Ideal, b: &Ideal, quotient: &Ideal) -> Result<bool> {
    a.sum(quotient)?.contains(&b.sum(quotient)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::with_vars(&["x", "y"])
    }

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(ring, gens).unwrap()
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let r = ring2();
        let i = ideal(&r, &["x^2", "x*y"]);
        let z = Ideal::zero(&r);
        assert!(i.sum(&z).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn maximal_squared() {
        let r = ring2();
        let nn = Ideal::maximal(&r);
        let sq = nn.power(2).unwrap();
        assert!(sq.equals(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn example_family_burch_square_by_hand() {
        let r = Ring::with_vars(&["x1", "x2", "y"]);
        let i = ideal(&r, &["x1*y", "x2*y", "y^3"]);
        let lin = ideal(&r, &["x1", "x2"]);
        let bi2 = i.sum(&lin.power(2).unwrap()).unwrap();
        let expected = ideal(&r, &["x1*y", "x2*y", "y^3", "x1^2", "x1*x2", "x2^2"]);
        assert!(bi2.equals(&expected).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring2();
        let a = ideal(&r, &["x^2", "x*y"]);
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());

        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        assert!(x.intersect(&y).unwrap().equals(&ideal(&r, &["x*y"])).unwrap());

        let nn2 = Ideal::maximal(&r).power(2).unwrap();
        let meet = nn2.intersect(&y).unwrap();
        assert!(meet.equals(&ideal(&r, &["x*y", "y^2"])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring2();
        let a = ideal(&r, &["x^2", "x*y"]);
        assert!(a.colon(&Ideal::unit(&r)).unwrap().equals(&a).unwrap());

        let re = Ring::with_vars(&["x1", "x2", "y"]);
        let i = ideal(&re, &["x1*y", "x2*y", "y^3"]);
        let nn = Ideal::maximal(&re);
        let q = i.colon(&nn).unwrap();
        assert!(q.equals(&ideal(&re, &["x1*y", "x2*y", "y^2"])).unwrap());

        let nn2 = Ideal::maximal(&r).power(2).unwrap();
        let q2 = nn2.colon(&ideal(&r, &["y"])).unwrap();
        assert!(q2.equals(&Ideal::maximal(&r)).unwrap());
    }

    #[test]
    fn equality_and_containment() {
        let r = ring2();
        let a = ideal(&r, &["x", "y"]);
        let b = ideal(&r, &["y", "x"]);
        assert!(a.equals(&b).unwrap());
        let nn = Ideal::maximal(&r);
        let nn2 = nn.power(2).unwrap();
        assert!(nn.contains(&nn2).unwrap());
        assert!(!nn2.contains(&nn).unwrap());
    }

    #[test]
    fn mingens_drops_redundant_generator() {
        let r = ring2();
        let a = ideal(&r, &["x^2", "x*y", "x^2 + x*y"]);
        let mg = a.mingens();
        let printed: Vec<String> = mg.elements.iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["x*y", "x^2"]);
    }

    #[test]
    fn mingens_of_squared_two_generated_ideal() {
        let r = Ring::with_vars(&["a", "b"]);
        let base = ideal(&r, &["a", "b^2"]);
        let sq = base.power(2).unwrap();
        let mg = sq.mingens();
        let printed: Vec<String> = mg.elements.iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["a^2", "a*b^2", "b^4"]);
    }

    #[test]
    fn minimal_generator_detection() {
        let r = Ring::with_vars(&["x1", "x2", "y"]);
        let i = ideal(&r, &["x1*y", "x2*y", "y^3"]);
        let f = r.parse_polynomial("x1*y").unwrap();
        assert!(i.is_minimal_generator(&f).unwrap());
        let g = r.parse_polynomial("x1*y^2").unwrap();
        assert!(!i.is_minimal_generator(&g).unwrap());
        assert!(!i.is_minimal_generator(&Polynomial::zero(&r)).unwrap());
    }

    #[test]
    fn hilbert_dimensions() {
        let r = ring2();
        let a = ideal(&r, &["x", "y"]);
        assert_eq!(a.hilbert_dim(0), 1);
        assert_eq!(a.hilbert_dim(1), 0);

        let nn2 = Ideal::maximal(&r).power(2).unwrap();
        assert_eq!(nn2.hilbert_dim(1), 2);

        // standard monomials of degree 3 mod (a^2, a*b^2, b^4): only b^3
        let rb = Ring::with_vars(&["a", "b"]);
        let i = ideal(&rb, &["a^2", "a*b^2", "b^4"]);
        assert_eq!(i.hilbert_dim(3), 1);
    }

    #[test]
    fn colength_examples() {
        let r = ring2();
        let nn = Ideal::maximal(&r);
        let nn2 = nn.power(2).unwrap();
        assert_eq!(colength(&nn, &nn2).unwrap(), Length::Finite(2));
        assert_eq!(colength(&nn, &nn).unwrap(), Length::Finite(0));

        let x = ideal(&r, &["x"]);
        let x2 = ideal(&r, &["x^2"]);
        assert_eq!(colength(&x, &x2).unwrap(), Length::Infinite);

        assert!(matches!(
            colength(&nn2, &nn),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn depth_zero_detection() {
        let r = ring2();
        let a = ideal(&r, &["x^2", "x*y"]);
        assert!(is_depth_zero(&a).unwrap());

        let r4 = Ring::with_vars(&["x", "y", "z", "w"]);
        let edge = ideal(&r4, &["x*z", "y*z", "z*w", "x*w"]);
        assert!(!is_depth_zero(&edge).unwrap());

        let re = Ring::with_vars(&["x1", "x2", "y"]);
        let fam = ideal(&re, &["x1*y", "x2*y", "y^3"]);
        assert!(is_depth_zero(&fam).unwrap());

        assert!(is_depth_zero(&Ideal::zero(&r)).is_err());
        assert!(is_depth_zero(&Ideal::unit(&r)).is_err());
    }

    #[test]
    fn double_colon_examples() {
        let r = ring2();
        let nn = Ideal::maximal(&r);
        let nn2 = nn.power(2).unwrap();
        let y = ideal(&r, &["y"]);
        let jp = nn2.double_colon(&y).unwrap();
        assert!(jp.equals(&nn).unwrap());

        // idempotence: (I : (I : (I : (I : N)))) = (I : (I : N))
        let once = nn2.colon(&nn2.double_colon(&y).unwrap()).unwrap();
        let inner = nn2.colon(&y).unwrap();
        assert!(once.equals(&inner).unwrap());

        let x = ideal(&r, &["x"]);
        assert!(x.double_colon(&x).unwrap().equals(&x).unwrap());
    }

    #[test]
    fn mingens_mod_reduces_against_quotient() {
        let r4 = Ring::with_vars(&["x", "y", "z", "w"]);
        let i = ideal(&r4, &["x*z", "y*z", "z*w", "x*w"]);
        let big = ideal(&r4, &["x^2", "x*y", "x*z", "y*z", "z*w", "x*w"]);
        let reps = big.mingens_mod(&i);
        let printed: Vec<String> = reps.iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["x*y", "x^2"]);
    }
}
