//! Exact arithmetic foundation: prime-field scalars, monomials, terms,
//! multivariate polynomials, and the degree-reverse-lexicographic order.
//!
//! Values are immutable after construction and all operations are pure, so
//! everything here is safe to share read-only across threads. Polynomials are
//! kept in canonical form: terms strictly decreasing in grevlex, no zero
//! coefficients, coefficients as residues in `[0, p)`.

use crate::error::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Ambient polynomial ring `GF(p)[x_1, ..., x_n]` with a fixed variable list.
///
/// Cheap to clone; carries the prime-field arithmetic.
#[derive(Clone, Debug)]
pub struct Ring {
    p: u64,
    vars: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && *self.vars == *other.vars
    }
}
impl Eq for Ring {}

/// Default coefficient field modulus.
pub const DEFAULT_PRIME: u64 = 32003;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Ring {
    pub fn new(p: u64, vars: Vec<String>) -> Result<Ring> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.clone()) {
                return Err(Error::Invalid(format!("duplicate variable `{v}`")));
            }
        }
        if vars.is_empty() {
            return Err(Error::Invalid("ring needs at least one variable".into()));
        }
        Ok(Ring {
            p,
            vars: Arc::new(vars),
        })
    }

    /// Convenience constructor from `&str` names with the default prime.
    pub fn with_vars(names: &[&str]) -> Ring {
        Ring::new(DEFAULT_PRIME, names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    // field arithmetic on residues in [0, p)
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        // Fermat: a^(p-2) mod p
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Reduce a signed integer into the canonical residue range.
    pub fn residue(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

/// Exponent vector; componentwise arithmetic, 16-bit exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
        }
    }

    pub fn from_exps(exps: &[u16]) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// Single variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::VariableCountMismatch(self.nvars(), other.nvars()));
        }
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            let s = (*a as u32) + (*b as u32);
            if s > u16::MAX as u32 {
                return Err(Error::ExponentOverflow);
            }
            exps.push(s as u16);
        }
        Ok(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial product")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Grevlex comparison with `x_1 > x_2 > ... > x_n`: higher total degree wins;
/// on ties the monomial whose trailing exponent difference is negative wins.
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (ea, eb) in a.exps.iter().zip(b.exps.iter()).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable = larger monomial
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Checked grevlex entry point; rejects mismatched variable counts.
pub fn compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::VariableCountMismatch(a.nvars(), b.nvars()));
    }
    Ok(grevlex(a, b))
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(grevlex(self, other))
    }
}
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

/// Coefficient-monomial pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: u64,
    pub mono: Monomial,
}

/// Multivariate polynomial in canonical form over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Polynomial {
        let c = ring.residue(c);
        if c == 0 {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: c,
                mono: Monomial::one(ring.nvars()),
            }],
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: 1,
                mono: Monomial::var(i, ring.nvars()),
            }],
        }
    }

    pub fn from_monomial(ring: &Ring, mono: Monomial) -> Polynomial {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { coeff: 1, mono }],
        }
    }

    /// Canonicalize an arbitrary term list: sort descending, merge, drop zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| grevlex(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.coeff % ring.p == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = ring.add(last.coeff, t.coeff % ring.p);
                }
                _ => out.push(Term {
                    coeff: t.coeff % ring.p,
                    mono: t.mono,
                }),
            }
        }
        out.retain(|t| t.coeff != 0);
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// Coefficient of the degree-zero term, if any.
    pub fn constant_part(&self) -> u64 {
        self.terms
            .last()
            .filter(|t| t.mono.is_one())
            .map(|t| t.coeff)
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    /// Reject an inhomogeneous polynomial with a diagnostic naming the bad term.
    pub fn require_homogeneous(&self) -> Result<()> {
        if let Some(first) = self.terms.first() {
            let d = first.mono.degree();
            for t in &self.terms {
                if t.mono.degree() != d {
                    return Err(Error::Inhomogeneous {
                        term: format_term(&self.ring, t, false),
                        found: t.mono.degree(),
                        expected: d,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match grevlex(&self.terms[i].mono, &other.terms[j].mono) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.add(self.terms[i].coeff, other.terms[j].coeff);
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: self.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.ring.neg(t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// `self - c * m * other`, the reduction workhorse.
    pub fn sub_scaled(&self, other: &Polynomial, c: u64, m: &Monomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let scaled = other.mul_term(self.ring.neg(c), m);
        self.add(&scaled)
    }

    pub fn mul_term(&self, c: u64, m: &Monomial) -> Polynomial {
        let c = c % self.ring.p;
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.ring.mul(t.coeff, c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        for ta in &self.terms {
            for tb in &other.terms {
                ta.mono.checked_mul(&tb.mono)?;
            }
        }
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ta in &self.terms {
            for tb in &other.terms {
                terms.push(Term {
                    coeff: self.ring.mul(ta.coeff, tb.coeff),
                    mono: ta.mono.mul(&tb.mono),
                });
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) => self.scale(self.ring.inv(lt.coeff)),
        }
    }

    /// Exact quotient by a monomial, when every term is divisible by it.
    pub fn divide_by_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        if self.terms.iter().any(|t| !m.divides(&t.mono)) {
            return None;
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    mono: m.quotient(&t.mono),
                })
                .collect(),
        })
    }
}

fn format_term(ring: &Ring, t: &Term, leading: bool) -> String {
    let p = ring.prime();
    let balanced: i64 = if t.coeff > p / 2 {
        t.coeff as i64 - p as i64
    } else {
        t.coeff as i64
    };
    let (sign, mag) = if balanced < 0 {
        ("-", (-balanced) as u64)
    } else {
        ("+", balanced as u64)
    };
    let mut factors: Vec<String> = Vec::new();
    if mag != 1 || t.mono.is_one() {
        factors.push(mag.to_string());
    }
    for (i, &e) in t.mono.exps().iter().enumerate() {
        if e == 1 {
            factors.push(ring.var_names()[i].clone());
        } else if e > 1 {
            factors.push(format!("{}^{}", ring.var_names()[i], e));
        }
    }
    let body = factors.join("*");
    if leading {
        if sign == "-" {
            format!("-{body}")
        } else {
            body
        }
    } else {
        format!(" {sign} {body}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            write!(f, "{}", format_term(&self.ring, t, i == 0))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// parsing: `coeff*x1^e1*x2^e2` terms joined by `+`/`-`, explicit `*` and `^`
// ---------------------------------------------------------------------------

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Int(String),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let c = self.src[self.pos];
        self.pos += 1;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                let mut s = String::from(c as char);
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    s.push(self.src[self.pos] as char);
                    self.pos += 1;
                }
                Tok::Int(s)
            }
            c if (c as char).is_ascii_alphabetic() || c == b'_' => {
                let mut s = String::from(c as char);
                while self.pos < self.src.len()
                    && ((self.src[self.pos] as char).is_ascii_alphanumeric()
                        || self.src[self.pos] == b'_')
                {
                    s.push(self.src[self.pos] as char);
                    self.pos += 1;
                }
                Tok::Ident(s)
            }
            other => {
                return Err(Error::Parse {
                    line: 0,
                    col: start + 1,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        Ok((tok, start))
    }
}

impl Ring {
    /// Parse canonical polynomial syntax. Coefficients of any length are
    /// folded mod p digit by digit; negative coefficients are reduced.
    pub fn parse_polynomial(&self, src: &str) -> Result<Polynomial> {
        let mut lx = Lexer::new(src);
        let mut terms: Vec<Term> = Vec::new();
        let (mut tok, mut at) = lx.next()?;
        if tok == Tok::End {
            return Err(Error::Parse {
                line: 0,
                col: at + 1,
                msg: "empty polynomial".into(),
            });
        }
        loop {
            // sign
            let mut negative = false;
            loop {
                match tok {
                    Tok::Plus => {}
                    Tok::Minus => negative = !negative,
                    _ => break,
                }
                (tok, at) = lx.next()?;
            }
            // factors joined by '*'
            let mut coeff: u64 = 1;
            let mut mono = Monomial::one(self.nvars());
            let mut nfactors = 0;
            loop {
                match &tok {
                    Tok::Int(s) => {
                        let mut c: u64 = 0;
                        for d in s.bytes() {
                            c = (c * 10 + (d - b'0') as u64) % self.p;
                        }
                        coeff = self.mul(coeff, c);
                    }
                    Tok::Ident(name) => {
                        let idx = self.var_index(name).ok_or_else(|| Error::Parse {
                            line: 0,
                            col: at + 1,
                            msg: format!("unknown variable `{name}`"),
                        })?;
                        let (peek, pat) = lx.next()?;
                        let exp: u16 = if peek == Tok::Caret {
                            let (etok, eat) = lx.next()?;
                            match etok {
                                Tok::Int(s) => {
                                    s.parse::<u16>().map_err(|_| Error::Parse {
                                        line: 0,
                                        col: eat + 1,
                                        msg: "exponent exceeds 16-bit bound".into(),
                                    })?
                                }
                                _ => {
                                    return Err(Error::Parse {
                                        line: 0,
                                        col: eat + 1,
                                        msg: "expected integer exponent after `^`".into(),
                                    })
                                }
                            }
                        } else {
                            // not a caret: push back by re-lexing from pat
                            lx.pos = pat;
                            1
                        };
                        let mut step = Monomial::one(self.nvars());
                        step.exps[idx] = exp;
                        mono = mono.checked_mul(&step)?;
                    }
                    _ => {
                        return Err(Error::Parse {
                            line: 0,
                            col: at + 1,
                            msg: "expected coefficient or variable".into(),
                        })
                    }
                }
                nfactors += 1;
                (tok, at) = lx.next()?;
                if tok == Tok::Star {
                    (tok, at) = lx.next()?;
                    continue;
                }
                break;
            }
            if nfactors == 0 {
                return Err(Error::Parse {
                    line: 0,
                    col: at + 1,
                    msg: "empty term".into(),
                });
            }
            if negative {
                coeff = self.neg(coeff);
            }
            terms.push(Term { coeff, mono });
            match tok {
                Tok::End => break,
                Tok::Plus | Tok::Minus => continue,
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        col: at + 1,
                        msg: "expected `+`, `-`, or end of polynomial".into(),
                    })
                }
            }
        }
        Ok(Polynomial::from_terms(self, terms))
    }
}

/// All monomials of total degree `d` in `nvars` variables, grevlex-descending.
pub fn monomials_of_degree(nvars: usize, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, var: usize, left: u64) {
        if var + 1 == exps.len() {
            exps[var] = left as u16;
            out.push(Monomial::from_exps(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e as u16;
            rec(out, exps, var + 1, left - e);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(&mut out, &mut exps, 0, d);
    out.sort_by(|a, b| grevlex(b, a));
    out
}
