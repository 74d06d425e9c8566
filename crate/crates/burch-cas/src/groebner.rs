//! Buchberger's algorithm for submodules of free modules over the ambient
//! polynomial ring, plus the two derived workhorses: reduced Gröbner bases of
//! ideals (rank-one modules) and syzygy computation.
//!
//! Syzygies are computed Schreyer-style on the graph module: the columns are
//! adjoined to tagged basis vectors, the tag positions carry Schreyer weights
//! (the lead monomial of the column they track), and an elimination split
//! keeps every target-block term above every tag-block term. Basis elements
//! whose lead falls in the tag block are exactly the syzygies.

use crate::algebra::{grevlex, Monomial, Polynomial, Ring, Term};
use crate::error::{Error, Result};
use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

/// A vector of polynomials indexed by free-module basis positions, stored
/// sparsely: only nonzero components, sorted by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVec {
    rank: usize,
    comps: Vec<(usize, Polynomial)>,
}

impl ModuleVec {
    pub fn zero(rank: usize) -> ModuleVec {
        ModuleVec {
            rank,
            comps: Vec::new(),
        }
    }

    pub fn from_components(comps: Vec<Polynomial>) -> ModuleVec {
        let rank = comps.len();
        ModuleVec {
            rank,
            comps: comps
                .into_iter()
                .enumerate()
                .filter(|(_, f)| !f.is_zero())
                .collect(),
        }
    }

    /// Standard basis vector `e_pos`.
    pub fn unit(ring: &Ring, rank: usize, pos: usize) -> ModuleVec {
        ModuleVec {
            rank,
            comps: vec![(pos, Polynomial::one(ring))],
        }
    }

    /// Single component `f * e_pos`.
    pub fn single(rank: usize, pos: usize, f: Polynomial) -> ModuleVec {
        if f.is_zero() {
            return ModuleVec::zero(rank);
        }
        ModuleVec {
            rank,
            comps: vec![(pos, f)],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero components, ascending by position.
    pub fn components(&self) -> &[(usize, Polynomial)] {
        &self.comps
    }

    pub fn component(&self, pos: usize) -> Option<&Polynomial> {
        self.comps
            .binary_search_by_key(&pos, |(p, _)| *p)
            .ok()
            .map(|i| &self.comps[i].1)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn set(&mut self, pos: usize, f: Polynomial) {
        match self.comps.binary_search_by_key(&pos, |(p, _)| *p) {
            Ok(i) => {
                if f.is_zero() {
                    self.comps.remove(i);
                } else {
                    self.comps[i].1 = f;
                }
            }
            Err(i) => {
                if !f.is_zero() {
                    self.comps.insert(i, (pos, f));
                }
            }
        }
    }

    /// `self - c * m * other`, componentwise sparse merge.
    pub fn sub_scaled(&mut self, other: &ModuleVec, c: u64, m: &Monomial) {
        debug_assert_eq!(self.rank, other.rank);
        let mine = std::mem::take(&mut self.comps);
        let mut out: Vec<(usize, Polynomial)> =
            Vec::with_capacity(mine.len() + other.comps.len());
        let mut it_a = mine.into_iter().peekable();
        let mut it_b = other.comps.iter().peekable();
        loop {
            match (it_a.peek(), it_b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(it_a.next().expect("peeked")),
                (None, Some(_)) => {
                    let (p, f) = it_b.next().expect("peeked");
                    let g = f.mul_term(f.ring().neg(c), m);
                    if !g.is_zero() {
                        out.push((*p, g));
                    }
                }
                (Some((pa, _)), Some((pb, _))) => match pa.cmp(pb) {
                    Ordering::Less => out.push(it_a.next().expect("peeked")),
                    Ordering::Greater => {
                        let (p, f) = it_b.next().expect("peeked");
                        let g = f.mul_term(f.ring().neg(c), m);
                        if !g.is_zero() {
                            out.push((*p, g));
                        }
                    }
                    Ordering::Equal => {
                        let (p, fa) = it_a.next().expect("peeked");
                        let (_, fb) = it_b.next().expect("peeked");
                        let g = fa.sub_scaled(fb, c, m);
                        if !g.is_zero() {
                            out.push((p, g));
                        }
                    }
                },
            }
        }
        self.comps = out;
    }

    pub fn scale(&self, c: u64) -> ModuleVec {
        ModuleVec {
            rank: self.rank,
            comps: self
                .comps
                .iter()
                .map(|(p, f)| (*p, f.scale(c)))
                .collect(),
        }
    }

    /// Copy into a wider module at a position offset.
    pub fn embed(&self, rank: usize, offset: usize) -> ModuleVec {
        ModuleVec {
            rank,
            comps: self
                .comps
                .iter()
                .map(|(p, f)| (p + offset, f.clone()))
                .collect(),
        }
    }

    /// Restrict to a coordinate window, shifting positions down.
    pub fn project(&self, range: std::ops::Range<usize>) -> ModuleVec {
        ModuleVec {
            rank: range.len(),
            comps: self
                .comps
                .iter()
                .filter(|(p, _)| range.contains(p))
                .map(|(p, f)| (p - range.start, f.clone()))
                .collect(),
        }
    }

    /// Deterministic total order used to sort generator lists.
    pub fn canonical_cmp(&self, other: &ModuleVec) -> Ordering {
        debug_assert_eq!(self.rank, other.rank);
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.comps.get(i), other.comps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((pa, fa)), Some((pb, fb))) => match pa.cmp(pb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => {
                        match cmp_polys(fa, fb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

fn cmp_polys(a: &Polynomial, b: &Polynomial) -> Ordering {
    for (x, y) in a.terms().iter().zip(b.terms().iter()) {
        match grevlex(&y.mono, &x.mono).then(x.coeff.cmp(&y.coeff)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.terms().len().cmp(&b.terms().len())
}

/// Module monomial order: an elimination split (positions below `split`
/// dominate) with per-position Schreyer weight monomials inside each block;
/// grevlex on the weighted monomial, lower position wins ties.
#[derive(Clone, Debug)]
pub struct ModuleOrder {
    split: usize,
    weights: Vec<Monomial>,
}

impl ModuleOrder {
    pub fn plain(nvars: usize, rank: usize) -> ModuleOrder {
        ModuleOrder {
            split: 0,
            weights: vec![Monomial::one(nvars); rank],
        }
    }

    pub fn with_split(split: usize, weights: Vec<Monomial>) -> ModuleOrder {
        ModuleOrder { split, weights }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    fn block(&self, pos: usize) -> u8 {
        u8::from(pos >= self.split)
    }

    /// Compares module terms `(m_a, pos_a)` vs `(m_b, pos_b)`.
    pub fn cmp_terms(&self, ma: &Monomial, pa: usize, mb: &Monomial, pb: usize) -> Ordering {
        match self.block(pb).cmp(&self.block(pa)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let wa = ma.mul(&self.weights[pa]);
        let wb = mb.mul(&self.weights[pb]);
        grevlex(&wa, &wb).then_with(|| pb.cmp(&pa))
    }

    fn weighted_degree(&self, m: &Monomial, pos: usize) -> u64 {
        m.degree() + self.weights[pos].degree()
    }
}

/// Leading module term of `v`: per component the polynomial lead is already
/// grevlex-maximal, so only one candidate per position needs comparing.
pub fn module_lead<'a>(order: &ModuleOrder, v: &'a ModuleVec) -> Option<(usize, &'a Term)> {
    let mut best: Option<(usize, &Term)> = None;
    for (pos, comp) in v.components() {
        let t = comp.leading_term().expect("no zero components stored");
        best = match best {
            None => Some((*pos, t)),
            Some((bp, bt)) => {
                if order.cmp_terms(&t.mono, *pos, &bt.mono, bp) == Ordering::Greater {
                    Some((*pos, t))
                } else {
                    Some((bp, bt))
                }
            }
        };
    }
    best
}

struct BasisElem {
    vec: ModuleVec,
    lead_pos: usize,
    lead_mono: Monomial,
    lead_degree: u64,
}

#[derive(PartialEq, Eq)]
struct Pair {
    degree: u64,
    lcm: Monomial,
    pos: usize,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| grevlex(&self.lcm, &other.lcm))
            .then_with(|| self.pos.cmp(&other.pos))
            .then_with(|| self.i.cmp(&other.i))
            .then_with(|| self.j.cmp(&other.j))
    }
}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Incremental Buchberger state for a submodule of a free module.
pub struct ModuleGb {
    ring: Ring,
    order: ModuleOrder,
    basis: Vec<BasisElem>,
    buckets: Vec<Vec<usize>>,
    pairs: BinaryHeap<Reverse<Pair>>,
    done: HashSet<(usize, usize)>,
    product_criterion: bool,
}

impl ModuleGb {
    /// `product_criterion` is only sound for rank-one (ideal) input and is
    /// enabled solely by the ideal wrapper.
    pub fn new(ring: &Ring, order: ModuleOrder, product_criterion: bool) -> ModuleGb {
        let rank = order.rank();
        ModuleGb {
            ring: ring.clone(),
            order,
            basis: Vec::new(),
            buckets: vec![Vec::new(); rank],
            pairs: BinaryHeap::new(),
            done: HashSet::new(),
            product_criterion,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis_vecs(&self) -> impl Iterator<Item = &ModuleVec> {
        self.basis.iter().map(|b| &b.vec)
    }

    fn find_reducer(&self, pos: usize, mono: &Monomial, degree: u64) -> Option<usize> {
        self.buckets[pos].iter().copied().find(|&k| {
            self.basis[k].lead_degree <= degree && self.basis[k].lead_mono.divides(mono)
        })
    }

    /// Full normal form against the current basis.
    pub fn normal_form(&self, v: &ModuleVec) -> ModuleVec {
        let mut work = v.clone();
        // remainder terms per position, collected in falling order
        let mut rem: Vec<(usize, Vec<Term>)> = Vec::new();
        while let Some((pos, lt)) = module_lead(&self.order, &work) {
            let coeff = lt.coeff;
            let mono = lt.mono.clone();
            match self.find_reducer(pos, &mono, mono.degree()) {
                Some(k) => {
                    let q = self.basis[k].lead_mono.quotient(&mono);
                    // clone is cheap: basis vectors are sparse
                    let bvec = self.basis[k].vec.clone();
                    work.sub_scaled(&bvec, coeff, &q);
                }
                None => {
                    match rem.iter_mut().find(|(p, _)| *p == pos) {
                        Some((_, terms)) => terms.push(Term {
                            coeff,
                            mono: mono.clone(),
                        }),
                        None => rem.push((
                            pos,
                            vec![Term {
                                coeff,
                                mono: mono.clone(),
                            }],
                        )),
                    }
                    let comp = work.component(pos).expect("lead exists");
                    let mut rest = comp.terms().to_vec();
                    rest.remove(0);
                    work.set(pos, Polynomial::from_terms(&self.ring, rest));
                }
            }
        }
        let mut out = ModuleVec::zero(v.rank());
        for (pos, terms) in rem {
            out.set(pos, Polynomial::from_terms(&self.ring, terms));
        }
        out
    }

    /// Reduce and insert a generator; queues the new S-pairs.
    pub fn add_generator(&mut self, v: ModuleVec) {
        let reduced = self.normal_form(&v);
        if reduced.is_zero() {
            return;
        }
        self.insert(reduced);
    }

    fn insert(&mut self, v: ModuleVec) {
        let (pos, lt) = module_lead(&self.order, &v).expect("nonzero");
        let lead_mono = lt.mono.clone();
        let monic = v.scale(self.ring.inv(lt.coeff));
        let idx = self.basis.len();
        for &k in &self.buckets[pos] {
            let other = &self.basis[k];
            let lcm = lead_mono.lcm(&other.lead_mono);
            let degree = self.order.weighted_degree(&lcm, pos);
            self.pairs.push(Reverse(Pair {
                degree,
                lcm,
                pos,
                i: k,
                j: idx,
            }));
        }
        self.buckets[pos].push(idx);
        self.basis.push(BasisElem {
            vec: monic,
            lead_pos: pos,
            lead_degree: lead_mono.degree(),
            lead_mono,
        });
    }

    fn chain_criterion(&self, pair: &Pair) -> bool {
        self.buckets[pair.pos].iter().any(|&k| {
            k != pair.i
                && k != pair.j
                && self.basis[k].lead_mono.divides(&pair.lcm)
                && self.done.contains(&key(pair.i, k))
                && self.done.contains(&key(pair.j, k))
        })
    }

    /// Process the S-pair queue to completion.
    pub fn complete(&mut self) {
        while let Some(Reverse(pair)) = self.pairs.pop() {
            let k = key(pair.i, pair.j);
            if self.done.contains(&k) {
                continue;
            }
            if self.product_criterion
                && self.basis[pair.i]
                    .lead_mono
                    .gcd_is_one(&self.basis[pair.j].lead_mono)
            {
                self.done.insert(k);
                continue;
            }
            if self.chain_criterion(&pair) {
                self.done.insert(k);
                continue;
            }
            self.done.insert(k);
            let (bi, bj) = (&self.basis[pair.i], &self.basis[pair.j]);
            let qi = bi.lead_mono.quotient(&pair.lcm);
            let qj = bj.lead_mono.quotient(&pair.lcm);
            let mut spoly = ModuleVec::zero(self.order.rank());
            spoly.sub_scaled(&bi.vec, self.ring.neg(1), &qi);
            let bj_vec = bj.vec.clone();
            spoly.sub_scaled(&bj_vec, 1, &qj);
            let reduced = self.normal_form(&spoly);
            if !reduced.is_zero() {
                self.insert(reduced);
            }
        }
    }

    /// Minimize and tail-reduce into the canonical reduced basis.
    pub fn reduce_basis(&mut self) {
        // minimize: drop any element whose lead is divisible by another lead
        let mut order_idx: Vec<usize> = (0..self.basis.len()).collect();
        order_idx.sort_by(|&a, &b| {
            self.order.cmp_terms(
                &self.basis[a].lead_mono,
                self.basis[a].lead_pos,
                &self.basis[b].lead_mono,
                self.basis[b].lead_pos,
            )
        });
        let mut kept: Vec<usize> = Vec::new();
        for idx in order_idx {
            let e = &self.basis[idx];
            let redundant = kept.iter().any(|&k| {
                self.basis[k].lead_pos == e.lead_pos
                    && self.basis[k].lead_mono.divides(&e.lead_mono)
            });
            if !redundant {
                kept.push(idx);
            }
        }
        let minimal: Vec<ModuleVec> = kept.iter().map(|&k| self.basis[k].vec.clone()).collect();
        // rebuild with only the minimal elements, then tail-reduce each
        let mut reduced: Vec<ModuleVec> = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let mut scratch = ModuleGb::new(&self.ring, self.order.clone(), false);
            for (j, v) in minimal.iter().enumerate() {
                if j != i {
                    scratch.insert(v.clone());
                }
            }
            let nf = scratch.normal_form(&minimal[i]);
            debug_assert!(!nf.is_zero());
            let (_, lt) = module_lead(&self.order, &nf).expect("nonzero");
            let inv = self.ring.inv(lt.coeff);
            reduced.push(nf.scale(inv));
        }
        self.rebuild(reduced);
    }

    fn rebuild(&mut self, vecs: Vec<ModuleVec>) {
        let rank = self.order.rank();
        self.basis.clear();
        self.buckets = vec![Vec::new(); rank];
        self.pairs.clear();
        self.done.clear();
        let mut sorted = vecs;
        sorted.sort_by(|a, b| {
            let (pa, ta) = module_lead(&self.order, a).expect("nonzero");
            let (pb, tb) = module_lead(&self.order, b).expect("nonzero");
            self.order.cmp_terms(&ta.mono, pa, &tb.mono, pb)
        });
        for v in sorted {
            let (pos, lt) = module_lead(&self.order, &v).expect("nonzero");
            let lead_mono = lt.mono.clone();
            self.buckets[pos].push(self.basis.len());
            self.basis.push(BasisElem {
                vec: v,
                lead_pos: pos,
                lead_degree: lead_mono.degree(),
                lead_mono,
            });
        }
        // pairs among the rebuilt basis are all considered settled
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                if self.basis[i].lead_pos == self.basis[j].lead_pos {
                    self.done.insert(key(i, j));
                }
            }
        }
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

// ---------------------------------------------------------------------------
// reduced Gröbner bases for ideals
// ---------------------------------------------------------------------------

/// Reduced, monic Gröbner basis of a homogeneous ideal under grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn new(ring: &Ring, generators: &[Polynomial]) -> Result<GroebnerBasis> {
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            g.require_homogeneous()?;
        }
        let mut engine = ModuleGb::new(ring, ModuleOrder::plain(ring.nvars(), 1), true);
        for g in generators {
            if !g.is_zero() {
                engine.add_generator(ModuleVec::single(1, 0, g.clone()));
            }
        }
        engine.complete();
        engine.reduce_basis();
        let gens = engine
            .basis_vecs()
            .map(|v| v.component(0).expect("rank-one").clone())
            .collect();
        Ok(GroebnerBasis {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Basis polynomials, monic, sorted ascending by leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    pub fn lead_monomials(&self) -> Vec<&Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().expect("monic basis element"))
            .collect()
    }

    /// Full normal form: no remainder term is divisible by any basis lead.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        debug_assert_eq!(*f.ring(), self.ring);
        let mut work = f.clone();
        let mut rem: Vec<Term> = Vec::new();
        'outer: while let Some(lt) = work.leading_term() {
            let (coeff, mono) = (lt.coeff, lt.mono.clone());
            for g in &self.gens {
                let gm = g.leading_monomial().expect("monic");
                if gm.divides(&mono) {
                    let q = gm.quotient(&mono);
                    work = work.sub_scaled(g, coeff, &q);
                    continue 'outer;
                }
            }
            rem.push(Term { coeff, mono });
            let mut rest = work.terms().to_vec();
            rest.remove(0);
            work = Polynomial::from_terms(&self.ring, rest);
        }
        Polynomial::from_terms(&self.ring, rem)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

// ---------------------------------------------------------------------------
// syzygies
// ---------------------------------------------------------------------------

/// Generators of `ker(S^s -> S^rank)` for the map sending `e_i` to
/// `columns[i]`. Output vectors live in `S^s`.
pub fn syzygies(ring: &Ring, target_rank: usize, columns: &[ModuleVec]) -> Vec<ModuleVec> {
    let s = columns.len();
    let mut out: Vec<ModuleVec> = Vec::new();
    let aug_rank = target_rank + s;
    let mut weights = vec![Monomial::one(ring.nvars()); aug_rank];
    let mut nonzero: Vec<usize> = Vec::new();
    let plain = ModuleOrder::plain(ring.nvars(), target_rank);
    for (i, col) in columns.iter().enumerate() {
        debug_assert_eq!(col.rank(), target_rank);
        match module_lead(&plain, col) {
            None => out.push(ModuleVec::unit(ring, s, i)),
            Some((_, lt)) => {
                weights[target_rank + i] = lt.mono.clone();
                nonzero.push(i);
            }
        }
    }
    let order = ModuleOrder::with_split(target_rank, weights);
    let mut engine = ModuleGb::new(ring, order.clone(), false);
    for &i in &nonzero {
        let mut aug = columns[i].embed(aug_rank, 0);
        aug.set(target_rank + i, Polynomial::one(ring));
        engine.add_generator(aug);
    }
    engine.complete();
    for v in engine.basis_vecs() {
        let (pos, _) = module_lead(&order, v).expect("nonzero basis element");
        if pos >= target_rank {
            out.push(v.project(target_rank..aug_rank));
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}
