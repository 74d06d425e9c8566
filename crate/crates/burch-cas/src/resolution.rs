//! Minimal graded free resolutions over `R = S/I` up to a step cap, with
//! entry ideals, column ideals, Betti data, and Tor dimensions.
//!
//! Each step computes kernel generators by lifting to `S`, adjoining the
//! quotient relations on every target position, taking syzygies, projecting,
//! and reducing; the generators are then pruned to a minimal set, so every
//! matrix past the presentation has all entries in the maximal ideal.

use crate::algebra::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{module_lead, syzygies, ModuleGb, ModuleOrder, ModuleVec};
use crate::ideals::Ideal;
use crate::linalg;
use std::fmt;

/// Free module described by the degrees of its basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(twists: Vec<i64>) -> FreeModule {
        FreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }
}

/// Matrix of a graded map between free modules; `entries[r][c]` is the
/// coefficient of target basis vector `r` in the image of source vector `c`.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    ring: Ring,
    source: FreeModule,
    target: FreeModule,
    entries: Vec<Vec<Polynomial>>,
}

impl GradedMatrix {
    pub fn new(
        ring: &Ring,
        source: FreeModule,
        target: FreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<GradedMatrix> {
        if entries.len() != target.rank() || entries.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::Invalid("matrix shape mismatch".into()));
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                e.require_homogeneous()?;
                if e.degree() as i64 != source.twists[c] - target.twists[r] {
                    return Err(Error::InhomogeneousMatrix { row: r, col: c });
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            source,
            target,
            entries,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    pub fn column_vec(&self, c: usize) -> ModuleVec {
        ModuleVec::from_components(self.entries.iter().map(|row| row[c].clone()).collect())
    }

    /// `self * other` as composition of maps.
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        debug_assert_eq!(self.cols(), other.rows());
        let rows = self.rows();
        let cols = other.cols();
        let mut entries = vec![vec![Polynomial::zero(&self.ring); cols]; rows];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, out) in row.iter_mut().enumerate() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols() {
                    if !self.entries[r][k].is_zero() && !other.entries[k][c].is_zero() {
                        acc = acc.add(&self.entries[r][k].mul(&other.entries[k][c]));
                    }
                }
                *out = acc;
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            source: other.source.clone(),
            target: self.target.clone(),
            entries,
        }
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            write!(f, "[")?;
            for (i, e) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// What gets resolved: an ideal of `R` (convention: the generator row is the
/// zeroth matrix) or the cokernel of a presentation matrix (first matrix).
#[derive(Clone, Debug)]
pub enum PresentedModule {
    Ideal(Ideal),
    Cokernel(GradedMatrix),
}

/// The quotient ring `R = S/I`; the zero ideal gives plain `S`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ring: Ring,
    ideal: Ideal,
}

impl QuotientRing {
    pub fn new(ring: &Ring, ideal: Ideal) -> Result<QuotientRing> {
        if ideal.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if ideal.is_unit() {
            return Err(Error::Invalid("quotient by the unit ideal".into()));
        }
        Ok(QuotientRing {
            ring: ring.clone(),
            ideal,
        })
    }

    pub fn ambient(ring: &Ring) -> QuotientRing {
        QuotientRing {
            ring: ring.clone(),
            ideal: Ideal::zero(ring),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Reduce a polynomial to its normal form mod the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.ideal.gb().normal_form(f)
    }

    fn reduce_vec(&self, v: &ModuleVec) -> ModuleVec {
        let mut out = ModuleVec::zero(v.rank());
        for (pos, f) in v.components() {
            out.set(*pos, self.reduce(f));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub rank_cap: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { rank_cap: 4096 }
    }
}

/// A computed prefix of a minimal graded free resolution.
#[derive(Clone, Debug)]
pub struct Resolution {
    quotient: QuotientRing,
    /// 0 when resolving an ideal (generator row included), 1 for a cokernel.
    start_index: usize,
    matrices: Vec<GradedMatrix>,
    complete: bool,
    capped: bool,
}

impl Resolution {
    pub fn quotient(&self) -> &QuotientRing {
        &self.quotient
    }

    pub fn start_index(&self) -> usize {
        self.start_index
    }

    /// Index of the last computed matrix.
    pub fn last_index(&self) -> usize {
        self.start_index + self.matrices.len() - 1
    }

    pub fn matrix(&self, j: usize) -> Option<&GradedMatrix> {
        j.checked_sub(self.start_index)
            .and_then(|k| self.matrices.get(k))
    }

    pub fn matrices(&self) -> &[GradedMatrix] {
        &self.matrices
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_capped(&self) -> bool {
        self.capped
    }

    /// Ranks of the free modules from the augmentation target onward.
    pub fn betti_ranks(&self) -> Vec<usize> {
        let mut ranks = vec![self.matrices[0].target().rank()];
        ranks.extend(self.matrices.iter().map(|m| m.source().rank()));
        ranks
    }

    pub fn betti_twists(&self) -> Vec<Vec<i64>> {
        let mut twists = vec![self.matrices[0].target().twists().to_vec()];
        twists.extend(self.matrices.iter().map(|m| m.source().twists().to_vec()));
        twists
    }

    /// True when every entry of every matrix past the start lies in the
    /// maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.matrices
            .iter()
            .flat_map(|m| m.entries().iter().flatten())
            .all(|e| e.constant_part() == 0)
    }

    /// Serialization: ring header, per-step twists, entries as polynomial
    /// strings.
    pub fn to_json(&self) -> serde_json::Value {
        let ring = self.quotient.ring();
        let steps: Vec<serde_json::Value> = self
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let entries: Vec<Vec<String>> = m
                    .entries()
                    .iter()
                    .map(|row| row.iter().map(|e| e.to_string()).collect())
                    .collect();
                serde_json::json!({
                    "index": self.start_index + k,
                    "source_twists": m.source().twists(),
                    "target_twists": m.target().twists(),
                    "entries": entries,
                })
            })
            .collect();
        serde_json::json!({
            "ring": {
                "p": ring.prime(),
                "vars": ring.var_names(),
            },
            "quotient": self
                .quotient
                .ideal()
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>(),
            "start_index": self.start_index,
            "steps": steps,
            "complete": self.complete,
            "capped": self.capped,
        })
    }
}

/// Ideal generated by the entries of a matrix together with the defining
/// ideal of the quotient: the S-preimage of the R-ideal of 1x1 minors.
pub fn entry_ideal(quotient: &QuotientRing, a: &GradedMatrix) -> Ideal {
    let mut gens: Vec<Polynomial> = a
        .entries()
        .iter()
        .flatten()
        .filter(|e| !e.is_zero())
        .cloned()
        .collect();
    gens.extend(quotient.ideal().generators().iter().cloned());
    Ideal::new(quotient.ring(), gens).expect("entry ideal of a homogeneous matrix")
}

/// Ideal generated by the entries of one column (without the quotient).
pub fn column_ideal(a: &GradedMatrix, c: usize) -> Result<Ideal> {
    if c >= a.cols() {
        return Err(Error::ColumnOutOfRange {
            index: c,
            cols: a.cols(),
        });
    }
    let gens: Vec<Polynomial> = a
        .entries()
        .iter()
        .map(|row| row[c].clone())
        .filter(|e| !e.is_zero())
        .collect();
    Ideal::new(a.ring(), gens)
}

/// Kernel generators of a matrix over `R`, as vectors over the source
/// positions, reduced but not yet pruned to a minimal set.
pub fn syzygies_mod(quotient: &QuotientRing, mat: &GradedMatrix) -> Vec<ModuleVec> {
    let ring = quotient.ring();
    let rank = mat.rows();
    let cols = mat.cols();
    let mut columns: Vec<ModuleVec> = (0..cols).map(|c| mat.column_vec(c)).collect();
    let igens: Vec<Polynomial> = quotient
        .ideal()
        .generators()
        .iter()
        .filter(|f| !f.is_zero())
        .cloned()
        .collect();
    for f in &igens {
        for p in 0..rank {
            columns.push(ModuleVec::single(rank, p, f.clone()));
        }
    }
    let raw = syzygies(ring, rank, &columns);
    let mut out = Vec::new();
    for v in raw {
        let reduced = quotient.reduce_vec(&v.project(0..cols));
        if !reduced.is_zero() && !out.contains(&reduced) {
            out.push(reduced);
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Homogeneous degree of a vector in a free module with the given twists.
fn vec_degree(v: &ModuleVec, twists: &[i64]) -> i64 {
    match v.components().first() {
        Some((pos, comp)) => {
            debug_assert!(comp.is_homogeneous());
            comp.degree() as i64 + twists[*pos]
        }
        None => 0,
    }
}

/// Greedy minimal generating subset of an R-submodule of the free module with
/// the given twists: ascending degree, membership tested against the kept
/// elements plus the quotient relations.
fn minimal_module_generators(
    quotient: &QuotientRing,
    twists: &[i64],
    candidates: Vec<ModuleVec>,
) -> Vec<ModuleVec> {
    let ring = quotient.ring();
    let rank = twists.len();
    let mut sorted: Vec<(i64, ModuleVec)> = candidates
        .into_iter()
        .map(|v| (vec_degree(&v, twists), v))
        .collect();
    sorted.sort_by(|(da, a), (db, b)| da.cmp(db).then_with(|| a.canonical_cmp(b)));
    let mut engine = ModuleGb::new(ring, ModuleOrder::plain(ring.nvars(), rank), false);
    for f in quotient.ideal().gb().generators() {
        for p in 0..rank {
            engine.add_generator(ModuleVec::single(rank, p, f.clone()));
        }
    }
    engine.complete();
    let mut kept = Vec::new();
    for (_, v) in sorted {
        if engine.normal_form(&v).is_zero() {
            continue;
        }
        engine.add_generator(v.clone());
        engine.complete();
        kept.push(v);
    }
    kept
}

/// Normalize each kernel generator so its leading module term is monic.
fn monicize(ring: &Ring, vecs: Vec<ModuleVec>) -> Vec<ModuleVec> {
    let order = ModuleOrder::plain(ring.nvars(), vecs.first().map_or(1, |v| v.rank()));
    vecs.into_iter()
        .map(|v| match module_lead(&order, &v) {
            Some((_, t)) => {
                let inv = ring.inv(t.coeff);
                v.scale(inv)
            }
            None => v,
        })
        .collect()
}

fn matrix_from_kernel(
    quotient: &QuotientRing,
    target: &FreeModule,
    kept: Vec<ModuleVec>,
) -> Result<GradedMatrix> {
    let ring = quotient.ring();
    let kept = monicize(ring, kept);
    let twists: Vec<i64> = kept.iter().map(|v| vec_degree(v, target.twists())).collect();
    let source = FreeModule::new(twists);
    let mut entries = vec![vec![Polynomial::zero(ring); source.rank()]; target.rank()];
    for (c, v) in kept.iter().enumerate() {
        for (r, comp) in v.components() {
            entries[*r][c] = comp.clone();
        }
    }
    GradedMatrix::new(ring, source, target.clone(), entries)
}

/// Cancel unit entries of a presentation by row/column elimination
/// (row-major pivot scan), then drop the pivot row and column.
fn cancel_units(quotient: &QuotientRing, mat: &GradedMatrix) -> Result<GradedMatrix> {
    let ring = quotient.ring();
    let mut entries: Vec<Vec<Polynomial>> = mat
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| quotient.reduce(e)).collect())
        .collect();
    let mut src = mat.source().twists().to_vec();
    let mut tgt = mat.target().twists().to_vec();
    loop {
        let mut pivot = None;
        'scan: for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if !e.is_zero() && e.constant_part() != 0 {
                    pivot = Some((r, c));
                    break 'scan;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        let unit = entries[pr][pc].constant_part();
        debug_assert!(entries[pr][pc].is_constant(), "homogeneous unit entry");
        let inv = ring.inv(unit);
        // column operations clear the pivot row
        for c in 0..src.len() {
            if c != pc && !entries[pr][c].is_zero() {
                let factor = entries[pr][c].scale(inv);
                for r in 0..tgt.len() {
                    let sub = factor.mul(&entries[r][pc]);
                    entries[r][c] = quotient.reduce(&entries[r][c].sub(&sub));
                }
            }
        }
        // row operations clear the pivot column
        for r in 0..tgt.len() {
            if r != pr && !entries[r][pc].is_zero() {
                let factor = entries[r][pc].scale(inv);
                for c in 0..src.len() {
                    let sub = factor.mul(&entries[pr][c]);
                    entries[r][c] = quotient.reduce(&entries[r][c].sub(&sub));
                }
            }
        }
        entries.remove(pr);
        for row in entries.iter_mut() {
            row.remove(pc);
        }
        tgt.remove(pr);
        src.remove(pc);
    }
    GradedMatrix::new(
        ring,
        FreeModule::new(src),
        FreeModule::new(tgt),
        entries,
    )
}

/// Minimal graded free resolution of `module` over `quotient`, computed up to
/// matrix index `steps` (or until the resolution terminates).
pub fn resolve(
    quotient: &QuotientRing,
    module: &PresentedModule,
    steps: usize,
    opts: &ResolveOptions,
) -> Result<Resolution> {
    let ring = quotient.ring();
    let (start_index, first) = match module {
        PresentedModule::Ideal(n) => {
            if n.ring() != ring {
                return Err(Error::RingMismatch);
            }
            let reps = n.mingens_mod(quotient.ideal());
            let target = FreeModule::new(vec![0]);
            let twists: Vec<i64> = reps.iter().map(|g| g.degree() as i64).collect();
            let source = FreeModule::new(twists);
            let entries = vec![reps];
            (0usize, GradedMatrix::new(ring, source, target, entries)?)
        }
        PresentedModule::Cokernel(p) => {
            if p.ring() != ring {
                return Err(Error::RingMismatch);
            }
            let cancelled = cancel_units(quotient, p)?;
            // prune redundant presentation columns
            let cols: Vec<ModuleVec> = (0..cancelled.cols())
                .map(|c| cancelled.column_vec(c))
                .collect();
            let kept = minimal_module_generators(
                quotient,
                cancelled.target().twists(),
                cols.into_iter().filter(|v| !v.is_zero()).collect(),
            );
            (1usize, matrix_from_kernel(quotient, cancelled.target(), kept)?)
        }
    };
    let mut matrices = vec![first];
    let mut complete = false;
    let mut capped = false;
    while start_index + matrices.len() <= steps {
        let step = start_index + matrices.len();
        let current = matrices.last().expect("nonempty");
        if current.cols() == 0 {
            complete = true;
        }
        let next = if complete {
            GradedMatrix::new(
                ring,
                FreeModule::new(vec![]),
                current.source().clone(),
                vec![Vec::new(); current.cols()],
            )?
        } else {
            let candidates = syzygies_mod(quotient, current);
            let kept = minimal_module_generators(quotient, current.source().twists(), candidates);
            if kept.len() > opts.rank_cap {
                capped = true;
                break;
            }
            let mat = matrix_from_kernel(quotient, current.source(), kept)?;
            if mat.cols() == 0 {
                complete = true;
            }
            // minimality: kernels of minimal maps cannot have unit coordinates
            debug_assert!(
                mat.entries().iter().flatten().all(|e| e.constant_part() == 0),
                "non-minimal kernel generator at step {step}"
            );
            mat
        };
        matrices.push(next);
    }
    let res = Resolution {
        quotient: quotient.clone(),
        start_index,
        matrices,
        complete,
        capped,
    };
    debug_assert!(verify_complex(&res), "consecutive matrices do not compose to zero");
    Ok(res)
}

/// Check `A_j * A_{j+1} = 0` over `R` for every consecutive pair.
pub fn verify_complex(res: &Resolution) -> bool {
    for w in res.matrices.windows(2) {
        let prod = w[0].compose(&w[1]);
        for row in prod.entries() {
            for e in row {
                if !res.quotient.reduce(e).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// `dim_k Tor_j(M, R/Q)` for `j = 0..=j_max`, computed as graded homology of
/// the resolution tensored with `R/Q`.
pub fn tor_dims(res: &Resolution, q: &Ideal, j_max: usize) -> Result<Vec<u64>> {
    let quotient = &res.quotient;
    let ring = quotient.ring();
    if q.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let total = quotient.ideal().sum(q)?;
    // the tensored complex has finite-dimensional pieces only in the
    // artinian case; find the top nonzero degree of S/(I+Q)
    let mut top = 0i64;
    {
        let mut d = 0u64;
        let mut gap = 0;
        loop {
            if total.hilbert_dim(d) == 0 {
                gap += 1;
                if gap > 1 {
                    break;
                }
            } else {
                top = d as i64;
                gap = 0;
            }
            d += 1;
            if d > 200 {
                return Err(Error::DegreeBoundExceeded(200));
            }
        }
    }
    let tgb = total.gb();
    // the homological maps are A_1, A_2, ...; for ideal resolutions the
    // augmentation row A_0 is excluded. F_0 is the target of A_1 and F_j the
    // source of A_j.
    if res.last_index() < j_max + 1 && !res.complete {
        return Err(Error::Invalid(format!(
            "resolution prefix too short for Tor_{j_max}: have index {}",
            res.last_index()
        )));
    }
    let module_twists = |j: usize| -> Vec<i64> {
        if j == 0 {
            return res
                .matrix(1)
                .map(|m| m.target().twists().to_vec())
                .unwrap_or_default();
        }
        res.matrix(j)
            .map(|m| m.source().twists().to_vec())
            .unwrap_or_default()
    };
    let rank_in_degree = |a: &GradedMatrix, d: i64| -> usize {
        let (mat, _, _) = linalg::map_in_degree(
            ring,
            tgb,
            a.entries(),
            a.source().twists(),
            a.target().twists(),
            d,
        );
        linalg::rank(&mat, ring.prime())
    };
    let mut dims = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let twists = module_twists(j);
        if twists.is_empty() {
            dims.push(0);
            continue;
        }
        let lo = *twists.iter().min().expect("nonempty");
        let hi = *twists.iter().max().expect("nonempty") + top;
        let mut dim = 0u64;
        for d in lo..=hi {
            // kernel of the degree-d piece of A_j; the map out of F_0 is zero
            let full = linalg::graded_basis(ring, tgb, &twists, d).len();
            let ker_dim = if j == 0 {
                full
            } else {
                let a = res.matrix(j).expect("map exists for nonzero module");
                full - rank_in_degree(a, d)
            };
            let im_dim = match res.matrix(j + 1) {
                Some(a) => rank_in_degree(a, d),
                None => 0,
            };
            dim += (ker_dim - im_dim) as u64;
        }
        dims.push(dim);
    }
    Ok(dims)
}

/// Best-effort check that two matrices agree up to row/column permutation and
/// nonzero scalar rescaling; only attempted on small matrices.
pub fn equal_up_to_permutation_and_scaling(a: &GradedMatrix, b: &GradedMatrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    if a.rows() > 5 || a.cols() > 5 {
        return false;
    }
    let ring = a.ring().clone();
    let perms = |n: usize| -> Vec<Vec<usize>> {
        fn rec(acc: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, used: &mut Vec<bool>, n: usize) {
            if cur.len() == n {
                acc.push(cur.clone());
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(acc, cur, used, n);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut acc = Vec::new();
        rec(&mut acc, &mut Vec::new(), &mut vec![false; n], n);
        acc
    };
    for rp in perms(a.rows()) {
        'cols: for cp in perms(a.cols()) {
            // solve for row/column scalars mu_r, lambda_c with
            // mu_r * lambda_c * a[rp[r]][cp[c]] = b[r][c]
            let mut mu: Vec<Option<u64>> = vec![None; a.rows()];
            let mut lambda: Vec<Option<u64>> = vec![None; a.cols()];
            let mut progress = true;
            while progress {
                progress = false;
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        let ae = a.entry(rp[r], cp[c]);
                        let be = b.entry(r, c);
                        if ae.is_zero() != be.is_zero() {
                            continue 'cols;
                        }
                        if ae.is_zero() {
                            continue;
                        }
                        // entries must be scalar multiples to begin with
                        let am = ae.monic();
                        let bm = be.monic();
                        if am != bm {
                            continue 'cols;
                        }
                        let ac = ae.leading_term().expect("nonzero").coeff;
                        let bc = be.leading_term().expect("nonzero").coeff;
                        let ratio = ring.mul(bc, ring.inv(ac));
                        match (mu[r], lambda[c]) {
                            (Some(m), Some(l)) => {
                                if ring.mul(m, l) != ratio {
                                    continue 'cols;
                                }
                            }
                            (Some(m), None) => {
                                lambda[c] = Some(ring.mul(ratio, ring.inv(m)));
                                progress = true;
                            }
                            (None, Some(l)) => {
                                mu[r] = Some(ring.mul(ratio, ring.inv(l)));
                                progress = true;
                            }
                            (None, None) => {
                                mu[r] = Some(1);
                                lambda[c] = Some(ratio);
                                progress = true;
                            }
                        }
                    }
                }
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::eq_mod;

    fn quotient(ring: &Ring, gens: &[&str]) -> QuotientRing {
        QuotientRing::new(ring, Ideal::parse(ring, gens).unwrap()).unwrap()
    }

    #[test]
    fn free_module_resolution_terminates() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = quotient(&r, &["x^2*y"]);
        // R^1 presented with no relations
        let pres = GradedMatrix::new(&r, FreeModule::new(vec![]), FreeModule::new(vec![0]), vec![
            vec![],
        ])
        .unwrap();
        let res = resolve(&q, &PresentedModule::Cokernel(pres), 4, &Default::default()).unwrap();
        assert!(res.is_complete());
        assert_eq!(res.betti_ranks(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn maximal_ideal_over_x2y_matches_displayed_start() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = quotient(&r, &["x^2*y"]);
        let m = PresentedModule::Ideal(Ideal::maximal(&r));
        let res = resolve(&q, &m, 5, &Default::default()).unwrap();
        assert!(res.is_minimal());
        // A_0 = [x y]
        let a0 = res.matrix(0).unwrap();
        assert_eq!(a0.rows(), 1);
        assert_eq!(a0.cols(), 2);
        // entry ideals (x, y) from step 1 on
        let nmax = Ideal::maximal(&r);
        for j in 1..=5 {
            let e = entry_ideal(&q, res.matrix(j).unwrap());
            assert!(eq_mod(&e, &nmax, q.ideal()).unwrap(), "step {j}");
        }
        // ranks 1, 2, 2, 2, ...
        assert_eq!(res.betti_ranks(), vec![1, 2, 2, 2, 2, 2, 2]);
        assert!(verify_complex(&res));
    }

    #[test]
    fn squared_parameter_ideal_doubles_ranks() {
        let r = Ring::with_vars(&["a", "b"]);
        let base = Ideal::parse(&r, &["a", "b^2"]).unwrap();
        let q = QuotientRing::new(&r, base.power(2).unwrap()).unwrap();
        // M = R/(a, b^2) as a cokernel of [a b^2]
        let pres = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 2]),
            FreeModule::new(vec![0]),
            vec![vec![
                r.parse_polynomial("a").unwrap(),
                r.parse_polynomial("b^2").unwrap(),
            ]],
        )
        .unwrap();
        let res = resolve(&q, &PresentedModule::Cokernel(pres), 4, &Default::default()).unwrap();
        assert_eq!(res.betti_ranks(), vec![1, 2, 4, 8, 16]);
        for j in 1..=4 {
            let e = entry_ideal(&q, res.matrix(j).unwrap());
            assert!(eq_mod(&e, &base, q.ideal()).unwrap(), "step {j}");
        }
        assert!(res.is_minimal());
    }

    #[test]
    fn monomial_cycle_entry_ideals() {
        let r = Ring::with_vars(&["x", "y", "z"]);
        let q = quotient(&r, &["x^2*y", "y^2*z", "z^2*x"]);
        let n = Ideal::parse(&r, &["x^2", "y^2", "z^2"]).unwrap();
        let res = resolve(&q, &PresentedModule::Ideal(n.clone()), 4, &Default::default()).unwrap();
        let e0 = entry_ideal(&q, res.matrix(0).unwrap());
        assert!(eq_mod(&e0, &n, q.ideal()).unwrap());
        let nmax = Ideal::maximal(&r);
        for j in 1..=4 {
            let e = entry_ideal(&q, res.matrix(j).unwrap());
            assert!(eq_mod(&e, &nmax, q.ideal()).unwrap(), "step {j}");
        }
    }

    #[test]
    fn column_ideal_reads_single_column() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = QuotientRing::ambient(&r);
        let m = PresentedModule::Ideal(Ideal::maximal(&r));
        let res = resolve(&q, &m, 1, &Default::default()).unwrap();
        let a0 = res.matrix(0).unwrap();
        let c0 = column_ideal(a0, 0).unwrap();
        let c1 = column_ideal(a0, 1).unwrap();
        let mut gens = vec![c0.to_string(), c1.to_string()];
        gens.sort();
        assert_eq!(gens, vec!["(x)", "(y)"]);
        assert!(column_ideal(a0, 2).is_err());
    }

    #[test]
    fn zero_matrix_entry_ideal_is_zero() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = QuotientRing::ambient(&r);
        let m = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1]),
            FreeModule::new(vec![0]),
            vec![vec![Polynomial::zero(&r)]],
        )
        .unwrap();
        assert!(entry_ideal(&q, &m).is_zero());
    }

    #[test]
    fn koszul_complex_over_ambient_ring() {
        // over S itself the maximal ideal resolves in finite length
        let r = Ring::with_vars(&["x", "y"]);
        let q = QuotientRing::ambient(&r);
        let res = resolve(&q, &PresentedModule::Ideal(Ideal::maximal(&r)), 4, &Default::default())
            .unwrap();
        assert!(res.is_complete());
        assert_eq!(res.betti_ranks(), vec![1, 2, 1, 0, 0, 0]);
    }

    #[test]
    fn tor_against_residue_field_gives_betti_numbers() {
        let r = Ring::with_vars(&["a", "b"]);
        let base = Ideal::parse(&r, &["a", "b^2"]).unwrap();
        let q = QuotientRing::new(&r, base.power(2).unwrap()).unwrap();
        let pres = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 2]),
            FreeModule::new(vec![0]),
            vec![vec![
                r.parse_polynomial("a").unwrap(),
                r.parse_polynomial("b^2").unwrap(),
            ]],
        )
        .unwrap();
        let res = resolve(&q, &PresentedModule::Cokernel(pres), 4, &Default::default()).unwrap();
        let dims = tor_dims(&res, &Ideal::maximal(&r), 3).unwrap();
        assert_eq!(dims, vec![1, 2, 4, 8]);
    }

    #[test]
    fn tor_of_free_module_vanishes_positively() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = quotient(&r, &["x^2*y"]);
        let pres = GradedMatrix::new(&r, FreeModule::new(vec![]), FreeModule::new(vec![0]), vec![
            vec![],
        ])
        .unwrap();
        let res = resolve(&q, &PresentedModule::Cokernel(pres), 4, &Default::default()).unwrap();
        let dims = tor_dims(&res, &Ideal::maximal(&r), 3).unwrap();
        assert_eq!(dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = quotient(&r, &["x^2", "x*y", "y^2"]);
        let zero = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1]),
            FreeModule::new(vec![0]),
            vec![vec![Polynomial::zero(&r)]],
        )
        .unwrap();
        let ker = syzygies_mod(&q, &zero);
        // the identity column generates the whole kernel over R
        assert!(ker
            .iter()
            .any(|v| v.component(0) == Some(&Polynomial::one(&r))));
    }

    #[test]
    fn rank_cap_stops_the_computation() {
        let r = Ring::with_vars(&["a", "b"]);
        let base = Ideal::parse(&r, &["a", "b^2"]).unwrap();
        let q = QuotientRing::new(&r, base.power(2).unwrap()).unwrap();
        let pres = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 2]),
            FreeModule::new(vec![0]),
            vec![vec![
                r.parse_polynomial("a").unwrap(),
                r.parse_polynomial("b^2").unwrap(),
            ]],
        )
        .unwrap();
        let opts = ResolveOptions { rank_cap: 6 };
        let res = resolve(&q, &PresentedModule::Cokernel(pres), 8, &opts).unwrap();
        assert!(res.is_capped());
        assert!(res.last_index() < 8);
    }

    #[test]
    fn resolution_serializes_with_ring_header() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = quotient(&r, &["x^2*y"]);
        let res = resolve(
            &q,
            &PresentedModule::Ideal(Ideal::maximal(&r)),
            3,
            &Default::default(),
        )
        .unwrap();
        let v = res.to_json();
        assert_eq!(v["ring"]["p"], 32003);
        assert_eq!(v["ring"]["vars"][1], "y");
        assert_eq!(v["steps"].as_array().unwrap().len(), 4);
        assert_eq!(v["steps"][0]["entries"][0][0], "y");
    }

    #[test]
    fn tor_of_residue_field_gives_its_betti_numbers() {
        let r = Ring::with_vars(&["x", "y"]);
        let q = quotient(&r, &["x^2*y"]);
        // k presented as the cokernel of [x y]
        let pres = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 1]),
            FreeModule::new(vec![0]),
            vec![vec![
                r.parse_polynomial("x").unwrap(),
                r.parse_polynomial("y").unwrap(),
            ]],
        )
        .unwrap();
        let res = resolve(&q, &PresentedModule::Cokernel(pres), 5, &Default::default()).unwrap();
        let dims = tor_dims(&res, &Ideal::maximal(&r), 4).unwrap();
        let ranks: Vec<u64> = res.betti_ranks()[..5].iter().map(|&x| x as u64).collect();
        assert_eq!(dims, ranks);
    }

    #[test]
    fn permutation_scaling_equality() {
        let r = Ring::with_vars(&["x", "y"]);
        let a = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 1]),
            FreeModule::new(vec![0, 0]),
            vec![
                vec![r.parse_polynomial("x").unwrap(), r.parse_polynomial("y").unwrap()],
                vec![Polynomial::zero(&r), r.parse_polynomial("x").unwrap()],
            ],
        )
        .unwrap();
        let b = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 1]),
            FreeModule::new(vec![0, 0]),
            vec![
                vec![r.parse_polynomial("2*x").unwrap(), Polynomial::zero(&r)],
                vec![r.parse_polynomial("2*y").unwrap(), r.parse_polynomial("3*x").unwrap()],
            ],
        )
        .unwrap();
        assert!(equal_up_to_permutation_and_scaling(&a, &b));
        let c = GradedMatrix::new(
            &r,
            FreeModule::new(vec![1, 2]),
            FreeModule::new(vec![0, 0]),
            vec![
                vec![r.parse_polynomial("x").unwrap(), r.parse_polynomial("y^2").unwrap()],
                vec![Polynomial::zero(&r), r.parse_polynomial("x^2").unwrap()],
            ],
        )
        .unwrap();
        assert!(!equal_up_to_permutation_and_scaling(&a, &c));
    }
}
