//! Dense linear algebra over GF(p) and graded-piece machinery: standard
//! monomial bases of graded quotients, matrices of graded maps restricted to
//! a single degree, and kernel/image dimensions. Used by Tor computations and
//! by the brute-force exactness oracles in the test suites.

use crate::algebra::{monomials_of_degree, Monomial, Polynomial, Ring};
use crate::groebner::GroebnerBasis;
use std::collections::HashMap;

/// Row-reduce in place; returns the rank.
pub fn row_reduce(mat: &mut [Vec<u64>], p: u64) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let inv = |a: u64| -> u64 {
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let scale = inv(mat[rank][col]);
        for x in mat[rank].iter_mut() {
            *x = *x * scale % p;
        }
        for r in 0..rows {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in 0..cols {
                    let sub = factor * mat[rank][c] % p;
                    mat[r][c] = (mat[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank(mat: &[Vec<u64>], p: u64) -> usize {
    let mut copy: Vec<Vec<u64>> = mat.to_vec();
    row_reduce(&mut copy, p)
}

/// Basis of `ker(mat)` viewed as a map on column vectors.
pub fn kernel_basis(mat: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut work: Vec<Vec<u64>> = mat.to_vec();
    let rank = row_reduce(&mut work, p);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        if r < rank && work[r][c] != 0 {
            pivot_of_col[c] = Some(r);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                let coeff = work[pr][free];
                if coeff != 0 {
                    v[c] = p - coeff;
                }
            }
        }
        basis.push(v);
    }
    basis
}

/// Degree-`d` standard monomials of `S / ideal(gb)`: monomials not divisible
/// by any lead of the basis, grevlex-descending.
pub fn standard_monomials(ring: &Ring, gb: &GroebnerBasis, d: u64) -> Vec<Monomial> {
    let leads = gb.lead_monomials();
    monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect()
}

/// Basis of the degree-`d` graded piece of a free module over `S / ideal(gb)`
/// with the given twists: pairs `(position, standard monomial)`.
pub fn graded_basis(
    ring: &Ring,
    gb: &GroebnerBasis,
    twists: &[i64],
    d: i64,
) -> Vec<(usize, Monomial)> {
    let mut basis = Vec::new();
    for (pos, &t) in twists.iter().enumerate() {
        let local = d - t;
        if local < 0 {
            continue;
        }
        for m in standard_monomials(ring, gb, local as u64) {
            basis.push((pos, m));
        }
    }
    basis
}

/// Dense matrix of a graded map in one degree. `entries[r][c]` maps basis
/// vector `c` of the source to row `r` of the target; returns the matrix in
/// the `graded_basis` orderings (rows = target basis, cols = source basis).
#[allow(clippy::too_many_arguments)]
pub fn map_in_degree(
    ring: &Ring,
    gb: &GroebnerBasis,
    entries: &[Vec<Polynomial>],
    source_twists: &[i64],
    target_twists: &[i64],
    d: i64,
) -> (Vec<Vec<u64>>, usize, usize) {
    let src = graded_basis(ring, gb, source_twists, d);
    let tgt = graded_basis(ring, gb, target_twists, d);
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
    for (i, (pos, m)) in tgt.iter().enumerate() {
        index.insert((*pos, m.clone()), i);
    }
    let mut mat = vec![vec![0u64; src.len()]; tgt.len()];
    for (j, (cpos, m)) in src.iter().enumerate() {
        for (rpos, row_entries) in entries.iter().enumerate() {
            let e = &row_entries[*cpos];
            if e.is_zero() {
                continue;
            }
            let image = gb.normal_form(&e.mul_term(1, m));
            for t in image.terms() {
                let key = (rpos, t.mono.clone());
                let idx = *index
                    .get(&key)
                    .expect("normal form lands in the standard basis");
                mat[idx][j] = (mat[idx][j] + t.coeff) % ring.prime();
            }
        }
    }
    let (rows, cols) = (tgt.len(), src.len());
    (mat, rows, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::Ideal;

    #[test]
    fn rank_and_kernel_over_small_field() {
        let p = 7;
        let mat = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank(&mat, p), 1);
        let ker = kernel_basis(&mat, 3, p);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &mat {
                let s: u64 = row.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p;
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn standard_monomial_bases() {
        let r = Ring::with_vars(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let sm = standard_monomials(&r, i.gb(), 2);
        assert_eq!(sm.len(), 1); // y^2 only
        let zero = Ideal::zero(&r);
        assert_eq!(standard_monomials(&r, zero.gb(), 3).len(), 4);
    }

    #[test]
    fn graded_basis_respects_twists() {
        let r = Ring::with_vars(&["x", "y"]);
        let zero = Ideal::zero(&r);
        // free module R(-1) + R(-2): degree-2 piece has dims 2 + 1
        let basis = graded_basis(&r, zero.gb(), &[1, 2], 2);
        assert_eq!(basis.len(), 3);
    }
}
