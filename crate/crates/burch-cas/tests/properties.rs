//! Property tests for the arithmetic foundation and the ideal layer: ring
//! axioms on random polynomials, order axioms on random monomials, normal
//! form and colon laws, and membership agreement with the exponent-vector
//! oracle on monomial ideals.

mod common;

use burch_cas::algebra::{compare, grevlex, Monomial, Polynomial, Ring, Term};
use burch_cas::groebner::{syzygies, ModuleVec};
use burch_cas::ideals::colength;
use burch_cas::linalg;
use burch_cas::{Ideal, Length};
use common::{from_ideal, MonomialIdeal};
use proptest::prelude::*;
use std::cmp::Ordering;

const NVARS: usize = 3;

fn ring() -> Ring {
    Ring::with_vars(&["x", "y", "z"])
}

fn arb_monomial(max_deg: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_deg, NVARS).prop_map(|exps| Monomial::from_exps(&exps))
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((1u64..32003, arb_monomial(4)), 0..6).prop_map(|terms| {
        let r = ring();
        Polynomial::from_terms(
            &r,
            terms
                .into_iter()
                .map(|(coeff, mono)| Term { coeff, mono })
                .collect(),
        )
    })
}

fn arb_monomial_ideal() -> impl Strategy<Value = Vec<Vec<u16>>> {
    prop::collection::vec(
        prop::collection::vec(0u16..=3, NVARS).prop_filter("nonconstant", |e| {
            e.iter().any(|&x| x > 0)
        }),
        1..=5,
    )
}

fn ideal_of(gens: &[Vec<u16>]) -> Ideal {
    let r = ring();
    let polys = gens
        .iter()
        .map(|e| Polynomial::from_monomial(&r, Monomial::from_exps(e)))
        .collect();
    Ideal::new(&r, polys).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
    }

    #[test]
    fn multiplication_distributes(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn print_parse_round_trip(f in arb_poly()) {
        if !f.is_zero() {
            let r = ring();
            prop_assert_eq!(r.parse_polynomial(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn grevlex_is_total_and_multiplicative(
        a in arb_monomial(5),
        b in arb_monomial(5),
        c in arb_monomial(5),
    ) {
        // totality and antisymmetry
        let ab = compare(&a, &b).unwrap();
        let ba = compare(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        // degree compatibility
        if a.degree() < b.degree() {
            prop_assert_eq!(ab, Ordering::Less);
        }
        // multiplicativity
        prop_assert_eq!(grevlex(&a.mul(&c), &b.mul(&c)), ab);
        // transitivity through a sorted triple
        let mut sorted = vec![a, b, c];
        sorted.sort();
        prop_assert!(grevlex(&sorted[0], &sorted[2]) != Ordering::Greater);
    }

    #[test]
    fn normal_form_is_idempotent_and_detects_membership(
        gens in arb_monomial_ideal(),
        probe in arb_monomial(4),
    ) {
        let a = ideal_of(&gens);
        let oracle = MonomialIdeal::new(NVARS, gens);
        let r = ring();
        let f = Polynomial::from_monomial(&r, probe.clone());
        let nf = a.gb().normal_form(&f);
        prop_assert_eq!(a.gb().normal_form(&nf).clone(), nf.clone());
        prop_assert_eq!(nf.is_zero(), oracle.contains_mono(probe.exps()));
    }

    #[test]
    fn colon_laws(
        agens in arb_monomial_ideal(),
        bgens in arb_monomial_ideal(),
        cgens in arb_monomial_ideal(),
    ) {
        let a = ideal_of(&agens);
        let b = ideal_of(&bgens);
        let q = a.colon(&b).unwrap();
        // (A : B) * B inside A, and A inside (A : B)
        prop_assert!(a.contains(&q.product(&b).unwrap()).unwrap());
        prop_assert!(q.contains(&a).unwrap());
        // monotonicity: enlarging the divisor shrinks the colon
        let big = b.sum(&ideal_of(&cgens)).unwrap();
        let q_big = a.colon(&big).unwrap();
        prop_assert!(q.contains(&q_big).unwrap());
    }

    #[test]
    fn hilbert_agrees_with_oracle(gens in arb_monomial_ideal(), d in 0u64..6) {
        let a = ideal_of(&gens);
        let oracle = MonomialIdeal::new(NVARS, gens);
        prop_assert_eq!(a.hilbert_dim(d), oracle.hilbert_dim(d));
    }

    #[test]
    fn colength_of_self_is_zero(gens in arb_monomial_ideal()) {
        let a = ideal_of(&gens);
        prop_assert_eq!(colength(&a, &a).unwrap(), Length::Finite(0));
    }

    #[test]
    fn double_colon_is_idempotent(
        agens in arb_monomial_ideal(),
        ngens in arb_monomial_ideal(),
    ) {
        let a = ideal_of(&agens);
        let n = ideal_of(&ngens);
        let jprime = a.double_colon(&n).unwrap();
        let twice = a.double_colon(&jprime).unwrap();
        prop_assert!(jprime.equals(&twice).unwrap());
        // and the inner colons agree
        let inner = a.colon(&n).unwrap();
        let inner2 = a.colon(&jprime).unwrap();
        prop_assert!(inner.equals(&inner2).unwrap());
    }

    #[test]
    fn syzygies_of_random_monomial_matrices_are_complete(
        src_deg in prop::collection::vec(1u16..=3, 2..=4),
        picks in prop::collection::vec(prop::collection::vec(0usize..100, 2), 2..=4),
    ) {
        // random homogeneous monomial matrix over S with target twists [0, 1]
        let r = ring();
        let tgt = vec![0i64, 1];
        let cols = src_deg.len().min(picks.len());
        let mut columns = Vec::new();
        for c in 0..cols {
            let s = src_deg[c] as i64 + 1;
            let mut v = ModuleVec::zero(2);
            for (row, &t) in tgt.iter().enumerate() {
                let d = (s - t) as u64;
                let options = burch_cas::algebra::monomials_of_degree(NVARS, d);
                // leave roughly one entry in three zero
                let pick = picks[c][row] % (options.len() + options.len() / 2 + 1);
                if pick < options.len() {
                    v.set(row, Polynomial::from_monomial(&r, options[pick].clone()));
                }
            }
            columns.push(v);
        }
        let syz = syzygies(&r, 2, &columns);
        // every syzygy composes to zero against the matrix
        for s in &syz {
            for row in 0..2usize {
                let mut acc = Polynomial::zero(&r);
                for (c, col) in columns.iter().enumerate() {
                    if let (Some(f), Some(g)) = (s.component(c), col.component(row)) {
                        acc = acc.add(&f.mul(g));
                    }
                }
                prop_assert!(acc.is_zero());
            }
        }
        // degree-by-degree completeness against the linear-algebra oracle
        let zero = Ideal::zero(&r);
        let tgb = zero.gb();
        let src: Vec<i64> = src_deg.iter().take(cols).map(|&d| d as i64 + 1).collect();
        let entries: Vec<Vec<Polynomial>> = (0..2usize)
            .map(|row| {
                (0..cols)
                    .map(|c| {
                        columns[c]
                            .component(row)
                            .cloned()
                            .unwrap_or_else(|| Polynomial::zero(&r))
                    })
                    .collect()
            })
            .collect();
        for d in 0..=6i64 {
            let (mat, _, ncols) =
                linalg::map_in_degree(&r, tgb, &entries, &src, &tgt, d);
            let ker_dim = ncols - linalg::rank(&mat, r.prime());
            // span of the computed syzygies in the same degree
            let basis = linalg::graded_basis(&r, tgb, &src, d);
            let mut span_rows = Vec::new();
            for s in &syz {
                // s is homogeneous; multiply by every monomial reaching degree d
                let sdeg = s
                    .components()
                    .first()
                    .map(|(p, f)| f.degree() as i64 + src[*p]);
                let Some(sdeg) = sdeg else { continue };
                if sdeg > d {
                    continue;
                }
                for m in burch_cas::algebra::monomials_of_degree(NVARS, (d - sdeg) as u64) {
                    let mut rowvec = vec![0u64; basis.len()];
                    for (p, f) in s.components() {
                        let shifted = f.mul_term(1, &m);
                        for t in shifted.terms() {
                            let idx = basis
                                .iter()
                                .position(|(bp, bm)| bp == p && bm == &t.mono)
                                .expect("basis covers the free module");
                            rowvec[idx] = (rowvec[idx] + t.coeff) % r.prime();
                        }
                    }
                    span_rows.push(rowvec);
                }
            }
            let span_dim = if span_rows.is_empty() {
                0
            } else {
                linalg::rank(&span_rows, r.prime())
            };
            prop_assert_eq!(span_dim, ker_dim, "degree {}", d);
        }
    }

    #[test]
    fn sum_and_intersection_against_oracle(
        agens in arb_monomial_ideal(),
        bgens in arb_monomial_ideal(),
    ) {
        let a = ideal_of(&agens);
        let b = ideal_of(&bgens);
        let oa = MonomialIdeal::new(NVARS, agens);
        let ob = MonomialIdeal::new(NVARS, bgens);
        prop_assert!(from_ideal(&a.sum(&b).unwrap()).equals(&oa.sum(&ob)));
        let meet = a.intersect(&b).unwrap();
        let expected = oa.intersect(&ob);
        prop_assert!(common::from_computed(&meet).equals(&expected));
    }
}
