//! Reference implementations used only by the test suites. Nothing here
//! shares code with the engine's elimination or ansatz assembly.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bianchi_core::{Coeff, Monomial, MultiPoly, Rational, VectorField};
use num_traits::{One, Zero};

/// All exponent vectors of total degree `m` in `n` variables, any order.
pub fn exponent_vectors(n: usize, m: u32) -> Vec<Vec<u8>> {
    if n == 1 {
        return vec![vec![m as u8]];
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in exponent_vectors(n - 1, m - first) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn dense_rank(mut a: Vec<Vec<Rational>>) -> usize {
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip().unwrap();
        let pivot: Vec<Rational> = a[rank].iter().map(|v| v * &inv).collect();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * pv);
                }
            }
        }
        a[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Kernel of a dense matrix with `ncols` columns, as explicit vectors.
pub fn dense_kernel(mut a: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip().unwrap();
        let pivot: Vec<Rational> = a[rank].iter().map(|v| v * &inv).collect();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * pv);
                }
            }
        }
        a[rank] = pivot;
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[row][f];
            }
            v
        })
        .collect()
}

/// Degree-`m` first integrals of `field`, by dense elimination on the
/// coefficients of the full Lie derivative of each monomial.
pub fn oracle_first_integrals(field: &VectorField<Rational>, m: u32) -> Vec<MultiPoly<Rational>> {
    let n = field.nvars();
    let monomials: Vec<Monomial> = exponent_vectors(n, m).into_iter().map(Monomial::from_exponents).collect();
    let images: Vec<MultiPoly<Rational>> = monomials
        .iter()
        .map(|mono| field.lie_derivative(&MultiPoly::from_monomial(mono.clone(), Rational::one())))
        .collect();
    let mut rows: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
    for (c, img) in images.iter().enumerate() {
        for (mono, v) in img.terms() {
            rows.entry(mono.clone())
                .or_insert_with(|| vec![Rational::zero(); monomials.len()])[c] = v.clone();
        }
    }
    let kernel = dense_kernel(rows.into_values().collect(), monomials.len());
    kernel
        .iter()
        .map(|v| {
            MultiPoly::from_terms(
                n,
                monomials
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(mono, c)| (mono.clone(), c.clone())),
            )
        })
        .collect()
}

/// Coefficient matrix of `polys` over the union of their monomials.
fn coefficient_rows(polys: &[&MultiPoly<Rational>]) -> Vec<Vec<Rational>> {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect()
}

pub fn span_rank(polys: &[&MultiPoly<Rational>]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    dense_rank(coefficient_rows(polys))
}

/// Mutual membership: both lists span the same space.
pub fn same_span(a: &[MultiPoly<Rational>], b: &[MultiPoly<Rational>]) -> bool {
    let ra = span_rank(&a.iter().collect::<Vec<_>>());
    let rb = span_rank(&b.iter().collect::<Vec<_>>());
    let joint = span_rank(&a.iter().chain(b).collect::<Vec<_>>());
    ra == rb && ra == joint
}

/// `p` lies in the span of `basis`.
pub fn in_span(p: &MultiPoly<Rational>, basis: &[MultiPoly<Rational>]) -> bool {
    let r = span_rank(&basis.iter().collect::<Vec<_>>());
    r == span_rank(&basis.iter().chain(std::iter::once(p)).collect::<Vec<_>>())
}

/// `X(P)` at a point from the components and partials, without the engine's
/// Lie derivative.
pub fn lie_derivative_at<C: Coeff>(field: &VectorField<C>, p: &MultiPoly<C>, point: &[Rational]) -> C {
    (0..field.nvars()).fold(C::zero(), |acc, i| {
        let xi = field.component(i).evaluate(point).unwrap();
        let di = p.partial_derivative(i).evaluate(point).unwrap();
        acc + xi * di
    })
}

pub fn poly(text: &str) -> MultiPoly<Rational> {
    MultiPoly::parse(6, text).unwrap()
}

pub fn q(text: &str) -> Rational {
    text.parse().unwrap()
}
