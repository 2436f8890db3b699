//! Exact nullspaces of sparse rational systems.
//!
//! Two interchangeable solvers are registered by name:
//!
//! - `fraction-free`: rows are scaled to primitive integer vectors and
//!   eliminated with cross-multiplication (`a*r - b*p`) followed by content
//!   removal; fractions only appear in the final normalization to reduced
//!   echelon form.
//! - `gauss-jordan`: textbook reduction over the rationals with the pivot
//!   scaled to one immediately.
//!
//! Both pivot on the first row (in row order) with a nonzero entry in the
//! current column. The returned basis is always brought to reduced echelon
//! form with leading ones, so it is independent of the solver.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::registry::{Named, Registry};
use super::system::{LinearSystem, SparseRow};
use crate::coefficients::Rational;

/// Basis of `ker A` in reduced echelon form with leading ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullspaceBasis {
    pub ncols: usize,
    pub vectors: Vec<Vec<Rational>>,
}

impl NullspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Canonical basis of the span of `vectors`.
    pub fn from_spanning_set(ncols: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let rows: Vec<SparseRow> = vectors.into_iter().map(|v| to_sparse(&v)).collect();
        let reduced = rref_rational(rows, ncols);
        NullspaceBasis {
            ncols,
            vectors: reduced.iter().map(|r| to_dense(r, ncols)).collect(),
        }
    }

    fn pivot(v: &[Rational]) -> usize {
        v.iter().position(|c| !c.is_zero()).expect("basis vectors are nonzero")
    }

    /// Exact membership test, using the leading ones of the echelon basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length");
        let mut residual = v.to_vec();
        for b in &self.vectors {
            let p = Self::pivot(b);
            let factor = residual[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, bv) in residual.iter_mut().zip(b) {
                if !bv.is_zero() {
                    *r = &*r - &(&factor * bv);
                }
            }
        }
        residual.iter().all(Zero::is_zero)
    }

    pub fn same_span(&self, other: &NullspaceBasis) -> bool {
        self.ncols == other.ncols
            && self.dim() == other.dim()
            && other.vectors.iter().all(|v| self.contains(v))
    }
}

/// A strategy for computing exact nullspaces.
pub trait NullspaceSolver: Named + Send + Sync {
    /// Reduced row echelon form of the system (pivot rows only, leading ones).
    fn reduce(&self, system: &LinearSystem) -> Vec<SparseRow>;

    fn nullspace(&self, system: &LinearSystem) -> NullspaceBasis {
        kernel_from_rref(&self.reduce(system), system.ncols)
    }

    fn rank(&self, system: &LinearSystem) -> usize {
        self.reduce(system).len()
    }
}

pub fn solver_registry() -> Registry<dyn NullspaceSolver> {
    let mut reg: Registry<dyn NullspaceSolver> = Registry::new("nullspace solver");
    reg.register(Arc::new(FractionFree));
    reg.register(Arc::new(GaussJordan));
    reg
}

/// Builds the free-variable kernel basis from an RREF and canonicalizes it.
fn kernel_from_rref(rref: &[SparseRow], ncols: usize) -> NullspaceBasis {
    let mut is_pivot = vec![false; ncols];
    for row in rref {
        is_pivot[row[0].0] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for row in rref {
                if let Some((_, val)) = row.iter().find(|(c, _)| *c == f) {
                    v[row[0].0] = -val;
                }
            }
            v
        })
        .collect();
    NullspaceBasis::from_spanning_set(ncols, vectors)
}

fn to_sparse(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn to_dense(row: &SparseRow, ncols: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ncols];
    for (c, v) in row {
        out[*c] = v.clone();
    }
    out
}

/// `lhs + factor * rhs` on sparse rows, dropping cancelled entries.
fn axpy<T, F>(lhs: &[(usize, T)], rhs: &[(usize, T)], combine: F) -> Vec<(usize, T)>
where
    T: Clone + Zero,
    F: Fn(Option<&T>, Option<&T>) -> T,
{
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let (mut i, mut j) = (0, 0);
    while i < lhs.len() || j < rhs.len() {
        let (col, v) = match (lhs.get(i), rhs.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, combine(Some(&a.1), Some(&b.1)))
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                i += 1;
                (a.0, combine(Some(&a.1), None))
            }
            (Some(a), None) => {
                i += 1;
                (a.0, combine(Some(&a.1), None))
            }
            (_, Some(b)) => {
                j += 1;
                (b.0, combine(None, Some(&b.1)))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn lead_col<T>(row: &[(usize, T)]) -> usize {
    row[0].0
}

/// Textbook Gauss-Jordan over the rationals.
pub fn rref_rational(rows: Vec<SparseRow>, ncols: usize) -> Vec<SparseRow> {
    let mut active: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: Vec<SparseRow> = Vec::new();
    for col in 0..ncols {
        if active.is_empty() {
            break;
        }
        let Some(pos) = active.iter().position(|r| lead_col(r) == col) else {
            continue;
        };
        let mut pivot = active.remove(pos);
        let inv = pivot[0].1.recip().expect("pivot is nonzero");
        for (_, v) in pivot.iter_mut() {
            *v = &*v * &inv;
        }
        for row in active.iter_mut().filter(|r| lead_col(r) == col) {
            let factor = row[0].1.clone();
            *row = axpy(row, &pivot, |a, b| match (a, b) {
                (Some(a), Some(b)) => a - &(&factor * b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -(&factor * b),
                (None, None) => unreachable!(),
            });
        }
        active.retain(|r| !r.is_empty());
        pivots.push(pivot);
    }
    // Back substitution: clear each pivot column above its pivot.
    for i in (0..pivots.len()).rev() {
        let (head, tail) = pivots.split_at_mut(i);
        let pivot = &tail[0];
        let col = lead_col(pivot);
        for row in head.iter_mut() {
            let Some(factor) = row.iter().find(|(c, _)| *c == col).map(|(_, v)| v.clone()) else {
                continue;
            };
            *row = axpy(row, pivot, |a, b| match (a, b) {
                (Some(a), Some(b)) => a - &(&factor * b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -(&factor * b),
                (None, None) => unreachable!(),
            });
        }
    }
    pivots
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GaussJordan;

impl Named for GaussJordan {
    fn name(&self) -> &'static str {
        "gauss-jordan"
    }
}

impl NullspaceSolver for GaussJordan {
    fn reduce(&self, system: &LinearSystem) -> Vec<SparseRow> {
        rref_rational(system.rows.clone(), system.ncols)
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Scales a rational row to a primitive integer row with positive lead.
fn to_primitive_integer(row: &SparseRow) -> IntRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    if row.is_empty() {
        return row;
    }
    let mut g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// `a * row - b * pivot` where `a`, `b` are the entries at `col`, then made
/// primitive. Eliminates `col` from `row`.
fn cross_eliminate(row: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let a = pivot
        .iter()
        .find(|(c, _)| *c == col)
        .map(|(_, v)| v.clone())
        .expect("pivot has an entry in its own column");
    let Some(b) = row.iter().find(|(c, _)| *c == col).map(|(_, v)| v.clone()) else {
        return row.clone();
    };
    let g = a.gcd(&b);
    let (a, b) = (&a / &g, &b / &g);
    let combined = axpy(row, pivot, |r, p| match (r, p) {
        (Some(r), Some(p)) => &a * r - &b * p,
        (Some(r), None) => &a * r,
        (None, Some(p)) => -(&b * p),
        (None, None) => unreachable!(),
    });
    make_primitive(combined)
}

/// Division-free elimination with content removal.
#[derive(Debug, Clone, Copy, Default)]
pub struct FractionFree;

impl Named for FractionFree {
    fn name(&self) -> &'static str {
        "fraction-free"
    }
}

impl NullspaceSolver for FractionFree {
    fn reduce(&self, system: &LinearSystem) -> Vec<SparseRow> {
        let mut active: Vec<IntRow> = system
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(to_primitive_integer)
            .collect();
        let mut pivots: Vec<IntRow> = Vec::new();
        for col in 0..system.ncols {
            if active.is_empty() {
                break;
            }
            let Some(pos) = active.iter().position(|r| lead_col(r) == col) else {
                continue;
            };
            let pivot = active.remove(pos);
            for row in active.iter_mut().filter(|r| lead_col(r) == col) {
                *row = cross_eliminate(row, &pivot, col);
            }
            active.retain(|r| !r.is_empty());
            pivots.push(pivot);
        }
        for i in (0..pivots.len()).rev() {
            let (head, tail) = pivots.split_at_mut(i);
            let pivot = &tail[0];
            let col = lead_col(pivot);
            for row in head.iter_mut() {
                *row = cross_eliminate(row, pivot, col);
            }
        }
        // Final normalization: leading ones.
        pivots
            .into_iter()
            .map(|row| {
                let lead = Rational::from(row[0].1.clone());
                row.into_iter()
                    .map(|(c, v)| (c, Rational::from(v).checked_div(&lead).expect("lead is nonzero")))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::Monomial;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn system(dense: &[&[i64]]) -> LinearSystem {
        let ncols = dense.first().map_or(0, |r| r.len());
        LinearSystem {
            ncols,
            rows: dense
                .iter()
                .map(|r| to_sparse(&r.iter().map(|&v| q(v)).collect::<Vec<_>>()))
                .collect(),
            row_labels: vec![(Monomial::one(1), 0); dense.len()],
        }
    }

    #[test]
    fn empty_system_has_identity_kernel() {
        let sys = LinearSystem::zero(3);
        for solver in solver_registry().names() {
            let ns = solver_registry().get(solver).unwrap().nullspace(&sys);
            assert_eq!(ns.dim(), 3);
            for (i, v) in ns.vectors.iter().enumerate() {
                let expected: Vec<Rational> = (0..3).map(|j| q((i == j) as i64)).collect();
                assert_eq!(v, &expected);
            }
        }
        let zero_rows = system(&[&[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(FractionFree.nullspace(&zero_rows).dim(), 3);
    }

    #[test]
    fn small_kernel() {
        // x + y + z = 0, 2x - z = 0  =>  kernel spanned by (1, -3, 2), canonical (1, -3, 2)
        let sys = system(&[&[1, 1, 1], &[2, 0, -1]]);
        for solver in [&FractionFree as &dyn NullspaceSolver, &GaussJordan] {
            let ns = solver.nullspace(&sys);
            assert_eq!(ns.vectors, vec![vec![q(1), q(-3), q(2)]]);
            assert_eq!(solver.rank(&sys), 2);
        }
    }

    #[test]
    fn canonical_basis_has_leading_ones() {
        let sys = system(&[&[0, 1, 1, 1, 0]]);
        let ns = FractionFree.nullspace(&sys);
        assert_eq!(ns.dim(), 4);
        let mut last_pivot = None;
        for v in &ns.vectors {
            let p = NullspaceBasis::pivot(v);
            assert!(v[p].is_one());
            assert!(last_pivot.is_none_or(|lp| p > lp));
            for other in &ns.vectors {
                if other != v {
                    assert!(other[p].is_zero());
                }
            }
            last_pivot = Some(p);
        }
    }

    #[test]
    fn membership() {
        let ns = NullspaceBasis::from_spanning_set(3, vec![vec![q(1), q(1), q(0)]]);
        assert!(ns.contains(&[q(2), q(2), q(0)]));
        assert!(!ns.contains(&[q(1), q(0), q(0)]));
        assert!(ns.contains(&[q(0), q(0), q(0)]));
    }

    #[test]
    fn unknown_solver() {
        assert!(solver_registry().get("qr").is_err());
        assert_eq!(solver_registry().default_entry().name(), "fraction-free");
    }
}
