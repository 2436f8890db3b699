use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::ansatz::AnsatzBasis;
use crate::coefficients::{Coeff, Rational};
use crate::multipoly::{Monomial, MultiPoly};
use crate::vectorfields::VectorField;

/// Sparse row: `(column, nonzero value)` pairs in increasing column order.
pub type SparseRow = Vec<(usize, Rational)>;

/// Homogeneous linear system `A c = 0` over the rationals.
///
/// Each row is labelled by the output monomial and the power of `k` it
/// collects; in fixed-`k` mode the power is always zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub ncols: usize,
    pub rows: Vec<SparseRow>,
    pub row_labels: Vec<(Monomial, usize)>,
}

impl LinearSystem {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn zero(ncols: usize) -> Self {
        LinearSystem {
            ncols,
            rows: Vec::new(),
            row_labels: Vec::new(),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.rows[row]
            .iter()
            .find(|(c, _)| *c == col)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![Rational::zero(); self.ncols];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    /// Builds the system whose column `c` is the coefficient vector of
    /// `images[c]`, split by monomial and by power of `k`.
    pub fn from_images<C: Coeff>(images: &[MultiPoly<C>]) -> Self {
        let mut by_row: BTreeMap<(Monomial, usize), SparseRow> = BTreeMap::new();
        for (col, image) in images.iter().enumerate() {
            for (key, value) in image.k_expanded_terms() {
                by_row.entry(key).or_default().push((col, value));
            }
        }
        // Descending monomial order, then increasing power of k.
        let mut entries: Vec<_> = by_row.into_iter().collect();
        entries.sort_by(|(a, _), (b, _)| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (row_labels, rows) = entries.into_iter().unzip();
        LinearSystem {
            ncols: images.len(),
            rows,
            row_labels,
        }
    }
}

/// The annihilation system `X(sum_c a_c m_c) = 0` for the degree-`m` ansatz.
pub fn assemble_system<C: Coeff>(field: &VectorField<C>, basis: &AnsatzBasis) -> LinearSystem {
    let images: Vec<MultiPoly<C>> = basis
        .monomials
        .par_iter()
        .map(|m| field.lie_derivative_of_monomial(m))
        .collect();
    LinearSystem::from_images(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::KPoly;
    use crate::engine::ansatz::enumerate_monomials;
    use crate::vectorfields::{build_bianchi, ModelType};

    #[test]
    fn entries_are_lie_derivative_coefficients() {
        let x = build_bianchi(ModelType::IX, Rational::frac(1, 2));
        let basis = enumerate_monomials(6, 2);
        let sys = assemble_system(&x, &basis);
        assert_eq!(sys.ncols, 21);
        for (c, m) in basis.monomials.iter().enumerate() {
            let image = x.lie_derivative(&MultiPoly::from_monomial(m.clone(), Rational::from(1)));
            for (r, (label, _)) in sys.row_labels.iter().enumerate() {
                assert_eq!(sys.entry(r, c), image.coefficient(label));
            }
        }
        // C(8, 3) = 56 cubic monomials bound the row count.
        assert!(sys.nrows() <= 56);
    }

    #[test]
    fn symbolic_rows_split_by_power_of_k() {
        let x = build_bianchi(ModelType::II, KPoly::k());
        let basis = enumerate_monomials(6, 2);
        let sys = assemble_system(&x, &basis);
        assert!(sys.row_labels.iter().any(|(_, p)| *p == 1));
        assert!(sys.row_labels.iter().all(|(_, p)| *p <= 1));
        assert!(sys.nrows() <= 56 * 2);
    }
}
