use num_traits::Zero;

use crate::coefficients::{Coeff, Rational};
use crate::multipoly::{monomials_in, monomials_of_degree, Monomial, MultiPoly};

/// All degree-`m` monomials in `n` variables, in descending graded-lex
/// order; one unknown coefficient per monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnsatzBasis {
    pub nvars: usize,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

impl AnsatzBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `sum_i coeffs[i] * monomials[i]`.
    pub fn polynomial<C: Coeff>(&self, coeffs: &[Rational]) -> MultiPoly<C> {
        assert_eq!(coeffs.len(), self.monomials.len(), "coefficient vector length");
        MultiPoly::from_terms(
            self.nvars,
            self.monomials
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), C::from_rational(c.clone()))),
        )
    }

    /// Coordinates of a homogeneous polynomial in this basis, or `None` if it
    /// has a monomial outside the basis.
    pub fn coordinates(&self, p: &MultiPoly<Rational>) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            let idx = self.monomials.binary_search_by(|probe| m.cmp(probe)).ok()?;
            out[idx] = c.clone();
        }
        Some(out)
    }
}

pub fn enumerate_monomials(nvars: usize, degree: u32) -> AnsatzBasis {
    AnsatzBasis {
        nvars,
        degree,
        monomials: monomials_of_degree(nvars, degree),
    }
}

/// Degree-`degree` ansatz supported on a subset of the variables.
pub fn enumerate_monomials_in(nvars: usize, vars: &[usize], degree: u32) -> AnsatzBasis {
    AnsatzBasis {
        nvars,
        degree,
        monomials: monomials_in(nvars, vars, degree),
    }
}
