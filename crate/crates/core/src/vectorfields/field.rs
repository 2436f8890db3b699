use crate::coefficients::{Coeff, KPoly, Rational};
use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly};

/// Polynomial vector field `x' = X(x)`; component `i` is `dx_i/dt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField<C: Coeff = Rational> {
    components: Vec<MultiPoly<C>>,
}

impl<C: Coeff> VectorField<C> {
    pub fn new(components: Vec<MultiPoly<C>>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|c| c.nvars() != n) {
            return Err(Error::VariableCount {
                expected: n,
                actual: bad.nvars(),
            });
        }
        Ok(VectorField { components })
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly<C>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &MultiPoly<C> {
        &self.components[i]
    }

    /// Common degree of all components, if the field is homogeneous.
    pub fn homogeneity_degree(&self) -> Option<u32> {
        let mut degree = None;
        for c in &self.components {
            if !c.is_homogeneous() {
                return None;
            }
            match (degree, c.total_degree()) {
                (_, None) => {}
                (None, Some(d)) => degree = Some(d),
                (Some(a), Some(b)) if a != b => return None,
                _ => {}
            }
        }
        degree
    }

    pub fn scale(&self, r: &Rational) -> Self {
        VectorField {
            components: self.components.iter().map(|c| c.scale_rational(r)).collect(),
        }
    }

    /// `X(F) = sum_i X_i * dF/dx_i`.
    pub fn lie_derivative(&self, f: &MultiPoly<C>) -> MultiPoly<C> {
        assert_eq!(f.nvars(), self.nvars(), "variable count mismatch");
        let mut acc = MultiPoly::zero(self.nvars());
        for (i, xi) in self.components.iter().enumerate() {
            let d = f.partial_derivative(i);
            if !d.is_zero() {
                acc = &acc + &(xi * &d);
            }
        }
        acc
    }

    /// Lie derivative of a single monomial `x^a`: `sum_i a_i x^(a - e_i) X_i`.
    pub fn lie_derivative_of_monomial(&self, m: &Monomial) -> MultiPoly<C> {
        let mut acc = MultiPoly::zero(self.nvars());
        for (i, xi) in self.components.iter().enumerate() {
            let e = m.exponent(i);
            if e == 0 || xi.is_zero() {
                continue;
            }
            let shifted = m
                .checked_div(&Monomial::var(self.nvars(), i))
                .expect("exponent is positive");
            acc = &acc + &xi.mul_term(&shifted, &C::from_rational(Rational::from(e as i64)));
        }
        acc
    }

    /// Specializes a symbolic field at a fixed `k`.
    pub fn at_k(&self, k: &Rational) -> VectorField<Rational> {
        VectorField {
            components: self.components.iter().map(|c| c.at_k(k)).collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<C>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }
}

impl VectorField<Rational> {
    pub fn lift<C: Coeff>(&self) -> VectorField<C> {
        VectorField {
            components: self.components.iter().map(MultiPoly::lift).collect(),
        }
    }
}

impl VectorField<KPoly> {
    pub fn k_degree(&self) -> usize {
        self.components.iter().map(MultiPoly::k_degree).max().unwrap_or(0)
    }
}
