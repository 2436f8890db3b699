use super::bianchi::{build_f, ModelType, DIM};
use super::VectorField;
use crate::coefficients::{Coeff, Rational};
use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;

/// `G = prod_i x_i^{w_i} * factor`, with non-integer weights allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPowerIntegral<C: Coeff = Rational> {
    pub weights: Vec<C>,
    pub factor: MultiPoly<C>,
}

impl<C: Coeff> WeightedPowerIntegral<C> {
    /// `(x1 x2 x3)^((k-1)/2) * F` for the given model, with `k` from the ring.
    pub fn hamiltonian(model: ModelType, k: C) -> Self {
        let [n1, n2, n3] = model.structure_constants();
        let w = (k - C::one()).scale(&Rational::frac(1, 2));
        let mut weights = vec![C::zero(); DIM];
        weights[..3].fill(w);
        WeightedPowerIntegral {
            weights,
            factor: build_f(n1, n2, n3).expect("table constants are in range").lift(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedVerification<C: Coeff = Rational> {
    pub holds: bool,
    /// `factor * sum_i w_i X_i / x_i + X(factor)`; zero exactly when `holds`.
    pub witness: MultiPoly<C>,
}

/// Checks that a weighted-power function is a first integral of `field`.
///
/// Dividing `X(G)` by the non-polynomial prefactor leaves the polynomial
/// identity `factor * sum_i w_i (X_i / x_i) + X(factor) = 0`. Each `X_i`
/// with a nonzero weight must be divisible by `x_i`; that is checked.
pub fn verify_weighted_power_integral<C: Coeff>(
    field: &VectorField<C>,
    g: &WeightedPowerIntegral<C>,
) -> Result<WeightedVerification<C>> {
    let n = field.nvars();
    if g.weights.len() != n || g.factor.nvars() != n {
        return Err(Error::VariableCount {
            expected: n,
            actual: g.weights.len(),
        });
    }
    let mut log_derivative = MultiPoly::zero(n);
    for (i, w) in g.weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let quotient = field.component(i).div_by_var(i).ok_or(Error::NotDivisible {
            component: i + 1,
            variable: i + 1,
        })?;
        log_derivative = &log_derivative + &quotient.scale(w);
    }
    let witness = &(&g.factor * &log_derivative) + &field.lie_derivative(&g.factor);
    Ok(WeightedVerification {
        holds: witness.is_zero(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::KPoly;
    use crate::vectorfields::build_bianchi;
    use num_traits::Zero;

    #[test]
    fn hamiltonian_identity_symbolic() {
        for model in ModelType::ALL {
            let x = build_bianchi(model, KPoly::k());
            let h = WeightedPowerIntegral::hamiltonian(model, KPoly::k());
            let v = verify_weighted_power_integral(&x, &h).unwrap();
            assert!(v.holds, "{model}: witness {}", v.witness);
        }
    }

    #[test]
    fn zero_weights_fail_with_witness() {
        let x = build_bianchi(ModelType::IX, KPoly::k());
        let mut h = WeightedPowerIntegral::hamiltonian(ModelType::IX, KPoly::k());
        h.weights.iter_mut().for_each(|w| *w = KPoly::zero());
        let v = verify_weighted_power_integral(&x, &h).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, x.lie_derivative(&h.factor));
        assert!(!v.witness.is_zero());
    }

    #[test]
    fn non_divisible_component_is_an_error() {
        let x = build_bianchi(ModelType::II, Rational::frac(1, 2));
        let mut h = WeightedPowerIntegral::hamiltonian(ModelType::II, Rational::frac(1, 2));
        h.weights[3] = Rational::from(1);
        assert_eq!(
            verify_weighted_power_integral(&x, &h),
            Err(Error::NotDivisible { component: 4, variable: 4 })
        );
    }
}
