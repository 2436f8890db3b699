//! Polynomial vector fields: the Bianchi class A systems, Lie derivatives
//! and exact checks of weighted-power first integrals.

mod bianchi;
mod field;
pub mod hamiltonian;
mod weighted;

pub use bianchi::{build_bianchi, build_f, BianchiField, BianchiModel, KMode, ModelType, DIM};
pub use field::VectorField;
pub use weighted::{verify_weighted_power_integral, WeightedPowerIntegral, WeightedVerification};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{KPoly, Rational};
    use crate::multipoly::MultiPoly;
    use num_traits::One;
    use proptest::prelude::*;

    type P = MultiPoly<Rational>;

    fn p(s: &str) -> P {
        P::parse(DIM, s).unwrap()
    }

    #[test]
    fn known_linear_integrals() {
        let half = Rational::frac(1, 2);
        let ii = build_bianchi(ModelType::II, half.clone());
        assert!(ii.lie_derivative(&p("x5 - x6")).is_zero());
        for k in KMode::default_samples() {
            let i = build_bianchi(ModelType::I, k);
            assert!(i.lie_derivative(&p("x4 - x5")).is_zero());
            assert!(i.lie_derivative(&p("x4 - x6")).is_zero());
        }
    }

    #[test]
    fn ix_x4_is_not_conserved() {
        let half = Rational::frac(1, 2);
        let ix = build_bianchi(ModelType::IX, half);
        let d = ix.lie_derivative(&p("x4"));
        let f = build_f(1, 1, 1).unwrap();
        let expected = &p("x1^2 - x1*x2 - x1*x3") + &f.scale_rational(&Rational::frac(-1, 8));
        assert_eq!(d, expected);
        assert!(!d.is_zero());
    }

    #[test]
    fn monomial_lie_derivative_agrees_with_general() {
        let x = build_bianchi(ModelType::VIII, KPoly::k());
        for m in crate::multipoly::monomials_of_degree(DIM, 3) {
            let poly = MultiPoly::<KPoly>::from_monomial(m.clone(), KPoly::one());
            assert_eq!(x.lie_derivative_of_monomial(&m), x.lie_derivative(&poly));
        }
    }

    fn homogeneous_poly(degree: u32) -> impl Strategy<Value = P> {
        let basis = crate::multipoly::monomials_of_degree(DIM, degree);
        let n = basis.len();
        prop::collection::vec((0..n, -9i64..10), 1..6).prop_map(move |picks| {
            P::from_terms(DIM, picks.into_iter().map(|(i, c)| (basis[i].clone(), Rational::from(c))))
        })
    }

    fn any_model() -> impl Strategy<Value = ModelType> {
        prop::sample::select(ModelType::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn lie_derivative_raises_degree_by_one(
            (model, deg, f) in (any_model(), 1u32..=5)
                .prop_flat_map(|(m, d)| (Just(m), Just(d), homogeneous_poly(d)))
        ) {
            let x = build_bianchi(model, Rational::frac(1, 2));
            let d = x.lie_derivative(&f);
            prop_assert!(d.is_homogeneous());
            if !d.is_zero() {
                prop_assert_eq!(d.total_degree(), Some(deg + 1));
            }
        }

        #[test]
        fn first_integral_iff_components_are(model in any_model(), a in homogeneous_poly(1), b in homogeneous_poly(2)) {
            let x = build_bianchi(model, Rational::frac(2, 3));
            let f = &a + &b;
            let whole = x.lie_derivative(&f).is_zero();
            let parts = f.homogeneous_components().iter().all(|c| x.lie_derivative(c).is_zero());
            prop_assert_eq!(whole, parts);
            // Also on a known integral plus a non-integral.
            let k = p("x5 - x6");
            if model == ModelType::II {
                let g = &k + &k.pow(2);
                prop_assert!(x.lie_derivative(&g).is_zero());
            }
        }
    }
}
