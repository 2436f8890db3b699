//! Exact scalar arithmetic: arbitrary-precision rationals and dense
//! polynomials in the equation-of-state parameter `k`.
//!
//! Both implement [`Coeff`], the coefficient-ring interface that the sparse
//! polynomial engine is generic over. Fixed-`k` computations use
//! [`Rational`]; symbolic-`k` computations use [`KPoly`] and demand that
//! identities hold for every `k`.

mod kpoly;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use kpoly::KPoly;
pub(crate) use kpoly::split_signed_terms;
pub use rational::{ArithOp, Rational};

use crate::error::Result;

/// Coefficient ring for [`crate::multipoly::MultiPoly`].
pub trait Coeff:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn from_rational(r: Rational) -> Self;

    /// Multiply by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;

    /// Coefficients of `k^0, k^1, ...`; a single entry for a rational.
    fn k_components(&self) -> Vec<Rational>;

    /// Specialize at a fixed value of `k`.
    fn at_k(&self, k: &Rational) -> Rational;

    /// Whether the value needs parentheses when printed as a product factor.
    fn is_compound(&self) -> bool;

    /// Returns `(is_negative, magnitude)` for sign-aware printing, when the
    /// value has a well-defined sign.
    fn split_sign(&self) -> Option<(bool, Self)>;

    fn parse_coeff(s: &str) -> Result<Self>;
}

impl Coeff for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn k_components(&self) -> Vec<Rational> {
        vec![self.clone()]
    }

    fn at_k(&self, _k: &Rational) -> Rational {
        self.clone()
    }

    fn is_compound(&self) -> bool {
        false
    }

    fn split_sign(&self) -> Option<(bool, Self)> {
        Some((self.is_negative(), self.abs()))
    }

    fn parse_coeff(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl Coeff for KPoly {
    fn from_rational(r: Rational) -> Self {
        KPoly::constant(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        KPoly::scale(self, r)
    }

    fn k_components(&self) -> Vec<Rational> {
        self.coeffs().to_vec()
    }

    fn at_k(&self, k: &Rational) -> Rational {
        self.eval(k)
    }

    fn is_compound(&self) -> bool {
        self.degree().is_some_and(|d| d > 0)
    }

    fn split_sign(&self) -> Option<(bool, Self)> {
        match self.degree() {
            Some(0) => {
                let c = &self.coeffs()[0];
                Some((c.is_negative(), KPoly::constant(c.abs())))
            }
            None => Some((false, self.clone())),
            _ => None,
        }
    }

    fn parse_coeff(s: &str) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1..=i64::MAX).prop_map(|(p, q)| Rational::frac(p, q))
    }

    fn kpoly() -> impl Strategy<Value = KPoly> {
        prop::collection::vec((-50i64..50, 1i64..20), 0..5)
            .prop_map(|cs| KPoly::new(cs.into_iter().map(|(p, q)| Rational::frac(p, q)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in rational(), b in rational(), c in rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }
    }

    proptest! {
        #[test]
        fn kpoly_ring_axioms(a in kpoly(), b in kpoly(), c in kpoly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn kpoly_degree_additive(a in kpoly(), b in kpoly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        }

        #[test]
        fn kpoly_eval_is_multiplicative(a in kpoly(), b in kpoly(), k in rational()) {
            prop_assert_eq!((&a * &b).eval(&k), &a.eval(&k) * &b.eval(&k));
        }
    }
}
