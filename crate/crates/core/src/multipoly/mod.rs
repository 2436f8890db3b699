//! Sparse exact multivariate polynomials over a [`Coeff`] ring.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], so iteration, printing
//! and hashing follow the graded-lex order and are deterministic. Zero
//! coefficients are never stored.

mod monomial;
mod text;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use monomial::{default_names, monomials_in, monomials_of_degree, Monomial};

use crate::coefficients::{Coeff, KPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C = Rational> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The coordinate function `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_monomial(Monomial::var(nvars, index), C::one())
    }

    pub fn from_monomial(m: Monomial, c: C) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Splits into homogeneous parts, lowest degree first. Empty for zero.
    pub fn homogeneous_components(&self) -> Vec<MultiPoly<C>> {
        let mut parts: BTreeMap<u32, MultiPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| Self::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts.into_values().collect()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_terms(|m, v| Some((m.clone(), v.clone() * c.clone())))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map_terms(|m, v| Some((m.clone(), v.scale(r))))
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_terms(|t, v| Some((t.mul(m), v.clone() * c.clone())))
    }

    fn map_terms(&self, f: impl Fn(&Monomial, &C) -> Option<(Monomial, C)>) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().filter_map(|(m, c)| f(m, c)))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index` (0-based).
    pub fn partial_derivative(&self, index: usize) -> Self {
        assert!(index < self.nvars, "variable index out of range");
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter_map(|(m, c)| {
                let e = m.exponent(index);
                (e > 0).then(|| {
                    (
                        m.with_exponent(index, e - 1),
                        c.scale(&Rational::from(e as i64)),
                    )
                })
            }),
        )
    }

    /// Substitutes `x_index = value`; the variable count is unchanged.
    pub fn restrict_hyperplane(&self, index: usize, value: &Rational) -> Self {
        assert!(index < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e > 0 && value.is_zero() {
                continue;
            }
            out.add_term(m.with_exponent(index, 0), c.scale(&value.pow(e as u32)));
        }
        out
    }

    /// Substitutes a polynomial for variable `index`.
    pub fn substitute(&self, index: usize, value: &MultiPoly<C>) -> Self {
        assert_eq!(value.nvars, self.nvars, "variable count mismatch");
        let by_power = self.collect_in(index);
        // Horner in the substituted variable.
        let top = by_power.keys().next_back().copied().unwrap_or(0);
        let mut acc = Self::zero(self.nvars);
        for e in (0..=top).rev() {
            acc = &acc * value;
            if let Some(coeff) = by_power.get(&e) {
                acc = &acc + coeff;
            }
        }
        acc
    }

    /// Groups terms by the exponent of `index`; values are free of that variable.
    fn collect_in(&self, index: usize) -> BTreeMap<u8, MultiPoly<C>> {
        let mut out: BTreeMap<u8, MultiPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(index))
                .or_insert_with(|| Self::zero(self.nvars))
                .terms
                .insert(m.with_exponent(index, 0), c.clone());
        }
        out
    }

    /// Writes `p = f_l + (x_l - c0) * g` with `f_l = p|_{x_l = c0}`.
    ///
    /// Synthetic division by `x_l - c0` in the ring of polynomials in the
    /// remaining variables: the remainder is `f_l`, the quotient is `g`.
    pub fn lemma1_split(&self, index: usize, c0: &Rational) -> (Self, Self) {
        assert!(index < self.nvars, "variable index out of range");
        let by_power = self.collect_in(index);
        let Some(top) = by_power.keys().next_back().copied() else {
            return (Self::zero(self.nvars), Self::zero(self.nvars));
        };
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        // b_{j-1} = c_j + c0 * b_j, walking down from the top power.
        for e in (1..=top).rev() {
            carry = &carry.scale_rational(c0) + by_power.get(&e).unwrap_or(&Self::zero(self.nvars));
            let shift = Monomial::one(self.nvars).with_exponent(index, e - 1);
            quotient = &quotient + &carry.mul_term(&shift, &C::one());
        }
        let remainder = &carry.scale_rational(c0) + by_power.get(&0).unwrap_or(&Self::zero(self.nvars));
        (remainder, quotient)
    }

    /// Exact quotient by `x_index`, or `None` if some term lacks that variable.
    pub fn div_by_var(&self, index: usize) -> Option<Self> {
        let x = Monomial::var(self.nvars, index);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.checked_div(&x)?, c.clone());
        }
        Some(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::VariableCount {
                expected: self.nvars,
                actual: point.len(),
            });
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = Rational::one();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v = &v * &x.pow(e as u32);
                }
            }
            acc = acc + c.scale(&v);
        }
        Ok(acc)
    }

    /// Specializes `k` in every coefficient.
    pub fn at_k(&self, k: &Rational) -> MultiPoly<Rational> {
        self.map_coeffs(|c| c.at_k(k))
    }

    /// Splits into `(monomial, rational)` rows, one per power of `k`.
    pub fn k_expanded_terms(&self) -> impl Iterator<Item = ((Monomial, usize), Rational)> + '_ {
        self.terms.iter().flat_map(|(m, c)| {
            c.k_components()
                .into_iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
                .map(move |(i, r)| ((m.clone(), i), r))
        })
    }
}

impl MultiPoly<Rational> {
    pub fn lift<C: Coeff>(&self) -> MultiPoly<C> {
        self.map_coeffs(|c| C::from_rational(c.clone()))
    }

    /// Floating-point evaluation.
    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.to_f64(), |acc, (&e, &x)| acc * x.powi(e as i32))
            })
            .sum()
    }

    /// Divides by the leading coefficient so the leading term is monic.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip().expect("stored coefficients are nonzero");
                self.scale_rational(&inv)
            }
        }
    }
}

impl MultiPoly<KPoly> {
    /// Highest power of `k` appearing in any coefficient.
    pub fn k_degree(&self) -> usize {
        self.terms
            .values()
            .filter_map(KPoly::degree)
            .max()
            .unwrap_or(0)
    }
}

impl<'a, C: Coeff> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coeff> $trait for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Coeff> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = MultiPoly<Rational>;

    fn p(s: &str) -> P {
        P::parse(6, s).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x4 - x5") * &p("x4 + x5"), p("x4^2 - x5^2"));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let a = p("3*x1*x2 - 1/2*x6^3 + 7");
        let z = &a + &(-&a);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn f123_by_arithmetic() {
        let (x4, x5, x6) = (P::var(6, 3), P::var(6, 4), P::var(6, 5));
        let two = Rational::from(2);
        let f = &(&(&x4 * &x4) + &(&x5 * &x5)) + &(&x6 * &x6);
        let cross = &(&(&x4 * &x5) + &(&x4 * &x6)) + &(&x5 * &x6);
        let f123 = &f - &cross.scale_rational(&two);
        assert_eq!(f123, p("x4^2 + x5^2 + x6^2 - 2*x4*x5 - 2*x4*x6 - 2*x5*x6"));
    }

    #[test]
    fn partials() {
        assert_eq!(p("x4^2 - 2*x4*x5").partial_derivative(3), p("2*x4 - 2*x5"));
        assert!(p("x5 - x6").partial_derivative(0).is_zero());
        let f123 = p("x4^2 + x5^2 + x6^2 - 2*x4*x5 - 2*x4*x6 - 2*x5*x6");
        let sum = &(&f123.partial_derivative(3) + &f123.partial_derivative(4))
            + &f123.partial_derivative(5);
        assert_eq!(sum, p("-2*x4 - 2*x5 - 2*x6"));
    }

    #[test]
    fn restrictions() {
        assert_eq!(p("x5 - x6").restrict_hyperplane(0, &q("0")), p("x5 - x6"));
        assert_eq!(p("x1^2 + x1*x2 + x2^2").restrict_hyperplane(0, &q("0")), p("x2^2"));
        assert_eq!(p("x1^2 + x1*x2").restrict_hyperplane(0, &q("2")), p("4 + 2*x2"));
    }

    #[test]
    fn splitting_examples() {
        let (f, g) = p("x1^2 + x1*x2 + x2^2").lemma1_split(0, &q("0"));
        assert_eq!(f, p("x2^2"));
        assert_eq!(g, p("x1 + x2"));

        let cube = p("x5 - x6").pow(3);
        let (f, g) = cube.lemma1_split(0, &q("0"));
        assert_eq!(f, cube);
        assert!(g.is_zero());

        let (f, g) = P::zero(6).lemma1_split(2, &q("5"));
        assert!(f.is_zero() && g.is_zero());
    }

    #[test]
    fn splitting_with_nonzero_shift() {
        let poly = p("x1^3 - 2*x1*x2 + 5");
        let c0 = q("3/2");
        let (f, g) = poly.lemma1_split(0, &c0);
        assert_eq!(f, poly.restrict_hyperplane(0, &c0));
        let shift = &P::var(6, 0) - &P::constant(6, c0);
        assert_eq!(&f + &(&shift * &g), poly);
    }

    #[test]
    fn components() {
        assert_eq!(p("x1 + x1*x2").homogeneous_components(), vec![p("x1"), p("x1*x2")]);
        let h = p("x1*x2 - x3^2");
        assert_eq!(h.homogeneous_components(), vec![h.clone()]);
        assert!(P::zero(6).homogeneous_components().is_empty());
    }

    #[test]
    fn evaluation() {
        let f123 = p("x4^2 + x5^2 + x6^2 - 2*x4*x5 - 2*x4*x6 - 2*x5*x6");
        let ones: Vec<Rational> = [0, 0, 0, 1, 1, 1].iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(f123.evaluate(&ones).unwrap(), q("-3"));
        let pt: Vec<Rational> = [9, 9, 9, 0, 2, 2].iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(p("x5 - x6").evaluate(&pt).unwrap(), q("0"));
        let delta = p("x4^2 + x5^2 + x6^2 - x4*x5 - x4*x6 - x5*x6");
        let e4: Vec<Rational> = [0, 0, 0, 1, 0, 0].iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(delta.evaluate(&e4).unwrap(), q("1"));
        assert!(delta.evaluate(&e4[..3]).is_err());
    }

    #[test]
    fn delta_is_half_sum_of_squares() {
        let delta = p("x4^2 + x5^2 + x6^2 - x4*x5 - x4*x6 - x5*x6");
        let squares = &(&p("x4 - x5").pow(2) + &p("x4 - x6").pow(2)) + &p("x5 - x6").pow(2);
        assert_eq!(delta, squares.scale_rational(&q("1/2")));
    }

    #[test]
    fn substitution() {
        let poly = p("x1^2 + x1*x2");
        assert_eq!(poly.substitute(0, &p("-x2")), P::zero(6));
        assert_eq!(poly.substitute(0, &p("x3 + 1")), p("x3^2 + 2*x3 + 1 + x2*x3 + x2"));
    }

    #[test]
    fn division_by_variable() {
        assert_eq!(p("x1*x4 - x1^2").div_by_var(0), Some(p("x4 - x1")));
        assert_eq!(p("x1*x4 - x2").div_by_var(0), None);
    }

    fn poly(max_deg: u8) -> impl Strategy<Value = P> {
        prop::collection::vec(
            (prop::collection::vec(0..=max_deg, 6), -20i64..20, 1i64..6),
            0..8,
        )
        .prop_map(|terms| {
            P::from_terms(
                6,
                terms
                    .into_iter()
                    .map(|(e, a, b)| (Monomial::from_exponents(e), Rational::frac(a, b))),
            )
        })
    }

    proptest! {
        #[test]
        fn split_round_trip(f in poly(3), l in 0usize..6, c in -3i64..4) {
            let c0 = Rational::from(c);
            let (fl, g) = f.lemma1_split(l, &c0);
            prop_assert!(fl.terms().all(|(m, _)| m.exponent(l) == 0));
            let shift = &P::var(6, l) - &P::constant(6, c0);
            prop_assert_eq!(&fl + &(&shift * &g), f);
        }

        #[test]
        fn components_reconstruct(f in poly(3)) {
            let parts = f.homogeneous_components();
            let mut degrees: Vec<u32> = parts.iter().map(|c| c.total_degree().unwrap()).collect();
            prop_assert!(parts.iter().all(MultiPoly::is_homogeneous));
            let n = degrees.len();
            degrees.dedup();
            prop_assert_eq!(degrees.len(), n);
            let sum = parts.iter().fold(P::zero(6), |acc, c| &acc + c);
            prop_assert_eq!(sum, f);
        }

        #[test]
        fn restriction_is_a_ring_map(a in poly(2), b in poly(2), l in 0usize..6, c in -2i64..3) {
            let c0 = Rational::from(c);
            prop_assert_eq!(
                (&a + &b).restrict_hyperplane(l, &c0),
                &a.restrict_hyperplane(l, &c0) + &b.restrict_hyperplane(l, &c0)
            );
            prop_assert_eq!(
                (&a * &b).restrict_hyperplane(l, &c0),
                &a.restrict_hyperplane(l, &c0) * &b.restrict_hyperplane(l, &c0)
            );
        }

        #[test]
        fn text_round_trip(f in poly(3)) {
            prop_assert_eq!(P::parse(6, &f.to_string()).unwrap(), f);
        }
    }
}
