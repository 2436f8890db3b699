//! Scalar functions monitored along trajectories.

use super::rhs::{quadratic_form, structure_f64, Point};
use crate::coefficients::Rational;
use crate::multipoly::MultiPoly;
use crate::vectorfields::{ModelType, DIM};

pub const DIFFERENCE_STEP: f64 = 1e-6;

/// A real function of the six state variables, possibly with a restricted
/// domain.
pub trait ScalarField: Send + Sync {
    fn name(&self) -> String;

    /// `None` outside the domain.
    fn value(&self, x: &Point) -> Option<f64>;

    /// Central differences by default.
    fn gradient(&self, x: &Point) -> Option<Point> {
        let mut g = [0.0; 6];
        for (i, gi) in g.iter_mut().enumerate() {
            let (mut plus, mut minus) = (*x, *x);
            plus[i] += DIFFERENCE_STEP;
            minus[i] -= DIFFERENCE_STEP;
            *gi = (self.value(&plus)? - self.value(&minus)?) / (2.0 * DIFFERENCE_STEP);
        }
        Some(g)
    }
}

/// A polynomial with an exact symbolic gradient.
#[derive(Debug, Clone)]
pub struct PolynomialInvariant {
    poly: MultiPoly<Rational>,
    partials: Vec<MultiPoly<Rational>>,
}

impl PolynomialInvariant {
    pub fn new(poly: MultiPoly<Rational>) -> Self {
        assert_eq!(poly.nvars(), DIM, "state polynomials have six variables");
        let partials = (0..DIM).map(|i| poly.partial_derivative(i)).collect();
        PolynomialInvariant { poly, partials }
    }

    pub fn parse(text: &str) -> crate::Result<Self> {
        Ok(Self::new(MultiPoly::parse(DIM, text)?))
    }

    pub fn polynomial(&self) -> &MultiPoly<Rational> {
        &self.poly
    }
}

impl ScalarField for PolynomialInvariant {
    fn name(&self) -> String {
        self.poly.to_string()
    }

    fn value(&self, x: &Point) -> Option<f64> {
        Some(self.poly.evaluate_f64(x))
    }

    fn gradient(&self, x: &Point) -> Option<Point> {
        Some(std::array::from_fn(|i| self.partials[i].evaluate_f64(x)))
    }
}

/// `(x1 x2 x3)^((k-1)/2) F`, defined for `x1 x2 x3 > 0`.
#[derive(Debug, Clone, Copy)]
pub struct WeightedPowerInvariant {
    pub model: ModelType,
    pub k: f64,
}

impl ScalarField for WeightedPowerInvariant {
    fn name(&self) -> String {
        "H".to_string()
    }

    fn value(&self, x: &Point) -> Option<f64> {
        let product = x[0] * x[1] * x[2];
        if product.is_nan() || product <= 0.0 {
            return None;
        }
        Some(product.powf((self.k - 1.0) / 2.0) * quadratic_form(structure_f64(self.model), x))
    }
}

/// The Bianchi I integrals
/// `(x_i/x_j)^((1-k)/2) * R^((x_{i+3} - x_{j+3}) / sqrt(D))` with
/// `R = (s - 2 sqrt(D)) / (s + 2 sqrt(D))`, `s = x4 + x5 + x6` and
/// `D = x4^2 + x5^2 + x6^2 - x4 x5 - x4 x6 - x5 x6`.
#[derive(Debug, Clone, Copy)]
pub struct TranscendentalInvariant {
    pub i: usize,
    pub j: usize,
    pub k: f64,
}

impl TranscendentalInvariant {
    /// The pairs (x1, x2) and (x2, x3).
    pub fn bianchi_i(k: f64) -> [Self; 2] {
        [
            TranscendentalInvariant { i: 0, j: 1, k },
            TranscendentalInvariant { i: 1, j: 2, k },
        ]
    }

    pub fn ratio(x: &Point) -> Option<f64> {
        let d = discriminant(x);
        if d.is_nan() || d <= 0.0 {
            return None;
        }
        let s = x[3] + x[4] + x[5];
        let root = d.sqrt();
        Some((s - 2.0 * root) / (s + 2.0 * root))
    }
}

pub fn discriminant(x: &Point) -> f64 {
    let (a, b, c) = (x[3], x[4], x[5]);
    a * a + b * b + c * c - a * b - a * c - b * c
}

impl ScalarField for TranscendentalInvariant {
    fn name(&self) -> String {
        format!("G{}{}", self.i + 1, self.j + 1)
    }

    fn value(&self, x: &Point) -> Option<f64> {
        let quotient = x[self.i] / x[self.j];
        let r = Self::ratio(x)?;
        if quotient.is_nan() || quotient <= 0.0 || r.is_nan() || r <= 0.0 {
            return None;
        }
        let exponent = (x[self.i + 3] - x[self.j + 3]) / discriminant(x).sqrt();
        let v = quotient.powf((1.0 - self.k) / 2.0) * r.powf(exponent);
        v.is_finite().then_some(v)
    }
}

/// The integrals monitored by default for each model.
pub fn default_invariants(model: ModelType, k: f64) -> Vec<Box<dyn ScalarField>> {
    let poly = |s: &str| Box::new(PolynomialInvariant::parse(s).expect("valid literal")) as Box<dyn ScalarField>;
    let mut out: Vec<Box<dyn ScalarField>> = Vec::new();
    match model {
        ModelType::I => {
            out.push(poly("x4 - x5"));
            out.push(poly("x4 - x6"));
        }
        ModelType::II => out.push(poly("x5 - x6")),
        _ => {}
    }
    out.push(Box::new(WeightedPowerInvariant { model, k }));
    if model == ModelType::I {
        for g in TranscendentalInvariant::bianchi_i(k) {
            out.push(Box::new(g));
        }
    }
    out
}

/// The default integrals plus those that only hold on an invariant
/// hyperplane containing `x0` (model II with `x1 = 0` keeps `x4 - x5`).
pub fn invariants_for(model: ModelType, k: f64, x0: &Point) -> Vec<Box<dyn ScalarField>> {
    let mut out = default_invariants(model, k);
    if model == ModelType::II && x0[0] == 0.0 {
        out.insert(0, Box::new(PolynomialInvariant::parse("x4 - x5").expect("valid literal")));
    }
    out
}

/// Starting points that stay in `x1 x2 x3 > 0` (and `R > 0` for model I)
/// up to `t = 1` at the default tolerance.
pub fn default_x0(model: ModelType) -> Point {
    match model {
        ModelType::I | ModelType::II => [1.0, 2.0, 3.0, 1.0, 2.0, 4.0],
        ModelType::VI0 | ModelType::VII0 | ModelType::VIII => [0.5, 1.0, 1.5, 0.5, 1.0, 2.0],
        ModelType::IX => [1.0, 1.0, 1.0, 1.0, 2.0, 3.0],
    }
}
