use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use super::VectorField;
use crate::coefficients::{Coeff, KPoly, Rational};
use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;

/// Number of state variables of a Bianchi class A system.
pub const DIM: usize = 6;

/// The six Bianchi class A types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModelType {
    I,
    II,
    VI0,
    VII0,
    VIII,
    IX,
}

impl ModelType {
    pub const ALL: [ModelType; 6] = [
        ModelType::I,
        ModelType::II,
        ModelType::VI0,
        ModelType::VII0,
        ModelType::VIII,
        ModelType::IX,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ModelType::I => "I",
            ModelType::II => "II",
            ModelType::VI0 => "VI0",
            ModelType::VII0 => "VII0",
            ModelType::VIII => "VIII",
            ModelType::IX => "IX",
        }
    }

    /// Structure constants `(n1, n2, n3)`.
    pub fn structure_constants(self) -> [i64; 3] {
        match self {
            ModelType::I => [0, 0, 0],
            ModelType::II => [1, 0, 0],
            ModelType::VI0 => [1, -1, 0],
            ModelType::VII0 => [1, 1, 0],
            ModelType::VIII => [1, 1, -1],
            ModelType::IX => [1, 1, 1],
        }
    }
}

impl fmt::Display for ModelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ModelType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModelType::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::UnknownModel(s.to_string()))
    }
}

/// How the equation-of-state parameter `k` enters the coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KMode {
    /// A rational in `[0, 1)`, substituted at build time.
    Fixed(Rational),
    /// Coefficients are polynomials in `k`.
    Symbolic,
}

impl KMode {
    pub fn fixed(k: Rational) -> Result<Self> {
        if k.is_negative() || k >= Rational::one() {
            return Err(Error::KOutOfRange(k.to_string()));
        }
        Ok(KMode::Fixed(k))
    }

    /// The sample set used by reports: `0, 1/2, 2/3, 9/10`.
    pub fn default_samples() -> Vec<Rational> {
        vec![
            Rational::zero(),
            Rational::frac(1, 2),
            Rational::frac(2, 3),
            Rational::frac(9, 10),
        ]
    }
}

impl fmt::Display for KMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KMode::Fixed(k) => write!(f, "{k}"),
            KMode::Symbolic => f.write_str("symbolic"),
        }
    }
}

impl FromStr for KMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(KMode::Symbolic),
            _ => KMode::fixed(s.parse()?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BianchiModel {
    pub model: ModelType,
    pub k: KMode,
}

impl BianchiModel {
    pub fn new(model: ModelType, k: KMode) -> Self {
        BianchiModel { model, k }
    }

    pub fn structure_constants(&self) -> [i64; 3] {
        self.model.structure_constants()
    }

    pub fn quadratic_form(&self) -> MultiPoly<Rational> {
        let [n1, n2, n3] = self.structure_constants();
        build_f(n1, n2, n3).expect("table constants are in range")
    }

    pub fn field(&self) -> BianchiField {
        match &self.k {
            KMode::Fixed(k) => BianchiField::Fixed(build_bianchi(self.model, k.clone())),
            KMode::Symbolic => BianchiField::Symbolic(build_bianchi(self.model, KPoly::k())),
        }
    }
}

/// A Bianchi field in whichever coefficient ring its `k` mode requires.
#[derive(Debug, Clone)]
pub enum BianchiField {
    Fixed(VectorField<Rational>),
    Symbolic(VectorField<KPoly>),
}

/// The quadratic form
/// `F = sum n_i^2 x_i^2 - 2 sum_{i<j} n_i n_j x_i x_j + x4^2 + x5^2 + x6^2 - 2(x4 x5 + x5 x6 + x4 x6)`.
pub fn build_f(n1: i64, n2: i64, n3: i64) -> Result<MultiPoly<Rational>> {
    let n = [n1, n2, n3];
    for (i, &v) in n.iter().enumerate() {
        if !(-1..=1).contains(&v) {
            return Err(Error::StructureConstant {
                index: i + 1,
                value: v,
            });
        }
    }
    let x = |i: usize| MultiPoly::<Rational>::var(DIM, i);
    let c = |v: i64| Rational::from(v);
    let mut f = MultiPoly::zero(DIM);
    for i in 0..3 {
        f = &f + &(&x(i) * &x(i)).scale_rational(&c(n[i] * n[i]));
        for j in (i + 1)..3 {
            f = &f + &(&x(i) * &x(j)).scale_rational(&c(-2 * n[i] * n[j]));
        }
    }
    for i in 3..6 {
        f = &f + &(&x(i) * &x(i));
        for j in (i + 1)..6 {
            f = &f + &(&x(i) * &x(j)).scale_rational(&c(-2));
        }
    }
    Ok(f)
}

/// The quadratic homogeneous system of the given type, with `k` taken from
/// the coefficient ring (a rational for fixed-`k`, `KPoly::k()` for symbolic).
///
/// ```text
/// x1' = x1(-x4 + x5 + x6)
/// x2' = x2( x4 - x5 + x6)
/// x3' = x3( x4 + x5 - x6)
/// x4' = n1 x1 ( n1 x1 - n2 x2 - n3 x3) + (k-1)/4 F
/// x5' = n2 x2 (-n1 x1 + n2 x2 - n3 x3) + (k-1)/4 F
/// x6' = n3 x3 (-n1 x1 - n2 x2 + n3 x3) + (k-1)/4 F
/// ```
pub fn build_bianchi<C: Coeff>(model: ModelType, k: C) -> VectorField<C> {
    let n = model.structure_constants();
    let x = |i: usize| MultiPoly::<C>::var(DIM, i);
    let lin = |signs: [i64; 3], offset: usize| {
        (0..3).fold(MultiPoly::<C>::zero(DIM), |acc, j| {
            &acc + &x(offset + j).scale_rational(&Rational::from(signs[j]))
        })
    };

    let quarter = (k - C::one()).scale(&Rational::frac(1, 4));
    let f_term = build_f(n[0], n[1], n[2])
        .expect("table constants are in range")
        .lift::<C>()
        .scale(&quarter);

    let mut components = Vec::with_capacity(DIM);
    for i in 0..3 {
        let mut signs = [1; 3];
        signs[i] = -1;
        components.push(&x(i) * &lin(signs, 3));
    }
    for i in 0..3 {
        let mut signs = [0; 3];
        for j in 0..3 {
            signs[j] = if i == j { n[j] } else { -n[j] };
        }
        let gravity = (&x(i) * &lin(signs, 0)).scale_rational(&Rational::from(n[i]));
        components.push(&gravity + &f_term);
    }
    VectorField::new(components).expect("six components in six variables")
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MultiPoly<Rational>;

    fn p(s: &str) -> P {
        P::parse(DIM, s).unwrap()
    }

    fn half() -> Rational {
        Rational::frac(1, 2)
    }

    #[test]
    fn structure_constants_match_table() {
        let expected = [
            ("I", [0, 0, 0]),
            ("II", [1, 0, 0]),
            ("VI0", [1, -1, 0]),
            ("VII0", [1, 1, 0]),
            ("VIII", [1, 1, -1]),
            ("IX", [1, 1, 1]),
        ];
        for (tag, n) in expected {
            let m: ModelType = tag.parse().unwrap();
            assert_eq!(m.structure_constants(), n);
            assert_eq!(m.tag(), tag);
        }
        assert!("X".parse::<ModelType>().is_err());
    }

    #[test]
    fn k_range() {
        assert!("0".parse::<KMode>().is_ok());
        assert!("9/10".parse::<KMode>().is_ok());
        assert_eq!("symbolic".parse::<KMode>().unwrap(), KMode::Symbolic);
        assert!(matches!("1".parse::<KMode>(), Err(Error::KOutOfRange(_))));
        assert!(matches!("-1/2".parse::<KMode>(), Err(Error::KOutOfRange(_))));
    }

    #[test]
    fn quadratic_forms() {
        let base = "x4^2 + x5^2 + x6^2 - 2*x4*x5 - 2*x5*x6 - 2*x4*x6";
        assert_eq!(build_f(0, 0, 0).unwrap(), p(base));
        assert_eq!(build_f(1, 0, 0).unwrap(), p(&format!("x1^2 + {base}")));
        let ix = build_f(1, 1, 1).unwrap();
        let viii = build_f(1, 1, -1).unwrap();
        assert_ne!(ix, viii);
        assert_eq!(&viii - &ix, p("4*x1*x3 + 4*x2*x3"));
        assert!(matches!(build_f(2, 0, 0), Err(Error::StructureConstant { index: 1, value: 2 })));
    }

    #[test]
    fn bianchi_i_components() {
        let x = build_bianchi(ModelType::I, half());
        let quarter_f = p("x4^2 + x5^2 + x6^2 - 2*x4*x5 - 2*x5*x6 - 2*x4*x6").scale_rational(&Rational::frac(-1, 8));
        for i in 3..6 {
            assert_eq!(x.component(i), &quarter_f);
        }
        assert_eq!(x.component(0), &p("-x1*x4 + x1*x5 + x1*x6"));
    }

    #[test]
    fn bianchi_ii_difference() {
        let x = build_bianchi(ModelType::II, half());
        assert_eq!(x.component(3) - x.component(4), p("x1^2"));
    }

    #[test]
    fn bianchi_ix_sixth_component() {
        let x = build_bianchi(ModelType::IX, half());
        let f = build_f(1, 1, 1).unwrap();
        let expected = &p("x3") * &p("-x1 - x2 + x3");
        let expected = &expected + &f.scale_rational(&Rational::frac(-1, 8));
        assert_eq!(x.component(5), &expected);
    }

    #[test]
    fn fields_are_quadratic_and_invariant_on_hyperplanes() {
        for model in ModelType::ALL {
            let x = build_bianchi(model, Rational::frac(2, 3));
            assert_eq!(x.homogeneity_degree(), Some(2));
            for i in 0..3 {
                assert!(x.component(i).div_by_var(i).is_some());
                assert!(x.component(i).restrict_hyperplane(i, &Rational::zero()).is_zero());
            }
            let sym = build_bianchi(model, KPoly::k());
            assert_eq!(sym.homogeneity_degree(), Some(2));
            assert_eq!(sym.at_k(&Rational::frac(2, 3)), x);
        }
    }
}
