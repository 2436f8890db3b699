//! Linear-algebra checks of the PDE lemmas behind the non-existence proofs.
//!
//! - `estrella`: homogeneous solutions `g(x4, x5, x6)` of
//!   `(a1 x4 + a2 x5 + a3 x6) g + (k-1)/4 F123 (g_x4 + g_x5 + g_x6) = 0`.
//! - `dificil`: joint solutions `(g, h)` of
//!   `2 (x4 - x5 + x6) g + (k-1)/4 F123 (g_x4 + g_x5 + g_x6) + h_x5 = 0`
//!   with `h` a form in `x4 - x5` and `x4 - x6`.
//! - `sn`: the recursion `S_n = P S_{n-1} + Q^(n-1) n a_n` for
//!   `S_n = sum_i P^(n-i) Q^(i-1) i a_i`, `P = (3A1 - A2)(A1 + A2)`,
//!   `Q = (3A1 + A2)(A1 - A2)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::ansatz::enumerate_monomials_in;
use super::nullspace::{NullspaceBasis, NullspaceSolver};
use super::registry::{Named, Registry};
use super::system::LinearSystem;
use crate::coefficients::Rational;
use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly};
use crate::vectorfields::{build_f, DIM};

const VELOCITIES: [usize; 3] = [3, 4, 5];

fn lin(text: &str) -> MultiPoly<Rational> {
    MultiPoly::parse(DIM, text).expect("valid literal")
}

/// `F` restricted to `x1 = x2 = x3 = 0`.
pub fn f123() -> MultiPoly<Rational> {
    build_f(0, 0, 0).expect("valid structure constants")
}

fn divergence_sum(g: &MultiPoly<Rational>) -> MultiPoly<Rational> {
    VELOCITIES
        .iter()
        .fold(MultiPoly::zero(DIM), |acc, &i| &acc + &g.partial_derivative(i))
}

fn matter_factor(k: &Rational) -> Rational {
    (k - &Rational::one())
        .checked_div(&Rational::from(4))
        .expect("nonzero literal")
}

#[derive(Debug, Clone, Serialize)]
pub struct EstrellaSolution {
    pub dim: usize,
    pub basis: Vec<MultiPoly<Rational>>,
}

/// Degree-`m` homogeneous solutions in `x4, x5, x6`.
pub fn lemma_estrella_solve(a: &[Rational; 3], k: &Rational, m: u32, solver: &dyn NullspaceSolver) -> EstrellaSolution {
    let ansatz = enumerate_monomials_in(DIM, &VELOCITIES, m);
    let weight = &(&lin("x4").scale_rational(&a[0]) + &lin("x5").scale_rational(&a[1])) + &lin("x6").scale_rational(&a[2]);
    let f = f123().scale_rational(&matter_factor(k));
    let images: Vec<MultiPoly<Rational>> = ansatz
        .monomials
        .iter()
        .map(|mono| {
            let g = MultiPoly::from_monomial(mono.clone(), Rational::one());
            &(&weight * &g) + &(&f * &divergence_sum(&g))
        })
        .collect();
    let kernel = solver.nullspace(&LinearSystem::from_images(&images));
    EstrellaSolution {
        dim: kernel.dim(),
        basis: kernel.vectors.iter().map(|v| ansatz.polynomial(v)).collect(),
    }
}

/// `2a / (k - 1)` when `a1 = a2 = a3 = a`.
pub fn estrella_exponent(a: &[Rational; 3], k: &Rational) -> Option<Rational> {
    if a[0] != a[1] || a[0] != a[2] {
        return None;
    }
    (&Rational::from(2) * &a[0]).checked_div(&(k - &Rational::one())).ok()
}

/// Dimension predicted by the closed-form solutions
/// `f(x4 - x5, x4 - x6) F123^d`: `m - 2d + 1` when `d` is a natural number
/// with `2d <= m`, and zero otherwise (including all unequal triples).
pub fn estrella_predicted_dim(a: &[Rational; 3], k: &Rational, m: u32) -> usize {
    match estrella_exponent(a, k) {
        Some(d) if d.is_integer() && !d.is_negative() => {
            let d = d.numer().to_string().parse::<u64>().unwrap_or(u64::MAX);
            if 2 * d <= m as u64 {
                (m as u64 - 2 * d + 1) as usize
            } else {
                0
            }
        }
        _ => 0,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DificilSolution {
    pub dim: usize,
    /// Per kernel vector: the `g` and `h` parts.
    pub g_basis: Vec<MultiPoly<Rational>>,
    pub h_basis: Vec<MultiPoly<Rational>>,
    /// Every solution has `g = 0` and `h = c (x4 - x6)^n`.
    pub only_pure_power: bool,
}

/// Joint kernel for `g` of degree `n - 2` and `h` of degree `n`.
pub fn lemma_dificil_solve(k: &Rational, n: u32, solver: &dyn NullspaceSolver) -> Result<DificilSolution> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("dificil needs n >= 2, got {n}")));
    }
    let g_ansatz = enumerate_monomials_in(DIM, &VELOCITIES, n - 2);
    let (u, v) = (lin("x4 - x5"), lin("x4 - x6"));
    let h_forms: Vec<MultiPoly<Rational>> = (0..=n).map(|i| &u.pow(i) * &v.pow(n - i)).collect();
    let f = f123().scale_rational(&matter_factor(k));
    let shift = lin("2*x4 - 2*x5 + 2*x6");
    let mut images: Vec<MultiPoly<Rational>> = g_ansatz
        .monomials
        .iter()
        .map(|mono| {
            let g = MultiPoly::from_monomial(mono.clone(), Rational::one());
            &(&shift * &g) + &(&f * &divergence_sum(&g))
        })
        .collect();
    images.extend(h_forms.iter().map(|h| h.partial_derivative(4)));
    let kernel = solver.nullspace(&LinearSystem::from_images(&images));
    let ng = g_ansatz.len();
    let mut g_basis = Vec::new();
    let mut h_basis = Vec::new();
    let mut only_pure_power = true;
    for vec in &kernel.vectors {
        let g = g_ansatz.polynomial::<Rational>(&vec[..ng]);
        let h = vec[ng..]
            .iter()
            .zip(&h_forms)
            .fold(MultiPoly::zero(DIM), |acc, (c, form)| &acc + &form.scale_rational(c));
        only_pure_power &= g.is_zero() && vec[ng + 1..].iter().all(Zero::is_zero);
        g_basis.push(g);
        h_basis.push(h);
    }
    Ok(DificilSolution {
        dim: kernel.dim(),
        g_basis,
        h_basis,
        only_pure_power,
    })
}

pub fn sn_names(n: u32) -> Vec<String> {
    let mut names = vec!["A1".to_string(), "A2".to_string()];
    names.extend((1..=n).map(|i| format!("a{i}")));
    names
}

struct SnRing {
    nvars: usize,
    p: MultiPoly<Rational>,
    q: MultiPoly<Rational>,
}

impl SnRing {
    fn new(n: u32) -> Self {
        let nvars = n as usize + 2;
        let names = sn_names(n);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let parse = |s: &str| MultiPoly::parse_with(&refs, s).expect("valid literal");
        SnRing {
            nvars,
            p: &parse("3*A1 - A2") * &parse("A1 + A2"),
            q: &parse("3*A1 + A2") * &parse("A1 - A2"),
        }
    }

    fn a(&self, i: u32) -> MultiPoly<Rational> {
        MultiPoly::var(self.nvars, i as usize + 1)
    }

    /// Closed-form sum for `S_len`.
    fn s(&self, len: u32) -> MultiPoly<Rational> {
        (1..=len).fold(MultiPoly::zero(self.nvars), |acc, i| {
            let term = &(&self.p.pow(len - i) * &self.q.pow(i - 1)) * &self.a(i);
            &acc + &term.scale_rational(&Rational::from(i as i64))
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SnCheck {
    pub n: u32,
    pub recursion_holds: bool,
    /// `S_n` with `A1 = -A2`.
    pub on_antidiagonal: String,
    pub antidiagonal_holds: bool,
}

pub fn sn_recursion_check(n: u32) -> Result<SnCheck> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sn needs n >= 2, got {n}")));
    }
    let ring = SnRing::new(n);
    let sn = ring.s(n);
    let rhs = &(&ring.p * &ring.s(n - 1)) + &(&ring.q.pow(n - 1) * &ring.a(n)).scale_rational(&Rational::from(n as i64));
    let minus_a2 = MultiPoly::var(ring.nvars, 1).scale_rational(&Rational::from(-1));
    let restricted = sn.substitute(0, &minus_a2);
    let mut expected_exps = vec![0u8; ring.nvars];
    expected_exps[1] = (2 * n - 2) as u8;
    expected_exps[n as usize + 1] = 1;
    let expected = MultiPoly::from_monomial(
        Monomial::from_exponents(expected_exps),
        Rational::from(n as i64) * Rational::from(4).pow(n - 1),
    );
    let names = sn_names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(SnCheck {
        n,
        recursion_holds: sn == rhs,
        on_antidiagonal: restricted.to_string_with(&refs),
        antidiagonal_holds: restricted == expected,
    })
}

/// Parameters shared by all analyzers; each reads the ones it needs.
#[derive(Debug, Clone, Default)]
pub struct LemmaParams {
    pub a: Option<[Rational; 3]>,
    pub k: Option<Rational>,
    pub degree: Option<u32>,
    pub n: Option<u32>,
}

fn required<T: Clone>(value: &Option<T>, flag: &str, lemma: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| Error::InvalidArgument(format!("{lemma} needs {flag}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaOutcome {
    pub lemma: &'static str,
    pub parameters: BTreeMap<String, String>,
    pub dim: Option<usize>,
    pub expected_dim: Option<usize>,
    pub findings: BTreeMap<String, String>,
    pub pass: bool,
}

pub trait LemmaAnalyzer: Named + Send + Sync {
    fn analyze(&self, params: &LemmaParams, solver: &dyn NullspaceSolver) -> Result<LemmaOutcome>;
}

pub struct Estrella;

impl Named for Estrella {
    fn name(&self) -> &'static str {
        "estrella"
    }
}

impl LemmaAnalyzer for Estrella {
    fn analyze(&self, params: &LemmaParams, solver: &dyn NullspaceSolver) -> Result<LemmaOutcome> {
        let a = required(&params.a, "--a", self.name())?;
        let k = required(&params.k, "--k", self.name())?;
        let m = required(&params.degree, "--degree", self.name())?;
        let sol = lemma_estrella_solve(&a, &k, m, solver);
        let predicted = estrella_predicted_dim(&a, &k, m);
        let mut findings = BTreeMap::from([(
            "basis".to_string(),
            sol.basis.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        )]);
        if let Some(d) = estrella_exponent(&a, &k) {
            findings.insert("exponent".to_string(), d.to_string());
        }
        Ok(LemmaOutcome {
            lemma: self.name(),
            parameters: BTreeMap::from([
                ("a".to_string(), a.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
                ("k".to_string(), k.to_string()),
                ("degree".to_string(), m.to_string()),
            ]),
            dim: Some(sol.dim),
            expected_dim: Some(predicted),
            findings,
            pass: sol.dim == predicted,
        })
    }
}

pub struct Dificil;

impl Named for Dificil {
    fn name(&self) -> &'static str {
        "dificil"
    }
}

impl LemmaAnalyzer for Dificil {
    fn analyze(&self, params: &LemmaParams, solver: &dyn NullspaceSolver) -> Result<LemmaOutcome> {
        let k = required(&params.k, "--k", self.name())?;
        let n = required(&params.n, "--n", self.name())?;
        let sol = lemma_dificil_solve(&k, n, solver)?;
        let join = |ps: &[MultiPoly<Rational>]| ps.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        Ok(LemmaOutcome {
            lemma: self.name(),
            parameters: BTreeMap::from([("k".to_string(), k.to_string()), ("n".to_string(), n.to_string())]),
            dim: Some(sol.dim),
            expected_dim: Some(1),
            findings: BTreeMap::from([
                ("g".to_string(), join(&sol.g_basis)),
                ("h".to_string(), join(&sol.h_basis)),
                ("only_pure_power".to_string(), sol.only_pure_power.to_string()),
            ]),
            pass: sol.dim == 1 && sol.only_pure_power,
        })
    }
}

pub struct Sn;

impl Named for Sn {
    fn name(&self) -> &'static str {
        "sn"
    }
}

impl LemmaAnalyzer for Sn {
    fn analyze(&self, params: &LemmaParams, _: &dyn NullspaceSolver) -> Result<LemmaOutcome> {
        let n = required(&params.n, "--n", self.name())?;
        let check = sn_recursion_check(n)?;
        Ok(LemmaOutcome {
            lemma: self.name(),
            parameters: BTreeMap::from([("n".to_string(), n.to_string())]),
            dim: None,
            expected_dim: None,
            findings: BTreeMap::from([
                ("recursion_holds".to_string(), check.recursion_holds.to_string()),
                ("on_antidiagonal".to_string(), check.on_antidiagonal.clone()),
                ("antidiagonal_holds".to_string(), check.antidiagonal_holds.to_string()),
            ]),
            pass: check.recursion_holds && check.antidiagonal_holds,
        })
    }
}

pub fn lemma_registry() -> Registry<dyn LemmaAnalyzer> {
    let mut reg: Registry<dyn LemmaAnalyzer> = Registry::new("lemma analyzer");
    reg.register(Arc::new(Estrella));
    reg.register(Arc::new(Dificil));
    reg.register(Arc::new(Sn));
    reg
}

/// Kernel basis of the estrella operator as a canonical nullspace object.
pub fn estrella_kernel(a: &[Rational; 3], k: &Rational, m: u32, solver: &dyn NullspaceSolver) -> NullspaceBasis {
    let ansatz = enumerate_monomials_in(DIM, &VELOCITIES, m);
    let sol = lemma_estrella_solve(a, k, m, solver);
    NullspaceBasis::from_spanning_set(
        ansatz.len(),
        sol.basis
            .iter()
            .map(|p| ansatz.coordinates(p).expect("solutions live in the ansatz"))
            .collect(),
    )
}
