use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{parse_error, Error, Result};

/// Dense univariate polynomial in the equation-of-state parameter `k`.
///
/// `coeffs[i]` is the coefficient of `k^i`; trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KPoly {
    coeffs: Vec<Rational>,
}

impl KPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        KPoly::new(vec![c])
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        KPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * k) + c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        KPoly::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    fn zip_with(&self, rhs: &KPoly, f: impl Fn(&Rational, &Rational) -> Rational) -> KPoly {
        let zero = Rational::zero();
        let len = self.coeffs.len().max(rhs.coeffs.len());
        KPoly::new(
            (0..len)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        rhs.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl Zero for KPoly {
    fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for KPoly {
    fn one() -> Self {
        KPoly::constant(Rational::one())
    }
}

impl<'a> Add<&'a KPoly> for &'a KPoly {
    type Output = KPoly;
    fn add(self, rhs: &'a KPoly) -> KPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a KPoly> for &'a KPoly {
    type Output = KPoly;
    fn sub(self, rhs: &'a KPoly) -> KPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a KPoly> for &'a KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &'a KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        KPoly::new(out)
    }
}

impl Add for KPoly {
    type Output = KPoly;
    fn add(self, rhs: KPoly) -> KPoly {
        &self + &rhs
    }
}

impl Sub for KPoly {
    type Output = KPoly;
    fn sub(self, rhs: KPoly) -> KPoly {
        &self - &rhs
    }
}

impl Mul for KPoly {
    type Output = KPoly;
    fn mul(self, rhs: KPoly) -> KPoly {
        &self * &rhs
    }
}

impl Neg for KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        KPoly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl Neg for &KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        -self.clone()
    }
}

impl fmt::Display for KPoly {
    /// `c0 + c1*k + c2*k^2`, zero terms omitted; negative coefficients are
    /// written with a ` - ` separator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("k")?;
                    } else {
                        write!(f, "k^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KPoly({self})")
    }
}

/// Splits `s` at top-level `+`/`-` signs, keeping the sign with each piece.
pub(crate) fn split_signed_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    let mut seen_operand = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
                seen_operand = true;
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth == 0 && !current.ends_with('^') => {
                if seen_operand {
                    out.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                    seen_operand = false;
                } else if ch == '-' {
                    negative = !negative;
                }
            }
            c if c.is_whitespace() => {}
            c => {
                current.push(c);
                seen_operand = true;
            }
        }
    }
    out.push((negative, current));
    out
}

impl FromStr for KPoly {
    type Err = Error;

    /// Parses the display form, e.g. `-1/4 + 1/4*k` or `k^2 - 3`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let mut acc = KPoly::zero();
        for (negative, term) in split_signed_terms(body) {
            if term.is_empty() {
                return Err(parse_error("k-polynomial", s, "empty term"));
            }
            let (coeff, power) = match term.split_once('*') {
                Some((c, kpart)) => (c.parse::<Rational>()?, parse_k_power(kpart, s)?),
                None if term.starts_with('k') => (Rational::one(), parse_k_power(&term, s)?),
                None => (term.parse::<Rational>()?, 0),
            };
            let mut coeffs = vec![Rational::zero(); power + 1];
            coeffs[power] = if negative { -coeff } else { coeff };
            acc = &acc + &KPoly::new(coeffs);
        }
        Ok(acc)
    }
}

fn parse_k_power(part: &str, full: &str) -> Result<usize> {
    match part {
        "k" => Ok(1),
        _ => part
            .strip_prefix("k^")
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(|| parse_error("k-polynomial", full, format!("bad factor {part:?}"))),
    }
}
