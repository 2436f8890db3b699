use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{parse_error, Error, Result};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

/// The four field operations, for callers that pick the operation at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator in literal")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Rational)
    }

    pub fn apply(&self, rhs: &Rational, op: ArithOp) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, full: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error("rational", full, "expected an integer"));
    }
    s.parse::<BigInt>()
        .map_err(|e| parse_error("rational", full, e.to_string()))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q`, ASCII, no whitespace.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s, s)?)),
            Some((p, q)) => {
                if q.starts_with(['+', '-']) {
                    return Err(parse_error("rational", s, "signed denominator"));
                }
                let q = parse_int(q, s)?;
                if q.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Rational::new(parse_int(p, s)?, q)
            }
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn addition_of_fractions() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
    }

    #[test]
    fn canonical_form() {
        let r = Rational::frac(2, 4);
        assert_eq!(r.to_string(), "1/2");
        assert_eq!(Rational::frac(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::frac(0, -5).to_string(), "0");
        assert_eq!(*Rational::frac(0, -5).denom(), BigInt::from(1));
    }

    #[test]
    fn equation_of_state_factor_at_half() {
        let k = q("1/2");
        let factor = (&k - &Rational::one()).checked_div(&Rational::from(4)).unwrap();
        assert_eq!(factor, q("-1/8"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q("1/2").checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(q("3").apply(&q("0"), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!("1/0".parse::<Rational>(), Err(Error::DivisionByZero));
        assert_eq!(Rational::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_rejects_junk() {
        for bad in ["", "1/", "/2", "1 /2", "a", "1/2/3", "1/-2", "1.5", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} parsed");
        }
        assert_eq!(q("-7/21"), Rational::frac(-1, 3));
        assert_eq!(q("+4"), Rational::from(4));
    }

    #[test]
    fn apply_dispatches() {
        let a = q("3/4");
        let b = q("-1/4");
        assert_eq!(a.apply(&b, ArithOp::Add).unwrap(), q("1/2"));
        assert_eq!(a.apply(&b, ArithOp::Sub).unwrap(), q("1"));
        assert_eq!(a.apply(&b, ArithOp::Mul).unwrap(), q("-3/16"));
        assert_eq!(a.apply(&b, ArithOp::Div).unwrap(), q("-3"));
    }
}
