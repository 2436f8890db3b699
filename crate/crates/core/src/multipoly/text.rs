//! Canonical text form: terms in descending monomial order, e.g.
//! `5/2*x1^2*x4 - x5*x6`. Symbolic-`k` coefficients are parenthesized:
//! `(-1/4 + 1/4*k)*x4^2`.

use std::fmt::{self, Write};

use super::{default_names, Monomial, MultiPoly};
use crate::coefficients::{split_signed_terms, Coeff};
use crate::error::{parse_error, Result};

impl<C: Coeff> MultiPoly<C> {
    pub fn write_with(&self, f: &mut impl Write, names: &[&str]) -> fmt::Result {
        assert!(names.len() >= self.nvars, "not enough variable names");
        if self.is_zero() {
            return f.write_char('0');
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let constant_monomial = m.degree() == 0;
            let (negative, body) = match c.split_sign() {
                Some((neg, mag)) => {
                    let body = if mag.is_one() && !constant_monomial {
                        None
                    } else {
                        Some(mag.to_string())
                    };
                    (neg, body)
                }
                None => (false, Some(format!("({c})"))),
            };
            match (i, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if let Some(body) = body {
                f.write_str(&body)?;
                if constant_monomial {
                    continue;
                }
                f.write_char('*')?;
            }
            m.write_with(f, names)?;
        }
        Ok(())
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        let mut s = String::new();
        self.write_with(&mut s, names).expect("writing to a String cannot fail");
        s
    }

    /// Parses the canonical text form with variables `x1..xn`.
    pub fn parse(nvars: usize, s: &str) -> Result<Self> {
        let names = default_names(nvars);
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::parse_with(&names, s)
    }

    pub fn parse_with(names: &[&str], s: &str) -> Result<Self> {
        let nvars = names.len();
        let mut out = Self::zero(nvars);
        for (negative, term) in split_signed_terms(s) {
            if term.is_empty() {
                return Err(parse_error("polynomial", s, "empty term"));
            }
            let mut coeff = C::one();
            let mut exps = vec![0u8; nvars];
            for factor in split_top_level(&term, '*') {
                if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
                    coeff = coeff * C::parse_coeff(inner)?;
                    continue;
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e = e
                            .parse::<u8>()
                            .map_err(|_| parse_error("polynomial", s, format!("bad exponent in {factor:?}")))?;
                        (b, e)
                    }
                    None => (factor, 1),
                };
                match names.iter().position(|n| *n == base) {
                    Some(idx) => {
                        exps[idx] = exps[idx]
                            .checked_add(exp)
                            .ok_or_else(|| parse_error("polynomial", s, "exponent overflow"))?;
                    }
                    None => {
                        if factor.contains('^') {
                            return Err(parse_error("polynomial", s, format!("unknown variable {base:?}")));
                        }
                        let r = factor
                            .parse()
                            .map_err(|_| parse_error("polynomial", s, format!("unknown factor {factor:?}")))?;
                        coeff = coeff * C::from_rational(r);
                    }
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_exponents(exps), coeff);
        }
        Ok(out)
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        self.write_with(f, &names)
    }
}

impl<C: Coeff> serde::Serialize for MultiPoly<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
