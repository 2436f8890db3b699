use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial in `n` variables.
///
/// Ordered graded-lexicographically with `x1 > x2 > ... > xn`: higher total
/// degree is greater, ties broken by the first differing exponent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps: exps.into() }
    }

    pub fn from_exponents(exps: impl Into<Vec<u8>>) -> Self {
        Monomial {
            exps: exps.into().into_boxed_slice(),
        }
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u8 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Product, or `None` if an exponent would exceed 255.
    pub fn checked_mul(&self, rhs: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        let exps = self
            .exps
            .iter()
            .zip(rhs.exps.iter())
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<u8>>>()?;
        Some(Monomial { exps: exps.into() })
    }

    /// Product; exponent overflow is a hard error.
    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        self.checked_mul(rhs)
            .unwrap_or_else(|| panic!("exponent overflow multiplying {self} by {rhs}"))
    }

    /// Quotient by a monomial that divides `self`.
    pub fn checked_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(rhs.exps.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u8>>>()?;
        Some(Monomial { exps: exps.into() })
    }

    pub(crate) fn with_exponent(&self, index: usize, e: u8) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[index] = e;
        Monomial { exps: exps.into() }
    }

    pub fn write_with(&self, f: &mut impl fmt::Write, names: &[&str]) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        self.write_with(f, &names)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// `x1, x2, ..., xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

/// All exponent vectors of total degree `degree` in `nvars` variables,
/// in descending graded-lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let vars: Vec<usize> = (0..nvars).collect();
    monomials_in(nvars, &vars, degree)
}

/// Degree-`degree` monomials supported on the listed variables, descending.
pub fn monomials_in(nvars: usize, vars: &[usize], degree: u32) -> Vec<Monomial> {
    assert!(degree <= u8::MAX as u32, "degree {degree} exceeds exponent cap");
    let mut out = Vec::new();
    let mut exps = vec![0u8; nvars];
    fill(vars, degree, &mut exps, &mut out);
    out
}

fn fill(vars: &[usize], remaining: u32, exps: &mut [u8], out: &mut Vec<Monomial>) {
    match vars {
        [] => {
            if remaining == 0 {
                out.push(Monomial::from_exponents(exps.to_vec()));
            }
        }
        [last] => {
            exps[*last] = remaining as u8;
            out.push(Monomial::from_exponents(exps.to_vec()));
            exps[*last] = 0;
        }
        [head, rest @ ..] => {
            for e in (0..=remaining).rev() {
                exps[*head] = e as u8;
                fill(rest, remaining - e, exps, out);
            }
            exps[*head] = 0;
        }
    }
}
