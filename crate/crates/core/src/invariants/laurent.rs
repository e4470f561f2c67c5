//! Sparse integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

pub type Coeff = i128;

/// The formal variable of a [`LaurentPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    /// Kauffman bracket variable.
    A,
    /// Jones variable; exponents count quarter powers of `t`.
    TQuarter,
}

/// Exponent to nonzero coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, Coeff>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Variable, coeff: Coeff, exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (i64, Coeff)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i64) -> Coeff {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect() }
    }

    /// Substitute `x -> x^factor`.
    pub fn scale_exponents(&self, factor: i64) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (e * factor, c)))
    }

    pub fn with_variable(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Every exponent is a multiple of `m`.
    pub fn exponents_divisible_by(&self, m: i64) -> bool {
        self.terms.keys().all(|e| e % m == 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Exponent text for `x^(num/den)`, empty for a power of one.
fn power(symbol: &str, num: i64, den: i64) -> String {
    let g = gcd(num, den);
    let (num, den) = (num / g, den / g);
    match (num, den) {
        (1, 1) => symbol.to_string(),
        (_, 1) => format!("{symbol}^{num}"),
        _ => format!("{symbol}^({num}/{den})"),
    }
}

/// Descending powers; negative powers are written `c/t^k`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let (symbol, den) = match self.var {
            Variable::A => ("A", 1),
            Variable::TQuarter => ("t", 4),
        };
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if e > 0 {
                let p = power(symbol, e, den);
                if mag == 1 {
                    f.write_str(&p)?;
                } else {
                    write!(f, "{mag}*{p}")?;
                }
            } else {
                write!(f, "{mag}/{}", power(symbol, -e, den))?;
            }
        }
        Ok(())
    }
}
