use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Power series `Σ_{d <= trunc} c_d v^d` with exact integer coefficients.
/// Arithmetic never looks past `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub variable: char,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms so the result has `trunc + 1`
    /// coefficients.
    pub fn new(variable: char, mut coeffs: Vec<BigInt>, trunc: u32) -> Self {
        coeffs.resize(trunc as usize + 1, BigInt::zero());
        TruncatedSeries { variable, coeffs }
    }

    pub fn from_i64(variable: char, coeffs: &[i64], trunc: u32) -> Self {
        Self::new(variable, coeffs.iter().map(|&c| BigInt::from(c)).collect(), trunc)
    }

    pub fn zero(variable: char, trunc: u32) -> Self {
        Self::new(variable, Vec::new(), trunc)
    }

    pub fn one(variable: char, trunc: u32) -> Self {
        Self::new(variable, vec![BigInt::one()], trunc)
    }

    /// `v^e`, zero if `e > trunc`.
    pub fn monomial(variable: char, e: u32, trunc: u32) -> Self {
        let mut s = Self::zero(variable, trunc);
        if e <= trunc {
            s.coeffs[e as usize] = BigInt::one();
        }
        s
    }

    pub fn trunc(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: u32) -> &BigInt {
        &self.coeffs[d as usize]
    }

    pub fn add_to(&mut self, d: u32, value: &BigInt) {
        if let Some(c) = self.coeffs.get_mut(d as usize) {
            *c += value;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc().min(other.trunc());
        let coeffs = (0..=trunc as usize)
            .map(|d| &self.coeffs[d] + &other.coeffs[d])
            .collect();
        Self::new(self.variable, coeffs, trunc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc().min(other.trunc()) as usize;
        let mut out = vec![BigInt::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(trunc + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(self.variable, out, trunc as u32)
    }

    /// `self / other`. Fails if the constant term of `other` is zero or if
    /// some quotient coefficient is not an integer.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let c0 = &other.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZeroConstant);
        }
        let trunc = self.trunc().min(other.trunc()) as usize;
        let mut out: Vec<BigInt> = Vec::with_capacity(trunc + 1);
        for d in 0..=trunc {
            let mut acc = self.coeffs[d].clone();
            for (j, q) in out.iter().enumerate() {
                let b = &other.coeffs[d - j];
                if !b.is_zero() {
                    acc -= q * b;
                }
            }
            let (q, rem) = acc.div_rem(c0);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(d as u32));
            }
            out.push(q);
        }
        Ok(Self::new(self.variable, out, trunc as u32))
    }

    /// `Π (1 − v^a) / Π (1 − v^b)` for the given exponent lists.
    pub fn from_product(variable: char, numerator: &[u32], denominator: &[u32], trunc: u32) -> Result<Self> {
        let factor = |e: u32| {
            let mut f = Self::one(variable, trunc);
            if e == 0 {
                f.coeffs[0] = BigInt::zero();
            } else if e <= trunc {
                f.coeffs[e as usize] = BigInt::from(-1);
            }
            f
        };
        let num = numerator
            .iter()
            .fold(Self::one(variable, trunc), |acc, &e| acc.mul(&factor(e)));
        denominator
            .iter()
            .try_fold(num, |acc, &e| acc.div(&factor(e)))
    }

    /// `v → −v`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(self.variable, coeffs, self.trunc())
    }

    /// `v → v^s`, keeping the same truncation degree.
    pub fn stretch(&self, s: u32) -> Self {
        let mut out = Self::zero(self.variable, self.trunc());
        for (d, c) in self.coeffs.iter().enumerate() {
            out.add_to(d as u32 * s, c);
        }
        out
    }

    /// Sum of all retained coefficients (the value at `v = 1` for a
    /// polynomial of degree at most `trunc`).
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map(|d| d as u32)
    }

    /// Palindromic up to its own degree.
    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            None => true,
            Some(deg) => (0..=deg).all(|d| self.coeff(d) == self.coeff(deg - d)),
        }
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TruncatedSeries", 3)?;
        st.serialize_field("variable", &self.variable.to_string())?;
        st.serialize_field("trunc", &self.trunc())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.variable;
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "{v}")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({v}^{})", self.trunc() + 1)
    }
}
