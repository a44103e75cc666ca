//! Dense polynomials with arbitrary-precision non-negative coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num::{BigUint, One, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::subsets::binomial;

/// `coeffs[t]` is the coefficient of `x^t`. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `(1 + x)^n`.
    pub fn one_plus_x_pow(n: usize) -> Self {
        Polynomial {
            coeffs: (0..=n).map(|t| binomial(n as u64, t as i64)).collect(),
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    /// Coefficient of `x^t`, zero past the degree.
    pub fn coeff(&self, t: usize) -> BigUint {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `x`.
    pub fn shift(mut self) -> Self {
        if !self.coeffs.is_empty() {
            self.coeffs.insert(0, BigUint::zero());
        }
        self
    }

    /// Drops the constant term.
    pub fn without_constant(mut self) -> Self {
        if let Some(c) = self.coeffs.first_mut() {
            *c = BigUint::zero();
        }
        self.normalize();
        self
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (t, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{t}")?,
                (_, false) => write!(f, "{c}x^{t}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// JSON shape: array of decimal integers, constant term first. Numbers are
// emitted verbatim (no float rounding) and strings are accepted on input.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            let n: serde_json::Number = c.to_string().parse().map_err(serde::ser::Error::custom)?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = Polynomial;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of non-negative decimal integers")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Polynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    let digits = match v {
                        serde_json::Value::Number(n) => n.to_string(),
                        serde_json::Value::String(s) => s,
                        other => return Err(de::Error::custom(format!("bad coefficient {other}"))),
                    };
                    let c = digits
                        .parse::<BigUint>()
                        .map_err(|e| de::Error::custom(format!("bad coefficient {digits}: {e}")))?;
                    coeffs.push(c);
                }
                Ok(Polynomial::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(PolyVisitor)
    }
}
