//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer polynomial stored dense, lowest degree first.
///
/// The zero polynomial is the empty coefficient list; otherwise the highest
/// stored coefficient is nonzero. Coefficients are exact `BigInt`s so counts
/// of colorings never overflow or round.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from coefficients (lowest degree first),
    /// trimming trailing zeros so the representation is canonical.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial q^degree.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        Polynomial { coeffs }
    }

    /// The falling factorial q(q-1)...(q-k+1); the chromatic polynomial of K_k.
    pub fn falling_factorial(k: usize) -> Self {
        let mut p = Polynomial::one();
        for i in 0..k {
            p = p.mul_q_minus(&BigInt::from(i));
        }
        p
    }

    /// Multiplies by the linear factor (q - c).
    pub fn mul_q_minus(&self, c: &BigInt) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] -= a * c;
        }
        Polynomial::from_coeffs(out)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest nonzero index, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of q^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// Exact division by (q - r); `None` unless r is a root.
    pub fn divide_by_linear(&self, r: &BigInt) -> Option<Polynomial> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        // Synthetic division, highest degree first.
        let mut quotient = vec![BigInt::zero(); d];
        quotient[d - 1] = self.coeffs[d].clone();
        for i in (0..d - 1).rev() {
            quotient[i] = &self.coeffs[i + 1] + r * &quotient[i + 1];
        }
        let remainder = &self.coeffs[0] + r * &quotient[0];
        if remainder.is_zero() {
            Some(Polynomial::from_coeffs(quotient))
        } else {
            None
        }
    }

    /// Coefficients converted to f64, lowest degree first.
    /// Returns `None` if any coefficient overflows f64.
    pub fn coeffs_f64(&self) -> Option<Vec<f64>> {
        use num_traits::ToPrimitive;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let v = c.to_f64()?;
            if !v.is_finite() {
                return None;
            }
            out.push(v);
        }
        Some(out)
    }

    /// True when the polynomial has the shape of a chromatic polynomial of a
    /// graph on `n` vertices: degree n, monic, zero constant term (n >= 1),
    /// and coefficients of q^(n-k) with sign (-1)^k or zero.
    pub fn has_chromatic_shape(&self, n: usize) -> bool {
        if n == 0 {
            return self == &Polynomial::one();
        }
        if self.degree() != Some(n) || !self.coeffs[n].is_one() {
            return false;
        }
        if !self.coeffs[0].is_zero() {
            return false;
        }
        self.coeffs.iter().enumerate().all(|(i, c)| {
            let k = n - i;
            c.is_zero() || (k % 2 == 0 && c.is_positive()) || (k % 2 == 1 && c.is_negative())
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::from_coeffs(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Polynomial::from_coeffs(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Human form, highest degree first, e.g. `q^3 - 3q^2 + 2q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{i}")?;
                }
            }
        }
        Ok(())
    }
}

// JSON form: array of decimal coefficient strings, lowest degree first.
// Strings, never numbers, so consumers cannot lose exactness.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("bad integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}
