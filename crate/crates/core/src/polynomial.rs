//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// `coefficients[k]` is the coefficient of `z^k`; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new<T: Into<BigInt>>(coefficients: impl IntoIterator<Item = T>) -> Self {
        let mut p = Self {
            coefficients: coefficients.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    /// `c · z^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); k + 1];
        coefficients[k] = c.into();
        Self::new(coefficients)
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    /// Coefficients from `z^0` upwards.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn evaluate(&self, z: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// `(a + b z)^e`
    pub fn binomial_power(a: i64, b: i64, e: usize) -> Self {
        let base = Self::new([a, b]);
        (0..e).fold(Self::new([1]), |acc, _| &acc * &base)
    }

    /// Renders with descending powers in the given variable, e.g. `z^3 - 4z^2 + 3z`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if k == 0 || !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new((0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: Self) -> IntPolynomial {
        self + &-rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coefficients.iter().map(|c| -c))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_like_the_literature() {
        assert_eq!(IntPolynomial::new([0, 3, -4, 1]).to_string(), "z^3 - 4z^2 + 3z");
        assert_eq!(IntPolynomial::new([-1, 3, -3, 1]).to_string(), "z^3 - 3z^2 + 3z - 1");
        assert_eq!(IntPolynomial::new([0, 0, -1]).display_in("t"), "-t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::new([5]).to_string(), "5");
    }

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::binomial_power(1, -1, 3);
        assert_eq!(p, IntPolynomial::new([1, -3, 3, -1]));
        assert_eq!(p.evaluate(&BigInt::from(1)), BigInt::zero());
        assert!((&p - &p).is_zero());
        assert_eq!(p.degree(), Some(3));
        assert_eq!(IntPolynomial::monomial(2, 2).coefficient(2), BigInt::from(2));
    }
}
