//! Exact polynomial arithmetic in the formal variable `q`.
//!
//! Coefficients are nonnegative 64-bit integers with checked arithmetic:
//! an overflow is reported as [`Error::Overflow`], never wrapped. The
//! representation is dense with trailing zeros trimmed, so equality is
//! structural.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A polynomial in `q` with nonnegative integer coefficients,
/// `coeffs[e]` being the coefficient of `q^e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u64>", from = "Vec<u64>")]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QPolynomial { coeffs }
    }

    /// Builds a polynomial from coefficients (exponent 0 first), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// The q-integer `[k]_q = 1 + q + ... + q^{k-1}`.
    pub fn q_int(k: usize) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroQInt);
        }
        Ok(QPolynomial { coeffs: vec![1; k] })
    }

    /// The q-double factorial `[2n-1]_q!! = prod_{i=1}^{n} [2i-1]_q`,
    /// a palindromic polynomial of degree `n^2 - n` whose value at `q = 1`
    /// is the odd double factorial `(2n-1)!!`. The empty product (`n = 0`)
    /// is 1.
    pub fn q_double_factorial(n: usize) -> Result<Self, Error> {
        let mut product = QPolynomial::one();
        for i in 1..=n {
            product = product.checked_mul(&QPolynomial::q_int(2 * i - 1)?)?;
        }
        Ok(product)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^e` (zero beyond the degree).
    pub fn coeff(&self, e: usize) -> u64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    /// Reverses the coefficients over the degree `m`: the coefficient of
    /// `q^r` becomes the coefficient of `q^{m-r}`, i.e. `q^m p(1/q)`.
    pub fn reverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// True iff the polynomial equals its own reversal.
    pub fn is_palindromic(&self) -> Result<bool, Error> {
        Ok(self.reverse()? == *self)
    }

    /// Exact pointwise sum; overflow is reported, never wrapped.
    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        let mut coeffs = vec![0u64; self.coeffs.len().max(other.coeffs.len())];
        for (e, c) in coeffs.iter_mut().enumerate() {
            *c = self
                .coeff(e)
                .checked_add(other.coeff(e))
                .ok_or(Error::Overflow)?;
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// Exact convolution product; overflow is reported, never wrapped.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        if self.is_zero() || other.is_zero() {
            return Ok(QPolynomial::zero());
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// Adds `count` to the coefficient of `q^e`, growing as needed.
    pub fn bump(&mut self, e: usize, count: u64) -> Result<(), Error> {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, 0);
        }
        self.coeffs[e] = self.coeffs[e].checked_add(count).ok_or(Error::Overflow)?;
        Ok(())
    }

    /// Exact evaluation at a nonnegative integer point.
    pub fn eval(&self, q: u64) -> Result<u64, Error> {
        let mut acc: u64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(q).ok_or(Error::Overflow)?;
            acc = acc.checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

impl From<Vec<u64>> for QPolynomial {
    fn from(coeffs: Vec<u64>) -> Self {
        QPolynomial::from_coeffs(coeffs)
    }
}

impl From<QPolynomial> for Vec<u64> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, other: &QPolynomial) -> QPolynomial {
        self.checked_add(other)
            .expect("coefficient overflow in polynomial addition")
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, other: &QPolynomial) -> QPolynomial {
        self.checked_mul(other)
            .expect("coefficient overflow in polynomial multiplication")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (e, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{e}")?,
                (_, _) => write!(f, "{c}q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[u64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(QPolynomial::q_int(1).unwrap(), p(&[1]));
        assert_eq!(QPolynomial::q_int(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(QPolynomial::q_int(5).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(QPolynomial::q_int(0), Err(Error::ZeroQInt));
    }

    #[test]
    fn q_double_factorial_small() {
        assert_eq!(QPolynomial::q_double_factorial(0).unwrap(), p(&[1]));
        assert_eq!(QPolynomial::q_double_factorial(2).unwrap(), p(&[1, 1, 1]));
        let d3 = QPolynomial::q_double_factorial(3).unwrap();
        assert_eq!(d3, p(&[1, 2, 3, 3, 3, 2, 1]));
        assert_eq!(d3.degree(), Some(6));
        assert_eq!(d3.eval(1).unwrap(), 15);
        // product structure: [3]_q * [5]_q = [5]_q!!
        let by_parts = QPolynomial::q_int(3)
            .unwrap()
            .checked_mul(&QPolynomial::q_int(5).unwrap())
            .unwrap();
        assert_eq!(by_parts, d3);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[1, 1, 1]).shift(3), p(&[0, 0, 0, 1, 1, 1]));
        assert_eq!(p(&[1, 2]).shift(0), p(&[1, 2]));
        assert_eq!(p(&[1]).shift(1), QPolynomial::monomial(1));
        assert_eq!(QPolynomial::zero().shift(5), QPolynomial::zero());
    }

    #[test]
    fn reverse_examples() {
        // 1 + 2q + q^3  ->  1 + 2q^2 + q^3
        assert_eq!(p(&[1, 2, 0, 1]).reverse().unwrap(), p(&[1, 0, 2, 1]));
        let palindromic = p(&[1, 2, 1]);
        assert_eq!(palindromic.reverse().unwrap(), palindromic);
        assert_eq!(p(&[0, 1]).reverse().unwrap(), p(&[1]));
        assert_eq!(QPolynomial::zero().reverse(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn palindromic_examples() {
        assert!(QPolynomial::q_double_factorial(4)
            .unwrap()
            .is_palindromic()
            .unwrap());
        assert!(!p(&[1, 2]).is_palindromic().unwrap());
        assert!(p(&[5]).is_palindromic().unwrap());
        assert_eq!(
            QPolynomial::zero().is_palindromic(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn arithmetic_examples() {
        let one_plus_q = p(&[1, 1]);
        assert_eq!(&one_plus_q * &one_plus_q, p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 2]) + &QPolynomial::zero(), p(&[1, 2]));
        assert_eq!(&p(&[3]) * &QPolynomial::zero(), QPolynomial::zero());
    }

    #[test]
    fn overflow_is_reported() {
        let huge = p(&[u64::MAX]);
        assert_eq!(huge.checked_add(&p(&[1])), Err(Error::Overflow));
        assert_eq!(huge.checked_mul(&p(&[2])), Err(Error::Overflow));
        assert_eq!(p(&[u64::MAX, u64::MAX]).eval(2), Err(Error::Overflow));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 1, 1]).to_string(), "1 + q + q^2");
        assert_eq!(p(&[0, 0, 0, 1, 1, 1]).to_string(), "q^3 + q^4 + q^5");
        assert_eq!(
            p(&[1, 2, 3, 3, 3, 2, 1]).to_string(),
            "1 + 2q + 3q^2 + 3q^3 + 3q^4 + 2q^5 + q^6"
        );
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_is_a_coefficient_array() {
        let d2 = QPolynomial::q_double_factorial(2).unwrap();
        assert_eq!(serde_json::to_string(&d2).unwrap(), "[1,1,1]");
        let back: QPolynomial = serde_json::from_str("[1,1,1,0]").unwrap();
        assert_eq!(back, d2);
    }
}
