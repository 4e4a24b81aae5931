//! Dense univariate polynomials over the arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order and kept canonical: the
//! zero polynomial has an empty coefficient vector, and a nonzero polynomial
//! never has a trailing zero coefficient.  All ring operations are exact;
//! division is only offered in the exact (zero remainder) form used by the
//! `q`-analogue quotients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// A polynomial in one variable `q` with `BigInt` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros so the representation is canonical.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// Convenience constructor from machine integers (ascending degree).
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Ascending-degree coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero when `k` exceeds the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True if the coefficient vector reads the same in both directions
    /// (the zero polynomial counts as palindromic).
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact value at `q = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    /// Product of two polynomials (schoolbook; degrees stay small enough
    /// here that no fancier multiplication is warranted).
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Substitutes `q^k` for `q`, spreading the coefficients out by a factor
    /// of `k`.  `k` must be positive.
    pub fn inflate(&self, k: usize) -> IntPoly {
        assert!(k > 0, "inflation factor must be positive");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Inverse of [`inflate`](Self::inflate): returns `g` with
    /// `self = g(q^k)`, or `None` when a nonzero coefficient sits off the
    /// multiples of `k`.
    pub fn deflate(&self, k: usize) -> Option<IntPoly> {
        assert!(k > 0, "deflation factor must be positive");
        let mut out = Vec::with_capacity(self.coeffs.len() / k + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % k == 0 {
                out.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(IntPoly::new(out))
    }

    /// Exact quotient `self / divisor`.  Fails with `Error::Internal` when the
    /// divisor is zero, the division leaves a remainder, or a leading-term
    /// division is inexact; the `q`-analogue quotients in this crate are all
    /// exact by construction, so any failure signals a real bug upstream.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, Error> {
        if divisor.is_zero() {
            return Err(Error::internal("polynomial division by zero"));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() - 1 < dd {
            return Err(Error::internal("inexact polynomial division (degree)"));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::internal(
                    "inexact polynomial division (leading coefficient)",
                ));
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &qc * b;
                rem[k + j] -= t;
            }
            quot[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::internal("inexact polynomial division (remainder)"));
        }
        Ok(IntPoly::new(quot))
    }

    /// Remainder of `self` modulo a monic divisor.  Panics if the divisor is
    /// not monic; the only divisors used here are cyclotomic polynomials.
    pub fn rem_monic(&self, divisor: &IntPoly) -> IntPoly {
        assert!(
            divisor.coeffs.last().is_some_and(|c| c.is_one()),
            "rem_monic requires a monic divisor"
        );
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = rem.len() - dd;
            for (j, b) in divisor.coeffs.iter().take(dd).enumerate() {
                let t = &top * b;
                rem[k + j] -= t;
            }
        }
        IntPoly::new(rem)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
