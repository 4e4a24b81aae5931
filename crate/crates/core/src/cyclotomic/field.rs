//! Elements of cyclotomic fields `Q(zeta_m)` in the power basis.
//!
//! An element is the residue of a rational polynomial modulo the `m`-th
//! cyclotomic polynomial, stored as exactly `phi(m)` coefficients.  The
//! residue representation is unique, so structural equality and hashing agree
//! with field equality as long as both operands carry the same conductor;
//! binary operations lift both operands into `Q(zeta_lcm)` automatically, and
//! [`CycloElem::eq_value`] compares across conductors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::{cyclotomic_poly, euler_phi};
use crate::error::Error;

/// An element of `Q(zeta_m)`, reduced modulo the `m`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElem {
    conductor: u32,
    /// Exactly `phi(conductor)` coefficients, ascending powers of `zeta_m`.
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduces a rational coefficient vector modulo the (monic, integral) `m`-th
/// cyclotomic polynomial and pads it to exactly `phi(m)` entries.
fn reduce_mod_phi(mut coeffs: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    let phi = euler_phi(m) as usize;
    let modulus = cyclotomic_poly(m);
    let md = modulus.coeffs().len() - 1;
    debug_assert_eq!(md, phi);
    while coeffs.len() > md {
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = coeffs.len() - md;
        for (j, b) in modulus.coeffs().iter().take(md).enumerate() {
            let t = &top * BigRational::from_integer(b.clone());
            coeffs[k + j] -= t;
        }
    }
    coeffs.resize(phi, BigRational::zero());
    coeffs
}

impl CycloElem {
    /// Builds an element of `Q(zeta_m)` from an arbitrary-length coefficient
    /// vector (ascending powers of `zeta_m`), reducing it into the canonical
    /// residue form.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        CycloElem {
            conductor,
            coeffs: reduce_mod_phi(coeffs, conductor),
        }
    }

    /// The zero element of `Q(zeta_m)`.
    pub fn zero(conductor: u32) -> Self {
        CycloElem::from_coeffs(conductor, Vec::new())
    }

    /// The unit element of `Q(zeta_m)`.
    pub fn one(conductor: u32) -> Self {
        CycloElem::from_rational(conductor, BigRational::one())
    }

    /// A rational number viewed inside `Q(zeta_m)`.
    pub fn from_rational(conductor: u32, value: BigRational) -> Self {
        CycloElem::from_coeffs(conductor, vec![value])
    }

    /// An integer viewed inside `Q(zeta_m)`.
    pub fn from_int(conductor: u32, value: i64) -> Self {
        CycloElem::from_rational(conductor, rat(value))
    }

    /// The root of unity `zeta_m^power`.
    pub fn zeta_power(conductor: u32, power: i64) -> Self {
        let m = conductor as i64;
        let p = power.rem_euclid(m) as usize;
        let mut coeffs = vec![BigRational::zero(); p + 1];
        coeffs[p] = BigRational::one();
        CycloElem::from_coeffs(conductor, coeffs)
    }

    /// Conductor `m` of the ambient field `Q(zeta_m)`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical residue coefficients (length `phi(m)`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True if the element is the rational number `1`.
    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// Returns the element as a rational number when it lies in `Q`.
    ///
    /// Residues with any nonzero coefficient beyond the constant term are not
    /// rational (the power basis of the residue ring is linearly independent).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds the element into `Q(zeta_target)`; `target` must be a multiple
    /// of the current conductor.  The embedding sends `zeta_m` to
    /// `zeta_target^(target/m)`.
    pub fn promote(&self, target: u32) -> CycloElem {
        if target == self.conductor {
            return self.clone();
        }
        assert!(
            target % self.conductor == 0,
            "promotion target {target} is not a multiple of conductor {}",
            self.conductor
        );
        let k = (target / self.conductor) as usize;
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        CycloElem::from_coeffs(target, coeffs)
    }

    fn common(a: &CycloElem, b: &CycloElem) -> (CycloElem, CycloElem) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let m = a.conductor.lcm(&b.conductor);
            (a.promote(m), b.promote(m))
        }
    }

    /// Field equality across conductors (lifts both sides to the least common
    /// conductor before comparing residues).
    pub fn eq_value(&self, other: &CycloElem) -> bool {
        if self.conductor == other.conductor {
            return self == other;
        }
        let (a, b) = CycloElem::common(self, other);
        a == b
    }

    /// Sum; operands of different conductors are lifted automatically.
    pub fn add(&self, other: &CycloElem) -> CycloElem {
        let (mut a, b) = CycloElem::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    /// Difference.
    pub fn sub(&self, other: &CycloElem) -> CycloElem {
        let (mut a, b) = CycloElem::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    /// Additive inverse.
    pub fn neg(&self) -> CycloElem {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &CycloElem) -> CycloElem {
        let (a, b) = CycloElem::common(self, other);
        if a.is_zero() || b.is_zero() {
            return CycloElem::zero(a.conductor);
        }
        let mut coeffs = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        CycloElem::from_coeffs(a.conductor, coeffs)
    }

    /// Product with a rational scalar.
    pub fn scale(&self, s: &BigRational) -> CycloElem {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= s;
        }
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic modulus.  Fails on zero.
    pub fn inverse(&self) -> Result<CycloElem, Error> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero in a cyclotomic field"));
        }
        // Extended Euclid over Q[x]: maintain r = s * self (mod Phi_m).
        let modulus: Vec<BigRational> = cyclotomic_poly(self.conductor)
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0 = vec![];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd(self, Phi_m); Phi_m is irreducible, so r0 is a nonzero
        // constant.
        if r0.len() != 1 {
            return Err(Error::internal(
                "cyclotomic modulus shared a factor with a nonzero element",
            ));
        }
        let inv_gcd = r0[0].recip();
        let coeffs = s0.into_iter().map(|c| c * &inv_gcd).collect();
        Ok(CycloElem::from_coeffs(self.conductor, coeffs))
    }

    /// Exact quotient `self / other`.
    pub fn div(&self, other: &CycloElem) -> Result<CycloElem, Error> {
        Ok(self.mul(&other.inverse()?))
    }

    /// `self * zeta_m^power` without building the root separately.
    pub fn mul_zeta_power(&self, power: i64) -> CycloElem {
        self.mul(&CycloElem::zeta_power(self.conductor, power))
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder in `Q[x]`; the divisor must be nonzero.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let qc = &top / lead;
        for (j, bc) in b.iter().enumerate() {
            let t = &qc * bc;
            rem[k + j] -= t;
        }
        quot[k] = qc;
    }
    trim(&mut quot);
    trim(&mut rem);
    (quot, rem)
}

impl fmt::Display for CycloElem {
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
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}
