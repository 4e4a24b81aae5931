//! Exact arithmetic for q-analogs, cyclotomic polynomials, and cyclotomic
//! fields.
//!
//! Everything here is integer or rational arithmetic — no floating point.
//! Polynomials with integer coefficients are [`IntPoly`]; field elements of
//! `Q(zeta_m)` are [`CycloElem`].  Evaluation of an integer polynomial at a
//! primitive `d`-th root of unity goes through reduction modulo the `d`-th
//! cyclotomic polynomial: the result is an integer exactly when the residue
//! is constant, and in that case it is the same integer for *every* primitive
//! `d`-th root, so no choice of a particular root is ever needed.

mod field;
mod poly;

pub use field::CycloElem;
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;

/// Euler's totient `phi(m)`.
pub fn euler_phi(m: u32) -> u32 {
    assert!(m > 0, "euler_phi is defined for positive arguments");
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, computed by exact division of `q^d - 1`
/// by the cyclotomic polynomials of the proper divisors of `d` (memoized).
pub fn cyclotomic_poly(d: u32) -> IntPoly {
    assert!(d > 0, "cyclotomic polynomials are indexed by positive integers");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = IntPoly::monomial(d as usize).sub(&IntPoly::one());
    for e in 1..d {
        if d % e == 0 {
            p = p
                .exact_div(&cyclotomic_poly(e))
                .expect("q^d - 1 is divisible by the cyclotomic polynomials of divisors of d");
        }
    }
    cyclo_cache().lock().unwrap().insert(d, p.clone());
    p
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)` (zero for `n = 0`).
pub fn q_int(n: u64) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n as usize])
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u64) -> IntPoly {
    let mut acc = IntPoly::one();
    for k in 2..=n {
        acc = acc.mul(&q_int(k));
    }
    acc
}

/// The Gaussian binomial coefficient `[n choose k]_q` (zero when `k > n`).
pub fn q_binomial(n: u64, k: u64) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    let den = q_factorial(k).mul(&q_factorial(n - k));
    q_factorial(n)
        .exact_div(&den)
        .expect("Gaussian binomials are polynomials")
}

/// Result of evaluating an integer polynomial at a primitive `d`-th root of
/// unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalOutcome {
    /// The value is the same integer at every primitive `d`-th root.
    Integer(BigInt),
    /// The value is irrational; the payload is the nonconstant residue of the
    /// polynomial modulo the `d`-th cyclotomic polynomial.
    NotInteger(IntPoly),
}

impl EvalOutcome {
    /// The integer value, if the outcome is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            EvalOutcome::Integer(v) => Some(v),
            EvalOutcome::NotInteger(_) => None,
        }
    }
}

/// Evaluates `p` at a primitive `d`-th root of unity.
///
/// The polynomial is reduced modulo the `d`-th cyclotomic polynomial; a
/// constant residue means the value is that integer independently of which
/// primitive root is chosen, and a nonconstant residue means the value is
/// irrational (the residue coordinates are a basis of `Q(zeta_d)` over `Q`).
pub fn eval_integer_at_root(p: &IntPoly, d: u32) -> EvalOutcome {
    if d == 1 {
        return EvalOutcome::Integer(p.eval_one());
    }
    let residue = p.rem_monic(&cyclotomic_poly(d));
    match residue.degree() {
        None => EvalOutcome::Integer(BigInt::zero()),
        Some(0) => EvalOutcome::Integer(residue.coeff(0)),
        Some(_) => EvalOutcome::NotInteger(residue),
    }
}

/// Evaluates `p` at the explicit root of unity `zeta_conductor^power`.
pub fn eval_at_root(p: &IntPoly, conductor: u32, power: i64) -> CycloElem {
    let z = CycloElem::zeta_power(conductor, power);
    let mut acc = CycloElem::zero(conductor);
    for c in p.coeffs().iter().rev() {
        acc = acc
            .mul(&z)
            .add(&CycloElem::from_rational(conductor, BigRational::from_integer(c.clone())));
    }
    acc
}

/// The limit of `prod [a]_q / prod [b]_q` as `q` tends to a primitive `d`-th
/// root of unity.
///
/// Factors whose index is divisible by `d` vanish in the limit and contribute
/// the ratio of their indices (l'Hopital); the remaining factors are evaluated
/// directly.  Errors when more denominator than numerator factors vanish (a
/// pole), which cannot happen when the ratio is a polynomial.  The result
/// lives in `Q(zeta_d)` with `zeta_d` the residue class of `q`; use
/// [`CycloElem::as_rational`] to extract a rational value.
pub fn limit_ratio(nums: &[u64], dens: &[u64], d: u32) -> Result<CycloElem, Error> {
    assert!(d > 0, "the order of a root of unity is positive");
    assert!(
        nums.iter().chain(dens).all(|&t| t > 0),
        "q-integer indices must be positive"
    );
    let big = |n: u64| BigRational::from_integer(BigInt::from(n));
    if d == 1 {
        let mut r = BigRational::one();
        for &a in nums {
            r *= big(a);
        }
        for &b in dens {
            r /= big(b);
        }
        return Ok(CycloElem::from_rational(1, r));
    }
    let dd = d as u64;
    let vanish_n = nums.iter().filter(|&&a| a % dd == 0).count();
    let vanish_d = dens.iter().filter(|&&b| b % dd == 0).count();
    if vanish_n > vanish_d {
        return Ok(CycloElem::zero(d));
    }
    if vanish_n < vanish_d {
        return Err(Error::domain(format!(
            "pole at a primitive {d}-th root of unity: \
             {vanish_d} vanishing denominator factors vs {vanish_n} in the numerator"
        )));
    }
    let mut r = BigRational::one();
    for &a in nums.iter().filter(|&&a| a % dd == 0) {
        r *= big(a);
    }
    for &b in dens.iter().filter(|&&b| b % dd == 0) {
        r /= big(b);
    }
    let one = CycloElem::one(d);
    let mut num = CycloElem::from_rational(d, r);
    for &a in nums.iter().filter(|&&a| a % dd != 0) {
        num = num.mul(&CycloElem::zeta_power(d, a as i64).sub(&one));
    }
    let mut den = CycloElem::one(d);
    for &b in dens.iter().filter(|&&b| b % dd != 0) {
        den = den.mul(&CycloElem::zeta_power(d, b as i64).sub(&one));
    }
    num.div(&den)
}

/// Which q-Catalan family a [`QCatalanSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalanVariant {
    /// `prod [mh + d_i]_q / [d_i]_q` over the degrees `d_i`.
    Standard,
    /// `prod [mh + h - d_i]_q / [d_i]_q` (the shifted degrees `h - d_i` are
    /// the codegrees of a duality group).
    Positive,
}

/// Data determining a q-Catalan polynomial: degrees, Coxeter number, Fuss
/// parameter, and variant.
#[derive(Clone, Debug)]
pub struct QCatalanSpec {
    /// Degrees `d_1, ..., d_n` of the reflection group.
    pub degrees: Vec<u64>,
    /// Coxeter number `h` (the largest degree for the groups in scope).
    pub h: u64,
    /// Fuss parameter `m >= 1`.
    pub m: u64,
    /// Standard or positive variant.
    pub variant: CatalanVariant,
}

impl QCatalanSpec {
    /// Indices of the numerator q-integer factors.
    pub fn numerator_terms(&self) -> Vec<u64> {
        self.degrees
            .iter()
            .map(|&d| {
                assert!(d <= self.h, "every degree is at most the Coxeter number");
                match self.variant {
                    CatalanVariant::Standard => self.m * self.h + d,
                    CatalanVariant::Positive => self.m * self.h + self.h - d,
                }
            })
            .collect()
    }

    /// Indices of the denominator q-integer factors (the degrees).
    pub fn denominator_terms(&self) -> Vec<u64> {
        self.degrees.clone()
    }
}

/// Builds the q-Catalan polynomial described by `spec` by exact division.
pub fn catalan_poly(spec: &QCatalanSpec) -> Result<IntPoly, Error> {
    assert!(spec.m >= 1, "the Fuss parameter must be at least 1");
    let mut num = IntPoly::one();
    for a in spec.numerator_terms() {
        num = num.mul(&q_int(a));
    }
    let mut den = IntPoly::one();
    for b in spec.denominator_terms() {
        den = den.mul(&q_int(b));
    }
    num.exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn totient_values() {
        let expected = [1u32, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &phi) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u32 + 1), phi);
        }
    }

    #[test]
    fn small_q_integers() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), IntPoly::one());
        assert_eq!(q_int(4), poly(&[1, 1, 1, 1]));
    }

    #[test]
    fn q_factorial_of_three() {
        assert_eq!(q_factorial(3), poly(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), IntPoly::one());
    }

    #[test]
    fn gaussian_binomial_four_choose_two() {
        assert_eq!(q_binomial(4, 2), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0), IntPoly::one());
        assert!(q_binomial(3, 5).is_zero());
    }

    #[test]
    fn gaussian_binomial_symmetry_and_counting() {
        for n in 0..=10u64 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(b, q_binomial(n, n - k));
                assert!(b.is_nonnegative());
                assert!(b.is_palindromic());
            }
        }
        // At q = 1 the Gaussian binomial counts subsets.
        assert_eq!(q_binomial(6, 3).eval_one(), BigInt::from(20));
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), poly(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_q_n_minus_one() {
        for n in 1..=200u32 {
            let mut prod = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic_poly(d));
                }
            }
            let target = IntPoly::monomial(n as usize).sub(&IntPoly::one());
            assert_eq!(prod, target, "divisor product failed at n = {n}");
        }
    }

    #[test]
    fn integer_evaluation_at_roots() {
        let b = q_binomial(4, 2); // 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(eval_integer_at_root(&b, 1), EvalOutcome::Integer(BigInt::from(6)));
        assert_eq!(eval_integer_at_root(&b, 2), EvalOutcome::Integer(BigInt::from(2)));
        assert_eq!(eval_integer_at_root(&b, 3), EvalOutcome::Integer(BigInt::zero()));
        assert_eq!(eval_integer_at_root(&b, 4), EvalOutcome::Integer(BigInt::zero()));
        // q itself is irrational at any root of order > 2.
        let q = IntPoly::monomial(1);
        assert!(matches!(eval_integer_at_root(&q, 4), EvalOutcome::NotInteger(_)));
        assert_eq!(eval_integer_at_root(&q, 2), EvalOutcome::Integer(BigInt::from(-1)));
    }

    #[test]
    fn explicit_evaluation_matches_reduction() {
        let p = poly(&[3, -1, 0, 2, 5]);
        for d in [1u32, 2, 3, 4, 6, 8] {
            let via_field = eval_at_root(&p, d, 1);
            match eval_integer_at_root(&p, d) {
                EvalOutcome::Integer(v) => {
                    assert!(via_field.eq_value(&CycloElem::from_rational(
                        d,
                        BigRational::from_integer(v)
                    )));
                }
                EvalOutcome::NotInteger(_) => assert!(via_field.as_rational().is_none()),
            }
        }
    }

    #[test]
    fn limit_ratio_known_values() {
        let as_int = |e: CycloElem| e.as_rational().unwrap();
        assert_eq!(as_int(limit_ratio(&[8], &[4], 4).unwrap()), BigRational::from_integer(2.into()));
        assert_eq!(as_int(limit_ratio(&[7], &[3], 4).unwrap()), BigRational::from_integer(1.into()));
        assert_eq!(as_int(limit_ratio(&[6], &[2], 2).unwrap()), BigRational::from_integer(3.into()));
        // More vanishing numerators than denominators: limit is zero.
        assert!(limit_ratio(&[4, 8], &[3], 4).unwrap().is_zero());
        // Pole: vanishing denominator with nonvanishing numerator.
        assert!(limit_ratio(&[3], &[4], 4).is_err());
    }

    #[test]
    fn rank_two_catalan_polynomial() {
        // Degrees {2, 4}: (1/([2][4])) [6][8] = 1 + q^2 + 2q^4 + q^6 + q^8.
        let spec = QCatalanSpec {
            degrees: vec![2, 4],
            h: 4,
            m: 1,
            variant: CatalanVariant::Standard,
        };
        let c = catalan_poly(&spec).unwrap();
        assert_eq!(c, poly(&[1, 0, 1, 0, 2, 0, 1, 0, 1]));
        assert_eq!(eval_integer_at_root(&c, 1), EvalOutcome::Integer(BigInt::from(6)));
        assert_eq!(eval_integer_at_root(&c, 4), EvalOutcome::Integer(BigInt::from(2)));
    }

    #[test]
    fn rank_three_symmetric_catalan_values() {
        // Degrees {2, 3, 4}: counts 14 objects at q = 1, 2 at a fourth root.
        let spec = QCatalanSpec {
            degrees: vec![2, 3, 4],
            h: 4,
            m: 1,
            variant: CatalanVariant::Standard,
        };
        let c = catalan_poly(&spec).unwrap();
        assert_eq!(c.eval_one(), BigInt::from(14));
        assert_eq!(eval_integer_at_root(&c, 4), EvalOutcome::Integer(BigInt::from(2)));
        assert_eq!(eval_integer_at_root(&c, 2), EvalOutcome::Integer(BigInt::from(6)));
        // The limit form agrees factor by factor.
        let v = limit_ratio(&spec.numerator_terms(), &spec.denominator_terms(), 4).unwrap();
        assert_eq!(v.as_rational(), Some(BigRational::from_integer(2.into())));
    }

    #[test]
    fn positive_variant_rank_two() {
        // Degrees {2, 3}, h = 3: [4][3] / ([2][3]) = [4]/[2] = 1 + q^2.
        let spec = QCatalanSpec {
            degrees: vec![2, 3],
            h: 3,
            m: 1,
            variant: CatalanVariant::Positive,
        };
        assert_eq!(catalan_poly(&spec).unwrap(), poly(&[1, 0, 1]));
    }

    #[test]
    fn largest_exceptional_catalan_at_fourth_root() {
        let spec = QCatalanSpec {
            degrees: vec![2, 8, 12, 14, 18, 20, 24, 30],
            h: 30,
            m: 1,
            variant: CatalanVariant::Standard,
        };
        let c = catalan_poly(&spec).unwrap();
        assert!(c.is_nonnegative());
        assert_eq!(eval_integer_at_root(&c, 4), EvalOutcome::Integer(BigInt::from(88)));
        let v = limit_ratio(&spec.numerator_terms(), &spec.denominator_terms(), 4).unwrap();
        assert_eq!(v.as_rational(), Some(BigRational::from_integer(88.into())));
    }

    #[test]
    fn catalan_polynomial_is_actually_polynomial_for_fuss_parameters() {
        for m in 1..=4u64 {
            for degrees in [vec![2u64, 3, 4, 5], vec![4, 8, 12], vec![6, 9, 12, 3]] {
                let h = *degrees.iter().max().unwrap();
                let spec = QCatalanSpec {
                    degrees,
                    h,
                    m,
                    variant: CatalanVariant::Standard,
                };
                let c = catalan_poly(&spec);
                assert!(c.is_ok(), "division must be exact for m = {m}");
            }
        }
    }
}
