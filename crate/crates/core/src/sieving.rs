//! Cyclic sieving verification.
//!
//! A cyclic action is given concretely as a permutation generator of a finite
//! indexed set together with the order of the acting cyclic group (which need
//! not act faithfully).  [`csp_check`] compares, for every group element, the
//! exact fixed-point count against the root-of-unity evaluation of a candidate
//! polynomial, and [`faithfulness_analysis`] reports the kernel of the action
//! together with the substituted polynomial witness when the action factors
//! through a quotient.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cyclotomic::{eval_integer_at_root, EvalOutcome, IntPoly};
use crate::error::Error;
use crate::Result;

/// Largest declared order accepted for a cyclic action; the check walks every
/// power of the generator, so the order must stay desk-sized.
const MAX_DECLARED_ORDER: u64 = 100_000;

/// A cyclic group of declared order acting on `{0, .., size-1}` through a
/// permutation generator.
#[derive(Clone, Debug)]
pub struct CyclicActionInstance {
    generator: Vec<usize>,
    declared_order: u64,
}

impl CyclicActionInstance {
    /// Wraps a generator permutation, checking that it is a bijection and
    /// that `generator^declared_order` is the identity (equivalently, every
    /// orbit size divides the declared order).
    pub fn new(generator: Vec<usize>, declared_order: u64) -> Result<Self> {
        if declared_order == 0 {
            return Err(Error::domain("declared order of a cyclic action must be positive"));
        }
        if declared_order > MAX_DECLARED_ORDER {
            return Err(Error::SizeLimit {
                needed: u128::from(declared_order),
                bound: u128::from(MAX_DECLARED_ORDER),
                what: "declared order of a cyclic action".into(),
            });
        }
        let n = generator.len();
        let mut seen = vec![false; n];
        for &img in &generator {
            if img >= n || seen[img] {
                return Err(Error::domain("generator of a cyclic action is not a permutation"));
            }
            seen[img] = true;
        }
        let instance = CyclicActionInstance { generator, declared_order };
        for orbit in instance.orbits() {
            if declared_order % orbit.len() as u64 != 0 {
                return Err(Error::domain(format!(
                    "declared order {} is not annihilating: an orbit has size {}",
                    declared_order,
                    orbit.len()
                )));
            }
        }
        Ok(instance)
    }

    /// Number of points acted on.
    pub fn size(&self) -> usize {
        self.generator.len()
    }

    /// Order of the acting cyclic group.
    pub fn declared_order(&self) -> u64 {
        self.declared_order
    }

    /// The generator as a permutation (`j ↦ generator[j]`).
    pub fn generator(&self) -> &[usize] {
        &self.generator
    }

    /// Orbits of the generator, each listed starting from its smallest point,
    /// ordered by that smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.generator.len();
        let mut visited = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                orbit.push(j);
                j = self.generator[j];
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Multiset of orbit sizes, sorted ascending.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Number of points fixed by `generator^i`, computed by applying the
    /// generator directly.
    pub fn fixed_count(&self, i: u64) -> usize {
        (0..self.generator.len())
            .filter(|&start| {
                let mut j = start;
                for _ in 0..i {
                    j = self.generator[j];
                }
                j == start
            })
            .count()
    }

    /// Smallest `j > 0` with `generator^j` equal to the identity (the least
    /// common multiple of the orbit sizes).
    pub fn minimal_period(&self) -> u64 {
        self.orbits()
            .iter()
            .fold(1u64, |acc, orbit| acc.lcm(&(orbit.len() as u64)))
    }
}

/// One row of a sieving comparison at generator power `i`.
#[derive(Clone, Debug)]
pub struct CspRow {
    /// The power of the generator.
    pub power: u64,
    /// Multiplicative order of the corresponding root of unity.
    pub root_order: u32,
    /// Fixed-point count of `generator^power`.
    pub fixed: u64,
    /// Evaluation of the polynomial at a primitive root of that order.
    pub evaluation: EvalOutcome,
    /// Whether the evaluation is an integer equal to the fixed count.
    pub matches: bool,
}

/// Kernel analysis of a cyclic action relative to its declared order.
#[derive(Clone, Debug)]
pub struct Faithfulness {
    /// Minimal period of the generator.
    pub minimal_period: u64,
    /// Order of the kernel: declared order divided by the minimal period.
    pub kernel_order: u64,
    /// When the kernel is nontrivial, the polynomial `g` with
    /// `P(q) = g(q^kernel_order)` if one exists.
    pub substituted: Option<IntPoly>,
}

/// Full outcome of a cyclic sieving check.
#[derive(Clone, Debug)]
pub struct CspReport {
    /// Order of the acting cyclic group.
    pub declared_order: u64,
    /// The candidate polynomial.
    pub polynomial: IntPoly,
    /// One comparison row per generator power.
    pub rows: Vec<CspRow>,
    /// Orbit-size multiset of the generator, sorted ascending.
    pub orbit_sizes: Vec<usize>,
    /// True when every row matches.
    pub pass: bool,
    /// Kernel analysis of the action.
    pub faithfulness: Faithfulness,
}

/// Checks the sieving equalities `|X^{c^i}| = P(ζ^i)` for every power `i` of
/// the generator, where `ζ` is a primitive root of unity of the declared
/// order.  Mismatches (including non-integer evaluations, reported with their
/// residues) are recorded in the report rather than raised.
pub fn csp_check(instance: &CyclicActionInstance, polynomial: &IntPoly) -> CspReport {
    let order = instance.declared_order();
    let size = instance.size();
    let mut power_perm: Vec<usize> = (0..size).collect();
    let mut fixed_by_class: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut rows = Vec::with_capacity(order as usize);
    for i in 0..order {
        if i > 0 {
            for entry in &mut power_perm {
                *entry = instance.generator()[*entry];
            }
        }
        let fixed: Vec<usize> = (0..size).filter(|&j| power_perm[j] == j).collect();
        let root_order = u32::try_from(order / i.gcd(&order)).expect("root order fits in u32");
        // Powers generating the same cyclic subgroup must fix the same set.
        let class = fixed_by_class.entry(u64::from(root_order)).or_insert_with(|| fixed.clone());
        assert_eq!(
            *class, fixed,
            "fixed set of power {i} differs from another generator of the same subgroup"
        );
        let evaluation = eval_integer_at_root(polynomial, root_order);
        let matches = matches!(
            evaluation.as_integer(),
            Some(value) if *value == BigInt::from(fixed.len())
        );
        rows.push(CspRow { power: i, root_order, fixed: fixed.len() as u64, evaluation, matches });
    }
    let pass = rows.iter().all(|row| row.matches);
    CspReport {
        declared_order: order,
        polynomial: polynomial.clone(),
        rows,
        orbit_sizes: instance.orbit_sizes(),
        pass,
        faithfulness: faithfulness_analysis(instance, polynomial),
    }
}

/// Reports the kernel order of the action (declared order over minimal
/// period) and, for a nontrivial kernel, attempts to write the polynomial as
/// `g(q^kernel_order)`.
pub fn faithfulness_analysis(instance: &CyclicActionInstance, polynomial: &IntPoly) -> Faithfulness {
    let minimal_period = instance.minimal_period();
    let kernel_order = instance.declared_order() / minimal_period;
    let substituted = if kernel_order > 1 {
        polynomial.deflate(kernel_order as usize)
    } else {
        None
    };
    Faithfulness { minimal_period, kernel_order, substituted }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::q_int;

    fn instance(generator: Vec<usize>, order: u64) -> CyclicActionInstance {
        CyclicActionInstance::new(generator, order).expect("valid instance")
    }

    #[test]
    fn validation_rejects_bad_instances() {
        assert!(CyclicActionInstance::new(vec![0, 0], 2).is_err());
        assert!(CyclicActionInstance::new(vec![1, 2, 0], 2).is_err());
        assert!(CyclicActionInstance::new(vec![0], 0).is_err());
        assert!(CyclicActionInstance::new(vec![1, 2, 0], 6).is_ok());
    }

    #[test]
    fn orbit_structure() {
        let id5 = instance((0..5).collect(), 3);
        assert_eq!(id5.orbit_sizes(), vec![1, 1, 1, 1, 1]);
        let cycle = instance(vec![1, 2, 3, 0], 4);
        assert_eq!(cycle.orbit_sizes(), vec![4]);
        assert_eq!(cycle.minimal_period(), 4);
        let compound = instance(vec![0, 2, 1, 4, 5, 3], 6);
        assert_eq!(compound.orbit_sizes(), vec![1, 2, 3]);
        assert_eq!(compound.minimal_period(), 6);
    }

    #[test]
    fn fixed_counts_match_orbit_reconstruction() {
        let compound = instance(vec![0, 2, 1, 4, 5, 3], 6);
        for i in 0..6u64 {
            let direct = compound.fixed_count(i);
            let reconstructed: usize = compound
                .orbits()
                .iter()
                .map(Vec::len)
                .filter(|&s| i % s as u64 == 0)
                .sum();
            assert_eq!(direct, reconstructed, "power {i}");
        }
        assert_eq!(compound.fixed_count(0), 6);
        assert_eq!(compound.fixed_count(2), 3);
        assert_eq!(compound.fixed_count(3), 4);
    }

    #[test]
    fn two_cycle_with_q_int_two_passes() {
        let swap = instance(vec![1, 0], 2);
        let report = csp_check(&swap, &q_int(2));
        assert!(report.pass);
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.rows[0].fixed, 2);
        assert_eq!(report.rows[1].fixed, 0);
        assert_eq!(report.faithfulness.kernel_order, 1);
        assert!(report.faithfulness.substituted.is_none());
    }

    #[test]
    fn evaluation_depends_only_on_residue_mod_q_order_minus_one() {
        let swap = instance(vec![1, 0], 2);
        let base = q_int(2);
        let shifted = base.add(
            &IntPoly::from_i64(&[-1, 0, 1]).mul(&IntPoly::from_i64(&[5, 1])),
        );
        let a = csp_check(&swap, &base);
        let b = csp_check(&swap, &shifted);
        assert!(a.pass && b.pass);
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.fixed, rb.fixed);
            assert_eq!(ra.matches, rb.matches);
        }
    }

    #[test]
    fn perturbed_polynomial_fails() {
        let swap = instance(vec![1, 0], 2);
        assert!(csp_check(&swap, &q_int(2)).pass);
        let perturbed = q_int(2).add(&IntPoly::from_i64(&[0, 0, 1]));
        let report = csp_check(&swap, &perturbed);
        assert!(!report.pass);
        assert!(!report.rows[0].matches);
    }

    #[test]
    fn non_faithful_action_reports_substituted_polynomial() {
        // Two 2-cycles declared as an order-4 action: the kernel has order 2.
        let double_swap = instance(vec![1, 0, 3, 2], 4);
        let square = IntPoly::from_i64(&[1, 0, 2, 0, 1]);
        let report = csp_check(&double_swap, &square);
        assert!(report.pass);
        assert_eq!(report.faithfulness.minimal_period, 2);
        assert_eq!(report.faithfulness.kernel_order, 2);
        assert_eq!(
            report.faithfulness.substituted,
            Some(IntPoly::from_i64(&[1, 2, 1]))
        );
        // A polynomial not supported on multiples of the kernel order has no
        // substituted witness.
        let report = csp_check(&double_swap, &IntPoly::from_i64(&[2, 1, 1]));
        assert!(report.faithfulness.substituted.is_none());
    }

    #[test]
    fn non_integer_evaluations_are_mismatches() {
        // A 4-cycle against the polynomial q: evaluations at i and -1 are not
        // all integers, and the integer ones do not match the fixed counts.
        let cycle = instance(vec![1, 2, 3, 0], 4);
        let report = csp_check(&cycle, &IntPoly::from_i64(&[0, 1]));
        assert!(!report.pass);
        let nonint: Vec<bool> = report
            .rows
            .iter()
            .map(|row| row.evaluation.as_integer().is_none())
            .collect();
        assert_eq!(nonint, vec![false, true, false, true]);
    }
}
