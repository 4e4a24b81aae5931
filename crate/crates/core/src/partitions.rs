//! Noncrossing set partitions of `{1..n}`.
//!
//! The concrete model behind the type-A interval: partitions whose blocks
//! have pairwise disjoint convex hulls on a circle, with the cyclic rotation
//! action, the cycle bijection from interval elements to partitions, and
//! block-type refined counting — the Kreweras numbers, their q-analogue, and
//! the counts of rotation-symmetric partitions.

use std::collections::HashMap;

use crate::cyclotomic::{q_factorial, q_int, IntPoly};
use crate::error::Error;
use crate::groups::GroupElement;
use crate::sieving::{csp_check, CspReport, CyclicActionInstance};
use crate::Result;

/// Largest ground set enumerated.
const NCN_LIMIT: usize = 14;
/// Largest ground set for the refined sieving report.
const REFINED_LIMIT: usize = 10;

/// A set partition of `{1..n}` in canonical form: blocks sorted ascending
/// internally and ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that the blocks are nonempty, disjoint, and cover `{1..n}`,
    /// then stores them canonically.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        if n == 0 {
            return Err(Error::domain("the ground set must be nonempty"));
        }
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::domain("blocks must be nonempty"));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::domain(format!("element {e} outside 1..={n}")));
                }
                if seen[e] {
                    return Err(Error::domain(format!("element {e} appears twice")));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::domain(format!("element {missing} is not covered")));
        }
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable();
        Ok(SetPartition { n, blocks })
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The blocks in canonical order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Whether no two blocks cross: there are no `a < b < c < d` with
    /// `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        for (i, x) in self.blocks.iter().enumerate() {
            for y in &self.blocks[i + 1..] {
                if blocks_cross(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Relabels every element by `e ↦ e + shift` cyclically.
    pub fn rotate_by(&self, shift: usize) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|block| block.iter().map(|e| (e - 1 + shift) % self.n + 1).collect())
            .collect();
        SetPartition::new(self.n, blocks).expect("rotation preserves partitions")
    }

    /// Relabels every element by `e ↦ e + 1` cyclically.
    pub fn rotate(&self) -> SetPartition {
        self.rotate_by(1)
    }

    /// The block-size multiplicities.
    pub fn block_type(&self) -> BlockType {
        let mut counts = Vec::new();
        for block in &self.blocks {
            let size = block.len();
            if counts.len() < size {
                counts.resize(size, 0);
            }
            counts[size - 1] += 1;
        }
        BlockType { counts }
    }
}

/// Two sorted blocks cross when their merged order alternates more than
/// once in each direction.
fn blocks_cross(x: &[usize], y: &[usize]) -> bool {
    let (mut xi, mut yi) = (0, 0);
    let mut last = 0u8;
    let mut switches = 0;
    while xi < x.len() || yi < y.len() {
        let take_x = yi == y.len() || (xi < x.len() && x[xi] < y[yi]);
        let label = if take_x { 1 } else { 2 };
        if take_x {
            xi += 1;
        } else {
            yi += 1;
        }
        if label != last {
            if last != 0 {
                switches += 1;
            }
            last = label;
        }
    }
    switches >= 3
}

/// Block-size multiplicities of a partition: `multiplicity(i)` blocks of
/// size `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockType {
    /// `counts[i]` is the number of blocks of size `i + 1`.
    counts: Vec<usize>,
}

impl BlockType {
    /// Builds a type from `(size, multiplicity)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<BlockType> {
        let mut counts = Vec::new();
        for &(size, multiplicity) in pairs {
            if size == 0 {
                return Err(Error::domain("block size must be positive"));
            }
            if counts.len() < size {
                counts.resize(size, 0);
            }
            counts[size - 1] += multiplicity;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(BlockType { counts })
    }

    /// Number of blocks of the given size.
    pub fn multiplicity(&self, size: usize) -> usize {
        if size == 0 || size > self.counts.len() { 0 } else { self.counts[size - 1] }
    }

    /// Total number of blocks.
    pub fn block_count(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Size of the partitioned ground set, `Σ i·mᵢ`.
    pub fn total(&self) -> usize {
        self.counts.iter().enumerate().map(|(i, m)| (i + 1) * m).sum()
    }
}

fn catalan_u128(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Enumerates all noncrossing partitions of `{1..n}` in canonical order;
/// the count is checked against the Catalan number.
pub fn enumerate_ncn(n: usize) -> Result<Vec<SetPartition>> {
    if n == 0 {
        return Err(Error::domain("the ground set must be nonempty"));
    }
    if n > NCN_LIMIT {
        return Err(Error::SizeLimit {
            needed: catalan_u128(n.min(33)),
            bound: catalan_u128(NCN_LIMIT),
            what: format!("noncrossing partitions of a {n}-element set"),
        });
    }
    let mut out = Vec::with_capacity(catalan_u128(n) as usize);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    extend_partition(n, 1, &mut blocks, &mut out);
    out.sort_unstable();
    if out.len() as u128 != catalan_u128(n) {
        return Err(Error::internal(format!(
            "enumerated {} noncrossing partitions of [{n}], expected {}",
            out.len(),
            catalan_u128(n)
        )));
    }
    Ok(out)
}

/// Extends a noncrossing partition of `{1..e-1}` by element `e`: the element
/// may join a block only when no other block straddles a member of it, and
/// may always start a new block.
fn extend_partition(
    n: usize,
    e: usize,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<SetPartition>,
) {
    if e > n {
        // Blocks were created in order of their minima with ascending
        // members, so they are already canonical.
        out.push(SetPartition { n, blocks: blocks.clone() });
        return;
    }
    for bi in 0..blocks.len() {
        let joinable = blocks.iter().enumerate().all(|(xi, x)| {
            xi == bi
                || x.len() < 2
                || !blocks[bi].iter().any(|&b| x[0] < b && b < *x.last().expect("nonempty"))
        });
        if joinable {
            blocks[bi].push(e);
            extend_partition(n, e + 1, blocks, out);
            blocks[bi].pop();
        }
    }
    blocks.push(vec![e]);
    extend_partition(n, e + 1, blocks, out);
    blocks.pop();
}

/// Sends a permutation in the interval below the full cycle `(1 2 .. n)` to
/// its cycle partition.  Rejects elements outside the interval: every cycle
/// must visit its members in increasing order and the cycle sets must be
/// pairwise noncrossing.
pub fn perm_to_partition(w: &GroupElement) -> Result<SetPartition> {
    let GroupElement::Monomial(m) = w else {
        return Err(Error::domain("expected a permutation-realized element"));
    };
    if m.d() != 1 {
        return Err(Error::domain("expected a plain permutation, found scalings"));
    }
    let mut blocks = Vec::new();
    for (cycle, _) in m.cycles() {
        if cycle.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain(
                "a cycle visits its members out of increasing order",
            ));
        }
        blocks.push(cycle.iter().map(|&i| i + 1).collect());
    }
    let partition = SetPartition::new(m.n(), blocks)?;
    if !partition.is_noncrossing() {
        return Err(Error::domain("the cycle partition crosses"));
    }
    Ok(partition)
}

/// The rotation on an enumerated family of partitions as a cyclic action of
/// declared order `n`; the family must be closed under rotation.
pub fn partition_rotation_action(partitions: &[SetPartition]) -> Result<CyclicActionInstance> {
    let n = partitions
        .first()
        .map(|p| p.n())
        .ok_or_else(|| Error::domain("rotation action on an empty family"))?;
    let position: HashMap<&SetPartition, usize> = partitions.iter().zip(0..).collect();
    let mut perm = Vec::with_capacity(partitions.len());
    for p in partitions {
        let image = p.rotate();
        let j = *position
            .get(&image)
            .ok_or_else(|| Error::domain("the family is not closed under rotation"))?;
        perm.push(j);
    }
    CyclicActionInstance::new(perm, n as u64)
}

/// Number of noncrossing partitions of `{1..n}` with the given block type:
/// `n(n-1)⋯(n-k+2) / ∏ mᵢ!` with `k` blocks in total.
pub fn kreweras_count(n: usize, block_type: &BlockType) -> Result<u128> {
    if block_type.total() != n {
        return Err(Error::domain(format!(
            "block sizes sum to {}, not {n}",
            block_type.total()
        )));
    }
    let k = block_type.block_count();
    let mut numerator: u128 = 1;
    for j in (n - k + 2)..=n {
        numerator = numerator
            .checked_mul(j as u128)
            .ok_or_else(|| Error::domain("count overflows"))?;
    }
    let mut denominator: u128 = 1;
    for &m in &block_type.counts {
        for f in 1..=m as u128 {
            denominator *= f;
        }
    }
    if numerator % denominator != 0 {
        return Err(Error::internal("block-type count is not an integer"));
    }
    Ok(numerator / denominator)
}

/// The q-analogue of [`kreweras_count`]:
/// `[n][n-1]⋯[n-k+2] / ∏ [mᵢ]!`, an exact polynomial division.
pub fn q_kreweras_poly(n: usize, block_type: &BlockType) -> Result<IntPoly> {
    if block_type.total() != n {
        return Err(Error::domain(format!(
            "block sizes sum to {}, not {n}",
            block_type.total()
        )));
    }
    let k = block_type.block_count();
    let mut numerator = IntPoly::one();
    for j in (n - k + 2)..=n {
        numerator = numerator.mul(&q_int(j as u64));
    }
    let mut denominator = IntPoly::one();
    for &m in &block_type.counts {
        denominator = denominator.mul(&q_factorial(m as u64));
    }
    numerator
        .exact_div(&denominator)
        .map_err(|_| Error::internal("block-type polynomial division left a remainder"))
}

/// All block types with sizes summing to `n`, i.e. the partitions of the
/// integer `n`, in a deterministic order.
pub fn all_block_types(n: usize) -> Vec<BlockType> {
    fn fill(remaining: usize, largest: usize, counts: &mut Vec<usize>, out: &mut Vec<BlockType>) {
        if remaining == 0 {
            let mut trimmed = counts.clone();
            while trimmed.last() == Some(&0) {
                trimmed.pop();
            }
            out.push(BlockType { counts: trimmed });
            return;
        }
        for size in (1..=largest.min(remaining)).rev() {
            counts[size - 1] += 1;
            fill(remaining - size, size, counts, out);
            counts[size - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut vec![0; n], &mut out);
    out
}

/// Number of noncrossing partitions of `{1..n}` with the given block type
/// that are invariant under rotation by `n/d`, counted by brute force.
pub fn symmetric_type_count(n: usize, d: usize, block_type: &BlockType) -> Result<u128> {
    if d < 2 || n % d != 0 {
        return Err(Error::domain(format!("{d} must divide {n} and be at least 2")));
    }
    let shift = n / d;
    let mut count = 0u128;
    for p in enumerate_ncn(n)? {
        if p.block_type() == *block_type && p.rotate_by(shift) == p {
            count += 1;
        }
    }
    Ok(count)
}

/// Runs the sieving comparison for one block type: rotation on the
/// type-restricted family against its q-counting polynomial.
pub fn refined_csp(n: usize, block_type: &BlockType) -> Result<CspReport> {
    if n > REFINED_LIMIT {
        return Err(Error::SizeLimit {
            needed: catalan_u128(n.min(33)),
            bound: catalan_u128(REFINED_LIMIT),
            what: format!("refined sieving report on a {n}-element set"),
        });
    }
    let family: Vec<SetPartition> = enumerate_ncn(n)?
        .into_iter()
        .filter(|p| p.block_type() == *block_type)
        .collect();
    if family.is_empty() {
        return Err(Error::domain(format!(
            "block sizes sum to {}, not {n}",
            block_type.total()
        )));
    }
    let action = partition_rotation_action(&family)?;
    Ok(csp_check(&action, &q_kreweras_poly(n, block_type)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{
        catalan_poly, eval_integer_at_root, CatalanVariant, EvalOutcome, QCatalanSpec,
    };
    use crate::groups::{build_group, parse_spec, MonomialElem};
    use crate::noncrossing::enumerate_nc;
    use num_bigint::BigInt;

    fn partition(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).expect("valid")
    }

    #[test]
    fn enumeration_counts_and_validity() {
        assert_eq!(enumerate_ncn(1).unwrap().len(), 1);
        assert_eq!(enumerate_ncn(3).unwrap().len(), 5);
        assert_eq!(enumerate_ncn(4).unwrap().len(), 14);
        let six = enumerate_ncn(6).unwrap();
        assert_eq!(six.len(), 132);
        for p in &six {
            assert!(p.is_noncrossing());
            assert!(p.blocks().windows(2).all(|w| w[0][0] < w[1][0]));
        }
        assert!(matches!(enumerate_ncn(0), Err(Error::Domain(_))));
        assert!(matches!(enumerate_ncn(15), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn crossing_detection() {
        assert!(!partition(4, &[&[1, 3], &[2, 4]]).is_noncrossing());
        assert!(partition(4, &[&[1, 4], &[2, 3]]).is_noncrossing());
        assert!(partition(4, &[&[1, 2, 3, 4]]).is_noncrossing());
        assert!(partition(6, &[&[1, 4, 5], &[2, 3], &[6]]).is_noncrossing());
        assert!(!partition(6, &[&[1, 4], &[2, 5], &[3], &[6]]).is_noncrossing());
    }

    #[test]
    fn rotation_relabels_cyclically() {
        let p = partition(4, &[&[1, 2], &[3], &[4]]);
        assert_eq!(p.rotate(), partition(4, &[&[1], &[2, 3], &[4]]));
        let singletons = partition(4, &[&[1], &[2], &[3], &[4]]);
        assert_eq!(singletons.rotate(), singletons);
        for p in enumerate_ncn(5).unwrap() {
            assert_eq!(p.rotate_by(5), p);
            assert_eq!(p.rotate().rotate_by(4), p);
            assert!(p.rotate().is_noncrossing());
        }
    }

    #[test]
    fn cycle_map_sends_interval_elements_to_partitions() {
        let s4 = build_group(&parse_spec("A3").unwrap()).unwrap();
        let identity = s4.identity();
        assert_eq!(
            perm_to_partition(&identity).unwrap(),
            partition(4, &[&[1], &[2], &[3], &[4]])
        );
        assert_eq!(
            perm_to_partition(s4.coxeter_element()).unwrap(),
            partition(4, &[&[1, 2, 3, 4]])
        );
        let swap = GroupElement::Monomial(MonomialElem::transposition_like(1, 4, 0, 1, 0));
        assert_eq!(
            perm_to_partition(&swap).unwrap(),
            partition(4, &[&[1, 2], &[3], &[4]])
        );
    }

    #[test]
    fn cycle_map_rejects_elements_outside_the_interval() {
        // The inverse full cycle visits its members in decreasing order.
        let s3 = build_group(&parse_spec("A2").unwrap()).unwrap();
        let c_inv = s3.inverse(s3.coxeter_element());
        assert!(matches!(perm_to_partition(&c_inv), Err(Error::Domain(_))));
        // (1 3)(2 4): both cycles increase but the blocks cross.
        let crossing = GroupElement::Monomial(MonomialElem::new(1, vec![2, 3, 0, 1], vec![0; 4]));
        assert!(matches!(perm_to_partition(&crossing), Err(Error::Domain(_))));
        // A scaling-carrying element is not a permutation.
        let scaled = GroupElement::Monomial(MonomialElem::diagonal(3, 2, 0, 1));
        assert!(matches!(perm_to_partition(&scaled), Err(Error::Domain(_))));
    }

    #[test]
    fn cycle_map_is_a_bijection_intertwining_conjugation_and_rotation() {
        for (name, n) in [("A3", 4), ("A5", 6)] {
            let group = build_group(&parse_spec(name).unwrap()).unwrap();
            let poset = enumerate_nc(&group).unwrap();
            let c = group.coxeter_element().clone();
            let c_inv = group.inverse(&c);
            let mut images = Vec::new();
            for w in poset.elements() {
                let p = perm_to_partition(w).expect("interval elements map cleanly");
                let conjugate = group.multiply(&group.multiply(&c, w), &c_inv);
                assert_eq!(
                    perm_to_partition(&conjugate).unwrap(),
                    p.rotate(),
                    "{name}: conjugation must match rotation"
                );
                images.push(p);
            }
            images.sort_unstable();
            images.dedup();
            assert_eq!(images, enumerate_ncn(n).unwrap(), "{name}");
        }
    }

    #[test]
    fn block_type_counts_match_brute_force() {
        let pairs = BlockType::from_pairs(&[(2, 2)]).unwrap();
        assert_eq!(kreweras_count(4, &pairs).unwrap(), 2);
        let mixed = BlockType::from_pairs(&[(1, 2), (2, 1)]).unwrap();
        assert_eq!(kreweras_count(4, &mixed).unwrap(), 6);
        let single = BlockType::from_pairs(&[(7, 1)]).unwrap();
        assert_eq!(kreweras_count(7, &single).unwrap(), 1);
        assert!(matches!(kreweras_count(5, &pairs), Err(Error::Domain(_))));

        for n in 1..=8 {
            let mut histogram: HashMap<BlockType, u128> = HashMap::new();
            for p in enumerate_ncn(n).unwrap() {
                *histogram.entry(p.block_type()).or_default() += 1;
            }
            let mut total = 0u128;
            for t in all_block_types(n) {
                let formula = kreweras_count(n, &t).unwrap();
                assert_eq!(histogram.get(&t).copied().unwrap_or(0), formula, "n = {n}");
                total += formula;
            }
            assert_eq!(total, catalan_u128(n), "n = {n}");
        }
    }

    #[test]
    fn q_counts_specialize_to_plain_counts() {
        let pairs = BlockType::from_pairs(&[(2, 2)]).unwrap();
        assert_eq!(q_kreweras_poly(4, &pairs).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        let single = BlockType::from_pairs(&[(6, 1)]).unwrap();
        assert_eq!(q_kreweras_poly(6, &single).unwrap(), IntPoly::one());
        for n in 1..=8 {
            for t in all_block_types(n) {
                let poly = q_kreweras_poly(n, &t).unwrap();
                assert_eq!(
                    poly.eval_one(),
                    BigInt::from(kreweras_count(n, &t).unwrap()),
                    "n = {n}, {t:?}"
                );
            }
        }
    }

    #[test]
    fn symmetric_counts_match_the_quotient_formula_and_root_evaluations() {
        let pairs = BlockType::from_pairs(&[(2, 2)]).unwrap();
        assert_eq!(symmetric_type_count(4, 2, &pairs).unwrap(), 2);
        let full = BlockType::from_pairs(&[(4, 1)]).unwrap();
        assert_eq!(symmetric_type_count(4, 4, &full).unwrap(), 1);
        let mixed = BlockType::from_pairs(&[(1, 3), (3, 1)]).unwrap();
        let count = symmetric_type_count(6, 3, &mixed).unwrap();
        // Quotient formula: n' = 2 with k' = 1 blocks surviving, and one
        // length-1 block type remaining, gives 2 · 1 / 1! = 2.
        assert_eq!(count, 2);
        let quotient = {
            let n_prime = 6 / 3;
            let k_prime = mixed.block_count() / 3;
            let mut value = 1u128;
            for j in (n_prime - k_prime + 1)..=n_prime {
                value *= j as u128;
            }
            for size in 1..=6 {
                for f in 1..=(mixed.multiplicity(size) / 3) as u128 {
                    value /= f;
                }
            }
            value
        };
        assert_eq!(count, quotient);

        // Rotation-symmetric counts are the root-of-unity values of the
        // q-counting polynomial.
        for (n, d, t) in [
            (4, 2, &pairs),
            (4, 4, &full),
            (6, 3, &mixed),
            (6, 2, &BlockType::from_pairs(&[(3, 2)]).unwrap()),
            (6, 2, &BlockType::from_pairs(&[(1, 2), (2, 2)]).unwrap()),
            (8, 2, &BlockType::from_pairs(&[(2, 4)]).unwrap()),
        ] {
            let poly = q_kreweras_poly(n, t).unwrap();
            let EvalOutcome::Integer(value) = eval_integer_at_root(&poly, d as u32) else {
                panic!("non-integer evaluation for n = {n}, d = {d}");
            };
            assert_eq!(
                BigInt::from(symmetric_type_count(n, d, t).unwrap()),
                value,
                "n = {n}, d = {d}"
            );
        }
        assert!(matches!(symmetric_type_count(5, 2, &pairs), Err(Error::Domain(_))));
    }

    #[test]
    fn refined_sieving_passes_per_type() {
        let pairs = BlockType::from_pairs(&[(2, 2)]).unwrap();
        assert!(refined_csp(4, &pairs).unwrap().pass);
        let singletons = BlockType::from_pairs(&[(1, 5)]).unwrap();
        assert!(refined_csp(5, &singletons).unwrap().pass);
        let four_pairs = BlockType::from_pairs(&[(2, 4)]).unwrap();
        assert!(refined_csp(8, &four_pairs).unwrap().pass);
        for n in 1..=7 {
            for t in all_block_types(n) {
                assert!(refined_csp(n, &t).unwrap().pass, "n = {n}, {t:?}");
            }
        }
        assert!(matches!(
            refined_csp(11, &BlockType::from_pairs(&[(11, 1)]).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn rotation_exhibits_the_catalan_sieving_pattern() {
        for n in 2..=9u64 {
            let family = enumerate_ncn(n as usize).unwrap();
            let action = partition_rotation_action(&family).unwrap();
            let polynomial = catalan_poly(&QCatalanSpec {
                degrees: (2..=n).collect(),
                h: n,
                m: 1,
                variant: CatalanVariant::Standard,
            })
            .unwrap();
            let report = csp_check(&action, &polynomial);
            assert!(report.pass, "n = {n}");
        }
    }
}
