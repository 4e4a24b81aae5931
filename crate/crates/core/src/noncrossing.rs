//! Noncrossing partition lattices of well-generated reflection groups.
//!
//! The noncrossing partition set `NC(W)` is the interval between the identity
//! and a Coxeter element `c` in absolute order: the elements `w` whose
//! reflection lengths are additive, `ℓ(w) + ℓ(w⁻¹c) = rank`.  This module
//! enumerates that interval as a ranked poset with a materialized order
//! relation, checks the lattice property, implements the two cyclic actions on
//! it (conjugation `w ↦ cwc⁻¹` and the Kreweras complementation `w ↦ cw⁻¹`),
//! and enumerates the `(m+1)`-tuple factorizations of `c` with additive
//! lengths together with their two rotation actions.

use std::collections::HashMap;

use crate::error::Error;
use crate::groups::{GroupElement, ReflectionGroup};
use crate::linalg;
use crate::sieving::CyclicActionInstance;
use crate::Result;

/// Largest interval size enumerated.
const NC_ENUM_LIMIT: u128 = 100_000;
/// Largest interval size for which the order relation is materialized as a
/// bit matrix; beyond this, order queries are evaluated on demand.
const ORDER_MATRIX_LIMIT: usize = 30_000;
/// Largest number of factorization tuples enumerated.
const TUPLE_LIMIT: u128 = 1_000_000;

/// Dense square bit matrix.
#[derive(Clone, Debug)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix { words_per_row, bits: vec![0; n * words_per_row] }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words_per_row + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn or_into_row(&mut self, dst: usize, src: &[u64]) {
        let start = dst * self.words_per_row;
        for (k, word) in src.iter().enumerate() {
            self.bits[start + k] |= word;
        }
    }

    fn transpose(&self, n: usize) -> BitMatrix {
        let mut out = BitMatrix::new(n);
        for i in 0..n {
            for j in iter_bits(self.row(i)) {
                out.set(j, i);
            }
        }
        out
    }
}

/// Indices of the set bits in a packed row, ascending.
fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

fn rows_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn row_is_subset(sub: &[u64], sup: &[u64]) -> bool {
    sub.iter().zip(sup).all(|(s, p)| s & !p == 0)
}

/// The interval from the identity to the Coxeter element in absolute order,
/// as a ranked poset.
#[derive(Clone, Debug)]
pub struct NcPoset {
    group: ReflectionGroup,
    elements: Vec<GroupElement>,
    inverses: Vec<GroupElement>,
    ranks: Vec<usize>,
    rank_sizes: Vec<usize>,
    index: HashMap<GroupElement, usize>,
    /// Row `i` is the upper set `{j : i ≤ j}`.
    up: Option<BitMatrix>,
    /// Row `j` is the lower set `{i : i ≤ j}`.
    down: Option<BitMatrix>,
}

/// Tests `x ≤ z` in absolute order through fixed spaces: with `y = x⁻¹z`,
/// requires `V^x ∩ V^y = V^z` and `V^x + V^y = V`, both checked by exact
/// ranks of stacked basis vectors.
pub fn below(group: &ReflectionGroup, x: &GroupElement, z: &GroupElement) -> bool {
    let n = group.rank();
    let y = group.multiply(&group.inverse(x), z);
    let bx = group.fixed_space_basis(x);
    let by = group.fixed_space_basis(&y);
    let dim_z = n - group.codim(z);
    let stacked: Vec<_> = bx.iter().chain(by.iter()).cloned().collect();
    let sum_dim = linalg::rank(&stacked);
    let inter_dim = bx.len() + by.len() - sum_dim;
    sum_dim == n && inter_dim == dim_z
}

/// Fast equivalent of [`below`] given the inverse of `x`: additivity of
/// fixed-space codimensions along `x · (x⁻¹z) = z`.
fn below_via_codim(
    group: &ReflectionGroup,
    x_inv: &GroupElement,
    x_codim: usize,
    z: &GroupElement,
    z_codim: usize,
) -> bool {
    if x_codim > z_codim {
        return false;
    }
    let y = group.multiply(x_inv, z);
    x_codim + group.codim(&y) == z_codim
}

/// Enumerates `NC(W)` level-synchronously by right multiplication with
/// reflections.
pub fn enumerate_nc(group: &ReflectionGroup) -> Result<NcPoset> {
    enumerate_nc_directed(group, false)
}

/// `left` switches the search to left multiplication; both directions produce
/// the same interval (covered by tests) and the public entry point fixes
/// right multiplication for determinism.
fn enumerate_nc_directed(group: &ReflectionGroup, left: bool) -> Result<NcPoset> {
    let n = group.rank();
    let expected = fuss_count(group, 1)?;
    if expected > NC_ENUM_LIMIT {
        return Err(Error::SizeLimit {
            needed: expected,
            bound: NC_ENUM_LIMIT,
            what: format!("noncrossing interval of {}", group.name()),
        });
    }
    let c = group.coxeter_element().clone();
    let reflections = group.reflections()?.to_vec();
    let reflection_inverses: Vec<GroupElement> =
        reflections.iter().map(|r| group.inverse(r)).collect();

    // Levels hold (element, inverse) pairs; the inverse rides along so that
    // each candidate's codimension test needs only multiplications.
    let identity = group.identity();
    let mut levels: Vec<Vec<(GroupElement, GroupElement)>> =
        vec![vec![(identity.clone(), identity)]];
    for k in 0..n {
        let mut next: HashMap<GroupElement, GroupElement> = HashMap::new();
        for (w, w_inv) in &levels[k] {
            for (r, r_inv) in reflections.iter().zip(&reflection_inverses) {
                let (cand, cand_inv) = if left {
                    (group.multiply(r, w), group.multiply(w_inv, r_inv))
                } else {
                    (group.multiply(w, r), group.multiply(r_inv, w_inv))
                };
                if next.contains_key(&cand) {
                    continue;
                }
                if group.codim(&cand) != k + 1 {
                    continue;
                }
                if below_via_codim(group, &cand_inv, k + 1, &c, n) {
                    next.insert(cand, cand_inv);
                }
            }
        }
        let mut level: Vec<(GroupElement, GroupElement)> = next.into_iter().collect();
        level.sort_by_key(|(w, _)| format!("{w:?}"));
        levels.push(level);
    }
    if levels[n].len() != 1 || levels[n][0].0 != c {
        return Err(Error::internal(format!(
            "top level of the noncrossing interval of {} is not the Coxeter element",
            group.name()
        )));
    }

    let rank_sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
    let total: usize = rank_sizes.iter().sum();
    if total as u128 != expected {
        return Err(Error::internal(format!(
            "noncrossing interval of {} has {} elements, product formula gives {}",
            group.name(),
            total,
            expected
        )));
    }

    let mut elements = Vec::with_capacity(total);
    let mut inverses = Vec::with_capacity(total);
    let mut ranks = Vec::with_capacity(total);
    for (k, level) in levels.into_iter().enumerate() {
        for (w, w_inv) in level {
            elements.push(w);
            inverses.push(w_inv);
            ranks.push(k);
        }
    }
    let index: HashMap<GroupElement, usize> =
        elements.iter().cloned().zip(0..).collect();

    let mut poset = NcPoset {
        group: group.clone(),
        elements,
        inverses,
        ranks,
        rank_sizes,
        index,
        up: None,
        down: None,
    };
    if total <= ORDER_MATRIX_LIMIT {
        poset.materialize_order();
    }
    Ok(poset)
}

/// Number of factorization tuples `(w_0, .., w_m)` of the Coxeter element
/// with additive lengths, by the degree product formula.
fn fuss_count(group: &ReflectionGroup, m: u64) -> Result<u128> {
    let h = u128::from(group.h());
    let m = u128::from(m);
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for &d in group.degrees() {
        numerator = numerator
            .checked_mul(m * h + u128::from(d))
            .ok_or_else(|| Error::domain("factorization count overflows"))?;
        denominator *= u128::from(d);
    }
    if numerator % denominator != 0 {
        return Err(Error::internal("degree product formula is not an integer"));
    }
    Ok(numerator / denominator)
}

impl NcPoset {
    /// The underlying group.
    pub fn group(&self) -> &ReflectionGroup {
        &self.group
    }

    /// Number of interval elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Never true: the interval always contains the identity.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// All elements, sorted by rank.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// The element at an index.
    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    /// The inverse of the element at an index.
    pub fn inverse(&self, i: usize) -> &GroupElement {
        &self.inverses[i]
    }

    /// Rank (reflection length) of the element at an index.
    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Number of elements of each rank `0..=n`.
    pub fn rank_sizes(&self) -> &[usize] {
        &self.rank_sizes
    }

    /// Index of an element, when it lies in the interval.
    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index of the identity.
    pub fn identity_index(&self) -> usize {
        0
    }

    /// Index of the Coxeter element.
    pub fn coxeter_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// Whether the order relation is stored as a bit matrix.
    pub fn has_materialized_order(&self) -> bool {
        self.up.is_some()
    }

    /// The order relation `i ≤ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        if let Some(up) = &self.up {
            return up.get(i, j);
        }
        if i == j {
            return true;
        }
        below_via_codim(
            &self.group,
            &self.inverses[i],
            self.ranks[i],
            &self.elements[j],
            self.ranks[j],
        )
    }

    /// All `j` with `i ≤ j`, ascending.
    pub fn upper_set(&self, i: usize) -> Vec<usize> {
        if let Some(up) = &self.up {
            return iter_bits(up.row(i)).collect();
        }
        (0..self.len()).filter(|&j| self.leq(i, j)).collect()
    }

    /// Fills the up/down bit matrices: covering relations between adjacent
    /// ranks, then transitive closure from the top rank downward.
    fn materialize_order(&mut self) {
        let n_el = self.len();
        let mut up = BitMatrix::new(n_el);
        for i in 0..n_el {
            up.set(i, i);
        }
        let mut level_start = vec![0usize; self.rank_sizes.len() + 1];
        for (k, size) in self.rank_sizes.iter().enumerate() {
            level_start[k + 1] = level_start[k] + size;
        }
        for k in (0..self.rank_sizes.len() - 1).rev() {
            for i in level_start[k]..level_start[k + 1] {
                for j in level_start[k + 1]..level_start[k + 2] {
                    if below_via_codim(
                        &self.group,
                        &self.inverses[i],
                        k,
                        &self.elements[j],
                        k + 1,
                    ) {
                        let src = up.row(j).to_vec();
                        up.or_into_row(i, &src);
                    }
                }
            }
        }
        self.down = Some(up.transpose(n_el));
        self.up = Some(up);
    }

    /// Whether every pair has a least upper bound and a greatest lower bound.
    pub fn lattice_check(&self) -> bool {
        let (Some(up), Some(down)) = (&self.up, &self.down) else {
            // Fall back to a materialized copy for large intervals.
            let mut copy = self.clone();
            copy.materialize_order();
            return copy.lattice_check();
        };
        let n_el = self.len();
        for a in 0..n_el {
            for b in a + 1..n_el {
                if up.get(a, b) || up.get(b, a) {
                    continue;
                }
                let uppers = rows_and(up.row(a), up.row(b));
                if !iter_bits(&uppers).any(|j| row_is_subset(&uppers, up.row(j))) {
                    return false;
                }
                let lowers = rows_and(down.row(a), down.row(b));
                if !iter_bits(&lowers).any(|j| row_is_subset(&lowers, down.row(j))) {
                    return false;
                }
            }
        }
        true
    }
}

/// Conjugation `w ↦ cwc⁻¹` on the interval, as a cyclic action of declared
/// order `h`.
pub fn conjugation_action(poset: &NcPoset) -> Result<CyclicActionInstance> {
    let group = poset.group();
    let c = group.coxeter_element().clone();
    let c_inv = group.inverse(&c);
    let mut perm = Vec::with_capacity(poset.len());
    for w in poset.elements() {
        let image = group.multiply(&group.multiply(&c, w), &c_inv);
        let j = poset.index_of(&image).ok_or_else(|| {
            Error::internal("conjugation image left the noncrossing interval")
        })?;
        perm.push(j);
    }
    CyclicActionInstance::new(perm, group.h())
}

/// Kreweras complementation `w ↦ cw⁻¹` on the interval, as a cyclic action
/// of declared order `2h`; its square is conjugation by `c`.
pub fn kreweras_action(poset: &NcPoset) -> Result<CyclicActionInstance> {
    let group = poset.group();
    let c = group.coxeter_element().clone();
    let mut perm = Vec::with_capacity(poset.len());
    for i in 0..poset.len() {
        let image = group.multiply(&c, poset.inverse(i));
        let j = poset.index_of(&image).ok_or_else(|| {
            Error::internal("complementation image left the noncrossing interval")
        })?;
        perm.push(j);
    }
    CyclicActionInstance::new(perm, 2 * group.h())
}

/// A factorization `c = w_0 w_1 ⋯ w_m` with additive reflection lengths,
/// stored as indices into the interval's element table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MDivisibleTuple {
    indices: Vec<usize>,
}

impl MDivisibleTuple {
    /// Indices of `(w_0, .., w_m)` in the poset.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The factors as group elements.
    pub fn elements(&self, poset: &NcPoset) -> Vec<GroupElement> {
        self.indices.iter().map(|&i| poset.element(i).clone()).collect()
    }
}

/// Enumerates all `(m+1)`-tuple factorizations of the Coxeter element with
/// additive lengths, generated as weakly increasing chains
/// `e ≤ u_1 ≤ ⋯ ≤ u_m ≤ c` with `w_i = u_{i-1}⁻¹ u_i` and `w_0` the closing
/// complement `c u_m⁻¹`.  With `m = 0` the result is the single tuple `(c)`.
pub fn enumerate_nc_m(poset: &NcPoset, m: u64) -> Result<Vec<MDivisibleTuple>> {
    let expected = fuss_count(poset.group(), m)?;
    if expected > TUPLE_LIMIT {
        return Err(Error::SizeLimit {
            needed: expected,
            bound: TUPLE_LIMIT,
            what: format!("factorization tuples of {}", poset.group().name()),
        });
    }
    let c = poset.group().coxeter_element().clone();
    let mut chain = Vec::with_capacity(m as usize);
    let mut out = Vec::with_capacity(expected as usize);
    collect_chains(poset, &c, m as usize, poset.identity_index(), &mut chain, &mut out)?;
    if out.len() as u128 != expected {
        return Err(Error::internal(format!(
            "enumerated {} factorization tuples, product formula gives {}",
            out.len(),
            expected
        )));
    }
    Ok(out)
}

/// Depth-first extension of a weakly increasing chain; at full length the
/// chain is converted to its factorization tuple.
fn collect_chains(
    poset: &NcPoset,
    c: &GroupElement,
    remaining: usize,
    current: usize,
    chain: &mut Vec<usize>,
    out: &mut Vec<MDivisibleTuple>,
) -> Result<()> {
    if remaining == 0 {
        let group = poset.group();
        let last = *chain.last().unwrap_or(&poset.identity_index());
        let mut indices = Vec::with_capacity(chain.len() + 1);
        let w0 = group.multiply(c, poset.inverse(last));
        indices.push(
            poset
                .index_of(&w0)
                .ok_or_else(|| Error::internal("closing complement left the interval"))?,
        );
        let mut prev = poset.identity_index();
        for &u in chain.iter() {
            let w = group.multiply(poset.inverse(prev), poset.element(u));
            indices.push(
                poset
                    .index_of(&w)
                    .ok_or_else(|| Error::internal("chain quotient left the interval"))?,
            );
            prev = u;
        }
        out.push(MDivisibleTuple { indices });
        return Ok(());
    }
    for j in poset.upper_set(current) {
        chain.push(j);
        collect_chains(poset, c, remaining - 1, j, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// Builds the permutation sending each tuple to `image(tuple)`, verifying
/// closure, the product law, and length additivity of every image.
fn tuple_action(
    poset: &NcPoset,
    tuples: &[MDivisibleTuple],
    declared_order: u64,
    image: impl Fn(&[GroupElement]) -> Vec<GroupElement>,
) -> Result<CyclicActionInstance> {
    let group = poset.group();
    let c = group.coxeter_element();
    let position: HashMap<&MDivisibleTuple, usize> =
        tuples.iter().zip(0..).collect();
    let mut perm = Vec::with_capacity(tuples.len());
    for tuple in tuples {
        let factors = image(&tuple.elements(poset));
        let mut indices = Vec::with_capacity(factors.len());
        let mut product = group.identity();
        let mut length = 0;
        for w in &factors {
            let i = poset
                .index_of(w)
                .ok_or_else(|| Error::internal("tuple action image factor left the interval"))?;
            indices.push(i);
            length += poset.rank_of(i);
            product = group.multiply(&product, w);
        }
        if product != *c || length != group.rank() {
            return Err(Error::internal(
                "tuple action image violates the product law or length additivity",
            ));
        }
        let target = MDivisibleTuple { indices };
        let j = *position
            .get(&target)
            .ok_or_else(|| Error::internal("tuple action image is not an enumerated tuple"))?;
        perm.push(j);
    }
    CyclicActionInstance::new(perm, declared_order)
}

/// The order-`m·h` action on factorization tuples:
/// `(w_0, .., w_m) ↦ (v, cw_mc⁻¹, w_1, .., w_{m-1})` where `v` conjugates
/// `w_0` by the arriving factor `cw_mc⁻¹`.  Requires `m ≥ 1`.
pub fn armstrong_action(
    poset: &NcPoset,
    tuples: &[MDivisibleTuple],
) -> Result<CyclicActionInstance> {
    let group = poset.group();
    let m = tuples
        .first()
        .map(|t| t.indices.len() - 1)
        .ok_or_else(|| Error::domain("tuple action on an empty tuple list"))?;
    if m < 1 {
        return Err(Error::domain("the order-mh tuple action requires m ≥ 1"));
    }
    let c = group.coxeter_element().clone();
    let c_inv = group.inverse(&c);
    tuple_action(poset, tuples, m as u64 * group.h(), move |w| {
        let a = group.multiply(&group.multiply(&c, &w[m]), &c_inv);
        let a_inv = group.inverse(&a);
        let v = group.multiply(&group.multiply(&a, &w[0]), &a_inv);
        let mut image = Vec::with_capacity(m + 1);
        image.push(v);
        image.push(a);
        image.extend(w[1..m].iter().cloned());
        image
    })
}

/// The order-`(m+1)·h` rotation on factorization tuples:
/// `(w_0, .., w_m) ↦ (cw_mc⁻¹, w_0, .., w_{m-1})`.  Defined for `m ≥ 0`; at
/// `m = 1` it is the Kreweras complementation under the identification of a
/// pair `(w_0, w_1)` with `w_1`.
pub fn rotation_action(
    poset: &NcPoset,
    tuples: &[MDivisibleTuple],
) -> Result<CyclicActionInstance> {
    let group = poset.group();
    let m = tuples
        .first()
        .map(|t| t.indices.len() - 1)
        .ok_or_else(|| Error::domain("tuple action on an empty tuple list"))?;
    let c = group.coxeter_element().clone();
    let c_inv = group.inverse(&c);
    tuple_action(poset, tuples, (m as u64 + 1) * group.h(), move |w| {
        let a = group.multiply(&group.multiply(&c, &w[m]), &c_inv);
        let mut image = Vec::with_capacity(m + 1);
        image.push(a);
        image.extend(w[..m].iter().cloned());
        image
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, parse_spec, MonomialElem};

    fn poset(name: &str) -> NcPoset {
        let group = build_group(&parse_spec(name).expect("parse")).expect("build");
        enumerate_nc(&group).expect("enumerate")
    }

    #[test]
    fn below_examples() {
        let group = build_group(&parse_spec("A3").unwrap()).unwrap();
        let e = group.identity();
        let c = group.coxeter_element().clone();
        assert!(below(&group, &e, &c));
        assert!(!below(&group, &c, &e));
        let transposition =
            GroupElement::Monomial(MonomialElem::transposition_like(1, 4, 0, 1, 0));
        assert!(below(&group, &transposition, &c));
    }

    #[test]
    fn below_agrees_with_codim_additivity_on_all_pairs() {
        for name in ["A3", "B2", "G(3,3,3)"] {
            let group = build_group(&parse_spec(name).unwrap()).unwrap();
            let elements = group.enumerate(10_000).unwrap().to_vec();
            for x in &elements {
                let x_inv = group.inverse(x);
                let x_codim = group.codim(x);
                for z in &elements {
                    let slow = below(&group, x, z);
                    let fast =
                        below_via_codim(&group, &x_inv, x_codim, z, group.codim(z));
                    assert_eq!(slow, fast, "{name}: {x:?} vs {z:?}");
                }
            }
        }
    }

    #[test]
    fn interval_sizes_and_rank_vectors() {
        let a3 = poset("A3");
        assert_eq!(a3.len(), 14);
        assert_eq!(a3.rank_sizes(), &[1, 6, 6, 1]);
        let b2 = poset("B2");
        assert_eq!(b2.len(), 6);
        assert_eq!(b2.rank_sizes(), &[1, 4, 1]);
        let a1 = poset("A1");
        assert_eq!(a1.len(), 2);
        let h3 = poset("H3");
        assert_eq!(h3.len(), 32);
        assert_eq!(h3.rank_sizes(), &[1, 15, 15, 1]);
        let g333 = poset("G(3,3,3)");
        assert_eq!(g333.len(), 18);
        let sizes = g333.rank_sizes();
        let reversed: Vec<usize> = sizes.iter().rev().copied().collect();
        assert_eq!(sizes, reversed.as_slice(), "rank sizes are palindromic");
    }

    #[test]
    fn endpoints_are_identity_and_coxeter() {
        let p = poset("A3");
        assert!(p.group().is_identity(p.element(p.identity_index())));
        assert_eq!(p.element(p.coxeter_index()), p.group().coxeter_element());
        assert_eq!(p.rank_of(p.identity_index()), 0);
        assert_eq!(p.rank_of(p.coxeter_index()), p.group().rank());
    }

    #[test]
    fn membership_matches_additive_reflection_length() {
        for name in ["A3", "B2", "G(3,3,3)", "I2(7)"] {
            let group = build_group(&parse_spec(name).unwrap()).unwrap();
            let p = enumerate_nc(&group).unwrap();
            let c = group.coxeter_element().clone();
            let n = group.rank();
            for w in group.enumerate(10_000).unwrap().to_vec() {
                let l1 = group.absolute_length(&w, 10_000).unwrap();
                let rest = group.multiply(&group.inverse(&w), &c);
                let l2 = group.absolute_length(&rest, 10_000).unwrap();
                let in_interval = p.index_of(&w).is_some();
                assert_eq!(l1 + l2 == n, in_interval, "{name}: {w:?}");
            }
        }
    }

    #[test]
    fn left_and_right_multiplication_agree() {
        for name in ["A3", "B2", "G(3,3,3)"] {
            let group = build_group(&parse_spec(name).unwrap()).unwrap();
            let right = enumerate_nc_directed(&group, false).unwrap();
            let left = enumerate_nc_directed(&group, true).unwrap();
            assert_eq!(right.elements(), left.elements(), "{name}");
        }
    }

    #[test]
    fn order_matrix_agrees_with_below() {
        for name in ["A3", "B2", "G(3,3,3)"] {
            let p = poset(name);
            assert!(p.has_materialized_order());
            for i in 0..p.len() {
                for j in 0..p.len() {
                    assert_eq!(
                        p.leq(i, j),
                        below(p.group(), p.element(i), p.element(j)),
                        "{name}: {i} vs {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn lattice_property_holds() {
        for name in ["A3", "B2", "H3", "G(3,3,3)"] {
            assert!(poset(name).lattice_check(), "{name}");
        }
    }

    #[test]
    fn conjugation_orbit_structure() {
        let b2 = poset("B2");
        let action = conjugation_action(&b2).unwrap();
        assert_eq!(action.declared_order(), 4);
        assert_eq!(action.orbit_sizes(), vec![1, 1, 2, 2]);
        assert_eq!(action.fixed_count(1), 2);

        let a3 = poset("A3");
        let action = conjugation_action(&a3).unwrap();
        assert_eq!(action.declared_order(), 4);
        assert_eq!(action.fixed_count(1), 2);
        assert_eq!(action.fixed_count(2), 6);
    }

    #[test]
    fn kreweras_swaps_endpoints_and_squares_to_conjugation() {
        let a3 = poset("A3");
        let k = kreweras_action(&a3).unwrap();
        assert_eq!(k.declared_order(), 8);
        assert_eq!(k.generator()[a3.identity_index()], a3.coxeter_index());
        assert_eq!(k.generator()[a3.coxeter_index()], a3.identity_index());
        let conj = conjugation_action(&a3).unwrap();
        let squared: Vec<usize> =
            (0..a3.len()).map(|i| k.generator()[k.generator()[i]]).collect();
        assert_eq!(squared, conj.generator());

        let a1 = poset("A1");
        let k = kreweras_action(&a1).unwrap();
        assert_eq!(k.generator(), &[1, 0]);
        assert_eq!(k.minimal_period(), 2);
    }

    #[test]
    fn tuple_counts() {
        let a3 = poset("A3");
        assert_eq!(enumerate_nc_m(&a3, 1).unwrap().len(), 14);
        let a2 = poset("A2");
        assert_eq!(enumerate_nc_m(&a2, 2).unwrap().len(), 12);
        let a1 = poset("A1");
        // Brute force over the two-element interval: the product formula
        // (m·h + 2)/2 with m = 2, h = 2 gives 3 chains.
        assert_eq!(enumerate_nc_m(&a1, 2).unwrap().len(), 3);
        assert_eq!(enumerate_nc_m(&a1, 0).unwrap().len(), 1);
    }

    #[test]
    fn pair_tuples_project_onto_the_interval() {
        let a3 = poset("A3");
        let tuples = enumerate_nc_m(&a3, 1).unwrap();
        let mut seen: Vec<usize> = tuples.iter().map(|t| t.indices()[1]).collect();
        seen.sort_unstable();
        let all: Vec<usize> = (0..a3.len()).collect();
        assert_eq!(seen, all, "w_1 runs over the whole interval exactly once");
    }

    #[test]
    fn pair_actions_match_single_element_actions() {
        let a3 = poset("A3");
        let tuples = enumerate_nc_m(&a3, 1).unwrap();
        let arm = armstrong_action(&a3, &tuples).unwrap();
        let rot = rotation_action(&a3, &tuples).unwrap();
        let conj = conjugation_action(&a3).unwrap();
        let krew = kreweras_action(&a3).unwrap();
        assert_eq!(arm.declared_order(), 4);
        assert_eq!(rot.declared_order(), 8);
        for (t_pos, tuple) in tuples.iter().enumerate() {
            let w1 = tuple.indices()[1];
            let arm_w1 = tuples[arm.generator()[t_pos]].indices()[1];
            assert_eq!(arm_w1, conj.generator()[w1]);
            let rot_w1 = tuples[rot.generator()[t_pos]].indices()[1];
            assert_eq!(rot_w1, krew.generator()[w1]);
        }
        assert_eq!(rot.orbit_sizes(), krew.orbit_sizes());
    }

    #[test]
    fn prepending_identity_intertwines_the_two_tuple_actions() {
        let a2 = poset("A2");
        let small = enumerate_nc_m(&a2, 1).unwrap();
        let big = enumerate_nc_m(&a2, 2).unwrap();
        let position: HashMap<&MDivisibleTuple, usize> = big.iter().zip(0..).collect();
        let embed = |t: &MDivisibleTuple| {
            let mut indices = vec![a2.identity_index()];
            indices.extend_from_slice(t.indices());
            position[&MDivisibleTuple { indices }]
        };
        let rot_small = rotation_action(&a2, &small).unwrap();
        let arm_big = armstrong_action(&a2, &big).unwrap();
        for (t_pos, tuple) in small.iter().enumerate() {
            let rotated = embed(&small[rot_small.generator()[t_pos]]);
            assert_eq!(arm_big.generator()[embed(tuple)], rotated);
        }
    }

    #[test]
    fn rotation_at_m_zero_is_trivial() {
        let a2 = poset("A2");
        let tuples = enumerate_nc_m(&a2, 0).unwrap();
        assert_eq!(tuples.len(), 1);
        assert_eq!(tuples[0].indices(), &[a2.coxeter_index()]);
        let rot = rotation_action(&a2, &tuples).unwrap();
        assert_eq!(rot.generator(), &[0]);
        assert_eq!(rot.declared_order(), a2.group().h());
    }

    #[test]
    fn restriction_preserves_the_interval() {
        for (name, divisors) in [
            ("A3", vec![2, 4]),
            ("B2", vec![2, 4]),
            ("G(3,3,3)", vec![2, 3, 6]),
        ] {
            let group = build_group(&parse_spec(name).unwrap()).unwrap();
            let parent = enumerate_nc(&group).unwrap();
            for d in divisors {
                let restriction = group.restrict_centralizer(d, 100_000).unwrap();
                let sub = enumerate_nc(&restriction.group).unwrap();
                let mut from_sub: Vec<&GroupElement> = sub
                    .elements()
                    .iter()
                    .map(|w| &restriction.to_parent[w])
                    .collect();
                let mut from_parent: Vec<&GroupElement> = restriction
                    .to_restricted
                    .keys()
                    .filter(|w| parent.index_of(w).is_some())
                    .collect();
                from_sub.sort_by_key(|w| format!("{w:?}"));
                from_parent.sort_by_key(|w| format!("{w:?}"));
                assert_eq!(from_sub, from_parent, "{name}, d = {d}");
            }
        }
    }
}
