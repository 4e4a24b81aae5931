//! Monomial matrices: permutations combined with root-of-unity scalings.
//!
//! An element maps `e_i` to `zeta_d^(weights[i]) e_(perm[i])`.  The infinite
//! family of imprimitive reflection groups acts by such matrices, and all of
//! their structure (products, inverses, fixed spaces, element orders) reduces
//! to cycle bookkeeping, which keeps large groups cheap to work with.

use num_integer::Integer;

/// A permutation of coordinates with a `d`-th root of unity scaling on each.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialElem {
    d: u32,
    /// `perm[i]` is the index of the image of `e_i`.
    perm: Vec<u32>,
    /// Exponent of the scaling on `e_i`, reduced mod `d`.
    weights: Vec<u32>,
}

impl MonomialElem {
    /// The identity on `n` coordinates with scalings of order dividing `d`.
    pub fn identity(d: u32, n: usize) -> Self {
        assert!(d > 0 && n > 0);
        MonomialElem {
            d,
            perm: (0..n as u32).collect(),
            weights: vec![0; n],
        }
    }

    /// Builds an element from explicit permutation images and weights.
    pub fn new(d: u32, perm: Vec<u32>, weights: Vec<u32>) -> Self {
        assert_eq!(perm.len(), weights.len());
        let n = perm.len() as u32;
        assert!(perm.iter().all(|&p| p < n), "permutation image out of range");
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(!seen[p as usize], "not a permutation");
            seen[p as usize] = true;
        }
        let weights = weights.into_iter().map(|w| w % d).collect();
        MonomialElem { d, perm, weights }
    }

    /// The reflection swapping `e_i` to `zeta^k e_j` (and `e_j` to
    /// `zeta^-k e_i`).
    pub fn transposition_like(d: u32, n: usize, i: usize, j: usize, k: u32) -> Self {
        assert!(i < n && j < n && i != j);
        let mut elem = MonomialElem::identity(d, n);
        elem.perm[i] = j as u32;
        elem.perm[j] = i as u32;
        elem.weights[i] = k % d;
        elem.weights[j] = (d - k % d) % d;
        elem
    }

    /// The diagonal reflection scaling `e_i` by `zeta^k`.
    pub fn diagonal(d: u32, n: usize, i: usize, k: u32) -> Self {
        assert!(i < n && k % d != 0);
        let mut elem = MonomialElem::identity(d, n);
        elem.weights[i] = k % d;
        elem
    }

    /// Number of coordinates.
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Order bound of the scalings.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Permutation images.
    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    /// Scaling exponents.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// True for the identity element.
    pub fn is_identity(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
            && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// Sum of the scaling exponents mod `d` (zero exactly when the element
    /// has determinant-like scaling product 1; the index-`e` subgroups of the
    /// imprimitive family are cut out by this).
    pub fn weight_sum(&self) -> u32 {
        self.weights.iter().fold(0u32, |a, &w| (a + w) % self.d)
    }

    /// Composition `self * other` (apply `other` first).
    pub fn multiply(&self, other: &MonomialElem) -> MonomialElem {
        assert_eq!(self.d, other.d);
        assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut perm = vec![0u32; n];
        let mut weights = vec![0u32; n];
        for i in 0..n {
            let mid = other.perm[i] as usize;
            perm[i] = self.perm[mid];
            weights[i] = (other.weights[i] + self.weights[mid]) % self.d;
        }
        MonomialElem { d: self.d, perm, weights }
    }

    /// Group inverse.
    pub fn inverse(&self) -> MonomialElem {
        let n = self.n();
        let mut perm = vec![0u32; n];
        let mut weights = vec![0u32; n];
        for i in 0..n {
            let img = self.perm[i] as usize;
            perm[img] = i as u32;
            weights[img] = (self.d - self.weights[i]) % self.d;
        }
        MonomialElem { d: self.d, perm, weights }
    }

    /// Cycles of the underlying permutation, each with the sum of its
    /// scaling exponents mod `d`.  Cycles are listed by smallest member.
    pub fn cycles(&self) -> Vec<(Vec<usize>, u32)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut sum = 0u32;
            let mut i = start;
            loop {
                seen[i] = true;
                cycle.push(i);
                sum = (sum + self.weights[i]) % self.d;
                i = self.perm[i] as usize;
                if i == start {
                    break;
                }
            }
            out.push((cycle, sum));
        }
        out
    }

    /// Dimension of the fixed space in the natural `n`-dimensional action:
    /// one per cycle whose scaling exponents sum to zero.
    pub fn natural_fixed_dim(&self) -> usize {
        self.cycles().iter().filter(|(_, s)| *s == 0).count()
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|(cycle, s)| {
                let k = cycle.len() as u64;
                let scal = u64::from(self.d) / u64::from(self.d.gcd(s));
                k * scal
            })
            .fold(1u64, |a, b| a.lcm(&b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_invert() {
        // In the wreath family with d = 2, n = 2: the element sending
        // e_0 -> zeta e_1, e_1 -> e_0 has inverse e_0 -> e_1, e_1 -> zeta e_0.
        let a = MonomialElem::new(2, vec![1, 0], vec![1, 0]);
        let inv = a.inverse();
        assert_eq!(inv, MonomialElem::new(2, vec![1, 0], vec![0, 1]));
        assert!(a.multiply(&inv).is_identity());
        assert!(inv.multiply(&a).is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let swap01 = MonomialElem::transposition_like(3, 3, 0, 1, 0);
        let swap12 = MonomialElem::transposition_like(3, 3, 1, 2, 0);
        // (swap01 . swap12) e_2 = swap01 e_1 = e_0.
        let c = swap01.multiply(&swap12);
        assert_eq!(c.perm(), &[1, 2, 0]);
    }

    #[test]
    fn cycle_data_and_fixed_dimensions() {
        // e_0 -> zeta e_1 -> e_0 (sum 1), e_2 -> e_2 (sum 0) at d = 4.
        let m = MonomialElem::new(4, vec![1, 0, 2], vec![1, 0, 0]);
        let cycles = m.cycles();
        assert_eq!(cycles, vec![(vec![0, 1], 1), (vec![2], 0)]);
        assert_eq!(m.natural_fixed_dim(), 1);
        // Order: the 2-cycle returns scalar zeta_4, so 2 * 4 = 8.
        assert_eq!(m.order(), 8);
    }

    #[test]
    fn reflections_fix_a_hyperplane() {
        for k in 0..4 {
            let r = MonomialElem::transposition_like(4, 3, 0, 2, k);
            assert_eq!(r.natural_fixed_dim(), 2);
            assert!(r.multiply(&r).is_identity());
        }
        let r = MonomialElem::diagonal(4, 3, 1, 3);
        assert_eq!(r.natural_fixed_dim(), 2);
        assert_eq!(r.order(), 4);
    }
}
