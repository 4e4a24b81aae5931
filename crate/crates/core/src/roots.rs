//! Crystallographic root systems and their combinatorics.
//!
//! Builds the positive roots of a crystallographic type from its Cartan
//! matrix, orders them by the root poset (coordinatewise comparison in the
//! simple-root basis), enumerates antichains, and implements the Panyushev
//! step on antichains as a cyclic action.  Also counts fixed points of Weyl
//! elements on the finite torus `Q/pQ` through the integer Smith normal form
//! and averages them into orbit counts.

use std::collections::{HashMap, HashSet};

use crate::error::Error;
use crate::sieving::CyclicActionInstance;
use crate::Result;

/// A square integer matrix in the simple-root basis.
pub type IntMatrix = Vec<Vec<i64>>;

/// Largest antichain family enumerated.
const ANTICHAIN_LIMIT: u128 = 100_000;
/// Largest Weyl group enumerated for torus orbit counts.
const WEYL_ENUM_LIMIT: u128 = 200_000;

/// A crystallographic root system with its positive roots in the simple-root
/// basis.
#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    cartan: IntMatrix,
    positive_roots: Vec<Vec<i64>>,
    simple_reflections: Vec<IntMatrix>,
    degrees: Vec<u64>,
    h: u64,
}

/// A set of pairwise incomparable positive roots, stored as sorted indices
/// into the positive-root table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Antichain {
    indices: Vec<usize>,
}

impl Antichain {
    /// Validates pairwise incomparability and builds the antichain.
    pub fn new(rs: &RootSystem, mut indices: Vec<usize>) -> Result<Antichain> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= rs.positive_roots.len()) {
            return Err(Error::domain(format!(
                "root index {bad} out of range for {}",
                rs.name
            )));
        }
        for (k, &i) in indices.iter().enumerate() {
            for &j in &indices[k + 1..] {
                if rs.root_le(i, j) || rs.root_le(j, i) {
                    return Err(Error::domain(format!(
                        "roots {i} and {j} are comparable in the {} poset",
                        rs.name
                    )));
                }
            }
        }
        Ok(Antichain { indices })
    }

    /// Sorted indices of the member roots.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The member roots as coordinate vectors.
    pub fn roots<'a>(&self, rs: &'a RootSystem) -> Vec<&'a [i64]> {
        self.indices.iter().map(|&i| rs.positive_roots[i].as_slice()).collect()
    }
}

/// Cartan matrix, degrees, and canonical name for a crystallographic type.
fn cartan_data(input: &str) -> Result<(String, IntMatrix, Vec<u64>)> {
    let s: String = input.trim().to_ascii_uppercase().replace(' ', "");
    let parse_err = |msg: &str| Error::Parse(format!("{msg}: {input:?}"));
    let non_crystallographic =
        |name: &str| Error::domain(format!("{name} is not crystallographic"));
    let tail = |prefix: usize| -> Result<usize> {
        s[prefix..].parse().map_err(|_| parse_err("expected a rank number"))
    };
    // Chain Cartan matrix with entries -1, adjusted afterwards.
    let chain = |n: usize| -> IntMatrix {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    match s.chars().next() {
        Some('A') if s.len() > 1 && !s.starts_with("A(") => {
            let n = tail(1)?;
            if n == 0 {
                return Err(parse_err("rank must be at least 1"));
            }
            Ok((format!("A{n}"), chain(n), (2..=n as u64 + 1).collect()))
        }
        Some('B') => {
            let n = tail(1)?;
            if n < 2 {
                return Err(parse_err("type B rank must be at least 2"));
            }
            let mut c = chain(n);
            c[n - 1][n - 2] = -2;
            Ok((format!("B{n}"), c, (1..=n as u64).map(|k| 2 * k).collect()))
        }
        Some('C') => {
            let n = tail(1)?;
            if n < 2 {
                return Err(parse_err("type C rank must be at least 2"));
            }
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            Ok((format!("C{n}"), c, (1..=n as u64).map(|k| 2 * k).collect()))
        }
        Some('D') => {
            let n = tail(1)?;
            if n < 3 {
                return Err(parse_err("type D rank must be at least 3"));
            }
            let mut c = chain(n - 1);
            c.iter_mut().for_each(|row| row.push(0));
            c.push(vec![0; n]);
            c[n - 1][n - 1] = 2;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            let mut degrees: Vec<u64> = (1..n as u64).map(|k| 2 * k).collect();
            degrees.push(n as u64);
            degrees.sort_unstable();
            Ok((format!("D{n}"), c, degrees))
        }
        Some('E') => {
            let n = tail(1)?;
            if !(6..=8).contains(&n) {
                return Err(parse_err("type E rank must be 6, 7, or 8"));
            }
            let mut c = vec![vec![0i64; n]; n];
            for i in 0..n {
                c[i][i] = 2;
            }
            // Nodes 0,2,3,..,n-1 form a chain; node 1 attaches to node 3.
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            for (i, j) in edges {
                c[i][j] = -1;
                c[j][i] = -1;
            }
            let degrees = match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            };
            Ok((format!("E{n}"), c, degrees))
        }
        Some('F') if s == "F4" => {
            let mut c = chain(4);
            c[2][1] = -2;
            Ok(("F4".into(), c, vec![2, 6, 8, 12]))
        }
        Some('G') if s == "G2" => {
            Ok(("G2".into(), vec![vec![2, -1], vec![-3, 2]], vec![2, 6]))
        }
        Some('H') if s == "H3" || s == "H4" => Err(non_crystallographic(&s)),
        Some('I') => {
            let m: u32 = s
                .strip_prefix("I2(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|mid| mid.parse().ok())
                .ok_or_else(|| parse_err("expected I2(m)"))?;
            match m {
                3 => cartan_data("A2"),
                4 => cartan_data("B2"),
                6 => cartan_data("G2"),
                _ => Err(non_crystallographic(&format!("I2({m})"))),
            }
        }
        _ => Err(parse_err("unrecognized root system type")),
    }
}

/// Image of a coordinate vector under the `i`-th simple reflection.
fn reflect(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = cartan[i].iter().zip(v).map(|(a, x)| a * x).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

/// Builds the root system of a crystallographic type (A, B, C, D, E6-E8,
/// F4, G2; the crystallographic dihedral names I2(3), I2(4), I2(6) are
/// accepted as aliases).
pub fn build_root_system(name: &str) -> Result<RootSystem> {
    let (canonical, cartan, degrees) = cartan_data(name)?;
    let rank = cartan.len();
    let h = *degrees.iter().max().expect("degrees nonempty");

    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        all.insert(e.clone());
        queue.push(e);
    }
    while let Some(v) = queue.pop() {
        for i in 0..rank {
            let w = reflect(&cartan, i, &v);
            if all.insert(w.clone()) {
                queue.push(w);
            }
        }
    }

    let mut positive_roots: Vec<Vec<i64>> = all
        .iter()
        .filter(|v| v.iter().all(|&x| x >= 0))
        .cloned()
        .collect();
    positive_roots.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));

    let expected = rank as u64 * h / 2;
    let reflection_count: u64 = degrees.iter().map(|d| d - 1).sum();
    if positive_roots.len() as u64 != expected
        || expected != reflection_count
        || all.len() != 2 * positive_roots.len()
    {
        return Err(Error::internal(format!(
            "root generation for {canonical} produced {} positive roots, expected {expected}",
            positive_roots.len()
        )));
    }

    let simple_reflections: Vec<IntMatrix> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|r| {
                    (0..rank)
                        .map(|c| {
                            let id = i64::from(r == c);
                            if r == i { id - cartan[i][c] } else { id }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    Ok(RootSystem { name: canonical, cartan, positive_roots, simple_reflections, degrees, h })
}

impl RootSystem {
    /// Canonical type name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank (number of simple roots).
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// The Cartan matrix.
    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// Positive roots in the simple-root basis, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// The simple reflections as integer matrices in the simple-root basis.
    pub fn simple_reflections(&self) -> &[IntMatrix] {
        &self.simple_reflections
    }

    /// Invariant degrees of the Weyl group, ascending.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// The Coxeter number.
    pub fn h(&self) -> u64 {
        self.h
    }

    /// Root poset order on positive-root indices: `a ≤ b` when the
    /// difference is a nonnegative combination of simple roots.
    pub fn root_le(&self, a: usize, b: usize) -> bool {
        self.positive_roots[a]
            .iter()
            .zip(&self.positive_roots[b])
            .all(|(x, y)| x <= y)
    }

    /// The product of the simple reflections in index order.
    pub fn coxeter_matrix(&self) -> IntMatrix {
        let mut c = identity_matrix(self.rank());
        for s in &self.simple_reflections {
            c = mat_mul(&c, s);
        }
        c
    }

    /// Enumerates the whole Weyl group as matrices, sorted by entries.
    pub fn weyl_elements(&self) -> Result<Vec<IntMatrix>> {
        let order: u128 = self.degrees.iter().map(|&d| u128::from(d)).product();
        if order > WEYL_ENUM_LIMIT {
            return Err(Error::SizeLimit {
                needed: order,
                bound: WEYL_ENUM_LIMIT,
                what: format!("Weyl group enumeration of {}", self.name),
            });
        }
        let mut seen: HashSet<IntMatrix> = HashSet::new();
        let mut queue = vec![identity_matrix(self.rank())];
        seen.insert(queue[0].clone());
        while let Some(w) = queue.pop() {
            for s in &self.simple_reflections {
                let next = mat_mul(&w, s);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        if seen.len() as u128 != order {
            return Err(Error::internal(format!(
                "Weyl closure of {} produced {} elements, expected {order}",
                self.name,
                seen.len()
            )));
        }
        let mut out: Vec<IntMatrix> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }
}

fn identity_matrix(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += x * b[k][j];
            }
        }
    }
    out
}

/// Number of antichains by the degree product formula.
fn catalan_count(degrees: &[u64], h: u64) -> Result<u128> {
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for &d in degrees {
        numerator = numerator
            .checked_mul(u128::from(h + d))
            .ok_or_else(|| Error::domain("antichain count overflows"))?;
        denominator *= u128::from(d);
    }
    if numerator % denominator != 0 {
        return Err(Error::internal("degree product formula is not an integer"));
    }
    Ok(numerator / denominator)
}

/// Enumerates every antichain of the root poset, sorted by index sequence;
/// the count is checked against the degree product formula.
pub fn enumerate_antichains(rs: &RootSystem) -> Result<Vec<Antichain>> {
    let expected = catalan_count(&rs.degrees, rs.h)?;
    if expected > ANTICHAIN_LIMIT {
        return Err(Error::SizeLimit {
            needed: expected,
            bound: ANTICHAIN_LIMIT,
            what: format!("antichain enumeration of {}", rs.name),
        });
    }
    let n = rs.positive_roots.len();
    let words = n.div_ceil(64).max(1);
    // comparable[i] holds the bitmask of roots comparable with root i.
    let mut comparable = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in 0..n {
            if rs.root_le(i, j) || rs.root_le(j, i) {
                comparable[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut out = Vec::with_capacity(expected as usize);
    let mut chosen = Vec::new();
    let mut forbidden = vec![0u64; words];
    collect_antichains(&comparable, 0, n, &mut chosen, &mut forbidden, &mut out);
    out.sort_unstable_by(|a, b| a.indices.cmp(&b.indices));
    if out.len() as u128 != expected {
        return Err(Error::internal(format!(
            "enumerated {} antichains of {}, product formula gives {expected}",
            out.len(),
            rs.name
        )));
    }
    Ok(out)
}

fn collect_antichains(
    comparable: &[Vec<u64>],
    k: usize,
    n: usize,
    chosen: &mut Vec<usize>,
    forbidden: &mut [u64],
    out: &mut Vec<Antichain>,
) {
    if k == n {
        out.push(Antichain { indices: chosen.clone() });
        return;
    }
    collect_antichains(comparable, k + 1, n, chosen, forbidden, out);
    if forbidden[k / 64] >> (k % 64) & 1 == 0 {
        let saved = forbidden.to_vec();
        for (word, add) in forbidden.iter_mut().zip(&comparable[k]) {
            *word |= add;
        }
        chosen.push(k);
        collect_antichains(comparable, k + 1, n, chosen, forbidden, out);
        chosen.pop();
        forbidden.copy_from_slice(&saved);
    }
}

/// Which comparisons exclude a candidate root in [`panyushev_step_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PanyushevConvention {
    /// A candidate is excluded when it lies weakly above a member, so the
    /// members themselves never survive.  This is the default: on the
    /// one-root type A1 it is the convention under which the step is the
    /// free two-cycle forced by the orbit structure.
    Weak,
    /// A candidate is excluded only when it lies strictly above a member;
    /// kept for comparison, not a bijection already on A1.
    Strict,
}

/// The Panyushev step with the default weak convention.
pub fn panyushev_step(rs: &RootSystem, a: &Antichain) -> Antichain {
    panyushev_step_with(rs, a, PanyushevConvention::Weak)
}

/// Maps an antichain to the maximal elements of the set of positive roots
/// lying above no member of it.
pub fn panyushev_step_with(
    rs: &RootSystem,
    a: &Antichain,
    convention: PanyushevConvention,
) -> Antichain {
    let n = rs.positive_roots.len();
    let excluded = |member: usize, b: usize| match convention {
        PanyushevConvention::Weak => rs.root_le(member, b),
        PanyushevConvention::Strict => member != b && rs.root_le(member, b),
    };
    let candidates: Vec<usize> = (0..n)
        .filter(|&b| a.indices.iter().all(|&member| !excluded(member, b)))
        .collect();
    let indices: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&b| candidates.iter().all(|&c| c == b || !rs.root_le(b, c)))
        .collect();
    Antichain { indices }
}

/// The Panyushev step on all antichains as a cyclic action of declared
/// order `2h`.
pub fn panyushev_action(rs: &RootSystem) -> Result<CyclicActionInstance> {
    let antichains = enumerate_antichains(rs)?;
    let position: HashMap<&[usize], usize> = antichains
        .iter()
        .map(|a| a.indices.as_slice())
        .zip(0..)
        .collect();
    let mut perm = Vec::with_capacity(antichains.len());
    for a in &antichains {
        let image = panyushev_step(rs, a);
        let j = *position.get(image.indices.as_slice()).ok_or_else(|| {
            Error::internal("Panyushev image is not an enumerated antichain")
        })?;
        perm.push(j);
    }
    CyclicActionInstance::new(perm, 2 * rs.h)
}

/// Elementary divisors of an integer matrix: the diagonal of the Smith
/// normal form, nonnegative, each dividing the next, zeros last.
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Vec<i128> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.iter().map(|&x| i128::from(x)).collect()
        })
        .collect();
    let steps = rows.min(cols);
    let mut diag = vec![0i128; steps];
    for t in 0..steps {
        'reduce: loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0
                        && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if a[i][j] % a[t][t] != 0 {
                        for jj in t..cols {
                            a[t][jj] += a[i][jj];
                        }
                        continue 'reduce;
                    }
                }
            }
            diag[t] = a[t][t].abs();
            break;
        }
    }
    diag
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Elementary divisors of `w - I` for a Weyl element in the root basis.
fn displacement_divisors(rs: &RootSystem, w: &IntMatrix) -> Vec<i128> {
    let n = rs.rank();
    assert_eq!(w.len(), n, "matrix size does not match the rank");
    let shifted: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| w[i][j] - i64::from(i == j)).collect())
        .collect();
    smith_normal_form(&shifted)
}

/// Number of points of `(Z/p)^n` fixed by a Weyl element `w`, i.e. solutions
/// of `(w - I)x ≡ 0 mod p`: the product over elementary divisors `s` of
/// `gcd(p, s)`, where `s = 0` contributes a factor `p`.
pub fn torus_fixed_count(rs: &RootSystem, w: &IntMatrix, p: u64) -> u128 {
    assert!(p >= 1, "modulus must be positive");
    displacement_divisors(rs, w)
        .iter()
        .map(|&s| if s == 0 { u128::from(p) } else { gcd128(u128::from(p), s.unsigned_abs()) })
        .product()
}

/// Whether the fixed-point count of `w` on `Q/pQ` equals `p^(dim V^w)`.
/// False exactly when some nonzero elementary divisor of `w - I` shares a
/// factor with `p`.
pub fn torus_character_identity_holds(rs: &RootSystem, w: &IntMatrix, p: u64) -> bool {
    let divisors = displacement_divisors(rs, w);
    let fixed_dim = divisors.iter().filter(|&&s| s == 0).count();
    torus_fixed_count(rs, w, p) == u128::from(p).pow(fixed_dim as u32)
}

/// Number of Weyl orbits on `(Z/p)^n` by the orbit-counting average of
/// [`torus_fixed_count`] over the whole group.
pub fn torus_orbit_count(rs: &RootSystem, p: u64) -> Result<u128> {
    let elements = rs.weyl_elements()?;
    let mut sum: u128 = 0;
    for w in &elements {
        sum = sum
            .checked_add(torus_fixed_count(rs, w, p))
            .ok_or_else(|| Error::domain("orbit count sum overflows"))?;
    }
    let order = elements.len() as u128;
    if sum % order != 0 {
        return Err(Error::internal(
            "fixed-point sum is not divisible by the group order",
        ));
    }
    Ok(sum / order)
}
