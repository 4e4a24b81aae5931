//! Construction and structure of finite well-generated reflection groups.
//!
//! Two realizations are supported: the infinite monomial family `G(d, e, n)`
//! (which covers the classical letter types A, B/C, D, and the dihedral
//! groups) and stored matrix models for the exceptional groups H3, H4, F4,
//! E6, E7, E8.  Every group knows its degrees, codegrees, a validated
//! Coxeter element and the primitive root anchoring its eigenvalues, its
//! reflections, and how to compute fixed spaces of elements exactly.

mod catalog;
mod monomial;

pub use monomial::MonomialElem;

use crate::cyclotomic::CycloElem;
use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::Result;
use num_integer::Integer;
use std::collections::{HashMap, HashSet, VecDeque};
use std::path::Path;
use std::sync::OnceLock;

/// Parsed name of a supported reflection group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `G(d, e, n)` acting by monomial matrices (with `e` equal to 1 or `d`).
    Monomial { d: u32, e: u32, n: usize },
    /// One of the stored exceptional matrix models.
    Catalog(String),
}

/// Parses a group name: letter types `A n`/`B n`/`C n`/`D n`, dihedral
/// `I2(m)`, `G2`, exceptional `H3 H4 F4 E6 E7 E8`, or explicit `G(d,e,n)`.
pub fn parse_spec(input: &str) -> Result<GroupSpec> {
    let s: String = input.trim().to_ascii_uppercase().replace(' ', "");
    let parse_err = |msg: &str| Error::Parse(format!("{msg}: {input:?}"));
    let tail_number = |prefix: usize| -> Result<usize> {
        s[prefix..]
            .parse::<usize>()
            .map_err(|_| parse_err("expected a rank number"))
    };
    match s.chars().next() {
        Some('A') => {
            let n = tail_number(1)?;
            if n == 0 {
                return Err(parse_err("rank must be at least 1"));
            }
            Ok(GroupSpec::Monomial { d: 1, e: 1, n: n + 1 })
        }
        Some('B') | Some('C') => {
            let n = tail_number(1)?;
            if n < 2 {
                return Err(parse_err("hyperoctahedral rank must be at least 2"));
            }
            Ok(GroupSpec::Monomial { d: 2, e: 1, n })
        }
        Some('D') => {
            let n = tail_number(1)?;
            if n < 3 {
                return Err(parse_err("type D rank must be at least 3"));
            }
            Ok(GroupSpec::Monomial { d: 2, e: 2, n })
        }
        Some('I') => {
            let m: u32 = s
                .strip_prefix("I2(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|mid| mid.parse().ok())
                .ok_or_else(|| parse_err("expected I2(m)"))?;
            if m < 3 {
                return Err(parse_err("dihedral parameter must be at least 3"));
            }
            Ok(GroupSpec::Monomial { d: m, e: m, n: 2 })
        }
        Some('H') | Some('F') | Some('E') if s.len() == 2 => match s.as_str() {
            "H3" | "H4" | "F4" | "E6" | "E7" | "E8" => Ok(GroupSpec::Catalog(s)),
            _ => Err(parse_err("unknown exceptional group")),
        },
        Some('G') if s == "G2" => Ok(GroupSpec::Monomial { d: 6, e: 6, n: 2 }),
        Some('G') => {
            let inner = s
                .strip_prefix("G(")
                .and_then(|rest| rest.strip_suffix(')'))
                .ok_or_else(|| parse_err("expected G(d,e,n)"))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 3 {
                return Err(parse_err("expected three parameters in G(d,e,n)"));
            }
            let d: u32 = parts[0].parse().map_err(|_| parse_err("bad d"))?;
            let e: u32 = parts[1].parse().map_err(|_| parse_err("bad e"))?;
            let n: usize = parts[2].parse().map_err(|_| parse_err("bad n"))?;
            validate_monomial_params(d, e, n, input)?;
            Ok(GroupSpec::Monomial { d, e, n })
        }
        _ => Err(parse_err("unrecognized group name")),
    }
}

fn validate_monomial_params(d: u32, e: u32, n: usize, input: &str) -> Result<()> {
    if d == 0 || e == 0 || n == 0 {
        return Err(Error::Parse(format!("parameters must be positive: {input:?}")));
    }
    if d % e != 0 {
        return Err(Error::Parse(format!(
            "G(d,e,n) requires e to divide d: {input:?}"
        )));
    }
    if e != 1 && e != d {
        return Err(Error::Unsupported(format!(
            "G({d},{e},{n}) is not well-generated; only e = 1 or e = d are supported"
        )));
    }
    match (d, e) {
        (1, 1) if n < 2 => Err(Error::Parse(format!(
            "G(1,1,n) needs n >= 2 to have positive rank: {input:?}"
        ))),
        (d, e) if d == e && d >= 2 && n == 1 => Err(Error::Parse(format!(
            "G(e,e,1) is the trivial group: {input:?}"
        ))),
        (2, 2) if n == 2 => Err(Error::Unsupported(
            "G(2,2,2) is reducible (a product of two reflection groups)".into(),
        )),
        _ => Ok(()),
    }
}

/// Canonical display name of a spec.
fn spec_name(spec: &GroupSpec) -> String {
    match spec {
        GroupSpec::Monomial { d: 1, e: 1, n } => format!("A{}", n - 1),
        GroupSpec::Monomial { d: 2, e: 1, n } if *n >= 2 => format!("B{n}"),
        GroupSpec::Monomial { d: 2, e: 2, n } => format!("D{n}"),
        GroupSpec::Monomial { d, e, n: 2 } if d == e && *d >= 3 => format!("I2({d})"),
        GroupSpec::Monomial { d, e, n } => format!("G({d},{e},{n})"),
        GroupSpec::Catalog(name) => name.clone(),
    }
}

/// An element of a reflection group in one of the two realizations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// A permutation with root-of-unity scalings.
    Monomial(MonomialElem),
    /// A dense matrix over a cyclotomic field.
    Matrix(Vec<Vec<CycloElem>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Realization {
    /// `G(d,e,n)` with `d >= 2`, acting irreducibly on `n` coordinates.
    Monomial,
    /// `G(1,1,n)`: permutations, acting irreducibly on the sum-zero
    /// hyperplane of dimension `n - 1`.
    SymmetricIrred,
    /// Explicit matrices of size `rank`.
    MatrixModel,
}

/// A finite well-generated complex reflection group.
#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    name: String,
    rank: usize,
    degrees: Vec<u64>,
    codegrees: Vec<u64>,
    conductor: u32,
    realization: Realization,
    /// `(d, e, n)` for the monomial realizations.
    monomial_params: Option<(u32, u32, usize)>,
    generators: Vec<GroupElement>,
    coxeter: GroupElement,
    anchor: u64,
    reflections_cache: OnceLock<Vec<GroupElement>>,
    elements_cache: OnceLock<Vec<GroupElement>>,
}

/// The scaling `zeta_d^w` as a field element (rational when `d <= 2`).
fn unity(d: u32, w: u32) -> CycloElem {
    match d {
        1 => CycloElem::one(1),
        2 => CycloElem::from_int(1, if w % 2 == 0 { 1 } else { -1 }),
        _ => CycloElem::zeta_power(d, i64::from(w)),
    }
}

fn field_conductor(d: u32) -> u32 {
    if d <= 2 {
        1
    } else {
        d
    }
}

/// Builds a group from its parsed spec using the built-in catalog.
pub fn build_group(spec: &GroupSpec) -> Result<ReflectionGroup> {
    build_group_with_catalog(spec, None)
}

/// Builds a group, reading catalog entries from `catalog_dir` when given
/// instead of the built-in data.
pub fn build_group_with_catalog(
    spec: &GroupSpec,
    catalog_dir: Option<&Path>,
) -> Result<ReflectionGroup> {
    match spec {
        GroupSpec::Monomial { d, e, n } => {
            validate_monomial_params(*d, *e, *n, &spec_name(spec))?;
            build_monomial(*d, *e, *n, spec_name(spec))
        }
        GroupSpec::Catalog(name) => build_catalog(name, catalog_dir),
    }
}

fn monomial_degrees(d: u32, e: u32, n: usize) -> (Vec<u64>, Vec<u64>) {
    let (d, e, n) = (u64::from(d), u64::from(e), n as u64);
    if d == 1 {
        // Symmetric group of rank n - 1.
        ((2..=n).collect(), (0..=n - 2).collect())
    } else if e == 1 {
        ((1..=n).map(|k| k * d).collect(), (0..n).map(|k| k * d).collect())
    } else {
        let mut degrees: Vec<u64> = (1..n).map(|k| k * e).collect();
        degrees.push(n);
        degrees.sort_unstable();
        let mut codegrees: Vec<u64> = (0..n - 1).map(|k| k * e).collect();
        codegrees.push((n - 1) * e - n);
        codegrees.sort_unstable();
        (degrees, codegrees)
    }
}

fn build_monomial(d: u32, e: u32, n: usize, name: String) -> Result<ReflectionGroup> {
    let (degrees, codegrees) = monomial_degrees(d, e, n);
    let rank = degrees.len();
    let realization = if d == 1 {
        Realization::SymmetricIrred
    } else {
        Realization::Monomial
    };
    let mut generators = Vec::new();
    if d > 1 && e == 1 {
        generators.push(GroupElement::Monomial(MonomialElem::diagonal(d, n, 0, 1)));
    }
    if d > 1 && e == d {
        // The twisted swap: e_0 -> zeta^-1 e_1, e_1 -> zeta e_0.
        generators.push(GroupElement::Monomial(MonomialElem::transposition_like(
            d,
            n,
            0,
            1,
            d - 1,
        )));
    }
    for i in 1..n {
        generators.push(GroupElement::Monomial(MonomialElem::transposition_like(
            d,
            n,
            i - 1,
            i,
            0,
        )));
    }
    // Coxeter element candidate: the full cycle, with a single scaling for
    // the wreath family, or the twisted generator product for e = d.
    let coxeter = if e == 1 || d == 1 {
        let perm: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        let mut weights = vec![0u32; n];
        if d > 1 {
            weights[n - 1] = 1;
        }
        GroupElement::Monomial(MonomialElem::new(d, perm, weights))
    } else {
        let mut c = generators[0].clone();
        for g in &generators[1..] {
            c = multiply_elems(&c, g);
        }
        c
    };
    let mut group = ReflectionGroup {
        name,
        rank,
        degrees,
        codegrees,
        conductor: field_conductor(d),
        realization,
        monomial_params: Some((d, e, n)),
        generators,
        coxeter,
        anchor: 0,
        reflections_cache: OnceLock::new(),
        elements_cache: OnceLock::new(),
    };
    group.anchor = group.validate_coxeter()?;
    Ok(group)
}

fn build_catalog(name: &str, catalog_dir: Option<&Path>) -> Result<ReflectionGroup> {
    let entry = catalog::load(name, catalog_dir)?;
    let rank = entry.rank;
    let generators: Vec<GroupElement> = entry
        .generators
        .iter()
        .map(|m| GroupElement::Matrix(m.clone()))
        .collect();
    let mut coxeter = generators
        .first()
        .cloned()
        .ok_or_else(|| Error::Catalog(format!("{name}: no generators")))?;
    for g in &generators[1..] {
        coxeter = multiply_elems(&coxeter, g);
    }
    let mut group = ReflectionGroup {
        name: entry.name.clone(),
        rank,
        degrees: entry.degrees.clone(),
        codegrees: entry.codegrees.clone(),
        conductor: entry.conductor,
        realization: Realization::MatrixModel,
        monomial_params: None,
        generators,
        coxeter,
        anchor: 0,
        reflections_cache: OnceLock::new(),
        elements_cache: OnceLock::new(),
    };
    // Generators of a reflection group must be reflections.
    for g in &group.generators {
        if group.codim(g) != 1 {
            return Err(Error::Catalog(format!(
                "{name}: a stored generator does not fix a hyperplane"
            )));
        }
    }
    group.anchor = group.validate_coxeter()?;
    // Cheap groups get their order verified by full enumeration right away;
    // larger ones are verified whenever something first enumerates them.
    if group.order() <= 2_000 {
        group.enumerate(2_000)?;
    }
    Ok(group)
}

fn multiply_elems(a: &GroupElement, b: &GroupElement) -> GroupElement {
    match (a, b) {
        (GroupElement::Monomial(x), GroupElement::Monomial(y)) => {
            GroupElement::Monomial(x.multiply(y))
        }
        (GroupElement::Matrix(x), GroupElement::Matrix(y)) => {
            GroupElement::Matrix(linalg::mat_mul(x, y))
        }
        _ => panic!("mixed element realizations"),
    }
}

impl ReflectionGroup {
    /// Canonical display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank: the dimension of the irreducible reflection representation.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Degrees `d_1 <= ... <= d_n`.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Codegrees `d_1^* <= ... <= d_n^*`.
    pub fn codegrees(&self) -> &[u64] {
        &self.codegrees
    }

    /// The Coxeter number `h` (the largest degree).
    pub fn h(&self) -> u64 {
        *self.degrees.last().expect("positive rank")
    }

    /// Group order, the product of the degrees.
    pub fn order(&self) -> u128 {
        self.degrees.iter().map(|&d| u128::from(d)).product()
    }

    /// Number of reflections, the sum of `d_i - 1`.
    pub fn num_reflections(&self) -> u64 {
        self.degrees.iter().map(|&d| d - 1).sum()
    }

    /// Conductor of the field the matrix entries live in.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The validated Coxeter element.
    pub fn coxeter_element(&self) -> &GroupElement {
        &self.coxeter
    }

    /// Exponent `a` (coprime to `h`) such that the Coxeter element has
    /// eigenvalues `zeta_h^(a(1 - d_i))` with a regular eigenvector for
    /// `zeta_h^a`.
    pub fn coxeter_anchor(&self) -> u64 {
        self.anchor
    }

    /// Generating reflections.
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// The identity element.
    pub fn identity(&self) -> GroupElement {
        match self.realization {
            Realization::Monomial | Realization::SymmetricIrred => {
                let (d, _, n) = self.monomial_params.unwrap();
                GroupElement::Monomial(MonomialElem::identity(d, n))
            }
            Realization::MatrixModel => {
                GroupElement::Matrix(linalg::identity(self.rank, self.conductor))
            }
        }
    }

    /// Product `a * b` (apply `b` first).
    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        multiply_elems(a, b)
    }

    /// Group inverse.
    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        match a {
            GroupElement::Monomial(m) => GroupElement::Monomial(m.inverse()),
            GroupElement::Matrix(m) => {
                GroupElement::Matrix(linalg::invert(m).expect("group elements are invertible"))
            }
        }
    }

    /// `a^k` for `k >= 0`.
    pub fn power(&self, a: &GroupElement, k: u64) -> GroupElement {
        let mut acc = self.identity();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            base = self.multiply(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// True for the identity.
    pub fn is_identity(&self, a: &GroupElement) -> bool {
        match a {
            GroupElement::Monomial(m) => m.is_identity(),
            GroupElement::Matrix(m) => m.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
            }),
        }
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        if let GroupElement::Monomial(m) = a {
            return m.order();
        }
        let mut acc = a.clone();
        let mut k = 1u64;
        while !self.is_identity(&acc) {
            acc = self.multiply(&acc, a);
            k += 1;
            assert!(k <= 1_000_000, "element order exceeds sanity bound");
        }
        k
    }

    /// Codimension of the fixed space of `a` in the reflection
    /// representation.
    pub fn codim(&self, a: &GroupElement) -> usize {
        match (self.realization, a) {
            (Realization::Monomial, GroupElement::Monomial(m)) => m.n() - m.natural_fixed_dim(),
            (Realization::SymmetricIrred, GroupElement::Monomial(m)) => {
                m.n() - m.cycles().len()
            }
            (_, GroupElement::Matrix(m)) => {
                let shifted = subtract_identity(m);
                linalg::rank(&shifted)
            }
            _ => panic!("element does not match group realization"),
        }
    }

    /// Basis of the fixed space `ker(a - 1)` in the reflection
    /// representation (vectors of length `rank`).
    pub fn fixed_space_basis(&self, a: &GroupElement) -> Vec<Vec<CycloElem>> {
        match (self.realization, a) {
            (Realization::Monomial, GroupElement::Monomial(m)) => {
                let d = m.d();
                let conductor = self.conductor;
                let mut basis = Vec::new();
                for (cycle, sum) in m.cycles() {
                    if sum != 0 {
                        continue;
                    }
                    let mut v = vec![CycloElem::zero(conductor); m.n()];
                    let mut coeff = CycloElem::one(conductor);
                    for &i in &cycle {
                        v[i] = coeff.clone();
                        coeff = coeff.mul(&unity(d, m.weights()[i]));
                    }
                    basis.push(v);
                }
                basis
            }
            _ => {
                let m = self.natural_matrix(a);
                linalg::kernel_basis(&subtract_identity(&m))
            }
        }
    }

    /// Matrix of `a` in the irreducible reflection representation.
    pub fn natural_matrix(&self, a: &GroupElement) -> Matrix {
        match (self.realization, a) {
            (Realization::Monomial, GroupElement::Monomial(m)) => {
                let n = m.n();
                let mut out = vec![vec![CycloElem::zero(self.conductor); n]; n];
                for i in 0..n {
                    out[m.perm()[i] as usize][i] = unity(m.d(), m.weights()[i]);
                }
                out
            }
            (Realization::SymmetricIrred, GroupElement::Monomial(m)) => {
                // Basis f_i = e_i - e_(i+1) of the sum-zero hyperplane.
                let n = m.n();
                let mut out = vec![vec![CycloElem::zero(1); n - 1]; n - 1];
                for j in 0..n - 1 {
                    let a = m.perm()[j] as usize;
                    let b = m.perm()[j + 1] as usize;
                    if a < b {
                        for r in a..b {
                            out[r][j] = CycloElem::one(1);
                        }
                    } else {
                        for r in b..a {
                            out[r][j] = CycloElem::from_int(1, -1);
                        }
                    }
                }
                out
            }
            (Realization::MatrixModel, GroupElement::Matrix(m)) => m.clone(),
            _ => panic!("element does not match group realization"),
        }
    }

    /// All reflections (elements whose fixed space is a hyperplane), cached.
    pub fn reflections(&self) -> Result<&[GroupElement]> {
        if let Some(r) = self.reflections_cache.get() {
            return Ok(r);
        }
        let refs = match self.realization {
            Realization::Monomial | Realization::SymmetricIrred => {
                let (d, e, n) = self.monomial_params.unwrap();
                let mut out = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        for k in 0..d {
                            out.push(GroupElement::Monomial(MonomialElem::transposition_like(
                                d, n, i, j, k,
                            )));
                        }
                    }
                }
                if e == 1 {
                    for i in 0..n {
                        for k in 1..d {
                            out.push(GroupElement::Monomial(MonomialElem::diagonal(d, n, i, k)));
                        }
                    }
                }
                out
            }
            Realization::MatrixModel => {
                // Close the generators under conjugation; every reflection is
                // conjugate to a generating one in the stored models, and the
                // count check below certifies completeness.
                let mut seen: HashSet<GroupElement> = self.generators.iter().cloned().collect();
                let mut queue: VecDeque<GroupElement> = self.generators.iter().cloned().collect();
                while let Some(r) = queue.pop_front() {
                    for g in &self.generators {
                        let conj =
                            self.multiply(&self.multiply(g, &r), &self.inverse(g));
                        if seen.insert(conj.clone()) {
                            queue.push_back(conj);
                        }
                    }
                }
                let mut out: Vec<GroupElement> = seen.into_iter().collect();
                // Deterministic order: sort by a stable debug rendering.
                out.sort_by_key(|e| format!("{e:?}"));
                out
            }
        };
        if refs.len() as u64 != self.num_reflections() {
            return Err(Error::internal(format!(
                "{}: found {} reflections, expected {}",
                self.name,
                refs.len(),
                self.num_reflections()
            )));
        }
        let _ = self.reflections_cache.set(refs);
        Ok(self.reflections_cache.get().unwrap())
    }

    /// All group elements, enumerated on first use; errors when the order
    /// exceeds `bound`.
    pub fn enumerate(&self, bound: u64) -> Result<&[GroupElement]> {
        if let Some(e) = self.elements_cache.get() {
            return Ok(e);
        }
        if self.order() > u128::from(bound) {
            return Err(Error::SizeLimit {
                needed: self.order(),
                bound: u128::from(bound),
                what: format!("enumeration of {}", self.name),
            });
        }
        let elems = match self.realization {
            Realization::Monomial | Realization::SymmetricIrred => {
                let (d, e, n) = self.monomial_params.unwrap();
                let mut out = Vec::new();
                for perm in permutations(n) {
                    let mut weights = vec![0u32; n];
                    loop {
                        let sum: u32 = weights.iter().sum::<u32>() % e;
                        if sum % e == 0 {
                            out.push(GroupElement::Monomial(MonomialElem::new(
                                d,
                                perm.clone(),
                                weights.clone(),
                            )));
                        }
                        // Odometer step over weight tuples in 0..d.
                        let mut pos = 0;
                        loop {
                            if pos == n {
                                break;
                            }
                            weights[pos] += 1;
                            if weights[pos] < d {
                                break;
                            }
                            weights[pos] = 0;
                            pos += 1;
                        }
                        if pos == n {
                            break;
                        }
                    }
                }
                out
            }
            Realization::MatrixModel => {
                let mut seen: HashSet<GroupElement> = HashSet::new();
                let id = self.identity();
                seen.insert(id.clone());
                let mut order = vec![id];
                let mut frontier = 0;
                while frontier < order.len() {
                    let current = order[frontier].clone();
                    frontier += 1;
                    for g in &self.generators {
                        let next = self.multiply(&current, g);
                        if seen.insert(next.clone()) {
                            order.push(next);
                        }
                    }
                }
                order
            }
        };
        if elems.len() as u128 != self.order() {
            return Err(Error::internal(format!(
                "{}: enumerated {} elements, expected {}",
                self.name,
                elems.len(),
                self.order()
            )));
        }
        let _ = self.elements_cache.set(elems);
        Ok(self.elements_cache.get().unwrap())
    }

    /// Injects a precomputed element list (used by centralizer restrictions).
    fn set_elements(&self, elems: Vec<GroupElement>) {
        let _ = self.elements_cache.set(elems);
    }

    /// Eigenvalue exponents of `a` as powers of `zeta_modulus`, sorted with
    /// multiplicity; errors when some eigenvalue is not a `modulus`-th root
    /// of unity.
    pub fn eigenvalue_exponents(&self, a: &GroupElement, modulus: u64) -> Result<Vec<u64>> {
        match (self.realization, a) {
            (Realization::Monomial, GroupElement::Monomial(m)) => {
                monomial_exponents(m, modulus, false)
            }
            (Realization::SymmetricIrred, GroupElement::Monomial(m)) => {
                monomial_exponents(m, modulus, true)
            }
            (_, GroupElement::Matrix(mat)) => {
                let small = u32::try_from(modulus)
                    .map_err(|_| Error::domain("eigenvalue modulus too large"))?;
                let lifted = u32::lcm(&self.conductor, &small);
                let mut exps = Vec::new();
                for g in 0..modulus {
                    let z = CycloElem::zeta_power(lifted, (g * u64::from(lifted) / modulus) as i64);
                    let shifted: Matrix = mat
                        .iter()
                        .enumerate()
                        .map(|(i, row)| {
                            row.iter()
                                .enumerate()
                                .map(|(j, e)| if i == j { e.sub(&z) } else { e.clone() })
                                .collect()
                        })
                        .collect();
                    let mult = self.rank - linalg::rank(&shifted);
                    exps.extend(std::iter::repeat(g).take(mult));
                }
                if exps.len() != self.rank {
                    return Err(Error::domain(format!(
                        "element has eigenvalues that are not {modulus}-th roots of unity"
                    )));
                }
                Ok(exps)
            }
            _ => panic!("element does not match group realization"),
        }
    }

    /// Validates the stored Coxeter element: order `h`, eigenvalues
    /// `zeta_h^(a(1-d_i))` for a primitive `a`, and a regular eigenvector
    /// for `zeta_h^a`.  Returns the anchor `a`.
    fn validate_coxeter(&self) -> Result<u64> {
        let h = self.h();
        let order = self.element_order(&self.coxeter);
        if order != h {
            return Err(Error::internal(format!(
                "{}: Coxeter candidate has order {order}, expected {h}",
                self.name
            )));
        }
        let mut actual = self.eigenvalue_exponents(&self.coxeter, h)?;
        actual.sort_unstable();
        for a in 1..h.max(2) {
            if u64::gcd(&a, &h) != 1 {
                continue;
            }
            let mut expected: Vec<u64> = self
                .degrees
                .iter()
                .map(|&d| (a * ((h + 1 - d % h) % h)) % h)
                .collect();
            expected.sort_unstable();
            if expected == actual && self.has_regular_eigenvector(&self.coxeter, a)? {
                return Ok(a);
            }
        }
        Err(Error::internal(format!(
            "{}: no primitive anchor matches the Coxeter spectrum {actual:?}",
            self.name
        )))
    }

    /// Checks that the `zeta_h^a` eigenvector of `c` avoids every reflection
    /// hyperplane.
    fn has_regular_eigenvector(&self, c: &GroupElement, a: u64) -> Result<bool> {
        let h = self.h();
        match (self.realization, c) {
            (Realization::MatrixModel, GroupElement::Matrix(mat)) => {
                let lifted = u32::lcm(&self.conductor, &(h as u32));
                let z = CycloElem::zeta_power(lifted, (a * u64::from(lifted) / h) as i64);
                let shifted: Matrix = mat
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, e)| if i == j { e.sub(&z) } else { e.clone() })
                            .collect()
                    })
                    .collect();
                let eig = linalg::kernel_basis(&shifted);
                if eig.len() != 1 {
                    return Ok(false);
                }
                let v = &eig[0];
                for r in self.reflections()? {
                    let rm = self.natural_matrix(r);
                    let image = linalg::mat_vec(&rm, v);
                    if image.iter().zip(v).all(|(x, y)| x.eq_value(y)) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (_, GroupElement::Monomial(m)) => Ok(monomial_regular_eigenvector(
                m,
                h,
                a,
                self.monomial_params.unwrap(),
            )),
            _ => panic!("element does not match group realization"),
        }
    }

    /// All `d` with `1 <= d <= h` dividing equally many degrees and
    /// codegrees (the orders of regular elements).
    pub fn regular_numbers(&self) -> Vec<u64> {
        (1..=self.h())
            .filter(|&d| {
                let a = self.degrees.iter().filter(|&&x| x % d == 0).count();
                let b = self.codegrees.iter().filter(|&&x| x % d == 0).count();
                a == b
            })
            .collect()
    }

    /// Order of the center: the gcd of the degrees.
    pub fn center_order(&self) -> u64 {
        self.degrees.iter().fold(0u64, |a, &b| a.gcd(&b))
    }

    /// Generator of the center: `c^(h/z)`.
    pub fn center_generator(&self) -> GroupElement {
        let z = self.center_order();
        self.power(&self.coxeter, self.h() / z)
    }

    /// Verifies by enumeration that the central elements are exactly the
    /// powers of [`ReflectionGroup::center_generator`].
    pub fn verify_center(&self, bound: u64) -> Result<()> {
        let elems = self.enumerate(bound)?;
        let central: Vec<&GroupElement> = elems
            .iter()
            .filter(|x| {
                self.generators
                    .iter()
                    .all(|g| self.multiply(x, g) == self.multiply(g, x))
            })
            .collect();
        let z = self.center_order();
        if central.len() as u64 != z {
            return Err(Error::internal(format!(
                "{}: found {} central elements, expected {z}",
                self.name,
                central.len()
            )));
        }
        let gen = self.center_generator();
        let mut powers = HashSet::new();
        let mut acc = self.identity();
        for _ in 0..z {
            powers.insert(acc.clone());
            acc = self.multiply(&acc, &gen);
        }
        if !central.iter().all(|x| powers.contains(*x)) {
            return Err(Error::internal(format!(
                "{}: center is not generated by the expected element",
                self.name
            )));
        }
        Ok(())
    }

    /// Reflection length of `a`: breadth-first distance from the identity in
    /// the (right) Cayley graph on all reflections.
    pub fn absolute_length(&self, a: &GroupElement, bound: u64) -> Result<usize> {
        if self.order() > u128::from(bound) {
            return Err(Error::SizeLimit {
                needed: self.order(),
                bound: u128::from(bound),
                what: format!("reflection-length search in {}", self.name),
            });
        }
        let refs = self.reflections()?.to_vec();
        let mut dist: HashMap<GroupElement, usize> = HashMap::new();
        let id = self.identity();
        if *a == id {
            return Ok(0);
        }
        dist.insert(id.clone(), 0);
        let mut frontier = vec![id];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for r in &refs {
                    let wr = self.multiply(w, r);
                    if wr == *a {
                        return Ok(level);
                    }
                    if !dist.contains_key(&wr) {
                        dist.insert(wr.clone(), level);
                        next.push(wr);
                    }
                }
            }
            frontier = next;
        }
        Err(Error::internal(format!(
            "{}: element not reached by reflections",
            self.name
        )))
    }
}

fn subtract_identity(m: &Matrix) -> Matrix {
    let conductor = linalg::common_conductor(m);
    let one = CycloElem::one(conductor);
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| if i == j { e.sub(&one) } else { e.clone() })
                .collect()
        })
        .collect()
}

/// Eigenvalue exponents of a monomial element as powers of `zeta_modulus`:
/// the cycle with scaling sum `s` and length `k` contributes the roots of
/// `x^k = zeta_d^s`.  For the rank `n - 1` symmetric realization one zero
/// exponent (the trivial summand) is removed.
fn monomial_exponents(m: &MonomialElem, modulus: u64, drop_trivial: bool) -> Result<Vec<u64>> {
    let d = u64::from(m.d());
    let mut exps = Vec::new();
    for (cycle, s) in m.cycles() {
        let k = cycle.len() as u64;
        for j in 0..k {
            // Exponent (s + d j) / (d k) of a full turn.
            let num = u64::from(s) + d * j;
            let den = d * k;
            let g = num.gcd(&den);
            let (p, q) = (num / g, den / g);
            if modulus % q != 0 {
                return Err(Error::domain(format!(
                    "eigenvalue of order {q} is not a {modulus}-th root of unity"
                )));
            }
            exps.push((p * (modulus / q)) % modulus);
        }
    }
    if drop_trivial {
        let pos = exps
            .iter()
            .position(|&e| e == 0)
            .expect("permutations always fix the diagonal direction");
        exps.remove(pos);
    }
    exps.sort_unstable();
    Ok(exps)
}

/// Exact regularity test for the `zeta_h^a` eigenvector of a monomial
/// element: all coordinates are roots of unity (or zero), so hyperplane
/// avoidance reduces to integer exponent comparisons.
fn monomial_regular_eigenvector(
    m: &MonomialElem,
    h: u64,
    a: u64,
    params: (u32, u32, usize),
) -> bool {
    let (d, e, n) = params;
    let dl = u64::from(d);
    let big_l = dl.lcm(&h); // conductor of the eigenvector coordinates
    // coords[i] = Some(g) means coordinate zeta_L^g, None means zero.
    let mut coords: Vec<Option<u64>> = vec![None; n];
    let mut eig_dim = 0usize;
    for (cycle, s) in m.cycles() {
        let k = cycle.len() as u64;
        // The eigenvalue zeta_h^a lives on this cycle iff (zeta_h^a)^k equals
        // zeta_d^s, i.e. a k L/h = s L/d (mod L).
        if (a * k * (big_l / h)) % big_l != (u64::from(s) * (big_l / dl)) % big_l {
            continue;
        }
        eig_dim += 1;
        let mut g = 0u64;
        for &i in &cycle {
            coords[i] = Some(g);
            // Next coordinate along the cycle: multiply by zeta_d^(w_i) and
            // divide by the eigenvalue.
            g = (g + u64::from(m.weights()[i]) * (big_l / dl) + big_l
                - (a * (big_l / h)) % big_l)
                % big_l;
        }
    }
    if eig_dim != 1 {
        return false;
    }
    // Transposition-like reflections: hyperplane x_i = zeta_d^-k x_j.
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..d {
                match (coords[i], coords[j]) {
                    (None, None) => return false,
                    (Some(gi), Some(gj)) => {
                        let rhs = (gj + (big_l - u64::from(k) * (big_l / dl) % big_l)) % big_l;
                        if gi == rhs {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    // Diagonal reflections (wreath family only): hyperplane x_i = 0.
    if e == 1 && d > 1 {
        if coords.iter().any(|c| c.is_none()) {
            return false;
        }
    }
    true
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..n as u32).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// A reflection group obtained by restricting the centralizer of `c^(h/d)`
/// to an eigenspace, together with the correspondence to parent elements.
#[derive(Clone, Debug)]
pub struct RestrictedGroup {
    /// The restricted group acting on the eigenspace.
    pub group: ReflectionGroup,
    /// The divisor of `h` used for the restriction.
    pub d: u64,
    /// Parent centralizer element -> its restriction.
    pub to_restricted: HashMap<GroupElement, GroupElement>,
    /// Restriction -> parent centralizer element.
    pub to_parent: HashMap<GroupElement, GroupElement>,
}

impl ReflectionGroup {
    /// Restricts the centralizer of `c^(h/d)` (for `d` dividing `h`) to the
    /// `zeta_d^a` eigenspace, producing a smaller well-generated reflection
    /// group whose degrees are the parent degrees divisible by `d`.
    pub fn restrict_centralizer(&self, d: u64, bound: u64) -> Result<RestrictedGroup> {
        let h = self.h();
        if d == 0 || h % d != 0 {
            return Err(Error::domain(format!(
                "restriction order {d} does not divide the Coxeter number {h}"
            )));
        }
        let w = self.power(&self.coxeter, h / d);
        let sub_degrees: Vec<u64> =
            self.degrees.iter().copied().filter(|x| x % d == 0).collect();
        let sub_codegrees: Vec<u64> =
            self.codegrees.iter().copied().filter(|x| x % d == 0).collect();
        let elems = self.enumerate(bound)?;
        let centralizer: Vec<GroupElement> = elems
            .iter()
            .filter(|x| self.multiply(x, &w) == self.multiply(&w, x))
            .cloned()
            .collect();
        let expected_order: u128 = sub_degrees.iter().map(|&x| u128::from(x)).product();
        if centralizer.len() as u128 != expected_order {
            return Err(Error::internal(format!(
                "{}: centralizer of order {} does not match degree product {}",
                self.name,
                centralizer.len(),
                expected_order
            )));
        }
        let name = format!("{}[d={d}]", self.name);
        if sub_degrees.len() == self.rank {
            // The power is central and the eigenspace is everything: the
            // restriction is the group itself in its own realization.
            let mut group = self.clone();
            group.name = name;
            group.set_elements(centralizer.clone());
            let pairs: HashMap<GroupElement, GroupElement> = centralizer
                .iter()
                .map(|x| (x.clone(), x.clone()))
                .collect();
            return Ok(RestrictedGroup {
                group,
                d,
                to_restricted: pairs.clone(),
                to_parent: pairs,
            });
        }
        // Eigenspace basis for eigenvalue zeta_d^a (a the parent anchor).
        let lifted = u32::lcm(&self.conductor, &(d as u32));
        let z = CycloElem::zeta_power(lifted, ((self.anchor % d) * u64::from(lifted) / d) as i64);
        let wm = self.natural_matrix(&w);
        let shifted: Matrix = wm
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| if i == j { e.sub(&z) } else { e.clone() })
                    .collect()
            })
            .collect();
        let basis = linalg::kernel_basis(&shifted);
        let k = basis.len();
        if k != sub_degrees.len() {
            return Err(Error::internal(format!(
                "{}: eigenspace dimension {k} does not match the {} degrees divisible by {d}",
                self.name,
                sub_degrees.len()
            )));
        }
        // Columns of B are the basis vectors; pick independent rows R so the
        // square block is invertible, then each restriction is
        // X = B[R]^-1 (M B)[R].
        let n = self.rank;
        let bmat: Matrix = (0..n)
            .map(|r| basis.iter().map(|v| v[r].clone()).collect())
            .collect();
        let mut probe: Matrix = (0..k)
            .map(|i| (0..n).map(|r| basis[i][r].clone()).collect())
            .collect();
        let pivot_rows = linalg::rref(&mut probe);
        let bsq: Matrix = pivot_rows.iter().map(|&r| bmat[r].clone()).collect();
        let binv = linalg::invert(&bsq)
            .ok_or_else(|| Error::internal("eigenspace pivot block is singular"))?;
        let mut to_restricted = HashMap::new();
        let mut to_parent = HashMap::new();
        let mut restricted_elems = Vec::new();
        let mut restricted_cox = None;
        for u in &centralizer {
            let mu = self.natural_matrix(u);
            let image = linalg::mat_mul(&mu, &bmat);
            let image_rows: Matrix = pivot_rows.iter().map(|&r| image[r].clone()).collect();
            let x = linalg::mat_mul(&binv, &image_rows);
            // The centralizer preserves the eigenspace; verify exactly.
            let back = linalg::mat_mul(&bmat, &x);
            for (r1, r2) in back.iter().zip(&image) {
                for (e1, e2) in r1.iter().zip(r2) {
                    if !e1.eq_value(e2) {
                        return Err(Error::internal(
                            "centralizer element does not preserve the eigenspace",
                        ));
                    }
                }
            }
            let xe = GroupElement::Matrix(x);
            if *u == self.coxeter {
                restricted_cox = Some(xe.clone());
            }
            to_restricted.insert(u.clone(), xe.clone());
            to_parent.insert(xe.clone(), u.clone());
            restricted_elems.push(xe);
        }
        if to_parent.len() != centralizer.len() {
            return Err(Error::internal(
                "centralizer does not act faithfully on the eigenspace",
            ));
        }
        let restricted_cox = restricted_cox
            .ok_or_else(|| Error::internal("Coxeter element missing from its own centralizer"))?;
        let restricted_conductor = restricted_elems
            .iter()
            .map(|e| match e {
                GroupElement::Matrix(m) => linalg::common_conductor(m),
                GroupElement::Monomial(_) => 1,
            })
            .fold(1u32, |a, b| a.lcm(&b));
        let mut group = ReflectionGroup {
            name,
            rank: k,
            degrees: sub_degrees,
            codegrees: sub_codegrees,
            conductor: restricted_conductor,
            realization: Realization::MatrixModel,
            monomial_params: None,
            generators: Vec::new(),
            coxeter: restricted_cox,
            anchor: 0,
            reflections_cache: OnceLock::new(),
            elements_cache: OnceLock::new(),
        };
        let reflections: Vec<GroupElement> = restricted_elems
            .iter()
            .filter(|x| group.codim(x) == 1)
            .cloned()
            .collect();
        group.generators = reflections.clone();
        if reflections.len() as u64 != group.num_reflections() {
            return Err(Error::internal(format!(
                "{}: restriction has {} reflections, expected {}",
                group.name,
                reflections.len(),
                group.num_reflections()
            )));
        }
        let _ = group.reflections_cache.set(reflections);
        group.set_elements(restricted_elems);
        group.anchor = group.validate_coxeter()?;
        Ok(RestrictedGroup {
            group,
            d,
            to_restricted,
            to_parent,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> ReflectionGroup {
        build_group(&parse_spec(name).unwrap()).unwrap()
    }

    #[test]
    fn parses_letter_names() {
        assert_eq!(parse_spec("A3").unwrap(), GroupSpec::Monomial { d: 1, e: 1, n: 4 });
        assert_eq!(parse_spec("b2").unwrap(), GroupSpec::Monomial { d: 2, e: 1, n: 2 });
        assert_eq!(parse_spec("C3").unwrap(), GroupSpec::Monomial { d: 2, e: 1, n: 3 });
        assert_eq!(parse_spec("D4").unwrap(), GroupSpec::Monomial { d: 2, e: 2, n: 4 });
        assert_eq!(parse_spec("I2(7)").unwrap(), GroupSpec::Monomial { d: 7, e: 7, n: 2 });
        assert_eq!(parse_spec("G2").unwrap(), GroupSpec::Monomial { d: 6, e: 6, n: 2 });
        assert_eq!(parse_spec("G(4,1,3)").unwrap(), GroupSpec::Monomial { d: 4, e: 1, n: 3 });
        assert_eq!(parse_spec("G(5, 5, 4)").unwrap(), GroupSpec::Monomial { d: 5, e: 5, n: 4 });
        assert_eq!(parse_spec("e8").unwrap(), GroupSpec::Catalog("E8".into()));
        assert_eq!(parse_spec(" h3 ").unwrap(), GroupSpec::Catalog("H3".into()));
    }

    #[test]
    fn rejects_unsupported_names() {
        for bad in ["A0", "B1", "D2", "I2(2)", "G(1,1,1)", "G(3,3,1)", "X5", "E9", "G(0,1,2)"] {
            assert!(parse_spec(bad).is_err(), "{bad} should be rejected");
        }
        // Well-defined but not well-generated, or reducible.
        assert!(matches!(parse_spec("G(4,2,3)"), Err(Error::Unsupported(_))));
        assert!(matches!(parse_spec("G(2,2,2)"), Err(Error::Unsupported(_))));
    }

    #[test]
    fn degree_and_codegree_tables() {
        let cases: &[(&str, &[u64], &[u64])] = &[
            ("A3", &[2, 3, 4], &[0, 1, 2]),
            ("B3", &[2, 4, 6], &[0, 2, 4]),
            ("D4", &[2, 4, 4, 6], &[0, 2, 2, 4]),
            ("I2(5)", &[2, 5], &[0, 3]),
            ("G(3,1,2)", &[3, 6], &[0, 3]),
            ("G(3,3,3)", &[3, 3, 6], &[0, 3, 3]),
            ("G(4,1,1)", &[4], &[0]),
            ("H3", &[2, 6, 10], &[0, 4, 8]),
            ("F4", &[2, 6, 8, 12], &[0, 4, 6, 10]),
            ("E6", &[2, 5, 6, 8, 9, 12], &[0, 3, 4, 6, 7, 10]),
        ];
        for (name, deg, codeg) in cases {
            let g = group(name);
            assert_eq!(g.degrees(), *deg, "{name} degrees");
            assert_eq!(g.codegrees(), *codeg, "{name} codegrees");
            assert_eq!(g.rank(), deg.len());
        }
    }

    #[test]
    fn coxeter_element_of_rank_two_hyperoctahedral() {
        let g = group("B2");
        let c = g.coxeter_element();
        assert_eq!(g.element_order(c), 4);
        let m = g.natural_matrix(c);
        // Rotation by a quarter turn: [[0, -1], [1, 0]].
        assert!(m[0][0].is_zero() && m[1][1].is_zero());
        assert!(m[0][1].eq_value(&CycloElem::from_int(1, -1)));
        assert!(m[1][0].is_one());
        assert_eq!(g.eigenvalue_exponents(c, 4).unwrap(), vec![1, 3]);
    }

    #[test]
    fn coxeter_elements_validate_across_families() {
        for name in ["A1", "A4", "B3", "D4", "I2(7)", "G(3,1,2)", "G(4,1,1)", "G(3,3,4)", "H3"] {
            let g = group(name);
            assert_eq!(g.element_order(g.coxeter_element()), g.h(), "{name}");
            assert_eq!(u64::gcd(&g.coxeter_anchor(), &g.h()), 1, "{name}");
        }
    }

    #[test]
    fn reflection_counts_match_degree_sums() {
        for name in ["A3", "B3", "D4", "I2(6)", "G(3,3,3)", "G(4,1,2)", "H3", "F4"] {
            let g = group(name);
            let refs = g.reflections().unwrap();
            assert_eq!(refs.len() as u64, g.num_reflections(), "{name}");
            for r in refs {
                assert_eq!(g.codim(r), 1, "{name}: reflections fix a hyperplane");
            }
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(group("A3").enumerate(100).unwrap().len(), 24);
        assert_eq!(group("B2").enumerate(100).unwrap().len(), 8);
        assert_eq!(group("G(3,3,3)").enumerate(100).unwrap().len(), 54);
        assert_eq!(group("H3").enumerate(200).unwrap().len(), 120);
        assert!(matches!(
            group("A5").enumerate(100),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn fixed_spaces_agree_with_matrix_kernels() {
        for name in ["B2", "G(3,3,3)"] {
            let g = group(name);
            for w in g.enumerate(100).unwrap() {
                let m = g.natural_matrix(w);
                let shifted = subtract_identity(&m);
                let matrix_codim = linalg::rank(&shifted);
                assert_eq!(g.codim(w), matrix_codim, "{name}");
                for v in g.fixed_space_basis(w) {
                    let image = linalg::mat_vec(&m, &v);
                    assert!(
                        image.iter().zip(&v).all(|(x, y)| x.eq_value(y)),
                        "{name}: fixed-space vector moved"
                    );
                }
            }
        }
    }

    #[test]
    fn symmetric_realization_uses_reduced_dimension() {
        let g = group("A3");
        assert_eq!(g.rank(), 3);
        for w in g.enumerate(100).unwrap() {
            let m = g.natural_matrix(w);
            assert_eq!(m.len(), 3);
            assert_eq!(g.codim(w), linalg::rank(&subtract_identity(&m)));
        }
    }

    #[test]
    fn centers() {
        assert_eq!(group("A3").center_order(), 1);
        assert_eq!(group("B3").center_order(), 2);
        assert_eq!(group("G(3,3,3)").center_order(), 3);
        for name in ["A3", "B3", "G(3,3,3)", "B2"] {
            group(name).verify_center(10_000).unwrap();
        }
    }

    #[test]
    fn regular_number_tables() {
        assert_eq!(group("A3").regular_numbers(), vec![1, 2, 3, 4]);
        assert_eq!(group("B2").regular_numbers(), vec![1, 2, 4]);
        assert_eq!(group("H3").regular_numbers(), vec![1, 2, 3, 5, 6, 10]);
    }

    #[test]
    fn absolute_lengths_in_small_groups() {
        let g = group("B2");
        assert_eq!(g.absolute_length(&g.identity(), 100).unwrap(), 0);
        for r in g.reflections().unwrap().to_vec() {
            assert_eq!(g.absolute_length(&r, 100).unwrap(), 1);
        }
        assert_eq!(g.absolute_length(g.coxeter_element(), 100).unwrap(), 2);
        let a3 = group("A3");
        assert_eq!(a3.absolute_length(a3.coxeter_element(), 100).unwrap(), 3);
    }

    #[test]
    fn restriction_to_quarter_turn_in_rank_two() {
        let g = group("B2");
        let r = g.restrict_centralizer(4, 100).unwrap();
        assert_eq!(r.group.rank(), 1);
        assert_eq!(r.group.degrees(), &[4]);
        assert_eq!(r.group.order(), 4);
        assert_eq!(r.to_parent.len(), 4);
    }

    #[test]
    fn restriction_of_symmetric_group_to_half_turn() {
        let g = group("A3");
        let r = g.restrict_centralizer(2, 100).unwrap();
        assert_eq!(r.group.rank(), 2);
        assert_eq!(r.group.degrees(), &[2, 4]);
        assert_eq!(r.group.order(), 8);
        // The centralizer acts faithfully: 8 distinct restricted matrices.
        assert_eq!(r.to_parent.len(), 8);
        assert_eq!(r.group.element_order(r.group.coxeter_element()), 4);
    }

    #[test]
    fn restriction_rejects_non_divisors() {
        let g = group("A3");
        assert!(g.restrict_centralizer(3, 100).is_err());
    }

    #[test]
    fn central_power_restriction_keeps_the_whole_group() {
        let g = group("B2");
        let r = g.restrict_centralizer(2, 100).unwrap();
        assert_eq!(r.group.rank(), 2);
        assert_eq!(r.group.order(), 8);
        assert_eq!(r.to_parent.len(), 8);
    }
}
