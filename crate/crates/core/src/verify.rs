//! The verification matrix: every identity and sieving claim in scope,
//! packaged as keyed, individually runnable items.
//!
//! Each item carries a proved-or-conjectured status label so a driver can
//! treat a failing conjecture as a finding rather than a defect.  Items are
//! deterministic: the matrix is assembled in sorted key order and every
//! runner reports through the same outcome type.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::cyclotomic::{
    catalan_poly, eval_integer_at_root, CatalanVariant, EvalOutcome, IntPoly, QCatalanSpec,
};
use crate::error::Error;
use crate::groups::{build_group, parse_spec, GroupElement, ReflectionGroup};
use crate::noncrossing::{
    armstrong_action, conjugation_action, enumerate_nc, enumerate_nc_m, rotation_action,
};
use crate::partitions::{
    all_block_types, enumerate_ncn, partition_rotation_action, q_kreweras_poly, refined_csp,
    symmetric_type_count, BlockType,
};
use crate::roots::{build_root_system, panyushev_action, smith_normal_form, torus_fixed_count,
    torus_orbit_count, RootSystem};
use crate::sieving::csp_check;
use crate::Result;

/// Whether the claim behind an item is proved or conjectured; a failing
/// conjectured item is a finding, not a defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    /// The claim is a proved statement; failure indicates a defect.
    Proved,
    /// The claim is conjectural; failure is a (publishable) discovery.
    Conjectured,
}

/// Result of running one matrix item.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ItemOutcome {
    /// The claim held on every instance checked.
    Pass,
    /// The claim failed; the detail pinpoints the first mismatches.
    Fail(String),
    /// The item could not run (budget, domain, or internal error).
    Error(String),
}

/// Resource budgets for a matrix run.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Largest group order any item may enumerate.
    pub max_group_size: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { max_group_size: 1_000_000 }
    }
}

/// One verifiable claim instance, addressable by key.
#[derive(Clone, Debug)]
pub struct MatrixItem {
    key: String,
    criterion: u8,
    title: String,
    status: ClaimStatus,
    task: Task,
}

/// Report from running one item.
#[derive(Clone, Debug)]
pub struct ItemReport {
    /// The item key.
    pub key: String,
    /// Acceptance criterion the item belongs to.
    pub criterion: u8,
    /// Human-readable claim description.
    pub title: String,
    /// Proved or conjectured.
    pub status: ClaimStatus,
    /// What happened.
    pub outcome: ItemOutcome,
    /// Wall time in milliseconds.
    pub wall_ms: u64,
}

#[derive(Clone, Debug)]
enum Task {
    MainCsp { spec: String },
    RotationNcn { n: usize },
    CatalogIdentities,
    LatticeStructure { spec: String },
    CenterStructure { spec: String },
    RestrictionDegrees { spec: String },
    RestrictionInterval { spec: String },
    CatalanPolynomials,
    LargestExceptionalEvaluation,
    RefinedTypes { n: usize },
    SymmetricCounts { n: usize },
    TupleCsp { spec: String, m: u64 },
    ReverseStep { name: String },
    TorusCharacter { name: String },
    TorusCharacterCoprime { name: String },
    TorusOrbits { name: String },
    MutationSoundness { spec: String },
    DefinitionAgreement { spec: String },
}

impl MatrixItem {
    /// The item's stable key.
    pub fn key(&self) -> &str {
        &self.key
    }

    /// Acceptance criterion number (1..=15).
    pub fn criterion(&self) -> u8 {
        self.criterion
    }

    /// Human-readable claim description.
    pub fn title(&self) -> &str {
        &self.title
    }

    /// Proved or conjectured.
    pub fn status(&self) -> ClaimStatus {
        self.status
    }

    /// Rank of the object the item enumerates: the group rank for group
    /// items, `n - 1` for set-partition items on an `n`-element ground set,
    /// and zero for arithmetic-only items that enumerate nothing.
    pub fn rank(&self) -> usize {
        match &self.task {
            Task::MainCsp { spec }
            | Task::LatticeStructure { spec }
            | Task::CenterStructure { spec }
            | Task::RestrictionDegrees { spec }
            | Task::RestrictionInterval { spec }
            | Task::TupleCsp { spec, .. }
            | Task::MutationSoundness { spec }
            | Task::DefinitionAgreement { spec } => rank_of_spec(spec),
            Task::ReverseStep { name }
            | Task::TorusCharacter { name }
            | Task::TorusCharacterCoprime { name }
            | Task::TorusOrbits { name } => rank_of_spec(name),
            Task::RotationNcn { n } | Task::RefinedTypes { n } | Task::SymmetricCounts { n } => {
                n.saturating_sub(1)
            }
            Task::CatalogIdentities
            | Task::CatalanPolynomials
            | Task::LargestExceptionalEvaluation => 0,
        }
    }

    /// Runs the item under the given budgets.
    pub fn run(&self, budgets: &Budgets) -> ItemOutcome {
        let result = match &self.task {
            Task::MainCsp { spec } => run_main_csp(spec, budgets),
            Task::RotationNcn { n } => run_rotation_ncn(*n),
            Task::CatalogIdentities => run_catalog_identities(),
            Task::LatticeStructure { spec } => run_lattice_structure(spec, budgets),
            Task::CenterStructure { spec } => run_center_structure(spec, budgets),
            Task::RestrictionDegrees { spec } => run_restriction_degrees(spec, budgets),
            Task::RestrictionInterval { spec } => run_restriction_interval(spec, budgets),
            Task::CatalanPolynomials => run_catalan_polynomials(),
            Task::LargestExceptionalEvaluation => run_largest_exceptional_evaluation(),
            Task::RefinedTypes { n } => run_refined_types(*n),
            Task::SymmetricCounts { n } => run_symmetric_counts(*n),
            Task::TupleCsp { spec, m } => run_tuple_csp(spec, *m, budgets),
            Task::ReverseStep { name } => run_reverse_step(name),
            Task::TorusCharacter { name } => run_torus_character(name),
            Task::TorusCharacterCoprime { name } => run_torus_character_coprime(name),
            Task::TorusOrbits { name } => run_torus_orbits(name),
            Task::MutationSoundness { spec } => run_mutation_soundness(spec, budgets),
            Task::DefinitionAgreement { spec } => run_definition_agreement(spec, budgets),
        };
        match result {
            Ok(None) => ItemOutcome::Pass,
            Ok(Some(detail)) => ItemOutcome::Fail(detail),
            Err(e) => ItemOutcome::Error(e.to_string()),
        }
    }
}

/// Group rank of a family spec without building the group.
fn rank_of_spec(name: &str) -> usize {
    if let Some(rest) = name.strip_prefix("G(") {
        let parts: Vec<usize> = rest
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse().expect("family parameter"))
            .collect();
        return parts[2];
    }
    if name.starts_with("I2(") {
        return 2;
    }
    let n: usize = name[1..].parse().expect("rank");
    n
}

/// Group order of a family spec without building the group.
fn order_of_spec(name: &str) -> u128 {
    fn factorial(n: u32) -> u128 {
        (1..=u128::from(n)).product()
    }
    if let Some(rest) = name.strip_prefix("G(") {
        let parts: Vec<u32> = rest
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse().expect("family parameter"))
            .collect();
        let (d, e, n) = (parts[0], parts[1], parts[2]);
        return u128::from(d).pow(n) / u128::from(e) * factorial(n);
    }
    if let Some(rest) = name.strip_prefix("I2(") {
        let m: u32 = rest.trim_end_matches(')').parse().expect("dihedral parameter");
        return 2 * u128::from(m);
    }
    let n: u32 = name[1..].parse().expect("rank");
    match name.as_bytes()[0] {
        b'A' => factorial(n + 1),
        b'B' | b'C' => u128::from(2u32).pow(n) * factorial(n),
        b'D' => u128::from(2u32).pow(n - 1) * factorial(n),
        b'H' if n == 3 => 120,
        b'H' if n == 4 => 14_400,
        b'F' => 1_152,
        b'G' => 12,
        b'E' if n == 6 => 51_840,
        b'E' if n == 7 => 2_903_040,
        b'E' if n == 8 => 696_729_600,
        _ => panic!("unknown spec {name}"),
    }
}

/// The enumeration suite: every well-generated family member whose order
/// stays at desk scale (the `dⁿn! ≤ 10⁵` cap, with family parameters up
/// to 12 matching the dihedral sweep).
fn family_suite() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for n in 1..=6 {
        names.push(format!("A{n}"));
    }
    for n in 2..=5 {
        names.push(format!("B{n}"));
    }
    names.push("D4".into());
    names.push("D5".into());
    for m in 3..=12 {
        names.push(format!("I2({m})"));
    }
    for d in 3..=12u32 {
        for n in 2..=6u32 {
            if order_of_spec(&format!("G({d},1,{n})")) <= 100_000 {
                names.push(format!("G({d},1,{n})"));
            }
        }
    }
    for e in 3..=12u32 {
        for n in 3..=6u32 {
            if order_of_spec(&format!("G({e},{e},{n})")) <= 100_000 {
                names.push(format!("G({e},{e},{n})"));
            }
        }
    }
    names.push("H3".into());
    names.push("F4".into());
    names
}

/// The full catalog: the enumeration suite plus the exceptional entries
/// that participate only in arithmetic checks.
fn catalog_suite() -> Vec<String> {
    let mut names = family_suite();
    for name in ["H4", "E6", "E7", "E8"] {
        names.push(name.into());
    }
    names
}

/// Crystallographic types used for the root-poset and toral items.
fn weyl_suite() -> Vec<&'static str> {
    vec!["A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2"]
}

/// Assembles the full matrix, sorted by key.
pub fn matrix() -> Vec<MatrixItem> {
    let mut items = Vec::new();
    let mut push = |key: String, criterion: u8, title: String, status: ClaimStatus, task: Task| {
        items.push(MatrixItem { key, criterion, title, status, task });
    };

    for spec in family_suite() {
        push(
            format!("c01:{spec}"),
            1,
            format!("{spec}: interval sieving identity at every generator power"),
            ClaimStatus::Proved,
            Task::MainCsp { spec: spec.clone() },
        );
        push(
            format!("c04:{spec}"),
            4,
            format!("{spec}: interval count, palindromic ranks, lattice property"),
            ClaimStatus::Proved,
            Task::LatticeStructure { spec: spec.clone() },
        );
        push(
            format!("c05:{spec}"),
            5,
            format!("{spec}: center order and generator"),
            ClaimStatus::Proved,
            Task::CenterStructure { spec: spec.clone() },
        );
        push(
            format!("c06:{spec}"),
            6,
            format!("{spec}: restriction degrees and reflection generation"),
            ClaimStatus::Proved,
            Task::RestrictionDegrees { spec: spec.clone() },
        );
        push(
            format!("c07:{spec}"),
            7,
            format!("{spec}: restricted interval matches the interval of the restriction"),
            ClaimStatus::Proved,
            Task::RestrictionInterval { spec: spec.clone() },
        );
        push(
            format!("c14:{spec}"),
            14,
            format!("{spec}: perturbed polynomials are rejected"),
            ClaimStatus::Proved,
            Task::MutationSoundness { spec: spec.clone() },
        );
        if order_of_spec(&spec) <= 10_000 {
            push(
                format!("c15:{spec}"),
                15,
                format!("{spec}: length-based and fixed-space interval definitions agree"),
                ClaimStatus::Proved,
                Task::DefinitionAgreement { spec: spec.clone() },
            );
        }
    }
    for n in 1..=10usize {
        push(
            format!("c02:n={n:02}"),
            2,
            format!("rotation sieving on the noncrossing partitions of a {n}-set"),
            ClaimStatus::Proved,
            Task::RotationNcn { n },
        );
    }
    push(
        "c03:catalog".into(),
        3,
        "degree-codegree duality and regular numbers across the catalog".into(),
        ClaimStatus::Proved,
        Task::CatalogIdentities,
    );
    push(
        "c08:catalog".into(),
        8,
        "Catalan polynomials divide exactly with nonnegative coefficients".into(),
        ClaimStatus::Proved,
        Task::CatalanPolynomials,
    );
    push(
        "c09:E8".into(),
        9,
        "largest exceptional group: polynomial value at a primitive fourth root".into(),
        ClaimStatus::Proved,
        Task::LargestExceptionalEvaluation,
    );
    for n in 1..=8usize {
        push(
            format!("c10:types:n={n}"),
            10,
            format!("refined sieving for every block type of a {n}-set"),
            ClaimStatus::Proved,
            Task::RefinedTypes { n },
        );
        if n >= 2 {
            push(
                format!("c10:symmetric:n={n}"),
                10,
                format!("symmetric counts on a {n}-set match the quotient formula"),
                ClaimStatus::Proved,
                Task::SymmetricCounts { n },
            );
        }
    }
    let tuple_suite: Vec<(&str, u64)> = {
        let mut v = Vec::new();
        for name in ["A1", "A2", "A3", "A4", "B2", "B3"] {
            for m in 1..=3 {
                v.push((name, m));
            }
        }
        for m in 3..=8 {
            let name: &str = ["I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"][m - 3];
            for fuss in 1..=3u64 {
                v.push((name, fuss));
            }
        }
        for name in ["D4", "H3"] {
            for m in 1..=2 {
                v.push((name, m));
            }
        }
        v
    };
    for (name, m) in tuple_suite {
        push(
            format!("c11:{name}:m={m}"),
            11,
            format!("{name}: factorization-tuple sieving at parameter {m}"),
            ClaimStatus::Conjectured,
            Task::TupleCsp { spec: name.into(), m },
        );
    }
    for name in ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "G2"] {
        push(
            format!("c12:{name}"),
            12,
            format!("{name}: reverse-step sieving on root-poset antichains"),
            ClaimStatus::Conjectured,
            Task::ReverseStep { name: name.into() },
        );
    }
    for name in weyl_suite() {
        push(
            format!("c13a:{name}"),
            13,
            format!("{name}: toral fixed points match the character value for every modulus"),
            ClaimStatus::Proved,
            Task::TorusCharacter { name: name.into() },
        );
        push(
            format!("c13b:{name}"),
            13,
            format!("{name}: toral orbit count at h+1 is the Catalan number"),
            ClaimStatus::Proved,
            Task::TorusOrbits { name: name.into() },
        );
        push(
            format!("c13c:{name}"),
            13,
            format!("{name}: toral fixed points match the character value for coprime moduli"),
            ClaimStatus::Proved,
            Task::TorusCharacterCoprime { name: name.into() },
        );
    }
    items.sort_by(|a, b| a.key.cmp(&b.key));
    items
}

/// Runs every item, assembling reports in key order.
pub fn run_all(budgets: &Budgets) -> Vec<ItemReport> {
    matrix()
        .into_iter()
        .map(|item| {
            let start = std::time::Instant::now();
            let outcome = item.run(budgets);
            ItemReport {
                key: item.key,
                criterion: item.criterion,
                title: item.title,
                status: item.status,
                outcome,
                wall_ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect()
}

fn build_checked(spec: &str, budgets: &Budgets) -> Result<ReflectionGroup> {
    let group = build_group(&parse_spec(spec)?)?;
    if group.order() > u128::from(budgets.max_group_size) {
        return Err(Error::SizeLimit {
            needed: group.order(),
            bound: u128::from(budgets.max_group_size),
            what: format!("verification of {spec}"),
        });
    }
    Ok(group)
}

fn standard_catalan(group: &ReflectionGroup, m: u64) -> Result<IntPoly> {
    catalan_poly(&QCatalanSpec {
        degrees: group.degrees().to_vec(),
        h: group.h(),
        m,
        variant: CatalanVariant::Standard,
    })
}

fn run_main_csp(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let poset = enumerate_nc(&group)?;
    let action = conjugation_action(&poset)?;
    let report = csp_check(&action, &standard_catalan(&group, 1)?);
    if !report.pass {
        let bad: Vec<String> = report
            .rows
            .iter()
            .filter(|r| !r.matches)
            .map(|r| format!("power {} fixed {} vs {:?}", r.power, r.fixed, r.evaluation))
            .collect();
        return Ok(Some(format!("{spec}: {}", bad.join("; "))));
    }
    Ok(None)
}

fn run_rotation_ncn(n: usize) -> Result<Option<String>> {
    let family = enumerate_ncn(n)?;
    let action = partition_rotation_action(&family)?;
    let polynomial = catalan_poly(&QCatalanSpec {
        degrees: (2..=n as u64).collect(),
        h: n as u64,
        m: 1,
        variant: CatalanVariant::Standard,
    })?;
    let report = csp_check(&action, &polynomial);
    if !report.pass {
        return Ok(Some(format!("rotation sieving fails on a {n}-set")));
    }
    Ok(None)
}

fn run_catalog_identities() -> Result<Option<String>> {
    let mut failures = Vec::new();
    for name in catalog_suite() {
        let group = build_group(&parse_spec(&name)?)?;
        let n = group.rank();
        let h = group.h();
        let degrees = group.degrees();
        let codegrees = group.codegrees();
        for i in 0..n {
            if degrees[i] + codegrees[n - 1 - i] != h {
                failures.push(format!(
                    "{name}: degree {} and codegree {} do not pair to {h}",
                    degrees[i],
                    codegrees[n - 1 - i]
                ));
            }
        }
        if !group.regular_numbers().contains(&h) {
            failures.push(format!("{name}: the largest degree is not a regular number"));
        }
    }
    // Frozen spot values for the divisibility description of regular numbers.
    for (name, expected) in [
        ("A3", vec![1, 2, 3, 4]),
        ("B2", vec![1, 2, 4]),
        ("G2", vec![1, 2, 3, 6]),
        ("H3", vec![1, 2, 3, 5, 6, 10]),
        ("G(3,3,3)", vec![1, 2, 3, 6]),
    ] {
        let group = build_group(&parse_spec(name)?)?;
        let got = group.regular_numbers();
        if got != expected {
            failures.push(format!("{name}: regular numbers {got:?}, expected {expected:?}"));
        }
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

fn run_lattice_structure(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let poset = enumerate_nc(&group)?;
    let mut failures = Vec::new();
    let count = BigInt::from(poset.len());
    let at_one = standard_catalan(&group, 1)?.eval_one();
    if count != at_one {
        failures.push(format!("{spec}: {} elements vs polynomial value {at_one}", poset.len()));
    }
    let ranks = poset.rank_sizes();
    let mut reversed = ranks.to_vec();
    reversed.reverse();
    if ranks != reversed {
        failures.push(format!("{spec}: rank vector {ranks:?} is not palindromic"));
    }
    if !poset.lattice_check() {
        failures.push(format!("{spec}: the interval is not a lattice"));
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

fn run_center_structure(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let gcd = group.degrees().iter().fold(0u64, |a, &b| a.gcd(&b));
    if group.center_order() != gcd {
        return Ok(Some(format!(
            "{spec}: center order {} vs degree gcd {gcd}",
            group.center_order()
        )));
    }
    group.verify_center(budgets.max_group_size)?;
    Ok(None)
}

fn run_restriction_degrees(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let h = group.h();
    let mut failures = Vec::new();
    for d in 1..=h {
        if h % d != 0 {
            continue;
        }
        // The constructor itself checks |W'| against the product of the
        // degrees divisible by d; generation by reflections is checked here.
        let restricted = group.restrict_centralizer(d, budgets.max_group_size)?;
        let sub = &restricted.group;
        let reflections = sub.reflections()?.to_vec();
        let mut known: HashSet<GroupElement> = HashSet::new();
        let mut frontier = vec![sub.identity()];
        known.insert(sub.identity());
        while let Some(w) = frontier.pop() {
            for r in &reflections {
                let wr = sub.multiply(&w, r);
                if known.insert(wr.clone()) {
                    frontier.push(wr);
                }
            }
        }
        if known.len() as u128 != sub.order() {
            failures.push(format!(
                "{spec} at d={d}: reflections generate {} of {} elements",
                known.len(),
                sub.order()
            ));
        }
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

fn run_restriction_interval(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let poset = enumerate_nc(&group)?;
    let h = group.h();
    let mut failures = Vec::new();
    for d in 1..=h {
        if h % d != 0 {
            continue;
        }
        let restricted = group.restrict_centralizer(d, budgets.max_group_size)?;
        let through_parent: HashSet<GroupElement> = poset
            .elements()
            .iter()
            .filter_map(|w| restricted.to_restricted.get(w).cloned())
            .collect();
        let own: HashSet<GroupElement> =
            enumerate_nc(&restricted.group)?.elements().iter().cloned().collect();
        if through_parent != own {
            failures.push(format!(
                "{spec} at d={d}: {} restricted interval elements vs {} in the restriction",
                through_parent.len(),
                own.len()
            ));
        }
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

fn run_catalan_polynomials() -> Result<Option<String>> {
    let mut failures = Vec::new();
    for name in catalog_suite() {
        let group = build_group(&parse_spec(&name)?)?;
        for m in 1..=3 {
            match standard_catalan(&group, m) {
                Ok(poly) => {
                    if !poly.is_nonnegative() {
                        failures.push(format!("{name}: negative coefficient at parameter {m}"));
                    }
                }
                Err(e) => failures.push(format!("{name} at parameter {m}: {e}")),
            }
        }
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

fn run_largest_exceptional_evaluation() -> Result<Option<String>> {
    let group = build_group(&parse_spec("E8")?)?;
    let poly = standard_catalan(&group, 1)?;
    match eval_integer_at_root(&poly, 4) {
        EvalOutcome::Integer(v) if v == BigInt::from(88) => Ok(None),
        other => Ok(Some(format!("value at a primitive fourth root: {other:?}, expected 88"))),
    }
}

fn run_refined_types(n: usize) -> Result<Option<String>> {
    let mut failures = Vec::new();
    for t in all_block_types(n) {
        let report = refined_csp(n, &t)?;
        if !report.pass {
            failures.push(format!("{t:?}"));
        }
    }
    Ok(if failures.is_empty() {
        None
    } else {
        Some(format!("failing block types on a {n}-set: {}", failures.join(", ")))
    })
}

/// The quotient formula for d-fold symmetric partitions of a given type:
/// defined exactly when at most one multiplicity is not divisible by `d`,
/// that one being 1 modulo `d` with its block size divisible by `d`.
fn symmetric_quotient_formula(n: usize, d: usize, t: &BlockType) -> Option<u128> {
    let mut odd_one_out = None;
    for size in 1..=n {
        let m = t.multiplicity(size);
        if m % d == 0 {
            continue;
        }
        if m % d != 1 || size % d != 0 || odd_one_out.is_some() {
            return None;
        }
        odd_one_out = Some(size);
    }
    let n_prime = n / d;
    let k_prime = t.block_count() / d;
    let mut value: u128 = 1;
    for j in (n_prime - k_prime + 1)..=n_prime {
        value *= j as u128;
    }
    for size in 1..=n {
        for f in 1..=(t.multiplicity(size) / d) as u128 {
            value /= f;
        }
    }
    Some(value)
}

fn run_symmetric_counts(n: usize) -> Result<Option<String>> {
    let mut failures = Vec::new();
    for d in 2..=n {
        if n % d != 0 {
            continue;
        }
        for t in all_block_types(n) {
            let brute = symmetric_type_count(n, d, &t)?;
            let expected = symmetric_quotient_formula(n, d, &t).unwrap_or(0);
            if brute != expected {
                failures.push(format!(
                    "{t:?} at d={d}: brute count {brute} vs formula {expected}"
                ));
            }
            let eval = eval_integer_at_root(&q_kreweras_poly(n, &t)?, d as u32);
            match eval {
                EvalOutcome::Integer(v) if v == BigInt::from(brute) => {}
                other => failures.push(format!(
                    "{t:?} at d={d}: brute count {brute} vs evaluation {other:?}"
                )),
            }
        }
    }
    Ok(if failures.is_empty() {
        None
    } else {
        Some(format!("on a {n}-set: {}", failures.join("; ")))
    })
}

fn run_tuple_csp(spec: &str, m: u64, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let poset = enumerate_nc(&group)?;
    let tuples = enumerate_nc_m(&poset, m)?;
    let polynomial = standard_catalan(&group, m)?;
    let mut failures = Vec::new();
    let twist = armstrong_action(&poset, &tuples)?;
    if !csp_check(&twist, &polynomial).pass {
        failures.push(format!("{spec}: twist action fails at parameter {m}"));
    }
    let rotation = rotation_action(&poset, &tuples)?;
    if !csp_check(&rotation, &polynomial).pass {
        failures.push(format!("{spec}: rotation action fails at parameter {m}"));
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

fn run_reverse_step(name: &str) -> Result<Option<String>> {
    let rs = build_root_system(name)?;
    let action = panyushev_action(&rs)?;
    let polynomial = catalan_poly(&QCatalanSpec {
        degrees: rs.degrees().to_vec(),
        h: rs.h(),
        m: 1,
        variant: CatalanVariant::Standard,
    })?;
    let mut failures = Vec::new();
    if action.declared_order() % action.minimal_period() != 0 {
        failures.push(format!(
            "{name}: generator period {} does not divide twice the Coxeter number",
            action.minimal_period()
        ));
    }
    if !csp_check(&action, &polynomial).pass {
        failures.push(format!("{name}: reverse-step sieving fails"));
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}

/// Integer Catalan number from root-system degrees.
fn catalan_from_degrees(rs: &RootSystem) -> u128 {
    let h = u128::from(rs.h());
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for &d in rs.degrees() {
        num *= h + u128::from(d);
        den *= u128::from(d);
    }
    num / den
}

fn run_torus_character(name: &str) -> Result<Option<String>> {
    let rs = build_root_system(name)?;
    let mut first_cases = Vec::new();
    let mut violations = 0u64;
    let mut checked = 0u64;
    for w in rs.weyl_elements()? {
        let divisors = smith_normal_form(&w_minus_identity(&w));
        let fixed_dim = divisors.iter().filter(|&&s| s == 0).count() as u32;
        for p in 1..=12u64 {
            checked += 1;
            let count = torus_fixed_count(&rs, &w, p);
            let expected = u128::from(p).pow(fixed_dim);
            if count != expected {
                violations += 1;
                if first_cases.len() < 4 {
                    first_cases.push(format!(
                        "element with divisors {divisors:?} at p = {p}: {count} points vs {expected}"
                    ));
                }
            }
        }
    }
    if violations > 0 {
        return Ok(Some(format!(
            "{name}: {violations} of {checked} (element, modulus) pairs violate the identity; \
             first cases: {}",
            first_cases.join("; ")
        )));
    }
    Ok(None)
}

fn run_torus_character_coprime(name: &str) -> Result<Option<String>> {
    let rs = build_root_system(name)?;
    let group_order: u64 = {
        let mut o: u64 = 1;
        for &d in rs.degrees() {
            o *= d;
        }
        o
    };
    let mut failures = Vec::new();
    for w in rs.weyl_elements()? {
        let divisors = smith_normal_form(&w_minus_identity(&w));
        let fixed_dim = divisors.iter().filter(|&&s| s == 0).count() as u32;
        for p in (1..=12u64).filter(|p| p.gcd(&group_order) == 1) {
            let count = torus_fixed_count(&rs, &w, p);
            let expected = u128::from(p).pow(fixed_dim);
            if count != expected {
                failures.push(format!("divisors {divisors:?} at p = {p}: {count} vs {expected}"));
            }
        }
    }
    Ok(if failures.is_empty() {
        None
    } else {
        Some(format!("{name}: {}", failures.join("; ")))
    })
}

fn run_torus_orbits(name: &str) -> Result<Option<String>> {
    let rs = build_root_system(name)?;
    let orbits = torus_orbit_count(&rs, rs.h() + 1)?;
    let expected = catalan_from_degrees(&rs);
    if orbits != expected {
        return Ok(Some(format!("{name}: {orbits} orbits vs Catalan number {expected}")));
    }
    Ok(None)
}

fn w_minus_identity(w: &crate::roots::IntMatrix) -> crate::roots::IntMatrix {
    w.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &e)| if i == j { e - 1 } else { e })
                .collect()
        })
        .collect()
}

fn run_mutation_soundness(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let poset = enumerate_nc(&group)?;
    let action = conjugation_action(&poset)?;
    let polynomial = standard_catalan(&group, 1)?;
    // Deterministic xorshift stream seeded from the group name.
    let mut state: u64 = spec.bytes().fold(0x9E37_79B9_7F4A_7C15, |a, b| {
        (a ^ u64::from(b)).wrapping_mul(0x100_0000_01B3)
    });
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..20 {
        let mut coeffs = polynomial.coeffs().to_vec();
        let index = (next() % coeffs.len() as u64) as usize;
        let delta = [1, 2, -1, -2][(next() % 4) as usize];
        coeffs[index] += BigInt::from(delta);
        let perturbed = IntPoly::new(coeffs);
        if csp_check(&action, &perturbed).pass {
            return Ok(Some(format!(
                "{spec}: perturbing coefficient {index} by {delta} still passes"
            )));
        }
    }
    Ok(None)
}

fn run_definition_agreement(spec: &str, budgets: &Budgets) -> Result<Option<String>> {
    let group = build_checked(spec, budgets)?;
    let elements = group.enumerate(budgets.max_group_size)?.to_vec();
    let reflections = group.reflections()?.to_vec();
    // Reflection length of every element at once, by breadth-first search.
    let mut length: HashMap<GroupElement, usize> = HashMap::new();
    let mut frontier = vec![group.identity()];
    length.insert(group.identity(), 0);
    let mut level = 0usize;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for r in &reflections {
                let wr = group.multiply(w, r);
                if !length.contains_key(&wr) {
                    length.insert(wr.clone(), level);
                    next.push(wr);
                }
            }
        }
        frontier = next;
    }
    if length.len() != elements.len() {
        return Ok(Some(format!(
            "{spec}: reflections reach {} of {} elements",
            length.len(),
            elements.len()
        )));
    }
    let mut failures = Vec::new();
    for w in &elements {
        if length[w] < group.codim(w) {
            failures.push(format!(
                "{spec}: length {} below codimension {}",
                length[w],
                group.codim(w)
            ));
        }
    }
    let c = group.coxeter_element().clone();
    let n = group.rank();
    let by_length: HashSet<GroupElement> = elements
        .iter()
        .filter(|w| length[*w] + length[&group.multiply(&group.inverse(w), &c)] == n)
        .cloned()
        .collect();
    let poset = enumerate_nc(&group)?;
    let by_fixed_space: HashSet<GroupElement> = poset.elements().iter().cloned().collect();
    if by_length != by_fixed_space {
        failures.push(format!(
            "{spec}: {} elements by length vs {} by fixed spaces",
            by_length.len(),
            by_fixed_space.len()
        ));
    }
    for w in &by_fixed_space {
        if length[w] != group.codim(w) {
            failures.push(format!("{spec}: interval element with length above codimension"));
        }
    }
    Ok(if failures.is_empty() { None } else { Some(failures.join("; ")) })
}
