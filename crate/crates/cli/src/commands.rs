//! One builder per subcommand, each producing a [`CommandOutcome`].

use std::collections::HashSet;
use std::path::Path;
use std::time::Instant;

use ncsieve_core::{
    armstrong_action, build_group_with_catalog, build_root_system, catalan_poly,
    conjugation_action, csp_check, enumerate_antichains, enumerate_nc, enumerate_nc_m,
    enumerate_ncn, kreweras_action, kreweras_count, matrix, panyushev_action, parse_spec,
    partition_rotation_action, q_kreweras_poly, refined_csp, rotation_action, torus_fixed_count,
    torus_orbit_count, BlockType, Budgets, CatalanVariant, ClaimStatus, CspReport, Error, IntPoly,
    ItemOutcome, QCatalanSpec, ReflectionGroup, Result,
};
use serde_json::{json, Value};

use crate::report::{
    bigint_value, csp_value, group_block, object, poly_value, u128_value, CommandOutcome, Status,
};

/// Cyclic actions selectable for the `csp-nc` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Conjugation by the Coxeter element, order `h`.
    Conj,
    /// Kreweras complementation, order `2h`.
    Kreweras,
    /// Twist action on `(m+1)`-tuples, order `mh`.
    Armstrong,
    /// Rotation action on `(m+1)`-tuples, order `(m+1)h`.
    Rotation,
}

impl Action {
    /// Flag spelling of the action.
    pub fn as_str(self) -> &'static str {
        match self {
            Action::Conj => "conj",
            Action::Kreweras => "kreweras",
            Action::Armstrong => "armstrong",
            Action::Rotation => "rotation",
        }
    }
}

/// The claim status carried in sieving documents.
fn claim_str(status: ClaimStatus) -> &'static str {
    match status {
        ClaimStatus::Proved => "proved",
        ClaimStatus::Conjectured => "conjectured",
    }
}

/// Builds a group and refuses enumeration-sized work beyond the budget.
fn build_bounded(
    spec: &str,
    catalog: Option<&Path>,
    max_group_size: u64,
) -> Result<ReflectionGroup> {
    let group = build_group_with_catalog(&parse_spec(spec)?, catalog)?;
    if group.order() > u128::from(max_group_size) {
        return Err(Error::SizeLimit {
            needed: group.order(),
            bound: u128::from(max_group_size),
            what: format!("enumeration of {}", group.name()),
        });
    }
    Ok(group)
}

/// The one-parameter Catalan polynomial of a group.
fn catalan_m(group: &ReflectionGroup, m: u64) -> Result<IntPoly> {
    catalan_poly(&QCatalanSpec {
        degrees: group.degrees().to_vec(),
        h: group.h(),
        m,
        variant: CatalanVariant::Standard,
    })
}

/// `group-info`: invariant data plus Catalan coefficients.
pub fn group_info(spec: &str, catalog: Option<&Path>) -> Result<CommandOutcome> {
    let group = build_group_with_catalog(&parse_spec(spec)?, catalog)?;
    let cat = catalan_m(&group, 1)?;
    let at_one: num_bigint::BigInt = cat.coeffs().iter().sum();
    let result = json!({
        "catalan": {
            "coefficients": poly_value(&cat),
            "at_one": bigint_value(&at_one),
        },
    });
    Ok(CommandOutcome {
        group: Some(group_block(&group)?),
        result,
        status: Status::Pass,
        findings: Vec::new(),
    })
}

/// `csp-nc`: sieving on the noncrossing partition lattice or its
/// `m`-divisible tuples under the selected action.
pub fn csp_nc(
    spec: &str,
    m: u64,
    action: Action,
    catalog: Option<&Path>,
    max_group_size: u64,
) -> Result<CommandOutcome> {
    let group = build_bounded(spec, catalog, max_group_size)?;
    let poset = enumerate_nc(&group)?;
    let (instance, claim) = match action {
        Action::Conj | Action::Kreweras => {
            if m != 1 {
                return Err(Error::domain(format!(
                    "action {} acts on the lattice itself and requires m = 1",
                    action.as_str()
                )));
            }
            match action {
                Action::Conj => (conjugation_action(&poset)?, ClaimStatus::Proved),
                _ => (kreweras_action(&poset)?, ClaimStatus::Conjectured),
            }
        }
        Action::Armstrong => {
            let tuples = enumerate_nc_m(&poset, m)?;
            (armstrong_action(&poset, &tuples)?, ClaimStatus::Conjectured)
        }
        Action::Rotation => {
            let tuples = enumerate_nc_m(&poset, m)?;
            (rotation_action(&poset, &tuples)?, ClaimStatus::Conjectured)
        }
    };
    let polynomial = catalan_m(&group, m)?;
    let report = csp_check(&instance, &polynomial);
    let status = if report.pass { Status::Pass } else { Status::Fail };
    let mut findings = Vec::new();
    if !report.pass && claim == ClaimStatus::Conjectured {
        findings.push(format!(
            "FINDING: the {} action on {} at m = {m} fails its sieving identity",
            action.as_str(),
            group.name()
        ));
    }
    let result = json!({
        "action": action.as_str(),
        "m": m,
        "set_size": instance_size(&report),
        "claim_status": claim_str(claim),
        "csp": csp_value(&report),
    });
    Ok(CommandOutcome { group: Some(group_block(&group)?), result, status, findings })
}

/// The size of the acted-on set, read off the power-0 row.
fn instance_size(report: &CspReport) -> u64 {
    report.rows.first().map_or(0, |row| row.fixed)
}

/// `csp-classical`: rotation sieving on noncrossing set partitions, either
/// the full family or one block type.
pub fn csp_classical(n: usize, block_type: Option<&BlockType>) -> Result<CommandOutcome> {
    let report = match block_type {
        Some(t) => refined_csp(n, t)?,
        None => {
            let family = enumerate_ncn(n)?;
            let action = partition_rotation_action(&family)?;
            let polynomial = catalan_poly(&QCatalanSpec {
                degrees: (2..=n as u64).collect(),
                h: n as u64,
                m: 1,
                variant: CatalanVariant::Standard,
            })?;
            csp_check(&action, &polynomial)
        }
    };
    let status = if report.pass { Status::Pass } else { Status::Fail };
    let mut pairs = vec![
        ("n", json!(n)),
        ("claim_status", json!("proved")),
        ("csp", csp_value(&report)),
    ];
    if let Some(t) = block_type {
        pairs.push(("block_type", json!(block_type_echo(t))));
        pairs.push(("count", u128_value(kreweras_count(n, t)?)));
        pairs.push(("count_polynomial", poly_value(&q_kreweras_poly(n, t)?)));
    }
    Ok(CommandOutcome { group: None, result: object(pairs), status, findings: Vec::new() })
}

/// Canonical `size:multiplicity` echo of a block type.
pub fn block_type_echo(t: &BlockType) -> String {
    let mut parts = Vec::new();
    for size in 1..=t.total() {
        let mult = t.multiplicity(size);
        if mult > 0 {
            parts.push(format!("{size}:{mult}"));
        }
    }
    parts.join(",")
}

/// Parses `--block-type` syntax `1:a,2:b,...` into a block type.
pub fn parse_block_type(text: &str) -> Result<BlockType> {
    let mut pairs = Vec::new();
    for part in text.split(',') {
        let (size, mult) = part
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("block type entry `{part}` is not size:count")))?;
        let size: usize = size
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("block size `{size}` is not a number")))?;
        let mult: usize = mult
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("block count `{mult}` is not a number")))?;
        pairs.push((size, mult));
    }
    BlockType::from_pairs(&pairs)
}

/// `csp-panyushev`: reverse-step sieving on root-poset antichains.
pub fn csp_panyushev(name: &str) -> Result<CommandOutcome> {
    let rs = build_root_system(name)?;
    let antichains = enumerate_antichains(&rs)?;
    let instance = panyushev_action(&rs)?;
    let polynomial = catalan_poly(&QCatalanSpec {
        degrees: rs.degrees().to_vec(),
        h: rs.h(),
        m: 1,
        variant: CatalanVariant::Standard,
    })?;
    let report = csp_check(&instance, &polynomial);
    let order_divides = (2 * rs.h()) % report.faithfulness.minimal_period == 0;
    let pass = report.pass && order_divides;
    let mut findings = Vec::new();
    if !pass {
        findings.push(format!(
            "FINDING: the reverse-step action on {name} violates its conjectured sieving identity"
        ));
    }
    let result = json!({
        "antichain_count": antichains.len(),
        "generator_order": report.faithfulness.minimal_period,
        "order_divides_2h": order_divides,
        "claim_status": "conjectured",
        "csp": csp_value(&report),
    });
    let group = group_block(&build_group_with_catalog(&parse_spec(name)?, None)?)?;
    Ok(CommandOutcome {
        group: Some(group),
        result,
        status: if pass { Status::Pass } else { Status::Fail },
        findings,
    })
}

/// `torus`: fixed points of each Weyl element on the mod-`p` root lattice,
/// with the orbit count.
pub fn torus(name: &str, p: u64) -> Result<CommandOutcome> {
    let rs = build_root_system(name)?;
    let elements = rs.weyl_elements()?;
    let orbit_count = torus_orbit_count(&rs, p)?;
    let rows: Vec<Value> = elements
        .iter()
        .map(|w| {
            json!({
                "element": format!("{w:?}"),
                "fixed": u128_value(torus_fixed_count(&rs, w, p)),
            })
        })
        .collect();
    let result = json!({
        "p": p,
        "orbit_count": u128_value(orbit_count),
        "element_count": elements.len(),
        "fixed_counts": rows,
    });
    let group = group_block(&build_group_with_catalog(&parse_spec(name)?, None)?)?;
    Ok(CommandOutcome {
        group: Some(group),
        result,
        status: Status::Pass,
        findings: Vec::new(),
    })
}

/// `restriction`: both sides of the interval restriction at a divisor of
/// `h` and their elementwise equality.
pub fn restriction(
    spec: &str,
    d: u64,
    catalog: Option<&Path>,
    max_group_size: u64,
) -> Result<CommandOutcome> {
    let group = build_bounded(spec, catalog, max_group_size)?;
    let poset = enumerate_nc(&group)?;
    let restricted = group.restrict_centralizer(d, max_group_size)?;
    let own = enumerate_nc(&restricted.group)?;
    let through: HashSet<_> = poset
        .elements()
        .iter()
        .filter_map(|w| restricted.to_restricted.get(w))
        .cloned()
        .collect();
    let own_set: HashSet<_> = own.elements().iter().cloned().collect();
    let equal = through == own_set;
    let result = json!({
        "d": d,
        "interval_size": poset.elements().len(),
        "intersection_size": through.len(),
        "restricted_interval_size": own.elements().len(),
        "equal": equal,
        "restricted_group": {
            "degrees": restricted.group.degrees(),
            "order": u128_value(restricted.group.order()),
            "rank": restricted.group.rank(),
        },
    });
    Ok(CommandOutcome {
        group: Some(group_block(&group)?),
        result,
        status: if equal { Status::Pass } else { Status::Fail },
        findings: Vec::new(),
    })
}

/// `verify-all`: the full verification matrix, optionally filtered by rank,
/// with per-item outcomes assembled in key order.
pub fn verify_all(
    max_rank: Option<usize>,
    max_group_size: u64,
    time_budget_secs: Option<u64>,
) -> Result<CommandOutcome> {
    let budgets = Budgets { max_group_size };
    let start = Instant::now();
    let mut items = Vec::new();
    let mut passed = 0u64;
    let mut failed_proved = 0u64;
    let mut failed_conjectured = 0u64;
    let mut errored = 0u64;
    let mut findings = Vec::new();
    for item in matrix() {
        if let Some(bound) = max_rank {
            if item.rank() > bound {
                continue;
            }
        }
        let over_time = time_budget_secs
            .is_some_and(|secs| start.elapsed().as_secs() >= secs);
        let outcome = if over_time {
            ItemOutcome::Error("time budget exhausted before this item started".into())
        } else {
            item.run(&budgets)
        };
        let (label, detail) = match &outcome {
            ItemOutcome::Pass => {
                passed += 1;
                ("pass", None)
            }
            ItemOutcome::Fail(detail) => {
                match item.status() {
                    ClaimStatus::Proved => failed_proved += 1,
                    ClaimStatus::Conjectured => {
                        failed_conjectured += 1;
                        findings.push(format!("FINDING: {}: {detail}", item.key()));
                    }
                }
                ("fail", Some(detail.clone()))
            }
            ItemOutcome::Error(detail) => {
                errored += 1;
                ("error", Some(detail.clone()))
            }
        };
        let mut pairs = vec![
            ("key", json!(item.key())),
            ("criterion", json!(item.criterion())),
            ("title", json!(item.title())),
            ("claim_status", json!(claim_str(item.status()))),
            ("outcome", json!(label)),
        ];
        if let Some(detail) = detail {
            pairs.push(("detail", json!(detail)));
        }
        items.push(object(pairs));
    }
    let status = if errored > 0 {
        Status::Error
    } else if failed_proved > 0 {
        Status::Fail
    } else {
        Status::Pass
    };
    let total = items.len();
    let result = json!({
        "items": items,
        "totals": {
            "items": total,
            "pass": passed,
            "fail_proved": failed_proved,
            "fail_conjectured": failed_conjectured,
            "error": errored,
        },
    });
    Ok(CommandOutcome { group: None, result, status, findings })
}
