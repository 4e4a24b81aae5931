//! Stored matrix models for the exceptional groups.
//!
//! Each entry is a JSON document with the group's name, rank, field
//! conductor, degrees, codegrees, and generating reflection matrices.  A
//! matrix entry is a vector of rational strings: the coordinates of the
//! field element in the power basis of `zeta_conductor`, so conductor-1
//! entries are plain rationals of the form `["3/2"]`.

use crate::cyclotomic::{euler_phi, CycloElem};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::Result;
use num_rational::BigRational;
use serde::Deserialize;
use std::path::Path;
use std::str::FromStr;

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    rank: usize,
    conductor: u32,
    degrees: Vec<u64>,
    codegrees: Vec<u64>,
    generators: Vec<Vec<Vec<Vec<String>>>>,
}

/// A parsed catalog entry.
pub(crate) struct CatalogGroup {
    pub name: String,
    pub rank: usize,
    pub conductor: u32,
    pub degrees: Vec<u64>,
    pub codegrees: Vec<u64>,
    pub generators: Vec<Matrix>,
}

const BUILTIN: &[(&str, &str)] = &[
    ("h3", include_str!("../../data/h3.json")),
    ("h4", include_str!("../../data/h4.json")),
    ("f4", include_str!("../../data/f4.json")),
    ("e6", include_str!("../../data/e6.json")),
    ("e7", include_str!("../../data/e7.json")),
    ("e8", include_str!("../../data/e8.json")),
];

/// Loads a catalog entry by name, from `dir` when given (expecting
/// `<name>.json` in lowercase) and from the built-in data otherwise.
pub(crate) fn load(name: &str, dir: Option<&Path>) -> Result<CatalogGroup> {
    let key = name.to_ascii_lowercase();
    let text: String = match dir {
        Some(dir) => {
            let path = dir.join(format!("{key}.json"));
            std::fs::read_to_string(&path).map_err(|e| {
                Error::Catalog(format!("cannot read {}: {e}", path.display()))
            })?
        }
        None => BUILTIN
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, text)| text.to_string())
            .ok_or_else(|| Error::Catalog(format!("no built-in catalog entry for {name}")))?,
    };
    parse_entry(&text)
}

fn parse_entry(text: &str) -> Result<CatalogGroup> {
    let raw: RawEntry = serde_json::from_str(text)
        .map_err(|e| Error::Catalog(format!("malformed catalog entry: {e}")))?;
    let phi = euler_phi(raw.conductor) as usize;
    let context = &raw.name;
    if raw.degrees.len() != raw.rank || raw.codegrees.len() != raw.rank {
        return Err(Error::Catalog(format!(
            "{context}: degrees and codegrees must each have length {}",
            raw.rank
        )));
    }
    if !raw.degrees.windows(2).all(|w| w[0] <= w[1])
        || !raw.codegrees.windows(2).all(|w| w[0] <= w[1])
    {
        return Err(Error::Catalog(format!(
            "{context}: degrees and codegrees must be sorted ascending"
        )));
    }
    if raw.degrees.iter().any(|&d| d < 2) {
        return Err(Error::Catalog(format!(
            "{context}: every degree of an irreducible group is at least 2"
        )));
    }
    let mut generators = Vec::new();
    for (gi, gen) in raw.generators.iter().enumerate() {
        if gen.len() != raw.rank || gen.iter().any(|row| row.len() != raw.rank) {
            return Err(Error::Catalog(format!(
                "{context}: generator {gi} is not a {0} x {0} matrix",
                raw.rank
            )));
        }
        let mut matrix = Vec::new();
        for row in gen {
            let mut out_row = Vec::new();
            for entry in row {
                if entry.len() != phi {
                    return Err(Error::Catalog(format!(
                        "{context}: entries must have {phi} coordinates for conductor {}",
                        raw.conductor
                    )));
                }
                let mut coeffs = Vec::new();
                for s in entry {
                    let value = BigRational::from_str(s).map_err(|e| {
                        Error::Catalog(format!("{context}: bad rational {s:?}: {e}"))
                    })?;
                    coeffs.push(value);
                }
                out_row.push(CycloElem::from_coeffs(raw.conductor, coeffs));
            }
            matrix.push(out_row);
        }
        generators.push(matrix);
    }
    if generators.len() != raw.rank {
        return Err(Error::Catalog(format!(
            "{context}: a well-generated group of rank {} needs {} generators",
            raw.rank, raw.rank
        )));
    }
    Ok(CatalogGroup {
        name: raw.name,
        rank: raw.rank,
        conductor: raw.conductor,
        degrees: raw.degrees,
        codegrees: raw.codegrees,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries_parse() {
        for name in ["H3", "H4", "F4", "E6", "E7", "E8"] {
            let entry = load(name, None).unwrap();
            assert_eq!(entry.name, name);
            assert_eq!(entry.generators.len(), entry.rank);
            assert_eq!(entry.degrees.len(), entry.rank);
        }
        assert!(load("Z9", None).is_err());
    }

    #[test]
    fn rejects_malformed_entries() {
        let bad = r#"{"name":"X","rank":1,"conductor":1,"degrees":[2],
                      "codegrees":[0],"generators":[[[["oops"]]]]}"#;
        assert!(parse_entry(bad).is_err());
        let short = r#"{"name":"X","rank":2,"conductor":1,"degrees":[2],
                       "codegrees":[0,2],"generators":[]}"#;
        assert!(parse_entry(short).is_err());
    }
}
