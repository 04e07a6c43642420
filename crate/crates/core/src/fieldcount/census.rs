use std::collections::BTreeMap;
use std::io::BufRead;

use super::{DiscriminantTally, FieldCountError};

pub const CENSUS_HEADER: &str = "degree,group,abs_disc";

/// One line of an external field census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub degree: u32,
    pub group_label: String,
    pub abs_disc: u64,
}

impl CensusRecord {
    fn parse(line: &str, lineno: usize) -> Result<CensusRecord, FieldCountError> {
        let bad = |msg: String| FieldCountError::CensusLine { line: lineno, msg };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [degree, label, disc] = fields[..] else {
            return Err(bad(format!("expected 3 fields, found {}", fields.len())));
        };
        let degree: u32 = degree.parse().map_err(|_| bad(format!("degree {degree:?} is not an integer")))?;
        if label.is_empty() {
            return Err(bad("empty group label".into()));
        }
        let abs_disc: u64 = disc.parse().map_err(|_| bad(format!("abs_disc {disc:?} is not an integer")))?;
        if abs_disc < 1 {
            return Err(bad("abs_disc must be at least 1".into()));
        }
        Ok(CensusRecord { degree, group_label: label.to_string(), abs_disc })
    }
}

/// Reads a census stream into one tally per group label.
///
/// Blank lines are ignored. Line numbers in errors are 1-based and count the
/// header.
pub fn ingest_census<R: BufRead>(reader: R) -> Result<BTreeMap<String, DiscriminantTally>, FieldCountError> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .transpose()
        .map_err(|e| FieldCountError::Io(e.to_string()))?
        .unwrap_or_default();
    if header.trim() != CENSUS_HEADER {
        return Err(FieldCountError::CensusHeader { found: header });
    }
    let mut by_label: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for (i, line) in lines.enumerate() {
        let line = line.map_err(|e| FieldCountError::Io(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = CensusRecord::parse(&line, i + 2)?;
        by_label.entry(rec.group_label).or_default().push(rec.abs_disc);
    }
    Ok(by_label
        .into_iter()
        .map(|(label, discs)| {
            let tally = DiscriminantTally::from_discriminants(label.clone(), discs);
            (label, tally)
        })
        .collect())
}
