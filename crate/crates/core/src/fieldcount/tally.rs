use std::collections::BTreeMap;
use std::io::{self, Write};

use super::FieldCountError;

/// Sorted `(|disc|, multiplicity)` pairs for one family of fields.
///
/// `Z(x)` is the sum of multiplicities over entries with `|disc| ≤ x`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiscriminantTally {
    label: String,
    entries: Vec<(u64, u64)>,
    cumulative: Vec<u64>,
}

impl DiscriminantTally {
    /// Builds a tally from unsorted `(|disc|, multiplicity)` pairs; repeated
    /// discriminants merge by adding multiplicities.
    pub fn from_counts(label: impl Into<String>, counts: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut merged: BTreeMap<u64, u64> = BTreeMap::new();
        for (d, m) in counts {
            if m > 0 {
                *merged.entry(d).or_default() += m;
            }
        }
        let entries: Vec<(u64, u64)> = merged.into_iter().collect();
        let cumulative = entries
            .iter()
            .scan(0u64, |acc, &(_, m)| {
                *acc += m;
                Some(*acc)
            })
            .collect();
        DiscriminantTally { label: label.into(), entries, cumulative }
    }

    /// One field per listed discriminant.
    pub fn from_discriminants(label: impl Into<String>, discs: impl IntoIterator<Item = u64>) -> Self {
        Self::from_counts(label, discs.into_iter().map(|d| (d, 1)))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Z(x)`.
    pub fn count_upto(&self, x: u64) -> u64 {
        let k = self.entries.partition_point(|&(d, _)| d <= x);
        if k == 0 { 0 } else { self.cumulative[k - 1] }
    }

    /// `Z(∞)`.
    pub fn total(&self) -> u64 {
        self.cumulative.last().copied().unwrap_or(0)
    }

    pub fn max_disc(&self) -> Option<u64> {
        self.entries.last().map(|&(d, _)| d)
    }
}

/// `(x, Z(x))` for each `x` of an ascending grid.
pub fn tally_samples(tally: &DiscriminantTally, grid: &[u64]) -> Result<Vec<(u64, u64)>, FieldCountError> {
    if grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(FieldCountError::UnsortedGrid);
    }
    Ok(grid.iter().map(|&x| (x, tally.count_upto(x))).collect())
}

/// Writes samples as `x,count` lines under a header.
pub fn write_samples<W: Write>(mut out: W, samples: &[(u64, u64)]) -> io::Result<()> {
    writeln!(out, "x,count")?;
    for (x, z) in samples {
        writeln!(out, "{x},{z}")?;
    }
    Ok(())
}
