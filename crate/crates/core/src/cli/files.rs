//! Plain-text group, paired-representation and sample files.
//!
//! A group block is a `degree=N` line followed by `gen=<cycles>` lines, with
//! `#` starting a comment. A paired file holds two blocks separated by a
//! line `---`; the i-th generators of the two blocks correspond.

use std::fs;
use std::path::Path;

use crate::constructions::DualRep;
use crate::permcore::{Perm, PermGroup};

use super::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn key_value<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let (k, v) = line.split_once('=')?;
    (k.trim() == key).then(|| v.trim())
}

fn parse_block<'a>(lines: impl IntoIterator<Item = (usize, &'a str)>, what: &str) -> Result<(usize, Vec<Perm>), CliError> {
    let bad = |line: usize, msg: String| CliError::Parse(format!("{what}, line {line}: {msg}"));
    let mut lines = lines.into_iter();
    let (first, text) = lines.next().ok_or_else(|| CliError::Parse(format!("{what}: missing degree= line")))?;
    let degree: usize = key_value(text, "degree")
        .ok_or_else(|| bad(first, "expected degree=N".into()))?
        .parse()
        .map_err(|_| bad(first, "degree is not an integer".into()))?;
    if degree == 0 {
        return Err(bad(first, "degree must be positive".into()));
    }
    let gens = lines
        .map(|(n, text)| {
            let cycles = key_value(text, "gen").ok_or_else(|| bad(n, "expected gen=<cycles>".into()))?;
            Perm::parse_cycles(cycles, degree).map_err(|e| bad(n, e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((degree, gens))
}

/// Parses a single group block.
pub fn parse_group_text(text: &str) -> Result<PermGroup, CliError> {
    let (degree, gens) = parse_block(content_lines(text), "group file")?;
    Ok(PermGroup::new(degree, gens)?)
}

/// Parses two blocks separated by `---` into aligned generator lists.
pub fn parse_pair_text(text: &str) -> Result<DualRep, CliError> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let split = lines
        .iter()
        .position(|&(_, l)| l == "---")
        .ok_or_else(|| CliError::Parse("paired file: missing --- separator".into()))?;
    let (_, gens1) = parse_block(lines[..split].iter().copied(), "paired file, first block")?;
    let (_, gens2) = parse_block(lines[split + 1..].iter().copied(), "paired file, second block")?;
    Ok(DualRep::new(gens1, gens2)?)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn read_group_file(path: &Path) -> Result<PermGroup, CliError> {
    parse_group_text(&read(path)?)
}

pub fn read_pair_file(path: &Path) -> Result<DualRep, CliError> {
    parse_pair_text(&read(path)?)
}

/// Parses `x,count` samples. The header line is optional; blank lines and
/// `#` comments are skipped.
pub fn parse_samples(text: &str) -> Result<Vec<(u64, u64)>, CliError> {
    let mut out = Vec::new();
    for (n, line) in content_lines(text) {
        if out.is_empty() && line.replace(' ', "") == "x,count" {
            continue;
        }
        let bad = || CliError::Data(format!("samples line {n}: expected two integers \"x,count\", found {line:?}"));
        let (x, z) = line.split_once(',').ok_or_else(bad)?;
        out.push((x.trim().parse().map_err(|_| bad())?, z.trim().parse().map_err(|_| bad())?));
    }
    Ok(out)
}

pub fn read_samples(path: &Path) -> Result<Vec<(u64, u64)>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
    parse_samples(&text)
}
