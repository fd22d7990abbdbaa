//! Plain-text lattice files: first non-comment line is the rank r,
//! followed by r lines of r whitespace-separated integers. Lines starting
//! with `#` are comments.

use std::path::Path;

use num_bigint::BigInt;

use crate::error::{LatticeError, Result};
use crate::lattice::GramLattice;

pub fn parse_lattice(text: &str) -> Result<GramLattice> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let rank_line = lines
        .next()
        .ok_or_else(|| LatticeError::Parse("empty lattice file".into()))?;
    let rank: usize = rank_line
        .parse()
        .map_err(|_| LatticeError::Parse(format!("bad rank line: {rank_line:?}")))?;
    let mut gram = Vec::with_capacity(rank);
    for i in 0..rank {
        let line = lines
            .next()
            .ok_or_else(|| LatticeError::Parse(format!("missing row {}", i + 1)))?;
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| LatticeError::Parse(format!("bad entry {t:?} in row {}", i + 1)))
            })
            .collect::<Result<_>>()?;
        if row.len() != rank {
            return Err(LatticeError::Parse(format!(
                "row {} has {} entries, expected {rank}",
                i + 1,
                row.len()
            )));
        }
        gram.push(row);
    }
    if lines.next().is_some() {
        return Err(LatticeError::Parse("trailing content after matrix".into()));
    }
    GramLattice::new(gram)
}

pub fn read_lattice(path: impl AsRef<Path>) -> Result<GramLattice> {
    parse_lattice(&std::fs::read_to_string(path)?)
}

pub fn format_lattice(l: &GramLattice) -> String {
    let mut out = String::new();
    if let Some(label) = &l.label {
        out.push_str(&format!("# {label}\n"));
    }
    out.push_str(&format!("{}\n", l.rank()));
    for row in l.gram() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_lattice(path: impl AsRef<Path>, l: &GramLattice) -> Result<()> {
    std::fs::write(path, format_lattice(l))?;
    Ok(())
}
