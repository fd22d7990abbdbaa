//! Text files of generator matrices: one square matrix per block, blocks
//! separated by blank lines, `#` comments allowed, entries reduced mod the
//! invariant factors by the caller.

use crate::error::{FinqError, Result};
use crate::isometry::FiniteIsometry;

pub fn parse_generator_blocks(text: &str) -> Result<Vec<Vec<Vec<i64>>>> {
    let mut blocks = Vec::new();
    let mut cur: Vec<Vec<i64>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            if !cur.is_empty() {
                blocks.push(std::mem::take(&mut cur));
            }
            continue;
        }
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| FinqError::Parse(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        cur.push(row);
    }
    if !cur.is_empty() {
        blocks.push(cur);
    }
    for b in &blocks {
        let k = b.len();
        if b.iter().any(|r| r.len() != k) {
            return Err(FinqError::Parse("generator matrix is not square".into()));
        }
    }
    Ok(blocks)
}

pub fn parse_generators(text: &str, moduli: &[i64]) -> Result<Vec<FiniteIsometry>> {
    parse_generator_blocks(text)?
        .into_iter()
        .map(|m| {
            if m.len() != moduli.len() {
                return Err(FinqError::Parse(format!(
                    "generator rank {} does not match form rank {}",
                    m.len(),
                    moduli.len()
                )));
            }
            Ok(FiniteIsometry::new(moduli.to_vec(), m))
        })
        .collect()
}
