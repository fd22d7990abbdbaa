//! Backtracking search for isometries between finite quadratic forms.
//!
//! Images of the source generators are chosen among target elements with
//! matching order and q-value, pruned by b-compatibility with the columns
//! already placed. For nondegenerate forms every b-preserving homomorphism
//! is injective, so no extra bijectivity check is needed at the leaves;
//! degenerate forms get an explicit check.

use num_rational::Rational64;

use crate::error::{FinqError, Result};
use crate::form::{rmod, CompactForm};

/// A homomorphism of finite abelian groups given by rows of images: row i
/// is the image of the i-th source generator in target coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMap {
    pub mat: Vec<Vec<i64>>,
}

impl FormMap {
    pub fn apply(&self, x: &[i64], dst: &CompactForm) -> Vec<i64> {
        let k2 = dst.rank();
        let mut y = vec![0i64; k2];
        for (i, row) in self.mat.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k2 {
                y[j] += x[i] * row[j];
            }
        }
        for (v, d) in y.iter_mut().zip(&dst.inv) {
            *v = v.rem_euclid(*d);
        }
        y
    }
}

pub const DEFAULT_CAP: u64 = 100_000_000;

/// All isometries src → dst (or just the first if `want_all` is false).
pub fn find_isometries(
    src: &CompactForm,
    dst: &CompactForm,
    want_all: bool,
    cap: u64,
) -> Result<Vec<FormMap>> {
    if src.order() != dst.order() {
        return Ok(Vec::new());
    }
    let k1 = src.rank();
    let elems = dst.elements();
    if elems.len() as u64 > cap {
        return Err(FinqError::CapExceeded);
    }
    let decorated: Vec<(i64, Rational64, Vec<i64>)> = elems
        .into_iter()
        .map(|e| (dst.element_order(&e), dst.q_of(&e), e))
        .collect();
    // Candidate images per source generator: exact order and q match.
    let cands: Vec<Vec<&Vec<i64>>> = (0..k1)
        .map(|j| {
            let want_q = rmod(src.q[j], 2);
            decorated
                .iter()
                .filter(|(o, qv, _)| *o == src.inv[j] && *qv == want_q)
                .map(|(_, _, e)| e)
                .collect()
        })
        .collect();
    let need_leaf_check = !dst.is_nondegenerate();
    let mut out = Vec::new();
    let mut chosen: Vec<&Vec<i64>> = Vec::with_capacity(k1);
    let mut nodes: u64 = 0;
    search(
        src, dst, &cands, &mut chosen, &mut out, want_all, need_leaf_check, cap, &mut nodes,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search<'a>(
    src: &CompactForm,
    dst: &CompactForm,
    cands: &'a [Vec<&'a Vec<i64>>],
    chosen: &mut Vec<&'a Vec<i64>>,
    out: &mut Vec<FormMap>,
    want_all: bool,
    need_leaf_check: bool,
    cap: u64,
    nodes: &mut u64,
) -> Result<bool> {
    let j = chosen.len();
    if j == src.rank() {
        let map = FormMap { mat: chosen.iter().map(|v| (*v).clone()).collect() };
        if !need_leaf_check || is_bijective(&map, src, dst) {
            out.push(map);
            return Ok(!want_all);
        }
        return Ok(false);
    }
    'cand: for x in &cands[j] {
        *nodes += 1;
        if *nodes > cap {
            return Err(FinqError::CapExceeded);
        }
        for (i, y) in chosen.iter().enumerate() {
            if dst.b_of(x, y) != rmod(src.b[j][i], 1) {
                continue 'cand;
            }
        }
        chosen.push(x);
        let stop = search(src, dst, cands, chosen, out, want_all, need_leaf_check, cap, nodes)?;
        chosen.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

fn is_bijective(map: &FormMap, src: &CompactForm, dst: &CompactForm) -> bool {
    let elems = src.elements();
    let mut seen = std::collections::HashSet::with_capacity(elems.len());
    elems.iter().all(|e| seen.insert(map.apply(e, dst)))
}

/// An explicit isometry between two forms, if one exists.
pub fn are_isometric(q1: &CompactForm, q2: &CompactForm) -> Result<Option<FormMap>> {
    are_isometric_capped(q1, q2, DEFAULT_CAP)
}

pub fn are_isometric_capped(
    q1: &CompactForm,
    q2: &CompactForm,
    cap: u64,
) -> Result<Option<FormMap>> {
    if q1.order() != q2.order() {
        return Ok(None);
    }
    Ok(find_isometries(q1, q2, false, cap)?.into_iter().next())
}
