//! Exact Fincke-Pohst enumeration of short vectors of a positive definite
//! integer Gram matrix. Interval bounds use exact i128 rationals and
//! integer square roots; no floating point anywhere.

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use lattice_core::mat::IMat;

type Q = Ratio<i128>;

/// Short vectors (one of each ± pair) with 0 < v G v^T <= bound, sorted by
/// (norm, coordinates). Coordinates refer to the basis of the given Gram.
pub fn short_vectors(gram: &IMat, bound: i64) -> Vec<(i64, Vec<i64>)> {
    let n = gram.len();
    if n == 0 || bound <= 0 {
        return Vec::new();
    }
    let g: Vec<Vec<Q>> = gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| Q::from_integer(x.to_i128().expect("gram entry out of range")))
                .collect()
        })
        .collect();
    let (d, m) = cholesky(&g);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    descend(n, &d, &m, &mut x, n, Q::from_integer(bound as i128), gram, &mut out);
    out.sort();
    out
}

/// d[i] and m[i][j] (j > i) with norm(x) = Σ d_i (x_i + Σ_{j>i} m_ij x_j)².
fn cholesky(g: &[Vec<Q>]) -> (Vec<Q>, Vec<Vec<Q>>) {
    let n = g.len();
    let mut a = g.to_vec();
    let mut d = vec![Q::zero(); n];
    let mut m = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i];
        assert!(d[i].is_positive(), "gram matrix is not positive definite");
        for j in i + 1..n {
            m[i][j] = a[i][j] / d[i];
        }
        for j in i + 1..n {
            for k in j..n {
                let x = m[i][j] * a[i][k];
                a[j][k] -= x;
                if j != k {
                    a[k][j] = a[j][k];
                }
            }
        }
    }
    (d, m)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    level: usize,
    d: &[Q],
    m: &[Vec<Q>],
    x: &mut Vec<i64>,
    n: usize,
    budget: Q,
    gram: &IMat,
    out: &mut Vec<(i64, Vec<i64>)>,
) {
    if level == 0 {
        if x.iter().all(|&c| c == 0) {
            return;
        }
        // Both signs are visited; keep the canonical one (first nonzero
        // coordinate positive).
        let first = x.iter().find(|&&c| c != 0).copied().unwrap();
        if first < 0 {
            return;
        }
        let norm = norm_of(gram, x);
        out.push((norm, x.clone()));
        return;
    }
    let i = level - 1;
    let mut c = Q::zero();
    for j in i + 1..n {
        if x[j] != 0 {
            c += m[i][j] * Q::from_integer(x[j] as i128);
        }
    }
    // d_i (x_i + c)^2 <= budget.
    let r = budget / d[i];
    let (lo, hi) = integer_interval(c, r);
    for t in lo..=hi {
        x[i] = t.to_i64().expect("short-vector coordinate exceeds machine range");
        let dev = Q::from_integer(t) + c;
        let rest = budget - d[i] * dev * dev;
        if !rest.is_negative() {
            descend(i, d, m, x, n, rest, gram, out);
        }
        x[i] = 0;
    }
}

/// Integers t with (t + c)^2 <= r, as an inclusive interval (empty when
/// lo > hi).
fn integer_interval(c: Q, r: Q) -> (i128, i128) {
    if r.is_negative() {
        return (1, 0);
    }
    // |t q + p| <= sqrt(q^2 r) with c = p/q, q > 0.
    let p = *c.numer();
    let q = *c.denom();
    let bound = Integer::div_floor(&(q * q * r.numer()), r.denom());
    let s = bound.sqrt();
    let lo = Integer::div_floor(&(-s - p), &q);
    let hi = Integer::div_floor(&(s - p), &q);
    // lo from ceiling division: adjust.
    let lo = if (-s - p).mod_floor(&q) == 0 { lo } else { lo + 1 };
    (lo, hi)
}

pub fn norm_of(gram: &IMat, v: &[i64]) -> i64 {
    let n = gram.len();
    let mut s: i128 = 0;
    for i in 0..n {
        if v[i] == 0 {
            continue;
        }
        for j in 0..n {
            if v[j] != 0 {
                s += gram[i][j].to_i128().expect("gram entry out of range")
                    * (v[i] as i128)
                    * (v[j] as i128);
            }
        }
    }
    s.to_i64().expect("norm exceeds machine range")
}

/// Theta counts (number of ± pairs per norm) up to the bound: an isometry
/// invariant used as a dedup pre-filter.
pub fn theta_profile(gram: &IMat, bound: i64) -> Vec<(i64, usize)> {
    use std::collections::BTreeMap;
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (norm, _) in short_vectors(gram, bound) {
        *counts.entry(norm).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}
