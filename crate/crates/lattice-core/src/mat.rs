//! Exact dense matrix helpers over BigInt / BigRational.
//!
//! All routines are fraction-free or rational; no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn int_mat<T: Into<i64> + Copy>(rows: &[&[T]]) -> IMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x.into())).collect())
        .collect()
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &IMat) -> IMat {
    if a.is_empty() {
        return Vec::new();
    }
    let (m, n) = (a.len(), a[0].len());
    (0..n).map(|j| (0..m).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let m = a.len();
    let k = if m > 0 { a[0].len() } else { 0 };
    let n = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![BigInt::zero(); n]; m];
    for i in 0..m {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &IMat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Fraction-free determinant (Bareiss). Empty matrix has determinant 1.
pub fn det(a: &IMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Smith normal form: returns (u, d, v) with u * a * v = d, u and v
/// unimodular, d diagonal with d[0] | d[1] | ... and nonnegative entries.
pub fn smith_normal_form(a: &IMat) -> (IMat, IMat, IMat) {
    let m = a.len();
    let n = if m > 0 { a[0].len() } else { 0 };
    let mut d = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // Find a pivot of minimal nonzero absolute value in the trailing block.
        let mut piv: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero()
                    && piv
                        .map(|(pi, pj)| d[i][j].abs() < d[pi][pj].abs())
                        .unwrap_or(true)
                {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        // Clear row and column t; restart if a remainder appears elsewhere.
        let mut again = false;
        for i in t + 1..m {
            if !d[i][t].is_zero() {
                let q = div_round(&d[i][t], &d[t][t]);
                row_sub(&mut d, i, t, &q);
                row_sub(&mut u, i, t, &q);
                if !d[i][t].is_zero() {
                    again = true;
                }
            }
        }
        for j in t + 1..n {
            if !d[t][j].is_zero() {
                let q = div_round(&d[t][j], &d[t][t]);
                col_sub(&mut d, j, t, &q);
                col_sub(&mut v, j, t, &q);
                if !d[t][j].is_zero() {
                    again = true;
                }
            }
        }
        if again {
            continue;
        }
        // Enforce divisibility of the remaining block by the pivot.
        let mut clean = true;
        'outer: for i in t + 1..m {
            for j in t + 1..n {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    // Fold row i into row t so the next pass shrinks the pivot.
                    for jj in 0..n {
                        let x = d[i][jj].clone();
                        d[t][jj] += x;
                    }
                    for jj in 0..m {
                        let x = u[i][jj].clone();
                        u[t][jj] += x;
                    }
                    clean = false;
                    break 'outer;
                }
            }
        }
        if !clean {
            continue;
        }
        if d[t][t].is_negative() {
            for j in 0..n {
                d[t][j] = -d[t][j].clone();
            }
            for j in 0..m {
                u[t][j] = -u[t][j].clone();
            }
        }
        t += 1;
    }
    (u, d, v)
}

fn swap_cols(m: &mut IMat, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn row_sub(m: &mut IMat, i: usize, t: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..m[i].len() {
        let x = q * &m[t][j];
        m[i][j] -= x;
    }
}

fn col_sub(m: &mut IMat, j: usize, t: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let x = q * &row[t];
        row[j] -= x;
    }
}

/// Rounded division minimizing |a - q*b|.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if &(&r * &two) > &b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Saturated integer kernel of a (rows act on column vectors: m * x = 0).
/// Returns a basis as rows; the span is a direct summand of Z^n.
pub fn integer_kernel(m: &IMat) -> IMat {
    let ncols = if m.is_empty() { 0 } else { m[0].len() };
    if m.is_empty() {
        return identity(ncols);
    }
    let (_, d, v) = smith_normal_form(m);
    let rank = (0..m.len().min(ncols)).filter(|&i| !d[i][i].is_zero()).count();
    // Kernel basis: columns rank..ncols of v.
    (rank..ncols)
        .map(|j| (0..ncols).map(|i| v[i][j].clone()).collect())
        .collect()
}

pub fn to_rational(a: &IMat) -> QMat {
    a.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

pub fn q_mat_mul(a: &QMat, b: &QMat) -> QMat {
    let m = a.len();
    let k = if m > 0 { a[0].len() } else { 0 };
    let n = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![BigRational::zero(); n]; m];
    for i in 0..m {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = &out[i][j] + &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Inverse over the rationals; None if singular.
pub fn q_inverse(a: &QMat) -> Option<QMat> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut inv: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let pivot = m[c][c].clone();
        for j in 0..n {
            m[c][j] = &m[c][j] / &pivot;
            inv[c][j] = &inv[c][j] / &pivot;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let x = &f * &m[c][j];
                    m[i][j] = &m[i][j] - x;
                    let y = &f * &inv[c][j];
                    inv[i][j] = &inv[i][j] - y;
                }
            }
        }
    }
    Some(inv)
}

/// Signature of a symmetric rational matrix by congruent diagonalization.
/// Returns (positives, negatives, zeros).
pub fn symmetric_signature(a: &QMat) -> (usize, usize, usize) {
    let n = a.len();
    let mut m = a.to_vec();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut done = vec![false; n];
    for _ in 0..n {
        // Pick an unprocessed index with nonzero diagonal, fixing one up
        // from an off-diagonal entry if necessary.
        let live: Vec<usize> = (0..n).filter(|&i| !done[i]).collect();
        let k = match live.iter().find(|&&i| !m[i][i].is_zero()) {
            Some(&i) => i,
            None => {
                // All live diagonals vanish; look for a live off-diagonal.
                let mut found = None;
                'search: for &i in &live {
                    for &j in &live {
                        if i < j && !m[i][j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        // Congruence: add row/col j to row/col i. New diagonal
                        // entry is 2*m[i][j] + m[j][j] = 2*m[i][j] != 0.
                        for t in 0..n {
                            let x = m[j][t].clone();
                            m[i][t] = &m[i][t] + x;
                        }
                        for t in 0..n {
                            let x = m[t][j].clone();
                            m[t][i] = &m[t][i] + x;
                        }
                        i
                    }
                    None => {
                        zero += live.len();
                        break;
                    }
                }
            }
        };
        let d = m[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        // Clear row/column k against the other live indices.
        for i in 0..n {
            if i != k && !done[i] && !m[i][k].is_zero() {
                let f = &m[i][k] / &d;
                for t in 0..n {
                    let x = &f * &m[k][t];
                    m[i][t] = &m[i][t] - x;
                }
                for t in 0..n {
                    let x = &f * &m[t][k];
                    m[t][i] = &m[t][i] - x;
                }
            }
        }
        done[k] = true;
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_form_of_hyperbolic_gram() {
        let a = int_mat(&[&[0i64, 1], &[1, 0]]);
        let (u, d, v) = smith_normal_form(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), d);
        assert_eq!(d[0][0], BigInt::one());
        assert_eq!(d[1][1], BigInt::one());
    }

    #[test]
    fn bareiss_det_matches_known() {
        let a = int_mat(&[&[2i64, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        assert_eq!(det(&a), BigInt::from(4));
    }

    #[test]
    fn kernel_of_projection() {
        let m = int_mat(&[&[1i64, 0, 2]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for row in &k {
            assert!((&row[0] + BigInt::from(2) * &row[2]).is_zero());
        }
    }
}
