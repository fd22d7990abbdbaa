//! Exact LLL reduction of a positive definite Gram matrix. Works directly
//! on the Gram matrix (no embedding needed); returns the transform.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use lattice_core::mat::{self, IMat, QMat};

/// Gram-Schmidt data of the current basis: squared norms B[i] of the
/// orthogonalized vectors and coefficients mu[i][j] (j < i).
fn gram_schmidt(g: &QMat) -> (Vec<BigRational>, QMat) {
    let n = g.len();
    let mut b = vec![BigRational::zero(); n];
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    // r[i][j] = <v_i, v*_j>
    let mut r = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = g[i][j].clone();
            for k in 0..j {
                s -= &mu[j][k] * &r[i][k];
            }
            r[i][j] = s;
            if j < i {
                mu[i][j] = &r[i][j] / &b[j];
            }
        }
        b[i] = r[i][i].clone();
    }
    (b, mu)
}

/// LLL with delta = 3/4 on a positive definite integer Gram matrix.
/// Returns (u, reduced) with reduced = u * gram * u^T.
pub fn lll(gram: &IMat) -> (IMat, IMat) {
    let n = gram.len();
    let mut g = gram.clone();
    let mut u = mat::identity(n);
    if n < 2 {
        return (u, g);
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut k = 1usize;
    loop {
        let gq = mat::to_rational(&g);
        let (b, mu) = gram_schmidt(&gq);
        // Size-reduce row k against rows k-1 .. 0.
        let mut changed = false;
        for j in (0..k).rev() {
            let m = &mu[k][j];
            if m.abs() > half {
                let q = round(m);
                row_op(&mut g, &mut u, k, j, &q);
                changed = true;
            }
        }
        if changed {
            continue;
        }
        // Lovász condition between k-1 and k.
        let lhs = &b[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if *lhs < rhs {
            swap_rows(&mut g, &mut u, k, k - 1);
            k = k.saturating_sub(1).max(1);
        } else {
            k += 1;
            if k == n {
                return (u, g);
            }
        }
    }
}

fn round(x: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let shifted = x + BigRational::new(BigInt::one(), two);
    shifted.floor().to_integer()
}

/// Row/column operation v_k -= q * v_j applied to a Gram matrix and the
/// transform that tracks it.
fn row_op(g: &mut IMat, u: &mut IMat, k: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let n = g.len();
    for t in 0..n {
        let x = q * &g[j][t];
        g[k][t] -= x;
    }
    for t in 0..n {
        let x = q * &g[t][j];
        g[t][k] -= x;
    }
    for t in 0..n {
        let x = q * &u[j][t];
        u[k][t] -= x;
    }
}

fn swap_rows(g: &mut IMat, u: &mut IMat, a: usize, b: usize) {
    g.swap(a, b);
    for row in g.iter_mut() {
        row.swap(a, b);
    }
    u.swap(a, b);
}
