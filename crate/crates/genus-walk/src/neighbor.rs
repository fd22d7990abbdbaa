//! Kneser p-neighbors of an even definite lattice.
//!
//! A p-neighbor of L is built from a vector v with v.v = 0 mod 2p^2 and
//! v not in pL: it is {x in L : x.v = 0 mod p} + Z(v/p). Every such
//! lattice is even, shares the genus of L, and meets L in index p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use lattice_core::mat::{self, IMat};
use lattice_core::GramLattice;

use crate::error::{GenusError, Result};

/// All p-neighbors of an even definite lattice, one per isotropic line of
/// the mod p reduction. Exponential in rank over F_p; intended for small
/// cases and tests. The walk uses sampled lines instead.
pub fn neighbors(l: &GramLattice, p: u64) -> Result<Vec<GramLattice>> {
    let mut out = Vec::new();
    for v in isotropic_lines(l, p)? {
        out.push(neighbor_of(l, p, &v)?);
    }
    Ok(out)
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(GenusError::NotPrime(p));
    }
    Ok(())
}

/// Projective representatives of the isotropic lines of L/pL (first
/// nonzero coordinate 1, q(v) = 0 mod p).
pub fn isotropic_lines(l: &GramLattice, p: u64) -> Result<Vec<Vec<u64>>> {
    check_prime(p)?;
    check_det(l, p)?;
    let n = l.rank();
    let mut out = Vec::new();
    let mut v = vec![0u64; n];
    // First nonzero coordinate at position k, equal to 1.
    for k in (0..n).rev() {
        v[k] = 1;
        loop {
            if is_isotropic(l, p, &v) {
                out.push(v.clone());
            }
            // Odometer over positions k+1..n.
            let mut i = n;
            loop {
                if i == k + 1 {
                    break;
                }
                i -= 1;
                v[i] += 1;
                if v[i] < p {
                    break;
                }
                v[i] = 0;
            }
            if v[k + 1..].iter().all(|&c| c == 0) {
                break;
            }
        }
        v[k] = 0;
    }
    Ok(out)
}

/// Whether q(v) = v.v/2 vanishes mod p (well defined on L/pL for odd p,
/// and on lifts mod 2 via v.v mod 4 for p = 2).
fn is_isotropic(l: &GramLattice, p: u64, v: &[u64]) -> bool {
    let q = half_norm(l.gram(), v);
    (q % BigInt::from(p)).is_zero()
}

/// v G v^T / 2 for an integer vector (integral since L is even).
fn half_norm(gram: &IMat, v: &[u64]) -> BigInt {
    let n = gram.len();
    let mut s = BigInt::zero();
    for i in 0..n {
        if v[i] == 0 {
            continue;
        }
        for j in 0..n {
            if v[j] != 0 {
                s += &gram[i][j] * BigInt::from(v[i]) * BigInt::from(v[j]);
            }
        }
    }
    let (q, r) = s.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero(), "lattice is not even");
    q
}

fn check_det(l: &GramLattice, p: u64) -> Result<()> {
    if (l.det().abs() % BigInt::from(p)).is_zero() {
        return Err(GenusError::PrimeDividesDet(p));
    }
    Ok(())
}

/// The neighbor determined by an isotropic line; v is a mod p
/// representative with q(v) = 0 mod p. Requires p coprime to the
/// determinant, so every isotropic line is admissible.
pub fn neighbor_of(l: &GramLattice, p: u64, v: &[u64]) -> Result<GramLattice> {
    check_det(l, p)?;
    neighbor_try(l, p, v)?
        .ok_or_else(|| GenusError::Internal("admissible line rejected".into()))
}

/// Like neighbor_of but tolerates p dividing the determinant: lines in
/// the radical of the mod p reduction have no neighbor and yield None.
/// At such primes the construction can leave the genus, so callers must
/// filter the result by its genus descriptor.
pub fn neighbor_try(l: &GramLattice, p: u64, v: &[u64]) -> Result<Option<GramLattice>> {
    check_prime(p)?;
    let n = l.rank();
    let pb = BigInt::from(p);
    let gram = l.gram();
    let mut v: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
    if v.iter().all(|c| (c % &pb).is_zero()) {
        return Err(GenusError::Internal("isotropic vector is zero mod p".into()));
    }
    // Adjust the lift so that q(v) = 0 mod p^2: with w such that <v, w>
    // is a unit mod p, q(v + p t w) = q(v) + p t <v, w> mod p^2.
    let f = mat::mat_vec(gram, &v);
    let Some(w) = (0..n).find(|&k| !(&f[k] % &pb).is_zero()) else {
        return Ok(None);
    };
    let q0 = half_norm_big(gram, &v);
    let qr = q0.mod_floor(&pb);
    if !qr.is_zero() {
        return Err(GenusError::Internal("vector is not isotropic mod p".into()));
    }
    let t = (-(q0 / &pb) * modinv(&f[w], &pb)).mod_floor(&pb);
    v[w] += &pb * t;
    let q1 = half_norm_big(gram, &v);
    if !(q1 % (&pb * &pb)).is_zero() {
        return Err(GenusError::Internal("lift adjustment failed".into()));
    }
    // Generators of p * neighbor in the basis of L.
    let fv = mat::mat_vec(gram, &v);
    let j = (0..n)
        .find(|&k| !(&fv[k] % &pb).is_zero())
        .expect("adjusted vector lost its dual unit");
    let inv_fj = modinv(&fv[j], &pb);
    let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        if i == j {
            continue;
        }
        // p * (e_i - c_i e_j) with c_i = f_i / f_j mod p.
        let c = (&fv[i] * &inv_fj).mod_floor(&pb);
        let mut row = vec![BigInt::zero(); n];
        row[i] = pb.clone();
        row[j] = -&pb * c;
        gens.push(row);
    }
    let mut row = vec![BigInt::zero(); n];
    row[j] = &pb * &pb;
    gens.push(row);
    gens.push(v.clone());
    let basis = row_lattice_basis(&gens, n);
    // Gram of the neighbor: (B G B^T) / p^2.
    let bg = mat::mat_mul(&basis, gram);
    let bgbt = mat::mat_mul(&bg, &mat::transpose(&basis));
    let p2 = &pb * &pb;
    let mut ng: IMat = Vec::with_capacity(n);
    for brow in &bgbt {
        let mut out_row = Vec::with_capacity(n);
        for x in brow {
            let (d, r) = x.div_rem(&p2);
            if !r.is_zero() {
                return Err(GenusError::Internal("neighbor gram not integral".into()));
            }
            out_row.push(d);
        }
        ng.push(out_row);
    }
    let reduced = reduce_same_sign(&ng);
    GramLattice::new(reduced).map(Some).map_err(GenusError::from)
}

fn half_norm_big(gram: &IMat, v: &[BigInt]) -> BigInt {
    let gv = mat::mat_vec(gram, v);
    let s: BigInt = v.iter().zip(&gv).map(|(a, b)| a * b).sum();
    s / BigInt::from(2)
}

fn modinv(a: &BigInt, p: &BigInt) -> BigInt {
    // p is prime: inverse by Fermat.
    let a = a.mod_floor(p);
    a.modpow(&(p - BigInt::from(2)), p)
}

/// LLL-reduce a definite Gram matrix of either sign.
pub fn reduce_same_sign(g: &IMat) -> IMat {
    if g.is_empty() {
        return g.clone();
    }
    let neg = g[0][0].is_negative();
    let pos: IMat = if neg {
        g.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect()
    } else {
        g.clone()
    };
    let (_, red) = definite::lll(&pos);
    if neg {
        red.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect()
    } else {
        red
    }
}

/// Basis (as rows) of the lattice spanned by the rows of a full-rank
/// generator list, by integer row reduction.
fn row_lattice_basis(gens: &[Vec<BigInt>], n: usize) -> IMat {
    let mut rows: Vec<Vec<BigInt>> = gens.to_vec();
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for col in 0..n {
        loop {
            // Row with the smallest nonzero |entry| in this column.
            let mut piv: Option<usize> = None;
            for (r, row) in rows.iter().enumerate() {
                if row[col].is_zero() {
                    continue;
                }
                match piv {
                    None => piv = Some(r),
                    Some(q) if row[col].abs() < rows[q][col].abs() => piv = Some(r),
                    _ => {}
                }
            }
            let Some(piv) = piv else {
                panic!("generators do not span full rank");
            };
            let pivot_val = rows[piv][col].clone();
            let mut done = true;
            for r in 0..rows.len() {
                if r == piv || rows[r][col].is_zero() {
                    continue;
                }
                let q = div_round(&rows[r][col], &pivot_val);
                if !q.is_zero() {
                    for k in 0..n {
                        let t = &q * &rows[piv][k];
                        rows[r][k] -= t;
                    }
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                let row = rows.swap_remove(piv);
                basis.push(row);
                break;
            }
        }
    }
    basis
}

/// Round-to-nearest integer quotient.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = a.div_mod_floor(b);
    if &(&r * &two) >= &b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// A uniformly random isotropic line representative mod p, suitable for
/// neighbor_of; retries until one is found.
pub fn random_isotropic_line<R: Rng>(l: &GramLattice, p: u64, rng: &mut R) -> Vec<u64> {
    let n = l.rank();
    loop {
        let v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        if is_isotropic(l, p, &v) {
            return v;
        }
    }
}
