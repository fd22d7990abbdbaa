//! The Smith-Minkowski-Siegel mass of a positive definite even lattice,
//! computed exactly in the Conway-Sloane normalization: the sum of
//! 1/|Aut| over the classes in the genus.
//!
//! Values are tracked as frac * sqrt(rad) with rad a positive rational;
//! the radicand must collapse to a perfect square at the end, which is
//! asserted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use lattice_core::mat::{self, IMat};

use crate::GenusError;

type Q = BigRational;

fn q_int(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

// ---------- Bernoulli numbers and L-values ----------

/// B_n with the B_1 = -1/2 convention (required for L(1-s, chi)).
pub fn bernoulli(n: usize) -> Q {
    let mut a: Vec<Q> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(q_ratio(1, m as i64 + 1));
        for j in (1..=m).rev() {
            let diff = a[j - 1].clone() - a[j].clone();
            a[j - 1] = q_int(j as i64) * diff;
        }
    }
    if n == 1 {
        -a[0].clone()
    } else {
        a[0].clone()
    }
}

/// B_n(x), the Bernoulli polynomial.
fn bernoulli_poly(n: usize, x: &Q) -> Q {
    let mut total = Q::zero();
    let mut binom = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            binom = &binom * BigInt::from((n - k + 1) as i64) / BigInt::from(k as i64);
        }
        let mut term = Q::from_integer(binom.clone()) * bernoulli(k);
        for _ in 0..(n - k) {
            term *= x;
        }
        total += term;
    }
    total
}

/// |zeta(1 - 2k)| = |B_2k / 2k|.
fn zeta_neg(k: usize) -> Q {
    (bernoulli(2 * k) / q_int(2 * k as i64)).abs()
}

fn squarefree_part(d: &BigInt) -> BigInt {
    let mut x = d.abs();
    let mut out = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= x {
        let f2 = &f * &f;
        while (&x % &f2).is_zero() {
            x /= &f2;
        }
        f += 1;
    }
    out *= x;
    if d.is_negative() {
        -out
    } else {
        out
    }
}

fn fundamental_discriminant(d: &BigInt) -> BigInt {
    let d0 = squarefree_part(d);
    if d0.mod_floor(&BigInt::from(4)) == BigInt::one() {
        d0
    } else {
        BigInt::from(4) * d0
    }
}

fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - BigInt::one()) / BigInt::from(2);
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (d / p) for a prime p (including p = 2).
fn kronecker_prime(d: &BigInt, p: &BigInt) -> i32 {
    if *p == BigInt::from(2) {
        if d.is_even() {
            return 0;
        }
        let m = d.mod_floor(&BigInt::from(8)).to_i64().unwrap();
        if m == 1 || m == 7 {
            1
        } else {
            -1
        }
    } else {
        legendre(d, p)
    }
}

/// Full Kronecker symbol (d / n) for n >= 1.
fn kronecker_sym(d: &BigInt, n: u64) -> i32 {
    if n == 0 {
        return 0;
    }
    let mut n = n;
    let mut res = 1;
    let two = BigInt::from(2);
    while n % 2 == 0 {
        n /= 2;
        res *= kronecker_prime(d, &two);
    }
    let mut m = n;
    let mut f = 3u64;
    while f * f <= m {
        while m % f == 0 {
            res *= kronecker_prime(d, &BigInt::from(f));
            m /= f;
        }
        f += 2;
    }
    if m > 1 {
        res *= kronecker_prime(d, &BigInt::from(m));
    }
    res
}

/// |L(1 - s, chi_d)| = |B_{s,chi} / s|; d must be a fundamental
/// discriminant (d = 1 gives |zeta(1 - s)|).
fn l_one_minus_s(s: usize, d: &BigInt) -> Q {
    if d.is_one() {
        return (bernoulli(s) / q_int(s as i64)).abs();
    }
    let dd = d.abs().to_u64().expect("conductor out of range");
    let mut tot = Q::zero();
    for a in 1..=dd {
        let ch = kronecker_sym(d, a);
        if ch != 0 {
            let x = Q::new(BigInt::from(a), BigInt::from(dd));
            tot += q_int(ch as i64) * bernoulli_poly(s, &x);
        }
    }
    let b = Q::from_integer(BigInt::from(dd).pow(s as u32 - 1)) * tot;
    (b / q_int(s as i64)).abs()
}

// ---------- p-adic Jordan decomposition ----------

#[derive(Debug, Clone)]
struct Constituent {
    dim: usize,
    /// Product of the unit parts of the block determinants.
    det: Q,
    /// Whether any 1x1 (odd) block occurs at this scale (p = 2 only).
    odd: bool,
    /// Trace of the odd diagonal mod 8 plus 4 per V-type even block.
    oddity: u32,
}

fn p_valuation(x: &Q, p: &BigInt) -> i64 {
    fn val(mut n: BigInt, p: &BigInt) -> i64 {
        let mut v = 0;
        while !n.is_zero() && (&n % p).is_zero() {
            n /= p;
            v += 1;
        }
        v
    }
    if x.is_zero() {
        return i64::MAX / 2;
    }
    val(x.numer().clone(), p) - val(x.denom().clone(), p)
}

/// The odd 2-adic unit x mod 8.
fn unit_mod8(x: &Q) -> u32 {
    let eight = BigInt::from(8);
    let num = x.numer().mod_floor(&eight).to_u32().unwrap();
    let den = x.denom().mod_floor(&eight).to_u32().unwrap();
    // Odd residues are self-inverse-ish mod 8: d * d = 1 mod 8.
    (num * den % 8) as u32
}

/// Per-scale Jordan constituents of the p-adic completion.
fn jordan_constituents(gram: &IMat, p: &BigInt) -> BTreeMap<i64, Constituent> {
    let n = gram.len();
    let mut a: Vec<Vec<Q>> = gram
        .iter()
        .map(|row| row.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect();
    let mut idx: Vec<usize> = (0..n).collect();
    let two = BigInt::from(2);
    let is_two = *p == two;
    // (scale, is_2x2_block, unit determinant)
    let mut blocks: Vec<(i64, bool, Q)> = Vec::new();
    while !idx.is_empty() {
        // Entry of minimal valuation in the remaining submatrix.
        let mut best = i64::MAX / 2;
        let (mut bi, mut bj) = (idx[0], idx[0]);
        for &i in &idx {
            if p_valuation(&a[i][i], p) < best {
                best = p_valuation(&a[i][i], p);
                bi = i;
                bj = i;
            }
        }
        for (s, &i) in idx.iter().enumerate() {
            for &j in &idx[s + 1..] {
                if p_valuation(&a[i][j], p) < best {
                    best = p_valuation(&a[i][j], p);
                    bi = i;
                    bj = j;
                }
            }
        }
        let diag_ok = bi == bj
            || p_valuation(&a[bi][bi], p) == best
            || p_valuation(&a[bj][bj], p) == best;
        if !is_two || diag_ok {
            let mut piv = if p_valuation(&a[bi][bi], p) <= p_valuation(&a[bj][bj], p) {
                bi
            } else {
                bj
            };
            if p_valuation(&a[piv][piv], p) > best && !is_two {
                // Add row and column j to row and column i to surface a
                // diagonal entry of minimal valuation (p odd only).
                let (i, j) = (bi, bj);
                for k in 0..n {
                    let t = a[j][k].clone();
                    a[i][k] += t;
                }
                for k in 0..n {
                    let t = a[k][j].clone();
                    a[k][i] += t;
                }
                piv = i;
            }
            let pivot = a[piv][piv].clone();
            let sc = p_valuation(&pivot, p);
            let unit = &pivot / Q::from_integer(p.pow(sc.unsigned_abs() as u32))
                * if sc < 0 {
                    Q::from_integer(p.pow((2 * sc.unsigned_abs()) as u32))
                } else {
                    Q::one()
                };
            blocks.push((sc, false, unit));
            idx.retain(|&k| k != piv);
            for &i in &idx.clone() {
                let c = &a[i][piv] / &pivot;
                for k in 0..n {
                    let t = &c * &a[piv][k];
                    a[i][k] -= t;
                }
                for k in 0..n {
                    a[k][i] = a[i][k].clone();
                }
            }
        } else {
            // 2x2 even block pivot (p = 2 only).
            let (i, j) = (bi, bj);
            let (pa, pb, pc) = (a[i][i].clone(), a[i][j].clone(), a[j][j].clone());
            let det = &pa * &pc - &pb * &pb;
            let sc = p_valuation(&pb, p);
            let scale = Q::from_integer(p.pow((2 * sc) as u32));
            blocks.push((sc, true, &det / scale));
            idx.retain(|&k| k != i && k != j);
            for &r in &idx.clone() {
                let x = (&a[r][i] * &pc - &a[r][j] * &pb) / &det;
                let y = (&a[r][j] * &pa - &a[r][i] * &pb) / &det;
                for k in 0..n {
                    let t = &x * &a[i][k] + &y * &a[j][k];
                    a[r][k] -= t;
                }
            }
            for &r in &idx {
                for &k in &idx {
                    a[k][r] = a[r][k].clone();
                }
            }
        }
    }
    let mut scales: BTreeMap<i64, Constituent> = BTreeMap::new();
    for (sc, is_pair, u) in blocks {
        let c = scales.entry(sc).or_insert(Constituent {
            dim: 0,
            det: Q::one(),
            odd: false,
            oddity: 0,
        });
        if is_pair {
            c.dim += 2;
            c.det *= &u;
            if is_two && unit_mod8(&u) == 3 {
                // V-type even block contributes oddity 4; U-type none.
                c.oddity = (c.oddity + 4) % 8;
            }
        } else {
            c.dim += 1;
            c.det *= &u;
            c.odd = true;
            if is_two {
                c.oddity = (c.oddity + unit_mod8(&u)) % 8;
            }
        }
    }
    scales
}

// ---------- local masses ----------

/// Diagonal factor for a species: sp >= 0, sign in {-1, 0, 1} (0 means
/// the unsigned, "bound" variant).
fn m_species(sp: usize, sign: i32, p: &BigInt) -> Q {
    if sp == 0 {
        return if sign != 0 { Q::one() } else { q_ratio(1, 2) };
    }
    let t = sp / 2;
    let mut r = q_ratio(1, 2);
    let inv_p2i = |i: usize| Q::one() - Q::new(BigInt::one(), p.pow(2 * i as u32));
    if sp % 2 == 1 {
        for i in 1..=t {
            r /= inv_p2i(i);
        }
        return r;
    }
    if sign == 0 {
        for i in 1..=t {
            r /= inv_p2i(i);
        }
        return r;
    }
    r /= Q::one() - q_int(sign as i64) * Q::new(BigInt::one(), p.pow(t as u32));
    for i in 1..t {
        r /= inv_p2i(i);
    }
    r
}

/// Local mass at an odd prime, as (value, radicand multiplier).
fn local_mass_odd(scales: &BTreeMap<i64, Constituent>, p: &BigInt) -> (Q, BigInt) {
    let mut m = Q::one();
    let mut rad = BigInt::one();
    for c in scales.values() {
        if c.dim % 2 == 1 {
            m *= m_species(c.dim, 1, p);
        } else {
            let t = c.dim / 2;
            // The sign is legendre((-1)^t * det_unit, p); numerator times
            // denominator is in the same square class as the unit.
            let mut a = c.det.numer() * c.det.denom();
            if t % 2 == 1 {
                a = -a;
            }
            m *= m_species(c.dim, legendre(&a, p), p);
        }
    }
    cross_term(scales, p, &mut m, &mut rad);
    (m, rad)
}

fn cross_term(scales: &BTreeMap<i64, Constituent>, p: &BigInt, m: &mut Q, rad: &mut BigInt) {
    let keys: Vec<i64> = scales.keys().copied().collect();
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            let e = (keys[j] - keys[i]) as u64
                * scales[&keys[i]].dim as u64
                * scales[&keys[j]].dim as u64;
            *m *= Q::from_integer(p.pow((e / 2) as u32));
            if e % 2 == 1 {
                *rad *= p;
            }
        }
    }
}

/// Local mass at 2, as (value, radicand multiplier).
fn local_mass_two(scales: &BTreeMap<i64, Constituent>) -> (Q, BigInt) {
    let two = BigInt::from(2);
    let keys: Vec<i64> = scales.keys().copied().collect();
    let (lo, hi) = (keys[0], keys[keys.len() - 1]);
    let info = |s: i64| -> (usize, bool, u32, Q) {
        match scales.get(&s) {
            Some(c) => (c.dim, c.odd, c.oddity, c.det.clone()),
            None => (0, false, 0, Q::one()),
        }
    };
    // n(II) and the number of adjacent type I pairs.
    let mut n_ii = 0usize;
    let mut n_ii_pairs = 0i64;
    for s in lo..=hi {
        let (dim, odd, _, _) = info(s);
        if !odd {
            n_ii += dim;
        }
        if s < hi {
            let (d1, o1, _, _) = info(s);
            let (d2, o2, _, _) = info(s + 1);
            if o1 && d1 > 0 && o2 && d2 > 0 {
                n_ii_pairs += 1;
            }
        }
    }
    // Compartments: maximal runs of adjacent nonzero type I constituents.
    struct Compartment {
        scales: Vec<i64>,
        dim: usize,
        oddity: u32,
    }
    let mut comps: Vec<Compartment> = Vec::new();
    let mut cur: Option<Compartment> = None;
    for s in lo..=hi {
        let (dim, odd, oddity, _) = info(s);
        if odd && dim > 0 {
            match cur.as_mut() {
                Some(c) => {
                    c.scales.push(s);
                    c.dim += dim;
                    c.oddity = (c.oddity + oddity) % 8;
                }
                None => cur = Some(Compartment { scales: vec![s], dim, oddity }),
            }
        } else if let Some(c) = cur.take() {
            comps.push(c);
        }
    }
    if let Some(c) = cur.take() {
        comps.push(c);
    }
    let mut m = Q::one();
    let mut rad = BigInt::one();
    // Type II constituents: bound ones take the unsigned factor.
    for s in lo..=hi {
        let (dim, odd, _, det) = info(s);
        if !odd && dim > 0 {
            let bound = {
                let (d1, o1, _, _) = info(s - 1);
                let (d2, o2, _, _) = info(s + 1);
                (o1 && d1 > 0) || (o2 && d2 > 0)
            };
            if bound {
                m *= m_species(dim, 0, &two);
            } else {
                let sign = if matches!(unit_mod8(&det), 1 | 7) { 1 } else { -1 };
                m *= m_species(dim, sign, &two);
            }
        }
    }
    // Compartments: species from total dimension and oddity.
    for c in &comps {
        let (n, o) = (c.dim, c.oddity % 8);
        let (sp, sign) = if n % 2 == 1 {
            (n - 1, if matches!(o, 1 | 7) { 1 } else { -1 })
        } else {
            match o {
                2 | 6 => (n - 1, 1),
                0 => (n - 2, 1),
                4 => (n - 2, -1),
                _ => unreachable!("even type I compartment has even oddity"),
            }
        };
        let bound = c.scales.iter().any(|&s| {
            let (d1, o1, _, _) = info(s - 1);
            let (d2, o2, _, _) = info(s + 1);
            (!o1 && d1 > 0) || (!o2 && d2 > 0)
        });
        let factor = if sp == 0 {
            Q::one()
        } else {
            m_species(sp, sign, &two)
        };
        m *= factor * if bound { q_ratio(1, 2) } else { q_ratio(1, 4) };
    }
    cross_term(scales, &two, &mut m, &mut rad);
    // Type factor 2^(n(I,I) - n(II)).
    let e = n_ii_pairs - n_ii as i64;
    if e >= 0 {
        m *= Q::from_integer(two.pow(e as u32));
    } else {
        m /= Q::from_integer(two.pow((-e) as u32));
    }
    (m, rad)
}

fn prime_factors(x: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut x = x.abs();
    let mut f = BigInt::from(2);
    while &f * &f <= x {
        if (&x % &f).is_zero() {
            out.push(f.clone());
            while (&x % &f).is_zero() {
                x /= &f;
            }
        }
        f += 1;
    }
    if x > BigInt::one() {
        out.push(x);
    }
    out
}

// ---------- global mass ----------

/// The mass of the genus of a positive definite even Gram matrix.
pub fn mass(gram: &IMat) -> Result<Q, GenusError> {
    let n = gram.len();
    if n == 0 {
        return Ok(Q::one());
    }
    let det = mat::det(gram);
    if !det.is_positive() {
        return Err(GenusError::NotPositiveDefinite);
    }
    let mut rad = Q::one();
    let (s, chi_d, mut m) = if n % 2 == 1 {
        let s = (n - 1) / 2;
        let mut c = q_int(2);
        for i in 1..=s {
            c *= zeta_neg(i);
        }
        (s, None, c)
    } else {
        let s = n / 2;
        let d_big = if s % 2 == 0 { det.clone() } else { -det.clone() };
        let d = fundamental_discriminant(&d_big);
        let mut c = Q::from_integer(BigInt::from(2).pow(s as u32)) * l_one_minus_s(s, &d);
        c /= Q::from_integer(d.abs().pow(s as u32));
        rad *= Q::from_integer(d.abs());
        for i in 1..s {
            c *= zeta_neg(i);
        }
        (s, Some(d), c)
    };
    for p in prime_factors(&(BigInt::from(2) * &det)) {
        let scales = jordan_constituents(gram, &p);
        let (mp, r) = if p == BigInt::from(2) {
            local_mass_two(&scales)
        } else {
            local_mass_odd(&scales, &p)
        };
        rad *= Q::from_integer(r);
        let mut corr = q_int(2) * mp;
        match &chi_d {
            None => {
                for i in 1..=s {
                    corr *= Q::one() - Q::new(BigInt::one(), p.pow(2 * i as u32));
                }
            }
            Some(d) => {
                for i in 1..s {
                    corr *= Q::one() - Q::new(BigInt::one(), p.pow(2 * i as u32));
                }
                corr *= Q::one()
                    - q_int(kronecker_prime(d, &p) as i64) * Q::new(BigInt::one(), p.pow(s as u32));
            }
        }
        m *= corr;
    }
    // Fold in sqrt(rad), which must be rational.
    let sn = rad.numer().sqrt();
    let sd = rad.denom().sqrt();
    if &(&sn * &sn) != rad.numer() || &(&sd * &sd) != rad.denom() {
        return Err(GenusError::Internal(format!(
            "mass radicand is not a perfect square: {rad}"
        )));
    }
    Ok(m * Q::new(sn, sd))
}
