//! Discriminant groups L^#/L and their finite quadratic forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{LatticeError, Result};
use crate::lattice::GramLattice;
use crate::mat::{self, QMat};

/// Reduce a rational into [0, m).
pub fn reduce_mod(x: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(m));
    let q = (x / &m).floor();
    x - q * m
}

/// The group L^#/L in Smith normal form, with explicit rational lifts of
/// the generators inside L ⊗ Q (coordinates in the basis of L).
#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    /// Invariant factors d_1 | d_2 | ... | d_k, all > 1.
    pub invariant_factors: Vec<BigInt>,
    /// Lift of the i-th generator: a vector in L ⊗ Q of order d_i mod L.
    pub gen_lifts: Vec<Vec<BigRational>>,
    /// Row-transform of the Smith form of gram, for computing classes.
    u: mat::IMat,
    /// Indices (into the full Smith diagonal) of the retained generators.
    kept: Vec<usize>,
    gram: mat::IMat,
}

impl DiscriminantGroup {
    pub fn of(l: &GramLattice) -> Self {
        let gram = l.gram().clone();
        let (u, d, v) = mat::smith_normal_form(&gram);
        let r = gram.len();
        let mut invariant_factors = Vec::new();
        let mut gen_lifts = Vec::new();
        let mut kept = Vec::new();
        for j in 0..r {
            if d[j][j] > BigInt::one() {
                let dj = BigRational::from_integer(d[j][j].clone());
                let lift: Vec<BigRational> = (0..r)
                    .map(|i| BigRational::from_integer(v[i][j].clone()) / &dj)
                    .collect();
                invariant_factors.push(d[j][j].clone());
                gen_lifts.push(lift);
                kept.push(j);
            }
        }
        DiscriminantGroup { invariant_factors, gen_lifts, u, kept, gram }
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// Class coordinates of a vector of L^# given in L ⊗ Q; None when the
    /// vector does not pair integrally with L.
    pub fn class_of(&self, x: &[BigRational]) -> Option<Vec<BigInt>> {
        let r = self.gram.len();
        let mut gx = Vec::with_capacity(r);
        for i in 0..r {
            let mut s = BigRational::zero();
            for j in 0..r {
                s += BigRational::from_integer(self.gram[i][j].clone()) * &x[j];
            }
            if !s.is_integer() {
                return None;
            }
            gx.push(s.to_integer());
        }
        let ugx = mat::mat_vec(&self.u, &gx);
        Some(
            self.kept
                .iter()
                .zip(&self.invariant_factors)
                .map(|(&j, d)| ugx[j].mod_floor(d))
                .collect(),
        )
    }

    /// Rational lift of the class with the given generator coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigRational> {
        let r = self.gram.len();
        let mut out = vec![BigRational::zero(); r];
        for (c, g) in coords.iter().zip(&self.gen_lifts) {
            let c = BigRational::from_integer(c.clone());
            for i in 0..r {
                out[i] += &c * &g[i];
            }
        }
        out
    }
}

/// A finite quadratic form on ⊕ Z/d_i with values q in Q/2Z and the
/// associated bilinear form b in Q/Z, both recorded on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    pub invariant_factors: Vec<BigInt>,
    /// q(g_i) reduced into [0, 2).
    pub q: Vec<BigRational>,
    /// b(g_i, g_j) reduced into [0, 1).
    pub b: QMat,
}

impl FiniteQuadraticForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> BigInt {
        self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// q of the element with the given generator coordinates, in [0, 2).
    pub fn q_of(&self, coords: &[BigInt]) -> BigRational {
        let k = self.rank();
        let mut s = BigRational::zero();
        for i in 0..k {
            let c = BigRational::from_integer(coords[i].clone());
            s += &c * &c * &self.q[i];
            for j in 0..i {
                let cj = BigRational::from_integer(coords[j].clone());
                s += BigRational::from_integer(BigInt::from(2)) * &c * cj * &self.b[i][j];
            }
        }
        reduce_mod(&s, 2)
    }

    /// b of two elements, in [0, 1).
    pub fn b_of(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let k = self.rank();
        let mut s = BigRational::zero();
        for i in 0..k {
            for j in 0..k {
                s += BigRational::from_integer(&x[i] * &y[j]) * &self.b[i][j];
            }
        }
        reduce_mod(&s, 1)
    }

    /// The form with q negated (the discriminant form of L(-1)).
    pub fn neg(&self) -> FiniteQuadraticForm {
        FiniteQuadraticForm {
            invariant_factors: self.invariant_factors.clone(),
            q: self.q.iter().map(|x| reduce_mod(&(-x), 2)).collect(),
            b: self
                .b
                .iter()
                .map(|row| row.iter().map(|x| reduce_mod(&(-x), 1)).collect())
                .collect(),
        }
    }
}

/// The discriminant quadratic form of an even nondegenerate lattice.
pub fn discriminant_form(l: &GramLattice) -> Result<FiniteQuadraticForm> {
    if l.rank() > 0 && l.det().is_zero() {
        return Err(LatticeError::Degenerate);
    }
    let dg = DiscriminantGroup::of(l);
    form_on_group(l, &dg)
}

/// The quadratic form induced on an already-computed discriminant group.
pub fn form_on_group(l: &GramLattice, dg: &DiscriminantGroup) -> Result<FiniteQuadraticForm> {
    let k = dg.invariant_factors.len();
    let gram_q = mat::to_rational(l.gram());
    let pair = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        let mut s = BigRational::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                s += &x[i] * &gram_q[i][j] * &y[j];
            }
        }
        s
    };
    let mut q = Vec::with_capacity(k);
    let mut b = vec![vec![BigRational::zero(); k]; k];
    for i in 0..k {
        q.push(reduce_mod(&pair(&dg.gen_lifts[i], &dg.gen_lifts[i]), 2));
        for j in 0..k {
            b[i][j] = reduce_mod(&pair(&dg.gen_lifts[i], &dg.gen_lifts[j]), 1);
        }
    }
    Ok(FiniteQuadraticForm { invariant_factors: dg.invariant_factors.clone(), q, b })
}

impl FiniteQuadraticForm {
    /// Orthogonal direct sum on the concatenated generator system. The
    /// invariant factors of the result need not form a divisibility chain;
    /// callers who need the chain presentation should realize the sum on a
    /// lattice and take its discriminant form.
    pub fn direct_sum(&self, other: &FiniteQuadraticForm) -> FiniteQuadraticForm {
        let mut inv = self.invariant_factors.clone();
        inv.extend(other.invariant_factors.iter().cloned());
        let k1 = self.rank();
        let k = inv.len();
        let mut q = self.q.clone();
        q.extend(other.q.iter().cloned());
        let mut b = vec![vec![BigRational::zero(); k]; k];
        for i in 0..k1 {
            for j in 0..k1 {
                b[i][j] = self.b[i][j].clone();
            }
        }
        for i in 0..other.rank() {
            for j in 0..other.rank() {
                b[k1 + i][k1 + j] = other.b[i][j].clone();
            }
        }
        FiniteQuadraticForm { invariant_factors: inv, q, b }
    }

    /// Sorted multiset of (order, q-value) over all elements; a cheap
    /// isomorphism invariant used in tests and pre-filters.
    pub fn value_profile(&self) -> Vec<(BigInt, BigRational, usize)> {
        use std::collections::BTreeMap;
        let mut counts: BTreeMap<(BigInt, BigRational), usize> = BTreeMap::new();
        let mut coords = vec![BigInt::zero(); self.rank()];
        loop {
            let ord = element_order(&self.invariant_factors, &coords);
            *counts.entry((ord, self.q_of(&coords))).or_insert(0) += 1;
            if !increment(&mut coords, &self.invariant_factors) {
                break;
            }
        }
        counts.into_iter().map(|((o, v), c)| (o, v, c)).collect()
    }
}

fn element_order(inv: &[BigInt], coords: &[BigInt]) -> BigInt {
    let mut ord = BigInt::one();
    for (c, d) in coords.iter().zip(inv) {
        let o = d / c.gcd(d);
        ord = ord.lcm(&o);
    }
    ord
}

/// Odometer increment over ⊕ Z/d_i; false when wrapped to zero.
pub fn increment(coords: &mut [BigInt], inv: &[BigInt]) -> bool {
    for (c, d) in coords.iter_mut().zip(inv) {
        *c += 1;
        if &*c < d {
            return true;
        }
        *c = BigInt::zero();
    }
    false
}
