//! Isometries of finite quadratic forms as integer matrices on generator
//! coordinates. Row i is the image of the i-th generator; entry (i, j) is
//! reduced modulo the j-th invariant factor.

use crate::form::CompactForm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteIsometry {
    pub moduli: Vec<i64>,
    pub mat: Vec<Vec<i64>>,
}

impl FiniteIsometry {
    pub fn new(moduli: Vec<i64>, mat: Vec<Vec<i64>>) -> FiniteIsometry {
        let mut m = FiniteIsometry { moduli, mat };
        m.reduce();
        m
    }

    pub fn identity(moduli: Vec<i64>) -> FiniteIsometry {
        let k = moduli.len();
        let mat = (0..k)
            .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
            .collect();
        FiniteIsometry { moduli, mat }
    }

    fn reduce(&mut self) {
        for row in &mut self.mat {
            for (x, d) in row.iter_mut().zip(&self.moduli) {
                *x = x.rem_euclid(*d);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_identity(&self) -> bool {
        self.mat
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    /// Image of the element with coordinates x.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let k = self.rank();
        let mut y = vec![0i64; k];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                y[j] += x[i] * self.mat[i][j];
            }
        }
        for (v, d) in y.iter_mut().zip(&self.moduli) {
            *v = v.rem_euclid(*d);
        }
        y
    }

    /// Apply self first, then other.
    pub fn then(&self, other: &FiniteIsometry) -> FiniteIsometry {
        let k = self.rank();
        let mut mat = vec![vec![0i64; k]; k];
        for i in 0..k {
            mat[i] = other.apply(&self.mat[i]);
        }
        FiniteIsometry { moduli: self.moduli.clone(), mat }
    }

    /// Flattened canonical key for hashing and deterministic ordering.
    pub fn key(&self) -> Vec<i64> {
        self.mat.iter().flatten().copied().collect()
    }

    /// Whether the matrix defines a well-formed endomorphism of ⊕ Z/d_i
    /// that preserves q and b, and is bijective.
    pub fn is_isometry_of(&self, f: &CompactForm) -> bool {
        let k = self.rank();
        if f.inv != self.moduli {
            return false;
        }
        for i in 0..k {
            // Well-defined: d_i * image(g_i) = 0.
            for j in 0..k {
                if (self.moduli[i] * self.mat[i][j]) % self.moduli[j] != 0 {
                    return false;
                }
            }
            if f.q_of(&self.mat[i]) != f.q[i] {
                return false;
            }
            for j in 0..i {
                if f.b_of(&self.mat[i], &self.mat[j]) != crate::form::rmod(f.b[i][j], 1) {
                    return false;
                }
            }
        }
        // Bijective: images of all elements are pairwise distinct.
        let elems = f.elements();
        let mut seen = std::collections::HashSet::with_capacity(elems.len());
        elems.iter().all(|e| seen.insert(self.apply(e)))
    }
}
