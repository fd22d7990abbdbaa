//! Compact view of a finite quadratic form with machine-size entries,
//! suitable for exhaustive search. Conversion from the arbitrary-precision
//! representation fails only when the group is too large to enumerate.

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use lattice_core::FiniteQuadraticForm;

use crate::error::{FinqError, Result};

/// Reduce a rational into [0, m).
pub fn rmod(x: Rational64, m: i64) -> Rational64 {
    let m = Rational64::from_integer(m);
    let q = (x / m).floor();
    x - q * m
}

/// A finite quadratic form on ⊕ Z/d_i with i64 data. The d_i need not form
/// a divisibility chain; any generator presentation is accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactForm {
    pub inv: Vec<i64>,
    /// q(g_i) in [0, 2).
    pub q: Vec<Rational64>,
    /// b(g_i, g_j) in [0, 1).
    pub b: Vec<Vec<Rational64>>,
}

impl CompactForm {
    pub fn from_form(f: &FiniteQuadraticForm) -> Result<CompactForm> {
        let narrow = |x: &num_rational::BigRational| -> Result<Rational64> {
            let n = x.numer().to_i64().ok_or(FinqError::TooLarge)?;
            let d = x.denom().to_i64().ok_or(FinqError::TooLarge)?;
            Ok(Rational64::new(n, d))
        };
        let inv = f
            .invariant_factors
            .iter()
            .map(|d| d.to_i64().ok_or(FinqError::TooLarge))
            .collect::<Result<Vec<_>>>()?;
        let q = f.q.iter().map(narrow).collect::<Result<Vec<_>>>()?;
        let b = f
            .b
            .iter()
            .map(|row| row.iter().map(narrow).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(CompactForm { inv, q, b })
    }

    /// Build directly from generator data (invariant factors, q-values,
    /// b-matrix), e.g. a form written down in a paper basis.
    pub fn from_parts(inv: Vec<i64>, q: Vec<Rational64>, b: Vec<Vec<Rational64>>) -> CompactForm {
        let q = q.into_iter().map(|x| rmod(x, 2)).collect();
        let b = b
            .into_iter()
            .map(|row| row.into_iter().map(|x| rmod(x, 1)).collect())
            .collect();
        CompactForm { inv, q, b }
    }

    pub fn rank(&self) -> usize {
        self.inv.len()
    }

    pub fn order(&self) -> i64 {
        self.inv.iter().product()
    }

    pub fn q_of(&self, x: &[i64]) -> Rational64 {
        let mut s = Rational64::zero();
        for i in 0..self.rank() {
            if x[i] == 0 {
                continue;
            }
            s += Rational64::from_integer(x[i] * x[i]) * self.q[i];
            for j in 0..i {
                if x[j] != 0 {
                    s += Rational64::from_integer(2 * x[i] * x[j]) * self.b[i][j];
                }
            }
        }
        rmod(s, 2)
    }

    pub fn b_of(&self, x: &[i64], y: &[i64]) -> Rational64 {
        let mut s = Rational64::zero();
        for i in 0..self.rank() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                if y[j] != 0 {
                    s += Rational64::from_integer(x[i] * y[j]) * self.b[i][j];
                }
            }
        }
        rmod(s, 1)
    }

    /// All group elements in odometer order (the zero element first).
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.order().unsigned_abs() as usize);
        let mut cur = vec![0i64; self.rank()];
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == self.rank() {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < self.inv[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// Order of an element of ⊕ Z/d_i.
    pub fn element_order(&self, x: &[i64]) -> i64 {
        let mut ord = 1i64;
        for (c, d) in x.iter().zip(&self.inv) {
            let o = d / num_integer::gcd(*c, *d);
            ord = num_integer::lcm(ord, o);
        }
        ord
    }

    /// Multiset of (element order, q-value) with counts; an isomorphism
    /// invariant used as a fast pre-filter.
    pub fn value_profile(&self) -> Vec<(i64, Rational64, usize)> {
        use std::collections::BTreeMap;
        let mut m: BTreeMap<(i64, Rational64), usize> = BTreeMap::new();
        for e in self.elements() {
            *m.entry((self.element_order(&e), self.q_of(&e))).or_insert(0) += 1;
        }
        m.into_iter().map(|((o, v), c)| (o, v, c)).collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        // b is nondegenerate iff no nonzero element pairs integrally with
        // every generator.
        let gens: Vec<Vec<i64>> = (0..self.rank())
            .map(|i| {
                let mut e = vec![0i64; self.rank()];
                e[i] = 1;
                e
            })
            .collect();
        for x in self.elements() {
            if x.iter().all(|&c| c == 0) {
                continue;
            }
            if gens.iter().all(|g| self.b_of(&x, g).is_zero()) {
                return false;
            }
        }
        true
    }
}
