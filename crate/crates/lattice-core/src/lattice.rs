use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{LatticeError, Result};
use crate::mat::{self, IMat};

/// An even integral lattice given by the Gram matrix of a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: IMat,
    pub label: Option<String>,
}

impl GramLattice {
    /// Build a lattice, validating symmetry, evenness and (for positive
    /// rank) nondegeneracy.
    pub fn new(gram: IMat) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(LatticeError::NotSquare);
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
            if (&gram[i][i] % 2) != BigInt::zero() {
                return Err(LatticeError::OddLattice);
            }
        }
        let l = GramLattice { gram, label: None };
        if n > 0 && l.det().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(l)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(mat::int_mat(rows))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IMat {
        &self.gram
    }

    pub fn det(&self) -> BigInt {
        mat::det(&self.gram)
    }

    /// |det|, the order of the discriminant group.
    pub fn disc_order(&self) -> BigInt {
        self.det().abs()
    }

    /// (n_plus, n_minus) by exact rational symmetric elimination.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let (p, n, z) = mat::symmetric_signature(&mat::to_rational(&self.gram));
        if z > 0 {
            return Err(LatticeError::Degenerate);
        }
        Ok((p, n))
    }

    pub fn is_negative_definite(&self) -> bool {
        matches!(self.signature(), Ok((0, _)))
    }

    pub fn is_positive_definite(&self) -> bool {
        matches!(self.signature(), Ok((_, 0)))
    }

    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        let (r, s) = (self.rank(), other.rank());
        let mut gram = vec![vec![BigInt::zero(); r + s]; r + s];
        for i in 0..r {
            for j in 0..r {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..s {
            for j in 0..s {
                gram[r + i][r + j] = other.gram[i][j].clone();
            }
        }
        GramLattice { gram, label: None }
    }

    /// L(n): same abelian group, form scaled by n.
    pub fn rescale(&self, n: i64) -> Result<GramLattice> {
        if n == 0 {
            return Err(LatticeError::ZeroRescale);
        }
        let k = BigInt::from(n);
        let gram = self
            .gram
            .iter()
            .map(|row| row.iter().map(|x| x * &k).collect())
            .collect();
        Ok(GramLattice { gram, label: None })
    }

    /// Gram of the saturated orthogonal complement of the span of the given
    /// rows (coordinates in the basis of self).
    pub fn orthogonal_complement(&self, sub: &IMat) -> Result<GramLattice> {
        let s_g = mat::mat_mul(sub, &self.gram);
        let s_g_st = mat::mat_mul(&s_g, &mat::transpose(sub));
        if !sub.is_empty() && mat::det(&s_g_st).is_zero() {
            return Err(LatticeError::DegenerateSublattice);
        }
        let kernel = mat::integer_kernel(&s_g);
        let kg = mat::mat_mul(&kernel, &self.gram);
        let gram = mat::mat_mul(&kg, &mat::transpose(&kernel));
        GramLattice::new(gram)
    }

    /// Basis change: gram of the same form on the rows of `basis` (which
    /// need not be unimodular; the result is the sublattice they span).
    pub fn transform(&self, basis: &IMat) -> Result<GramLattice> {
        let bg = mat::mat_mul(basis, &self.gram);
        GramLattice::new(mat::mat_mul(&bg, &mat::transpose(basis)))
    }
}

/// Negative definite ADE Cartan lattices, U and the rank-one bracket
/// lattice. Accepted symbols: `An` (n >= 1), `Dn` (n >= 4), `E6`, `E7`,
/// `E8`, `U`, `[k]` with k a nonzero even integer.
pub fn ade_lattice(symbol: &str) -> Result<GramLattice> {
    let s = symbol.trim().replace('_', "");
    let bad = || LatticeError::BadSymbol(symbol.to_string());
    if s == "U" {
        return Ok(GramLattice::from_i64_rows(&[&[0, 1], &[1, 0]])?.with_label("U"));
    }
    if let Some(body) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let k: i64 = body.trim().parse().map_err(|_| bad())?;
        if k == 0 || k % 2 != 0 {
            return Err(bad());
        }
        return Ok(GramLattice::from_i64_rows(&[&[k]])?.with_label(s.clone()));
    }
    let (kind, num) = s.split_at(1);
    let n: usize = num.parse().map_err(|_| bad())?;
    let edges: Vec<(usize, usize)> = match kind {
        "A" if n >= 1 => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        "D" if n >= 4 => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        "E" if (6..=8).contains(&n) => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((2, n - 1));
            e
        }
        _ => return Err(bad()),
    };
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        gram[i][i] = -2;
    }
    for (i, j) in edges {
        gram[i][j] = 1;
        gram[j][i] = 1;
    }
    let rows: Vec<&[i64]> = gram.iter().map(|r| r.as_slice()).collect();
    Ok(GramLattice::from_i64_rows(&rows)?.with_label(s.clone()))
}

/// Parse a direct-sum expression of basic symbols, e.g. "D8+E8",
/// "U+U(2)", "A1+[−4]". A trailing `(n)` on a term rescales it.
pub fn lattice_from_symbol(expr: &str) -> Result<GramLattice> {
    let mut acc = GramLattice::new(Vec::new())?;
    for term in expr.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(LatticeError::BadSymbol(expr.to_string()));
        }
        let (base, scale) = match term.strip_suffix(')').and_then(|t| t.rsplit_once('(')) {
            Some((b, k)) if !b.ends_with('[') => {
                let k: i64 = k
                    .trim()
                    .parse()
                    .map_err(|_| LatticeError::BadSymbol(term.to_string()))?;
                (b.trim(), k)
            }
            _ => (term, 1),
        };
        let mut l = ade_lattice(base)?;
        if scale != 1 {
            l = l.rescale(scale)?;
        }
        acc = acc.direct_sum(&l);
    }
    Ok(acc.with_label(expr.replace(' ', "")))
}
