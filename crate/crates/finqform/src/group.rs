//! Fully materialized orthogonal groups of finite quadratic forms, with
//! conjugacy classes, subgroups and double-coset counting.

use std::collections::{HashMap, HashSet};

use once_cell_lite::Lazy;

use crate::error::{FinqError, Result};
use crate::form::CompactForm;
use crate::isometry::FiniteIsometry;
use crate::search::{find_isometries, DEFAULT_CAP};

/// Tiny stand-in for a once cell so the crate has no extra dependency.
mod once_cell_lite {
    use std::sync::OnceLock;

    #[derive(Debug, Default)]
    pub struct Lazy<T>(OnceLock<T>);

    impl<T> Lazy<T> {
        pub fn new() -> Self {
            Lazy(OnceLock::new())
        }
        pub fn get_or_init(&self, f: impl FnOnce() -> T) -> &T {
            self.0.get_or_init(f)
        }
    }
}

#[derive(Debug)]
pub struct FiniteOrthGroup {
    pub form: CompactForm,
    pub elements: Vec<FiniteIsometry>,
    index: HashMap<Vec<i64>, u32>,
    table: Lazy<Vec<u32>>,
    inverses: Lazy<Vec<u32>>,
}

/// A subgroup given by sorted element ids in the ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub ids: Vec<u32>,
    set: HashSet<u32>,
}

impl Subgroup {
    fn from_set(set: HashSet<u32>) -> Subgroup {
        let mut ids: Vec<u32> = set.iter().copied().collect();
        ids.sort_unstable();
        Subgroup { ids, set }
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn contains(&self, id: u32) -> bool {
        self.set.contains(&id)
    }
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    pub representative: u32,
    pub size: usize,
    pub element_order: usize,
    pub members: Vec<u32>,
}

/// The full orthogonal group O(q), by backtracking plus verification.
pub fn orthogonal_group(q: &CompactForm) -> Result<FiniteOrthGroup> {
    orthogonal_group_capped(q, DEFAULT_CAP)
}

pub fn orthogonal_group_capped(q: &CompactForm, cap: u64) -> Result<FiniteOrthGroup> {
    let maps = find_isometries(q, q, true, cap)?;
    let mut elements: Vec<FiniteIsometry> = maps
        .into_iter()
        .map(|m| FiniteIsometry::new(q.inv.clone(), m.mat))
        .collect();
    elements.sort_by(|a, b| a.key().cmp(&b.key()));
    let identity = FiniteIsometry::identity(q.inv.clone());
    if let Some(pos) = elements.iter().position(|e| *e == identity) {
        elements.remove(pos);
        elements.insert(0, identity);
    } else {
        return Err(FinqError::Internal("identity not found by search".into()));
    }
    for e in &elements {
        if !e.is_isometry_of(q) {
            return Err(FinqError::Internal("search returned a non-isometry".into()));
        }
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.key(), i as u32))
        .collect();
    let g = FiniteOrthGroup {
        form: q.clone(),
        elements,
        index,
        table: Lazy::new(),
        inverses: Lazy::new(),
    };
    // Closure check: products of elements stay in the group.
    for a in 0..g.order().min(32) {
        for b in 0..g.order().min(32) {
            g.mul(a as u32, b as u32);
        }
    }
    Ok(g)
}

impl FiniteOrthGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn id_of(&self, e: &FiniteIsometry) -> Option<u32> {
        self.index.get(&e.key()).copied()
    }

    pub fn identity_id(&self) -> u32 {
        0
    }

    fn cayley(&self) -> &Vec<u32> {
        self.table.get_or_init(|| {
            let n = self.order();
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let p = self.elements[a].then(&self.elements[b]);
                    t[a * n + b] = *self
                        .index
                        .get(&p.key())
                        .expect("group not closed under composition");
                }
            }
            t
        })
    }

    /// Composition: apply a first, then b.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.cayley()[a as usize * self.order() + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses.get_or_init(|| {
            let n = self.order();
            let mut inv = vec![0u32; n];
            for x in 0..n as u32 {
                for y in 0..n as u32 {
                    if self.mul(x, y) == 0 {
                        inv[x as usize] = y;
                        break;
                    }
                }
            }
            inv
        })[a as usize]
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let n = self.order() as u32;
        let mut assigned = vec![false; n as usize];
        let mut out = Vec::new();
        for rep in 0..n {
            if assigned[rep as usize] {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..n {
                let c = self.mul(self.mul(self.inv(g), rep), g);
                if !assigned[c as usize] {
                    assigned[c as usize] = true;
                    members.push(c);
                }
            }
            members.sort_unstable();
            out.push(ConjClass {
                representative: rep,
                size: members.len(),
                element_order: self.element_order(rep),
                members,
            });
        }
        debug_assert_eq!(out.iter().map(|c| c.size).sum::<usize>(), self.order());
        out
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_set((0..self.order() as u32).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_set(std::iter::once(0).collect())
    }

    /// Closure of a set of element ids.
    pub fn subgroup_generated(&self, gens: &[u32]) -> Result<Subgroup> {
        for &g in gens {
            if g as usize >= self.order() {
                return Err(FinqError::NotInGroup);
            }
        }
        let mut set: HashSet<u32> = std::iter::once(0).collect();
        let mut frontier: Vec<u32> = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(Subgroup::from_set(set))
    }

    /// Subgroup generated by explicit isometries, which must lie in G.
    pub fn image_subgroup(&self, elements: &[FiniteIsometry]) -> Result<Subgroup> {
        let ids: Vec<u32> = elements
            .iter()
            .map(|e| self.id_of(e).ok_or(FinqError::NotInGroup))
            .collect::<Result<_>>()?;
        self.subgroup_generated(&ids)
    }

    /// A conjugating element g with g⁻¹ K1 g = K2, if one exists.
    pub fn is_conjugate_subgroup(&self, k1: &Subgroup, k2: &Subgroup) -> Option<u32> {
        if k1.order() != k2.order() {
            return None;
        }
        (0..self.order() as u32).find(|&g| {
            let gi = self.inv(g);
            k1.ids
                .iter()
                .all(|&x| k2.contains(self.mul(self.mul(gi, x), g)))
        })
    }

    pub fn is_normal(&self, k: &Subgroup) -> bool {
        (0..self.order() as u32).all(|g| {
            let gi = self.inv(g);
            k.ids
                .iter()
                .all(|&x| k.contains(self.mul(self.mul(gi, x), g)))
        })
    }

    /// |H \ G / K| by direct partition, cross-checked against the
    /// Cauchy-Frobenius count; a mismatch is an internal error.
    pub fn double_coset_count(&self, h: &Subgroup, k: &Subgroup) -> Result<usize> {
        let n = self.order() as u32;
        // (a) Direct partition of G into double cosets.
        let mut seen = vec![false; n as usize];
        let mut cosets = 0usize;
        let mut coset_total = 0usize;
        for g in 0..n {
            if seen[g as usize] {
                continue;
            }
            cosets += 1;
            for &hh in &h.ids {
                let hg = self.mul(hh, g);
                for &kk in &k.ids {
                    let x = self.mul(hg, kk);
                    if !seen[x as usize] {
                        seen[x as usize] = true;
                        coset_total += 1;
                    }
                }
            }
        }
        if coset_total != self.order() {
            return Err(FinqError::Internal("double cosets do not cover G".into()));
        }
        // (b) Cauchy-Frobenius: |H\G/K| = (1/|H||K|) Σ_{h,k} |Fix(g↦hgk)|.
        // For fixed g and h the condition hgk = g determines k = g⁻¹h⁻¹g.
        let mut fix_sum: u64 = 0;
        for g in 0..n {
            let gi = self.inv(g);
            for &hh in &h.ids {
                let c = self.mul(self.mul(gi, self.inv(hh)), g);
                if k.contains(c) {
                    fix_sum += 1;
                }
            }
        }
        let denom = (h.order() * k.order()) as u64;
        if fix_sum % denom != 0 || fix_sum / denom != cosets as u64 {
            return Err(FinqError::Internal(format!(
                "double coset mismatch: partition {cosets}, cauchy-frobenius {fix_sum}/{denom}"
            )));
        }
        Ok(cosets)
    }
}
