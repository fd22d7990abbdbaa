//! Shared state for multiplicity computations: the discriminant group
//! O(T#) of the transcendental lattice and the embedding of each frame's
//! O#(W) into it.
//!
//! For a frame W in the frame genus, W# is isometric to the negation of
//! T#. The identification O(W#) = O(T#) is not canonical; we fix one
//! explicit isometry phi: W# -> -T# per frame and conjugate by it. Any
//! isometry of a form q also preserves -q, so the conjugated maps land in
//! O(T#). Multiplicities do not depend on the choice of phi (double-coset
//! counts are invariant under conjugation of the subgroups involved).

use std::collections::HashMap;

use finqform::form::CompactForm;
use finqform::group::{FiniteOrthGroup, Subgroup};
use finqform::isometry::FiniteIsometry;
use finqform::search::{are_isometric, FormMap};
use lattice_core::disc::{form_on_group, DiscriminantGroup};
use lattice_core::GramLattice;

use crate::error::{CountError, Result};

pub struct CountingContext {
    pub t: GramLattice,
    /// Discriminant form of T.
    pub q_t: CompactForm,
    /// The negated discriminant form (the form carried by every frame).
    pub q_t_neg: CompactForm,
    /// O(T#), fully materialized.
    pub group: FiniteOrthGroup,
}

impl CountingContext {
    pub fn new(t: GramLattice) -> Result<CountingContext> {
        let form = lattice_core::discriminant_form(&t)?;
        let q_t = CompactForm::from_form(&form)?;
        let q_t_neg = CompactForm::from_form(&form.neg())?;
        let group = finqform::group::orthogonal_group(&q_t)?;
        Ok(CountingContext {
            t,
            q_t,
            q_t_neg,
            group,
        })
    }

    /// The image subgroup O#(W) inside O(T#), using the fixed isometry
    /// phi: W# -> -T#. `aut_gens` are generators of O(W) as integer
    /// matrices (rows = images of basis vectors).
    pub fn frame_image(&self, w: &GramLattice, aut_gens: &[Vec<Vec<i64>>]) -> Result<Subgroup> {
        let phi = self.frame_identification(w)?;
        self.frame_image_via(w, aut_gens, &phi)
    }

    /// An explicit isometry W# -> -T#.
    pub fn frame_identification(&self, w: &GramLattice) -> Result<FormMap> {
        let dg = DiscriminantGroup::of(w);
        let q_w = CompactForm::from_form(&form_on_group(w, &dg)?)?;
        are_isometric(&q_w, &self.q_t_neg)?.ok_or(CountError::FrameNotInGenus)
    }

    /// As `frame_image` but with a caller-supplied identification, used by
    /// the conjugation-invariance checks.
    pub fn frame_image_via(
        &self,
        w: &GramLattice,
        aut_gens: &[Vec<Vec<i64>>],
        phi: &FormMap,
    ) -> Result<Subgroup> {
        let dg = DiscriminantGroup::of(w);
        let q_w = CompactForm::from_form(&form_on_group(w, &dg)?)?;
        // Invert phi by tabulating it on the (small) discriminant group.
        let mut phi_inv: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        for x in q_w.elements() {
            phi_inv.insert(phi.apply(&x, &self.q_t_neg), x);
        }
        let moduli = self.q_t.inv.clone();
        let k = moduli.len();
        let mut ids = Vec::new();
        for m in aut_gens {
            let a = definite::disc_action(&dg, m);
            let mut rows = Vec::with_capacity(k);
            for i in 0..k {
                let mut e = vec![0i64; k];
                e[i] = 1;
                let x = phi_inv
                    .get(&e)
                    .ok_or_else(|| CountError::Internal("identification not surjective".into()))?;
                rows.push(phi.apply(&a.apply(x), &self.q_t_neg));
            }
            let iso = FiniteIsometry::new(moduli.clone(), rows);
            let id = self
                .group
                .id_of(&iso)
                .ok_or_else(|| CountError::Internal("conjugated image not in O(T#)".into()))?;
            ids.push(id);
        }
        Ok(self.group.subgroup_generated(&ids)?)
    }
}
