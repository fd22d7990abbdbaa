//! Per-frame reports and the fibration count |J_X / Aut(X)|.

use finqform::group::Subgroup;
use num_bigint::BigUint;

use definite::{MordellWeil, RootDatum};
use genus_walk::genus::GenusList;
use lattice_core::GramLattice;

use crate::context::CountingContext;
use crate::error::{CountError, Result};
use crate::hodge::{hodge_candidates, HodgeCandidate, DEFAULT_ENTRY_BOUND};

/// How the Hodge image subgroup H = O#_hdg(T) is determined.
#[derive(Debug, Clone)]
pub enum HodgeSpec {
    /// An explicit integral generator of the Hodge group acting on T; its
    /// image in O(T#) generates H.
    Generator(Vec<Vec<i64>>),
    /// H is cyclic of this order; fails when more than one conjugacy class
    /// of that order exists (the count can depend on the choice).
    Order(u32),
    /// Run the bounded lift search and report one count per candidate
    /// order, assuming transcendental value group {±1} (kernel {±id}).
    Enumerate { entry_bound: i64, kernel_size: u32 },
}

impl Default for HodgeSpec {
    fn default() -> Self {
        HodgeSpec::Enumerate { entry_bound: DEFAULT_ENTRY_BOUND, kernel_size: 2 }
    }
}

/// A resolved choice of H, with a label describing where it came from.
#[derive(Debug, Clone)]
pub struct HodgeChoice {
    pub label: String,
    pub order: u32,
    pub subgroup: Subgroup,
}

/// The image in O(T#) of -id of T. It lies in every Hodge image H (since
/// -id is always a Hodge isometry) and in every frame image K (via -id of
/// W), so it never changes a double coset count, but H must contain it.
fn neg_identity_id(ctx: &CountingContext) -> Result<u32> {
    let inv = &ctx.group.form.inv;
    let rows: Vec<Vec<i64>> = (0..inv.len())
        .map(|i| {
            (0..inv.len())
                .map(|j| if i == j { (inv[i] - 1) % inv[i] } else { 0 })
                .collect()
        })
        .collect();
    let iso = finqform::FiniteIsometry::new(inv.clone(), rows);
    ctx.group
        .id_of(&iso)
        .ok_or_else(|| CountError::Internal("-id action not in O(T#)".into()))
}

/// H generated by a class representative together with the image of -id;
/// asserts the result is cyclic.
fn hodge_subgroup(ctx: &CountingContext, rep: u32) -> Result<Subgroup> {
    let eps = neg_identity_id(ctx)?;
    let sub = ctx.group.subgroup_generated(&[rep, eps])?;
    let n = sub.order();
    let cyclic = sub
        .ids
        .iter()
        .any(|&x| ctx.group.element_order(x) == n);
    if !cyclic {
        return Err(CountError::Internal("resolved Hodge image is not cyclic".into()));
    }
    Ok(sub)
}

pub fn resolve_hodge(ctx: &CountingContext, spec: &HodgeSpec) -> Result<Vec<HodgeChoice>> {
    match spec {
        HodgeSpec::Generator(m) => {
            let dg = lattice_core::DiscriminantGroup::of(&ctx.t);
            let action = definite::disc_action(&dg, m);
            let id = ctx.group.id_of(&action).ok_or(CountError::HodgeNotInGroup)?;
            let sub = hodge_subgroup(ctx, id)?;
            let order = sub.order() as u32;
            Ok(vec![HodgeChoice { label: format!("generator, image of order {order}"), order, subgroup: sub }])
        }
        HodgeSpec::Order(m) => {
            let classes = ctx.group.conjugacy_classes();
            let reps: Vec<u32> = if *m == 1 {
                vec![ctx.group.identity_id()]
            } else {
                classes
                    .iter()
                    .filter(|c| c.element_order == *m as usize)
                    .map(|c| c.representative)
                    .collect()
            };
            match reps.len() {
                0 => Err(CountError::NoHodgeCandidate(*m, 0)),
                1 => {
                    let sub = hodge_subgroup(ctx, reps[0])?;
                    Ok(vec![HodgeChoice { label: format!("unique class of order {m}"), order: *m, subgroup: sub }])
                }
                n => Err(CountError::AmbiguousHodge(*m, n)),
            }
        }
        HodgeSpec::Enumerate { entry_bound, kernel_size } => {
            let cands = hodge_candidates(ctx, *entry_bound, *kernel_size)?;
            choices_from_candidates(ctx, &cands)
        }
    }
}

pub fn choices_from_candidates(
    ctx: &CountingContext,
    cands: &[HodgeCandidate],
) -> Result<Vec<HodgeChoice>> {
    let mut out = Vec::new();
    for c in cands {
        for (i, &rep) in c.class_reps.iter().enumerate() {
            let sub = hodge_subgroup(ctx, rep)?;
            let label = if c.class_reps.len() == 1 {
                format!("order {}", c.order)
            } else {
                format!("order {} (class {})", c.order, i + 1)
            };
            out.push(HodgeChoice { label, order: c.order, subgroup: sub });
        }
    }
    Ok(out)
}

/// Everything reported about one frame lattice W.
#[derive(Debug, Clone)]
pub struct FrameReport {
    /// 1-based index in the enumeration order of the genus.
    pub id: usize,
    pub root: RootDatum,
    pub mw: MordellWeil,
    /// |O(W)|.
    pub aut_order: BigUint,
    /// |O#(W)|, the order of the image of O(W) on the discriminant form.
    pub sharp_order: usize,
    /// |H \ O(T#) / O#(W)|, the number of fibrations with frame W.
    pub multiplicity: usize,
    pub lattice: GramLattice,
}

/// The multiplicity of one frame: the number of double cosets H\G/K where
/// G = O(T#), K is the image of O(W) transported to G, and H is the Hodge
/// image. Also returns |K|.
pub fn multiplicity(
    ctx: &CountingContext,
    w: &GramLattice,
    aut_gens: &[Vec<Vec<i64>>],
    h: &Subgroup,
) -> Result<(usize, usize)> {
    let k = ctx.frame_image(w, aut_gens)?;
    let mult = ctx.group.double_coset_count(h, &k)?;
    if h.order() == 1 && mult * k.order() != ctx.group.order() {
        return Err(CountError::Internal(
            "trivial-H multiplicity disagrees with |G|/|K|".into(),
        ));
    }
    Ok((mult, k.order()))
}

#[derive(Debug, Clone)]
pub struct CountReport {
    pub hodge: HodgeChoice,
    pub frames: Vec<FrameReport>,
    pub total: usize,
}

/// Counts jacobian elliptic fibrations up to automorphisms for one choice
/// of the Hodge subgroup, one frame report per genus class.
pub fn count_fibrations(
    ctx: &CountingContext,
    genus: &GenusList,
    hodge: &HodgeChoice,
) -> Result<CountReport> {
    let mut frames = Vec::with_capacity(genus.classes.len());
    let mut total = 0usize;
    for (i, class) in genus.classes.iter().enumerate() {
        let w = &class.lattice;
        let aut = definite::automorphism_group(w.gram())?;
        if aut.order != class.aut_order {
            return Err(CountError::Internal(format!(
                "automorphism order mismatch on frame {}: {} vs {}",
                i + 1,
                aut.order,
                class.aut_order
            )));
        }
        let (mult, sharp) = multiplicity(ctx, w, &aut.generators, &hodge.subgroup)?;
        let root = definite::root_classification(w);
        let mw = definite::mordell_weil(w, &root);
        total += mult;
        frames.push(FrameReport {
            id: i + 1,
            root,
            mw,
            aut_order: class.aut_order.clone(),
            sharp_order: sharp,
            multiplicity: mult,
            lattice: w.clone(),
        });
    }
    Ok(CountReport { hodge: hodge.clone(), frames, total })
}

/// Bounds on the fibration count that need no per-frame group work: each
/// frame contributes at least one fibration and at most |H \ G| of them.
pub fn uniform_bounds(ctx: &CountingContext, genus: &GenusList, h: &Subgroup) -> (usize, usize) {
    let n = genus.classes.len();
    (n, n * (ctx.group.order() / h.order()))
}
