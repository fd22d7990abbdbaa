//! The image O^#(W) of the automorphism group on the discriminant form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use finqform::{CompactForm, FiniteIsometry, FiniteOrthGroup, Subgroup};
use lattice_core::{DiscriminantGroup, GramLattice};

/// Action of one lattice automorphism (rows = images of basis vectors) on
/// the discriminant generators; panics if the matrix does not normalize
/// the lattice (it always does for genuine automorphisms).
pub fn disc_action(dg: &DiscriminantGroup, m: &[Vec<i64>]) -> FiniteIsometry {
    let moduli: Vec<i64> = dg
        .invariant_factors
        .iter()
        .map(|d| d.to_i64().expect("invariant factor out of machine range"))
        .collect();
    let rows: Vec<Vec<i64>> = dg
        .gen_lifts
        .iter()
        .map(|lift| {
            let n = lift.len();
            let image: Vec<BigRational> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|i| &lift[i] * BigRational::from_integer(BigInt::from(m[i][j])))
                        .sum()
                })
                .collect();
            dg.class_of(&image)
                .expect("automorphism does not preserve the dual lattice")
                .iter()
                .map(|c| c.to_i64().expect("class coordinate out of range"))
                .collect()
        })
        .collect();
    FiniteIsometry::new(moduli, rows)
}

/// O^#(W) as a subgroup of the full orthogonal group of the discriminant
/// form of W. Returns the ambient group together with the image subgroup.
pub fn discriminant_image(
    w: &GramLattice,
    aut_gens: &[Vec<Vec<i64>>],
) -> finqform::Result<(FiniteOrthGroup, Subgroup)> {
    let dg = DiscriminantGroup::of(w);
    let form = CompactForm::from_form(&lattice_core::disc::form_on_group(w, &dg).map_err(
        |e| finqform::FinqError::Internal(format!("discriminant form failed: {e}")),
    )?)?;
    let group = finqform::group::orthogonal_group(&form)?;
    let images: Vec<FiniteIsometry> = aut_gens.iter().map(|m| disc_action(&dg, m)).collect();
    let sub = group.image_subgroup(&images)?;
    Ok((group, sub))
}

/// The Weyl reflection in a root v (v² = -2) as a matrix with rows the
/// images of the basis vectors.
pub fn weyl_reflection(w: &GramLattice, v: &[i64]) -> Vec<Vec<i64>> {
    let n = w.rank();
    let gv: Vec<i64> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    w.gram()[i][j].to_i64().expect("gram entry out of range") * v[j]
                })
                .sum()
        })
        .collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::from(i == j) + gv[i] * v[j])
                .collect()
        })
        .collect()
}
