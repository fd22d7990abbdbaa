use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use definite::{
    automorphism_group, isometric, lll, mordell_weil, root_classification, short_vectors,
    theta_profile,
};
use lattice_core::mat::{self, IMat};
use lattice_core::{lattice_from_symbol, GramLattice};

fn gram_of(symbol: &str) -> IMat {
    lattice_from_symbol(symbol).unwrap().gram().clone()
}

fn negate(g: &IMat) -> IMat {
    g.iter().map(|row| row.iter().map(|x| -x.clone()).collect()).collect()
}

/// u * g * u^T for an integer transform.
fn conjugate(u: &IMat, g: &IMat) -> IMat {
    let ug = mat::mat_mul(u, g);
    mat::mat_mul(&ug, &mat::transpose(u))
}

#[test]
fn short_vector_counts_of_root_lattices() {
    // Numbers of roots, one vector per sign pair.
    for (symbol, pairs) in [("A1", 1), ("A2", 3), ("A3", 6), ("D4", 12), ("E6", 36), ("E8", 120)] {
        let pos = negate(&gram_of(symbol));
        let vecs = short_vectors(&pos, 2);
        assert_eq!(vecs.len(), pairs, "{symbol}");
        assert!(vecs.iter().all(|(n, _)| *n == 2));
    }
}

#[test]
fn e8_theta_coefficients() {
    // theta_E8 = 1 + 240 q + 2160 q^2 + ...; the profile counts one
    // vector per +/- pair.
    let pos = negate(&gram_of("E8"));
    let profile = theta_profile(&pos, 4);
    assert_eq!(profile, vec![(2, 120), (4, 1080)]);
}

#[test]
fn short_vectors_normalized_signs() {
    let pos = negate(&gram_of("D4"));
    for (_, v) in short_vectors(&pos, 2) {
        let first = v.iter().find(|&&c| c != 0).unwrap();
        assert!(*first > 0);
    }
}

#[test]
fn lll_preserves_the_lattice() {
    // A deliberately skewed basis of E8.
    let pos = negate(&gram_of("E8"));
    let mut shear = mat::identity(8);
    for i in 0..7 {
        shear[i][i + 1] = BigInt::from(3 + i as i64);
    }
    let skew = conjugate(&shear, &pos);
    let (u, reduced) = lll(&skew);
    assert_eq!(conjugate(&u, &skew), reduced);
    assert_eq!(mat::det(&reduced), mat::det(&pos));
    // The reduced basis recovers minimal vectors on the diagonal.
    assert_eq!(reduced[0][0], BigInt::from(2));
    assert_eq!(short_vectors(&reduced, 2).len(), 120);
}

#[test]
fn automorphism_orders_of_small_root_lattices() {
    // |W(R)| times diagram symmetries.
    for (symbol, order) in [("A1", 2u64), ("A2", 12), ("A3", 48), ("D4", 1152), ("[-6]", 2)] {
        let g = gram_of(symbol);
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order, BigUint::from(order), "{symbol}");
        let pos: Vec<Vec<i64>> = negate(&g)
            .iter()
            .map(|row| row.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        for gen in &aut.generators {
            assert!(definite::aut::preserves_gram(&pos, gen));
        }
    }
}

#[test]
fn e8_automorphism_order() {
    let aut = automorphism_group(&gram_of("E8")).unwrap();
    assert_eq!(aut.order, BigUint::from(696_729_600u64));
}

#[test]
fn d8_e8_automorphism_order() {
    let aut = automorphism_group(&gram_of("D8+E8")).unwrap();
    assert_eq!(aut.order, BigUint::from(7_191_587_192_832_000u64));
}

#[test]
fn root_classification_examples() {
    let datum = root_classification(&lattice_from_symbol("D8+E8").unwrap());
    assert_eq!(datum.root_count, 352);
    assert_eq!(datum.components, vec![('D', 8), ('E', 8)]);
    assert_eq!(datum.symbol(), "D8 E8");
    assert_eq!(datum.root_rank(), 16);

    let datum = root_classification(&lattice_from_symbol("A1+A1+E7").unwrap());
    assert_eq!(datum.symbol(), "A1^2 E7");

    let datum = root_classification(&lattice_from_symbol("[-4]+[-6]").unwrap());
    assert_eq!(datum.root_count, 0);
    assert_eq!(datum.symbol(), "-");

    // A2 rescaled by 2 has no vectors of norm -2 left.
    let datum = root_classification(&lattice_from_symbol("A2(2)").unwrap());
    assert_eq!(datum.symbol(), "-");
}

#[test]
fn simple_roots_span_root_sublattice() {
    let l = lattice_from_symbol("D4+A2").unwrap();
    let datum = root_classification(&l);
    assert_eq!(datum.symbol(), "A2 D4");
    assert_eq!(datum.simple_roots.len(), 6);
    // Each simple root really has norm -2.
    for r in &datum.simple_roots {
        let br: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
        let gr = mat::mat_vec(l.gram(), &br);
        let norm: BigInt = br.iter().zip(&gr).map(|(a, b)| a * b).sum();
        assert_eq!(norm, BigInt::from(-2));
    }
}

#[test]
fn mordell_weil_examples() {
    // Full root lattice: trivial quotient.
    let l = lattice_from_symbol("D8+E8").unwrap();
    let mw = mordell_weil(&l, &root_classification(&l));
    assert_eq!((mw.free_rank, mw.torsion.clone()), (0, vec![]));
    assert_eq!(mw.symbol(), "0");

    // No roots at all: free of full rank.
    let l = lattice_from_symbol("[-4]+[-6]").unwrap();
    let mw = mordell_weil(&l, &root_classification(&l));
    assert_eq!(mw.symbol(), "Z^2");

    // Mixed: D4 + [-4] has root rank 4 inside rank 5.
    let l = lattice_from_symbol("D4+[-4]").unwrap();
    let mw = mordell_weil(&l, &root_classification(&l));
    assert_eq!(mw.symbol(), "Z");
}

#[test]
fn mordell_weil_torsion() {
    // The even overlattice of A1^8 glued by v = (e1+...+e8)/2: basis
    // e1..e7, v. Its root sublattice is A1^8 of index 2, so the quotient
    // is Z/2.
    let mut rows = vec![vec![0i64; 8]; 8];
    for i in 0..7 {
        rows[i][i] = -2;
        rows[i][7] = -1;
        rows[7][i] = -1;
    }
    rows[7][7] = -4;
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let l = GramLattice::from_i64_rows(&refs).unwrap();
    let datum = root_classification(&l);
    assert_eq!(datum.symbol(), "A1^8");
    assert_eq!(datum.root_count, 16);
    let mw = mordell_weil(&l, &datum);
    assert_eq!(mw.symbol(), "Z/2");
}

#[test]
fn isometry_testing() {
    // Reordered summands are isometric; the transform is checked exactly.
    let g1 = gram_of("D8+E8");
    let g2 = gram_of("E8+D8");
    let m = isometric(&g1, &g2).unwrap().expect("summand order is immaterial");
    let mb: IMat = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    assert_eq!(conjugate(&mb, &g2), g1);

    // Same rank and determinant, different root counts.
    assert_eq!(mat::det(&gram_of("D8+E8")), mat::det(&gram_of("D16")));
    assert!(isometric(&gram_of("D8+E8"), &gram_of("D16")).unwrap().is_none());

    // Different determinants.
    assert!(isometric(&gram_of("A1+A1"), &gram_of("A1+[-4]")).unwrap().is_none());
}

#[test]
fn discriminant_action_examples() {
    // E8 is unimodular: the image group is trivial.
    let e8 = lattice_from_symbol("E8").unwrap();
    let gens: Vec<Vec<Vec<i64>>> = automorphism_group(&gram_of("E8")).unwrap().generators;
    let (group, sub) = definite::discriminant_image(&e8, &gens).unwrap();
    assert_eq!(group.order(), 1);
    assert_eq!(sub.order(), 1);

    // A1 + A1: the full orthogonal group of the discriminant form swaps
    // the two generators, and the lattice swap realizes it.
    let l = lattice_from_symbol("A1+A1").unwrap();
    let gens = automorphism_group(l.gram()).unwrap().generators;
    let (group, sub) = definite::discriminant_image(&l, &gens).unwrap();
    assert_eq!(group.order(), 2);
    assert_eq!(sub.order(), 2);
}

#[test]
fn weyl_reflections_act_trivially_on_the_discriminant() {
    for symbol in ["A1+A1", "D4", "A3+[-2]"] {
        let l = lattice_from_symbol(symbol).unwrap();
        let datum = root_classification(&l);
        let dg = lattice_core::DiscriminantGroup::of(&l);
        for root in &datum.simple_roots {
            let refl = definite::weyl_reflection(&l, root);
            let rb: IMat = refl
                .iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            assert_eq!(conjugate(&rb, l.gram()), *l.gram(), "{symbol}: not an isometry");
            let act = definite::disc_action(&dg, &refl);
            assert!(act.is_identity(), "{symbol}: reflection moved the discriminant");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn aut_order_is_basis_independent(shears in proptest::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..5)) {
        let g = gram_of("A1+A2");
        let mut u = mat::identity(3);
        for (i, j, c) in shears {
            if i != j {
                let mut s = mat::identity(3);
                s[i][j] = BigInt::from(c);
                u = mat::mat_mul(&s, &u);
            }
        }
        let moved = conjugate(&u, &g);
        let a = automorphism_group(&g).unwrap();
        let b = automorphism_group(&moved).unwrap();
        prop_assert_eq!(a.order, b.order);
        let da = root_classification(&GramLattice::new(g).unwrap());
        let db = root_classification(&GramLattice::new(moved).unwrap());
        prop_assert_eq!(da.symbol(), db.symbol());
        prop_assert!(isometric(
            lattice_from_symbol("A1+A2").unwrap().gram(),
            &conjugate(&u, &gram_of("A1+A2"))
        ).unwrap().is_some());
    }
}
