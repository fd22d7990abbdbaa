use lattice_core::mat::int_mat;
use lattice_core::{ade_lattice, discriminant_form, lattice_from_symbol, GramLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn signatures_of_standard_lattices() {
    let u = ade_lattice("U").unwrap();
    assert_eq!(u.signature().unwrap(), (1, 1));
    let e8 = ade_lattice("E8").unwrap();
    assert_eq!(e8.signature().unwrap(), (0, 8));
    let t = u.direct_sum(&u.rescale(2).unwrap());
    assert_eq!(t.signature().unwrap(), (2, 2));
}

#[test]
fn ade_determinants() {
    for (sym, d) in [
        ("A1", 2i64),
        ("A2", 3),
        ("A7", 8),
        ("D4", 4),
        ("D16", 4),
        ("E6", 3),
        ("E7", 2),
        ("E8", 1),
    ] {
        let l = ade_lattice(sym).unwrap();
        assert_eq!(l.disc_order(), BigInt::from(d), "det of {sym}");
        assert!(l.is_negative_definite(), "{sym} negative definite");
    }
}

#[test]
fn discriminant_form_of_e8_is_trivial() {
    let q = discriminant_form(&ade_lattice("E8").unwrap()).unwrap();
    assert_eq!(q.rank(), 0);
    assert!(q.order().is_one());
}

#[test]
fn discriminant_form_of_a1() {
    let q = discriminant_form(&ade_lattice("A1").unwrap()).unwrap();
    assert_eq!(q.invariant_factors, vec![BigInt::from(2)]);
    assert_eq!(q.q[0], qr(3, 2));
}

#[test]
fn discriminant_form_of_u2() {
    let q = discriminant_form(&ade_lattice("U").unwrap().rescale(2).unwrap()).unwrap();
    assert_eq!(q.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
    assert!(q.q[0].is_zero() && q.q[1].is_zero());
    assert_eq!(q.b[0][1], qr(1, 2));
}

#[test]
fn rescale_u_by_two() {
    let l = ade_lattice("U").unwrap().rescale(2).unwrap();
    assert_eq!(*l.gram(), int_mat(&[&[0i64, 2], &[2, 0]]));
}

#[test]
fn d11_e6_discriminant_group_is_z12() {
    let l = ade_lattice("D11").unwrap().direct_sum(&ade_lattice("E6").unwrap());
    let q = discriminant_form(&l).unwrap();
    assert_eq!(q.invariant_factors, vec![BigInt::from(12)]);
}

#[test]
fn complement_of_u_in_u_plus_e8() {
    let u = ade_lattice("U").unwrap();
    let e8 = ade_lattice("E8").unwrap();
    let l = u.direct_sum(&e8);
    let basis = int_mat(&[
        &[1i64, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]);
    let comp = l.orthogonal_complement(&basis).unwrap();
    assert_eq!(comp.rank(), 8);
    assert_eq!(comp.det(), e8.det());
    assert!(comp.is_negative_definite());
    let q = discriminant_form(&comp).unwrap();
    assert_eq!(q.rank(), 0);
}

#[test]
fn complement_in_rank_two_sums() {
    let l = lattice_from_symbol("[-4]+[-2]").unwrap();
    let comp = l.orthogonal_complement(&int_mat(&[&[1i64, 0]])).unwrap();
    assert_eq!(*comp.gram(), int_mat(&[&[-2i64]]));

    let a1a1 = lattice_from_symbol("A1+A1").unwrap();
    let comp = a1a1.orthogonal_complement(&int_mat(&[&[1i64, 1]])).unwrap();
    assert_eq!(*comp.gram(), int_mat(&[&[-4i64]]));
}

#[test]
fn disc_form_of_direct_sum_has_product_profile() {
    let l1 = ade_lattice("A2").unwrap();
    let l2 = ade_lattice("D4").unwrap();
    let sum = l1.direct_sum(&l2);
    let qs = discriminant_form(&sum).unwrap();
    let qp = discriminant_form(&l1)
        .unwrap()
        .direct_sum(&discriminant_form(&l2).unwrap());
    assert_eq!(qs.order(), qp.order());
    assert_eq!(qs.value_profile(), qp.value_profile());
}

#[test]
fn disc_order_equals_abs_det() {
    for sym in ["A3", "A5", "D5", "D8", "E7"] {
        let l = ade_lattice(sym).unwrap();
        let q = discriminant_form(&l).unwrap();
        assert_eq!(q.order(), l.disc_order(), "{sym}");
    }
}

#[test]
fn q_denominators_divide_twice_exponent() {
    for sym in ["A4", "A6", "D7", "D9", "E6"] {
        let l = ade_lattice(sym).unwrap();
        let q = discriminant_form(&l).unwrap();
        let bound = BigInt::from(2) * q.exponent();
        let mut coords = vec![BigInt::zero(); q.rank()];
        loop {
            let v = q.q_of(&coords);
            assert!((&bound % v.denom()).is_zero(), "{sym}: q = {v}");
            if !lattice_core::disc::increment(&mut coords, &q.invariant_factors) {
                break;
            }
        }
    }
}

mod proptests {
    use super::*;
    use proptest::prelude::*;

    /// Random unimodular matrix as a product of elementary shears/swaps.
    fn unimodular(n: usize, steps: &[(u8, u8, i8)]) -> Vec<Vec<BigInt>> {
        let mut m = lattice_core::mat::identity(n);
        for &(i, j, c) in steps {
            let (i, j) = (i as usize % n, j as usize % n);
            if i == j {
                continue;
            }
            for t in 0..n {
                let x = &m[j][t] * BigInt::from(c);
                m[i][t] += x;
            }
        }
        m
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn signature_is_basis_invariant(
            steps in proptest::collection::vec((0u8..6, 0u8..6, -2i8..=2), 1..8),
            which in 0usize..3,
        ) {
            let l = match which {
                0 => lattice_from_symbol("U+A2").unwrap(),
                1 => ade_lattice("D5").unwrap(),
                _ => lattice_from_symbol("U+U(2)").unwrap(),
            };
            let b = unimodular(l.rank(), &steps);
            let moved = l.transform(&b).unwrap();
            prop_assert_eq!(moved.signature().unwrap(), l.signature().unwrap());
            prop_assert_eq!(moved.det(), l.det());
        }
    }
}

#[test]
fn rank_zero_is_direct_sum_identity() {
    let zero = GramLattice::new(Vec::new()).unwrap();
    let a2 = ade_lattice("A2").unwrap();
    assert_eq!(*zero.direct_sum(&a2).gram(), *a2.gram());
    assert!(zero.det().is_one());
}

#[test]
fn lattice_file_round_trip() {
    let l = lattice_from_symbol("U+U(2)").unwrap();
    let text = lattice_core::io::format_lattice(&l);
    let back = lattice_core::io::parse_lattice(&text).unwrap();
    assert_eq!(back.gram(), l.gram());
    assert!(lattice_core::io::parse_lattice("2\n0 1\n1").is_err());
    assert!(lattice_core::io::parse_lattice("# comment\n1\n-2\n").is_ok());
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(ade_lattice("D3").is_err());
    assert!(ade_lattice("E9").is_err());
    assert!(ade_lattice("[3]").is_err());
    assert!(ade_lattice("A1").unwrap().rescale(0).is_err());
    assert!(GramLattice::from_i64_rows(&[&[2, 2], &[2, 2]]).is_err()); // degenerate
    assert!(GramLattice::from_i64_rows(&[&[1]]).is_err()); // odd
    assert!(GramLattice::from_i64_rows(&[&[0, 1], &[2, 0]]).is_err()); // asymmetric
}
