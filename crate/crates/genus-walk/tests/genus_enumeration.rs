use num_bigint::BigInt;
use num_rational::BigRational;

use genus_walk::{
    enumerate_genus, frame_genus_descriptor, in_same_genus, neighbors, GenusDescriptor,
    WalkOptions,
};
use lattice_core::lattice_from_symbol;

fn sym(s: &str) -> lattice_core::GramLattice {
    lattice_from_symbol(s).unwrap()
}

#[test]
fn e8_two_neighbors_stay_e8() {
    // E8 is alone in its genus, so every 2-neighbor is a copy of E8.
    let e8 = sym("E8");
    let nbs = neighbors(&e8, 2).unwrap();
    assert!(!nbs.is_empty());
    for nb in &nbs {
        assert!(in_same_genus(&e8, nb).unwrap());
        assert!(
            definite::isometric(e8.gram(), nb.gram()).unwrap().is_some(),
            "2-neighbor of E8 not isometric to E8"
        );
    }
}

#[test]
fn neighbors_preserve_genus_descriptor() {
    for (symbol, p) in [("A3+A1", 3), ("D4+[-4]", 3), ("A2+A2", 5)] {
        let l = sym(symbol);
        let desc = GenusDescriptor::of(&l).unwrap();
        let nbs = neighbors(&l, p).unwrap();
        assert!(!nbs.is_empty(), "{symbol}");
        for nb in &nbs {
            assert_eq!(nb.det(), l.det(), "{symbol}: determinant changed");
            assert!(desc.matches(nb).unwrap(), "{symbol}: genus changed");
        }
    }
}

#[test]
fn coprimality_is_enforced() {
    let l = sym("A3"); // det 4
    assert!(neighbors(&l, 2).is_err());
    assert!(neighbors(&l, 4).is_err());
}

#[test]
fn e8_genus_is_a_single_class() {
    let list = enumerate_genus(&sym("E8"), &WalkOptions::default()).unwrap();
    assert_eq!(list.classes.len(), 1);
    assert_eq!(
        list.mass,
        BigRational::new(BigInt::from(1), BigInt::from(696729600u64))
    );
}

#[test]
fn barth_peters_frame_genus_has_six_classes() {
    let list = enumerate_genus(&sym("D8+E8"), &WalkOptions::default()).unwrap();
    assert_eq!(list.classes.len(), 6);
    assert_eq!(
        list.mass,
        BigRational::new(
            "505121".parse().unwrap(),
            "12340763622899712000".parse().unwrap()
        )
    );
    // The class list contains the other root-lattice row, D16.
    let d16 = sym("D16");
    assert!(list
        .classes
        .iter()
        .any(|c| definite::isometric(c.lattice.gram(), d16.gram()).unwrap().is_some()));
    // Every class carries the frame discriminant form of U + U(2).
    let desc = frame_genus_descriptor(&sym("U+U(2)")).unwrap();
    for c in &list.classes {
        assert!(desc.matches(&c.lattice).unwrap());
    }
}

#[test]
fn frame_descriptor_shapes() {
    let d = frame_genus_descriptor(&sym("U+U(2)")).unwrap();
    assert_eq!(d.rank, 16);
    assert_eq!(d.signature, (0, 16));
    assert!(d.matches(&sym("D8+E8")).unwrap());

    let d = frame_genus_descriptor(&sym("U+[12]")).unwrap();
    assert_eq!(d.rank, 17);
    assert_eq!(d.disc_form.inv, vec![12]);
    assert!(d.matches(&sym("D11+E6")).unwrap());

    // Wrong signature is rejected.
    assert!(frame_genus_descriptor(&sym("D4")).is_err());
    // A lattice outside the genus does not match.
    let d = frame_genus_descriptor(&sym("U+U(2)")).unwrap();
    assert!(!d.matches(&sym("D16+[-2]")).unwrap());
    assert!(!d.matches(&sym("A15+[-16]")).unwrap());
}

#[test]
fn remaining_seed_membership() {
    // Seeds of the other case studies lie in their frame genera.
    for (t, w) in [
        ("U(2)+U(2)", "D4+D4+E8"),
        ("U(2)+U(2)+[-4]", "D4+D4+D7"),
        ("U(2)+U(2)+[-2]+[-2]", "D4+D4+D6"),
        ("U+[12]", "D11+E6"),
    ] {
        let d = frame_genus_descriptor(&sym(t)).unwrap();
        assert!(d.matches(&sym(w)).unwrap(), "{t} vs {w}");
    }
}
