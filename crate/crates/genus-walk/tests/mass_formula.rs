use num_bigint::BigInt;
use num_rational::BigRational;

use genus_walk::mass;
use lattice_core::lattice_from_symbol;
use lattice_core::mat::IMat;

fn q(num: &str, den: &str) -> BigRational {
    BigRational::new(num.parse().unwrap(), den.parse().unwrap())
}

fn identity_gram(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect()
}

fn pos_gram(symbol: &str) -> IMat {
    lattice_from_symbol(symbol)
        .unwrap()
        .gram()
        .iter()
        .map(|row| row.iter().map(|x| -x.clone()).collect())
        .collect()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn unit_lattice_masses() {
    // mass(I_n) = 1/(2^n n!) for n <= 8 (one class, the full signed
    // permutation group).
    for n in 2..=8u64 {
        let want = BigRational::new(
            BigInt::from(1),
            BigInt::from(2).pow(n as u32) * factorial(n),
        );
        assert_eq!(mass(&identity_gram(n as usize)).unwrap(), want, "I_{n}");
    }
    // I_9 and I_10 pick up the E8 classes.
    assert_eq!(mass(&identity_gram(9)).unwrap(), q("17", "2786918400"));
    let i10 = BigRational::new(BigInt::from(1), BigInt::from(2).pow(10) * factorial(10))
        + BigRational::new(BigInt::from(1), BigInt::from(696729600u64) * BigInt::from(8));
    assert_eq!(mass(&identity_gram(10)).unwrap(), i10);
}

#[test]
fn root_lattice_masses() {
    // Single-class genera: mass = 1/|O(L)|.
    let cases = [
        ("A2", "12"),
        ("A3", "48"),
        ("A4", "240"),
        ("A5", "1440"),
        ("D4", "1152"),
        ("D5", "3840"),
        ("D6", "46080"),
        ("D8", "10321920"),
        ("E6", "103680"),
        ("E7", "2903040"),
        ("E8", "696729600"),
    ];
    for (symbol, den) in cases {
        assert_eq!(mass(&pos_gram(symbol)).unwrap(), q("1", den), "{symbol}");
    }
}

#[test]
fn rescaled_and_glued_masses() {
    // E8(2) is alone in its genus with the same automorphism group.
    assert_eq!(mass(&pos_gram("E8(2)")).unwrap(), q("1", "696729600"));
    // E7 + A1.
    assert_eq!(mass(&pos_gram("E7+A1")).unwrap(), q("1", "5806080"));
}

#[test]
fn frame_genus_masses() {
    // The four case-study frame genera with published mass fractions,
    // evaluated on the root-lattice seeds.
    assert_eq!(
        mass(&pos_gram("D8+E8")).unwrap(),
        q("505121", "12340763622899712000")
    );
    assert_eq!(
        mass(&pos_gram("D16")).unwrap(),
        q("505121", "12340763622899712000")
    );
    assert_eq!(
        mass(&pos_gram("D4+D4+E8")).unwrap(),
        q("64150367", "1708721117016883200")
    );
    assert_eq!(
        mass(&pos_gram("D4+D4+D6")).unwrap(),
        q("1306681", "64210599936000")
    );
    assert_eq!(
        mass(&pos_gram("D11+E6")).unwrap(),
        q("123970110547", "1110668726060974080000")
    );
}

#[test]
fn mass_is_a_genus_invariant() {
    // D8+E8 and D16 lie in one genus; A-series members of distinct
    // genera get distinct masses.
    assert_eq!(
        mass(&pos_gram("D8+E8")).unwrap(),
        mass(&pos_gram("D16")).unwrap()
    );
    assert_ne!(mass(&pos_gram("A2")).unwrap(), mass(&pos_gram("A3")).unwrap());
}
