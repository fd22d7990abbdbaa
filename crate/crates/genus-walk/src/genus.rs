//! Genus descriptors and enumeration of a full genus by neighbor walking
//! with the analytic mass as the completeness certificate.
//!
//! The walk scans the isotropic lines of each class mod p exhaustively,
//! skipping whole orbits under the automorphism group of the class: one
//! neighbor is computed per orbit, and the orbit is marked in a bitset
//! indexed by the base p encoding of the line representative. This is
//! what makes classes with very large automorphism groups reachable:
//! they arise from only a tiny fraction of the lines, but the orbit
//! skipping walks past the abundant classes at almost no cost. Primes
//! with too many lines to index fall back to random sampling, and primes
//! dividing the determinant are allowed, with each neighbor checked
//! against the genus descriptor. The accumulated mass sum 1/|Aut|
//! certifies completeness against the Smith-Minkowski-Siegel mass.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use finqform::CompactForm;
use lattice_core::mat::IMat;
use lattice_core::{discriminant_form, GramLattice};

use crate::error::{GenusError, Result};
use crate::neighbor::{self, reduce_same_sign};

/// Signature plus discriminant form class: identifies a genus.
#[derive(Debug, Clone)]
pub struct GenusDescriptor {
    pub rank: usize,
    /// (positive, negative) inertia indices.
    pub signature: (usize, usize),
    pub det: BigInt,
    pub disc_form: CompactForm,
}

impl GenusDescriptor {
    pub fn of(l: &GramLattice) -> Result<GenusDescriptor> {
        let signature = l.signature()?;
        Ok(GenusDescriptor {
            rank: l.rank(),
            signature,
            det: l.det(),
            disc_form: CompactForm::from_form(&discriminant_form(l)?)?,
        })
    }

    pub fn matches(&self, l: &GramLattice) -> Result<bool> {
        if l.rank() != self.rank || l.signature()? != self.signature || l.det() != self.det {
            return Ok(false);
        }
        let q = CompactForm::from_form(&discriminant_form(l)?)?;
        Ok(finqform::are_isometric(&self.disc_form, &q)?.is_some())
    }
}

/// The genus of frames of a K3 surface with transcendental lattice T:
/// negative definite even lattices of rank 20 - rank(T) whose discriminant
/// form is -q_T.
pub fn frame_genus_descriptor(t: &GramLattice) -> Result<GenusDescriptor> {
    let (pos, neg) = t.signature()?;
    if pos != 2 || neg + 2 != t.rank() {
        return Err(GenusError::BadTranscendentalSignature);
    }
    let rank = 20 - t.rank();
    let det_sign = if rank % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Ok(GenusDescriptor {
        rank,
        signature: (0, rank),
        // |det W| = |det T|; sign from negative definiteness.
        det: det_sign * t.det().abs(),
        disc_form: CompactForm::from_form(&discriminant_form(t)?.neg())?,
    })
}

pub fn in_same_genus(l1: &GramLattice, l2: &GramLattice) -> Result<bool> {
    GenusDescriptor::of(l1)?.matches(l2)
}

/// One isomorphism class in a genus.
#[derive(Debug, Clone)]
pub struct GenusClass {
    pub lattice: GramLattice,
    pub aut_order: BigUint,
}

#[derive(Debug, Clone)]
pub struct GenusList {
    pub classes: Vec<GenusClass>,
    /// Accumulated mass, equal to the analytic mass on success.
    pub mass: BigRational,
}

#[derive(Debug, Clone)]
pub struct WalkOptions {
    /// Neighbor primes to use, in order; empty means automatic (small
    /// primes whose line count admits an exhaustive scan, then small
    /// primes coprime to the determinant).
    pub primes: Vec<u64>,
    pub rng_seed: u64,
    /// Isotropic lines sampled per class and prime when the line count
    /// is too large for an exhaustive scan.
    pub samples_per_class: usize,
    pub verbose: bool,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions { primes: Vec::new(), rng_seed: 17, samples_per_class: 400, verbose: false }
    }
}

/// Largest p^rank for which lines are indexed in a bitset (32 MiB).
const MAX_INDEXED_LINES: u128 = 1 << 28;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn indexable(p: u64, rank: usize) -> bool {
    let mut total: u128 = 1;
    for _ in 0..rank {
        total = total.saturating_mul(p as u128);
        if total > MAX_INDEXED_LINES {
            return false;
        }
    }
    true
}

/// Small primes to walk with: scannable primes first (including primes
/// dividing the determinant, whose neighbors get filtered by descriptor),
/// then a few coprime primes for random sampling.
fn auto_primes(det: &BigInt, rank: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for p in 2u64..50 {
        if is_prime(p) && indexable(p, rank) {
            out.push(p);
        }
    }
    let mut p = 2u64;
    let mut coprime = 0;
    while coprime < 3 {
        if is_prime(p) && !(det.abs() % BigInt::from(p)).is_zero() {
            if !out.contains(&p) {
                out.push(p);
            }
            coprime += 1;
        }
        p += 1;
    }
    out
}

/// Positive definite i64 gram of a class, for the definite algorithms.
fn pos_gram(l: &GramLattice) -> IMat {
    let g = l.gram();
    if !g.is_empty() && g[0][0].is_negative() {
        g.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect()
    } else {
        g.clone()
    }
}

struct ClassRec {
    lattice: GramLattice,
    pos: IMat,
    theta: Vec<(i64, usize)>,
    roots: String,
    aut_order: BigUint,
    aut_gens: Vec<Vec<Vec<i64>>>,
    /// Primes at which this class has been fully scanned or sampled.
    visited: BTreeSet<u64>,
}

/// Enumerate the genus of an even definite lattice by neighbor walking;
/// terminates exactly when the accumulated mass reaches the analytic
/// Smith-Minkowski-Siegel mass.
///
/// Classes are first deduplicated by cheap invariants (theta start and
/// root type); the mass certificate catches any two classes these fail
/// to separate, in which case the walk is repeated with full isometry
/// tests. Neither mode can certify a wrong class list.
pub fn enumerate_genus(seed: &GramLattice, opts: &WalkOptions) -> Result<GenusList> {
    match enumerate_genus_strictness(seed, opts, false) {
        Err(GenusError::WalkIncomplete) => enumerate_genus_strictness(seed, opts, true),
        other => other,
    }
}

fn enumerate_genus_strictness(
    seed: &GramLattice,
    opts: &WalkOptions,
    strict: bool,
) -> Result<GenusList> {
    let (p, n) = seed.signature()?;
    if p != 0 && n != 0 {
        return Err(GenusError::NotDefinite);
    }
    let rank = seed.rank();
    let reduced = GramLattice::new(reduce_same_sign(seed.gram()))?;
    let target = crate::mass::mass(&pos_gram(&reduced))?;
    let descriptor = GenusDescriptor::of(&reduced)?;
    let primes = if opts.primes.is_empty() {
        auto_primes(&seed.det(), rank)
    } else {
        opts.primes.clone()
    };
    for &p in &primes {
        if !is_prime(p) {
            return Err(GenusError::NotPrime(p));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    let mut classes: Vec<ClassRec> = Vec::new();
    let mut mass_acc = BigRational::zero();
    add_class(&mut classes, &mut mass_acc, reduced, opts.verbose)?;
    'walk: loop {
        if mass_acc == target {
            break;
        }
        let mut progressed = false;
        for &p in &primes {
            let ramified = (seed.det().abs() % BigInt::from(p)).is_zero();
            let mut idx = 0;
            while idx < classes.len() {
                if mass_acc == target {
                    break 'walk;
                }
                if classes[idx].visited.contains(&p) {
                    idx += 1;
                    continue;
                }
                classes[idx].visited.insert(p);
                progressed = true;
                let filter = if ramified { Some(&descriptor) } else { None };
                if indexable(p, rank) {
                    scan_class(&mut classes, idx, p, filter, &mut mass_acc, &target, opts, strict)?;
                } else if !ramified {
                    sample_class(&mut classes, idx, p, &mut rng, &mut mass_acc, &target, opts, strict)?;
                }
                idx += 1;
            }
        }
        if !progressed {
            break;
        }
    }
    if mass_acc != target {
        return Err(GenusError::WalkIncomplete);
    }
    Ok(GenusList {
        classes: classes
            .into_iter()
            .map(|c| GenusClass { lattice: c.lattice, aut_order: c.aut_order })
            .collect(),
        mass: mass_acc,
    })
}

/// Exhaustive scan of the isotropic lines of classes[idx] mod p, one
/// neighbor per orbit of the automorphism group.
fn scan_class(
    classes: &mut Vec<ClassRec>,
    idx: usize,
    p: u64,
    filter: Option<&GenusDescriptor>,
    mass_acc: &mut BigRational,
    target: &BigRational,
    opts: &WalkOptions,
    strict: bool,
) -> Result<()> {
    let src = classes[idx].lattice.clone();
    let n = src.rank();
    let gmod: Vec<Vec<u64>> = classes[idx]
        .pos
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&BigInt::from(p)).to_u64().unwrap()).collect())
        .collect();
    // Half diagonal mod p (the lattice is even), so that q(v) mod p is
    // well defined from the mod p reduction for every p including 2.
    let hdiag: Vec<u64> = classes[idx]
        .pos
        .iter()
        .enumerate()
        .map(|(i, r)| (&r[i] / BigInt::from(2)).mod_floor(&BigInt::from(p)).to_u64().unwrap())
        .collect();
    let gens: Vec<Vec<Vec<u64>>> = classes[idx]
        .aut_gens
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
                .collect()
        })
        .collect();
    let inv = inverse_table(p);
    let total: usize = (0..n).fold(1usize, |acc, _| acc * p as usize);
    let mut marked = vec![0u64; total.div_ceil(64)];
    let scan_start = std::time::Instant::now();
    let mut stat_nb = 0u64;
    // Canonical representatives: first nonzero coordinate 1 at position
    // k, free coordinates above.
    let mut v = vec![0u64; n];
    for k in (0..n).rev() {
        v[k] = 1;
        loop {
            let enc = encode(&v, p);
            if !bit(&marked, enc) && is_isotropic_mod(&gmod, &hdiag, &v, p) {
                stat_nb += 1;
                mark_orbit(&mut marked, &gens, &inv, &v, p);
                if let Some(nb) = neighbor::neighbor_try(&src, p, &v)? {
                    let accept = match filter {
                        Some(d) => d.matches(&nb)?,
                        None => true,
                    };
                    if accept && is_new_class(classes, &nb, strict)? {
                        add_class(classes, mass_acc, nb, opts.verbose)?;
                        if *mass_acc == *target {
                            return Ok(());
                        }
                    }
                }
            }
            if !advance(&mut v, k, p) {
                break;
            }
        }
        v[k] = 0;
    }
    if opts.verbose {
        eprintln!(
            "genus walk: scanned class {} at p={} ({} orbits, {:?})",
            idx + 1,
            p,
            stat_nb,
            scan_start.elapsed()
        );
    }
    Ok(())
}

/// Random line sampling for primes whose lines cannot be indexed.
fn sample_class(
    classes: &mut Vec<ClassRec>,
    idx: usize,
    p: u64,
    rng: &mut ChaCha8Rng,
    mass_acc: &mut BigRational,
    target: &BigRational,
    opts: &WalkOptions,
    strict: bool,
) -> Result<()> {
    let src = classes[idx].lattice.clone();
    for _ in 0..opts.samples_per_class {
        let v = neighbor::random_isotropic_line(&src, p, rng);
        let nb = neighbor::neighbor_of(&src, p, &v)?;
        if is_new_class(classes, &nb, strict)? {
            add_class(classes, mass_acc, nb, opts.verbose)?;
            if *mass_acc == *target {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Odometer over the free coordinates k+1..n; false when wrapped.
fn advance(v: &mut [u64], k: usize, p: u64) -> bool {
    let n = v.len();
    let mut i = n;
    while i > k + 1 {
        i -= 1;
        v[i] += 1;
        if v[i] < p {
            return true;
        }
        v[i] = 0;
    }
    false
}

fn encode(v: &[u64], p: u64) -> usize {
    v.iter().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(set: &mut [u64], i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

fn inverse_table(p: u64) -> Vec<u64> {
    let mut inv = vec![0u64; p as usize];
    for a in 1..p {
        inv[a as usize] = (1..p).find(|&b| a * b % p == 1).unwrap();
    }
    inv
}

/// q(v) mod p from the reduced gram and half diagonal.
fn is_isotropic_mod(gmod: &[Vec<u64>], hdiag: &[u64], v: &[u64], p: u64) -> bool {
    let n = v.len();
    let mut s: u64 = 0;
    for i in 0..n {
        if v[i] == 0 {
            continue;
        }
        s = (s + hdiag[i] * v[i] % p * v[i]) % p;
        for j in i + 1..n {
            if v[j] != 0 {
                s = (s + gmod[i][j] * v[i] % p * v[j]) % p;
            }
        }
    }
    s == 0
}

/// Mark the orbit of the line of v under the generators, acting mod p
/// and renormalizing to the canonical representative.
fn mark_orbit(
    marked: &mut [u64],
    gens: &[Vec<Vec<u64>>],
    inv: &[u64],
    v: &[u64],
    p: u64,
) {
    let n = v.len();
    let start = encode(v, p);
    set_bit(marked, start);
    let mut stack: Vec<usize> = vec![start];
    let mut w = vec![0u64; n];
    let mut img = vec![0u64; n];
    while let Some(enc) = stack.pop() {
        decode(enc, p, &mut w);
        for g in gens {
            // Row i of g is the image of basis vector i.
            for x in img.iter_mut() {
                *x = 0;
            }
            for i in 0..n {
                if w[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    img[j] = (img[j] + w[i] * g[i][j]) % p;
                }
            }
            canonicalize(&mut img, inv, p);
            let e = encode(&img, p);
            if !bit(marked, e) {
                set_bit(marked, e);
                stack.push(e);
            }
        }
    }
}

fn decode(mut enc: usize, p: u64, out: &mut [u64]) {
    for i in (0..out.len()).rev() {
        out[i] = (enc % p as usize) as u64;
        enc /= p as usize;
    }
}

/// Scale so that the first nonzero coordinate is 1.
fn canonicalize(v: &mut [u64], inv: &[u64], p: u64) {
    let Some(first) = v.iter().position(|&c| c != 0) else {
        return;
    };
    let s = inv[v[first] as usize];
    if s != 1 {
        for c in v.iter_mut() {
            *c = *c * s % p;
        }
    }
}

fn is_new_class(classes: &[ClassRec], nb: &GramLattice, strict: bool) -> Result<bool> {
    let npos = pos_gram(nb);
    let theta = definite::theta_profile(&npos, 4);
    let roots = root_symbol_of(&npos)?;
    for c in classes {
        if c.theta != theta || c.roots != roots {
            continue;
        }
        if !strict || definite::isometric(&c.pos, &npos)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Root type of a positive definite gram, for the class key.
fn root_symbol_of(pos: &IMat) -> Result<String> {
    let neg: IMat = pos.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
    let l = GramLattice::new(neg)?;
    Ok(definite::root_classification(&l).symbol())
}

fn add_class(
    classes: &mut Vec<ClassRec>,
    mass_acc: &mut BigRational,
    lattice: GramLattice,
    verbose: bool,
) -> Result<()> {
    let pos = pos_gram(&lattice);
    let theta = definite::theta_profile(&pos, 4);
    let roots = root_symbol_of(&pos)?;
    let aut = definite::automorphism_group(&pos)?;
    *mass_acc += BigRational::new(BigInt::one(), BigInt::from(aut.order.clone()));
    if verbose {
        eprintln!(
            "genus walk: class {} found, |Aut| {}, mass {}",
            classes.len() + 1,
            aut.order,
            mass_acc
        );
    }
    classes.push(ClassRec {
        lattice,
        pos,
        theta,
        roots,
        aut_order: aut.order,
        aut_gens: aut.generators,
        visited: BTreeSet::new(),
    });
    Ok(())
}
