//! Automorphism groups and isometry testing of definite lattices by
//! backtracking over images of basis vectors among equal-norm short
//! vectors (Plesken-Souvignier style), with fingerprint pruning. The group
//! order comes out exactly from the orbit sizes of the point stabilizer
//! chain.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use lattice_core::mat::IMat;

use crate::shortvec::short_vectors;

/// Search budget: number of backtracking nodes across one operation.
pub const DEFAULT_NODE_CAP: u64 = 2_000_000_000;

/// Partition refinement of the short vectors: a reference block is usable
/// when it is at most this large, rounds use at most this many reference
/// vectors in total, and refinement stops after this many rounds or when
/// the partition is stable.
const REF_BLOCK_CAP: usize = 2_000;
const REF_TOTAL_CAP: usize = 2_000;
const REFINE_ROUNDS: usize = 4;

#[derive(Debug, Clone)]
pub struct AutGroup {
    /// Generators as integer matrices; row i is the image of basis vector i.
    pub generators: Vec<Vec<Vec<i64>>>,
    pub order: BigUint,
}

#[derive(Debug)]
pub enum AutError {
    NodeCapExceeded,
}

impl std::fmt::Display for AutError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "backtracking node cap exceeded")
    }
}
impl std::error::Error for AutError {}

/// Working data of one definite lattice: gram as i64, short vectors of all
/// norms up to the largest basis norm (both signs), their G-products and
/// fingerprints.
struct Env {
    n: usize,
    gram: Vec<Vec<i64>>,
    /// All short vectors, both signs.
    vecs: Vec<Vec<i64>>,
    /// gv[k] = gram * vecs[k], so that <vecs[a], vecs[b]> = vecs[a]·gv[b].
    gv: Vec<Vec<i64>>,
    norms: Vec<i64>,
    /// Invariant class of each vector under iterated partition refinement:
    /// start from the norm classes and repeatedly split by the multisets
    /// of inner products with small classes. Label ids are assigned by
    /// sorting the refinement data, so environments of isometric lattices
    /// built with the same bound get matching ids.
    labels: Vec<u32>,
    /// Label of each basis vector (every basis vector is in vecs).
    basis_label: Vec<u32>,
}

fn to_i64_gram(gram: &IMat) -> Vec<Vec<i64>> {
    gram.iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_i64().expect("gram entry out of machine range"))
                .collect()
        })
        .collect()
}

impl Env {
    fn new(gram: &IMat) -> Env {
        let g = to_i64_gram(gram);
        let n = g.len();
        let maxdiag = (0..n).map(|i| g[i][i]).max().unwrap_or(0);
        Env::with_bound(gram, maxdiag)
    }

    /// Environments compared against each other must share the bound so
    /// that vector counts and fingerprints are comparable.
    fn with_bound(gram: &IMat, bound: i64) -> Env {
        let g = to_i64_gram(gram);
        let n = g.len();
        let mut vecs: Vec<Vec<i64>> = Vec::new();
        for (_, v) in short_vectors(gram, bound) {
            let neg: Vec<i64> = v.iter().map(|&c| -c).collect();
            vecs.push(v);
            vecs.push(neg);
        }
        let gv: Vec<Vec<i64>> = vecs
            .iter()
            .map(|v| {
                (0..n)
                    .map(|i| (0..n).map(|j| g[i][j] * v[j]).sum())
                    .collect()
            })
            .collect();
        let norms: Vec<i64> = vecs
            .iter()
            .zip(&gv)
            .map(|(v, gv)| v.iter().zip(gv).map(|(a, b)| a * b).sum())
            .collect();
        let labels = refine_labels(&vecs, &gv, &norms);
        let mut basis_label = vec![0u32; n];
        for (k, v) in vecs.iter().enumerate() {
            if let Some(i) = unit_index(v) {
                basis_label[i] = labels[k];
            }
        }
        Env { n, gram: g, vecs, gv, norms, labels, basis_label }
    }

    fn ip(&self, v: &[i64], k: usize) -> i64 {
        v.iter().zip(&self.gv[k]).map(|(a, b)| a * b).sum()
    }
}

/// Index i when v is the i-th standard basis vector.
fn unit_index(v: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &c) in v.iter().enumerate() {
        match c {
            0 => {}
            1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

/// Iterated invariant partition refinement. Start from the norm classes;
/// each round splits every class by the multiset of inner products with
/// the reference set (the smallest classes up to the caps). Reference
/// classes are chosen by (size, label), which is invariant, so isometric
/// lattices refine identically. Product multisets are folded into a hash;
/// collisions can only merge classes, which weakens pruning but never
/// drops a true candidate.
fn refine_labels(vecs: &[Vec<i64>], gv: &[Vec<i64>], norms: &[i64]) -> Vec<u32> {
    use std::hash::{Hash, Hasher};
    let m = vecs.len();
    let mut distinct: Vec<i64> = norms.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut labels: Vec<u32> = norms
        .iter()
        .map(|x| distinct.binary_search(x).unwrap() as u32)
        .collect();
    let mut nlabels = distinct.len();
    for _ in 0..REFINE_ROUNDS {
        let mut blocks: HashMap<u32, Vec<usize>> = HashMap::new();
        for (k, &l) in labels.iter().enumerate() {
            blocks.entry(l).or_default().push(k);
        }
        let mut sizes: Vec<(usize, u32)> = blocks.iter().map(|(&l, b)| (b.len(), l)).collect();
        sizes.sort_unstable();
        let mut refs: Vec<u32> = Vec::new();
        let mut total = 0;
        for &(len, l) in &sizes {
            if len > REF_BLOCK_CAP || total + len > REF_TOTAL_CAP {
                break;
            }
            total += len;
            refs.push(l);
        }
        refs.sort_unstable();
        if refs.is_empty() {
            break;
        }
        let mut sigs: Vec<(u32, u64)> = Vec::with_capacity(m);
        for k in 0..m {
            let mut h = std::collections::hash_map::DefaultHasher::new();
            for &rl in &refs {
                let mut ps: Vec<i64> = blocks[&rl]
                    .iter()
                    .map(|&r| vecs[k].iter().zip(&gv[r]).map(|(a, b)| a * b).sum())
                    .collect();
                ps.sort_unstable();
                ps.hash(&mut h);
            }
            sigs.push((labels[k], h.finish()));
        }
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == nlabels {
            break;
        }
        nlabels = sorted.len();
        for k in 0..m {
            labels[k] = sorted.binary_search(&sigs[k]).unwrap() as u32;
        }
    }
    labels
}

/// Candidate images per basis level of the source lattice among short
/// vectors of the target environment: equal refinement label.
fn base_candidates(src: &Env, dst: &Env) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::with_capacity(src.n);
    for i in 0..src.n {
        let want = src.basis_label[i];
        let level: Vec<usize> = (0..dst.vecs.len())
            .filter(|&k| dst.labels[k] == want)
            .collect();
        if level.is_empty() {
            return None;
        }
        out.push(level);
    }
    Some(out)
}

struct Search<'a> {
    src: &'a Env,
    dst: &'a Env,
    nodes: u64,
    cap: u64,
}

fn close_orbit(orbit: &mut HashSet<Vec<i64>>, gens: &[Vec<Vec<i64>>]) {
    let mut frontier: Vec<Vec<i64>> = orbit.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = apply(&x, g);
            if orbit.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
}

impl<'a> Search<'a> {
    /// Complete a partial assignment to a full isometry, or prove that
    /// none exists. placed[t] is the image of basis vector t of the
    /// source (or None); lists[t] holds the candidate images still
    /// consistent with the placed vectors. Forward checking: placing a
    /// vector filters every open list, and the next level is always the
    /// one with the fewest candidates left, so contradictions surface as
    /// an emptied list instead of deep backtracking.
    fn extend(
        &mut self,
        placed: &mut Vec<Option<Vec<i64>>>,
        lists: &[(usize, Vec<u32>)],
    ) -> Result<Option<Vec<Vec<i64>>>, AutError> {
        let Some(pick) = lists.iter().position_min_by_key(|(_, l)| l.len()) else {
            let imgs: Vec<Vec<i64>> = placed.iter().map(|x| x.clone().unwrap()).collect();
            return Ok(Some(imgs));
        };
        let (j, ref js_cands) = lists[pick];
        for &k in js_cands {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(AutError::NodeCapExceeded);
            }
            let img = &self.dst.vecs[k as usize];
            let mut next: Vec<(usize, Vec<u32>)> = Vec::with_capacity(lists.len() - 1);
            let mut dead = false;
            for (t, l) in lists {
                if *t == j {
                    continue;
                }
                let want = self.src.gram[*t][j];
                let filtered: Vec<u32> = l
                    .iter()
                    .copied()
                    .filter(|&c| self.dst.ip(img, c as usize) == want)
                    .collect();
                if filtered.is_empty() {
                    dead = true;
                    break;
                }
                next.push((*t, filtered));
            }
            if dead {
                continue;
            }
            placed[j] = Some(img.clone());
            let found = self.extend(placed, &next)?;
            placed[j] = None;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Search from a forced prefix: levels 0..prefix.len() are assigned
    /// (as vectors in target coordinates); the rest start from their
    /// base candidate lists filtered against the prefix.
    fn run(
        &mut self,
        cands: &[Vec<usize>],
        prefix: &[Vec<i64>],
    ) -> Result<Option<Vec<Vec<i64>>>, AutError> {
        let n = self.src.n;
        let mut placed: Vec<Option<Vec<i64>>> = vec![None; n];
        for (t, v) in prefix.iter().enumerate() {
            placed[t] = Some(v.clone());
        }
        let mut lists: Vec<(usize, Vec<u32>)> = Vec::with_capacity(n - prefix.len());
        for j in prefix.len()..n {
            let l: Vec<u32> = cands[j]
                .iter()
                .filter(|&&k| {
                    prefix
                        .iter()
                        .enumerate()
                        .all(|(t, v)| self.dst.ip(v, k) == self.src.gram[j][t])
                })
                .map(|&k| k as u32)
                .collect();
            if l.is_empty() {
                return Ok(None);
            }
            lists.push((j, l));
        }
        self.extend(&mut placed, &lists)
    }
}

/// Index of the element minimizing the key, without external crates.
trait PositionMin: Iterator + Sized {
    fn position_min_by_key<K: Ord, F: FnMut(&Self::Item) -> K>(self, f: F) -> Option<usize>;
}

impl<I: Iterator> PositionMin for I {
    fn position_min_by_key<K: Ord, F: FnMut(&Self::Item) -> K>(
        self,
        mut f: F,
    ) -> Option<usize> {
        let mut best: Option<(usize, K)> = None;
        for (i, x) in self.enumerate() {
            let k = f(&x);
            match &best {
                Some((_, bk)) if *bk <= k => {}
                _ => best = Some((i, k)),
            }
        }
        best.map(|(i, _)| i)
    }
}

/// The automorphism group of a definite lattice (negative definite input
/// is negated internally; the generators are the same matrices).
pub fn automorphism_group(gram: &IMat) -> Result<AutGroup, AutError> {
    automorphism_group_capped(gram, DEFAULT_NODE_CAP)
}

pub fn automorphism_group_capped(gram: &IMat, cap: u64) -> Result<AutGroup, AutError> {
    let pos = positive_gram(gram);
    let n = pos.len();
    if n == 0 {
        return Ok(AutGroup { generators: Vec::new(), order: BigUint::one() });
    }
    // Search with the diagonal sorted ascending: levels with few
    // candidate images (small norms) come first, which keeps the
    // backtracking shallow when basis vectors of larger norm have many
    // candidates.
    let perm = norm_sort_perm(&pos);
    let sorted = permute_gram(&pos, &perm);
    let grp = aut_sorted(&sorted, cap)?;
    let generators = grp
        .generators
        .iter()
        .map(|m| {
            let mut out = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..n {
                    out[perm[i]][perm[j]] = m[i][j];
                }
            }
            out
        })
        .collect();
    Ok(AutGroup { generators, order: grp.order })
}

fn aut_sorted(pos: &IMat, cap: u64) -> Result<AutGroup, AutError> {
    let n = pos.len();
    let env = Env::new(pos);
    let cands = base_candidates(&env, &env).expect("identity has no candidates");
    let mut gens: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut order = BigUint::one();
    let mut nodes_used: u64 = 0;
    // Stabilizer chain from the deepest level upward: at level i we look
    // for automorphisms fixing e_0..e_{i-1} and compute the orbit of e_i.
    for i in (0..n).rev() {
        let mut prefix: Vec<Vec<i64>> = (0..i)
            .map(|t| {
                let mut e = vec![0i64; n];
                e[t] = 1;
                e
            })
            .collect();
        // Level candidates consistent with the identity prefix.
        let level: Vec<usize> = cands[i]
            .iter()
            .copied()
            .filter(|&k| (0..i).all(|t| env.gv[k][t] == env.gram[i][t]))
            .collect();
        let mut e_i = vec![0i64; n];
        e_i[i] = 1;
        // Orbit of e_i under the stabilizer of e_0..e_{i-1}; every
        // generator found so far fixes that prefix, since it was found at
        // this level or deeper.
        let mut orbit: HashSet<Vec<i64>> = HashSet::new();
        orbit.insert(e_i.clone());
        close_orbit(&mut orbit, &gens);
        for &k in &level {
            if orbit.contains(&env.vecs[k]) {
                continue;
            }
            let mut search = Search { src: &env, dst: &env, nodes: nodes_used, cap };
            prefix.push(env.vecs[k].clone());
            let found = search.run(&cands, &prefix);
            prefix.pop();
            nodes_used = search.nodes;
            if let Some(mat) = found? {
                gens.push(mat);
                close_orbit(&mut orbit, &gens);
            }
        }
        order *= BigUint::from(orbit.len());
    }
    for g in &gens {
        debug_assert!(preserves_gram(&env.gram, g));
    }
    Ok(AutGroup { generators: gens, order })
}

/// An explicit isometry between two definite lattices (rows = images of
/// the basis of the first in coordinates of the second), or None.
pub fn isometric(g1: &IMat, g2: &IMat) -> Result<Option<Vec<Vec<i64>>>, AutError> {
    isometric_capped(g1, g2, DEFAULT_NODE_CAP)
}

pub fn isometric_capped(g1: &IMat, g2: &IMat, cap: u64) -> Result<Option<Vec<Vec<i64>>>, AutError> {
    if g1.len() != g2.len() {
        return Ok(None);
    }
    if lattice_core::mat::det(g1) != lattice_core::mat::det(g2) {
        return Ok(None);
    }
    if g1.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let s1 = norm_sort_perm(&positive_gram(g1));
    let s2 = norm_sort_perm(&positive_gram(g2));
    let p1 = permute_gram(&positive_gram(g1), &s1);
    let p2 = permute_gram(&positive_gram(g2), &s2);
    let c1 = to_i64_gram(&p1);
    let c2 = to_i64_gram(&p2);
    let n = c1.len();
    let bound = (0..n)
        .map(|i| c1[i][i].max(c2[i][i]))
        .max()
        .unwrap_or(0);
    let e1 = Env::with_bound(&p1, bound);
    let e2 = Env::with_bound(&p2, bound);
    if e1.vecs.len() != e2.vecs.len() {
        return Ok(None);
    }
    {
        let mut n1 = e1.norms.clone();
        let mut n2 = e2.norms.clone();
        n1.sort_unstable();
        n2.sort_unstable();
        if n1 != n2 {
            return Ok(None);
        }
        let mut l1 = e1.labels.clone();
        let mut l2 = e2.labels.clone();
        l1.sort_unstable();
        l2.sort_unstable();
        if l1 != l2 {
            return Ok(None);
        }
    }
    let Some(cands) = base_candidates(&e1, &e2) else {
        return Ok(None);
    };
    let mut search = Search { src: &e1, dst: &e2, nodes: 0, cap };
    let Some(found) = search.run(&cands, &[])? else {
        return Ok(None);
    };
    // Undo the diagonal sorting of both sides.
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[s1[i]][s2[j]] = found[i][j];
        }
    }
    Ok(Some(out))
}

/// Stable permutation sorting the diagonal ascending.
fn norm_sort_perm(g: &IMat) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| g[a][a].cmp(&g[b][b]));
    idx
}

fn permute_gram(g: &IMat, s: &[usize]) -> IMat {
    s.iter()
        .map(|&i| s.iter().map(|&j| g[i][j].clone()).collect())
        .collect()
}

fn positive_gram(gram: &IMat) -> IMat {
    use num_traits::Signed;
    let n = gram.len();
    if n == 0 {
        return gram.clone();
    }
    if gram[0][0].is_negative() {
        gram.iter()
            .map(|row| row.iter().map(|x| -x.clone()).collect())
            .collect()
    } else {
        gram.clone()
    }
}

fn apply(x: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    let n = x.len();
    let mut y = vec![0i64; n];
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            y[j] += x[i] * m[i][j];
        }
    }
    y
}

pub fn preserves_gram(g: &[Vec<i64>], m: &[Vec<i64>]) -> bool {
    let n = g.len();
    for a in 0..n {
        for b in 0..n {
            let mut s = 0i64;
            for i in 0..n {
                if m[a][i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += m[a][i] * g[i][j] * m[b][j];
                }
            }
            if s != g[a][b] {
                return false;
            }
        }
    }
    true
}
