//! Root systems of even negative definite lattices: simple roots, ADE
//! classification of the irreducible components, and the Mordell-Weil
//! quotient W / W_root.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use lattice_core::mat::{self, IMat};
use lattice_core::GramLattice;

use crate::shortvec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    /// Total number of roots (both signs).
    pub root_count: usize,
    /// Irreducible components as (letter, rank), sorted.
    pub components: Vec<(char, usize)>,
    /// Simple roots as rows, in the coordinates of W.
    pub simple_roots: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Compact symbol such as "A1^2 E7^2"; "-" when there are no roots.
    pub fn symbol(&self) -> String {
        if self.components.is_empty() {
            return "-".into();
        }
        let mut runs: Vec<(char, usize, usize)> = Vec::new();
        for &(c, r) in &self.components {
            match runs.last_mut() {
                Some((lc, lr, n)) if *lc == c && *lr == r => *n += 1,
                _ => runs.push((c, r, 1)),
            }
        }
        runs.iter()
            .map(|&(c, r, n)| {
                if n == 1 {
                    format!("{c}{r}")
                } else {
                    format!("{c}{r}^{n}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn root_rank(&self) -> usize {
        self.components.iter().map(|&(_, r)| r).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MordellWeil {
    pub free_rank: usize,
    /// Torsion invariant factors (each > 1, divisibility chain).
    pub torsion: Vec<i64>,
}

impl MordellWeil {
    /// Display form such as "0", "Z^4", "Z/2", "Z + Z/2".
    pub fn symbol(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Roots and ADE components of an even negative definite lattice.
pub fn root_classification(w: &GramLattice) -> RootDatum {
    assert!(w.rank() == 0 || w.is_negative_definite());
    let pos: IMat = w
        .gram()
        .iter()
        .map(|row| row.iter().map(|x| -x.clone()).collect())
        .collect();
    let pairs = shortvec::short_vectors(&pos, 2);
    let roots: Vec<Vec<i64>> = pairs
        .into_iter()
        .filter(|(n, _)| *n == 2)
        .map(|(_, v)| v)
        .collect();
    let root_count = roots.len() * 2;
    if roots.is_empty() {
        return RootDatum { root_count: 0, components: Vec::new(), simple_roots: Vec::new() };
    }
    let ip = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = 0i64;
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..b.len() {
                if b[j] != 0 {
                    s += a[i]
                        * b[j]
                        * pos[i][j].to_i64().expect("gram entry out of range");
                }
            }
        }
        s
    };
    // Positive system via the first generic functional (1, t, t^2, ...).
    let n = w.rank();
    let functional = (1i64..)
        .map(|t| {
            let mut f = vec![1i64; n];
            for i in 1..n {
                f[i] = f[i - 1].saturating_mul(t);
            }
            f
        })
        .find(|f| {
            roots
                .iter()
                .all(|r| r.iter().zip(f).map(|(a, b)| a * b).sum::<i64>() != 0)
        })
        .unwrap();
    let value = |r: &[i64]| r.iter().zip(&functional).map(|(a, b)| a * b).sum::<i64>();
    let positive: Vec<Vec<i64>> = roots
        .iter()
        .map(|r| {
            if value(r) > 0 {
                r.clone()
            } else {
                r.iter().map(|c| -c).collect()
            }
        })
        .collect();
    let pos_set: std::collections::HashSet<Vec<i64>> = positive.iter().cloned().collect();
    // Simple roots: positive roots that are not sums of two positive roots.
    let mut simple: Vec<Vec<i64>> = positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|p| {
                p != *r && {
                    let diff: Vec<i64> = r.iter().zip(p).map(|(a, b)| a - b).collect();
                    pos_set.contains(&diff)
                }
            })
        })
        .cloned()
        .collect();
    simple.sort();
    // Split into connected components of the Dynkin graph.
    let k = simple.len();
    let mut comp_id = vec![usize::MAX; k];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if comp_id[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp_id[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for u in 0..k {
                if comp_id[u] == usize::MAX && ip(&simple[v], &simple[u]) != 0 {
                    comp_id[u] = id;
                    stack.push(u);
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    let mut components = Vec::new();
    let mut ordered_simple = Vec::new();
    for members in &comps {
        let sym = classify_component(&simple, members, &ip);
        components.push(sym);
        for &m in members {
            ordered_simple.push(simple[m].clone());
        }
    }
    let mut order: Vec<usize> = (0..components.len()).collect();
    order.sort_by_key(|&i| components[i]);
    let components_sorted: Vec<(char, usize)> = order.iter().map(|&i| components[i]).collect();
    let simple_sorted: Vec<Vec<i64>> = order
        .iter()
        .flat_map(|&i| comps[i].iter().map(|&m| simple[m].clone()))
        .collect();
    RootDatum {
        root_count,
        components: components_sorted,
        simple_roots: simple_sorted,
    }
}

/// Identify a connected simply-laced Dynkin diagram by its branch shape.
fn classify_component(
    simple: &[Vec<i64>],
    members: &[usize],
    ip: &dyn Fn(&[i64], &[i64]) -> i64,
) -> (char, usize) {
    let n = members.len();
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &u)| u != v && ip(&simple[v], &simple[u]) != 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let deg3: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 3).collect();
    assert!(
        adj.iter().all(|a| a.len() <= 3) && deg3.len() <= 1,
        "component is not an ADE diagram"
    );
    if deg3.is_empty() {
        // A path; verify it really is one.
        let ends = (0..n).filter(|&i| adj[i].len() <= 1).count();
        assert!(n == 1 || ends == 2, "component is not an ADE diagram");
        return ('A', n);
    }
    let center = deg3[0];
    let mut branches: Vec<usize> = adj[center]
        .iter()
        .map(|&s| {
            let mut len = 1;
            let (mut prev, mut cur) = (center, s);
            loop {
                let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [] => break,
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => panic!("component is not an ADE diagram"),
                }
            }
            len
        })
        .collect();
    branches.sort_unstable();
    assert_eq!(branches.iter().sum::<usize>() + 1, n, "branch ranks inconsistent");
    match branches.as_slice() {
        [1, 1, _] => ('D', n),
        [1, 2, 2] => ('E', 6),
        [1, 2, 3] => ('E', 7),
        [1, 2, 4] => ('E', 8),
        _ => panic!("component is not an ADE diagram"),
    }
}

/// W / W_root from the simple-root inclusion matrix.
pub fn mordell_weil(w: &GramLattice, datum: &RootDatum) -> MordellWeil {
    let n = w.rank();
    let r = datum.simple_roots.len();
    if r == 0 {
        return MordellWeil { free_rank: n, torsion: Vec::new() };
    }
    let m: IMat = datum
        .simple_roots
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (_, d, _) = mat::smith_normal_form(&m);
    let mut torsion = Vec::new();
    for i in 0..r.min(n) {
        let di = &d[i][i];
        if *di > BigInt::from(1) {
            torsion.push(di.to_i64().expect("torsion factor out of range"));
        }
    }
    MordellWeil { free_rank: n - r, torsion }
}
