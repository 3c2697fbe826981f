//! Brute-force reference computations, written against the definitions
//! only and sharing no code with the fast paths. Meant for tiny inputs.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};

/// Every vector in `{0..=k}^n` satisfying `x_i + x_j >= k` on each edge,
/// nonzero, where no single entry can be lowered by one. Lexicographic.
pub fn brute_basic_covers(n: usize, edges: &[(usize, usize)], k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut x = vec![0u32; n];
    loop {
        if is_basic_brute(edges, &x, k) {
            out.push(x.clone());
        }
        // Odometer with the last coordinate fastest keeps the output sorted.
        let Some(p) = (0..n).rev().find(|&p| x[p] < k) else { break };
        x[p] += 1;
        x[p + 1..].iter_mut().for_each(|v| *v = 0);
    }
    out
}

fn covers_edges(edges: &[(usize, usize)], x: &[u32], k: u32) -> bool {
    x.iter().any(|&v| v > 0) && edges.iter().all(|&(i, j)| x[i] + x[j] >= k)
}

fn is_basic_brute(edges: &[(usize, usize)], x: &[u32], k: u32) -> bool {
    if !covers_edges(edges, x, k) {
        return false;
    }
    let mut y = x.to_vec();
    (0..x.len()).all(|i| {
        if x[i] == 0 {
            return true;
        }
        y[i] -= 1;
        let lowered = covers_edges(edges, &y, k);
        y[i] += 1;
        !lowered
    })
}

/// `HF(k)` for `k = 1..=kmax` by counting [`brute_basic_covers`].
pub fn brute_hilbert(g: &BipartiteGraph, kmax: u32) -> Vec<u64> {
    (1..=kmax).map(|k| brute_basic_covers(g.n(), g.edges(), k).len() as u64).collect()
}

/// Largest number of sides per row accepted by [`permutation_gdim`].
pub const PERMUTATION_LIMIT: usize = 5;

/// `1 + max r` over every pair of row orders, straight from the definition:
/// `r` is the first position `t` whose vertical pair is not an edge or
/// whose A-vertex sees some B-vertex at an earlier position.
pub fn permutation_gdim(g: &BipartiteGraph) -> Result<u32> {
    let a: Vec<usize> = (0..g.n()).filter(|&v| g.side(v) == Side::A).collect();
    let b: Vec<usize> = (0..g.n()).filter(|&v| g.side(v) == Side::B).collect();
    if a.len() > PERMUTATION_LIMIT || b.len() > PERMUTATION_LIMIT {
        return Err(Error::Budget {
            what: "permutation oracle row size".into(),
            needed: a.len().max(b.len()) as u128,
            cap: PERMUTATION_LIMIT as u128,
        });
    }
    let adj = |u: usize, v: usize| g.edges().contains(&(u.min(v), u.max(v)));
    let mut best = 0;
    for sigma in permutations(&a) {
        for tau in permutations(&b) {
            let limit = sigma.len().min(tau.len());
            let r = (0..limit)
                .find(|&t| !adj(sigma[t], tau[t]) || (0..t).any(|s| adj(sigma[t], tau[s])))
                .unwrap_or(limit);
            best = best.max(r);
        }
    }
    Ok(best as u32 + 1)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Vectors in `{0..=k}^n` with coordinate sum exactly `k`.
pub fn simplex_tight_count(n: usize, k: u32) -> u64 {
    fn rec(left: usize, budget: u32) -> u64 {
        if left == 0 {
            return (budget == 0) as u64;
        }
        (0..=budget).map(|x| rec(left - 1, budget - x)).sum()
    }
    rec(n, k)
}

/// Down-closed subsets of a poset given by its strict order relation,
/// as sorted lists of elements.
pub fn brute_ideals(n: usize, less: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|&m| (0..n).all(|y| m >> y & 1 == 0 || (0..n).all(|x| !less(x, y) || m >> x & 1 == 1)))
        .map(|m| (0..n).filter(|&x| m >> x & 1 == 1).collect())
        .collect()
}
