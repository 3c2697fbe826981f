//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// A maximum matching: `left[u]` is the right partner of `u`, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

/// Maximum matching between `0..left_n` and `0..right_n`, where `nbrs(u)`
/// lists the right neighbours of left vertex `u`.
pub fn hopcroft_karp<F, I>(left_n: usize, right_n: usize, nbrs: F) -> Matching
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let adj: Vec<Vec<usize>> = (0..left_n).map(|u| nbrs(u).into_iter().collect()).collect();
    let mut mate_l = vec![FREE; left_n];
    let mut mate_r = vec![FREE; right_n];
    let mut dist = vec![0usize; left_n];
    let mut size = 0;

    loop {
        // Layer the graph from the free left vertices.
        let mut queue = VecDeque::new();
        for u in 0..left_n {
            if mate_l[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_r[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; left_n];
        for u in 0..left_n {
            if mate_l[u] == FREE && augment(u, &adj, &mut mate_l, &mut mate_r, &mut dist, &mut it) {
                size += 1;
            }
        }
    }

    let opt = |x: usize| (x != FREE).then_some(x);
    Matching {
        size,
        left: mate_l.into_iter().map(opt).collect(),
        right: mate_r.into_iter().map(opt).collect(),
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    while it[u] < adj[u].len() {
        let v = adj[u][it[u]];
        it[u] += 1;
        let w = mate_r[v];
        if w == FREE || (dist[w] == dist[u] + 1 && augment(w, adj, mate_l, mate_r, dist, it)) {
            mate_l[u] = v;
            mate_r[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Size of a maximum matching between the left vertices in `left_mask` and
/// the right vertices in `right_mask`, with adjacency given as bitmasks.
pub fn matching_size_masked(adj: &[u128], left_mask: u128, right_mask: u128) -> usize {
    let lefts: Vec<usize> = bits(left_mask).collect();
    hopcroft_karp(lefts.len(), 128, |x| bits(adj[lefts[x]] & right_mask)).size
}

pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
