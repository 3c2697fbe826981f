//! Generators for the graph families used throughout the crate.
//!
//! Random graphs are drawn from a `SplitMix64` stream seeded with the given
//! 64-bit seed. They are reproducible within this crate, not bit-exact across
//! other implementations of the same model.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::poset::FinitePoset;

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    /// Even cycle on `len >= 4` vertices.
    Cycle(usize),
    /// Path on `n >= 2` vertices.
    Path(usize),
    CompleteBipartite(usize, usize),
    /// Path on `2r - 2` vertices with `b - r + 1` leaves hung on its first
    /// vertex and `a - r + 1` on its last; requires `2 <= r <= a <= b`.
    Caterpillar { r: usize, a: usize, b: usize },
    /// `K_{a,a}` minus a perfect matching, `a >= 2`.
    Regular(usize),
    /// One pendant leaf attached to every vertex of the base tree.
    Whisker(BipartiteGraph),
    /// `G(P)`: vertices `p_1..p_m, p'_1..p'_m`, edge `{p_i, p'_j}` iff `p_i <= p_j`.
    Poset(FinitePoset),
    /// Each pair of `A x B` is an edge with probability `p`.
    RandomBipartite { a: usize, b: usize, p: f64, seed: u64 },
    /// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
    RandomTree { n: usize, seed: u64 },
}

pub fn generate(spec: &GraphSpec) -> Result<BipartiteGraph> {
    let bad = |msg: &str| Err(Error::InvalidParameters(msg.to_string()));
    match *spec {
        GraphSpec::Cycle(len) => {
            if len < 4 || len % 2 == 1 {
                return bad("cycle length must be even and >= 4");
            }
            let edges: Vec<_> = (1..=len).map(|i| (i, i % len + 1)).collect();
            BipartiteGraph::from_edges(len, &edges)
        }
        GraphSpec::Path(n) => {
            if n < 2 {
                return bad("path needs at least 2 vertices");
            }
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            BipartiteGraph::from_edges(n, &edges)
        }
        GraphSpec::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("complete bipartite sides must be positive");
            }
            let edges: Vec<_> = (1..=a).flat_map(|i| (1..=b).map(move |j| (i, a + j))).collect();
            BipartiteGraph::from_edges(a + b, &edges)
        }
        GraphSpec::Caterpillar { r, a, b } => {
            if !(2 <= r && r <= a && a <= b) {
                return bad("caterpillar needs 2 <= r <= a <= b");
            }
            let spine = 2 * r - 2;
            let mut edges: Vec<_> = (1..spine).map(|i| (i, i + 1)).collect();
            let mut next = spine + 1;
            for _ in 0..(b - r + 1) {
                edges.push((1, next));
                next += 1;
            }
            for _ in 0..(a - r + 1) {
                edges.push((spine, next));
                next += 1;
            }
            BipartiteGraph::from_edges(a + b, &edges)
        }
        GraphSpec::Regular(a) => {
            if a < 2 {
                return bad("regular family needs a >= 2");
            }
            let edges: Vec<_> =
                (1..=a).flat_map(|i| (1..=a).filter(move |&j| j != i).map(move |j| (i, a + j))).collect();
            BipartiteGraph::from_edges(2 * a, &edges)
        }
        GraphSpec::Whisker(ref base) => {
            if !base.is_tree() {
                return bad("whisker base must be a nonempty tree");
            }
            let m = base.n();
            let mut edges: Vec<_> = base.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
            edges.extend((1..=m).map(|i| (i, m + i)));
            BipartiteGraph::from_edges(2 * m, &edges)
        }
        GraphSpec::Poset(ref p) => {
            let m = p.len();
            if m == 0 {
                return bad("poset must be nonempty");
            }
            let edges: Vec<_> =
                (0..m).flat_map(|i| (0..m).filter(move |&j| p.leq(i, j)).map(move |j| (i + 1, m + j + 1))).collect();
            BipartiteGraph::from_edges(2 * m, &edges)
        }
        GraphSpec::RandomBipartite { a, b, p, seed } => {
            if a == 0 || b == 0 || !(0.0..=1.0).contains(&p) {
                return bad("random bipartite needs a, b >= 1 and 0 <= p <= 1");
            }
            let mut rng = SplitMix64::seed_from_u64(seed);
            let mut edges = Vec::new();
            for i in 1..=a {
                for j in 1..=b {
                    if rng.random_bool(p) {
                        edges.push((i, a + j));
                    }
                }
            }
            BipartiteGraph::from_edges(a + b, &edges)
        }
        GraphSpec::RandomTree { n, seed } => {
            if n < 2 {
                return bad("random tree needs n >= 2");
            }
            let mut rng = SplitMix64::seed_from_u64(seed);
            let edges: Vec<_> = (2..=n).map(|i| (rng.random_range(1..i), i)).collect();
            BipartiteGraph::from_edges(n, &edges)
        }
    }
}

pub fn cycle(len: usize) -> BipartiteGraph {
    generate(&GraphSpec::Cycle(len)).expect("valid cycle length")
}

pub fn path(n: usize) -> BipartiteGraph {
    generate(&GraphSpec::Path(n)).expect("valid path length")
}

pub fn complete_bipartite(a: usize, b: usize) -> BipartiteGraph {
    generate(&GraphSpec::CompleteBipartite(a, b)).expect("valid sides")
}

pub fn caterpillar(r: usize, a: usize, b: usize) -> BipartiteGraph {
    generate(&GraphSpec::Caterpillar { r, a, b }).expect("valid caterpillar parameters")
}

pub fn regular(a: usize) -> BipartiteGraph {
    generate(&GraphSpec::Regular(a)).expect("valid regular parameter")
}

pub fn whisker(base: &BipartiteGraph) -> Result<BipartiteGraph> {
    generate(&GraphSpec::Whisker(base.clone()))
}

pub fn poset_graph(p: &FinitePoset) -> BipartiteGraph {
    generate(&GraphSpec::Poset(p.clone())).expect("nonempty poset")
}

/// Every labelled tree on `n` vertices, via Prüfer sequences.
pub fn all_labelled_trees(n: usize) -> Vec<BipartiteGraph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![BipartiteGraph::from_edges(1, &[]).unwrap()],
        2 => return vec![path(2)],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            BipartiteGraph::from_edges(n, &prufer_edges(n, &seq)).expect("trees are bipartite")
        })
        .collect()
}

fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf + 1, x + 1));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0] + 1, rest[1] + 1));
    edges
}

impl FromStr for GraphSpec {
    type Err = Error;

    /// `cycle:6`, `path:5`, `complete:2,3`, `caterpillar:4,6,6`, `regular:3`,
    /// `whisker-path:3`, `random:a,b,p[,seed]`, `random-tree:n[,seed]`,
    /// `chain-poset:m`, `antichain-poset:m`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<&str> = args.split(',').filter(|t| !t.is_empty()).collect();
        let bad = || Error::InvalidParameters(format!("cannot parse generator spec `{s}`"));
        let int = |i: usize| -> Result<usize> { nums.get(i).ok_or_else(bad)?.trim().parse().map_err(|_| bad()) };
        let seed = |i: usize| -> Result<u64> {
            match nums.get(i) {
                Some(t) => t.trim().parse().map_err(|_| bad()),
                None => Ok(0),
            }
        };
        let expect = |count: usize| if nums.len() == count { Ok(()) } else { Err(bad()) };
        Ok(match name {
            "cycle" => {
                expect(1)?;
                GraphSpec::Cycle(int(0)?)
            }
            "path" => {
                expect(1)?;
                GraphSpec::Path(int(0)?)
            }
            "complete" => {
                expect(2)?;
                GraphSpec::CompleteBipartite(int(0)?, int(1)?)
            }
            "caterpillar" => {
                expect(3)?;
                GraphSpec::Caterpillar { r: int(0)?, a: int(1)?, b: int(2)? }
            }
            "regular" => {
                expect(1)?;
                GraphSpec::Regular(int(0)?)
            }
            "whisker-path" => {
                expect(1)?;
                GraphSpec::Whisker(generate(&GraphSpec::Path(int(0)?))?)
            }
            "chain-poset" => {
                expect(1)?;
                GraphSpec::Poset(FinitePoset::chain(int(0)?))
            }
            "antichain-poset" => {
                expect(1)?;
                GraphSpec::Poset(FinitePoset::antichain(int(0)?))
            }
            "random" => {
                if !(3..=4).contains(&nums.len()) {
                    return Err(bad());
                }
                let p: f64 = nums[2].trim().parse().map_err(|_| bad())?;
                GraphSpec::RandomBipartite { a: int(0)?, b: int(1)?, p, seed: seed(3)? }
            }
            "random-tree" => {
                if !(1..=2).contains(&nums.len()) {
                    return Err(bad());
                }
                GraphSpec::RandomTree { n: int(0)?, seed: seed(1)? }
            }
            _ => return Err(bad()),
        })
    }
}

impl GraphSpec {
    /// Replaces the seed of a random spec; other specs are returned unchanged.
    pub fn with_seed(self, new_seed: u64) -> Self {
        match self {
            GraphSpec::RandomBipartite { a, b, p, .. } => GraphSpec::RandomBipartite { a, b, p, seed: new_seed },
            GraphSpec::RandomTree { n, .. } => GraphSpec::RandomTree { n, seed: new_seed },
            other => other,
        }
    }
}
