//! Bipartite graphs.
//!
//! Vertex ids are 1-based in every textual interface (the `n`/`e` text
//! format, JSON reports, error payloads) and in [`BipartiteGraph::from_edges`].
//! Everything else in the library indexes vertices 0-based, so vertex `v`
//! of the text format is index `v - 1` in cover vectors and adjacency lists.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A simple bipartite graph with a canonical bipartition.
///
/// Per component, the side holding the component's smallest vertex is put in
/// `A`; whole components are then swapped (in order of their smallest vertex)
/// until `|A| <= |B|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
    side: Vec<Side>,
    component: Vec<usize>,
    num_components: usize,
}

/// Result of [`BipartiteGraph::strip_isolated`].
#[derive(Debug, Clone)]
pub struct Stripped {
    pub graph: BipartiteGraph,
    /// Removed vertices, as 0-based indices of the original graph.
    pub removed: Vec<usize>,
    /// `kept[new] = old` index map.
    pub kept: Vec<usize>,
}

impl BipartiteGraph {
    /// Builds and validates a graph from 1-based edge pairs. Duplicate edges
    /// are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("vertex count must be positive".into()));
        }
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::InvalidVertexId { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            zero_based.push((u.min(v) - 1, u.max(v) - 1));
        }
        Self::from_zero_based(n, zero_based)
    }

    pub(crate) fn from_zero_based(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        let words = n.div_ceil(64);
        let mut bits = vec![vec![0u64; words]; n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            bits[u][v / 64] |= 1 << (v % 64);
            bits[v][u / 64] |= 1 << (u % 64);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        // BFS 2-colouring; components are discovered in order of smallest vertex.
        let mut colour: Vec<Option<Side>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut component = vec![usize::MAX; n];
        let mut num_components = 0;
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(Side::A);
            component[start] = num_components;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(cu.flip());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            component[w] = num_components;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            let cycle = odd_cycle(u, w, &parent, &depth);
                            return Err(Error::NotBipartite {
                                cycle: cycle.into_iter().map(|x| x + 1).collect(),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
            num_components += 1;
        }
        let mut side: Vec<Side> = colour.into_iter().map(Option::unwrap).collect();

        let mut diff = vec![0isize; num_components];
        for v in 0..n {
            diff[component[v]] += if side[v] == Side::A { 1 } else { -1 };
        }
        let mut total: isize = diff.iter().sum();
        let mut swapped = vec![false; num_components];
        for c in 0..num_components {
            if total <= 0 {
                break;
            }
            if diff[c] > 0 {
                swapped[c] = true;
                total -= 2 * diff[c];
            }
        }
        for v in 0..n {
            if swapped[component[v]] {
                side[v] = side[v].flip();
            }
        }

        Ok(Self { n, edges, adj, bits, side, component, num_components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted 0-based `(min, max)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn a_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.side[v] == Side::A).collect()
    }

    pub fn b_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.side[v] == Side::B).collect()
    }

    /// `|A|`.
    pub fn a(&self) -> usize {
        self.side.iter().filter(|&&s| s == Side::A).count()
    }

    /// Number of A-vertices that carry at least one edge.
    pub fn a_non_isolated(&self) -> usize {
        (0..self.n).filter(|&v| self.side[v] == Side::A && !self.adj[v].is_empty()).count()
    }

    /// `|B|`.
    pub fn b(&self) -> usize {
        self.n - self.a()
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.num_components == 1
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.n
    }

    pub(crate) fn require_edges(&self) -> Result<()> {
        if self.has_edges() {
            Ok(())
        } else {
            Err(Error::NoEdges)
        }
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree() && self.has_edges() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// Removes isolated vertices. Errors with [`Error::NoEdges`] when nothing
    /// would be left.
    pub fn strip_isolated(&self) -> Result<Stripped> {
        self.require_edges()?;
        let kept: Vec<usize> = (0..self.n).filter(|&v| !self.is_isolated(v)).collect();
        let removed: Vec<usize> = (0..self.n).filter(|&v| self.is_isolated(v)).collect();
        let (graph, _) = self.induced(&kept);
        Ok(Stripped { graph, removed, kept })
    }

    /// Induced subgraph on `vertices` (relabelled in the given order), plus
    /// the `new -> old` index map.
    pub fn induced(&self, vertices: &[usize]) -> (BipartiteGraph, Vec<usize>) {
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_of[u] != usize::MAX && new_of[v] != usize::MAX)
            .map(|&(u, v)| (new_of[u].min(new_of[v]), new_of[u].max(new_of[v])))
            .collect();
        let g = Self::from_zero_based(vertices.len(), edges).expect("subgraph of a bipartite graph");
        (g, vertices.to_vec())
    }

    /// Connected components that carry at least one edge, each as a
    /// standalone graph with its `new -> old` index map.
    pub fn edge_components(&self) -> Vec<(BipartiteGraph, Vec<usize>)> {
        (0..self.num_components)
            .filter_map(|c| {
                let vs: Vec<usize> = (0..self.n).filter(|&v| self.component[v] == c).collect();
                if vs.len() < 2 {
                    return None;
                }
                Some(self.induced(&vs))
            })
            .collect()
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &BipartiteGraph) -> BipartiteGraph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Self::from_zero_based(self.n + other.n, edges).expect("union of bipartite graphs")
    }

    /// Parses the `n <count>` / `e <u> <v>` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let mut tok = line.split_whitespace();
            let head = tok.next().unwrap();
            let nums: Vec<usize> = tok
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
            match (head, n) {
                ("n", None) if nums.len() == 1 => n = Some(nums[0]),
                ("n", _) => {
                    return Err(Error::Parse { line: line_no, msg: "malformed or repeated `n` line".into() })
                }
                ("e", Some(_)) if nums.len() == 2 => edges.push((nums[0], nums[1])),
                ("e", None) => {
                    return Err(Error::Parse { line: line_no, msg: "`e` before `n`".into() })
                }
                _ => return Err(Error::Parse { line: line_no, msg: format!("unexpected line `{line}`") }),
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing `n` line".into() })?;
        Self::from_edges(n, &edges)
    }

    /// Writes the text format, edges sorted by `(min, max)` endpoint.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

pub(crate) fn strip_comment(raw: &str) -> &str {
    match raw.find('#') {
        Some(p) => raw[..p].trim(),
        None => raw.trim(),
    }
}

// `u`, `w` are adjacent and equally coloured; walk both BFS-tree paths up to
// their common ancestor.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (u, w);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    let start = left.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i).unwrap();
    left.rotate_left(start);
    if left.len() > 2 && left[left.len() - 1] < left[1] {
        left[1..].reverse();
    }
    left
}
