//! Finite distributive lattices: the lattice of basic 1-covers of an unmixed
//! graph, and the lattice of down-sets of a finite poset.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::covers::{enumerate_basic, CoverSet};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::poset::FinitePoset;

/// A finite lattice with elements labelled by integer vectors, together with
/// its order, join/meet tables and Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLattice {
    pub elements: Vec<Vec<u32>>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    hasse: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HibiRelation {
    pub a: usize,
    pub b: usize,
    pub join: usize,
    pub meet: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub elements: Vec<Vec<u32>>,
    /// `[lower, upper]` indices into `elements`.
    pub hasse: Vec<[usize; 2]>,
    pub rank: usize,
    pub maximal_chain_count: String,
}

impl CoverLattice {
    /// Builds the lattice from labelled elements, an order, and vector
    /// formulas for join and meet. Each formula must land on an element and
    /// agree with the least upper / greatest lower bound of the order, and
    /// the result must be distributive.
    fn from_parts<L, J, M>(elements: Vec<Vec<u32>>, leq: L, join_vec: J, meet_vec: M) -> Result<Self>
    where
        L: Fn(&[u32], &[u32]) -> bool,
        J: Fn(&[u32], &[u32]) -> Vec<u32>,
        M: Fn(&[u32], &[u32]) -> Vec<u32>,
    {
        let m = elements.len();
        let index: HashMap<&[u32], usize> = elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
        let leq: Vec<Vec<bool>> =
            (0..m).map(|i| (0..m).map(|j| leq(&elements[i], &elements[j])).collect()).collect();
        for i in 0..m {
            for j in 0..m {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::ClosureViolation(format!("elements {i} and {j} are order-equivalent")));
                }
            }
        }
        let lookup = |v: Vec<u32>, what: &str, i: usize, j: usize| -> Result<usize> {
            index
                .get(v.as_slice())
                .copied()
                .ok_or_else(|| Error::ClosureViolation(format!("{what} of elements {i} and {j} is not an element")))
        };
        let mut join = vec![vec![0; m]; m];
        let mut meet = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                let x = lookup(join_vec(&elements[i], &elements[j]), "join", i, j)?;
                let y = lookup(meet_vec(&elements[i], &elements[j]), "meet", i, j)?;
                let lub = (0..m).all(|z| !(leq[i][z] && leq[j][z]) || leq[x][z]) && leq[i][x] && leq[j][x];
                let glb = (0..m).all(|z| !(leq[z][i] && leq[z][j]) || leq[z][y]) && leq[y][i] && leq[y][j];
                if !lub || !glb {
                    return Err(Error::ClosureViolation(format!("join/meet of {i} and {j} are not the order bounds")));
                }
                join[i][j] = x;
                meet[i][j] = y;
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(Error::ClosureViolation(format!("distributivity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let hasse = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && leq[i][j] && (0..m).all(|z| z == i || z == j || !(leq[i][z] && leq[z][j])))
            .collect();
        Ok(Self { elements, leq, join, meet, hasse })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j])).expect("lattice has a bottom")
    }

    pub fn top(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i])).expect("lattice has a top")
    }

    /// Elements in an order compatible with `leq` (by down-set size).
    fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| (0..self.len()).filter(|&j| self.leq[j][i]).count());
        idx
    }

    /// Element count of a longest chain, and the number of maximal chains
    /// (saturated bottom-to-top paths in the Hasse diagram).
    pub fn rank_and_chains(&self) -> (usize, BigUint) {
        let order = self.linear_extension();
        let mut longest = vec![1usize; self.len()];
        let mut paths = vec![BigUint::from(0u32); self.len()];
        paths[self.bottom()] = BigUint::from(1u32);
        for &j in &order {
            for &(lo, hi) in &self.hasse {
                if hi == j {
                    longest[j] = longest[j].max(longest[lo] + 1);
                    let p = paths[lo].clone();
                    paths[j] += p;
                }
            }
        }
        (longest.into_iter().max().unwrap_or(0), paths[self.top()].clone())
    }

    /// One relation per unordered incomparable pair.
    pub fn hibi_relations(&self) -> Vec<HibiRelation> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if !self.leq[a][b] && !self.leq[b][a] {
                    out.push(HibiRelation { a, b, join: self.join[a][b], meet: self.meet[a][b] });
                }
            }
        }
        out
    }

    /// `a + b = (a v b) + (a ^ b)` coordinatewise.
    pub fn relation_holds(&self, rel: &HibiRelation) -> bool {
        let e = &self.elements;
        (0..e[rel.a].len()).all(|i| e[rel.a][i] + e[rel.b][i] == e[rel.join][i] + e[rel.meet][i])
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.hasse.iter().filter(|&&(_, hi)| hi == x).count() == 1).collect()
    }

    /// The induced order on the join-irreducibles.
    pub fn join_irreducible_poset(&self) -> FinitePoset {
        let ji = self.join_irreducibles();
        let leq = ji.iter().map(|&x| ji.iter().map(|&y| self.leq[x][y]).collect()).collect();
        FinitePoset::new(leq).expect("restriction of a partial order")
    }

    pub fn report(&self) -> LatticeReport {
        let (rank, chains) = self.rank_and_chains();
        LatticeReport {
            elements: self.elements.clone(),
            hasse: self.hasse.iter().map(|&(a, b)| [a, b]).collect(),
            rank,
            maximal_chain_count: chains.to_string(),
        }
    }
}

/// Lattice of basic 1-covers of an unmixed graph, ordered by their values on
/// `A`; join is max on `A` and min on `B`, meet the reverse.
pub fn build_lattice(g: &BipartiteGraph) -> Result<CoverLattice> {
    let ones = enumerate_basic(g, 1)?;
    build_lattice_from(g, &ones)
}

pub fn build_lattice_from(g: &BipartiteGraph, ones: &CoverSet) -> Result<CoverLattice> {
    let weight = ones.covers[0].weight();
    if ones.covers.iter().any(|c| c.weight() != weight) {
        return Err(Error::NotUnmixed);
    }
    let active = |side| (0..g.n()).filter(|&v| g.side(v) == side && !g.is_isolated(v)).count();
    if active(Side::A) != active(Side::B) {
        return Err(Error::ClosureViolation("unmixed graph with sides of unequal size".into()));
    }
    let on_a: Vec<bool> = (0..g.n()).map(|v| g.side(v) == Side::A).collect();
    let elements = ones.covers.iter().map(|c| c.values.clone()).collect();
    let pick = |x: &[u32], y: &[u32], a_max: bool| -> Vec<u32> {
        (0..x.len()).map(|i| if on_a[i] == a_max { x[i].max(y[i]) } else { x[i].min(y[i]) }).collect()
    };
    CoverLattice::from_parts(
        elements,
        |x, y| (0..x.len()).all(|i| !on_a[i] || x[i] <= y[i]),
        |x, y| pick(x, y, true),
        |x, y| pick(x, y, false),
    )
}

/// Down-sets of `p` as 0/1 indicator vectors, ordered by inclusion.
pub fn poset_ideals(p: &FinitePoset) -> CoverLattice {
    let m = p.len();
    let mut elements = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let inside = |i: usize| mask >> i & 1 == 1;
        let closed = (0..m).all(|j| !inside(j) || (0..m).all(|i| !p.leq(i, j) || inside(i)));
        if closed {
            elements.push((0..m).map(|i| u32::from(inside(i))).collect());
        }
    }
    let zip = |x: &[u32], y: &[u32], f: fn(u32, u32) -> u32| x.iter().zip(y).map(|(&a, &b)| f(a, b)).collect();
    CoverLattice::from_parts(
        elements,
        |x, y| x.iter().zip(y).all(|(a, b)| a <= b),
        |x, y| zip(x, y, u32::max),
        |x, y| zip(x, y, u32::min),
    )
    .expect("down-sets form a distributive lattice")
}

/// Purity of `p`: all maximal chains have the same number of elements.
pub fn gorenstein_test(p: &FinitePoset) -> bool {
    p.maximal_chain_lengths().len() <= 1
}

/// Order isomorphism by backtracking, matching elements with equal down-set
/// and up-set sizes.
pub fn order_isomorphic(x: &CoverLattice, y: &CoverLattice) -> bool {
    let m = x.len();
    if m != y.len() || x.hasse.len() != y.hasse.len() {
        return false;
    }
    let sig = |l: &CoverLattice, i: usize| {
        let down = (0..m).filter(|&j| l.leq[j][i]).count();
        let up = (0..m).filter(|&j| l.leq[i][j]).count();
        (down, up)
    };
    let sx: Vec<_> = (0..m).map(|i| sig(x, i)).collect();
    let sy: Vec<_> = (0..m).map(|i| sig(y, i)).collect();
    let mut a = sx.clone();
    let mut b = sy.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return false;
    }
    fn rec(i: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, x: &CoverLattice, y: &CoverLattice, sx: &[(usize, usize)], sy: &[(usize, usize)]) -> bool {
        if i == map.len() {
            return true;
        }
        for cand in 0..map.len() {
            if used[cand] || sx[i] != sy[cand] {
                continue;
            }
            if (0..i).any(|j| x.leq[j][i] != y.leq[map[j]][cand] || x.leq[i][j] != y.leq[cand][map[j]]) {
                continue;
            }
            map[i] = cand;
            used[cand] = true;
            if rec(i + 1, map, used, x, y, sx, sy) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    rec(0, &mut vec![0; m], &mut vec![false; m], x, y, &sx, &sy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, path, poset_graph, whisker};

    #[test]
    fn complete_balanced_is_a_two_chain() {
        for a in 1..=4 {
            let l = build_lattice(&complete_bipartite(a, a)).unwrap();
            assert_eq!(l.len(), 2);
            assert_eq!(l.rank_and_chains(), (2, BigUint::from(1u32)));
            assert!(l.hibi_relations().is_empty());
        }
    }

    #[test]
    fn square_lattice() {
        let l = build_lattice(&cycle(4)).unwrap();
        assert_eq!(l.rank_and_chains().0, 2);
        assert!(l.hibi_relations().is_empty());
    }

    #[test]
    fn whisker_path_lattice() {
        let l = build_lattice(&whisker(&path(3)).unwrap()).unwrap();
        assert_eq!(l.rank_and_chains().0, 4);
        let rels = l.hibi_relations();
        assert!(!rels.is_empty());
        assert!(rels.iter().all(|r| l.relation_holds(r)));
    }

    #[test]
    fn mixed_graphs_rejected() {
        assert_eq!(build_lattice(&complete_bipartite(2, 3)).unwrap_err(), Error::NotUnmixed);
        assert_eq!(build_lattice(&cycle(6)).unwrap_err(), Error::NotUnmixed);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(poset_ideals(&FinitePoset::antichain(2)).len(), 4);
        for m in 1..=4 {
            let l = poset_ideals(&FinitePoset::chain(m));
            assert_eq!(l.len(), m + 1);
            assert_eq!(l.rank_and_chains(), (m + 1, BigUint::from(1u32)));
        }
        let vee = FinitePoset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(poset_ideals(&vee).len(), 5);
    }

    #[test]
    fn boolean_lattice_chains() {
        let l = poset_ideals(&FinitePoset::antichain(3));
        assert_eq!(l.rank_and_chains(), (4, BigUint::from(6u32)));
    }

    #[test]
    fn purity() {
        assert!(gorenstein_test(&FinitePoset::antichain(3)));
        assert!(gorenstein_test(&FinitePoset::chain(3)));
        assert!(!gorenstein_test(&FinitePoset::from_relations(3, &[(0, 1)]).unwrap()));
    }

    #[test]
    fn poset_graph_lattice_matches_ideals() {
        let p = FinitePoset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        let l = build_lattice(&poset_graph(&p)).unwrap();
        let j = poset_ideals(&p);
        assert!(order_isomorphic(&l, &j));
        assert!(!order_isomorphic(&l, &poset_ideals(&FinitePoset::chain(3))));
        assert_eq!(l.join_irreducibles().len(), 3);
    }

    #[test]
    fn report_json() {
        let l = build_lattice(&complete_bipartite(1, 1)).unwrap();
        let json = serde_json::to_string(&l.report()).unwrap();
        assert_eq!(json, r#"{"elements":[[0,1],[1,0]],"hasse":[[0,1]],"rank":2,"maximal_chain_count":"1"}"#);
    }
}
