//! Hilbert function of the fiber cone, HF(k) = number of basic k-covers,
//! and dimension/multiplicity read off from stabilised finite differences.

use serde::{Deserialize, Serialize};

use crate::covers::count_basic;
use crate::drawing::gdim_with;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::par::{self, Exec};

pub const DEFAULT_WINDOW: usize = 3;

/// Result of a successful stabilisation: the `degree`-th differences are
/// constant (`leading`, nonzero) over the trailing window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stabilized {
    pub degree: usize,
    pub leading: i128,
}

pub fn differences(seq: &[i128]) -> Vec<i128> {
    seq.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Smallest `d` whose d-th differences are constant and nonzero over the
/// last `window` entries. The (d+1)-th differences then vanish there.
pub fn stabilize(seq: &[i128], window: usize) -> Option<Stabilized> {
    let mut cur = seq.to_vec();
    for degree in 0.. {
        if cur.len() < window.max(2) {
            return None;
        }
        let tail = &cur[cur.len() - window.max(2)..];
        if tail[0] != 0 && tail.iter().all(|&x| x == tail[0]) {
            return Some(Stabilized { degree, leading: tail[0] });
        }
        cur = differences(&cur);
    }
    unreachable!()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    pub kmax: u32,
    /// `counts[k-1] = HF(k)` for `k = 1..=kmax`.
    pub counts: Vec<u64>,
    pub window: usize,
    pub stable: bool,
    pub stabilized_degree: Option<u32>,
    pub dim: Option<u32>,
    pub multiplicity: Option<u64>,
    /// `[gdim, a+1]` when the profile did not stabilise.
    pub dim_range: Option<[u32; 2]>,
}

impl HilbertProfile {
    /// Builds the profile from counts alone; `dim_range` is left empty.
    pub fn from_counts(counts: Vec<u64>, window: usize) -> Self {
        let seq: Vec<i128> = counts.iter().map(|&c| i128::from(c)).collect();
        let st = stabilize(&seq, window).filter(|s| s.leading > 0);
        HilbertProfile {
            kmax: counts.len() as u32,
            counts,
            window,
            stable: st.is_some(),
            stabilized_degree: st.map(|s| s.degree as u32),
            dim: st.map(|s| s.degree as u32 + 1),
            multiplicity: st.map(|s| s.leading as u64),
            dim_range: None,
        }
    }

    /// HF(k), with HF(0) = 1.
    pub fn hf(&self, k: u32) -> Option<u64> {
        match k {
            0 => Some(1),
            _ => self.counts.get(k as usize - 1).copied(),
        }
    }
}

pub fn hilbert_function(g: &BipartiteGraph, kmax: u32) -> Result<HilbertProfile> {
    hilbert_function_with(g, kmax, DEFAULT_WINDOW, Exec::default())
}

/// HF(1..=kmax), one basic-cover count per degree, spread across workers.
pub fn hilbert_counts(g: &BipartiteGraph, kmax: u32, exec: Exec) -> Result<Vec<u64>> {
    g.require_edges()?;
    if kmax == 0 {
        return Err(Error::InvalidParameters("kmax must be at least 1".into()));
    }
    // Largest degrees first so the slowest counts start earliest.
    let ks: Vec<u32> = (1..=kmax).rev().collect();
    let mut counts = par::map(exec, &ks, |&k| count_basic(g, k, exec))
        .into_iter()
        .collect::<Result<Vec<u64>>>()?;
    counts.reverse();
    Ok(counts)
}

pub fn hilbert_function_with(g: &BipartiteGraph, kmax: u32, window: usize, exec: Exec) -> Result<HilbertProfile> {
    if window < 2 {
        return Err(Error::InvalidParameters("stabilisation window must be at least 2".into()));
    }
    let counts = hilbert_counts(g, kmax, exec)?;
    let mut profile = HilbertProfile::from_counts(counts, window);
    if !profile.stable {
        let lower = gdim_with(g, exec)?.gdim;
        profile.dim_range = Some([lower, g.a_non_isolated() as u32 + 1]);
    }
    Ok(profile)
}
