//! Brute-force ground truth at desk scale: the best coverage achievable by
//! k perfect matchings and the least number needed to cover every edge.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matching::{enumerate_perfect_matchings, Matching};
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCoverage {
    pub k: usize,
    pub covered: usize,
    pub fraction: Rational,
    /// `k` matchings attaining `covered`; the lexicographically least index
    /// tuple among optimal ones (padded by repetition when fewer than `k`
    /// distinct matchings exist).
    pub witness: Vec<Matching>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessiveIndex {
    pub value: usize,
    pub witness: Vec<Matching>,
}

/// Enumerated perfect matchings with their edge bitmaps, reused across
/// queries on one graph.
pub struct ExactAnalyzer {
    m: usize,
    pms: Vec<Matching>,
    bits: Vec<Vec<u64>>,
}

impl ExactAnalyzer {
    pub fn new(g: &Multigraph, pm_cap: usize) -> Result<Self> {
        let pms = enumerate_perfect_matchings(g, pm_cap)?;
        Ok(Self::from_matchings(g.edge_count(), pms))
    }

    pub fn from_matchings(m: usize, pms: Vec<Matching>) -> Self {
        let words = m.div_ceil(64).max(1);
        let bits = pms
            .iter()
            .map(|pm| {
                let mut b = vec![0u64; words];
                for e in pm.edges().iter() {
                    b[e / 64] |= 1 << (e % 64);
                }
                b
            })
            .collect();
        Self { m, pms, bits }
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.pms
    }

    pub fn m_exact(&self, k: usize) -> Result<ExactCoverage> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be >= 1".into()));
        }
        if self.pms.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let (covered, mut idx) = self.best_union(k);
        while idx.len() < k {
            idx.push(idx[0]);
        }
        Ok(ExactCoverage {
            k,
            covered,
            fraction: Rational::new(covered.into(), self.m.max(1).into()),
            witness: idx.into_iter().map(|i| self.pms[i].clone()).collect(),
        })
    }

    pub fn excessive_index(&self) -> Result<ExcessiveIndex> {
        if self.pms.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let mut union = vec![0u64; self.bits[0].len()];
        for b in &self.bits {
            or_into(&mut union, b);
        }
        if let Some(e) = (0..self.m).find(|&e| union[e / 64] >> (e % 64) & 1 == 0) {
            return Err(Error::EdgeInNoMatching(e));
        }
        let per_matching = self.pms[0].len().max(1);
        let start = self.m.div_ceil(per_matching).max(1);
        for k in start..=self.m.max(1) {
            let (covered, idx) = self.best_union(k);
            if covered == self.m {
                return Ok(ExcessiveIndex {
                    value: idx.len(),
                    witness: idx.into_iter().map(|i| self.pms[i].clone()).collect(),
                });
            }
        }
        Err(Error::Internal(
            "no cover found although every edge is matchable".into(),
        ))
    }

    /// Largest union of at most `k` distinct matchings and the
    /// lexicographically least index tuple attaining it.
    fn best_union(&self, k: usize) -> (usize, Vec<usize>) {
        let k = k.min(self.pms.len());
        let mut search = Search {
            bits: &self.bits,
            target: self.m,
            k,
            best: 0,
            best_idx: Vec::new(),
            chosen: Vec::with_capacity(k),
        };
        let union = vec![0u64; self.bits[0].len()];
        search.dfs(0, &union);
        (search.best, search.best_idx)
    }
}

struct Search<'a> {
    bits: &'a [Vec<u64>],
    target: usize,
    k: usize,
    best: usize,
    best_idx: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, start: usize, union: &[u64]) {
        let size = popcount(union);
        if self.chosen.len() == self.k {
            if size > self.best || self.best_idx.is_empty() {
                self.best = size;
                self.best_idx = self.chosen.clone();
            }
            return;
        }
        if self.best == self.target && !self.best_idx.is_empty() {
            return;
        }
        let slots = self.k - self.chosen.len();
        if self.bits.len() - start < slots {
            return;
        }
        // Bound: current union plus the `slots` largest marginal gains.
        let mut gains: Vec<usize> = self.bits[start..]
            .iter()
            .map(|b| popcount_new(b, union))
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let bound = size + gains.iter().take(slots).sum::<usize>();
        if bound <= self.best && !self.best_idx.is_empty() {
            return;
        }
        for i in start..self.bits.len() {
            if self.bits.len() - i < slots {
                break;
            }
            let mut next = union.to_vec();
            or_into(&mut next, &self.bits[i]);
            self.chosen.push(i);
            self.dfs(i + 1, &next);
            self.chosen.pop();
            if self.best == self.target {
                return;
            }
        }
    }
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn popcount_new(bits: &[u64], union: &[u64]) -> usize {
    bits.iter()
        .zip(union)
        .map(|(b, u)| (b & !u).count_ones() as usize)
        .sum()
}

fn or_into(acc: &mut [u64], bits: &[u64]) {
    for (a, b) in acc.iter_mut().zip(bits) {
        *a |= b;
    }
}

pub fn m_exact(g: &Multigraph, k: usize, pm_cap: usize) -> Result<ExactCoverage> {
    ExactAnalyzer::new(g, pm_cap)?.m_exact(k)
}

pub fn excessive_index(g: &Multigraph, pm_cap: usize) -> Result<ExcessiveIndex> {
    ExactAnalyzer::new(g, pm_cap)?.excessive_index()
}
