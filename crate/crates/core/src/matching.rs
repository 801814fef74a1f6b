//! Perfect matchings: maximum-weight extraction and exhaustive enumeration.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::blossom;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph};
use crate::numeric::{scale_to_i128, Rational};

/// Default cap on the number of enumerated perfect matchings.
pub const DEFAULT_PM_CAP: usize = 100_000;

/// A perfect matching, stored as its sorted edge ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching(EdgeSet);

impl Matching {
    /// Wraps `edges` after checking that they cover every vertex exactly once.
    pub fn new(g: &Multigraph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let set = EdgeSet::new(edges);
        let mut covered = vec![false; g.vertex_count()];
        for e in set.iter() {
            if e >= g.edge_count() {
                return Err(Error::InvalidParameter(format!("edge id {e} out of range")));
            }
            let (u, v) = g.endpoints(e);
            for x in [u, v] {
                if covered[x] {
                    return Err(Error::InvalidParameter(format!("vertex {x} covered twice")));
                }
                covered[x] = true;
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidParameter(format!("vertex {v} uncovered")));
        }
        Ok(Self(set))
    }

    fn from_sorted_unchecked(ids: Vec<EdgeId>) -> Self {
        Self(EdgeSet::new(ids))
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(e)
    }

    /// Characteristic vector over `0..m`.
    pub fn characteristic(&self, m: usize) -> Vec<u32> {
        self.0.indicator(m)
    }

    pub fn weight(&self, weights: &[Rational]) -> Rational {
        self.0
            .iter()
            .fold(Rational::zero(), |acc, e| acc + &weights[e])
    }
}

/// A perfect matching of maximum total weight. Among maximizers the one with
/// the lexicographically least sorted edge-id list is returned.
pub fn max_weight_perfect_matching(g: &Multigraph, weights: &[Rational]) -> Result<Matching> {
    g.check_weights(weights)?;
    g.require_even_order()?;
    let (scaled, _) = scale_to_i128(weights)?;
    max_weight_perfect_matching_scaled(g, &scaled)
}

/// Integer-weight variant of [`max_weight_perfect_matching`].
pub fn max_weight_perfect_matching_scaled(g: &Multigraph, weights: &[i128]) -> Result<Matching> {
    g.check_weights(weights)?;
    g.require_even_order()?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Matching::from_sorted_unchecked(Vec::new()));
    }
    // Every perfect matching has n/2 edges, so a constant shift keeps the
    // argmax and makes all weights positive.
    let min = weights.iter().copied().min().unwrap_or(0);
    let shifted: Vec<i128> = weights
        .iter()
        .map(|&w| (w - min + 1).checked_mul(2).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;

    let mut removed = vec![false; n];
    let mut target = best_perfect_weight(g, &shifted, &removed).ok_or(Error::NoPerfectMatching)?;
    let mut chosen = Vec::with_capacity(n / 2);
    // Fix edges greedily in id order: take e whenever some maximizer extends
    // the current choice with it.
    for e in 0..g.edge_count() {
        if chosen.len() == n / 2 {
            break;
        }
        let (u, v) = g.endpoints(e);
        if removed[u] || removed[v] {
            continue;
        }
        removed[u] = true;
        removed[v] = true;
        let rest = best_perfect_weight(g, &shifted, &removed);
        if rest.map(|r| r + shifted[e]) == Some(target) {
            chosen.push(e);
            target -= shifted[e];
        } else {
            removed[u] = false;
            removed[v] = false;
        }
    }
    if chosen.len() != n / 2 {
        return Err(Error::Internal("edge fixing did not complete".into()));
    }
    Ok(Matching::from_sorted_unchecked(chosen))
}

/// Maximum weight of a perfect matching on the vertices not in `removed`, or
/// `None` if there is none. Weights must be positive.
fn best_perfect_weight(g: &Multigraph, weights: &[i128], removed: &[bool]) -> Option<i128> {
    let alive: Vec<usize> = (0..g.vertex_count()).filter(|&v| !removed[v]).collect();
    if alive.is_empty() {
        return Some(0);
    }
    if alive.len() % 2 == 1 {
        return None;
    }
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in alive.iter().enumerate() {
        index[v] = i;
    }
    // Keep the heaviest parallel edge per vertex pair.
    let mut best: HashMap<(usize, usize), i128> = HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if removed[u] || removed[v] {
            continue;
        }
        let key = (index[u].min(index[v]), index[u].max(index[v]));
        let slot = best.entry(key).or_insert(weights[e]);
        *slot = (*slot).max(weights[e]);
    }
    let mut edges: Vec<(usize, usize, i128)> =
        best.into_iter().map(|((a, b), w)| (a, b, w)).collect();
    edges.sort_unstable();
    let mates = blossom::max_weight_matching(alive.len(), &edges, true);
    if mates.iter().any(Option::is_none) {
        return None;
    }
    let lookup: HashMap<(usize, usize), i128> =
        edges.iter().map(|&(a, b, w)| ((a, b), w)).collect();
    let total = mates
        .iter()
        .enumerate()
        .filter_map(|(a, m)| m.filter(|&b| a < b).map(|b| lookup[&(a, b)]))
        .sum();
    Some(total)
}

/// All perfect matchings in lexicographic order of their sorted edge-id
/// lists. Parallel edges yield distinct matchings. Errors once more than
/// `cap` matchings have been found.
pub fn enumerate_perfect_matchings(g: &Multigraph, cap: usize) -> Result<Vec<Matching>> {
    g.require_even_order()?;
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Matching::from_sorted_unchecked(Vec::new()));
        return Ok(out);
    }
    let mut covered = vec![false; n];
    let mut stack = Vec::with_capacity(n / 2);
    extend(g, &mut covered, &mut stack, &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn extend(
    g: &Multigraph,
    covered: &mut [bool],
    stack: &mut Vec<EdgeId>,
    out: &mut Vec<Matching>,
    cap: usize,
) -> Result<()> {
    let Some(v) = covered.iter().position(|c| !c) else {
        if out.len() == cap {
            return Err(Error::CapExceeded {
                what: "perfect matching count",
                cap,
            });
        }
        out.push(Matching::from_sorted_unchecked(stack.clone()));
        return Ok(());
    };
    if !residual_feasible(g, covered) {
        return Ok(());
    }
    for &e in g.incident(v) {
        let u = g.other_end(e, v);
        if covered[u] {
            continue;
        }
        covered[u] = true;
        covered[v] = true;
        stack.push(e);
        extend(g, covered, stack, out, cap)?;
        stack.pop();
        covered[u] = false;
        covered[v] = false;
    }
    Ok(())
}

/// Necessary condition on the uncovered subgraph: no isolated vertex and
/// every component of even order.
fn residual_feasible(g: &Multigraph, covered: &[bool]) -> bool {
    let n = g.vertex_count();
    let mut seen = covered.to_vec();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut size = 0usize;
        while let Some(x) = stack.pop() {
            size += 1;
            for &e in g.incident(x) {
                let y = g.other_end(e, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if size % 2 == 1 {
            return false;
        }
    }
    true
}
