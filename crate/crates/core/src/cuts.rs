//! Minimum odd cuts, r-graph verification and tight-cut enumeration.
//!
//! All arithmetic is exact: rational weights are scaled by their common
//! denominator and flows run over `i128`. The fast path builds a Gomory–Hu
//! cut tree (Gusfield's variant) and scans its fundamental cuts for odd
//! sides; the brute-force path enumerates every odd vertex set and is used
//! as a test oracle and for tight-cut enumeration.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexSet};
use crate::numeric::{int, scale_to_i128, Rational};

/// Default largest vertex count for subset enumeration.
pub const DEFAULT_ODD_CAP: usize = 20;
const HARD_SUBSET_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCutResult {
    pub value: Rational,
    /// Odd side of the cut, canonicalized to the side without vertex 0.
    pub witness: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RGraphCheck {
    pub is_r_graph: bool,
    pub min_cut: OddCutResult,
}

fn prepare(g: &Multigraph, weights: &[Rational]) -> Result<(Vec<i128>, BigInt)> {
    g.check_weights(weights)?;
    if g.vertex_count() == 0 {
        return Err(Error::NoVertices);
    }
    g.require_even_order()?;
    if let Some(e) = weights.iter().position(|w| w.is_negative()) {
        return Err(Error::NegativeWeight(e));
    }
    scale_to_i128(weights)
}

fn unscale(value: i128, denom: &BigInt) -> Rational {
    Rational::new(BigInt::from(value), denom.clone())
}

/// Minimum of `w(boundary(S))` over odd-cardinality `S`, via a Gomory–Hu
/// tree. Requires an even, positive vertex count and nonnegative weights.
pub fn min_odd_cut(g: &Multigraph, weights: &[Rational]) -> Result<OddCutResult> {
    let (w, denom) = prepare(g, weights)?;
    let n = g.vertex_count();
    let tree = gomory_hu(g, &w);

    let mut best: Option<(i128, VertexSet)> = None;
    for s in 1..n {
        let side = tree.subtree_side(s);
        if side.iter().filter(|&&b| b).count() % 2 == 0 {
            continue;
        }
        let value = scaled_cut(g, &w, &side);
        debug_assert_eq!(value, tree.weight[s]);
        let witness = VertexSet::from_mask(&side).canonical_side(n);
        let better = match &best {
            None => true,
            Some((bv, bw)) => value < *bv || (value == *bv && witness < *bw),
        };
        if better {
            best = Some((value, witness));
        }
    }
    // n even and >= 2: the tree edge at any leaf yields an odd singleton side.
    let (value, witness) = best.ok_or_else(|| Error::Internal("no odd tree cut".into()))?;
    Ok(OddCutResult {
        value: unscale(value, &denom),
        witness,
    })
}

/// Brute-force minimum odd cut over all odd subsets; `n <= cap` required.
pub fn min_odd_cut_brute_force(
    g: &Multigraph,
    weights: &[Rational],
    cap: usize,
) -> Result<OddCutResult> {
    let (w, denom) = prepare(g, weights)?;
    let n = g.vertex_count();
    check_cap(n, cap)?;
    let masks = edge_masks(g);
    let mut best: Option<(i128, VertexSet)> = None;
    for_each_odd_side(n, |bits| {
        let value = bits_cut(&masks, &w, bits);
        let replace = match &best {
            None => true,
            Some((bv, bw)) => value < *bv || (value == *bv && VertexSet::from_bits(bits, n) < *bw),
        };
        if replace {
            best = Some((value, VertexSet::from_bits(bits, n)));
        }
    });
    let (value, witness) = best.ok_or_else(|| Error::Internal("no odd subset".into()))?;
    Ok(OddCutResult {
        value: unscale(value, &denom),
        witness,
    })
}

/// Checks `|boundary(S)| >= r` for every odd `S`; the minimizing cut is
/// returned either way as a certificate.
pub fn is_r_graph(g: &Multigraph, r: u32) -> Result<RGraphCheck> {
    g.require_r_regular(r)?;
    let unit = vec![int(1); g.edge_count()];
    let min_cut = min_odd_cut(g, &unit)?;
    Ok(RGraphCheck {
        is_r_graph: min_cut.value >= int(r as i64),
        min_cut,
    })
}

/// Errors with [`Error::NotRGraph`] unless `g` is an r-graph.
pub fn require_r_graph(g: &Multigraph, r: u32) -> Result<()> {
    let check = is_r_graph(g, r)?;
    if check.is_r_graph {
        Ok(())
    } else {
        Err(Error::NotRGraph {
            r,
            cut: crate::numeric::fmt_rational(&check.min_cut.value),
            witness: check.min_cut.witness,
        })
    }
}

/// Every odd `S` (canonical side, without vertex 0) with `w(boundary(S)) = 1`
/// exactly, sorted. Enumerates all subsets, so `n <= cap` is required.
pub fn tight_odd_cuts(g: &Multigraph, weights: &[Rational], cap: usize) -> Result<Vec<VertexSet>> {
    let (w, denom) = prepare(g, weights)?;
    let n = g.vertex_count();
    check_cap(n, cap)?;
    let target = i128::try_from(denom).map_err(|_| Error::Overflow)?;
    let masks = edge_masks(g);
    let mut out = Vec::new();
    for_each_odd_side(n, |bits| {
        if bits_cut(&masks, &w, bits) == target {
            out.push(VertexSet::from_bits(bits, n));
        }
    });
    out.sort();
    Ok(out)
}

/// An odd cut together with its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCut {
    pub side: VertexSet,
    pub edges: Vec<EdgeId>,
}

/// All odd cuts with at most `max_size` edges (canonical sides, sorted by
/// side). `n <= cap` required.
pub fn small_odd_cuts(g: &Multigraph, max_size: usize, cap: usize) -> Result<Vec<OddCut>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NoVertices);
    }
    g.require_even_order()?;
    check_cap(n, cap)?;
    let masks = edge_masks(g);
    let mut out = Vec::new();
    for_each_odd_side(n, |bits| {
        let mut edges = Vec::new();
        for (id, &m) in masks.iter().enumerate() {
            if (bits & m).count_ones() == 1 {
                edges.push(id);
                if edges.len() > max_size {
                    return;
                }
            }
        }
        out.push(OddCut {
            side: VertexSet::from_bits(bits, n),
            edges,
        });
    });
    out.sort_by(|a, b| a.side.cmp(&b.side));
    Ok(out)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > HARD_SUBSET_LIMIT {
        Err(Error::CapExceeded {
            what: "vertex count for odd-subset enumeration",
            cap: cap.min(HARD_SUBSET_LIMIT),
        })
    } else {
        Ok(())
    }
}

/// Calls `f` with every odd subset of `1..n` as a bitmask (vertex 0 excluded,
/// which picks one side of each cut when `n` is even).
fn for_each_odd_side(n: usize, mut f: impl FnMut(u64)) {
    if n < 2 {
        return;
    }
    let full: u64 = 1 << (n - 1);
    for sub in 1..full {
        if sub.count_ones() % 2 == 1 {
            f(sub << 1);
        }
    }
}

fn edge_masks(g: &Multigraph) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect()
}

fn bits_cut(masks: &[u64], w: &[i128], bits: u64) -> i128 {
    masks
        .iter()
        .zip(w)
        .filter(|(&m, _)| (bits & m).count_ones() == 1)
        .map(|(_, &x)| x)
        .sum()
}

fn scaled_cut(g: &Multigraph, w: &[i128], side: &[bool]) -> i128 {
    g.edges()
        .iter()
        .zip(w)
        .filter(|(&(u, v), _)| side[u] != side[v])
        .map(|(_, &x)| x)
        .sum()
}

struct CutTree {
    parent: Vec<usize>,
    weight: Vec<i128>,
}

impl CutTree {
    /// Vertices on `s`'s side when the tree edge `(s, parent[s])` is removed,
    /// i.e. `s` and its descendants. Vertex 0 is the root.
    fn subtree_side(&self, s: usize) -> Vec<bool> {
        let n = self.parent.len();
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            children[self.parent[v]].push(v);
        }
        let mut side = vec![false; n];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            side[v] = true;
            stack.extend(&children[v]);
        }
        side
    }
}

/// Gusfield's cut-tree construction: n-1 max-flow computations, each on the
/// original graph.
fn gomory_hu(g: &Multigraph, w: &[i128]) -> CutTree {
    let n = g.vertex_count();
    let mut cap = vec![vec![0i128; n]; n];
    for (&(u, v), &x) in g.edges().iter().zip(w) {
        cap[u][v] += x;
        cap[v][u] += x;
    }
    let mut parent = vec![0usize; n];
    let mut weight = vec![0i128; n];
    let mut flow = MaxFlow::new(cap);
    for s in 1..n {
        let t = parent[s];
        let (value, side) = flow.min_cut(s, t);
        weight[s] = value;
        for i in 0..n {
            if i != s && side[i] && parent[i] == t {
                parent[i] = s;
            }
        }
        if side[parent[t]] {
            parent[s] = parent[t];
            parent[t] = s;
            weight[s] = weight[t];
            weight[t] = value;
        }
    }
    CutTree { parent, weight }
}

/// Dinic's algorithm on a dense symmetric capacity matrix.
struct MaxFlow {
    cap: Vec<Vec<i128>>,
    residual: Vec<Vec<i128>>,
    level: Vec<i64>,
    next: Vec<usize>,
}

impl MaxFlow {
    fn new(cap: Vec<Vec<i128>>) -> Self {
        let n = cap.len();
        Self {
            residual: cap.clone(),
            cap,
            level: vec![-1; n],
            next: vec![0; n],
        }
    }

    /// Max-flow value and the source side of a minimum cut.
    fn min_cut(&mut self, s: usize, t: usize) -> (i128, Vec<bool>) {
        for (row, orig) in self.residual.iter_mut().zip(&self.cap) {
            row.clone_from(orig);
        }
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|x| *x = 0);
            loop {
                let pushed = self.dfs(s, t, i128::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        let side = self.level.iter().map(|&l| l >= 0).collect();
        (total, side)
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        let n = self.cap.len();
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if self.level[v] < 0 && self.residual[u][v] > 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i128) -> i128 {
        if u == t {
            return limit;
        }
        let n = self.cap.len();
        while self.next[u] < n {
            let v = self.next[u];
            if self.residual[u][v] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.residual[u][v]));
                if pushed > 0 {
                    self.residual[u][v] -= pushed;
                    self.residual[v][u] += pushed;
                    return pushed;
                }
            }
            self.next[u] += 1;
        }
        0
    }
}
