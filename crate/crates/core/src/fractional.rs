//! Fractional 1-factors: points of the perfect matching polytope.
//!
//! A vector `w` over the edges is a fractional 1-factor when every entry is
//! in `[0, 1]`, the edges at each vertex sum to 1, and every odd vertex set
//! has boundary weight at least 1. Such vectors are exactly the convex
//! combinations of perfect matchings; [`decompose`] recovers one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cuts::{self, OddCutResult};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexSet};
use crate::lp::{self, Feasibility};
use crate::matching::{enumerate_perfect_matchings, Matching};
use crate::numeric::{fmt_rational, int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalOneFactor {
    values: Vec<Rational>,
}

impl FractionalOneFactor {
    /// Checks length and the `[0, 1]` range; the vertex and odd-cut
    /// conditions are checked by [`verify_membership`].
    pub fn new(g: &Multigraph, values: Vec<Rational>) -> Result<Self> {
        g.check_weights(&values)?;
        if let Some((e, v)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| v.is_negative() || **v > Rational::one())
        {
            return Err(Error::InvalidParameter(format!(
                "entry {} of edge {e} is outside [0, 1]",
                fmt_rational(v)
            )));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, e: EdgeId) -> &Rational {
        &self.values[e]
    }

    /// `w(A)` for a set of edge ids.
    pub fn sum_over(&self, edges: impl IntoIterator<Item = EdgeId>) -> Rational {
        edges
            .into_iter()
            .fold(Rational::zero(), |acc, e| acc + &self.values[e])
    }

    pub fn from_matching(g: &Multigraph, m: &Matching) -> Self {
        let values = m
            .characteristic(g.edge_count())
            .into_iter()
            .map(|x| int(x as i64))
            .collect();
        Self { values }
    }
}

/// Which membership condition failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Entry outside `[0, 1]`.
    EdgeRange { edge: EdgeId, value: Rational },
    /// Weights at a vertex do not sum to 1.
    VertexSum { vertex: usize, sum: Rational },
    /// An odd vertex set with boundary weight below 1.
    OddCut(OddCutResult),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::EdgeRange { edge, value } => {
                write!(
                    f,
                    "edge {edge} has weight {} outside [0,1]",
                    fmt_rational(value)
                )
            }
            Violation::VertexSum { vertex, sum } => {
                write!(f, "vertex {vertex} has weight sum {}", fmt_rational(sum))
            }
            Violation::OddCut(cut) => write!(
                f,
                "odd set {} has boundary weight {}",
                cut.witness,
                fmt_rational(&cut.value)
            ),
        }
    }
}

/// `Ok(None)` when `w` is a fractional 1-factor, `Ok(Some(violation))`
/// otherwise.
pub fn verify_membership(g: &Multigraph, w: &FractionalOneFactor) -> Result<Option<Violation>> {
    verify_vector(g, w.values())
}

/// [`verify_membership`] for a raw vector (range not pre-checked).
pub fn verify_vector(g: &Multigraph, w: &[Rational]) -> Result<Option<Violation>> {
    g.check_weights(w)?;
    for (edge, value) in w.iter().enumerate() {
        if value.is_negative() || *value > Rational::one() {
            return Ok(Some(Violation::EdgeRange {
                edge,
                value: value.clone(),
            }));
        }
    }
    for vertex in 0..g.vertex_count() {
        let sum = g
            .incident(vertex)
            .iter()
            .fold(Rational::zero(), |acc, &e| acc + &w[e]);
        if !sum.is_one() {
            return Ok(Some(Violation::VertexSum { vertex, sum }));
        }
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if n % 2 == 1 {
        // The whole vertex set is odd and has an empty boundary.
        return Ok(Some(Violation::OddCut(OddCutResult {
            value: Rational::zero(),
            witness: VertexSet::new(0..n),
        })));
    }
    let cut = cuts::min_odd_cut(g, w)?;
    if cut.value < Rational::one() {
        return Ok(Some(Violation::OddCut(cut)));
    }
    Ok(None)
}

/// Every entry exactly `1/r`.
pub fn uniform(g: &Multigraph, r: u32) -> Result<FractionalOneFactor> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    g.require_r_regular(r)?;
    Ok(FractionalOneFactor {
        values: vec![ratio(1, r as i64); g.edge_count()],
    })
}

fn check_r_for_step_vector(r: u32) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "step vectors need r >= 3 (even r >= 4), got {r}"
        )));
    }
    Ok(())
}

/// Entry of the step-`k` vector for an edge already used by `count` of the
/// first `k-1` matchings.
///
/// Even r: `((r-2)k - (r-4) - count) / ((r^2-2r-1)k - (r^2-4r-1))`.
/// Odd r: `((r-1)k - (r-3) - 2 count) / ((r^2-r-2)k - (r^2-3r-2))`.
pub fn step_weight(r: u32, k: u32, count: u32) -> Result<Rational> {
    check_r_for_step_vector(r)?;
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be >= 2, got {k}")));
    }
    if count > k - 1 {
        return Err(Error::InvalidParameter(format!(
            "edge count {count} exceeds k-1 = {}",
            k - 1
        )));
    }
    let (r, k, c) = (r as i64, k as i64, count as i64);
    let (num, den) = if r % 2 == 0 {
        (
            (r - 2) * k - (r - 4) - c,
            (r * r - 2 * r - 1) * k - (r * r - 4 * r - 1),
        )
    } else {
        (
            (r - 1) * k - (r - 3) - 2 * c,
            (r * r - r - 2) * k - (r * r - 3 * r - 2),
        )
    };
    Ok(ratio(num, den))
}

/// Builds the step-`k` vector from per-edge usage counts of `k-1` perfect
/// matchings. The counts must sum to `k-1` at every vertex.
pub fn build_w_k(g: &Multigraph, r: u32, k: u32, counts: &[u32]) -> Result<FractionalOneFactor> {
    check_r_for_step_vector(r)?;
    g.check_weights(counts)?;
    g.require_r_regular(r)?;
    for v in 0..g.vertex_count() {
        let s: u64 = g.incident(v).iter().map(|&e| counts[e] as u64).sum();
        if s != (k as u64).saturating_sub(1) {
            return Err(Error::InvalidParameter(format!(
                "counts at vertex {v} sum to {s}, expected k-1 = {}",
                k.saturating_sub(1)
            )));
        }
    }
    let values = counts
        .iter()
        .map(|&c| step_weight(r, k, c))
        .collect::<Result<Vec<_>>>()?;
    FractionalOneFactor::new(g, values)
}

/// A convex combination of perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexDecomposition {
    pub terms: Vec<(Matching, Rational)>,
}

impl ConvexDecomposition {
    /// `sum coeff * chi^M` as an exact vector of length `m`.
    pub fn reconstruct(&self, m: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); m];
        for (matching, coeff) in &self.terms {
            for e in matching.edges().iter() {
                out[e] += coeff;
            }
        }
        out
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }
}

/// Exact convex decomposition of `w` over the enumerated perfect matchings,
/// found as a basic feasible solution of the exact phase-1 simplex.
pub fn decompose(
    g: &Multigraph,
    w: &FractionalOneFactor,
    pm_cap: usize,
) -> Result<ConvexDecomposition> {
    if let Some(v) = verify_membership(g, w)? {
        return Err(Error::NotInPolytope(v.to_string()));
    }
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    decompose_over(g, w, &pms)
}

pub(crate) fn decompose_over(
    g: &Multigraph,
    w: &FractionalOneFactor,
    pms: &[Matching],
) -> Result<ConvexDecomposition> {
    let m = g.edge_count();
    let columns: Vec<Vec<usize>> = pms
        .iter()
        .map(|pm| pm.edges().iter().chain(std::iter::once(m)).collect())
        .collect();
    let mut rhs = w.values().to_vec();
    rhs.push(Rational::one());
    let coeffs = match lp::solve(m + 1, &columns, &rhs) {
        Feasibility::Feasible(x) => x,
        Feasibility::Infeasible => {
            return Err(Error::Internal(
                "member vector has no decomposition over enumerated matchings".into(),
            ))
        }
    };
    let terms: Vec<(Matching, Rational)> = pms
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| c.is_positive())
        .map(|(pm, c)| (pm.clone(), c))
        .collect();
    let decomposition = ConvexDecomposition { terms };
    if !decomposition.coefficient_sum().is_one() || decomposition.reconstruct(m) != w.values() {
        return Err(Error::Internal("decomposition does not reconstruct".into()));
    }
    Ok(decomposition)
}

/// `r * p` perfect matchings (with repetition) covering every edge exactly
/// `p` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multicoloring {
    pub p: u64,
    pub matchings: Vec<Matching>,
}

/// Scales the decomposition of the uniform vector `1/r` to integers. The
/// resulting `p` is the least one compatible with that particular
/// decomposition, not necessarily the least over all multicolorings.
pub fn multicoloring(g: &Multigraph, r: u32, pm_cap: usize) -> Result<Multicoloring> {
    cuts::require_r_graph(g, r)?;
    let w = uniform(g, r)?;
    let decomposition = decompose(g, &w, pm_cap)?;
    let rb = BigInt::from(r);
    let p = decomposition
        .terms
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| {
            let d = c.denom();
            acc.lcm(&(d / d.gcd(&rb)))
        });
    let scale = Rational::from_integer(&rb * &p);
    let mut matchings = Vec::new();
    for (pm, c) in &decomposition.terms {
        let copies = (c * &scale)
            .to_integer()
            .to_usize()
            .ok_or(Error::Overflow)?;
        matchings.extend(std::iter::repeat_n(pm.clone(), copies));
    }
    Ok(Multicoloring {
        p: p.to_u64().ok_or(Error::Overflow)?,
        matchings,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DoubleCover {
    /// `2r` perfect matchings (sorted, repetition allowed) using every edge
    /// exactly twice.
    Found(Vec<Matching>),
    /// The complete search over all perfect matchings found none.
    Exhausted { matchings_searched: usize },
}

/// Searches for `2r` perfect matchings covering each edge exactly twice.
pub fn bf_double_cover(g: &Multigraph, r: u32, pm_cap: usize) -> Result<DoubleCover> {
    cuts::require_r_graph(g, r)?;
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let mut demand = vec![2u8; g.edge_count()];
    let mut chosen = Vec::with_capacity(2 * r as usize);
    let containing: Vec<Vec<usize>> = (0..g.edge_count())
        .map(|e| (0..pms.len()).filter(|&i| pms[i].contains(e)).collect())
        .collect();
    if search_double_cover(&pms, &containing, &mut demand, &mut chosen) {
        chosen.sort_unstable();
        Ok(DoubleCover::Found(
            chosen.into_iter().map(|i| pms[i].clone()).collect(),
        ))
    } else {
        Ok(DoubleCover::Exhausted {
            matchings_searched: pms.len(),
        })
    }
}

fn search_double_cover(
    pms: &[Matching],
    containing: &[Vec<usize>],
    demand: &mut [u8],
    chosen: &mut Vec<usize>,
) -> bool {
    let fits = |i: usize, demand: &[u8]| pms[i].edges().iter().all(|e| demand[e] > 0);
    // Branch on the open edge with the fewest usable matchings.
    let mut pick: Option<(usize, Vec<usize>)> = None;
    for (e, &d) in demand.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let usable: Vec<usize> = containing[e]
            .iter()
            .copied()
            .filter(|&i| fits(i, demand))
            .collect();
        if usable.is_empty() {
            return false;
        }
        if pick.as_ref().is_none_or(|(_, u)| usable.len() < u.len()) {
            pick = Some((e, usable));
        }
    }
    let Some((_, usable)) = pick else {
        return true;
    };
    for i in usable {
        for e in pms[i].edges().iter() {
            demand[e] -= 1;
        }
        chosen.push(i);
        if search_double_cover(pms, containing, demand, chosen) {
            return true;
        }
        chosen.pop();
        for e in pms[i].edges().iter() {
            demand[e] += 1;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matching::DEFAULT_PM_CAP;

    #[test]
    fn uniform_is_member() {
        let p = generators::petersen();
        let w = uniform(&p, 3).unwrap();
        assert!(w.values().iter().all(|v| *v == ratio(1, 3)));
        assert_eq!(verify_membership(&p, &w).unwrap(), None);
        assert!(uniform(&generators::dipole(5).unwrap(), 5)
            .unwrap()
            .values()
            .iter()
            .all(|v| *v == ratio(1, 5)));
        assert!(matches!(uniform(&p, 4), Err(Error::NotRegular(4))));
    }

    #[test]
    fn bridge_violates_odd_cut() {
        let g = generators::bridge_pair();
        let w = uniform(&g, 3).unwrap();
        match verify_membership(&g, &w).unwrap() {
            Some(Violation::OddCut(cut)) => {
                assert_eq!(cut.value, ratio(1, 3));
                assert_eq!(cut.witness, VertexSet::new(5..10));
            }
            other => panic!("expected odd-cut violation, got {other:?}"),
        }
    }

    #[test]
    fn matching_vector_is_member() {
        let p = generators::petersen();
        let pm = enumerate_perfect_matchings(&p, 10).unwrap().remove(0);
        let w = FractionalOneFactor::from_matching(&p, &pm);
        assert_eq!(verify_membership(&p, &w).unwrap(), None);
    }

    #[test]
    fn vertex_and_range_violations() {
        let k4 = generators::k4();
        let mut w = vec![ratio(1, 3); 6];
        w[0] = ratio(1, 2);
        assert!(matches!(
            verify_vector(&k4, &w).unwrap(),
            Some(Violation::VertexSum { vertex: 0, .. })
        ));
        w[0] = ratio(3, 2);
        assert!(matches!(
            verify_vector(&k4, &w).unwrap(),
            Some(Violation::EdgeRange { edge: 0, .. })
        ));
        assert!(FractionalOneFactor::new(&k4, w).is_err());
    }

    #[test]
    fn step_weight_examples() {
        assert_eq!(step_weight(4, 2, 0).unwrap(), ratio(4, 15));
        assert_eq!(step_weight(4, 2, 1).unwrap(), ratio(1, 5));
        assert_eq!(step_weight(3, 2, 0).unwrap(), ratio(2, 5));
        assert_eq!(step_weight(3, 2, 1).unwrap(), ratio(1, 5));
        assert!(step_weight(4, 2, 2).is_err());
        assert!(step_weight(2, 2, 0).is_err());
    }

    #[test]
    fn build_w_k_checks_counts() {
        let k4 = generators::k4();
        // M = {01, 23} has ids {0, 5}.
        let counts = [1, 0, 0, 0, 0, 1];
        let w = build_w_k(&k4, 3, 2, &counts).unwrap();
        assert_eq!(w.sum_over(k4.incident(0).iter().copied()), int(1));
        assert_eq!(verify_membership(&k4, &w).unwrap(), None);
        assert!(build_w_k(&k4, 3, 2, &[1, 1, 0, 0, 0, 1]).is_err());
        assert!(build_w_k(&k4, 3, 3, &counts).is_err());
    }

    #[test]
    fn decompositions() {
        let d3 = generators::dipole(3).unwrap();
        let dec = decompose(&d3, &uniform(&d3, 3).unwrap(), 100).unwrap();
        assert_eq!(dec.terms.len(), 3);
        assert!(dec.terms.iter().all(|(_, c)| *c == ratio(1, 3)));

        let k4 = generators::k4();
        let dec = decompose(&k4, &uniform(&k4, 3).unwrap(), 100).unwrap();
        assert_eq!(dec.terms.len(), 3);
        assert!(dec.terms.iter().all(|(_, c)| *c == ratio(1, 3)));

        let p = generators::petersen();
        let dec = decompose(&p, &uniform(&p, 3).unwrap(), 100).unwrap();
        assert_eq!(dec.terms.len(), 6);
        assert!(dec.terms.iter().all(|(_, c)| *c == ratio(1, 6)));

        let g = generators::bridge_pair();
        assert!(matches!(
            decompose(&g, &uniform(&g, 3).unwrap(), 100),
            Err(Error::NotInPolytope(_))
        ));
    }

    #[test]
    fn multicolorings() {
        let k4 = multicoloring(&generators::k4(), 3, DEFAULT_PM_CAP).unwrap();
        assert_eq!((k4.p, k4.matchings.len()), (1, 3));
        let p = multicoloring(&generators::petersen(), 3, DEFAULT_PM_CAP).unwrap();
        assert_eq!((p.p, p.matchings.len()), (2, 6));
        let d = multicoloring(&generators::dipole(3).unwrap(), 3, DEFAULT_PM_CAP).unwrap();
        assert_eq!((d.p, d.matchings.len()), (1, 3));
    }

    #[test]
    fn double_covers() {
        let p = generators::petersen();
        let all = enumerate_perfect_matchings(&p, 100).unwrap();
        assert_eq!(
            bf_double_cover(&p, 3, 100).unwrap(),
            DoubleCover::Found(all)
        );

        let k4 = generators::k4();
        let pms = enumerate_perfect_matchings(&k4, 100).unwrap();
        let expected: Vec<Matching> = pms.iter().flat_map(|m| [m.clone(), m.clone()]).collect();
        assert_eq!(
            bf_double_cover(&k4, 3, 100).unwrap(),
            DoubleCover::Found(expected)
        );

        let d3 = generators::dipole(3).unwrap();
        match bf_double_cover(&d3, 3, 100).unwrap() {
            DoubleCover::Found(ms) => {
                assert_eq!(ms.len(), 6);
                for e in 0..3 {
                    assert_eq!(ms.iter().filter(|m| m.contains(e)).count(), 2);
                }
            }
            other => panic!("{other:?}"),
        }
    }
}
