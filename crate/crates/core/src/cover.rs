//! Greedy covering by perfect matchings with per-step certificates.
//!
//! Step `k` picks a perfect matching `M_k` that covers as many still
//! uncovered edges as possible. Before extraction the step vector `w_k` is
//! built from the usage counts of `M_1..M_{k-1}` (see
//! [`fractional::build_w_k`]); when it is verified to lie in the perfect
//! matching polytope, any matching `M` with `c . chi^M >= c . w_k` (where `c`
//! is the indicator of uncovered edges) gains at least
//! `coef_k * uncovered`, which telescopes into [`bounds::bound_improved`].
//! Without a verified `w_k` the step still gains at least `uncovered / r`,
//! because the uniform vector `1/r` is always in the polytope of an r-graph.
//!
//! Two extraction modes:
//!
//! - [`Mode::Fast`]: maximum-weight perfect matching with weight 1 on
//!   uncovered edges. Scales to large graphs; the vector's membership is
//!   checked each step and the certificate is downgraded if it fails.
//! - [`Mode::ExactLemma`]: enumerates all perfect matchings and restricts to
//!   those crossing every tight odd cut of `w_k` exactly once, maximizing
//!   coverage within that face. This maintains the cut invariants that keep
//!   the next step vector inside the polytope.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::bounds;
use crate::cuts::{self, OddCut, DEFAULT_ODD_CAP};
use crate::error::{Error, Result};
use crate::fractional::{self, verify_vector};
use crate::graph::{EdgeId, Multigraph, VertexSet};
use crate::matching::{self, enumerate_perfect_matchings, Matching, DEFAULT_PM_CAP};
use crate::numeric::{fmt_rational, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Fast,
    ExactLemma,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Mode::Fast),
            "exact-lemma" => Ok(Mode::ExactLemma),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CoverOptions {
    pub mode: Mode,
    pub pm_cap: usize,
    /// Largest vertex count for which odd cuts are enumerated (tight-cut
    /// detection and invariant audits).
    pub odd_cap: usize,
}

impl Default for CoverOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Fast,
            pm_cap: DEFAULT_PM_CAP,
            odd_cap: DEFAULT_ODD_CAP,
        }
    }
}

impl CoverOptions {
    pub fn exact() -> Self {
        Self {
            mode: Mode::ExactLemma,
            ..Self::default()
        }
    }
}

/// Guarantee a step is certified against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundLevel {
    /// `gain >= uncovered / r`.
    L0,
    /// `gain >= coef_k * uncovered` from a verified step vector.
    L1,
    #[serde(rename = "NONE")]
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum TightCuts {
    Honored { count: usize },
    Violated { side: VertexSet, crossings: usize },
    NotChecked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Clause {
    Exactly(u64),
    AtMost(u64),
}

impl Clause {
    fn holds(&self, sum: u64) -> bool {
        match *self {
            Clause::Exactly(x) => sum == x,
            Clause::AtMost(x) => sum <= x,
        }
    }

    fn excess(&self, sum: u64) -> u64 {
        match *self {
            Clause::Exactly(x) => sum.abs_diff(x),
            Clause::AtMost(x) => sum.saturating_sub(x),
        }
    }
}

/// Audit of one family of odd cuts of a fixed size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyAudit {
    pub cut_size: usize,
    pub clause: Clause,
    pub cuts: usize,
    pub max_sum: Option<u64>,
    /// Worst violating cut and its crossing count.
    pub violation: Option<(VertexSet, u64)>,
}

impl FamilyAudit {
    pub fn satisfied(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "families")]
pub enum CutAudit {
    Checked(Vec<FamilyAudit>),
    NotChecked,
}

impl CutAudit {
    pub fn all_satisfied(&self) -> Option<bool> {
        match self {
            CutAudit::Checked(f) => Some(f.iter().all(FamilyAudit::satisfied)),
            CutAudit::NotChecked => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationCertificate {
    pub step: usize,
    pub level: BoundLevel,
    /// Whether the step vector was checked and found in the polytope.
    pub membership_verified: bool,
    pub membership_failure: Option<String>,
    pub uncovered_before: usize,
    /// Certified lower bound on the gain at `level`.
    pub predicted_gain: Rational,
    /// `uncovered_before / r`, always certified.
    pub uniform_gain: Rational,
    pub actual_gain: usize,
    pub tight_cuts: TightCuts,
    pub cut_audit: CutAudit,
    pub stalled: bool,
}

/// Matchings chosen so far and per-edge usage counts.
#[derive(Debug, Clone)]
pub struct CoverState<'g> {
    graph: &'g Multigraph,
    matchings: Vec<Matching>,
    counts: Vec<u32>,
    covered: usize,
}

impl<'g> CoverState<'g> {
    pub fn new(graph: &'g Multigraph) -> Self {
        Self {
            graph,
            matchings: Vec::new(),
            counts: vec![0; graph.edge_count()],
            covered: 0,
        }
    }

    /// Replays a list of matchings.
    pub fn from_matchings(graph: &'g Multigraph, matchings: &[Matching]) -> Self {
        let mut state = Self::new(graph);
        for m in matchings {
            state.push(m.clone());
        }
        state
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn covered_count(&self) -> usize {
        self.covered
    }

    pub fn is_covered(&self, e: EdgeId) -> bool {
        self.counts[e] > 0
    }

    /// Number of still uncovered edges of `m`.
    pub fn gain(&self, m: &Matching) -> usize {
        m.edges().iter().filter(|&e| self.counts[e] == 0).count()
    }

    pub fn push(&mut self, m: Matching) -> usize {
        let gain = self.gain(&m);
        for e in m.edges().iter() {
            self.counts[e] += 1;
        }
        self.covered += gain;
        self.matchings.push(m);
        gain
    }

    /// `sum_i |M_i ∩ C|` for a set of edge ids.
    pub fn crossings(&self, edges: &[EdgeId]) -> u64 {
        edges.iter().map(|&e| self.counts[e] as u64).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub r: u32,
    pub k: usize,
    pub mode: Mode,
    pub matchings: Vec<Matching>,
    pub certificates: Vec<IterationCertificate>,
    pub edge_count: usize,
    pub covered: usize,
    pub fraction: Rational,
    /// Closed-form improved bound for `(r, k)`.
    pub bound: Rational,
    pub bound_met: bool,
}

/// Invariant families for a state with `j` matchings.
///
/// Odd r: every r-cut is crossed exactly `j` times and every (r+2)-cut at
/// most `r*j + 2` times. Even r: (r+1)-cuts at most `(r-1)*j + 2` times; for
/// even r every odd cut has even size, so that family is always empty and
/// the families actually constraining the step vector are the r-cuts
/// (exactly `j`) and the (r+2)-cuts (at most `(2r-3)*j + 4`).
pub fn invariant_clauses(r: u32, j: usize) -> Vec<(usize, Clause)> {
    let (r64, j64, ru) = (r as u64, j as u64, r as usize);
    if r % 2 == 1 {
        vec![
            (ru, Clause::Exactly(j64)),
            (ru + 2, Clause::AtMost(r64 * j64 + 2)),
        ]
    } else {
        vec![
            (ru, Clause::Exactly(j64)),
            (ru + 1, Clause::AtMost((r64 - 1) * j64 + 2)),
            (ru + 2, Clause::AtMost((2 * r64 - 3) * j64 + 4)),
        ]
    }
}

/// Checks the cut invariants of `state` against every odd cut of size r,
/// r+1 and r+2. Requires `n <= odd_cap`.
pub fn audit_cut_invariants(state: &CoverState<'_>, r: u32, odd_cap: usize) -> Result<CutAudit> {
    let catalog = cuts::small_odd_cuts(state.graph(), r as usize + 2, odd_cap)?;
    Ok(audit_with_catalog(state, r, &catalog))
}

fn audit_with_catalog(state: &CoverState<'_>, r: u32, catalog: &[OddCut]) -> CutAudit {
    let families = invariant_clauses(r, state.matchings().len())
        .into_iter()
        .map(|(size, clause)| {
            let mut audit = FamilyAudit {
                cut_size: size,
                clause: clause.clone(),
                cuts: 0,
                max_sum: None,
                violation: None,
            };
            for cut in catalog.iter().filter(|c| c.edges.len() == size) {
                let sum = state.crossings(&cut.edges);
                audit.cuts += 1;
                audit.max_sum = Some(audit.max_sum.map_or(sum, |m| m.max(sum)));
                if !clause.holds(sum) {
                    let worse = audit
                        .violation
                        .as_ref()
                        .is_none_or(|(_, s)| clause.excess(sum) > clause.excess(*s));
                    if worse {
                        audit.violation = Some((cut.side.clone(), sum));
                    }
                }
            }
            audit
        })
        .collect();
    CutAudit::Checked(families)
}

/// Runs the greedy for `k` steps on an r-graph (`r >= 3`).
pub fn greedy_cover(
    g: &Multigraph,
    r: u32,
    k: usize,
    options: CoverOptions,
) -> Result<CoverReport> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "greedy cover needs r >= 3, got {r}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    cuts::require_r_graph(g, r)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let desk_scale = n <= options.odd_cap;
    if options.mode == Mode::ExactLemma && !desk_scale {
        return Err(Error::CapExceeded {
            what: "vertex count for exact-lemma mode",
            cap: options.odd_cap,
        });
    }
    let catalog = if desk_scale {
        let size = tight_cut_size_limit(r, k)?.max(r as usize + 2);
        Some(cuts::small_odd_cuts(g, size, options.odd_cap)?)
    } else {
        None
    };
    let pms = match options.mode {
        Mode::ExactLemma => enumerate_perfect_matchings(g, options.pm_cap)?,
        Mode::Fast => Vec::new(),
    };

    let mut state = CoverState::new(g);
    let mut certificates = Vec::with_capacity(k);
    for step in 1..=k {
        let uncovered = m - state.covered_count();
        let uniform_gain = Rational::new(uncovered.into(), (r as usize).into());

        // Step vector: uniform 1/r first, then the count-based vector.
        let (vector, coefficient) = if step == 1 {
            (
                fractional::uniform(g, r)?.values().to_vec(),
                ratio(1, r as i64),
            )
        } else {
            let w = fractional::build_w_k(g, r, step as u32, state.counts())?;
            let coef = fractional::step_weight(r, step as u32, 0)?;
            (w.values().to_vec(), coef)
        };
        let check_membership = !(options.mode == Mode::Fast && step == 1);
        let (verified, failure) = if check_membership {
            match verify_vector(g, &vector)? {
                None => (true, None),
                Some(v) => (false, Some(v.to_string())),
            }
        } else {
            (false, None)
        };
        let tight: Option<Vec<&OddCut>> = match (&catalog, verified) {
            (Some(cat), true) => Some(tight_in_catalog(cat, &vector)),
            _ => None,
        };

        let chosen = match options.mode {
            Mode::Fast => {
                let weights: Vec<i128> = (0..m).map(|e| i128::from(!state.is_covered(e))).collect();
                matching::max_weight_perfect_matching_scaled(g, &weights)?
            }
            Mode::ExactLemma => pick_in_face(&state, &pms, tight.as_deref())?,
        };

        let tight_cuts = match &tight {
            None => TightCuts::NotChecked,
            Some(list) => match list.iter().find(|c| crossings_of(&chosen, &c.edges) != 1) {
                Some(c) => TightCuts::Violated {
                    side: c.side.clone(),
                    crossings: crossings_of(&chosen, &c.edges),
                },
                None => TightCuts::Honored { count: list.len() },
            },
        };

        let actual = state.push(chosen);
        let (level, predicted) = if verified {
            let predicted = &coefficient * Rational::from_integer(uncovered.into());
            (BoundLevel::L1, predicted)
        } else {
            (BoundLevel::L0, uniform_gain.clone())
        };
        let actual_r = Rational::from_integer(actual.into());
        if actual_r < predicted || actual_r < uniform_gain {
            return Err(Error::Internal(format!(
                "step {step}: gain {actual} below certified {}",
                fmt_rational(&predicted)
            )));
        }
        let cut_audit = match &catalog {
            Some(cat) => audit_with_catalog(&state, r, cat),
            None => CutAudit::NotChecked,
        };
        certificates.push(IterationCertificate {
            step,
            level,
            membership_verified: verified,
            membership_failure: failure,
            uncovered_before: uncovered,
            predicted_gain: predicted,
            uniform_gain,
            actual_gain: actual,
            tight_cuts,
            cut_audit,
            stalled: actual == 0 && uncovered > 0,
        });
    }

    let covered = state.covered_count();
    let fraction = Rational::new(covered.into(), m.max(1).into());
    let bound = bounds::bound_improved(r, k as u32)?.value;
    Ok(CoverReport {
        r,
        k,
        mode: options.mode,
        bound_met: fraction >= bound,
        matchings: state.matchings().to_vec(),
        certificates,
        edge_count: m,
        covered,
        fraction,
        bound,
    })
}

/// Largest size a tight cut of any step vector up to step `k` can have: a
/// cut of `s` edges weighs at least `s` times the smallest entry, which is
/// the entry for an edge used by every earlier matching.
fn tight_cut_size_limit(r: u32, k: usize) -> Result<usize> {
    let mut limit = r as usize;
    for step in 2..=k as u32 {
        let smallest = fractional::step_weight(r, step, step - 1)?;
        let size = (smallest.recip()).floor().to_integer();
        limit = limit.max(size.to_usize().ok_or(Error::Overflow)?);
    }
    Ok(limit)
}

fn crossings_of(m: &Matching, edges: &[EdgeId]) -> usize {
    edges.iter().filter(|&&e| m.contains(e)).count()
}

fn tight_in_catalog<'c>(catalog: &'c [OddCut], w: &[Rational]) -> Vec<&'c OddCut> {
    let one = Rational::from_integer(1.into());
    catalog
        .iter()
        .filter(|c| c.edges.iter().fold(Rational::zero(), |acc, &e| acc + &w[e]) == one)
        .collect()
}

/// Best-coverage matching among those crossing every tight cut exactly once
/// (all matchings when `tight` is `None`); ties go to the lexicographically
/// least, which is the first in enumeration order.
fn pick_in_face(
    state: &CoverState<'_>,
    pms: &[Matching],
    tight: Option<&[&OddCut]>,
) -> Result<Matching> {
    let mut best: Option<(usize, &Matching)> = None;
    for pm in pms {
        if let Some(cuts) = tight {
            if cuts.iter().any(|c| crossings_of(pm, &c.edges) != 1) {
                continue;
            }
        }
        let gain = state.gain(pm);
        if best.is_none_or(|(g, _)| gain > g) {
            best = Some((gain, pm));
        }
    }
    match best {
        Some((_, pm)) => Ok(pm.clone()),
        None if pms.is_empty() => Err(Error::NoPerfectMatching),
        None => Err(Error::Internal(
            "no perfect matching crosses every tight cut once".into(),
        )),
    }
}
