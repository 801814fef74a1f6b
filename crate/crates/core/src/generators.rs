//! Named graphs and the random r-graph generator.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cuts;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Attempts the pairing model makes before giving up.
pub const DEFAULT_REJECTION_BUDGET: usize = 10_000;

/// The Petersen graph: outer 5-cycle on 0..5, spokes `i -- i+5`, inner
/// pentagram on 5..10.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::new(10, edges).expect("static construction")
}

pub fn k4() -> Multigraph {
    Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("static construction")
}

/// K_{3,3} with color classes {0,1,2} and {3,4,5}.
pub fn k33() -> Multigraph {
    let edges = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    Multigraph::new(6, edges).expect("static construction")
}

/// Two vertices joined by `r` parallel edges.
pub fn dipole(r: usize) -> Result<Multigraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("dipole needs r >= 1".into()));
    }
    Multigraph::new(2, vec![(0, 1); r])
}

/// Circular ladder: cycles on `0..n` and `n..2n` with rungs `i -- i+n`.
pub fn prism(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("prism needs n >= 3".into()));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in 0..n {
        edges.push((n + i, n + (i + 1) % n));
    }
    for i in 0..n {
        edges.push((i, n + i));
    }
    Multigraph::new(2 * n, edges)
}

/// Smallest cubic graph with a bridge: two copies of K4 with one edge
/// subdivided, the subdivision vertices (4 and 9) joined by a bridge.
/// Each side has 5 vertices, so the bridge is an odd 1-cut.
pub fn bridge_pair() -> Multigraph {
    let mut edges = Vec::with_capacity(15);
    for base in [0, 5] {
        edges.extend([
            (base, base + 2),
            (base, base + 3),
            (base + 1, base + 2),
            (base + 1, base + 3),
            (base + 2, base + 3),
            (base, base + 4),
            (base + 1, base + 4),
        ]);
    }
    edges.push((4, 9));
    Multigraph::new(10, edges).expect("static construction")
}

/// Random r-regular multigraph by the pairing model. Samples with loops, or
/// that are not r-graphs, are rejected and redrawn.
pub fn random_regular(n: usize, r: u32, seed: u64) -> Result<Multigraph> {
    random_regular_with_budget(n, r, seed, DEFAULT_REJECTION_BUDGET)
}

pub fn random_regular_with_budget(
    n: usize,
    r: u32,
    seed: u64,
    budget: usize,
) -> Result<Multigraph> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "random_regular needs a positive even n, got {n}"
        )));
    }
    if r == 0 {
        return Err(Error::InvalidParameter(
            "random_regular needs r >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, r as usize))
        .collect();
    for _ in 0..budget {
        points.sort_unstable();
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Multigraph::new(n, pairs)?;
        if cuts::is_r_graph(&g, r)?.is_r_graph {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExhausted(budget))
}

/// Builds a graph from a `name[:p1,p2,...]` spec, e.g. `petersen`,
/// `dipole:5`, `prism:4`, `random_regular:20,4,7`.
pub fn from_spec(spec: &str) -> Result<Multigraph> {
    let (name, params) = match spec.split_once(':') {
        Some((name, rest)) => (name, rest),
        None => (spec, ""),
    };
    let params: Vec<u64> = params
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse()
                .map_err(|_| Error::InvalidParameter(format!("bad generator parameter `{p}`")))
        })
        .collect::<Result<_>>()?;
    generate_named(name, &params)
}

pub fn generate_named(name: &str, params: &[u64]) -> Result<Multigraph> {
    let expect = |count: usize| -> Result<()> {
        if params.len() == count {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "`{name}` takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "petersen" => expect(0).map(|_| petersen()),
        "k4" => expect(0).map(|_| k4()),
        "k33" => expect(0).map(|_| k33()),
        "bridge_pair" => expect(0).map(|_| bridge_pair()),
        "dipole" => {
            expect(1)?;
            dipole(params[0] as usize)
        }
        "prism" => {
            expect(1)?;
            prism(params[0] as usize)
        }
        "random_regular" => {
            expect(3)?;
            let r = u32::try_from(params[1])
                .map_err(|_| Error::InvalidParameter("r too large".into()))?;
            random_regular(params[0] as usize, r, params[2])
        }
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}
