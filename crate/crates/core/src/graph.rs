//! Undirected multigraphs with stable edge ids, vertex/edge subsets and the
//! edge-list text format.
//!
//! Edge ids are dense `0..m` in construction (file) order and never change.
//! Parallel edges are distinct edges; loops are rejected.

use std::fmt;
use std::io::Read;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Rational;

pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge {
                    line: id + 2,
                    vertex: u,
                });
            }
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Self { n, edges, incident })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// True iff every vertex has degree exactly `r`. Vacuously true for the
    /// empty graph.
    pub fn is_r_regular(&self, r: u32) -> bool {
        self.incident.iter().all(|inc| inc.len() == r as usize)
    }

    pub fn require_r_regular(&self, r: u32) -> Result<()> {
        if self.is_r_regular(r) {
            Ok(())
        } else {
            Err(Error::NotRegular(r))
        }
    }

    pub fn require_even_order(&self) -> Result<()> {
        if self.n % 2 == 1 {
            Err(Error::OddVertexCount(self.n))
        } else {
            Ok(())
        }
    }

    /// Edges with exactly one end in `s`.
    pub fn boundary(&self, s: &VertexSet) -> Result<EdgeSet> {
        s.check_range(self.n)?;
        let mask = s.mask(self.n);
        let ids = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| mask[u] != mask[v])
            .map(|(id, _)| id)
            .collect();
        Ok(EdgeSet(ids))
    }

    /// `w(boundary(s))` for a per-edge weight vector.
    pub fn cut_weight(&self, mask: &[bool], weights: &[Rational]) -> Rational {
        self.edges
            .iter()
            .zip(weights)
            .filter(|(&(u, v), _)| mask[u] != mask[v])
            .fold(Rational::default(), |acc, (_, w)| acc + w)
    }

    pub fn check_weights<T>(&self, weights: &[T]) -> Result<()> {
        if weights.len() != self.edges.len() {
            return Err(Error::WeightLength {
                expected: self.edges.len(),
                got: weights.len(),
            });
        }
        Ok(())
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
    /// `#` starts a comment; blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::EmptyInput)?;
        let [n, m] = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body)?;
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    reason: format!("more than {m} edge lines"),
                });
            }
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { line, vertex: u });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                reason: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Self::new(n, edges)
    }

    pub fn read_edge_list(mut reader: impl Read) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        Self::parse_edge_list(&text)
    }

    /// Canonical edge-list text: header, then edges in id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            reason: format!("expected two integers, got `{body}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            reason: format!("`{f}` is not a nonnegative integer"),
        })?;
    }
    Ok(out)
}

/// A set of vertices, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn from_bits(bits: u64, n: usize) -> Self {
        Self((0..n).filter(|&i| bits >> i & 1 == 1).collect())
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn complement(&self, n: usize) -> Self {
        let mask = self.mask(n);
        Self((0..n).filter(|&v| !mask[v]).collect())
    }

    /// The side of the cut `{self, complement}` that does not contain vertex 0.
    pub fn canonical_side(&self, n: usize) -> Self {
        if self.contains(0) {
            self.complement(n)
        } else {
            self.clone()
        }
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A set of edge ids, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn new(ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut v: Vec<EdgeId> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    /// 0/1 indicator over `0..m`.
    pub fn indicator(&self, m: usize) -> Vec<u32> {
        let mut out = vec![0; m];
        for &e in &self.0 {
            out[e] = 1;
        }
        out
    }

    pub fn intersection_len(&self, other: &EdgeSet) -> usize {
        self.0.iter().filter(|e| other.contains(**e)).count()
    }
}
