//! Restricted edge-connectivity.
//!
//! `lambda_k(G)` is the minimum number of edges whose removal disconnects
//! `G` so that every remaining component has at least `k` vertices. Two
//! independent routes compute it:
//!
//! * [`lambda_k_bruteforce`] scans every vertex bipartition whose two
//!   induced sides have all components of order `>= k`. Minimizing over
//!   bipartitions is exact: for any restricted cut `S`, the boundary of a
//!   union of components of `G - S` is itself restricted and no larger.
//! * [`lambda_k`] takes the minimum over pairs of disjoint connected
//!   `k`-sets `(A, B)`, with `0 in A`, of the `A`-`B` minimum cut. Each cut is normalized
//!   by moving stray components across, which never increases its size,
//!   so every returned witness is a valid restricted bipartition.

mod brute;
mod classify;
mod flow;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use brute::MASK_LIMIT;
pub use classify::{classify, ClassificationReport, Decision};

use crate::count::ExtendedCount;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use brute::{scan, MaskGraph};
use flow::{FlowOutcome, TerminalNetwork};

/// Default vertex limit for exhaustive scans.
pub const DEFAULT_CEILING: usize = 22;

/// Connectivity value with a witness bipartition.
///
/// The witness side always contains vertex 0; `crossing_edges` is its
/// boundary. Infinite results carry an empty witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub value: ExtendedCount,
    pub witness_side: VertexSet,
    pub crossing_edges: Vec<(usize, usize)>,
}

impl CutResult {
    pub fn infinite() -> Self {
        CutResult {
            value: ExtendedCount::Infinity,
            witness_side: VertexSet::default(),
            crossing_edges: Vec::new(),
        }
    }

    /// Cut `(side, V \ side)`, canonicalized so the witness contains 0.
    pub fn from_side(graph: &Graph, side: VertexSet) -> Result<Self> {
        let side = if side.contains(0) { side } else { side.complement(graph.n()) };
        let crossing_edges = graph.boundary(&side)?;
        Ok(CutResult {
            value: ExtendedCount::Finite(crossing_edges.len() as u64),
            witness_side: side,
            crossing_edges,
        })
    }

    /// Re-checks the witness against `graph`: the crossing edges are the
    /// boundary, the value is their count, and both sides have every
    /// component of order at least `k`.
    pub fn validate(&self, graph: &Graph, k: usize) -> std::result::Result<(), String> {
        if self.value == ExtendedCount::Infinity {
            return if self.witness_side.is_empty() && self.crossing_edges.is_empty() {
                Ok(())
            } else {
                Err("infinite result carries a witness".into())
            };
        }
        if !self.witness_side.contains(0) {
            return Err("witness side does not contain vertex 0".into());
        }
        let boundary = graph.boundary(&self.witness_side).map_err(|e| e.to_string())?;
        if boundary != self.crossing_edges {
            return Err("crossing edges differ from the witness boundary".into());
        }
        if self.value != ExtendedCount::Finite(boundary.len() as u64) {
            return Err(format!("value {} but {} crossing edges", self.value, boundary.len()));
        }
        let other = self.witness_side.complement(graph.n());
        for side in [&self.witness_side, &other] {
            let sub = graph.induced_subgraph(side).map_err(|e| e.to_string())?;
            if let Some(c) = sub.components().iter().find(|c| c.len() < k) {
                return Err(format!("a side has a component of order {} < {k}", c.len()));
            }
        }
        Ok(())
    }
}

fn check_order(k: usize) -> Result<u32> {
    match k {
        1..=3 => Ok(k as u32),
        _ => Err(Error::UnsupportedOrder(k)),
    }
}

fn to_mask_result(graph: &Graph, value: Option<u64>, side: Option<u64>) -> Result<CutResult> {
    match (value, side) {
        (Some(_), Some(side)) => CutResult::from_side(graph, VertexSet::from_mask(side)),
        _ => Ok(CutResult::infinite()),
    }
}

/// Minimum number of edges separating `sources` from `sinks`.
///
/// Both terminal sets are contracted; the witness is the source side of the
/// cut nearest the sources (complemented if needed to contain vertex 0).
pub fn max_flow_min_cut(graph: &Graph, sources: &VertexSet, sinks: &VertexSet) -> Result<CutResult> {
    if sources.is_empty() || sinks.is_empty() || !sources.is_disjoint(sinks) {
        return Err(Error::BadTerminals);
    }
    for x in sources.iter().chain(sinks.iter()) {
        if x >= graph.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: graph.n() });
        }
    }
    let (is_source, is_sink) = (indicator(graph.n(), sources), indicator(graph.n(), sinks));
    match TerminalNetwork::new(graph, &is_source, &is_sink).run(u64::MAX) {
        FlowOutcome::Complete { source_side, .. } => {
            CutResult::from_side(graph, side_set(&source_side, true))
        }
        FlowOutcome::Exceeded => unreachable!("no limit was set"),
    }
}

fn indicator(n: usize, set: &VertexSet) -> Vec<bool> {
    let mut v = vec![false; n];
    set.iter().for_each(|x| v[x] = true);
    v
}

fn side_set(side: &[bool], which: bool) -> VertexSet {
    VertexSet::new(side.iter().enumerate().filter(|&(_, &s)| s == which).map(|(i, _)| i))
}

/// Exhaustive oracle: minimum boundary over all restricted bipartitions.
/// Ties go to the lexicographically smallest witness side.
pub fn lambda_k_bruteforce(graph: &Graph, k: usize, ceiling: usize) -> Result<CutResult> {
    let k = check_order(k)?;
    let mg = MaskGraph::new(graph, ceiling)?;
    let r = scan(&mg, false, |side| mg.is_restricted(side, k));
    to_mask_result(graph, r.best, r.sides.first().copied())
}

/// Every minimum restricted bipartition, ordered by witness side.
pub fn enumerate_min_k_cuts(graph: &Graph, k: usize, ceiling: usize) -> Result<Vec<CutResult>> {
    let k = check_order(k)?;
    let mg = MaskGraph::new(graph, ceiling)?;
    let r = scan(&mg, true, |side| mg.is_restricted(side, k));
    r.sides
        .into_iter()
        .map(|side| CutResult::from_side(graph, VertexSet::from_mask(side)))
        .collect()
}

/// Minimum boundary over vertex sets with size in `[lo, hi]`, together
/// with every achieving set. A set and its complement count once; the
/// representative reported is the one containing vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMinimum {
    pub value: u64,
    pub achievers: Vec<VertexSet>,
}

pub fn min_boundary_over_sizes(
    graph: &Graph,
    lo: usize,
    hi: usize,
    ceiling: usize,
) -> Result<BoundaryMinimum> {
    let n = graph.n();
    if lo < 1 || lo > hi || hi + 1 > n {
        return Err(Error::EmptyWindow { lo, hi, n });
    }
    let mg = MaskGraph::new(graph, ceiling)?;
    let in_window = |size: u32| (lo..=hi).contains(&(size as usize));
    let r = scan(&mg, true, |side| {
        let size = side.count_ones();
        in_window(size) || in_window(n as u32 - size)
    });
    Ok(BoundaryMinimum {
        value: r.best.expect("a nonempty window always admits a set"),
        achievers: r.sides.into_iter().map(VertexSet::from_mask).collect(),
    })
}

/// All vertex sets of order `k` (1, 2 or 3) that induce a connected subgraph.
pub fn connected_subsets(graph: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    check_order(k)?;
    let out = match k {
        1 => (0..graph.n()).map(|v| VertexSet::new([v])).collect(),
        2 => graph
            .edges()
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| VertexSet::new([e.u, e.v]))
            .collect(),
        _ => {
            let mut triples = BTreeSet::new();
            for v in 0..graph.n() {
                let nbrs: Vec<usize> = graph.simple_neighbors(v).collect();
                for (i, &x) in nbrs.iter().enumerate() {
                    for &y in &nbrs[i + 1..] {
                        triples.insert(VertexSet::new([v, x, y]));
                    }
                }
            }
            triples.into_iter().collect()
        }
    };
    Ok(out)
}

/// Flow method for `lambda_k`, `k` in `{1, 2, 3}`.
///
/// Disconnected inputs follow the definition literally: the value is 0
/// (witness: the component of vertex 0) when every component has order
/// at least `k`, and infinite otherwise.
pub fn lambda_k(graph: &Graph, k: usize) -> Result<CutResult> {
    let order = check_order(k)? as usize;
    let n = graph.n();
    if n < 2 {
        return Ok(CutResult::infinite());
    }
    let comps = graph.components();
    if comps.len() > 1 {
        return if comps.iter().all(|c| c.len() >= order) {
            CutResult::from_side(graph, comps[0].clone())
        } else {
            Ok(CutResult::infinite())
        };
    }

    // Some optimal bipartition has vertex 0 on its witness side, and the
    // component of 0 there contains a connected k-set through 0; so sources
    // only range over connected k-sets containing 0.
    let subsets = connected_subsets(graph, order)?;
    let pairs: Vec<(&VertexSet, &VertexSet)> = subsets
        .iter()
        .filter(|a| a.contains(0))
        .flat_map(|a| subsets.iter().filter(|b| a.is_disjoint(b)).map(move |b| (a, b)))
        .collect();

    let best = AtomicU64::new(u64::MAX);
    let winner = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let limit = best.load(AtomicOrdering::Relaxed);
            let net = TerminalNetwork::new(graph, &indicator(n, a), &indicator(n, b));
            let FlowOutcome::Complete { value, mut source_side } = net.run(limit) else {
                return None;
            };
            if order > 1 {
                migrate_stray_components(graph, &mut source_side, a, b);
            }
            let cut = CutResult::from_side(graph, side_set(&source_side, true))
                .expect("both terminal sets are nonempty");
            debug_assert_eq!(cut.value, ExtendedCount::Finite(value));
            best.fetch_min(value, AtomicOrdering::Relaxed);
            Some(cut)
        })
        .min_by(|x, y| (x.value, &x.witness_side).cmp(&(y.value, &y.witness_side)));
    Ok(winner.unwrap_or_else(CutResult::infinite))
}

/// Components of `G[{x : side[x] == which}]`.
fn side_components(graph: &Graph, side: &[bool], which: bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; graph.n()];
    let mut out = Vec::new();
    for root in 0..graph.n() {
        if side[root] != which || seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for y in graph.simple_neighbors(x) {
                if side[y] == which && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Turns an `A`-`B` cut of a connected graph into a restricted bipartition
/// of no larger size: keep the component holding `A` on the source side,
/// then keep the component holding `B` on the sink side. A component of one
/// side has no edges to the rest of its side, so moving it never adds
/// crossing edges.
fn migrate_stray_components(graph: &Graph, side: &mut [bool], a: &VertexSet, b: &VertexSet) {
    let anchor = a.min().expect("nonempty terminal set");
    for comp in side_components(graph, side, true) {
        if !comp.contains(&anchor) {
            comp.iter().for_each(|&x| side[x] = false);
        }
    }
    let anchor = b.min().expect("nonempty terminal set");
    for comp in side_components(graph, side, false) {
        if !comp.contains(&anchor) {
            comp.iter().for_each(|&x| side[x] = true);
        }
    }
}

/// Minimum edge-degree `d(u) + d(v) - 2` over non-loop edges.
pub fn xi(graph: &Graph) -> ExtendedCount {
    graph
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| ExtendedCount::Finite(graph.degree(e.u) + graph.degree(e.v) - 2))
        .min()
        .unwrap_or(ExtendedCount::Infinity)
}

/// Minimum boundary over connected 3-vertex sets.
pub fn xi3(graph: &Graph) -> ExtendedCount {
    connected_subsets(graph, 3)
        .expect("order 3 is supported")
        .iter()
        .map(|x| {
            if x.len() == graph.n() {
                ExtendedCount::ZERO
            } else {
                ExtendedCount::Finite(graph.boundary_size(x).expect("proper subset"))
            }
        })
        .min()
        .unwrap_or(ExtendedCount::Infinity)
}

/// Whether `G` admits a 3-restricted edge-cut.
///
/// For a connected graph this holds exactly when `G` has two vertex-disjoint
/// paths on three vertices. A disconnected graph has one exactly when every
/// component has at least three vertices.
pub fn has_lambda3_cut(graph: &Graph) -> bool {
    let comps = graph.components();
    if comps.len() > 1 {
        return comps.iter().all(|c| c.len() >= 3);
    }
    if graph.n() < 6 {
        return false;
    }
    let triples = connected_subsets(graph, 3).expect("order 3 is supported");
    triples
        .iter()
        .enumerate()
        .any(|(i, a)| triples[i + 1..].iter().any(|b| a.is_disjoint(b)))
}
