//! Exhaustive bipartition scans over bit masks.
//!
//! Every bipartition `(X, V \ X)` is visited once with vertex 0 fixed in
//! `X`. The free vertices are split into a fixed number of chunks by their
//! high bits; each chunk walks its low bits in Gray-code order so the
//! boundary is updated in `O(deg)` per step. Chunks run in parallel and
//! reduce on `(value, lexicographic witness)`, which makes the result
//! independent of scheduling.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count a mask can represent with room for the chunk walk.
pub const MASK_LIMIT: usize = 63;

pub(crate) struct MaskGraph {
    n: usize,
    /// Loop-free neighbor masks.
    adj: Vec<u64>,
    /// `(neighbor, multiplicity)` without loops.
    links: Vec<Vec<(usize, u64)>>,
}

impl MaskGraph {
    pub(crate) fn new(graph: &Graph, ceiling: usize) -> Result<Self> {
        let n = graph.n();
        if n > ceiling.min(MASK_LIMIT) {
            return Err(Error::AboveCeiling { n, ceiling: ceiling.min(MASK_LIMIT) });
        }
        let mut adj = vec![0u64; n];
        let mut links = vec![Vec::new(); n];
        for e in graph.edges().iter().filter(|e| !e.is_loop()) {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
            links[e.u].push((e.v, u64::from(e.multiplicity)));
            links[e.v].push((e.u, u64::from(e.multiplicity)));
        }
        Ok(MaskGraph { n, adj, links })
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn boundary(&self, side: u64) -> u64 {
        let mut total = 0;
        let mut m = side;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            total += self.links[v]
                .iter()
                .filter(|&&(w, _)| side & (1 << w) == 0)
                .map(|&(_, c)| c)
                .sum::<u64>();
        }
        total
    }

    /// Connected component of `G[side]` containing `seed`.
    pub(crate) fn component(&self, side: u64, seed: usize) -> u64 {
        let mut comp = 1u64 << seed;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & side & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }

    /// Every component of `G[side]` has at least `k` vertices.
    pub(crate) fn components_at_least(&self, side: u64, k: u32) -> bool {
        if side.count_ones() < k {
            return false;
        }
        if k <= 1 {
            return true;
        }
        let mut rest = side;
        while rest != 0 {
            let comp = self.component(side, rest.trailing_zeros() as usize);
            if comp.count_ones() < k {
                return false;
            }
            rest &= !comp;
        }
        true
    }

    /// Both sides of `(side, V \ side)` have all components of order `>= k`.
    pub(crate) fn is_restricted(&self, side: u64, k: u32) -> bool {
        self.components_at_least(side, k) && self.components_at_least(self.full() & !side, k)
    }
}

/// Order of two sets as their ascending vertex lists compare
/// lexicographically (a proper prefix is smaller).
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff.trailing_zeros();
    let above = |m: u64| if low == 63 { 0 } else { m >> (low + 1) };
    if a & (1 << low) != 0 {
        // `a` continues with `low`; `b` continues with something larger or stops.
        if above(b) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Outcome of a scan: the minimum boundary among accepted bipartitions and
/// the achieving sides (all of them, or only the lexicographically least).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ScanResult {
    pub best: Option<u64>,
    pub sides: Vec<u64>,
}

impl ScanResult {
    fn empty() -> Self {
        ScanResult { best: None, sides: Vec::new() }
    }

    fn offer(&mut self, value: u64, side: u64, collect_all: bool) {
        match self.best {
            Some(b) if value > b => {}
            Some(b) if value == b => {
                if collect_all {
                    self.sides.push(side);
                } else if lex_cmp(side, self.sides[0]) == Ordering::Less {
                    self.sides[0] = side;
                }
            }
            _ => {
                self.best = Some(value);
                self.sides.clear();
                self.sides.push(side);
            }
        }
    }

    fn merge(mut self, other: ScanResult, collect_all: bool) -> ScanResult {
        if let Some(v) = other.best {
            for side in other.sides {
                self.offer(v, side, collect_all);
            }
        }
        self
    }
}

/// Minimizes the boundary over all bipartitions `(X, V \ X)` with `0 in X`
/// accepted by `accept`. `accept` is only consulted for sides whose
/// boundary does not exceed the running minimum of the chunk.
pub(crate) fn scan<F>(graph: &MaskGraph, collect_all: bool, accept: F) -> ScanResult
where
    F: Fn(u64) -> bool + Sync,
{
    let n = graph.n();
    if n < 2 {
        return ScanResult::empty();
    }
    let free = n - 1;
    let chunk_bits = free.min(8);
    let low_bits = free - chunk_bits;

    let mut result = (0u64..1 << chunk_bits)
        .into_par_iter()
        .map(|chunk| {
            let mut local = ScanResult::empty();
            // Free vertex i (0-based) is graph vertex i + 1.
            let mut side = 1u64 | (chunk << (low_bits + 1));
            let mut value = graph.boundary(side);
            let consider = |side: u64, value: u64, local: &mut ScanResult| {
                if side == graph.full() {
                    return;
                }
                if local.best.is_some_and(|b| value > b) {
                    return;
                }
                if accept(side) {
                    local.offer(value, side, collect_all);
                }
            };
            consider(side, value, &mut local);
            for step in 1u64..1 << low_bits {
                let bit = step.trailing_zeros() as usize + 1;
                let entering = side & (1 << bit) == 0;
                let (mut same, mut other) = (0u64, 0u64);
                for &(w, c) in &graph.links[bit] {
                    if side & (1 << w) != 0 {
                        same += c;
                    } else {
                        other += c;
                    }
                }
                // `same` counts edges to X, `other` edges to V \ X, before the flip.
                if entering {
                    value = value - same + other;
                    side |= 1 << bit;
                } else {
                    value = value - other + same;
                    side &= !(1 << bit);
                }
                #[cfg(test)]
                debug_assert_eq!(value, graph.boundary(side));
                consider(side, value, &mut local);
            }
            local
        })
        .reduce(ScanResult::empty, |a, b| a.merge(b, collect_all));

    if collect_all {
        result.sides.sort_by(|&a, &b| lex_cmp(a, b));
    }
    result
}
