//! Augmenting-path max flow on an undirected multigraph with contracted
//! terminal sets. Capacities are edge multiplicities; loops are dropped.

use std::collections::VecDeque;

use crate::graph::Graph;

const SOURCE: usize = 0;
const SINK: usize = 1;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    residual: u64,
}

/// Flow network where all sources are merged into one node and all sinks
/// into another. Each undirected edge becomes a pair of opposed arcs that
/// serve as each other's reverse.
pub(crate) struct TerminalNetwork {
    /// Node of each original vertex.
    node_of: Vec<usize>,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

pub(crate) enum FlowOutcome {
    /// Maximum flow value and, per original vertex, whether it lies on the
    /// source side of the minimum cut closest to the sources.
    Complete { value: u64, source_side: Vec<bool> },
    /// The flow exceeded the caller's limit before it was saturated.
    Exceeded,
}

impl TerminalNetwork {
    pub(crate) fn new(graph: &Graph, is_source: &[bool], is_sink: &[bool]) -> Self {
        let mut node_of = vec![0; graph.n()];
        let mut next = 2;
        for x in 0..graph.n() {
            node_of[x] = if is_source[x] {
                SOURCE
            } else if is_sink[x] {
                SINK
            } else {
                next += 1;
                next - 1
            };
        }
        let mut out = vec![Vec::new(); next];
        let mut arcs = Vec::with_capacity(2 * graph.edges().len());
        for e in graph.edges() {
            let (a, b) = (node_of[e.u], node_of[e.v]);
            if a == b {
                continue;
            }
            let cap = u64::from(e.multiplicity);
            out[a].push(arcs.len());
            arcs.push(Arc { to: b, residual: cap });
            out[b].push(arcs.len());
            arcs.push(Arc { to: a, residual: cap });
        }
        TerminalNetwork { node_of, arcs, out }
    }

    /// Runs augmenting paths (shortest first) until no path remains or the
    /// flow exceeds `limit`.
    pub(crate) fn run(mut self, limit: u64) -> FlowOutcome {
        let nodes = self.out.len();
        let mut via = vec![usize::MAX; nodes];
        let mut value = 0u64;
        loop {
            via.iter_mut().for_each(|p| *p = usize::MAX);
            let reached_sink = self.bfs(&mut via);
            if !reached_sink {
                let source_side = self
                    .node_of
                    .iter()
                    .map(|&node| node == SOURCE || via[node] != usize::MAX)
                    .collect();
                return FlowOutcome::Complete { value, source_side };
            }
            let mut bottleneck = u64::MAX;
            let mut node = SINK;
            while node != SOURCE {
                let arc = via[node];
                bottleneck = bottleneck.min(self.arcs[arc].residual);
                node = self.arcs[arc ^ 1].to;
            }
            let mut node = SINK;
            while node != SOURCE {
                let arc = via[node];
                self.arcs[arc].residual -= bottleneck;
                self.arcs[arc ^ 1].residual += bottleneck;
                node = self.arcs[arc ^ 1].to;
            }
            value += bottleneck;
            if value > limit {
                return FlowOutcome::Exceeded;
            }
        }
    }

    /// Marks `via[node]` with the arc used to reach it; returns whether the
    /// sink was reached.
    fn bfs(&self, via: &mut [usize]) -> bool {
        let mut queue = VecDeque::from([SOURCE]);
        via[SOURCE] = usize::MAX - 1;
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let arc = self.arcs[a];
                if arc.residual > 0 && via[arc.to] == usize::MAX {
                    via[arc.to] = a;
                    if arc.to == SINK {
                        return true;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(graph: &Graph, s: &[usize], t: &[usize], limit: u64) -> Option<(u64, Vec<bool>)> {
        let mut src = vec![false; graph.n()];
        let mut snk = vec![false; graph.n()];
        s.iter().for_each(|&x| src[x] = true);
        t.iter().for_each(|&x| snk[x] = true);
        match TerminalNetwork::new(graph, &src, &snk).run(limit) {
            FlowOutcome::Complete { value, source_side } => Some((value, source_side)),
            FlowOutcome::Exceeded => None,
        }
    }

    #[test]
    fn parallel_edges_are_capacity() {
        let g = Graph::new(3, [(0, 1), (0, 1), (1, 2), (1, 2), (1, 2)]).unwrap();
        let (value, side) = outcome(&g, &[0], &[2], u64::MAX).unwrap();
        assert_eq!(value, 2);
        assert_eq!(side, vec![true, false, false]);
    }

    #[test]
    fn contraction_drops_internal_edges() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (value, _) = outcome(&g, &[0, 1], &[2, 3], u64::MAX).unwrap();
        assert_eq!(value, 2);
    }

    #[test]
    fn limit_aborts() {
        let g = Graph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(outcome(&g, &[0], &[1], 2).is_none());
        assert_eq!(outcome(&g, &[0], &[1], 3).unwrap().0, 3);
    }
}
