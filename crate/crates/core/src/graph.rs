//! Undirected multigraphs with loops.
//!
//! Vertices are the dense integers `0..n`. Edges are stored once per
//! unordered pair `{u, v}` (with `u <= v`) together with a multiplicity.
//! A loop contributes two to the degree of its vertex but never crosses a
//! bipartition, so it is invisible to boundaries, cuts and girth.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::count::ExtendedCount;
use crate::error::{Error, Result};

/// One stored edge class: the unordered pair `{u, v}` with `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u32,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// The vertices whose bits are set in `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(v)
    }

    /// Bit mask of the set; `None` if some vertex is 64 or above.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &x| (x < 64).then(|| acc | (1u64 << x)))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// `0..n` minus this set.
    pub fn complement(&self, n: usize) -> Self {
        let mut out = Vec::with_capacity(n.saturating_sub(self.0.len()));
        let mut it = self.0.iter().peekable();
        for x in 0..n {
            if it.peek() == Some(&&x) {
                it.next();
            } else {
                out.push(x);
            }
        }
        VertexSet(out)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&x) if x >= n => Err(Error::VertexOutOfRange { vertex: x, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Minimum and maximum degree, and the common degree of a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: u64,
    pub max: u64,
    pub regular: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, u32)>>,
}

impl Graph {
    /// Builds a graph from a list of endpoint pairs. Repeated pairs
    /// accumulate multiplicity; `(u, u)` is a loop.
    pub fn new(n: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            *counts.entry((u.min(v), u.max(v))).or_default() += 1;
        }
        Ok(Self::from_counts(n, counts))
    }

    /// Builds a graph from explicit `(u, v, multiplicity)` triples.
    pub fn with_multiplicities(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self> {
        let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if m > 0 {
                *counts.entry((u.min(v), u.max(v))).or_default() += m;
            }
        }
        Ok(Self::from_counts(n, counts))
    }

    fn from_counts(n: usize, counts: BTreeMap<(usize, usize), u32>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let edges: Vec<Edge> = counts
            .into_iter()
            .map(|((u, v), multiplicity)| Edge { u, v, multiplicity })
            .collect();
        for e in &edges {
            adjacency[e.u].push((e.v, e.multiplicity));
            if !e.is_loop() {
                adjacency[e.v].push((e.u, e.multiplicity));
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge classes sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Every edge repeated by multiplicity, as `(u, v)` with `u <= v`.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .flat_map(|e| std::iter::repeat_n((e.u, e.v), e.multiplicity as usize))
            .collect()
    }

    /// Total edge multiplicity; a loop counts as one edge.
    pub fn edge_count(&self) -> u64 {
        self.edges.iter().map(|e| u64::from(e.multiplicity)).sum()
    }

    pub fn loop_count(&self) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.is_loop())
            .map(|e| u64::from(e.multiplicity))
            .sum()
    }

    /// Total multiplicity of non-loop edges.
    pub fn link_count(&self) -> u64 {
        self.edge_count() - self.loop_count()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| !e.is_loop() && e.multiplicity == 1)
    }

    /// `(neighbor, multiplicity)` pairs of `u`, sorted; a loop lists `u` once.
    pub fn neighbors(&self, u: usize) -> &[(usize, u32)] {
        &self.adjacency[u]
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        let list = &self.adjacency[u];
        match list.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => list[i].1,
            Err(_) => 0,
        }
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.multiplicity(u, u) > 0
    }

    pub fn degree(&self, u: usize) -> u64 {
        self.adjacency[u]
            .iter()
            .map(|&(w, m)| if w == u { 2 * u64::from(m) } else { u64::from(m) })
            .sum()
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::Degenerate("degree statistics of the empty graph"));
        }
        let degrees = (0..self.n).map(|u| self.degree(u));
        let (min, max) = degrees.fold((u64::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok(DegreeStats { min, max, regular: (min == max).then_some(min) })
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if label[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[root] = id;
            let mut members = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(VertexSet::new(members));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `set`, relabeled `0..|set|` in ascending order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        set.check_range(self.n)?;
        let mut index = vec![usize::MAX; self.n];
        for (i, x) in set.iter().enumerate() {
            index[x] = i;
        }
        let kept = self.edges.iter().filter_map(|e| {
            let (a, b) = (index[e.u], index[e.v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b, e.multiplicity))
        });
        Graph::with_multiplicities(set.len(), kept)
    }

    /// Edges with exactly one end in `set`, repeated by multiplicity.
    pub fn boundary(&self, set: &VertexSet) -> Result<Vec<(usize, usize)>> {
        self.check_proper(set)?;
        let inside = self.membership(set);
        Ok(self
            .edges
            .iter()
            .filter(|e| inside[e.u] != inside[e.v])
            .flat_map(|e| std::iter::repeat_n((e.u, e.v), e.multiplicity as usize))
            .collect())
    }

    pub fn boundary_size(&self, set: &VertexSet) -> Result<u64> {
        self.check_proper(set)?;
        let inside = self.membership(set);
        Ok(self
            .edges
            .iter()
            .filter(|e| inside[e.u] != inside[e.v])
            .map(|e| u64::from(e.multiplicity))
            .sum())
    }

    fn check_proper(&self, set: &VertexSet) -> Result<()> {
        set.check_range(self.n)?;
        if set.is_empty() || set.len() == self.n {
            return Err(Error::TrivialBipartition);
        }
        Ok(())
    }

    fn membership(&self, set: &VertexSet) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        for x in set.iter() {
            inside[x] = true;
        }
        inside
    }

    /// Neighbors of `u` other than `u` itself, ignoring multiplicity.
    pub fn simple_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[u].iter().map(|&(w, _)| w).filter(move |&w| w != u)
    }

    /// Length of the shortest cycle of the simple skeleton. Loops and
    /// parallel pairs are not cycles here.
    pub fn girth(&self) -> ExtendedCount {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for y in self.simple_neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == usize::MAX {
            ExtendedCount::Infinity
        } else {
            ExtendedCount::Finite(best as u64)
        }
    }

    /// True iff there are no loops and the skeleton is properly 2-colorable.
    pub fn is_bipartite(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let mut color = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.simple_neighbors(x) {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
