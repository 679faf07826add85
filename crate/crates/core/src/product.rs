//! Direct (Kronecker) products `G x H`.
//!
//! `(u1, v1) ~ (u2, v2)` iff `u1 u2` is an edge of `G` and `v1 v2` is an edge
//! of `H`, where a loop at `v` makes `v` adjacent to itself. Vertices are
//! flattened row-major with the `H` coordinate fastest:
//! `flat(u, v) = u * |V(H)| + v`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    left_order: usize,
    right_order: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// `(|V(G)|, |V(H)|)`.
    pub fn factor_orders(&self) -> (usize, usize) {
        (self.left_order, self.right_order)
    }

    pub fn flat(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.left_order && v < self.right_order);
        u * self.right_order + v
    }

    pub fn coords(&self, x: usize) -> (usize, usize) {
        (x / self.right_order, x % self.right_order)
    }

    /// The `H`-layer `{(u, v) : v in V(H)}`.
    pub fn layer(&self, u: usize) -> Result<VertexSet> {
        if u >= self.left_order {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.left_order });
        }
        Ok(VertexSet::new((0..self.right_order).map(|v| self.flat(u, v))))
    }

    /// One-line description of the factors and indexing, for file headers.
    pub fn describe(&self) -> String {
        format!(
            "direct product of |V(G)|={} and |V(H)|={}; vertex (u,v) -> u*{}+v",
            self.left_order, self.right_order, self.right_order
        )
    }
}

/// Builds `G x H`. `G` must be simple; `H` may carry loops and parallel
/// edges (multiplicities multiply).
pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::Degenerate("product factors must be nonempty"));
    }
    if g.has_loops() {
        return Err(Error::NonSimpleFactor("G has a loop"));
    }
    if !g.is_simple() {
        return Err(Error::NonSimpleFactor("G has parallel edges"));
    }
    let hn = h.n();
    let flat = |u: usize, v: usize| u * hn + v;
    let mut edges = Vec::with_capacity(g.edges().len() * h.edges().len() * 2);
    for ge in g.edges() {
        let (u1, u2) = (ge.u, ge.v);
        for he in h.edges() {
            let (v1, v2, m) = (he.u, he.v, he.multiplicity);
            edges.push((flat(u1, v1), flat(u2, v2), m));
            if v1 != v2 {
                edges.push((flat(u1, v2), flat(u2, v1), m));
            }
        }
    }
    Ok(ProductGraph {
        graph: Graph::with_multiplicities(g.n() * hn, edges)?,
        left_order: g.n(),
        right_order: hn,
    })
}

/// Number of product edges between two adjacent layers:
/// twice the non-loop multiplicity of `H` plus its loop count.
pub fn inter_layer_multiplicity(h: &Graph) -> u64 {
    2 * h.link_count() + h.loop_count()
}

/// Weichsel: `G x H` is connected iff both factors are connected and at
/// least one is non-bipartite. Factors need at least one edge each.
pub fn weichsel_predicts_connected(g: &Graph, h: &Graph) -> bool {
    g.is_connected() && h.is_connected() && !(g.is_bipartite() && h.is_bipartite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::ExtendedCount;
    use crate::generators::{generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(spec).unwrap()
    }

    fn k2() -> Graph {
        fam(FamilySpec::Complete { n: 2 })
    }

    #[test]
    fn k2_times_c5_is_c10() {
        let p = direct_product(&k2(), &fam(FamilySpec::Cycle { n: 5 })).unwrap();
        let g = p.graph();
        assert_eq!((g.n(), g.edge_count()), (10, 10));
        assert_eq!(g.degree_stats().unwrap().regular, Some(2));
        assert!(g.is_connected());
        assert_eq!(g.girth(), ExtendedCount::Finite(10));
    }

    #[test]
    fn k2_times_t3_is_3_regular() {
        let p = direct_product(&k2(), &fam(FamilySpec::Total { n: 3 })).unwrap();
        assert_eq!(p.graph().n(), 6);
        assert_eq!(p.graph().degree_stats().unwrap().regular, Some(3));
        assert!(p.graph().is_simple());
    }

    #[test]
    fn bipartite_factors_disconnect() {
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        let p = direct_product(&c4, &c4).unwrap();
        assert!(!p.graph().is_connected());
        let p = direct_product(&k2(), &c4).unwrap();
        let sizes: Vec<_> = p.graph().components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![4, 4]);
    }

    #[test]
    fn loopy_first_factor_rejected() {
        let t3 = fam(FamilySpec::Total { n: 3 });
        assert!(matches!(direct_product(&t3, &k2()), Err(Error::NonSimpleFactor(_))));
    }

    #[test]
    fn layers() {
        let p = direct_product(&k2(), &fam(FamilySpec::Complete { n: 5 })).unwrap();
        let g = p.graph();
        let l0 = p.layer(0).unwrap();
        let l1 = p.layer(1).unwrap();
        assert_eq!(l0.len(), 5);
        assert!(l0.is_disjoint(&l1));
        assert_eq!(g.induced_subgraph(&l0).unwrap().edge_count(), 0);
        assert_eq!(g.boundary_size(&l0).unwrap(), 20);
        assert!(p.layer(2).is_err());
        assert_eq!(p.coords(p.flat(1, 3)), (1, 3));
    }

    #[test]
    fn inter_layer_multiplicity_examples() {
        assert_eq!(inter_layer_multiplicity(&fam(FamilySpec::Cycle { n: 7 })), 14);
        assert_eq!(inter_layer_multiplicity(&fam(FamilySpec::Complete { n: 5 })), 20);
        assert_eq!(inter_layer_multiplicity(&fam(FamilySpec::Total { n: 3 })), 9);
    }
}
