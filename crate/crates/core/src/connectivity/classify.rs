use serde::{Deserialize, Serialize};

use super::{enumerate_min_k_cuts, lambda_k, xi, xi3, CutResult};
use crate::count::ExtendedCount;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "decision", rename_all = "snake_case")]
pub enum Decision {
    Yes,
    No,
    NotApplicable { reason: String },
}

impl Decision {
    fn from_flag(flag: bool) -> Self {
        if flag {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    fn na(reason: impl Into<String>) -> Self {
        Decision::NotApplicable { reason: reason.into() }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes)
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Decision::NotApplicable { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub lambda: ExtendedCount,
    pub lambda2: ExtendedCount,
    pub lambda3: ExtendedCount,
    pub min_degree: u64,
    pub xi: ExtendedCount,
    pub xi3: ExtendedCount,
    /// `lambda = delta`.
    pub maximally_edge_connected: Decision,
    /// Every minimum edge-cut isolates a vertex.
    pub super_edge_connected: Decision,
    /// `lambda_2 = xi`.
    pub maximally_restricted: Decision,
    /// Every minimum restricted cut isolates an edge.
    pub super_restricted: Decision,
    /// `lambda_3 = xi_3`.
    pub maximally_3_restricted: Decision,
    /// Every minimum 3-restricted cut isolates a connected 3-set.
    pub super_3_restricted: Decision,
}

fn maximal(lambda: ExtendedCount, bound: ExtendedCount, what: &str) -> Decision {
    if !lambda.is_finite() {
        Decision::na(format!("{what} is infinite"))
    } else if !bound.is_finite() {
        Decision::na("the comparison bound is infinite")
    } else {
        Decision::from_flag(lambda == bound)
    }
}

/// Either side of the cut has exactly `k` vertices inducing a connected graph.
fn isolates_connected_unit(graph: &Graph, cut: &CutResult, k: usize) -> bool {
    let other = cut.witness_side.complement(graph.n());
    let connected_unit = |side: &VertexSet| {
        side.len() == k
            && graph
                .induced_subgraph(side)
                .map(|g| g.is_connected())
                .unwrap_or(false)
    };
    connected_unit(&cut.witness_side) || connected_unit(&other)
}

fn super_flag(graph: &Graph, k: usize, lambda: ExtendedCount, ceiling: usize) -> Decision {
    if !lambda.is_finite() {
        return Decision::na(format!("lambda_{k} is infinite"));
    }
    match enumerate_min_k_cuts(graph, k, ceiling) {
        Ok(cuts) => Decision::from_flag(cuts.iter().all(|c| isolates_connected_unit(graph, c, k))),
        Err(e) => Decision::na(e.to_string()),
    }
}

/// Maximality flags use the flow method and work at any size; super flags
/// enumerate every minimum cut and need `|V| <= ceiling`.
pub fn classify(graph: &Graph, ceiling: usize) -> ClassificationReport {
    let lam = |k| lambda_k(graph, k).expect("order in range").value;
    let (l1, l2, l3) = (lam(1), lam(2), lam(3));
    let min_degree = graph.degree_stats().map(|s| s.min).unwrap_or(0);
    let (x1, x3) = (xi(graph), xi3(graph));
    let delta = if graph.n() == 0 { ExtendedCount::Infinity } else { ExtendedCount::Finite(min_degree) };
    ClassificationReport {
        lambda: l1,
        lambda2: l2,
        lambda3: l3,
        min_degree,
        xi: x1,
        xi3: x3,
        maximally_edge_connected: maximal(l1, delta, "lambda"),
        super_edge_connected: super_flag(graph, 1, l1, ceiling),
        maximally_restricted: maximal(l2, x1, "lambda_2"),
        super_restricted: super_flag(graph, 2, l2, ceiling),
        maximally_3_restricted: maximal(l3, x3, "lambda_3"),
        super_3_restricted: super_flag(graph, 3, l3, ceiling),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use crate::product::direct_product;

    #[test]
    fn c4_is_maximally_restricted() {
        let r = classify(&generate(FamilySpec::Cycle { n: 4 }).unwrap(), 22);
        assert_eq!(r.lambda2, ExtendedCount::Finite(2));
        assert_eq!(r.maximally_restricted, Decision::Yes);
        assert_eq!(r.maximally_edge_connected, Decision::Yes);
        assert!(!r.maximally_3_restricted.is_decided());
    }

    #[test]
    fn k2_times_k5_is_maximally_3_restricted() {
        let g = direct_product(
            &generate(FamilySpec::Complete { n: 2 }).unwrap(),
            &generate(FamilySpec::Complete { n: 5 }).unwrap(),
        )
        .unwrap()
        .into_graph();
        let r = classify(&g, 22);
        assert_eq!((r.lambda3, r.xi3), (ExtendedCount::Finite(8), ExtendedCount::Finite(8)));
        assert_eq!(r.maximally_3_restricted, Decision::Yes);
        // The K_{2,3} halves are minimum 3-restricted cuts too.
        assert_eq!(r.super_3_restricted, Decision::No);
    }

    #[test]
    fn star_restricted_flags_not_applicable() {
        let r = classify(&generate(FamilySpec::Star { leaves: 4 }).unwrap(), 22);
        assert_eq!(r.lambda2, ExtendedCount::Infinity);
        assert!(!r.maximally_restricted.is_decided());
        assert!(!r.super_restricted.is_decided());
        assert_eq!(r.super_edge_connected, Decision::Yes);
    }

    #[test]
    fn oversize_super_checks_report_reason() {
        let r = classify(&generate(FamilySpec::Cycle { n: 12 }).unwrap(), 10);
        assert!(matches!(r.super_edge_connected, Decision::NotApplicable { ref reason } if reason.contains("ceiling")));
        assert_eq!(r.maximally_edge_connected, Decision::Yes);
    }
}
