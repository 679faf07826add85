#![allow(dead_code)]

use gcut_core::{direct_product, generate, FamilySpec, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fam(spec: FamilySpec) -> Graph {
    generate(spec).unwrap()
}

pub fn product(g: FamilySpec, h: FamilySpec) -> Graph {
    direct_product(&fam(g), &fam(h)).unwrap().into_graph()
}

/// Connected graph on `lo..=hi` vertices: a random spanning tree plus
/// random extra edges at a seed-dependent density, optionally with loops.
pub fn random_connected(seed: u64, lo: usize, hi: usize, loops: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(lo..=hi);
    let density: f64 = rng.gen_range(0.05..0.7);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
        if loops && rng.gen_bool(0.2) {
            edges.push((u, u));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Naive connectivity check of an induced side, independent of the crate's
/// component routine.
pub fn induces_connected(g: &Graph, side: &VertexSet) -> bool {
    let Some(start) = side.min() else { return false };
    let mut seen = vec![start];
    let mut changed = true;
    while changed {
        changed = false;
        for e in g.edges() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if seen.contains(&a) && side.contains(b) && !seen.contains(&b) {
                    seen.push(b);
                    changed = true;
                }
            }
        }
    }
    seen.len() == side.len()
}

/// Number of non-loop edges (with multiplicity) inside `side`.
pub fn internal_edges(g: &Graph, side: &VertexSet) -> u64 {
    g.edges()
        .iter()
        .filter(|e| !e.is_loop() && side.contains(e.u) && side.contains(e.v))
        .map(|e| u64::from(e.multiplicity))
        .sum()
}

pub fn is_k2(g: &Graph, side: &VertexSet) -> bool {
    side.len() == 2 && internal_edges(g, side) == 1
}

pub fn is_p3(g: &Graph, side: &VertexSet) -> bool {
    side.len() == 3 && internal_edges(g, side) == 2 && induces_connected(g, side)
}

/// `G[side]` is `K_{2,3}`: five vertices, six edges, and a 2-vertex part
/// adjacent to all of the other three with no edges inside either part.
pub fn is_k23(g: &Graph, side: &VertexSet) -> bool {
    if side.len() != 5 || internal_edges(g, side) != 6 {
        return false;
    }
    let vs: Vec<usize> = side.iter().collect();
    for i in 0..5 {
        for j in i + 1..5 {
            let two = [vs[i], vs[j]];
            let three: Vec<usize> = vs.iter().copied().filter(|x| !two.contains(x)).collect();
            let complete = two
                .iter()
                .all(|&a| three.iter().all(|&b| g.multiplicity(a, b) == 1));
            if complete {
                return true;
            }
        }
    }
    false
}
