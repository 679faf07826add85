mod common;

use common::{fam, induces_connected, is_p3, product, random_connected};
use gcut_core::theorems::{
    layer_term, predict_lambda3_product, predict_xi3_product, PredictionInput,
};
use gcut_core::{
    classify, direct_product, enumerate_min_k_cuts, has_lambda3_cut, lambda_k, lambda_k_bruteforce,
    xi, xi3, Decision, ExtendedCount, Family, FamilySpec, DEFAULT_CEILING,
};

const FIN: fn(u64) -> ExtendedCount = ExtendedCount::Finite;

/// `(G, family, n)` triples whose products appear in the acceptance suite.
fn acceptance_grid() -> Vec<(FamilySpec, Family, usize)> {
    use Family::*;
    let k4 = FamilySpec::Complete { n: 4 };
    let c4 = FamilySpec::Cycle { n: 4 };
    let c5 = FamilySpec::Cycle { n: 5 };
    vec![
        (k4, Cycle, 3),
        (c4, Cycle, 3),
        (c5, Cycle, 3),
        (k4, Cycle, 5),
        (k4, Complete, 5),
        (c4, Complete, 5),
        (k4, Total, 3),
        (c4, Total, 3),
        (c5, Total, 3),
        (k4, Complete, 3),
        (FamilySpec::Petersen, Cycle, 3),
    ]
}

#[test]
fn flow_matches_oracle_on_acceptance_products() {
    for (g, family, n) in acceptance_grid() {
        let p = product(g, family.spec(n));
        if p.n() > DEFAULT_CEILING {
            continue;
        }
        for k in 1..=3 {
            let flow = lambda_k(&p, k).unwrap();
            let brute = lambda_k_bruteforce(&p, k, DEFAULT_CEILING).unwrap();
            assert_eq!(flow.value, brute.value, "{g} x {family}{n}, k={k}");
            flow.validate(&p, k).unwrap();
            brute.validate(&p, k).unwrap();
        }
    }
}

#[test]
fn degree_product_law_on_acceptance_products() {
    for (g, family, n) in acceptance_grid() {
        let (gg, h) = (fam(g), fam(family.spec(n)));
        let p = direct_product(&gg, &h).unwrap();
        for x in 0..p.graph().n() {
            let (u, v) = p.coords(x);
            let closed = (0..h.n()).filter(|&w| h.multiplicity(v, w) > 0).count() as u64;
            assert_eq!(p.graph().degree(x), gg.degree(u) * closed);
        }
    }
}

#[test]
fn oracle_equivalence_on_loopy_graphs() {
    for seed in 1000..1060 {
        let g = random_connected(seed, 6, 11, true);
        for k in 1..=3 {
            let flow = lambda_k(&g, k).unwrap();
            let brute = lambda_k_bruteforce(&g, k, DEFAULT_CEILING).unwrap();
            assert_eq!(flow.value, brute.value, "seed {seed} k={k}");
            assert_eq!(flow.validate(&g, k), Ok(()));
        }
    }
}

#[test]
fn edge_connectivity_at_most_min_degree() {
    for seed in 0..80 {
        let g = random_connected(seed, 2, 14, seed % 2 == 0);
        let delta = g.degree_stats().unwrap().min;
        assert!(lambda_k(&g, 1).unwrap().value <= FIN(delta), "seed {seed}");
    }
}

#[test]
fn restricted_cut_exists_iff_oracle_finite() {
    for seed in 0..120 {
        let g = random_connected(seed, 3, 10, false);
        let oracle = lambda_k_bruteforce(&g, 3, DEFAULT_CEILING).unwrap();
        assert_eq!(has_lambda3_cut(&g), oracle.value.is_finite(), "seed {seed}");
    }
}

#[test]
fn disconnected_graphs() {
    let two_triangles = gcut_core::Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    for k in 1..=3 {
        assert_eq!(lambda_k(&two_triangles, k).unwrap().value, FIN(0));
        assert_eq!(lambda_k_bruteforce(&two_triangles, k, 22).unwrap().value, FIN(0));
    }
    assert!(has_lambda3_cut(&two_triangles));
    let triangle_and_edge = gcut_core::Graph::new(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
    assert_eq!(lambda_k(&triangle_and_edge, 2).unwrap().value, FIN(0));
    assert_eq!(lambda_k(&triangle_and_edge, 3).unwrap().value, ExtendedCount::Infinity);
    assert!(!has_lambda3_cut(&triangle_and_edge));
}

#[test]
fn super_implies_maximal_on_simple_graphs() {
    for seed in 0..60 {
        let g = random_connected(seed, 4, 10, false);
        let r = classify(&g, DEFAULT_CEILING);
        let pairs = [
            (&r.super_edge_connected, &r.maximally_edge_connected),
            (&r.super_restricted, &r.maximally_restricted),
            (&r.super_3_restricted, &r.maximally_3_restricted),
        ];
        for (sup, max) in pairs {
            if sup.is_yes() && max.is_decided() {
                assert_eq!(max, &Decision::Yes, "seed {seed}: {r:?}");
            }
        }
    }
}

#[test]
fn min_three_restricted_cuts_of_k2_k5() {
    let g = product(FamilySpec::Complete { n: 2 }, FamilySpec::Complete { n: 5 });
    let cuts = enumerate_min_k_cuts(&g, 3, DEFAULT_CEILING).unwrap();
    assert!(!cuts.is_empty());
    let mut shapes = [0usize; 3];
    for cut in &cuts {
        assert_eq!(cut.value, FIN(8));
        cut.validate(&g, 3).unwrap();
        let other = cut.witness_side.complement(g.n());
        assert!(induces_connected(&g, &cut.witness_side) && induces_connected(&g, &other));
        let small = if cut.witness_side.len() <= other.len() { &cut.witness_side } else { &other };
        match small.len() {
            3 => {
                assert!(is_p3(&g, small));
                shapes[0] += 1;
            }
            4 => shapes[1] += 1,
            5 => shapes[2] += 1,
            s => panic!("unexpected side of order {s}"),
        }
    }
    // 60 paths on three vertices, 30 four-cycles, 10 K_{2,3} splits.
    assert_eq!(shapes, [60, 30, 10]);
    let mut sides: Vec<_> = cuts.iter().map(|c| c.witness_side.clone()).collect();
    sides.dedup();
    assert_eq!(sides.len(), cuts.len());
}

#[test]
fn prediction_min_is_consistent() {
    for (g, family, n) in acceptance_grid() {
        let input = PredictionInput::from_graph(&fam(g), family, n).unwrap();
        let Ok(both) = predict_lambda3_product(&input) else { continue };
        let layer = layer_term(&input);
        let x3 = predict_xi3_product(&input).unwrap();
        assert!(both <= layer && both <= x3);
        if x3 < layer {
            assert_eq!(both, x3);
        }
    }
}

#[test]
fn computed_lambda3_respects_both_bounds() {
    for (g, family, n) in acceptance_grid() {
        let p = product(g, family.spec(n));
        if !(p.is_connected() && has_lambda3_cut(&p)) {
            continue;
        }
        let l3 = lambda_k(&p, 3).unwrap().value;
        assert!(l3 <= xi3(&p), "{g} x {family}{n}");
        let input = PredictionInput::from_graph(&fam(g), family, n).unwrap();
        assert!(l3 <= layer_term(&input), "{g} x {family}{n}");
    }
}

#[test]
fn xi3_prediction_law() {
    let mut mismatches = Vec::new();
    for (g, family, n) in acceptance_grid() {
        let input = PredictionInput::from_graph(&fam(g), family, n).unwrap();
        if let Ok(pred) = predict_xi3_product(&input) {
            let computed = xi3(&product(g, family.spec(n)));
            if computed != pred {
                mismatches.push(format!("{g} x {family}{n}: computed {computed}, predicted {pred}"));
            }
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn lambda2_is_at_most_xi() {
    for seed in 0..60 {
        let g = random_connected(seed, 4, 11, seed % 4 == 0);
        let l2 = lambda_k(&g, 2).unwrap().value;
        if l2.is_finite() && g.is_simple() {
            assert!(l2 <= xi(&g), "seed {seed}");
        }
    }
}
