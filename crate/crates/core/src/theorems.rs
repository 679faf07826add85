//! Closed-form connectivity of `G x C_n`, `G x K_n` and `G x T_n`, and the
//! harness that checks them against computed values.
//!
//! Restricted edge-connectivity (`lambda_2`) of the products:
//!
//! | family | prediction |
//! |--------|------------|
//! | `K_n`, `n >= 3` | `min{(n-1) xi(G) + 2(n-2), n(n-1) lambda_2(G)}` |
//! | `T_n`, `n >= 3` | `min{n xi(G) + 2(n-1), n^2 lambda_2(G)}` |
//! | `C_n`, `n >= 3` odd, `|V(G)| <= n` or `Delta(G) <= n-1` | `min{2n lambda_2(G), min_{xy} 2(d(x)+d(y)) - 2}` |
//!
//! 3-restricted edge-connectivity for connected `k`-regular `G`, `k >= 2`,
//! `|V(G)| >= 4`, with `c = 6` when `G` has a triangle and `c = 4` otherwise:
//!
//! | family | prediction |
//! |--------|------------|
//! | `C_n`, `n >= 3` odd | `min{2n lambda_2(G), 6k - c}` |
//! | `K_n`, `n >= 5` | `min{n(n-1) lambda_2(G), 3k(n-1) - c}` |
//! | `T_n`, `n >= 3` | `min{n^2 lambda_2(G), 3nk - c}` |

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::connectivity::{lambda_k, lambda_k_bruteforce, xi, xi3, CutResult};
use crate::count::ExtendedCount;
use crate::error::Result;
use crate::generators::{generate, Family};
use crate::graph::Graph;
use crate::product::{direct_product, inter_layer_multiplicity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GirthClass {
    #[serde(rename = "g=3")]
    Three,
    #[serde(rename = "g>=4")]
    AtLeastFour,
}

impl GirthClass {
    pub fn of(graph: &Graph) -> Self {
        if graph.girth() == ExtendedCount::Finite(3) {
            GirthClass::Three
        } else {
            GirthClass::AtLeastFour
        }
    }

    /// The constant subtracted in the 3-set boundary term.
    fn offset(self) -> u64 {
        match self {
            GirthClass::Three => 6,
            GirthClass::AtLeastFour => 4,
        }
    }
}

impl fmt::Display for GirthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GirthClass::Three => "g=3",
            GirthClass::AtLeastFour => "g>=4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Lambda2,
    Lambda3,
}

impl Which {
    pub fn order(self) -> usize {
        match self {
            Which::Lambda2 => 2,
            Which::Lambda3 => 3,
        }
    }
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lambda2" => Ok(Which::Lambda2),
            "lambda3" => Ok(Which::Lambda3),
            other => Err(format!("unknown quantity {other:?} (lambda2|lambda3)")),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Lambda2 => "lambda2",
            Which::Lambda3 => "lambda3",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Flow,
    Brute,
    Both,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "flow" => Ok(Method::Flow),
            "brute" => Ok(Method::Brute),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method {other:?} (flow|brute|both)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Flow => "flow",
            Method::Brute => "brute",
            Method::Both => "both",
        })
    }
}

/// Everything the formulas read from `G`, all derived from one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionInput {
    pub family: Family,
    pub n: usize,
    pub order: usize,
    pub connected: bool,
    /// Common degree when `G` is regular.
    pub regularity: Option<u64>,
    pub max_degree: u64,
    pub lambda2: ExtendedCount,
    pub xi: ExtendedCount,
    pub girth_class: GirthClass,
    /// `min (d(x) + d(y))` over edges `xy`.
    pub min_edge_sum: ExtendedCount,
}

impl PredictionInput {
    pub fn from_graph(graph: &Graph, family: Family, n: usize) -> Result<Self> {
        let stats = graph.degree_stats()?;
        let min_edge_sum = graph
            .edges()
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| ExtendedCount::Finite(graph.degree(e.u) + graph.degree(e.v)))
            .min()
            .unwrap_or(ExtendedCount::Infinity);
        Ok(PredictionInput {
            family,
            n,
            order: graph.n(),
            connected: graph.is_connected(),
            regularity: stats.regular,
            max_degree: stats.max,
            lambda2: lambda_k(graph, 2)?.value,
            xi: xi(graph),
            girth_class: GirthClass::of(graph),
            min_edge_sum,
        })
    }
}

/// The precondition clauses a prediction failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inapplicable {
    pub failed: Vec<String>,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "preconditions not met: {}", self.failed.join("; "))
    }
}

impl std::error::Error for Inapplicable {}

pub type Prediction = std::result::Result<ExtendedCount, Inapplicable>;

struct Clauses(Vec<String>);

impl Clauses {
    fn new() -> Self {
        Clauses(Vec::new())
    }

    fn require(&mut self, ok: bool, clause: impl Into<String>) -> &mut Self {
        if !ok {
            self.0.push(clause.into());
        }
        self
    }

    fn finish(&mut self, value: impl FnOnce() -> ExtendedCount) -> Prediction {
        if self.0.is_empty() {
            Ok(value())
        } else {
            Err(Inapplicable { failed: std::mem::take(&mut self.0) })
        }
    }
}

fn family_clauses(p: &PredictionInput, complete_min: usize) -> Clauses {
    let mut c = Clauses::new();
    match p.family {
        Family::Cycle => {
            c.require(p.n >= 3, "cycle needs n >= 3");
            c.require(p.n % 2 == 1, "cycle needs n odd");
        }
        Family::Complete => {
            c.require(p.n >= complete_min, format!("complete needs n >= {complete_min}"));
        }
        Family::Total => {
            c.require(p.n >= 3, "total needs n >= 3");
        }
    }
    c
}

/// Predicted `lambda_2(G x H)`.
pub fn predict_lambda2_product(p: &PredictionInput) -> Prediction {
    let n = p.n as u64;
    let mut c = family_clauses(p, 3);
    c.require(p.order >= 2, "G must be nontrivial");
    c.require(p.connected, "G must be connected");
    match p.family {
        Family::Complete => c.finish(|| {
            (p.xi * (n - 1) + ExtendedCount::Finite(2 * (n - 2))).min(p.lambda2 * (n * (n - 1)))
        }),
        Family::Total => c.finish(|| {
            (p.xi * n + ExtendedCount::Finite(2 * (n - 1))).min(p.lambda2 * (n * n))
        }),
        Family::Cycle => {
            c.require(
                p.order <= p.n || p.max_degree < n,
                "cycle needs |V(G)| <= n or Delta(G) <= n - 1",
            );
            c.finish(|| {
                let edge_term = match p.min_edge_sum {
                    ExtendedCount::Finite(s) => ExtendedCount::Finite(2 * s - 2),
                    ExtendedCount::Infinity => ExtendedCount::Infinity,
                };
                (p.lambda2 * (2 * n)).min(edge_term)
            })
        }
    }
}

fn regular_clauses(p: &PredictionInput) -> Clauses {
    let mut c = family_clauses(p, 5);
    c.require(p.connected, "G must be connected");
    c.require(p.order >= 4, "G needs at least four vertices");
    match p.regularity {
        None => {
            c.require(false, "G must be regular");
        }
        Some(k) => {
            c.require(k >= 2, format!("G must be k-regular with k >= 2 (k = {k})"));
        }
    }
    c
}

/// Predicted `xi_3(G x H)` for regular `G`.
pub fn predict_xi3_product(p: &PredictionInput) -> Prediction {
    let mut c = regular_clauses(p);
    c.finish(|| {
        let k = p.regularity.expect("checked");
        let n = p.n as u64;
        let offset = p.girth_class.offset();
        ExtendedCount::Finite(match p.family {
            Family::Cycle => 6 * k - offset,
            Family::Complete => 3 * k * (n - 1) - offset,
            Family::Total => 3 * n * k - offset,
        })
    })
}

/// Number of `H`-edges between two adjacent layers for the family.
fn family_multiplicity(family: Family, n: u64) -> u64 {
    match family {
        Family::Cycle => 2 * n,
        Family::Complete => n * (n - 1),
        Family::Total => n * n,
    }
}

/// `m(H) lambda_2(G)`, the layer term of the 3-restricted predictions.
pub fn layer_term(p: &PredictionInput) -> ExtendedCount {
    p.lambda2 * family_multiplicity(p.family, p.n as u64)
}

/// Predicted `lambda_3(G x H)` for regular `G`.
pub fn predict_lambda3_product(p: &PredictionInput) -> Prediction {
    let xi3_term = predict_xi3_product(p)?;
    Ok(layer_term(p).min(xi3_term))
}

/// Lower bound `m(H) lambda_2(G)` on a 3-restricted cut of `G x H` that
/// leaves two full adjacent layer pairs over non-adjacent edges of `G` on
/// opposite sides.
pub fn layer_separation_bound(g: &Graph, h: &Graph) -> Result<ExtendedCount> {
    Ok(lambda_k(g, 2)?.value * inter_layer_multiplicity(h))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preconditions {
    pub met: bool,
    pub failures: Vec<String>,
}

/// A computed connectivity of a product next to its predicted value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub graph: String,
    pub family: Family,
    pub n: usize,
    pub k: Option<u64>,
    pub girth_class: GirthClass,
    #[serde(rename = "lambda2_G")]
    pub lambda2_g: ExtendedCount,
    #[serde(rename = "xi_G")]
    pub xi_g: ExtendedCount,
    pub which: Which,
    pub predicted: Option<ExtendedCount>,
    pub computed: ExtendedCount,
    pub method: Method,
    /// Flow and oracle values coincide; only present for `Method::Both`.
    pub methods_agree: Option<bool>,
    /// `predicted == computed`; absent when preconditions fail.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub preconditions: Preconditions,
    pub witness: CutResult,
    pub runtime_ms: u64,
}

impl TheoremVerdict {
    /// Whether the verdict should be reported as "not applicable".
    pub fn inapplicable(&self) -> bool {
        !self.preconditions.met
    }

    pub fn row(&self) -> VerdictRow {
        VerdictRow {
            graph: self.graph.clone(),
            family: self.family,
            n: self.n,
            k: self.k.map(|k| k.to_string()).unwrap_or_default(),
            girth_class: self.girth_class.to_string(),
            lambda2_g: self.lambda2_g.to_string(),
            xi_g: self.xi_g.to_string(),
            which: self.which,
            predicted: self.predicted.map(|p| p.to_string()).unwrap_or_default(),
            computed: self.computed.to_string(),
            method: self.method,
            methods_agree: self.methods_agree.map(|b| b.to_string()).unwrap_or_default(),
            matches: self.matches.map(|b| b.to_string()).unwrap_or_default(),
            preconditions: if self.preconditions.met {
                "met".to_string()
            } else {
                self.preconditions.failures.join("; ")
            },
            witness: self
                .witness
                .witness_side
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            runtime_ms: self.runtime_ms,
        }
    }
}

/// Flat form of a verdict, one CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictRow {
    pub graph: String,
    pub family: Family,
    pub n: usize,
    pub k: String,
    pub girth_class: String,
    #[serde(rename = "lambda2_G")]
    pub lambda2_g: String,
    #[serde(rename = "xi_G")]
    pub xi_g: String,
    pub which: Which,
    pub predicted: String,
    pub computed: String,
    pub method: Method,
    pub methods_agree: String,
    #[serde(rename = "match")]
    pub matches: String,
    pub preconditions: String,
    pub witness: String,
    pub runtime_ms: u64,
}

fn compute(graph: &Graph, k: usize, method: Method, ceiling: usize) -> Result<(CutResult, Option<bool>)> {
    Ok(match method {
        Method::Flow => (lambda_k(graph, k)?, None),
        Method::Brute => (lambda_k_bruteforce(graph, k, ceiling)?, None),
        Method::Both => {
            let brute = lambda_k_bruteforce(graph, k, ceiling)?;
            let flow = lambda_k(graph, k)?;
            let agree = flow.value == brute.value;
            (brute, Some(agree))
        }
    })
}

fn verdict_shell(
    graph: &Graph,
    input: &PredictionInput,
    which: Which,
    method: Method,
    prediction: Prediction,
    computed: (CutResult, Option<bool>),
    started: Instant,
) -> TheoremVerdict {
    let (witness, methods_agree) = computed;
    let (predicted, preconditions) = match prediction {
        Ok(p) => (Some(p), Preconditions { met: true, failures: Vec::new() }),
        Err(e) => (None, Preconditions { met: false, failures: e.failed }),
    };
    TheoremVerdict {
        graph: format!("G(n={},m={})", graph.n(), graph.edge_count()),
        family: input.family,
        n: input.n,
        k: input.regularity,
        girth_class: input.girth_class,
        lambda2_g: input.lambda2,
        xi_g: input.xi,
        which,
        predicted,
        computed: witness.value,
        method,
        methods_agree,
        matches: predicted.map(|p| p == witness.value),
        preconditions,
        witness,
        runtime_ms: started.elapsed().as_millis() as u64,
    }
}

/// Builds `G x H_n`, computes `which` by `method`, and compares it with the
/// closed form. Preconditions that fail are itemized and no match is
/// claimed; the computed value is still reported.
pub fn verify(
    graph: &Graph,
    family: Family,
    n: usize,
    which: Which,
    method: Method,
    ceiling: usize,
) -> Result<TheoremVerdict> {
    let started = Instant::now();
    let h = generate(family.spec(n))?;
    let product = direct_product(graph, &h)?.into_graph();
    let input = PredictionInput::from_graph(graph, family, n)?;
    let prediction = match which {
        Which::Lambda2 => predict_lambda2_product(&input),
        Which::Lambda3 => predict_lambda3_product(&input),
    };
    let computed = compute(&product, which.order(), method, ceiling)?;
    Ok(verdict_shell(graph, &input, which, method, prediction, computed, started))
}

/// For maximally restricted edge-connected regular `G`, checks that the
/// computed `lambda_3(G x H_n)` equals the computed `xi_3(G x H_n)`.
/// `predicted` carries the computed `xi_3` of the product.
pub fn check_corollary_maximality(
    graph: &Graph,
    family: Family,
    n: usize,
    method: Method,
    ceiling: usize,
) -> Result<TheoremVerdict> {
    let started = Instant::now();
    let h = generate(family.spec(n))?;
    let product = direct_product(graph, &h)?.into_graph();
    let input = PredictionInput::from_graph(graph, family, n)?;
    let mut clauses = regular_clauses(&input);
    clauses.require(
        input.lambda2.is_finite() && input.lambda2 == input.xi,
        format!(
            "G must be maximally restricted edge-connected (lambda_2 = {}, xi = {})",
            input.lambda2, input.xi
        ),
    );
    let prediction = clauses.finish(|| xi3(&product));
    let computed = compute(&product, 3, method, ceiling)?;
    Ok(verdict_shell(graph, &input, Which::Lambda3, method, prediction, computed, started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::FamilySpec;

    const FIN: fn(u64) -> ExtendedCount = ExtendedCount::Finite;

    fn g(spec: FamilySpec) -> Graph {
        generate(spec).unwrap()
    }

    fn input(graph: &Graph, family: Family, n: usize) -> PredictionInput {
        PredictionInput::from_graph(graph, family, n).unwrap()
    }

    #[test]
    fn lambda2_predictions() {
        let k4 = g(FamilySpec::Complete { n: 4 });
        let c4 = g(FamilySpec::Cycle { n: 4 });
        assert_eq!(predict_lambda2_product(&input(&k4, Family::Complete, 3)), Ok(FIN(10)));
        assert_eq!(predict_lambda2_product(&input(&c4, Family::Total, 3)), Ok(FIN(10)));
        assert_eq!(predict_lambda2_product(&input(&k4, Family::Cycle, 5)), Ok(FIN(10)));
    }

    #[test]
    fn lambda2_cycle_window() {
        // K_5 has |V| = 5 > 3 and Delta = 4 > 2.
        let k5 = g(FamilySpec::Complete { n: 5 });
        let err = predict_lambda2_product(&input(&k5, Family::Cycle, 3)).unwrap_err();
        assert_eq!(err.failed.len(), 1);
        assert!(err.failed[0].contains("Delta"));
    }

    #[test]
    fn lambda3_predictions() {
        let k4 = g(FamilySpec::Complete { n: 4 });
        let c4 = g(FamilySpec::Cycle { n: 4 });
        assert_eq!(predict_lambda3_product(&input(&k4, Family::Complete, 5)), Ok(FIN(30)));
        assert_eq!(predict_lambda3_product(&input(&c4, Family::Cycle, 3)), Ok(FIN(8)));
        assert_eq!(predict_lambda3_product(&input(&c4, Family::Total, 3)), Ok(FIN(14)));
    }

    #[test]
    fn lambda3_preconditions_itemized() {
        let k2 = g(FamilySpec::Complete { n: 2 });
        let err = predict_lambda3_product(&input(&k2, Family::Complete, 5)).unwrap_err();
        assert!(err.failed.iter().any(|f| f.contains("four vertices")));
        assert!(err.failed.iter().any(|f| f.contains("k = 1")));
        let c4 = g(FamilySpec::Cycle { n: 4 });
        let err = predict_lambda3_product(&input(&c4, Family::Cycle, 4)).unwrap_err();
        assert_eq!(err.failed, vec!["cycle needs n odd".to_string()]);
        let err = predict_lambda3_product(&input(&c4, Family::Complete, 4)).unwrap_err();
        assert_eq!(err.failed, vec!["complete needs n >= 5".to_string()]);
        let star = g(FamilySpec::Star { leaves: 3 });
        let err = predict_lambda3_product(&input(&star, Family::Total, 3)).unwrap_err();
        assert_eq!(err.failed, vec!["G must be regular".to_string()]);
    }

    #[test]
    fn xi3_predictions() {
        let k4 = g(FamilySpec::Complete { n: 4 });
        let c4 = g(FamilySpec::Cycle { n: 4 });
        let pet = g(FamilySpec::Petersen);
        assert_eq!(predict_xi3_product(&input(&k4, Family::Cycle, 3)), Ok(FIN(12)));
        assert_eq!(predict_xi3_product(&input(&k4, Family::Cycle, 7)), Ok(FIN(12)));
        assert_eq!(predict_xi3_product(&input(&c4, Family::Complete, 5)), Ok(FIN(20)));
        assert_eq!(predict_xi3_product(&input(&pet, Family::Cycle, 3)), Ok(FIN(14)));
    }

    #[test]
    fn layer_bounds() {
        let k4 = g(FamilySpec::Complete { n: 4 });
        let c4 = g(FamilySpec::Cycle { n: 4 });
        let bound = |a: &Graph, h: FamilySpec| layer_separation_bound(a, &g(h)).unwrap();
        assert_eq!(bound(&k4, FamilySpec::Cycle { n: 5 }), FIN(40));
        assert_eq!(bound(&c4, FamilySpec::Complete { n: 5 }), FIN(40));
        assert_eq!(bound(&c4, FamilySpec::Total { n: 3 }), FIN(18));
        let star = g(FamilySpec::Star { leaves: 3 });
        assert_eq!(bound(&star, FamilySpec::Cycle { n: 3 }), ExtendedCount::Infinity);
    }

    #[test]
    fn verify_reports_inapplicable_with_value() {
        let k2 = g(FamilySpec::Complete { n: 2 });
        let v = verify(&k2, Family::Complete, 5, Which::Lambda3, Method::Brute, 22).unwrap();
        assert!(v.inapplicable());
        assert_eq!(v.computed, FIN(8));
        assert_eq!(v.matches, None);
        assert_eq!(v.predicted, None);
    }

    #[test]
    fn verify_c4_cycle3() {
        let c4 = g(FamilySpec::Cycle { n: 4 });
        let v = verify(&c4, Family::Cycle, 3, Which::Lambda3, Method::Both, 22).unwrap();
        assert_eq!((v.predicted, v.computed), (Some(FIN(8)), FIN(8)));
        assert_eq!((v.matches, v.methods_agree), (Some(true), Some(true)));
        v.witness.validate(&direct_product(&c4, &g(FamilySpec::Cycle { n: 3 })).unwrap().into_graph(), 3)
            .unwrap();
    }

    #[test]
    fn maximality_check_needs_maximal_factor() {
        let c6 = g(FamilySpec::Cycle { n: 6 });
        let v = check_corollary_maximality(&c6, Family::Cycle, 3, Method::Flow, 22).unwrap();
        assert!(v.preconditions.met);
        assert_eq!(v.matches, Some(true));
        let k2 = g(FamilySpec::Complete { n: 2 });
        let v = check_corollary_maximality(&k2, Family::Cycle, 3, Method::Flow, 22).unwrap();
        assert!(!v.preconditions.met);
    }

    #[test]
    fn verdict_json_field_names() {
        let c4 = g(FamilySpec::Cycle { n: 4 });
        let v = verify(&c4, Family::Total, 3, Which::Lambda2, Method::Flow, 22).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        for field in [
            "graph", "family", "n", "k", "girth_class", "lambda2_G", "xi_G", "which", "predicted",
            "computed", "method", "match", "preconditions", "witness", "runtime_ms",
        ] {
            assert!(json.get(field).is_some(), "missing {field}");
        }
        assert_eq!(json["girth_class"], "g>=4");
        assert_eq!(json["computed"], 10);
    }
}
