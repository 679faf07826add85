use std::fmt::Write as _;

use anyhow::{bail, Result};
use clap::ValueEnum;
use gcut_core::theorems::{Method, TheoremVerdict};
use gcut_core::{ClassificationReport, Decision, ExtendedCount, Graph};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        }
    }
}

#[derive(Serialize)]
pub struct ConnRecord {
    pub graph: String,
    pub k: usize,
    pub method: Method,
    pub value: ExtendedCount,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flow_value: Option<ExtendedCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_value: Option<ExtendedCount>,
    pub witness_side: Vec<usize>,
    pub cut_edges: Vec<(usize, usize)>,
    pub runtime_ms: u64,
}

#[derive(Serialize)]
struct ConnRow<'a> {
    graph: &'a str,
    k: usize,
    method: Method,
    value: String,
    flow_value: String,
    brute_value: String,
    witness_side: String,
    cut_edges: String,
    runtime_ms: u64,
}

fn opt(x: Option<ExtendedCount>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn edges_str(edges: &[(usize, usize)]) -> String {
    joined(edges.iter().map(|(u, v)| format!("{u}-{v}")))
}

fn csv_string<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn conn(r: &ConnRecord, graph: &Graph, format: Format, witness: bool) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string(r)? + "\n",
        Format::Csv => csv_string([ConnRow {
            graph: &r.graph,
            k: r.k,
            method: r.method,
            value: r.value.to_string(),
            flow_value: opt(r.flow_value),
            brute_value: opt(r.brute_value),
            witness_side: joined(&r.witness_side),
            cut_edges: edges_str(&r.cut_edges),
            runtime_ms: r.runtime_ms,
        }])?,
        Format::Dot => dot(graph, r, witness),
        Format::Text => {
            let mut s = format!("lambda_{} = {} ({})\n", r.k, r.value, r.method);
            if let (Some(f), Some(b)) = (r.flow_value, r.brute_value) {
                let _ = writeln!(s, "flow {f}, brute force {b}");
            }
            if witness && r.value.is_finite() {
                let _ = writeln!(s, "side: {}", joined(&r.witness_side));
                let _ = writeln!(s, "cut:  {}", edges_str(&r.cut_edges));
            }
            s
        }
    })
}

fn dot(graph: &Graph, r: &ConnRecord, witness: bool) -> String {
    let mut s = format!("graph G {{\n  label=\"lambda_{} = {}\";\n", r.k, r.value);
    for v in 0..graph.n() {
        if witness && r.witness_side.binary_search(&v).is_ok() {
            let _ = writeln!(s, "  {v} [style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(s, "  {v};");
        }
    }
    for e in graph.edges() {
        let cut = witness && r.cut_edges.binary_search(&(e.u, e.v)).is_ok();
        for _ in 0..e.multiplicity {
            if cut {
                let _ = writeln!(s, "  {} -- {} [color=red, penwidth=2];", e.u, e.v);
            } else {
                let _ = writeln!(s, "  {} -- {};", e.u, e.v);
            }
        }
    }
    s.push_str("}\n");
    s
}

fn decision(d: &Decision) -> String {
    match d {
        Decision::Yes => "yes".into(),
        Decision::No => "no".into(),
        Decision::NotApplicable { reason } => format!("n/a ({reason})"),
    }
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lambda   {}", r.lambda);
    let _ = writeln!(s, "lambda2  {}", r.lambda2);
    let _ = writeln!(s, "lambda3  {}", r.lambda3);
    let _ = writeln!(s, "delta    {}", r.min_degree);
    let _ = writeln!(s, "xi       {}", r.xi);
    let _ = writeln!(s, "xi3      {}", r.xi3);
    let flags = [
        ("maximally edge-connected", &r.maximally_edge_connected),
        ("super edge-connected", &r.super_edge_connected),
        ("maximally restricted", &r.maximally_restricted),
        ("super restricted", &r.super_restricted),
        ("maximally 3-restricted", &r.maximally_3_restricted),
        ("super 3-restricted", &r.super_3_restricted),
    ];
    for (name, d) in flags {
        let _ = writeln!(s, "{name:<26}{}", decision(d));
    }
    s
}

pub fn verdicts(vs: &[TheoremVerdict], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = String::new();
            for v in vs {
                s += &serde_json::to_string(v)?;
                s.push('\n');
            }
            s
        }
        Format::Csv => csv_string(vs.iter().map(TheoremVerdict::row))?,
        Format::Text => {
            let mut s = String::new();
            for v in vs {
                let predicted = v.predicted.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
                let verdict = match v.matches {
                    Some(true) => "match",
                    Some(false) => "MISMATCH",
                    None => "not applicable",
                };
                let _ = writeln!(
                    s,
                    "{} x {}{} {}: predicted {predicted}, computed {} [{}] ({})",
                    v.graph, v.family, v.n, v.which, v.computed, verdict, v.method
                );
                if v.methods_agree == Some(false) {
                    s += "  flow method and brute force disagree\n";
                }
                for f in &v.preconditions.failures {
                    let _ = writeln!(s, "  unmet: {f}");
                }
            }
            s
        }
        Format::Dot => bail!("verify does not support --format dot"),
    })
}
