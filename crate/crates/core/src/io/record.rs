//! Serializable summaries of analyses, bound reports and certificates.
//!
//! Exact rationals are always rendered as `p/q` strings; decimal columns
//! are only added on request and are never the sole rendering.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{check_graph, BoundId, BoundReport};
use crate::certify::{Certificate, Check};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::eccentricity_profile;
use crate::rational::{approx, render, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub bound_id: BoundId,
    pub applicable: bool,
    pub reason: Option<String>,
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_approx: Option<f64>,
    pub satisfied: Option<bool>,
    pub slack: Option<String>,
}

impl BoundRecord {
    pub fn from_report(r: &BoundReport, with_approx: bool) -> Self {
        BoundRecord {
            bound_id: r.bound_id,
            applicable: r.applicable,
            reason: r.reason.clone(),
            value: r.value.as_ref().map(render),
            value_approx: r.value.as_ref().filter(|_| with_approx).map(approx),
            satisfied: r.satisfied,
            slack: r.slack.as_ref().map(render),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && self.satisfied == Some(false)
    }
}

/// Everything `analyze` reports about one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRecord {
    /// `file:line` or a generator description.
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub triangle_free: bool,
    pub c4_free: bool,
    pub connected: bool,
    /// Total eccentricity; absent for disconnected graphs.
    pub ex: Option<u64>,
    pub avec: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub avec_approx: Option<f64>,
    pub diam: Option<usize>,
    pub rad: Option<usize>,
    /// Empty when the graph is disconnected or has fewer than two vertices.
    pub bounds: Vec<BoundRecord>,
}

/// Analyzes one graph; only the empty graph is rejected.
pub fn analyze(g: &Graph, source: &str, with_approx: bool) -> Result<AnalysisRecord> {
    let summary = g.degree_summary()?;
    let profile = summary.connected.then(|| eccentricity_profile(g)).transpose()?;
    let bounds = if summary.connected && g.n() >= 2 {
        check_graph(g)?
            .iter()
            .map(|r| BoundRecord::from_report(r, with_approx))
            .collect()
    } else {
        Vec::new()
    };
    Ok(AnalysisRecord {
        source: source.to_string(),
        n: g.n(),
        m: g.edge_count(),
        min_degree: summary.min_degree,
        max_degree: summary.max_degree,
        triangle_free: g.is_triangle_free(),
        c4_free: g.is_c4_free(),
        connected: summary.connected,
        ex: profile.as_ref().map(|p| p.total),
        avec: profile.as_ref().map(|p| render(&p.avec)),
        avec_approx: profile.as_ref().filter(|_| with_approx).map(|p| approx(&p.avec)),
        diam: profile.as_ref().map(|p| p.diam),
        rad: profile.as_ref().map(|p| p.rad),
        bounds,
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl AnalysisRecord {
    pub fn csv_header(with_approx: bool) -> Vec<String> {
        let mut cols: Vec<String> = [
            "source", "n", "m", "min_degree", "max_degree", "triangle_free", "c4_free", "connected", "EX",
            "avec",
        ]
        .map(String::from)
        .to_vec();
        if with_approx {
            cols.push("avec_approx".into());
        }
        cols.extend(["diam", "rad"].map(String::from));
        for id in BoundId::ALL {
            cols.push(id.name().to_string());
            cols.push(format!("{}_satisfied", id.name()));
        }
        cols
    }

    pub fn csv_row(&self, with_approx: bool) -> Vec<String> {
        let mut row = vec![
            self.source.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.min_degree.to_string(),
            self.max_degree.to_string(),
            self.triangle_free.to_string(),
            self.c4_free.to_string(),
            self.connected.to_string(),
            opt(&self.ex),
            opt(&self.avec),
        ];
        if with_approx {
            row.push(opt(&self.avec_approx));
        }
        row.push(opt(&self.diam));
        row.push(opt(&self.rad));
        for id in BoundId::ALL {
            match self.bounds.iter().find(|b| b.bound_id == id) {
                Some(b) => {
                    row.push(opt(&b.value));
                    row.push(opt(&b.satisfied));
                }
                None => row.extend([String::new(), String::new()]),
            }
        }
        row
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: n={} m={} delta={} Delta={} connected={} triangle_free={} c4_free={}",
            self.source,
            self.n,
            self.m,
            self.min_degree,
            self.max_degree,
            self.connected,
            self.triangle_free,
            self.c4_free
        );
        if let (Some(ex), Some(avec), Some(diam), Some(rad)) = (&self.ex, &self.avec, &self.diam, &self.rad) {
            out += &format!(" EX={ex} avec={avec} diam={diam} rad={rad}");
            if let Some(a) = self.avec_approx {
                out += &format!(" (~{a:.6})");
            }
        }
        out.push('\n');
        out += &bounds_text(&self.bounds);
        out
    }

    /// The subset of fields `bounds` emits.
    pub fn bounds_json(&self) -> Value {
        json!({
            "source": self.source,
            "n": self.n,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "avec": self.avec,
            "bounds": self.bounds,
        })
    }

    pub fn has_violation(&self) -> bool {
        self.bounds.iter().any(BoundRecord::is_violation)
    }
}

pub const BOUNDS_CSV_HEADER: [&str; 9] =
    ["source", "bound_id", "applicable", "value", "avec", "satisfied", "slack", "reason", "n"];

/// One CSV row per bound.
pub fn bounds_csv_rows(record: &AnalysisRecord) -> Vec<Vec<String>> {
    record
        .bounds
        .iter()
        .map(|b| {
            vec![
                record.source.clone(),
                b.bound_id.name().to_string(),
                b.applicable.to_string(),
                opt(&b.value),
                opt(&record.avec),
                opt(&b.satisfied),
                opt(&b.slack),
                opt(&b.reason),
                record.n.to_string(),
            ]
        })
        .collect()
}

pub fn bounds_text(bounds: &[BoundRecord]) -> String {
    bounds
        .iter()
        .map(|b| {
            let status = match (b.applicable, b.satisfied) {
                (true, Some(true)) => "holds",
                (true, Some(false)) => "VIOLATED",
                _ => "n/a",
            };
            let mut line = format!("  {:<10} {:>14} {status}", b.bound_id.name(), opt(&b.value));
            if let Some(reason) = &b.reason {
                line += &format!(" ({reason})");
            }
            line + "\n"
        })
        .collect()
}

fn check_json(check: &Check) -> Value {
    let facts: Vec<Value> = check
        .facts
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "lhs": render(&f.lhs),
                "relation": f.relation.symbol(),
                "rhs": render(&f.rhs),
                "holds": f.holds(),
            })
        })
        .collect();
    json!({
        "index": check.index,
        "name": check.name,
        "holds": check.holds(),
        "facts": facts,
    })
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(render).collect()
}

/// JSON summary of a certificate; `full` adds the constructed objects.
pub fn certificate_json(source: &str, cert: &Certificate, full: bool) -> Value {
    let mut value = json!({
        "source": source,
        "theorem": cert.theorem().name(),
        "valid": cert.is_valid(),
        "checks": cert.checks().iter().map(check_json).collect::<Vec<_>>(),
    });
    if full {
        let detail = match cert {
            Certificate::Packing(p) => json!({
                "anchor": p.anchor,
                "spacing": p.spacing,
                "packing": p.packing,
                "connectors": p.connectors,
                "tree_edges": p.tree_edges,
                "weights": rationals(p.weights.weights()),
                "scaled_weights": rationals(&p.scaled_weights),
                "contracted_vertices": p.contracted_map.new_to_old,
                "contracted_edges": p.contracted.edges(),
            }),
            Certificate::Matching(m) => json!({
                "anchor": m.anchor,
                "anchor_edge": m.anchor_edge,
                "matching": m.matching,
                "connectors": m.connectors,
                "tree_edges": m.tree_edges,
                "pruned_edges": m.pruned_edges,
                "vertex_weights": rationals(m.vertex_weights.weights()),
                "edge_weights": m.edge_weights.entries().iter()
                    .map(|(&id, w)| json!({"edge": m.line_edges[id], "weight": render(w)}))
                    .collect::<Vec<_>>(),
                "scaled_edge_weights": rationals(&m.scaled_edge_weights),
                "contracted_edges": m.contracted.edges(),
            }),
        };
        value["detail"] = detail;
    }
    value
}

/// Renders a certificate error as the record `certify` emits for it.
pub fn certificate_error_json(source: &str, theorem: &str, err: &Error) -> Value {
    json!({ "source": source, "theorem": theorem, "valid": false, "error": err.to_string() })
}
