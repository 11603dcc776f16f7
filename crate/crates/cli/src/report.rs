use std::fmt::Write as _;

use middleman_core::centrality::{
    beta_measure, betweenness, bonacich, closeness, degree_centrality, pagerank,
};
use middleman_core::contest::{contestation, Contestation};
use middleman_core::middleman::MiddlemanProfile;
use middleman_core::reach::{component_count, is_strongly_connected, is_weakly_connected};
use middleman_core::{DirectedGraph, MiddlemanClass};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub nodes: Vec<NodeReport>,
    pub parameters: Value,
    pub version: &'static str,
    #[serde(skip)]
    order: Vec<usize>,
    #[serde(skip)]
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub arcs: usize,
    pub weakly_connected: bool,
    pub strongly_connected: bool,
    pub components: usize,
    #[serde(rename = "B_prime")]
    pub b_prime: u64,
    #[serde(rename = "B")]
    pub b: u64,
}

#[derive(Serialize)]
pub struct NodeReport {
    pub label: String,
    pub role: &'static str,
    pub middleman_class: &'static str,
    pub brokerage: u64,
    pub nu: f64,
    pub nu_star: f64,
    /// `true`, `false` or `"vacuous"`.
    pub contested: Value,
    pub degree_in: usize,
    pub degree_out: usize,
    pub closeness: f64,
    pub betweenness: f64,
    pub bonacich: Option<f64>,
    pub pagerank: f64,
    pub beta_measure: f64,
    #[serde(skip)]
    marker: &'static str,
}

pub fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn contested_value(c: Contestation) -> Value {
    match c {
        Contestation::Contested => Value::Bool(true),
        Contestation::Uncontested => Value::Bool(false),
        Contestation::Vacuous => Value::String("vacuous".into()),
    }
}

/// Runs every analysis on `g`. A Bonacich parameter beyond the spectral
/// bound leaves that column empty and records a warning instead of failing.
pub fn analyze(
    g: &DirectedGraph,
    beta: f64,
    damping: f64,
    undirected: bool,
) -> middleman_core::Result<AnalysisReport> {
    let profile = MiddlemanProfile::compute(g);
    let degree = degree_centrality(g);
    let close = closeness(g).scores;
    let between = betweenness(g, true);
    let rank = pagerank(g, damping)?.scores;
    let beta_scores = beta_measure(g).scores;
    let mut warnings = Vec::new();
    let (bonacich_scores, bound) = match bonacich(g, beta) {
        Ok(v) => {
            let bound = v
                .parameters
                .iter()
                .find(|(k, _)| *k == "spectral_bound")
                .map(|p| p.1);
            (Some(v.scores), bound)
        }
        Err(e) if e.is_resource_limit() => {
            warnings.push(format!("bonacich omitted: {e}"));
            (None, None)
        }
        Err(e) => return Err(e),
    };

    let nodes = g
        .nodes()
        .map(|v| {
            let k = v.index();
            let class = profile.class[k];
            NodeReport {
                label: g.label(v).to_owned(),
                role: g.role(v).as_str(),
                middleman_class: class.as_str(),
                brokerage: profile.brokerage[k],
                nu: ratio_f64(profile.power[k]),
                nu_star: profile.distance_power[k].value,
                contested: contested_value(contestation(g, v)),
                degree_in: degree.in_degree[k],
                degree_out: degree.out_degree[k],
                closeness: close[k],
                betweenness: between.scores[k],
                bonacich: bonacich_scores.as_ref().map(|s| s[k]),
                pagerank: rank[k],
                beta_measure: beta_scores[k],
                marker: class.marker(),
            }
        })
        .collect();

    Ok(AnalysisReport {
        graph: GraphSummary {
            n: g.node_count(),
            arcs: g.arc_count(),
            weakly_connected: is_weakly_connected(g),
            strongly_connected: is_strongly_connected(g),
            components: component_count(g),
            b_prime: profile.potential.b_prime,
            b: profile.potential.normalizer,
        },
        nodes,
        parameters: json!({
            "bonacich_beta": beta,
            "bonacich_spectral_bound": bound,
            "pagerank_damping": damping,
            "betweenness_normalization": between.normalization,
            "undirected": undirected,
        }),
        version: env!("CARGO_PKG_VERSION"),
        order: profile.ranking().into_iter().map(|v| v.index()).collect(),
        warnings,
    })
}

fn fixed(x: f64) -> String {
    format!("{x:.3}")
}

impl AnalysisReport {
    /// Aligned table ranked by middleman power, with `*` marking weak and
    /// `**` strong middlemen.
    pub fn to_text(&self) -> String {
        let headers = ["node", "d- (d+)", "E", "BC", "nu", "nu*"];
        let rows: Vec<[String; 6]> = self
            .order
            .iter()
            .map(|&k| {
                let r = &self.nodes[k];
                [
                    format!("{}{}", r.label, r.marker),
                    format!("{} ({})", r.degree_in, r.degree_out),
                    r.bonacich.map_or_else(|| "-".to_owned(), fixed),
                    fixed(r.betweenness),
                    fixed(r.nu),
                    fixed(r.nu_star),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..headers.len())
            .map(|c| {
                rows.iter()
                    .map(|row| row[c].chars().count())
                    .chain([headers[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let g = &self.graph;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n = {}, arcs = {}, components = {}, B' = {}, B = {}",
            g.n, g.arcs, g.components, g.b_prime, g.b
        );
        let line = |out: &mut String, cells: &[&str]| {
            let mut text = format!("{:<w$}", cells[0], w = widths[0]);
            for (c, cell) in cells.iter().enumerate().skip(1) {
                let _ = write!(text, "  {:>w$}", cell, w = widths[c]);
            }
            out.push_str(text.trim_end());
            out.push('\n');
        };
        line(&mut out, &headers);
        for row in &rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            line(&mut out, &cells);
        }
        if !self.nodes.is_empty() {
            let _ = writeln!(
                out,
                "{} weak middleman, {} strong middleman",
                MiddlemanClass::WeakMiddleman.marker(),
                MiddlemanClass::StrongMiddleman.marker()
            );
        }
        out
    }
}
