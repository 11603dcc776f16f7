//! Graphviz DOT rendering.

use std::fmt::Write;

use crate::graph::DirectedGraph;
use crate::middleman::MiddlemanClass;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders `g` as a DOT digraph. Middlemen carry `class="strong"` or
/// `class="weak"`; `classes` is indexed by node id.
pub fn to_dot(g: &DirectedGraph, classes: &[MiddlemanClass]) -> String {
    let mut out = String::from("digraph network {\n");
    for v in g.nodes() {
        let _ = write!(out, "  {}", quote(g.label(v)));
        match classes.get(v.index()) {
            Some(MiddlemanClass::StrongMiddleman) => {
                out.push_str(" [class=\"strong\", style=filled, fillcolor=\"#b0306080\"]")
            }
            Some(MiddlemanClass::WeakMiddleman) => {
                out.push_str(" [class=\"weak\", style=filled, fillcolor=\"#b0306030\"]")
            }
            _ => {}
        }
        out.push_str(";\n");
    }
    for (a, b) in g.arcs() {
        let _ = writeln!(out, "  {} -> {};", quote(g.label(a)), quote(g.label(b)));
    }
    out.push_str("}\n");
    out
}
