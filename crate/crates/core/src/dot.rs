//! Graphviz export. Output is deterministic: vertices by id, edges by label.

use std::fmt::Write;

use crate::graph::LabeledGraph;
use crate::verify::induced_sum;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text with edge labels as `label` attributes and induced sums as
/// vertex `xlabel` attributes.
pub fn to_dot(g: &LabeledGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(title)).unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for v in g.vertices() {
        let sum = induced_sum(g, v).map_or_else(|| "overflow".to_string(), |s| s.to_string());
        writeln!(
            out,
            "  n{} [label={}, xlabel={}, sum={}];",
            v.0,
            quote(&g.name(v).to_string()),
            quote(&sum),
            quote(&sum)
        )
        .unwrap();
    }
    let mut edges: Vec<_> = g.edges().iter().collect();
    edges.sort_by_key(|e| (e.label, e.ends.0, e.ends.1));
    for e in edges {
        writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.ends.0 .0, e.ends.1 .0, e.label).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_fb;

    #[test]
    fn fb2_snapshot() {
        let g = build_fb(1).unwrap().graph;
        let dot = to_dot(&g, "FB(k=1)");
        assert_eq!(dot, to_dot(&g, "FB(k=1)"));
        assert!(dot.starts_with("graph \"FB(k=1)\" {\n"));
        assert!(dot.contains("[label=\"x\", xlabel=\"38\", sum=\"38\"]"));
        assert_eq!(dot.matches(" -- ").count(), 10);
        let first = dot.find("[label=\"1\"]").unwrap();
        let second = dot.find("[label=\"2\"]").unwrap();
        assert!(first < second);
    }
}
