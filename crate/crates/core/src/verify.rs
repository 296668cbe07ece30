//! Ground-truth checks for a labeled graph: induced sums, the local antimagic
//! verdict, comparison with a construction's expected coloring, and lower
//! bounds on the number of colors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{ColorClaim, ExpectedColors};
use crate::graph::{EdgeId, LabeledGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("induced sum at `{0}` overflows 64 bits")]
    Overflow(String),
    #[error("witness is not a local antimagic 3-coloring (it has {colors} colors, local antimagic: {valid})")]
    NotAThreeColoring { colors: usize, valid: bool },
    #[error("witness does not have the same edges as the graph")]
    WitnessMismatch,
}

/// Two adjacent vertices with the same induced sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conflict {
    pub edge: EdgeId,
    pub label: u64,
    pub u: String,
    pub v: String,
    pub sum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorClass {
    pub color: u64,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorReport {
    /// Induced sum of every vertex, indexed by vertex id.
    pub sums: Vec<u64>,
    /// Color classes in increasing color order.
    pub classes: Vec<ColorClass>,
    pub color_count: usize,
    /// Labels are exactly `1..=m`.
    pub bijective: bool,
    /// Problems with the label set (duplicates, gaps), empty when bijective.
    pub label_errors: Vec<String>,
    pub conflicts: Vec<Conflict>,
    pub local_antimagic: bool,
    /// Part sizes of a bipartition, when the graph is bipartite.
    pub bipartition: Option<(usize, usize)>,
}

impl ColorReport {
    pub fn colors(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.color).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.vertices.len()).collect()
    }
}

/// Sum of the labels on edges at `v`, `None` on overflow.
pub fn induced_sum(g: &LabeledGraph, v: VertexId) -> Option<u64> {
    g.incident_edges(v)
        .into_iter()
        .try_fold(0u64, |acc, e| acc.checked_add(g.edge(e).label))
}

fn induced_sums(g: &LabeledGraph) -> Result<Vec<u64>, VerifyError> {
    let mut sums = vec![0u64; g.order()];
    for e in g.edges() {
        for v in [e.ends.0, e.ends.1] {
            sums[v.0] = sums[v.0]
                .checked_add(e.label)
                .ok_or_else(|| VerifyError::Overflow(g.name(v).to_string()))?;
        }
    }
    Ok(sums)
}

fn label_errors(g: &LabeledGraph) -> Vec<String> {
    let m = g.size() as u64;
    let mut owners: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        owners.entry(e.label).or_default().push(i);
    }
    let edge_name = |i: usize| {
        let e = &g.edges()[i];
        format!("{}{}", g.name(e.ends.0), g.name(e.ends.1))
    };
    let mut out = Vec::new();
    for (&label, edges) in &owners {
        if label == 0 || label > m {
            for &i in edges {
                out.push(format!("edge {} has label {label} outside 1..={m}", edge_name(i)));
            }
        } else if edges.len() > 1 {
            let names: Vec<String> = edges.iter().map(|&i| edge_name(i)).collect();
            out.push(format!("label {label} is used by {}", names.join(", ")));
        }
    }
    let missing: Vec<String> = (1..=m).filter(|l| !owners.contains_key(l)).map(|l| l.to_string()).collect();
    if !missing.is_empty() {
        out.push(format!("labels never used: {}", missing.join(", ")));
    }
    out
}

/// Recomputes everything from the edge list.
pub fn induced_coloring(g: &LabeledGraph) -> Result<ColorReport, VerifyError> {
    let sums = induced_sums(g)?;
    let mut by_color: BTreeMap<u64, Vec<VertexId>> = BTreeMap::new();
    for v in g.vertices() {
        by_color.entry(sums[v.0]).or_default().push(v);
    }
    let classes: Vec<ColorClass> = by_color
        .into_iter()
        .map(|(color, vertices)| ColorClass { color, vertices })
        .collect();
    let label_errors = label_errors(g);
    let conflicts: Vec<Conflict> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| sums[e.ends.0 .0] == sums[e.ends.1 .0])
        .map(|(i, e)| Conflict {
            edge: EdgeId(i),
            label: e.label,
            u: g.name(e.ends.0).to_string(),
            v: g.name(e.ends.1).to_string(),
            sum: sums[e.ends.0 .0],
        })
        .collect();
    let bipartition = g.is_bipartite().map(|(a, b)| (a.len(), b.len()));
    Ok(ColorReport {
        color_count: classes.len(),
        bijective: label_errors.is_empty(),
        local_antimagic: label_errors.is_empty() && conflicts.is_empty(),
        sums,
        classes,
        label_errors,
        conflicts,
        bipartition,
    })
}

/// Outcome of comparing a graph with a construction's claimed coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedCheck {
    pub passed: bool,
    pub diffs: Vec<String>,
}

/// Compares color values, class sizes and degrees with `expected`. Exact
/// match is required, the claimed colors must be pairwise distinct, and the
/// labeling must be local antimagic.
pub fn check_expected(g: &LabeledGraph, expected: &ExpectedColors) -> Result<ExpectedCheck, VerifyError> {
    let report = induced_coloring(g)?;
    let mut diffs = Vec::new();
    diffs.extend(report.label_errors.iter().cloned());
    for c in &report.conflicts {
        diffs.push(format!(
            "adjacent vertices {} and {} both have sum {} (edge label {})",
            c.u, c.v, c.sum, c.label
        ));
    }

    let mut claimed: BTreeMap<u64, usize> = BTreeMap::new();
    for (i, class) in expected.classes.iter().enumerate() {
        if let Some(j) = claimed.insert(class.color, i) {
            diffs.push(format!(
                "claimed classes {} and {} share the color {}; colors are not distinct",
                j + 1,
                i + 1,
                class.color
            ));
        }
    }

    let degrees = g.degrees();
    for &color in claimed.keys() {
        let same: Vec<_> = expected.classes.iter().filter(|c| c.color == color).collect();
        let wanted: usize = same.iter().map(|c| c.count).sum();
        let allowed: Vec<usize> = same.iter().map(|c| c.degree).collect();
        let actual: &[VertexId] = report
            .classes
            .iter()
            .find(|c| c.color == color)
            .map_or(&[], |c| c.vertices.as_slice());
        if actual.len() != wanted {
            diffs.push(format!("color {color}: expected {wanted} vertices, found {}", actual.len()));
        }
        for &v in actual {
            if !allowed.contains(&degrees[v.0]) {
                diffs.push(format!(
                    "vertex {} has color {color} but degree {}, expected {}",
                    g.name(v),
                    degrees[v.0],
                    allowed[0]
                ));
            }
        }
    }
    let mut stray: Vec<String> = g
        .vertices()
        .filter(|v| !claimed.contains_key(&report.sums[v.0]))
        .map(|v| format!("{} (sum {})", g.name(v), report.sums[v.0]))
        .collect();
    if !stray.is_empty() {
        let more = stray.len().saturating_sub(10);
        stray.truncate(10);
        let tail = if more > 0 { format!(" and {more} more") } else { String::new() };
        diffs.push(format!("vertices with unclaimed colors: {}{tail}", stray.join(", ")));
    }
    match expected.claim {
        ColorClaim::Exactly(c) if report.color_count != c => {
            diffs.push(format!("expected exactly {c} colors, found {}", report.color_count))
        }
        ColorClaim::AtMost(c) if report.color_count > c => {
            diffs.push(format!("expected at most {c} colors, found {}", report.color_count))
        }
        _ => {}
    }
    diffs.dedup();
    Ok(ExpectedCheck {
        passed: diffs.is_empty(),
        diffs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaVerdict {
    /// No local antimagic 2-coloring can exist.
    ImpossibleByLemma,
    Inconclusive,
}

/// Applies the two-color lemma: in a local antimagic 2-coloring with colors
/// `x < y` on classes `X`, `Y` of a bipartite graph of size `q`,
/// `x|X| = y|Y| = q(q+1)/2`, so `|X| > |Y|` and both divide `q(q+1)/2`.
/// The classes are unions of component sides, so every achievable split is
/// scanned.
pub fn two_color_gate(g: &LabeledGraph) -> LemmaVerdict {
    let q = g.size() as u64;
    if q == 0 {
        return LemmaVerdict::Inconclusive;
    }
    // an isolated vertex would be a third color (sum 0)
    if g.degrees().contains(&0) {
        return LemmaVerdict::ImpossibleByLemma;
    }
    let Some(side) = g.two_coloring() else {
        return LemmaVerdict::Inconclusive;
    };
    let n = g.order();
    let total = q * (q + 1) / 2;
    // reachable sizes of X over all side choices per component
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for comp in g.components() {
        let a = comp.iter().filter(|v| side[v.0] == 0).count();
        let b = comp.len() - a;
        let mut next = vec![false; n + 1];
        for (x, _) in reach.iter().enumerate().filter(|(_, &r)| r) {
            next[x + a] = true;
            next[x + b] = true;
        }
        reach = next;
    }
    let feasible = (1..n).any(|x| {
        let y = n - x;
        reach[x] && x > y && total.is_multiple_of(x as u64) && total.is_multiple_of(y as u64)
    });
    if feasible {
        LemmaVerdict::Inconclusive
    } else {
        LemmaVerdict::ImpossibleByLemma
    }
}

/// Lower bound on the number of colors of any local antimagic labeling:
/// the chromatic number, raised to 3 by the two-color lemma. Non-bipartite
/// components too large for exact coloring count as 3.
pub fn lower_bound(g: &LabeledGraph) -> usize {
    let chi = g.chromatic_number_small().unwrap_or(3);
    if g.size() == 0 {
        return chi;
    }
    let gate = if two_color_gate(g) == LemmaVerdict::ImpossibleByLemma { 3 } else { 0 };
    chi.max(gate).max(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeVerdict {
    Confirmed3,
    OnlyUpperBound,
}

/// Given a local antimagic 3-coloring `witness` of `g`, decides whether it
/// settles the color number at exactly 3.
pub fn confirm_three(g: &LabeledGraph, witness: &LabeledGraph) -> Result<ThreeVerdict, VerifyError> {
    let same = g.order() == witness.order()
        && g.size() == witness.size()
        && g.edges().iter().zip(witness.edges()).all(|(a, b)| a.ends == b.ends);
    if !same {
        return Err(VerifyError::WitnessMismatch);
    }
    let report = induced_coloring(witness)?;
    if !report.local_antimagic || report.color_count != 3 {
        return Err(VerifyError::NotAThreeColoring {
            colors: report.color_count,
            valid: report.local_antimagic,
        });
    }
    Ok(if lower_bound(g) >= 3 {
        ThreeVerdict::Confirmed3
    } else {
        ThreeVerdict::OnlyUpperBound
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_fb, build_nc482, build_rdf};

    fn path(labels: &[u64]) -> LabeledGraph {
        let names: Vec<String> = (0..=labels.len()).map(|i| format!("p_{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut g = LabeledGraph::from_names(&refs).unwrap();
        for (i, &l) in labels.iter().enumerate() {
            g.add_edge(VertexId(i), VertexId(i + 1), l).unwrap();
        }
        g
    }

    #[test]
    fn single_edge_is_not_local_antimagic() {
        let r = induced_coloring(&path(&[1])).unwrap();
        assert!(!r.local_antimagic);
        assert_eq!(r.conflicts.len(), 1);
    }

    #[test]
    fn fb12_classes() {
        let b = build_fb(6).unwrap();
        let r = induced_coloring(&b.graph).unwrap();
        assert!(r.local_antimagic);
        assert_eq!(r.colors(), vec![61, 79, 1248]);
        assert_eq!(r.class_sizes(), vec![24, 12, 1]);
        assert!(check_expected(&b.graph, &b.expected).unwrap().passed);
    }

    #[test]
    fn nc482_n6_colors() {
        let b = build_nc482(6).unwrap();
        let r = induced_coloring(&b.graph).unwrap();
        assert!(r.local_antimagic);
        assert_eq!(r.colors(), vec![121, 181, 182]);
        assert_eq!(two_color_gate(&b.graph), LemmaVerdict::ImpossibleByLemma);
    }

    #[test]
    fn tampered_label_names_vertex() {
        let b = build_rdf(3, 2).unwrap();
        let g = b.graph.with_swapped_labels(EdgeId(0), EdgeId(1)).unwrap();
        let check = check_expected(&g, &b.expected).unwrap();
        assert!(!check.passed);
        assert!(check.diffs.iter().any(|d| d.contains("u_1") || d.contains("v_1") || d.contains("w_1")));
    }

    #[test]
    fn duplicate_labels_reported() {
        let r = induced_coloring(&path(&[1, 1])).unwrap();
        assert!(!r.bijective);
        assert_eq!(r.label_errors.len(), 2);
    }

    #[test]
    fn gate_and_bounds() {
        // P3: parts 2 and 1, but 2 does not divide q(q+1)/2 = 3
        assert_eq!(two_color_gate(&path(&[1, 2])), LemmaVerdict::ImpossibleByLemma);
        // P4: parts 2 and 2
        assert_eq!(two_color_gate(&path(&[1, 2, 3])), LemmaVerdict::ImpossibleByLemma);
        // star K_{1,3}: q = 3, total 6, |X| = 3, |Y| = 1
        let mut star = LabeledGraph::from_names(&["c", "a", "b", "d"]).unwrap();
        for i in 1..4 {
            star.add_edge(VertexId(0), VertexId(i), i as u64).unwrap();
        }
        assert_eq!(two_color_gate(&star), LemmaVerdict::Inconclusive);
        assert_eq!(lower_bound(&star), 2);
        let fb2 = build_fb(1).unwrap();
        assert_eq!(two_color_gate(&fb2.graph), LemmaVerdict::Inconclusive);
        assert_eq!(lower_bound(&fb2.graph), 3);
        assert_eq!(confirm_three(&fb2.graph, &fb2.graph).unwrap(), ThreeVerdict::Confirmed3);
    }
}
