//! Exact local antimagic chromatic number of small graphs by exhaustive
//! search over edge labelings.
//!
//! Edges are labeled in a fixed order chosen so vertices become complete
//! (all incident edges labeled) as early as possible. A partial labeling is
//! dropped as soon as two complete adjacent vertices share a sum, or the
//! complete vertices already use as many colors as the best labeling found.
//! Subtrees for each label of the first edge run in parallel.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, LabeledGraph};
use crate::verify::{induced_coloring, lower_bound};

pub const DEFAULT_MAX_EDGES: usize = 11;
/// Hard ceiling on `max_edges`; labels are tracked in a 64-bit mask.
pub const EDGE_CEILING: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has {edges} edges, search limit is {limit}")]
    TooLarge { edges: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_edges: usize,
    /// Wall-clock budget; `None` searches to completion.
    pub budget: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_edges: DEFAULT_MAX_EDGES,
            budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Minimum color count and a labeling achieving it.
    Value { colors: usize, witness: LabeledGraph },
    NoLabelingExists,
    /// Budget ran out. `best` is the best labeling seen so far, if any.
    Timeout { budget: Duration, best: Option<(usize, LabeledGraph)> },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Partial labelings visited.
    pub nodes: u64,
    /// Partial labelings dropped for a sum collision.
    pub collision_prunes: u64,
    /// Partial labelings dropped by the color-count bound.
    pub bound_prunes: u64,
    /// Complete labelings reached.
    pub leaves: u64,
    /// Whether the complement symmetry halved the search.
    pub complement_symmetry: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            SearchOutcome::Value { colors, .. } => Some(colors),
            _ => None,
        }
    }
}

/// Static search plan: edge order and, per step, the vertices that become
/// complete once that edge is labeled.
struct Plan {
    order: Vec<usize>,
    ends: Vec<(usize, usize)>,
    completes: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
    isolated: usize,
    n: usize,
}

fn plan(g: &LabeledGraph) -> Plan {
    let n = g.order();
    let m = g.size();
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.ends.0 .0, e.ends.1 .0)).collect();
    let mut remaining = g.degrees();
    let mut touched = vec![false; n];
    let mut used = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let mut completes = Vec::with_capacity(m);
    for _ in 0..m {
        // prefer edges finishing vertices, then edges next to started vertices
        let pick = (0..m)
            .filter(|&e| !used[e])
            .max_by_key(|&e| {
                let (a, b) = ends[e];
                let done = (remaining[a] == 1) as usize + (remaining[b] == 1) as usize;
                let warm = touched[a] as usize + touched[b] as usize;
                (done, warm, std::cmp::Reverse(remaining[a] + remaining[b]), std::cmp::Reverse(e))
            })
            .expect("an unused edge remains");
        used[pick] = true;
        let (a, b) = ends[pick];
        let mut done = Vec::new();
        for v in [a, b] {
            touched[v] = true;
            remaining[v] -= 1;
            if remaining[v] == 0 {
                done.push(v);
            }
        }
        order.push(pick);
        completes.push(done);
    }
    let neighbors = g
        .adjacency()
        .into_iter()
        .map(|adj| adj.into_iter().map(|(w, _)| w.0).collect())
        .collect();
    let isolated = g.degrees().iter().filter(|&&d| d == 0).count();
    Plan {
        order,
        ends,
        completes,
        neighbors,
        isolated,
        n,
    }
}

struct Shared {
    /// Best color count over all workers (`usize::MAX` when none yet).
    best: AtomicUsize,
    /// Smallest first label whose subtree reached the lower bound.
    settled_at: AtomicU64,
    target: usize,
    deadline: Option<Instant>,
    timed_out: AtomicBool,
}

struct Worker<'a> {
    plan: &'a Plan,
    shared: &'a Shared,
    first_label: u64,
    m: usize,
    labels: Vec<u64>,
    sums: Vec<u64>,
    complete: Vec<bool>,
    /// Multiset of sums of complete vertices: (sum, multiplicity).
    colors: Vec<(u64, usize)>,
    best: usize,
    witness: Option<Vec<u64>>,
    stats: SearchStats,
}

impl<'a> Worker<'a> {
    fn new(plan: &'a Plan, shared: &'a Shared, m: usize, first_label: u64) -> Self {
        let mut w = Worker {
            plan,
            shared,
            first_label,
            m,
            labels: vec![0; m],
            sums: vec![0; plan.n],
            complete: vec![false; plan.n],
            colors: Vec::new(),
            best: usize::MAX,
            witness: None,
            stats: SearchStats::default(),
        };
        if plan.isolated > 0 {
            w.colors.push((0, plan.isolated));
            for v in 0..plan.n {
                w.complete[v] = plan.neighbors[v].is_empty();
            }
        }
        w
    }

    fn add_color(&mut self, s: u64) {
        match self.colors.iter_mut().find(|(c, _)| *c == s) {
            Some(entry) => entry.1 += 1,
            None => self.colors.push((s, 1)),
        }
    }

    fn remove_color(&mut self, s: u64) {
        let i = self.colors.iter().position(|(c, _)| *c == s).expect("color present");
        self.colors[i].1 -= 1;
        if self.colors[i].1 == 0 {
            self.colors.swap_remove(i);
        }
    }

    fn should_stop(&mut self) -> bool {
        if self.shared.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if self.stats.nodes % 4096 == 1 {
            if let Some(d) = self.shared.deadline {
                if Instant::now() >= d {
                    self.shared.timed_out.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        self.shared.settled_at.load(Ordering::Relaxed) < self.first_label
    }

    /// Labels edge `order[step]` with `label`; returns false if the result
    /// must be pruned. Always leaves state consistent for `unassign`.
    fn assign(&mut self, step: usize, label: u64) -> bool {
        let plan = self.plan;
        let e = plan.order[step];
        let (a, b) = plan.ends[e];
        self.labels[e] = label;
        self.sums[a] += label;
        self.sums[b] += label;
        let mut ok = true;
        for &v in &plan.completes[step] {
            self.complete[v] = true;
            let s = self.sums[v];
            self.add_color(s);
            if plan.neighbors[v].iter().any(|&w| self.complete[w] && self.sums[w] == s) {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, step: usize) {
        let plan = self.plan;
        let e = plan.order[step];
        let (a, b) = plan.ends[e];
        for &v in &plan.completes[step] {
            self.complete[v] = false;
            let s = self.sums[v];
            self.remove_color(s);
        }
        let label = self.labels[e];
        self.sums[a] -= label;
        self.sums[b] -= label;
        self.labels[e] = 0;
    }

    fn bound(&self) -> usize {
        // equal to the shared best is still explored so the witness of the
        // lowest first label wins regardless of scheduling
        self.best.min(self.shared.best.load(Ordering::Relaxed).saturating_add(1))
    }

    fn descend(&mut self, step: usize, used: u64) {
        if self.should_stop() {
            return;
        }
        if step == self.m {
            self.stats.leaves += 1;
            let c = self.colors.len();
            if c < self.best {
                self.best = c;
                self.witness = Some(self.labels.clone());
                self.shared.best.fetch_min(c, Ordering::Relaxed);
                if c <= self.shared.target {
                    self.shared.settled_at.fetch_min(self.first_label, Ordering::Relaxed);
                }
            }
            return;
        }
        for label in 1..=self.m as u64 {
            if used & (1 << label) != 0 {
                continue;
            }
            self.stats.nodes += 1;
            if self.assign(step, label) {
                if self.colors.len() >= self.bound() {
                    self.stats.bound_prunes += 1;
                } else {
                    self.descend(step + 1, used | (1 << label));
                }
            } else {
                self.stats.collision_prunes += 1;
            }
            self.unassign(step);
            if self.best <= self.shared.target || self.should_stop() {
                return;
            }
        }
    }
}

/// Exact minimum number of colors over all local antimagic labelings of
/// `g`; the labels already on `g` are ignored.
pub fn chi_la_exact(g: &LabeledGraph, options: &SearchOptions) -> Result<SearchResult, SearchError> {
    let m = g.size();
    let limit = options.max_edges.min(EDGE_CEILING);
    if m > limit {
        return Err(SearchError::TooLarge { edges: m, limit });
    }
    let started = Instant::now();
    if m == 0 {
        let colors = if g.order() == 0 { 0 } else { 1 };
        return Ok(SearchResult {
            outcome: SearchOutcome::Value {
                colors,
                witness: g.clone(),
            },
            stats: SearchStats::default(),
        });
    }
    let plan = plan(g);
    let degrees = g.degrees();
    // ℓ -> m+1-ℓ maps sums s to d(m+1)-s, which keeps distinctness only when
    // every vertex has the same degree d
    let regular = degrees.iter().all(|&d| d == degrees[0]);
    let first_labels: Vec<u64> = if regular {
        (1..=(m as u64).div_ceil(2)).collect()
    } else {
        (1..=m as u64).collect()
    };
    let shared = Shared {
        best: AtomicUsize::new(usize::MAX),
        settled_at: AtomicU64::new(u64::MAX),
        target: lower_bound(g),
        deadline: options.budget.map(|b| started + b),
        timed_out: AtomicBool::new(false),
    };
    let results: Vec<(usize, Option<Vec<u64>>, SearchStats)> = first_labels
        .par_iter()
        .map(|&label| {
            let mut w = Worker::new(&plan, &shared, m, label);
            w.stats.nodes += 1;
            if w.assign(0, label) {
                w.descend(1, 1 << label);
            } else {
                w.stats.collision_prunes += 1;
            }
            (w.best, w.witness, w.stats)
        })
        .collect();

    let mut stats = SearchStats {
        complement_symmetry: regular,
        ..SearchStats::default()
    };
    let mut best: Option<(usize, Vec<u64>)> = None;
    for (c, witness, s) in results {
        stats.nodes += s.nodes;
        stats.collision_prunes += s.collision_prunes;
        stats.bound_prunes += s.bound_prunes;
        stats.leaves += s.leaves;
        if let Some(labels) = witness {
            if best.as_ref().is_none_or(|(b, _)| c < *b) {
                best = Some((c, labels));
            }
        }
    }
    stats.elapsed_ms = started.elapsed().as_millis() as u64;

    let relabel = |labels: &[u64]| {
        let mut w = g.clone();
        for (e, &l) in labels.iter().enumerate() {
            w = w.with_label(EdgeId(e), l).expect("edge exists and label is positive");
        }
        w
    };
    let best = best.map(|(c, labels)| (c, relabel(&labels)));
    if let Some((c, w)) = &best {
        let report = induced_coloring(w).expect("sums of at most 63 labels fit in 64 bits");
        assert!(
            report.local_antimagic && report.color_count == *c,
            "search witness failed re-verification"
        );
    }
    let outcome = if shared.timed_out.load(Ordering::Relaxed) {
        SearchOutcome::Timeout {
            budget: options.budget.unwrap_or_default(),
            best,
        }
    } else {
        match best {
            Some((colors, witness)) => SearchOutcome::Value { colors, witness },
            None => SearchOutcome::NoLabelingExists,
        }
    };
    Ok(SearchResult { outcome, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn graph(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
        let names: Vec<String> = (0..n).map(|i| format!("v_{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut g = LabeledGraph::from_names(&refs).unwrap();
        for (i, &(a, b)) in edges.iter().enumerate() {
            g.add_edge(VertexId(a), VertexId(b), i as u64 + 1).unwrap();
        }
        g
    }

    #[test]
    fn k2_has_no_labeling() {
        let r = chi_la_exact(&graph(2, &[(0, 1)]), &SearchOptions::default()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::NoLabelingExists);
    }

    #[test]
    fn p3_needs_three() {
        let r = chi_la_exact(&graph(3, &[(0, 1), (1, 2)]), &SearchOptions::default()).unwrap();
        assert_eq!(r.value(), Some(3));
    }

    #[test]
    fn c4_is_regular_and_uses_symmetry() {
        let r = chi_la_exact(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), &SearchOptions::default()).unwrap();
        assert!(r.stats.complement_symmetry);
        assert_eq!(r.value(), Some(3));
    }

    #[test]
    fn too_large_is_rejected() {
        let edges: Vec<(usize, usize)> = (0..12).map(|i| (i, i + 1)).collect();
        let g = graph(13, &edges);
        assert!(matches!(
            chi_la_exact(&g, &SearchOptions::default()),
            Err(SearchError::TooLarge { edges: 12, limit: 11 })
        ));
    }

    #[test]
    fn zero_budget_times_out() {
        let edges: Vec<(usize, usize)> = (0..10).map(|i| (i, i + 1)).collect();
        let g = graph(11, &edges);
        let r = chi_la_exact(
            &g,
            &SearchOptions {
                max_edges: 11,
                budget: Some(Duration::ZERO),
            },
        )
        .unwrap();
        assert!(matches!(r.outcome, SearchOutcome::Timeout { .. }));
    }
}
