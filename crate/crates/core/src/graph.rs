//! Simple undirected graphs carrying an edge labeling, plus the vertex
//! merge / split machinery every family construction is built from.
//!
//! Edges keep their position (their [`EdgeId`]) through merges and splits, so
//! a label attached at construction time never has to be re-attached.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default vertex budget for [`LabeledGraph::chromatic_number_small`].
pub const CHROMATIC_VERTEX_BUDGET: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateName(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("edge label must be positive")]
    ZeroLabel,
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("parallel edge `{0}`-`{1}`")]
    ParallelEdge(String, String),
    #[error("merge would create a loop: `{0}` and `{1}` are adjacent")]
    LoopCreated(String, String),
    #[error("merge would create a parallel edge between `{0}` and `{1}`")]
    ParallelEdgeCreated(String, String),
    #[error("invalid merge plan: {0}")]
    InvalidPlan(String),
    #[error("edge blocks do not partition the edges at `{0}`")]
    NotAPartition(String),
    #[error("graph component has {vertices} vertices, exact coloring budget is {budget}")]
    TooLarge { vertices: usize, budget: usize },
    #[error("malformed vertex name `{0}`")]
    BadName(String),
}

/// Structured vertex name: optional namespace path, a role such as `u`,
/// index positions, and an optional superscript.
///
/// Displays as `u`, `u_3`, `u_{3,4}`, `x_5^1`, and with a namespace
/// `2:u_{3,4}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexName {
    pub scope: Vec<usize>,
    pub role: String,
    pub index: Vec<usize>,
    pub sup: Option<usize>,
}

impl VertexName {
    pub fn new(role: &str, index: &[usize]) -> Self {
        VertexName {
            scope: Vec::new(),
            role: role.to_string(),
            index: index.to_vec(),
            sup: None,
        }
    }

    pub fn with_sup(mut self, sup: usize) -> Self {
        self.sup = Some(sup);
        self
    }

    pub fn scoped(mut self, scope: usize) -> Self {
        self.scope.insert(0, scope);
        self
    }
}

/// Shorthand for [`VertexName::new`].
pub fn vn(role: &str, index: &[usize]) -> VertexName {
    VertexName::new(role, index)
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.scope {
            write!(f, "{s}:")?;
        }
        f.write_str(&self.role)?;
        match self.index.as_slice() {
            [] => {}
            [i] => write!(f, "_{i}")?,
            many => {
                let joined: Vec<String> = many.iter().map(|i| i.to_string()).collect();
                write!(f, "_{{{}}}", joined.join(","))?;
            }
        }
        if let Some(t) = self.sup {
            write!(f, "^{t}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexName {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadName(s.to_string());
        let mut parts: Vec<&str> = s.split(':').collect();
        let body = parts.pop().ok_or_else(bad)?;
        let scope = parts
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;

        let (body, sup) = match body.split_once('^') {
            Some((b, t)) => (b, Some(t.parse::<usize>().map_err(|_| bad())?)),
            None => (body, None),
        };
        let (role, index) = match body.split_once('_') {
            Some((r, idx)) => {
                let idx = idx
                    .strip_prefix('{')
                    .and_then(|i| i.strip_suffix('}'))
                    .unwrap_or(idx);
                let index = idx
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                (r, index)
            }
            None => (body, Vec::new()),
        };
        if role.is_empty() || !role.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(bad());
        }
        Ok(VertexName {
            scope,
            role: role.to_string(),
            index,
            sup,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabeledEdge {
    pub ends: (VertexId, VertexId),
    pub label: u64,
}

impl LabeledEdge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }
}

fn key(a: VertexId, b: VertexId) -> (usize, usize) {
    (a.0.min(b.0), a.0.max(b.0))
}

/// One fused vertex of a [`MergePlan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeGroup {
    pub name: VertexName,
    pub members: Vec<VertexId>,
}

/// Pairwise disjoint groups of vertices, each fused into a single new vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MergePlan {
    pub groups: Vec<MergeGroup>,
}

impl MergePlan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn group(&mut self, name: VertexName, members: Vec<VertexId>) -> &mut Self {
        self.groups.push(MergeGroup { name, members });
        self
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// Simple undirected graph whose edges carry positive integer labels.
///
/// Labels are not required to be a bijection onto `[1, m]`; that is the
/// verifier's job.
#[derive(Debug, Clone, Default)]
pub struct LabeledGraph {
    names: Vec<VertexName>,
    edges: Vec<LabeledEdge>,
    lookup: HashMap<VertexName, VertexId>,
    pairs: HashSet<(usize, usize)>,
}

impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for LabeledGraph {}

impl LabeledGraph {
    pub fn new<I>(names: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = VertexName>,
    {
        let mut g = LabeledGraph::default();
        for name in names {
            g.add_vertex(name)?;
        }
        Ok(g)
    }

    /// Parses display-form names, e.g. `["u", "v"]`.
    pub fn from_names(names: &[&str]) -> Result<Self, GraphError> {
        let parsed = names
            .iter()
            .map(|n| n.parse::<VertexName>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parsed)
    }

    pub fn add_vertex(&mut self, name: VertexName) -> Result<VertexId, GraphError> {
        if self.lookup.contains_key(&name) {
            return Err(GraphError::DuplicateName(name.to_string()));
        }
        let id = VertexId(self.names.len());
        self.lookup.insert(name.clone(), id);
        self.names.push(name);
        Ok(id)
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId, label: u64) -> Result<EdgeId, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if label == 0 {
            return Err(GraphError::ZeroLabel);
        }
        if a == b {
            return Err(GraphError::Loop(self.names[a.0].to_string()));
        }
        if !self.pairs.insert(key(a, b)) {
            return Err(GraphError::ParallelEdge(
                self.names[a.0].to_string(),
                self.names[b.0].to_string(),
            ));
        }
        self.edges.push(LabeledEdge { ends: (a, b), label });
        Ok(EdgeId(self.edges.len() - 1))
    }

    /// Adds an edge between two vertices addressed by name.
    pub fn connect(&mut self, a: &VertexName, b: &VertexName, label: u64) -> Result<EdgeId, GraphError> {
        let a = self.id(a)?;
        let b = self.id(b)?;
        self.add_edge(a, b, label)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.names.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v.to_string()))
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len()).map(VertexId)
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &LabeledEdge {
        &self.edges[e.0]
    }

    pub fn name(&self, v: VertexId) -> &VertexName {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[VertexName] {
        &self.names
    }

    pub fn id(&self, name: &VertexName) -> Result<VertexId, GraphError> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    /// Looks a vertex up by its display form, e.g. `"u_{3,4}"`.
    pub fn find(&self, name: &str) -> Option<VertexId> {
        name.parse::<VertexName>().ok().and_then(|n| self.lookup.get(&n).copied())
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.pairs.contains(&key(a, b))
    }

    pub fn labels(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// Returns a copy with the label of `e` replaced.
    pub fn with_label(&self, e: EdgeId, label: u64) -> Result<Self, GraphError> {
        if e.0 >= self.edges.len() {
            return Err(GraphError::UnknownEdge(e.0));
        }
        let mut g = self.clone();
        g.edges[e.0].label = label;
        Ok(g)
    }

    /// Returns a copy with the labels of two edges exchanged.
    pub fn with_swapped_labels(&self, e1: EdgeId, e2: EdgeId) -> Result<Self, GraphError> {
        for e in [e1, e2] {
            if e.0 >= self.edges.len() {
                return Err(GraphError::UnknownEdge(e.0));
            }
        }
        let mut g = self.clone();
        let l1 = g.edges[e1.0].label;
        g.edges[e1.0].label = g.edges[e2.0].label;
        g.edges[e2.0].label = l1;
        Ok(g)
    }

    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.touches(v))
            .map(|(i, _)| EdgeId(i))
            .collect()
    }

    /// Adjacency lists of `(neighbor, edge)` pairs, in edge order.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.order()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.ends.0 .0].push((e.ends.1, EdgeId(i)));
            adj[e.ends.1 .0].push((e.ends.0, EdgeId(i)));
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for e in &self.edges {
            deg[e.ends.0 .0] += 1;
            deg[e.ends.1 .0] += 1;
        }
        deg
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Connected components, each listed in vertex order; components are
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![VertexId(start)];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w.0] {
                        seen[w.0] = true;
                        comp.push(w);
                        queue.push_back(w.0);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Two-coloring by BFS. The first vertex of every component lands in the
    /// first part. `None` when an odd cycle exists.
    pub fn is_bipartite(&self) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let side = self.two_coloring()?;
        let (a, b): (Vec<_>, Vec<_>) = self.vertices().partition(|v| side[v.0] == 0);
        Some((a, b))
    }

    pub(crate) fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; self.order()];
        for start in 0..self.order() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if side[w.0] == u8::MAX {
                        side[w.0] = 1 - side[v];
                        queue.push_back(w.0);
                    } else if side[w.0] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Exact chromatic number with the default vertex budget.
    pub fn chromatic_number_small(&self) -> Result<usize, GraphError> {
        self.chromatic_number_with_budget(CHROMATIC_VERTEX_BUDGET)
    }

    /// Exact chromatic number, computed per component. Bipartite components
    /// are settled directly at any size; any other component must have at
    /// most `budget` vertices.
    pub fn chromatic_number_with_budget(&self, budget: usize) -> Result<usize, GraphError> {
        let adj = self.adjacency();
        let mut best = if self.order() == 0 { 0 } else { 1 };
        for comp in self.components() {
            let sub = self.induced_subgraph(&comp);
            if sub.size() == 0 {
                continue;
            }
            if sub.two_coloring().is_some() {
                best = best.max(2);
                continue;
            }
            if comp.len() > budget {
                return Err(GraphError::TooLarge {
                    vertices: comp.len(),
                    budget,
                });
            }
            let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(i, v)| (v.0, i)).collect();
            let cadj: Vec<Vec<usize>> = comp
                .iter()
                .map(|v| adj[v.0].iter().map(|(w, _)| local[&w.0]).collect())
                .collect();
            let mut colors = 3;
            while !k_colorable(&cadj, colors) {
                colors += 1;
            }
            best = best.max(colors);
        }
        Ok(best)
    }

    fn induced_subgraph(&self, vs: &[VertexId]) -> LabeledGraph {
        let pos: HashMap<usize, VertexId> = vs.iter().enumerate().map(|(i, v)| (v.0, VertexId(i))).collect();
        let mut g = LabeledGraph::default();
        for v in vs {
            g.names.push(self.names[v.0].clone());
        }
        for e in &self.edges {
            if let (Some(&a), Some(&b)) = (pos.get(&e.ends.0 .0), pos.get(&e.ends.1 .0)) {
                g.pairs.insert(key(a, b));
                g.edges.push(LabeledEdge { ends: (a, b), label: e.label });
            }
        }
        g.lookup = g.names.iter().cloned().enumerate().map(|(i, n)| (n, VertexId(i))).collect();
        g
    }

    /// Fuses every group of `plan` into one vertex. Edges and labels are kept
    /// as they are; the fused vertex takes the slot of its smallest member.
    pub fn apply_merge(&self, plan: &MergePlan) -> Result<LabeledGraph, GraphError> {
        // representative slot for each original vertex
        let mut rep: Vec<usize> = (0..self.order()).collect();
        let mut fused_name: HashMap<usize, VertexName> = HashMap::new();
        let mut claimed = vec![false; self.order()];
        for group in &plan.groups {
            if group.members.len() < 2 {
                return Err(GraphError::InvalidPlan(format!(
                    "group `{}` has fewer than two members",
                    group.name
                )));
            }
            for &m in &group.members {
                self.check_vertex(m)?;
                if claimed[m.0] {
                    return Err(GraphError::InvalidPlan(format!(
                        "vertex `{}` appears in more than one group",
                        self.names[m.0]
                    )));
                }
                claimed[m.0] = true;
            }
            let head = group.members.iter().map(|m| m.0).min().unwrap_or(0);
            for &m in &group.members {
                rep[m.0] = head;
            }
            fused_name.insert(head, group.name.clone());
        }

        let mut new_id = vec![usize::MAX; self.order()];
        let mut names = Vec::new();
        for v in 0..self.order() {
            if rep[v] == v {
                new_id[v] = names.len();
                names.push(fused_name.remove(&v).unwrap_or_else(|| self.names[v].clone()));
            }
        }

        let mut g = LabeledGraph::default();
        for name in names {
            if g.lookup.contains_key(&name) {
                return Err(GraphError::InvalidPlan(format!("name `{name}` is used twice after merging")));
            }
            g.add_vertex(name)?;
        }
        let mut first_edge: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            let a = VertexId(new_id[rep[e.ends.0 .0]]);
            let b = VertexId(new_id[rep[e.ends.1 .0]]);
            if a == b {
                return Err(GraphError::LoopCreated(
                    self.names[e.ends.0 .0].to_string(),
                    self.names[e.ends.1 .0].to_string(),
                ));
            }
            if let Some(&j) = first_edge.get(&key(a, b)) {
                let other = &self.edges[j];
                return Err(GraphError::ParallelEdgeCreated(
                    format!("{}-{}", self.names[other.ends.0 .0], self.names[other.ends.1 .0]),
                    format!("{}-{}", self.names[e.ends.0 .0], self.names[e.ends.1 .0]),
                ));
            }
            first_edge.insert(key(a, b), i);
            g.pairs.insert(key(a, b));
            g.edges.push(LabeledEdge { ends: (a, b), label: e.label });
        }
        Ok(g)
    }

    /// Replaces `v` by two vertices: the first (in `v`'s slot, superscript 1)
    /// keeps `block1`, the second (appended, superscript 2) keeps `block2`.
    pub fn split_vertex(&self, v: VertexId, block1: &[EdgeId], block2: &[EdgeId]) -> Result<LabeledGraph, GraphError> {
        let base = self.names.get(v.0).ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        let n1 = base.clone().with_sup(1);
        let n2 = base.clone().with_sup(2);
        self.split_vertex_named(v, block1, block2, n1, n2)
    }

    pub fn split_vertex_named(
        &self,
        v: VertexId,
        block1: &[EdgeId],
        block2: &[EdgeId],
        name1: VertexName,
        name2: VertexName,
    ) -> Result<LabeledGraph, GraphError> {
        self.check_vertex(v)?;
        let not_partition = || GraphError::NotAPartition(self.names[v.0].to_string());
        let incident: HashSet<usize> = self.incident_edges(v).into_iter().map(|e| e.0).collect();
        let mut seen = HashSet::new();
        for e in block1.iter().chain(block2) {
            if !incident.contains(&e.0) || !seen.insert(e.0) {
                return Err(not_partition());
            }
        }
        if seen.len() != incident.len() {
            return Err(not_partition());
        }

        let mut g = LabeledGraph::default();
        for (i, name) in self.names.iter().enumerate() {
            let name = if i == v.0 { name1.clone() } else { name.clone() };
            g.add_vertex(name)?;
        }
        let second = g.add_vertex(name2)?;
        let to_second: HashSet<usize> = block2.iter().map(|e| e.0).collect();
        for (i, e) in self.edges.iter().enumerate() {
            let mut ends = e.ends;
            if to_second.contains(&i) {
                if ends.0 == v {
                    ends.0 = second;
                } else {
                    ends.1 = second;
                }
            }
            g.pairs.insert(key(ends.0, ends.1));
            g.edges.push(LabeledEdge { ends, label: e.label });
        }
        Ok(g)
    }

    /// Disjoint union. Vertex names of the left operand are scoped under `1`,
    /// those of the right under `2`; labels are kept verbatim and edge ids of
    /// the right operand are shifted by `self.size()`.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> LabeledGraph {
        let mut g = LabeledGraph::default();
        for name in &self.names {
            g.add_vertex(name.clone().scoped(1)).expect("scoped names are distinct");
        }
        for name in &other.names {
            g.add_vertex(name.clone().scoped(2)).expect("scoped names are distinct");
        }
        let shift = self.order();
        let moved = other.edges.iter().map(|e| LabeledEdge {
            ends: (VertexId(e.ends.0 .0 + shift), VertexId(e.ends.1 .0 + shift)),
            label: e.label,
        });
        for e in self.edges.iter().copied().chain(moved) {
            g.pairs.insert(key(e.ends.0, e.ends.1));
            g.edges.push(e);
        }
        g
    }
}

/// Backtracking k-coloring, most-constrained vertex first.
fn k_colorable(adj: &[Vec<usize>], k: usize) -> bool {
    fn go(adj: &[Vec<usize>], k: usize, color: &mut [usize], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        // pick uncolored vertex with most distinct neighbor colors, then degree
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..adj.len() {
            if color[v] != usize::MAX {
                continue;
            }
            let mut used = 0u64;
            for &w in &adj[v] {
                if color[w] != usize::MAX {
                    used |= 1 << color[w];
                }
            }
            let key = (used.count_ones() as usize, adj[v].len());
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let mut used = 0u64;
        for &w in &adj[pick] {
            if color[w] != usize::MAX {
                used |= 1 << color[w];
            }
        }
        let max_used = color.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
        // colors are interchangeable: never open more than one fresh color
        for c in 0..k.min(max_used + 1) {
            if used & (1 << c) == 0 {
                color[pick] = c;
                if go(adj, k, color, left - 1) {
                    return true;
                }
                color[pick] = usize::MAX;
            }
        }
        false
    }
    if k >= 64 {
        return true;
    }
    let mut color = vec![usize::MAX; adj.len()];
    go(adj, k, &mut color, adj.len())
}
