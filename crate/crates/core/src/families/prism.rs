//! Prism families labeled by the sequences `T_1 .. T_2n`.
//!
//! Copy `a` of `C_4(8,2)` has cycles `u_{a,1..8}` and `v_{a,1..8}` and rungs
//! `u_{a,2j}v_{a,2j}`. The `u`-cycle takes terms 1,3,4,6,7,9,10,12 of `T_a`,
//! the `v`-cycle the same terms of `T_{n+a}`, and the rungs terms 2,5,8,11
//! (shared by both sequences).

use crate::graph::{vn, LabeledGraph, MergePlan, VertexId};
use crate::matrix::{matrix_6x4n, sequences_6x4n};

use super::{check_size, invalid, BuiltFamily, ExpectedColors, Family, FamilyError, LabelSource};

const CYCLE_TERMS: [usize; 8] = [0, 2, 3, 5, 6, 8, 9, 11];
const RUNG_TERMS: [usize; 4] = [1, 4, 7, 10];

fn copies(family: &str, n: usize) -> Result<(LabeledGraph, LabelSource), FamilyError> {
    if n == 0 {
        return Err(invalid(family, "n must be at least 1"));
    }
    check_size(family, 20 * n)?;
    let seqs = sequences_6x4n(n as u64)?;
    let matrix = matrix_6x4n(n as u64)?;
    let mut names = Vec::with_capacity(16 * n);
    for a in 1..=n {
        for role in ["u", "v"] {
            for j in 1..=8 {
                names.push(vn(role, &[a, j]));
            }
        }
    }
    let mut g = LabeledGraph::new(names)?;
    let mut cells = Vec::with_capacity(20 * n);
    for a in 1..=n {
        let u = |j: usize| VertexId(16 * (a - 1) + (j - 1) % 8);
        let v = |j: usize| VertexId(16 * (a - 1) + 8 + (j - 1) % 8);
        for (cycle, seq) in [(&u as &dyn Fn(usize) -> VertexId, a - 1), (&v, n + a - 1)] {
            for (j, &t) in CYCLE_TERMS.iter().enumerate() {
                g.add_edge(cycle(j + 1), cycle(j + 2), seqs[seq][t])?;
                cells.push(vec![(seq, t)]);
            }
        }
        for (j, &t) in RUNG_TERMS.iter().enumerate() {
            let p = 2 * (j + 1);
            g.add_edge(u(p), v(p), seqs[a - 1][t])?;
            cells.push(vec![(a - 1, t), (n + a - 1, t)]);
        }
    }
    Ok((g, LabelSource { matrix, cells }))
}

fn nn(n: usize) -> u64 {
    n as u64
}

fn id(g: &LabeledGraph, role: &str, a: usize, j: usize) -> Result<VertexId, FamilyError> {
    Ok(g.id(&vn(role, &[a, j]))?)
}

pub fn build_nc482(n: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = copies("nC482", n)?;
    let c = nn(n);
    let expected = ExpectedColors::exactly_three(&[
        (20 * c + 1, 8 * n, 2),
        (30 * c + 1, 4 * n, 3),
        (30 * c + 2, 4 * n, 3),
    ]);
    Ok(BuiltFamily::new(Family::NC482 { n }, g, expected, source))
}

fn rs_checks(family: &str, r: usize, s: usize) -> Result<usize, FamilyError> {
    if r == 0 {
        return Err(invalid(family, "r must be at least 1"));
    }
    if s < 2 {
        return Err(invalid(family, "s must be at least 2"));
    }
    Ok(r * s)
}

/// Fuses `(role, j)` across the `s` copies of every block `b`, naming the
/// result `NEW_{b,j}`.
fn merge_blocks(
    g: &LabeledGraph,
    r: usize,
    s: usize,
    picks: &[(&str, usize, &str)],
) -> Result<LabeledGraph, FamilyError> {
    let mut plan = MergePlan::new();
    for b in 1..=r {
        for &(role, j, new) in picks {
            let members = (1..=s)
                .map(|i| id(g, role, (b - 1) * s + i, j))
                .collect::<Result<Vec<_>, _>>()?;
            plan.group(vn(new, &[b, j]), members);
        }
    }
    Ok(g.apply_merge(&plan)?)
}

/// `G_1(r,s)`: odd-position (degree 2) vertices fused across each block of `s` copies.
pub fn build_g1(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let n = rs_checks("G1", r, s)?;
    let (g, source) = copies("G1", n)?;
    let picks: Vec<(&str, usize, &str)> =
        [1, 3, 5, 7].iter().flat_map(|&j| [("u", j, "U"), ("v", j, "V")]).collect();
    let g = merge_blocks(&g, r, s, &picks)?;
    let c = nn(n);
    let expected = ExpectedColors::exactly_three(&[
        (s as u64 * (20 * c + 1), 8 * r, 2 * s),
        (30 * c + 1, 4 * n, 3),
        (30 * c + 2, 4 * n, 3),
    ]);
    Ok(BuiltFamily::new(Family::G1 { r, s }, g, expected, source))
}

/// `G_2(r,s)`: the `30n+1` vertices `u_2, u_8, v_4, v_6` fused across each block.
pub fn build_g2(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let n = rs_checks("G2", r, s)?;
    let (g, source) = copies("G2", n)?;
    let g = merge_blocks(&g, r, s, &[("u", 2, "U"), ("u", 8, "U"), ("v", 4, "V"), ("v", 6, "V")])?;
    let c = nn(n);
    let expected = ExpectedColors::exactly_three(&[
        (20 * c + 1, 8 * n, 2),
        (30 * c + 2, 4 * n, 3),
        (s as u64 * (30 * c + 1), 4 * r, 3 * s),
    ]);
    Ok(BuiltFamily::new(Family::G2 { r, s }, g, expected, source))
}

/// The four degree-2 pairs fused in copy `a` of `H_m`, as
/// `(new role, new position, first, second)`.
fn h_pairs(m: u8) -> [(&'static str, usize, (&'static str, usize), (&'static str, usize)); 4] {
    match m {
        1 => [
            ("x", 1, ("u", 1), ("u", 5)),
            ("x", 2, ("u", 3), ("u", 7)),
            ("y", 1, ("v", 1), ("v", 5)),
            ("y", 2, ("v", 3), ("v", 7)),
        ],
        2 => [
            ("x", 1, ("u", 1), ("v", 7)),
            ("x", 2, ("u", 5), ("v", 3)),
            ("y", 1, ("u", 3), ("v", 5)),
            ("y", 2, ("u", 7), ("v", 1)),
        ],
        _ => [
            ("x", 1, ("u", 1), ("v", 1)),
            ("x", 2, ("u", 5), ("v", 5)),
            ("y", 1, ("u", 3), ("v", 3)),
            ("y", 2, ("u", 7), ("v", 7)),
        ],
    }
}

fn h_graph(family: &str, m: u8, n: usize) -> Result<(LabeledGraph, LabelSource), FamilyError> {
    if !(1..=3).contains(&m) {
        return Err(invalid(family, "m must be 1, 2 or 3"));
    }
    let (g, source) = copies(family, n)?;
    let mut plan = MergePlan::new();
    for a in 1..=n {
        for (role, j, (r1, j1), (r2, j2)) in h_pairs(m) {
            plan.group(vn(role, &[a, j]), vec![id(&g, r1, a, j1)?, id(&g, r2, a, j2)?]);
        }
    }
    Ok((g.apply_merge(&plan)?, source))
}

/// `H_m(n)`: every degree-2 vertex is paired into a degree-4 vertex.
pub fn build_h(m: u8, n: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = h_graph(&format!("H{m}"), m, n)?;
    let c = nn(n);
    let expected = ExpectedColors::exactly_three(&[
        (40 * c + 2, 4 * n, 4),
        (30 * c + 1, 4 * n, 3),
        (30 * c + 2, 4 * n, 3),
    ]);
    Ok(BuiltFamily::new(Family::H { m, n }, g, expected, source))
}

/// `H_m(r,s)`: the degree-4 vertices of `H_m(rs)` fused across blocks of `s` copies.
pub fn build_hm_rs(m: u8, r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let n = rs_checks("Hm_rs", r, s)?;
    let (g, source) = h_graph("Hm_rs", m, n)?;
    let g = merge_blocks(&g, r, s, &[("x", 1, "X"), ("x", 2, "X"), ("y", 1, "Y"), ("y", 2, "Y")])?;
    let c = nn(n);
    let expected = ExpectedColors::exactly_three(&[
        (s as u64 * (40 * c + 2), 4 * r, 4 * s),
        (30 * c + 1, 4 * n, 3),
        (30 * c + 2, 4 * n, 3),
    ]);
    Ok(BuiltFamily::new(Family::HmRs { m, r, s }, g, expected, source))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::induced_coloring;

    fn sum_of(g: &LabeledGraph, name: &str) -> u64 {
        induced_coloring(g).unwrap().sums[g.find(name).unwrap_or_else(|| panic!("no vertex {name}")).0]
    }

    #[test]
    fn nc482_n1_sums() {
        let b = build_nc482(1).unwrap();
        assert_eq!(b.graph.size(), 20);
        assert_eq!(b.graph.order(), 16);
        assert_eq!(sum_of(&b.graph, "u_{1,2}"), 31);
        assert_eq!(sum_of(&b.graph, "v_{1,2}"), 32);
        assert_eq!(sum_of(&b.graph, "u_{1,3}"), 21);
    }

    #[test]
    fn nc482_n6_first_copy() {
        let b = build_nc482(6).unwrap();
        // T_1 = 1, 97, 83, 38, 108, 36, 85, 13, 84, 37, 24, 120
        let g = &b.graph;
        let u1 = g.find("u_{1,1}").unwrap();
        let u2 = g.find("u_{1,2}").unwrap();
        let v2 = g.find("v_{1,2}").unwrap();
        let label = |a, b| {
            g.edges()
                .iter()
                .find(|e| (e.ends == (a, b)) || (e.ends == (b, a)))
                .map(|e| e.label)
                .unwrap()
        };
        assert_eq!(label(u1, u2), 1);
        assert_eq!(label(u2, v2), 97);
        assert_eq!(sum_of(g, "u_{1,8}"), 181);
        assert_eq!(sum_of(g, "v_{1,8}"), 182);
    }

    #[test]
    fn g_and_h_shapes() {
        let b = build_g1(1, 2).unwrap();
        assert_eq!(sum_of(&b.graph, "U_{1,1}"), 82);
        assert_eq!(b.graph.components().len(), 1);
        let b = build_g2(3, 2).unwrap();
        assert_eq!(b.graph.components().len(), 3);
        assert_eq!(b.graph.degree(b.graph.find("V_{2,4}").unwrap()), 6);
        for m in 1..=3 {
            let b = build_h(m, 1).unwrap();
            assert_eq!(b.graph.order(), 12);
            assert_eq!(sum_of(&b.graph, "x_{1,1}"), 42);
        }
        let b = build_hm_rs(2, 1, 3).unwrap();
        assert_eq!(sum_of(&b.graph, "Y_{1,2}"), 3 * 122);
        assert!(build_g1(1, 1).is_err());
        assert!(build_h(4, 1).is_err());
    }
}
