//! Values checked against oracles written independently of the library:
//! induced sums recomputed from the edge list, color formulas evaluated
//! directly, and exhaustive search over all labelings for tiny graphs.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use lacolor::families::ColorClaim;
use lacolor::graph::{LabeledGraph, VertexId};
use lacolor::matrix::matrix_5x2k;
use lacolor::{check_expected, chi_la_exact, induced_coloring, ExpectedColors, Family, SearchOptions};

fn recompute_sums(g: &LabeledGraph) -> Vec<u64> {
    let mut s = vec![0u64; g.order()];
    for e in g.edges() {
        s[e.ends.0 .0] += e.label;
        s[e.ends.1 .0] += e.label;
    }
    s
}

fn color_set(g: &LabeledGraph) -> BTreeSet<u64> {
    recompute_sums(g).into_iter().collect()
}

fn colors_of(fam: Family) -> BTreeSet<u64> {
    color_set(&fam.build().unwrap().graph)
}

fn brute_force_chi(g: &LabeledGraph) -> Option<usize> {
    let m = g.size();
    (1..=m as u64)
        .permutations(m)
        .filter_map(|perm| {
            let mut s = vec![0u64; g.order()];
            for (e, &l) in g.edges().iter().zip(&perm) {
                s[e.ends.0 .0] += l;
                s[e.ends.1 .0] += l;
            }
            let ok = g.edges().iter().all(|e| s[e.ends.0 .0] != s[e.ends.1 .0]);
            ok.then(|| s.iter().collect::<BTreeSet<_>>().len())
        })
        .min()
}

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

#[test]
fn sums_match_recomputation() {
    for fam in common::golden_points().into_iter().chain(common::family_grid().into_iter().step_by(7)) {
        let g = fam.build().unwrap().graph;
        assert_eq!(induced_coloring(&g).unwrap().sums, recompute_sums(&g), "{fam}");
    }
}

#[test]
fn five_by_two_columns_at_k1() {
    let m = matrix_5x2k(1).unwrap();
    let col = |c: usize| (1..=5).map(|r| m.at(r, c)).collect::<Vec<_>>();
    assert_eq!(col(1), [1, 6, 7, 10, 5]);
    assert_eq!(col(2), [2, 8, 4, 9, 3]);
}

#[test]
fn fan_family_colors_follow_formulas() {
    for k in 1..=8u64 {
        let f = Family::Fb { k: k as usize };
        assert_eq!(colors_of(f), set(&[10 * k + 1, 13 * k + 1, 2 * k * (17 * k + 2)]), "{f}");
    }
    for (r, s) in [(2u64, 2u64), (3, 2), (2, 4), (5, 2), (3, 6)] {
        let k = r * s / 2;
        let f = Family::Fb1 { r: r as usize, s: s as usize };
        assert_eq!(colors_of(f), set(&[r * (10 * k + 1), 13 * k + 1, s * (17 * k + 2)]), "{f}");
    }
    for (r, s) in [(3u64, 2u64), (5, 2), (3, 6), (7, 2)] {
        let k = r * s / 2;
        let f = Family::Fb2 { r: r as usize, s: s as usize };
        assert_eq!(colors_of(f), set(&[10 * k + 1, r * (13 * k + 1), s * (17 * k + 2)]), "{f}");
    }
    for (r, s) in [(1u64, 2u64), (3, 2), (2, 3), (4, 1)] {
        let k = r * s;
        let f = Family::RDf { r: r as usize, s: s as usize };
        assert_eq!(colors_of(f), set(&[10 * k + 1, 13 * k + 1, s * (17 * k + 2)]), "{f}");
    }
    for (r, s) in [(2u64, 1u64), (2, 3), (3, 2)] {
        let k = r * s;
        let f = Family::DfVariant { v: 3, r: r as usize, s: s as usize };
        assert_eq!(colors_of(f), set(&[10 * k + 1, 13 * k + 1, r * s * (17 * k + 2)]), "{f}");
    }
}

#[test]
fn worked_small_cases() {
    assert_eq!(colors_of(Family::Fb { k: 1 }), set(&[11, 14, 38]));
    assert_eq!(colors_of(Family::Fb1 { r: 2, s: 2 }), set(&[27, 42, 72]));
    assert_eq!(colors_of(Family::Fb2 { r: 3, s: 2 }), set(&[31, 106, 120]));
    assert_eq!(colors_of(Family::DfVariant { v: 3, r: 2, s: 1 }), set(&[21, 27, 72]));
    assert_eq!(colors_of(Family::G1 { r: 1, s: 2 }), set(&[41 * 2, 61, 62]));
    assert_eq!(colors_of(Family::H { m: 1, n: 1 }), set(&[42, 31, 32]));
    assert_eq!(colors_of(Family::RG82 { r: 1, s: 2 }), set(&[21, 27, 72]));
}

#[test]
fn prism_colors_follow_formulas() {
    for n in 1..=6u64 {
        let f = Family::NC482 { n: n as usize };
        assert_eq!(colors_of(f), set(&[20 * n + 1, 30 * n + 1, 30 * n + 2]), "{f}");
        for m in 1..=3u8 {
            let f = Family::H { m, n: n as usize };
            assert_eq!(colors_of(f), set(&[40 * n + 2, 30 * n + 1, 30 * n + 2]), "{f}");
        }
    }
    for (r, s) in [(1u64, 2u64), (2, 2), (1, 3), (3, 2)] {
        let n = r * s;
        let (ru, su) = (r as usize, s as usize);
        assert_eq!(colors_of(Family::G1 { r: ru, s: su }), set(&[s * (20 * n + 1), 30 * n + 1, 30 * n + 2]));
        assert_eq!(colors_of(Family::G2 { r: ru, s: su }), set(&[20 * n + 1, 30 * n + 2, s * (30 * n + 1)]));
        assert_eq!(
            colors_of(Family::HmRs { m: 1, r: ru, s: su }),
            set(&[s * (40 * n + 2), 30 * n + 1, 30 * n + 2])
        );
    }
}

#[test]
fn cycle_colors_follow_formulas() {
    for k in 1..=6u64 {
        let ku = k as usize;
        assert_eq!(colors_of(Family::Bk { k: ku }), set(&[10 * k + 1, 13 * k + 1, 24 * k + 3]));
        assert_eq!(colors_of(Family::KD82 { k: ku }), set(&[10 * k + 1, 13 * k + 1, 34 * k + 4]));
        assert_eq!(
            colors_of(Family::KC82 { k: ku }),
            set(&[10 * k + 1, 6 * k + 2, 13 * k + 1, 28 * k + 2])
        );
        assert_eq!(
            colors_of(Family::C8Units { k: ku }),
            set(&[10 * k + 1, 13 * k + 1, 6 * k + 2, 18 * k + 1])
        );
    }
}

#[test]
fn odd_block_merge_reports_ambiguity() {
    let b = Family::OddKH { r: 1, s: 3 }.build().unwrap();
    assert_eq!(color_set(&b.graph), set(&[31, 40, 126, 192]));
    let note = b.ambiguity.as_deref().expect("ambiguity is reported");
    assert!(note.contains("161") && note.contains("192"), "{note}");
    assert!(b.discrepancies.iter().any(|d| d.printed == 161 && d.verified == 192));
}

#[test]
fn df3_and_df4_agree_at_r2() {
    for s in 1..=5 {
        let a = Family::DfVariant { v: 3, r: 2, s }.build().unwrap();
        let b = Family::DfVariant { v: 4, r: 2, s }.build().unwrap();
        let ra = induced_coloring(&a.graph).unwrap();
        let rb = induced_coloring(&b.graph).unwrap();
        assert_eq!(ra.colors(), rb.colors(), "s={s}");
        assert_eq!(ra.class_sizes(), rb.class_sizes(), "s={s}");
        assert_eq!(a.graph.size(), b.graph.size());
    }
}

#[test]
fn duplicate_claimed_color_is_rejected() {
    let b = Family::Fb1 { r: 2, s: 2 }.build().unwrap();
    // claim 27 twice, as if two classes had collided
    let fake = ExpectedColors::new(ColorClaim::Exactly(3), &[(27, 4, 3), (27, 4, 4), (72, 2, 6)]);
    let chk = check_expected(&b.graph, &fake).unwrap();
    assert!(!chk.passed);
    assert!(chk.diffs.iter().any(|d| d.contains("not distinct")), "{:?}", chk.diffs);
}

#[test]
fn class_sizes_match_degree_counts() {
    for fam in common::golden_points() {
        let b = fam.build().unwrap();
        let degrees = b.graph.degrees();
        let mut by_color: BTreeMap<u64, (usize, BTreeSet<usize>)> = BTreeMap::new();
        for (v, s) in recompute_sums(&b.graph).into_iter().enumerate() {
            let e = by_color.entry(s).or_default();
            e.0 += 1;
            e.1.insert(degrees[v]);
        }
        for class in &b.expected.classes {
            let (count, degs) = &by_color[&class.color];
            assert!(*count >= class.count && degs.contains(&class.degree), "{fam}: {class:?}");
        }
    }
}

fn tiny(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    let names: Vec<String> = (0..n).map(|i| format!("t_{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut g = LabeledGraph::from_names(&refs).unwrap();
    for (i, &(a, b)) in edges.iter().enumerate() {
        g.add_edge(VertexId(a), VertexId(b), i as u64 + 1).unwrap();
    }
    g
}

#[test]
fn search_agrees_with_brute_force_on_named_graphs() {
    let cases = [
        ("K2", tiny(2, &[(0, 1)])),
        ("P3", tiny(3, &[(0, 1), (1, 2)])),
        ("P4", tiny(4, &[(0, 1), (1, 2), (2, 3)])),
        ("C4", tiny(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("C5", tiny(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])),
        ("K4", tiny(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
        ("FB(1)", tiny(4, &[(0, 2), (1, 2), (3, 2), (3, 0), (3, 1)])),
        ("star K1,3", tiny(4, &[(0, 1), (0, 2), (0, 3)])),
    ];
    for (name, g) in cases {
        let got = chi_la_exact(&g, &SearchOptions::default()).unwrap().value();
        assert_eq!(got, brute_force_chi(&g), "{name}");
    }
    assert_eq!(brute_force_chi(&tiny(2, &[(0, 1)])), None);
    assert_eq!(brute_force_chi(&tiny(3, &[(0, 1), (1, 2)])), Some(3));
}

#[test]
fn fb2_search_is_three_by_brute_force() {
    let g = Family::Fb { k: 1 }.build().unwrap().graph;
    assert_eq!(brute_force_chi(&g), Some(3));
    assert_eq!(chi_la_exact(&g, &SearchOptions::default()).unwrap().value(), Some(3));
}
