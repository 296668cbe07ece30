//! Fan and diamond-fan families labeled by the `5 x 2k` matrix.
//!
//! Everything starts from `2k` fan units `FB(1)` on `u_i, v_i, w_i, x_i` whose
//! five edges `u_iw_i, v_iw_i, x_iw_i, x_iu_i, x_iv_i` take column `i` of the
//! matrix, top to bottom. Unit sums: `u_i, v_i -> 10k+1`, `w_i -> 13k+1`.

use crate::graph::{vn, EdgeId, LabeledGraph, MergePlan, VertexId};
use crate::matrix::matrix_5x2k;

use super::{check_size, invalid, BuiltFamily, ColorClaim, ExpectedColors, Family, FamilyError, LabelSource};

fn id(g: &LabeledGraph, role: &str, index: &[usize]) -> Result<VertexId, FamilyError> {
    Ok(g.id(&vn(role, index))?)
}

fn ids(g: &LabeledGraph, role: &str, indices: impl IntoIterator<Item = usize>) -> Result<Vec<VertexId>, FamilyError> {
    indices.into_iter().map(|i| id(g, role, &[i])).collect()
}

/// `2k` disjoint fan units labeled column by column.
fn units(family: &str, k: usize) -> Result<(LabeledGraph, LabelSource), FamilyError> {
    if k == 0 {
        return Err(invalid(family, "k must be at least 1"));
    }
    check_size(family, 10 * k)?;
    let m = matrix_5x2k(k as u64)?;
    let mut names = Vec::with_capacity(8 * k);
    for i in 1..=2 * k {
        for role in ["u", "v", "w", "x"] {
            names.push(vn(role, &[i]));
        }
    }
    let mut g = LabeledGraph::new(names)?;
    let mut cells = Vec::with_capacity(10 * k);
    for i in 1..=2 * k {
        let [u, v, w, x] = [0, 1, 2, 3].map(|o| VertexId(4 * (i - 1) + o));
        for (row, (a, b)) in [(u, w), (v, w), (x, w), (x, u), (x, v)].into_iter().enumerate() {
            g.add_edge(a, b, m.at(row + 1, i))?;
            cells.push(vec![(row, i - 1)]);
        }
    }
    Ok((g, LabelSource { matrix: m, cells }))
}

/// Edge ids of unit `i`: `(x_iw_i, [x_iu_i, x_iv_i])`.
fn hub_edges(i: usize) -> (EdgeId, [EdgeId; 2]) {
    let base = 5 * (i - 1);
    (EdgeId(base + 2), [EdgeId(base + 3), EdgeId(base + 4)])
}

fn k_u64(k: usize) -> u64 {
    k as u64
}

pub fn build_fb_units(k: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = units("FB_units", k)?;
    let kk = k_u64(k);
    let mut classes = vec![(10 * kk + 1, 4 * k, 2), (13 * kk + 1, 2 * k, 3)];
    // rows 3-5 of column i, by the column identities of the matrix
    for i in 1..=2 * k as u64 {
        let hub = if i == 1 {
            21 * kk + 1
        } else if i == 2 * kk {
            13 * kk + 3
        } else if i <= kk {
            19 * kk + 7 - 4 * i
        } else {
            23 * kk + 1 - 4 * i
        };
        classes.push((hub, 1, 3));
    }
    let distinct = {
        let mut c: Vec<u64> = classes.iter().map(|c| c.0).collect();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    let expected = ExpectedColors::new(ColorClaim::Exactly(distinct), &classes);
    Ok(BuiltFamily::new(Family::FbUnits { k }, g, expected, source))
}

pub fn build_fb(k: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = units("FB", k)?;
    let mut plan = MergePlan::new();
    plan.group(vn("x", &[]), ids(&g, "x", 1..=2 * k)?);
    let g = g.apply_merge(&plan)?;
    let kk = k_u64(k);
    let expected = ExpectedColors::exactly_three(&[
        (10 * kk + 1, 4 * k, 2),
        (13 * kk + 1, 2 * k, 3),
        (kk * (34 * kk + 4), 1, 6 * k),
    ]);
    Ok(BuiltFamily::new(Family::Fb { k }, g, expected, source))
}

/// Units forming hub `j` of `rFB(s)` (`2k = rs`): the mirrored column pairs
/// `(j-1)s/2 + a` and `2k - (j-1)s/2 + 1 - a` for `a = 1..s/2`, listed first
/// half then second half.
fn rfb_component(k: usize, s: usize, j: usize) -> Vec<usize> {
    let h = s / 2;
    let first = (1..=h).map(|a| (j - 1) * h + a);
    let second = (1..=h).map(|a| 2 * k - (j - 1) * h + 1 - a);
    first.chain(second).collect()
}

fn rfb_checks(family: &str, r: usize, s: usize) -> Result<usize, FamilyError> {
    if r < 2 {
        return Err(invalid(family, "r must be at least 2"));
    }
    if s < 2 || s % 2 == 1 {
        return Err(invalid(family, "s must be even and at least 2"));
    }
    Ok(r * s / 2)
}

fn rfb_graph(family: &str, r: usize, s: usize) -> Result<(LabeledGraph, LabelSource, usize), FamilyError> {
    let k = rfb_checks(family, r, s)?;
    let (g, source) = units(family, k)?;
    let mut plan = MergePlan::new();
    for j in 1..=r {
        plan.group(vn("x", &[j]), ids(&g, "x", rfb_component(k, s, j))?);
    }
    Ok((g.apply_merge(&plan)?, source, k))
}

pub fn build_rfb(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source, k) = rfb_graph("rFB", r, s)?;
    let kk = k_u64(k);
    let expected = ExpectedColors::exactly_three(&[
        (10 * kk + 1, 4 * k, 2),
        (13 * kk + 1, 2 * k, 3),
        (s as u64 * (17 * kk + 2), r, 3 * s),
    ]);
    Ok(BuiltFamily::new(Family::RFb { r, s }, g, expected, source))
}

fn coincide_warning(a: u64, b: u64, what: &str) -> Option<String> {
    (a == b).then(|| format!("colors coincide: {what} = {a}"))
}

/// `FB_1(r,s)`: merges the `j`-th `u` (and `v`) vertex of every component.
pub fn build_fb1(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source, k) = rfb_graph("FB1", r, s)?;
    let mut plan = MergePlan::new();
    for j in 1..=s {
        let members = |role: &str| ids(&g, role, (1..=r).map(|i| rfb_component(k, s, i)[j - 1]));
        plan.group(vn("u", &[j]), members("u")?);
        plan.group(vn("v", &[j]), members("v")?);
    }
    let g = g.apply_merge(&plan)?;
    let (kk, rr, ss) = (k_u64(k), r as u64, s as u64);
    let expected = ExpectedColors::exactly_three(&[
        (rr * (10 * kk + 1), 2 * s, 2 * r),
        (13 * kk + 1, r * s, 3),
        (ss * (17 * kk + 2), r, 3 * s),
    ]);
    let mut built = BuiltFamily::new(Family::Fb1 { r, s }, g, expected, source);
    if r.is_multiple_of(4) {
        built.warnings.push("hypothesis r ≢ 0 (mod 4) not met; distinct colors are not guaranteed".into());
    }
    built
        .warnings
        .extend(coincide_warning(rr * (10 * kk + 1), ss * (17 * kk + 2), "r(10k+1) and s(17k+2)"));
    Ok(built)
}

/// `FB_2(r,s)`: merges the `j`-th `w` vertex of every component.
pub fn build_fb2(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source, k) = rfb_graph("FB2", r, s)?;
    let mut plan = MergePlan::new();
    for j in 1..=s {
        plan.group(vn("w", &[j]), ids(&g, "w", (1..=r).map(|i| rfb_component(k, s, i)[j - 1]))?);
    }
    let g = g.apply_merge(&plan)?;
    let (kk, rr, ss) = (k_u64(k), r as u64, s as u64);
    let expected = ExpectedColors::exactly_three(&[
        (10 * kk + 1, 2 * r * s, 2),
        (rr * (13 * kk + 1), s, 3 * r),
        (ss * (17 * kk + 2), r, 3 * s),
    ]);
    let mut built = BuiltFamily::new(Family::Fb2 { r, s }, g, expected, source);
    if (r * s).is_multiple_of(4) {
        built.warnings.push("hypothesis rs ≢ 0 (mod 4) not met; distinct colors are not guaranteed".into());
    }
    built
        .warnings
        .extend(coincide_warning(rr * (13 * kk + 1), ss * (17 * kk + 2), "r(13k+1) and s(17k+2)"));
    Ok(built)
}

/// Turns `blocks` blocks of `s` units into `pairs` diamond fans: block `j` is
/// paired with block `blocks + 1 - j`. Every hub `x_i` of those blocks is split
/// into `x_i^1` (keeping `x_iw_i`) and `x_i^2` (keeping `x_iu_i, x_iv_i`); then
/// `y_j` gathers `x^1` of block `j` and `x^2` of its partner, and `z_j` the
/// other halves. With an odd block count the middle block becomes `FB(s)`
/// with hub `x`.
fn diamond_fans(mut g: LabeledGraph, s: usize, blocks: usize, pairs: usize) -> Result<LabeledGraph, FamilyError> {
    let block = |j: usize| (j - 1) * s + 1..=j * s;
    let paired: Vec<usize> = (1..=pairs).flat_map(|j| block(j).chain(block(blocks + 1 - j))).collect();
    for &i in &paired {
        let (to_w, to_uv) = hub_edges(i);
        let x = id(&g, "x", &[i])?;
        g = g.split_vertex(x, &[to_w], &to_uv)?;
    }
    let half = |g: &LabeledGraph, i: usize, t: usize| g.id(&vn("x", &[i]).with_sup(t));
    let mut plan = MergePlan::new();
    for j in 1..=pairs {
        let partner = blocks + 1 - j;
        let mut y = Vec::with_capacity(2 * s);
        let mut z = Vec::with_capacity(2 * s);
        for a in 1..=s {
            let own = (j - 1) * s + a;
            let other = (partner - 1) * s + a;
            y.push(half(&g, own, 1)?);
            y.push(half(&g, other, 2)?);
            z.push(half(&g, own, 2)?);
            z.push(half(&g, other, 1)?);
        }
        plan.group(vn("y", &[j]), y);
        plan.group(vn("z", &[j]), z);
    }
    if blocks % 2 == 1 && s >= 2 {
        let mid = blocks.div_ceil(2);
        plan.group(vn("x", &[]), ids(&g, "x", block(mid))?);
    }
    Ok(g.apply_merge(&plan)?)
}

fn rdf_graph(family: &str, r: usize, s: usize) -> Result<(LabeledGraph, LabelSource, usize), FamilyError> {
    if r == 0 || s == 0 {
        return Err(invalid(family, "r and s must be at least 1"));
    }
    if r * s < 2 {
        return Err(invalid(family, "rs must be at least 2"));
    }
    let k = r * s;
    let (g, source) = units(family, k)?;
    Ok((diamond_fans(g, s, 2 * r, r)?, source, k))
}

pub fn build_rdf(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source, k) = rdf_graph("rDF", r, s)?;
    let kk = k_u64(k);
    let expected = ExpectedColors::exactly_three(&[
        (10 * kk + 1, 4 * k, 2),
        (13 * kk + 1, 2 * k, 3),
        (s as u64 * (17 * kk + 2), 2 * r, 3 * s),
    ]);
    Ok(BuiltFamily::new(Family::RDf { r, s }, g, expected, source))
}

/// `DF_r(2s) = rDF(2s) + FB(s)` from `2r+1` blocks; the middle block is the fan.
pub fn build_dfr(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    if r == 0 {
        return Err(invalid("DFr", "r must be at least 1"));
    }
    if s < 2 || s % 2 == 1 {
        return Err(invalid("DFr", "s must be even and at least 2"));
    }
    let k = (2 * r + 1) * s / 2;
    let (g, source) = units("DFr", k)?;
    let g = diamond_fans(g, s, 2 * r + 1, r)?;
    let kk = k_u64(k);
    let expected = ExpectedColors::exactly_three(&[
        (10 * kk + 1, 4 * k, 2),
        (13 * kk + 1, 2 * k, 3),
        (s as u64 * (17 * kk + 2), 2 * r + 1, 3 * s),
    ]);
    Ok(BuiltFamily::new(Family::DfR { r, s }, g, expected, source))
}

/// `DF^v(r, 2s)`, `v` in 1..=4, obtained from `rDF(2s)` by merging across
/// components: `w`'s (v=1), `u`/`v`'s (v=2), all `y` and all `z` (v=3), or
/// `y_j` with `z_{j+1}` cyclically (v=4, `r` even).
pub fn build_df_variant(v: u8, r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    let tag = format!("DF{v}");
    if !(1..=4).contains(&v) {
        return Err(invalid(&tag, "variant must be 1, 2, 3 or 4"));
    }
    if r < 2 {
        return Err(invalid(&tag, "r must be at least 2"));
    }
    if v == 4 && r % 2 == 1 {
        return Err(invalid(&tag, "r must be even"));
    }
    let (g, source, k) = rdf_graph(&tag, r, s)?;
    // the two unit blocks of component j
    let low = |j: usize, a: usize| (j - 1) * s + a;
    let high = |j: usize, a: usize| (2 * r - j) * s + a;
    let mut plan = MergePlan::new();
    let mut warnings = Vec::new();
    let (kk, rr, ss) = (k_u64(k), r as u64, s as u64);
    let classes = match v {
        1 => {
            for a in 1..=s {
                plan.group(vn("alpha", &[1, a]), ids(&g, "w", (1..=r).map(|j| low(j, a)))?);
                plan.group(vn("alpha", &[2, a]), ids(&g, "w", (1..=r).map(|j| high(j, a)))?);
            }
            if s % 2 == 1 || (r * s).is_multiple_of(4) {
                warnings.push("hypothesis (s even, rs ≢ 0 mod 4) not met; distinct colors are not guaranteed".into());
            }
            warnings.extend(coincide_warning(rr * (13 * kk + 1), ss * (17 * kk + 2), "r(13k+1) and s(17k+2)"));
            vec![
                (rr * (13 * kk + 1), 2 * s, 3 * r),
                (10 * kk + 1, 4 * k, 2),
                (ss * (17 * kk + 2), 2 * r, 3 * s),
            ]
        }
        2 => {
            for a in 1..=s {
                plan.group(vn("beta", &[1, a]), ids(&g, "u", (1..=r).map(|j| low(j, a)))?);
                plan.group(vn("beta", &[2, a]), ids(&g, "u", (1..=r).map(|j| high(j, a)))?);
                plan.group(vn("beta", &[3, a]), ids(&g, "v", (1..=r).map(|j| low(j, a)))?);
                plan.group(vn("beta", &[4, a]), ids(&g, "v", (1..=r).map(|j| high(j, a)))?);
            }
            if s % 2 == 1 || r.is_multiple_of(4) {
                warnings.push("hypothesis (s even, r ≢ 0 mod 4) not met; distinct colors are not guaranteed".into());
            }
            warnings.extend(coincide_warning(rr * (10 * kk + 1), ss * (17 * kk + 2), "r(10k+1) and s(17k+2)"));
            vec![
                (rr * (10 * kk + 1), 4 * s, 2 * r),
                (13 * kk + 1, 2 * k, 3),
                (ss * (17 * kk + 2), 2 * r, 3 * s),
            ]
        }
        3 => {
            plan.group(vn("y", &[]), ids(&g, "y", 1..=r)?);
            plan.group(vn("z", &[]), ids(&g, "z", 1..=r)?);
            vec![
                (10 * kk + 1, 4 * k, 2),
                (13 * kk + 1, 2 * k, 3),
                (rr * ss * (17 * kk + 2), 2, 3 * r * s),
            ]
        }
        _ => {
            for j in 1..=r {
                let next = j % r + 1;
                plan.group(vn("yz", &[j]), vec![id(&g, "y", &[j])?, id(&g, "z", &[next])?]);
            }
            vec![
                (2 * ss * (17 * kk + 2), r, 6 * s),
                (10 * kk + 1, 4 * k, 2),
                (13 * kk + 1, 2 * k, 3),
            ]
        }
    };
    let g = g.apply_merge(&plan)?;
    let mut built = BuiltFamily::new(
        Family::DfVariant { v, r, s },
        g,
        ExpectedColors::exactly_three(&classes),
        source,
    );
    built.warnings = warnings;
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::induced_coloring;

    fn sum_of(g: &LabeledGraph, name: &str) -> u64 {
        let rep = induced_coloring(g).unwrap();
        rep.sums[g.find(name).unwrap_or_else(|| panic!("no vertex {name}")).0]
    }

    #[test]
    fn units_k1_hub_sums() {
        let b = build_fb_units(1).unwrap();
        assert_eq!(b.graph.size(), 10);
        assert_eq!(sum_of(&b.graph, "x_1"), 22);
        assert_eq!(sum_of(&b.graph, "x_2"), 16);
        assert_eq!(sum_of(&b.graph, "u_1"), 11);
        assert_eq!(sum_of(&b.graph, "w_2"), 14);
    }

    #[test]
    fn units_k6_w_sum() {
        let b = build_fb_units(6).unwrap();
        assert_eq!(b.graph.components().len(), 12);
        for i in 1..=12 {
            assert_eq!(sum_of(&b.graph, &format!("w_{i}")), 79);
        }
    }

    #[test]
    fn fb12_hub() {
        let b = build_fb(6).unwrap();
        let x = b.graph.find("x").unwrap();
        assert_eq!(b.graph.degree(x), 36);
        assert_eq!(sum_of(&b.graph, "x"), 1248);
        assert_eq!(b.expected.colors(), vec![61, 79, 1248]);
    }

    #[test]
    fn fb2_at_k1_colors() {
        assert_eq!(build_fb(1).unwrap().expected.colors(), vec![11, 14, 38]);
    }

    #[test]
    fn rfb_merge_sets_match_example() {
        // 6FB(2): {x_i, x_{13-i}}
        for j in 1..=6 {
            assert_eq!(rfb_component(6, 2, j), vec![j, 13 - j]);
        }
        // 3FB(4): {x_{2i-1}, x_{2i}, x_{13-2i}, x_{14-2i}}
        for j in 1..=3 {
            let mut got = rfb_component(6, 4, j);
            got.sort();
            let mut want = vec![2 * j - 1, 2 * j, 13 - 2 * j, 14 - 2 * j];
            want.sort();
            assert_eq!(got, want);
        }
        // 2FB(6): {x_{3i-2}, x_{3i-1}, x_{3i}, x_{13-3i}, x_{14-3i}, x_{15-3i}}
        for j in 1..=2 {
            let mut got = rfb_component(6, 6, j);
            got.sort();
            let mut want = vec![3 * j - 2, 3 * j - 1, 3 * j, 13 - 3 * j, 14 - 3 * j, 15 - 3 * j];
            want.sort();
            assert_eq!(got, want);
        }
        let b = build_rfb(6, 2).unwrap();
        for j in 1..=6 {
            assert_eq!(sum_of(&b.graph, &format!("x_{j}")), 208);
        }
    }

    #[test]
    fn rfb_rejects_odd_s() {
        assert!(build_rfb(2, 3).is_err());
        assert!(build_rfb(1, 4).is_err());
    }

    #[test]
    fn fb1_fb2_colors_and_warnings() {
        let b = build_fb1(2, 2).unwrap();
        assert_eq!(b.expected.colors(), vec![27, 42, 72]);
        assert!(b.warnings.is_empty());
        let b = build_fb2(3, 2).unwrap();
        assert_eq!(b.expected.colors(), vec![31, 106, 120]);
        assert!(b.warnings.is_empty());
        let b = build_fb2(2, 2).unwrap();
        assert_eq!(b.warnings.len(), 1);
        assert_eq!(b.graph.size(), 20);
    }

    #[test]
    fn rdf_degree_spectrum() {
        let b = build_rdf(1, 2).unwrap();
        assert_eq!(b.graph.size(), 20);
        let mut deg = b.graph.degrees();
        deg.sort();
        assert_eq!(deg, vec![2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 6, 6]);
        let b = build_rdf(3, 2).unwrap();
        assert_eq!(b.graph.components().len(), 3);
        assert_eq!(sum_of(&b.graph, "y_1"), 208);
        assert_eq!(sum_of(&b.graph, "z_3"), 208);
    }

    #[test]
    fn dfr_shapes() {
        let b = build_dfr(1, 2).unwrap();
        assert_eq!(b.graph.size(), 30);
        assert_eq!(b.graph.components().len(), 2);
        let b = build_dfr(1, 4).unwrap();
        assert_eq!(b.graph.size(), 60);
        assert_eq!(b.graph.degree(b.graph.find("x").unwrap()), 12);
        assert!(build_dfr(1, 3).is_err());
    }

    #[test]
    fn df_variants() {
        assert_eq!(build_df_variant(3, 2, 1).unwrap().expected.colors(), vec![21, 27, 72]);
        let b = build_df_variant(1, 2, 2).unwrap();
        assert_eq!(b.graph.degree(b.graph.find("alpha_{1,1}").unwrap()), 6);
        assert!(build_df_variant(4, 3, 1).is_err());
        assert!(build_df_variant(5, 2, 1).is_err());
        assert!(build_df_variant(2, 1, 2).is_err());
    }
}
