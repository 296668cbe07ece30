//! Eight-cycle families labeled by the `k x 10` matrix.
//!
//! Unit `C^i_8` is the cycle `u_{i,1} .. u_{i,8}` plus a vertex `x_i` joined to
//! `u_{i,2}` and `u_{i,6}`. Row `i` labels `u_{i,j}u_{i,j+1}` by column `j` and
//! `x_iu_{i,2}`, `x_iu_{i,6}` by columns 9 and 10.

use crate::graph::{vn, LabeledGraph, MergePlan, VertexId};
use crate::matrix::matrix_kx10;

use super::{check_size, invalid, BuiltFamily, ColorClaim, ExpectedColors, Family, FamilyError, LabelSource};

fn units(family: &str, k: usize) -> Result<(LabeledGraph, LabelSource), FamilyError> {
    if k == 0 {
        return Err(invalid(family, "k must be at least 1"));
    }
    check_size(family, 10 * k)?;
    let m = matrix_kx10(k as u64)?;
    let mut names = Vec::with_capacity(9 * k);
    for i in 1..=k {
        names.extend((1..=8).map(|j| vn("u", &[i, j])));
        names.push(vn("x", &[i]));
    }
    let mut g = LabeledGraph::new(names)?;
    let mut cells = Vec::with_capacity(10 * k);
    for i in 1..=k {
        let u = |j: usize| VertexId(9 * (i - 1) + (j - 1) % 8);
        let x = VertexId(9 * (i - 1) + 8);
        for j in 1..=8 {
            g.add_edge(u(j), u(j + 1), m.at(i, j))?;
            cells.push(vec![(i - 1, j - 1)]);
        }
        g.add_edge(x, u(2), m.at(i, 9))?;
        cells.push(vec![(i - 1, 8)]);
        g.add_edge(x, u(6), m.at(i, 10))?;
        cells.push(vec![(i - 1, 9)]);
    }
    Ok((g, LabelSource { matrix: m, cells }))
}

fn u(g: &LabeledGraph, i: usize, j: usize) -> Result<VertexId, FamilyError> {
    Ok(g.id(&vn("u", &[i, j]))?)
}

fn x(g: &LabeledGraph, i: usize) -> Result<VertexId, FamilyError> {
    Ok(g.id(&vn("x", &[i]))?)
}

/// Merges, in every unit, `x_i` (if `with_x`) and the listed cycle positions.
fn merge_per_unit(g: &LabeledGraph, k: usize, role: &str, with_x: bool, positions: &[usize]) -> Result<LabeledGraph, FamilyError> {
    let mut plan = MergePlan::new();
    for i in 1..=k {
        let mut members = Vec::new();
        if with_x {
            members.push(x(g, i)?);
        }
        for &j in positions {
            members.push(u(g, i, j)?);
        }
        plan.group(vn(role, &[i]), members);
    }
    Ok(g.apply_merge(&plan)?)
}

fn kk(k: usize) -> u64 {
    k as u64
}

const PRINTED_DEGREE3: &str = "13k+2";

fn record_degree3(built: &mut BuiltFamily, k: usize) -> Result<(), FamilyError> {
    built.record_printed("degree-3 color", "u_{1,2}", PRINTED_DEGREE3, 13 * kk(k) + 2)
}

pub fn build_c8_units(k: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = units("C8_units", k)?;
    let c = kk(k);
    let expected = ExpectedColors::new(
        ColorClaim::AtMost(4),
        &[(10 * c + 1, 5 * k, 2), (13 * c + 1, 2 * k, 3), (6 * c + 2, k, 2), (18 * c + 1, k, 2)],
    );
    let mut built = BuiltFamily::new(Family::C8Units { k }, g, expected, source);
    record_degree3(&mut built, k)?;
    Ok(built)
}

/// `B_k`: `u_{i,4}` and `u_{i,8}` fused into `b_i`.
pub fn build_bk(k: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = units("Bk", k)?;
    let g = merge_per_unit(&g, k, "b", false, &[4, 8])?;
    let c = kk(k);
    let expected = ExpectedColors::exactly_three(&[(10 * c + 1, 5 * k, 2), (13 * c + 1, 2 * k, 3), (24 * c + 3, k, 4)]);
    let mut built = BuiltFamily::new(Family::Bk { k }, g, expected, source);
    record_degree3(&mut built, k)?;
    Ok(built)
}

/// `kC(8,2)`: `x_i` and `u_{i,8}` fused into `z_i`.
pub fn build_kc82(k: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = units("kC82", k)?;
    let g = merge_per_unit(&g, k, "z", true, &[8])?;
    let c = kk(k);
    let expected = ExpectedColors::new(
        ColorClaim::AtMost(4),
        &[(10 * c + 1, 4 * k, 2), (6 * c + 2, k, 2), (13 * c + 1, 2 * k, 3), (28 * c + 2, k, 4)],
    );
    let mut built = BuiltFamily::new(Family::KC82 { k }, g, expected, source);
    built.record_printed("fused vertex color", "z_1", "28k+2", 28 * c + 2)?;
    Ok(built)
}

/// `kD(8,2)`: `x_i`, `u_{i,4}` and `u_{i,8}` fused into `w_i`.
pub fn build_kd82(k: usize) -> Result<BuiltFamily, FamilyError> {
    let (g, source) = units("kD82", k)?;
    let g = merge_per_unit(&g, k, "w", true, &[4, 8])?;
    let c = kk(k);
    let expected = ExpectedColors::exactly_three(&[(10 * c + 1, 4 * k, 2), (13 * c + 1, 2 * k, 3), (34 * c + 4, k, 6)]);
    let mut built = BuiltFamily::new(Family::KD82 { k }, g, expected, source);
    built.record_printed("fused vertex color", "w_1", "34k+2", 34 * c + 2)?;
    Ok(built)
}

/// `rG(8,2)`, `k = rs`: in block `a` of `s` units, the first half's `z` fuse
/// with the second half's `u_4` into `g_{a,1}`, and the other way round into
/// `g_{a,2}`.
pub fn build_rg82(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    if r == 0 {
        return Err(invalid("rG82", "r must be at least 1"));
    }
    if s < 2 || s % 2 == 1 {
        return Err(invalid("rG82", "s must be even and at least 2"));
    }
    let k = r * s;
    let (g, source) = units("rG82", k)?;
    let g = merge_per_unit(&g, k, "z", true, &[8])?;
    let h = s / 2;
    let z = |g: &LabeledGraph, i: usize| g.id(&vn("z", &[i]));
    let mut plan = MergePlan::new();
    for a in 1..=r {
        let base = (a - 1) * s;
        let mut g1 = Vec::with_capacity(s);
        let mut g2 = Vec::with_capacity(s);
        for i in 1..=h {
            g1.push(z(&g, base + i)?);
            g1.push(u(&g, base + h + i, 4)?);
            g2.push(z(&g, base + h + i)?);
            g2.push(u(&g, base + i, 4)?);
        }
        plan.group(vn("g", &[a, 1]), g1);
        plan.group(vn("g", &[a, 2]), g2);
    }
    let g = g.apply_merge(&plan)?;
    let c = kk(k);
    let expected = ExpectedColors::exactly_three(&[
        (10 * c + 1, 4 * k, 2),
        (13 * c + 1, 2 * k, 3),
        (s as u64 * (17 * c + 2), 2 * r, 3 * s),
    ]);
    Ok(BuiltFamily::new(Family::RG82 { r, s }, g, expected, source))
}

/// Whether the merge ranges printed for the odd-`k` construction
/// (`z_i` with `u_{(k+1)/2+i}` for `i <= (k+1)/2`, and `z_{(k+1)/2+j}` with
/// `u_{j,4}` for `j <= (k-1)/2`) stay within the `k` available units.
pub fn printed_oddk_ranges_fit(k: usize) -> bool {
    let half_up = k.div_ceil(2);
    let half_down = k.saturating_sub(1) / 2;
    half_up + half_up <= k && half_up + half_down <= k
}

/// Experimental odd-`k` construction `H` (`k = rs` odd). The printed merge
/// ranges overrun the units, so this reads them per block of `s` units: with
/// `h = (s+1)/2`, `h_{a,1}` fuses the first `h` `z`'s with the remaining
/// `u_4`'s, and `h_{a,2}` the remaining `z`'s with the first `h` `u_4`'s.
pub fn build_oddk_h(r: usize, s: usize) -> Result<BuiltFamily, FamilyError> {
    if r == 0 || s == 0 {
        return Err(invalid("OddKH", "r and s must be at least 1"));
    }
    let k = r * s;
    if k < 3 || k.is_multiple_of(2) {
        return Err(invalid("OddKH", "k = rs must be odd and at least 3"));
    }
    let (g, source) = units("OddKH", k)?;
    let mut g = merge_per_unit(&g, k, "z", true, &[8])?;
    let h = s.div_ceil(2);
    if s > 1 {
        let z = |g: &LabeledGraph, i: usize| g.id(&vn("z", &[i]));
        let mut plan = MergePlan::new();
        for a in 1..=r {
            let base = (a - 1) * s;
            let mut g1 = Vec::with_capacity(s);
            let mut g2 = Vec::with_capacity(s + 1);
            for i in 1..=s {
                if i <= h {
                    g1.push(z(&g, base + i)?);
                    g2.push(u(&g, base + i, 4)?);
                } else {
                    g2.push(z(&g, base + i)?);
                    g1.push(u(&g, base + i, 4)?);
                }
            }
            plan.group(vn("h", &[a, 1]), g1);
            plan.group(vn("h", &[a, 2]), g2);
        }
        g = g.apply_merge(&plan)?;
    }
    let c = kk(k);
    let base = (s as u64 - 1) * (17 * c + 2);
    let expected = ExpectedColors::new(
        ColorClaim::AtMost(4),
        &[
            (10 * c + 1, 4 * k, 2),
            (13 * c + 1, 2 * k, 3),
            (base + 28 * c + 2, r, 3 * s + 1),
            (base + 6 * c + 2, r, 3 * s - 1),
        ],
    );
    let mut built = BuiltFamily::new(Family::OddKH { r, s }, g, expected, source);
    record_degree3(&mut built, k)?;
    let printed = base + 18 * c + 1;
    let first = if s > 1 { "h_{1,1}".to_string() } else { "z_1".to_string() };
    built.record_printed("degree 3s+1 color", &first, "(s-1)(17k+2)+18k+1", printed)?;
    let achieved = base + 28 * c + 2;
    built.ambiguity = Some(format!(
        "printed merge ranges exceed {k} units; under the per-block reading the degree {} vertices carry {achieved}, \
         not the printed (s-1)(17k+2)+18k+1 = {printed}",
        3 * s + 1
    ));
    Ok(built)
}
