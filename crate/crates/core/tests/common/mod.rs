#![allow(dead_code)]

use lacolor::Family;

/// Largest graph size used by the grids, in edges.
pub const GRID_MAX_EDGES: usize = 600;

fn even(s: usize) -> bool {
    s.is_multiple_of(2)
}

/// `(r, s)` pairs with `r, s <= 20` satisfying `keep`, smallest product first,
/// capped at `limit` points.
fn pairs(limit: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..=20)
        .flat_map(|r| (1..=20).map(move |s| (r, s)))
        .filter(|&(r, s)| keep(r, s))
        .collect();
    out.sort_by_key(|&(r, s)| (r * s, r));
    out.truncate(limit);
    out
}

/// Parameter points within every construction's hypotheses, with at most
/// [`GRID_MAX_EDGES`] edges. Each family gets at least ten points.
pub fn family_grid() -> Vec<Family> {
    let mut g = Vec::new();
    for k in 1..=12 {
        g.push(Family::FbUnits { k });
        g.push(Family::Fb { k });
    }
    // k = rs/2 <= 60
    for (r, s) in pairs(14, |r, s| r >= 2 && even(s) && r * s <= 120) {
        g.push(Family::RFb { r, s });
    }
    for (r, s) in pairs(14, |r, s| r >= 2 && even(s) && r % 4 != 0 && r * s <= 120) {
        g.push(Family::Fb1 { r, s });
    }
    for (r, s) in pairs(14, |r, s| r >= 2 && even(s) && (r * s) % 4 != 0 && r * s <= 120) {
        g.push(Family::Fb2 { r, s });
    }
    // k = rs <= 60
    for (r, s) in pairs(14, |r, s| r * s >= 2 && r * s <= 60) {
        g.push(Family::RDf { r, s });
    }
    for (r, s) in pairs(12, |r, s| even(s) && (2 * r + 1) * s <= 120) {
        g.push(Family::DfR { r, s });
    }
    for (r, s) in pairs(12, |r, s| r >= 2 && even(s) && (r * s) % 4 != 0 && r * s <= 60) {
        g.push(Family::DfVariant { v: 1, r, s });
    }
    for (r, s) in pairs(12, |r, s| r >= 2 && even(s) && r % 4 != 0 && r * s <= 60) {
        g.push(Family::DfVariant { v: 2, r, s });
    }
    for (r, s) in pairs(12, |r, s| r >= 2 && r * s <= 60) {
        g.push(Family::DfVariant { v: 3, r, s });
    }
    for (r, s) in pairs(12, |r, s| r >= 2 && even(r) && r * s <= 60) {
        g.push(Family::DfVariant { v: 4, r, s });
    }
    for n in 1..=30 {
        g.push(Family::NC482 { n });
    }
    for (r, s) in pairs(14, |r, s| s >= 2 && r * s <= 30) {
        g.push(Family::G1 { r, s });
        g.push(Family::G2 { r, s });
    }
    for m in 1..=3u8 {
        for n in (1..=30).step_by(3) {
            g.push(Family::H { m, n });
        }
        for (r, s) in pairs(10, |r, s| s >= 2 && r * s <= 30) {
            g.push(Family::HmRs { m, r, s });
        }
    }
    for k in (1..=60).step_by(5) {
        g.push(Family::C8Units { k });
        g.push(Family::Bk { k });
        g.push(Family::KC82 { k });
        g.push(Family::KD82 { k });
    }
    for (r, s) in pairs(12, |r, s| even(s) && r * s <= 60) {
        g.push(Family::RG82 { r, s });
    }
    for (r, s) in pairs(12, |r, s| r * s >= 3 && (r * s) % 2 == 1 && r * s <= 59) {
        g.push(Family::OddKH { r, s });
    }
    g
}

/// The worked examples plus the smallest instance of every family.
pub fn golden_points() -> Vec<Family> {
    vec![
        Family::FbUnits { k: 6 },
        Family::Fb { k: 6 },
        Family::Fb { k: 1 },
        Family::RFb { r: 6, s: 2 },
        Family::RFb { r: 3, s: 4 },
        Family::RFb { r: 2, s: 6 },
        Family::Fb1 { r: 2, s: 2 },
        Family::Fb2 { r: 3, s: 2 },
        Family::RDf { r: 3, s: 2 },
        Family::RDf { r: 1, s: 2 },
        Family::DfR { r: 1, s: 4 },
        Family::DfVariant { v: 1, r: 2, s: 2 },
        Family::DfVariant { v: 2, r: 2, s: 2 },
        Family::DfVariant { v: 3, r: 2, s: 1 },
        Family::DfVariant { v: 4, r: 2, s: 1 },
        Family::NC482 { n: 6 },
        Family::NC482 { n: 1 },
        Family::G1 { r: 3, s: 2 },
        Family::G2 { r: 3, s: 2 },
        Family::H { m: 1, n: 6 },
        Family::H { m: 2, n: 6 },
        Family::H { m: 3, n: 6 },
        Family::HmRs { m: 1, r: 3, s: 2 },
        Family::C8Units { k: 4 },
        Family::Bk { k: 4 },
        Family::KC82 { k: 4 },
        Family::KD82 { k: 4 },
        Family::RG82 { r: 2, s: 2 },
        Family::OddKH { r: 1, s: 3 },
    ]
}
