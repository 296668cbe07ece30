//! The three label matrices and their validators.
//!
//! * `5x2k`: five rows, `2k` columns, a bijection onto `[1, 10k]`. Column `i`
//!   labels the five edges `u_iw_i, v_iw_i, x_iw_i, x_iu_i, x_iv_i` of one fan
//!   unit.
//! * `6x4n`: six rows, `4n` columns over `[1, 20n]` where every value of
//!   `[2n+1, 4n] ∪ [16n+1, 18n]` occurs twice. The matrix is only a carrier;
//!   the constructions read the `2n` length-12 sequences `T_1..T_2n`, and
//!   the grid is filled from the sequence terms.
//! * `kx10`: `k` rows, ten columns, a bijection onto `[1, 10k]`. Row `i`
//!   labels one 8-cycle unit with a pendant path.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest accepted `k` / `n`; keeps every entry and every sum far from overflow.
pub const MAX_PARAMETER: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "5x2k")]
    FiveBy2k,
    #[serde(rename = "6x4n")]
    SixBy4n,
    #[serde(rename = "kx10")]
    KBy10,
}

impl MatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::FiveBy2k => "5x2k",
            MatrixKind::SixBy4n => "6x4n",
            MatrixKind::KBy10 => "kx10",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "5x2k" => Ok(MatrixKind::FiveBy2k),
            "6x4n" => Ok(MatrixKind::SixBy4n),
            "kx10" => Ok(MatrixKind::KBy10),
            other => Err(MatrixError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("{kind} matrix needs a parameter in [1, {MAX_PARAMETER}], got {value}")]
    BadParameter { kind: MatrixKind, value: u64 },
    #[error("unknown matrix kind `{0}` (expected 5x2k, 6x4n or kx10)")]
    UnknownKind(String),
    #[error("sequence terms do not cover the 6x4n row layout: value {0} missing")]
    SequencesIncomplete(u64),
}

/// One term sequence `T_a` of the `6x4n` construction.
pub type Sequence = [u64; 12];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMatrix {
    pub kind: MatrixKind,
    pub parameter: u64,
    pub rows: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequences: Option<Vec<Sequence>>,
}

impl LabelMatrix {
    /// 1-based access, matching how the constructions index rows and columns.
    pub fn at(&self, row: usize, col: usize) -> u64 {
        self.rows[row - 1][col - 1]
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entries(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&join(row));
            out.push('\n');
        }
        out
    }

    pub fn sequences_csv(&self) -> Option<String> {
        self.sequences.as_ref().map(|seqs| {
            seqs.iter().map(|t| join(t) + "\n").collect::<String>()
        })
    }

    /// Runs the validator matching this matrix's kind.
    pub fn validate(&self) -> ValidationReport {
        match self.kind {
            MatrixKind::FiveBy2k => validate_5x2k(self),
            MatrixKind::SixBy4n => validate_6x4n_matrix(self),
            MatrixKind::KBy10 => validate_kx10(self),
        }
    }
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn check_param(kind: MatrixKind, value: u64) -> Result<i64, MatrixError> {
    if (1..=MAX_PARAMETER).contains(&value) {
        Ok(value as i64)
    } else {
        Err(MatrixError::BadParameter { kind, value })
    }
}

/// Builds the `5 x 2k` matrix.
pub fn matrix_5x2k(k: u64) -> Result<LabelMatrix, MatrixError> {
    let k = check_param(MatrixKind::FiveBy2k, k)?;
    let cols = 2 * k;
    let entry = |row: usize, i: i64| -> i64 {
        let first = i <= k;
        match row {
            1 => match i {
                1 => 1,
                _ if i == cols => cols,
                _ if first => k + i - 1,
                _ => i - k + 1,
            },
            2 => {
                if first {
                    6 * k + i - 1
                } else {
                    6 * k + i
                }
            }
            3 => match i {
                1 => 7 * k,
                _ if i == cols => 3 * k + 1,
                _ if first => 6 * k + 3 - 2 * i,
                _ => 8 * k - 2 * i,
            },
            4 => match i {
                1 => 10 * k,
                _ if i == cols => 8 * k + 1,
                _ if first => 9 * k + 2 - i,
                _ => 11 * k - i,
            },
            _ => {
                if first {
                    4 * k + 2 - i
                } else {
                    4 * k + 1 - i
                }
            }
        }
    };
    let rows = (1..=5)
        .map(|r| (1..=cols).map(|i| entry(r, i) as u64).collect())
        .collect();
    Ok(LabelMatrix {
        kind: MatrixKind::FiveBy2k,
        parameter: k as u64,
        rows,
        sequences: None,
    })
}

/// The `2n` sequences `T_1..T_2n` of the `6x4n` construction.
pub fn sequences_6x4n(n: u64) -> Result<Vec<Sequence>, MatrixError> {
    let n = check_param(MatrixKind::SixBy4n, n)?;
    let mut out = Vec::with_capacity(2 * n as usize);
    for a in 1..=n {
        out.push(to_seq([
            a,
            16 * n + a,
            14 * n + 1 - 2 * a,
            6 * n + 2 * a,
            18 * n + 1 - a,
            6 * n + 1 - a,
            14 * n + a,
            2 * n + a,
            14 * n + 2 - 2 * a,
            6 * n - 1 + 2 * a,
            4 * n + 1 - a,
            20 * n + 1 - a,
        ]));
    }
    for b in 1..=n {
        out.push(to_seq([
            4 * n + b,
            16 * n + b,
            10 * n + 2 - 2 * b,
            10 * n - 1 + 2 * b,
            18 * n + 1 - b,
            2 * n + 1 - b,
            18 * n + b,
            2 * n + b,
            10 * n + 1 - 2 * b,
            10 * n + 2 * b,
            4 * n + 1 - b,
            16 * n + 1 - b,
        ]));
    }
    Ok(out)
}

fn to_seq(t: [i64; 12]) -> Sequence {
    t.map(|v| v as u64)
}

/// Row layout of the `6 x 4n` matrix: each row is its first `2n` cells
/// followed by its last `2n` cells.
fn six_by_4n_layout(n: i64) -> Vec<Vec<i64>> {
    let first = |f: &dyn Fn(i64) -> i64| (1..=2 * n).map(f).collect::<Vec<_>>();
    let concat = |mut a: Vec<i64>, b: Vec<i64>| {
        a.extend(b);
        a
    };
    vec![
        concat(first(&|i| i), first(&|i| 6 * n + 2 * i)),
        concat(first(&|i| 16 * n + i), first(&|i| 18 * n + 1 - i)),
        concat(first(&|i| 14 * n + 1 - 2 * i), first(&|i| 6 * n + 1 - i)),
        concat(first(&|i| 14 * n + i), first(&|i| 6 * n - 1 + 2 * i)),
        concat(first(&|i| 2 * n + i), first(&|i| 4 * n + 1 - i)),
        concat(first(&|i| 14 * n + 2 - 2 * i), first(&|i| 20 * n + 1 - i)),
    ]
}

/// Builds the `6 x 4n` matrix. Every cell of the row layout is drawn from
/// the multiset of sequence terms, so the grid and the sequences are equal
/// as multisets by construction.
pub fn matrix_6x4n(n: u64) -> Result<LabelMatrix, MatrixError> {
    let sequences = sequences_6x4n(n)?;
    let mut pool: BTreeMap<u64, usize> = BTreeMap::new();
    for v in sequences.iter().flatten() {
        *pool.entry(*v).or_default() += 1;
    }
    let mut rows = Vec::with_capacity(6);
    for layout in six_by_4n_layout(n as i64) {
        let mut row = Vec::with_capacity(layout.len());
        for v in layout {
            let v = v as u64;
            match pool.get_mut(&v) {
                Some(c) if *c > 0 => *c -= 1,
                _ => return Err(MatrixError::SequencesIncomplete(v)),
            }
            row.push(v);
        }
        rows.push(row);
    }
    if let Some((&v, _)) = pool.iter().find(|(_, &c)| c > 0) {
        return Err(MatrixError::SequencesIncomplete(v));
    }
    Ok(LabelMatrix {
        kind: MatrixKind::SixBy4n,
        parameter: n,
        rows,
        sequences: Some(sequences),
    })
}

/// Builds the `k x 10` matrix.
pub fn matrix_kx10(k: u64) -> Result<LabelMatrix, MatrixError> {
    let k = check_param(MatrixKind::KBy10, k)?;
    let row = |i: i64| -> Vec<u64> {
        let top = i == 1;
        let pick = |a: i64, b: i64| if top { a } else { b };
        [
            pick(1, k + i - 1),
            6 * k + i - 1,
            4 * k + 2 - i,
            2 * k + i,
            8 * k + 1 - i,
            pick(2 * k, k + 2 - i),
            pick(8 * k + 1, 9 * k + i - 1),
            pick(10 * k, 9 * k + 2 - i),
            pick(7 * k, 6 * k + 3 - 2 * i),
            pick(3 * k + 1, 4 * k - 2 + 2 * i),
        ]
        .iter()
        .map(|&v| v as u64)
        .collect()
    };
    Ok(LabelMatrix {
        kind: MatrixKind::KBy10,
        parameter: k as u64,
        rows: (1..=k).map(row).collect(),
        sequences: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Advisory checks are reported but do not affect [`ValidationReport::passed`].
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub advisory: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.advisory)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed && !c.advisory).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: failure.is_none(),
            advisory: false,
            detail: failure,
        });
    }

    fn push_advisory(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: failure.is_none(),
            advisory: true,
            detail: failure,
        });
    }
}

/// First index in `range` where `got(i) != want(i)`, formatted.
fn first_mismatch<I>(range: I, got: impl Fn(usize) -> i64, want: impl Fn(usize) -> i64, what: &str) -> Option<String>
where
    I: IntoIterator<Item = usize>,
{
    range.into_iter().find_map(|i| {
        let (g, w) = (got(i), want(i));
        (g != w).then(|| format!("{what} {i}: got {g}, expected {w}"))
    })
}

fn bijection_failure(values: impl Iterator<Item = u64>, top: u64) -> Option<String> {
    let mut seen = vec![false; top as usize + 1];
    let mut count = 0u64;
    for v in values {
        count += 1;
        if v == 0 || v > top {
            return Some(format!("entry {v} outside [1, {top}]"));
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Some(format!("entry {v} repeated"));
        }
    }
    (count != top).then(|| format!("{count} entries for [1, {top}]"))
}

fn shape_failure(m: &LabelMatrix, rows: usize, cols: usize) -> Option<String> {
    let ok = m.rows.len() == rows && m.rows.iter().all(|r| r.len() == cols);
    (!ok).then(|| format!("expected {rows} x {cols}"))
}

/// Checks a `5 x 2k` grid: bijection onto `[1,10k]` and the seven column
/// identities the fan constructions rely on. Never panics on malformed input.
pub fn validate_5x2k(m: &LabelMatrix) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let k = m.parameter as i64;
    let cols = 2 * k as usize;
    if m.kind != MatrixKind::FiveBy2k || k < 1 {
        rep.push("kind", Some(format!("not a 5x2k matrix with k >= 1 ({})", m.kind)));
        return rep;
    }
    if let Some(f) = shape_failure(m, 5, cols) {
        rep.push("shape", Some(f));
        return rep;
    }
    rep.push("shape", None);
    rep.push("bijection [1,10k]", bijection_failure(m.entries(), 10 * k as u64));

    let a = |r: usize, c: usize| m.at(r, c) as i64;
    let last3 = |c: usize| a(3, c) + a(4, c) + a(5, c);
    let mirror = |c: usize| cols + 1 - c;

    rep.push(
        "rows 1-3 column sum = 13k+1",
        first_mismatch(1..=cols, |c| a(1, c) + a(2, c) + a(3, c), |_| 13 * k + 1, "column"),
    );
    rep.push(
        "rows 1+4 = 10k+1",
        first_mismatch(1..=cols, |c| a(1, c) + a(4, c), |_| 10 * k + 1, "column"),
    );
    rep.push(
        "rows 2+5 = 10k+1",
        first_mismatch(1..=cols, |c| a(2, c) + a(5, c), |_| 10 * k + 1, "column"),
    );

    let ku = k as usize;
    let endpoints = first_mismatch([1usize], last3, |_| 21 * k + 1, "column")
        .or_else(|| first_mismatch([cols], last3, |_| 13 * k + 3, "column"));
    rep.push("rows 3-5 endpoint columns = 21k+1, 13k+3", endpoints);
    let progressions = first_mismatch(2..=ku, last3, |c| 19 * k - 1 - 4 * (c as i64 - 2), "column")
        .or_else(|| first_mismatch(ku + 1..cols, last3, |c| 19 * k - 3 - 4 * (c as i64 - ku as i64 - 1), "column"));
    rep.push("rows 3-5 progressions, step -4", progressions);
    rep.push(
        "rows 3-5 mirrored columns = 34k+4",
        first_mismatch(1..=ku, |c| last3(c) + last3(mirror(c)), |_| 34 * k + 4, "column"),
    );
    rep.push(
        "rows 3-5 total = k(34k+4)",
        first_mismatch([0usize], |_| (1..=cols).map(last3).sum(), |_| k * (34 * k + 4), "total"),
    );

    // for every split 2k = r*s with r >= 2
    let mut block_failure = None;
    for r in (2..=cols).filter(|r| cols.is_multiple_of(*r)) {
        let s = cols / r;
        let k3 = s as i64 * (17 * k + 2);
        let block = |j: usize| (j - 1) * s + 1..=j * s;
        let row3 = |j: usize| block(j).map(|c| a(3, c)).sum::<i64>();
        let rows45 = |j: usize| block(j).map(|c| a(4, c) + a(5, c)).sum::<i64>();
        for j in 1..=r {
            let got = if r % 2 == 1 && j == r.div_ceil(2) {
                block(j).map(last3).sum()
            } else {
                row3(j) + rows45(r + 1 - j)
            };
            if got != k3 && block_failure.is_none() {
                block_failure = Some(format!("r={r}, s={s}, block {j}: got {got}, expected {k3}"));
            }
        }
    }
    rep.push("block sums = s(17k+2) for every 2k = rs", block_failure);

    rep.push(
        "row2(i)+row3(i)+row4(2k+1-i) = 21k+1",
        first_mismatch(1..=cols, |c| a(2, c) + a(3, c) + a(4, mirror(c)), |_| 21 * k + 1, "column"),
    );
    rep.push(
        "row4 mirrored pairs = 18k+1",
        first_mismatch(1..=ku, |c| a(4, c) + a(4, mirror(c)), |_| 18 * k + 1, "column"),
    );
    rep.push(
        "row5 mirrored pairs = 6k+2",
        first_mismatch(1..=ku, |c| a(5, c) + a(5, mirror(c)), |_| 6 * k + 2, "column"),
    );
    rep
}

/// Multiset law of the `6x4n` construction: `[1,20n]`, with the values of
/// `[2n+1,4n] ∪ [16n+1,18n]` twice and every other value once.
fn six_by_4n_multiset_failure(values: impl Iterator<Item = u64>, n: u64) -> Option<String> {
    let top = 20 * n;
    let mut count = vec![0u32; top as usize + 1];
    for v in values {
        if v == 0 || v > top {
            return Some(format!("term {v} outside [1, {top}]"));
        }
        count[v as usize] += 1;
    }
    (1..=top).find_map(|v| {
        let twice = (2 * n + 1..=4 * n).contains(&v) || (16 * n + 1..=18 * n).contains(&v);
        let want = if twice { 2 } else { 1 };
        (count[v as usize] != want).then(|| format!("value {v} occurs {} times, expected {want}", count[v as usize]))
    })
}

/// Checks the `2n` sequences of the `6x4n` construction.
pub fn validate_6x4n(n: u64, sequences: &[Sequence]) -> ValidationReport {
    let mut rep = ValidationReport::default();
    if n == 0 || sequences.len() as u64 != 2 * n {
        rep.push(
            "well-formed",
            Some(format!("expected {} sequences, got {}", 2 * n, sequences.len())),
        );
        return rep;
    }
    rep.push("well-formed", None);
    let nn = n as usize;
    let n = n as i64;
    rep.push(
        "terms: duplicate-multiset law",
        six_by_4n_multiset_failure(sequences.iter().flatten().copied(), n as u64),
    );

    let t = |a: usize, p: usize| sequences[a - 1][p - 1] as i64;
    for (name, p, q) in [
        ("t1+t12 = 20n+1", 1, 12),
        ("t6+t7 = 20n+1", 6, 7),
        ("t9+t10 = 20n+1", 9, 10),
        ("t3+t4 = 20n+1", 3, 4),
    ] {
        rep.push(name, first_mismatch(1..=2 * nn, |a| t(a, p) + t(a, q), |_| 20 * n + 1, "sequence"));
    }
    let triple = |a: usize, p: usize| t(a, p) + t(a, p + 1) + t(a, p + 2);
    // outer triples: 30n+1 for a <= n, 30n+2 after; inner triples the reverse
    let outer = |a: usize| if a <= nn { 30 * n + 1 } else { 30 * n + 2 };
    let inner = |a: usize| if a <= nn { 30 * n + 2 } else { 30 * n + 1 };
    rep.push(
        "t1+t2+t3",
        first_mismatch(1..=2 * nn, |a| triple(a, 1), outer, "sequence"),
    );
    rep.push(
        "t10+t11+t12",
        first_mismatch(1..=2 * nn, |a| triple(a, 10), outer, "sequence"),
    );
    rep.push(
        "t4+t5+t6",
        first_mismatch(1..=2 * nn, |a| triple(a, 4), inner, "sequence"),
    );
    rep.push(
        "t7+t8+t9",
        first_mismatch(1..=2 * nn, |a| triple(a, 7), inner, "sequence"),
    );
    let shared = (1..=nn).find_map(|a| {
        [2, 5, 8, 11]
            .into_iter()
            .find(|&p| t(a, p) != t(nn + a, p))
            .map(|p| format!("T_{a} and T_{} differ at term {p}", nn + a))
    });
    rep.push("T_a, T_(n+a) share terms 2,5,8,11", shared);
    rep
}

/// Validates the sequences of a `6x4n` matrix plus its grid: the grid must
/// obey the multiset law and equal the sequence terms as a multiset. The
/// printed row layout is checked as an advisory item.
fn validate_6x4n_matrix(m: &LabelMatrix) -> ValidationReport {
    let n = m.parameter;
    let mut rep = match &m.sequences {
        Some(seqs) => validate_6x4n(n, seqs),
        None => {
            let mut r = ValidationReport::default();
            r.push("well-formed", Some("matrix carries no sequences".into()));
            r
        }
    };
    if n == 0 {
        return rep;
    }
    if let Some(f) = shape_failure(m, 6, 4 * n as usize) {
        rep.push("grid shape", Some(f));
        return rep;
    }
    rep.push("grid shape", None);
    rep.push("grid: duplicate-multiset law", six_by_4n_multiset_failure(m.entries(), n));
    if let Some(seqs) = &m.sequences {
        let mut grid: Vec<u64> = m.entries().collect();
        let mut terms: Vec<u64> = seqs.iter().flatten().copied().collect();
        grid.sort_unstable();
        terms.sort_unstable();
        rep.push(
            "grid = sequence terms as multisets",
            (grid != terms).then(|| "multisets differ".to_string()),
        );
    }
    let layout = six_by_4n_layout(n as i64);
    let row_fail = (0..6).find_map(|r| {
        (0..4 * n as usize)
            .find(|&c| m.rows[r][c] as i64 != layout[r][c])
            .map(|c| format!("R{} column {}", r + 1, c + 1))
    });
    rep.push_advisory("row layout", row_fail);
    rep
}

/// Checks a `k x 10` grid: bijection onto `[1,10k]`, the five column pairs
/// summing to `10k+1` and the two triples summing to `13k+1` in every row.
pub fn validate_kx10(m: &LabelMatrix) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let k = m.parameter as i64;
    if m.kind != MatrixKind::KBy10 || k < 1 {
        rep.push("kind", Some(format!("not a kx10 matrix with k >= 1 ({})", m.kind)));
        return rep;
    }
    if let Some(f) = shape_failure(m, k as usize, 10) {
        rep.push("shape", Some(f));
        return rep;
    }
    rep.push("shape", None);
    rep.push("bijection [1,10k]", bijection_failure(m.entries(), 10 * k as u64));
    let a = |r: usize, c: usize| m.at(r, c) as i64;
    for (p, q) in [(1, 8), (2, 3), (4, 5), (6, 7), (9, 10)] {
        rep.push(
            format!("(a) columns {p}+{q} = 10k+1"),
            first_mismatch(1..=k as usize, |r| a(r, p) + a(r, q), |_| 10 * k + 1, "row"),
        );
    }
    for (p, q, s) in [(1, 2, 9), (5, 6, 10)] {
        rep.push(
            format!("(b) columns {p}+{q}+{s} = 13k+1"),
            first_mismatch(1..=k as usize, |r| a(r, p) + a(r, q) + a(r, s), |_| 13 * k + 1, "row"),
        );
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swapped(m: &LabelMatrix, (r1, c1): (usize, usize), (r2, c2): (usize, usize)) -> LabelMatrix {
        let mut out = m.clone();
        let tmp = out.rows[r1][c1];
        out.rows[r1][c1] = out.rows[r2][c2];
        out.rows[r2][c2] = tmp;
        out
    }

    #[test]
    fn five_by_2k_at_k1() {
        let m = matrix_5x2k(1).unwrap();
        let col = |c: usize| (1..=5).map(|r| m.at(r, c)).collect::<Vec<_>>();
        assert_eq!(col(1), vec![1, 6, 7, 10, 5]);
        assert_eq!(col(2), vec![2, 8, 4, 9, 3]);
        let rep = validate_5x2k(&m);
        assert!(rep.passed(), "{:?}", rep.failures());
        let total: u64 = (1..=2).map(|c| m.at(3, c) + m.at(4, c) + m.at(5, c)).sum();
        assert_eq!(total, 38);
    }

    #[test]
    fn six_by_4n_at_n1() {
        let seqs = sequences_6x4n(1).unwrap();
        let mut terms: Vec<u64> = seqs.iter().flatten().copied().collect();
        terms.sort();
        let mut want: Vec<u64> = (1..=20).collect();
        want.extend([3, 4, 17, 18]);
        want.sort();
        assert_eq!(terms, want);
        let m = matrix_6x4n(1).unwrap();
        assert_eq!(m.rows[0], vec![1, 2, 8, 10]);
        assert!(m.validate().passed());
        assert!(m.validate().get("row layout").unwrap().passed);
    }

    #[test]
    fn kx10_at_k1() {
        let m = matrix_kx10(1).unwrap();
        assert_eq!(m.rows, vec![vec![1, 6, 5, 3, 8, 2, 9, 10, 7, 4]]);
        assert!(validate_kx10(&m).passed());
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(matches!(matrix_5x2k(0), Err(MatrixError::BadParameter { .. })));
        assert!(matrix_6x4n(0).is_err());
        assert!(sequences_6x4n(0).is_err());
        assert!(matches!(matrix_kx10(0), Err(MatrixError::BadParameter { .. })));
    }

    #[test]
    fn every_swap_is_detected_small_k() {
        for k in 1..=4 {
            for m in [matrix_5x2k(k).unwrap(), matrix_kx10(k).unwrap()] {
                let cells: Vec<(usize, usize)> = (0..m.row_count())
                    .flat_map(|r| (0..m.col_count()).map(move |c| (r, c)))
                    .collect();
                for (i, &p) in cells.iter().enumerate() {
                    for &q in &cells[i + 1..] {
                        assert!(
                            !swapped(&m, p, q).validate().passed(),
                            "{} k={k}: swap {p:?} {q:?} undetected",
                            m.kind
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sequence_swap_detected() {
        let mut seqs = sequences_6x4n(6).unwrap();
        assert!(validate_6x4n(6, &seqs).passed());
        seqs[0].swap(0, 1);
        assert!(!validate_6x4n(6, &seqs).passed());
        assert!(!validate_6x4n(6, &seqs[..11]).passed());
    }

    #[test]
    fn wrong_shape_reported() {
        let mut m = matrix_5x2k(2).unwrap();
        m.rows.pop();
        let rep = validate_5x2k(&m);
        assert!(!rep.passed());
        assert!(rep.get("shape").is_some_and(|c| !c.passed));
    }

    #[test]
    fn csv_emission() {
        let m = matrix_kx10(1).unwrap();
        assert_eq!(m.to_csv(), "1,6,5,3,8,2,9,10,7,4\n");
        assert!(m.sequences_csv().is_none());
        let six = matrix_6x4n(1).unwrap();
        assert_eq!(six.sequences_csv().unwrap().lines().count(), 2);
    }
}
