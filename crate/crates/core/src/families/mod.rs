//! Labeled graph families built from the label matrices.
//!
//! Each builder returns a [`BuiltFamily`]: the graph, the coloring the
//! construction is supposed to induce ([`ExpectedColors`]), any hypothesis
//! warnings, and the provenance of every edge label so a graph's labels can
//! be written back into its source matrix.

mod cycle;
mod fan;
mod prism;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, LabeledGraph};
use crate::matrix::{LabelMatrix, MatrixError, MatrixKind};

pub use cycle::{build_bk, build_c8_units, build_kc82, build_kd82, build_oddk_h, build_rg82, printed_oddk_ranges_fit};
pub use fan::{
    build_df_variant, build_dfr, build_fb, build_fb1, build_fb2, build_fb_units, build_rdf, build_rfb,
};
pub use prism::{build_g1, build_g2, build_h, build_hm_rs, build_nc482};

/// Largest graph (in edges) the builders will produce.
pub const MAX_EDGES: usize = 2_000_000;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {0} is missing parameter `{1}`")]
    MissingParameter(String, &'static str),
    #[error("family {0} is experimental; enable it explicitly")]
    Experimental(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("construction failed: {0}")]
    Graph(#[from] GraphError),
}

pub(crate) fn invalid(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter {
        family: family.to_string(),
        reason: reason.into(),
    }
}

/// A family tag with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    FbUnits { k: usize },
    Fb { k: usize },
    RFb { r: usize, s: usize },
    Fb1 { r: usize, s: usize },
    Fb2 { r: usize, s: usize },
    RDf { r: usize, s: usize },
    DfR { r: usize, s: usize },
    /// `DF^v(r, 2s)` for `v` in 1..=4.
    DfVariant { v: u8, r: usize, s: usize },
    NC482 { n: usize },
    G1 { r: usize, s: usize },
    G2 { r: usize, s: usize },
    /// `H_m(n)` for `m` in 1..=3.
    H { m: u8, n: usize },
    HmRs { m: u8, r: usize, s: usize },
    C8Units { k: usize },
    Bk { k: usize },
    KC82 { k: usize },
    KD82 { k: usize },
    RG82 { r: usize, s: usize },
    /// Experimental odd-`k` construction.
    OddKH { r: usize, s: usize },
}

pub const FAMILY_TAGS: &[&str] = &[
    "FB_units", "FB", "rFB", "FB1", "FB2", "rDF", "DFr", "DF1", "DF2", "DF3", "DF4", "nC482", "G1", "G2", "H1", "H2",
    "H3", "Hm_rs", "C8_units", "Bk", "kC82", "kD82", "rG82", "OddKH",
];

impl Family {
    pub fn tag(&self) -> String {
        match self {
            Family::FbUnits { .. } => "FB_units".into(),
            Family::Fb { .. } => "FB".into(),
            Family::RFb { .. } => "rFB".into(),
            Family::Fb1 { .. } => "FB1".into(),
            Family::Fb2 { .. } => "FB2".into(),
            Family::RDf { .. } => "rDF".into(),
            Family::DfR { .. } => "DFr".into(),
            Family::DfVariant { v, .. } => format!("DF{v}"),
            Family::NC482 { .. } => "nC482".into(),
            Family::G1 { .. } => "G1".into(),
            Family::G2 { .. } => "G2".into(),
            Family::H { m, .. } => format!("H{m}"),
            Family::HmRs { .. } => "Hm_rs".into(),
            Family::C8Units { .. } => "C8_units".into(),
            Family::Bk { .. } => "Bk".into(),
            Family::KC82 { .. } => "kC82".into(),
            Family::KD82 { .. } => "kD82".into(),
            Family::RG82 { .. } => "rG82".into(),
            Family::OddKH { .. } => "OddKH".into(),
        }
    }

    pub fn params(&self) -> BTreeMap<String, usize> {
        let pairs: Vec<(&str, usize)> = match *self {
            Family::FbUnits { k }
            | Family::Fb { k }
            | Family::C8Units { k }
            | Family::Bk { k }
            | Family::KC82 { k }
            | Family::KD82 { k } => vec![("k", k)],
            Family::NC482 { n } | Family::H { n, .. } => vec![("n", n)],
            Family::HmRs { m, r, s } => vec![("m", m as usize), ("r", r), ("s", s)],
            Family::RFb { r, s }
            | Family::Fb1 { r, s }
            | Family::Fb2 { r, s }
            | Family::RDf { r, s }
            | Family::DfR { r, s }
            | Family::DfVariant { r, s, .. }
            | Family::G1 { r, s }
            | Family::G2 { r, s }
            | Family::RG82 { r, s }
            | Family::OddKH { r, s } => vec![("r", r), ("s", s)],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    /// Parses a tag plus named parameters, e.g. `("rDF", {r: 3, s: 2})`.
    pub fn from_tag(tag: &str, params: &BTreeMap<String, usize>) -> Result<Family, FamilyError> {
        let get = |name: &'static str| {
            params
                .get(name)
                .copied()
                .ok_or_else(|| FamilyError::MissingParameter(tag.to_string(), name))
        };
        let fam = match tag {
            "FB_units" => Family::FbUnits { k: get("k")? },
            "FB" => Family::Fb { k: get("k")? },
            "rFB" => Family::RFb { r: get("r")?, s: get("s")? },
            "FB1" => Family::Fb1 { r: get("r")?, s: get("s")? },
            "FB2" => Family::Fb2 { r: get("r")?, s: get("s")? },
            "rDF" => Family::RDf { r: get("r")?, s: get("s")? },
            "DFr" => Family::DfR { r: get("r")?, s: get("s")? },
            "DF1" | "DF2" | "DF3" | "DF4" => Family::DfVariant {
                v: tag.as_bytes()[2] - b'0',
                r: get("r")?,
                s: get("s")?,
            },
            "nC482" => Family::NC482 { n: get("n")? },
            "G1" => Family::G1 { r: get("r")?, s: get("s")? },
            "G2" => Family::G2 { r: get("r")?, s: get("s")? },
            "H1" | "H2" | "H3" => Family::H {
                m: tag.as_bytes()[1] - b'0',
                n: get("n")?,
            },
            "Hm_rs" => {
                let m = get("m")?;
                if !(1..=3).contains(&m) {
                    return Err(invalid(tag, "m must be 1, 2 or 3"));
                }
                Family::HmRs {
                    m: m as u8,
                    r: get("r")?,
                    s: get("s")?,
                }
            }
            "C8_units" => Family::C8Units { k: get("k")? },
            "Bk" => Family::Bk { k: get("k")? },
            "kC82" => Family::KC82 { k: get("k")? },
            "kD82" => Family::KD82 { k: get("k")? },
            "rG82" => Family::RG82 { r: get("r")?, s: get("s")? },
            "OddKH" => Family::OddKH { r: get("r")?, s: get("s")? },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        Ok(fam)
    }

    pub fn is_experimental(&self) -> bool {
        matches!(self, Family::OddKH { .. })
    }

    /// Whether the construction claims χ_la = 3 (as opposed to an upper bound
    /// or an intermediate object).
    pub fn claims_chi_la_three(&self) -> bool {
        !matches!(
            self,
            Family::FbUnits { .. }
                | Family::C8Units { .. }
                | Family::Bk { .. }
                | Family::KC82 { .. }
                | Family::OddKH { .. }
        )
    }

    /// Builds the family, checking its parameter constraints first.
    pub fn build(&self) -> Result<BuiltFamily, FamilyError> {
        match *self {
            Family::FbUnits { k } => build_fb_units(k),
            Family::Fb { k } => build_fb(k),
            Family::RFb { r, s } => build_rfb(r, s),
            Family::Fb1 { r, s } => build_fb1(r, s),
            Family::Fb2 { r, s } => build_fb2(r, s),
            Family::RDf { r, s } => build_rdf(r, s),
            Family::DfR { r, s } => build_dfr(r, s),
            Family::DfVariant { v, r, s } => build_df_variant(v, r, s),
            Family::NC482 { n } => build_nc482(n),
            Family::G1 { r, s } => build_g1(r, s),
            Family::G2 { r, s } => build_g2(r, s),
            Family::H { m, n } => build_h(m, n),
            Family::HmRs { m, r, s } => build_hm_rs(m, r, s),
            Family::C8Units { k } => build_c8_units(k),
            Family::Bk { k } => build_bk(k),
            Family::KC82 { k } => build_kc82(k),
            Family::KD82 { k } => build_kd82(k),
            Family::RG82 { r, s } => build_rg82(r, s),
            Family::OddKH { r, s } => build_oddk_h(r, s),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.tag(), params.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    tag: String,
    params: BTreeMap<String, usize>,
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FamilyRepr {
            tag: self.tag(),
            params: self.params(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(deserializer)?;
        Family::from_tag(&repr.tag, &repr.params).map_err(serde::de::Error::custom)
    }
}

/// How many distinct colors a construction claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorClaim {
    Exactly(usize),
    AtMost(usize),
}

/// One predicted color class: `count` vertices of degree `degree` whose
/// induced sum is `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedClass {
    pub color: u64,
    pub count: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedColors {
    pub classes: Vec<ExpectedClass>,
    pub claim: ColorClaim,
}

impl ExpectedColors {
    pub fn new(claim: ColorClaim, classes: &[(u64, usize, usize)]) -> Self {
        ExpectedColors {
            classes: classes
                .iter()
                .map(|&(color, count, degree)| ExpectedClass { color, count, degree })
                .collect(),
            claim,
        }
    }

    pub fn exactly_three(classes: &[(u64, usize, usize)]) -> Self {
        Self::new(ColorClaim::Exactly(3), classes)
    }

    /// Distinct color values, ascending.
    pub fn colors(&self) -> Vec<u64> {
        let mut c: Vec<u64> = self.classes.iter().map(|c| c.color).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.iter().map(|c| c.count).sum()
    }
}

/// A value the construction prints differently from what the labeling
/// actually induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub quantity: String,
    pub vertex: String,
    pub printed_formula: String,
    pub printed: u64,
    pub verified: u64,
}

/// Where every edge label came from: cells `(row, col)` of the matrix grid,
/// or `(sequence, term)` for the `6x4n` construction (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSource {
    pub matrix: LabelMatrix,
    pub cells: Vec<Vec<(usize, usize)>>,
}

impl LabelSource {
    /// Writes the current edge labels of `g` back into a copy of the source
    /// matrix, so the matrix validators can judge a relabeled graph.
    pub fn reconstruct(&self, g: &LabeledGraph) -> LabelMatrix {
        let mut m = self.matrix.clone();
        for (e, cells) in self.cells.iter().enumerate() {
            let label = g.edge(EdgeId(e)).label;
            for &(a, b) in cells {
                match (m.kind, m.sequences.as_mut()) {
                    (MatrixKind::SixBy4n, Some(seqs)) => seqs[a][b] = label,
                    _ => m.rows[a][b] = label,
                }
            }
        }
        m
    }
}

#[derive(Debug, Clone)]
pub struct BuiltFamily {
    pub family: Family,
    pub graph: LabeledGraph,
    pub expected: ExpectedColors,
    pub warnings: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
    /// Set when the printed claim cannot be met by the construction used.
    pub ambiguity: Option<String>,
    pub source: LabelSource,
}

impl BuiltFamily {
    pub(crate) fn new(family: Family, graph: LabeledGraph, expected: ExpectedColors, source: LabelSource) -> Self {
        BuiltFamily {
            family,
            graph,
            expected,
            warnings: Vec::new(),
            discrepancies: Vec::new(),
            ambiguity: None,
            source,
        }
    }

    /// Records the induced sum at `vertex` next to the value printed for it.
    pub(crate) fn record_printed(
        &mut self,
        quantity: &str,
        vertex: &str,
        printed_formula: &str,
        printed: u64,
    ) -> Result<(), FamilyError> {
        let v = self
            .graph
            .find(vertex)
            .ok_or_else(|| GraphError::UnknownVertex(vertex.to_string()))?;
        let verified = crate::verify::induced_sum(&self.graph, v)
            .ok_or_else(|| invalid(&self.family.tag(), "induced sum overflow"))?;
        if verified != printed {
            self.discrepancies.push(Discrepancy {
                quantity: quantity.to_string(),
                vertex: vertex.to_string(),
                printed_formula: printed_formula.to_string(),
                printed,
                verified,
            });
        }
        Ok(())
    }
}

pub(crate) fn check_size(family: &str, edges: usize) -> Result<(), FamilyError> {
    if edges > MAX_EDGES {
        Err(invalid(family, format!("{edges} edges exceeds the limit of {MAX_EDGES}")))
    } else {
        Ok(())
    }
}
