//! Parameter-range enumeration, census records and the classifier-vs-oracle
//! verification engine.

use crate::aut::{are_isomorphic, automorphisms, s_arc_report, AutError};
use crate::classify::{classify, Category, ClassificationResult};
use crate::construct::HtgParams;
use crate::graph6;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// One line of a census file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub m: u32,
    pub n: u32,
    pub ell: u32,
    pub ell_normal: u32,
    pub order: u32,
    pub girth: u32,
    pub category: String,
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    /// Decimal; generalized-prism stabilizers outgrow fixed-width integers.
    pub aut_order: String,
    pub stabilizer: String,
    pub named_iso: Option<String>,
    pub verified: Option<bool>,
}

impl CensusRow {
    pub fn from_classification(
        given: &HtgParams,
        result: &ClassificationResult,
        verified: Option<bool>,
    ) -> Self {
        CensusRow {
            m: given.m(),
            n: given.n(),
            ell: given.ell(),
            ell_normal: result.params.ell(),
            order: given.order(),
            girth: result.girth,
            category: result.category.label().to_string(),
            c1: result.flags.c1,
            c2: result.flags.c2,
            c3: result.flags.c3,
            c4: result.flags.c4,
            aut_order: result.predicted_aut_order.to_string(),
            stabilizer: result.predicted_stabilizer.to_string(),
            named_iso: result.named_isomorph(),
            verified,
        }
    }
}

/// All valid normal-form triples with `mn <= max_order`, in lexicographic
/// (mn, m, n, l) order.
pub fn enumerate_normal_form(max_order: u32) -> Vec<HtgParams> {
    let mut triples = Vec::new();
    for n in (4..=max_order).step_by(2) {
        for m in 1..=max_order / n {
            for ell in 0..=n / 2 {
                if let Ok(p) = HtgParams::new(m, n, ell) {
                    triples.push(p);
                }
            }
        }
    }
    triples.sort_by_key(|p| (p.order(), p.m(), p.n(), p.ell()));
    triples
}

pub const CSV_FORMAT_COMMENT: &str = "# htg-census format 1";
pub const CSV_HEADER: &str =
    "m,n,ell,ell_normal,order,girth,category,c1,c2,c3,c4,aut_order,stabilizer,named_iso,verified";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders rows as CSV with the versioned header comment. Byte-identical
/// across runs for the same input.
pub fn to_csv(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    out.push_str(CSV_FORMAT_COMMENT);
    out.push('\n');
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let named = r.named_iso.as_deref().unwrap_or("");
        let verified = r
            .verified
            .map(|v| v.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.m,
            r.n,
            r.ell,
            r.ell_normal,
            r.order,
            r.girth,
            csv_field(&r.category),
            r.c1,
            r.c2,
            r.c3,
            r.c4,
            r.aut_order,
            r.stabilizer,
            csv_field(named),
            verified
        ));
    }
    out
}

/// Classifier-only census (no graphs are built).
pub fn census(max_order: u32) -> Vec<CensusRow> {
    enumerate_normal_form(max_order)
        .iter()
        .map(|p| CensusRow::from_classification(p, &classify(p), None))
        .collect()
}

/// Outcome of checking one triple against the oracle.
#[derive(Debug, Clone)]
pub struct VerifiedTriple {
    pub row: CensusRow,
    /// Human-readable disagreements; empty means the oracle agrees.
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub max_order: u32,
    pub triples: Vec<VerifiedTriple>,
    pub category_counts: BTreeMap<String, usize>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = (&CensusRow, &str)> {
        self.triples.iter().flat_map(|t| {
            t.mismatches
                .iter()
                .map(move |msg| (&t.row, msg.as_str()))
        })
    }

    pub fn is_clean(&self) -> bool {
        self.triples.iter().all(|t| t.mismatches.is_empty())
    }
}

/// Builds the graph for one (normal-form) triple, runs the oracle, and
/// compares everything the classifier predicted: group order, stabilizer
/// order, arc-regularity level, girth and (for exceptional triples) the
/// isomorphism with the named graph.
pub fn verify_triple(p: &HtgParams) -> VerifiedTriple {
    let result = classify(p);
    let mut mismatches = Vec::new();
    let colored = result.params.build();
    let graph = colored.graph();

    let group = match automorphisms(graph) {
        Ok(group) => group,
        Err(e @ AutError::TooLarge { .. }) => {
            return VerifiedTriple {
                row: CensusRow::from_classification(p, &result, Some(false)),
                mismatches: vec![format!("oracle unavailable: {e}")],
            };
        }
        Err(e) => unreachable!("automorphisms on a built graph: {e}"),
    };

    if group.order() != result.predicted_aut_order {
        mismatches.push(format!(
            "aut order: oracle {} vs predicted {}",
            group.order(),
            result.predicted_aut_order
        ));
    }
    let stabilizer = group.point_stabilizer_order(0);
    if stabilizer != result.predicted_stabilizer {
        mismatches.push(format!(
            "stabilizer: oracle {} vs predicted {}",
            stabilizer, result.predicted_stabilizer
        ));
    }
    if graph.girth() != Some(result.girth as usize) {
        mismatches.push(format!(
            "girth: oracle {:?} vs predicted {}",
            graph.girth(),
            result.girth
        ));
    }

    let report = s_arc_report(graph, &group).expect("HTG graphs are cubic");
    let arc_ok = match &result.category {
        Category::Exceptional(id) => match id.s_arc_regular {
            Some(s) => report.regular_at == Some(s),
            None => report.s_transitive_up_to == 0,
        },
        Category::TwoArcRegular => report.regular_at == Some(2),
        Category::OneArcRegular => report.regular_at == Some(1),
        Category::StabilizerTwo | Category::RegularAut => report.s_transitive_up_to == 0,
    };
    if !arc_ok {
        mismatches.push(format!(
            "arc structure: oracle (transitive to {}, regular at {:?}) vs category {}",
            report.s_transitive_up_to, report.regular_at, result.category
        ));
    }

    if let Category::Exceptional(id) = &result.category {
        let named = id.kind.graph().build().expect("recognized parameter is valid");
        match are_isomorphic(graph, &named) {
            Ok(true) => {}
            Ok(false) => mismatches.push(format!("not isomorphic to {}", id.kind)),
            Err(e) => mismatches.push(format!("isomorphism test unavailable: {e}")),
        }
    }

    VerifiedTriple {
        row: CensusRow::from_classification(p, &result, Some(mismatches.is_empty())),
        mismatches,
    }
}

/// Verifies every valid normal-form triple with `mn <= max_order` against
/// the oracle, in parallel; output order is deterministic.
pub fn verify_range(max_order: u32) -> VerifyReport {
    let triples = enumerate_normal_form(max_order);
    let mut verified: Vec<(HtgParams, VerifiedTriple)> = triples
        .par_iter()
        .map(|p| (*p, verify_triple(p)))
        .collect();
    verified.sort_by_key(|(p, _)| (p.order(), p.m(), p.n(), p.ell()));

    let mut category_counts = BTreeMap::new();
    for (_, t) in &verified {
        *category_counts.entry(t.row.category.clone()).or_insert(0) += 1;
    }
    VerifyReport {
        max_order,
        triples: verified.into_iter().map(|(_, t)| t).collect(),
        category_counts,
    }
}

/// Serializable full description of one graph (adjacency, colors, group
/// labels), the JSON export format.
#[derive(Debug, Clone, Serialize)]
pub struct GraphExport {
    pub m: u32,
    pub n: u32,
    pub ell: u32,
    pub order: usize,
    pub adjacency: Vec<Vec<usize>>,
    pub edges: Vec<EdgeExport>,
    /// Per vertex: exponent of x, exponent of y, reflection bit.
    pub vertex_labels: Vec<(u64, u64, u8)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeExport {
    pub u: usize,
    pub v: usize,
    pub color: String,
}

impl GraphExport {
    pub fn from_params(p: &HtgParams) -> Self {
        let colored = p.build();
        let graph = colored.graph();
        let edges = graph
            .edges()
            .map(|(u, v)| EdgeExport {
                u,
                v,
                color: colored.color_of(u, v).expect("all edges colored").to_string(),
            })
            .collect();
        GraphExport {
            m: p.m(),
            n: p.n(),
            ell: p.ell(),
            order: graph.order(),
            adjacency: (0..graph.order())
                .map(|v| graph.neighbors(v).to_vec())
                .collect(),
            edges,
            vertex_labels: (0..graph.order())
                .map(|v| {
                    let e = colored.element_of(v);
                    (e.x_exp, e.y_exp, u8::from(e.flip))
                })
                .collect(),
        }
    }
}

/// graph6 of the (uncolored) graph of a triple, with the crate's row-major
/// vertex ordering.
pub fn export_graph6(p: &HtgParams) -> String {
    graph6::to_graph6(p.build().graph())
}

/// DOT with color attributes.
pub fn export_dot(p: &HtgParams) -> String {
    p.build().to_dot()
}
