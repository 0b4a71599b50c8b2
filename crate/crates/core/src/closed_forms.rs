//! Closed-form predictions for `|V|`, β(G_SR), the full-support clique order
//! and the strong metric dimension, by ring family.
//!
//! Predictions are plain data. Nothing in the pipeline reads them back into a
//! computation; the harness only compares.
//!
//! Notation: `m` non-field factors with chain lengths `n_i`, `n` fields, and
//! `P = Π(n_i + 2)` over the non-fields.

use serde::Serialize;

use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    /// Only fields, at least two of them.
    Reduced,
    /// Only non-fields, at least two of them.
    Nonreduced,
    /// At least one field and at least one non-field.
    Mixed,
    /// Single-factor rings.
    Uncovered,
}

impl CaseTag {
    pub fn classify(spec: &RingSpec) -> CaseTag {
        let (m, n) = (spec.non_fields(), spec.fields());
        match (m, n) {
            _ if spec.factor_count() < 2 => CaseTag::Uncovered,
            (0, _) => CaseTag::Reduced,
            (_, 0) => CaseTag::Nonreduced,
            _ => CaseTag::Mixed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormPrediction {
    pub case_tag: CaseTag,
    pub predicted_vertex_count: u64,
    pub predicted_beta: Option<u64>,
    /// Order of the clique on the full-support vertices, as the closed form
    /// states it.
    pub predicted_clique_order: Option<u64>,
    /// Number of full-support vertices, counted directly: `Π(n_i + 1) − 1`.
    pub counted_clique_order: Option<u64>,
    pub predicted_sdim: Option<u64>,
    pub applicability_notes: Vec<String>,
}

pub fn reduced_sdim(fields: u32) -> u64 {
    pow2(fields) - pow2(fields - 1) - 1
}

pub fn reduced_beta(fields: u32) -> u64 {
    pow2(fields - 1) - 1
}

/// `P − 2^{m−1} − 2`.
pub fn nonreduced_sdim(chain_product: u64, non_fields: u32) -> u64 {
    chain_product - pow2(non_fields - 1) - 2
}

/// `P·2^n − 2^{m+n−1} − 2`; with `m = 0` the empty product is 1.
pub fn mixed_sdim(chain_product: u64, non_fields: u32, fields: u32) -> u64 {
    chain_product * pow2(fields) - pow2(non_fields + fields - 1) - 2
}

fn pow2(k: u32) -> u64 {
    1u64 << k
}

pub fn predict(spec: &RingSpec) -> ClosedFormPrediction {
    let case_tag = CaseTag::classify(spec);
    let m = spec.non_fields() as u32;
    let n = spec.fields() as u32;
    let non_fields = || spec.factors().iter().filter(|&&c| c >= 1);
    let chain_product: u64 = non_fields().map(|&c| c as u64 + 2).product();
    let level_product: u64 = non_fields().map(|&c| c as u64 + 1).product();
    let vertex_count = u64::try_from(spec.vertex_count()).unwrap_or(u64::MAX);

    let mut p = ClosedFormPrediction {
        case_tag,
        predicted_vertex_count: vertex_count,
        predicted_beta: None,
        predicted_clique_order: None,
        counted_clique_order: None,
        predicted_sdim: None,
        applicability_notes: Vec::new(),
    };
    match case_tag {
        CaseTag::Uncovered => {
            p.applicability_notes
                .push("single factor: G(R) is complete; no closed form applies".into());
        }
        CaseTag::Reduced => {
            p.predicted_beta = Some(reduced_beta(n));
            p.predicted_sdim = Some(reduced_sdim(n));
            if n == 2 {
                p.applicability_notes.push(
                    "two fields: G(R) is two isolated vertices; value relies on the unreachable-distance convention".into(),
                );
            }
        }
        CaseTag::Nonreduced => {
            p.predicted_beta = Some(pow2(m - 1));
            p.predicted_sdim = Some(nonreduced_sdim(chain_product, m));
            p.predicted_clique_order = Some(level_product - 1);
            p.counted_clique_order = Some(level_product - 1);
        }
        CaseTag::Mixed => {
            p.predicted_beta = Some(pow2(m + n - 1));
            p.predicted_sdim = Some(mixed_sdim(chain_product, m, n));
            p.predicted_clique_order = Some(level_product * pow2(n));
            p.counted_clique_order = Some(level_product - 1);
            p.applicability_notes.push(format!(
                "clique order: closed form Π(n_i+1)·2^n = {} differs from the counted full-support vertices Π(n_i+1) − 1 = {}",
                level_product * pow2(n),
                level_product - 1
            ));
            if level_product == 2 {
                p.applicability_notes.push(
                    "single full-support vertex: it is MMD with no other vertex, so V(G_SR) support is a proper subset".into(),
                );
            }
        }
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    pub description: String,
    pub mixed_value: u64,
    pub family_value: u64,
    pub agrees: bool,
}

/// Evaluates the mixed formula where the families meet: at `n = 0` against
/// the non-reduced formula, at `m = 0` against the reduced one.
pub fn boundary_consistency() -> Vec<BoundaryCheck> {
    let mut out = Vec::new();
    for chains in [vec![1u64, 1], vec![2, 2], vec![1, 2, 3], vec![3, 3, 3]] {
        let product: u64 = chains.iter().map(|c| c + 2).product();
        let m = chains.len() as u32;
        let mixed = mixed_sdim(product, m, 0);
        let family = nonreduced_sdim(product, m);
        out.push(BoundaryCheck {
            description: format!("mixed at n = 0 vs non-reduced, chains {chains:?}"),
            mixed_value: mixed,
            family_value: family,
            agrees: mixed == family,
        });
    }
    for n in 2..=7 {
        let mixed = mixed_sdim(1, 0, n);
        let family = reduced_sdim(n);
        out.push(BoundaryCheck {
            description: format!("mixed at m = 0 vs reduced, {n} fields"),
            mixed_value: mixed,
            family_value: family,
            agrees: mixed == family,
        });
    }
    out
}
