//! Deterministic JSON reports. All numeric values are exact strings; struct
//! field order fixes the serialization order, so identical (input, seed)
//! pairs produce byte-identical output.

use lievf::normalization::{NormalizationMode, NormalizationResult};
use lievf::realization::{GaugeStep, Realization, RealizationCheck};
use lievf::symbolic::{format_rational, Rational};
use lievf::vector_fields::VectorField;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub seed: u64,
    pub kind: String,
    pub transitive: Option<bool>,
    pub dims: DimsReport,
    pub base_point: Option<Vec<String>>,
    pub effective: Option<bool>,
    pub primitive: Option<String>,
    pub intermediate_witness: Option<Vec<Vec<String>>>,
    pub morozov: Option<String>,
    pub morozov_reason: Option<String>,
    pub normalization: Option<NormalizationReport>,
    pub realization: Option<RealizationReport>,
    pub timings: Option<Vec<TimingEntry>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DimsReport {
    pub g: usize,
    pub h: Option<usize>,
    pub normalizer: Option<usize>,
    pub zero_locus_tangent: Option<usize>,
    pub centralizer: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizationReport {
    /// `curve`, `affine`, or `out-of-scope:<tag>`
    pub mode: String,
    pub map: Option<Vec<String>>,
    pub target_variables: Option<Vec<String>>,
    pub transformed_basis: Option<Vec<Vec<String>>>,
    pub related_flags: Option<Vec<bool>>,
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationReport {
    pub order: u32,
    pub variables: Vec<String>,
    /// coefficient-string vectors, one per basis element of g
    pub images: Vec<Vec<String>>,
    pub kernel_dim: usize,
    pub complement: Vec<usize>,
    pub check: CheckReport,
    pub gauge: Vec<GaugeReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub complement_frame_ok: bool,
    pub isotropy_recovered: bool,
    pub evaluation_rank: usize,
    pub bracket_ok_through: Option<u32>,
    pub first_failure: Option<(usize, usize, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GaugeReport {
    pub degree: u32,
    pub unknowns: usize,
    pub free_variables: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TimingEntry {
    pub stage: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorBody {
    pub code: i32,
    pub message: String,
}

pub fn rationals_to_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

pub fn field_to_strings(field: &VectorField) -> Vec<String> {
    field.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn normalization_report(result: &NormalizationResult) -> NormalizationReport {
    NormalizationReport {
        mode: match result.mode {
            NormalizationMode::Curve => "curve".into(),
            NormalizationMode::Affine => "affine".into(),
        },
        map: Some(result.map.entries().iter().map(|e| e.to_string()).collect()),
        target_variables: Some(result.map.target().vars().names().to_vec()),
        transformed_basis: Some(
            result
                .transformed_basis
                .iter()
                .map(field_to_strings)
                .collect(),
        ),
        related_flags: Some(result.related_flags.clone()),
        sign: Some(result.sign),
    }
}

pub fn out_of_scope_report(tag: &str) -> NormalizationReport {
    NormalizationReport {
        mode: format!("out-of-scope:{tag}"),
        map: None,
        target_variables: None,
        transformed_basis: None,
        related_flags: None,
        sign: None,
    }
}

pub fn realization_report(
    realization: &Realization,
    check: &RealizationCheck,
    order: u32,
) -> RealizationReport {
    RealizationReport {
        order,
        variables: realization.chart.vars().names().to_vec(),
        images: realization
            .images
            .iter()
            .map(|jet| jet.coeffs().iter().map(|p| p.to_string()).collect())
            .collect(),
        kernel_dim: realization.kernel.dim(),
        complement: realization.complement.clone(),
        check: CheckReport {
            ok: check.ok,
            complement_frame_ok: check.complement_frame_ok,
            isotropy_recovered: check.isotropy_recovered,
            evaluation_rank: check.evaluation_rank,
            bracket_ok_through: check.bracket_ok_through,
            first_failure: check.first_failure,
        },
        gauge: realization
            .gauge_log
            .iter()
            .map(|g: &GaugeStep| GaugeReport {
                degree: g.degree,
                unknowns: g.unknowns,
                free_variables: g.free_variables,
            })
            .collect(),
    }
}
