//! Analysis pipelines shared by the subcommands and the catalog runner.

use crate::input::AlgebraInput;
use crate::report::{
    normalization_report, out_of_scope_report, rationals_to_strings, realization_report,
    AnalysisReport, DimsReport, NormalizationReport, RealizationReport, TimingEntry,
};
use lievf::normalization::{normalize_affine_at, normalize_curve};
use lievf::primitivity::{classify_morozov, MorozovTag, MorozovVerdict};
use lievf::realization::{check_realization, realize_truncated, RealizationProblem};
use lievf::stabilizer::{is_transitive, normalizer_in_g, stabilizer_report, StabilizerReport};
use lievf::structure::{StructureConstants, SubalgebraSpec, VectorFieldAlgebra};
use lievf::symbolic::{Matrix, Rational};
use lievf::{Error, Result};
use std::time::Instant;

type VerdictFields = (
    Option<String>,
    Option<Vec<Vec<String>>>,
    Option<String>,
    Option<String>,
);

/// Structured analysis outcome; `report` is the JSON-ready view.
pub struct Analysis {
    pub report: AnalysisReport,
    pub algebra: Option<VectorFieldAlgebra>,
    pub stabilizer: Option<StabilizerReport>,
    pub structure: StructureConstants,
    pub isotropy: Option<SubalgebraSpec>,
    pub verdict: Option<MorozovVerdict>,
}

pub fn analyze(input: &AlgebraInput, seed: u64, with_timings: bool) -> Result<Analysis> {
    if input.has_fields() {
        analyze_concrete(input, seed, with_timings)
    } else {
        analyze_abstract(input, seed, with_timings)
    }
}

fn verdict_fields(verdict: &MorozovVerdict) -> VerdictFields {
    let primitive = match verdict.tag {
        MorozovTag::NotPrimitive => Some("not-primitive".to_string()),
        MorozovTag::Unknown => Some("unknown".to_string()),
        _ => Some("primitive".to_string()),
    };
    let witness = verdict
        .not_primitive_witness
        .as_ref()
        .map(|w| w.basis().iter().map(|v| rationals_to_strings(v)).collect());
    (
        primitive,
        witness,
        Some(verdict.tag.to_string()),
        verdict.unknown_reason.clone(),
    )
}

fn analyze_concrete(input: &AlgebraInput, seed: u64, with_timings: bool) -> Result<Analysis> {
    let t0 = Instant::now();
    let mut timings: Vec<TimingEntry> = Vec::new();
    let algebra = input.algebra()?;
    let structure = algebra.structure().clone();
    let m = algebra.dim();
    if with_timings {
        timings.push(TimingEntry {
            stage: "parse-and-close".into(),
            millis: t0.elapsed().as_millis(),
        });
    }

    if !is_transitive(&algebra) {
        let report = AnalysisReport {
            name: input.meta.name.clone(),
            seed,
            kind: "concrete".into(),
            transitive: Some(false),
            dims: DimsReport {
                g: m,
                ..Default::default()
            },
            base_point: None,
            effective: None,
            primitive: None,
            intermediate_witness: None,
            morozov: None,
            morozov_reason: None,
            normalization: None,
            realization: None,
            timings: with_timings.then_some(timings),
        };
        return Ok(Analysis {
            report,
            algebra: Some(algebra),
            stabilizer: None,
            structure,
            isotropy: None,
            verdict: None,
        });
    }

    let t1 = Instant::now();
    let stab = stabilizer_report(&algebra, seed)?;
    if with_timings {
        timings.push(TimingEntry {
            stage: "stabilizer".into(),
            millis: t1.elapsed().as_millis(),
        });
    }
    let effective = structure.largest_ideal_inside(&stab.isotropy).is_zero();
    let t2 = Instant::now();
    let verdict = classify_morozov(&structure, &stab.isotropy)?;
    if with_timings {
        timings.push(TimingEntry {
            stage: "classify".into(),
            millis: t2.elapsed().as_millis(),
        });
    }
    let (primitive, witness, morozov, reason) = verdict_fields(&verdict);

    let report = AnalysisReport {
        name: input.meta.name.clone(),
        seed,
        kind: "concrete".into(),
        transitive: Some(true),
        dims: DimsReport {
            g: m,
            h: Some(stab.isotropy.dim()),
            normalizer: Some(stab.normalizer.dim()),
            zero_locus_tangent: Some(stab.zero_locus_tangent_dim),
            centralizer: Some(stab.centralizer_dim),
        },
        base_point: Some(rationals_to_strings(&stab.point.coords)),
        effective: Some(effective),
        primitive,
        intermediate_witness: witness,
        morozov,
        morozov_reason: reason,
        normalization: None,
        realization: None,
        timings: with_timings.then_some(timings),
    };
    Ok(Analysis {
        report,
        algebra: Some(algebra),
        isotropy: Some(stab.isotropy.clone()),
        stabilizer: Some(stab),
        structure,
        verdict: Some(verdict),
    })
}

fn analyze_abstract(input: &AlgebraInput, seed: u64, with_timings: bool) -> Result<Analysis> {
    let t0 = Instant::now();
    let mut timings: Vec<TimingEntry> = Vec::new();
    let (structure, h) = input
        .abstract_structure()?
        .ok_or_else(|| Error::Invalid("input has neither fields nor an abstract pair".into()))?;
    let m = structure.dim();
    let n = m - h.dim();
    if with_timings {
        timings.push(TimingEntry {
            stage: "parse-and-validate".into(),
            millis: t0.elapsed().as_millis(),
        });
    }

    // realize at order 2; linear parts of h-images give the zero-locus
    // tangent space of the formal realization exactly
    let t1 = Instant::now();
    let problem = RealizationProblem::new(structure.clone(), h.clone(), 2)?;
    let realization = realize_truncated(&problem)?;
    let check = check_realization(&realization, &problem);
    if !check.ok {
        return Err(Error::IdentityViolation(format!(
            "order-2 realization failed its invariants: {check:?}"
        )));
    }
    if with_timings {
        timings.push(TimingEntry {
            stage: "realize".into(),
            millis: t1.elapsed().as_millis(),
        });
    }

    let normalizer = normalizer_in_g(&structure, &h);
    let tangent = jet_zero_locus_tangent(&realization, &h, n);
    if normalizer.dim() != h.dim() + tangent {
        return Err(Error::IdentityViolation(format!(
            "dim N (= {}) != dim h (= {}) + dim T0Z (= {}) on the jet realization",
            normalizer.dim(),
            h.dim(),
            tangent
        )));
    }
    let centralizer = normalizer.dim() - h.dim();
    let effective = structure.largest_ideal_inside(&h).is_zero();
    let verdict = classify_morozov(&structure, &h)?;
    let (primitive, witness, morozov, reason) = verdict_fields(&verdict);

    let report = AnalysisReport {
        name: input.meta.name.clone(),
        seed,
        kind: "abstract".into(),
        transitive: Some(true),
        dims: DimsReport {
            g: m,
            h: Some(h.dim()),
            normalizer: Some(normalizer.dim()),
            zero_locus_tangent: Some(tangent),
            centralizer: Some(centralizer),
        },
        base_point: None,
        effective: Some(effective),
        primitive,
        intermediate_witness: witness,
        morozov,
        morozov_reason: reason,
        normalization: None,
        realization: Some(realization_report(&realization, &check, 2)),
        timings: with_timings.then_some(timings),
    };
    Ok(Analysis {
        report,
        algebra: None,
        stabilizer: None,
        structure,
        isotropy: Some(h),
        verdict: Some(verdict),
    })
}

/// Tangent dimension of the schematic zero locus of h at 0, from the linear
/// parts of the realized jets.
fn jet_zero_locus_tangent(
    realization: &lievf::realization::Realization,
    h: &SubalgebraSpec,
    n: usize,
) -> usize {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let origin = vec![Rational::new(0.into(), 1.into()); n];
    for coords in h.basis() {
        let jet = realization.image_of(coords);
        for poly in jet.coeffs() {
            if poly.is_zero() {
                continue;
            }
            rows.push((0..n).map(|j| poly.partial(j).eval(&origin)).collect());
        }
    }
    if rows.is_empty() {
        return n;
    }
    let rank = Matrix::from_rows(rows).rank();
    n - rank
}

/// Normalization mode requested on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModeChoice {
    Auto,
    Curve,
    Affine,
}

/// Runs the normalization pipeline and attaches its section to the report.
pub fn normalize(
    input: &AlgebraInput,
    mode: ModeChoice,
    seed: u64,
    with_timings: bool,
) -> Result<Analysis> {
    let mut analysis = analyze(input, seed, with_timings)?;
    if analysis.report.transitive != Some(true) {
        return Err(Error::Invalid(
            "normalization requires a transitive algebra".into(),
        ));
    }

    // abstract inputs can only be classified, not concretely normalized
    let Some(algebra) = analysis.algebra.clone() else {
        let tag = analysis.verdict.as_ref().map(|v| v.tag);
        return match tag {
            Some(MorozovTag::Simple) | Some(MorozovTag::Diagonal) if mode == ModeChoice::Auto => {
                analysis.report.normalization =
                    Some(out_of_scope_report(&tag.unwrap().to_string()));
                Ok(analysis)
            }
            _ => Err(Error::Invalid(
                "normalization needs concrete vector fields (abstract pairs can be realized instead)"
                    .into(),
            )),
        };
    };

    let n = algebra.chart().dimension();
    let section: NormalizationReport = match mode {
        ModeChoice::Curve => normalization_report(&normalize_curve(&algebra)?),
        ModeChoice::Affine => {
            let stab = analysis
                .stabilizer
                .clone()
                .expect("transitive concrete analysis");
            normalization_report(&normalize_affine_at(&algebra, stab)?)
        }
        ModeChoice::Auto => {
            if n == 1 {
                normalization_report(&normalize_curve(&algebra)?)
            } else {
                let tag = analysis.verdict.as_ref().map(|v| v.tag);
                match tag {
                    Some(MorozovTag::Affine) => {
                        let stab = analysis
                            .stabilizer
                            .clone()
                            .expect("transitive concrete analysis");
                        normalization_report(&normalize_affine_at(&algebra, stab)?)
                    }
                    Some(MorozovTag::Simple) => out_of_scope_report("Simple"),
                    Some(MorozovTag::Diagonal) => out_of_scope_report("Diagonal"),
                    Some(MorozovTag::NotPrimitive) => {
                        return Err(Error::Invalid(
                            "input is not primitive; no normalization mode applies".into(),
                        ))
                    }
                    _ => {
                        return Err(Error::Invalid(
                            "classification is inconclusive; no normalization mode applies".into(),
                        ))
                    }
                }
            }
        }
    };
    analysis.report.normalization = Some(section);
    Ok(analysis)
}

/// Realizes an abstract pair as jets of the requested order.
pub fn realize(input: &AlgebraInput, order: u32) -> Result<RealizationReport> {
    let (structure, h) = input
        .abstract_structure()?
        .ok_or_else(|| Error::Invalid("realize requires an `abstract` tensor and `h`".into()))?;
    let problem = RealizationProblem::new(structure, h, order)?;
    let realization = realize_truncated(&problem)?;
    let check = check_realization(&realization, &problem);
    Ok(realization_report(&realization, &check, order))
}

/// Completeness of the input's structure constants (used by the catalog
/// expectations).
pub fn completeness(analysis: &Analysis) -> bool {
    analysis.structure.completeness().complete
}
