//! The curated example corpus: classical algebras on curves and planes, the
//! affine families, a diagonal abstract pair, and non-primitive products.
//! Every entry carries its expected classification; the runner compares the
//! computed results against them.

use crate::input::AlgebraInput;
use crate::pipeline::{self, ModeChoice};
use lievf::Result;

pub const ENTRIES: &[(&str, &str)] = &[
    ("sl2-P1", include_str!("../catalog/sl2-P1.json")),
    ("aff-line", include_str!("../catalog/aff-line.json")),
    (
        "sl2-P1-moebius",
        include_str!("../catalog/sl2-P1-moebius.json"),
    ),
    ("abelian-line", include_str!("../catalog/abelian-line.json")),
    (
        "translations-C2",
        include_str!("../catalog/translations-C2.json"),
    ),
    ("heis3-C2", include_str!("../catalog/heis3-C2.json")),
    (
        "affine-shear-C2",
        include_str!("../catalog/affine-shear-C2.json"),
    ),
    (
        "sl2-diagonal-C1xC1",
        include_str!("../catalog/sl2-diagonal-C1xC1.json"),
    ),
    ("gl2-aff-C2", include_str!("../catalog/gl2-aff-C2.json")),
    ("sa2-C2", include_str!("../catalog/sa2-C2.json")),
    ("gl3-aff-C3", include_str!("../catalog/gl3-aff-C3.json")),
    (
        "sl2sl2-diagonal",
        include_str!("../catalog/sl2sl2-diagonal.json"),
    ),
];

pub fn load_catalog() -> Result<Vec<AlgebraInput>> {
    ENTRIES
        .iter()
        .map(|(_, text)| AlgebraInput::from_json(text))
        .collect()
}

/// One catalog entry's comparison against its expectations.
pub struct CatalogOutcome {
    pub name: String,
    pub mismatches: Vec<String>,
}

impl CatalogOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Analyzes every entry and checks the expected metadata, including the
/// normalization mode outcome and completeness where declared.
pub fn run_all(seed: u64) -> Result<Vec<CatalogOutcome>> {
    let mut outcomes = Vec::new();
    for input in load_catalog()? {
        let name = input.name().to_string();
        let mut mismatches = Vec::new();
        let analysis = pipeline::analyze(&input, seed, false)?;
        let expected = input.meta.expected.clone().unwrap_or_default();

        if let Some(t) = expected.transitive {
            if analysis.report.transitive != Some(t) {
                mismatches.push(format!(
                    "transitive: expected {t}, got {:?}",
                    analysis.report.transitive
                ));
            }
        }
        if let Some(d) = &expected.dims {
            let got = &analysis.report.dims;
            let all = (
                got.g,
                got.h.unwrap_or(usize::MAX),
                got.normalizer.unwrap_or(usize::MAX),
                got.zero_locus_tangent.unwrap_or(usize::MAX),
                got.centralizer.unwrap_or(usize::MAX),
            );
            let want = (d.g, d.h, d.normalizer, d.zero_locus_tangent, d.centralizer);
            if all != want {
                mismatches.push(format!("dims: expected {want:?}, got {all:?}"));
            }
        }
        if let Some(e) = expected.effective {
            if analysis.report.effective != Some(e) {
                mismatches.push(format!(
                    "effective: expected {e}, got {:?}",
                    analysis.report.effective
                ));
            }
        }
        if let Some(p) = expected.primitive {
            let got = analysis.report.primitive.as_deref() == Some("primitive");
            if got != p {
                mismatches.push(format!(
                    "primitive: expected {p}, got {:?}",
                    analysis.report.primitive
                ));
            }
        }
        if let Some(tag) = &expected.morozov {
            if analysis.report.morozov.as_deref() != Some(tag.as_str()) {
                mismatches.push(format!(
                    "morozov: expected {tag}, got {:?}",
                    analysis.report.morozov
                ));
            }
        }
        if let Some(c) = expected.complete {
            let got = pipeline::completeness(&analysis);
            if got != c {
                mismatches.push(format!("complete: expected {c}, got {got}"));
            }
        }
        if let Some(mode) = &expected.normalize_mode {
            let got = match pipeline::normalize(&input, ModeChoice::Auto, seed, false) {
                Ok(a) => {
                    let section = a.report.normalization.expect("normalize fills its section");
                    if section.mode.starts_with("out-of-scope") {
                        "out-of-scope".to_string()
                    } else {
                        section.mode
                    }
                }
                Err(_) => "error".to_string(),
            };
            if &got != mode {
                mismatches.push(format!("normalize_mode: expected {mode}, got {got}"));
            }
        }
        outcomes.push(CatalogOutcome { name, mismatches });
    }
    Ok(outcomes)
}
