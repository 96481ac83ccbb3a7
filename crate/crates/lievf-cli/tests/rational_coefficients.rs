//! End-to-end runs on algebras with genuinely rational (non-polynomial)
//! coefficients: denominators must be avoided by the generic-point search
//! and cleared exactly everywhere downstream.

use lievf::normalization::{normalize_affine, normalize_curve};
use lievf::primitivity::{classify_morozov, MorozovTag};
use lievf::stabilizer::{is_transitive, stabilizer_report};
use lievf::structure::VectorFieldAlgebra;
use lievf::symbolic::{parse_expression, Vars};
use lievf::vector_fields::{Chart, VectorField};

#[test]
fn sl2_under_a_two_to_one_map_normalizes_exactly() {
    // z = w + 1/w is dominant but not birational; the pulled-back fields
    // are rational and the curve normalizer must recover the map itself
    let zchart = Chart::new(Vars::new(["z"]));
    let wchart = Chart::new(Vars::new(["w"]));
    let std = VectorFieldAlgebra::parse(&zchart, &[vec!["1"], vec!["z"], vec!["z^2"]]).unwrap();
    let sub = parse_expression("w + 1/w", wchart.vars()).unwrap();
    let pulled: Vec<VectorField> = std
        .basis()
        .iter()
        .map(|f| f.pullback(&wchart, std::slice::from_ref(&sub)).unwrap())
        .collect();
    assert!(pulled.iter().any(|f| !f.has_polynomial_coeffs()));
    let conj = VectorFieldAlgebra::new(wchart.clone(), pulled).unwrap();
    // same structure constants as the standard realization
    assert_eq!(conj.structure(), std.structure());
    assert!(is_transitive(&conj));
    let r = stabilizer_report(&conj, 12).unwrap();
    assert_eq!((r.isotropy.dim(), r.normalizer.dim()), (2, 2));
    let n = normalize_curve(&conj).unwrap();
    assert_eq!(n.map.entries()[0], sub);
    assert!(n.related_flags.iter().all(|&f| f));
}

#[test]
fn affine_pipeline_handles_denominators() {
    // (x, y) = (u, v/u): a birational change with a pole along u = 0
    let xy = Chart::new(Vars::new(["x", "y"]));
    let uv = Chart::new(Vars::new(["u", "v"]));
    let gl2 = VectorFieldAlgebra::parse(
        &xy,
        &[
            vec!["1", "0"],
            vec!["0", "1"],
            vec!["x", "0"],
            vec!["y", "0"],
            vec!["0", "x"],
            vec!["0", "y"],
        ],
    )
    .unwrap();
    let subs = [
        parse_expression("u", uv.vars()).unwrap(),
        parse_expression("v/u", uv.vars()).unwrap(),
    ];
    let pulled: Vec<VectorField> = gl2
        .basis()
        .iter()
        .map(|f| f.pullback(&uv, &subs).unwrap())
        .collect();
    assert!(pulled.iter().any(|f| !f.has_polynomial_coeffs()));
    let conj = VectorFieldAlgebra::new(uv, pulled).unwrap();
    assert_eq!(conj.structure(), gl2.structure());

    let report = stabilizer_report(&conj, 23).unwrap();
    // the generic point avoids the u = 0 pole
    assert_ne!(lievf::symbolic::format_rational(&report.point.coords[0]), "0");
    assert_eq!(
        (report.isotropy.dim(), report.normalizer.dim(), report.zero_locus_tangent_dim),
        (4, 4, 0)
    );
    let verdict = classify_morozov(conj.structure(), &report.isotropy).unwrap();
    assert_eq!(verdict.tag, MorozovTag::Affine);

    let r = normalize_affine(&conj, 23).unwrap();
    assert!(r.related_flags.iter().all(|&f| f));
    for w in &r.transformed_basis {
        for c in w.coeffs() {
            assert!(c.as_polynomial().unwrap().total_degree().unwrap_or(0) <= 1);
        }
    }
}
