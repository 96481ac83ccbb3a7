//! Constructive normalizations: the curve normalizer (rational map to the
//! line from a pair with `[v1,v2] = v1`) and the affine-type normalizer (map
//! built from a basis of V0), both with exact relatedness verification.

use crate::error::{Error, Result};
use crate::primitivity::{classify_morozov, MorozovTag};
use crate::stabilizer::{stabilizer_report, stabilizer_report_at, BasePoint, StabilizerReport};
use crate::structure::{SubalgebraSpec, VectorFieldAlgebra};
use crate::symbolic::{
    coordinates_in, express_in_constant_span, express_vectors_in_constant_span,
    rational_eigenvalues, rational_span_basis, solve_linear, Matrix, Polynomial, Rational,
    RationalFunction, Vars,
};
use crate::vector_fields::{lie_derivative, wedge, Chart, MultiVector, VectorField};
use num_traits::{One, Zero};

/// A rational map between charts, one entry per target coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    source: Chart,
    target: Chart,
    entries: Vec<RationalFunction>,
}

impl RationalMap {
    pub fn new(source: Chart, target: Chart, entries: Vec<RationalFunction>) -> Result<Self> {
        if entries.len() != target.dimension() {
            return Err(Error::DimensionMismatch("map entry count".into()));
        }
        for e in &entries {
            if e.vars() != source.vars() {
                return Err(Error::ChartMismatch);
            }
        }
        Ok(RationalMap {
            source,
            target,
            entries,
        })
    }

    pub fn source(&self) -> &Chart {
        &self.source
    }

    pub fn target(&self) -> &Chart {
        &self.target
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }
}

/// How a normalization was produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormalizationMode {
    Curve,
    Affine,
}

/// A normalization map with the transformed basis and per-basis-element
/// relatedness verification.
#[derive(Clone, Debug)]
pub struct NormalizationResult {
    pub mode: NormalizationMode,
    pub map: RationalMap,
    /// images of the original basis fields on the target chart
    pub transformed_basis: Vec<VectorField>,
    /// exact check `v(phi_i) = w_i ∘ phi` per original basis element
    pub related_flags: Vec<bool>,
    /// sign chosen for the curve map (fixed by v1(phi) = 1)
    pub sign: i8,
}

/// `true` iff `v(phi_i) = w_i ∘ phi` holds as canonical rational functions
/// for every entry (the componentwise form of dphi ∘ v = w ∘ phi).
pub fn verify_phi_related(v: &VectorField, phi: &RationalMap, w: &VectorField) -> bool {
    if v.chart() != phi.source() || w.chart() != phi.target() {
        return false;
    }
    for (i, entry) in phi.entries().iter().enumerate() {
        let lhs = match v.apply(entry) {
            Ok(f) => f,
            Err(_) => return false,
        };
        let rhs = match w.coeff(i).compose(phi.entries()) {
            Ok(f) => f,
            Err(_) => return false,
        };
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Searches for a pair with `[v1, v2] = v1` exactly: candidate v2 ranges
/// over basis elements and small integer combinations; v1 is an eigenvector
/// of ad(v2) with nonzero rational eigenvalue, and v2 is rescaled by -1/λ.
/// Returns coordinate vectors in the algebra basis.
pub fn find_affine_pair(algebra: &VectorFieldAlgebra) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let s = algebra.structure();
    let m = algebra.dim();
    if s.is_abelian() {
        return Err(Error::AbelianInput);
    }
    let mut candidates: Vec<Vec<Rational>> = Vec::new();
    for i in 0..m {
        let mut e = vec![Rational::zero(); m];
        e[i] = Rational::one();
        candidates.push(e);
    }
    // small integer combinations, deterministic order
    let bound = 2i64;
    let mut combo = vec![-bound; m];
    loop {
        if combo.iter().any(|&c| c != 0) {
            candidates.push(
                combo
                    .iter()
                    .map(|&c| Rational::from_integer(c.into()))
                    .collect(),
            );
        }
        let mut idx = 0;
        loop {
            if idx == m {
                break;
            }
            combo[idx] += 1;
            if combo[idx] <= bound {
                break;
            }
            combo[idx] = -bound;
            idx += 1;
        }
        if idx == m {
            break;
        }
    }
    let searched = candidates.len();
    for u in &candidates {
        let ad = s.ad(u);
        for lam in rational_eigenvalues(&ad) {
            if lam.is_zero() {
                continue;
            }
            let mut shifted = ad.clone();
            for i in 0..m {
                let v = shifted.at(i, i) - &lam;
                *shifted.at_mut(i, i) = v;
            }
            let kernel = crate::symbolic::nullspace(&shifted);
            let Some(v1) = kernel.into_iter().next() else {
                continue;
            };
            let v2: Vec<Rational> = u.iter().map(|c| -(c / &lam)).collect();
            // postcondition: [v1, v2] = v1 exactly
            if s.bracket(&v1, &v2) == v1 {
                return Ok((v1, v2));
            }
        }
    }
    Err(Error::NoAffinePair { bound: searched })
}

/// Normalizes a 2- or 3-dimensional nonabelian algebra on a curve: the map
/// is the coefficient quotient of the affine pair, with the sign fixed so
/// that `v1(phi) = 1`; verifies `v2(phi) = phi` and, in dimension 3,
/// `v3(phi) = phi^2` for the completed triple with `[v1, v3] = 2 v2`.
pub fn normalize_curve(algebra: &VectorFieldAlgebra) -> Result<NormalizationResult> {
    let n = algebra.chart().dimension();
    if n != 1 {
        return Err(Error::WrongNormalizationMode {
            required: "chart dimension 1".into(),
            got: format!("dimension {n}"),
        });
    }
    let m = algebra.dim();
    if m != 2 && m != 3 {
        return Err(Error::WrongNormalizationMode {
            required: "algebra dimension 2 or 3".into(),
            got: format!("dimension {m}"),
        });
    }
    let s = algebra.structure();
    let (v1c, v2c) = find_affine_pair(algebra)?;
    let v1 = algebra.field_from_coords(&v1c);
    let v2 = algebra.field_from_coords(&v2c);
    let a = v1.coeff(0).clone();
    let b = v2.coeff(0).clone();
    if a.is_zero() {
        return Err(Error::CurveVerificationFailed(
            "v1 vanishes identically".into(),
        ));
    }
    let quotient = b.div(&a)?;
    let one = RationalFunction::one(algebra.chart().vars().clone());
    let (phi_fn, sign) = if v1.apply(&quotient)? == one {
        (quotient, 1i8)
    } else {
        let negated = quotient.neg();
        if v1.apply(&negated)? == one {
            (negated, -1i8)
        } else {
            return Err(Error::CurveVerificationFailed(
                "v1(phi) = 1 fails for both signs".into(),
            ));
        }
    };
    if v2.apply(&phi_fn)? != phi_fn {
        return Err(Error::CurveVerificationFailed("v2(phi) = phi".into()));
    }

    let mut pair_coords = vec![v1c.clone(), v2c.clone()];
    if m == 3 {
        // complete the triple: solve [v1, x] = 2 v2 and adjust by the
        // kernel direction so that v3(phi) = phi^2 exactly
        let mut cols = Vec::with_capacity(m);
        for j in 0..m {
            let mut ej = vec![Rational::zero(); m];
            ej[j] = Rational::one();
            cols.push(s.bracket(&v1c, &ej));
        }
        let mut mat = Matrix::zeros(m, m, &Rational::zero());
        for j in 0..m {
            for i in 0..m {
                *mat.at_mut(i, j) = cols[j][i].clone();
            }
        }
        let target: Vec<Rational> = v2c
            .iter()
            .map(|c| c * Rational::from_integer(2.into()))
            .collect();
        let sol = solve_linear(&mat, &target);
        let mut v3c = sol
            .particular
            .ok_or_else(|| Error::CurveVerificationFailed("no v3 with [v1,v3] = 2 v2".into()))?;
        let v3 = algebra.field_from_coords(&v3c);
        let residual = v3.apply(&phi_fn)?.sub(&phi_fn.mul(&phi_fn));
        if let Some(t) = residual.constant_value() {
            if !t.is_zero() {
                for (c, d) in v3c.iter_mut().zip(&v1c) {
                    *c = &*c - &(&t * d);
                }
            }
        } else {
            return Err(Error::CurveVerificationFailed(
                "v3(phi) - phi^2 is not constant".into(),
            ));
        }
        let v3 = algebra.field_from_coords(&v3c);
        if v3.apply(&phi_fn)? != phi_fn.mul(&phi_fn) {
            return Err(Error::CurveVerificationFailed("v3(phi) = phi^2".into()));
        }
        pair_coords.push(v3c);
    }

    let target = Chart::new(Vars::new(["z"]));
    let phi = RationalMap::new(algebra.chart().clone(), target.clone(), vec![phi_fn])?;
    let std_fields: Vec<VectorField> = (0..m)
        .map(|k| {
            let coeff = Polynomial::var(target.vars().clone(), 0).pow(k as u32);
            VectorField::new(
                target.clone(),
                vec![RationalFunction::from_polynomial(coeff)],
            )
        })
        .collect();
    let mut transformed = Vec::with_capacity(m);
    let mut flags = Vec::with_capacity(m);
    for field in algebra.basis() {
        // express the basis field in the (v1, v2[, v3]) frame over Q
        let coords = coordinates_in(&pair_coords, &basis_coords(algebra, field))
            .ok_or_else(|| Error::CurveVerificationFailed("pair frame does not span".into()))?;
        let w = VectorField::linear_combination(&target, &std_fields, &coords);
        flags.push(verify_phi_related(field, &phi, &w));
        transformed.push(w);
    }
    if flags.iter().any(|f| !f) {
        return Err(Error::CurveVerificationFailed(
            "phi-relatedness of a basis element".into(),
        ));
    }
    Ok(NormalizationResult {
        mode: NormalizationMode::Curve,
        map: phi,
        transformed_basis: transformed,
        related_flags: flags,
        sign,
    })
}

/// Coordinates of one of the algebra's own basis fields (the identity
/// coordinate vector), kept as a helper for frame changes.
fn basis_coords(algebra: &VectorFieldAlgebra, field: &VectorField) -> Vec<Rational> {
    let tuples: Vec<&[RationalFunction]> = algebra.basis().iter().map(|f| f.coeffs()).collect();
    express_vectors_in_constant_span(field.coeffs(), &tuples)
        .expect("basis fields lie in their own span")
}

/// Top wedge of a basis of m; errors when the wedge degenerates.
pub fn theta0(m_basis: &[VectorField]) -> Result<MultiVector> {
    let t = wedge(m_basis)?;
    if t.is_zero() {
        return Err(Error::DegenerateWedge);
    }
    Ok(t)
}

/// Exact check of the trace identity `L_v Θ0 = Tr(ad(v)|_m) Θ0`, where the
/// action of `v` on the span of `m_basis` is solved over the constants.
pub fn trace_identity_check(v: &VectorField, m_basis: &[VectorField]) -> Result<bool> {
    let t0 = theta0(m_basis)?;
    let tuples: Vec<&[RationalFunction]> = m_basis.iter().map(|f| f.coeffs()).collect();
    let mut trace = Rational::zero();
    for (i, mi) in m_basis.iter().enumerate() {
        let br = v.bracket(mi)?;
        let coords = express_vectors_in_constant_span(br.coeffs(), &tuples).ok_or_else(|| {
            Error::Invalid("[v, m] does not lie in the constant span of m".into())
        })?;
        trace += &coords[i];
    }
    let lhs = lie_derivative(v, &t0)?;
    let rhs = t0.scale_fn(&RationalFunction::constant(v.chart().vars().clone(), trace));
    Ok(lhs == rhs)
}

/// `psi(theta ⊗ w) = (theta ∧ w) / Θ0` as a rational function.
pub fn psi(theta: &MultiVector, w: &VectorField, t0: &MultiVector) -> Result<RationalFunction> {
    let n = t0.chart().dimension();
    let full: Vec<usize> = (0..n).collect();
    let top = theta.wedge_field(w)?;
    let denom = t0.component(&full);
    if denom.is_zero() {
        return Err(Error::DegenerateWedge);
    }
    top.component(&full).div(&denom)
}

/// Builds the n-dimensional space V0 spanned by `psi((n-1)-wedges of m ⊗ h)`
/// and returns its deterministic basis. Every element vanishes at the base
/// point; fewer than n dimensions signals an invariant foliation.
pub fn build_v0(
    m_basis: &[VectorField],
    h_basis: &[VectorField],
    point: &BasePoint,
) -> Result<Vec<RationalFunction>> {
    let n = m_basis.len();
    if h_basis.is_empty() {
        return Err(Error::AbelianCase);
    }
    if n == 1 {
        // the empty (n-1)-wedge is the scalar 1
        return build_v0_dim_one(m_basis, h_basis, point);
    }
    let t0 = theta0(m_basis)?;
    let mut psis = Vec::new();
    for omit in 0..n {
        let theta_fields: Vec<VectorField> = m_basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omit)
            .map(|(_, f)| f.clone())
            .collect();
        let theta = wedge(&theta_fields)?;
        for w in h_basis {
            psis.push(psi(&theta, w, &t0)?);
        }
    }
    finish_v0(psis, n, point)
}

fn build_v0_dim_one(
    m_basis: &[VectorField],
    h_basis: &[VectorField],
    point: &BasePoint,
) -> Result<Vec<RationalFunction>> {
    // psi(1 ⊗ w) = w-coefficient / m-coefficient
    let denom = m_basis[0].coeff(0);
    let mut psis = Vec::new();
    for w in h_basis {
        psis.push(w.coeff(0).div(denom)?);
    }
    finish_v0(psis, 1, point)
}

fn finish_v0(
    psis: Vec<RationalFunction>,
    n: usize,
    point: &BasePoint,
) -> Result<Vec<RationalFunction>> {
    let basis = rational_span_basis(&psis);
    if basis.len() < n {
        return Err(Error::NonPrimitiveDetected {
            dim: basis.len(),
            n,
        });
    }
    if basis.len() > n {
        return Err(Error::IdentityViolation(format!(
            "dim V0 = {} exceeds n = {n}",
            basis.len()
        )));
    }
    for f in &basis {
        let value = f.eval(&point.coords).map_err(|_| Error::InvalidPoint)?;
        if !value.is_zero() {
            return Err(Error::IdentityViolation(
                "a V0 element does not vanish at the base point".into(),
            ));
        }
    }
    Ok(basis)
}

/// Full affine normalization pipeline at a seeded generic point.
pub fn normalize_affine(algebra: &VectorFieldAlgebra, seed: u64) -> Result<NormalizationResult> {
    let report = stabilizer_report(algebra, seed)?;
    normalize_affine_at(algebra, report)
}

/// Affine normalization from an existing stabilizer report.
pub fn normalize_affine_at(
    algebra: &VectorFieldAlgebra,
    report: StabilizerReport,
) -> Result<NormalizationResult> {
    let n = algebra.chart().dimension();
    if n < 2 {
        return Err(Error::WrongNormalizationMode {
            required: "chart dimension >= 2 (use the curve normalizer on curves)".into(),
            got: "dimension 1".into(),
        });
    }
    let s = algebra.structure();
    let verdict = classify_morozov(s, &report.isotropy)?;
    if verdict.tag != MorozovTag::Affine {
        return Err(Error::WrongNormalizationMode {
            required: "Affine".into(),
            got: verdict.tag.to_string(),
        });
    }
    let radical = verdict
        .affine_radical
        .expect("affine verdict carries its radical");
    let (m_fields, h_fields) =
        adjusted_splitting(algebra, &report.isotropy, &radical, &report.point)?;
    let v0 = build_v0(&m_fields, &h_fields, &report.point)?;

    let target = Chart::canonical(n);
    let phi = RationalMap::new(algebra.chart().clone(), target.clone(), v0)?;
    let mut span_basis = vec![RationalFunction::one(algebra.chart().vars().clone())];
    span_basis.extend(phi.entries().iter().cloned());

    let mut transformed = Vec::with_capacity(algebra.dim());
    let mut flags = Vec::with_capacity(algebra.dim());
    for (fi, field) in algebra.basis().iter().enumerate() {
        let mut coeffs = Vec::with_capacity(n);
        for (ei, entry) in phi.entries().iter().enumerate() {
            let derived = field.apply(entry)?;
            let coords = express_in_constant_span(&derived, &span_basis).ok_or(
                Error::RelatednessSolveFailed {
                    field: fi,
                    entry: ei,
                },
            )?;
            let mut poly = Polynomial::constant(target.vars().clone(), coords[0].clone());
            for (j, c) in coords[1..].iter().enumerate() {
                if !c.is_zero() {
                    poly = poly.add(&Polynomial::var(target.vars().clone(), j).scale(c));
                }
            }
            coeffs.push(RationalFunction::from_polynomial(poly));
        }
        let w = VectorField::new(target.clone(), coeffs);
        flags.push(verify_phi_related(field, &phi, &w));
        transformed.push(w);
    }
    if flags.iter().any(|f| !f) {
        return Err(Error::IdentityViolation(
            "affine relatedness flag failed".into(),
        ));
    }
    Ok(NormalizationResult {
        mode: NormalizationMode::Affine,
        map: phi,
        transformed_basis: transformed,
        related_flags: flags,
        sign: 1,
    })
}

/// Splits the algebra as h ⊕ m with the m-basis normalized so that its
/// evaluations at the base point form the identity matrix.
pub fn adjusted_splitting(
    algebra: &VectorFieldAlgebra,
    h: &SubalgebraSpec,
    radical: &SubalgebraSpec,
    point: &BasePoint,
) -> Result<(Vec<VectorField>, Vec<VectorField>)> {
    let n = algebra.chart().dimension();
    if radical.dim() != n {
        return Err(Error::DimensionMismatch(
            "radical dimension != chart dimension".into(),
        ));
    }
    let raw: Vec<VectorField> = radical
        .basis()
        .iter()
        .map(|c| algebra.field_from_coords(c))
        .collect();
    let eval = Matrix::from_rows(
        raw.iter()
            .map(|f| f.eval(&point.coords))
            .collect::<Result<Vec<_>>>()?,
    );
    let inv = eval.inverse().ok_or(Error::InvalidPoint)?;
    let m_fields: Vec<VectorField> = (0..n)
        .map(|i| {
            let coords: Vec<Rational> = (0..n).map(|j| inv.at(i, j).clone()).collect();
            VectorField::linear_combination(algebra.chart(), &raw, &coords)
        })
        .collect();
    let h_fields: Vec<VectorField> = h
        .basis()
        .iter()
        .map(|c| algebra.field_from_coords(c))
        .collect();
    Ok((m_fields, h_fields))
}

/// Convenience wrapper used by tests and the command-line front end: runs
/// the stabilizer pipeline at an explicit base point.
pub fn normalize_affine_at_point(
    algebra: &VectorFieldAlgebra,
    point: BasePoint,
) -> Result<NormalizationResult> {
    let report = stabilizer_report_at(algebra, point)?;
    normalize_affine_at(algebra, report)
}
