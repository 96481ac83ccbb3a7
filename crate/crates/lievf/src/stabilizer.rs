//! Generic-point machinery: transitivity, isotropy subalgebra, normalizer of
//! the isotropy, zero-locus tangent space, and the exact-sequence dimension
//! identities relating them. Also bounded-degree normalizer and centralizer
//! computations in the ambient polynomial fields.

use crate::error::{Error, Result};
use crate::structure::{StructureConstants, SubalgebraSpec, VectorFieldAlgebra};
use crate::symbolic::{nullspace, Matrix, Monomial, Polynomial, Rational, Subspace, Vars};
use crate::vector_fields::{Chart, VectorField};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

const MAX_POINT_ATTEMPTS: usize = 400;

/// What was checked to accept a base point as sufficiently general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCertificate {
    /// rank of the coefficient matrix over the function field
    pub generic_rank: usize,
    /// the same rank is attained by the evaluation matrix at the point
    pub rank_at_point: usize,
    /// nonconstant denominators verified nonzero at the point
    pub denominators: Vec<Polynomial>,
}

/// A rational base point together with its genericity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoint {
    pub chart: Chart,
    pub coords: Vec<Rational>,
    pub certificate: GenericityCertificate,
}

/// Transitivity: the coefficient matrix has full rank n over the function
/// field, i.e. the algebra contains a function-field basis of all fields.
pub fn is_transitive(algebra: &VectorFieldAlgebra) -> bool {
    algebra.coefficient_matrix().rank() == algebra.chart().dimension()
}

/// Deterministic pseudorandom rational point with small coordinates, retried
/// with growing height until every coefficient denominator is nonzero and
/// the evaluation matrix attains the symbolic generic rank.
pub fn pick_generic_point(algebra: &VectorFieldAlgebra, seed: u64) -> Result<BasePoint> {
    pick_generic_point_with_budget(algebra, seed, MAX_POINT_ATTEMPTS)
}

/// Same search with an explicit retry budget.
pub fn pick_generic_point_with_budget(
    algebra: &VectorFieldAlgebra,
    seed: u64,
    attempts: usize,
) -> Result<BasePoint> {
    let n = algebra.chart().dimension();
    let generic_rank = algebra.coefficient_matrix().rank();
    let mut denominators: Vec<Polynomial> = Vec::new();
    for field in algebra.basis() {
        for c in field.coeffs() {
            let d = c.denominator();
            if !d.is_constant() && !denominators.contains(d) {
                denominators.push(d.clone());
            }
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        let height = 1 + (attempt / 10) as i64;
        let coords: Vec<Rational> = (0..n)
            .map(|_| {
                Rational::new(
                    BigInt::from(rng.gen_range(-height..=height)),
                    BigInt::from(rng.gen_range(1..=height)),
                )
            })
            .collect();
        if denominators.iter().any(|d| d.eval(&coords).is_zero()) {
            continue;
        }
        let eval = match algebra.evaluation_matrix(&coords) {
            Ok(m) => m,
            Err(_) => continue,
        };
        if eval.rank() != generic_rank {
            continue;
        }
        return Ok(BasePoint {
            chart: algebra.chart().clone(),
            coords,
            certificate: GenericityCertificate {
                generic_rank,
                rank_at_point: generic_rank,
                denominators,
            },
        });
    }
    Err(Error::PointSearchExhausted {
        attempts: MAX_POINT_ATTEMPTS,
    })
}

/// Builds a base point from explicit coordinates, checking the same
/// genericity conditions as `pick_generic_point`.
pub fn base_point_at(algebra: &VectorFieldAlgebra, coords: Vec<Rational>) -> Result<BasePoint> {
    let generic_rank = algebra.coefficient_matrix().rank();
    let mut denominators = Vec::new();
    for field in algebra.basis() {
        for c in field.coeffs() {
            let d = c.denominator();
            if !d.is_constant() {
                if d.eval(&coords).is_zero() {
                    return Err(Error::InvalidPoint);
                }
                if !denominators.contains(d) {
                    denominators.push(d.clone());
                }
            }
        }
    }
    let eval = algebra
        .evaluation_matrix(&coords)
        .map_err(|_| Error::InvalidPoint)?;
    if eval.rank() != generic_rank {
        return Err(Error::InvalidPoint);
    }
    Ok(BasePoint {
        chart: algebra.chart().clone(),
        coords,
        certificate: GenericityCertificate {
            generic_rank,
            rank_at_point: generic_rank,
            denominators,
        },
    })
}

/// Isotropy subalgebra at a valid point: the kernel of the evaluation map.
pub fn isotropy_at(algebra: &VectorFieldAlgebra, point: &BasePoint) -> Result<SubalgebraSpec> {
    if point.chart != *algebra.chart() {
        return Err(Error::ChartMismatch);
    }
    let eval = algebra
        .evaluation_matrix(&point.coords)
        .map_err(|_| Error::InvalidPoint)?;
    if eval.rank() != point.certificate.generic_rank {
        return Err(Error::InvalidPoint);
    }
    let kernel = nullspace(&eval.transpose());
    let space = Subspace::from_vectors(algebra.dim(), &kernel);
    SubalgebraSpec::from_subspace(algebra.structure(), space)
}

/// Normalizer of `h` in the algebra: `{ v : [v, h] ⊆ h }`, solved through
/// the structure constants.
pub fn normalizer_in_g(structure: &StructureConstants, h: &SubalgebraSpec) -> SubalgebraSpec {
    let m = structure.dim();
    if h.is_zero() {
        return SubalgebraSpec::from_subspace(structure, Subspace::whole(m))
            .expect("whole algebra is closed");
    }
    let ann = h.space().annihilator();
    let mut rows = Vec::new();
    for w in h.basis() {
        // column i = [e_i, w]
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(m);
        for i in 0..m {
            let mut ei = vec![Rational::zero(); m];
            ei[i] = Rational::one();
            cols.push(structure.bracket(&ei, w));
        }
        for a in ann.basis() {
            rows.push((0..m).map(|i| dot(a, &cols[i])).collect::<Vec<Rational>>());
        }
    }
    if rows.is_empty() {
        return SubalgebraSpec::from_subspace(structure, Subspace::whole(m))
            .expect("whole algebra is closed");
    }
    let sol = nullspace(&Matrix::from_rows(rows));
    let space = Subspace::from_vectors(m, &sol);
    SubalgebraSpec::from_subspace(structure, space).expect("normalizer is closed")
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dimension of the Zariski tangent space at the point of the schematic zero
/// locus of `h` (the subscheme cut out by all coefficient functions of the
/// fields in `h`). The chart is recentered at the point first.
pub fn zero_locus_tangent(
    algebra: &VectorFieldAlgebra,
    h: &SubalgebraSpec,
    point: &BasePoint,
) -> Result<usize> {
    let n = algebra.chart().dimension();
    if h.is_zero() {
        return Ok(n);
    }
    let origin = vec![Rational::zero(); n];
    let mut jac_rows: Vec<Vec<Rational>> = Vec::new();
    for coords in h.basis() {
        let field = algebra.field_from_coords(coords).shift(&point.coords);
        for c in field.coeffs() {
            if c.is_zero() {
                continue;
            }
            // denominators are units at the recentered origin, so the local
            // ideal is generated by the numerators
            if c.denominator().eval(&origin).is_zero() {
                return Err(Error::InvalidPoint);
            }
            let g = c.numerator();
            debug_assert!(
                g.eval(&origin).is_zero(),
                "h fields vanish at the base point"
            );
            jac_rows.push((0..n).map(|j| g.partial(j).eval(&origin)).collect());
        }
    }
    if jac_rows.is_empty() {
        return Ok(n);
    }
    let rank = Matrix::from_rows(jac_rows).rank();
    Ok(n - rank)
}

/// The assembled generic-point analysis with both dimension identities
/// asserted: `dim N = dim h + dim T0Z` and `centralizer = dim N - dim h`
/// (these are theorems; a violation is an internal error).
#[derive(Clone, Debug)]
pub struct StabilizerReport {
    pub point: BasePoint,
    pub transitive: bool,
    pub isotropy: SubalgebraSpec,
    pub normalizer: SubalgebraSpec,
    pub zero_locus_tangent_dim: usize,
    pub centralizer_dim: usize,
}

pub fn stabilizer_report(algebra: &VectorFieldAlgebra, seed: u64) -> Result<StabilizerReport> {
    if !is_transitive(algebra) {
        return Err(Error::Invalid(
            "stabilizer report requires a transitive algebra".into(),
        ));
    }
    let point = pick_generic_point(algebra, seed)?;
    stabilizer_report_at(algebra, point)
}

pub fn stabilizer_report_at(
    algebra: &VectorFieldAlgebra,
    point: BasePoint,
) -> Result<StabilizerReport> {
    let isotropy = isotropy_at(algebra, &point)?;
    let normalizer = normalizer_in_g(algebra.structure(), &isotropy);
    let tangent = zero_locus_tangent(algebra, &isotropy, &point)?;
    if normalizer.dim() != isotropy.dim() + tangent {
        return Err(Error::IdentityViolation(format!(
            "dim N (= {}) != dim h (= {}) + dim T0Z (= {})",
            normalizer.dim(),
            isotropy.dim(),
            tangent
        )));
    }
    let centralizer_dim = normalizer.dim() - isotropy.dim();
    Ok(StabilizerReport {
        point,
        transitive: true,
        isotropy,
        normalizer,
        zero_locus_tangent_dim: tangent,
        centralizer_dim,
    })
}

/// Monomials of total degree <= d in grlex-ascending order.
fn monomials_up_to(vars: &Vars, d: u32) -> Vec<Monomial> {
    let n = vars.len();
    let mut out: Vec<Monomial> = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(pos: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == cur.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=remaining {
            cur[pos] = e;
            rec(pos + 1, remaining - e, cur, out);
            cur[pos] = 0;
        }
    }
    rec(0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// The normalizer of the algebra inside the ambient space of polynomial
/// vector fields of total degree <= `degree_bound`, with the derivation each
/// element induces on the algebra.
#[derive(Clone, Debug)]
pub struct AmbientNormalizer {
    pub degree_bound: u32,
    pub fields: Vec<VectorField>,
    /// derivation matrix induced by each field (columns are images)
    pub derivations: Vec<Matrix<Rational>>,
}

pub fn normalizer_in_ambient(
    algebra: &VectorFieldAlgebra,
    degree_bound: u32,
) -> Result<AmbientNormalizer> {
    ambient_solve(algebra, degree_bound, true).map(|(fields, ders)| AmbientNormalizer {
        degree_bound,
        fields,
        derivations: ders,
    })
}

/// Polynomial fields of degree <= `degree_bound` commuting with the whole
/// algebra.
pub fn centralizer_in_ambient(
    algebra: &VectorFieldAlgebra,
    degree_bound: u32,
) -> Result<Vec<VectorField>> {
    ambient_solve(algebra, degree_bound, false).map(|(fields, _)| fields)
}

fn ambient_solve(
    algebra: &VectorFieldAlgebra,
    degree_bound: u32,
    allow_span: bool,
) -> Result<(Vec<VectorField>, Vec<Matrix<Rational>>)> {
    let chart = algebra.chart();
    let n = chart.dimension();
    let m = algebra.dim();
    for f in algebra.basis() {
        if !f.has_polynomial_coeffs() {
            return Err(Error::NonPolynomial);
        }
    }
    let monomials = monomials_up_to(chart.vars(), degree_bound);
    let nmono = monomials.len();
    let ambient_dim = n * nmono; // unknown u[t * nmono + b]
    let lambda_dim = if allow_span { m * m } else { 0 }; // unknown l[i * m + k]
    let total = ambient_dim + lambda_dim;

    // precompute brackets of ambient generators with each basis field
    let gen_field = |t: usize, b: usize| -> VectorField {
        let mut coeffs = vec![crate::symbolic::RationalFunction::zero(chart.vars().clone()); n];
        coeffs[t] = crate::symbolic::RationalFunction::from_polynomial(Polynomial::from_terms(
            chart.vars().clone(),
            [(monomials[b].clone(), Rational::one())],
        ));
        VectorField::new(chart.clone(), coeffs)
    };

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, basis_field) in algebra.basis().iter().enumerate() {
        // coefficient polynomials, indexed [unknown][coordinate]
        let mut contribs: Vec<Vec<Polynomial>> = Vec::with_capacity(total);
        for t in 0..n {
            for b in 0..nmono {
                let br = gen_field(t, b).bracket(basis_field)?;
                contribs.push(
                    br.coeffs()
                        .iter()
                        .map(|c| {
                            c.as_polynomial()
                                .expect("brackets of polynomial fields are polynomial")
                        })
                        .collect(),
                );
            }
        }
        if allow_span {
            for k in 0..m {
                // subtract lambda_{ik} * b_k; only lambda with this i appear
                let negk: Vec<Polynomial> = algebra.basis()[k]
                    .coeffs()
                    .iter()
                    .map(|c| c.as_polynomial().expect("polynomial basis").neg())
                    .collect();
                contribs.push(negk);
            }
        }
        // collect monomials per coordinate and emit rows
        for j in 0..n {
            let mut seen: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
            for c in &contribs {
                for (mon, _) in c[j].terms() {
                    seen.insert(mon.clone());
                }
            }
            for mon in seen {
                let mut row = vec![Rational::zero(); total];
                for (u, c) in contribs.iter().enumerate() {
                    let col = if u < ambient_dim || !allow_span {
                        u
                    } else {
                        // lambda block for this i starts at ambient_dim + i*m
                        ambient_dim + i * m + (u - ambient_dim)
                    };
                    if let Some((_, coeff)) = c[j].terms().find(|(mm, _)| **mm == mon) {
                        row[col] = coeff.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }

    let solutions = if rows.is_empty() {
        // no constraints: the whole ambient space qualifies
        let mut id = Vec::new();
        for u in 0..total {
            let mut v = vec![Rational::zero(); total];
            v[u] = Rational::one();
            id.push(v);
        }
        id
    } else {
        nullspace(&Matrix::from_rows(rows))
    };

    let mut fields = Vec::new();
    let mut ders = Vec::new();
    for sol in solutions {
        let mut coeffs = Vec::with_capacity(n);
        for t in 0..n {
            let poly = Polynomial::from_terms(
                chart.vars().clone(),
                monomials
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| !sol[t * nmono + *b].is_zero())
                    .map(|(b, mon)| (mon.clone(), sol[t * nmono + b].clone())),
            );
            coeffs.push(crate::symbolic::RationalFunction::from_polynomial(poly));
        }
        let field = VectorField::new(chart.clone(), coeffs);
        if field.is_zero() {
            // pure-lambda solutions cannot occur for an independent basis
            continue;
        }
        if allow_span {
            let mut d = Matrix::zeros(m, m, &Rational::zero());
            for i in 0..m {
                for k in 0..m {
                    *d.at_mut(k, i) = sol[ambient_dim + i * m + k].clone();
                }
            }
            ders.push(d);
        }
        fields.push(field);
    }
    Ok((fields, ders))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{rat_int, Vars};

    fn plane() -> Chart {
        Chart::new(Vars::new(["x", "y"]))
    }

    fn line() -> Chart {
        Chart::new(Vars::new(["z"]))
    }

    fn sl2() -> VectorFieldAlgebra {
        VectorFieldAlgebra::parse(&line(), &[vec!["1"], vec!["z"], vec!["z^2"]]).unwrap()
    }

    fn heis_like() -> VectorFieldAlgebra {
        VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"], vec!["x", "0"]])
            .unwrap()
    }

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&sl2()));
        let single = VectorFieldAlgebra::parse(&line(), &[vec!["z"]]).unwrap();
        assert!(is_transitive(&single));
        let not = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["x", "0"]]).unwrap();
        assert!(!is_transitive(&not));
    }

    #[test]
    fn generic_points_avoid_degeneracies() {
        // {z dz}: the origin is rejected, any nonzero point qualifies
        let a = VectorFieldAlgebra::parse(&line(), &[vec!["z"]]).unwrap();
        let p = pick_generic_point(&a, 1).unwrap();
        assert!(!p.coords[0].is_zero());
        assert_eq!(p.certificate.generic_rank, 1);
        // a non-transitive algebra still gets a max-rank certificate
        let b = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["x", "0"]]).unwrap();
        let p = pick_generic_point(&b, 1).unwrap();
        assert_eq!(p.certificate.generic_rank, 1);
        // {dx, dy}: any point works
        let c = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        let p = pick_generic_point(&c, 0).unwrap();
        assert_eq!(p.certificate.generic_rank, 2);
        assert!(p.certificate.denominators.is_empty());
    }

    #[test]
    fn isotropy_examples() {
        // sl2 at the origin: span{z dz, z^2 dz}
        let a = sl2();
        let p = base_point_at(&a, vec![rat_int(0)]).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.contains(&q(&[0, 1, 0])));
        assert!(h.contains(&q(&[0, 0, 1])));
        // {dx, dy, x dx} at the origin: span{x dx}
        let b = heis_like();
        let p = base_point_at(&b, q(&[0, 0])).unwrap();
        let h = isotropy_at(&b, &p).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.contains(&q(&[0, 0, 1])));
    }

    #[test]
    fn normalizer_examples() {
        // sl2, h = Borel: N = h
        let s = sl2().structure().clone();
        let borel = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        assert_eq!(normalizer_in_g(&s, &borel), borel);
        // abelian, h = 0: N = everything
        let ab = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        let h0 = SubalgebraSpec::zero(2);
        assert_eq!(normalizer_in_g(ab.structure(), &h0).dim(), 2);
        // {dx, dy, x dx}, h = span{x dx}: N = span{x dx, dy}
        let s3 = heis_like().structure().clone();
        let h = SubalgebraSpec::new(&s3, &[q(&[0, 0, 1])]).unwrap();
        let n = normalizer_in_g(&s3, &h);
        assert_eq!(n.dim(), 2);
        assert!(n.contains(&q(&[0, 1, 0])));
        assert!(n.contains(&q(&[0, 0, 1])));
    }

    #[test]
    fn zero_locus_examples() {
        // h = span{x dx} on the plane at the origin: ideal (x), tangent dim 1
        let b = heis_like();
        let p = base_point_at(&b, q(&[0, 0])).unwrap();
        let h = SubalgebraSpec::new(b.structure(), &[q(&[0, 0, 1])]).unwrap();
        assert_eq!(zero_locus_tangent(&b, &h, &p).unwrap(), 1);
        // Borel of sl2 at 0: ideal (z), tangent dim 0
        let a = sl2();
        let p = base_point_at(&a, q(&[0])).unwrap();
        let borel = SubalgebraSpec::new(a.structure(), &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        assert_eq!(zero_locus_tangent(&a, &borel, &p).unwrap(), 0);
        // h = 0: tangent dim n
        let h0 = SubalgebraSpec::zero(3);
        assert_eq!(zero_locus_tangent(&b, &h0, &p).unwrap(), 2);
    }

    #[test]
    fn report_dimension_identities() {
        // {dx, dy, x dx}: dims (h, N, T0Z, C) = (1, 2, 1, 1)
        let r = stabilizer_report(&heis_like(), 7).unwrap();
        assert_eq!(
            (
                r.isotropy.dim(),
                r.normalizer.dim(),
                r.zero_locus_tangent_dim,
                r.centralizer_dim
            ),
            (1, 2, 1, 1)
        );
        // sl2 on the line: dims (2, 2, 0, 0)
        let r = stabilizer_report(&sl2(), 7).unwrap();
        assert_eq!(
            (
                r.isotropy.dim(),
                r.normalizer.dim(),
                r.zero_locus_tangent_dim,
                r.centralizer_dim
            ),
            (2, 2, 0, 0)
        );
    }

    #[test]
    fn gl2_affine_report() {
        // gl2 ⋉ C^2: dims (4, 4, 0, 0)
        let a = VectorFieldAlgebra::parse(
            &plane(),
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
        let r = stabilizer_report(&a, 3).unwrap();
        assert_eq!(
            (
                r.isotropy.dim(),
                r.normalizer.dim(),
                r.zero_locus_tangent_dim,
                r.centralizer_dim
            ),
            (4, 4, 0, 0)
        );
    }

    #[test]
    fn isotropy_dimension_is_point_independent() {
        let a = heis_like();
        let p1 = pick_generic_point(&a, 1).unwrap();
        let p2 = pick_generic_point(&a, 99).unwrap();
        assert_ne!(p1.coords, p2.coords);
        let h1 = isotropy_at(&a, &p1).unwrap();
        let h2 = isotropy_at(&a, &p2).unwrap();
        assert_eq!(h1.dim(), h2.dim());
    }

    #[test]
    fn ambient_normalizer_of_sl2_is_sl2() {
        let a = sl2();
        let amb = normalizer_in_ambient(&a, 3).unwrap();
        assert_eq!(amb.fields.len(), 3);
        // every element induces a derivation (Leibniz holds exactly)
        for d in &amb.derivations {
            assert!(a.structure().is_derivation(d));
        }
    }

    #[test]
    fn ambient_normalizer_of_translation_line() {
        // {dx} with degree bound 1: all fields (a + b x) dx normalize
        let c1 = Chart::new(Vars::new(["x"]));
        let a = VectorFieldAlgebra::parse(&c1, &[vec!["1"]]).unwrap();
        let amb = normalizer_in_ambient(&a, 1).unwrap();
        assert_eq!(amb.fields.len(), 2);
    }

    #[test]
    fn ambient_normalizer_of_abelian_plane_degree_zero() {
        let ab = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        let amb = normalizer_in_ambient(&ab, 0).unwrap();
        assert_eq!(amb.fields.len(), 2);
    }

    #[test]
    fn centralizer_matches_report_dimension() {
        // {dx, dy, x dx}: centralizer in the ambient = span{dy}
        let a = heis_like();
        let cent = centralizer_in_ambient(&a, 4).unwrap();
        assert_eq!(cent.len(), 1);
        let dy = VectorField::parse(&plane(), &["0", "1"]).unwrap();
        assert_eq!(cent[0], dy);
        let r = stabilizer_report(&a, 5).unwrap();
        assert_eq!(cent.len(), r.centralizer_dim);
    }

    #[test]
    fn trivial_normalizer_forces_trivial_centralizer() {
        // sl2: N_g(h) = h, so the bounded-degree centralizer must vanish
        for d in 0..=4 {
            assert!(centralizer_in_ambient(&sl2(), d).unwrap().is_empty());
        }
    }

    #[test]
    fn ambient_kernel_is_the_centralizer() {
        // elements of the ambient normalizer inducing the zero derivation
        // form exactly the bounded-degree centralizer
        let a = heis_like();
        let amb = normalizer_in_ambient(&a, 2).unwrap();
        let zero_der: Vec<&VectorField> = amb
            .fields
            .iter()
            .zip(&amb.derivations)
            .filter(|(_, d)| (0..3).all(|i| (0..3).all(|j| d.at(i, j).is_zero())))
            .map(|(f, _)| f)
            .collect();
        let cent = centralizer_in_ambient(&a, 2).unwrap();
        assert_eq!(zero_der.len(), cent.len());
    }
}
