//! Lie-theoretic structure of a concrete or abstract algebra: structure
//! constants, center, derived algebra, Killing form, semisimplicity,
//! derivations, completeness, and ideal computations.

use crate::error::{Error, Result};
use crate::symbolic::{
    constant_span_rank, coordinates_in, express_vectors_in_constant_span, nullspace, Matrix,
    Rational, RationalFunction, Subspace,
};
use crate::vector_fields::{Chart, VectorField};
use num_traits::Zero;

/// Structure-constant tensor `c[i][j][k]` with `[e_i, e_j] = sum_k c[i][j][k] e_k`.
/// Antisymmetry and the Jacobi identity are validated at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Vec<Vec<Rational>>>,
}

impl StructureConstants {
    pub fn new(c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let m = c.len();
        for (i, ci) in c.iter().enumerate() {
            if ci.len() != m {
                return Err(Error::DimensionMismatch(format!("tensor row {i}")));
            }
            for (j, cij) in ci.iter().enumerate() {
                if cij.len() != m {
                    return Err(Error::DimensionMismatch(format!("tensor entry ({i},{j})")));
                }
            }
        }
        let s = StructureConstants { dim: m, c };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        let m = self.dim;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if self.c[i][j][k] != -self.c[j][i][k].clone() {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    for target in 0..m {
                        let mut acc = Rational::zero();
                        for l in 0..m {
                            acc += &self.c[i][j][l] * &self.c[l][k][target];
                            acc += &self.c[j][k][l] * &self.c[l][i][target];
                            acc += &self.c[k][i][l] * &self.c[l][j][target];
                        }
                        if !acc.is_zero() {
                            return Err(Error::JacobiViolation { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &Vec<Vec<Vec<Rational>>> {
        &self.c
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let m = self.dim;
        let mut out = vec![Rational::zero(); m];
        for i in 0..m {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if b[j].is_zero() {
                    continue;
                }
                let f = &a[i] * &b[j];
                for k in 0..m {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &f * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(v)` in the defining basis (columns are images).
    pub fn ad(&self, v: &[Rational]) -> Matrix<Rational> {
        let m = self.dim;
        let mut out = Matrix::zeros(m, m, &Rational::zero());
        for j in 0..m {
            let mut ej = vec![Rational::zero(); m];
            ej[j] = num_traits::One::one();
            let col = self.bracket(v, &ej);
            for k in 0..m {
                *out.at_mut(k, j) = col[k].clone();
            }
        }
        out
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = num_traits::One::one();
        self.ad(&v)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().flatten().all(Zero::is_zero)
    }

    /// Killing form `K(e_i, e_j) = Tr(ad e_i ∘ ad e_j)`.
    pub fn killing_form(&self) -> Matrix<Rational> {
        let ads: Vec<Matrix<Rational>> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim, &Rational::zero());
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].matmul(&ads[j]).trace();
                *k.at_mut(i, j) = t.clone();
                *k.at_mut(j, i) = t;
            }
        }
        k
    }

    /// Cartan's criterion: nondegenerate Killing form. The verdict over Q
    /// equals the verdict over any extension field.
    pub fn is_semisimple(&self) -> bool {
        !self.killing_form().det().is_zero()
    }

    /// The center as a subalgebra: common kernel of the adjoint maps.
    pub fn center(&self) -> SubalgebraSpec {
        let m = self.dim;
        let mut rows = Vec::with_capacity(m * m);
        for j in 0..m {
            for k in 0..m {
                rows.push((0..m).map(|i| self.c[i][j][k].clone()).collect());
            }
        }
        let mat = Matrix::from_rows(rows);
        let space = Subspace::from_vectors(m, &nullspace(&mat));
        SubalgebraSpec::from_subspace(self, space).expect("center is closed")
    }

    /// Span of all brackets; an ideal, hence closed.
    pub fn derived_algebra(&self) -> SubalgebraSpec {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                vecs.push(self.c[i][j].clone());
            }
        }
        let space = Subspace::from_vectors(self.dim, &vecs);
        SubalgebraSpec::from_subspace(self, space).expect("derived algebra is closed")
    }

    /// Deterministic basis of the derivation algebra: the solution space of
    /// the Leibniz system `D[v,w] = [Dv,w] + [v,Dw]` in m^2 unknowns.
    pub fn derivations(&self) -> Vec<Matrix<Rational>> {
        let m = self.dim;
        // unknown D[a][k] at flat index a*m + k
        let mut rows = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                for a in 0..m {
                    let mut row = vec![Rational::zero(); m * m];
                    for k in 0..m {
                        row[a * m + k] += &self.c[i][j][k];
                    }
                    for b in 0..m {
                        row[b * m + i] -= &self.c[b][j][a];
                        row[b * m + j] -= &self.c[i][b][a];
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            // 1-dimensional algebra: every linear map is a derivation
            return vec![Matrix::identity(m, &Rational::zero())];
        }
        let mat = Matrix::from_rows(rows);
        nullspace(&mat)
            .into_iter()
            .map(|flat| {
                let mut d = Matrix::zeros(m, m, &Rational::zero());
                for a in 0..m {
                    for k in 0..m {
                        *d.at_mut(a, k) = flat[a * m + k].clone();
                    }
                }
                d
            })
            .collect()
    }

    /// Checks the Leibniz rule for one matrix exactly.
    pub fn is_derivation(&self, d: &Matrix<Rational>) -> bool {
        let m = self.dim;
        for i in 0..m {
            for j in 0..m {
                let ei: Vec<Rational> = (0..m)
                    .map(|k| {
                        if k == i {
                            num_traits::One::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                let ej: Vec<Rational> = (0..m)
                    .map(|k| {
                        if k == j {
                            num_traits::One::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                let lhs = d.apply(&self.c[i][j]);
                let rhs1 = self.bracket(&d.apply(&ei), &ej);
                let rhs2 = self.bracket(&ei, &d.apply(&ej));
                for k in 0..m {
                    if lhs[k] != &rhs1[k] + &rhs2[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Completeness: trivial center and every derivation inner.
    pub fn completeness(&self) -> CompletenessReport {
        let center_dim = self.center().dim();
        let ders = self.derivations();
        let derivation_dim = ders.len();
        let ads: Vec<Vec<Rational>> = (0..self.dim).map(|i| flatten(&self.ad_basis(i))).collect();
        let inner_dim = Subspace::from_vectors(self.dim * self.dim, &ads).dim();
        let ad_spans_derivations = {
            let inner = Subspace::from_vectors(self.dim * self.dim, &ads);
            ders.iter().all(|d| inner.contains(&flatten(d)))
        };
        CompletenessReport {
            complete: center_dim == 0 && derivation_dim == self.dim && ad_spans_derivations,
            center_dim,
            derivation_dim,
            inner_dim,
            ad_spans_derivations,
        }
    }

    /// Largest ideal of the algebra contained in `h`: the fixpoint of
    /// `k_{i+1} = { v in k_i : [g, v] ⊆ k_i }` starting at `k_0 = h`.
    pub fn largest_ideal_inside(&self, h: &SubalgebraSpec) -> SubalgebraSpec {
        let m = self.dim;
        let mut k = h.space().clone();
        loop {
            if k.is_zero() {
                break;
            }
            let ann = k.annihilator();
            let basis = k.basis();
            let mut rows = Vec::new();
            for j in 0..m {
                let adj = self.ad_basis(j);
                for w in ann.basis() {
                    // row_l = < w, ad_j b_l >
                    rows.push(
                        basis
                            .iter()
                            .map(|b| {
                                let img = adj.apply(b);
                                dot(w, &img)
                            })
                            .collect::<Vec<Rational>>(),
                    );
                }
            }
            if rows.is_empty() {
                break; // k is the whole space and stable
            }
            let sol = nullspace(&Matrix::from_rows(rows));
            let next_vecs: Vec<Vec<Rational>> =
                sol.iter().map(|alpha| combine(basis, alpha)).collect();
            let next = Subspace::from_vectors(m, &next_vecs);
            if next.dim() == k.dim() {
                break;
            }
            k = next;
        }
        SubalgebraSpec::from_subspace(self, k).expect("an ideal is closed")
    }

    /// Quotient by an ideal: structure constants of `g/k` in the basis of
    /// standard vectors at the non-pivot coordinates of `k`.
    pub fn quotient_by_ideal(&self, k: &SubalgebraSpec) -> Result<QuotientData> {
        let m = self.dim;
        let pivots = k.space().pivot_columns();
        let complement: Vec<usize> = (0..m).filter(|i| !pivots.contains(i)).collect();
        let d = complement.len();
        // generators: k basis then complement standard vectors = basis of Q^m
        let mut gens: Vec<Vec<Rational>> = k.space().basis().to_vec();
        for &i in &complement {
            let mut e = vec![Rational::zero(); m];
            e[i] = num_traits::One::one();
            gens.push(e);
        }
        let kdim = k.dim();
        let project = |v: &[Rational]| -> Result<Vec<Rational>> {
            let coords = coordinates_in(&gens, v)
                .ok_or_else(|| Error::Invalid("quotient projection failed".into()))?;
            Ok(coords[kdim..].to_vec())
        };
        let mut c = vec![vec![vec![Rational::zero(); d]; d]; d];
        for (a, &i) in complement.iter().enumerate() {
            for (b, &j) in complement.iter().enumerate() {
                let mut ei = vec![Rational::zero(); m];
                ei[i] = num_traits::One::one();
                let mut ej = vec![Rational::zero(); m];
                ej[j] = num_traits::One::one();
                let br = self.bracket(&ei, &ej);
                c[a][b] = project(&br)?;
            }
        }
        let structure = StructureConstants::new(c)?;
        let mut projection = Matrix::zeros(d, m, &Rational::zero());
        for i in 0..m {
            let mut e = vec![Rational::zero(); m];
            e[i] = num_traits::One::one();
            let p = project(&e)?;
            for r in 0..d {
                *projection.at_mut(r, i) = p[r].clone();
            }
        }
        Ok(QuotientData {
            structure,
            complement,
            projection,
        })
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(basis: &[Vec<Rational>], coords: &[Rational]) -> Vec<Rational> {
    let m = basis.first().map_or(0, |b| b.len());
    let mut out = vec![Rational::zero(); m];
    for (b, c) in basis.iter().zip(coords) {
        for i in 0..m {
            out[i] += c * &b[i];
        }
    }
    out
}

fn flatten(m: &Matrix<Rational>) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        out.extend(m.row(i).iter().cloned());
    }
    out
}

/// Completeness verdict with its supporting dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub complete: bool,
    pub center_dim: usize,
    pub derivation_dim: usize,
    pub inner_dim: usize,
    pub ad_spans_derivations: bool,
}

/// Quotient of an algebra by an ideal, with the projection map.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub structure: StructureConstants,
    /// coordinates of the parent basis vectors representing the quotient basis
    pub complement: Vec<usize>,
    /// d x m matrix sending parent coordinates to quotient coordinates
    pub projection: Matrix<Rational>,
}

/// A subspace of coordinate vectors closed under the parent bracket.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubalgebraSpec {
    parent_dim: usize,
    space: Subspace,
}

impl SubalgebraSpec {
    /// Validates independence and closure of an explicit basis.
    pub fn new(parent: &StructureConstants, basis: &[Vec<Rational>]) -> Result<Self> {
        for v in basis {
            if v.len() != parent.dim() {
                return Err(Error::DimensionMismatch("subalgebra vector length".into()));
            }
        }
        let space = Subspace::from_vectors(parent.dim(), basis);
        if space.dim() != basis.len() {
            return Err(Error::NotIndependent);
        }
        Self::from_subspace(parent, space)
    }

    /// Validates closure of a canonical subspace.
    pub fn from_subspace(parent: &StructureConstants, space: Subspace) -> Result<Self> {
        let b = space.basis();
        for x in b {
            for y in b {
                if !space.contains(&parent.bracket(x, y)) {
                    return Err(Error::NotASubalgebra);
                }
            }
        }
        Ok(SubalgebraSpec {
            parent_dim: parent.dim(),
            space,
        })
    }

    pub fn zero(parent_dim: usize) -> Self {
        SubalgebraSpec {
            parent_dim,
            space: Subspace::zero(parent_dim),
        }
    }

    pub fn parent_dim(&self) -> usize {
        self.parent_dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        self.space.basis()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.space.contains(v)
    }
}

/// Ordered basis of vector fields spanning a finite-dimensional Lie algebra,
/// with cached structure constants certifying closure.
#[derive(Clone, Debug)]
pub struct VectorFieldAlgebra {
    chart: Chart,
    basis: Vec<VectorField>,
    structure: StructureConstants,
}

impl VectorFieldAlgebra {
    pub fn new(chart: Chart, basis: Vec<VectorField>) -> Result<Self> {
        for f in &basis {
            if f.chart() != &chart {
                return Err(Error::ChartMismatch);
            }
        }
        let structure = structure_constants(&basis)?;
        Ok(VectorFieldAlgebra {
            chart,
            basis,
            structure,
        })
    }

    pub fn parse(chart: &Chart, fields: &[Vec<&str>]) -> Result<Self> {
        let basis = fields
            .iter()
            .map(|coeffs| VectorField::parse(chart, coeffs))
            .collect::<Result<Vec<_>>>()?;
        VectorFieldAlgebra::new(chart.clone(), basis)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[VectorField] {
        &self.basis
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.structure
    }

    pub fn field_from_coords(&self, coords: &[Rational]) -> VectorField {
        VectorField::linear_combination(&self.chart, &self.basis, coords)
    }

    /// m x n matrix of coefficient functions (row = basis field).
    pub fn coefficient_matrix(&self) -> Matrix<RationalFunction> {
        Matrix::from_rows(self.basis.iter().map(|f| f.coeffs().to_vec()).collect())
    }

    /// m x n matrix of evaluations at a point.
    pub fn evaluation_matrix(&self, point: &[Rational]) -> Result<Matrix<Rational>> {
        Ok(Matrix::from_rows(
            self.basis
                .iter()
                .map(|f| f.eval(point))
                .collect::<Result<Vec<_>>>()?,
        ))
    }
}

/// Certifies closure of a list of fields under the bracket and returns the
/// structure-constant tensor. Rational-function identities are decided by
/// canonical-form equality after clearing denominators, never by sampling.
pub fn structure_constants(fields: &[VectorField]) -> Result<StructureConstants> {
    let m = fields.len();
    if m == 0 {
        return Err(Error::DimensionMismatch("empty basis".into()));
    }
    let tuples: Vec<&[RationalFunction]> = fields.iter().map(|f| f.coeffs()).collect();
    if constant_span_rank(&tuples) != m {
        return Err(Error::NotIndependent);
    }
    let mut c = vec![vec![vec![Rational::zero(); m]; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let br = fields[i].bracket(&fields[j])?;
            let coords = express_vectors_in_constant_span(br.coeffs(), &tuples)
                .ok_or(Error::NotClosed { i, j })?;
            for k in 0..m {
                c[i][j][k] = coords[k].clone();
                c[j][i][k] = -coords[k].clone();
            }
        }
    }
    StructureConstants::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{rat_int, Vars};

    fn line() -> Chart {
        Chart::new(Vars::new(["z"]))
    }

    fn plane() -> Chart {
        Chart::new(Vars::new(["x", "y"]))
    }

    pub(crate) fn sl2_fields() -> VectorFieldAlgebra {
        let c = line();
        VectorFieldAlgebra::parse(&c, &[vec!["1"], vec!["z"], vec!["z^2"]]).unwrap()
    }

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn sl2_structure_constants_match_the_standard_relations() {
        // [v1,v2] = v1, [v1,v3] = 2 v2, [v2,v3] = v3
        let a = sl2_fields();
        let c = a.structure().tensor();
        assert_eq!(c[0][1], q(&[1, 0, 0]));
        assert_eq!(c[0][2], q(&[0, 2, 0]));
        assert_eq!(c[1][2], q(&[0, 0, 1]));
    }

    #[test]
    fn abelian_pair_has_zero_tensor() {
        let a = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        assert!(a.structure().is_abelian());
    }

    #[test]
    fn affine_line_tensor() {
        // {d/dx, x d/dx} on the line: c[2][1][1] = -1, i.e. [x dx, dx] = -dx
        let c1 = Chart::new(Vars::new(["x"]));
        let a = VectorFieldAlgebra::parse(&c1, &[vec!["1"], vec!["x"]]).unwrap();
        assert_eq!(a.structure().tensor()[1][0], q(&[-1, 0]));
    }

    #[test]
    fn closure_and_independence_failures() {
        let c1 = Chart::new(Vars::new(["x"]));
        let not_closed = VectorFieldAlgebra::parse(&c1, &[vec!["1"], vec!["x^2"]]);
        assert!(matches!(not_closed, Err(Error::NotClosed { i: 0, j: 1 })));
        let dependent = VectorFieldAlgebra::parse(&c1, &[vec!["1"], vec!["2"]]);
        assert!(matches!(dependent, Err(Error::NotIndependent)));
    }

    #[test]
    fn corrupted_sl2_tensor_is_rejected() {
        // killing [v2,v3] breaks Jacobi on (v1,v2,v3) while preserving antisymmetry
        let mut c = sl2_fields().structure().tensor().clone();
        c[1][2] = q(&[0, 0, 0]);
        c[2][1] = q(&[0, 0, 0]);
        assert!(matches!(
            StructureConstants::new(c.clone()),
            Err(Error::JacobiViolation { .. })
        ));
        // an antisymmetry violation is caught as well
        let mut c2 = sl2_fields().structure().tensor().clone();
        c2[1][0] = q(&[5, 0, 0]);
        assert!(matches!(
            StructureConstants::new(c2),
            Err(Error::NotAntisymmetric { .. })
        ));
    }

    #[test]
    fn center_examples() {
        // sl2 has trivial center
        assert_eq!(sl2_fields().structure().center().dim(), 0);
        // 2-dimensional abelian: the whole algebra
        let ab = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        assert_eq!(ab.structure().center().dim(), 2);
        // {dx, dy, x dx}: center is the dy line (e2)
        let a =
            VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"], vec!["x", "0"]])
                .unwrap();
        let z = a.structure().center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&q(&[0, 1, 0])));
    }

    #[test]
    fn derivation_dimensions() {
        // dim Der(sl2) = 3 (all inner)
        assert_eq!(sl2_fields().structure().derivations().len(), 3);
        // dim Der of the 1-dimensional abelian algebra = 1
        let one = StructureConstants::new(vec![vec![vec![Rational::zero()]]]).unwrap();
        assert_eq!(one.derivations().len(), 1);
        // dim Der(aff) = 2
        let c1 = Chart::new(Vars::new(["x"]));
        let aff = VectorFieldAlgebra::parse(&c1, &[vec!["1"], vec!["x"]]).unwrap();
        assert_eq!(aff.structure().derivations().len(), 2);
    }

    #[test]
    fn ad_matrices_are_derivations() {
        let s = sl2_fields().structure().clone();
        for i in 0..3 {
            assert!(s.is_derivation(&s.ad_basis(i)));
        }
    }

    #[test]
    fn completeness_verdicts() {
        assert!(sl2_fields().structure().completeness().complete);
        let c1 = Chart::new(Vars::new(["x"]));
        let aff = VectorFieldAlgebra::parse(&c1, &[vec!["1"], vec!["x"]]).unwrap();
        assert!(aff.structure().completeness().complete);
        let one = StructureConstants::new(vec![vec![vec![Rational::zero()]]]).unwrap();
        let rep = one.completeness();
        assert!(!rep.complete);
        assert_eq!(rep.center_dim, 1);
    }

    #[test]
    fn inner_derivations_count_matches_center() {
        // dim(inner) = m - dim(center)
        for s in [
            sl2_fields().structure().clone(),
            VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"], vec!["x", "0"]])
                .unwrap()
                .structure()
                .clone(),
        ] {
            let rep = s.completeness();
            assert_eq!(rep.inner_dim, s.dim() - rep.center_dim);
        }
    }

    #[test]
    fn killing_form_values() {
        let s = sl2_fields().structure().clone();
        let k = s.killing_form();
        assert_eq!(*k.at(1, 1), rat_int(2));
        assert!(s.is_semisimple());
        // aff is not semisimple
        let c1 = Chart::new(Vars::new(["x"]));
        let aff = VectorFieldAlgebra::parse(&c1, &[vec!["1"], vec!["x"]]).unwrap();
        assert!(aff.structure().killing_form().det().is_zero());
        // abelian Killing form is zero
        let ab = VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"]]).unwrap();
        assert!(ab.structure().killing_form().det().is_zero());
    }

    #[test]
    fn largest_ideal_examples() {
        // (sl2, Borel): no ideal inside
        let s = sl2_fields().structure().clone();
        let borel = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        assert!(s.largest_ideal_inside(&borel).is_zero());

        // 2-dim abelian, h = span{e1}: everything is an ideal
        let ab = StructureConstants::new(vec![
            vec![vec![Rational::zero(); 2]; 2],
            vec![vec![Rational::zero(); 2]; 2],
        ])
        .unwrap();
        let h = SubalgebraSpec::new(&ab, &[q(&[1, 0])]).unwrap();
        assert_eq!(ab.largest_ideal_inside(&h), h);

        // aff ⊕ C with h containing the central factor: fixpoint is the factor
        // basis: e1 = dx of aff, e2 = x dx of aff, e3 = central
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        c[0][1][0] = rat_int(1);
        c[1][0][0] = rat_int(-1);
        let s3 = StructureConstants::new(c).unwrap();
        let h = SubalgebraSpec::new(&s3, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        let ideal = s3.largest_ideal_inside(&h);
        assert_eq!(ideal.dim(), 1);
        assert!(ideal.contains(&q(&[0, 0, 1])));
    }

    #[test]
    fn quotient_by_center() {
        // {dx, dy, x dx}: quotient by the center (dy) is the affine algebra
        let a =
            VectorFieldAlgebra::parse(&plane(), &[vec!["1", "0"], vec!["0", "1"], vec!["x", "0"]])
                .unwrap();
        let s = a.structure().clone();
        let z = s.center();
        let qd = s.quotient_by_ideal(&z).unwrap();
        assert_eq!(qd.structure.dim(), 2);
        assert_eq!(qd.complement, vec![0, 2]);
        assert!(!qd.structure.is_abelian());
    }

    #[test]
    fn subalgebra_closure_is_enforced() {
        let s = sl2_fields().structure().clone();
        // span{e1, e3} = span{dz, z^2 dz} is not closed: [e1,e3] = 2 e2
        assert!(matches!(
            SubalgebraSpec::new(&s, &[q(&[1, 0, 0]), q(&[0, 0, 1])]),
            Err(Error::NotASubalgebra)
        ));
    }
}
