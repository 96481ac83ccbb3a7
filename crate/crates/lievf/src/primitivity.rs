//! Primitivity of a pair (g, h) and the Morozov trichotomy for effective
//! primitive pairs: simple, diagonal, or affine type.

use crate::error::{Error, Result};
use crate::structure::{StructureConstants, SubalgebraSpec};
use crate::symbolic::{
    coordinates_in, nullspace, rational_eigenvalues, rational_roots, Matrix, Rational, Subspace,
};
use num_traits::{One, Zero};

/// Action of the isotropy subalgebra on the quotient g/h, in a deterministic
/// complement basis.
#[derive(Clone, Debug)]
pub struct IsotropyRepresentation {
    /// dimension of g/h
    pub dim: usize,
    /// one matrix per h-basis element, columns are images
    pub matrices: Vec<Matrix<Rational>>,
    /// coordinates of the parent basis vectors spanning the complement
    pub complement: Vec<usize>,
}

/// Quotient-action matrices in the complement spanned by standard basis
/// vectors at the non-pivot coordinates of `h` (pivot columns extended to a
/// full basis).
pub fn isotropy_representation(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
) -> Result<IsotropyRepresentation> {
    let m = structure.dim();
    let pivots = h.space().pivot_columns();
    let complement: Vec<usize> = (0..m).filter(|i| !pivots.contains(i)).collect();
    isotropy_representation_with_complement(structure, h, complement)
}

/// Same, with an explicit complement (used to check that irreducibility
/// verdicts do not depend on the choice).
pub fn isotropy_representation_with_complement(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
    complement: Vec<usize>,
) -> Result<IsotropyRepresentation> {
    let m = structure.dim();
    let d = m - h.dim();
    if complement.len() != d {
        return Err(Error::DimensionMismatch("complement size".into()));
    }
    // generators: h basis then complement standard vectors; must span Q^m
    let mut gens: Vec<Vec<Rational>> = h.basis().to_vec();
    for &i in &complement {
        let mut e = vec![Rational::zero(); m];
        e[i] = Rational::one();
        gens.push(e);
    }
    if Subspace::from_vectors(m, &gens).dim() != m {
        return Err(Error::DimensionMismatch(
            "complement does not complete h".into(),
        ));
    }
    let project = |v: &[Rational]| -> Vec<Rational> {
        let coords = coordinates_in(&gens, v).expect("gens form a basis");
        coords[h.dim()..].to_vec()
    };
    let mut matrices = Vec::with_capacity(h.dim());
    for w in h.basis() {
        let mut mat = Matrix::zeros(d, d, &Rational::zero());
        for (col, &cj) in complement.iter().enumerate() {
            let mut e = vec![Rational::zero(); m];
            e[cj] = Rational::one();
            let img = project(&structure.bracket(w, &e));
            for row in 0..d {
                *mat.at_mut(row, col) = img[row].clone();
            }
        }
        matrices.push(mat);
    }
    let rep = IsotropyRepresentation {
        dim: d,
        matrices,
        complement,
    };
    rep.check_representation_property(structure, h)?;
    Ok(rep)
}

impl IsotropyRepresentation {
    /// Bracket of matrices equals the matrix of the bracket.
    fn check_representation_property(
        &self,
        structure: &StructureConstants,
        h: &SubalgebraSpec,
    ) -> Result<()> {
        let basis = h.basis();
        for (i, wi) in basis.iter().enumerate() {
            for (j, wj) in basis.iter().enumerate().skip(i + 1) {
                let br = structure.bracket(wi, wj);
                let coords = coordinates_in(basis, &br).ok_or(Error::NotASubalgebra)?;
                let mut expect = Matrix::zeros(self.dim, self.dim, &Rational::zero());
                for (k, c) in coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..self.dim {
                        for b in 0..self.dim {
                            let v = expect.at(a, b) + &(c * self.matrices[k].at(a, b));
                            *expect.at_mut(a, b) = v;
                        }
                    }
                }
                let commutator = self.matrices[i]
                    .matmul(&self.matrices[j])
                    .sub_matrix(&self.matrices[j].matmul(&self.matrices[i]));
                if commutator != expect {
                    return Err(Error::IdentityViolation(
                        "isotropy representation violates the bracket relations".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Dimension of the unital associative matrix algebra generated by the given
/// d x d matrices (closure under products until stabilization).
pub fn matrix_algebra_dimension(generators: &[Matrix<Rational>], d: usize) -> usize {
    let idm = Matrix::identity(d, &Rational::zero());
    let mut span = Subspace::from_vectors(d * d, &[flatten(&idm)]);
    let mut members: Vec<Matrix<Rational>> = vec![idm];
    for g in generators {
        let f = flatten(g);
        if !span.contains(&f) {
            span = span.sum(&Subspace::from_vectors(d * d, &[f]));
            members.push(g.clone());
        }
    }
    let mut frontier = members.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in generators {
                for prod in [a.matmul(g), g.matmul(a)] {
                    let f = flatten(&prod);
                    if !span.contains(&f) {
                        span = span.sum(&Subspace::from_vectors(d * d, &[f]));
                        next.push(prod);
                    }
                }
            }
        }
        members.extend(next.iter().cloned());
        frontier = next;
        if span.dim() == d * d {
            break;
        }
    }
    span.dim()
}

/// Burnside dimension criterion: the action is absolutely irreducible iff
/// the generated unital matrix algebra has dimension d^2.
pub fn is_irreducible(rep: &IsotropyRepresentation) -> bool {
    debug_assert!(rep.dim >= 1);
    matrix_algebra_dimension(&rep.matrices, rep.dim) == rep.dim * rep.dim
}

/// Outcome of the intermediate-subalgebra search.
#[derive(Clone, Debug)]
pub enum IntermediateSearch {
    /// The pair is primitive (quotient module irreducible).
    Primitive,
    /// A proper intermediate subalgebra h ⊊ l ⊊ g.
    Witness(SubalgebraSpec),
    /// Reducible action, but no bracket-closed preimage within the budget.
    Unknown(String),
}

/// Searches for an intermediate subalgebra between `h` and the whole algebra.
/// Candidate h-submodules of g/h are enumerated from kernels and images of
/// small words in the action matrices, their pairwise integer combinations,
/// and their rational-eigenvalue shifts; each invariant candidate is lifted
/// and tested for bracket closure.
pub fn find_intermediate(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
) -> Result<IntermediateSearch> {
    let m = structure.dim();
    if h.dim() >= m {
        return Err(Error::Invalid("h must be a proper subalgebra".into()));
    }
    let rep = isotropy_representation(structure, h)?;
    if is_irreducible(&rep) {
        return Ok(IntermediateSearch::Primitive);
    }
    let d = rep.dim;
    let zero_action = rep
        .matrices
        .iter()
        .all(|mat| (0..d).all(|i| (0..d).all(|j| mat.at(i, j).is_zero())));
    if zero_action {
        // every line is an h-submodule and every line preimage is closed
        let mut line = vec![Rational::zero(); d];
        line[0] = Rational::one();
        let w = Subspace::from_vectors(d, &[line]);
        let l = lift_preimage(structure, h, &rep, &w)?;
        return Ok(IntermediateSearch::Witness(l));
    }
    for w in invariant_subspace_candidates(&rep.matrices, d) {
        if let Ok(l) = lift_preimage(structure, h, &rep, &w) {
            return Ok(IntermediateSearch::Witness(l));
        }
    }
    Ok(IntermediateSearch::Unknown(
        "reducible action, invariant-subspace budget exhausted without a closed preimage".into(),
    ))
}

/// Proper nonzero subspaces of Q^d invariant under all generators, from the
/// budgeted candidate enumeration, deterministically ordered.
pub fn invariant_subspace_candidates(generators: &[Matrix<Rational>], d: usize) -> Vec<Subspace> {
    let idm = Matrix::identity(d, &Rational::zero());
    // linearly independent words of length <= 4 (including the identity)
    let mut words: Vec<Matrix<Rational>> = Vec::new();
    let mut span = Subspace::zero(d * d);
    let push = |mat: Matrix<Rational>, words: &mut Vec<Matrix<Rational>>, span: &mut Subspace| {
        let f = flatten(&mat);
        if !span.contains(&f) {
            *span = span.sum(&Subspace::from_vectors(d * d, &[f]));
            words.push(mat);
        }
    };
    push(idm.clone(), &mut words, &mut span);
    let mut frontier: Vec<Matrix<Rational>> = vec![idm.clone()];
    for _len in 1..=4usize {
        let mut next = Vec::new();
        for a in &frontier {
            for g in generators {
                let prod = a.matmul(g);
                let f = flatten(&prod);
                if !span.contains(&f) {
                    span = span.sum(&Subspace::from_vectors(d * d, &[f]));
                    words.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }

    // candidate matrices: words and pairwise integer combinations
    let mut candidates: Vec<Matrix<Rational>> = words.clone();
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            for a in -2i64..=2 {
                for b in -2i64..=2 {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let mut mat = Matrix::zeros(d, d, &Rational::zero());
                    for r in 0..d {
                        for c in 0..d {
                            let v = Rational::from_integer(a.into()) * words[i].at(r, c)
                                + Rational::from_integer(b.into()) * words[j].at(r, c);
                            *mat.at_mut(r, c) = v;
                        }
                    }
                    candidates.push(mat);
                }
            }
        }
    }

    // subspace candidates: kernels and images of (C - lambda I) over the
    // rational eigenvalues of each candidate
    let mut found: Vec<Subspace> = Vec::new();
    let consider = |s: Subspace, found: &mut Vec<Subspace>| {
        if s.dim() == 0 || s.dim() >= d || found.contains(&s) {
            return;
        }
        found.push(s);
    };
    for cmat in &candidates {
        let mut eigs = rational_eigenvalues(cmat);
        if !eigs.contains(&Rational::zero()) {
            eigs.push(Rational::zero());
        }
        for lam in eigs {
            let mut shifted = cmat.clone();
            for i in 0..d {
                let v = shifted.at(i, i) - &lam;
                *shifted.at_mut(i, i) = v;
            }
            let ker = Subspace::from_vectors(d, &nullspace(&shifted));
            consider(ker, &mut found);
            let img = Subspace::from_vectors(d, &shifted.transpose().row_vecs());
            consider(img, &mut found);
        }
    }
    // keep only subspaces invariant under every generator
    let mut invariant: Vec<Subspace> = found
        .into_iter()
        .filter(|w| {
            generators
                .iter()
                .all(|g| w.basis().iter().all(|v| w.contains(&g.apply(v))))
        })
        .collect();
    invariant.sort_by(compare_subspaces);
    invariant.dedup();
    invariant
}

fn compare_subspaces(a: &Subspace, b: &Subspace) -> std::cmp::Ordering {
    a.dim().cmp(&b.dim()).then_with(|| a.basis().cmp(b.basis()))
}

/// Lifts an h-submodule of g/h to `h + lift(W)` and validates closure.
fn lift_preimage(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
    rep: &IsotropyRepresentation,
    w: &Subspace,
) -> Result<SubalgebraSpec> {
    let m = structure.dim();
    let mut vecs: Vec<Vec<Rational>> = h.basis().to_vec();
    for q in w.basis() {
        let mut v = vec![Rational::zero(); m];
        for (slot, &cj) in rep.complement.iter().enumerate() {
            v[cj] = q[slot].clone();
        }
        vecs.push(v);
    }
    let space = Subspace::from_vectors(m, &vecs);
    if space.dim() <= h.dim() || space.dim() >= m {
        return Err(Error::Invalid("not a proper intermediate subspace".into()));
    }
    SubalgebraSpec::from_subspace(structure, space)
}

/// Morozov trichotomy tag.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorozovTag {
    Simple,
    Diagonal,
    Affine,
    NotPrimitive,
    Unknown,
}

impl std::fmt::Display for MorozovTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MorozovTag::Simple => "Simple",
            MorozovTag::Diagonal => "Diagonal",
            MorozovTag::Affine => "Affine",
            MorozovTag::NotPrimitive => "NotPrimitive",
            MorozovTag::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

/// Classification verdict with its supporting evidence.
#[derive(Clone, Debug)]
pub struct MorozovVerdict {
    pub tag: MorozovTag,
    pub not_primitive_witness: Option<SubalgebraSpec>,
    pub unknown_reason: Option<String>,
    pub killing_det: Rational,
    pub largest_ideal_dim: usize,
    /// abelian radical m for affine verdicts (g = h ⋉ m)
    pub affine_radical: Option<SubalgebraSpec>,
    /// the two simple ideals for diagonal verdicts
    pub diagonal_ideals: Option<(SubalgebraSpec, SubalgebraSpec)>,
}

impl MorozovVerdict {
    fn bare(tag: MorozovTag, killing_det: Rational, largest_ideal_dim: usize) -> Self {
        MorozovVerdict {
            tag,
            not_primitive_witness: None,
            unknown_reason: None,
            killing_det,
            largest_ideal_dim,
            affine_radical: None,
            diagonal_ideals: None,
        }
    }
}

/// Classifies an effective primitive pair per the trichotomy; NotPrimitive
/// and Unknown verdicts from the preliminary checks pass through.
pub fn classify_morozov(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
) -> Result<MorozovVerdict> {
    let killing_det = structure.killing_form().det();
    let ideal = structure.largest_ideal_inside(h);
    let ideal_dim = ideal.dim();
    if !ideal.is_zero() {
        let mut v = MorozovVerdict::bare(MorozovTag::Unknown, killing_det, ideal_dim);
        v.unknown_reason = Some(format!(
            "pair is not effective: h contains a g-ideal of dimension {ideal_dim}"
        ));
        return Ok(v);
    }
    match find_intermediate(structure, h)? {
        IntermediateSearch::Witness(l) => {
            let mut v = MorozovVerdict::bare(MorozovTag::NotPrimitive, killing_det, 0);
            v.not_primitive_witness = Some(l);
            return Ok(v);
        }
        IntermediateSearch::Unknown(reason) => {
            let mut v = MorozovVerdict::bare(MorozovTag::Unknown, killing_det, 0);
            v.unknown_reason = Some(reason);
            return Ok(v);
        }
        IntermediateSearch::Primitive => {}
    }
    let m = structure.dim();
    if !killing_det.is_zero() {
        // semisimple: simple iff the adjoint representation is irreducible
        let ads: Vec<Matrix<Rational>> = (0..m).map(|i| structure.ad_basis(i)).collect();
        if matrix_algebra_dimension(&ads, m) == m * m {
            return Ok(MorozovVerdict::bare(MorozovTag::Simple, killing_det, 0));
        }
        if let Some((i1, i2)) = diagonal_splitting(structure, h)? {
            let mut v = MorozovVerdict::bare(MorozovTag::Diagonal, killing_det, 0);
            v.diagonal_ideals = Some((i1, i2));
            return Ok(v);
        }
        let mut v = MorozovVerdict::bare(MorozovTag::Unknown, killing_det, 0);
        v.unknown_reason = Some(
            "semisimple with reducible adjoint action, but no rational ideal splitting found"
                .into(),
        );
        return Ok(v);
    }
    // affine type: g = h ⋉ m with m the radical of the Killing form
    match affine_radical(structure, h)? {
        Some(radical) => {
            let mut v = MorozovVerdict::bare(MorozovTag::Affine, killing_det, 0);
            v.affine_radical = Some(radical);
            Ok(v)
        }
        None => {
            let mut v = MorozovVerdict::bare(MorozovTag::Unknown, killing_det, 0);
            v.unknown_reason = Some(
                "not semisimple and the Killing radical is not an abelian irreducible faithful complement"
                    .into(),
            );
            Ok(v)
        }
    }
}

/// For a semisimple algebra with reducible adjoint action: finds two ideals
/// I1 ⊕ I2 = g with dim I1 = dim I2 = dim h and h ∩ I_i = 0, via the primary
/// decomposition of the commutant of the adjoint representation.
fn diagonal_splitting(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
) -> Result<Option<(SubalgebraSpec, SubalgebraSpec)>> {
    let m = structure.dim();
    let ads: Vec<Matrix<Rational>> = (0..m).map(|i| structure.ad_basis(i)).collect();
    // commutant: X with X ad_i = ad_i X for all i
    let mut rows = Vec::new();
    for adm in &ads {
        for r in 0..m {
            for c in 0..m {
                // (X A - A X)[r][c] = sum_k X[r][k] A[k][c] - A[r][k] X[k][c]
                let mut row = vec![Rational::zero(); m * m];
                for k in 0..m {
                    row[r * m + k] += adm.at(k, c);
                    row[k * m + c] -= adm.at(r, k);
                }
                rows.push(row);
            }
        }
    }
    let comm = nullspace(&Matrix::from_rows(rows));
    // collect proper nonzero ideals from primary components of commutant elements
    let mut ideals: Vec<Subspace> = Vec::new();
    for flat in &comm {
        let mut t = Matrix::zeros(m, m, &Rational::zero());
        for r in 0..m {
            for c in 0..m {
                *t.at_mut(r, c) = flat[r * m + c].clone();
            }
        }
        for lam in matrix_rational_spectrum(&t) {
            let mut shifted = t.clone();
            for i in 0..m {
                let v = shifted.at(i, i) - &lam;
                *shifted.at_mut(i, i) = v;
            }
            let ker = Subspace::from_vectors(m, &nullspace(&shifted));
            if ker.dim() > 0 && ker.dim() < m && !ideals.contains(&ker) {
                ideals.push(ker);
            }
        }
    }
    ideals.sort_by(compare_subspaces);
    for i1 in &ideals {
        for i2 in &ideals {
            if i1.dim() + i2.dim() != m || i1.intersect(i2).dim() != 0 {
                continue;
            }
            if i1.dim() != h.dim() || i2.dim() != h.dim() {
                continue;
            }
            if h.space().intersect(i1).dim() != 0 || h.space().intersect(i2).dim() != 0 {
                continue;
            }
            let s1 = SubalgebraSpec::from_subspace(structure, i1.clone());
            let s2 = SubalgebraSpec::from_subspace(structure, i2.clone());
            if let (Ok(s1), Ok(s2)) = (s1, s2) {
                if is_ideal(structure, &s1) && is_ideal(structure, &s2) {
                    return Ok(Some((s1, s2)));
                }
            }
        }
    }
    Ok(None)
}

fn matrix_rational_spectrum(t: &Matrix<Rational>) -> Vec<Rational> {
    // minimal polynomial via the first linear dependence among powers of t
    let m = t.rows();
    let mut powers: Vec<Vec<Rational>> = Vec::new();
    let mut cur = Matrix::identity(m, &Rational::zero());
    for _ in 0..=m {
        powers.push(flatten(&cur));
        cur = cur.matmul(t);
    }
    for k in 1..=m {
        let gens: Vec<Vec<Rational>> = powers[..k].to_vec();
        if let Some(coords) = coordinates_in(&gens, &powers[k]) {
            // t^k = sum c_i t^i  =>  min poly = x^k - sum c_i x^i
            let mut coeffs = vec![Rational::zero(); k + 1];
            coeffs[k] = Rational::one();
            for (i, c) in coords.iter().enumerate() {
                coeffs[i] = -c.clone();
            }
            return rational_roots(&coeffs);
        }
    }
    Vec::new()
}

fn is_ideal(structure: &StructureConstants, s: &SubalgebraSpec) -> bool {
    let m = structure.dim();
    for i in 0..m {
        let mut e = vec![Rational::zero(); m];
        e[i] = Rational::one();
        for b in s.basis() {
            if !s.contains(&structure.bracket(&e, b)) {
                return false;
            }
        }
    }
    true
}

/// Checks the affine-type conditions on the Killing radical: an abelian
/// ideal complement to h carrying a faithful irreducible h-action, with h
/// reductive of central dimension at most one.
fn affine_radical(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
) -> Result<Option<SubalgebraSpec>> {
    let m = structure.dim();
    let k = structure.killing_form();
    let radical_vecs = nullspace(&k);
    let radical = Subspace::from_vectors(m, &radical_vecs);
    let d = m - h.dim();
    if radical.dim() != d {
        return Ok(None);
    }
    if h.space().intersect(&radical).dim() != 0 {
        return Ok(None);
    }
    let spec = match SubalgebraSpec::from_subspace(structure, radical) {
        Ok(s) => s,
        Err(_) => return Ok(None),
    };
    if !is_ideal(structure, &spec) {
        return Ok(None);
    }
    // abelian
    for a in spec.basis() {
        for b in spec.basis() {
            if structure.bracket(a, b).iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
        }
    }
    // h-action on m: faithful and irreducible
    let action = action_on_invariant_subspace(structure, h, &spec)?;
    let stacked: Vec<Vec<Rational>> = action.iter().map(flatten).collect();
    if !stacked.is_empty() && Subspace::from_vectors(d * d, &stacked).dim() != h.dim() {
        return Ok(None); // not faithful
    }
    if matrix_algebra_dimension(&action, d) != d * d && d != 1 {
        return Ok(None);
    }
    // h = semisimple ⊕ center of dimension <= 1
    if h.dim() > 0 && !is_reductive_with_small_center(structure, h)? {
        return Ok(None);
    }
    Ok(Some(spec))
}

/// Matrices of the h-action on an h-invariant subspace, in its canonical
/// basis.
pub fn action_on_invariant_subspace(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
    space: &SubalgebraSpec,
) -> Result<Vec<Matrix<Rational>>> {
    let d = space.dim();
    let basis = space.basis().to_vec();
    let mut out = Vec::with_capacity(h.dim());
    for w in h.basis() {
        let mut mat = Matrix::zeros(d, d, &Rational::zero());
        for (col, b) in basis.iter().enumerate() {
            let img = structure.bracket(w, b);
            let coords = coordinates_in(&basis, &img)
                .ok_or_else(|| Error::Invalid("subspace is not h-invariant".into()))?;
            for row in 0..d {
                *mat.at_mut(row, col) = coords[row].clone();
            }
        }
        out.push(mat);
    }
    Ok(out)
}

/// Structure constants of a subalgebra in its canonical basis.
pub fn substructure(
    structure: &StructureConstants,
    sub: &SubalgebraSpec,
) -> Result<StructureConstants> {
    let basis = sub.basis().to_vec();
    let r = basis.len();
    let mut c = vec![vec![vec![Rational::zero(); r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let br = structure.bracket(&basis[i], &basis[j]);
            let coords = coordinates_in(&basis, &br).ok_or(Error::NotASubalgebra)?;
            c[i][j] = coords;
        }
    }
    StructureConstants::new(c)
}

fn is_reductive_with_small_center(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
) -> Result<bool> {
    let sh = substructure(structure, h)?;
    let center = sh.center();
    if center.dim() > 1 {
        return Ok(false);
    }
    let derived = sh.derived_algebra();
    if derived.dim() + center.dim() != sh.dim() {
        return Ok(false);
    }
    if derived.space().intersect(center.space()).dim() != 0 {
        return Ok(false);
    }
    if derived.dim() > 0 {
        let sd = substructure(&sh, &derived)?;
        if !sd.is_semisimple() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn flatten(m: &Matrix<Rational>) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        out.extend(m.row(i).iter().cloned());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::{base_point_at, isotropy_at, pick_generic_point};
    use crate::structure::VectorFieldAlgebra;
    use crate::symbolic::{rat_int, Vars};
    use crate::vector_fields::Chart;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn sl2() -> VectorFieldAlgebra {
        let c = Chart::new(Vars::new(["z"]));
        VectorFieldAlgebra::parse(&c, &[vec!["1"], vec!["z"], vec!["z^2"]]).unwrap()
    }

    fn gl2_affine() -> VectorFieldAlgebra {
        let c = Chart::new(Vars::new(["x", "y"]));
        VectorFieldAlgebra::parse(
            &c,
            &[
                vec!["1", "0"],
                vec!["0", "1"],
                vec!["x", "0"],
                vec!["y", "0"],
                vec!["0", "x"],
                vec!["0", "y"],
            ],
        )
        .unwrap()
    }

    fn sl2_diag_structure() -> StructureConstants {
        // sl2 ⊕ sl2 in the field-style basis on each factor
        let s = sl2().structure().clone();
        let mut c = vec![vec![vec![Rational::zero(); 6]; 6]; 6];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    c[i][j][k] = s.tensor()[i][j][k].clone();
                    c[i + 3][j + 3][k + 3] = s.tensor()[i][j][k].clone();
                }
            }
        }
        StructureConstants::new(c).unwrap()
    }

    #[test]
    fn quotient_representation_examples() {
        // (sl2, Borel): d = 1, both matrices scalar
        let s = sl2().structure().clone();
        let borel = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        let rep = isotropy_representation(&s, &borel).unwrap();
        assert_eq!(rep.dim, 1);
        assert_eq!(rep.matrices.len(), 2);
        // (gl2 ⋉ C^2, gl2): d = 2, standard matrices
        let a = gl2_affine();
        let p = base_point_at(&a, q(&[0, 0])).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        let rep = isotropy_representation(a.structure(), &h).unwrap();
        assert_eq!(rep.dim, 2);
        assert_eq!(rep.matrices.len(), 4);
        // (abelian 2, 0): d = 2, no matrices
        let ab = VectorFieldAlgebra::parse(
            &Chart::new(Vars::new(["x", "y"])),
            &[vec!["1", "0"], vec!["0", "1"]],
        )
        .unwrap();
        let rep = isotropy_representation(ab.structure(), &SubalgebraSpec::zero(2)).unwrap();
        assert_eq!(rep.dim, 2);
        assert!(rep.matrices.is_empty());
    }

    #[test]
    fn burnside_examples() {
        // standard gl2 on C^2: the generated algebra has dimension 4
        let a = gl2_affine();
        let p = base_point_at(&a, q(&[0, 0])).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        let rep = isotropy_representation(a.structure(), &h).unwrap();
        assert!(is_irreducible(&rep));
        // upper-triangular 2x2 matrices: e1 is invariant
        let upper = vec![
            Matrix::from_rows(vec![q(&[1, 0]), q(&[0, 0])]),
            Matrix::from_rows(vec![q(&[0, 1]), q(&[0, 0])]),
            Matrix::from_rows(vec![q(&[0, 0]), q(&[0, 1])]),
        ];
        assert_ne!(matrix_algebra_dimension(&upper, 2), 4);
        // d = 1: always irreducible
        let s = sl2().structure().clone();
        let borel = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        let rep = isotropy_representation(&s, &borel).unwrap();
        assert!(is_irreducible(&rep));
    }

    #[test]
    fn irreducibility_is_complement_independent() {
        let a = VectorFieldAlgebra::parse(
            &Chart::new(Vars::new(["x", "y"])),
            &[vec!["1", "0"], vec!["0", "1"], vec!["x", "0"]],
        )
        .unwrap();
        let p = base_point_at(&a, q(&[1, 0])).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        let s = a.structure();
        let rep1 = isotropy_representation(s, &h).unwrap();
        // reversed preference complement
        let pivots = h.space().pivot_columns();
        let rev: Vec<usize> = (0..3)
            .rev()
            .filter(|i| !pivots.contains(i))
            .take(2)
            .collect();
        let rep2 = isotropy_representation_with_complement(s, &h, rev).unwrap();
        assert_ne!(rep1.complement, rep2.complement);
        assert_eq!(is_irreducible(&rep1), is_irreducible(&rep2));
    }

    #[test]
    fn intermediate_search_examples() {
        // abelian plane, h = 0: the first basis line is a witness
        let ab = VectorFieldAlgebra::parse(
            &Chart::new(Vars::new(["x", "y"])),
            &[vec!["1", "0"], vec!["0", "1"]],
        )
        .unwrap();
        match find_intermediate(ab.structure(), &SubalgebraSpec::zero(2)).unwrap() {
            IntermediateSearch::Witness(l) => {
                assert_eq!(l.dim(), 1);
                assert!(l.contains(&q(&[1, 0])));
            }
            other => panic!("expected witness, got {other:?}"),
        }
        // (sl2, Borel): primitive
        let s = sl2().structure().clone();
        let borel = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        assert!(matches!(
            find_intermediate(&s, &borel).unwrap(),
            IntermediateSearch::Primitive
        ));
    }

    #[test]
    fn diagonal_sl2_action_has_a_witness() {
        // sl2 acting diagonally on C^1 x C^1: the coordinate foliation is
        // invariant, the pair is not primitive
        let c = Chart::new(Vars::new(["x", "y"]));
        let a =
            VectorFieldAlgebra::parse(&c, &[vec!["1", "1"], vec!["x", "y"], vec!["x^2", "y^2"]])
                .unwrap();
        let p = pick_generic_point(&a, 5).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        match find_intermediate(a.structure(), &h).unwrap() {
            IntermediateSearch::Witness(l) => {
                assert_eq!(l.dim(), 2);
                assert!(l.space().contains_subspace(h.space()));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn classify_simple() {
        let a = sl2();
        let s = a.structure().clone();
        let borel = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        let v = classify_morozov(&s, &borel).unwrap();
        assert_eq!(v.tag, MorozovTag::Simple);
        assert!(!v.killing_det.is_zero());
    }

    #[test]
    fn classify_diagonal_abstract_pair() {
        let s = sl2_diag_structure();
        let h = SubalgebraSpec::new(
            &s,
            &[
                q(&[1, 0, 0, 1, 0, 0]),
                q(&[0, 1, 0, 0, 1, 0]),
                q(&[0, 0, 1, 0, 0, 1]),
            ],
        )
        .unwrap();
        let v = classify_morozov(&s, &h).unwrap();
        assert_eq!(v.tag, MorozovTag::Diagonal);
        let (i1, i2) = v.diagonal_ideals.unwrap();
        assert_eq!(i1.dim(), 3);
        assert_eq!(i2.dim(), 3);
    }

    #[test]
    fn classify_affine_gl2() {
        let a = gl2_affine();
        let p = base_point_at(&a, q(&[0, 0])).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        let v = classify_morozov(a.structure(), &h).unwrap();
        assert_eq!(v.tag, MorozovTag::Affine);
        let rad = v.affine_radical.unwrap();
        assert_eq!(rad.dim(), 2);
        assert!(rad.contains(&q(&[1, 0, 0, 0, 0, 0])));
        assert!(rad.contains(&q(&[0, 1, 0, 0, 0, 0])));
    }

    #[test]
    fn classify_not_primitive_passes_through() {
        let a = VectorFieldAlgebra::parse(
            &Chart::new(Vars::new(["x", "y"])),
            &[vec!["1", "0"], vec!["0", "1"], vec!["x", "0"]],
        )
        .unwrap();
        let p = base_point_at(&a, q(&[1, 0])).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        let v = classify_morozov(a.structure(), &h).unwrap();
        assert_eq!(v.tag, MorozovTag::NotPrimitive);
        let l = v.not_primitive_witness.unwrap();
        assert!(l.dim() > h.dim() && l.dim() < 3);
    }

    #[test]
    fn non_effective_pair_is_reported() {
        // aff ⊕ C with h containing the central factor is not effective
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        c[0][1][0] = rat_int(1);
        c[1][0][0] = rat_int(-1);
        let s = StructureConstants::new(c).unwrap();
        let h = SubalgebraSpec::new(&s, &[q(&[0, 1, 0]), q(&[0, 0, 1])]).unwrap();
        let v = classify_morozov(&s, &h).unwrap();
        assert_eq!(v.tag, MorozovTag::Unknown);
        assert_eq!(v.largest_ideal_dim, 1);
    }

    #[test]
    fn witness_is_a_proper_closed_intermediate() {
        // every returned witness satisfies h ⊊ l ⊊ g and [l, l] ⊆ l exactly
        let c = Chart::new(Vars::new(["x", "y"]));
        let a =
            VectorFieldAlgebra::parse(&c, &[vec!["1", "1"], vec!["x", "y"], vec!["x^2", "y^2"]])
                .unwrap();
        let p = pick_generic_point(&a, 11).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        if let IntermediateSearch::Witness(l) = find_intermediate(a.structure(), &h).unwrap() {
            assert!(l.space().contains_subspace(h.space()));
            assert!(l.dim() > h.dim());
            assert!(l.dim() < 3);
            // closure is part of the SubalgebraSpec invariant; re-check
            for x in l.basis() {
                for y in l.basis() {
                    assert!(l.contains(&a.structure().bracket(x, y)));
                }
            }
        } else {
            panic!("expected a witness");
        }
    }

    #[test]
    fn affine_faithfulness_has_zero_kernel() {
        let a = gl2_affine();
        let p = base_point_at(&a, q(&[0, 0])).unwrap();
        let h = isotropy_at(&a, &p).unwrap();
        let v = classify_morozov(a.structure(), &h).unwrap();
        let rad = v.affine_radical.unwrap();
        let action = action_on_invariant_subspace(a.structure(), &h, &rad).unwrap();
        let stacked: Vec<Vec<Rational>> = action.iter().map(super::flatten).collect();
        assert_eq!(Subspace::from_vectors(4, &stacked).dim(), h.dim());
    }
}
