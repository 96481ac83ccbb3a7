//! Truncated realization of an abstract pair (g, h) of finite codimension n
//! as vector-field jets of order k with h the isotropy at the origin. The
//! homomorphism equations are solved degree by degree; the representative is
//! gauge-fixed by taking the deterministic solution with free variables set
//! to zero. Non-effective pairs are realized through the quotient by the
//! largest ideal inside h, which becomes the kernel.

use crate::error::{Error, Result};
use crate::structure::{StructureConstants, SubalgebraSpec};
use crate::symbolic::{
    coordinates_in, solve_linear, Matrix, Monomial, Polynomial, Rational, Subspace,
};
use crate::vector_fields::{Chart, JetField};
use num_traits::{One, Zero};

/// An abstract pair with a truncation order.
#[derive(Clone, Debug)]
pub struct RealizationProblem {
    pub structure: StructureConstants,
    pub h: SubalgebraSpec,
    pub order: u32,
}

impl RealizationProblem {
    pub fn new(structure: StructureConstants, h: SubalgebraSpec, order: u32) -> Result<Self> {
        if h.parent_dim() != structure.dim() {
            return Err(Error::DimensionMismatch(
                "h lives in a different algebra".into(),
            ));
        }
        if h.dim() >= structure.dim() {
            return Err(Error::Invalid("h must have positive codimension".into()));
        }
        if order < 1 {
            return Err(Error::Invalid("order must be at least 1".into()));
        }
        Ok(RealizationProblem {
            structure,
            h,
            order,
        })
    }

    pub fn codimension(&self) -> usize {
        self.structure.dim() - self.h.dim()
    }
}

/// Gauge bookkeeping for one homogeneous degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeStep {
    pub degree: u32,
    pub unknowns: usize,
    pub free_variables: usize,
}

/// Jets realizing the pair, one image per basis element of g.
#[derive(Clone, Debug)]
pub struct Realization {
    pub chart: Chart,
    pub images: Vec<JetField>,
    /// the largest g-ideal inside h; the kernel of the realization
    pub kernel: SubalgebraSpec,
    /// parent coordinates whose standard vectors form the chosen complement
    pub complement: Vec<usize>,
    pub gauge_log: Vec<GaugeStep>,
}

impl Realization {
    /// Image of an arbitrary coordinate vector.
    pub fn image_of(&self, coords: &[Rational]) -> JetField {
        let mut acc = JetField::zero(self.chart.clone(), self.images[0].order());
        for (c, img) in coords.iter().zip(&self.images) {
            if !c.is_zero() {
                acc = acc.add(&img.scale(c));
            }
        }
        acc
    }
}

type EffectiveRealization = (Vec<JetField>, Chart, Vec<usize>, Vec<GaugeStep>);

/// Degree-by-degree construction of the truncated realization.
pub fn realize_truncated(problem: &RealizationProblem) -> Result<Realization> {
    let kernel = problem.structure.largest_ideal_inside(&problem.h);
    if kernel.is_zero() {
        let (images, chart, complement, gauge_log) =
            realize_effective(&problem.structure, &problem.h, problem.order)?;
        return Ok(Realization {
            chart,
            images,
            kernel,
            complement,
            gauge_log,
        });
    }
    // Quotient by the kernel, realize the effective quotient, pull images back.
    let quotient = problem.structure.quotient_by_ideal(&kernel)?;
    let h_proj: Vec<Vec<Rational>> = problem
        .h
        .basis()
        .iter()
        .map(|v| quotient.projection.apply(v))
        .collect();
    let h_space = Subspace::from_vectors(quotient.structure.dim(), &h_proj);
    let hq = SubalgebraSpec::from_subspace(&quotient.structure, h_space)?;
    let (q_images, chart, q_complement, gauge_log) =
        realize_effective(&quotient.structure, &hq, problem.order)?;
    let m = problem.structure.dim();
    let images: Vec<JetField> = (0..m)
        .map(|i| {
            let mut e = vec![Rational::zero(); m];
            e[i] = Rational::one();
            let coords = quotient.projection.apply(&e);
            let mut acc = JetField::zero(chart.clone(), problem.order);
            for (c, img) in coords.iter().zip(&q_images) {
                if !c.is_zero() {
                    acc = acc.add(&img.scale(c));
                }
            }
            acc
        })
        .collect();
    // quotient coordinates correspond to parent coordinates at the
    // quotient's complement indices
    let complement: Vec<usize> = q_complement
        .iter()
        .map(|&qi| quotient.complement[qi])
        .collect();
    Ok(Realization {
        chart,
        images,
        kernel,
        complement,
        gauge_log,
    })
}

fn realize_effective(
    structure: &StructureConstants,
    h: &SubalgebraSpec,
    order: u32,
) -> Result<EffectiveRealization> {
    let m = structure.dim();
    let n = m - h.dim();
    let chart = Chart::canonical(n);
    let vars = chart.vars().clone();

    // complement convention: standard vectors at the non-pivot coordinates
    let pivots = h.space().pivot_columns();
    let complement: Vec<usize> = (0..m).filter(|i| !pivots.contains(i)).collect();
    let mut gens: Vec<Vec<Rational>> = h.basis().to_vec();
    for &i in &complement {
        let mut e = vec![Rational::zero(); m];
        e[i] = Rational::one();
        gens.push(e);
    }
    // degree-0 parts: complement coordinates of each basis vector
    let hdim = h.dim();
    let mut parts: Vec<Vec<Polynomial>> = Vec::with_capacity(m); // parts[i][t], growing by degree
    for i in 0..m {
        let mut e = vec![Rational::zero(); m];
        e[i] = Rational::one();
        let coords = coordinates_in(&gens, &e).expect("gens span");
        let consts = &coords[hdim..];
        parts.push(
            (0..n)
                .map(|t| Polynomial::constant(vars.clone(), consts[t].clone()))
                .collect(),
        );
    }

    let mut gauge_log = Vec::new();
    let c = structure.tensor();
    for degree in 1..=order {
        let monos = monomials_of_degree(&vars, degree);
        let nmono = monos.len();
        let unknowns = m * n * nmono;
        let col = |i: usize, t: usize, mu: usize| (i * n + t) * nmono + mu;

        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        let eq_monos = monomials_of_degree(&vars, degree - 1);
        for i in 0..m {
            for j in (i + 1)..m {
                // known part: structure-constant image at degree d-1 minus
                // crossing brackets of known homogeneous parts
                let mut known: Vec<Polynomial> = (0..n)
                    .map(|t| {
                        let mut acc = Polynomial::zero(vars.clone());
                        for k in 0..m {
                            if !c[i][j][k].is_zero() {
                                acc = acc.add(
                                    &homogeneous_of(&parts[k], degree - 1, &vars)[t]
                                        .scale(&c[i][j][k]),
                                );
                            }
                        }
                        acc
                    })
                    .collect();
                for a in 1..degree {
                    let b = degree - a;
                    if b == 0 || a > degree - 1 || b > degree - 1 {
                        continue;
                    }
                    let xa = homogeneous_of(&parts[i], a, &vars);
                    let xb = homogeneous_of(&parts[j], b, &vars);
                    let br = poly_bracket(&xa, &xb, &vars);
                    for t in 0..n {
                        known[t] = known[t].sub(&br[t]);
                    }
                }
                // unknown part: [X_i^(0), X_j^(d)] + [X_i^(d), X_j^(0)]
                // = alpha_i . grad X_j^(d) - alpha_j . grad X_i^(d)
                let alpha_i: Vec<Rational> = (0..n).map(|t| parts[i][t].constant_term()).collect();
                let alpha_j: Vec<Rational> = (0..n).map(|t| parts[j][t].constant_term()).collect();
                for t in 0..n {
                    for gamma in &eq_monos {
                        let mut row = vec![Rational::zero(); unknowns];
                        for l in 0..n {
                            // monomial mu = gamma + e_l contributes
                            // coefficient (gamma_l + 1)
                            let mut mu = gamma.clone();
                            mu.0[l] += 1;
                            if let Ok(mi) = monos.binary_search(&mu) {
                                let factor = Rational::from_integer((gamma.0[l] as i64 + 1).into());
                                if !alpha_i[l].is_zero() {
                                    row[col(j, t, mi)] += &alpha_i[l] * &factor;
                                }
                                if !alpha_j[l].is_zero() {
                                    row[col(i, t, mi)] -= &alpha_j[l] * &factor;
                                }
                            }
                        }
                        let k_coeff = known[t]
                            .terms()
                            .find(|(mm, _)| *mm == gamma)
                            .map(|(_, cc)| cc.clone())
                            .unwrap_or_else(Rational::zero);
                        if row.iter().any(|x| !x.is_zero()) || !k_coeff.is_zero() {
                            rows.push(row);
                            rhs.push(k_coeff);
                        }
                    }
                }
            }
        }

        let solution = if rows.is_empty() {
            vec![Rational::zero(); unknowns]
        } else {
            let mat = Matrix::from_rows(rows);
            let sol = solve_linear(&mat, &rhs);
            let free = sol.nullspace.len();
            match sol.particular {
                Some(p) => {
                    gauge_log.push(GaugeStep {
                        degree,
                        unknowns,
                        free_variables: free,
                    });
                    p
                }
                None => {
                    return Err(Error::InconsistentJetSystem {
                        degree: degree as usize,
                        residual: "homomorphism equations have no solution".into(),
                    })
                }
            }
        };
        if gauge_log.last().map(|g| g.degree) != Some(degree) {
            gauge_log.push(GaugeStep {
                degree,
                unknowns,
                free_variables: unknowns,
            });
        }
        for i in 0..m {
            for t in 0..n {
                let mut add = Polynomial::zero(vars.clone());
                for (mi, mono) in monos.iter().enumerate() {
                    let v = &solution[col(i, t, mi)];
                    if !v.is_zero() {
                        add = add.add(&Polynomial::from_terms(
                            vars.clone(),
                            [(mono.clone(), v.clone())],
                        ));
                    }
                }
                parts[i][t] = parts[i][t].add(&add);
            }
        }
    }

    let images: Vec<JetField> = parts
        .into_iter()
        .map(|coeffs| JetField::new(chart.clone(), order, coeffs))
        .collect();
    Ok((images, chart, complement, gauge_log))
}

fn monomials_of_degree(vars: &crate::symbolic::Vars, d: u32) -> Vec<Monomial> {
    let n = vars.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
            cur[pos] = 0;
        }
    }
    rec(0, d, &mut cur, &mut out);
    out.sort();
    out
}

fn homogeneous_of(coeffs: &[Polynomial], d: u32, vars: &crate::symbolic::Vars) -> Vec<Polynomial> {
    let _ = vars;
    coeffs.iter().map(|p| p.homogeneous_part(d)).collect()
}

fn poly_bracket(
    a: &[Polynomial],
    b: &[Polynomial],
    vars: &crate::symbolic::Vars,
) -> Vec<Polynomial> {
    let n = a.len();
    (0..n)
        .map(|t| {
            let mut acc = Polynomial::zero(vars.clone());
            for l in 0..n {
                acc = acc.add(&a[l].mul(&b[t].partial(l)));
                acc = acc.sub(&b[l].mul(&a[t].partial(l)));
            }
            acc
        })
        .collect()
}

/// Verification of the three realization invariants, with the first failing
/// bracket degree located when fidelity breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationCheck {
    /// complement images evaluate to the standard basis at 0
    pub complement_frame_ok: bool,
    /// coordinate vectors whose images vanish at 0 form exactly h (mod kernel)
    pub isotropy_recovered: bool,
    /// rank of the evaluation map at 0 (transitivity: must equal n)
    pub evaluation_rank: usize,
    /// brackets match the structure constants through this degree
    pub bracket_ok_through: Option<u32>,
    /// first (i, j, degree) where bracket fidelity fails
    pub first_failure: Option<(usize, usize, u32)>,
    pub ok: bool,
}

pub fn check_realization(
    realization: &Realization,
    problem: &RealizationProblem,
) -> RealizationCheck {
    let m = problem.structure.dim();
    let n = problem.codimension();
    let k = problem.order;

    // evaluation matrix at the origin
    let eval_rows: Vec<Vec<Rational>> = realization
        .images
        .iter()
        .map(|j| j.eval_at_origin())
        .collect();
    let eval = Matrix::from_rows(eval_rows.clone());
    let evaluation_rank = eval.rank();

    let mut complement_frame_ok = realization.complement.len() == n;
    for (slot, &ci) in realization.complement.iter().enumerate() {
        for t in 0..n {
            let expect = if t == slot {
                Rational::one()
            } else {
                Rational::zero()
            };
            if eval_rows[ci][t] != expect {
                complement_frame_ok = false;
            }
        }
    }

    // isotropy recovery: kernel of the evaluation map equals h + kernel = h
    let vanishing = Subspace::from_vectors(m, &crate::symbolic::nullspace(&eval.transpose()));
    let expected = problem.h.space().sum(realization.kernel.space());
    let isotropy_recovered = vanishing == expected;

    // bracket fidelity through degree k-1
    let c = problem.structure.tensor();
    let mut first_failure = None;
    'outer: for i in 0..m {
        for j in (i + 1)..m {
            let lhs = realization.images[i].bracket_truncated(&realization.images[j], k - 1);
            let mut rhs = JetField::zero(realization.chart.clone(), k - 1);
            for l in 0..m {
                if !c[i][j][l].is_zero() {
                    rhs = rhs.add(&realization.images[l].truncate(k - 1).scale(&c[i][j][l]));
                }
            }
            if lhs != rhs {
                // locate the first failing degree
                for d in 0..k {
                    if lhs.homogeneous_part(d) != rhs.homogeneous_part(d) {
                        first_failure = Some((i, j, d));
                        break 'outer;
                    }
                }
                first_failure = Some((i, j, k - 1));
                break 'outer;
            }
        }
    }
    let bracket_ok_through = match first_failure {
        None => Some(k - 1),
        Some((_, _, 0)) => None,
        Some((_, _, d)) => Some(d - 1),
    };
    let ok = complement_frame_ok
        && isotropy_recovered
        && evaluation_rank == n
        && first_failure.is_none();
    RealizationCheck {
        complement_frame_ok,
        isotropy_recovered,
        evaluation_rank,
        bracket_ok_through,
        first_failure,
        ok,
    }
}
