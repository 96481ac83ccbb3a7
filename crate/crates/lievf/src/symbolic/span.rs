//! Q-linear algebra on rational functions: membership in a constant span and
//! deterministic span bases. Identities are decided by canonical-form
//! equality after clearing denominators, never by sampling.

use super::gcd::poly_lcm;
use super::matrix::{solve_linear, Matrix};
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ratfun::RationalFunction;
use super::{Rational, Vars};
use num_traits::Zero;
use std::collections::BTreeSet;

/// Clears denominators across `funcs`: returns (common denominator D,
/// numerators of `f * D`).
fn clear_denominators(funcs: &[&RationalFunction], vars: &Vars) -> (Polynomial, Vec<Polynomial>) {
    let mut den = Polynomial::one(vars.clone());
    for f in funcs {
        den = poly_lcm(&den, f.denominator());
    }
    let nums = funcs
        .iter()
        .map(|f| {
            let extra = den
                .div_exact(f.denominator())
                .expect("lcm is a common multiple");
            f.numerator().mul(&extra)
        })
        .collect();
    (den, nums)
}

fn monomial_columns(polys: &[Polynomial]) -> Vec<Monomial> {
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    for p in polys {
        for (m, _) in p.terms() {
            set.insert(m.clone());
        }
    }
    set.into_iter().collect()
}

fn coeff_row(p: &Polynomial, monomials: &[Monomial]) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); monomials.len()];
    for (m, c) in p.terms() {
        let idx = monomials.binary_search(m).expect("monomial registered");
        row[idx] = c.clone();
    }
    row
}

/// Expresses `target` as a Q-linear combination of `basis`; `None` when it is
/// outside the span. Works entirely with exact polynomial identities.
pub fn express_in_constant_span(
    target: &RationalFunction,
    basis: &[RationalFunction],
) -> Option<Vec<Rational>> {
    express_vectors_in_constant_span(
        std::slice::from_ref(target),
        &basis.iter().map(std::slice::from_ref).collect::<Vec<_>>(),
    )
}

/// Vector variant: each basis element and the target are tuples of rational
/// functions (e.g. vector-field coefficient vectors), matched componentwise.
pub fn express_vectors_in_constant_span(
    target: &[RationalFunction],
    basis: &[&[RationalFunction]],
) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return if target.iter().all(|f| f.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let ncomp = target.len();
    debug_assert!(basis.iter().all(|b| b.len() == ncomp));
    let vars = target
        .first()
        .map(|f| f.vars().clone())
        .expect("nonempty target");

    // One block of linear equations per component.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for comp in 0..ncomp {
        let mut funcs: Vec<&RationalFunction> = Vec::with_capacity(basis.len() + 1);
        funcs.push(&target[comp]);
        for b in basis {
            funcs.push(&b[comp]);
        }
        let (_, nums) = clear_denominators(&funcs, &vars);
        let monomials = monomial_columns(&nums);
        if monomials.is_empty() {
            continue;
        }
        let target_row = coeff_row(&nums[0], &monomials);
        let basis_rows: Vec<Vec<Rational>> =
            nums[1..].iter().map(|p| coeff_row(p, &monomials)).collect();
        for (mi, _) in monomials.iter().enumerate() {
            rows.push(basis_rows.iter().map(|r| r[mi].clone()).collect());
            rhs.push(target_row[mi].clone());
        }
    }
    if rows.is_empty() {
        return Some(vec![Rational::zero(); basis.len()]);
    }
    let m = Matrix::from_rows(rows);
    solve_linear(&m, &rhs).particular
}

/// Dimension of the Q-span of the given tuples of rational functions.
pub fn constant_span_rank(vectors: &[&[RationalFunction]]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let ncomp = vectors[0].len();
    let vars = vectors[0][0].vars().clone();
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); vectors.len()];
    for comp in 0..ncomp {
        let funcs: Vec<&RationalFunction> = vectors.iter().map(|v| &v[comp]).collect();
        let (_, nums) = clear_denominators(&funcs, &vars);
        let monomials = monomial_columns(&nums);
        for (vi, p) in nums.iter().enumerate() {
            rows[vi].extend(coeff_row(p, &monomials));
        }
    }
    if rows[0].is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

/// Deterministic Q-basis of the span of `funcs`: clear denominators, row
/// reduce the coefficient expansion, map the reduced rows back to functions.
pub fn rational_span_basis(funcs: &[RationalFunction]) -> Vec<RationalFunction> {
    let nonzero: Vec<&RationalFunction> = funcs.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let vars = nonzero[0].vars().clone();
    let (den, nums) = clear_denominators(&nonzero, &vars);
    let monomials = monomial_columns(&nums);
    let mut m = Matrix::from_rows(nums.iter().map(|p| coeff_row(p, &monomials)).collect());
    let pivots = m.rref();
    let den_rf = RationalFunction::from_polynomial(den);
    (0..pivots.len())
        .map(|r| {
            let poly = Polynomial::from_terms(
                vars.clone(),
                monomials
                    .iter()
                    .zip(m.row(r))
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(mon, c)| (mon.clone(), c.clone())),
            );
            RationalFunction::from_polynomial(poly)
                .div(&den_rf)
                .expect("common denominator is nonzero")
        })
        .collect()
}
