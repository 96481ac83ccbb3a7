//! Vector fields with rational-function coefficients: bracket, application to
//! functions, evaluation, order of vanishing at the origin, jets, and
//! multivector machinery.

mod jet;
mod multivector;

pub use jet::JetField;
pub use multivector::{k_subsets, lie_derivative, wedge, MultiVector};

use crate::error::{Error, Result};
use crate::symbolic::{
    parse_expression, solve_linear, Matrix, Polynomial, Rational, RationalFunction, Vars,
};
use num_traits::Zero;
use std::fmt;

/// A coordinate chart: dimension plus ordered variable identifiers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chart {
    vars: Vars,
}

impl Chart {
    pub fn new(vars: Vars) -> Self {
        Chart { vars }
    }

    /// Chart with variables `x1..xn`.
    pub fn canonical(n: usize) -> Self {
        Chart {
            vars: Vars::canonical(n),
        }
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }
}

/// Order of vanishing at the origin.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VanishingOrder {
    Finite(u32),
    Infinite,
}

/// A vector field `sum_i a_i(x) d/dx_i` on a chart.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    chart: Chart,
    coeffs: Vec<RationalFunction>,
}

impl VectorField {
    pub fn new(chart: Chart, coeffs: Vec<RationalFunction>) -> Self {
        assert_eq!(
            coeffs.len(),
            chart.dimension(),
            "coefficient count = chart dimension"
        );
        VectorField { chart, coeffs }
    }

    /// Parses one coefficient string per coordinate.
    pub fn parse(chart: &Chart, coeffs: &[&str]) -> Result<Self> {
        if coeffs.len() != chart.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coefficients, got {}",
                chart.dimension(),
                coeffs.len()
            )));
        }
        let parsed = coeffs
            .iter()
            .map(|s| parse_expression(s, chart.vars()))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField::new(chart.clone(), parsed))
    }

    pub fn zero(chart: Chart) -> Self {
        let z = RationalFunction::zero(chart.vars().clone());
        let n = chart.dimension();
        VectorField {
            chart,
            coeffs: vec![z; n],
        }
    }

    /// The coordinate field `d/dx_i`.
    pub fn coordinate(chart: Chart, i: usize) -> Self {
        let mut coeffs = vec![RationalFunction::zero(chart.vars().clone()); chart.dimension()];
        coeffs[i] = RationalFunction::one(chart.vars().clone());
        VectorField { chart, coeffs }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &RationalFunction {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn has_polynomial_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_polynomial())
    }

    fn check_chart(&self, other: &Chart) -> Result<()> {
        if &self.chart != other {
            return Err(Error::ChartMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        self.check_chart(&other.chart)?;
        Ok(VectorField {
            chart: self.chart.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|f| f.scale(c)).collect(),
        }
    }

    pub fn scale_fn(&self, f: &RationalFunction) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul(f)).collect(),
        }
    }

    /// Linear combination `sum_i coords_i * fields_i`.
    pub fn linear_combination(
        chart: &Chart,
        fields: &[VectorField],
        coords: &[Rational],
    ) -> VectorField {
        assert_eq!(fields.len(), coords.len());
        let mut acc = VectorField::zero(chart.clone());
        for (f, c) in fields.iter().zip(coords) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c)).expect("same chart");
            }
        }
        acc
    }

    /// Applies the field to a function: `v(f) = sum_j a_j df/dx_j`.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        if f.vars() != self.chart.vars() {
            return Err(Error::ChartMismatch);
        }
        let mut acc = RationalFunction::zero(self.chart.vars().clone());
        for (j, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&a.mul(&f.partial(j)));
            }
        }
        Ok(acc)
    }

    /// Lie bracket: coefficient `j` of `[v, w]` is `v(w_j) - w(v_j)`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        self.check_chart(&other.chart)?;
        let coeffs = (0..self.chart.dimension())
            .map(|j| {
                let a = self.apply(&other.coeffs[j])?;
                let b = other.apply(&self.coeffs[j])?;
                Ok(a.sub(&b))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            chart: self.chart.clone(),
            coeffs,
        })
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }

    /// Substitutes `x_i -> x_i + offset_i` in every coefficient, recentering
    /// the chart at `offset`.
    pub fn shift(&self, offsets: &[Rational]) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|c| c.shift(offsets)).collect(),
        }
    }

    /// Minimal total degree with a nonzero term across the coefficients;
    /// `Infinite` iff the field is zero. Non-polynomial coefficients are
    /// accepted only when their denominators do not vanish at the origin.
    pub fn order_at_origin(&self) -> Result<VanishingOrder> {
        let origin = vec![Rational::zero(); self.chart.dimension()];
        let mut best: Option<u32> = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            if !c.is_polynomial() && !c.denominator_nonzero_at(&origin) {
                return Err(Error::NonPolynomial);
            }
            // unit denominator at 0: order of p/q equals order of p
            let ord = c
                .numerator()
                .terms()
                .map(|(m, _)| m.total_degree())
                .min()
                .expect("nonzero numerator");
            best = Some(best.map_or(ord, |b| b.min(ord)));
        }
        Ok(best.map_or(VanishingOrder::Infinite, VanishingOrder::Finite))
    }

    /// Exact Taylor coefficients through total degree `k`. Errors when some
    /// denominator vanishes at the origin.
    pub fn truncate(&self, k: u32) -> Result<JetField> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| taylor_truncate(c, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(JetField::new(self.chart.clone(), k, coeffs))
    }

    /// Rewrites the field in a new chart related by `x = subs(y)`, where
    /// `subs` lists the old coordinates as functions of the new ones. The
    /// substitution must be dominant (invertible Jacobian over the function
    /// field); no inverse map is required.
    pub fn pullback(&self, new_chart: &Chart, subs: &[RationalFunction]) -> Result<VectorField> {
        if subs.len() != self.chart.dimension() {
            return Err(Error::DimensionMismatch("substitution entry count".into()));
        }
        for s in subs {
            if s.vars() != new_chart.vars() {
                return Err(Error::ChartMismatch);
            }
        }
        let n = self.chart.dimension();
        let m = new_chart.dimension();
        // Jacobian J[i][j] = d subs_i / d y_j
        let jac = Matrix::from_rows(
            (0..n)
                .map(|i| (0..m).map(|j| subs[i].partial(j)).collect())
                .collect(),
        );
        let rhs: Vec<RationalFunction> = self
            .coeffs
            .iter()
            .map(|a| a.compose(subs))
            .collect::<Result<Vec<_>>>()?;
        let sol = solve_linear(&jac, &rhs);
        match sol.particular {
            Some(coeffs) if sol.nullspace.is_empty() => {
                Ok(VectorField::new(new_chart.clone(), coeffs))
            }
            _ => Err(Error::Invalid("substitution is not dominant".into())),
        }
    }
}

/// Taylor expansion of a rational function at the origin through total
/// degree `k`; exact, errors when the denominator vanishes at 0.
pub fn taylor_truncate(f: &RationalFunction, k: u32) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(Polynomial::zero(f.vars().clone()));
    }
    if let Some(p) = f.as_polynomial() {
        return Ok(p.truncate_above(k));
    }
    let origin = vec![Rational::zero(); f.vars().len()];
    let c = f.denominator().eval(&origin);
    if c.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    // den = c (1 - u), ord(u) >= 1; 1/den = (1/c) sum u^j truncated
    let u = Polynomial::constant(f.vars().clone(), c.clone())
        .sub(f.denominator())
        .scale(&c.recip());
    let mut inv = Polynomial::one(f.vars().clone());
    let mut upow = Polynomial::one(f.vars().clone());
    for _ in 0..k {
        upow = upow.mul(&u).truncate_above(k);
        if upow.is_zero() {
            break;
        }
        inv = inv.add(&upow);
    }
    inv = inv.scale(&c.recip());
    Ok(f.numerator().mul(&inv).truncate_above(k))
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) d/d{}", c, self.chart.vars().name(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
