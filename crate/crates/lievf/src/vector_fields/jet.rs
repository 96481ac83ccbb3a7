//! Vector-field jets: polynomial coefficients truncated above a total
//! degree. Brackets of order-k jets are only trusted through degree k-1.

use super::{Chart, VanishingOrder, VectorField};
use crate::symbolic::{Polynomial, Rational, RationalFunction};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct JetField {
    chart: Chart,
    order: u32,
    coeffs: Vec<Polynomial>,
}

impl JetField {
    /// Wraps coefficients that already satisfy the truncation invariant.
    pub fn new(chart: Chart, order: u32, coeffs: Vec<Polynomial>) -> Self {
        assert_eq!(coeffs.len(), chart.dimension());
        debug_assert!(coeffs
            .iter()
            .all(|c| c.total_degree().is_none_or(|d| d <= order)));
        JetField {
            chart,
            order,
            coeffs,
        }
    }

    /// Truncates arbitrary polynomial coefficients to the given order.
    pub fn from_polynomials(chart: Chart, order: u32, coeffs: Vec<Polynomial>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.truncate_above(order))
            .collect();
        JetField::new(chart, order, coeffs)
    }

    pub fn zero(chart: Chart, order: u32) -> Self {
        let z = Polynomial::zero(chart.vars().clone());
        let n = chart.dimension();
        JetField {
            chart,
            order,
            coeffs: vec![z; n],
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &JetField) -> JetField {
        debug_assert_eq!(self.chart, other.chart);
        JetField {
            chart: self.chart.clone(),
            order: self.order.min(other.order),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> JetField {
        JetField {
            chart: self.chart.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> JetField {
        JetField {
            chart: self.chart.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.neg()).collect(),
        }
    }

    /// Retruncates to a (usually lower) order.
    pub fn truncate(&self, order: u32) -> JetField {
        JetField {
            chart: self.chart.clone(),
            order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.truncate_above(order))
                .collect(),
        }
    }

    /// The homogeneous degree-`d` part, as a jet of the same order.
    pub fn homogeneous_part(&self, d: u32) -> JetField {
        JetField {
            chart: self.chart.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.homogeneous_part(d)).collect(),
        }
    }

    /// Evaluation at the origin: the constant coefficient vector.
    pub fn eval_at_origin(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.constant_term()).collect()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.eval_at_origin().iter().all(Zero::is_zero)
    }

    pub fn order_at_origin(&self) -> VanishingOrder {
        self.coeffs
            .iter()
            .filter_map(|c| c.terms().map(|(m, _)| m.total_degree()).min())
            .min()
            .map_or(VanishingOrder::Infinite, VanishingOrder::Finite)
    }

    /// Bracket computed exactly on the polynomial representatives, then
    /// truncated at `out_order`. Callers are responsible for staying within
    /// the trusted range (`out_order <= min(order) - 1`).
    pub fn bracket_truncated(&self, other: &JetField, out_order: u32) -> JetField {
        debug_assert_eq!(self.chart, other.chart);
        let n = self.chart.dimension();
        let coeffs = (0..n)
            .map(|j| {
                let mut acc = Polynomial::zero(self.chart.vars().clone());
                for i in 0..n {
                    acc = acc.add(&self.coeffs[i].mul(&other.coeffs[j].partial(i)));
                    acc = acc.sub(&other.coeffs[i].mul(&self.coeffs[j].partial(i)));
                }
                acc.truncate_above(out_order)
            })
            .collect();
        JetField {
            chart: self.chart.clone(),
            order: out_order,
            coeffs,
        }
    }

    /// Promotes the jet to an ordinary vector field with polynomial
    /// coefficients.
    pub fn to_vector_field(&self) -> VectorField {
        VectorField::new(
            self.chart.clone(),
            self.coeffs
                .iter()
                .map(|c| RationalFunction::from_polynomial(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for JetField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (jet order {})", self.to_vector_field(), self.order)
    }
}

impl fmt::Debug for JetField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Vars;

    #[test]
    fn jet_bracket_bookkeeping() {
        // truncate(bracket(v, w), k-1) == bracket(truncate(v, k), truncate(w, k)) at k-1
        let chart = Chart::new(Vars::new(["x", "y"]));
        let v = VectorField::parse(&chart, &["1/(1-x)", "y^2"]).unwrap();
        let w = VectorField::parse(&chart, &["x*y", "1/(1+y)"]).unwrap();
        for k in 1..=4u32 {
            let exact = v.bracket(&w).unwrap().truncate(k - 1).unwrap();
            let jets = v
                .truncate(k)
                .unwrap()
                .bracket_truncated(&w.truncate(k).unwrap(), k - 1);
            assert_eq!(exact.coeffs(), jets.coeffs(), "mismatch at k={k}");
        }
    }

    #[test]
    fn origin_evaluation() {
        let chart = Chart::new(Vars::new(["x", "y"]));
        let v = VectorField::parse(&chart, &["1+x", "x*y"]).unwrap();
        let jet = v.truncate(2).unwrap();
        assert_eq!(
            jet.eval_at_origin(),
            vec![crate::symbolic::rat_int(1), crate::symbolic::rat_int(0)]
        );
        assert!(!jet.vanishes_at_origin());
        assert_eq!(jet.order_at_origin(), VanishingOrder::Finite(0));
    }
}
