//! Multivector fields (wedge products of vector fields). Only sorted index
//! sets are stored, so antisymmetry is structural. The library exercises
//! degrees n and n-1; the representation is uniform in the degree.

use super::{Chart, VectorField};
use crate::error::{Error, Result};
use crate::symbolic::{Matrix, RationalFunction};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiVector {
    chart: Chart,
    degree: usize,
    /// sorted index set -> coefficient; zero coefficients are not stored
    components: BTreeMap<Vec<usize>, RationalFunction>,
}

impl MultiVector {
    pub fn zero(chart: Chart, degree: usize) -> Self {
        assert!(degree <= chart.dimension());
        MultiVector {
            chart,
            degree,
            components: BTreeMap::new(),
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, indices: &[usize]) -> RationalFunction {
        self.components
            .get(indices)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.chart.vars().clone()))
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &RationalFunction)> {
        self.components.iter()
    }

    fn insert(&mut self, indices: Vec<usize>, value: RationalFunction) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(indices) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&value);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiVector) -> Result<MultiVector> {
        if self.chart != other.chart || self.degree != other.degree {
            return Err(Error::ChartMismatch);
        }
        let mut out = self.clone();
        for (idx, v) in &other.components {
            out.insert(idx.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiVector {
        MultiVector {
            chart: self.chart.clone(),
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(i, v)| (i.clone(), v.neg()))
                .collect(),
        }
    }

    pub fn scale_fn(&self, f: &RationalFunction) -> MultiVector {
        if f.is_zero() {
            return MultiVector::zero(self.chart.clone(), self.degree);
        }
        MultiVector {
            chart: self.chart.clone(),
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(i, v)| (i.clone(), v.mul(f)))
                .collect(),
        }
    }

    /// Wedge with a vector field on the right: `self ∧ w`.
    pub fn wedge_field(&self, w: &VectorField) -> Result<MultiVector> {
        if self.chart != *w.chart() {
            return Err(Error::ChartMismatch);
        }
        let n = self.chart.dimension();
        let mut out = MultiVector::zero(self.chart.clone(), self.degree + 1);
        for (idx, v) in &self.components {
            for l in 0..n {
                if idx.contains(&l) {
                    continue;
                }
                let coeff = v.mul(w.coeff(l));
                if coeff.is_zero() {
                    continue;
                }
                let (sorted, sign) = insert_sorted(idx, l);
                out.insert(sorted, if sign { coeff.neg() } else { coeff });
            }
        }
        Ok(out)
    }
}

/// Inserts `l` into the sorted set `idx`; returns (new sorted set, odd_sign).
fn insert_sorted(idx: &[usize], l: usize) -> (Vec<usize>, bool) {
    let pos = idx.iter().position(|&i| i > l).unwrap_or(idx.len());
    let mut out = Vec::with_capacity(idx.len() + 1);
    out.extend_from_slice(&idx[..pos]);
    out.push(l);
    out.extend_from_slice(&idx[pos..]);
    // moving l past (len - pos) trailing entries from the right end costs
    // (len - pos) transpositions
    ((out), (idx.len() - pos) % 2 == 1)
}

/// Wedge product of `k` vector fields: the components are the k x k minors
/// of the coefficient matrix, indexed by sorted axis subsets.
pub fn wedge(fields: &[VectorField]) -> Result<MultiVector> {
    let first = fields
        .first()
        .ok_or_else(|| Error::DimensionMismatch("empty wedge".into()))?;
    let chart = first.chart().clone();
    let n = chart.dimension();
    let k = fields.len();
    if k > n {
        return Err(Error::DimensionMismatch(format!(
            "wedge degree {k} exceeds dimension {n}"
        )));
    }
    for f in fields {
        if f.chart() != &chart {
            return Err(Error::ChartMismatch);
        }
    }
    let mut out = MultiVector::zero(chart.clone(), k);
    for subset in k_subsets(n, k) {
        let minor = Matrix::from_rows(
            fields
                .iter()
                .map(|f| subset.iter().map(|&j| f.coeff(j).clone()).collect())
                .collect(),
        );
        out.insert(subset, minor.det());
    }
    Ok(out)
}

/// Lie derivative of a multivector along `v`, by the Leibniz extension of
/// the bracket: functions differentiate, each wedge slot brackets.
pub fn lie_derivative(v: &VectorField, theta: &MultiVector) -> Result<MultiVector> {
    if v.chart() != theta.chart() {
        return Err(Error::ChartMismatch);
    }
    let n = theta.chart().dimension();
    let mut out = MultiVector::zero(theta.chart().clone(), theta.degree());
    for (idx, f) in theta.components() {
        // v(f) e_S
        out.insert(idx.clone(), v.apply(f)?);
        // f * sum_i e_{s_1} ∧ ... ∧ [v, d_{s_i}] ∧ ... ; [v, d_j] = -sum_l dv_l/dx_j d_l
        for (slot, &j) in idx.iter().enumerate() {
            for l in 0..n {
                let deriv = v.coeff(l).partial(j);
                if deriv.is_zero() {
                    continue;
                }
                if idx.iter().enumerate().any(|(s, &m)| s != slot && m == l) {
                    continue; // repeated axis, wedge vanishes
                }
                let mut replaced: Vec<usize> = idx.clone();
                replaced.remove(slot);
                let (sorted, _) = insert_sorted(&replaced, l);
                // parity of moving the new axis from the replaced slot to its
                // sorted position
                let inserted_at = sorted.iter().position(|&m| m == l).unwrap();
                let odd = (slot + inserted_at) % 2 == 1;
                let term = f.mul(&deriv).neg();
                out.insert(sorted, if odd { term.neg() } else { term });
            }
        }
    }
    Ok(out)
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, v) in &self.components {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let axes: Vec<&str> = idx.iter().map(|&i| self.chart.vars().name(i)).collect();
            write!(f, "({}) d/d{}", v, axes.join("^d/d"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorted k-element subsets of `{0..n-1}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Vars;

    fn chart2() -> Chart {
        Chart::new(Vars::new(["x", "y"]))
    }

    fn vf(cx: &str, cy: &str) -> VectorField {
        VectorField::parse(&chart2(), &[cx, cy]).unwrap()
    }

    fn rf(s: &str) -> RationalFunction {
        crate::symbolic::parse_expression(s, chart2().vars()).unwrap()
    }

    #[test]
    fn wedge_minors() {
        let theta = wedge(&[vf("1", "0"), vf("0", "1")]).unwrap();
        assert_eq!(theta.component(&[0, 1]), rf("1"));
        let theta = wedge(&[vf("x", "0"), vf("0", "1")]).unwrap();
        assert_eq!(theta.component(&[0, 1]), rf("x"));
        // (dx + y dy) ∧ (x dy) has top component x
        let theta = wedge(&[vf("1", "y"), vf("0", "x")]).unwrap();
        assert_eq!(theta.component(&[0, 1]), rf("x"));
    }

    #[test]
    fn wedge_antisymmetry() {
        let a = vf("x", "y^2");
        let b = vf("1", "x*y");
        let ab = wedge(&[a.clone(), b.clone()]).unwrap();
        let ba = wedge(&[b, a]).unwrap();
        assert_eq!(ab, ba.neg());
        assert!(wedge(&[vf("x", "y"), vf("x", "y")]).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_examples() {
        let top = wedge(&[vf("1", "0"), vf("0", "1")]).unwrap();
        // L_{x dx} (dx ∧ dy) = -dx ∧ dy
        let l = lie_derivative(&vf("x", "0"), &top).unwrap();
        assert_eq!(l, top.neg());
        // constant fields act trivially
        assert!(lie_derivative(&vf("1", "0"), &top).unwrap().is_zero());
        // off-diagonal: L_{x dy} (dx ∧ dy) = 0
        assert!(lie_derivative(&vf("0", "x"), &top).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_is_a_derivation_over_functions() {
        // L_v(f Θ) = v(f) Θ + f L_v Θ on the top multivector
        let v = vf("x*y", "y^2+1");
        let f = rf("x^2 - y");
        let top = wedge(&[vf("1", "0"), vf("0", "1")]).unwrap();
        let lhs = lie_derivative(&v, &top.scale_fn(&f)).unwrap();
        let rhs = top
            .scale_fn(&v.apply(&f).unwrap())
            .add(&lie_derivative(&v, &top).unwrap().scale_fn(&f))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_derivative_matches_wedge_leibniz() {
        // L_v(a ∧ b) = [v,a] ∧ b + a ∧ [v,b] for concrete fields
        let v = vf("x^2", "x*y");
        let a = vf("y", "1");
        let b = vf("x", "y^2");
        let lhs = lie_derivative(&v, &wedge(&[a.clone(), b.clone()]).unwrap()).unwrap();
        let rhs = wedge(&[v.bracket(&a).unwrap(), b.clone()])
            .unwrap()
            .add(&wedge(&[a, v.bracket(&b).unwrap()]).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(k_subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k_subsets(2, 0), vec![Vec::<usize>::new()]);
    }
}
