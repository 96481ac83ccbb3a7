//! Exact linear algebra over the rationals and the rational-function field.
//!
//! Solving uses reduced row echelon form with a deterministic pivot rule
//! (leftmost nonzero column, then cheapest canonical-form entry). Ranks are
//! computed fraction-free (Bareiss) after clearing denominators.

use super::polynomial::Polynomial;
use super::ratfun::RationalFunction;
use super::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Field element usable as a matrix entry.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn make_zero(&self) -> Self;
    fn make_one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; caller guarantees the element is nonzero.
    fn inv(&self) -> Self;
    /// Pivot preference; smaller is better. Ties break on row order.
    fn pivot_cost(&self) -> (u64, u64);
}

impl Scalar for Rational {
    fn make_zero(&self) -> Self {
        Rational::zero()
    }
    fn make_one(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn pivot_cost(&self) -> (u64, u64) {
        (self.numer().bits() + self.denom().bits(), 0)
    }
}

impl Scalar for RationalFunction {
    fn make_zero(&self) -> Self {
        RationalFunction::zero(self.vars().clone())
    }
    fn make_one(&self) -> Self {
        RationalFunction::one(self.vars().clone())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn inv(&self) -> Self {
        self.recip().expect("pivot entries are nonzero")
    }
    fn pivot_cost(&self) -> (u64, u64) {
        let (deg, terms) = self.complexity();
        (deg as u64, terms as u64)
    }
}

/// Rectangular matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
    zero: K,
}

impl<K: Scalar> Matrix<K> {
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        assert!(
            !rows.is_empty() && !rows[0].is_empty(),
            "use zeros() for degenerate shapes"
        );
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let zero = rows[0][0].make_zero();
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
            zero,
        }
    }

    pub fn zeros(rows: usize, cols: usize, like: &K) -> Self {
        let zero = like.make_zero();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, like: &K) -> Self {
        let mut m = Self::zeros(n, n, like);
        for i in 0..n {
            *m.at_mut(i, i) = like.make_one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut K {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut m = Matrix::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn matmul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.mul(other.at(k, j));
                    *out.at_mut(i, j) = out.at(i, j).add(&t);
                }
            }
        }
        out
    }

    pub fn sub_matrix(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).sub(other.at(i, j));
            }
        }
        out
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.zero.clone();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    /// Pivot choice is deterministic: leftmost nonzero column, then the entry
    /// with the smallest canonical-form cost, then the earliest row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut best: Option<(usize, (u64, u64))> = None;
            for i in r..self.rows {
                if !self.at(i, c).is_zero() {
                    let cost = self.at(i, c).pivot_cost();
                    if best.as_ref().is_none_or(|(_, bc)| cost < *bc) {
                        best = Some((i, cost));
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            self.swap_rows(r, prow);
            let inv = self.at(r, c).inv();
            for j in c..self.cols {
                let v = self.at(r, j).mul(&inv);
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank via field elimination (exact). See also the fraction-free ranks.
    pub fn rank_by_rref(&self) -> usize {
        self.clone().rref().len()
    }

    /// Determinant of a square matrix by exact elimination.
    pub fn det(&self) -> K {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.zero.make_one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !Scalar::is_zero(m.at(i, c))) else {
                return self.zero.clone();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            det = det.mul(m.at(c, c));
            let inv = m.at(c, c).inv();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..n {
                    let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    *m.at_mut(i, j) = v;
                }
            }
        }
        det
    }

    pub fn trace(&self) -> K {
        assert_eq!(self.rows, self.cols);
        let mut t = self.zero.clone();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<K>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = self.zero.make_one();
        }
        let pivots = aug.rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Matrix::zeros(n, n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(inv)
    }
}

/// Outcome of an exact linear solve `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution<K> {
    /// A particular solution (free variables set to zero), or `None`.
    pub particular: Option<Vec<K>>,
    /// Deterministic basis of the solution space of `A x = 0`.
    pub nullspace: Vec<Vec<K>>,
}

/// Exact solve with deterministic pivoting; `NoSolution` is a value
/// (`particular == None`), never an error.
pub fn solve_linear<K: Scalar>(a: &Matrix<K>, b: &[K]) -> LinearSolution<K> {
    assert_eq!(a.rows(), b.len());
    let zero = a.zero.clone();
    let one = zero.make_one();
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1, &zero);
    for i in 0..a.rows() {
        for j in 0..n {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, n) = b[i].clone();
    }
    let pivots = aug.rref();
    let inconsistent = pivots.last() == Some(&n);
    let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < n).collect();
    let free_cols: Vec<usize> = (0..n).filter(|c| !coeff_pivots.contains(c)).collect();

    let particular = if inconsistent {
        None
    } else {
        let mut x = vec![zero.clone(); n];
        for (r, &c) in coeff_pivots.iter().enumerate() {
            x[c] = aug.at(r, n).clone();
        }
        Some(x)
    };

    let mut nullspace = Vec::with_capacity(free_cols.len());
    for &f in &free_cols {
        let mut v = vec![zero.clone(); n];
        v[f] = one.clone();
        for (r, &c) in coeff_pivots.iter().enumerate() {
            v[c] = aug.at(r, f).neg();
        }
        nullspace.push(v);
    }
    LinearSolution {
        particular,
        nullspace,
    }
}

/// Deterministic basis of the nullspace of `A` over its field.
pub fn nullspace<K: Scalar>(a: &Matrix<K>) -> Vec<Vec<K>> {
    let b = vec![a.zero.clone(); a.rows()];
    solve_linear(a, &b).nullspace
}

// ---------------------------------------------------------------------------
// Fraction-free ranks (Bareiss elimination in the underlying domain).
// ---------------------------------------------------------------------------

trait FractionFree: Clone {
    fn vanished(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl FractionFree for BigInt {
    fn vanished(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!((self % other).is_zero());
        self / other
    }
}

impl FractionFree for Polynomial {
    fn vanished(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Polynomial::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Polynomial::sub(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        Polynomial::div_exact(self, other).expect("Bareiss division is exact")
    }
}

fn bareiss_rank<D: FractionFree + ZeroLike>(mut m: Vec<Vec<D>>, one: D) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = one;
    let mut rank = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].vanished()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = m[r][c].mul(&m[i][j]).sub(&m[i][c].mul(&m[r][j]));
                m[i][j] = t.div_exact(&prev);
            }
            m[i][c] = m[r][c].make_zero_like();
        }
        prev = m[r][c].clone();
        rank += 1;
        r += 1;
    }
    rank
}

trait ZeroLike {
    fn make_zero_like(&self) -> Self;
}

impl ZeroLike for BigInt {
    fn make_zero_like(&self) -> Self {
        BigInt::zero()
    }
}

impl ZeroLike for Polynomial {
    fn make_zero_like(&self) -> Self {
        Polynomial::zero(self.vars().clone())
    }
}

impl Matrix<Rational> {
    /// Rank over the rationals via integer Bareiss elimination.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    let d = self.at(i, j).denom();
                    let g = super::bigint_gcd(&lcm, d);
                    lcm = &lcm / &g * d;
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(rows, BigInt::one())
    }
}

impl Matrix<RationalFunction> {
    /// Rank over the rational-function field via fraction-free polynomial
    /// elimination after clearing denominators row by row.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Polynomial>> = (0..self.rows)
            .map(|i| {
                let mut lcm = Polynomial::one(self.zero.vars().clone());
                for j in 0..self.cols {
                    let d = self.at(i, j).denominator();
                    lcm = super::gcd::poly_lcm(&lcm, d);
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        let extra = lcm
                            .div_exact(e.denominator())
                            .expect("lcm is a common multiple");
                        e.numerator().mul(&extra)
                    })
                    .collect()
            })
            .collect();
        let one = Polynomial::one(self.zero.vars().clone());
        bareiss_rank(rows, one)
    }
}

fn rre_basis(vectors: &[Vec<Rational>], ambient: usize) -> Vec<Vec<Rational>> {
    let vectors: Vec<&Vec<Rational>> = vectors
        .iter()
        .filter(|v| v.iter().any(|x| !Zero::is_zero(x)))
        .collect();
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(vectors.into_iter().cloned().collect());
    assert_eq!(m.cols(), ambient);
    let pivots = m.rref();
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

/// A linear subspace of `Q^ambient`, held in canonical reduced row echelon
/// basis so that equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient);
        }
        Subspace {
            ambient,
            basis: rre_basis(vectors, ambient),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let mut basis = Vec::with_capacity(ambient);
        for i in 0..ambient {
            let mut v = vec![Rational::zero(); ambient];
            v[i] = Rational::one();
            basis.push(v);
        }
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Pivot coordinates of the canonical basis.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| {
                row.iter()
                    .position(|x| !Zero::is_zero(x))
                    .expect("basis rows nonzero")
            })
            .collect()
    }

    /// Residual of reducing `v` against the canonical basis; zero iff `v` is
    /// a member.
    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(self.pivot_columns().iter()) {
            if !Zero::is_zero(&w[p]) {
                let f = w[p].clone();
                for j in 0..self.ambient {
                    w[j] = &w[j] - &(&f * &row[j]);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::from_vectors(self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // alpha . A = beta . B  =>  [A^T | -B^T] (alpha, beta)^T = 0
        let ra = self.basis.len();
        let rb = other.basis.len();
        let mut m = Matrix::zeros(self.ambient, ra + rb, &Rational::zero());
        for (k, row) in self.basis.iter().enumerate() {
            for j in 0..self.ambient {
                *m.at_mut(j, k) = row[j].clone();
            }
        }
        for (k, row) in other.basis.iter().enumerate() {
            for j in 0..self.ambient {
                *m.at_mut(j, ra + k) = -row[j].clone();
            }
        }
        let null = nullspace(&m);
        let vecs: Vec<Vec<Rational>> = null
            .iter()
            .map(|ab| {
                (0..self.ambient)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for (k, row) in self.basis.iter().enumerate() {
                            acc += &ab[k] * &row[j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Subspace::from_vectors(self.ambient, &vecs)
    }

    /// `{ w : <w, b> = 0 for all basis vectors b }`.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::whole(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone());
        Subspace::from_vectors(self.ambient, &nullspace(&m))
    }
}

/// Expresses `target` as a rational combination of `generators` (columns);
/// `None` when it is outside their span.
pub fn coordinates_in(generators: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    if generators.is_empty() {
        return if target.iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let ambient = target.len();
    let mut m = Matrix::zeros(ambient, generators.len(), &Rational::zero());
    for (k, g) in generators.iter().enumerate() {
        assert_eq!(g.len(), ambient);
        for j in 0..ambient {
            *m.at_mut(j, k) = g[j].clone();
        }
    }
    solve_linear(&m, target).particular
}

/// Rational roots of `det(M - t I)` for a square rational matrix, sorted
/// ascending, without multiplicity. Uses Faddeev-LeVerrier for the
/// characteristic polynomial and divisor search for candidate roots.
pub fn rational_eigenvalues(m: &Matrix<Rational>) -> Vec<Rational> {
    let coeffs = char_poly(m);
    rational_roots(&coeffs)
}

/// Coefficients `c_0..c_n` of `det(t I - M) = sum c_k t^k`, monic.
pub fn char_poly(m: &Matrix<Rational>) -> Vec<Rational> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    // Faddeev-LeVerrier: M_1 = M, c_{n-k} built from traces.
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = m.clone();
    for k in 1..=n {
        let c = -(mk.trace() / Rational::from_integer(BigInt::from(k as i64)));
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        let mut shifted = mk.clone();
        for i in 0..n {
            *shifted.at_mut(i, i) = shifted.at(i, i) + &c;
        }
        mk = m.matmul(&shifted);
    }
    coeffs
}

fn divisors_bounded(n: &BigInt) -> Option<Vec<BigInt>> {
    // Trial division; gives up on inputs that are too hard to factor, which
    // callers treat as "no rational roots found from this source".
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1u32;
    }
    if n > BigInt::one() {
        if n.bits() > 48 {
            return None;
        }
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe = &pe * &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Some(divs)
}

/// Rational roots of a rational-coefficient polynomial `sum c_k t^k`.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let deg = match coeffs.iter().rposition(|c| !Zero::is_zero(c)) {
        Some(d) => d,
        None => return Vec::new(),
    };
    // integer coefficients: multiply by lcm of denominators
    let mut lcm = BigInt::one();
    for c in &coeffs[..=deg] {
        let g = super::bigint_gcd(&lcm, c.denom());
        lcm = &lcm / &g * c.denom();
    }
    let ints: Vec<BigInt> = coeffs[..=deg]
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots: Vec<Rational> = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let a0 = &ints[low];
    let an = &ints[deg];
    let eval = |r: &Rational| -> bool {
        let mut acc = Rational::zero();
        for c in ints.iter().rev() {
            acc = acc * r + Rational::from_integer(c.clone());
        }
        Zero::is_zero(&acc)
    };
    if let (Some(ps), Some(qs)) = (divisors_bounded(a0), divisors_bounded(an)) {
        for p in &ps {
            for q in &qs {
                for sign in [1i64, -1] {
                    let cand = Rational::new(p * BigInt::from(sign), q.clone());
                    if eval(&cand) && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{rat, rat_int, Vars};

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_identity() {
        assert_eq!(qm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).rank(), 3);
    }

    #[test]
    fn rank_example_by_hand() {
        // [[1,0],[0,1],[x,0]] has rank 2 over Q(x)
        let vars = Vars::new(["x"]);
        let one = RationalFunction::one(vars.clone());
        let zero = RationalFunction::zero(vars.clone());
        let x = RationalFunction::var(vars, 0);
        let m = Matrix::from_rows(vec![
            vec![one.clone(), zero.clone()],
            vec![zero.clone(), one.clone()],
            vec![x, zero],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), m.rank_by_rref());
    }

    #[test]
    fn rank_proportional_function_rows() {
        // [[x, 0], [x^2, 0]] has rank 1
        let vars = Vars::new(["x"]);
        let zero = RationalFunction::zero(vars.clone());
        let x = RationalFunction::var(vars, 0);
        let m = Matrix::from_rows(vec![vec![x.clone(), zero.clone()], vec![x.mul(&x), zero]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(11);
        for _ in 0..30 {
            let r = rng.gen_range(1..5usize);
            let c = rng.gen_range(1..5usize);
            let m = Matrix::from_rows(
                (0..r)
                    .map(|_| {
                        (0..c)
                            .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                            .collect()
                    })
                    .collect(),
            );
            assert_eq!(m.rank(), m.transpose().rank());
            assert_eq!(m.rank(), m.rank_by_rref());
        }
    }

    #[test]
    fn solve_identity() {
        let sol = solve_linear(&qm(&[&[1, 0], &[0, 1]]), &[rat_int(1), rat_int(2)]);
        assert_eq!(sol.particular, Some(vec![rat_int(1), rat_int(2)]));
        assert!(sol.nullspace.is_empty());
    }

    #[test]
    fn solve_underdetermined() {
        let sol = solve_linear(&qm(&[&[1, 1]]), &[rat_int(0)]);
        assert_eq!(sol.particular, Some(vec![rat_int(0), rat_int(0)]));
        assert_eq!(sol.nullspace, vec![vec![rat_int(-1), rat_int(1)]]);
    }

    #[test]
    fn solve_inconsistent() {
        let sol = solve_linear(&qm(&[&[1, 2], &[2, 4]]), &[rat_int(1), rat_int(3)]);
        assert_eq!(sol.particular, None);
        assert_eq!(sol.nullspace.len(), 1);
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = Subspace::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(2), rat_int(0)],
            ],
        );
        let b = Subspace::from_vectors(
            3,
            &[
                vec![rat_int(3), rat_int(0), rat_int(0)],
                vec![rat_int(1), rat_int(-1), rat_int(0)],
            ],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[rat_int(5), rat_int(-7), rat_int(0)]));
        assert!(!a.contains(&[rat_int(0), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn subspace_intersection_and_annihilator() {
        let a = Subspace::from_vectors(
            3,
            &[
                vec![rat_int(1), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(0)],
            ],
        );
        let b = Subspace::from_vectors(
            3,
            &[
                vec![rat_int(0), rat_int(1), rat_int(1)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
            ],
        );
        let i = a.intersect(&b);
        assert_eq!(
            i,
            Subspace::from_vectors(3, &[vec![rat_int(0), rat_int(1), rat_int(0)]])
        );
        let ann = a.annihilator();
        assert_eq!(
            ann,
            Subspace::from_vectors(3, &[vec![rat_int(0), rat_int(0), rat_int(1)]])
        );
    }

    #[test]
    fn eigenvalues_of_small_matrices() {
        // diag(-1, 0, 1) plus a nilpotent block keeps the same spectrum
        let m = qm(&[&[-1, 1, 0], &[0, 0, 5], &[0, 0, 1]]);
        assert_eq!(
            rational_eigenvalues(&m),
            vec![rat_int(-1), rat_int(0), rat_int(1)]
        );
        // char poly t^2 - 2 has no rational roots
        let s = qm(&[&[0, 2], &[1, 0]]);
        assert!(rational_eigenvalues(&s).is_empty());
        // half-integer eigenvalue
        let h = qm(&[&[3, 1], &[0, 3]]);
        let h2 = Matrix::from_rows(vec![
            vec![rat(1, 2), rat_int(0)],
            vec![rat_int(0), rat(1, 2)],
        ]);
        assert_eq!(rational_eigenvalues(&h), vec![rat_int(3)]);
        assert_eq!(rational_eigenvalues(&h2), vec![rat(1, 2)]);
    }

    #[test]
    fn char_poly_companion() {
        // companion of t^2 - t - 1
        let m = qm(&[&[0, 1], &[1, 1]]);
        let cp = char_poly(&m);
        assert_eq!(cp, vec![rat_int(-1), rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn coordinates_in_span() {
        let gens = vec![vec![rat_int(1), rat_int(1)], vec![rat_int(0), rat_int(1)]];
        let c = coordinates_in(&gens, &[rat_int(2), rat_int(5)]).unwrap();
        assert_eq!(c, vec![rat_int(2), rat_int(3)]);
        assert!(coordinates_in(&gens[..1], &[rat_int(0), rat_int(1)]).is_none());
    }
}
