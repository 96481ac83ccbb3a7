//! Exact arithmetic: arbitrary-precision rationals, multivariate polynomials
//! and rational functions in canonical form, expression parsing, and exact
//! linear algebra over the rationals and the rational-function field.

mod gcd;
mod matrix;
mod monomial;
mod parser;
mod polynomial;
mod ratfun;
mod span;

pub use gcd::{poly_gcd, poly_lcm};
pub use matrix::{
    char_poly, coordinates_in, nullspace, rational_eigenvalues, rational_roots, solve_linear,
    LinearSolution, Matrix, Scalar, Subspace,
};
pub use monomial::Monomial;
pub use parser::parse_expression;
pub use polynomial::Polynomial;
pub use ratfun::RationalFunction;
pub use span::{
    constant_span_rank, express_in_constant_span, express_vectors_in_constant_span,
    rational_span_basis,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;
use std::sync::Arc;

/// Exact rational scalar: arbitrary-precision numerator, positive denominator,
/// always in lowest terms (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let mut s = String::new();
        let _ = write!(s, "{}/{}", q.numer(), q.denom());
        s
    }
}

/// Parses `p`, `-p`, or `p/q` with arbitrary-precision integers.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// An ordered set of variable identifiers, shared by every polynomial over the
/// same chart. Equality is by content, clones are cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        let v: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!v.is_empty(), "Vars must declare at least one variable");
        Vars(v.into())
    }

    /// Canonical variables `x1..xn`.
    pub fn canonical(n: usize) -> Self {
        Vars::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Resolves an identifier to a variable index. Declared names match
    /// first; `xK` with 1 <= K <= n is always accepted; the aliases `x,y,z`
    /// map to the first three variables when n <= 3.
    pub fn resolve(&self, ident: &str) -> Option<usize> {
        if let Some(i) = self.0.iter().position(|v| v == ident) {
            return Some(i);
        }
        if let Some(rest) = ident.strip_prefix('x') {
            if let Ok(k) = rest.parse::<usize>() {
                if k >= 1 && k <= self.len() {
                    return Some(k - 1);
                }
            }
        }
        if self.len() <= 3 {
            match ident {
                "x" => return Some(0),
                "y" if self.len() >= 2 => return Some(1),
                "z" if self.len() >= 3 => return Some(2),
                _ => {}
            }
        }
        None
    }
}

impl std::fmt::Debug for Vars {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Vars({})", self.0.join(","))
    }
}

/// Positive gcd of two big integers (gcd(0,0) = 0).
pub(crate) fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vars_resolve_aliases() {
        let v = Vars::new(["x", "y"]);
        assert_eq!(v.resolve("x"), Some(0));
        assert_eq!(v.resolve("x2"), Some(1));
        assert_eq!(v.resolve("z"), None);
        let w = Vars::canonical(4);
        assert_eq!(w.resolve("x4"), Some(3));
        // aliases only live on charts of dimension <= 3
        assert_eq!(w.resolve("y"), None);
    }

    #[test]
    fn rational_text_round_trip() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat_int(7)), "7");
        assert_eq!(parse_rational("4/0"), None);
    }
}
