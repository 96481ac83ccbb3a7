//! Rational functions in canonical form: reduced fraction, monic
//! (graded-lex leading coefficient 1) denominator.

use super::gcd::poly_gcd;
use super::polynomial::Polynomial;
use super::{Rational, Vars};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form. Errors when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                den: Polynomial::one(num.vars().clone()),
                num,
            };
        }
        if den.is_constant() {
            let c = den.constant_term();
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: Polynomial::one(den.vars().clone()),
            };
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_term().expect("den nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let one = Polynomial::one(p.vars().clone());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(vars: Vars) -> Self {
        Self::from_polynomial(Polynomial::zero(vars))
    }

    pub fn one(vars: Vars) -> Self {
        Self::from_polynomial(Polynomial::one(vars))
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(vars, c))
    }

    pub fn var(vars: Vars, i: usize) -> Self {
        Self::from_polynomial(Polynomial::var(vars, i))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value of a constant rational function.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    /// The polynomial content of a polynomial-valued rational function.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.is_polynomial() {
            Some(self.num.scale(&self.den.constant_term().recip()))
        } else {
            None
        }
    }

    /// Monic normalization of an already-reduced fraction.
    fn monic(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                den: Polynomial::one(num.vars().clone()),
                num,
            };
        }
        let lc = den.leading_term().expect("den nonzero").1.clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    // Addition and multiplication keep fractions reduced with the classical
    // cross-gcd scheme, so only small gcds are ever computed.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars(), other.vars());
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_constant() && other.den.is_constant() {
            return Self::monic(self.num.add(&other.num), self.den.clone());
        }
        let t = poly_gcd(&self.den, &other.den);
        if t.is_constant() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::monic(num, self.den.mul(&other.den));
        }
        let q1 = self.den.div_exact(&t).expect("gcd divides");
        let s1 = other.den.div_exact(&t).expect("gcd divides");
        let num = self.num.mul(&s1).add(&other.num.mul(&q1));
        if num.is_zero() {
            return Self::zero(self.vars().clone());
        }
        // any common factor of num and t*q1*s1 divides t
        let g = poly_gcd(&num, &t);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = t.div_exact(&g).expect("gcd divides").mul(&q1).mul(&s1);
        Self::monic(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars(), other.vars());
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars().clone());
        }
        let g1 = if other.den.is_constant() {
            Polynomial::one(self.vars().clone())
        } else {
            poly_gcd(&self.num, &other.den)
        };
        let g2 = if self.den.is_constant() {
            Polynomial::one(self.vars().clone())
        } else {
            poly_gcd(&other.num, &self.den)
        };
        let num = self
            .num
            .div_exact(&g1)
            .expect("gcd divides")
            .mul(&other.num.div_exact(&g2).expect("gcd divides"));
        let den = self
            .den
            .div_exact(&g2)
            .expect("gcd divides")
            .mul(&other.den.div_exact(&g1).expect("gcd divides"));
        Self::monic(num, den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars().clone());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // the reciprocal of a reduced fraction is reduced
        let flipped = Self::monic(other.den.clone(), other.num.clone());
        Ok(self.mul(&flipped))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.vars().clone()).div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.vars().clone());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact partial derivative (quotient rule).
    pub fn partial(&self, var: usize) -> Self {
        let dn = self.num.partial(var);
        let dd = self.den.partial(var);
        Self::normalized(
            dn.mul(&self.den).sub(&self.num.mul(&dd)),
            self.den.mul(&self.den),
        )
    }

    /// Evaluates at a rational point; errors when the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.eval(point) / d)
    }

    pub fn denominator_nonzero_at(&self, point: &[Rational]) -> bool {
        !self.den.eval(point).is_zero()
    }

    /// Substitutes one rational function per variable.
    pub fn compose(&self, args: &[Self]) -> Result<Self> {
        let num = self.num.compose(args);
        let den = self.den.compose(args);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        num.div(&den)
    }

    /// Substitutes `x_i -> x_i + offset_i`.
    pub fn shift(&self, offsets: &[Rational]) -> Self {
        Self::normalized(self.num.shift(offsets), self.den.shift(offsets))
    }

    /// Size measure used for deterministic pivot choice.
    pub fn complexity(&self) -> (u32, usize) {
        (
            self.num.total_degree().unwrap_or(0) + self.den.total_degree().unwrap_or(0),
            self.num.num_terms() + self.den.num_terms(),
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            debug_assert!(self.den.constant_term().is_one());
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
