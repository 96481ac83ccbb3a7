//! Multivariate polynomial gcd: content/primitive-part recursion with a
//! subresultant pseudo-remainder sequence in the main variable. Exact over
//! the rationals, no modular tricks.

use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Canonical gcd: primitive integer coefficients, positive leading (grlex)
/// coefficient. `gcd(0, 0) = 0`, `gcd(p, 0) = primitive_part(p)`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    debug_assert_eq!(a.vars(), b.vars());
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a == b {
        return a.primitive_part();
    }
    // strip the common monomial factor first; it makes sparse inputs cheap
    let (ma, a0) = monomial_content(a);
    let (mb, b0) = monomial_content(b);
    let common = Monomial(ma.0.iter().zip(&mb.0).map(|(x, y)| *x.min(y)).collect());
    let g0 = if a0.is_constant() || b0.is_constant() {
        Polynomial::one(a.vars().clone())
    } else {
        gcd_inner(&a0, &b0)
    };
    g0.mul_term(&common, &num_traits::One::one())
        .primitive_part()
}

/// Splits off the largest monomial dividing every term.
fn monomial_content(p: &Polynomial) -> (Monomial, Polynomial) {
    let mut mins: Option<Vec<u32>> = None;
    for (m, _) in p.terms() {
        match &mut mins {
            None => mins = Some(m.0.clone()),
            Some(v) => {
                for (x, y) in v.iter_mut().zip(&m.0) {
                    *x = (*x).min(*y);
                }
            }
        }
    }
    let mono = Monomial(mins.unwrap_or_else(|| vec![0; p.nvars()]));
    if mono.is_constant() {
        return (mono, p.clone());
    }
    let shifted = Polynomial::from_terms(
        p.vars().clone(),
        p.terms()
            .map(|(m, c)| (m.div(&mono).expect("content divides"), c.clone())),
    );
    (mono, shifted)
}

/// Least common multiple, normalized like `poly_gcd`.
pub fn poly_lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.vars().clone());
    }
    let g = poly_gcd(a, b);
    a.mul(b)
        .div_exact(&g)
        .expect("gcd divides the product")
        .primitive_part()
}

fn gcd_inner(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let main = match main_variable(a, b) {
        Some(v) => v,
        None => return Polynomial::one(a.vars().clone()), // both nonzero constants
    };
    let ac = coeffs_in(a, main);
    let bc = coeffs_in(b, main);
    let cont_a = content_of(&ac, a);
    let cont_b = content_of(&bc, b);
    let cont = gcd_inner(&cont_a, &cont_b);

    let pa = a.div_exact(&cont_a).expect("content divides");
    let pb = b.div_exact(&cont_b).expect("content divides");
    let prim = subresultant_gcd(coeffs_in(&pa, main), coeffs_in(&pb, main), main, a);
    cont.mul(&prim)
}

/// Highest-index variable occurring in either polynomial.
fn main_variable(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    (0..a.nvars())
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
}

/// Coefficients of `p` viewed as univariate in `v`; entries have `v`-degree 0.
fn coeffs_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let d = p.degree_in(v) as usize;
    let mut out = vec![Polynomial::zero(p.vars().clone()); d + 1];
    for (m, c) in p.terms() {
        let mut m0 = m.clone();
        let e = m0.0[v] as usize;
        m0.0[v] = 0;
        out[e] = out[e].add(&Polynomial::from_terms(p.vars().clone(), [(m0, c.clone())]));
    }
    out
}

fn from_coeffs(coeffs: &[Polynomial], v: usize, proto: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(proto.vars().clone());
    let var = Polynomial::var(proto.vars().clone(), v);
    for (e, c) in coeffs.iter().enumerate() {
        out = out.add(&c.mul(&var.pow(e as u32)));
    }
    out
}

fn content_of(coeffs: &[Polynomial], proto: &Polynomial) -> Polynomial {
    let mut g = Polynomial::zero(proto.vars().clone());
    for c in coeffs {
        if !c.is_zero() {
            g = if g.is_zero() {
                c.primitive_part()
            } else {
                gcd_inner(&g, c).primitive_part()
            };
        }
        if g.is_constant() && !g.is_zero() {
            return Polynomial::one(proto.vars().clone());
        }
    }
    g
}

fn deg(u: &[Polynomial]) -> Option<usize> {
    u.iter().rposition(|c| !c.is_zero())
}

fn trim(mut u: Vec<Polynomial>) -> Vec<Polynomial> {
    while matches!(u.last(), Some(c) if c.is_zero()) {
        u.pop();
    }
    u
}

fn scale_univ(u: &[Polynomial], s: &Polynomial) -> Vec<Polynomial> {
    u.iter().map(|c| c.mul(s)).collect()
}

fn sub_univ(a: &[Polynomial], b: &[Polynomial], proto: &Polynomial) -> Vec<Polynomial> {
    let n = a.len().max(b.len());
    let zero = Polynomial::zero(proto.vars().clone());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x.sub(y));
    }
    trim(out)
}

/// Pseudo-remainder: `lc(B)^(deg A - deg B + 1) * A mod B`, exact.
fn prem(a: &[Polynomial], b: &[Polynomial], proto: &Polynomial) -> Vec<Polynomial> {
    let db = deg(b).expect("prem divisor nonzero");
    let lb = b[db].clone();
    let mut r = trim(a.to_vec());
    let mut e = deg(&r).map_or(0, |da| da as i64) - db as i64 + 1;
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let s = r[dr].clone();
        // r := lb*r - s*x^(dr-db)*b
        let mut shifted = vec![Polynomial::zero(proto.vars().clone()); dr - db];
        shifted.extend(scale_univ(b, &s));
        r = sub_univ(&scale_univ(&r, &lb), &shifted, proto);
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = scale_univ(&r, &lb);
    }
    trim(r)
}

/// Subresultant PRS on primitive inputs; returns the primitive gcd part in `v`.
fn subresultant_gcd(
    a: Vec<Polynomial>,
    b: Vec<Polynomial>,
    v: usize,
    proto: &Polynomial,
) -> Polynomial {
    let (mut big, mut small) = match (deg(&a), deg(&b)) {
        (None, _) | (_, None) => unreachable!("inputs are nonzero"),
        (Some(da), Some(db)) if da >= db => (trim(a), trim(b)),
        _ => (trim(b), trim(a)),
    };
    if deg(&small) == Some(0) {
        // primitive and v-free: coprime to anything of positive v-degree
        return Polynomial::one(proto.vars().clone());
    }
    let mut g = Polynomial::one(proto.vars().clone());
    let mut h = Polynomial::one(proto.vars().clone());
    loop {
        let da = deg(&big).unwrap();
        let db = deg(&small).unwrap();
        let delta = (da - db) as u32;
        let r = prem(&big, &small, proto);
        if r.is_empty() {
            let res = from_coeffs(&small, v, proto);
            let cont = content_of(&coeffs_in(&res, v), proto);
            return res.div_exact(&cont).expect("content divides");
        }
        if deg(&r) == Some(0) {
            return Polynomial::one(proto.vars().clone());
        }
        let divisor = g.mul(&h.pow(delta));
        big = small;
        small = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        small = trim(small);
        g = big[deg(&big).unwrap()].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h-update is exact")
        };
        if h.is_zero() {
            h = Polynomial::one(proto.vars().clone());
        }
    }
}
