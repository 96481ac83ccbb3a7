//! Seeded randomized property tests for the exact arithmetic and the
//! vector-field calculus. Everything here is exact equality; no tolerances.

use lievf::symbolic::{rat_int, Monomial, Polynomial, RationalFunction, Vars};
use lievf::vector_fields::{lie_derivative, wedge, Chart, VectorField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn random_polynomial(rng: &mut ChaCha20Rng, vars: &Vars, max_deg: u32, terms: usize) -> Polynomial {
    let n = vars.len();
    let mut p = Polynomial::zero(vars.clone());
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut left = max_deg;
        for e in exps.iter_mut() {
            let v = rng.gen_range(0..=left);
            *e = v;
            left -= v;
        }
        let c = rat_int(rng.gen_range(-4..=4i64));
        p = p.add(&Polynomial::from_terms(vars.clone(), [(Monomial(exps), c)]));
    }
    p
}

fn random_rational_function(rng: &mut ChaCha20Rng, vars: &Vars, max_deg: u32) -> RationalFunction {
    let num = random_polynomial(rng, vars, max_deg, 3);
    loop {
        let den = random_polynomial(rng, vars, 2, 2);
        if !den.is_zero() {
            return RationalFunction::new(num, den).unwrap();
        }
    }
}

fn random_field(rng: &mut ChaCha20Rng, chart: &Chart, max_deg: u32) -> VectorField {
    let coeffs = (0..chart.dimension())
        .map(|_| {
            RationalFunction::from_polynomial(random_polynomial(rng, chart.vars(), max_deg, 3))
        })
        .collect();
    VectorField::new(chart.clone(), coeffs)
}

#[test]
fn canonical_form_is_a_fixpoint_on_random_values() {
    let mut rng = ChaCha20Rng::seed_from_u64(101);
    let vars = Vars::new(["x", "y", "z"]);
    for _ in 0..100 {
        let f = random_rational_function(&mut rng, &vars, 4);
        let renorm = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        assert_eq!(f, renorm);
    }
}

#[test]
fn distributivity_holds_exactly_on_random_rational_functions() {
    let mut rng = ChaCha20Rng::seed_from_u64(102);
    let vars = Vars::new(["x", "y", "z"]);
    for _ in 0..200 {
        let f = random_rational_function(&mut rng, &vars, 4);
        let g = random_rational_function(&mut rng, &vars, 4);
        let h = random_rational_function(&mut rng, &vars, 4);
        assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
    }
}

#[test]
fn partial_derivative_product_rule_on_random_rational_functions() {
    let mut rng = ChaCha20Rng::seed_from_u64(103);
    let vars = Vars::new(["x", "y"]);
    for _ in 0..100 {
        let f = random_rational_function(&mut rng, &vars, 3);
        let g = random_rational_function(&mut rng, &vars, 3);
        for v in 0..2 {
            let lhs = f.mul(&g).partial(v);
            let rhs = f.partial(v).mul(&g).add(&f.mul(&g.partial(v)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn rank_is_transpose_invariant_on_function_matrices() {
    use lievf::symbolic::Matrix;
    let mut rng = ChaCha20Rng::seed_from_u64(104);
    let vars = Vars::new(["x", "y"]);
    for _ in 0..25 {
        let r = rng.gen_range(1..4usize);
        let c = rng.gen_range(1..4usize);
        let m = Matrix::from_rows(
            (0..r)
                .map(|_| {
                    (0..c)
                        .map(|_| {
                            RationalFunction::from_polynomial(random_polynomial(
                                &mut rng, &vars, 2, 2,
                            ))
                        })
                        .collect()
                })
                .collect(),
        );
        assert_eq!(m.rank(), m.transpose().rank());
        assert_eq!(m.rank(), m.rank_by_rref());
    }
}

#[test]
fn jacobi_and_antisymmetry_on_random_polynomial_fields() {
    let mut rng = ChaCha20Rng::seed_from_u64(105);
    for trial in 0..60 {
        let n = 1 + (trial % 3);
        let chart = Chart::canonical(n);
        let u = random_field(&mut rng, &chart, 3);
        let v = random_field(&mut rng, &chart, 3);
        let w = random_field(&mut rng, &chart, 3);
        assert_eq!(u.bracket(&v).unwrap(), v.bracket(&u).unwrap().neg());
        let jac = u
            .bracket(&v.bracket(&w).unwrap())
            .unwrap()
            .add(&v.bracket(&w.bracket(&u).unwrap()).unwrap())
            .unwrap()
            .add(&w.bracket(&u.bracket(&v).unwrap()).unwrap())
            .unwrap();
        assert!(jac.is_zero(), "Jacobi failed for {u}, {v}, {w}");
    }
}

#[test]
fn apply_is_a_derivation_on_random_inputs() {
    let mut rng = ChaCha20Rng::seed_from_u64(106);
    let chart = Chart::canonical(2);
    for _ in 0..60 {
        let v = random_field(&mut rng, &chart, 3);
        let f = random_rational_function(&mut rng, chart.vars(), 3);
        let g = random_rational_function(&mut rng, chart.vars(), 3);
        let lhs = v.apply(&f.mul(&g)).unwrap();
        let rhs = v
            .apply(&f)
            .unwrap()
            .mul(&g)
            .add(&f.mul(&v.apply(&g).unwrap()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn lie_derivative_leibniz_on_top_multivectors() {
    let mut rng = ChaCha20Rng::seed_from_u64(107);
    let chart = Chart::canonical(2);
    let dx = VectorField::coordinate(chart.clone(), 0);
    let dy = VectorField::coordinate(chart.clone(), 1);
    let top = wedge(&[dx, dy]).unwrap();
    for _ in 0..40 {
        let v = random_field(&mut rng, &chart, 3);
        let f = RationalFunction::from_polynomial(random_polynomial(&mut rng, chart.vars(), 3, 3));
        let lhs = lie_derivative(&v, &top.scale_fn(&f)).unwrap();
        let rhs = top
            .scale_fn(&v.apply(&f).unwrap())
            .add(&lie_derivative(&v, &top).unwrap().scale_fn(&f))
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn jet_truncation_commutes_with_brackets_on_random_fields() {
    let mut rng = ChaCha20Rng::seed_from_u64(108);
    let chart = Chart::canonical(2);
    for _ in 0..30 {
        let v = random_field(&mut rng, &chart, 3);
        let w = random_field(&mut rng, &chart, 3);
        for k in 1..=3u32 {
            let exact = v.bracket(&w).unwrap().truncate(k - 1).unwrap();
            let jets = v
                .truncate(k)
                .unwrap()
                .bracket_truncated(&w.truncate(k).unwrap(), k - 1);
            assert_eq!(exact.coeffs(), jets.coeffs());
        }
    }
}

#[test]
fn parser_round_trips_displayed_values() {
    use lievf::symbolic::parse_expression;
    let mut rng = ChaCha20Rng::seed_from_u64(109);
    let vars = Vars::new(["x", "y", "z"]);
    for _ in 0..60 {
        let f = random_rational_function(&mut rng, &vars, 4);
        let back = parse_expression(&f.to_string(), &vars).unwrap();
        assert_eq!(f, back);
    }
}
