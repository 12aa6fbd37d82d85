use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::homotopy::nonsingular_solutions_with;
use crate::ring::{linalg, MPoly, PolyRing};
use crate::slp::{BlockStructure, MultiDegree};
use crate::testing::{bilinear_blocks, bilinear_polys, bilinear_slp, mpoly, q};

const P: u64 = 10007;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn bilinear_system() -> System {
    let (b, d) = bilinear_blocks();
    System::new(bilinear_slp(), b, d).unwrap()
}

fn modular_bilinear() -> (PrimeField, ZeroDimParam<u64>) {
    let field = PrimeField::new(P).unwrap();
    let param = nonsingular_solutions_with(&field, &bilinear_system(), &big(&[1, 2, 4])).unwrap();
    (field, param)
}

fn valuation(c: &BigInt, p: u64, cap: u32) -> u32 {
    let p = BigInt::from(p);
    let mut c = c.clone();
    let mut v = 0;
    while v < cap && !c.is_zero() && c.is_multiple_of(&p) {
        c /= &p;
        v += 1;
    }
    if c.is_zero() { cap } else { v }
}

/// Smallest p-adic valuation among the coefficients of `f` at the
/// parametrized point, computed modulo `p^cap`.
fn residual_valuation(f: &Slp, param: &PadicParam, cap: u32) -> u32 {
    param
        .residual(f, cap)
        .unwrap()
        .iter()
        .flat_map(|r| r.coeffs().to_vec())
        .map(|c| valuation(&c, param.p, cap))
        .min()
        .unwrap_or(cap)
}

#[test]
fn prime_oracle_examples() {
    for seed in 0..20 {
        assert!([11, 13, 17, 19].contains(&prime_oracle(&BigInt::from(10), seed).unwrap()));
        assert_eq!(prime_oracle(&BigInt::from(2), seed).unwrap(), 3);
    }
    assert!(matches!(prime_oracle(&(BigInt::one() << 70), 0), Err(Error::PrimeBoundTooLarge(_))));
}

fn trial_division(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

proptest! {
    #[test]
    fn prime_oracle_agrees_with_trial_division(b in 2u64..200_000, seed in any::<u64>()) {
        let p = prime_oracle(&BigInt::from(b), seed).unwrap();
        prop_assert!(p > b && p <= 2 * b);
        prop_assert!(trial_division(p));
    }
}

#[test]
fn lift_bilinear_one_step() {
    let (field, modular) = modular_bilinear();
    let f = bilinear_slp();
    let start = PadicParam::from_modular(&field, &modular).unwrap();
    let lifted = padic_lift(&f, &f.jacobian(), &start).unwrap();
    assert_eq!(lifted.k, 2);
    assert_eq!(lifted.reduce(1), start);
    assert!(lifted.residual(&f, 2).unwrap().iter().all(|r| r.is_zero()));
}

#[test]
fn residual_valuation_doubles() {
    let (field, modular) = modular_bilinear();
    let f = bilinear_slp();
    let jac = f.jacobian();
    let mut param = PadicParam::from_modular(&field, &modular).unwrap();
    for _ in 0..4 {
        let next = padic_lift(&f, &jac, &param).unwrap();
        assert_eq!(next.reduce(param.k), param);
        assert!(residual_valuation(&f, &next, 4 * next.k) >= next.k);
        // The trace identity lambda(w) = T holds modulo q at every precision.
        let alg = QuotientRing::new(next.ring(), next.q.clone());
        assert_eq!(lambda_value(&alg, &next.lambda, &next.w), alg.generator());
        param = next;
    }
}

fn quadratic_pair() -> System {
    // X^2 - 2 Y^2 - 1 = 0, X Y - 6 = 0 in two singleton blocks.
    let b = BlockStructure::new(vec![1, 1]).unwrap();
    let d = MultiDegree::new(&b, vec![vec![2, 2], vec![1, 1]]).unwrap();
    let polys = vec![
        mpoly(2, &[(1, &[2, 0]), (-2, &[0, 2]), (-1, &[0, 0])]),
        mpoly(2, &[(1, &[1, 1]), (-6, &[0, 0])]),
    ];
    System::new(Slp::from_polys(2, &polys).unwrap(), b, d).unwrap()
}

#[test]
fn higher_degree_lift_has_doubling_residual() {
    // Irrational solutions: q stays nonlinear and coefficients grow p-adically.
    let sys = quadratic_pair();
    let field = PrimeField::new(100_003).unwrap();
    let modular = nonsingular_solutions_with(&field, &sys, &big(&[1, 3])).unwrap();
    assert!(modular.degree() >= 2);
    let jac = sys.f.jacobian();
    let mut param = PadicParam::from_modular(&field, &modular).unwrap();
    for _ in 0..3 {
        let next = padic_lift(&sys.f, &jac, &param).unwrap();
        assert_eq!(next.reduce(param.k), param);
        assert!(residual_valuation(&sys.f, &next, 4 * next.k) >= next.k);
        param = next;
    }
}

/// `x - J(x)^{-1} f(x)` over `Z/p^k`.
fn vector_newton(f: &Slp, x: &[BigInt], p: u64, k: u32) -> Vec<BigInt> {
    let zr = ZModRing::new(p, k);
    let n = x.len();
    let fx = f.eval(&zr, x).unwrap();
    let j: linalg::Matrix<BigInt> = f.jacobian().eval(&zr, x).unwrap().chunks(n).map(<[_]>::to_vec).collect();
    let step = linalg::solve_with_adjugate(&zr, &j, &fx).unwrap();
    x.iter().zip(&step).map(|(a, b)| zr.sub(a, b)).collect()
}

#[test]
fn degree_one_lift_matches_vector_newton() {
    let (field, modular) = modular_bilinear();
    let f = bilinear_slp();
    let jac = f.jacobian();
    let mut param = PadicParam::from_modular(&field, &modular).unwrap();
    let mut x: Vec<BigInt> = param.w.iter().map(|w| w.coeffs().first().cloned().unwrap_or_default()).collect();
    for _ in 0..4 {
        param = padic_lift(&f, &jac, &param).unwrap();
        x = vector_newton(&f, &x, P, param.k);
        let ours: Vec<BigInt> = param.w.iter().map(|w| w.coeffs().first().cloned().unwrap_or_default()).collect();
        assert_eq!(ours, x);
    }
}

#[test]
fn reconstruct_bilinear() {
    let (field, modular) = modular_bilinear();
    let sys = bilinear_system();
    let heights = integer_heights(&bilinear_polys());
    let ledger = lifting_ledger(&sys.blocks, &sys.degrees, &heights).unwrap();
    let out = lift_and_reconstruct(&sys, &heights, &field, &modular, ledger.h_prime).unwrap();
    let px = PolyRing::new(RationalField);
    assert_eq!(out.q, px.from_i64s(&[11, 1]));
    assert_eq!(out.v, vec![px.constant(q(-10, 1)), px.constant(q(1, 2)), px.constant(q(-1, 2))]);
}

#[test]
fn halved_precision_fails() {
    let (field, modular) = modular_bilinear();
    let sys = bilinear_system();
    let bound = coefficient_bound(40.0);
    let mut param = PadicParam::from_modular(&field, &modular).unwrap();
    let target = target_exponent(P, &bound);
    while param.k < target / 2 {
        param = padic_lift(&sys.f, &sys.f.jacobian(), &param).unwrap();
    }
    // Bound e^40 needs about 8 digits base 10007; stop well short of that.
    let short = param.reduce(1);
    let outcome = reconstruct_over_q(&short, &bound).and_then(|p| validate_over_q(&sys, &[3.0; 3], &p).map(|_| p));
    assert!(outcome.is_err());
}

#[test]
fn integer_truth_reconstructs_exactly() {
    // (X - 3)(X + 5) = 0 in one variable; the parametrization has integer coefficients.
    let b = BlockStructure::new(vec![1]).unwrap();
    let d = MultiDegree::new(&b, vec![vec![2]]).unwrap();
    let f = mpoly(1, &[(1, &[2]), (2, &[1]), (-15, &[0])]);
    let sys = System::new(Slp::from_polys(1, std::slice::from_ref(&f)).unwrap(), b, d).unwrap();
    let report = solve_over_z(&sys, &integer_heights(&[f]), &SolveOptions { seed: 7, repeat: 1, prime_override: None }).unwrap();
    let param = report.outcome.param().unwrap();
    assert!(param.q.coeffs().iter().chain(param.v.iter().flat_map(|v| v.coeffs())).all(|c| c.is_integer()));
    let mut roots: Vec<BigRational> = [q(3, 1), q(-5, 1)].to_vec();
    roots.sort();
    let lam = &param.lambda[0];
    let px = PolyRing::new(RationalField);
    for r in roots {
        assert!(px.eval(&param.q, &(r * BigRational::from_integer(lam.clone()))).is_zero());
    }
}

#[test]
fn solve_bilinear_over_z() {
    let sys = bilinear_system();
    let heights = integer_heights(&bilinear_polys());
    let report = solve_over_z(&sys, &heights, &SolveOptions { seed: 1, repeat: 3, prime_override: None }).unwrap();
    let b = &report.ledger.b;
    assert!(BigInt::from(report.prime) > *b && BigInt::from(report.prime) <= b * 2u32, "{report:?}");
    let Outcome::Success(param) = &report.outcome else { panic!("{:?}", report.outcome) };
    assert_eq!(param.degree(), 1);
    let tau = -param.q.coeffs()[0].clone();
    assert_eq!(param.point_at(&RationalField, &tau).unwrap(), vec![q(-10, 1), q(1, 2), q(-1, 2)]);
}

#[test]
fn prime_override_is_honoured() {
    let sys = bilinear_system();
    let heights = integer_heights(&bilinear_polys());
    let report = solve_over_z(&sys, &heights, &SolveOptions { seed: 1, repeat: 1, prime_override: Some(P) }).unwrap();
    assert_eq!(report.prime, P);
    assert_eq!(report.outcome.tag(), "success");
    let small = SolveOptions { seed: 1, repeat: 1, prime_override: Some(13) };
    assert!(matches!(solve_over_z(&sys, &heights, &small), Err(Error::CharacteristicTooSmall { .. })));
}

/// Cramer's rule over the rationals.
fn cramer(a: &[Vec<i64>], b: &[i64]) -> Vec<BigRational> {
    let n = a.len();
    let to_q = |m: &[Vec<i64>]| -> Vec<Vec<BigRational>> { m.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect() };
    let det = linalg::determinant(&RationalField, &to_q(a));
    (0..n)
        .map(|i| {
            let mut m = a.to_vec();
            for (row, &bi) in m.iter_mut().zip(b) {
                row[i] = bi;
            }
            linalg::determinant(&RationalField, &to_q(&m)) / &det
        })
        .collect()
}

fn linear_system(a: &[Vec<i64>], b: &[i64]) -> (System, Vec<MPoly>) {
    let n = a.len();
    let polys: Vec<MPoly> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut p = MPoly::constant(n, q(-bi, 1));
            for (j, &c) in row.iter().enumerate() {
                p = p.add(&MPoly::var(n, j).scale(&q(c, 1)));
            }
            p
        })
        .collect();
    let blocks = BlockStructure::new(vec![n]).unwrap();
    let d = MultiDegree::new(&blocks, vec![vec![1]; n]).unwrap();
    (System::new(Slp::from_polys(n, &polys).unwrap(), blocks, d).unwrap(), polys)
}

#[test]
fn linear_system_matches_direct_solve() {
    let a = vec![vec![2, 1, -1], vec![1, 3, 2], vec![-1, 1, 4]];
    let b = vec![3, -2, 7];
    let (sys, polys) = linear_system(&a, &b);
    let report = solve_over_z(&sys, &integer_heights(&polys), &SolveOptions { seed: 3, repeat: 1, prime_override: None }).unwrap();
    let param = report.outcome.param().unwrap();
    assert_eq!(param.degree(), 1);
    let tau = -param.q.coeffs()[0].clone();
    assert_eq!(param.point_at(&RationalField, &tau).unwrap(), cramer(&a, &b));
}

#[test]
fn no_nonsingular_solutions_gives_empty_param() {
    // X Y = 0 and X Y + 1 = 0 share no root at all.
    let b = BlockStructure::new(vec![1, 1]).unwrap();
    let d = MultiDegree::new(&b, vec![vec![1, 1]; 2]).unwrap();
    let polys = vec![mpoly(2, &[(1, &[1, 1])]), mpoly(2, &[(1, &[1, 1]), (1, &[0, 0])])];
    let sys = System::new(Slp::from_polys(2, &polys).unwrap(), b, d).unwrap();
    let report = solve_over_z(&sys, &integer_heights(&polys), &SolveOptions { seed: 0, repeat: 2, prime_override: None }).unwrap();
    let Outcome::Success(param) = report.outcome else { panic!() };
    assert_eq!(param.degree(), 0);
    // Exhaustive check mod a small prime that no point of the grid solves both.
    let p = 101i64;
    assert!((0..p).all(|x| (0..p).all(|y| (x * y) % p != 0 || (x * y + 1) % p != 0)));
}

#[test]
fn solve_is_deterministic() {
    let sys = quadratic_pair();
    let polys_h = [1.8, 1.8];
    let opts = SolveOptions { seed: 11, repeat: 2, prime_override: None };
    let a = solve_over_z(&sys, &polys_h, &opts).unwrap();
    let b = solve_over_z(&sys, &polys_h, &opts).unwrap();
    assert_eq!(a.outcome, b.outcome);
    assert_eq!(a.prime, b.prime);
}
