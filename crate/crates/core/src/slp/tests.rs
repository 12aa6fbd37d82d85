use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::ring::{MPolyRing, PolyRing, PrimeField, RationalField};
use crate::testing::{bilinear_polys, bilinear_slp, mpoly, q};

fn x_good() -> Vec<BigRational> {
    vec![q(-10, 1), q(1, 2), q(-1, 2)]
}

fn x_bad() -> Vec<BigRational> {
    vec![q(0, 1), q(-2, 1), q(1, 1)]
}

fn det_at(prog: &Slp, x: &[BigRational]) -> BigRational {
    let n = x.len();
    let entries = prog.jacobian().eval(&RationalField, x).unwrap();
    let m: linalg::Matrix<_> = entries.chunks(n).map(<[_]>::to_vec).collect();
    linalg::determinant(&RationalField, &m)
}

#[test]
fn bilinear_system_vanishes_at_both_points() {
    let f = bilinear_slp();
    assert_eq!(f.eval(&RationalField, &x_good()).unwrap(), vec![q(0, 1); 3]);
    assert_eq!(f.eval(&RationalField, &x_bad()).unwrap(), vec![q(0, 1); 3]);
}

#[test]
fn zero_point_without_constants() {
    let prog = Slp::from_polys(2, &[mpoly(2, &[(3, &[1, 1]), (-2, &[0, 2])])]).unwrap();
    assert_eq!(prog.eval(&RationalField, &[q(0, 1), q(0, 1)]).unwrap(), vec![q(0, 1)]);
}

#[test]
fn arity_is_checked() {
    assert_eq!(
        bilinear_slp().eval(&RationalField, &[q(1, 1)]),
        Err(Error::ArityMismatch { expected: 3, found: 1 })
    );
}

#[test]
fn gradient_examples() {
    let xy = Slp::from_polys(2, &[mpoly(2, &[(1, &[1, 1])])]).unwrap();
    assert_eq!(xy.gradient().eval(&RationalField, &[q(3, 1), q(5, 1)]).unwrap(), vec![q(5, 1), q(3, 1)]);

    let f3 = Slp::from_polys(3, &bilinear_polys()[2..]).unwrap();
    let g = f3.gradient().eval(&RationalField, &[q(-10, 1), q(7, 1), q(9, 1)]).unwrap();
    assert_eq!(g[1], q(-28, 1));

    let c = Slp::from_polys(2, &[mpoly(2, &[(7, &[0, 0])])]).unwrap();
    assert_eq!(c.gradient().eval(&RationalField, &[q(1, 1), q(2, 1)]).unwrap(), vec![q(0, 1); 2]);
}

#[test]
fn gradient_handles_repeated_operands() {
    let mut b = SlpBuilder::new(1);
    let x = b.input(0);
    let sq = b.mul(x, x);
    let dbl = b.add(sq, sq);
    let prog = b.finish(vec![dbl]);
    // d/dx 2x^2 = 4x
    assert_eq!(prog.gradient().eval(&RationalField, &[q(3, 1)]).unwrap(), vec![q(12, 1)]);
}

#[test]
fn jacobian_determinants() {
    let f = bilinear_slp();
    assert_eq!(det_at(&f, &x_bad()), q(0, 1));
    assert_ne!(det_at(&f, &x_good()), q(0, 1));

    let lin = Slp::from_polys(2, &[mpoly(2, &[(2, &[1, 0]), (3, &[0, 1])]), mpoly(2, &[(-1, &[1, 0]), (5, &[0, 1])])]).unwrap();
    let j = lin.jacobian().eval(&RationalField, &[q(9, 4), q(-3, 1)]).unwrap();
    assert_eq!(j, vec![q(2, 1), q(3, 1), q(-1, 1), q(5, 1)]);
}

#[test]
fn gradient_size_is_linear() {
    let f = bilinear_slp();
    for i in 0..3 {
        let fi = Slp::from_polys(3, &bilinear_polys()[i..=i]).unwrap();
        assert!(fi.gradient().len() <= 5 * fi.len() + fi.n_inputs() + 2);
    }
    assert!(f.jacobian().len() <= f.len() + 3 * (4 * f.len() + 3) + 2);
}

#[test]
fn homotopy_endpoints() {
    let f = bilinear_slp();
    let g = Slp::from_polys(3, &[mpoly(3, &[(1, &[1, 1, 0])]), mpoly(3, &[(1, &[0, 0, 1]), (-2, &[0, 0, 0])]), mpoly(3, &[(5, &[0, 1, 0])])]).unwrap();
    let h = Slp::homotopy_combine(&f, &g).unwrap();
    let x = vec![q(2, 3), q(-1, 1), q(7, 5)];
    let at = |t: BigRational| {
        let mut pt = vec![t];
        pt.extend(x.iter().cloned());
        h.eval(&RationalField, &pt).unwrap()
    };
    assert_eq!(at(q(0, 1)), g.eval(&RationalField, &x).unwrap());
    assert_eq!(at(q(1, 1)), f.eval(&RationalField, &x).unwrap());

    let same = Slp::homotopy_combine(&f, &f).unwrap();
    let mut pt = vec![q(5, 7)];
    pt.extend(x.iter().cloned());
    assert_eq!(same.eval(&RationalField, &pt).unwrap(), f.eval(&RationalField, &x).unwrap());

    let short = Slp::from_polys(3, &bilinear_polys()[..2]).unwrap();
    assert!(matches!(Slp::homotopy_combine(&f, &short), Err(Error::ArityMismatch { .. })));
}

#[test]
fn reduction_mod_p() {
    let mut b = SlpBuilder::new(0);
    let c = b.constant(8);
    let prog = b.finish(vec![c]);
    assert_eq!(prog.reduce_mod_p(5).instrs()[0], Instr::Const(BigInt::from(3)));
    assert_eq!(prog.reduce_mod_p(101), prog);

    let fp = PrimeField::new(10007).unwrap();
    let red = bilinear_slp().reduce_mod_p(10007);
    let half = fp.inv(&2).unwrap();
    assert_eq!(half, 5004);
    let pt = vec![fp.from_i64(-10), half, fp.neg(&half)];
    assert_eq!(red.eval(&fp, &pt).unwrap(), vec![0, 0, 0]);
}

#[test]
fn determinant_residue_on_parametrization() {
    // (r1, y) with r1 = T^2 + 11T, coordinates in the q' convention.
    let px = PolyRing::new(RationalField);
    let half = |n: i64| q(n, 2);
    let r1 = px.from_i64s(&[0, 11, 1]);
    let w = vec![
        px.from_i64s(&[0, -10]),
        px.from_coeffs(vec![q(-22, 1), half(-3)]),
        px.from_coeffs(vec![q(11, 1), half(1)]),
    ];
    let lambda: Vec<BigInt> = [1, 2, 4].iter().map(|&x| BigInt::from(x)).collect();
    let param = ZeroDimParam { q: r1.clone(), v: w, lambda };
    assert_eq!(param.validate(&RationalField), Ok(()));
    let d = jacobian_det_in_quotient(&bilinear_slp(), &RationalField, &param).unwrap();
    assert_eq!(px.gcd(&r1, &d), px.var());
}

#[test]
fn determinant_residue_trivial_cases() {
    let px = PolyRing::new(RationalField);
    let lambda: Vec<BigInt> = vec![1.into(), 3.into()];
    let param = ZeroDimParam::from_monic_values(
        &RationalField,
        px.from_i64s(&[-2, 0, 1]),
        &[px.from_i64s(&[0, 1]), px.from_i64s(&[1])],
        lambda,
    );
    let ident = Slp::from_polys(2, &[mpoly(2, &[(1, &[1, 0])]), mpoly(2, &[(1, &[0, 1])])]).unwrap();
    assert_eq!(jacobian_det_in_quotient(&ident, &RationalField, &param).unwrap(), px.one());
    let h = mpoly(2, &[(1, &[2, 0]), (-1, &[0, 1])]);
    let dup = Slp::from_polys(2, &[h.clone(), h]).unwrap();
    assert!(jacobian_det_in_quotient(&dup, &RationalField, &param).unwrap().is_zero());
}

/// Every polynomial in `nvars <= 4` variables of total degree `<= 3` with the given
/// coefficients on the dense monomial basis.
fn dense_poly(nvars: usize, deg: u32, coeffs: &[i64]) -> MPoly {
    let mut monos: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..nvars {
        monos = monos.into_iter().flat_map(|m| (0..=deg).map(move |e| { let mut m = m.clone(); m.push(e); m })).collect();
    }
    monos.retain(|m| m.iter().sum::<u32>() <= deg);
    monos
        .into_iter()
        .zip(coeffs.iter().cycle())
        .fold(MPoly::zero(nvars), |acc, (m, &c)| acc.add(&MPoly::monomial(m, q(c, 1))))
}

proptest! {
    #[test]
    fn gradient_matches_symbolic_derivative(nvars in 1usize..=4, deg in 0u32..=3, coeffs in prop::collection::vec(-5i64..6, 35)) {
        let p = dense_poly(nvars, deg, &coeffs);
        let prog = Slp::from_polys(nvars, std::slice::from_ref(&p)).unwrap();
        let ring = MPolyRing::new(nvars);
        let grad = prog.gradient().eval(&ring, &ring.vars()).unwrap();
        let expect: Vec<MPoly> = (0..nvars).map(|i| p.derivative(i)).collect();
        prop_assert_eq!(grad, expect);
    }

    #[test]
    fn gradient_matches_central_differences(coeffs in prop::collection::vec(-5i64..6, 35), x in prop::collection::vec(-20i64..20, 3), u in prop::collection::vec(-3i64..4, 3)) {
        // Richardson: the central-difference error is c h^2 + O(h^4); for a cubic the
        // O(h^4) part vanishes, so halving h divides the error by exactly 4 unless it is 0.
        let p = dense_poly(3, 3, &coeffs);
        let prog = Slp::from_polys(3, std::slice::from_ref(&p)).unwrap();
        let x: Vec<BigRational> = x.iter().map(|&a| q(a, 3)).collect();
        let u: Vec<BigRational> = u.iter().map(|&a| q(a, 1)).collect();
        let g = prog.gradient().eval(&RationalField, &x).unwrap();
        let directional: BigRational = g.iter().zip(&u).map(|(a, b)| a * b).sum();
        let err = |h: BigRational| {
            let shift = |s: &BigRational| -> Vec<BigRational> { x.iter().zip(&u).map(|(a, b)| a + b * s).collect() };
            let fp = prog.eval(&RationalField, &shift(&h)).unwrap().remove(0);
            let fm = prog.eval(&RationalField, &shift(&-h.clone())).unwrap().remove(0);
            (fp - fm) / (h * q(2, 1)) - &directional
        };
        let (e1, e2) = (err(q(1, 100)), err(q(1, 200)));
        if e2 == q(0, 1) {
            prop_assert_eq!(e1, q(0, 1));
        } else {
            let ratio = e1 / e2;
            prop_assert!(ratio >= q(36, 10) && ratio <= q(44, 10));
        }
    }

    #[test]
    fn reduction_commutes_with_evaluation(coeffs in prop::collection::vec(-500i64..500, 35), x in prop::collection::vec(-50i64..50, 3), den in 1i64..30) {
        let p = 10007u64;
        let fp = PrimeField::new(p).unwrap();
        let poly = dense_poly(3, 3, &coeffs);
        let prog = Slp::from_polys(3, std::slice::from_ref(&poly)).unwrap();
        let xq: Vec<BigRational> = x.iter().map(|&a| q(a, den)).collect();
        let over_q = prog.eval(&RationalField, &xq).unwrap().remove(0);
        let to_fp = |r: &BigRational| fp.mul(&fp.from_bigint(r.numer()), &fp.inv(&fp.from_bigint(r.denom())).unwrap());
        let xp: Vec<u64> = xq.iter().map(to_fp).collect();
        let over_p = prog.reduce_mod_p(p).eval(&fp, &xp).unwrap().remove(0);
        prop_assert_eq!(to_fp(&over_q), over_p);
    }

    #[test]
    fn homotopy_endpoints_random(x in prop::collection::vec(-50i64..50, 3), c in prop::collection::vec(-9i64..10, 35)) {
        let f = bilinear_slp();
        let g = Slp::from_polys(3, &[dense_poly(3, 2, &c), dense_poly(3, 1, &c[3..]), dense_poly(3, 2, &c[7..])]).unwrap();
        let h = Slp::homotopy_combine(&f, &g).unwrap();
        let x: Vec<BigRational> = x.iter().map(|&a| q(a, 7)).collect();
        for (t, expect) in [(q(0, 1), g.eval(&RationalField, &x).unwrap()), (q(1, 1), f.eval(&RationalField, &x).unwrap())] {
            let mut pt = vec![t];
            pt.extend(x.iter().cloned());
            prop_assert_eq!(h.eval(&RationalField, &pt).unwrap(), expect);
        }
    }
}
