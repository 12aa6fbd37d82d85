//! Zero-dimensional parametrizations `(q, v_1, ..., v_N, lambda)`.
//!
//! A parametrization describes the finite set of points
//! `(v_1(tau)/q'(tau), ..., v_N(tau)/q'(tau))` over the roots `tau` of `q`,
//! where `q` is monic and squarefree, `deg v_i < deg q`, and the linear form
//! `lambda` satisfies `lambda(v) = T q' mod q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::ring::{ln_bigint, Field, Poly, PolyRing, QuotientRing, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimParam<E> {
    pub q: Poly<E>,
    pub v: Vec<Poly<E>>,
    pub lambda: Vec<BigInt>,
}

/// The first condition a candidate parametrization violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ArityMismatch,
    ZeroLinearForm,
    NotMonic,
    NotSquarefree,
    DegreeTooHigh { index: usize },
    TraceIdentity,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ArityMismatch => write!(f, "number of coordinates differs from the linear form"),
            Violation::ZeroLinearForm => write!(f, "linear form is zero"),
            Violation::NotMonic => write!(f, "q is not monic"),
            Violation::NotSquarefree => write!(f, "q is not squarefree"),
            Violation::DegreeTooHigh { index } => write!(f, "deg v_{} is not below deg q", index + 1),
            Violation::TraceIdentity => write!(f, "lambda(v) differs from T q' mod q"),
        }
    }
}

/// Evaluate a linear form with integer coefficients at a point.
pub fn lambda_value<R: Ring>(ring: &R, lambda: &[BigInt], point: &[R::Elem]) -> R::Elem {
    lambda
        .iter()
        .zip(point)
        .fold(ring.zero(), |acc, (c, x)| ring.add(&acc, &ring.mul(&ring.from_bigint(c), x)))
}

/// True iff `lambda` takes pairwise distinct values on the points.
pub fn is_separating<R: Ring>(ring: &R, lambda: &[BigInt], points: &[Vec<R::Elem>]) -> bool {
    let vals: Vec<_> = points.iter().map(|x| lambda_value(ring, lambda, x)).collect();
    vals.iter().enumerate().all(|(i, a)| !vals[..i].contains(a))
}

/// The forms `u^(i) = X_1 + i X_2 + ... + i^{N-1} X_N` for
/// `i = 1, ..., 8 (N-1) k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparatingFamily {
    n: usize,
    k: u64,
}

pub fn separating_candidates(n: usize, k: u64) -> SeparatingFamily {
    assert!(n >= 1 && k >= 1, "family needs N >= 1 and k >= 1");
    SeparatingFamily { n, k }
}

impl SeparatingFamily {
    /// Number of distinct members; 1 when `N = 1`.
    pub fn len(&self) -> u64 {
        if self.n == 1 {
            1
        } else {
            8 * (self.n as u64 - 1) * self.k
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The member with index `i >= 1`.
    pub fn get(&self, i: u64) -> Vec<BigInt> {
        let i = BigInt::from(i);
        let mut out = Vec::with_capacity(self.n);
        let mut c = BigInt::one();
        for _ in 0..self.n {
            out.push(c.clone());
            c *= &i;
        }
        out
    }

    /// `(N - 1) ln(8 (N - 1) k)`, bounding the height of every member.
    pub fn height_bound(&self) -> f64 {
        if self.n == 1 {
            0.0
        } else {
            (self.n - 1) as f64 * ((8 * (self.n as u64 - 1) * self.k) as f64).ln()
        }
    }
}

/// Height of an integer linear form: `max ln |c_i|`.
pub fn linear_form_height(lambda: &[BigInt]) -> f64 {
    lambda.iter().filter(|c| c.to_i64() != Some(0)).map(ln_bigint).fold(0.0, f64::max)
}

impl<E: Clone + PartialEq + fmt::Debug> ZeroDimParam<E> {
    /// Number of points, `deg q`.
    pub fn degree(&self) -> usize {
        self.q.degree().unwrap_or(0)
    }

    pub fn n_vars(&self) -> usize {
        self.v.len()
    }

    /// The empty parametrization `q = 1`, `v = 0`.
    pub fn empty<R: Ring<Elem = E>>(ring: &R, lambda: Vec<BigInt>) -> Self {
        let px = PolyRing::new(ring.clone());
        ZeroDimParam { q: px.one(), v: vec![px.zero(); lambda.len()], lambda }
    }

    /// Apply a coefficient map to `q` and every `v_i`.
    pub fn map<F, R: Ring>(&self, target: &R, f: F) -> ZeroDimParam<R::Elem>
    where
        F: Fn(&E) -> R::Elem,
    {
        let px = PolyRing::new(target.clone());
        let conv = |p: &Poly<E>| px.from_coeffs(p.coeffs().iter().map(&f).collect());
        ZeroDimParam { q: conv(&self.q), v: self.v.iter().map(conv).collect(), lambda: self.lambda.clone() }
    }
}

impl<E: Clone + PartialEq + fmt::Debug + Send + Sync> ZeroDimParam<E> {
    /// Check the defining conditions, reporting the first one violated.
    pub fn validate<F: Field<Elem = E>>(&self, field: &F) -> std::result::Result<(), Violation> {
        let px = PolyRing::new(field.clone());
        if self.v.len() != self.lambda.len() {
            return Err(Violation::ArityMismatch);
        }
        if self.lambda.iter().all(|c| c.to_i64() == Some(0)) && !self.lambda.is_empty() {
            return Err(Violation::ZeroLinearForm);
        }
        if !self.q.lc().is_some_and(|c| field.is_one(c)) {
            return Err(Violation::NotMonic);
        }
        if !px.is_squarefree(&self.q) {
            return Err(Violation::NotSquarefree);
        }
        let dq = self.degree();
        if let Some(index) = self.v.iter().position(|vi| vi.degree().is_some_and(|d| d >= dq)) {
            return Err(Violation::DegreeTooHigh { index });
        }
        let lam = self.v.iter().zip(&self.lambda).fold(px.zero(), |acc, (vi, c)| {
            px.add(&acc, &px.scale(vi, &field.from_bigint(c)))
        });
        let tq = px.mul(&px.var(), &px.derivative(&self.q));
        if px.rem_monic(&px.sub(&lam, &tq), &self.q) != px.zero() {
            return Err(Violation::TraceIdentity);
        }
        Ok(())
    }

    /// Coordinates in the monic-value form: `w_i = v_i (q')^{-1} mod q`, so
    /// that the point at a root `tau` is `(w_1(tau), ..., w_N(tau))`.
    pub fn to_monic_values<F: Field<Elem = E>>(&self, field: &F) -> Result<Vec<Poly<E>>> {
        let px = PolyRing::new(field.clone());
        let dq_inv = px
            .inv_mod(&px.derivative(&self.q), &self.q)
            .ok_or_else(|| Error::InvalidInput("q is not squarefree".into()))?;
        Ok(self.v.iter().map(|vi| px.rem_monic(&px.mul(vi, &dq_inv), &self.q)).collect())
    }

    /// Inverse of [`to_monic_values`](Self::to_monic_values):
    /// `v_i = w_i q' mod q`. Works over any ring.
    pub fn from_monic_values<R: Ring<Elem = E>>(ring: &R, q: Poly<E>, w: &[Poly<E>], lambda: Vec<BigInt>) -> Self {
        let px = PolyRing::new(ring.clone());
        let dq = px.derivative(&q);
        let v = w.iter().map(|wi| px.rem_monic(&px.mul(wi, &dq), &q)).collect();
        ZeroDimParam { q, v, lambda }
    }

    /// The point attached to a root `tau` of `q`.
    pub fn point_at<F: Field<Elem = E>>(&self, field: &F, tau: &E) -> Result<Vec<E>> {
        let px = PolyRing::new(field.clone());
        let d = px.eval(&px.derivative(&self.q), tau);
        let d_inv = field.inv(&d).ok_or(Error::DivisionByZero)?;
        Ok(self.v.iter().map(|vi| field.mul(&px.eval(vi, tau), &d_inv)).collect())
    }
}

/// Build the parametrization of an explicit point list.
///
/// `q = prod (T - lambda(x))` and `v_i = sum_x x_i prod_{x' != x} (T - lambda(x'))`.
/// Needs no division, so it works over any ring in which `lambda` separates.
pub fn interpolate_from_points<R: Ring>(
    ring: &R,
    points: &[Vec<R::Elem>],
    lambda: &[BigInt],
) -> Result<ZeroDimParam<R::Elem>> {
    if let Some(bad) = points.iter().find(|x| x.len() != lambda.len()) {
        return Err(Error::ArityMismatch { expected: lambda.len(), found: bad.len() });
    }
    if !is_separating(ring, lambda, points) {
        return Err(Error::NotSeparating);
    }
    let px = PolyRing::new(ring.clone());
    let factors: Vec<Poly<R::Elem>> =
        points.iter().map(|x| px.linear_root(&lambda_value(ring, lambda, x))).collect();
    let q = factors.iter().fold(px.one(), |acc, f| px.mul(&acc, f));
    let mut v = vec![px.zero(); lambda.len()];
    for (k, x) in points.iter().enumerate() {
        let others = factors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .fold(px.one(), |acc, (_, f)| px.mul(&acc, f));
        for (vi, xi) in v.iter_mut().zip(x) {
            *vi = px.add(vi, &px.scale(&others, xi));
        }
    }
    Ok(ZeroDimParam { q, v, lambda: lambda.to_vec() })
}

/// Reduce every coordinate polynomial modulo `q` inside a quotient ring.
pub fn reduce_coordinates<R: Ring>(ring: &QuotientRing<R>, v: &[Poly<R::Elem>]) -> Vec<Poly<R::Elem>> {
    v.iter().map(|vi| ring.reduce(vi)).collect()
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;
    use crate::ring::{PrimeField, RationalField};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn qpoints(pts: &[[i64; 3]]) -> Vec<Vec<BigRational>> {
        pts.iter().map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
    }

    fn start_param() -> ZeroDimParam<BigRational> {
        let px = PolyRing::new(RationalField);
        ZeroDimParam {
            q: px.from_i64s(&[432, 174, 23, 1]),
            v: vec![px.from_i64s(&[-192, -48, -3]), px.from_i64s(&[108, 30, 2]), px.from_i64s(&[-330, -90, -6])],
            lambda: big(&[1, 2, 4]),
        }
    }

    #[test]
    fn start_parametrization_validates() {
        assert_eq!(start_param().validate(&RationalField), Ok(()));
        let mut bad = start_param();
        let px = PolyRing::new(RationalField);
        bad.v[0] = px.add(&bad.v[0], &px.one());
        assert_eq!(bad.validate(&RationalField), Err(Violation::TraceIdentity));
    }

    #[test]
    fn degree_one_parametrization() {
        let px = PolyRing::new(RationalField);
        let p = ZeroDimParam {
            q: px.var(),
            v: vec![px.from_i64s(&[2]), px.from_i64s(&[-1])],
            lambda: big(&[1, 2]),
        };
        assert_eq!(p.validate(&RationalField), Ok(()));
    }

    #[test]
    fn empty_parametrization_validates() {
        let p = ZeroDimParam::empty(&RationalField, big(&[1, 3]));
        assert_eq!(p.validate(&RationalField), Ok(()));
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn interpolation_reproduces_start_parametrization() {
        let pts = qpoints(&[[-2, 0, -1], [-1, 0, -2], [0, 2, -3]]);
        assert_eq!(interpolate_from_points(&RationalField, &pts, &big(&[1, 2, 4])).unwrap(), start_param());
    }

    #[test]
    fn interpolation_single_point() {
        let pts = qpoints(&[[3, -1, 5]]);
        let p = interpolate_from_points(&RationalField, &pts, &big(&[1, 1, 1])).unwrap();
        let px = PolyRing::new(RationalField);
        assert_eq!(p.q, px.from_i64s(&[-7, 1]));
        assert_eq!(p.v, vec![px.from_i64s(&[3]), px.from_i64s(&[-1]), px.from_i64s(&[5])]);
    }

    #[test]
    fn interpolation_detects_collisions() {
        let pts = qpoints(&[[1, 0, 0], [1, 5, 0]]);
        assert_eq!(interpolate_from_points(&RationalField, &pts, &big(&[1, 0, 1])), Err(Error::NotSeparating));
    }

    #[test]
    fn separating_checks() {
        let pts = qpoints(&[[-2, 0, -1], [-1, 0, -2], [0, 2, -3]]);
        assert!(is_separating(&RationalField, &big(&[1, 2, 4]), &pts));
        assert!(!is_separating(&RationalField, &big(&[0, 1, 0]), &pts[..2]));
        assert!(is_separating(&RationalField, &big(&[0, 1, 0]), &pts[..1]));
        let vals: Vec<_> = pts.iter().map(|x| lambda_value(&RationalField, &big(&[1, 2, 4]), x)).collect();
        assert_eq!(vals, qpoints(&[[-6, -9, -8]])[0]);
    }

    #[test]
    fn candidate_family() {
        let fam = separating_candidates(3, 5);
        assert_eq!(fam.get(2), big(&[1, 2, 4]));
        assert_eq!(fam.len(), 80);
        let one = separating_candidates(1, 5);
        assert_eq!(one.get(7), big(&[1]));
        assert_eq!(one.len(), 1);
        let top = fam.get(fam.len());
        assert!(linear_form_height(&top) <= fam.height_bound() + 1e-12);
    }

    #[test]
    fn denominator_conventions() {
        let p = start_param();
        // v_1(-6) = -12 and q'(-6) = 6.
        let x = p.point_at(&RationalField, &BigRational::from_integer((-6).into())).unwrap();
        assert_eq!(x, qpoints(&[[-2, 0, -1]])[0]);
        let w = p.to_monic_values(&RationalField).unwrap();
        let back = ZeroDimParam::from_monic_values(&RationalField, p.q.clone(), &w, p.lambda.clone());
        assert_eq!(back, p);

        let px = PolyRing::new(RationalField);
        let fin = ZeroDimParam {
            q: px.from_i64s(&[11, 1]),
            v: vec![px.from_i64s(&[-10])],
            lambda: big(&[1]),
        };
        assert_eq!(fin.to_monic_values(&RationalField).unwrap(), vec![px.from_i64s(&[-10])]);
    }

    proptest! {
        #[test]
        fn interpolation_round_trip_over_fp(raw in prop::collection::vec(prop::collection::vec(0u64..101, 2), 1..8)) {
            let f = PrimeField::new(10007).unwrap();
            let mut pts: Vec<Vec<u64>> = Vec::new();
            for p in raw {
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            // lambda = X_1 + 101 X_2 separates points with coordinates below 101.
            let lambda = big(&[1, 101]);
            let param = interpolate_from_points(&f, &pts, &lambda).unwrap();
            prop_assert_eq!(param.validate(&f), Ok(()));
            for x in &pts {
                let tau = lambda_value(&f, &lambda, x);
                prop_assert_eq!(&param.point_at(&f, &tau).unwrap(), x);
            }
        }

        #[test]
        fn most_candidates_separate(seed in 0u64..1000) {
            use rand::{Rng as _, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = PrimeField::new(100_003).unwrap();
            let k = 12usize;
            let pts: Vec<Vec<u64>> = (0..k).map(|_| (0..3).map(|_| rng.gen_range(0..100_003)).collect()).collect();
            let fam = separating_candidates(3, (k * k) as u64);
            let good = (1..=fam.len()).filter(|&i| is_separating(&f, &fam.get(i), &pts)).count();
            prop_assert!(good as f64 >= 7.0 / 8.0 * fam.len() as f64);
        }
    }
}
