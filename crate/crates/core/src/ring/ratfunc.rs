use super::{Field, Poly, PolyRing, Ring, SeriesRing, TruncatedSeries};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of univariate polynomials over a field,
/// with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc<E> {
    pub num: Poly<E>,
    pub den: Poly<E>,
}

impl<E: Clone + PartialEq> RatFunc<E> {
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Larger of the numerator and denominator degrees (0 for zero).
    pub fn max_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}

impl<E> RatFunc<E> {
    /// Build `num / den` in lowest terms with a monic denominator.
    pub fn new<F: Field<Elem = E>>(ring: &PolyRing<F>, num: Poly<E>, den: Poly<E>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = ring.gcd(&num, &den);
        let num = ring.div_exact(&num, &g);
        let den = ring.div_exact(&den, &g);
        let lc_inv = ring.base().inv(den.lc().unwrap()).unwrap();
        Ok(RatFunc { num: ring.scale(&num, &lc_inv), den: ring.scale(&den, &lc_inv) })
    }

    /// Taylor expansion at `t = 0`; requires `den(0) != 0`.
    pub fn to_series<F: Field<Elem = E>>(&self, ring: &SeriesRing<F>) -> Result<TruncatedSeries<E>> {
        let den = ring.from_poly(&self.den);
        let den_inv = ring.inv(&den).ok_or(Error::DivisionByZero)?;
        Ok(ring.mul(&ring.from_poly(&self.num), &den_inv))
    }
}

/// Padé approximant of type `(dnum, dden)` from a truncated series.
///
/// Runs the extended Euclidean algorithm on `(t^K, s)` with
/// `K = dnum + dden + 1` and stops at the first remainder of degree at most
/// `dnum`. The result is checked against the series before it is returned.
pub fn pade_reconstruct<F: Field>(
    field: &F,
    series: &TruncatedSeries<F::Elem>,
    dnum: usize,
    dden: usize,
) -> Result<RatFunc<F::Elem>> {
    let k = dnum + dden + 1;
    if series.precision() < k {
        return Err(Error::InvalidInput(format!(
            "series precision {} below the {} coefficients needed",
            series.precision(),
            k
        )));
    }
    let px = PolyRing::new(field.clone());
    let s = px.from_coeffs(series.coeffs()[..k].to_vec());
    let (mut r0, mut r1) = (px.monomial(field.one(), k), s.clone());
    let (mut t0, mut t1) = (px.zero(), px.one());
    while r1.degree().is_some_and(|d| d > dnum) {
        let (q, r) = px.divrem(&r0, &r1)?;
        r0 = std::mem::replace(&mut r1, r);
        let t = px.sub(&t0, &px.mul(&q, &t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    let (num, den) = (r1, t1);
    if den.degree().is_none_or(|d| d > dden) || field.is_zero(&px.coeff(&den, 0)) {
        return Err(Error::ReconstructionFailed);
    }
    let residual = px.truncate(&px.sub(&px.mul(&s, &den), &num), k);
    if !residual.is_zero() {
        return Err(Error::ReconstructionFailed);
    }
    RatFunc::new(&px, num, den)
}
