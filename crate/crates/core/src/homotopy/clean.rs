use num_bigint::BigInt;

use crate::error::Result;
use crate::ring::{Field, Poly, PolyRing, QuotientRing};
use crate::slp::{jacobian_det_at, Slp};
use crate::zdp::ZeroDimParam;

/// Drop the roots of `r1` where `f` does not vanish or where its Jacobian
/// determinant does.
///
/// `(r1, y, lambda)` must be a valid parametrization with coordinates in
/// the `q'` convention; so is the result.
pub fn clean<F: Field>(
    field: &F,
    f: &Slp,
    r1: &Poly<F::Elem>,
    y: &[Poly<F::Elem>],
    lambda: &[BigInt],
) -> Result<ZeroDimParam<F::Elem>> {
    let px = PolyRing::new(field.clone());
    if r1.degree().unwrap_or(0) == 0 {
        return Ok(ZeroDimParam::empty(field, lambda.to_vec()));
    }
    let param = ZeroDimParam { q: r1.clone(), v: y.to_vec(), lambda: lambda.to_vec() };
    let w = param.to_monic_values(field)?;
    let ring = QuotientRing::new(field.clone(), r1.clone());
    let det = jacobian_det_at(&f.jacobian(), &ring, &w)?;
    let mut good = px.div_exact(r1, &px.gcd(r1, &det));
    for fi in f.eval(&ring, &w)? {
        good = px.gcd(&good, &fi);
    }
    let w_good: Vec<_> = w.iter().map(|wi| px.rem_monic(wi, &good)).collect();
    Ok(ZeroDimParam::from_monic_values(field, good, &w_good, lambda.to_vec()))
}
