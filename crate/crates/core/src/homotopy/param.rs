use num_bigint::BigInt;

use super::lift::Homotopy;
use crate::error::{Error, Result};
use crate::ring::{pade_reconstruct, Field, Poly, PolyRing, RatFunc, Ring, SeriesRing};
use crate::zdp::{interpolate_from_points, is_separating, ZeroDimParam};

/// A parametrization over the rational function field `K(t)`: the
/// coefficients of `q` and of every `v_i`, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFuncParam<E> {
    pub q: Vec<RatFunc<E>>,
    pub v: Vec<Vec<RatFunc<E>>>,
    pub lambda: Vec<BigInt>,
}

impl<E: Clone + PartialEq> RatFuncParam<E> {
    /// Largest numerator or denominator degree over all coefficients.
    pub fn max_degree(&self) -> usize {
        self.q.iter().chain(self.v.iter().flatten()).map(RatFunc::max_degree).max().unwrap_or(0)
    }
}

/// Lift the start points to precision `2 bound + 1`, interpolate over
/// `K[[t]]` and recover each coefficient as a rational function of type
/// `(bound, bound)`.
pub fn reconstruct_param_in_t<F: Field>(
    field: &F,
    homotopy: &Homotopy,
    points: &[Vec<F::Elem>],
    lambda: &[BigInt],
    bound: usize,
) -> Result<RatFuncParam<F::Elem>> {
    if !is_separating(field, lambda, points) {
        return Err(Error::NotSeparating);
    }
    let prec = 2 * bound + 1;
    let series = homotopy.lift_points(field, points, prec)?;
    let sring = SeriesRing::new(field.clone(), prec);
    let param = interpolate_from_points(&sring, &series, lambda)?;
    let spx = PolyRing::new(sring.clone());
    let deg = points.len();
    let rebuild = |p: &Poly<_>, len: usize| -> Result<Vec<RatFunc<F::Elem>>> {
        (0..len).map(|k| pade_reconstruct(field, &spx.coeff(p, k), bound, bound)).collect()
    };
    let q = rebuild(&param.q, deg + 1)?;
    let v = param.v.iter().map(|vi| rebuild(vi, deg)).collect::<Result<Vec<_>>>()?;
    Ok(RatFuncParam { q, v, lambda: lambda.to_vec() })
}

/// The parametrization obtained by setting `t = 0`.
pub fn specialize_at_zero<F: Field>(field: &F, param: &RatFuncParam<F::Elem>) -> Result<ZeroDimParam<F::Elem>> {
    let px = PolyRing::new(field.clone());
    let at0 = |r: &RatFunc<F::Elem>| -> Result<F::Elem> {
        field.div(&px.coeff(&r.num, 0), &px.coeff(&r.den, 0)).ok_or(Error::DivisionByZero)
    };
    let conv = |cs: &[RatFunc<F::Elem>]| -> Result<Poly<F::Elem>> {
        Ok(px.from_coeffs(cs.iter().map(at0).collect::<Result<Vec<_>>>()?))
    };
    Ok(ZeroDimParam {
        q: conv(&param.q)?,
        v: param.v.iter().map(|vi| conv(vi)).collect::<Result<Vec<_>>>()?,
        lambda: param.lambda.clone(),
    })
}

/// Order of vanishing at `t = 1` and the value of `(t - 1)^{-order} p` there.
fn split_at_one<F: Field>(px: &PolyRing<F>, p: &Poly<F::Elem>) -> (i64, F::Elem) {
    let base = px.base();
    let t_minus_1 = px.linear_root(&base.one());
    let mut p = p.clone();
    let mut order = 0;
    loop {
        let value = px.eval(&p, &base.one());
        if !base.is_zero(&value) {
            return (order, value);
        }
        p = px.div_exact(&p, &t_minus_1);
        order += 1;
    }
}

/// `Some((nu, c))` where `r = (t - 1)^nu (c + O(t - 1))`, `None` for zero.
fn expand_at_one<F: Field>(px: &PolyRing<F>, r: &RatFunc<F::Elem>) -> Option<(i64, F::Elem)> {
    if r.is_zero() {
        return None;
    }
    let (nn, cn) = split_at_one(px, &r.num);
    let (nd, cd) = split_at_one(px, &r.den);
    Some((nn - nd, px.base().div(&cn, &cd).expect("nonzero value")))
}

/// `(e, r, w)`: the pole order at `t = 1` and the specialized univariate
/// representation.
pub type Specialized<E> = (i64, Poly<E>, Vec<Poly<E>>);

/// A univariate polynomial with one coordinate polynomial per variable.
pub type UnivariateRep<E> = (Poly<E>, Vec<Poly<E>>);

/// Specialization at `t = 1` after clearing the pole of `q`.
///
/// With `e = -min nu(q_k)`, scales everything by `(t - 1)^e`, evaluates at
/// `t = 1`, and normalizes: `r = q*(1, T) / r0` with `r0` the leading
/// coefficient, `w_j = v*_j(1, T) / r0 mod r`.
pub fn specialize_at_one<F: Field>(
    field: &F,
    param: &RatFuncParam<F::Elem>,
) -> Result<Specialized<F::Elem>> {
    let tpx = PolyRing::new(field.clone());
    let q_exp: Vec<_> = param.q.iter().map(|c| expand_at_one(&tpx, c)).collect();
    let e = -q_exp.iter().flatten().map(|(nu, _)| *nu).min().unwrap_or(0);
    let star = |exp: &Option<(i64, F::Elem)>| -> Result<F::Elem> {
        match exp {
            None => Ok(field.zero()),
            Some((nu, c)) => match nu + e {
                0 => Ok(c.clone()),
                k if k > 0 => Ok(field.zero()),
                _ => Err(Error::InvalidValuation),
            },
        }
    };
    let px = PolyRing::new(field.clone());
    let q_star = px.from_coeffs(q_exp.iter().map(star).collect::<Result<Vec<_>>>()?);
    let r0 = q_star.lc().cloned().ok_or(Error::InvalidValuation)?;
    let r0_inv = field.inv(&r0).expect("nonzero leading coefficient");
    let r = px.scale(&q_star, &r0_inv);
    let w = param
        .v
        .iter()
        .map(|vi| {
            let coeffs = vi.iter().map(|c| star(&expand_at_one(&tpx, c))).collect::<Result<Vec<_>>>()?;
            Ok(px.rem_monic(&px.scale(&px.from_coeffs(coeffs), &r0_inv), &r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((e, r, w))
}

/// Keep the simple roots of `r`: `r1` is their product and
/// `y_i = w_i (r / r1)^{-1} mod r1`.
pub fn multiplicity_one_and_divide<F: Field>(
    field: &F,
    r: &Poly<F::Elem>,
    w: &[Poly<F::Elem>],
) -> Result<UnivariateRep<F::Elem>> {
    let px = PolyRing::new(field.clone());
    let (_, r1) = px.squarefree_and_multiplicity_one(r)?;
    if r1.degree() == Some(0) {
        return Ok((r1, vec![px.zero(); w.len()]));
    }
    let rest = px.div_exact(r, &r1);
    let rest_inv = px.inv_mod(&rest, &r1).expect("simple roots are coprime to the rest");
    let y = w.iter().map(|wi| px.rem_monic(&px.mul(wi, &rest_inv), &r1)).collect();
    Ok((r1, y))
}
