//! Solving over the rationals: a modular solve at a random prime, p-adic
//! Newton lifting of the parametrization, and rational reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{beta_vector, lifting_ledger, output_height_bound, LiftingLedger};
use crate::error::{Error, Result};
use crate::homotopy::{nonsingular_solutions_with, random_linear_form, System};
use crate::ring::{
    is_prime_u64, linalg, poly_height, rational_reconstruct, Poly, PolyRing, PrimeField, QuotientRing,
    RationalField, Ring, ZModRing,
};
use crate::slp::{jacobian_det_at, Slp};
use crate::zdp::{lambda_value, linear_form_height, ZeroDimParam};

/// A random prime in `{B + 1, ..., 2B}`, by rejection sampling.
pub fn prime_oracle(b: &BigInt, seed: u64) -> Result<u64> {
    let b = match b.to_u64() {
        Some(b) if b < 1 << 62 => b,
        _ => return Err(Error::PrimeBoundTooLarge(b.to_string())),
    };
    if b < 2 {
        return Err(Error::InvalidInput(format!("prime bound must be at least 2, got {b}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c = rng.gen_range(b + 1..=2 * b);
        if is_prime_u64(c) {
            return Ok(c);
        }
    }
}

/// A parametrization with coefficients in `Z/p^k`, kept in the monic-value
/// form: the point at a root `tau` of `q` is `(w_1(tau), ..., w_N(tau))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicParam {
    pub p: u64,
    pub k: u32,
    pub q: Poly<BigInt>,
    pub w: Vec<Poly<BigInt>>,
    pub lambda: Vec<BigInt>,
}

impl PadicParam {
    /// Start the lifting from a parametrization over `F_p`.
    pub fn from_modular(field: &PrimeField, param: &ZeroDimParam<u64>) -> Result<Self> {
        let w = param.to_monic_values(field)?;
        let zp = ZModRing::new(field.modulus(), 1);
        let lift = |p: &Poly<u64>| param_poly(&zp, p.coeffs().iter().map(|&c| BigInt::from(c)).collect());
        Ok(PadicParam {
            p: field.modulus(),
            k: 1,
            q: lift(&param.q),
            w: w.iter().map(lift).collect(),
            lambda: param.lambda.clone(),
        })
    }

    pub fn ring(&self) -> ZModRing {
        ZModRing::new(self.p, self.k)
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.k)
    }

    /// The parametrization in the `q'` convention, `v_i = w_i q' mod q`.
    pub fn to_param(&self) -> ZeroDimParam<BigInt> {
        ZeroDimParam::from_monic_values(&self.ring(), self.q.clone(), &self.w, self.lambda.clone())
    }

    /// `f` evaluated at the parametrized point, as residues modulo `q`, in
    /// `Z/p^j` for any `j` (typically larger than `k`).
    pub fn residual(&self, f: &Slp, j: u32) -> Result<Vec<Poly<BigInt>>> {
        let ring = QuotientRing::new(ZModRing::new(self.p, j), self.q.clone());
        f.eval(&ring, &self.w)
    }

    /// Reduction to a lower precision.
    pub fn reduce(&self, k: u32) -> PadicParam {
        let zr = ZModRing::new(self.p, k);
        let red = |p: &Poly<BigInt>| param_poly(&zr, p.coeffs().iter().map(|c| zr.from_bigint(c)).collect());
        PadicParam { p: self.p, k, q: red(&self.q), w: self.w.iter().map(red).collect(), lambda: self.lambda.clone() }
    }
}

fn param_poly(ring: &ZModRing, coeffs: Vec<BigInt>) -> Poly<BigInt> {
    PolyRing::new(ring.clone()).from_coeffs(coeffs)
}

/// One Newton step from precision `k` to `2k`.
///
/// The point is corrected in `A = (Z/p^{2k})[T]/(q)` by `J^{-1} f`; the
/// correction moves `lambda` of the point to `T + delta`, which is then
/// absorbed into `q` and `w` to first order.
pub fn padic_lift(f: &Slp, jac: &Slp, param: &PadicParam) -> Result<PadicParam> {
    let zr = ZModRing::new(param.p, 2 * param.k);
    let px = PolyRing::new(zr.clone());
    let q = param.q.clone();
    let alg = QuotientRing::new(zr.clone(), q.clone());
    let n = param.w.len();
    let fx = f.eval(&alg, &param.w)?;
    let entries = jac.eval(&alg, &param.w)?;
    let jm: linalg::Matrix<_> = entries.chunks(n.max(1)).map(<[_]>::to_vec).collect();
    let step = linalg::solve_with_adjugate(&alg, &jm, &fx)?;
    let w1: Vec<_> = param.w.iter().zip(&step).map(|(a, b)| alg.sub(a, b)).collect();
    let delta = alg.sub(&lambda_value(&alg, &param.lambda, &w1), &alg.generator());
    let q_new = px.sub(&q, &px.rem_monic(&px.mul(&px.derivative(&q), &delta), &q));
    let w_new = w1
        .iter()
        .map(|wi| {
            let corr = px.rem_monic(&px.mul(&px.derivative(wi), &delta), &q);
            px.rem_monic(&px.sub(wi, &corr), &q_new)
        })
        .collect();
    Ok(PadicParam { p: param.p, k: 2 * param.k, q: q_new, w: w_new, lambda: param.lambda.clone() })
}

/// `2^ceil(H' / ln 2)`, an integer at least `exp(H')`.
pub fn coefficient_bound(h_prime: f64) -> BigInt {
    let bits = (h_prime / std::f64::consts::LN_2).ceil().max(0.0) as u64;
    BigInt::one() << bits
}

/// Smallest power-of-two exponent `k` with `p^k > 2 bound^2`.
pub fn target_exponent(p: u64, bound: &BigInt) -> u32 {
    let threshold = bound * bound * 2u32;
    let mut k = 1;
    while BigInt::from(p).pow(k) <= threshold {
        k *= 2;
    }
    k
}

/// Rational reconstruction of every coefficient of the `q'`-convention
/// parametrization, with numerators and denominators bounded by `bound`.
pub fn reconstruct_over_q(param: &PadicParam, bound: &BigInt) -> Result<ZeroDimParam<BigRational>> {
    let modulus = param.modulus();
    let v = param.to_param();
    let px = PolyRing::new(RationalField);
    let conv = |p: &Poly<BigInt>| -> Result<Poly<BigRational>> {
        let cs = p
            .coeffs()
            .iter()
            .map(|c| rational_reconstruct(&c.mod_floor(&modulus), &modulus, bound))
            .collect::<Result<Vec<_>>>()?;
        Ok(px.from_coeffs(cs))
    };
    Ok(ZeroDimParam {
        q: conv(&v.q)?,
        v: v.v.iter().map(conv).collect::<Result<Vec<_>>>()?,
        lambda: v.lambda.clone(),
    })
}

/// Checks applied to every parametrization returned over the rationals.
pub fn validate_over_q(
    sys: &System,
    heights: &[f64],
    param: &ZeroDimParam<BigRational>,
) -> Result<()> {
    param.validate(&RationalField).map_err(|v| Error::Validation(v.to_string()))?;
    if param.degree() == 0 {
        return Ok(());
    }
    let c = crate::bounds::bezout_number(&sys.blocks, &sys.degrees)?;
    if BigInt::from(param.degree()) > c {
        return Err(Error::Validation(format!("degree {} exceeds the Bézout bound {c}", param.degree())));
    }
    let w = param.to_monic_values(&RationalField)?;
    let alg = QuotientRing::new(RationalField, param.q.clone());
    if sys.f.eval(&alg, &w)?.iter().any(|r| !alg.is_zero(r)) {
        return Err(Error::Validation("the system does not vanish on the parametrization".into()));
    }
    let px = PolyRing::new(RationalField);
    let det = jacobian_det_at(&sys.f.jacobian(), &alg, &w)?;
    if px.gcd(&param.q, &det).degree() != Some(0) {
        return Err(Error::Validation("the Jacobian determinant vanishes at a parametrized point".into()));
    }
    let beta = beta_vector(heights, &sys.blocks, &sys.degrees);
    let bound = output_height_bound(&sys.blocks, &sys.degrees, &beta, linear_form_height(&param.lambda))?;
    let observed = std::iter::once(&param.q).chain(&param.v).map(poly_height).fold(0.0, f64::max);
    if observed > bound {
        return Err(Error::Validation(format!("height {observed} exceeds the bound {bound}")));
    }
    Ok(())
}

/// Lift a modular parametrization until reconstruction is possible,
/// reconstruct it and validate the result.
pub fn lift_and_reconstruct(
    sys: &System,
    heights: &[f64],
    field: &PrimeField,
    modular: &ZeroDimParam<u64>,
    h_prime: f64,
) -> Result<ZeroDimParam<BigRational>> {
    if modular.degree() == 0 {
        return Ok(ZeroDimParam::empty(&RationalField, modular.lambda.clone()));
    }
    let bound = coefficient_bound(h_prime);
    let target = target_exponent(field.modulus(), &bound);
    let jac = sys.f.jacobian();
    let mut param = PadicParam::from_modular(field, modular)?;
    while param.k < target {
        param = padic_lift(&sys.f, &jac, &param)?;
    }
    let out = reconstruct_over_q(&param, &bound)?;
    validate_over_q(sys, heights, &out)?;
    Ok(out)
}

/// The three possible results of a solve over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    /// All successful runs agree.
    Success(ZeroDimParam<BigRational>),
    /// Runs disagreed; this is the highest-degree validated output, which
    /// may miss solutions.
    LowerDegreeSuspected(ZeroDimParam<BigRational>),
    Fail(Error),
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Success(_) => "success",
            Outcome::LowerDegreeSuspected(_) => "lower-degree-suspected",
            Outcome::Fail(_) => "fail",
        }
    }

    pub fn param(&self) -> Option<&ZeroDimParam<BigRational>> {
        match self {
            Outcome::Success(p) | Outcome::LowerDegreeSuspected(p) => Some(p),
            Outcome::Fail(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OverZReport {
    pub outcome: Outcome,
    pub ledger: LiftingLedger,
    pub prime: u64,
    /// Output degree of each run, `None` for failed runs.
    pub degrees: Vec<Option<usize>>,
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub seed: u64,
    pub repeat: usize,
    /// Use this prime instead of calling the prime oracle.
    pub prime_override: Option<u64>,
}

/// Solve `f = 0` over the rationals, given height bounds `heights` on the
/// input polynomials.
pub fn solve_over_z(sys: &System, heights: &[f64], opts: &SolveOptions) -> Result<OverZReport> {
    let ledger = lifting_ledger(&sys.blocks, &sys.degrees, heights)?;
    let prime = match opts.prime_override {
        Some(p) => p,
        None => prime_oracle(&ledger.b, opts.seed)?,
    };
    let field = PrimeField::new(prime)?;
    let required = sys.required_characteristic()?;
    if BigInt::from(prime) < required {
        return Err(Error::CharacteristicTooSmall { characteristic: prime, required: required.to_u64().unwrap_or(u64::MAX) });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut best: Option<ZeroDimParam<BigRational>> = None;
    let mut degrees = Vec::new();
    let mut last_err = Error::ReconstructionFailed;
    for _ in 0..opts.repeat.max(1) {
        let lambda = random_linear_form(sys, &mut rng)?;
        let run = nonsingular_solutions_with(&field, sys, &lambda)
            .and_then(|m| lift_and_reconstruct(sys, heights, &field, &m, ledger.h_prime));
        match run {
            Ok(p) => {
                degrees.push(Some(p.degree()));
                if best.as_ref().is_none_or(|b| p.degree() > b.degree()) {
                    best = Some(p);
                }
            }
            Err(e) if e.is_fail() => {
                degrees.push(None);
                last_err = e;
            }
            Err(e) => return Err(e),
        }
    }
    let agree = {
        let mut ok = degrees.iter().flatten();
        let first = ok.next();
        ok.all(|d| Some(d) == first)
    };
    let outcome = match best {
        None => Outcome::Fail(last_err),
        Some(p) if agree => Outcome::Success(p),
        Some(p) => Outcome::LowerDegreeSuspected(p),
    };
    Ok(OverZReport { outcome, ledger, prime, degrees })
}

/// Heights of integer polynomials, as used for the `s` vector.
pub fn integer_heights(polys: &[crate::ring::MPoly]) -> Vec<f64> {
    polys.iter().map(|p| p.height()).collect()
}

#[cfg(test)]
mod tests;
