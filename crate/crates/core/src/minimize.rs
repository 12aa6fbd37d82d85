//! Critical points of the first coordinate on a smooth real algebraic set,
//! computed through a Lagrange system, and isolation of the smallest
//! critical value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{lagrange_bounds, lagrange_pattern};
use crate::error::{Error, Result};
use crate::homotopy::System;
use crate::liftz::{solve_over_z, OverZReport, SolveOptions};
use crate::ring::realroot::isolate_real_roots;
pub use crate::ring::realroot::Interval;
use crate::ring::{MPoly, PolyRing, RationalField};
use crate::slp::{Slp, SlpBuilder};
use crate::zdp::ZeroDimParam;

/// Constraints `h_1 = ... = h_p = 0` in `n` variables, with `d` bounding
/// their total degrees and `s` their heights.
#[derive(Clone, Debug)]
pub struct MinimizationProblem {
    pub n: usize,
    pub h: Slp,
    pub d: u32,
    pub s: f64,
}

impl MinimizationProblem {
    pub fn new(h: Slp, d: u32, s: f64) -> Result<Self> {
        let (n, p) = (h.n_inputs(), h.n_outputs());
        if p == 0 || p > n {
            return Err(Error::InvalidInput(format!("need 1 <= p <= n constraints, got p={p}, n={n}")));
        }
        if d == 0 {
            return Err(Error::InvalidInput("constraints must have positive degree".into()));
        }
        Ok(MinimizationProblem { n, h, d, s })
    }

    /// Degree and height bounds are read off the polynomials.
    pub fn from_polys(n: usize, polys: &[MPoly]) -> Result<Self> {
        let d = polys.iter().map(MPoly::total_degree).max().unwrap_or(0);
        let s = polys.iter().map(MPoly::height).fold(0.0, f64::max);
        Self::new(Slp::from_polys(n, polys)?, d, s)
    }

    pub fn p(&self) -> usize {
        self.h.n_outputs()
    }

    /// `binom(n-1, p-1) d^p (d-1)^{n-p}`.
    pub fn degree_bound(&self) -> Result<BigInt> {
        Ok(lagrange_bounds(self.n, self.p(), self.d, self.s)?.c)
    }
}

/// The square system `(h, [L] jac(h, 1), u.L - 1)` in the variables
/// `X_1..X_n, L_1..L_p`, where `jac(h, 1)` drops the first column.
#[derive(Clone, Debug)]
pub struct LagrangeSystem {
    pub system: System,
    pub u: Vec<BigInt>,
    /// Height bound for each equation.
    pub heights: Vec<f64>,
}

pub fn build_lagrange_system(prob: &MinimizationProblem, u: &[BigInt]) -> Result<LagrangeSystem> {
    let (n, p) = (prob.n, prob.p());
    if u.len() != p {
        return Err(Error::ArityMismatch { expected: p, found: u.len() });
    }
    if u.iter().all(Zero::is_zero) {
        return Err(Error::InvalidInput("u must be nonzero".into()));
    }
    let mut b = SlpBuilder::new(n + p);
    let x: Vec<usize> = (0..n).map(|i| b.input(i)).collect();
    let l: Vec<usize> = (n..n + p).map(|i| b.input(i)).collect();
    let mut outputs = b.append(&prob.h, &x);
    let jac = b.append(&prob.h.jacobian(), &x);
    for k in 1..n {
        let terms: Vec<usize> = (0..p).map(|i| b.mul(l[i], jac[i * n + k])).collect();
        let sum = terms[1..].iter().fold(terms[0], |acc, &t| b.add(acc, t));
        outputs.push(sum);
    }
    let mut lin = None;
    for (li, ui) in l.iter().zip(u) {
        if ui.is_zero() {
            continue;
        }
        let c = b.constant(ui.clone());
        let t = b.mul(c, *li);
        lin = Some(match lin {
            None => t,
            Some(acc) => b.add(acc, t),
        });
    }
    let one = b.constant(1);
    let last = b.sub(lin.expect("u is nonzero"), one);
    outputs.push(last);

    let (blocks, degrees) = lagrange_pattern(n, p, prob.d)?;
    let c = prob.degree_bound()?.to_f64().unwrap_or(f64::MAX).max(1.0);
    let (nf, pf, df) = (n as f64, p as f64, prob.d as f64);
    let mut heights = vec![prob.s; p];
    heights.extend(std::iter::repeat_n(prob.s + nf.ln() + df.ln(), n - 1));
    let u_height = u.iter().filter(|c| !c.is_zero()).map(crate::ring::ln_bigint).fold(0.0, f64::max);
    heights.push((pf * (8.0 * pf * c).ln()).max(u_height));
    Ok(LagrangeSystem { system: System::new(b.finish(outputs), blocks, degrees)?, u: u.to_vec(), heights })
}

/// `(1, i, i^2, ..., i^{p-1})` for a random `i` in `1..=8 (p-1) delta`.
pub fn choose_u(p: usize, delta: &BigInt, seed: u64) -> Vec<BigInt> {
    if p <= 1 {
        return vec![BigInt::from(1); p];
    }
    let top = (BigInt::from(8 * (p as u64 - 1)) * delta).to_u64().unwrap_or(u64::MAX).max(1);
    let i = BigInt::from(ChaCha8Rng::seed_from_u64(seed).gen_range(1..=top));
    (0..p as u32).map(|k| i.pow(k)).collect()
}

#[derive(Clone, Debug)]
pub struct CriticalPoints {
    pub lagrange: LagrangeSystem,
    pub report: OverZReport,
    /// Points `(x, l)` of the Lagrange system.
    pub full: ZeroDimParam<BigRational>,
    /// The same parametrization restricted to the `x` coordinates.
    pub projected: ZeroDimParam<BigRational>,
}

/// Critical points of `x_1` on `h = 0`.
pub fn critical_points(prob: &MinimizationProblem, seed: u64, repeat: usize) -> Result<CriticalPoints> {
    let u = choose_u(prob.p(), &prob.degree_bound()?, seed);
    let lagrange = build_lagrange_system(prob, &u)?;
    let opts = SolveOptions { seed, repeat, prime_override: None };
    critical_points_with(prob, lagrange, &opts)
}

pub fn critical_points_with(prob: &MinimizationProblem, lagrange: LagrangeSystem, opts: &SolveOptions) -> Result<CriticalPoints> {
    let report = solve_over_z(&lagrange.system, &lagrange.heights, opts)?;
    let full = match &report.outcome {
        crate::liftz::Outcome::Fail(e) => return Err(e.clone()),
        other => other.param().cloned().expect("non-fail outcome carries a parametrization"),
    };
    if BigInt::from(full.degree()) > prob.degree_bound()? {
        return Err(Error::Validation(format!("{} critical points exceed the Lagrange bound", full.degree())));
    }
    let projected = ZeroDimParam { q: full.q.clone(), v: full.v[..prob.n].to_vec(), lambda: full.lambda.clone() };
    Ok(CriticalPoints { lagrange, report, full, projected })
}

/// Interval of width at most `2^-sigma` containing the smallest value of
/// `x_1 = v_1 / q'` over the real roots of `q`, or `None` when `q` has no
/// real root.
pub fn isolate_minimum(param: &ZeroDimParam<BigRational>, sigma: u32) -> Option<Interval> {
    let px = PolyRing::new(RationalField);
    let dq = px.derivative(&param.q);
    let v1 = param.v.first()?;
    let eps = BigRational::new(1.into(), BigInt::from(1) << sigma);
    let mut best: Option<Interval> = None;
    for mut root in isolate_real_roots(&param.q) {
        let enclosure = loop {
            match root.enclose(v1, &dq) {
                Some(iv) if iv.width() <= eps => break iv,
                _ => root.refine(&param.q),
            }
        };
        best = Some(match best {
            None => enclosure,
            Some(b) => Interval { lo: b.lo.min(enclosure.lo), hi: b.hi.min(enclosure.hi) },
        });
    }
    best
}
