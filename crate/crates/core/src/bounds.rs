//! Multi-homogeneous Bézout numbers, height bounds and the lifting ledger.
//!
//! Bézout numbers are coefficient sums of products of linear forms in the
//! truncated Chow ring `Z[theta_1..theta_m] / (theta_j^{n_j+1})`. Height
//! bounds run the same product with an extra square-zero variable `zeta`
//! carrying real-valued height data. Real quantities are rounded upward: they
//! only ever serve as upper bounds.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::slp::{BlockStructure, MultiDegree};

const MAX_CHOW_ENTRIES: u128 = 1 << 24;
const SLACK: f64 = 1.0 + 1.0 / (1u64 << 40) as f64;

/// Round a nonnegative quantity upward past any accumulated float error.
fn up(x: f64) -> f64 {
    x * SLACK
}

/// Dense exponent-array layout for the truncated Chow ring.
#[derive(Clone, Debug)]
struct ChowShape {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl ChowShape {
    fn new(sizes: &[usize]) -> Result<Self> {
        let entries: u128 = sizes.iter().map(|&n| n as u128 + 1).product();
        if entries > MAX_CHOW_ENTRIES {
            return Err(Error::ChowRingTooLarge { entries });
        }
        let mut strides = Vec::with_capacity(sizes.len());
        let mut s = 1;
        for &n in sizes {
            strides.push(s);
            s *= n + 1;
        }
        Ok(ChowShape { sizes: sizes.to_vec(), strides, len: s })
    }

    /// For every index whose `j`-th exponent can still grow, the index after
    /// multiplying by `theta_j`.
    fn shifts(&self, j: usize) -> Vec<(usize, usize)> {
        (0..self.len)
            .filter(|&idx| (idx / self.strides[j]) % (self.sizes[j] + 1) < self.sizes[j])
            .map(|idx| (idx, idx + self.strides[j]))
            .collect()
    }
}

/// Multiply a Chow polynomial by the linear form `sum_j d_j theta_j`.
fn mul_linear<T: Clone + Zero>(
    shape: &ChowShape,
    shifts: &[Vec<(usize, usize)>],
    a: &[T],
    d: &[u32],
    scale: impl Fn(&T, u32) -> T,
) -> Vec<T> {
    let mut out = vec![T::zero(); shape.len];
    for (j, &dj) in d.iter().enumerate() {
        if dj == 0 {
            continue;
        }
        for &(from, to) in &shifts[j] {
            if !a[from].is_zero() {
                out[to] = out[to].clone() + scale(&a[from], dj);
            }
        }
    }
    out
}

fn check_square(n: &BlockStructure, d: &MultiDegree) -> Result<()> {
    if d.len() != n.total() {
        return Err(Error::ArityMismatch { expected: n.total(), found: d.len() });
    }
    if let Some(r) = d.rows().iter().find(|r| r.len() != n.count()) {
        return Err(Error::ArityMismatch { expected: n.count(), found: r.len() });
    }
    Ok(())
}

fn chow_product(sizes: &[usize], rows: &[Vec<u32>]) -> Result<Vec<BigInt>> {
    let shape = ChowShape::new(sizes)?;
    let shifts: Vec<_> = (0..sizes.len()).map(|j| shape.shifts(j)).collect();
    let mut acc = vec![BigInt::zero(); shape.len];
    acc[0] = BigInt::from(1);
    for row in rows {
        acc = mul_linear(&shape, &shifts, &acc, row, |x, k| x * k);
    }
    Ok(acc)
}

/// The multi-homogeneous Bézout number `C_n(d)`.
pub fn bezout_number(n: &BlockStructure, d: &MultiDegree) -> Result<BigInt> {
    check_square(n, d)?;
    Ok(chow_product(n.sizes(), d.rows())?.into_iter().sum())
}

/// `C_{n'}(d')`: the Bézout number with an extra one-variable block whose
/// degree is 1 in every equation.
pub fn homotopy_bezout_number(n: &BlockStructure, d: &MultiDegree) -> Result<BigInt> {
    check_square(n, d)?;
    let mut sizes = vec![1];
    sizes.extend_from_slice(n.sizes());
    let rows: Vec<Vec<u32>> = d
        .rows()
        .iter()
        .map(|r| {
            let mut row = vec![1];
            row.extend_from_slice(r);
            row
        })
        .collect();
    Ok(chow_product(&sizes, &rows)?.into_iter().sum())
}

/// `H_n(beta, d)`: coefficient sum of `prod (beta_i zeta + d_i . theta)`
/// modulo `zeta^2` and the block truncations.
pub fn height_bound(n: &BlockStructure, beta: &[f64], d: &MultiDegree) -> Result<f64> {
    check_square(n, d)?;
    if beta.len() != d.len() {
        return Err(Error::ArityMismatch { expected: d.len(), found: beta.len() });
    }
    if beta.iter().any(|&b| b.is_nan() || b < 0.0) {
        return Err(Error::InvalidInput("height weights must be nonnegative".into()));
    }
    let shape = ChowShape::new(n.sizes())?;
    let shifts: Vec<_> = (0..n.count()).map(|j| shape.shifts(j)).collect();
    let mut deg = vec![BigInt::zero(); shape.len];
    deg[0] = BigInt::from(1);
    let mut ht = vec![0.0f64; shape.len];
    for (row, &b) in d.rows().iter().zip(beta) {
        // (deg + zeta ht)(L + zeta b) = deg L + zeta (ht L + b deg)
        let mut new_ht = mul_linear(&shape, &shifts, &ht, row, |x, k| up(x * k as f64));
        for (h, g) in new_ht.iter_mut().zip(&deg) {
            if !g.is_zero() {
                *h = up(*h + up(b * up(to_f64_up(g))));
            }
        }
        deg = mul_linear(&shape, &shifts, &deg, row, |x, k| x * k);
        ht = new_ht;
    }
    let total_deg: BigInt = deg.into_iter().sum();
    let total_ht = ht.iter().fold(0.0, |acc, &h| up(acc + h));
    Ok(up(total_ht + to_f64_up(&total_deg)))
}

fn to_f64_up(n: &BigInt) -> f64 {
    up(n.to_f64().unwrap_or(f64::INFINITY))
}

/// `beta_i = s_i + sum_j ln(n_j + 1) d_{i,j}`.
pub fn beta_vector(s: &[f64], n: &BlockStructure, d: &MultiDegree) -> Vec<f64> {
    s.iter()
        .zip(d.rows())
        .map(|(&si, row)| {
            let extra = row
                .iter()
                .zip(n.sizes())
                .fold(0.0, |acc, (&dij, &nj)| up(acc + up(((nj + 1) as f64).ln()) * dij as f64));
            up(si + extra)
        })
        .collect()
}

/// The parameters driving prime selection and lifting precision.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftingLedger {
    /// `C_n(d)`.
    pub c: BigInt,
    /// `H_n(beta, d)`.
    pub hn: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub mu3: f64,
    pub h: f64,
    pub h_prime: f64,
    /// `max_j sum_i d_{i,j}`.
    pub e: u32,
    /// `max(8 ceil(H), e)`.
    pub b: BigInt,
}

pub fn lifting_ledger(n: &BlockStructure, d: &MultiDegree, s: &[f64]) -> Result<LiftingLedger> {
    check_square(n, d)?;
    if s.len() != d.len() {
        return Err(Error::ArityMismatch { expected: d.len(), found: s.len() });
    }
    let c = bezout_number(n, d)?;
    let beta = beta_vector(s, n, d);
    let hn = height_bound(n, &beta, d)?;
    let nn = n.total() as f64;
    let cf = to_f64_up(&c);
    let smax = s.iter().cloned().fold(0.0, f64::max);
    let dd = d.max_row_sum() as f64;
    let ln = |x: f64| up(x.ln());

    let mu1 = up(nn * ln(up(8.0 * nn * up(cf * cf))));
    let mu2 = up(hn + up(2.0 * ln(nn + 1.0) * cf));
    let mu3 = up(mu2 + up(mu1 * cf) + up(ln(nn + 2.0) * cf) + up((nn + 1.0) * ln(cf.max(1.0))));
    let h = up(6.0 * nn * (dd + 1.0) * cf * up(mu3 + smax + up(ln(nn + 1.0) * cf)));
    let h_prime = up(hn + up(up(mu1 + 4.0 * ln(nn + 2.0)) * cf));
    let e = d.max_column_sum();
    let h_ceil = BigInt::from_f64(h.ceil()).ok_or_else(|| Error::InvalidInput("height bound overflow".into()))?;
    let b = (h_ceil * 8u32).max(BigInt::from(e));
    Ok(LiftingLedger { c, hn, mu1, mu2, mu3, h, h_prime, e, b })
}

/// Height bound for a parametrization associated with a linear form of
/// height `b`: `H_n(beta, d) + (b + 4 ln(N + 2)) C_n(d)`.
pub fn output_height_bound(n: &BlockStructure, d: &MultiDegree, beta: &[f64], b: f64) -> Result<f64> {
    let hn = height_bound(n, beta, d)?;
    let c = to_f64_up(&bezout_number(n, d)?);
    Ok(up(hn + up(up(b + 4.0 * up(((n.total() + 2) as f64).ln())) * c)))
}

/// Block structure `(n, p)` and multi-degrees of the Lagrange system for
/// `p` constraints of degree `d` in `n` variables: `p` copies of `(d, 0)`,
/// `n - 1` copies of `(d - 1, 1)` and one `(0, 1)`.
pub fn lagrange_pattern(n: usize, p: usize, d: u32) -> Result<(BlockStructure, MultiDegree)> {
    if p == 0 || p > n || d == 0 {
        return Err(Error::InvalidInput(format!("need 1 <= p <= n and d >= 1, got n={n}, p={p}, d={d}")));
    }
    let blocks = BlockStructure::new(vec![n, p])?;
    let mut rows = vec![vec![d, 0]; p];
    rows.extend(std::iter::repeat_n(vec![d - 1, 1], n - 1));
    rows.push(vec![0, 1]);
    let degs = MultiDegree::new(&blocks, rows)?;
    Ok((blocks, degs))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LagrangeBounds {
    /// `binom(n-1, p-1) d^p (d-1)^{n-p}`.
    pub c: BigInt,
    /// `H_n(beta, d)` on the Lagrange pattern with the explicit height weights.
    pub height: f64,
}

pub fn lagrange_bounds(n: usize, p: usize, d: u32, s: f64) -> Result<LagrangeBounds> {
    let (blocks, degs) = lagrange_pattern(n, p, d)?;
    let c = binomial(n as u64 - 1, p as u64 - 1) * BigInt::from(d).pow(p as u32) * BigInt::from(d - 1).pow((n - p) as u32);
    let (nf, pf, df) = (n as f64, p as f64, d as f64);
    let cf = to_f64_up(&c).max(1.0);
    let eta1 = up(s + df * up((nf + 1.0).ln()));
    let eta2 = up(s + nf.ln() + df.ln() + (df - 1.0) * (nf + 1.0).ln() + (pf + 1.0).ln());
    let eta3 = up(pf * up((8.0 * pf * cf).ln()) + (pf + 1.0).ln());
    let mut beta = vec![eta1; p];
    beta.extend(std::iter::repeat_n(eta2, n - 1));
    beta.push(eta3);
    let height = height_bound(&blocks, &beta, &degs)?;
    Ok(LagrangeBounds { c, height })
}
