use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{height_of_coefficients, ln_bigint, Ring};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms map exponent vectors (one entry per variable) to nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, BigRational::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * BigInt::from(e[i]));
            }
        }
        out
    }

    /// Re-index into `nvars` variables, sending variable `k` to `map[k]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (k, &x) in e.iter().enumerate() {
                e2[map[k]] += x;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Evaluate over any ring, mapping each coefficient with `coeff`.
    pub fn eval_in<R: Ring>(&self, ring: &R, point: &[R::Elem], coeff: impl Fn(&BigRational) -> R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for (e, c) in &self.terms {
            let mut t = coeff(c);
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = ring.mul(&t, &ring.pow(x, k as u64));
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.eval_in(&super::RationalField, point, |c| c.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Per-block degrees for consecutive blocks of the given sizes.
    pub fn multidegree(&self, blocks: &[usize]) -> Vec<u32> {
        let mut out = vec![0; blocks.len()];
        for e in self.terms.keys() {
            let mut start = 0;
            for (j, &nj) in blocks.iter().enumerate() {
                out[j] = out[j].max(e[start..start + nj].iter().sum());
                start += nj;
            }
        }
        out
    }

    /// Scale by a positive rational so that all coefficients are coprime
    /// integers. Returns the scaled polynomial and the factor used.
    pub fn clear_denominators(&self) -> (Self, BigRational) {
        if self.is_zero() {
            return (self.clone(), BigRational::one());
        }
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den / c.denom()))));
        let factor = BigRational::new(den, num);
        (self.scale(&factor), factor)
    }

    /// Height: `max(log v, log |v c|)` over the coefficients `c`, with `v`
    /// their least common denominator.
    pub fn height(&self) -> f64 {
        height_of_coefficients(self.terms.values())
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<(Vec<u32>, BigInt)>> {
        self.terms.iter().map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer()))).collect()
    }

    /// `ln` of the largest absolute coefficient of an integer polynomial.
    pub fn max_ln_coefficient(&self) -> f64 {
        self.terms.values().map(|c| ln_bigint(&c.numer().abs())).fold(0.0, f64::max)
    }
}

/// The ring `Q[X_1, ..., X_n]` as a context object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MPolyRing {
    nvars: usize,
}

impl MPolyRing {
    pub fn new(nvars: usize) -> Self {
        MPolyRing { nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn var(&self, i: usize) -> MPoly {
        MPoly::var(self.nvars, i)
    }

    pub fn vars(&self) -> Vec<MPoly> {
        (0..self.nvars).map(|i| self.var(i)).collect()
    }
}

impl Ring for MPolyRing {
    type Elem = MPoly;

    fn zero(&self) -> MPoly {
        MPoly::zero(self.nvars)
    }

    fn one(&self) -> MPoly {
        MPoly::constant(self.nvars, BigRational::one())
    }

    fn from_bigint(&self, n: &BigInt) -> MPoly {
        MPoly::constant(self.nvars, BigRational::from_integer(n.clone()))
    }

    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.add(b)
    }

    fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.sub(b)
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.mul(b)
    }

    fn neg(&self, a: &MPoly) -> MPoly {
        a.neg()
    }

    fn inv(&self, a: &MPoly) -> Option<MPoly> {
        let (e, c) = a.terms.iter().next()?;
        (a.terms.len() == 1 && e.iter().all(|&k| k == 0)).then(|| MPoly::constant(self.nvars, c.recip()))
    }

    fn characteristic(&self) -> u64 {
        0
    }
}
