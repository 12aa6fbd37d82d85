use num_bigint::BigInt;

use super::{Field, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients stored low-to-high degree.
///
/// The coefficient vector never ends with a zero; the zero polynomial is
/// the empty vector. Build values through [`PolyRing`] so that trimming
/// uses the coefficient ring's notion of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (`degree + 1`, or 0).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// The polynomial ring `R[T]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c * T^deg`.
    pub fn monomial(&self, c: R::Elem, deg: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); deg];
        v.push(c);
        self.from_coeffs(v)
    }

    /// The variable `T`.
    pub fn var(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// `T - c`.
    pub fn linear_root(&self, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![self.base.neg(c), self.base.one()])
    }

    /// Coefficient of `T^i` (zero beyond the degree).
    pub fn coeff(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        let b = &self.base;
        p.coeffs.iter().rev().fold(b.zero(), |acc, c| b.add(&b.mul(&acc, x), c))
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        let b = &self.base;
        let coeffs = p
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| b.mul(&b.from_i64(i as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// `p mod T^n`.
    pub fn truncate(&self, p: &Poly<R::Elem>, n: usize) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().take(n).cloned().collect())
    }

    /// `p * T^k`.
    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return p.clone();
        }
        let mut v = vec![self.base.zero(); k];
        v.extend(p.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Product of `T - r` over all `r`.
    pub fn from_roots(&self, roots: &[R::Elem]) -> Poly<R::Elem> {
        roots.iter().fold(self.one(), |acc, r| self.mul(&acc, &self.linear_root(r)))
    }

    /// Division with remainder by a monic divisor; valid over any ring.
    pub fn divrem_monic(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> (Poly<R::Elem>, Poly<R::Elem>) {
        let b_deg = b.degree().expect("division by the zero polynomial");
        assert!(self.base.is_one(b.lc().unwrap()), "divisor must be monic");
        self.divrem_with_lc_inverse(a, b, b_deg, &self.base.one())
    }

    pub fn rem_monic(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.len() < b.len() {
            return a.clone();
        }
        self.divrem_monic(a, b).1
    }

    fn divrem_with_lc_inverse(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
        b_deg: usize,
        lc_inv: &R::Elem,
    ) -> (Poly<R::Elem>, Poly<R::Elem>) {
        let base = &self.base;
        if a.len() <= b_deg {
            return (self.zero(), a.clone());
        }
        let mut rem = a.coeffs.clone();
        let mut quot = vec![base.zero(); a.len() - b_deg];
        for i in (0..quot.len()).rev() {
            let c = base.mul(&rem[i + b_deg], lc_inv);
            if base.is_zero(&c) {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[i + j] = base.sub(&rem[i + j], &base.mul(&c, bc));
            }
            quot[i] = c;
        }
        rem.truncate(b_deg);
        (self.from_coeffs(quot), self.from_coeffs(rem))
    }

    pub fn map_into<S: Ring>(&self, target: &PolyRing<S>, p: &Poly<R::Elem>, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }
}

/// Quotient and remainder, or any other pair of polynomials.
pub type PolyPair<E> = (Poly<E>, Poly<E>);

/// `(g, u, v)` with `u a + v b = g`.
pub type Xgcd<E> = (Poly<E>, Poly<E>, Poly<E>);

impl<F: Field> PolyRing<F> {
    pub fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<PolyPair<F::Elem>> {
        let b_deg = b.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = self.base.inv(b.lc().unwrap()).ok_or(Error::DivisionByZero)?;
        Ok(self.divrem_with_lc_inverse(a, b, b_deg, &lc_inv))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Exact quotient; panics when `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (q, r) = self.divrem(a, b).expect("division by the zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> bool {
        match self.divrem(b, a) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => b.is_zero(),
        }
    }

    /// Normalize to leading coefficient one; zero stays zero.
    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        match p.lc() {
            None => p.clone(),
            Some(lc) => self.scale(p, &self.base.inv(lc).unwrap()),
        }
    }

    /// Extended Euclid: `(g, u, v)` with `g` monic and `u a + v b = g`.
    pub fn xgcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Xgcd<F::Elem> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1).unwrap();
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.base.inv(lc).unwrap();
                (self.scale(&r0, &inv), self.scale(&s0, &inv), self.scale(&t0, &inv))
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = self.rem(&r0, &r1).unwrap();
            r0 = std::mem::replace(&mut r1, r);
        }
        self.monic(&r0)
    }

    /// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
    pub fn inv_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        if m.degree() == Some(0) {
            return Some(self.zero());
        }
        let a = self.rem(a, m).ok()?;
        let (g, u, _) = self.xgcd(&a, m);
        if g.degree() != Some(0) {
            return None;
        }
        self.rem(&u, m).ok()
    }

    /// Squarefree part `r / gcd(r, r')` and the product of the roots of
    /// multiplicity exactly one, both monic.
    ///
    /// Requires characteristic zero or larger than `deg r`, so that `r'`
    /// loses exactly one power of each root.
    pub fn squarefree_and_multiplicity_one(&self, r: &Poly<F::Elem>) -> Result<PolyPair<F::Elem>> {
        let deg = r.degree().ok_or(Error::DivisionByZero)?;
        let char = self.base.characteristic();
        if char != 0 && char <= deg as u64 {
            return Err(Error::CharacteristicTooSmall { characteristic: char, required: deg as u64 + 1 });
        }
        let dr = self.derivative(r);
        let rtilde = self.monic(&self.div_exact(r, &self.gcd(r, &dr)));
        let r1 = self.monic(&self.div_exact(&rtilde, &self.gcd(&rtilde, &dr)));
        Ok((rtilde, r1))
    }

    pub fn is_squarefree(&self, p: &Poly<F::Elem>) -> bool {
        !p.is_zero() && self.gcd(p, &self.derivative(p)).degree() == Some(0)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Poly<R::Elem> {
        Poly { coeffs: Vec::new() }
    }

    fn one(&self) -> Poly<R::Elem> {
        self.from_coeffs(vec![self.base.one()])
    }

    fn from_bigint(&self, n: &BigInt) -> Poly<R::Elem> {
        self.from_coeffs(vec![self.base.from_bigint(n)])
    }

    fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut v = long.coeffs.clone();
        for (x, y) in v.iter_mut().zip(&short.coeffs) {
            *x = self.base.add(x, y);
        }
        self.from_coeffs(v)
    }

    fn sub(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| self.base.sub(&self.coeff(a, i), &self.coeff(b, i))).collect();
        self.from_coeffs(v)
    }

    fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let base = &self.base;
        let mut v = vec![base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = base.add(&v[i + j], &base.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }

    fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|c| self.base.neg(c)).collect())
    }

    fn inv(&self, a: &Poly<R::Elem>) -> Option<Poly<R::Elem>> {
        if a.degree() == Some(0) {
            self.base.inv(&a.coeffs[0]).map(|c| self.constant(c))
        } else {
            None
        }
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
}
