use num_bigint::BigInt;

use super::{Poly, PolyRing, Ring};

/// Power series in `t` known modulo `t^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> TruncatedSeries<E> {
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Constant term.
    pub fn at_zero(&self) -> &E {
        &self.coeffs[0]
    }
}

/// `R[[t]] / (t^prec)`. Binary operations truncate to the smaller precision
/// of their operands; constants are created at the ring's precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRing<R> {
    base: R,
    prec: usize,
}

impl<R: Ring> SeriesRing<R> {
    pub fn new(base: R, prec: usize) -> Self {
        assert!(prec >= 1, "series precision must be positive");
        SeriesRing { base, prec }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Series from its leading coefficients, zero-padded or truncated to
    /// the ring precision.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> TruncatedSeries<R::Elem> {
        coeffs.resize(self.prec, self.base.zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(&self, p: &Poly<R::Elem>) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(p.coeffs().iter().take(self.prec).cloned().collect())
    }

    pub fn to_poly(&self, s: &TruncatedSeries<R::Elem>) -> Poly<R::Elem> {
        PolyRing::new(self.base.clone()).from_coeffs(s.coeffs.clone())
    }

    pub fn constant(&self, c: R::Elem) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The series variable `t`.
    pub fn var(&self) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(vec![self.base.zero(), self.base.one()])
    }

    /// Re-embed at this ring's precision (pads with zeros when growing).
    pub fn lift(&self, s: &TruncatedSeries<R::Elem>) -> TruncatedSeries<R::Elem> {
        self.from_coeffs(s.coeffs.clone())
    }
}

impl<R: Ring> Ring for SeriesRing<R> {
    type Elem = TruncatedSeries<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_coeffs(Vec::new())
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.add(x, y)).collect();
        TruncatedSeries { coeffs }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.sub(x, y)).collect();
        TruncatedSeries { coeffs }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let base = &self.base;
        let n = a.coeffs.len().min(b.coeffs.len());
        let mut out = vec![base.zero(); n];
        for (i, x) in a.coeffs.iter().take(n).enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = base.add(&out[i + j], &base.mul(x, y));
            }
        }
        TruncatedSeries { coeffs: out }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        TruncatedSeries { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }

    /// Invertible exactly when the constant term is a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let base = &self.base;
        let c0 = base.inv(&a.coeffs[0])?;
        let n = a.coeffs.len();
        let mut out: Vec<R::Elem> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = base.zero();
            for j in 1..=k {
                acc = base.add(&acc, &base.mul(&a.coeffs[j], &out[k - j]));
            }
            out.push(base.neg(&base.mul(&c0, &acc)));
        }
        Some(TruncatedSeries { coeffs: out })
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|c| self.base.is_zero(c))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    #[test]
    fn geometric_series_inverse() {
        let s = SeriesRing::new(PrimeField::new(101).unwrap(), 6);
        let one_minus_t = s.from_coeffs(vec![1, 100]);
        let inv = s.inv(&one_minus_t).unwrap();
        assert_eq!(inv.coeffs(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(s.mul(&inv, &one_minus_t), s.one());
        assert!(s.inv(&s.var()).is_none());
    }

    #[test]
    fn mixed_precision_truncates() {
        let f = PrimeField::new(101).unwrap();
        let big = SeriesRing::new(f, 6);
        let small = SeriesRing::new(f, 3);
        let prod = big.mul(&big.from_coeffs(vec![1, 2, 3, 4]), &small.from_coeffs(vec![1, 1]));
        assert_eq!(prod.precision(), 3);
        assert_eq!(prod.coeffs(), &[1, 3, 5]);
    }
}
