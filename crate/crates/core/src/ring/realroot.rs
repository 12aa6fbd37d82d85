//! Real roots of univariate polynomials over the rationals: Sturm
//! sequences, isolating intervals and interval evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Poly, PolyRing, RationalField, Ring};

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.contains(&BigRational::zero()) {
            return None;
        }
        let inv = Interval { lo: o.hi.recip(), hi: o.lo.recip() };
        Some(self.mul(&inv))
    }

    /// Horner evaluation of `p` over the interval.
    pub fn eval(&self, p: &Poly<BigRational>) -> Self {
        p.coeffs().iter().rev().fold(Interval::point(BigRational::zero()), |acc, c| {
            acc.mul(self).add(&Interval::point(c.clone()))
        })
    }
}

/// Sturm sequence of a squarefree polynomial.
pub fn sturm_sequence(q: &Poly<BigRational>) -> Vec<Poly<BigRational>> {
    let px = PolyRing::new(RationalField);
    let mut seq = vec![q.clone(), px.derivative(q)];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = px.neg(&px.rem(&seq[n - 2], &seq[n - 1]).expect("divisor is nonzero"));
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

pub fn sign_changes(seq: &[Poly<BigRational>], x: &BigRational) -> usize {
    let px = PolyRing::new(RationalField);
    let signs: Vec<bool> = seq.iter().map(|p| px.eval(p, x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A real root of `q`: either known exactly or isolated in an open interval
/// whose endpoints are not roots.
#[derive(Clone, Debug)]
pub enum RealRoot {
    Exact(BigRational),
    Isolated(BigRational, BigRational),
}

/// A point in `(a, b)` that is not a root of `q`, close to the midpoint.
fn split_point(q: &Poly<BigRational>, a: &BigRational, b: &BigRational) -> BigRational {
    let px = PolyRing::new(RationalField);
    let two = BigRational::from_integer(2.into());
    let mut m = (a + b) / &two;
    let mut den = 3i64;
    while px.eval(q, &m).is_zero() {
        m = a + (b - a) * BigRational::new((den / 2).into(), den.into());
        den += 1;
    }
    m
}

/// Real roots of a squarefree `q`, as disjoint isolating intervals.
pub fn isolate_real_roots(q: &Poly<BigRational>) -> Vec<RealRoot> {
    let deg = match q.degree() {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let lead = q.coeffs()[deg].abs();
    let cauchy = q.coeffs()[..deg].iter().map(|c| c.abs() / &lead).max().unwrap_or_default();
    let m = cauchy + BigRational::from_integer(1.into());
    let seq = sturm_sequence(q);
    let mut out = Vec::new();
    let mut stack = vec![(-m.clone(), m)];
    while let Some((a, b)) = stack.pop() {
        match sign_changes(&seq, &a) - sign_changes(&seq, &b) {
            0 => {}
            1 => out.push(RealRoot::Isolated(a, b)),
            _ => {
                let mid = split_point(q, &a, &b);
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out
}

impl RealRoot {
    /// Halve the isolating interval.
    pub fn refine(&mut self, q: &Poly<BigRational>) {
        let RealRoot::Isolated(a, b) = self else { return };
        let px = PolyRing::new(RationalField);
        let mid = (&*a + &*b) / BigRational::from_integer(2.into());
        let fm = px.eval(q, &mid);
        if fm.is_zero() {
            *self = RealRoot::Exact(mid);
        } else if px.eval(q, a).is_positive() != fm.is_positive() {
            *b = mid;
        } else {
            *a = mid;
        }
    }

    /// Enclosure of `num / den` at this root, if `den` is bounded away from
    /// zero on the current interval.
    pub fn enclose(&self, num: &Poly<BigRational>, den: &Poly<BigRational>) -> Option<Interval> {
        match self {
            RealRoot::Exact(x) => {
                let px = PolyRing::new(RationalField);
                let d = px.eval(den, x);
                (!d.is_zero()).then(|| Interval::point(px.eval(num, x) / d))
            }
            RealRoot::Isolated(a, b) => {
                let iv = Interval { lo: a.clone(), hi: b.clone() };
                iv.eval(num).div(&iv.eval(den))
            }
        }
    }
}


/// Simplest fraction (smallest denominator) in `[lo, hi]`, by continued
/// fractions.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo || fl + BigRational::one() <= *hi {
        return if lo.is_integer() { lo.clone() } else { lo.floor() + BigRational::one() };
    }
    let f = lo.floor();
    let inner = simplest_between(&(hi - &f).recip(), &(lo - &f).recip());
    f + inner.recip()
}

/// The rational roots of `q`, in increasing order.
///
/// A rational root `a/b` in lowest terms of an integer polynomial has `b`
/// dividing the leading coefficient `l`, and two such roots are at least
/// `1/l^2` apart, so each real root is refined until its interval is that
/// narrow and the simplest fraction inside is tested.
pub fn rational_roots(q: &Poly<BigRational>) -> Vec<BigRational> {
    let px = PolyRing::new(RationalField);
    let Some(deg) = q.degree() else { return Vec::new() };
    let den = q.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lead = (&q.coeffs()[deg] * BigRational::from_integer(den)).to_integer().abs();
    let eps = BigRational::new(BigInt::one(), &lead * &lead);
    let mut out = Vec::new();
    for mut root in isolate_real_roots(q) {
        let candidate = loop {
            match &root {
                RealRoot::Exact(x) => break x.clone(),
                RealRoot::Isolated(a, b) if b - a < eps => break simplest_between(a, b),
                _ => root.refine(q),
            }
        };
        if px.eval(q, &candidate).is_zero() {
            out.push(candidate);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn simplest_fractions() {
        assert_eq!(simplest_between(&q(1, 3), &q(1, 2)), q(1, 2));
        assert_eq!(simplest_between(&q(3, 10), &q(7, 20)), q(1, 3));
        assert_eq!(simplest_between(&q(-7, 20), &q(-3, 10)), q(-1, 3));
        assert_eq!(simplest_between(&q(-1, 5), &q(1, 7)), q(0, 1));
        assert_eq!(simplest_between(&q(5, 2), &q(5, 2)), q(5, 2));
        assert_eq!(simplest_between(&q(21, 10), &q(39, 10)), q(3, 1));
    }

    #[test]
    fn counts_and_rational_roots() {
        let px = PolyRing::new(RationalField);
        // (2T - 1)(3T + 5)(T^2 - 2)(T^2 + 1)
        let p = [px.from_i64s(&[-1, 2]), px.from_i64s(&[5, 3]), px.from_i64s(&[-2, 0, 1]), px.from_i64s(&[1, 0, 1])]
            .iter()
            .fold(px.one(), |acc, f| px.mul(&acc, f));
        assert_eq!(isolate_real_roots(&p).len(), 4);
        assert_eq!(rational_roots(&p), vec![q(-5, 3), q(1, 2)]);
        assert!(rational_roots(&px.from_i64s(&[1, 0, 1])).is_empty());
    }
}
