//! Exact arithmetic: coefficient rings, dense univariate polynomials,
//! truncated power series, quotient algebras and the reconstruction
//! primitives built on top of them.
//!
//! Rings are *context objects*: the modulus of a prime field or the
//! defining polynomial of a quotient algebra lives in the ring value, and
//! elements are plain data. Every operation goes through the ring.

mod fp;
mod integers;
pub mod linalg;
pub mod realroot;
mod mpoly;
mod poly;
mod quotient;
mod rational;
mod ratfunc;
mod reconstruct;
mod series;
mod zmod;

use std::fmt::Debug;

use num_bigint::BigInt;

pub use fp::{is_prime_u64, PrimeField};
pub use integers::IntegerRing;
pub use mpoly::{MPoly, MPolyRing};
pub use poly::{Poly, PolyRing};
pub use quotient::QuotientRing;
pub use rational::{height_of_coefficients, height_of_rational, ln_bigint, poly_height, RationalField};
pub use ratfunc::{pade_reconstruct, RatFunc};
pub use reconstruct::rational_reconstruct;
pub use series::{SeriesRing, TruncatedSeries};
pub use zmod::ZModRing;

/// A commutative ring with identity, given as a context object.
///
/// Element values must be canonical so that `==` is ring equality.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Inverse of a unit, `None` if `a` is not invertible (or if the ring
    /// cannot decide it).
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Characteristic of the ring; 0 for characteristic zero. Rings whose
    /// characteristic does not fit report `u64::MAX`.
    fn characteristic(&self) -> u64;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of `a` modulo the monic polynomial `m` over this ring.
    ///
    /// Only rings that know how to do this override it; quotient algebras
    /// use it to invert their elements.
    fn inv_mod_poly(&self, _a: &Poly<Self::Elem>, _m: &Poly<Self::Elem>) -> Option<Poly<Self::Elem>> {
        None
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}
