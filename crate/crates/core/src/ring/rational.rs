use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Poly, PolyRing, Ring};

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn inv_mod_poly(&self, a: &Poly<BigRational>, m: &Poly<BigRational>) -> Option<Poly<BigRational>> {
        PolyRing::new(*self).inv_mod(a, m)
    }
}

impl Field for RationalField {}

/// Natural logarithm of `|n|`, accurate for integers of any size.
/// Returns `-inf` for zero.
pub fn ln_bigint(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let n = n.abs();
    let bits = n.bits();
    if bits <= 1000 {
        return num_traits::ToPrimitive::to_f64(&n).unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = &n >> shift;
    num_traits::ToPrimitive::to_f64(&top).unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ht(u/v) = max(log|u|, log v)`; the height of zero is taken to be 0.
pub fn height_of_rational(a: &BigRational) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    ln_bigint(a.numer()).max(ln_bigint(a.denom()))
}

/// Height of a family of rational coefficients: with `v` their least
/// common denominator, the max of `log v` and `log |v c|` over the
/// coefficients. Zero for an all-zero family.
pub fn height_of_coefficients<'a>(coeffs: impl IntoIterator<Item = &'a BigRational> + Clone) -> f64 {
    let den = coeffs.clone().into_iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    coeffs
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| ln_bigint(&(c.numer() * (&den / c.denom()))))
        .fold(ln_bigint(&den), f64::max)
}

/// Height of a univariate polynomial with rational coefficients.
pub fn poly_height(p: &Poly<BigRational>) -> f64 {
    height_of_coefficients(p.coeffs())
}
