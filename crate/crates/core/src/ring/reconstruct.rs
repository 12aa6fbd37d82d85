use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Recover `u/v` from `residue ≡ u v^{-1} (mod modulus)` with
/// `|u| <= bound` and `0 < v <= bound`.
///
/// The answer is unique when `2 bound^2 < modulus`. Callers that need
/// uniqueness must size the modulus accordingly; outside that regime the
/// first pair found by the half extended Euclid is returned.
pub fn rational_reconstruct(residue: &BigInt, modulus: &BigInt, bound: &BigInt) -> Result<BigRational> {
    if residue.is_negative() || residue >= modulus {
        return Err(Error::InvalidInput("residue out of range".into()));
    }
    let (mut r0, mut r1) = (modulus.clone(), residue.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > *bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    let (mut u, mut v) = (r1, t1);
    if v.is_negative() {
        u = -u;
        v = -v;
    }
    if v.is_zero() || v > *bound || !v.gcd(modulus).is_one() {
        return Err(Error::NoRationalSolution);
    }
    Ok(BigRational::new(u, v))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn examples() {
        assert_eq!(rational_reconstruct(&big(41), &big(81), &big(8)).unwrap(), BigRational::new(big(1), big(2)));
        assert_eq!(rational_reconstruct(&big(5), &big(10007), &big(6)).unwrap(), BigRational::from_integer(big(5)));

        let p = big(10007);
        let seven_inv = big(7).modinv(&p).unwrap();
        let residue = (big(-3) * seven_inv).mod_floor(&p);
        assert_eq!(rational_reconstruct(&residue, &p, &big(70)).unwrap(), BigRational::new(big(-3), big(7)));
    }

    #[test]
    fn no_solution_within_bound() {
        // 1/50 modulo 10007 has no representative with both parts <= 10.
        let p = big(10007);
        let r = big(50).modinv(&p).unwrap();
        assert_eq!(rational_reconstruct(&r, &p, &big(10)), Err(Error::NoRationalSolution));
    }

    proptest! {
        #[test]
        fn reconstructs_reduced_rationals(u in -10_000i64..10_000, v in 1i64..10_000, k in 3u32..6) {
            let modulus = big(10007).pow(k);
            let bound = big(10_000);
            let a = BigRational::new(big(u), big(v));
            let residue = (a.numer() * a.denom().modinv(&modulus).unwrap()).mod_floor(&modulus);
            prop_assert_eq!(rational_reconstruct(&residue, &modulus, &bound).unwrap(), a);
        }
    }
}
