use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{PolyRing, PrimeField, Poly, QuotientRing, Ring};

/// The residue ring Z/p^k Z for a prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZModRing {
    p: u64,
    k: u32,
    modulus: BigInt,
}

impl ZModRing {
    pub fn new(p: u64, k: u32) -> Self {
        assert!(k >= 1, "exponent must be positive");
        ZModRing { p, k, modulus: BigInt::from(p).pow(k) }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Reduction to F_p.
    pub fn to_residue_field(&self, a: &BigInt) -> u64 {
        (a % self.p).to_u64().unwrap()
    }
}

impl Ring for ZModRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one().mod_floor(&self.modulus)
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.mod_floor(&self.modulus)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let s = a + b;
        if s >= self.modulus {
            s - &self.modulus
        } else {
            s
        }
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let s = a - b;
        if s < BigInt::zero() {
            s + &self.modulus
        } else {
            s
        }
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) % &self.modulus
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        if a.is_zero() {
            BigInt::zero()
        } else {
            &self.modulus - a
        }
    }

    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        a.modinv(&self.modulus)
    }

    fn characteristic(&self) -> u64 {
        self.modulus.to_u64().unwrap_or(u64::MAX)
    }

    /// Inverts modulo `(p, m)` by extended Euclid over F_p, then lifts the
    /// inverse with the Newton iteration `u <- u (2 - a u)`.
    fn inv_mod_poly(&self, a: &Poly<BigInt>, m: &Poly<BigInt>) -> Option<Poly<BigInt>> {
        let fp = PrimeField::new(self.p).ok()?;
        let fpx = PolyRing::new(fp);
        let zx = PolyRing::new(self.clone());
        let down = |f: &Poly<BigInt>| fpx.from_coeffs(f.coeffs().iter().map(|c| self.to_residue_field(c)).collect());
        let inv_p = fpx.inv_mod(&down(a), &down(m))?;
        let quo = QuotientRing::new(self.clone(), m.clone());
        let a = quo.reduce(a);
        let mut u = zx.from_coeffs(inv_p.coeffs().iter().map(|c| BigInt::from(*c)).collect());
        let two = quo.from_i64(2);
        let mut precision = 1u32;
        while precision < self.k {
            let au = quo.mul(&a, &u);
            u = quo.mul(&u, &quo.sub(&two, &au));
            precision *= 2;
        }
        Some(u)
    }
}
