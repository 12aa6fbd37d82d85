use num_bigint::BigInt;

use super::{Poly, PolyRing, Ring};

/// The algebra `R[T]/(m)` for a monic `m`. Elements are reduced
/// representatives of degree below `deg m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing<R: Ring> {
    poly: PolyRing<R>,
    modulus: Poly<R::Elem>,
}

impl<R: Ring> QuotientRing<R> {
    pub fn new(base: R, modulus: Poly<R::Elem>) -> Self {
        let poly = PolyRing::new(base);
        assert!(
            modulus.lc().is_some_and(|c| poly.base().is_one(c)),
            "quotient modulus must be monic"
        );
        QuotientRing { poly, modulus }
    }

    pub fn modulus(&self) -> &Poly<R::Elem> {
        &self.modulus
    }

    pub fn poly_ring(&self) -> &PolyRing<R> {
        &self.poly
    }

    pub fn base(&self) -> &R {
        self.poly.base()
    }

    pub fn reduce(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.poly.rem_monic(p, &self.modulus)
    }

    /// Class of `T`.
    pub fn generator(&self) -> Poly<R::Elem> {
        self.reduce(&self.poly.var())
    }
}

impl<R: Ring> Ring for QuotientRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Poly<R::Elem> {
        self.poly.zero()
    }

    fn one(&self) -> Poly<R::Elem> {
        self.reduce(&self.poly.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Poly<R::Elem> {
        self.reduce(&self.poly.from_bigint(n))
    }

    fn add(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.poly.add(a, b)
    }

    fn sub(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.poly.sub(a, b)
    }

    fn mul(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.reduce(&self.poly.mul(a, b))
    }

    fn neg(&self, a: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.poly.neg(a)
    }

    fn inv(&self, a: &Poly<R::Elem>) -> Option<Poly<R::Elem>> {
        self.poly.base().inv_mod_poly(a, &self.modulus)
    }

    fn characteristic(&self) -> u64 {
        self.poly.characteristic()
    }
}
