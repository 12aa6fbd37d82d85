//! Fixtures shared by unit tests.

use num_rational::BigRational;

use crate::ring::MPoly;
use crate::slp::{BlockStructure, MultiDegree, Slp};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Build a polynomial in `nvars` variables from `(coefficient, exponents)` pairs.
pub fn mpoly(nvars: usize, terms: &[(i64, &[u32])]) -> MPoly {
    terms.iter().fold(MPoly::zero(nvars), |acc, (c, e)| acc.add(&MPoly::monomial(e.to_vec(), q(*c, 1))))
}

/// The bilinear system in blocks `(X11)` and `(X21, X22)` with the single
/// nonsingular solution `(-10, 1/2, -1/2)`.
pub fn bilinear_polys() -> Vec<MPoly> {
    vec![
        mpoly(3, &[(-16, &[1, 1, 0]), (8, &[1, 0, 0])]),
        mpoly(3, &[(-8, &[1, 1, 0]), (-16, &[1, 0, 1]), (-4, &[1, 0, 0])]),
        mpoly(3, &[(3, &[1, 1, 0]), (4, &[1, 0, 1]), (1, &[1, 0, 0]), (2, &[0, 1, 0]), (4, &[0, 0, 0])]),
    ]
}

pub fn bilinear_slp() -> Slp {
    Slp::from_polys(3, &bilinear_polys()).unwrap()
}

pub fn bilinear_blocks() -> (BlockStructure, MultiDegree) {
    let b = BlockStructure::new(vec![1, 2]).unwrap();
    let d = MultiDegree::new(&b, vec![vec![1, 1]; 3]).unwrap();
    (b, d)
}
