//! Small dense linear algebra over arbitrary commutative rings.
//!
//! Matrices are row-major `Vec<Vec<E>>`. Nothing here divides except
//! [`solve_with_adjugate`], which inverts a single determinant, so the
//! routines work in quotient algebras with zero divisors.

use super::{PolyRing, Ring};
use crate::error::{Error, Result};

pub type Matrix<E> = Vec<Vec<E>>;

/// Solve `x_1 + c x_2 + ... + c^{n-1} x_n + c^n = 0` for every node `c`.
///
/// The solution is the vector of low coefficients of `prod (T - c)`.
pub fn vandermonde_affine_solve<R: Ring>(ring: &R, nodes: &[R::Elem]) -> Result<Vec<R::Elem>> {
    for (i, a) in nodes.iter().enumerate() {
        if nodes[..i].contains(a) {
            return Err(Error::RepeatedNodes);
        }
    }
    let px = PolyRing::new(ring.clone());
    let prod = px.from_roots(nodes);
    Ok((0..nodes.len()).map(|k| px.coeff(&prod, k)).collect())
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|row| dot(ring, row, v)).collect()
}

fn dot<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> R::Elem {
    a.iter().zip(b).fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
}

/// Characteristic polynomial `det(x I - A)` by Berkowitz's algorithm.
///
/// Returns `[1, c_1, ..., c_n]` with `det(x I - A) = x^n + c_1 x^{n-1} + ... + c_n`.
pub fn charpoly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let n = a.len();
    let mut p = vec![ring.one()];
    for r in 0..n {
        let row = &a[r][..r];
        let mut v: Vec<R::Elem> = (0..r).map(|i| a[i][r].clone()).collect();
        let mut col = Vec::with_capacity(r + 2);
        col.push(ring.one());
        col.push(ring.neg(&a[r][r]));
        for k in 0..r {
            col.push(ring.neg(&dot(ring, row, &v)));
            if k + 1 < r {
                v = (0..r).map(|i| dot(ring, &a[i][..r], &v)).collect();
            }
        }
        p = (0..r + 2)
            .map(|i| {
                (0..=i.min(p.len() - 1)).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(&col[i - j], &p[j])))
            })
            .collect();
    }
    p
}

pub fn determinant<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let cp = charpoly(ring, a);
    let cn = cp.last().unwrap();
    if a.len() % 2 == 0 {
        cn.clone()
    } else {
        ring.neg(cn)
    }
}

/// `adj(A) v` together with `det(A)`, from Cayley-Hamilton:
/// `adj(A) = (-1)^{n-1} (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I)`.
pub fn adjugate_apply<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> (Vec<R::Elem>, R::Elem) {
    let n = a.len();
    let cp = charpoly(ring, a);
    let mut w = v.to_vec();
    for c in &cp[1..n.max(1)] {
        let aw = mat_vec(ring, a, &w);
        w = aw.iter().zip(v).map(|(x, y)| ring.add(x, &ring.mul(c, y))).collect();
    }
    if n % 2 == 0 {
        w = w.iter().map(|x| ring.neg(x)).collect();
    }
    let det = if n % 2 == 0 { cp[n].clone() } else { ring.neg(&cp[n]) };
    (w, det)
}

/// Solve `A x = b` when `det(A)` is a unit of the ring.
pub fn solve_with_adjugate<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let (w, det) = adjugate_apply(ring, a, b);
    let det_inv = ring.inv(&det).ok_or(Error::SingularJacobian)?;
    Ok(w.iter().map(|x| ring.mul(x, &det_inv)).collect())
}
