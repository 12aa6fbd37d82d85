//! Fixtures for the benchmarks.

use mhsolve_core::{BlockStructure, MPoly, MinimizationProblem, MultiDegree, Slp, System};
use num_rational::BigRational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn mpoly(nvars: usize, terms: &[(i64, &[u32])]) -> MPoly {
    terms.iter().fold(MPoly::zero(nvars), |acc, (c, e)| acc.add(&MPoly::monomial(e.to_vec(), q(*c))))
}

/// Three bilinear equations in blocks `(x11)` and `(x21, x22)` with the
/// single solution `(-10, 1/2, -1/2)`.
pub fn bilinear_polys() -> Vec<MPoly> {
    vec![
        mpoly(3, &[(-16, &[1, 1, 0]), (8, &[1, 0, 0])]),
        mpoly(3, &[(-8, &[1, 1, 0]), (-16, &[1, 0, 1]), (-4, &[1, 0, 0])]),
        mpoly(3, &[(3, &[1, 1, 0]), (4, &[1, 0, 1]), (1, &[1, 0, 0]), (2, &[0, 1, 0]), (4, &[0, 0, 0])]),
    ]
}

pub fn bilinear_system() -> System {
    let blocks = BlockStructure::new(vec![1, 2]).unwrap();
    let degrees = MultiDegree::new(&blocks, vec![vec![1, 1]; 3]).unwrap();
    System::new(Slp::from_polys(3, &bilinear_polys()).unwrap(), blocks, degrees).unwrap()
}

/// Dense total degree `d` system in one block of `n` variables, with small
/// deterministic coefficients.
pub fn dense_system(n: usize, d: u32) -> (System, Vec<MPoly>) {
    let mut polys = Vec::new();
    let mut state = 12345u64;
    for _ in 0..n {
        let mut p = MPoly::zero(n);
        for e in monomials(n, d) {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = ((state >> 33) % 11) as i64 - 5;
            p = p.add(&MPoly::monomial(e, q(c)));
        }
        polys.push(p);
    }
    let blocks = BlockStructure::new(vec![n]).unwrap();
    let degrees = MultiDegree::new(&blocks, vec![vec![d]; n]).unwrap();
    (System::new(Slp::from_polys(n, &polys).unwrap(), blocks, degrees).unwrap(), polys)
}

fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0..=d)
        .flat_map(|k| {
            monomials(n - 1, d - k).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// The unit sphere in `n` variables as a minimization problem.
pub fn sphere(n: usize) -> MinimizationProblem {
    let h = (0..n).fold(MPoly::constant(n, q(-1)), |acc, i| acc.add(&MPoly::var(n, i).pow(2)));
    MinimizationProblem::from_polys(n, &[h]).unwrap()
}
