//! Symbolic homotopy over a field.
//!
//! The target system `f` is joined to a product start system `g` with
//! known roots through `t f + (1 - t) g`. Each start root is lifted to a
//! power series in `t`, the resulting parametrization is recovered over
//! `K(t)` by Padé approximation, specialized at `t = 1`, and cleaned of
//! singular and spurious roots.

mod clean;
mod lift;
mod param;
mod start;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use clean::clean;
pub use lift::Homotopy;
pub use param::{multiplicity_one_and_divide, reconstruct_param_in_t, specialize_at_one, specialize_at_zero, RatFuncParam};
pub use start::StartSystem;

use crate::bounds::{bezout_number, homotopy_bezout_number};
use crate::error::{Error, Result};
use crate::ring::Field;
use crate::slp::{BlockStructure, MultiDegree, Slp};
use crate::zdp::{separating_candidates, ZeroDimParam};

/// Input of the homotopy solver: a square system with its block structure
/// and multi-degree bounds.
#[derive(Clone, Debug)]
pub struct System {
    pub f: Slp,
    pub blocks: BlockStructure,
    pub degrees: MultiDegree,
}

impl System {
    pub fn new(f: Slp, blocks: BlockStructure, degrees: MultiDegree) -> Result<Self> {
        let n = blocks.total();
        if f.n_inputs() != n || f.n_outputs() != n || degrees.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: f.n_outputs() });
        }
        Ok(System { f, blocks, degrees })
    }

    pub fn n_vars(&self) -> usize {
        self.blocks.total()
    }

    /// `max(e, 8 (N - 1) C^2)`: the characteristic the randomized solver
    /// needs.
    pub fn required_characteristic(&self) -> Result<BigInt> {
        let c = bezout_number(&self.blocks, &self.degrees)?;
        let sep = BigInt::from(8 * (self.n_vars() - 1)) * &c * &c;
        Ok(sep.max(BigInt::from(self.degrees.max_column_sum())))
    }
}

/// Intermediate results of one run, for inspection and testing.
#[derive(Clone, Debug)]
pub struct Trace<E> {
    pub start_points: Vec<Vec<E>>,
    pub over_kt: RatFuncParam<E>,
    pub e: i64,
    pub r: crate::ring::Poly<E>,
    pub w: Vec<crate::ring::Poly<E>>,
    pub result: ZeroDimParam<E>,
}

/// One run with a fixed linear form, returning every intermediate value.
pub fn solve_traced<F: Field>(field: &F, sys: &System, lambda: &[BigInt]) -> Result<Trace<F::Elem>> {
    let start = StartSystem::new(&sys.blocks, &sys.degrees)?;
    let g = start.to_slp();
    let points = start.roots(field)?;
    let bound = homotopy_bezout_number(&sys.blocks, &sys.degrees)?
        .to_usize()
        .ok_or_else(|| Error::InvalidInput("homotopy degree bound too large".into()))?;
    let homotopy = Homotopy::new(&sys.f, &g)?;
    let over_kt = reconstruct_param_in_t(field, &homotopy, &points, lambda, bound)?;
    let (e, r, w) = specialize_at_one(field, &over_kt)?;
    let (r1, y) = multiplicity_one_and_divide(field, &r, &w)?;
    let result = clean(field, &sys.f, &r1, &y, lambda)?;
    Ok(Trace { start_points: points, over_kt, e, r, w, result })
}

/// Nonsingular solutions of `f` for a fixed linear form.
pub fn nonsingular_solutions_with<F: Field>(field: &F, sys: &System, lambda: &[BigInt]) -> Result<ZeroDimParam<F::Elem>> {
    solve_traced(field, sys, lambda).map(|t| t.result)
}

/// Draw `lambda = u^(i)` for a random `i` in `1..=8 (N - 1) C^2`.
pub fn random_linear_form(sys: &System, rng: &mut ChaCha8Rng) -> Result<Vec<BigInt>> {
    let c = bezout_number(&sys.blocks, &sys.degrees)?
        .to_u64()
        .ok_or_else(|| Error::InvalidInput("Bézout number too large".into()))?;
    let fam = separating_candidates(sys.n_vars(), (c * c).max(1));
    Ok(fam.get(rng.gen_range(1..=fam.len())))
}

/// One randomized run.
pub fn nonsingular_solutions<F: Field>(field: &F, sys: &System, seed: u64) -> Result<ZeroDimParam<F::Elem>> {
    check_field(field, sys)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambda = random_linear_form(sys, &mut rng)?;
    nonsingular_solutions_with(field, sys, &lambda)
}

fn check_field<F: Field>(field: &F, sys: &System) -> Result<()> {
    let ch = field.characteristic();
    let required = sys.required_characteristic()?;
    if ch != 0 && BigInt::from(ch) < required {
        return Err(Error::CharacteristicTooSmall { characteristic: ch, required: required.to_u64().unwrap_or(u64::MAX) });
    }
    Ok(())
}

/// Result of several independent runs.
#[derive(Clone, Debug)]
pub struct Repeated<E> {
    /// The highest-degree output among the successful runs.
    pub best: ZeroDimParam<E>,
    /// Output degree of each run, `None` for failed runs.
    pub degrees: Vec<Option<usize>>,
}

impl<E> Repeated<E> {
    /// True when all successful runs returned the same degree.
    pub fn consistent(&self) -> bool {
        let mut ok = self.degrees.iter().flatten();
        match ok.next() {
            None => true,
            Some(first) => ok.all(|d| d == first),
        }
    }
}

/// Run `k` times with linear forms drawn from one seeded stream and keep
/// the output of highest degree. Fails only if every run fails.
pub fn nonsingular_solutions_repeated<F: Field>(field: &F, sys: &System, seed: u64, k: usize) -> Result<Repeated<F::Elem>> {
    check_field(field, sys)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<ZeroDimParam<F::Elem>> = None;
    let mut degrees = Vec::with_capacity(k);
    let mut last_err = Error::ReconstructionFailed;
    for _ in 0..k.max(1) {
        let lambda = random_linear_form(sys, &mut rng)?;
        match nonsingular_solutions_with(field, sys, &lambda) {
            Ok(p) => {
                degrees.push(Some(p.degree()));
                if best.as_ref().is_none_or(|b| p.degree() > b.degree()) {
                    best = Some(p);
                }
            }
            Err(e) if e.is_fail() => {
                degrees.push(None);
                last_err = e;
            }
            Err(e) => return Err(e),
        }
    }
    best.map(|best| Repeated { best, degrees }).ok_or(last_err)
}
