use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{linalg, Field, Ring, SeriesRing, TruncatedSeries};
use crate::slp::Slp;

/// A homotopy `H(t, X)` together with its Jacobian program.
#[derive(Clone, Debug)]
pub struct Homotopy {
    program: Slp,
    jacobian: Slp,
}

impl Homotopy {
    /// `t f + (1 - t) g`.
    pub fn new(f: &Slp, g: &Slp) -> Result<Self> {
        let program = Slp::homotopy_combine(f, g)?;
        if program.n_outputs() + 1 != program.n_inputs() {
            return Err(Error::ArityMismatch { expected: program.n_inputs() - 1, found: program.n_outputs() });
        }
        let jacobian = program.jacobian();
        Ok(Homotopy { program, jacobian })
    }

    pub fn program(&self) -> &Slp {
        &self.program
    }

    pub fn n_vars(&self) -> usize {
        self.program.n_outputs()
    }

    /// `H(t, phi)` over the series ring.
    pub fn residual<R: Ring>(&self, ring: &SeriesRing<R>, phi: &[TruncatedSeries<R::Elem>]) -> Result<Vec<TruncatedSeries<R::Elem>>> {
        self.program.eval(ring, &self.point(ring, phi))
    }

    fn point<R: Ring>(&self, ring: &SeriesRing<R>, phi: &[TruncatedSeries<R::Elem>]) -> Vec<TruncatedSeries<R::Elem>> {
        let mut pt = Vec::with_capacity(phi.len() + 1);
        pt.push(ring.var());
        pt.extend(phi.iter().map(|s| ring.lift(s)));
        pt
    }

    /// One Newton step at the precision of `ring`.
    fn newton_step<F: Field>(
        &self,
        ring: &SeriesRing<F>,
        phi: &[TruncatedSeries<F::Elem>],
    ) -> Result<Vec<TruncatedSeries<F::Elem>>> {
        let n = self.n_vars();
        let pt = self.point(ring, phi);
        let h = self.program.eval(ring, &pt)?;
        let full = self.jacobian.eval(ring, &pt)?;
        let jx: linalg::Matrix<_> = full.chunks(n + 1).map(|row| row[1..].to_vec()).collect();
        let delta = linalg::solve_with_adjugate(ring, &jx, &h)?;
        Ok(pt[1..].iter().zip(&delta).map(|(x, d)| ring.sub(x, d)).collect())
    }

    /// Lift a root of `H(0, X)` to a power-series root modulo `t^precision`,
    /// doubling the precision at each Newton step.
    pub fn lift_point<F: Field>(
        &self,
        field: &F,
        point: &[F::Elem],
        precision: usize,
    ) -> Result<Vec<TruncatedSeries<F::Elem>>> {
        let mut prec = 1;
        let ring = SeriesRing::new(field.clone(), 1);
        let mut phi: Vec<_> = point.iter().map(|x| ring.constant(x.clone())).collect();
        while prec < precision {
            prec = (2 * prec).min(precision);
            phi = self.newton_step(&SeriesRing::new(field.clone(), prec), &phi)?;
        }
        Ok(phi)
    }

    /// Lift every start point independently, in parallel.
    pub fn lift_points<F: Field>(
        &self,
        field: &F,
        points: &[Vec<F::Elem>],
        precision: usize,
    ) -> Result<Vec<Vec<TruncatedSeries<F::Elem>>>> {
        points.par_iter().map(|x| self.lift_point(field, x, precision)).collect()
    }
}
