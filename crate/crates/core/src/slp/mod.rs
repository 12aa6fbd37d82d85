//! Straight-line programs over the integers.
//!
//! A program is a list of instructions, each referring only to earlier
//! instructions. It can be evaluated in any [`Ring`], which is how the same
//! system gets evaluated over `Q`, `F_p`, power series in `t` and quotient
//! algebras `K[T]/(q)`.

mod blocks;
mod diff;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub use blocks::{BlockStructure, MultiDegree};

use crate::error::{Error, Result};
use crate::ring::{linalg, ln_bigint, Field, MPoly, Poly, QuotientRing, Ring};
use crate::zdp::ZeroDimParam;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instr {
    Input(usize),
    Const(BigInt),
    Add(usize, usize),
    Sub(usize, usize),
    Mul(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slp {
    n_inputs: usize,
    instrs: Vec<Instr>,
    outputs: Vec<usize>,
}

impl Slp {
    pub fn new(n_inputs: usize, instrs: Vec<Instr>, outputs: Vec<usize>) -> Result<Self> {
        for (k, ins) in instrs.iter().enumerate() {
            let ok = match *ins {
                Instr::Input(i) => i < n_inputs,
                Instr::Const(_) => true,
                Instr::Add(a, b) | Instr::Sub(a, b) | Instr::Mul(a, b) => a < k && b < k,
            };
            if !ok {
                return Err(Error::InvalidInput(format!("instruction {k} has a dangling reference")));
            }
        }
        if outputs.iter().any(|&o| o >= instrs.len()) {
            return Err(Error::InvalidInput("output refers past the last instruction".into()));
        }
        Ok(Slp { n_inputs, instrs, outputs })
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn instrs(&self) -> &[Instr] {
        &self.instrs
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn len(&self) -> usize {
        self.instrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instrs.is_empty()
    }

    pub fn eval<R: Ring>(&self, ring: &R, point: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if point.len() != self.n_inputs {
            return Err(Error::ArityMismatch { expected: self.n_inputs, found: point.len() });
        }
        let mut vals: Vec<R::Elem> = Vec::with_capacity(self.instrs.len());
        for ins in &self.instrs {
            let v = match ins {
                Instr::Input(i) => point[*i].clone(),
                Instr::Const(c) => ring.from_bigint(c),
                Instr::Add(a, b) => ring.add(&vals[*a], &vals[*b]),
                Instr::Sub(a, b) => ring.sub(&vals[*a], &vals[*b]),
                Instr::Mul(a, b) => ring.mul(&vals[*a], &vals[*b]),
            };
            vals.push(v);
        }
        Ok(self.outputs.iter().map(|&o| vals[o].clone()).collect())
    }

    /// The same program with every constant replaced by its residue in `[0, p)`.
    pub fn reduce_mod_p(&self, p: u64) -> Slp {
        let p = BigInt::from(p);
        let instrs = self
            .instrs
            .iter()
            .map(|ins| match ins {
                Instr::Const(c) => Instr::Const(c.mod_floor(&p)),
                other => other.clone(),
            })
            .collect();
        Slp { n_inputs: self.n_inputs, instrs, outputs: self.outputs.clone() }
    }

    /// Largest `ln |c|` over the constants of the program.
    pub fn constant_height(&self) -> f64 {
        self.instrs
            .iter()
            .filter_map(|ins| match ins {
                Instr::Const(c) if !c.is_zero() => Some(ln_bigint(c)),
                _ => None,
            })
            .fold(0.0, f64::max)
    }

    /// `t f + (1 - t) g`, with `t` prepended to the inputs.
    pub fn homotopy_combine(f: &Slp, g: &Slp) -> Result<Slp> {
        if f.n_outputs() != g.n_outputs() {
            return Err(Error::ArityMismatch { expected: f.n_outputs(), found: g.n_outputs() });
        }
        if f.n_inputs() != g.n_inputs() {
            return Err(Error::ArityMismatch { expected: f.n_inputs(), found: g.n_inputs() });
        }
        let mut b = SlpBuilder::new(f.n_inputs() + 1);
        let t = b.input(0);
        let xs: Vec<usize> = (1..=f.n_inputs()).map(|i| b.input(i)).collect();
        let fo = b.append(f, &xs);
        let go = b.append(g, &xs);
        let outs = fo
            .iter()
            .zip(&go)
            .map(|(&fi, &gi)| {
                let diff = b.sub(fi, gi);
                let scaled = b.mul(t, diff);
                b.add(gi, scaled)
            })
            .collect();
        Ok(b.finish(outs))
    }

    /// Naive program computing all monomials of the given polynomials, which
    /// must have integer coefficients.
    pub fn from_polys(nvars: usize, polys: &[MPoly]) -> Result<Slp> {
        let mut b = SlpBuilder::new(nvars);
        let xs: Vec<usize> = (0..nvars).map(|i| b.input(i)).collect();
        let mut powers: HashMap<(usize, u32), usize> = HashMap::new();
        let mut outs = Vec::with_capacity(polys.len());
        for p in polys {
            if p.nvars() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: p.nvars() });
            }
            let terms = p
                .integer_coefficients()
                .ok_or_else(|| Error::InvalidInput("polynomial has non-integer coefficients".into()))?;
            let mut acc: Option<usize> = None;
            for (exps, c) in terms {
                let mut term = b.constant(c);
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        let pw = power(&mut b, &mut powers, xs[i], i, e);
                        term = b.mul(term, pw);
                    }
                }
                acc = Some(match acc {
                    None => term,
                    Some(a) => b.add(a, term),
                });
            }
            outs.push(acc.unwrap_or_else(|| b.constant(BigInt::zero())));
        }
        Ok(b.finish(outs))
    }
}

fn power(b: &mut SlpBuilder, cache: &mut HashMap<(usize, u32), usize>, x: usize, var: usize, e: u32) -> usize {
    if e == 1 {
        return x;
    }
    if let Some(&r) = cache.get(&(var, e)) {
        return r;
    }
    let lower = power(b, cache, x, var, e - 1);
    let r = b.mul(lower, x);
    cache.insert((var, e), r);
    r
}

/// Incremental construction of an [`Slp`].
#[derive(Debug)]
pub struct SlpBuilder {
    n_inputs: usize,
    instrs: Vec<Instr>,
}

impl SlpBuilder {
    pub fn new(n_inputs: usize) -> Self {
        SlpBuilder { n_inputs, instrs: Vec::new() }
    }

    fn push(&mut self, ins: Instr) -> usize {
        self.instrs.push(ins);
        self.instrs.len() - 1
    }

    pub fn input(&mut self, i: usize) -> usize {
        assert!(i < self.n_inputs, "input {i} out of range");
        self.push(Instr::Input(i))
    }

    pub fn constant(&mut self, c: impl Into<BigInt>) -> usize {
        self.push(Instr::Const(c.into()))
    }

    pub fn add(&mut self, a: usize, b: usize) -> usize {
        self.push(Instr::Add(a, b))
    }

    pub fn sub(&mut self, a: usize, b: usize) -> usize {
        self.push(Instr::Sub(a, b))
    }

    pub fn mul(&mut self, a: usize, b: usize) -> usize {
        self.push(Instr::Mul(a, b))
    }

    /// Inline `prog`, feeding its inputs from the given references, and
    /// return references to its outputs.
    pub fn append(&mut self, prog: &Slp, inputs: &[usize]) -> Vec<usize> {
        assert_eq!(inputs.len(), prog.n_inputs, "inlined program arity");
        let mut map = Vec::with_capacity(prog.instrs.len());
        for ins in &prog.instrs {
            let r = match ins {
                Instr::Input(i) => inputs[*i],
                Instr::Const(c) => self.push(Instr::Const(c.clone())),
                Instr::Add(a, b) => self.push(Instr::Add(map[*a], map[*b])),
                Instr::Sub(a, b) => self.push(Instr::Sub(map[*a], map[*b])),
                Instr::Mul(a, b) => self.push(Instr::Mul(map[*a], map[*b])),
            };
            map.push(r);
        }
        prog.outputs.iter().map(|&o| map[o]).collect()
    }

    pub fn finish(self, outputs: Vec<usize>) -> Slp {
        Slp::new(self.n_inputs, self.instrs, outputs).expect("builder produces well-formed programs")
    }
}

/// Jacobian determinant of a square system at a point of `R[T]/(q)`.
pub fn jacobian_det_at<R: Ring>(jac: &Slp, ring: &QuotientRing<R>, point: &[Poly<R::Elem>]) -> Result<Poly<R::Elem>> {
    let n = point.len();
    let entries = jac.eval(ring, point)?;
    if entries.len() != n * n {
        return Err(Error::ArityMismatch { expected: n * n, found: entries.len() });
    }
    let m: linalg::Matrix<_> = entries.chunks(n).map(<[_]>::to_vec).collect();
    Ok(linalg::determinant(ring, &m))
}

/// `det J(f)` at the point `(v_1/q', ..., v_N/q')` of a parametrization,
/// as a residue modulo `q`.
pub fn jacobian_det_in_quotient<F: Field>(f: &Slp, field: &F, param: &ZeroDimParam<F::Elem>) -> Result<Poly<F::Elem>> {
    if f.n_outputs() != f.n_inputs() {
        return Err(Error::ArityMismatch { expected: f.n_inputs(), found: f.n_outputs() });
    }
    let w = param.to_monic_values(field)?;
    let ring = QuotientRing::new(field.clone(), param.q.clone());
    jacobian_det_at(&f.jacobian(), &ring, &w)
}

#[cfg(test)]
mod tests;
