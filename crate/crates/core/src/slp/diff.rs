//! Reverse-mode differentiation of straight-line programs.

use num_bigint::BigInt;

use super::{Instr, Slp};

struct Sweep {
    instrs: Vec<Instr>,
    one: usize,
    zero: usize,
}

impl Sweep {
    fn new(prog: &Slp) -> Self {
        let mut instrs = prog.instrs.clone();
        instrs.push(Instr::Const(BigInt::from(1)));
        instrs.push(Instr::Const(BigInt::from(0)));
        let zero = instrs.len() - 1;
        Sweep { instrs, one: zero - 1, zero }
    }

    fn push(&mut self, ins: Instr) -> usize {
        self.instrs.push(ins);
        self.instrs.len() - 1
    }

    fn accumulate(&mut self, slot: &mut Option<usize>, val: usize, negate: bool) {
        *slot = Some(match (*slot, negate) {
            (None, false) => val,
            (None, true) => self.push(Instr::Sub(self.zero, val)),
            (Some(a), false) => self.push(Instr::Add(a, val)),
            (Some(a), true) => self.push(Instr::Sub(a, val)),
        });
    }

    /// Append the adjoint computation for one output of the forward part
    /// (the first `forward` instructions) and return one reference per input.
    fn gradient_of(&mut self, forward: usize, n_inputs: usize, output: usize) -> Vec<usize> {
        let mut adj: Vec<Option<usize>> = vec![None; forward];
        let mut grad: Vec<Option<usize>> = vec![None; n_inputs];
        adj[output] = Some(self.one);
        for k in (0..forward).rev() {
            let Some(g) = adj[k] else { continue };
            match self.instrs[k].clone() {
                Instr::Input(i) => {
                    let mut slot = grad[i];
                    self.accumulate(&mut slot, g, false);
                    grad[i] = slot;
                }
                Instr::Const(_) => {}
                Instr::Add(a, b) | Instr::Sub(a, b) => {
                    let neg_b = matches!(self.instrs[k], Instr::Sub(..));
                    let (mut sa, mut sb) = (adj[a], adj[b]);
                    self.accumulate(&mut sa, g, false);
                    adj[a] = sa;
                    if a == b {
                        sb = adj[a];
                    }
                    self.accumulate(&mut sb, g, neg_b);
                    adj[b] = sb;
                }
                Instr::Mul(a, b) => {
                    let ga = self.push(Instr::Mul(g, b));
                    let gb = self.push(Instr::Mul(g, a));
                    let mut sa = adj[a];
                    self.accumulate(&mut sa, ga, false);
                    adj[a] = sa;
                    let mut sb = adj[b];
                    self.accumulate(&mut sb, gb, false);
                    adj[b] = sb;
                }
            }
        }
        grad.into_iter().map(|g| g.unwrap_or(self.zero)).collect()
    }
}

impl Slp {
    /// Program for `(df/dX_1, ..., df/dX_N)` of a single-output program.
    ///
    /// # Panics
    /// If the program does not have exactly one output.
    pub fn gradient(&self) -> Slp {
        assert_eq!(self.n_outputs(), 1, "gradient needs a single-output program");
        let mut sweep = Sweep::new(self);
        let outs = sweep.gradient_of(self.instrs.len(), self.n_inputs, self.outputs[0]);
        Slp::new(self.n_inputs, sweep.instrs, outs).expect("well-formed gradient")
    }

    /// Program for the `M x N` Jacobian matrix, entries in row-major order.
    /// The forward part is shared by all rows.
    pub fn jacobian(&self) -> Slp {
        let mut sweep = Sweep::new(self);
        let mut outs = Vec::with_capacity(self.n_outputs() * self.n_inputs);
        for &o in &self.outputs {
            outs.extend(sweep.gradient_of(self.instrs.len(), self.n_inputs, o));
        }
        Slp::new(self.n_inputs, sweep.instrs, outs).expect("well-formed Jacobian")
    }
}
