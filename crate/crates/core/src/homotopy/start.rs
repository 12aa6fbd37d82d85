use std::ops::Range;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{linalg, Field};
use crate::slp::{BlockStructure, MultiDegree, Slp, SlpBuilder};

/// The product start system `g`.
///
/// Equation `i` is the product over blocks `j` of the affine forms
/// `kappa_c(X_j) = X_{j,1} + c X_{j,2} + ... + c^{n_j-1} X_{j,n_j} + c^{n_j}`
/// for `d_{i,j}` consecutive nodes `c`, numbered so that nodes never repeat
/// within a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StartSystem {
    blocks: BlockStructure,
    degrees: MultiDegree,
}

impl StartSystem {
    pub fn new(blocks: &BlockStructure, degrees: &MultiDegree) -> Result<Self> {
        if degrees.len() != blocks.total() {
            return Err(Error::ArityMismatch { expected: blocks.total(), found: degrees.len() });
        }
        if degrees.rows().iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::InvalidInput("every equation needs a nonzero multi-degree".into()));
        }
        Ok(StartSystem { blocks: blocks.clone(), degrees: degrees.clone() })
    }

    pub fn blocks(&self) -> &BlockStructure {
        &self.blocks
    }

    pub fn degrees(&self) -> &MultiDegree {
        &self.degrees
    }

    /// Nodes of equation `i` in block `j`.
    pub fn nodes(&self, i: usize, j: usize) -> Range<u64> {
        let offset: u64 = self.degrees.rows()[..i].iter().map(|r| r[j] as u64).sum();
        offset..offset + self.degrees.row(i)[j] as u64
    }

    /// Smallest characteristic for which all nodes of a block stay distinct.
    pub fn required_characteristic(&self) -> u64 {
        self.degrees.max_column_sum() as u64
    }

    pub fn check_characteristic(&self, characteristic: u64) -> Result<()> {
        let required = self.required_characteristic();
        if characteristic != 0 && characteristic < required {
            return Err(Error::CharacteristicTooSmall { characteristic, required });
        }
        Ok(())
    }

    pub fn to_slp(&self) -> Slp {
        let n = self.blocks.total();
        let mut b = SlpBuilder::new(n);
        let xs: Vec<usize> = (0..n).map(|i| b.input(i)).collect();
        let mut outs = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc: Option<usize> = None;
            for j in 0..self.blocks.count() {
                let vars = &xs[self.blocks.range(j)];
                for c in self.nodes(i, j) {
                    let kappa = affine_form(&mut b, vars, c);
                    acc = Some(match acc {
                        None => kappa,
                        Some(a) => b.mul(a, kappa),
                    });
                }
            }
            outs.push(acc.expect("nonzero multi-degree"));
        }
        b.finish(outs)
    }

    /// All `C_n(d)` roots of the start system.
    ///
    /// Each root comes from an assignment of equations to blocks taking
    /// exactly `n_j` equations into block `j`, together with one factor per
    /// equation; every block is then fixed by a Vandermonde solve.
    pub fn roots<F: Field>(&self, field: &F) -> Result<Vec<Vec<F::Elem>>> {
        self.check_characteristic(field.characteristic())?;
        let n = self.blocks.total();
        let mut remaining = self.blocks.sizes().to_vec();
        let mut choice: Vec<(usize, u64)> = Vec::with_capacity(n);
        let mut out = Vec::new();
        self.enumerate(field, &mut remaining, &mut choice, &mut out)?;
        Ok(out)
    }

    fn enumerate<F: Field>(
        &self,
        field: &F,
        remaining: &mut [usize],
        choice: &mut Vec<(usize, u64)>,
        out: &mut Vec<Vec<F::Elem>>,
    ) -> Result<()> {
        let i = choice.len();
        if i == self.blocks.total() {
            out.push(self.solve_choice(field, choice)?);
            return Ok(());
        }
        for j in 0..self.blocks.count() {
            if remaining[j] == 0 {
                continue;
            }
            remaining[j] -= 1;
            for c in self.nodes(i, j) {
                choice.push((j, c));
                self.enumerate(field, remaining, choice, out)?;
                choice.pop();
            }
            remaining[j] += 1;
        }
        Ok(())
    }

    fn solve_choice<F: Field>(&self, field: &F, choice: &[(usize, u64)]) -> Result<Vec<F::Elem>> {
        let mut point = Vec::with_capacity(self.blocks.total());
        for j in 0..self.blocks.count() {
            let nodes: Vec<F::Elem> =
                choice.iter().filter(|(b, _)| *b == j).map(|(_, c)| field.from_bigint(&BigInt::from(*c))).collect();
            point.extend(linalg::vandermonde_affine_solve(field, &nodes)?);
        }
        Ok(point)
    }
}

fn affine_form(b: &mut SlpBuilder, vars: &[usize], c: u64) -> usize {
    let c = BigInt::from(c);
    let mut power = BigInt::from(1);
    let mut acc = vars[0];
    for &x in &vars[1..] {
        power *= &c;
        let k = b.constant(power.clone());
        let term = b.mul(k, x);
        acc = b.add(acc, term);
    }
    power *= &c;
    let k = b.constant(power);
    b.add(acc, k)
}
