use std::ops::Range;

use crate::error::{Error, Result};

/// Sizes `(n_1, ..., n_m)` of the variable blocks. Variables are numbered
/// consecutively, block by block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockStructure(Vec<usize>);

impl BlockStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidInput(format!("block sizes must be positive, got {sizes:?}")));
        }
        Ok(BlockStructure(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of blocks `m`.
    pub fn count(&self) -> usize {
        self.0.len()
    }

    /// Total number of variables `N`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn range(&self, j: usize) -> Range<usize> {
        let start: usize = self.0[..j].iter().sum();
        start..start + self.0[j]
    }

    pub fn block_of(&self, var: usize) -> usize {
        let mut acc = 0;
        for (j, &nj) in self.0.iter().enumerate() {
            acc += nj;
            if var < acc {
                return j;
            }
        }
        panic!("variable {var} outside the block structure");
    }
}

/// Per-equation multi-degrees `d_i = (d_{i,1}, ..., d_{i,m})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiDegree(Vec<Vec<u32>>);

impl MultiDegree {
    pub fn new(blocks: &BlockStructure, rows: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != blocks.count()) {
            return Err(Error::ArityMismatch { expected: blocks.count(), found: bad.len() });
        }
        Ok(MultiDegree(rows))
    }

    /// `count` copies of the same multi-degree.
    pub fn uniform(row: Vec<u32>, count: usize) -> Self {
        MultiDegree(vec![row; count])
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    /// Number of equations `M`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.0[i]
    }

    /// `e = max_j sum_i d_{i,j}`.
    pub fn max_column_sum(&self) -> u32 {
        let m = self.0.first().map_or(0, Vec::len);
        (0..m).map(|j| self.0.iter().map(|r| r[j]).sum()).max().unwrap_or(0)
    }

    /// `max_i sum_j d_{i,j}`.
    pub fn max_row_sum(&self) -> u32 {
        self.0.iter().map(|r| r.iter().sum()).max().unwrap_or(0)
    }

    /// Concatenate rows of two degree vectors over the same blocks.
    pub fn concat(mut self, other: MultiDegree) -> Self {
        self.0.extend(other.0);
        self
    }
}
