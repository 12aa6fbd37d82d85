//! System files: named variable blocks and polynomial expressions.

use std::collections::HashMap;

use mhsolve_core::{BlockStructure, MPoly, MinimizationProblem, MultiDegree, Slp, System};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::expr::parse_poly;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockDecl {
    pub name: String,
    pub vars: Vec<String>,
}

/// On-disk form of a system.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub blocks: Vec<BlockDecl>,
    pub polys: Vec<String>,
    /// Declared multi-degrees, one row per polynomial and one entry per block.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<Vec<u32>>>,
    /// Declared heights, one per polynomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heights: Option<Vec<f64>>,
}

/// A parsed system with integer coefficients.
#[derive(Clone, Debug)]
pub struct ParsedSystem {
    pub var_names: Vec<String>,
    pub blocks: BlockStructure,
    pub polys: Vec<MPoly>,
    pub degrees: MultiDegree,
    pub heights: Vec<f64>,
}

impl SystemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn parse(&self) -> Result<ParsedSystem, CliError> {
        let mut index = HashMap::new();
        let mut var_names = Vec::new();
        for block in &self.blocks {
            for v in &block.vars {
                if index.insert(v.clone(), var_names.len()).is_some() {
                    return Err(CliError::Invalid(format!("variable '{v}' appears more than once")));
                }
                var_names.push(v.clone());
            }
        }
        let blocks = BlockStructure::new(self.blocks.iter().map(|b| b.vars.len()).collect())?;
        let n = var_names.len();
        let polys = self
            .polys
            .iter()
            .enumerate()
            .map(|(i, src)| {
                let p = parse_poly(src, &index, n).map_err(|source| CliError::Expr { index: i, source })?;
                // Only denominators are cleared; the zero set is unchanged.
                let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
                Ok(p.scale(&BigRational::from_integer(den)))
            })
            .collect::<Result<Vec<_>, CliError>>()?;

        let computed: Vec<Vec<u32>> = polys.iter().map(|p| p.multidegree(blocks.sizes())).collect();
        let rows = match &self.degrees {
            None => computed,
            Some(declared) => {
                if declared.len() != polys.len() {
                    return Err(CliError::Invalid(format!("{} degree rows for {} polynomials", declared.len(), polys.len())));
                }
                for (i, (d, c)) in declared.iter().zip(&computed).enumerate() {
                    if d.len() != c.len() || d.iter().zip(c).any(|(a, b)| a < b) {
                        return Err(CliError::Invalid(format!("polynomial {i} has multi-degree {c:?}, above the declared {d:?}")));
                    }
                }
                declared.clone()
            }
        };
        let degrees = MultiDegree::new(&blocks, rows)?;

        let computed: Vec<f64> = polys.iter().map(MPoly::height).collect();
        let heights = match &self.heights {
            None => computed,
            Some(declared) => {
                if declared.len() != polys.len() {
                    return Err(CliError::Invalid(format!("{} heights for {} polynomials", declared.len(), polys.len())));
                }
                if let Some(i) = (0..polys.len()).find(|&i| declared[i] < computed[i]) {
                    return Err(CliError::Invalid(format!(
                        "polynomial {i} has height {}, above the declared {}",
                        computed[i], declared[i]
                    )));
                }
                declared.clone()
            }
        };
        Ok(ParsedSystem { var_names, blocks, polys, degrees, heights })
    }
}

impl ParsedSystem {
    /// The square system for the solver commands.
    pub fn system(&self) -> Result<System, CliError> {
        let n = self.var_names.len();
        if self.polys.len() != n {
            return Err(CliError::Invalid(format!("{} polynomials in {n} variables; the system must be square", self.polys.len())));
        }
        Ok(System::new(Slp::from_polys(n, &self.polys)?, self.blocks.clone(), self.degrees.clone())?)
    }

    /// The constraints of a minimization problem over all variables, the
    /// first variable being the objective.
    pub fn problem(&self) -> Result<MinimizationProblem, CliError> {
        let n = self.var_names.len();
        if self.polys.is_empty() || self.polys.len() > n {
            return Err(CliError::Invalid(format!("need between 1 and {n} constraints, got {}", self.polys.len())));
        }
        let d = self.polys.iter().map(MPoly::total_degree).max().unwrap_or(0);
        let s = self.heights.iter().cloned().fold(0.0, f64::max);
        Ok(MinimizationProblem::new(Slp::from_polys(n, &self.polys)?, d, s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(blocks: &[(&str, &[&str])], polys: &[&str]) -> SystemFile {
        SystemFile {
            blocks: blocks.iter().map(|(n, v)| BlockDecl { name: n.to_string(), vars: v.iter().map(|s| s.to_string()).collect() }).collect(),
            polys: polys.iter().map(|s| s.to_string()).collect(),
            degrees: None,
            heights: None,
        }
    }

    #[test]
    fn bilinear_file() {
        let text = include_str!("../data/bilinear3.json");
        let sys = SystemFile::from_json(text).unwrap().parse().unwrap();
        assert_eq!(sys.blocks.sizes(), &[1, 2]);
        assert_eq!(sys.degrees.rows(), &[vec![1, 1], vec![1, 1], vec![1, 1]]);
        assert_eq!(sys.system().unwrap().n_vars(), 3);
    }

    #[test]
    fn single_square() {
        let sys = file(&[("X", &["x"])], &["x^2"]).parse().unwrap();
        assert_eq!(sys.degrees.rows(), &[vec![2]]);
    }

    #[test]
    fn denominators_are_cleared() {
        let sys = file(&[("X", &["x"])], &["x/3 + 1"]).parse().unwrap();
        let want = MPoly::var(1, 0).add(&MPoly::constant(1, BigRational::from_integer(3.into())));
        assert_eq!(sys.polys[0], want);
        assert!((sys.heights[0] - 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn declarations_are_reconciled() {
        let mut f = file(&[("X", &["x"]), ("Y", &["y"])], &["x*y - 1", "x + y"]);
        f.degrees = Some(vec![vec![2, 1], vec![1, 1]]);
        f.heights = Some(vec![1.0, 1.0]);
        let sys = f.parse().unwrap();
        assert_eq!(sys.degrees.rows()[0], vec![2, 1]);
        assert_eq!(sys.heights, vec![1.0, 1.0]);

        f.degrees = Some(vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(f.parse(), Err(CliError::Invalid(_))));
        f.degrees = None;
        f.heights = Some(vec![-1.0, 0.0]);
        assert!(matches!(f.parse(), Err(CliError::Invalid(_))));
    }

    #[test]
    fn membership_errors() {
        assert!(matches!(file(&[("X", &["x"]), ("Y", &["x"])], &["x"]).parse(), Err(CliError::Invalid(_))));
        let err = file(&[("X", &["x"])], &["x + y"]).parse().unwrap_err();
        assert!(matches!(err, CliError::Expr { index: 0, .. }));
        assert!(file(&[("X", &["x", "y"])], &["x"]).parse().unwrap().system().is_err());
    }

    #[test]
    fn json_errors_have_positions() {
        let err = SystemFile::from_json("{\n  \"blocks\": [,\n}").unwrap_err();
        assert!(matches!(err, CliError::Json { line: 2, .. }));
    }
}
