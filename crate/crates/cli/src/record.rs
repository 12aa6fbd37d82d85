//! JSON output records.

use std::str::FromStr;

use mhsolve_core::ring::PolyRing;
use mhsolve_core::{LiftingLedger, RationalField, ZeroDimParam};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    /// `success`, `lower-degree-suspected` or `fail`.
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParamRecord>,
    /// Coordinates at the rational roots of `q`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimum: Option<IntervalRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub run: Option<RunMeta>,
}

/// A parametrization with exact coefficients, lowest degree first. Over a
/// prime field the coefficients are residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamRecord {
    /// `"Q"` or the prime `p` as a decimal string.
    pub field: String,
    pub degree: usize,
    pub lambda: Vec<String>,
    pub q: Vec<String>,
    pub v: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub lo: String,
    pub hi: String,
    pub sigma: u32,
    /// Midpoint as a float, for reading only.
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub c: String,
    pub c_prime: String,
    pub hn: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub mu3: f64,
    pub h: f64,
    pub h_prime: f64,
    pub e: u32,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunMeta {
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub prime_override: bool,
    pub repeats: usize,
    /// Output degree of each run; `null` marks a failed run.
    pub degrees: Vec<Option<usize>>,
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

impl BoundReport {
    pub fn new(ledger: &LiftingLedger, c_prime: &BigInt) -> Self {
        BoundReport {
            c: ledger.c.to_string(),
            c_prime: c_prime.to_string(),
            hn: ledger.hn,
            mu1: ledger.mu1,
            mu2: ledger.mu2,
            mu3: ledger.mu3,
            h: ledger.h,
            h_prime: ledger.h_prime,
            e: ledger.e,
            b: ledger.b.to_string(),
        }
    }
}

impl ParamRecord {
    pub fn rational(param: &ZeroDimParam<BigRational>) -> Self {
        ParamRecord {
            field: "Q".into(),
            degree: param.degree(),
            lambda: strings(&param.lambda),
            q: strings(param.q.coeffs()),
            v: param.v.iter().map(|v| strings(v.coeffs())).collect(),
        }
    }

    pub fn modular(p: u64, param: &ZeroDimParam<u64>) -> Self {
        ParamRecord {
            field: p.to_string(),
            degree: param.degree(),
            lambda: strings(&param.lambda),
            q: strings(param.q.coeffs()),
            v: param.v.iter().map(|v| strings(v.coeffs())).collect(),
        }
    }

    /// Read back a rational parametrization.
    pub fn to_rational(&self) -> Result<ZeroDimParam<BigRational>, CliError> {
        if self.field != "Q" {
            return Err(CliError::Invalid(format!("parametrization is over F_{}", self.field)));
        }
        let px = PolyRing::new(RationalField);
        let poly = |cs: &[String]| -> Result<_, CliError> {
            let cs = cs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>, _>>()?;
            Ok(px.from_coeffs(cs))
        };
        let lambda = self
            .lambda
            .iter()
            .map(|c| BigInt::from_str(c).map_err(|_| CliError::Invalid(format!("bad integer '{c}'"))))
            .collect::<Result<_, _>>()?;
        Ok(ZeroDimParam { q: poly(&self.q)?, v: self.v.iter().map(|v| poly(v)).collect::<Result<_, _>>()?, lambda })
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(s).map_err(|_| CliError::Invalid(format!("bad rational '{s}'")))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn sample(coeffs: Vec<(i64, i64)>, lam: Vec<i64>, h: f64) -> OutputRecord {
        let px = PolyRing::new(RationalField);
        let rat: Vec<BigRational> = coeffs.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
        let mut qc = rat.clone();
        qc.push(BigRational::from_integer(1.into()));
        let param = ZeroDimParam {
            q: px.from_coeffs(qc),
            v: vec![px.from_coeffs(rat.clone()); lam.len()],
            lambda: lam.iter().map(|&x| BigInt::from(x)).collect(),
        };
        OutputRecord {
            command: "solve".into(),
            outcome: "success".into(),
            error: None,
            variables: (0..lam.len()).map(|i| format!("x{i}")).collect(),
            parametrization: Some(ParamRecord::rational(&param)),
            points: vec![],
            minimum: Some(IntervalRecord { lo: "-1".into(), hi: "-1/2".into(), sigma: 1, approx: -0.75 }),
            bounds: Some(BoundReport {
                c: "3".into(),
                c_prime: "12".into(),
                hn: h,
                mu1: h / 3.0,
                mu2: 2.5e10,
                mu3: 1e-300,
                h: 7.0,
                h_prime: 8.0,
                e: 3,
                b: "123456789012345678901234567890".into(),
            }),
            run: Some(RunMeta { seed: 5, prime: Some(10007), prime_override: false, repeats: 3, degrees: vec![Some(1), None] }),
        }
    }

    proptest! {
        #[test]
        fn json_round_trip(
            coeffs in prop::collection::vec((-1000i64..1000, 1i64..1000), 0..5),
            lam in prop::collection::vec(-50i64..50, 1..4),
            h in 0.0f64..1e6,
        ) {
            let rec = sample(coeffs, lam, h);
            let text = serde_json::to_string_pretty(&rec).unwrap();
            let back: OutputRecord = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &rec);
            prop_assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
            let p = rec.parametrization.as_ref().unwrap();
            prop_assert_eq!(ParamRecord::rational(&p.to_rational().unwrap()), p.clone());
        }
    }
}
