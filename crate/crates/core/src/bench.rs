//! Naive-vs-fast term computation with wall-clock timing, plus an O(n)
//! modular recurrence oracle for cross-checking huge indices without
//! materializing the exact value twice.

use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::genmatrix::{mat_pow, mat_qq};
use crate::sequences::{bp_fib, ParamSet};
use crate::spectral::binet_q_float;

/// How to compute the `n`-th term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    /// O(n) exact recurrence.
    Naive,
    /// O(log n) exact binary matrix exponentiation.
    MatPow,
    /// Double-precision Binet formula.
    BinetFloat,
}

impl BenchMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BenchMethod::Naive => "naive",
            BenchMethod::MatPow => "matpow",
            BenchMethod::BinetFloat => "binet-float",
        }
    }
}

impl FromStr for BenchMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(BenchMethod::Naive),
            "matpow" => Ok(BenchMethod::MatPow),
            "binet-float" => Ok(BenchMethod::BinetFloat),
            other => Err(Error::Parse(format!("unknown bench method: {other:?}"))),
        }
    }
}

/// One timed run. Exact values are reported by digit count (the values
/// themselves can run to hundreds of thousands of digits); small values are
/// included verbatim, and `--mod` runs carry both residues.
#[derive(Debug, Clone, Serialize)]
pub struct BenchResult {
    pub method: String,
    pub n: i64,
    pub a: Rational,
    pub b: Rational,
    pub repeat: u32,
    #[serde(rename = "timesSeconds")]
    pub times_s: Vec<f64>,
    #[serde(rename = "medianSeconds")]
    pub median_s: f64,
    #[serde(rename = "numeratorDigits", skip_serializing_if = "Option::is_none")]
    pub numerator_digits: Option<u64>,
    #[serde(rename = "denominatorDigits", skip_serializing_if = "Option::is_none")]
    pub denominator_digits: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    #[serde(rename = "floatValue", skip_serializing_if = "Option::is_none")]
    pub float_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
    #[serde(rename = "oracleResidue", skip_serializing_if = "Option::is_none")]
    pub oracle_residue: Option<u64>,
    #[serde(rename = "modAgrees", skip_serializing_if = "Option::is_none")]
    pub mod_agrees: Option<bool>,
}

const VALUE_DIGIT_LIMIT: u64 = 40;

/// Exact `q_n` through the generating matrix: the lower-left entry of the
/// n-th power carries `(b/a)^{floor(n/2)} q_n` for every signed `n`.
pub fn matpow_q(n: i64, p: &ParamSet) -> Result<Rational> {
    let m = mat_qq(p, &Rational::one());
    let power = mat_pow(&m, n)?;
    Ok(&power.e21 * &p.ratio_ab().pow(n.div_euclid(2)))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (x % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Reduce an exact rational modulo `m` (numerator times the inverse of the
/// denominator). Fails when the denominator shares a factor with `m`.
pub fn rational_mod(value: &Rational, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::InvalidParameter("modulus must be at least 2".into()));
    }
    let m_big = BigInt::from(modulus);
    let num = value
        .numerator()
        .mod_floor(&m_big)
        .to_u64()
        .expect("reduced below modulus");
    let den = value
        .denominator()
        .mod_floor(&m_big)
        .to_u64()
        .expect("reduced below modulus");
    let den_inv = mod_inverse(den, modulus).ok_or_else(|| {
        Error::InvalidParameter("denominator is not invertible modulo the given modulus".into())
    })?;
    Ok(mul_mod(num, den_inv, modulus))
}

/// O(n) modular recurrence oracle for `q_n mod m`, independent of all
/// big-integer paths. Negative indices use the sign rule.
pub fn naive_q_mod(n: i64, p: &ParamSet, modulus: u64) -> Result<u64> {
    let a = rational_mod(p.a(), modulus)?;
    let b = rational_mod(p.b(), modulus)?;
    let k = n.unsigned_abs();
    let mut prev2 = 0u64;
    if k == 0 {
        return Ok(0);
    }
    let mut prev = 1 % modulus;
    for i in 2..=k {
        let coeff = if i % 2 == 0 { a } else { b };
        let next = (mul_mod(coeff, prev, modulus) + prev2) % modulus;
        prev2 = std::mem::replace(&mut prev, next);
    }
    if n < 0 && k % 2 == 0 && prev != 0 {
        Ok(modulus - prev)
    } else {
        Ok(prev)
    }
}

/// Decimal digit count of an integer (1 for zero).
pub fn decimal_digits(x: &BigInt) -> u64 {
    if x.is_zero() {
        return 1;
    }
    let abs = x.abs();
    let bits = abs.bits();
    let mut d = (((bits - 1) as f64) * std::f64::consts::LOG10_2).floor() as u64 + 1;
    let ten = BigInt::from(10);
    while Pow::pow(&ten, d) <= abs {
        d += 1;
    }
    while d > 1 && Pow::pow(&ten, d - 1) > abs {
        d -= 1;
    }
    d
}

fn median(times: &[f64]) -> f64 {
    let mut sorted = times.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    sorted[sorted.len() / 2]
}

/// Time `repeat` runs of the selected method and report the median, digit
/// counts, and (optionally) the modular cross-check.
pub fn run_bench(
    method: BenchMethod,
    n: i64,
    p: &ParamSet,
    repeat: u32,
    modulus: Option<u64>,
) -> Result<BenchResult> {
    if repeat == 0 {
        return Err(Error::InvalidParameter("repeat must be at least 1".into()));
    }

    let mut times = Vec::with_capacity(repeat as usize);
    let mut exact: Option<Rational> = None;
    let mut float_value: Option<f64> = None;
    for _ in 0..repeat {
        let start = Instant::now();
        match method {
            BenchMethod::Naive => {
                exact = Some(bp_fib(n, p));
            }
            BenchMethod::MatPow => {
                exact = Some(matpow_q(n, p)?);
            }
            BenchMethod::BinetFloat => {
                float_value = Some(binet_q_float(n, p, &Rational::one())?);
            }
        }
        times.push(start.elapsed().as_secs_f64());
    }
    let median_s = median(&times);

    let (numerator_digits, denominator_digits, value) = match &exact {
        Some(v) => {
            let nd = decimal_digits(v.numerator());
            let dd = decimal_digits(v.denominator());
            let small = nd <= VALUE_DIGIT_LIMIT && dd <= VALUE_DIGIT_LIMIT;
            (Some(nd), Some(dd), small.then(|| v.clone()))
        }
        None => (None, None, None),
    };

    let (residue, oracle_residue, mod_agrees) = match (modulus, &exact) {
        (Some(m), Some(v)) => {
            let r = rational_mod(v, m)?;
            let o = naive_q_mod(n, p, m)?;
            (Some(r), Some(o), Some(r == o))
        }
        (Some(m), None) => {
            // Float method: the oracle still runs, with nothing to compare.
            let o = naive_q_mod(n, p, m)?;
            (None, Some(o), None)
        }
        (None, _) => (None, None, None),
    };

    Ok(BenchResult {
        method: method.name().into(),
        n,
        a: p.a().clone(),
        b: p.b().clone(),
        repeat,
        times_s: times,
        median_s,
        numerator_digits,
        denominator_digits,
        value,
        float_value: float_value.map(|f| f.to_string()),
        modulus,
        residue,
        oracle_residue,
        mod_agrees,
    })
}
