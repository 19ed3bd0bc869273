//! Exact arithmetic behind the solid-torus tight count: negative continued
//! fractions, the products `r` and `s`, and Catalan numbers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::surface::{Slope, SlopeError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error(transparent)]
    Slope(#[from] SlopeError),
    #[error("the number of dividing curves 2n needs n >= 1")]
    ZeroCurves,
    #[error("continued fraction has no coefficients")]
    EmptyExpansion,
    #[error("coefficient r_{index} = {value} must be <= -2")]
    InvalidCoefficient { index: usize, value: i128 },
}

/// Coefficients `r_0, ..., r_k` of `r_0 - 1/(r_1 - 1/(... - 1/r_k))`.
///
/// All coefficients are at most -2, except the degenerate expansion `[-1]`
/// of `-1/1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    coefficients: Vec<i128>,
}

impl ContinuedFraction {
    pub fn from_coefficients(coefficients: Vec<i128>) -> Result<Self, ArithError> {
        if coefficients.is_empty() {
            return Err(ArithError::EmptyExpansion);
        }
        if coefficients != [-1] {
            if let Some((index, &value)) = coefficients.iter().enumerate().find(|(_, &c)| c > -2) {
                return Err(ArithError::InvalidCoefficient { index, value });
            }
        }
        Ok(ContinuedFraction { coefficients })
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    pub fn is_degenerate(&self) -> bool {
        self.coefficients == [-1]
    }

    /// Value as a reduced fraction `(numerator, denominator)` with positive
    /// denominator.
    pub fn evaluate(&self) -> (i128, i128) {
        let mut iter = self.coefficients.iter().rev();
        let last = *iter.next().expect("non-empty");
        let (mut num, mut den) = (last, 1i128);
        for &c in iter {
            // c - 1/(num/den) = (c*num - den)/num
            let next = (c * num - den, num);
            num = next.0;
            den = next.1;
            if den < 0 {
                num = -num;
                den = -den;
            }
        }
        let g = num.gcd(&den);
        (num / g, den / g)
    }
}

/// Negative continued fraction of `-p/q`.
pub fn neg_cf(p: u64, q: u64) -> Result<ContinuedFraction, ArithError> {
    Slope::new(p, q)?;
    let (mut num, mut den) = (-(p as i128), q as i128);
    let mut coefficients = Vec::new();
    loop {
        if num % den == 0 {
            coefficients.push(num / den);
            break;
        }
        let r = Integer::div_floor(&num, &den);
        coefficients.push(r);
        // next = 1/(r - num/den) = den/(r*den - num), and r*den - num < 0
        let gap = r * den - num;
        (num, den) = (-den, -gap);
    }
    ContinuedFraction::from_coefficients(coefficients)
}

/// The products `r = |(r_0+1)...(r_{k-1}+1) r_k|` and
/// `s = |(r_0+1)...(r_{k-1}+1)(r_k+1)|`; both are 1 for the expansion of -1.
pub fn honda_rs(cf: &ContinuedFraction) -> (BigUint, BigUint) {
    if cf.is_degenerate() {
        return (BigUint::one(), BigUint::one());
    }
    let (last, init) = cf.coefficients.split_last().expect("non-empty");
    let prefix: BigUint = init.iter().map(|&c| BigUint::from((c + 1).unsigned_abs())).product();
    let r = &prefix * BigUint::from(last.unsigned_abs());
    let s = prefix * BigUint::from((last + 1).unsigned_abs());
    (r, s)
}

/// The n-th Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightCountResult {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub expansion: ContinuedFraction,
    #[serde(serialize_with = "crate::io::ser_big")]
    pub r: BigUint,
    #[serde(serialize_with = "crate::io::ser_big")]
    pub s: BigUint,
    #[serde(serialize_with = "crate::io::ser_big")]
    pub count: BigUint,
}

/// Number of tight contact structures on the solid torus whose convex
/// boundary carries `2n` dividing curves of slope `-p/q`:
/// `C_n ((r - s) n + s)`.
pub fn tight_count_solid_torus(n: u64, p: u64, q: u64) -> Result<TightCountResult, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroCurves);
    }
    let expansion = neg_cf(p, q)?;
    let (r, s) = honda_rs(&expansion);
    let count = catalan(n) * ((&r - &s) * BigUint::from(n) + &s);
    Ok(TightCountResult { n, p, q, expansion, r, s, count })
}
