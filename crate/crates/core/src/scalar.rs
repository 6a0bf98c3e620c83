//! Exact rational scalars and the integer combinatorics behind them.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type ExactScalar = BigRational;

pub fn int(v: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> ExactScalar {
    ExactScalar::from_integer(v)
}

/// `C(n, k)` as a big integer; zero outside `0 <= k <= n`.
pub fn binomial_int(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    Ok(acc)
}

/// `C(n, k)` as an exact scalar.
pub fn binomial(n: i64, k: i64) -> Result<ExactScalar> {
    binomial_int(n, k).map(big)
}

/// Binomial for `usize` arguments known to be valid; `k > n` gives zero.
pub(crate) fn choose(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial_int(n as i64, k as i64).expect("non-negative arguments")
}

/// Binomial where the lower argument may be negative (then zero).
pub(crate) fn choose_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial_int(n, k).expect("non-negative arguments")
}

/// Generalized binomial `a (a-1) ... (a-j+1) / j!` for a rational upper
/// argument.
pub fn binomial_rational(a: &ExactScalar, j: usize) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for m in 0..j {
        acc *= a - int(m as i64);
        acc /= int(m as i64 + 1);
    }
    acc
}

pub fn pow_int(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_rational(base: i64, exp: i64) -> ExactScalar {
    let p = big(pow_int(base, exp.unsigned_abs() as usize));
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// Largest integer not above `v`.
pub fn floor_int(v: &ExactScalar) -> BigInt {
    v.floor().to_integer()
}

/// Sign of an exact value as -1, 0, or 1.
pub fn sign(v: &ExactScalar) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Nearest `f64` to an exact rational. Handles values whose numerator and
/// denominator overflow `f64` separately.
pub fn to_f64(v: &ExactScalar) -> f64 {
    let (num, den) = (v.numer(), v.denom());
    let shift = num.bits().max(den.bits()).saturating_sub(1000);
    let n = bigint_to_f64(&(num >> shift as usize));
    let d = bigint_to_f64(&(den >> shift as usize));
    n / d
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
}

/// `log2 |v|` for a nonzero big integer, accurate to double precision even
/// when the value itself overflows `f64`.
pub fn log2_abs(v: &BigInt) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = bigint_to_f64(&(v.abs() >> shift as usize));
    libm::log2(top) + shift as f64
}

pub fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn ints(values: &[i64]) -> Vec<ExactScalar> {
    values.iter().map(|&v| int(v)).collect()
}
