//! Exact Krawtchouk polynomials for the binary and quaternary alphabets.
//!
//! `P_i(x) = sum_j (-1)^j (q-1)^(i-j) C(x, j) C(n-x, i-j)`. Tables are built
//! with the three-term recurrence; the defining sum is kept as
//! [`kraw_value`] so tests can check one against the other.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{
    big, binomial_rational, choose, choose_signed, int, pow_int, pow_rational, sign,
    ExactScalar,
};
use crate::{Error, Result};

/// Alphabet of the Krawtchouk family: binary (`q = 2`) or quaternary (`q = 4`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Binary,
    Quaternary,
}

impl Alphabet {
    pub const fn q(self) -> u32 {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Quaternary => 4,
        }
    }

    fn q_i64(self) -> i64 {
        self.q() as i64
    }
}

impl TryFrom<u32> for Alphabet {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        match q {
            2 => Ok(Alphabet::Binary),
            4 => Ok(Alphabet::Quaternary),
            other => Err(Error::UnsupportedAlphabet(other)),
        }
    }
}

fn check_index(index: usize, n: usize) -> Result<()> {
    if index > n {
        Err(Error::OutOfRange { index, max: n })
    } else {
        Ok(())
    }
}

/// `P_i(x)` evaluated directly from the defining sum.
pub fn kraw_value(alphabet: Alphabet, n: usize, i: usize, x: usize) -> Result<BigInt> {
    check_index(i, n)?;
    check_index(x, n)?;
    Ok(kraw_sum(alphabet, n, i, x))
}

fn kraw_sum(alphabet: Alphabet, n: usize, i: usize, x: usize) -> BigInt {
    let base = alphabet.q_i64() - 1;
    let mut acc = BigInt::zero();
    for j in 0..=i.min(x) {
        let term = choose(x, j) * choose(n - x, i - j) * pow_int(base, i - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `P_i(a)` for rational `a` from the defining sum with generalized binomials.
pub fn kraw_at_by_definition(
    alphabet: Alphabet,
    n: usize,
    i: usize,
    a: &ExactScalar,
) -> ExactScalar {
    let base = alphabet.q_i64() - 1;
    let rest = int(n as i64) - a;
    let mut acc = ExactScalar::zero();
    for j in 0..=i {
        let term = binomial_rational(a, j)
            * binomial_rational(&rest, i - j)
            * big(pow_int(base, i - j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `P_0(a), ..., P_t(a)` for rational `a`, via the three-term recurrence
/// (which holds as a polynomial identity in `x`).
pub fn kraw_row_at(alphabet: Alphabet, n: usize, t: usize, a: &ExactScalar) -> Vec<ExactScalar> {
    let q = alphabet.q_i64();
    let mut row = Vec::with_capacity(t + 1);
    row.push(ExactScalar::one());
    if t == 0 {
        return row;
    }
    row.push(int((q - 1) * n as i64) - a * int(q));
    for i in 1..t {
        let lin = int((q - 1) * (n as i64 - i as i64) + i as i64) - a * int(q);
        let next = (&lin * &row[i] - int((q - 1) * (n as i64 - i as i64 + 1)) * &row[i - 1])
            / int(i as i64 + 1);
        row.push(next);
    }
    row
}

/// `P_t(a)` for rational `a`.
pub fn kraw_at(alphabet: Alphabet, n: usize, t: usize, a: &ExactScalar) -> ExactScalar {
    kraw_row_at(alphabet, n, t, a).pop().expect("row is non-empty")
}

/// Memoized `P_i(x)` for all `0 <= i, x <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrawTable {
    alphabet: Alphabet,
    n: usize,
    // row-major: values[i * (n + 1) + x] = P_i(x)
    values: Vec<BigInt>,
}

impl KrawTable {
    pub fn new(alphabet: Alphabet, n: usize) -> Self {
        let q = alphabet.q_i64();
        let w = n + 1;
        let mut values = vec![BigInt::zero(); w * w];
        for x in 0..=n {
            values[x] = BigInt::one();
            if n >= 1 {
                values[w + x] = BigInt::from((q - 1) * n as i64 - q * x as i64);
            }
        }
        for i in 1..n {
            for x in 0..=n {
                let lin = (q - 1) * (n - i) as i64 + i as i64 - q * x as i64;
                let numer = &values[i * w + x] * lin
                    - &values[(i - 1) * w + x] * ((q - 1) * (n - i + 1) as i64);
                let (quot, rem) = numer.div_rem(&BigInt::from(i as i64 + 1));
                debug_assert!(rem.is_zero());
                values[(i + 1) * w + x] = quot;
            }
        }
        KrawTable {
            alphabet,
            n,
            values,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `P_i(x)`. Panics when `i` or `x` exceed `n`.
    pub fn get(&self, i: usize, x: usize) -> &BigInt {
        assert!(i <= self.n && x <= self.n, "index out of range");
        &self.values[i * (self.n + 1) + x]
    }

    pub fn value(&self, i: usize, x: usize) -> ExactScalar {
        big(self.get(i, x).clone())
    }

    /// Row `i`: `P_i(0), ..., P_i(n)`.
    pub fn row(&self, i: usize) -> &[BigInt] {
        let w = self.n + 1;
        &self.values[i * w..(i + 1) * w]
    }

    /// Point values `f(0), ..., f(n)` of `f = sum_i coeffs[i] P_i`.
    pub fn evaluate(&self, coeffs: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.check_len(coeffs.len())?;
        Ok((0..=self.n)
            .map(|x| {
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| c * big(self.get(i, x).clone()))
                    .sum()
            })
            .collect())
    }

    /// Coefficients `f_i = q^-n sum_j f(j) P_j(i)` of the function with the
    /// given values at `0..=n`.
    pub fn expand(&self, point_values: &[ExactScalar]) -> Result<KrawExpansion> {
        self.check_len(point_values.len())?;
        let scale = pow_rational(self.alphabet.q_i64(), -(self.n as i64));
        let coeffs = (0..=self.n)
            .map(|i| {
                let s: ExactScalar = point_values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| v * big(self.get(j, i).clone()))
                    .sum();
                s * &scale
            })
            .collect();
        Ok(KrawExpansion {
            alphabet: self.alphabet,
            n: self.n,
            coeffs,
        })
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got == self.n + 1 {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n + 1,
                got,
            })
        }
    }
}

/// `f = sum_i coeffs[i] P_i` in the Krawtchouk basis of length `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrawExpansion {
    pub alphabet: Alphabet,
    pub n: usize,
    pub coeffs: Vec<ExactScalar>,
}

impl KrawExpansion {
    pub fn evaluate(&self) -> Vec<ExactScalar> {
        KrawTable::new(self.alphabet, self.n)
            .evaluate(&self.coeffs)
            .expect("length matches by construction")
    }
}

pub fn expand_in_kraw(
    alphabet: Alphabet,
    n: usize,
    point_values: &[ExactScalar],
) -> Result<KrawExpansion> {
    KrawTable::new(alphabet, n).expand(point_values)
}

/// Checks `(i+1) P_{i+1}(x) = ((q-1)(n-i) + i - q x) P_i(x) - (q-1)(n-i+1) P_{i-1}(x)`
/// on the whole grid using values from the defining sum, and that the
/// recurrence-built table matches the definition.
pub fn kraw_recurrence_check(alphabet: Alphabet, n: usize) -> bool {
    let q = alphabet.q_i64();
    let def = |i: usize, x: usize| kraw_sum(alphabet, n, i, x);
    let table = KrawTable::new(alphabet, n);
    for x in 0..=n {
        for i in 0..=n {
            if table.get(i, x) != &def(i, x) {
                return false;
            }
        }
        for i in 0..n {
            let prev = if i == 0 { BigInt::zero() } else { def(i - 1, x) };
            let lhs = def(i + 1, x) * (i as i64 + 1);
            let lin = (q - 1) * (n - i) as i64 + i as i64 - q * x as i64;
            let rhs = def(i, x) * lin - prev * ((q - 1) * (n as i64 - i as i64 + 1));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Coefficients `c_k` with `P_r(x) P_s(x) = sum_k c_k P_k(x)`.
pub fn linearize_product(alphabet: Alphabet, n: usize, r: usize, s: usize) -> Result<Vec<BigInt>> {
    check_index(r, n)?;
    check_index(s, n)?;
    let (r, s, n_i) = (r as i64, s as i64, n as i64);
    let coeffs = (0..=n_i)
        .map(|k| match alphabet {
            Alphabet::Quaternary => {
                let mut acc = BigInt::zero();
                for sp in 0..=(n_i - k) {
                    let m = 2 * k + 2 * sp - r - s;
                    if m < 0 || m > k {
                        continue;
                    }
                    let term = choose_signed(k, m)
                        * choose_signed(n_i - k, sp)
                        * choose_signed(m, k + sp - s)
                        * pow_int(2, (k - m) as usize)
                        * pow_int(3, sp as usize);
                    acc += term;
                }
                acc
            }
            Alphabet::Binary => {
                let up = r + s - k;
                let down = r - s + k;
                if up < 0 || up % 2 != 0 || down < 0 {
                    BigInt::zero()
                } else {
                    choose_signed(n_i - k, up / 2) * choose_signed(k, down / 2)
                }
            }
        })
        .collect();
    Ok(coeffs)
}

/// Checks the binary Christoffel–Darboux identity
/// `P_{t+1}(x)P_t(a) - P_t(x)P_{t+1}(a) = 2(a-x)/(t+1) C(n,t) sum_{i<=t} P_i(x)P_i(a)/C(n,i)`
/// exactly at integer `x` and rational `a`.
pub fn christoffel_darboux_check(n: usize, t: usize, x: usize, a: &ExactScalar) -> bool {
    if t >= n || x > n {
        return false;
    }
    let b = Alphabet::Binary;
    let px = |i: usize| big(kraw_sum(b, n, i, x));
    let pa = |i: usize| kraw_at_by_definition(b, n, i, a);
    let lhs = px(t + 1) * pa(t) - px(t) * pa(t + 1);
    let kernel: ExactScalar = (0..=t)
        .map(|i| px(i) * pa(i) / big(choose(n, i)))
        .sum();
    let rhs = int(2) * (a - int(x as i64)) / int(t as i64 + 1) * big(choose(n, t)) * kernel;
    lhs == rhs
}

/// Default width of [`first_root_bracket`]: `2^-30`.
pub const ROOT_BRACKET_BITS: u32 = 30;

/// Rational bracket `[lo, hi]` around the smallest real root of `P_t`.
pub fn first_root_bracket(
    alphabet: Alphabet,
    n: usize,
    t: usize,
) -> Result<(ExactScalar, ExactScalar)> {
    first_root_bracket_with_width(alphabet, n, t, ROOT_BRACKET_BITS)
}

/// Like [`first_root_bracket`] with width at most `2^-bits`.
pub fn first_root_bracket_with_width(
    alphabet: Alphabet,
    n: usize,
    t: usize,
    bits: u32,
) -> Result<(ExactScalar, ExactScalar)> {
    if t == 0 || t > n {
        return Err(Error::InvalidParams("root bracket needs 1 <= t <= n"));
    }
    // Consecutive roots of P_t are more than one apart, so the first integer
    // sign change isolates the smallest root.
    let mut prev = kraw_sum(alphabet, n, t, 0);
    let mut hit = None;
    for x in 1..=n {
        let cur = kraw_sum(alphabet, n, t, x);
        if cur.is_zero() {
            let r = int(x as i64);
            return Ok((r.clone(), r));
        }
        if cur.signum() != prev.signum() {
            hit = Some(x);
            break;
        }
        prev = cur;
    }
    let x = hit.ok_or(Error::NoSignChange)?;
    let mut lo = int(x as i64 - 1);
    let mut hi = int(x as i64);
    let lo_sign = prev.signum();
    let width = pow_rational(2, -(bits as i64));
    while &hi - &lo > width {
        let mid = (&lo + &hi) / int(2);
        let v = kraw_at(alphabet, n, t, &mid);
        let s = sign(&v);
        if s == 0 {
            return Ok((mid.clone(), mid));
        }
        if BigInt::from(s) == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}
