//! Plotkin- and Hamming-type bounds for stabilizer codes of type
//! `4^k0 2^k1`, obtained through the mixed binary/quaternary group code
//! left after shortening.
//!
//! A mixed code has `l` coordinates restricted to `{0, alpha}` and
//! `n_total - l` coordinates over all of GF(4); a group code of this shape
//! has `2^k_bin` words.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{big, choose, int, pow_int, ExactScalar};
use crate::{Error, Result};

/// Parameters `(n, k0, k1)` of the GF(4) group code attached to a
/// stabilizer code; the quantum dimension exponent is `k = n - 2k0 - k1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizerType {
    pub n: usize,
    pub k0: usize,
    pub k1: usize,
}

impl StabilizerType {
    pub fn new(n: usize, k0: usize, k1: usize) -> Result<Self> {
        if 2 * k0 + k1 > n {
            return Err(Error::InvalidParams("type needs 2 k0 + k1 <= n"));
        }
        Ok(StabilizerType { n, k0, k1 })
    }

    /// Type with quantum dimension exponent `k`; `n - k - k1` must be even
    /// and non-negative.
    pub fn from_dimension(n: usize, k: usize, k1: usize) -> Result<Self> {
        let used = k
            .checked_add(k1)
            .filter(|&u| u <= n)
            .ok_or(Error::InvalidParams("need k + k1 <= n"))?;
        if (n - used) % 2 != 0 {
            return Err(Error::InvalidParams("n - k - k1 must be even"));
        }
        Self::new(n, (n - used) / 2, k1)
    }

    pub fn k(&self) -> usize {
        self.n - 2 * self.k0 - self.k1
    }
}

/// A mixed group code: `l` binary-restricted coordinates out of `n_total`,
/// `2^k_bin` codewords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedCodeParams {
    pub l: usize,
    pub n_total: usize,
    pub k_bin: usize,
}

impl MixedCodeParams {
    pub fn new(l: usize, n_total: usize, k_bin: usize) -> Result<Self> {
        if l > n_total {
            return Err(Error::InvalidParams("need l <= n_total"));
        }
        if k_bin > 2 * n_total - l {
            return Err(Error::InvalidParams("more codewords than the ambient space"));
        }
        Ok(MixedCodeParams { l, n_total, k_bin })
    }
}

/// Packing radius `floor((d - 1) / 2)` of a code with minimum distance `d`.
pub fn packing_radius(d: usize) -> usize {
    d.saturating_sub(1) / 2
}

/// Codes whose distance bounds the stabilizer distance after shortening.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shortened {
    pub ty: StabilizerType,
    /// Mixed code of lengths `k1` and `n - k0 - k1`, `2^(2n - 4k0 - 2k1)` words.
    pub general: MixedCodeParams,
    /// For `k1 = 0`: quaternary code of length `(n + k)/2` with `4^k` words.
    pub pure_quaternary: Option<MixedCodeParams>,
    /// For `k1 < 2k`: quaternary code of length `(n + k - k1)/2` with
    /// `2^(2k - k1)` words.
    pub reduced: Option<MixedCodeParams>,
    /// The complementary code is the whole space (`k0 = k1 = 0`).
    pub degenerate: bool,
}

pub fn shorten_params(n: usize, k0: usize, k1: usize) -> Result<Shortened> {
    let ty = StabilizerType::new(n, k0, k1)?;
    let k = ty.k();
    let general = MixedCodeParams::new(k1, n - k0, 2 * k)?;
    let pure_quaternary = (k1 == 0).then_some(MixedCodeParams {
        l: 0,
        n_total: (n + k) / 2,
        k_bin: 2 * k,
    });
    let reduced = (k1 < 2 * k).then(|| MixedCodeParams {
        l: 0,
        n_total: (n + k - k1) / 2,
        k_bin: 2 * k - k1,
    });
    Ok(Shortened {
        ty,
        general,
        pure_quaternary,
        reduced,
        degenerate: k0 == 0 && k1 == 0,
    })
}

/// `d <= (l 2^(k-1) + 3 (n - l) 2^(k-2)) / (2^k - 1)`, exact.
pub fn mixed_plotkin(l: usize, n_total: usize, k_bin: usize) -> Result<ExactScalar> {
    if k_bin == 0 {
        return Err(Error::InvalidParams("Plotkin bound needs at least two codewords"));
    }
    if l > n_total {
        return Err(Error::InvalidParams("need l <= n_total"));
    }
    let half = big(BigInt::one() << (k_bin - 1));
    let quarter = half.clone() / int(2);
    let total = half * int(l as i64) + quarter * int(3 * (n_total - l) as i64);
    Ok(total / big((BigInt::one() << k_bin) - 1))
}

/// Number of words of `{0,alpha}^l x GF(4)^(n-l)` within distance `e` of a
/// fixed word: `sum_{i<=e} sum_j C(l, j) 3^(i-j) C(n-l, i-j)`.
pub fn mixed_sphere_volume(l: usize, n_total: usize, e: usize) -> BigInt {
    let q = n_total - l.min(n_total);
    let mut acc = BigInt::zero();
    for i in 0..=e.min(n_total) {
        for j in 0..=i.min(l) {
            acc += choose(l, j) * pow_int(3, i - j) * choose(q, i - j);
        }
    }
    acc
}

/// Largest `d` with `V_{floor((d-1)/2)} <= rhs`, capped at the largest
/// possible weight (`n_total`, or `n_total + 1` for a single codeword).
fn max_d_for_budget(l: usize, n_total: usize, single_word: bool, rhs: &BigInt) -> usize {
    let cap = if single_word { n_total + 1 } else { n_total };
    let mut best = 0;
    for d in 1..=cap {
        if &mixed_sphere_volume(l, n_total, packing_radius(d)) <= rhs {
            best = d;
        } else {
            break;
        }
    }
    best
}

/// Largest `d` allowed by the sphere-packing inequality
/// `V_e <= 2^(2 n_total - l - k_bin)`, `e = floor((d-1)/2)`.
pub fn mixed_hamming_max_d(l: usize, n_total: usize, k_bin: usize) -> Result<usize> {
    let p = MixedCodeParams::new(l, n_total, k_bin)?;
    let rhs = BigInt::one() << (2 * p.n_total - p.l - p.k_bin);
    Ok(max_d_for_budget(l, n_total, k_bin == 0, &rhs))
}

/// Plotkin-type bound for a stabilizer code `[[n, k]]` of type `4^k0 2^k1`:
/// `d <= ((n+k)/2) 3 4^(k-1)/(4^k - 1) + (k1/2) 4^(k-1)/(4^k - 1)`.
pub fn stabilizer_plotkin(n: usize, k: usize, k1: usize) -> Result<ExactScalar> {
    if k == 0 {
        return Err(Error::InvalidParams("Plotkin bound needs k >= 1"));
    }
    StabilizerType::from_dimension(n, k, k1)?;
    let p = big(pow_int(4, k - 1));
    let denom = big(pow_int(4, k) - 1);
    let main = int((n + k) as i64) / int(2) * int(3) * &p / &denom;
    let side = int(k1 as i64) / int(2) * p / denom;
    Ok(main + side)
}

/// Hamming-type bound for a stabilizer code of type `4^k0 2^k1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizerHamming {
    /// Max `d` from shortening to the mixed code and sphere packing
    /// there, i.e. `V_e <= 2^(n-k)` on lengths `k1`, `n - k0 - k1`.
    pub composed: usize,
    /// Max `d` with the right-hand side `2^(2k0 + 3k1)` instead.
    pub printed_rhs: usize,
}

pub fn stabilizer_hamming(n: usize, k: usize, k1: usize) -> Result<StabilizerHamming> {
    let ty = StabilizerType::from_dimension(n, k, k1)?;
    let sh = shorten_params(n, ty.k0, k1)?;
    let g = sh.general;
    let composed = mixed_hamming_max_d(g.l, g.n_total, g.k_bin)?;
    let printed_rhs = BigInt::one() << (2 * ty.k0 + 3 * k1);
    let printed = max_d_for_budget(g.l, g.n_total, g.k_bin == 0, &printed_rhs);
    Ok(StabilizerHamming {
        composed,
        printed_rhs: printed,
    })
}

/// Words of a mixed group code, spanned over GF(2) by `generators`.
///
/// A word packs coordinate `c` into bits `2c, 2c+1`; binary-restricted
/// coordinates only use the low bit.
pub fn span_words(generators: &[u64]) -> Vec<u64> {
    let mut words = alloc::vec![0u64];
    for &g in generators {
        if words.contains(&g) {
            continue;
        }
        let extra: Vec<u64> = words.iter().map(|w| w ^ g).collect();
        words.extend(extra);
    }
    words
}

/// Number of nonzero coordinates of a packed word.
pub fn mixed_weight(word: u64, n_total: usize) -> usize {
    (0..n_total).filter(|c| (word >> (2 * c)) & 0b11 != 0).count()
}
