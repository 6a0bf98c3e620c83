//! Quantum weight enumerators and the exact enumerator-feasibility LP.
//!
//! For an `((n, K, w))` code the enumerators `B`, `B⊥` satisfy
//! `B_0 = B⊥_0 = 1`, `0 <= B_i <= B⊥_i`, `B_i = B⊥_i` for `i < w` and the
//! quaternary MacWilliams relation `B_i = (1/S) sum_t B⊥_t P_i(t)` with
//! `S = K 2^n`. The relation is bilinear in `(K, B⊥)`, so the LP works with
//! `A_i = K^2 B_i` and `A⊥_i = K B⊥_i`, which makes every constraint linear
//! for a fixed `K`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::kraw::{Alphabet, KrawTable};
use crate::scalar::{big, pow_rational, ExactScalar};
use crate::simplex::{Constraint, Feasibility, LinearSystem, Relation};
use crate::{Error, Result};

/// `B_i = (1/S) sum_t B⊥_t P_i(t)` with `S = sum_t B⊥_t` (quaternary `P`).
pub fn macwilliams_image(bperp: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    if bperp.is_empty() {
        return Err(Error::InvalidParams("enumerator must have n + 1 >= 1 entries"));
    }
    let n = bperp.len() - 1;
    let s: ExactScalar = bperp.iter().sum();
    if s.is_zero() {
        return Err(Error::InvalidParams("enumerator sums to zero"));
    }
    let table = KrawTable::new(Alphabet::Quaternary, n);
    Ok((0..=n)
        .map(|i| {
            let acc: ExactScalar = table
                .row(i)
                .iter()
                .zip(bperp)
                .map(|(p, b)| b * big(p.clone()))
                .sum();
            acc / &s
        })
        .collect())
}

/// A pair of quantum enumerators `(B, B⊥)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnumeratorPair {
    b: Vec<ExactScalar>,
    bperp: Vec<ExactScalar>,
}

impl EnumeratorPair {
    /// Validates `B_0 = B⊥_0 = 1` and `0 <= B_i <= B⊥_i`.
    pub fn new(b: Vec<ExactScalar>, bperp: Vec<ExactScalar>) -> Result<Self> {
        if b.is_empty() || b.len() != bperp.len() {
            return Err(Error::LengthMismatch {
                expected: bperp.len().max(1),
                got: b.len(),
            });
        }
        if !b[0].is_one() || !bperp[0].is_one() {
            return Err(Error::InvalidParams("B_0 and B⊥_0 must equal 1"));
        }
        if b.iter().zip(&bperp).any(|(x, y)| x.is_negative() || x > y) {
            return Err(Error::InvalidParams("need 0 <= B_i <= B⊥_i"));
        }
        Ok(EnumeratorPair { b, bperp })
    }

    pub fn n(&self) -> usize {
        self.b.len() - 1
    }

    pub fn b(&self) -> &[ExactScalar] {
        &self.b
    }

    pub fn bperp(&self) -> &[ExactScalar] {
        &self.bperp
    }

    /// `S = sum_j B⊥_j`.
    pub fn s(&self) -> ExactScalar {
        self.bperp.iter().sum()
    }
}

/// Largest `w` with `B_i = B⊥_i` for all `i <= w - 1`; `n + 1` when the
/// enumerators agree everywhere.
pub fn min_distance_of_pair(pair: &EnumeratorPair) -> usize {
    pair.b
        .iter()
        .zip(&pair.bperp)
        .position(|(x, y)| x != y)
        .unwrap_or(pair.n() + 1)
}

/// `((n, K, w))` with `K >= 1` and `1 <= w <= n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: u64,
    pub w: usize,
}

impl CodeParams {
    pub fn new(n: usize, k: u64, w: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("length must be at least 1"));
        }
        if k == 0 {
            return Err(Error::InvalidParams("dimension K must be at least 1"));
        }
        if w == 0 || w > n + 1 {
            return Err(Error::InvalidParams("need 1 <= w <= n + 1"));
        }
        Ok(CodeParams { n, k, w })
    }

    /// `S = K 2^n`.
    pub fn s(&self) -> BigInt {
        BigInt::from(self.k) << self.n
    }
}

/// The enumerator LP for fixed `(n, K, w)`.
///
/// Variables `0..=n` are `A_0..A_n`, variables `n+1..=2n+1` are
/// `A⊥_0..A⊥_n`; all are non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct EnumLp {
    pub params: CodeParams,
    pub system: LinearSystem,
}

impl EnumLp {
    pub fn new(params: CodeParams) -> Self {
        let n = params.n;
        let k = big(BigInt::from(params.k));
        let a = |i: usize| i;
        let aperp = |i: usize| n + 1 + i;
        let table = KrawTable::new(Alphabet::Quaternary, n);
        let scale = pow_rational(2, -(n as i64));
        let mut system = LinearSystem::new(2 * (n + 1));

        for i in 0..=n {
            let mut coeffs = Vec::with_capacity(n + 2);
            coeffs.push((a(i), ExactScalar::one()));
            for t in 0..=n {
                let p = table.get(i, t);
                if !p.is_zero() {
                    coeffs.push((aperp(t), -(big(p.clone()) * &scale)));
                }
            }
            system.push(Constraint::new(coeffs, Relation::Eq, ExactScalar::zero()));
        }
        system.push(Constraint::new(
            alloc::vec![(a(0), ExactScalar::one())],
            Relation::Eq,
            &k * &k,
        ));
        system.push(Constraint::new(
            alloc::vec![(aperp(0), ExactScalar::one())],
            Relation::Eq,
            k.clone(),
        ));
        for i in 0..=n {
            let rel = if i < params.w {
                Relation::Eq
            } else {
                Relation::Le
            };
            system.push(Constraint::new(
                alloc::vec![(a(i), ExactScalar::one()), (aperp(i), -k.clone())],
                rel,
                ExactScalar::zero(),
            ));
        }
        EnumLp { params, system }
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.params.n;
        match self.system.solve() {
            Feasibility::Feasible(x) => {
                let (a, aperp) = x.split_at(n + 1);
                LpOutcome::Feasible(Witness {
                    a: a.to_vec(),
                    aperp: aperp.to_vec(),
                })
            }
            Feasibility::Infeasible(y) => LpOutcome::Infeasible(FarkasCertificate { multipliers: y }),
        }
    }

    pub fn check_witness(&self, w: &Witness) -> bool {
        let mut x = w.a.clone();
        x.extend(w.aperp.iter().cloned());
        self.system.check_point(&x)
    }

    pub fn check_infeasibility(&self, cert: &FarkasCertificate) -> bool {
        self.system.check_farkas(&cert.multipliers)
    }
}

/// Feasible unnormalized enumerators `A = K^2 B`, `A⊥ = K B⊥`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub a: Vec<ExactScalar>,
    pub aperp: Vec<ExactScalar>,
}

impl Witness {
    /// Normalized enumerators `(B, B⊥)` for code dimension `k`.
    pub fn enumerators(&self, k: u64) -> (Vec<ExactScalar>, Vec<ExactScalar>) {
        let k = big(BigInt::from(k));
        let kk = &k * &k;
        (
            self.a.iter().map(|v| v / &kk).collect(),
            self.aperp.iter().map(|v| v / &k).collect(),
        )
    }
}

/// One multiplier per LP constraint, in [`EnumLp::system`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<ExactScalar>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Feasible(Witness),
    Infeasible(FarkasCertificate),
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

pub fn lp_feasible(n: usize, k: u64, w: usize) -> Result<LpOutcome> {
    Ok(EnumLp::new(CodeParams::new(n, k, w)?).solve())
}

/// `floor(2^(n - 2w + 2))`, the Singleton cap on `K`; zero when negative
/// exponents push it below one.
pub fn singleton_cap(n: usize, w: usize) -> u64 {
    let e = n as i64 - 2 * w as i64 + 2;
    if e < 0 {
        0
    } else if e >= 64 {
        u64::MAX
    } else {
        1u64 << e
    }
}

/// Result of [`lp_max_k`]: the largest feasible `K`, with its witness.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxK {
    pub k: u64,
    pub witness: Option<Witness>,
    /// Number of LP instances solved during the scan.
    pub solves: usize,
}

/// Largest integer `K <= 2^(n-2w+2)` for which the LP is feasible, by an
/// exhaustive downward scan; `0` if none.
pub fn lp_max_k(n: usize, w: usize) -> Result<MaxK> {
    CodeParams::new(n, 1, w)?;
    if n > 24 {
        return Err(Error::InvalidParams("downward K scan limited to n <= 24"));
    }
    let cap = singleton_cap(n, w);
    let mut solves = 0;
    for k in (1..=cap).rev() {
        solves += 1;
        if let LpOutcome::Feasible(wit) = lp_feasible(n, k, w)? {
            return Ok(MaxK {
                k,
                witness: Some(wit),
                solves,
            });
        }
    }
    Ok(MaxK {
        k: 0,
        witness: None,
        solves,
    })
}
