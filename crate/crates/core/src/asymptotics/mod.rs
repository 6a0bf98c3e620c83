//! Asymptotic exponent curves in double precision.
//!
//! All logarithms are base 2. Exponents are `lim (1/n) log2 K` (or
//! `log2 S`) as functions of the relative distance `delta = w / n`.
//! Nothing here is a proof; the exact modules carry the certificates.

mod quadrature;

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use libm::{log2, sqrt};

pub use quadrature::{bisect, integrate};

use crate::kraw::Alphabet;
use crate::{Error, Result};

/// Absolute tolerance for every quadrature in this module.
pub const QUAD_TOL: f64 = 1e-12;

/// Upper end of the proven range of the binary first-LP exponent.
pub const LP1_VALIDITY_LIMIT: f64 = 0.1865;

const LOG2_3: f64 = 1.584_962_500_721_156_3;

fn h2(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        0.0
    } else {
        -x * log2(x) - (1.0 - x) * log2(1.0 - x)
    }
}

/// Binary entropy `H(x) = -x log x - (1-x) log(1-x)`, `H(0) = H(1) = 0`.
pub fn entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain("entropy needs 0 <= x <= 1"));
    }
    Ok(h2(x))
}

/// Gilbert–Varshamov existence exponent `1 - delta log 3 - H(delta)`.
pub fn gv_exponent(delta: f64) -> f64 {
    1.0 - delta * LOG2_3 - h2(delta)
}

/// Singleton exponent `1 - 2 delta`.
pub fn singleton_exponent(delta: f64) -> f64 {
    1.0 - 2.0 * delta
}

/// Asymptotic relative position of the smallest root of the quaternary
/// `P_e`, `e = tau n`: `3/4 - tau/2 - sqrt(3 tau (1 - tau))/2`.
pub fn xi_e(tau: f64) -> f64 {
    0.75 - 0.5 * tau - 0.5 * sqrt((3.0 * tau * (1.0 - tau)).max(0.0))
}

/// Asymptotic relative position of the smallest root of the binary `P_t`,
/// `t = tau n`: `1/2 - sqrt(tau (1 - tau))`.
pub fn binary_root_position(tau: f64) -> f64 {
    0.5 - sqrt((tau * (1.0 - tau)).max(0.0))
}

/// Named exponent curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveId {
    Hamming,
    Gv,
    Singleton,
    Lp1Binary,
}

impl CurveId {
    pub const ALL: [CurveId; 4] = [
        CurveId::Hamming,
        CurveId::Gv,
        CurveId::Singleton,
        CurveId::Lp1Binary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CurveId::Hamming => "hamming",
            CurveId::Gv => "gv",
            CurveId::Singleton => "singleton",
            CurveId::Lp1Binary => "lp1_binary",
        }
    }

    /// Admissible `delta` range.
    pub fn domain(self) -> (f64, f64) {
        match self {
            CurveId::Hamming => (0.0, 1.0),
            CurveId::Gv => (0.0, 0.75),
            CurveId::Singleton | CurveId::Lp1Binary => (0.0, 0.5),
        }
    }

    pub fn point(self, delta: f64) -> Result<CurvePoint> {
        let (lo, hi) = self.domain();
        if !(lo..=hi).contains(&delta) {
            return Err(Error::Domain("delta outside the curve's domain"));
        }
        Ok(match self {
            CurveId::Hamming => hamming_exponent(delta),
            CurveId::Gv => CurvePoint {
                delta,
                exponent: gv_exponent(delta),
                curve: self,
                valid: true,
            },
            CurveId::Singleton => CurvePoint {
                delta,
                exponent: singleton_exponent(delta),
                curve: self,
                valid: true,
            },
            CurveId::Lp1Binary => lp1_exponent_binary(delta),
        })
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CurveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CurveId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCurve(s.to_string()))
    }
}

/// One sampled point of an exponent curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub delta: f64,
    pub exponent: f64,
    pub curve: CurveId,
    /// Whether `delta` lies in the range where the bound is proven.
    pub valid: bool,
}

/// Hamming-type exponent `1 - (delta/2) log 3 - H(delta/2)`, valid while
/// `delta <= xi_e(delta/2)`.
pub fn hamming_exponent(delta: f64) -> CurvePoint {
    let tau = 0.5 * delta;
    CurvePoint {
        delta,
        exponent: 1.0 - tau * LOG2_3 - h2(tau),
        curve: CurveId::Hamming,
        valid: delta <= xi_e(tau),
    }
}

/// Binary first-LP exponent `H(1/2 - sqrt(delta (1 - delta)))`, proven for
/// `delta <= 0.1865`.
pub fn lp1_exponent_binary(delta: f64) -> CurvePoint {
    CurvePoint {
        delta,
        exponent: h2(binary_root_position(delta)),
        curve: CurveId::Lp1Binary,
        valid: delta <= LP1_VALIDITY_LIMIT,
    }
}

/// Samples `curve` at `delta_min + i * step` up to `delta_max`
/// (inclusive, with a `1e-9` relative slack for the last step).
pub fn tabulate_curve(
    curve: CurveId,
    delta_min: f64,
    delta_max: f64,
    step: f64,
) -> Result<Vec<CurvePoint>> {
    if !(step > 0.0) || !(delta_max >= delta_min) {
        return Err(Error::EmptyRange);
    }
    let count = libm::floor((delta_max - delta_min) / step + 1e-9) as usize + 1;
    (0..count)
        .map(|i| curve.point((delta_min + i as f64 * step).min(delta_max.max(delta_min))))
        .collect()
}

// ---------------------------------------------------------------------------
// Krawtchouk exponents
// ---------------------------------------------------------------------------

fn quaternary_log_ratio(tau: f64, z: f64) -> Option<f64> {
    let c = 3.0 - 2.0 * z - 4.0 * tau;
    let disc = c * c - 12.0 * z * (1.0 - z);
    let disc = if disc < 0.0 && disc > -1e-12 { 0.0 } else { disc };
    if disc < 0.0 {
        return None;
    }
    let v = (c + sqrt(disc)) / (6.0 * (1.0 - z));
    (v > 0.0).then(|| log2(v))
}

fn binary_log_ratio(tau: f64, z: f64) -> Option<f64> {
    let c = 1.0 - 2.0 * tau;
    let disc = c * c - 4.0 * z * (1.0 - z);
    let disc = if disc < 0.0 && disc > -1e-12 { 0.0 } else { disc };
    if disc < 0.0 {
        return None;
    }
    let v = (c + sqrt(disc)) / (2.0 - 2.0 * z);
    (v > 0.0).then(|| log2(v))
}

/// `int_0^xi` of the log-ratio integrand for the given alphabet.
pub fn kraw_exponent_integral(alphabet: Alphabet, tau: f64, xi: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&xi) || !(0.0..=1.0).contains(&tau) {
        return Err(Error::Domain("need 0 <= xi < 1 and 0 <= tau <= 1"));
    }
    let limit = match alphabet {
        Alphabet::Quaternary => xi_e(tau),
        Alphabet::Binary => binary_root_position(tau),
    };
    if xi > limit + 1e-12 {
        return Err(Error::Domain("xi beyond the first-root region"));
    }
    let g = |z: f64| match alphabet {
        Alphabet::Quaternary => quaternary_log_ratio(tau, z),
        Alphabet::Binary => binary_log_ratio(tau, z),
    };
    integrate(|z| g(z).unwrap_or(f64::NAN), 0.0, xi, QUAD_TOL)
}

/// Limit of `(1/n) log2 P_e(x)` with `e = tau n`, `x = xi n`, below the
/// first root: `H(tau) + tau log2(q-1) + int_0^xi log(ratio) dz`.
pub fn kalai_log_kraw(alphabet: Alphabet, tau: f64, xi: f64) -> Result<f64> {
    let lead = match alphabet {
        Alphabet::Quaternary => h2(tau) + tau * LOG2_3,
        Alphabet::Binary => h2(tau),
    };
    Ok(lead + kraw_exponent_integral(alphabet, tau, xi)?)
}

/// Closed-form antiderivative of the quaternary integrand, with
/// `a = 3 - 4 tau`, `c = a - 2z`, `t = sqrt(c^2 - 12 z (1 - z))`.
///
/// The constant `log(a - 2) - log 2` is taken as `log|a - 2| - 1`; it is
/// undefined at `tau = 1/4` and cancels in [`closed_form_integral`].
pub fn antiderivative_closed_form(tau: f64, z: f64) -> Result<f64> {
    let a = 3.0 - 4.0 * tau;
    if (a - 2.0).abs() < f64::EPSILON {
        return Err(Error::Domain("constant term undefined at tau = 1/4"));
    }
    Ok(antiderivative_variable(tau, z)? + log2((a - 2.0).abs()) - 1.0)
}

fn antiderivative_variable(tau: f64, z: f64) -> Result<f64> {
    let a = 3.0 - 4.0 * tau;
    let c = a - 2.0 * z;
    let disc = c * c - 12.0 * z * (1.0 - z);
    let disc = if disc < 0.0 && disc > -1e-12 { 0.0 } else { disc };
    if disc < 0.0 || !(0.0..1.0).contains(&z) {
        return Err(Error::Domain("z beyond the first-root region"));
    }
    let t = sqrt(disc);
    let last = 6.0 + 2.0 * a - a * a - 10.0 * z + 2.0 * a * z - (a - 2.0) * t;
    let mid = 3.0 + a - 8.0 * z - 2.0 * t;
    if c + t <= 0.0 || mid <= 0.0 || last <= 0.0 {
        return Err(Error::Domain("closed form has a non-positive log argument"));
    }
    let one_minus = if z == 0.0 { 0.0 } else { (1.0 - z) * log2(1.0 - z) };
    Ok(-z * log2(6.0) + one_minus + z * log2(c + t) + 0.25 * (a - 1.0) * log2(mid)
        - 0.5 * log2(last))
}

/// `F(xi) - F(0)` for the closed-form antiderivative.
pub fn closed_form_integral(tau: f64, xi: f64) -> Result<f64> {
    Ok(antiderivative_variable(tau, xi)? - antiderivative_variable(tau, 0.0)?)
}

// ---------------------------------------------------------------------------
// Hamming-type exponent machinery
// ---------------------------------------------------------------------------

/// The `d/dnu` stationarity expression whose root is `alpha(tau, xi)`.
pub fn alpha_residual(tau: f64, xi: f64, nu: f64) -> f64 {
    let p = (2.0 * xi + 2.0 * nu - 2.0 * tau) / xi;
    let r = nu / (1.0 - xi);
    2.0 * log2(1.0 - p) - 2.0 * log2(p) + log2(1.0 - r) - log2(r) + LOG2_3
}

/// Search interval `[max(0, tau - xi), tau - xi/2]` for `alpha`.
pub fn alpha_interval(tau: f64, xi: f64) -> (f64, f64) {
    ((tau - xi).max(0.0), tau - 0.5 * xi)
}

/// Sample count of the uniqueness scan in [`alpha_root`].
pub const ALPHA_SCAN_POINTS: usize = 1000;

/// The unique root of [`alpha_residual`] on [`alpha_interval`].
///
/// The expression tends to `+inf` at the lower end and `-inf` at the upper
/// end; interior samples must show exactly one sign change.
pub fn alpha_root(tau: f64, xi: f64) -> Result<f64> {
    if !(xi > 0.0 && xi < 1.0 && tau > 0.0) {
        return Err(Error::Domain("alpha needs 0 < xi < 1 and tau > 0"));
    }
    let (lo, hi) = alpha_interval(tau, xi);
    if !(hi > lo) {
        return Err(Error::Domain("empty alpha interval"));
    }
    let g = |nu: f64| alpha_residual(tau, xi, nu);
    let width = hi - lo;
    let mut changes = 0;
    let mut bracket = (lo, hi);
    let mut prev = (lo, 1.0f64);
    for k in 0..=ALPHA_SCAN_POINTS {
        let (nu, v) = if k == ALPHA_SCAN_POINTS {
            (hi, -1.0)
        } else {
            let nu = lo + width * (k as f64 + 0.5) / ALPHA_SCAN_POINTS as f64;
            (nu, g(nu))
        };
        if v.is_nan() {
            return Err(Error::Domain("alpha residual is not finite"));
        }
        if v != 0.0 && (v > 0.0) != (prev.1 > 0.0) {
            changes += 1;
            bracket = (prev.0, nu);
        }
        if v != 0.0 {
            prev = (nu, v);
        }
    }
    if changes == 0 {
        return Err(Error::NoSignChange);
    }
    if changes > 1 {
        return Err(Error::MultipleRoots(changes));
    }
    let eval = |nu: f64| {
        if nu <= lo {
            f64::INFINITY
        } else if nu >= hi {
            f64::NEG_INFINITY
        } else {
            g(nu)
        }
    };
    let root = bisect(eval, bracket.0, bracket.1)?;
    if g(root).abs() < 1e-10 {
        Ok(root)
    } else {
        Err(Error::Domain("alpha residual above tolerance"))
    }
}

/// Variants of the Hamming-scan objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HammingObjective {
    /// Leading term `1 + xi`, integral counted once.
    AsPrinted,
    /// Leading term `1 + 2 tau - 2 alpha - xi` (the power-of-two factor
    /// taken on its own, without the central binomial).
    PowerOfTwoTerm,
    /// Leading term `1 + xi`, integral counted twice (`f_x = P_e(x)^2`).
    SquaredIntegral,
}

impl HammingObjective {
    pub const ALL: [HammingObjective; 3] = [
        HammingObjective::AsPrinted,
        HammingObjective::PowerOfTwoTerm,
        HammingObjective::SquaredIntegral,
    ];
}

/// The maximised expression of the Hamming-type bound at `xi`, with
/// `tau = delta / 2`.
pub fn hamming_objective(variant: HammingObjective, delta: f64, xi: f64) -> Result<f64> {
    let tau = 0.5 * delta;
    let base = -2.0 * tau * LOG2_3 - 2.0 * h2(tau);
    if xi == 0.0 {
        // alpha(tau, 0) = tau and every xi-weighted term vanishes.
        return Ok(1.0 + h2(tau) + tau * LOG2_3 + base);
    }
    let (lo, hi) = alpha_interval(tau, xi);
    let alpha = if hi - lo <= 1e-15 {
        lo
    } else {
        alpha_root(tau, xi)?
    };
    let p = (2.0 * xi + 2.0 * alpha - 2.0 * tau) / xi;
    let spread = xi * h2(p) + (1.0 - xi) * h2(alpha / (1.0 - xi)) + alpha * LOG2_3;
    let integral = kraw_exponent_integral(Alphabet::Quaternary, tau, xi)?;
    Ok(match variant {
        HammingObjective::AsPrinted => 1.0 + xi + spread + base - integral,
        HammingObjective::PowerOfTwoTerm => {
            1.0 + 2.0 * tau - 2.0 * alpha - xi + spread + base - integral
        }
        HammingObjective::SquaredIntegral => 1.0 + xi + spread + base - 2.0 * integral,
    })
}

/// Maximiser of a one-dimensional objective found by grid refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanResult {
    pub argmax_xi: f64,
    pub max_value: f64,
    /// Upper end actually scanned.
    pub xi_max: f64,
    /// The scan stopped short of the requested range because the
    /// exponent estimate is undefined beyond `xi_max`.
    pub truncated: bool,
}

/// Final grid spacing of [`maximize_on`].
pub const SCAN_RESOLUTION: f64 = 1e-4;

fn maximize_on<F: Fn(f64) -> Result<f64>>(f: F, lo: f64, hi: f64) -> Result<(f64, f64)> {
    const COARSE: usize = 200;
    const FINE: usize = 20;
    let mut best = (lo, f(lo)?);
    let mut step = (hi - lo) / COARSE as f64;
    for k in 1..=COARSE {
        let x = if k == COARSE { hi } else { lo + k as f64 * step };
        let v = f(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    while step > SCAN_RESOLUTION {
        let a = (best.0 - step).max(lo);
        let b = (best.0 + step).min(hi);
        let fine = (b - a) / FINE as f64;
        for k in 0..=FINE {
            let x = a + k as f64 * fine;
            let v = f(x)?;
            if v > best.1 {
                best = (x, v);
            }
        }
        step = fine;
    }
    Ok(best)
}

/// Maximises the Hamming-type objective over `0 <= xi <= delta` (truncated
/// at `xi_e(delta/2)` where the Krawtchouk estimate ends).
pub fn hamming_exponent_scan(variant: HammingObjective, delta: f64) -> Result<ScanResult> {
    if !(delta > 0.0 && delta <= 0.5) {
        return Err(Error::Domain("scan needs 0 < delta <= 1/2"));
    }
    let limit = xi_e(0.5 * delta);
    let xi_max = delta.min(limit);
    let (argmax_xi, max_value) =
        maximize_on(|xi| hamming_objective(variant, delta, xi), 0.0, xi_max)?;
    Ok(ScanResult {
        argmax_xi,
        max_value,
        xi_max,
        truncated: xi_max < delta,
    })
}

/// Exponent of `f(x)/f_x` for the binary first-LP kernel at
/// `t = tau n`, `x = xi n`:
/// `2H(tau) + 2 int_0^xi log(ratio) - (1-xi) H((2tau-xi)/(2-2xi)) - xi`.
pub fn binary_lp_objective(tau: f64, xi: f64) -> Result<f64> {
    let integral = kraw_exponent_integral(Alphabet::Binary, tau, xi)?;
    let inner = (2.0 * tau - xi) / (2.0 - 2.0 * xi);
    if !(0.0..=1.0).contains(&inner) {
        return Err(Error::Domain("xi beyond 2 tau"));
    }
    Ok(2.0 * h2(tau) + 2.0 * integral - (1.0 - xi) * h2(inner) - xi)
}

/// Maximises [`binary_lp_objective`] over `0 <= xi <= 1/2 - sqrt(tau(1-tau))`
/// (truncated at `2 tau` when that is smaller).
pub fn binary_lp_exponent_scan(tau: f64) -> Result<ScanResult> {
    if !(tau > 0.0 && tau < 0.5) {
        return Err(Error::Domain("scan needs 0 < tau < 1/2"));
    }
    let root = binary_root_position(tau);
    let xi_max = root.min(2.0 * tau);
    let (argmax_xi, max_value) = maximize_on(|xi| binary_lp_objective(tau, xi), 0.0, xi_max)?;
    Ok(ScanResult {
        argmax_xi,
        max_value,
        xi_max,
        truncated: xi_max < root,
    })
}

// ---------------------------------------------------------------------------
// Landmarks
// ---------------------------------------------------------------------------

/// Fixed point `delta = xi_e(delta/2)`: the end of the proven Hamming range.
pub fn hamming_validity_limit() -> Result<f64> {
    bisect(|d| d - xi_e(0.5 * d), 0.0, 0.75)
}

/// Zero of the Hamming exponent.
pub fn hamming_zero() -> Result<f64> {
    bisect(|d| hamming_exponent(d).exponent, 0.0, 1.0)
}

/// Zero of the Gilbert–Varshamov exponent.
pub fn gv_zero() -> Result<f64> {
    bisect(gv_exponent, 0.0, 0.5)
}

/// The crossing of the Hamming and Singleton exponent formulas with
/// `delta > 0`. Hamming is the smaller one below it; both formulas are
/// negative there.
pub fn hamming_singleton_crossover() -> Result<f64> {
    bisect(
        |d| hamming_exponent(d).exponent - singleton_exponent(d),
        0.5,
        1.0,
    )
}

/// Argmax below which the binary LP scan counts as maximised at `xi = 0`.
pub const ARGMAX_TOLERANCE: f64 = 1e-3;

/// Smallest `tau` from which [`binary_lp_exponent_scan`] peaks at `xi = 0`,
/// bisected between `lo` (interior peak) and `hi` (peak at zero).
pub fn binary_lp_threshold(mut lo: f64, mut hi: f64) -> Result<f64> {
    let at_zero = |tau: f64| binary_lp_exponent_scan(tau).map(|s| s.argmax_xi <= ARGMAX_TOLERANCE);
    if at_zero(lo)? || !at_zero(hi)? {
        return Err(Error::NoSignChange);
    }
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        if at_zero(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `tau` at which the binary first-LP kernel exponent reaches `delta`:
/// inverse of `delta = 1/2 - sqrt(tau (1 - tau))` on `[0, 1/2]`.
pub fn tau_for_binary_delta(delta: f64) -> f64 {
    let s = 0.5 - delta;
    0.5 * (1.0 - sqrt((1.0 - 4.0 * s * s).max(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy(0.5).unwrap(), 1.0);
        assert_eq!(entropy(0.0).unwrap(), 0.0);
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        assert!((entropy(0.11049).unwrap() - 0.5014).abs() < 1e-4);
        assert!(entropy(1.5).is_err());
        assert!(entropy(-0.1).is_err());
    }

    #[test]
    fn gv_examples() {
        assert_eq!(gv_exponent(0.0), 1.0);
        let z = gv_zero().unwrap();
        assert!((z - 0.1893).abs() < 1e-4, "{z}");
        // 1 - 0.1 log2 3 - H(0.1)
        let expected = 1.0 - 0.1 * LOG2_3 - (-0.1 * log2(0.1) - 0.9 * log2(0.9));
        assert!((gv_exponent(0.1) - expected).abs() < 1e-15);
        assert!((gv_exponent(0.1) - 0.372_508_156_338_603_1).abs() < 1e-12);
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_exponent(0.0), 1.0);
        assert_eq!(singleton_exponent(0.5), 0.0);
        assert_eq!(singleton_exponent(0.25), 0.5);
    }

    #[test]
    fn xi_e_examples() {
        assert_eq!(xi_e(0.0), 0.75);
        assert!((xi_e(0.25) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn hamming_examples() {
        let p = hamming_exponent(0.0);
        assert_eq!(p.exponent, 1.0);
        assert!(p.valid);
        let limit = hamming_validity_limit().unwrap();
        assert!((limit - 0.34).abs() < 0.005);
        assert!(hamming_exponent(limit - 1e-9).valid);
        assert!(!hamming_exponent(limit + 1e-9).valid);
        let z = hamming_zero().unwrap();
        assert!((z - 0.38).abs() < 0.005);
        assert!(!hamming_exponent(z).valid);
    }

    #[test]
    fn lp1_examples() {
        assert!((lp1_exponent_binary(0.1865).exponent - 0.501).abs() < 0.005);
        assert!(lp1_exponent_binary(0.1865).valid);
        assert!(!lp1_exponent_binary(0.19).valid);
        assert_eq!(lp1_exponent_binary(0.0).exponent, 1.0);
        assert!((lp1_exponent_binary(0.1).exponent - 0.721_928_094_887_362_3).abs() < 1e-12);
    }

    #[test]
    fn alpha_examples() {
        let a = alpha_root(0.15, 0.10).unwrap();
        assert!((0.05..=0.10).contains(&a));
        assert!(alpha_residual(0.15, 0.10, a).abs() < 1e-10);
        let a = alpha_root(0.15, 0.05).unwrap();
        assert!((0.10..=0.125).contains(&a));
        // endpoint behaviour: +inf side at the lower limit, -inf side at the upper
        let (lo, hi) = alpha_interval(0.15, 0.10);
        assert!(alpha_residual(0.15, 0.10, lo + 1e-9) > 0.0);
        assert!(alpha_residual(0.15, 0.10, hi - 1e-9) < 0.0);
        assert!(alpha_root(0.15, 0.0).is_err());
        assert!(alpha_root(0.0, 0.1).is_err());
    }

    #[test]
    fn kalai_at_zero_is_leading_term() {
        for tau in [0.05, 0.1, 0.2] {
            let v = kalai_log_kraw(Alphabet::Quaternary, tau, 0.0).unwrap();
            assert!((v - (h2(tau) + tau * LOG2_3)).abs() < 1e-15);
            let v = kalai_log_kraw(Alphabet::Binary, tau, 0.0).unwrap();
            assert!((v - h2(tau)).abs() < 1e-15);
        }
        assert!(kalai_log_kraw(Alphabet::Quaternary, 0.1, 0.6).is_err());
        assert!(kalai_log_kraw(Alphabet::Binary, 0.2, 0.3).is_err());
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let q = kraw_exponent_integral(Alphabet::Quaternary, 0.1, 0.1).unwrap();
        let c = closed_form_integral(0.1, 0.1).unwrap();
        assert!((q - c).abs() < 1e-8);
        assert_eq!(closed_form_integral(0.1, 0.0).unwrap(), 0.0);
        let f = antiderivative_closed_form(0.1, 0.1).unwrap()
            - antiderivative_closed_form(0.1, 0.0).unwrap();
        assert!((f - c).abs() < 1e-12);
        assert!(antiderivative_closed_form(0.25, 0.1).is_err());
    }

    #[test]
    fn curve_ids_parse() {
        for c in CurveId::ALL {
            assert_eq!(c.as_str().parse::<CurveId>().unwrap(), c);
        }
        assert!(matches!("lp2".parse::<CurveId>(), Err(Error::UnknownCurve(_))));
    }

    #[test]
    fn tabulation() {
        let pts = tabulate_curve(CurveId::Hamming, 0.0, 0.34, 0.01).unwrap();
        assert_eq!(pts.len(), 35);
        assert_eq!((pts[0].delta, pts[0].exponent), (0.0, 1.0));
        let lp = tabulate_curve(CurveId::Lp1Binary, 0.0, 0.1865, 0.005).unwrap();
        assert!(lp.windows(2).all(|w| w[1].exponent < w[0].exponent));
        assert!(tabulate_curve(CurveId::Gv, 0.3, 0.1, 0.01).is_err());
        assert!(tabulate_curve(CurveId::Gv, 0.0, 0.1, 0.0).is_err());
        assert!(tabulate_curve(CurveId::Singleton, 0.0, 0.6, 0.1).is_err());
    }

    #[test]
    fn crossover_golden() {
        let x = hamming_singleton_crossover().unwrap();
        assert!((x - 0.805_370_207_187_118_4).abs() < 1e-12, "{x}");
        for k in 1..100 {
            let d = x * k as f64 / 100.0;
            assert!(hamming_exponent(d).exponent < singleton_exponent(d));
        }
        assert!(hamming_exponent(0.9).exponent > singleton_exponent(0.9));
    }
}
