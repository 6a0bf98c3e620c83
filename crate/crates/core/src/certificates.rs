//! Dual polynomial certificates.
//!
//! A certificate is a polynomial `f = sum_i f_i P_i` with `f_i >= 0`,
//! `f(x) > 0` for `x < w` and `f(x) <= 0` for `x >= w`. Any such `f` bounds
//! `S <= max_{j<w} f(j)/f_j`; in the quaternary setting `K = S / 2^n`.
//! [`verify`] re-derives the point values from the coefficients and checks
//! every condition exactly, so a certificate never needs to be trusted.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::kraw::{first_root_bracket, kraw_at, kraw_row_at, linearize_product, Alphabet, KrawTable};
use crate::scalar::{big, choose, int, pow_int, pow_rational, ExactScalar};
use crate::{Error, Result, SignCondition};

/// What the bound of a certificate limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundOn {
    /// Code dimension `K` (quaternary certificates).
    K,
    /// `S = sum_j B⊥_j` (binary certificates).
    S,
}

impl BoundOn {
    pub fn for_alphabet(alphabet: Alphabet) -> Self {
        match alphabet {
            Alphabet::Quaternary => BoundOn::K,
            Alphabet::Binary => BoundOn::S,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundOn::K => "K",
            BoundOn::S => "S",
        }
    }
}

/// A verified dual certificate. Only [`verify`] constructs one.
#[derive(Debug, Clone, PartialEq)]
pub struct DualCertificate {
    pub alphabet: Alphabet,
    pub n: usize,
    pub w: usize,
    pub coeffs: Vec<ExactScalar>,
    pub values: Vec<ExactScalar>,
    pub bound: ExactScalar,
    pub bound_on: BoundOn,
    pub argmax_j: usize,
}

/// Checks every certificate condition and returns the verified certificate.
///
/// Conditions are checked in order: coefficient signs, then `f(x) > 0`
/// below `w`, then `f(x) <= 0` from `w` on (reporting the largest violating
/// `x`), then non-zero `f_j` for `j < w`.
pub fn verify(
    alphabet: Alphabet,
    n: usize,
    w: usize,
    coeffs: Vec<ExactScalar>,
) -> Result<DualCertificate> {
    if w == 0 || w > n + 1 {
        return Err(Error::InvalidParams("need 1 <= w <= n + 1"));
    }
    let table = KrawTable::new(alphabet, n);
    let values = table.evaluate(&coeffs)?;
    if let Some(index) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(Error::SignViolation {
            condition: SignCondition::NegativeCoefficient,
            index,
        });
    }
    if let Some(index) = values[..w].iter().position(|v| !v.is_positive()) {
        return Err(Error::SignViolation {
            condition: SignCondition::NotPositiveBelowDistance,
            index,
        });
    }
    if let Some(index) = (w..=n).rev().find(|&x| values[x].is_positive()) {
        return Err(Error::SignViolation {
            condition: SignCondition::PositiveFromDistance,
            index,
        });
    }
    if let Some(index) = coeffs[..w].iter().position(|c| c.is_zero()) {
        return Err(Error::ZeroDenominator { index });
    }
    let (argmax_j, ratio) = (0..w)
        .map(|j| (j, &values[j] / &coeffs[j]))
        .fold(None::<(usize, ExactScalar)>, |best, (j, r)| match best {
            Some((bj, br)) if br >= r => Some((bj, br)),
            _ => Some((j, r)),
        })
        .expect("w >= 1");
    let bound = match alphabet {
        Alphabet::Quaternary => ratio * pow_rational(2, -(n as i64)),
        Alphabet::Binary => ratio,
    };
    Ok(DualCertificate {
        alphabet,
        n,
        w,
        coeffs,
        values,
        bound,
        bound_on: BoundOn::for_alphabet(alphabet),
        argmax_j,
    })
}

/// The bound proved by `coeffs`, or the violated condition.
pub fn check_certificate(
    alphabet: Alphabet,
    n: usize,
    w: usize,
    coeffs: Vec<ExactScalar>,
) -> Result<ExactScalar> {
    verify(alphabet, n, w, coeffs).map(|c| c.bound)
}

/// Singleton-type certificate `f_x = C(n-x, w-1) / C(n, w-1)`, proving
/// `K <= 2^(n-2w+2)` for `1 <= w <= (n+2)/2`.
pub fn singleton_certificate(n: usize, w: usize) -> Result<DualCertificate> {
    if w == 0 || 2 * w > n + 2 {
        return Err(Error::InvalidParams("Singleton certificate needs 1 <= w <= (n+2)/2"));
    }
    let denom = big(choose(n, w - 1));
    let coeffs = (0..=n).map(|x| big(choose(n - x, w - 1)) / &denom).collect();
    verify(Alphabet::Quaternary, n, w, coeffs)
}

/// Point values of the Singleton polynomial,
/// `4^(n-w+1) C(n-x, n-w+1) / C(n, w-1)`.
pub fn singleton_values(n: usize, w: usize) -> Vec<ExactScalar> {
    let denom = big(choose(n, w - 1));
    let lead = big(pow_int(4, n + 1 - w));
    (0..=n)
        .map(|x| &lead * big(choose(n - x, n + 1 - w)) / &denom)
        .collect()
}

/// Hamming-type certificate `f_i = P_e(i)^2`, `e = (w-1)/2`, for odd `w >= 3`.
///
/// Fails with [`Error::ZeroDenominator`] when `P_e` vanishes at an integer
/// below `w`.
pub fn hamming_certificate(n: usize, w: usize) -> Result<DualCertificate> {
    if w < 3 || w % 2 == 0 {
        return Err(Error::InvalidParams("Hamming certificate needs odd w >= 3"));
    }
    if w > n + 1 {
        return Err(Error::InvalidParams("need w <= n + 1"));
    }
    let e = (w - 1) / 2;
    let table = KrawTable::new(Alphabet::Quaternary, n);
    let coeffs = table
        .row(e)
        .iter()
        .map(|p| big(p * p))
        .collect();
    verify(Alphabet::Quaternary, n, w, coeffs)
}

/// Point values of the Hamming polynomial from the linearization of
/// `P_e^2`: `f(x) = 4^n c_x`.
pub fn hamming_values(n: usize, w: usize) -> Result<Vec<ExactScalar>> {
    let e = (w - 1) / 2;
    let four_n = pow_int(4, n);
    Ok(linearize_product(Alphabet::Quaternary, n, e, e)?
        .into_iter()
        .map(|c| big(c * &four_n))
        .collect())
}

/// Kernel degree and evaluation point of a first-LP certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstLpParams {
    pub n: usize,
    pub w: usize,
    pub t: usize,
    pub a: ExactScalar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FirstLpCertificate {
    pub certificate: DualCertificate,
    pub params: FirstLpParams,
    /// The degree suggested by the asymptotic prescription, before the
    /// search over neighbouring degrees.
    pub t_prescribed: usize,
}

/// Candidate evaluation points tried per kernel degree.
pub const FIRST_LP_A_CANDIDATES: usize = 9;

/// `round(n (1/2 - sqrt(delta (1 - delta))))` with `delta = w / n`.
pub fn prescribed_degree(n: usize, w: usize) -> usize {
    let delta = w as f64 / n as f64;
    let tau = 0.5 - libm::sqrt((delta * (1.0 - delta)).max(0.0));
    let t = libm::round(n as f64 * tau);
    (t.max(0.0) as usize).min(n.saturating_sub(1))
}

/// Binary first-LP certificate
/// `f(x) = (P_{t+1}(x) P_t(a) - P_t(x) P_{t+1}(a))^2 / (a - x)`.
///
/// `f(x) <= 0` beyond `a` and `f(x) > 0` below it, so `a` must lie in
/// `(w-1, w)`; coefficients are non-negative when `a` lies between the
/// first roots of `P_{t+1}` and `P_t`. Degrees are tried outward from the
/// asymptotic prescription; for each, rational points of the admissible
/// interval are tried (the root of `P_t + P_{t+1}` first) and every
/// candidate is verified exactly. The smallest verified bound is returned.
pub fn first_lp_binary_certificate(n: usize, w: usize) -> Result<FirstLpCertificate> {
    if n == 0 || w == 0 || w > n {
        return Err(Error::InvalidParams("first-LP certificate needs 1 <= w <= n"));
    }
    let t0 = prescribed_degree(n, w);
    let mut degrees: Vec<usize> = (0..n).collect();
    degrees.sort_by_key(|&t| (t.abs_diff(t0), t));

    let table = KrawTable::new(Alphabet::Binary, n);
    let mut best: Option<FirstLpCertificate> = None;
    for t in degrees {
        let Some((lo, hi)) = admissible_interval(n, w, t)? else {
            continue;
        };
        for a in candidate_points(n, t, &lo, &hi)? {
            let Ok(cert) = first_lp_at(&table, w, t, &a) else {
                continue;
            };
            if best
                .as_ref()
                .map_or(true, |b| cert.bound < b.certificate.bound)
            {
                best = Some(FirstLpCertificate {
                    certificate: cert,
                    params: FirstLpParams { n, w, t, a },
                    t_prescribed: t0,
                });
            }
        }
    }
    best.ok_or(Error::NoValidA)
}

/// Open interval `(max(w-1, x1(t+1)), min(w, x1(t)))` using the outer
/// bracket ends so every point inside is strictly between the roots.
fn admissible_interval(
    n: usize,
    w: usize,
    t: usize,
) -> Result<Option<(ExactScalar, ExactScalar)>> {
    let (_, root_next_hi) = first_root_bracket(Alphabet::Binary, n, t + 1)?;
    let mut lo = int(w as i64 - 1);
    let mut hi = int(w as i64);
    if root_next_hi > lo {
        lo = root_next_hi;
    }
    if t > 0 {
        let (root_lo, _) = first_root_bracket(Alphabet::Binary, n, t)?;
        if root_lo < hi {
            hi = root_lo;
        }
    }
    Ok((lo < hi).then_some((lo, hi)))
}

fn candidate_points(
    n: usize,
    t: usize,
    lo: &ExactScalar,
    hi: &ExactScalar,
) -> Result<Vec<ExactScalar>> {
    let mut out = Vec::with_capacity(FIRST_LP_A_CANDIDATES);
    if let Some(a) = balance_point(n, t, lo, hi) {
        out.push(a);
    }
    let steps = (FIRST_LP_A_CANDIDATES - out.len() + 1) as i64;
    let width = hi - lo;
    for k in 1..steps {
        out.push(lo + &width * int(k) / int(steps));
    }
    Ok(out)
}

/// Approximate root of `P_t + P_{t+1}` inside `(lo, hi)`, if the sum
/// changes sign there.
fn balance_point(n: usize, t: usize, lo: &ExactScalar, hi: &ExactScalar) -> Option<ExactScalar> {
    let g = |a: &ExactScalar| {
        let row = kraw_row_at(Alphabet::Binary, n, t + 1, a);
        &row[t] + &row[t + 1]
    };
    let (mut l, mut h) = (lo.clone(), hi.clone());
    let gl = g(&l);
    let gh = g(&h);
    if gl.is_zero() || gh.is_zero() || gl.is_positive() == gh.is_positive() {
        return None;
    }
    let width = pow_rational(2, -30);
    while &h - &l > width {
        let mid = (&l + &h) / int(2);
        let gm = g(&mid);
        if gm.is_zero() {
            return Some(mid);
        }
        if gm.is_positive() == gl.is_positive() {
            l = mid;
        } else {
            h = mid;
        }
    }
    Some((l + h) / int(2))
}

/// Builds and verifies the first-LP certificate at a given `(t, a)`.
pub fn first_lp_at(
    table: &KrawTable,
    w: usize,
    t: usize,
    a: &ExactScalar,
) -> Result<DualCertificate> {
    let n = table.n();
    if table.alphabet() != Alphabet::Binary || t >= n {
        return Err(Error::InvalidParams("first-LP kernel needs binary table and t < n"));
    }
    let pt_a = kraw_at(Alphabet::Binary, n, t, a);
    let pt1_a = kraw_at(Alphabet::Binary, n, t + 1, a);
    let values = (0..=n)
        .map(|x| {
            let xa = int(x as i64);
            if &xa == a {
                return Err(Error::InvalidParams("evaluation point must not be an integer"));
            }
            let bracket = big(table.get(t + 1, x).clone()) * &pt_a
                - big(table.get(t, x).clone()) * &pt1_a;
            Ok(&bracket * &bracket / (a - xa))
        })
        .collect::<Result<Vec<_>>>()?;
    let coeffs = table.expand(&values)?.coeffs;
    verify(Alphabet::Binary, n, w, coeffs)
}

/// `floor` of a certificate bound, as an integer dimension cap.
pub fn integer_bound(cert: &DualCertificate) -> BigInt {
    cert.bound.floor().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kraw::expand_in_kraw;
    use crate::scalar::ints;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> ExactScalar {
        ExactScalar::new(n.into(), d.into())
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_certificate(5, 3).unwrap().bound, int(2));
        assert_eq!(singleton_certificate(4, 2).unwrap().bound, int(4));
        for n in 1..8 {
            assert_eq!(singleton_certificate(n, 1).unwrap().bound, int(1 << n));
        }
        assert!(singleton_certificate(5, 4).is_err());
        assert!(singleton_certificate(5, 0).is_err());
    }

    #[test]
    fn singleton_values_match_coefficients() {
        for n in 1..10 {
            for w in 1..=(n + 2) / 2 {
                let c = singleton_certificate(n, w).unwrap();
                assert_eq!(c.values, singleton_values(n, w));
                assert_eq!(c.argmax_j, 0);
            }
        }
    }

    #[test]
    fn singleton_ratio_is_decreasing() {
        for n in 1..16usize {
            for w in 1..=(n + 2) / 2 {
                let vals = singleton_values(n, w);
                let c = singleton_certificate(n, w).unwrap();
                for x in 0..w.saturating_sub(1) {
                    let r0 = &vals[x] / &c.coeffs[x];
                    let r1 = &vals[x + 1] / &c.coeffs[x + 1];
                    let expected = rat((n - x + 1 - w) as i64, (w - x - 1) as i64);
                    assert_eq!(&r0 / &r1, expected);
                    if 2 * w < n + 2 {
                        assert!(expected > int(1));
                    } else {
                        assert_eq!(expected, int(1));
                    }
                }
            }
        }
    }

    #[test]
    fn constant_polynomial_is_rejected() {
        for n in 1..6 {
            let mut coeffs = vec![int(0); n + 1];
            coeffs[0] = int(1);
            for w in 1..=n {
                assert_eq!(
                    check_certificate(Alphabet::Quaternary, n, w, coeffs.clone()),
                    Err(Error::SignViolation {
                        condition: SignCondition::PositiveFromDistance,
                        index: n
                    })
                );
            }
        }
    }

    #[test]
    fn hamming_five_three() {
        let c = hamming_certificate(5, 3).unwrap();
        assert_eq!(c.coeffs, ints(&[225, 121, 49, 9, 1, 25]));
        assert_eq!(c.values, ints(&[15360, 2048, 2048, 0, 0, 0]));
        assert_eq!(c.bound, rat(32, 15));
        assert_eq!(c.argmax_j, 0);
        assert_eq!(c.values, hamming_values(5, 3).unwrap());
    }

    #[test]
    fn hamming_values_vanish_beyond_degree() {
        for n in 2..10 {
            for w in (3..=n + 1).step_by(2) {
                let vals = hamming_values(n, w).unwrap();
                for (x, v) in vals.iter().enumerate() {
                    assert!(!v.is_negative());
                    if x >= w {
                        assert!(v.is_zero());
                    }
                }
                // oracle: expand the pointwise square
                let table = KrawTable::new(Alphabet::Quaternary, n);
                let e = (w - 1) / 2;
                let sq: Vec<_> = table.row(e).iter().map(|p| big(p * p)).collect();
                let pts = table.evaluate(&sq).unwrap();
                assert_eq!(pts, vals);
            }
        }
    }

    #[test]
    fn hamming_rejections() {
        assert!(hamming_certificate(5, 4).is_err());
        assert!(hamming_certificate(5, 1).is_err());
        assert!(hamming_certificate(4, 6).is_err());
        // w = n + 1 is admissible; the coefficients P_2(i)^2 have no zero below w.
        assert!(hamming_certificate(4, 5).is_ok());
    }

    #[test]
    fn hamming_seven_three_golden() {
        let c = hamming_certificate(7, 3).unwrap();
        // Recomputed independently: expand P_1^2 and take max f(j)/f_j / 2^7.
        let table = KrawTable::new(Alphabet::Quaternary, 7);
        let sq: Vec<_> = (0..=7).map(|x| table.value(1, x) * table.value(1, x)).collect();
        let lin = expand_in_kraw(Alphabet::Quaternary, 7, &sq).unwrap().coeffs;
        let ratio = (0..3)
            .map(|j| lin[j].clone() * big(pow_int(4, 7)) / &c.coeffs[j])
            .max()
            .unwrap();
        assert_eq!(c.bound, ratio / int(128));
        assert_eq!(c.bound, rat(128, 21));
    }

    #[test]
    fn first_lp_smallest_instance() {
        // n = 1, w = 1 forces t = 0: f(x) = 4(a - x).
        let cert = first_lp_binary_certificate(1, 1).unwrap();
        assert_eq!(cert.params.t, 0);
        let a = &cert.params.a;
        assert!(*a > rat(1, 2) && *a < int(1));
        assert_eq!(cert.certificate.values, vec![int(4) * a, int(4) * (a - int(1))]);
        assert_eq!(cert.certificate.bound_on, BoundOn::S);
    }

    #[test]
    fn first_lp_twenty_four() {
        let c = first_lp_binary_certificate(20, 4).unwrap();
        let again = verify(Alphabet::Binary, 20, 4, c.certificate.coeffs.clone()).unwrap();
        assert_eq!(again.bound, c.certificate.bound);
        let a = &c.params.a;
        assert!(*a > int(3) && *a < int(4));
    }

    #[test]
    fn first_lp_rejects_bad_params() {
        assert!(first_lp_binary_certificate(5, 0).is_err());
        assert!(first_lp_binary_certificate(5, 6).is_err());
        let table = KrawTable::new(Alphabet::Binary, 4);
        assert!(first_lp_at(&table, 2, 1, &int(1)).is_err());
    }
}
