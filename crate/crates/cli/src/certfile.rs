//! The certificate file format.
//!
//! ```json
//! {"q":4,"n":5,"w":3,"coeffs":["225/1","121/1","49/1","9/1","1/1","25/1"],
//!  "bound":"32/15","bound_on":"K","argmax_j":0}
//! ```
//!
//! Only `q`, `n`, `w` and `coeffs` are inputs to verification; `bound`,
//! `bound_on` and `argmax_j` are claims that must match the recomputation.

use std::fmt;

use qbound_core::certificates::{verify, BoundOn, DualCertificate};
use qbound_core::{Alphabet, Error as CoreError, ExactScalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub q: u32,
    pub n: usize,
    pub w: usize,
    pub coeffs: Vec<String>,
    pub bound: String,
    pub bound_on: String,
    pub argmax_j: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum VerifyError {
    Malformed(String),
    Invalid(CoreError),
    ClaimMismatch {
        field: &'static str,
        claimed: String,
        recomputed: String,
    },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Malformed(m) => write!(f, "malformed certificate: {m}"),
            VerifyError::Invalid(e) => write!(f, "certificate rejected: {e}"),
            VerifyError::ClaimMismatch {
                field,
                claimed,
                recomputed,
            } => write!(
                f,
                "certificate rejected: `{field}` claims {claimed}, recomputed {recomputed}"
            ),
        }
    }
}

impl std::error::Error for VerifyError {}

/// `p/q` with `q > 0`, always with an explicit denominator.
pub fn rational_to_string(v: &ExactScalar) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `p/q` (positive `q`) or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<ExactScalar, VerifyError> {
    let bad = || VerifyError::Malformed(format!("`{s}` is not a rational p/q"));
    if let Some((_, q)) = s.split_once('/') {
        if !q.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
    }
    s.parse().map_err(|_| bad())
}

impl CertificateFile {
    pub fn from_certificate(c: &DualCertificate) -> Self {
        CertificateFile {
            q: c.alphabet.q(),
            n: c.n,
            w: c.w,
            coeffs: c.coeffs.iter().map(rational_to_string).collect(),
            bound: rational_to_string(&c.bound),
            bound_on: c.bound_on.as_str().to_string(),
            argmax_j: c.argmax_j,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, VerifyError> {
        serde_json::from_str(s).map_err(|e| VerifyError::Malformed(e.to_string()))
    }

    /// Recomputes the certificate from `q`, `n`, `w` and the coefficients
    /// alone, then checks the recorded claims against it.
    pub fn verify(&self) -> Result<DualCertificate, VerifyError> {
        let alphabet = Alphabet::try_from(self.q).map_err(VerifyError::Invalid)?;
        if self.coeffs.len() != self.n + 1 {
            return Err(VerifyError::Malformed(format!(
                "expected {} coefficients, found {}",
                self.n + 1,
                self.coeffs.len()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        let claimed_bound = parse_rational(&self.bound)?;
        let cert = verify(alphabet, self.n, self.w, coeffs).map_err(VerifyError::Invalid)?;
        if cert.bound != claimed_bound {
            return Err(VerifyError::ClaimMismatch {
                field: "bound",
                claimed: self.bound.clone(),
                recomputed: rational_to_string(&cert.bound),
            });
        }
        if cert.argmax_j != self.argmax_j {
            return Err(VerifyError::ClaimMismatch {
                field: "argmax_j",
                claimed: self.argmax_j.to_string(),
                recomputed: cert.argmax_j.to_string(),
            });
        }
        let on = BoundOn::for_alphabet(alphabet).as_str();
        if self.bound_on != on {
            return Err(VerifyError::ClaimMismatch {
                field: "bound_on",
                claimed: self.bound_on.clone(),
                recomputed: on.to_string(),
            });
        }
        Ok(cert)
    }
}
