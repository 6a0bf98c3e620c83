//! `qbound`: command-line access to the exact certificates, the enumerator
//! LP, mixed-code bounds and the asymptotic curves of `qbound-core`.
//!
//! Exit codes: `0` success, `1` computation or verification failure, `2`
//! usage error.

pub mod args;
pub mod certfile;
pub mod output;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use qbound_core::asymptotics::{tabulate_curve, CurveId};
use qbound_core::certificates::{
    first_lp_binary_certificate, hamming_certificate, integer_bound, singleton_certificate,
    DualCertificate,
};
use qbound_core::enum_lp::{lp_feasible, lp_max_k, LpOutcome, Witness};
use qbound_core::kraw::KrawTable;
use qbound_core::mixed::{
    mixed_hamming_max_d, mixed_plotkin, stabilizer_hamming, stabilizer_plotkin, StabilizerType,
};
use qbound_core::{Alphabet, Error as CoreError, ExactScalar};
use serde_json::{json, Value};

use args::{CertAction, Cli, Command, Format, MixedBound, StabilizerBound, StabilizerParams};
use certfile::{rational_to_string as rat, CertificateFile};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Compute(_) => EXIT_FAILURE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        use CoreError::*;
        match e {
            InvalidParams(_) | UnsupportedAlphabet(_) | UnknownCurve(_) | EmptyRange
            | Domain(_) | OutOfRange { .. } | NegativeBinomial(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// A rendered command result.
struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    /// Written to `--out` instead of the rendered output when present.
    certificate: Option<CertificateFile>,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            csv: None,
            certificate: None,
        }
    }

    fn render(&self, format: Format) -> Result<String, Failure> {
        Ok(match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("plain data");
                s.push('\n');
                s
            }
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| Failure::Usage("csv output is only available for curve and kraw".into()))?,
        })
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let (report, default_format) = match &cli.command {
        Command::Singleton(p) => (certificate_report(singleton_certificate(p.n as usize, p.w as usize)?, None), Format::Text),
        Command::Hamming(p) => (certificate_report(hamming_certificate(p.n as usize, p.w as usize)?, None), Format::Text),
        Command::Lp1Binary(p) => {
            let c = first_lp_binary_certificate(p.n as usize, p.w as usize)?;
            let extra = format!(
                "kernel degree t = {} (prescribed {}), a = {}\n",
                c.params.t,
                c.t_prescribed,
                rat(&c.params.a)
            );
            let mut r = certificate_report(c.certificate, Some(extra));
            r.json["t"] = json!(c.params.t);
            r.json["t_prescribed"] = json!(c.t_prescribed);
            r.json["a"] = json!(rat(&c.params.a));
            (r, Format::Text)
        }
        Command::Lp { params, k } => (lp_report(params.n as usize, params.w as usize, *k)?, Format::Text),
        Command::Cert { action: CertAction::Verify { path } } => (verify_report(path)?, Format::Text),
        Command::Mixed { bound } => (mixed_report(bound)?, Format::Text),
        Command::Stabilizer { bound } => (stabilizer_report(bound)?, Format::Text),
        Command::Curve {
            id,
            delta_min,
            delta_max,
            step,
        } => (curve_report(id, *delta_min, *delta_max, *step)?, Format::Csv),
        Command::Kraw { q, n } => (kraw_report(*q, *n as usize)?, Format::Text),
    };
    let format = cli.format.unwrap_or(default_format);
    let rendered = report.render(format)?;
    match (&cli.out, &report.certificate) {
        (Some(path), Some(cert)) => {
            write_file(path, &format!("{}\n", cert.to_json()))?;
            write_out(out, &rendered)
        }
        (Some(path), None) => {
            write_file(path, &rendered)?;
            write_out(out, &format!("wrote {}\n", path.display()))
        }
        (None, _) => write_out(out, &rendered),
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes())
        .map_err(|e| Failure::Compute(format!("writing output: {e}")))
}

fn write_file(path: &Path, s: &str) -> Result<(), Failure> {
    std::fs::write(path, s).map_err(|e| Failure::Compute(format!("writing {}: {e}", path.display())))
}

fn rats(v: &[ExactScalar]) -> Vec<String> {
    v.iter().map(rat).collect()
}

fn certificate_report(c: DualCertificate, extra: Option<String>) -> Report {
    let file = CertificateFile::from_certificate(&c);
    let mut text = format!(
        "{} <= {}\nbound = {} (q = {}, n = {}, w = {}, argmax_j = {})\n",
        c.bound_on.as_str(),
        integer_bound(&c),
        rat(&c.bound),
        c.alphabet.q(),
        c.n,
        c.w,
        c.argmax_j
    );
    if let Some(extra) = extra {
        text.push_str(&extra);
    }
    let json = serde_json::to_value(&file).expect("plain data");
    let mut r = Report::new(text, json);
    r.json["integer_bound"] = json!(integer_bound(&c).to_string());
    r.certificate = Some(file);
    r
}

fn witness_json(w: &Witness, k: u64) -> Value {
    let (b, bperp) = w.enumerators(k);
    json!({ "b": rats(&b), "bperp": rats(&bperp) })
}

fn witness_text(w: &Witness, k: u64) -> String {
    let (b, bperp) = w.enumerators(k);
    format!(
        "witness B = [{}]\nwitness B_perp = [{}]\n",
        rats(&b).join(", "),
        rats(&bperp).join(", ")
    )
}

fn lp_report(n: usize, w: usize, k: Option<u64>) -> Result<Report, Failure> {
    if let Some(k) = k {
        return Ok(match lp_feasible(n, k, w)? {
            LpOutcome::Feasible(wit) => Report::new(
                format!("K = {k}: feasible\n{}", witness_text(&wit, k)),
                json!({ "n": n, "w": w, "K": k, "feasible": true, "witness": witness_json(&wit, k) }),
            ),
            LpOutcome::Infeasible(cert) => Report::new(
                format!(
                    "K = {k}: infeasible (Farkas certificate with {} multipliers verified)\n",
                    cert.multipliers.len()
                ),
                json!({ "n": n, "w": w, "K": k, "feasible": false, "farkas": rats(&cert.multipliers) }),
            ),
        });
    }
    let max = lp_max_k(n, w)?;
    let mut text = format!("K_max = {}\n", max.k);
    let mut j = json!({ "n": n, "w": w, "K_max": max.k, "solves": max.solves });
    if let Some(wit) = &max.witness {
        text.push_str(&witness_text(wit, max.k));
        j["witness"] = witness_json(wit, max.k);
    }
    let _ = writeln!(text, "LP instances solved: {}", max.solves);
    Ok(Report::new(text, j))
}

fn verify_report(path: &Path) -> Result<Report, Failure> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Failure::Compute(format!("reading {}: {e}", path.display())))?;
    let file = CertificateFile::from_json(&data).map_err(|e| Failure::Compute(e.to_string()))?;
    let c = file.verify().map_err(|e| Failure::Compute(e.to_string()))?;
    let text = format!(
        "verified: {} <= {} (bound {}, argmax_j = {})\n",
        c.bound_on.as_str(),
        integer_bound(&c),
        rat(&c.bound),
        c.argmax_j
    );
    Ok(Report::new(
        text,
        json!({ "verified": true, "bound": rat(&c.bound), "bound_on": c.bound_on.as_str(), "argmax_j": c.argmax_j }),
    ))
}

fn distance_bound_report(bound: ExactScalar, fields: Value) -> Report {
    let floor = bound.floor().to_integer();
    let mut j = fields;
    j["bound"] = json!(rat(&bound));
    j["floor"] = json!(floor.to_string());
    Report::new(format!("d <= {}\nd <= {floor} (integer)\n", rat(&bound)), j)
}

fn mixed_report(bound: &MixedBound) -> Result<Report, Failure> {
    Ok(match bound {
        MixedBound::Plotkin(p) => {
            let (l, n, k) = (p.l as usize, p.n as usize, p.k as usize);
            distance_bound_report(mixed_plotkin(l, n, k)?, json!({ "l": l, "n": n, "k": k }))
        }
        MixedBound::Hamming(p) => {
            let (l, n, k) = (p.l as usize, p.n as usize, p.k as usize);
            let d = mixed_hamming_max_d(l, n, k)?;
            Report::new(format!("d <= {d}\n"), json!({ "l": l, "n": n, "k": k, "max_d": d }))
        }
    })
}

fn stabilizer_dimension(p: &StabilizerParams) -> Result<usize, Failure> {
    match (p.k, p.k0) {
        (Some(k), _) => Ok(k as usize),
        (None, Some(k0)) => Ok(StabilizerType::new(p.n as usize, k0 as usize, p.k1 as usize)?.k()),
        (None, None) => Err(Failure::Usage("one of --k or --k0 is required".into())),
    }
}

fn stabilizer_report(bound: &StabilizerBound) -> Result<Report, Failure> {
    Ok(match bound {
        StabilizerBound::Plotkin(p) => {
            let (n, k, k1) = (p.n as usize, stabilizer_dimension(p)?, p.k1 as usize);
            distance_bound_report(stabilizer_plotkin(n, k, k1)?, json!({ "n": n, "k": k, "k1": k1 }))
        }
        StabilizerBound::Hamming(p) => {
            let (n, k, k1) = (p.n as usize, stabilizer_dimension(p)?, p.k1 as usize);
            let h = stabilizer_hamming(n, k, k1)?;
            Report::new(
                format!(
                    "d <= {}\nd <= {} with the printed right-hand side 2^(2k0+3k1)\n",
                    h.composed, h.printed_rhs
                ),
                json!({ "n": n, "k": k, "k1": k1, "composed": h.composed, "printed_rhs": h.printed_rhs }),
            )
        }
    })
}

fn curve_report(id: &str, lo: f64, hi: f64, step: f64) -> Result<Report, Failure> {
    let curve: CurveId = id.parse()?;
    let points = tabulate_curve(curve, lo, hi, step)?;
    let mut text = String::new();
    for p in &points {
        let _ = writeln!(
            text,
            "{:.12}  {}  {}",
            p.delta,
            output::significant(p.exponent, 12),
            if p.valid { "valid" } else { "outside proven range" }
        );
    }
    let rows: Vec<Value> = points
        .iter()
        .map(|p| json!({ "delta": p.delta, "exponent": p.exponent, "valid": p.valid }))
        .collect();
    let mut r = Report::new(text, json!({ "curve": curve.as_str(), "points": rows }));
    r.csv = Some(output::curve_csv(&points));
    Ok(r)
}

fn kraw_report(q: u32, n: usize) -> Result<Report, Failure> {
    let alphabet = Alphabet::try_from(q)?;
    let table = KrawTable::new(alphabet, n);
    let mut text = String::new();
    let mut csv = String::from("i,x,value\n");
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let row = table.row(i);
        let strs: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(text, "P_{i}: {}", strs.join(" "));
        for (x, v) in strs.iter().enumerate() {
            let _ = writeln!(csv, "{i},{x},{v}");
        }
        rows.push(strs.iter().map(|v| format!("{v}/1")).collect::<Vec<_>>());
    }
    let mut r = Report::new(text, json!({ "q": q, "n": n, "table": rows }));
    r.csv = Some(csv);
    Ok(r)
}
