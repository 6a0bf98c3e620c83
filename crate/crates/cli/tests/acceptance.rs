//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qbound::certfile::{CertificateFile, VerifyError};
use qbound_core::asymptotics::*;
use qbound_core::certificates::{
    check_certificate, first_lp_binary_certificate, hamming_certificate, integer_bound,
    singleton_certificate, DualCertificate,
};
use qbound_core::enum_lp::{lp_max_k, CodeParams, EnumLp};
use qbound_core::kraw::{
    christoffel_darboux_check, expand_in_kraw, kraw_recurrence_check, kraw_value,
    linearize_product, KrawTable,
};
use qbound_core::mixed::{
    mixed_plotkin, mixed_sphere_volume, mixed_weight, packing_radius, span_words,
    stabilizer_hamming, stabilizer_plotkin,
};
use qbound_core::scalar::{binomial_int, int, log2_abs, pow_int, pow_rational};
use qbound_core::{Alphabet, ExactScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let t = start.elapsed();
    ensure!(t <= limit, "took {t:.2?}, limit {limit:?}");
    Ok(format!("{t:.2?}"))
}

fn singleton_exactness() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=20usize {
        for w in 1..=(n + 2) / 2 {
            let c = singleton_certificate(n, w).map_err(|e| e.to_string())?;
            let bound = check_certificate(Alphabet::Quaternary, n, w, c.coeffs)
                .map_err(|e| e.to_string())?;
            ensure!(
                bound == pow_rational(2, n as i64 - 2 * w as i64 + 2),
                "n={n} w={w}: {bound}"
            );
            count += 1;
        }
    }
    Ok(format!("{count} certificates exact in {}", within(Duration::from_secs(10), start)?))
}

fn hamming_oracle() -> Outcome {
    let mut count = 0;
    for n in 0..=10usize {
        let table = KrawTable::new(Alphabet::Quaternary, n);
        for w in (3..=n + 1).step_by(2) {
            let e = (w - 1) / 2;
            let square: Vec<ExactScalar> = (0..=n)
                .map(|x| ExactScalar::from_integer(table.get(e, x) * table.get(e, x)))
                .collect();
            let brute = expand_in_kraw(Alphabet::Quaternary, n, &square)
                .map_err(|e| e.to_string())?
                .coeffs;
            let closed: Vec<ExactScalar> = linearize_product(Alphabet::Quaternary, n, e, e)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(ExactScalar::from_integer)
                .collect();
            ensure!(closed == brute, "n={n} w={w}");
            count += 1;
        }
    }
    let bound = hamming_certificate(5, 3).map_err(|e| e.to_string())?.bound;
    ensure!(bound == ExactScalar::new(32.into(), 15.into()), "(5,3) bound {bound}");
    Ok(format!("{count} linearizations equal; (5,3) bound 32/15"))
}

fn lp_consistency() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 1..=10usize {
        for w in 1..=n {
            let max = lp_max_k(n, w).map_err(|e| e.to_string())?;
            let mut certs: Vec<DualCertificate> = Vec::new();
            if w <= (n + 2) / 2 {
                certs.push(singleton_certificate(n, w).map_err(|e| e.to_string())?);
            }
            if w >= 3 && w % 2 == 1 {
                if let Ok(c) = hamming_certificate(n, w) {
                    certs.push(c);
                }
            }
            for c in &certs {
                ensure!(
                    BigInt::from(max.k) <= integer_bound(c),
                    "n={n} w={w}: K_max {} above {}",
                    max.k,
                    c.bound
                );
                pairs += 1;
            }
        }
    }
    let max = lp_max_k(5, 3).map_err(|e| e.to_string())?;
    ensure!(max.k == 2, "lp_max_k(5,3) = {}", max.k);
    let witness = max.witness.ok_or("no witness")?;
    let lp = EnumLp::new(CodeParams::new(5, 2, 3).map_err(|e| e.to_string())?);
    ensure!(lp.check_witness(&witness), "witness fails substitution");
    Ok(format!(
        "{pairs} certificate comparisons; K_max(5,3) = 2 with verified witness; {}",
        within(Duration::from_secs(300), start)?
    ))
}

fn kraw_identities() -> Outcome {
    let c = |n: usize, k: usize| binomial_int(n as i64, k as i64).unwrap();
    for alphabet in [Alphabet::Binary, Alphabet::Quaternary] {
        let q = alphabet.q() as i64;
        for n in 0..=10usize {
            let t = KrawTable::new(alphabet, n);
            ensure!(kraw_recurrence_check(alphabet, n), "recurrence q={q} n={n}");
            for i in 0..=n {
                for j in 0..=n {
                    let orth: BigInt = (0..=n)
                        .map(|x| pow_int(q - 1, x) * c(n, x) * t.get(i, x) * t.get(j, x))
                        .sum();
                    let inv: BigInt = (0..=n).map(|s| t.get(i, s) * t.get(s, j)).sum();
                    let (eo, ei) = if i == j {
                        (pow_int(q, n) * pow_int(q - 1, i) * c(n, i), pow_int(q, n))
                    } else {
                        (BigInt::from(0), BigInt::from(0))
                    };
                    ensure!(orth == eo, "orthogonality q={q} n={n} i={i} j={j}");
                    ensure!(inv == ei, "involution q={q} n={n} i={i} j={j}");
                    ensure!(
                        t.get(i, j) == &kraw_value(alphabet, n, i, j).unwrap(),
                        "definition q={q} n={n}"
                    );
                }
            }
            if alphabet == Alphabet::Quaternary {
                for j in 0..=n {
                    for x in 0..=n {
                        let lhs: BigInt = (0..=j).map(|i| c(n - i, n - j) * t.get(i, x)).sum();
                        ensure!(lhs == pow_int(4, j) * c(n - x, j), "expansion n={n} j={j} x={x}");
                    }
                }
            }
        }
    }
    let a = ExactScalar::new(7.into(), 3.into());
    for n in 1..=10 {
        for t in 0..n {
            for x in 0..=n {
                ensure!(christoffel_darboux_check(n, t, x, &a), "Christoffel-Darboux n={n} t={t} x={x}");
            }
        }
    }
    Ok("orthogonality, involution, recurrence, expansion, Christoffel-Darboux exact for n <= 10".into())
}

fn asymptotic_anchors() -> Outcome {
    let lp1 = lp1_exponent_binary(0.1865).exponent;
    ensure!((lp1 - 0.501).abs() <= 0.005, "(a) LP1(0.1865) = {lp1}");
    let fixed = hamming_validity_limit().map_err(|e| e.to_string())?;
    ensure!((fixed - 0.34).abs() <= 0.005, "(b) fixed point {fixed}");
    let zero = hamming_zero().map_err(|e| e.to_string())?;
    ensure!((zero - 0.38).abs() <= 0.005, "(c) Hamming zero {zero}");
    ensure!(zero > 1.0 / 3.0, "(d) {zero} <= 1/3");
    Ok(format!(
        "(a) {lp1:.4} (b) {fixed:.4} (c) {zero:.4} (d) {zero:.4} > 1/3"
    ))
}

fn exponent_convergence() -> Outcome {
    let samples = [
        (Alphabet::Quaternary, [(0.1, 0.1), (0.05, 0.2), (0.15, 0.1), (0.2, 0.05), (0.1, 0.3)]),
        (Alphabet::Binary, [(0.11, 0.05), (0.2, 0.05), (0.1, 0.1), (0.05, 0.2), (0.3, 0.02)]),
    ];
    let mut worst: f64 = 0.0;
    for (alphabet, points) in samples {
        for (tau, xi) in points {
            let limit = kalai_log_kraw(alphabet, tau, xi).map_err(|e| e.to_string())?;
            let errs: Vec<f64> = [100usize, 200, 400]
                .iter()
                .map(|&n| {
                    let e = (tau * n as f64).round() as usize;
                    let x = (xi * n as f64).round() as usize;
                    (log2_abs(&kraw_value(alphabet, n, e, x).unwrap()) / n as f64 - limit).abs()
                })
                .collect();
            ensure!(
                errs[0] > errs[1] && errs[1] > errs[2] && errs[2] < 0.02,
                "q={} tau={tau} xi={xi}: {errs:?}",
                alphabet.q()
            );
            worst = worst.max(errs[2]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut gap: f64 = 0.0;
    for _ in 0..100 {
        let tau: f64 = rng.gen_range(0.001..0.7);
        let xi = rng.gen_range(0.0..1.0) * xi_e(tau);
        let q = kraw_exponent_integral(Alphabet::Quaternary, tau, xi).map_err(|e| e.to_string())?;
        let c = closed_form_integral(tau, xi).map_err(|e| e.to_string())?;
        gap = gap.max((q - c).abs());
    }
    ensure!(gap < 1e-8, "antiderivative gap {gap:e}");
    Ok(format!("worst error at n=400: {worst:.4}; antiderivative gap {gap:.1e}"))
}

fn scan_claims() -> Outcome {
    for variant in HammingObjective::ALL {
        for i in 1..=6 {
            let delta = 0.05 * i as f64;
            let s = hamming_exponent_scan(variant, delta).map_err(|e| e.to_string())?;
            ensure!(s.argmax_xi <= 1e-3, "{variant:?} delta={delta}: argmax {}", s.argmax_xi);
        }
    }
    let start = tau_for_binary_delta(LP1_VALIDITY_LIMIT);
    for tau in std::iter::once(start).chain((12..=45).map(|i| i as f64 * 0.01)) {
        let s = binary_lp_exponent_scan(tau).map_err(|e| e.to_string())?;
        ensure!(s.argmax_xi <= ARGMAX_TOLERANCE, "binary tau={tau}: argmax {}", s.argmax_xi);
    }
    let threshold = binary_lp_threshold(0.05, 0.2).map_err(|e| e.to_string())?;
    ensure!((threshold - 0.11).abs() < 0.005, "threshold {threshold}");
    ensure!(
        binary_root_position(threshold) >= LP1_VALIDITY_LIMIT,
        "threshold delta {}",
        binary_root_position(threshold)
    );
    let literal = binary_lp_exponent_scan(0.11).map_err(|e| e.to_string())?;
    let at_zero = binary_lp_objective(0.11, 0.0).map_err(|e| e.to_string())?;
    Ok(format!(
        "Hamming argmax 0 in all 3 variants; binary argmax 0 for tau >= {start:.5}; \
         threshold tau* = {threshold:.5} (delta {:.5}); info: at tau = 0.110 argmax {:.4}, excess {:.2e}",
        binary_root_position(threshold),
        literal.argmax_xi,
        literal.max_value - at_zero
    ))
}

fn mixed_suite() -> Outcome {
    for n_total in 0..=6usize {
        for l in 0..=n_total.min(4) {
            for e in 0..=n_total {
                let count = (0u64..1 << (2 * n_total))
                    .filter(|w| (0..l).all(|c| (w >> (2 * c)) & 0b10 == 0))
                    .filter(|&w| mixed_weight(w, n_total) <= e)
                    .count();
                ensure!(
                    mixed_sphere_volume(l, n_total, e) == BigInt::from(count),
                    "volume l={l} n={n_total} e={e}"
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_4c0d);
    let mut codes = 0;
    while codes < 200 {
        let n_total = rng.gen_range(1..=8usize);
        let l = rng.gen_range(0..=n_total.min(4));
        let gens: Vec<u64> = (0..rng.gen_range(1..=6))
            .map(|_| {
                (0..n_total).fold(0u64, |g, c| {
                    let s = if c < l { rng.gen_range(0..2) } else { rng.gen_range(0..4) };
                    g | s << (2 * c)
                })
            })
            .collect();
        let words = span_words(&gens);
        let k = words.len().trailing_zeros() as usize;
        if k == 0 {
            continue;
        }
        let d = words.iter().filter(|&&w| w != 0).map(|&w| mixed_weight(w, n_total)).min().unwrap();
        let plotkin = mixed_plotkin(l, n_total, k).map_err(|e| e.to_string())?;
        ensure!(int(d as i64) <= plotkin, "Plotkin l={l} n={n_total} k={k} d={d}");
        ensure!(
            mixed_sphere_volume(l, n_total, packing_radius(d)) <= BigInt::from(1u8) << (2 * n_total - l - k),
            "packing l={l} n={n_total} k={k} d={d}"
        );
        codes += 1;
    }
    let p = stabilizer_plotkin(5, 1, 0).map_err(|e| e.to_string())?;
    ensure!(p == int(3), "stabilizer_plotkin(5,1,0) = {p}");
    let h = stabilizer_hamming(5, 1, 0).map_err(|e| e.to_string())?;
    ensure!(h.composed == 3, "stabilizer_hamming(5,1,0) = {}", h.composed);
    Ok(format!("volumes exhaustive; {codes} random codes; [[5,1,3]]: Plotkin 3, Hamming d <= 3"))
}

fn gv_below_hamming() -> Outcome {
    for i in 0..=340 {
        let d = i as f64 * 0.001;
        ensure!(gv_exponent(d) <= hamming_exponent(d).exponent, "delta={d}");
    }
    Ok("341 points".into())
}

fn tamper_variants(c: &str) -> Vec<String> {
    let v = qbound::certfile::parse_rational(c).unwrap();
    let one = int(1);
    [-v.clone(), &v + &one, &v * int(2), &v / int(3) + &one]
        .into_iter()
        .filter(|t| t != &v)
        .map(|t| qbound::certfile::rational_to_string(&t))
        .collect()
}

fn certificate_round_trip() -> Outcome {
    let mut certs: Vec<(&str, DualCertificate)> = Vec::new();
    for (n, w) in [(5, 3), (8, 3), (10, 4)] {
        certs.push(("singleton", singleton_certificate(n, w).map_err(|e| e.to_string())?));
    }
    for (n, w) in [(5, 3), (7, 3), (10, 5)] {
        certs.push(("hamming", hamming_certificate(n, w).map_err(|e| e.to_string())?));
    }
    for (n, w) in [(8, 2), (12, 3)] {
        certs.push((
            "first-LP",
            first_lp_binary_certificate(n, w).map_err(|e| e.to_string())?.certificate,
        ));
    }
    let mut tampers = 0;
    for (name, c) in &certs {
        let text = CertificateFile::from_certificate(c).to_json();
        let back = CertificateFile::from_json(&text)
            .and_then(|f| f.verify())
            .map_err(|e| format!("{name}: {e}"))?;
        ensure!(back.bound == c.bound, "{name}: bound changed");
        let file = CertificateFile::from_json(&text).unwrap();
        for i in 0..file.coeffs.len() {
            for t in tamper_variants(&file.coeffs[i]) {
                let mut bad = file.clone();
                bad.coeffs[i] = t.clone();
                let r = bad.verify();
                ensure!(
                    matches!(r, Err(VerifyError::Invalid(_)) | Err(VerifyError::ClaimMismatch { .. })),
                    "{name} n={} w={}: f_{i} -> {t} undetected",
                    c.n,
                    c.w
                );
                tampers += 1;
            }
        }
    }
    Ok(format!("{} certificates round-trip; {tampers} tampered files rejected", certs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Singleton exactness", singleton_exactness),
        ("Hamming certificate oracle", hamming_oracle),
        ("LP consistency", lp_consistency),
        ("Krawtchouk identity suite", kraw_identities),
        ("Asymptotic anchors", asymptotic_anchors),
        ("Exponent-machinery convergence", exponent_convergence),
        ("Scan claims", scan_claims),
        ("Mixed-code suite", mixed_suite),
        ("GV below Hamming", gv_below_hamming),
        ("Certificate round-trip", certificate_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
