//! Number formatting and the curve CSV format.

use std::fmt::Write as _;

use qbound_core::asymptotics::CurvePoint;

/// Fixed-point rendering with `digits` significant digits.
pub fn significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", digits.saturating_sub(1), 0.0);
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding may carry into a new leading digit
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded.abs().log10().floor() as i64 > magnitude && decimals > 0 {
        format!("{x:.*}", decimals - 1)
    } else {
        s
    }
}

pub const CSV_HEADER: &str = "delta,exponent,valid";

/// `delta` with 12 decimals, `exponent` with 12 significant digits, `valid`
/// as `1`/`0`; one row per point in the given order.
pub fn curve_csv(points: &[CurvePoint]) -> String {
    let mut out = String::with_capacity(40 * (points.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for p in points {
        let _ = writeln!(
            out,
            "{:.12},{},{}",
            p.delta,
            significant(p.exponent, 12),
            u8::from(p.valid)
        );
    }
    out
}

/// Parses [`curve_csv`] output back into `(delta, exponent, valid)` rows.
pub fn parse_curve_csv(s: &str) -> Result<Vec<(f64, f64, bool)>, String> {
    let mut lines = s.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err("missing header".into());
    }
    lines
        .map(|line| {
            let mut cols = line.split(',');
            let mut next = || cols.next().ok_or_else(|| format!("short row `{line}`"));
            let delta = next()?.parse().map_err(|_| format!("bad delta in `{line}`"))?;
            let exponent = next()?.parse().map_err(|_| format!("bad exponent in `{line}`"))?;
            let valid = match next()? {
                "1" => true,
                "0" => false,
                _ => return Err(format!("bad flag in `{line}`")),
            };
            Ok((delta, exponent, valid))
        })
        .collect()
}
