//! Human-readable rendering of dual quantities, and its exact inverse for
//! machine checks: the printed form parses back to the printed precision.

use dcmx::{DualNumber, SvdResult};
use std::fmt::Write as _;

/// Renders a dual number as `"<std> + <inf> eps"` (or `- <inf> eps`) with
/// `prec` digits after the decimal point.
pub fn format_dual(d: DualNumber, prec: usize) -> String {
    // Sign-of-zero matters for print → parse → print stability: parsing
    // `- 0.0000 eps` yields -0.0, which must render as `-` again.
    let sign = if d.inf().is_sign_negative() { '-' } else { '+' };
    format!("{:.prec$} {sign} {:.prec$} eps", d.std(), d.inf().abs())
}

/// Parses the output of [`format_dual`] back into a dual number.
pub fn parse_dual(s: &str) -> Option<DualNumber> {
    let mut parts = s.split_whitespace();
    let std: f64 = parts.next()?.parse().ok()?;
    let sign = match parts.next()? {
        "+" => 1.0,
        "-" => -1.0,
        _ => return None,
    };
    let inf: f64 = parts.next()?.parse().ok()?;
    if parts.next()? != "eps" || parts.next().is_some() {
        return None;
    }
    DualNumber::new(std, sign * inf).ok()
}

/// The singular-value report printed by the decomposition command.
pub fn sigma_report(s: &SvdResult, prec: usize) -> String {
    let (m, n) = s.shape();
    let mut out = String::new();
    let _ = writeln!(out, "matrix: {m}x{n}");
    for (i, sv) in s.sigma.iter().enumerate() {
        let _ = writeln!(out, "sigma {}: {}", i + 1, format_dual(*sv, prec));
    }
    let _ = writeln!(out, "arank: {}", s.arank);
    let _ = writeln!(out, "rank: {}", s.rank);
    out
}

/// Extracts the `sigma` lines of a [`sigma_report`] as dual numbers.
pub fn parse_sigma_report(text: &str) -> Vec<DualNumber> {
    text.lines()
        .filter_map(|l| l.strip_prefix("sigma "))
        .filter_map(|l| l.split_once(": "))
        .filter_map(|(_, v)| parse_dual(v))
        .collect()
}

/// CSV for per-truncation errors: header plus one `k,err_std,err_inf` row
/// per entry, LF line endings, shortest round-trip float formatting.
pub fn errors_csv(rows: &[(usize, DualNumber)]) -> String {
    let mut out = String::from("k,err_std,err_inf\n");
    for (k, err) in rows {
        let _ = writeln!(out, "{k},{},{}", err.std(), err.inf());
    }
    out
}
