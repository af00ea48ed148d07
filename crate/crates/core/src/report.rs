//! Report rendering: human-readable text and single-line JSON.
//!
//! Statistics and p-values display with 6 significant digits, runtimes
//! with 4. Both formats round identically.

use crate::ff2d::{Method, TestOutcome};

/// Rounds to `sig` significant decimal digits.
pub fn round_sig(x: f64, sig: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(sig as i32 - 1 - magnitude);
    (x * factor).round() / factor
}

/// Formats with `sig` significant digits, plain decimal notation.
pub fn format_sig(x: f64, sig: u32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, round_sig(x, sig))
}

fn rounded(outcome: &TestOutcome) -> TestOutcome {
    let mut o = outcome.clone();
    o.statistic = round_sig(o.statistic, 6);
    o.d1 = round_sig(o.d1, 6);
    o.d2 = round_sig(o.d2, 6);
    o.p_value = round_sig(o.p_value, 6);
    o.r1 = round_sig(o.r1, 6);
    o.r2 = round_sig(o.r2, 6);
    o.runtime_seconds = round_sig(o.runtime_seconds, 4);
    o
}

pub fn render_text(outcome: &TestOutcome) -> String {
    let o = rounded(outcome);
    let mut out = String::new();
    out.push_str("      2-D Two-sample Kolmogorov-Smirnov Test\n\n");
    out.push_str(&format!(
        " D-stat = {} , p-value = {}\n",
        format_sig(o.statistic, 6),
        format_sig(o.p_value, 6)
    ));
    out.push_str(&format!(
        " d1 = {} , d2 = {}\n",
        format_sig(o.d1, 6),
        format_sig(o.d2, 6)
    ));
    out.push_str(&format!(" Method: {}\n", o.method));
    if o.method == Method::Bootstrap {
        if let (Some(seed), Some(nb)) = (o.seed, o.n_bootstrap) {
            out.push_str(&format!(" nBootStrap = {nb} , seed = {seed}\n"));
        }
    }
    out.push_str(&format!(" n1 = {} , n2 = {}\n", o.n1, o.n2));
    out.push_str(&format!(
        " r1 = {} , r2 = {}\n",
        format_sig(o.r1, 6),
        format_sig(o.r2, 6)
    ));
    if o.degenerate_correlation {
        out.push_str(
            " note: a coordinate has zero variance; r reported as 0. \
             Consider --method bootstrap.\n",
        );
    }
    out.push_str(&format!(
        " Run Time (s) = {}\n",
        format_sig(o.runtime_seconds, 4)
    ));
    out
}

pub fn render_json(outcome: &TestOutcome) -> String {
    serde_json::to_string(&rounded(outcome)).expect("outcome serializes")
}
