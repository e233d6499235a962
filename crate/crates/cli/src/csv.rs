//! Deterministic CSV rendering: exact `p/q` columns plus one decimal column
//! for the final (deficit/constant) column at a configurable precision.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use tropnev_core::harness::ReportTable;
use tropnev_core::scalar::Rat;

/// Exact rendering: `p` or `p/q`.
pub fn render_rat(r: &Rat) -> String {
    format!("{}", r)
}

/// Fixed-point decimal rendering at `precision` digits, rounding half away
/// from zero.
pub fn render_decimal(r: &Rat, precision: usize) -> String {
    let negative = r.is_negative();
    let magnitude = r.abs();
    let scale = BigInt::from(10).pow(precision as u32);
    let scaled = magnitude.numer() * &scale;
    let (mut q, rem) = (scaled.clone() / magnitude.denom(), scaled % magnitude.denom());
    if &rem * BigInt::from(2) >= *magnitude.denom() {
        q += 1;
    }
    let digits = q.to_string();
    let (int_part, frac_part) = if digits.len() > precision {
        let split = digits.len() - precision;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", digits, width = precision))
    };
    let sign = if negative && !(q.is_zero()) { "-" } else { "" };
    if precision == 0 {
        format!("{}{}", sign, int_part)
    } else {
        format!("{}{}.{}", sign, int_part, frac_part)
    }
}

/// Renders a report table: exact columns, then a decimal rendering of the
/// last column.
pub fn table_csv(table: &ReportTable, precision: usize) -> String {
    let mut out = String::new();
    out.push_str(&table.columns.join(","));
    if let Some(last) = table.columns.last() {
        out.push_str(&format!(",{}_dec", last));
    }
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(render_rat).collect();
        out.push_str(&cells.join(","));
        if let Some(last) = row.last() {
            out.push(',');
            out.push_str(&render_decimal(last, precision));
        }
        out.push('\n');
    }
    out
}
