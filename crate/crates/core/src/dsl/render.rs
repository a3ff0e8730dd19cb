//! Text rendering in the DSL's own literal syntax.
//!
//! Fraction style output parses back to the same value.

use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::nonstandard::{ratio, Bound, Rational};
use crate::nsset::NsSet;
use crate::probability::{ClassificationReport, NpTriple};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NumberStyle {
    /// `3/10`
    #[default]
    Fraction,
    /// `0.3`; values without a terminating expansion fall back to fractions.
    Decimal,
    /// `30%`
    Percent,
}

impl FromStr for NumberStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fraction" => Ok(NumberStyle::Fraction),
            "decimal" => Ok(NumberStyle::Decimal),
            "percent" => Ok(NumberStyle::Percent),
            other => Err(format!("unknown number style `{other}`")),
        }
    }
}

/// Exact decimal expansion, if the denominator only has factors 2 and 5.
fn decimal(v: &Rational) -> Option<String> {
    let mut denom = v.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while denom.is_multiple_of(&two) {
        denom /= &two;
        twos += 1;
    }
    while denom.is_multiple_of(&five) {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return None;
    }
    let places = twos.max(fives);
    let scaled = v * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let sign = if v.is_negative() { "-" } else { "" };
    if places == 0 {
        return Some(format!("{sign}{digits}"));
    }
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (whole, frac) = padded.split_at(padded.len() - places);
    Some(format!("{sign}{whole}.{frac}"))
}

pub fn rational(v: &Rational, style: NumberStyle) -> String {
    match style {
        NumberStyle::Fraction => v.to_string(),
        NumberStyle::Decimal => decimal(v).unwrap_or_else(|| v.to_string()),
        NumberStyle::Percent => {
            let scaled = v * ratio(100, 1);
            let text = decimal(&scaled).unwrap_or_else(|| scaled.to_string());
            format!("{text}%")
        }
    }
}

pub fn bound(b: &Bound, style: NumberStyle) -> String {
    format!("{}{}", rational(&b.value, style), b.tag.suffix())
}

/// Pieces joined by ` U `; runs of points are grouped into one `{...}`.
pub fn set(s: &NsSet, style: NumberStyle) -> String {
    if s.is_empty() {
        return "{}".to_string();
    }
    let mut terms: Vec<String> = Vec::new();
    let mut points: Vec<String> = Vec::new();
    for piece in s.pieces() {
        if piece.is_point() {
            points.push(bound(piece.lo(), style));
            continue;
        }
        if !points.is_empty() {
            terms.push(format!("{{{}}}", points.join(", ")));
            points.clear();
        }
        terms.push(format!("[{}..{}]", bound(piece.lo(), style), bound(piece.hi(), style)));
    }
    if !points.is_empty() {
        terms.push(format!("{{{}}}", points.join(", ")));
    }
    terms.join(" U ")
}

pub fn triple(t: &NpTriple, style: NumberStyle) -> String {
    format!(
        "({}, {}, {})",
        set(t.t(), style),
        set(t.i(), style),
        set(t.f(), style)
    )
}

/// Multi-line summary: n-bounds, labels and component flags.
pub fn report(r: &ClassificationReport, style: NumberStyle) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n_inf = {}, n_sup = {}",
        bound(&r.n_inf, style),
        bound(&r.n_sup, style)
    );
    let labels: Vec<&str> = r.labels.iter().map(|l| l.name()).collect();
    let flags: Vec<&str> = r.flags.iter().map(|f| f.name()).collect();
    let _ = writeln!(out, "labels: {}", if labels.is_empty() { "none".into() } else { labels.join(", ") });
    let _ = write!(out, "flags: {}", if flags.is_empty() { "none".into() } else { flags.join(", ") });
    out
}
