//! JSON shapes. Field order is fixed by declaration order, so identical
//! input always serializes to identical bytes.

use serde::Serialize;

use nprob::check::{CheckReport, Counterexample};
use nprob::dsl::QueryResult;
use nprob::worlds::{NlValue, Valuation};
use nprob::{Bound, MonadTag, NsSet};

#[derive(Serialize)]
pub struct JsonBound {
    v: String,
    tag: &'static str,
}

impl From<&Bound> for JsonBound {
    fn from(b: &Bound) -> Self {
        let tag = match b.tag {
            MonadTag::Minus => "-",
            MonadTag::Standard => "0",
            MonadTag::Plus => "+",
        };
        // always p/q, even for integers
        JsonBound { v: format!("{}/{}", b.value.numer(), b.value.denom()), tag }
    }
}

#[derive(Serialize)]
pub struct JsonPiece {
    lo: JsonBound,
    hi: JsonBound,
}

fn pieces(s: &NsSet) -> Vec<JsonPiece> {
    s.pieces()
        .iter()
        .map(|p| JsonPiece { lo: p.lo().into(), hi: p.hi().into() })
        .collect()
}

#[derive(Serialize)]
pub struct JsonQuery {
    query: String,
    #[serde(rename = "T")]
    t: Vec<JsonPiece>,
    #[serde(rename = "I")]
    i: Vec<JsonPiece>,
    #[serde(rename = "F")]
    f: Vec<JsonPiece>,
    n_inf: String,
    n_sup: String,
    labels: Vec<&'static str>,
    flags: Vec<&'static str>,
}

impl From<&QueryResult> for JsonQuery {
    fn from(r: &QueryResult) -> Self {
        JsonQuery {
            query: r.text.clone(),
            t: pieces(r.triple.t()),
            i: pieces(r.triple.i()),
            f: pieces(r.triple.f()),
            n_inf: r.report.n_inf.to_string(),
            n_sup: r.report.n_sup.to_string(),
            labels: r.report.labels.iter().map(|l| l.name()).collect(),
            flags: r.report.flags.iter().map(|f| f.name()).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct JsonValuation {
    statement: String,
    valuation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<String>,
    corner: Option<&'static str>,
}

impl JsonValuation {
    pub fn new(statement: &str, v: &Valuation) -> Self {
        let text = |x: NlValue| Some(x.to_string());
        let (t, f, i, corner) = match v {
            Valuation::Defined(nl) => (text(nl.t), text(nl.f), text(nl.i), nl.corner().map(|c| c.name())),
            Valuation::NotApplicable => (None, None, None, None),
        };
        JsonValuation { statement: statement.to_string(), valuation: v.to_string(), t, f, i, corner }
    }
}

#[derive(Serialize)]
pub struct JsonCounterexample {
    suite: String,
    case: u64,
    what: String,
    operands: Vec<String>,
    expected: String,
    actual: String,
}

impl From<&Counterexample> for JsonCounterexample {
    fn from(c: &Counterexample) -> Self {
        JsonCounterexample {
            suite: c.suite.to_string(),
            case: c.case,
            what: c.what.clone(),
            operands: c.operands.clone(),
            expected: c.expected.clone(),
            actual: c.actual.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct JsonCheck {
    seed: u64,
    cases: u64,
    tag_checks: usize,
    passed: bool,
    counterexample: Option<JsonCounterexample>,
}

impl JsonCheck {
    pub fn new(seed: u64, r: &CheckReport) -> Self {
        JsonCheck {
            seed,
            cases: r.cases,
            tag_checks: r.tag_checks,
            passed: r.passed(),
            counterexample: r.counterexample.as_ref().map(Into::into),
        }
    }
}
