//! Possible-worlds truth valuation.
//!
//! A statement is evaluated in a finite list of worlds. In each world it has
//! a non-empty set of statuses drawn from true, false and indeterminate. The
//! valuation counts witnessing worlds: all of them gives the absolute value
//! `1+`, some of them an n-level relative `1`, none of them `0` or `0-`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    True,
    False,
    Indeterminate,
}

impl Status {
    fn bit(self) -> u8 {
        match self {
            Status::True => 1,
            Status::False => 2,
            Status::Indeterminate => 4,
        }
    }
}

/// Non-empty subset of `{T, F, I}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StatusSet(u8);

impl StatusSet {
    pub fn new<I: IntoIterator<Item = Status>>(statuses: I) -> Result<Self, WorldsError> {
        let bits = statuses.into_iter().fold(0, |acc, s| acc | s.bit());
        if bits == 0 {
            return Err(WorldsError::EmptyStatus);
        }
        Ok(StatusSet(bits))
    }

    pub fn contains(self, status: Status) -> bool {
        self.0 & status.bit() != 0
    }

    /// True and false at once in the same world.
    pub fn is_paradoxical(self) -> bool {
        self.contains(Status::True) && self.contains(Status::False)
    }

    /// A paradoxical world also witnesses indeterminacy.
    fn witnesses(self, status: Status) -> bool {
        self.contains(status) || (status == Status::Indeterminate && self.is_paradoxical())
    }
}

impl FromStr for StatusSet {
    type Err = WorldsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = 0u8;
        for c in s.chars() {
            let status = match c {
                'T' => Status::True,
                'F' => Status::False,
                'I' => Status::Indeterminate,
                other => return Err(WorldsError::UnknownStatus(other)),
            };
            if bits & status.bit() != 0 {
                return Err(WorldsError::RepeatedStatus(c));
            }
            bits |= status.bit();
        }
        if bits == 0 {
            return Err(WorldsError::EmptyStatus);
        }
        Ok(StatusSet(bits))
    }
}

impl fmt::Display for StatusSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (status, c) in [(Status::True, 'T'), (Status::False, 'F'), (Status::Indeterminate, 'I')] {
            if self.contains(status) {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorldsError {
    #[error("at least one world is required")]
    NoWorlds,
    #[error("expected {expected} statuses, one per world, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("a world status must name at least one of T, F, I")]
    EmptyStatus,
    #[error("unknown status letter {0:?}; use T, F or I")]
    UnknownStatus(char),
    #[error("status letter {0:?} repeated")]
    RepeatedStatus(char),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorldAssignment {
    worlds: Vec<String>,
    statuses: Vec<StatusSet>,
}

impl WorldAssignment {
    pub fn new(worlds: Vec<String>, statuses: Vec<StatusSet>) -> Result<Self, WorldsError> {
        if worlds.is_empty() {
            return Err(WorldsError::NoWorlds);
        }
        if worlds.len() != statuses.len() {
            return Err(WorldsError::LengthMismatch {
                expected: worlds.len(),
                found: statuses.len(),
            });
        }
        Ok(WorldAssignment { worlds, statuses })
    }

    /// Parses one status string per world, e.g. `["T", "TF", "I"]`.
    pub fn parse<S: AsRef<str>>(worlds: Vec<String>, statuses: &[S]) -> Result<Self, WorldsError> {
        let statuses = statuses
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<StatusSet>, _>>()?;
        WorldAssignment::new(worlds, statuses)
    }

    /// Assignment over worlds named `w1..wN`.
    pub fn anonymous(statuses: Vec<StatusSet>) -> Result<Self, WorldsError> {
        let worlds = (1..=statuses.len()).map(|k| format!("w{k}")).collect();
        WorldAssignment::new(worlds, statuses)
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn statuses(&self) -> &[StatusSet] {
        &self.statuses
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    /// Number of worlds witnessing `status`.
    pub fn count(&self, status: Status) -> usize {
        self.statuses.iter().filter(|s| s.witnesses(status)).count()
    }

    fn holds_everywhere(&self, status: Status) -> bool {
        self.statuses.iter().all(|s| s.contains(status))
    }

    fn paradoxical_everywhere(&self) -> bool {
        self.statuses.iter().all(|s| s.is_paradoxical())
    }
}

/// Value of one component of the logical valuation.
///
/// Ordered `AbsoluteZero < Zero < Relative < Absolute`; relative values order
/// by witness count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NlValue {
    /// `0-`
    AbsoluteZero,
    /// `0`
    Zero,
    /// `1` at n-level relative truth: witnessed in `level` of `total` worlds.
    /// `level == total` only for statements paradoxical in every world.
    Relative { level: usize, total: usize },
    /// `1+`
    Absolute,
}

impl fmt::Display for NlValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NlValue::AbsoluteZero => f.write_str("0-"),
            NlValue::Zero => f.write_str("0"),
            NlValue::Relative { level, total } if level == total => f.write_str("1"),
            NlValue::Relative { level, total } => write!(f, "1 @ {level}/{total}"),
            NlValue::Absolute => f.write_str("1+"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Truth,
    Falsehood,
    Indeterminacy,
}

/// Truth, falsehood and indeterminacy values, rendered in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NlTriple {
    pub t: NlValue,
    pub f: NlValue,
    pub i: NlValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    Tautology,
    Contradiction,
    Paradox,
}

impl Corner {
    pub fn name(self) -> &'static str {
        match self {
            Corner::Tautology => "tautology",
            Corner::Contradiction => "contradiction",
            Corner::Paradox => "paradox",
        }
    }
}

impl NlTriple {
    pub fn corner(&self) -> Option<Corner> {
        use NlValue::*;
        let all_paradox = [self.t, self.f, self.i]
            .iter()
            .all(|v| matches!(v, Relative { level, total } if level == total));
        match (self.t, self.f, self.i) {
            (Absolute, AbsoluteZero, AbsoluteZero) => Some(Corner::Tautology),
            (AbsoluteZero, Absolute, AbsoluteZero) => Some(Corner::Contradiction),
            _ if all_paradox => Some(Corner::Paradox),
            _ => None,
        }
    }
}

impl fmt::Display for NlTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.f, self.i)
    }
}

/// Valuation of a candidate statement; ill-formed input is not applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Defined(NlTriple),
    NotApplicable,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Defined(t) => t.fmt(f),
            Valuation::NotApplicable => f.write_str("n/a"),
        }
    }
}

pub fn nl_component(w: &WorldAssignment, which: Component) -> NlValue {
    let total = w.len();
    let (status, opposite) = match which {
        Component::Truth => (Status::True, Some(Status::False)),
        Component::Falsehood => (Status::False, Some(Status::True)),
        Component::Indeterminacy => (Status::Indeterminate, None),
    };
    let count = w.count(status);
    if count == total {
        if w.paradoxical_everywhere() {
            NlValue::Relative { level: total, total }
        } else {
            NlValue::Absolute
        }
    } else if count > 0 {
        NlValue::Relative { level: count, total }
    } else {
        match opposite {
            Some(o) if !w.holds_everywhere(o) => NlValue::Zero,
            _ => NlValue::AbsoluteZero,
        }
    }
}

pub fn nl_triple(w: &WorldAssignment) -> NlTriple {
    NlTriple {
        t: nl_component(w, Component::Truth),
        f: nl_component(w, Component::Falsehood),
        i: nl_component(w, Component::Indeterminacy),
    }
}

pub fn nl_nwff() -> Valuation {
    Valuation::NotApplicable
}

/// Values raw status strings; any malformed input yields `n/a`.
pub fn valuate<S: AsRef<str>>(worlds: &[String], statuses: &[S]) -> Valuation {
    match WorldAssignment::parse(worlds.to_vec(), statuses) {
        Ok(w) => Valuation::Defined(nl_triple(&w)),
        Err(_) => nl_nwff(),
    }
}
