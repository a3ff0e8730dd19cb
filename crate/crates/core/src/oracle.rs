//! Brute-force references for the set and bound arithmetic.
//!
//! Nothing here calls the operations it checks. Set operations are replayed
//! on plain rationals over a grid of endpoints and midpoints. Monad tags are
//! replayed by substituting small rational infinitesimals, each tagged
//! operand independently taking magnitude `eps` or `eps^2`, so either of two
//! opposing first-order effects can dominate.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{NsError, Result};
use crate::nonstandard::{ratio, Bound, MonadTag, Rational, Role};
use crate::nsset::NsSet;

/// Default infinitesimal stand-in, `10^-9`.
pub fn default_eps() -> Rational {
    ratio(1, 1_000_000_000)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetOp {
    Add,
    Sub,
    Mul,
}

impl SetOp {
    pub const ALL: [SetOp; 3] = [SetOp::Add, SetOp::Sub, SetOp::Mul];

    pub fn apply(self, x: &Rational, y: &Rational) -> Rational {
        match self {
            SetOp::Add => x + y,
            SetOp::Sub => x - y,
            SetOp::Mul => x * y,
        }
    }
}

impl fmt::Display for SetOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetOp::Add => "add",
            SetOp::Sub => "sub",
            SetOp::Mul => "mul",
        })
    }
}

/// Endpoints and midpoints of a tag-free set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSample {
    pub points: Vec<Rational>,
    pub source: NsSet,
}

impl GridSample {
    pub fn of(source: &NsSet) -> Result<Self> {
        let mut points = Vec::new();
        for piece in source.pieces() {
            for b in [piece.lo(), piece.hi()] {
                if !b.is_standard() {
                    return Err(NsError::TaggedOracleInput(Box::new(b.clone())));
                }
            }
            let (lo, hi) = (&piece.lo().value, &piece.hi().value);
            points.push(lo.clone());
            if lo != hi {
                points.push((lo + hi) / ratio(2, 1));
                points.push(hi.clone());
            }
        }
        Ok(GridSample { points, source: source.clone() })
    }

    /// One grid per piece of `source`.
    pub fn per_piece(source: &NsSet) -> Result<Vec<GridSample>> {
        source
            .pieces()
            .iter()
            .map(|p| GridSample::of(&NsSet::normalize([p.clone()])))
            .collect()
    }
}

/// Reference result of `a op b` for tag-free sets.
///
/// Each pair of pieces contributes the hull of the operation over its grid;
/// the hulls are then sorted and merged.
pub fn oracle_setop(op: SetOp, a: &NsSet, b: &NsSet) -> Result<NsSet> {
    if a.is_empty() || b.is_empty() {
        return Err(NsError::EmptySet);
    }
    let (grids_a, grids_b) = (GridSample::per_piece(a)?, GridSample::per_piece(b)?);
    let mut hulls: Vec<(Rational, Rational)> = Vec::new();
    for ga in &grids_a {
        for gb in &grids_b {
            let values: Vec<Rational> = ga
                .points
                .iter()
                .flat_map(|x| gb.points.iter().map(move |y| op.apply(x, y)))
                .collect();
            let lo = values.iter().min().expect("non-empty grid").clone();
            let hi = values.iter().max().expect("non-empty grid").clone();
            hulls.push((lo, hi));
        }
    }
    hulls.sort();
    let mut merged: Vec<(Rational, Rational)> = Vec::new();
    for (lo, hi) in hulls {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.clone().max(hi),
            _ => merged.push((lo, hi)),
        }
    }
    NsSet::from_bounds(
        merged
            .into_iter()
            .map(|(lo, hi)| (Bound::standard(lo), Bound::standard(hi))),
    )
}

/// A single bound operation to replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundOp {
    Add(Bound, Bound, Role),
    Sub(Bound, Bound, Role),
    Mul(Bound, Bound, Role),
    DivScalar(Bound, Rational),
}

impl BoundOp {
    /// Result according to the library's tag algebra.
    pub fn apply(&self) -> Result<Bound> {
        Ok(match self {
            BoundOp::Add(a, b, role) => a.add(b, *role),
            BoundOp::Sub(a, b, role) => a.sub(b, *role),
            BoundOp::Mul(a, b, role) => a.mul(b, *role),
            BoundOp::DivScalar(a, k) => a.div_scalar(k)?,
        })
    }
}

impl fmt::Display for BoundOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundOp::Add(a, b, role) => write!(f, "{a} + {b} ({role:?})"),
            BoundOp::Sub(a, b, role) => write!(f, "{a} - {b} ({role:?})"),
            BoundOp::Mul(a, b, role) => write!(f, "{a} * {b} ({role:?})"),
            BoundOp::DivScalar(a, k) => write!(f, "{a} / {k}"),
        }
    }
}

fn substitutes(b: &Bound, eps: &Rational) -> Vec<Rational> {
    let sign = match b.tag {
        MonadTag::Minus => -1,
        MonadTag::Standard => return vec![b.value.clone()],
        MonadTag::Plus => 1,
    };
    let sign = Rational::from_integer(sign.into());
    [eps.clone(), eps * eps]
        .into_iter()
        .map(|m| &b.value + &sign * m)
        .collect()
}

fn tag_of_sign(sign: Ordering) -> MonadTag {
    match sign {
        Ordering::Less => MonadTag::Minus,
        Ordering::Equal => MonadTag::Standard,
        Ordering::Greater => MonadTag::Plus,
    }
}

/// Expected standard part and tag of `op`, from substitution alone.
///
/// Deviations from the standard part are collected over every combination of
/// magnitudes; a lower endpoint takes the sign of the smallest deviation, an
/// upper endpoint the sign of the largest.
pub fn epsilon_expect(op: &BoundOp, eps: &Rational) -> Option<Bound> {
    type Combine = fn(&Rational, &Rational) -> Rational;
    let (a, b, role, f): (&Bound, Bound, Role, Combine) = match op {
        BoundOp::Add(a, b, role) => (a, b.clone(), *role, |x, y| x + y),
        BoundOp::Sub(a, b, role) => (a, b.clone(), *role, |x, y| x - y),
        BoundOp::Mul(a, b, role) => (a, b.clone(), *role, |x, y| x * y),
        BoundOp::DivScalar(a, k) => {
            if !k.is_positive() {
                return None;
            }
            (a, Bound::standard(k.clone()), Role::Lower, |x, y| x / y)
        }
    };
    let standard = f(&a.value, &b.value);
    let deviations: Vec<Rational> = substitutes(a, eps)
        .iter()
        .flat_map(|x| substitutes(&b, eps).into_iter().map(move |y| f(x, &y)))
        .map(|r| r - &standard)
        .collect();
    let extreme = match role {
        Role::Lower => deviations.iter().min(),
        Role::Upper => deviations.iter().max(),
    }
    .expect("at least one substitution");
    Some(Bound::new(standard, tag_of_sign(extreme.cmp(&Rational::zero()))))
}

/// Whether `result` matches the substitution replay of `op`.
pub fn epsilon_agrees(op: &BoundOp, eps: &Rational, result: &Bound) -> bool {
    epsilon_expect(op, eps).is_some_and(|expected| &expected == result)
}

/// Replays `op` through the library and compares against substitution.
pub fn epsilon_check(op: &BoundOp, eps: &Rational) -> bool {
    match op.apply() {
        Ok(result) => epsilon_agrees(op, eps, &result),
        Err(_) => epsilon_expect(op, eps).is_none(),
    }
}

/// Every tag pair over the representative values `{-1, 0, 1/2, 1}`, for
/// add, sub and mul at both endpoint roles.
pub fn tag_table() -> Vec<BoundOp> {
    let values = [ratio(-1, 1), ratio(0, 1), ratio(1, 2), ratio(1, 1)];
    let tags = [MonadTag::Minus, MonadTag::Standard, MonadTag::Plus];
    let bounds: Vec<Bound> = values
        .iter()
        .flat_map(|v| tags.iter().map(move |t| Bound::new(v.clone(), *t)))
        .collect();
    let mut ops = Vec::new();
    for a in &bounds {
        for b in &bounds {
            for role in [Role::Lower, Role::Upper] {
                ops.push(BoundOp::Add(a.clone(), b.clone(), role));
                ops.push(BoundOp::Sub(a.clone(), b.clone(), role));
                ops.push(BoundOp::Mul(a.clone(), b.clone(), role));
            }
        }
        for k in [ratio(1, 2), ratio(3, 1)] {
            ops.push(BoundOp::DivScalar(a.clone(), k));
        }
    }
    ops
}
