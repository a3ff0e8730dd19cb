//! Finite unions of closed pieces over the non-standard real line.
//!
//! Every [`NsSet`] is kept in normal form: pieces sorted by lower end,
//! pairwise disjoint, and with no two pieces touching. Two sets are equal as
//! sets exactly when their normal forms are equal.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{NsError, Result};
use crate::nonstandard::{Bound, MonadTag, Rational, Role};

/// Closed piece `[lo, hi]`; a point when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Piece {
    lo: Bound,
    hi: Bound,
}

impl Piece {
    pub fn new(lo: Bound, hi: Bound) -> Result<Self> {
        if lo > hi {
            return Err(NsError::InvertedPiece { lo: Box::new(lo), hi: Box::new(hi) });
        }
        Ok(Piece { lo, hi })
    }

    pub fn point(b: Bound) -> Self {
        Piece { lo: b.clone(), hi: b }
    }

    pub fn lo(&self) -> &Bound {
        &self.lo
    }

    pub fn hi(&self) -> &Bound {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Bound) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    fn add(&self, other: &Piece) -> Piece {
        Piece {
            lo: self.lo.add(&other.lo, Role::Lower),
            hi: self.hi.add(&other.hi, Role::Upper),
        }
    }

    fn sub(&self, other: &Piece) -> Piece {
        Piece {
            lo: self.lo.sub(&other.hi, Role::Lower),
            hi: self.hi.sub(&other.lo, Role::Upper),
        }
    }

    fn mul(&self, other: &Piece) -> Piece {
        let corners = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = corners
            .iter()
            .map(|(x, y)| x.mul(y, Role::Lower))
            .min()
            .expect("four corners");
        let hi = corners
            .iter()
            .map(|(x, y)| x.mul(y, Role::Upper))
            .max()
            .expect("four corners");
        Piece { lo, hi }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NsSet {
    pieces: Vec<Piece>,
}

impl NsSet {
    pub fn empty() -> Self {
        NsSet::default()
    }

    /// Sorts and merges overlapping or touching pieces.
    pub fn normalize<I: IntoIterator<Item = Piece>>(pieces: I) -> Self {
        let mut pieces: Vec<Piece> = pieces.into_iter().collect();
        pieces.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
        for p in pieces {
            match merged.last_mut() {
                Some(last) if p.lo <= last.hi => {
                    if p.hi > last.hi {
                        last.hi = p.hi;
                    }
                }
                _ => merged.push(p),
            }
        }
        NsSet { pieces: merged }
    }

    /// Builds a set from raw `(lo, hi)` pairs, rejecting inverted pairs.
    pub fn from_bounds<I: IntoIterator<Item = (Bound, Bound)>>(pairs: I) -> Result<Self> {
        let pieces = pairs
            .into_iter()
            .map(|(lo, hi)| Piece::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Ok(NsSet::normalize(pieces))
    }

    pub fn point(b: Bound) -> Self {
        NsSet { pieces: vec![Piece::point(b)] }
    }

    pub fn interval(lo: Bound, hi: Bound) -> Result<Self> {
        Ok(NsSet { pieces: vec![Piece::new(lo, hi)?] })
    }

    pub fn points<I: IntoIterator<Item = Bound>>(points: I) -> Self {
        NsSet::normalize(points.into_iter().map(Piece::point))
    }

    /// The two-point stand-in for the punctured neighbourhood of `c`: both
    /// monads are present, `c` itself is not.
    pub fn binad(c: Rational) -> Self {
        NsSet::points([
            Bound::new(c.clone(), MonadTag::Minus),
            Bound::new(c, MonadTag::Plus),
        ])
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn is_tag_free(&self) -> bool {
        self.pieces.iter().all(|p| p.lo.is_standard() && p.hi.is_standard())
    }

    /// `Some(b)` when the set is exactly `{b}`.
    pub fn as_point(&self) -> Option<&Bound> {
        match self.pieces.as_slice() {
            [p] if p.is_point() => Some(&p.lo),
            _ => None,
        }
    }

    pub fn is_standard_point(&self, v: &Rational) -> bool {
        self.as_point()
            .is_some_and(|b| b.is_standard() && &b.value == v)
    }

    pub fn inf(&self) -> Result<&Bound> {
        self.pieces.first().map(|p| &p.lo).ok_or(NsError::EmptySet)
    }

    pub fn sup(&self) -> Result<&Bound> {
        self.pieces.last().map(|p| &p.hi).ok_or(NsError::EmptySet)
    }

    pub fn contains(&self, x: &Bound) -> bool {
        self.pieces
            .binary_search_by(|p| {
                if &p.hi < x {
                    Ordering::Less
                } else if &p.lo > x {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            })
            .is_ok()
    }

    pub fn union(&self, other: &NsSet) -> NsSet {
        NsSet::normalize(self.pieces.iter().chain(&other.pieces).cloned())
    }

    pub fn intersect(&self, other: &NsSet) -> NsSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.pieces.len() && j < other.pieces.len() {
            let (a, b) = (&self.pieces[i], &other.pieces[j]);
            let lo = a.lo.clone().max(b.lo.clone());
            let hi = a.hi.clone().min(b.hi.clone());
            if lo <= hi {
                out.push(Piece { lo, hi });
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        NsSet { pieces: out }
    }

    fn pairwise(&self, other: &NsSet, op: impl Fn(&Piece, &Piece) -> Piece) -> Result<NsSet> {
        if self.is_empty() || other.is_empty() {
            return Err(NsError::EmptySet);
        }
        Ok(NsSet::normalize(self.pieces.iter().flat_map(|a| {
            let op = &op;
            other.pieces.iter().map(move |b| op(a, b))
        })))
    }

    /// `{x + y : x in self, y in other}`.
    pub fn minkowski_add(&self, other: &NsSet) -> Result<NsSet> {
        self.pairwise(other, Piece::add)
    }

    /// `{x - y : x in self, y in other}`; every occurrence varies
    /// independently, so `S - S` is not `{0}` for non-degenerate `S`.
    pub fn minkowski_sub(&self, other: &NsSet) -> Result<NsSet> {
        self.pairwise(other, Piece::sub)
    }

    /// `{x * y : x in self, y in other}`, spanning the extreme corner products
    /// of each piece pair so negative pieces are handled too.
    pub fn minkowski_mul(&self, other: &NsSet) -> Result<NsSet> {
        self.pairwise(other, Piece::mul)
    }

    pub fn div_by_scalar(&self, k: &Rational) -> Result<NsSet> {
        if !k.is_positive() {
            return Err(NsError::NonPositiveDivisor(k.clone()));
        }
        if self.is_empty() {
            return Err(NsError::EmptySet);
        }
        let pieces = self
            .pieces
            .iter()
            .map(|p| {
                Ok(Piece {
                    lo: p.lo.div_scalar(k)?,
                    hi: p.hi.div_scalar(k)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NsSet { pieces })
    }

    /// Whether every value in the set is at least zero.
    pub fn is_nonnegative(&self) -> bool {
        self.inf().is_ok_and(|b| b >= &Bound::zero())
    }
}

impl std::fmt::Display for NsSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::dsl::render::set(self, crate::dsl::render::NumberStyle::Fraction))
    }
}
