//! Seeded random generators for property suites and benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::nonstandard::{ratio, Bound, MonadTag};
use crate::nsset::{NsSet, Piece};
use crate::probability::NpTriple;

/// Independent, reproducible stream for case `case` under `seed`.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetShape {
    pub max_pieces: usize,
    pub max_denom: i64,
    /// Values are drawn from `[min, max]`; tags never push a value past either end.
    pub min: i64,
    pub max: i64,
    pub tagged: bool,
}

impl SetShape {
    /// Tag-free sets on `[-2, 2]`, up to three pieces, denominators up to 16.
    pub const ORACLE: SetShape = SetShape { max_pieces: 3, max_denom: 16, min: -2, max: 2, tagged: false };
    /// Tagged sets on `[-2, 2]`.
    pub const TAGGED: SetShape = SetShape { tagged: true, ..SetShape::ORACLE };
    /// Tagged sets on `[0, 2]`.
    pub const NONNEGATIVE: SetShape = SetShape { min: 0, ..SetShape::TAGGED };
    /// Tag-free sets on `[0, 1]`.
    pub const UNIT: SetShape = SetShape { min: 0, max: 1, ..SetShape::ORACLE };
}

pub fn bound<R: Rng>(rng: &mut R, shape: &SetShape) -> Bound {
    let denom = rng.gen_range(1..=shape.max_denom);
    let numer = rng.gen_range(shape.min * denom..=shape.max * denom);
    let tag = if shape.tagged {
        [MonadTag::Minus, MonadTag::Standard, MonadTag::Plus][rng.gen_range(0..3)]
    } else {
        MonadTag::Standard
    };
    let tag = match tag {
        MonadTag::Minus if numer == shape.min * denom => MonadTag::Standard,
        MonadTag::Plus if numer == shape.max * denom => MonadTag::Standard,
        t => t,
    };
    Bound::new(ratio(numer, denom), tag)
}

fn piece<R: Rng>(rng: &mut R, shape: &SetShape) -> Piece {
    let a = bound(rng, shape);
    if rng.gen_bool(0.25) {
        return Piece::point(a);
    }
    let b = bound(rng, shape);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Piece::new(lo, hi).expect("ordered endpoints")
}

/// Non-empty random set.
pub fn set<R: Rng>(rng: &mut R, shape: &SetShape) -> NsSet {
    let n = rng.gen_range(1..=shape.max_pieces);
    NsSet::normalize((0..n).map(|_| piece(rng, shape)))
}

pub fn triple<R: Rng>(rng: &mut R, shape: &SetShape) -> NpTriple {
    NpTriple::new(set(rng, shape), set(rng, shape), set(rng, shape)).expect("non-empty sets")
}
