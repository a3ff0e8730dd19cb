//! Non-standard finite numbers.
//!
//! A [`Bound`] is an exact rational standard part together with a
//! [`MonadTag`] saying whether the number sits in the left monad (`a-`),
//! is the standard real itself (`a`), or sits in the right monad (`a+`).
//! Infinitesimals are symbolic: only the side of the standard part matters,
//! never the magnitude, so `1 + 2&` and `1 + &` are both `1+`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{NsError, Result};

pub type Rational = BigRational;

/// Builds `numer / denom` as an exact rational.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonadTag {
    /// Left monad: infinitesimally below the standard part.
    Minus,
    Standard,
    /// Right monad: infinitesimally above the standard part.
    Plus,
}

impl MonadTag {
    /// Mirrors the tag through the standard part (`Minus <-> Plus`).
    pub fn reflect(self) -> Self {
        match self {
            MonadTag::Minus => MonadTag::Plus,
            MonadTag::Standard => MonadTag::Standard,
            MonadTag::Plus => MonadTag::Minus,
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            MonadTag::Minus => "-",
            MonadTag::Standard => "",
            MonadTag::Plus => "+",
        }
    }

    /// Tag of the product of two infinitesimals with these signs.
    fn product(self, other: Self) -> Self {
        match (self, other) {
            (MonadTag::Standard, _) | (_, MonadTag::Standard) => MonadTag::Standard,
            (a, b) if a == b => MonadTag::Plus,
            _ => MonadTag::Minus,
        }
    }

    /// Tag contributed by `self` after scaling by a factor with the given value.
    fn scaled_by(self, factor: &Rational) -> Self {
        if factor.is_zero() {
            MonadTag::Standard
        } else if factor.is_negative() {
            self.reflect()
        } else {
            self
        }
    }
}

/// Which end of an interval a computed bound will occupy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Lower,
    Upper,
}

/// Outcome of adding two monad tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TagCombination {
    Tag(MonadTag),
    /// Both monads at once: the two-sided punctured neighbourhood.
    Binad,
}

impl TagCombination {
    /// Addition table for monad tags. Like monads absorb themselves, the
    /// standard tag is neutral, and opposite monads form a binad.
    pub fn of(a: MonadTag, b: MonadTag) -> Self {
        use MonadTag::*;
        match (a, b) {
            (Standard, t) | (t, Standard) => TagCombination::Tag(t),
            (Minus, Minus) => TagCombination::Tag(Minus),
            (Plus, Plus) => TagCombination::Tag(Plus),
            (Minus, Plus) | (Plus, Minus) => TagCombination::Binad,
        }
    }

    /// Collapses a binad onto the side an interval endpoint needs: the infimum
    /// of both monads is on the minus side, the supremum on the plus side.
    pub fn resolve(self, role: Role) -> MonadTag {
        match (self, role) {
            (TagCombination::Tag(t), _) => t,
            (TagCombination::Binad, Role::Lower) => MonadTag::Minus,
            (TagCombination::Binad, Role::Upper) => MonadTag::Plus,
        }
    }
}

/// A non-standard finite number `a-`, `a` or `a+` with exact rational `a`.
///
/// Ordering is by value first; equal values order `a- < a < a+`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bound {
    pub value: Rational,
    pub tag: MonadTag,
}

impl Bound {
    pub fn new(value: Rational, tag: MonadTag) -> Self {
        Bound { value, tag }
    }

    pub fn standard(value: Rational) -> Self {
        Bound::new(value, MonadTag::Standard)
    }

    pub fn zero() -> Self {
        Bound::standard(Rational::zero())
    }

    pub fn one() -> Self {
        Bound::standard(Rational::one())
    }

    pub fn is_standard(&self) -> bool {
        self.tag == MonadTag::Standard
    }

    pub fn add(&self, other: &Bound, role: Role) -> Bound {
        let tag = TagCombination::of(self.tag, other.tag).resolve(role);
        Bound::new(&self.value + &other.value, tag)
    }

    /// Subtracting a number from the right monad lands in the left monad of
    /// the difference, so the subtrahend's tag is reflected before combining.
    pub fn sub(&self, other: &Bound, role: Role) -> Bound {
        let tag = TagCombination::of(self.tag, other.tag.reflect()).resolve(role);
        Bound::new(&self.value - &other.value, tag)
    }

    pub fn mul(&self, other: &Bound, role: Role) -> Bound {
        let value = &self.value * &other.value;
        // (a + da)(b + db) = ab + b.da + a.db + da.db
        let tag = if self.value.is_zero() && other.value.is_zero() {
            self.tag.product(other.tag)
        } else {
            let from_self = self.tag.scaled_by(&other.value);
            let from_other = other.tag.scaled_by(&self.value);
            TagCombination::of(from_self, from_other).resolve(role)
        };
        Bound::new(value, tag)
    }

    pub fn div_scalar(&self, k: &Rational) -> Result<Bound> {
        if !k.is_positive() {
            return Err(NsError::NonPositiveDivisor(k.clone()));
        }
        Ok(Bound::new(&self.value / k, self.tag))
    }

    /// Multiplication by a positive scalar; the tag is kept.
    pub fn scale(&self, k: &Rational) -> Result<Bound> {
        if !k.is_positive() {
            return Err(NsError::NonPositiveDivisor(k.clone()));
        }
        Ok(Bound::new(&self.value * k, self.tag))
    }

    /// Compares against a standard real.
    pub fn cmp_value(&self, v: &Rational) -> Ordering {
        self.value.cmp(v).then(self.tag.cmp(&MonadTag::Standard))
    }
}

pub fn bound_cmp(a: &Bound, b: &Bound) -> Ordering {
    a.cmp(b)
}

impl From<Rational> for Bound {
    fn from(value: Rational) -> Self {
        Bound::standard(value)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.tag.suffix())
    }
}
