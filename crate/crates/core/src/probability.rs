//! Neutrosophic probability triples and their event algebra.
//!
//! An event's probability is a triple `(T, I, F)` of non-empty sets: the
//! chance of it being true, indeterminate and false. Components may overlap
//! and are not clamped to `[0, 1]`; the union formula in particular escapes
//! that range under independent (Minkowski) evaluation.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{NsError, Result};
use crate::nonstandard::{Bound, Rational, Role};
use crate::nsset::NsSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NpTriple {
    t: NsSet,
    i: NsSet,
    f: NsSet,
}

impl NpTriple {
    pub fn new(t: NsSet, i: NsSet, f: NsSet) -> Result<Self> {
        for (name, c) in [("T", &t), ("I", &i), ("F", &f)] {
            if c.is_empty() {
                return Err(NsError::EmptyComponent(name));
            }
        }
        Ok(NpTriple { t, i, f })
    }

    /// Triple of standard singletons `({t}, {i}, {f})`.
    pub fn scalar(t: Rational, i: Rational, f: Rational) -> Self {
        NpTriple {
            t: NsSet::point(Bound::standard(t)),
            i: NsSet::point(Bound::standard(i)),
            f: NsSet::point(Bound::standard(f)),
        }
    }

    pub fn t(&self) -> &NsSet {
        &self.t
    }

    pub fn i(&self) -> &NsSet {
        &self.i
    }

    pub fn f(&self) -> &NsSet {
        &self.f
    }

    pub fn components(&self) -> [&NsSet; 3] {
        [&self.t, &self.i, &self.f]
    }

    fn zip_with(
        &self,
        other: &NpTriple,
        op: impl Fn(&NsSet, &NsSet) -> Result<NsSet>,
    ) -> NpTriple {
        let apply = |a, b| op(a, b).expect("triple components are non-empty");
        NpTriple {
            t: apply(&self.t, &other.t),
            i: apply(&self.i, &other.i),
            f: apply(&self.f, &other.f),
        }
    }

    /// Componentwise set addition.
    pub fn componentwise_add(&self, other: &NpTriple) -> NpTriple {
        self.zip_with(other, NsSet::minkowski_add)
    }

    /// Componentwise set subtraction.
    pub fn componentwise_sub(&self, other: &NpTriple) -> NpTriple {
        self.zip_with(other, NsSet::minkowski_sub)
    }

    /// Componentwise set multiplication.
    pub fn componentwise_mul(&self, other: &NpTriple) -> NpTriple {
        self.zip_with(other, NsSet::minkowski_mul)
    }

    /// Probability of `A and B`.
    pub fn and(&self, other: &NpTriple) -> NpTriple {
        self.componentwise_mul(other)
    }

    /// Probability of `not A`: `{1}` minus each component.
    pub fn not(&self) -> NpTriple {
        let one = NsSet::point(Bound::one());
        let flip = |c: &NsSet| one.minkowski_sub(c).expect("non-empty component");
        NpTriple {
            t: flip(&self.t),
            i: flip(&self.i),
            f: flip(&self.f),
        }
    }

    /// Probability of `A or B` as `A + B - A*B`, every occurrence independent.
    pub fn or(&self, other: &NpTriple) -> NpTriple {
        self.componentwise_add(other)
            .componentwise_sub(&self.and(other))
    }

    pub fn n_bounds(&self) -> NBounds {
        let inf = |c: &NsSet| c.inf().expect("non-empty component").clone();
        let sup = |c: &NsSet| c.sup().expect("non-empty component").clone();
        NBounds {
            inf: inf(&self.t)
                .add(&inf(&self.i), Role::Lower)
                .add(&inf(&self.f), Role::Lower),
            sup: sup(&self.t)
                .add(&sup(&self.i), Role::Upper)
                .add(&sup(&self.f), Role::Upper),
        }
    }

    /// `sup T <= 0` and `inf F >= 1`; `I` is unrestricted.
    pub fn is_impossible(&self) -> bool {
        sup(&self.t) <= Bound::zero() && inf(&self.f) >= Bound::one()
    }

    /// `inf T >= 1` and `sup F <= 0`; `I` is unrestricted.
    pub fn is_sure(&self) -> bool {
        inf(&self.t) >= Bound::one() && sup(&self.f) <= Bound::zero()
    }

    pub fn is_totally_indeterminate(&self) -> bool {
        inf(&self.i) >= Bound::one()
    }

    pub fn classify(&self) -> ClassificationReport {
        classify(self)
    }
}

fn inf(c: &NsSet) -> Bound {
    c.inf().expect("non-empty component").clone()
}

fn sup(c: &NsSet) -> Bound {
    c.sup().expect("non-empty component").clone()
}

/// Sums of the component infima and suprema.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NBounds {
    pub inf: Bound,
    pub sup: Bound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Classical,
    Intuitionistic,
    Paraconsistent,
    Dialetheist,
    Faillibilist,
    Pseudoparadoxist,
    Tautologic,
}

impl Label {
    pub const ALL: [Label; 7] = [
        Label::Classical,
        Label::Intuitionistic,
        Label::Paraconsistent,
        Label::Dialetheist,
        Label::Faillibilist,
        Label::Pseudoparadoxist,
        Label::Tautologic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::Classical => "classical",
            Label::Intuitionistic => "intuitionistic",
            Label::Paraconsistent => "paraconsistent",
            Label::Dialetheist => "dialetheist",
            Label::Faillibilist => "faillibilist",
            Label::Pseudoparadoxist => "pseudoparadoxist",
            Label::Tautologic => "tautologic",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Over- and underflow of a single component past 1 or 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    Overprobable,
    Underprobable,
    Overindeterminate,
    Underindeterminate,
    Overunprobable,
    Underunprobable,
}

impl Flag {
    pub fn name(self) -> &'static str {
        match self {
            Flag::Overprobable => "overprobable",
            Flag::Underprobable => "underprobable",
            Flag::Overindeterminate => "overindeterminate",
            Flag::Underindeterminate => "underindeterminate",
            Flag::Overunprobable => "overunprobable",
            Flag::Underunprobable => "underunprobable",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n_inf: Bound,
    pub n_sup: Bound,
    pub labels: BTreeSet<Label>,
    pub flags: BTreeSet<Flag>,
}

/// Places a triple in the taxonomy of probability generalizations.
///
/// Scalar conditions are lifted to sets with for-all semantics: `i = 0`
/// means `I = {0}`, `n = 1` means `n_inf = n_sup = 1`, and strict
/// inequalities are tested on the relevant extreme. Labels are not exclusive.
pub fn classify(triple: &NpTriple) -> ClassificationReport {
    let zero = Bound::zero();
    let one = Bound::one();
    let NBounds { inf: n_inf, sup: n_sup } = triple.n_bounds();
    let no_indeterminacy = triple.i.is_standard_point(&Rational::zero());
    let (t_inf, t_sup) = (inf(&triple.t), sup(&triple.t));
    let (i_inf, i_sup) = (inf(&triple.i), sup(&triple.i));
    let (f_inf, f_sup) = (inf(&triple.f), sup(&triple.f));

    let mut labels = BTreeSet::new();
    if no_indeterminacy && n_inf == one && n_sup == one {
        labels.insert(Label::Classical);
    }
    if no_indeterminacy && n_sup < one {
        labels.insert(Label::Intuitionistic);
    }
    if no_indeterminacy && n_inf > one && t_sup < one && f_sup < one {
        labels.insert(Label::Paraconsistent);
    }
    if no_indeterminacy
        && triple.t.is_standard_point(&Rational::one())
        && triple.f.is_standard_point(&Rational::one())
    {
        labels.insert(Label::Dialetheist);
    }
    if i_inf > zero {
        labels.insert(Label::Faillibilist);
    }
    if n_sup > one || n_inf < zero {
        labels.insert(Label::Pseudoparadoxist);
    }
    if t_sup > one {
        labels.insert(Label::Tautologic);
    }

    let mut flags = BTreeSet::new();
    let component_flags = [
        (&t_inf, &t_sup, Flag::Underprobable, Flag::Overprobable),
        (&i_inf, &i_sup, Flag::Underindeterminate, Flag::Overindeterminate),
        (&f_inf, &f_sup, Flag::Underunprobable, Flag::Overunprobable),
    ];
    for (lo, hi, under, over) in component_flags {
        if hi > &one {
            flags.insert(over);
        }
        if lo < &zero {
            flags.insert(under);
        }
    }

    ClassificationReport { n_inf, n_sup, labels, flags }
}

impl fmt::Display for NpTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::render::triple(
            self,
            crate::dsl::render::NumberStyle::Fraction,
        ))
    }
}
