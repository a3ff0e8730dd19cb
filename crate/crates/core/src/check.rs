//! Seeded self-check suites.
//!
//! Three suites run per invocation:
//!
//! * `oracle`: random tag-free set pairs, each of add/sub/mul compared with
//!   [`oracle_setop`];
//! * `laws`: random tagged pairs for the additive inf/sup laws and random
//!   non-negative pairs for the subtractive and multiplicative ones;
//! * `tags`: the fixed monad tag table against epsilon substitution.
//!
//! Case `k` draws from its own RNG stream, so verdicts and the reported
//! counterexample are identical under sequential and parallel execution.

use std::fmt;

use crate::error::Result;
use crate::exec::{first_failure, Execution};
use crate::gen::{self, case_rng, SetShape};
use crate::nonstandard::{Bound, Role};
use crate::nsset::NsSet;
use crate::oracle::{default_eps, epsilon_check, oracle_setop, tag_table, SetOp};

pub type SetFn = fn(&NsSet, &NsSet) -> Result<NsSet>;

/// The set operations under test.
#[derive(Clone, Copy)]
pub struct SetOps {
    pub add: SetFn,
    pub sub: SetFn,
    pub mul: SetFn,
}

impl SetOps {
    pub fn get(&self, op: SetOp) -> SetFn {
        match op {
            SetOp::Add => self.add,
            SetOp::Sub => self.sub,
            SetOp::Mul => self.mul,
        }
    }
}

impl Default for SetOps {
    fn default() -> Self {
        SetOps {
            add: NsSet::minkowski_add,
            sub: NsSet::minkowski_sub,
            mul: NsSet::minkowski_mul,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub cases: u64,
    pub execution: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0, cases: 1000, execution: Execution::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Laws,
    Tags,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Oracle => "oracle",
            Suite::Laws => "laws",
            Suite::Tags => "tags",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub suite: Suite,
    pub case: u64,
    pub what: String,
    pub operands: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} suite, case {}: {}", self.suite, self.case, self.what)?;
        for (name, operand) in ["A", "B"].iter().zip(&self.operands) {
            writeln!(f, "  {name} = {operand}")?;
        }
        writeln!(f, "  expected {}", self.expected)?;
        write!(f, "  actual   {}", self.actual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub cases: u64,
    pub tag_checks: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn show<T: fmt::Display>(r: &Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Compares each set operation with the grid oracle on one random pair.
pub fn oracle_case(seed: u64, case: u64, ops: &SetOps) -> Option<Counterexample> {
    let mut rng = case_rng(seed, case);
    let a = gen::set(&mut rng, &SetShape::ORACLE);
    let b = gen::set(&mut rng, &SetShape::ORACLE);
    SetOp::ALL.into_iter().find_map(|op| {
        let expected = oracle_setop(op, &a, &b);
        let actual = ops.get(op)(&a, &b);
        (expected != actual).then(|| Counterexample {
            suite: Suite::Oracle,
            case,
            what: format!("{op} disagrees with the grid oracle"),
            operands: vec![a.to_string(), b.to_string()],
            expected: show(&expected),
            actual: show(&actual),
        })
    })
}

/// Checks the inf/sup laws on one random pair of each kind.
pub fn laws_case(seed: u64, case: u64, ops: &SetOps) -> Option<Counterexample> {
    let mut rng = case_rng(seed, case);
    let general = (gen::set(&mut rng, &SetShape::TAGGED), gen::set(&mut rng, &SetShape::TAGGED));
    let nonneg = (
        gen::set(&mut rng, &SetShape::NONNEGATIVE),
        gen::set(&mut rng, &SetShape::NONNEGATIVE),
    );
    type Law = fn(&Bound, &Bound, &Bound, &Bound) -> (Bound, Bound);
    let laws: [(SetOp, &(NsSet, NsSet), Law); 3] = [
        (SetOp::Add, &general, |ia, sa, ib, sb| (ia.add(ib, Role::Lower), sa.add(sb, Role::Upper))),
        (SetOp::Sub, &nonneg, |ia, sa, ib, sb| (ia.sub(sb, Role::Lower), sa.sub(ib, Role::Upper))),
        (SetOp::Mul, &nonneg, |ia, sa, ib, sb| (ia.mul(ib, Role::Lower), sa.mul(sb, Role::Upper))),
    ];
    let failure = laws.into_iter().find_map(|(op, (a, b), law)| {
        let (ia, sa) = (a.inf().ok()?, a.sup().ok()?);
        let (ib, sb) = (b.inf().ok()?, b.sup().ok()?);
        let expected = law(ia, sa, ib, sb);
        let result = ops.get(op)(a, b);
        let actual = result
            .as_ref()
            .ok()
            .and_then(|r| Some((r.inf().ok()?.clone(), r.sup().ok()?.clone())));
        (actual.as_ref() != Some(&expected)).then(|| Counterexample {
            suite: Suite::Laws,
            case,
            what: format!("inf/sup law for {op}"),
            operands: vec![a.to_string(), b.to_string()],
            expected: format!("inf {}, sup {}", expected.0, expected.1),
            actual: match actual {
                Some((i, s)) => format!("inf {i}, sup {s} in {}", show(&result)),
                None => show(&result),
            },
        })
    });
    failure
}

pub fn tag_failure() -> Option<Counterexample> {
    let eps = default_eps();
    tag_table().into_iter().enumerate().find_map(|(k, op)| {
        (!epsilon_check(&op, &eps)).then(|| Counterexample {
            suite: Suite::Tags,
            case: k as u64,
            what: format!("monad tag of {op}"),
            operands: vec![],
            expected: crate::oracle::epsilon_expect(&op, &eps)
                .map_or("undefined".into(), |b| b.to_string()),
            actual: show(&op.apply()),
        })
    })
}

/// Runs all suites; stops at the first counterexample.
pub fn run_check(config: &CheckConfig, ops: &SetOps) -> CheckReport {
    let CheckConfig { seed, cases, execution } = *config;
    let counterexample = tag_failure()
        .or_else(|| first_failure(cases, execution, |k| oracle_case(seed, k, ops)))
        .or_else(|| first_failure(cases, execution, |k| laws_case(seed, k, ops)));
    CheckReport { cases, tag_checks: tag_table().len(), counterexample }
}
