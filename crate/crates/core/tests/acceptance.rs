//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs under `cargo test` as a plain binary.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nprob::check::{laws_case, oracle_case, SetOps};
use nprob::dsl::render::{self, NumberStyle};
use nprob::dsl::{parse, parse_triple, run, Expr, QueryKind, Statement};
use nprob::gen::{self, case_rng, SetShape};
use nprob::oracle::{default_eps, epsilon_check, tag_table, BoundOp};
use nprob::worlds::{nl_triple, NlValue, WorldAssignment};
use nprob::{ratio, Bound, Execution, Flag, Label, MonadTag, NpTriple, NsSet, Rational, Role};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn labels(src: &str) -> Result<(BTreeSet<Label>, BTreeSet<Flag>), String> {
    let t = parse_triple(src).map_err(|e| e.to_string())?;
    let r = t.classify();
    Ok((r.labels, r.flags))
}

fn popescu() -> Outcome {
    let results = run(
        "let P = ((40%..60%), (20%..25%) U (30%..35%), {10%,20%,30%})\nNP(P)\nclassify(P)",
    )
    .map_err(|e| e.to_string())?;
    let r = &results[1].report;
    ensure(r.n_sup == Bound::standard(ratio(5, 4)), || format!("n_sup = {}", r.n_sup))?;
    let expected: BTreeSet<_> = [Label::Faillibilist, Label::Pseudoparadoxist].into();
    ensure(r.labels == expected, || format!("labels {:?}", r.labels))
}

fn particle() -> Outcome {
    let t = parse_triple("((20%..30%), (40%..45%) U [50%..51%], {20%,24%,28%})")
        .map_err(|e| e.to_string())?;
    let n = t.n_bounds();
    ensure(n.sup == Bound::standard(ratio(109, 100)), || format!("n_sup = {}", n.sup))
}

fn world_corners() -> Outcome {
    use NlValue::*;
    let table = |s: &[&str]| {
        let worlds: Vec<String> = (0..s.len()).map(|k| format!("w{k}")).collect();
        WorldAssignment::parse(worlds, s).map(|w| nl_triple(&w)).map_err(|e| e.to_string())
    };
    let tautology = table(&["T", "T", "T"])?;
    ensure(
        (tautology.t, tautology.f, tautology.i) == (Absolute, AbsoluteZero, AbsoluteZero),
        || format!("tautology {tautology}"),
    )?;
    let contradiction = table(&["F", "F", "F"])?;
    ensure(
        contradiction.t == AbsoluteZero && contradiction.f == Absolute,
        || format!("contradiction {contradiction}"),
    )?;
    let paradox = table(&["TF"])?;
    ensure(paradox.to_string() == "(1, 1, 1)", || format!("paradox {paradox}"))
}

fn first_mismatch(
    cases: u64,
    f: impl Fn(u64) -> Option<nprob::check::Counterexample> + Sync + Send,
) -> Outcome {
    match nprob::exec::first_failure(cases, Execution::default(), f) {
        None => Ok(()),
        Some(cx) => Err(cx.to_string()),
    }
}

fn inf_sup_laws() -> Outcome {
    let ops = SetOps::default();
    first_mismatch(1000, |k| laws_case(0, k, &ops))
}

fn oracle_equivalence() -> Outcome {
    let ops = SetOps::default();
    first_mismatch(1000, |k| oracle_case(0, k, &ops))
}

fn monad_algebra() -> Outcome {
    let eps = default_eps();
    let table = tag_table();
    if let Some(op) = table.iter().find(|op| !epsilon_check(op, &eps)) {
        return Err(format!("tag of {op}"));
    }
    // left monads absorb themselves, right likewise; a binad otherwise
    let b = |n, d, tag| Bound::new(ratio(n, d), tag);
    let absorption = [
        (BoundOp::Add(b(0, 1, MonadTag::Minus), b(0, 1, MonadTag::Minus), Role::Lower), b(0, 1, MonadTag::Minus)),
        (BoundOp::Add(b(0, 1, MonadTag::Plus), b(0, 1, MonadTag::Plus), Role::Upper), b(0, 1, MonadTag::Plus)),
        (BoundOp::Add(b(1, 2, MonadTag::Minus), b(1, 3, MonadTag::Standard), Role::Lower), b(5, 6, MonadTag::Minus)),
        (BoundOp::Add(b(0, 1, MonadTag::Minus), b(0, 1, MonadTag::Plus), Role::Lower), b(0, 1, MonadTag::Minus)),
        (BoundOp::Add(b(0, 1, MonadTag::Minus), b(0, 1, MonadTag::Plus), Role::Upper), b(0, 1, MonadTag::Plus)),
    ];
    for (op, expected) in absorption {
        let actual = op.apply().map_err(|e| e.to_string())?;
        ensure(actual == expected && epsilon_check(&op, &eps), || format!("{op} = {actual}"))?;
    }
    ensure(
        NsSet::binad(ratio(0, 1)).pieces().len() == 2,
        || "binad is not two points".into(),
    )
}

fn event_algebra() -> Outcome {
    for k in 0..500 {
        let t = gen::triple(&mut case_rng(7, k), &SetShape::TAGGED);
        ensure(t.not().not() == t, || format!("not not {t} = {}", t.not().not()))?;
    }
    let s = |n: i64| ratio(n, 10);
    let (a, b) = (NpTriple::scalar(s(3), s(0), s(7)), NpTriple::scalar(s(6), s(0), s(4)));
    let and = a.and(&b);
    let or = a.or(&b);
    let not = a.not();
    let (pa, pb) = (s(3), s(6));
    let one = Rational::from_integer(1.into());
    let p = |set: &NsSet| set.as_point().map(|b| b.value.clone());
    ensure(p(and.t()) == Some(&pa * &pb), || format!("and {and}"))?;
    ensure(p(or.t()) == Some(&pa + &pb - &pa * &pb), || format!("or {or}"))?;
    ensure(p(not.t()) == Some(&one - &pa) && p(not.f()) == Some(&one - s(7)), || format!("not {not}"))?;
    let identity = NpTriple::scalar(one.clone(), one.clone(), one);
    for k in 0..100 {
        let t = gen::triple(&mut case_rng(11, k), &SetShape::TAGGED);
        ensure(t.and(&identity) == t, || format!("{t} and identity"))?;
    }
    Ok(())
}

fn classifier_table() -> Outcome {
    use Label::*;
    let fixtures: [(&str, &[Label], &[Flag]); 7] = [
        ("({.5}, {0}, {.5})", &[Classical], &[]),
        ("({.3}, {0}, {.5})", &[Intuitionistic], &[]),
        ("({.8}, {0}, {.6})", &[Paraconsistent, Pseudoparadoxist], &[]),
        ("({1}, {0}, {1})", &[Dialetheist, Pseudoparadoxist], &[]),
        ("({.3}, {.2}, {.5})", &[Faillibilist], &[]),
        ("([.5..0.7], [0..0.1], {.3})", &[Pseudoparadoxist], &[]),
        ("({1+}, {0}, {0})", &[Tautologic, Pseudoparadoxist], &[Flag::Overprobable]),
    ];
    for (src, want, want_flags) in fixtures {
        let (got, flags) = labels(src)?;
        let want: BTreeSet<_> = want.iter().copied().collect();
        ensure(got == want, || format!("{src}: labels {got:?}"))?;
        for flag in want_flags {
            ensure(flags.contains(flag), || format!("{src}: flags {flags:?}"))?;
        }
    }
    Ok(())
}

fn dsl_round_trip() -> Outcome {
    for k in 0..500 {
        let t = gen::triple(&mut case_rng(3, k), &SetShape::TAGGED);
        let text = render::triple(&t, NumberStyle::Fraction);
        let back = parse_triple(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == t, || format!("{text} parsed back as {back}"))?;
    }
    let program = parse("NP(A or B and C)").map_err(|e| e.to_string())?;
    let is = |e: &Expr, n: &str| matches!(e, Expr::Var { name, .. } if name == n);
    let shaped = match &program.statements[..] {
        [Statement::Query { kind: QueryKind::Np, expr: Expr::Or(a, rhs), .. }] => {
            is(a, "A") && matches!(rhs.as_ref(), Expr::And(b, c) if is(b, "B") && is(c, "C"))
        }
        _ => false,
    };
    ensure(shaped, || format!("parsed as {:?}", program.statements))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("popescu example", popescu, Duration::from_secs(1)),
        ("particle example", particle, Duration::from_secs(1)),
        ("world corner cases", world_corners, Duration::from_secs(1)),
        ("inf/sup laws", inf_sup_laws, Duration::from_secs(10)),
        ("oracle equivalence", oracle_equivalence, Duration::from_secs(10)),
        ("monad algebra", monad_algebra, Duration::from_secs(1)),
        ("event algebra", event_algebra, Duration::from_secs(5)),
        ("classifier table", classifier_table, Duration::from_secs(1)),
        ("dsl round-trip", dsl_round_trip, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (n, (name, criterion, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS {} {name} ({elapsed:.2?})", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {why}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
