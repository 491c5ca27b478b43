//! Acceptance suite: one PASS/FAIL line per criterion. Runs with a custom
//! harness so the lines are always printed; exits non-zero if any fails.

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use favour::construction::{
    build_disjunctive_world, build_two_class_world, ConstructionSpec, DisjunctiveWorld,
};
use favour::defaults::{
    compute_extensions, parse_theory, query, to_consequent_form, verify_extension, QueryMode,
};
use favour::logic::{consistent, parse_formula, Formula};
use favour::paradox::{
    check_disjunction_principle, chung_check, default_formulas, nine_antecedent_profile,
    proposition1_check, proposition2_audit, search_counterexamples, simpson_check, CellTable,
    ChungVariant, PrincipleOutcome, Prop1Verdict, Prop2Outcome, SearchPattern,
};
use favour::rational::{exact, ratio};
use favour::world::{parse_world, Relation, World};
use favour::Rational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x5EED_F00D;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn equal(name: &str, got: &Rational, want: &Rational) -> Result<(), String> {
    ensure(got == want, || {
        format!("{name} = {}, expected {}", exact(got), exact(want))
    })
}

fn two_class_counterexample() -> Outcome {
    let w = build_two_class_world(1);
    let s = f("s");
    equal("p(s)", &w.probability(&s).unwrap(), &ratio(1, 2))?;
    equal(
        "p(s|c1)",
        &w.conditional(&s, &f("c1")).unwrap(),
        &ratio(3, 5),
    )?;
    equal(
        "p(s|c2)",
        &w.conditional(&s, &f("c2")).unwrap(),
        &ratio(3, 5),
    )?;
    equal(
        "p(s|c1|c2)",
        &w.conditional(&s, &f("c1 | c2")).unwrap(),
        &ratio(3, 7),
    )?;
    equal(
        "p(s|c1&c2)",
        &w.conditional(&s, &f("c1 & c2")).unwrap(),
        &ratio(1, 1),
    )?;
    for (e, want) in [
        ("c1", Relation::Favours),
        ("c2", Relation::Favours),
        ("c1 | c2", Relation::Disfavours),
    ] {
        let got = w.favours(&s, &f(e)).unwrap().relation;
        ensure(got == want, || {
            format!("favours(s, {e}) = {got:?}, expected {want:?}")
        })?;
    }
    Ok("p(s)=1/2, p(s|ci)=3/5, p(s|c1|c2)=3/7, p(s|c1&c2)=1".into())
}

/// Checks the bounds on a materialized world, every class individually.
fn check_construction(v1: Rational, v2: Rational) -> Result<(usize, usize), String> {
    let spec = ConstructionSpec::new(v1.clone(), v2.clone(), 1).map_err(|e| e.to_string())?;
    let (p1, q1) = (v1.numer().clone(), v1.denom().clone());
    let (p2, q2) = (v2.numer().clone(), v2.denom().clone());
    let ceil_div = |a: BigInt, b: BigInt| (a + &b - 1) / b;
    let k = ceil_div(p1.clone(), &q1 - &p1);
    let n = ceil_div(&k * (&q2 - &p2), p2);
    ensure(spec.k() == &k && spec.n() == &n, || {
        format!(
            "v1={} v2={}: k,n = {},{} expected {k},{n}",
            exact(&v1),
            exact(&v2),
            spec.k(),
            spec.n()
        )
    })?;
    let built = build_disjunctive_world(&spec);
    let s = DisjunctiveWorld::science();
    for i in 1..=built.n {
        let p = built.world.conditional(&s, &built.class(i)).unwrap();
        ensure(p >= v1, || {
            format!("p(s|c{i}) = {} < v1 = {}", exact(&p), exact(&v1))
        })?;
    }
    let union = built.world.conditional(&s, &built.any_class()).unwrap();
    ensure(union <= v2, || {
        format!("p(s|any class) = {} > v2 = {}", exact(&union), exact(&v2))
    })?;
    Ok((built.k, built.n))
}

fn generalized_construction() -> Outcome {
    let spec = ConstructionSpec::new(ratio(9, 10), ratio(1, 10), 1).unwrap();
    let built = build_disjunctive_world(&spec);
    ensure(built.k == 9 && built.n == 81, || {
        format!("k={}, n={}", built.k, built.n)
    })?;
    let s = DisjunctiveWorld::science();
    for i in 1..=built.n {
        equal(
            &format!("p(s|c{i})"),
            &built.world.conditional(&s, &built.class(i)).unwrap(),
            &ratio(9, 10),
        )?;
    }
    equal(
        "p(s|any class)",
        &built.world.conditional(&s, &built.any_class()).unwrap(),
        &ratio(1, 10),
    )?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut sweeps = 0;
    while sweeps < 100 {
        let q1 = rng.gen_range(2..=20i64);
        let v1 = ratio(rng.gen_range(1..q1), q1);
        let q2 = rng.gen_range(2..=20i64);
        let v2 = ratio(rng.gen_range(1..q2), q2);
        if v2 >= v1 {
            continue;
        }
        check_construction(v1, v2)?;
        sweeps += 1;
    }

    let (k, n) = check_construction(ratio(99, 100), ratio(1, 100))?;
    ensure(k == 99 && n == 9801, || {
        format!("epsilon=1/100 gave k={k}, n={n}")
    })?;
    Ok("k=9 n=81 exact; 100 random pairs; epsilon=1/100 gives k=99 n=9801 with all classes checked".into())
}

fn cells_world(t: &CellTable) -> World {
    t.to_world().expect("non-empty table")
}

fn proposition1_suite() -> Outcome {
    let [a, b, c] = default_formulas();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let (mut confirmed, mut sampled) = (0, 0);
    while confirmed < 1000 {
        let t = CellTable::random(&mut rng, 9);
        sampled += 1;
        // Cheap rejection of tables where a and b overlap; the checker decides the rest.
        if t.total() == 0 || t.get(true, true, true) + t.get(true, true, false) > 0 {
            continue;
        }
        match proposition1_check(&cells_world(&t), &a, &b, &c).unwrap() {
            Prop1Verdict::Confirmed(_) => confirmed += 1,
            Prop1Verdict::PreconditionFailed(_) => {}
            Prop1Verdict::Refuted(v) => {
                return Err(format!(
                    "{t}: p(a|b|c) = {:?} vs {}",
                    v.conditional,
                    exact(&v.prior)
                ))
            }
        }
    }
    Ok(format!(
        "{confirmed} worlds confirmed, 0 counterexamples ({sampled} sampled)"
    ))
}

fn proposition2_suite() -> Outcome {
    let [a, b, c] = default_formulas();
    let check = |t: &CellTable| -> Result<Option<Prop2Outcome>, String> {
        let w = cells_world(t);
        let positive = [&a, &b, &c]
            .iter()
            .all(|x| w.probability(x).unwrap() > Rational::default());
        if !positive {
            return Ok(None);
        }
        let r = proposition2_audit(&w, &a, &b, &c).unwrap();
        let exclusive = w.probability(&f("b & c")).unwrap() == Rational::default();
        match r.outcome {
            Prop2Outcome::NotApplicable => Ok(None),
            Prop2Outcome::Violated => Err(format!("{t}: neither b&c nor b|c favours a")),
            Prop2Outcome::ViaConjunction if exclusive => {
                Err(format!("{t}: p(b&c)=0 but disjunction fails"))
            }
            o => Ok(Some(o)),
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let (mut applicable, mut exclusive) = (0, 0);
    while applicable < 1000 {
        let t = CellTable::random(&mut rng, 9);
        if t.total() > 0 && check(&t)?.is_some() {
            applicable += 1;
            exclusive += usize::from(t.get(true, true, true) + t.get(false, true, true) == 0);
        }
    }
    // A further 200 worlds with b & c forced empty, so the exclusive branch is exercised.
    let mut forced = 0;
    while forced < 200 {
        let mut t = CellTable::random(&mut rng, 9);
        t.counts[CellTable::index(true, true, true)] = 0;
        t.counts[CellTable::index(false, true, true)] = 0;
        if t.total() > 0 && check(&t)?.is_some() {
            forced += 1;
        }
    }

    let both: usize = CellTable::enumerate(3)
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|t| t.total() > 0)
        .filter(|t| {
            let w = cells_world(t);
            let conj = chung_check(&w, &a, &b, &c, ChungVariant::Conjunctive)
                .unwrap()
                .holds;
            conj && chung_check(&w, &a, &b, &c, ChungVariant::Disjunctive)
                .unwrap()
                .holds
        })
        .count();
    ensure(both == 0, || {
        format!("{both} tables satisfy both Chung variants")
    })?;
    Ok(format!(
        "1000 applicable worlds ({exclusive} with p(b&c)=0) plus {forced} with p(b&c)=0 all satisfied; no max_cell=3 table is both Chung variants"
    ))
}

fn simpson_search() -> Outcome {
    let start = Instant::now();
    let found = search_counterexamples(SearchPattern::Simpson, 4, usize::MAX);
    let elapsed = start.elapsed();
    ensure(!found.is_empty(), || {
        "no Simpson table with counts up to 4".into()
    })?;
    let [a, b, c] = default_formulas();
    for t in &found {
        let r = simpson_check(&cells_world(t), &a, &b, &c).unwrap();
        ensure(r.holds, || format!("{t} does not re-verify"))?;
    }
    ensure(elapsed < Duration::from_secs(60), || {
        format!("search took {elapsed:?}")
    })?;

    // (a,b,c) = TTT 2, TTF 3, TFT 8, TFF 0, FTT 0, FTF 7, FFT 2, FFF 2.
    let golden = CellTable::new([2, 3, 8, 0, 0, 7, 2, 2]);
    let r = simpson_check(&cells_world(&golden), &a, &b, &c).unwrap();
    ensure(r.holds, || "golden table fails".into())?;
    let pairs = [
        (&r.within_c, ratio(1, 1), ratio(5, 6)),
        (&r.within_not_c, ratio(3, 10), ratio(1, 4)),
        (&r.marginal, ratio(5, 12), ratio(13, 24)),
    ];
    for (cmp, left, right) in pairs {
        ensure(
            cmp.left.as_ref() == Some(&left) && cmp.right.as_ref() == Some(&right),
            || format!("golden comparison {:?} vs {:?}", cmp.left, cmp.right),
        )?;
    }
    Ok(format!(
        "{} tables found and re-verified in {:.2?}; golden 1 > 5/6, 3/10 > 1/4, 5/12 < 13/24",
        found.len(),
        elapsed
    ))
}

fn nine_antecedent_constraints() -> Outcome {
    let [a, b, c] = default_formulas();
    let tables: Vec<CellTable> = CellTable::enumerate(3).filter(|t| t.total() > 0).collect();
    let failures: Vec<String> = tables
        .par_iter()
        .filter_map(|t| {
            let p = nine_antecedent_profile(&cells_world(t), &a, &b, &c).unwrap();
            let mut bad = Vec::new();
            if !p.identities_hold() {
                bad.push("identity");
            }
            if !p.betweenness_holds() {
                bad.push("betweenness");
            }
            if p.mixed.is_violated() {
                bad.push("mixed directions");
            }
            (!bad.is_empty()).then(|| format!("{t}: {}", bad.join(", ")))
        })
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} violations, first {}", failures.len(), failures[0])
    })?;
    Ok(format!("{} tables, zero violations", tables.len()))
}

const POLY: &str = include_str!("../data/poly.theory");
const EMU: &str = include_str!("../data/emu.theory");
const BIRD: &str = include_str!("../data/bird.theory");

fn default_engine() -> Outcome {
    let verify_all = |t: &favour::defaults::DefaultTheory, name: &str| -> Result<usize, String> {
        let exts = compute_extensions(t).unwrap();
        for e in &exts {
            ensure(verify_extension(t, e).unwrap(), || {
                format!("{name}: extension fails re-check")
            })?;
        }
        Ok(exts.len())
    };
    let run = f("run");

    let poly = parse_theory(POLY).unwrap();
    ensure(verify_all(&poly, "(a)")? == 1, || {
        "(a) extension count".into()
    })?;
    ensure(!query(&poly, &run, QueryMode::Skeptical).unwrap(), || {
        "(a) run entailed".into()
    })?;

    let consequent = to_consequent_form(&poly);
    ensure(verify_all(&consequent, "(b)")? == 1, || {
        "(b) extension count".into()
    })?;
    ensure(
        query(&consequent, &run, QueryMode::Skeptical).unwrap(),
        || "(b) run not entailed".into(),
    )?;

    let bird = to_consequent_form(&parse_theory(BIRD).unwrap());
    verify_all(&bird, "(c)")?;
    ensure(
        query(&bird, &f("!emu"), QueryMode::Skeptical).unwrap(),
        || "(c) !emu not entailed".into(),
    )?;

    let emu = parse_theory(EMU).unwrap();
    ensure(verify_all(&emu, "(d)")? == 2, || {
        "(d) extension count".into()
    })?;
    let exts = compute_extensions(&emu).unwrap();
    let joint: Vec<&Formula> = exts[0].base().iter().chain(exts[1].base()).collect();
    ensure(!consistent(joint).unwrap(), || {
        "(d) extensions are jointly consistent".into()
    })?;
    Ok("(a) 1 ext, run not skeptical; (b) 1 ext, run skeptical; (c) !emu skeptical; (d) 2 mutually inconsistent exts".into())
}

const EXCLUSIVE: &str = include_str!("../data/exclusive.world");

fn disjunction_principle() -> Outcome {
    let two = build_two_class_world(1);
    let r = check_disjunction_principle(&two, &f("c1"), &f("c2"), &f("s")).unwrap();
    ensure(r.outcome == PrincipleOutcome::Counterexample, || {
        format!("two-class: {:?}", r.outcome)
    })?;

    let w = parse_world(EXCLUSIVE).unwrap();
    let (a, b, c) = (f("a"), f("b"), f("c"));
    ensure(
        matches!(
            proposition1_check(&w, &a, &b, &c).unwrap(),
            Prop1Verdict::Confirmed(_)
        ),
        || "exclusive world does not meet the exclusive-disjunction preconditions".into(),
    )?;
    let r = check_disjunction_principle(&w, &a, &b, &c).unwrap();
    ensure(r.outcome == PrincipleOutcome::Holds, || {
        format!("exclusive world: {:?}", r.outcome)
    })?;
    Ok("two-class counterexample; exclusive world holds".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("two-class counterexample", two_class_counterexample),
        ("generalized construction", generalized_construction),
        (
            "exclusive disjunction favoured (1000 worlds)",
            proposition1_suite,
        ),
        (
            "conjunction or disjunction favours (1000 worlds)",
            proposition2_suite,
        ),
        ("simpson search", simpson_search),
        ("nine-antecedent constraints", nine_antecedent_constraints),
        ("default engine theories", default_engine),
        ("disjunction principle", disjunction_principle),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(criterion).unwrap_or_else(|e| {
            let message = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {message}"))
        });
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS  {name}: {detail} [{:.2?}]",
                i + 1,
                start.elapsed()
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL  {name}: {detail} [{:.2?}]",
                    i + 1,
                    start.elapsed()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
