//! The acceptance suite. Every criterion runs even if an earlier one fails;
//! one PASS/FAIL line is printed per criterion and the test fails if any
//! did.

mod common;
mod oracle;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tptp_interp::diag::DiagnosticKind;
use tptp_interp::eval::{eval_at_world, eval_formula, eval_problem, eval_term, Environment, Reason, Value};
use tptp_interp::interp::{assemble, regrain, upgrade_legacy, Element, Granularity, Interpretation};
use tptp_interp::szs::{szs_report, SzsStatus};
use tptp_interp::syntax::{parse_file, parse_term, print_units, BaseRole, Formula, Language, Subrole};
use tptp_interp::verify::{check_model, check_structure, emit_kripke_verification_problem, EmitOptions};

use common::{fixture_text, remove_conjuncts, units};
use oracle::{random_formula, random_model, world_from_formula, Oracle, World};

/// Every fixture file, one per example class and variant.
const CORPUS: [&str; 26] = [
    "FOF_Finite.p",
    "FOF_Finite.s",
    "FOF_Finite_Fine.s",
    "FOF_Finite_Legacy.s",
    "FOF_Finite_Medium.s",
    "FOF_Saturation.s",
    "NXF_Finite-Finite-Global.p",
    "NXF_Finite-Finite-Global.s",
    "NXF_Finite-Finite-Global_Compact.s",
    "NXF_Finite-Finite-Global_Fine.s",
    "NXF_Finite-Finite-Global_Medium.s",
    "NXF_Finite-Finite-Local.p",
    "NXF_Finite-Finite-Local.s",
    "TFF_Finite.p",
    "TFF_Finite.s",
    "TFF_Finite_Compact.s",
    "TFF_Finite_Fine.s",
    "TFF_Finite_Legacy.s",
    "TFF_Finite_Medium.s",
    "TFF_Finite_SeparateDomains.s",
    "TFF_Infinite.p",
    "TFF_Integer.s",
    "TFF_Peano.s",
    "THF_Finite.p",
    "THF_Finite.s",
    "THF_Finite_Medium.s",
];

/// Number of random interpretation/formula pairs for the oracle comparison.
const RANDOM_CASES: usize = 2000;
const RANDOM_SEED: u64 = 0x5eed_2026;
const MAX_FORMULA_DEPTH: usize = 4;
/// Required agreement with the oracle, as a fraction of cases.
const ORACLE_AGREEMENT: f64 = 1.0;
const FOF_CHECK_BUDGET: Duration = Duration::from_secs(1);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {{
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    }};
}

fn corpus_round_trip() -> Outcome {
    for name in CORPUS {
        let text = fixture_text(name);
        let first = parse_file(&text);
        ensure!(first.diagnostics.is_empty(), "{}: {:?}", name, first.diagnostics);
        let printed = print_units(&first.units);
        let second = parse_file(&printed);
        ensure!(second.diagnostics.is_empty(), "{}: reprint does not parse: {:?}", name, second.diagnostics);
        ensure!(second.units == first.units, "{}: parse after print changes the AST", name);
        ensure!(print_units(&second.units) == printed, "{}: printing is not a fixpoint", name);
    }
    Ok(format!("{} fixtures parse cleanly and round-trip", CORPUS.len()))
}

fn fof_countermodel() -> Outcome {
    let start = Instant::now();
    let problem = units("FOF_Finite.p");
    let model = units("FOF_Finite.s");
    let report = check_model(&problem, &model);
    let elapsed = start.elapsed();
    let evaluation = report.evaluation.as_ref().ok_or("no evaluation")?;
    let status = report.szs.ok_or("no status")?;
    let line = szs_report(status, "FOF_Finite");
    ensure!(line.starts_with("% SZS status CounterSatisfiable "), "status line {:?}", line);

    let oracle = Oracle::single(world_from_formula(model[0].formula().unwrap()));
    for v in &evaluation.verdicts {
        let unit = problem.iter().find(|u| u.name == v.name).unwrap();
        let expected = unit.role.base != BaseRole::Conjecture;
        ensure!(v.verdict.as_bool() == Some(expected), "{} is {}", v.name, v.verdict);
        let by_oracle = oracle.eval(unit.formula().unwrap(), "w");
        ensure!(by_oracle == Some(expected), "oracle says {:?} for {}", by_oracle, v.name);
    }
    ensure!(elapsed < FOF_CHECK_BUDGET, "took {:?}", elapsed);
    Ok(format!("{} verdicts agree with the oracle, {:?}", evaluation.verdicts.len(), elapsed))
}

/// The three-world weather model, read off the fixture by hand.
fn weather_oracle() -> Oracle {
    let mut o = Oracle::default();
    for (w, sleepy, adult_exists) in [("w1", true, true), ("w2", false, false), ("w3", false, true)] {
        let mut world = World::default();
        world.domains.insert("child".into(), vec!["child_1".into()]);
        let adults = if adult_exists { vec!["adult_1".to_string()] } else { Vec::new() };
        world.domains.insert("adult".into(), adults);
        world.func("charly", &[], "child_1");
        world.pred("quiet", &["child_1"], true);
        world.pred("sleepy", &["adult_1"], sleepy);
        world.pred("rains", &[], true);
        o.worlds.insert(w.into(), world);
    }
    for (a, b) in [("w1", "w1"), ("w2", "w2"), ("w1", "w2"), ("w2", "w3"), ("w3", "w1")] {
        o.access.insert((a.into(), b.into()));
    }
    o
}

fn kripke_countermodel() -> Outcome {
    let problem = units("NXF_Finite-Finite-Global.p");
    let interp = match assemble(&units("NXF_Finite-Finite-Global.s")) {
        Ok((Interpretation::Kripke(k), _)) => k,
        other => return Err(format!("not a Kripke interpretation: {:?}", other.map(|_| ()))),
    };
    ensure!(interp.local_world.as_deref() == Some("w1"), "local world {:?}", interp.local_world);
    let oracle = weather_oracle();
    let mut compared = 0;
    for u in problem.iter().filter(|u| u.formula().is_some()) {
        let f = u.formula().unwrap();
        for w in ["w1", "w2", "w3"] {
            let ours = eval_at_world(f, &interp, w).as_bool();
            let theirs = oracle.eval(f, w);
            ensure!(ours == theirs, "{} at {}: evaluator {:?}, oracle {:?}", u.name, w, ours, theirs);
            compared += 1;
            if u.role.base == BaseRole::Axiom {
                ensure!(ours == Some(true), "axiom {} fails at {}", u.name, w);
            }
        }
    }
    let c = problem.iter().find(|u| u.name == "c").unwrap().formula().unwrap();
    ensure!(eval_at_world(c, &interp, "w1").is_false(), "conjecture not false at w1");
    let e = eval_problem(&problem, &Interpretation::Kripke(interp));
    ensure!(e.status == SzsStatus::CounterSatisfiable, "status {}", e.status);
    Ok(format!("{} world verdicts agree with the oracle", compared))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let (mut agree, mut truths, mut quantified) = (0, 0, 0);
    let mut first_mismatch = None;
    for case in 0..RANDOM_CASES {
        let m = random_model(&mut rng);
        let parsed = parse_file(&m.text);
        ensure!(parsed.diagnostics.is_empty(), "case {}: {:?}", case, parsed.diagnostics);
        let interp = match assemble(&parsed.units) {
            Ok((Interpretation::Tarskian(t), _)) => t,
            other => return Err(format!("case {}: {:?}", case, other.map(|_| ()))),
        };
        let oracle = Oracle::single(m.world.clone());
        let f = random_formula(&mut rng, &m, MAX_FORMULA_DEPTH);
        let ours = eval_formula(&f, &interp, &Environment::new()).as_bool();
        let theirs = oracle.eval(&f, "w");
        truths += (ours == Some(true)) as usize;
        quantified += has_quantifier(&f) as usize;
        if ours.is_some() && ours == theirs {
            agree += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(format!("case {}: {:?} vs oracle {:?} on {:?} in {}", case, ours, theirs, f, m.text));
        }
    }
    let rate = agree as f64 / RANDOM_CASES as f64;
    ensure!(rate >= ORACLE_AGREEMENT, "agreement {:.4}; {}", rate, first_mismatch.unwrap_or_default());
    Ok(format!(
        "{}/{} random cases agree ({} true, {} quantified; seed {:#x})",
        agree, RANDOM_CASES, truths, quantified, RANDOM_SEED
    ))
}

fn has_quantifier(f: &Formula) -> bool {
    let mut found = false;
    f.visit(&mut |g| found |= matches!(g, Formula::Quantified { .. }));
    found
}

fn granularity_invariance() -> Outcome {
    let mut checked = 0;
    for name in CORPUS.iter().filter(|n| n.ends_with(".s")) {
        let u = upgrade_legacy(&units(name));
        let base = assemble(&u).map_err(|e| format!("{}: {}", name, e))?.0;
        for g in Granularity::ALL {
            let re = regrain(&u, g).map_err(|e| format!("{} to {}: {}", name, g, e))?;
            let got = assemble(&re).map_err(|e| format!("{} at {}: {}", name, g, e))?.0;
            ensure!(got == base, "{} assembles differently at {}", name, g);
            checked += 1;
        }
    }
    Ok(format!("{} regrainings assemble identically", checked))
}

fn legacy_upgrade() -> Outcome {
    for (legacy, current) in [("FOF_Finite_Legacy.s", "FOF_Finite.s"), ("TFF_Finite_Legacy.s", "TFF_Finite.s")] {
        let old = units(legacy);
        let upgraded = upgrade_legacy(&old);
        for (before, after) in old.iter().zip(&upgraded) {
            let expected = match before.role.base {
                BaseRole::FiDomain => Some(Subrole::Domains),
                BaseRole::FiFunctors | BaseRole::FiPredicates => Some(Subrole::Mappings),
                _ => None,
            };
            match expected {
                Some(sub) => ensure!(
                    after.role.base == BaseRole::Interpretation && after.role.subrole == Some(sub.clone()),
                    "{}: {} became {}",
                    before.name,
                    before.role,
                    after.role
                ),
                None => ensure!(after == before, "{} changed", before.name),
            }
        }
        let a = assemble(&upgraded).map_err(|e| e.to_string())?.0;
        let b = assemble(&units(current)).map_err(|e| e.to_string())?.0;
        ensure!(a == b, "{} differs from {}", legacy, current);
    }
    Ok("both legacy fixtures upgrade to the current models".into())
}

fn kripke_emission() -> Outcome {
    let mut goals = 0;
    for (p, s) in [
        ("NXF_Finite-Finite-Global.p", "NXF_Finite-Finite-Global.s"),
        ("NXF_Finite-Finite-Local.p", "NXF_Finite-Finite-Local.s"),
    ] {
        let problem = units(p);
        let vp = emit_kripke_verification_problem(&problem, &units(s), EmitOptions::default()).map_err(|e| e.to_string())?;
        let text = vp.to_text();
        let back = parse_file(&text);
        ensure!(back.diagnostics.is_empty(), "{}: {:?}", p, back.diagnostics);
        let logic: Vec<_> = back.units.iter().filter(|u| u.role.base == BaseRole::Logic).collect();
        ensure!(logic.len() == 1 && text.matches("$$fomlModel").count() == 1, "{}: logic units {:?}", p, logic);
        for u in &problem {
            let want = match (&u.role.base, &u.role.subrole) {
                (BaseRole::Axiom, Some(Subrole::Local)) => Subrole::Local,
                (BaseRole::Axiom, _) => Subrole::Global,
                (BaseRole::Conjecture, Some(Subrole::Global)) => Subrole::Global,
                (BaseRole::Conjecture, _) | (BaseRole::NegatedConjecture, _) => Subrole::Local,
                _ => continue,
            };
            let found = back
                .units
                .iter()
                .filter(|g| g.name == u.name && g.role.base == BaseRole::Conjecture)
                .collect::<Vec<_>>();
            ensure!(found.len() == 1, "{}: {} goals named {}", p, found.len(), u.name);
            ensure!(found[0].role.subrole == Some(want.clone()), "{}: {} is {}", p, u.name, found[0].role);
            goals += 1;
        }
    }
    Ok(format!("{} goals carry the right subrole", goals))
}

fn structure_checks() -> Outcome {
    let separate = units("TFF_Finite_SeparateDomains.s");
    let clean = check_structure(&separate);
    ensure!(clean.diagnostics().next().is_none(), "{:?}", clean.diagnostics().collect::<Vec<_>>());

    let mut s = separate.clone();
    ensure!(remove_conjuncts(&mut s, "d2cat(DC1) = d2cat(DC2)") == 1, "injectivity conjunct not found");
    let kinds: Vec<_> = check_structure(&s).diagnostics().map(|d| d.kind).collect();
    ensure!(kinds == vec![DiagnosticKind::PromotionNotInjective], "{:?}", kinds);

    let mut k = units("NXF_Finite-Finite-Global.s");
    ensure!(remove_conjuncts(&mut k, "$distinct(w1,w2,w3)") == 1, "world distinctness not found");
    ensure!(
        check_structure(&k).diagnostics().any(|d| d.kind == DiagnosticKind::WorldsNotDistinct),
        "no WorldsNotDistinct"
    );
    Ok("bijections recognized; injectivity and world distinctness gaps reported".into())
}

fn infinite_model() -> Outcome {
    let report = check_model(&units("TFF_Infinite.p"), &units("TFF_Integer.s"));
    ensure!(report.szs == Some(SzsStatus::GaveUp), "status {:?}", report.szs);
    ensure!(
        matches!(report.gave_up_reason, Some(Reason::InfiniteQuantifier { .. })),
        "reason {:?}",
        report.gave_up_reason
    );
    let vp = report.verification_problem.ok_or("no verification problem")?;
    let back = parse_file(&vp.to_text());
    ensure!(back.diagnostics.is_empty(), "{:?}", back.diagnostics);

    let m = common::model("TFF_Integer.s");
    let t = m.as_tarskian().ok_or("not Tarskian")?;
    let term = |s: &str| parse_term(s, Language::Tff).unwrap();
    let v = eval_term(&term("child_of(int2person(5))"), t, &Environment::new());
    let expected = eval_term(&term("int2person(6)"), t, &Environment::new());
    ensure!(v == Ok(Value::Elem(Element::Int(6.into()))) && v == expected, "{:?} vs {:?}", v, expected);
    let neg = eval_term(&term("child_of(int2person(-3))"), t, &Environment::new());
    ensure!(neg.is_err(), "negative tuple gave {:?}", neg);
    Ok("GaveUp(InfiniteQuantifier), exact ground terms, parseable problem".into())
}

/// Written to the stderr handle directly so the lines show up even when the
/// harness captures output.
fn report(line: &str) {
    let _ = writeln!(std::io::stderr(), "{}", line);
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("corpus round-trip", corpus_round_trip),
        ("FOF countermodel check", fof_countermodel),
        ("Kripke countermodel check", kripke_countermodel),
        ("oracle equivalence", oracle_equivalence),
        ("granularity invariance", granularity_invariance),
        ("legacy upgrade", legacy_upgrade),
        ("Kripke verification emission", kripke_emission),
        ("structure checks", structure_checks),
        ("infinite-model handling", infinite_model),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {}", msg))
        });
        match outcome {
            Ok(detail) => report(&format!("PASS {} {}: {}", i + 1, name, detail)),
            Err(why) => {
                report(&format!("FAIL {} {}: {}", i + 1, name, why));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
