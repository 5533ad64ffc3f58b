mod common;

use common::{remove_conjuncts, units};
use tptp_interp::diag::{DiagnosticKind, Severity};
use tptp_interp::eval::Reason;
use tptp_interp::syntax::{parse_file, BaseRole, Subrole};
use tptp_interp::szs::SzsStatus;
use tptp_interp::verify::{
    check_model, check_structure, emit_kripke_verification_problem, emit_verification_problem, EmitOptions, Outcome,
    Stage,
};

const PAIRS: [(&str, &str); 16] = [
    ("FOF_Finite.p", "FOF_Finite.s"),
    ("FOF_Finite.p", "FOF_Finite_Medium.s"),
    ("FOF_Finite.p", "FOF_Finite_Fine.s"),
    ("FOF_Finite.p", "FOF_Finite_Legacy.s"),
    ("TFF_Finite.p", "TFF_Finite.s"),
    ("TFF_Finite.p", "TFF_Finite_Medium.s"),
    ("TFF_Finite.p", "TFF_Finite_Fine.s"),
    ("TFF_Finite.p", "TFF_Finite_Legacy.s"),
    ("TFF_Finite.p", "TFF_Finite_SeparateDomains.s"),
    ("TFF_Finite.p", "TFF_Finite_Compact.s"),
    ("THF_Finite.p", "THF_Finite.s"),
    ("THF_Finite.p", "THF_Finite_Medium.s"),
    ("NXF_Finite-Finite-Global.p", "NXF_Finite-Finite-Global.s"),
    ("NXF_Finite-Finite-Global.p", "NXF_Finite-Finite-Global_Medium.s"),
    ("NXF_Finite-Finite-Global.p", "NXF_Finite-Finite-Global_Fine.s"),
    ("NXF_Finite-Finite-Local.p", "NXF_Finite-Finite-Local.s"),
];

#[test]
fn fixture_models_are_well_formed() {
    for (p, s) in PAIRS {
        let all: Vec<_> = units(p).into_iter().chain(units(s)).collect();
        let report = check_structure(&all);
        let errors: Vec<String> = report.diagnostics().filter(|d| d.is_error()).map(|d| d.to_string()).collect();
        assert!(errors.is_empty(), "{}: {:?}", s, errors);
        assert!(
            !report.diagnostics().any(|d| d.kind == DiagnosticKind::SubroleMismatch),
            "{}",
            s
        );
    }
}

#[test]
fn fixture_models_are_countermodels() {
    for (p, s) in PAIRS {
        let report = check_model(&units(p), &units(s));
        assert_eq!(report.szs, Some(SzsStatus::CounterSatisfiable), "{}", s);
        assert_eq!(report.stage(Stage::ModelChecked).unwrap().outcome, Outcome::Passed);
        assert_eq!(report.stage(Stage::FinderValidation).unwrap().outcome, Outcome::NotCheckable);
    }
}

#[test]
fn missing_injectivity_is_reported_once() {
    let mut s = units("TFF_Finite_SeparateDomains.s");
    assert_eq!(remove_conjuncts(&mut s, "d2cat(DC1) = d2cat(DC2)"), 1);
    let kinds: Vec<_> = check_structure(&s).diagnostics().map(|d| d.kind).collect();
    assert_eq!(kinds, vec![DiagnosticKind::PromotionNotInjective]);
}

#[test]
fn missing_world_distinctness_is_reported() {
    let mut s = units("NXF_Finite-Finite-Global.s");
    assert_eq!(remove_conjuncts(&mut s, "$distinct(w1,w2,w3)"), 1);
    let report = check_structure(&s);
    assert!(report.diagnostics().any(|d| d.kind == DiagnosticKind::WorldsNotDistinct));
    assert_eq!(report.szs, Some(SzsStatus::Error));
}

#[test]
fn missing_element_distinctness_warns() {
    let mut s = units("TFF_Finite.s");
    assert_eq!(remove_conjuncts(&mut s, "$distinct(d_garfield"), 1);
    let report = check_structure(&s);
    let d: Vec<_> = report.diagnostics().collect();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].kind, DiagnosticKind::DistinctnessUnstated);
    assert_eq!(d[0].severity, Severity::Warning);
}

#[test]
fn infinite_model_gives_up_with_a_problem() {
    let report = check_model(&units("TFF_Infinite.p"), &units("TFF_Integer.s"));
    assert_eq!(report.szs, Some(SzsStatus::GaveUp));
    assert!(matches!(report.gave_up_reason, Some(Reason::InfiniteQuantifier { .. })));
    assert!(report.stage(Stage::ModelChecked).is_none());
    let vp = report.verification_problem.unwrap();
    let back = parse_file(&vp.to_text());
    assert!(back.diagnostics.is_empty(), "{:?}", back.diagnostics);
    assert_eq!(vp.goals().count(), 3);
}

#[test]
fn emitted_problem_counts() {
    for (p, s) in PAIRS.iter().filter(|(p, _)| !p.starts_with("NXF")) {
        let (pu, su) = (units(p), units(s));
        let vp = emit_verification_problem(&pu, &su, EmitOptions::default()).unwrap();
        let back = parse_file(&vp.to_text());
        assert!(back.diagnostics.is_empty(), "{}: {:?}", s, back.diagnostics);
        assert_eq!(back.units.len(), pu.len() + su.len(), "{}", s);
        let axioms = pu.iter().filter(|u| u.role.base.is_axiom_like()).count();
        let conjectures = pu.iter().filter(|u| u.role.base == BaseRole::Conjecture).count();
        assert_eq!(vp.goals().count(), axioms + conjectures, "{}", s);
    }
}

#[test]
fn kripke_emission() {
    let p = units("NXF_Finite-Finite-Global.p");
    let s = units("NXF_Finite-Finite-Global.s");
    let vp = emit_kripke_verification_problem(&p, &s, EmitOptions::default()).unwrap();
    let text = vp.to_text();
    assert_eq!(text.matches("$$fomlModel").count(), 1);
    assert!(!text.contains("$alethic_modal"));
    assert!(text.contains("tff(a1,conjecture-global,"));
    assert!(text.contains("tff(a2,conjecture-global,"));
    assert!(text.contains("tff(c,conjecture-local,"));
    assert!(parse_file(&text).diagnostics.is_empty());

    let local = emit_kripke_verification_problem(
        &units("NXF_Finite-Finite-Local.p"),
        &units("NXF_Finite-Finite-Local.s"),
        EmitOptions::default(),
    )
    .unwrap();
    let a2 = local.units.iter().find(|u| u.name == "a2" && u.role.base == BaseRole::Conjecture).unwrap();
    assert_eq!(a2.role.subrole, Some(Subrole::Local));
}
