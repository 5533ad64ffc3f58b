mod common;

use common::{model, units};
use tptp_interp::interp::{assemble, completeness_check, regrain, upgrade_legacy, Granularity};
use tptp_interp::syntax::{parse_file, print_units, BaseRole};

const MODELS: [&str; 16] = [
    "FOF_Finite.s",
    "FOF_Finite_Medium.s",
    "FOF_Finite_Fine.s",
    "TFF_Finite.s",
    "TFF_Finite_Medium.s",
    "TFF_Finite_Fine.s",
    "TFF_Finite_SeparateDomains.s",
    "TFF_Finite_Compact.s",
    "THF_Finite.s",
    "THF_Finite_Medium.s",
    "TFF_Integer.s",
    "TFF_Peano.s",
    "NXF_Finite-Finite-Global.s",
    "NXF_Finite-Finite-Global_Medium.s",
    "NXF_Finite-Finite-Global_Fine.s",
    "NXF_Finite-Finite-Local.s",
];

#[test]
fn granularity_variants_assemble_alike() {
    let groups: [&[&str]; 4] = [
        &["FOF_Finite.s", "FOF_Finite_Medium.s", "FOF_Finite_Fine.s"],
        &["TFF_Finite.s", "TFF_Finite_Medium.s", "TFF_Finite_Fine.s"],
        &["THF_Finite.s", "THF_Finite_Medium.s"],
        &[
            "NXF_Finite-Finite-Global.s",
            "NXF_Finite-Finite-Global_Medium.s",
            "NXF_Finite-Finite-Global_Fine.s",
        ],
    ];
    for group in groups {
        let first = model(group[0]);
        for other in &group[1..] {
            assert_eq!(model(other), first, "{} vs {}", group[0], other);
        }
    }
}

#[test]
fn regraining_preserves_the_assembly() {
    for f in MODELS {
        let original = model(f);
        for g in Granularity::ALL {
            let out = regrain(&units(f), g).unwrap();
            let text = print_units(&out);
            let back = parse_file(&text);
            assert!(back.diagnostics.is_empty(), "{} at {}: {:?}", f, g, back.diagnostics);
            assert_eq!(assemble(&back.units).unwrap().0, original, "{} at {}", f, g);
        }
    }
}

#[test]
fn fine_regraining_gives_one_unit_per_domain_and_symbol() {
    let out = regrain(&units("TFF_Finite.s"), Granularity::Fine).unwrap();
    let roles: Vec<String> = out
        .iter()
        .filter(|u| u.role.base == BaseRole::Interpretation)
        .map(|u| u.role.to_string())
        .collect();
    assert_eq!(roles.len(), 2 + 6, "{:?}", roles);
    assert!(roles.contains(&"interpretation-domains(cat, cat)".to_string()));
    assert!(roles.contains(&"interpretation-mappings(owns, $o)".to_string()));
}

#[test]
fn legacy_models_match_their_upgrades() {
    for (legacy, current) in [
        ("FOF_Finite_Legacy.s", "FOF_Finite.s"),
        ("TFF_Finite_Legacy.s", "TFF_Finite.s"),
    ] {
        let upgraded = upgrade_legacy(&units(legacy));
        assert!(upgraded.iter().all(|u| !u.role.base.is_legacy_interpretation()));
        assert_eq!(assemble(&upgraded).unwrap().0, model(current), "{}", legacy);
    }
}

#[test]
fn finite_fixtures_are_complete() {
    for f in MODELS.iter().filter(|f| !f.contains("Integer") && !f.contains("Peano")) {
        let m = model(f);
        let views: Vec<_> = match &m {
            tptp_interp::interp::Interpretation::Tarskian(t) => vec![t.clone()],
            tptp_interp::interp::Interpretation::Kripke(k) => k.per_world.values().map(|w| w.tarskian.clone()).collect(),
        };
        for t in views {
            assert!(completeness_check(&t).is_empty(), "{}: {:?}", f, completeness_check(&t));
        }
    }
}
