#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use tptp_interp::interp::{assemble, Interpretation};
use tptp_interp::syntax::{parse_file, AnnotatedFormula};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{}: {}", name, e))
}

pub fn units(name: &str) -> Vec<AnnotatedFormula> {
    let out = parse_file(&fixture_text(name));
    assert!(out.diagnostics.is_empty(), "{}: {:?}", name, out.diagnostics);
    out.units
}

pub fn model(name: &str) -> Interpretation {
    assemble(&units(name)).unwrap_or_else(|e| panic!("{}: {}", name, e)).0
}

use tptp_interp::syntax::{print_formula, Formula, UnitBody};

/// Drops every conjunct of the interpretation units whose printed form
/// contains `needle`; returns how many were dropped.
pub fn remove_conjuncts(units: &mut [AnnotatedFormula], needle: &str) -> usize {
    let mut removed = 0;
    for u in units.iter_mut().filter(|u| u.role.is_interpretation()) {
        let UnitBody::Formula(f) = &u.body else { continue };
        let lang = u.language;
        let kept: Vec<Formula> = f
            .conjuncts()
            .into_iter()
            .filter(|c| {
                let hit = print_formula(c, lang).contains(needle);
                removed += hit as usize;
                !hit
            })
            .cloned()
            .collect();
        u.body = UnitBody::Formula(Formula::conjunction(kept));
    }
    removed
}
