//! Well-formedness of the assembled interpretation: distinctness of
//! enumerated elements, promotion bijections, world declarations and
//! accessibility, and agreement of subrole arguments with the content.

use std::collections::BTreeSet;

use crate::diag::{Diagnostic, DiagnosticKind};
use crate::interp::{assemble, AssemblyReport, DomainElements, Interpretation, TarskianInterpretation};
use crate::syntax::{AnnotatedFormula, Subrole};

pub fn interpretation_diagnostics(units: &[AnnotatedFormula]) -> Vec<Diagnostic> {
    if !units.iter().any(|u| u.role.is_interpretation()) {
        return Vec::new();
    }
    let (interp, report) = match assemble(units) {
        Ok(r) => r,
        Err(e) => return vec![Diagnostic::error(DiagnosticKind::Assembly, e.to_string())],
    };
    let mut out = Vec::new();
    match &interp {
        Interpretation::Tarskian(t) => domain_checks(t, &mut out),
        Interpretation::Kripke(k) => {
            for w in k.per_world.values() {
                domain_checks(&w.tarskian, &mut out);
            }
            let typed: BTreeSet<&str> = units
                .iter()
                .filter_map(|u| u.type_decl())
                .filter(|d| d.ty.as_named() == Some("$world"))
                .map(|d| d.symbol.as_str())
                .collect();
            for w in &k.worlds {
                if !typed.contains(w.as_str()) {
                    out.push(Diagnostic::error(
                        DiagnosticKind::WorldNotTyped,
                        format!("world {} is not declared with type $world", w),
                    ));
                }
            }
            if !k.worlds_are_distinct() {
                out.push(Diagnostic::error(
                    DiagnosticKind::WorldsNotDistinct,
                    format!("the worlds {} are not stated to be distinct", k.worlds.join(", ")),
                ));
            }
            for (a, b) in k.accessibility.intersection(&k.negated_accessibility) {
                out.push(Diagnostic::error(
                    DiagnosticKind::ContradictoryAccessibility,
                    format!("{} is both accessible and not accessible from {}", b, a),
                ));
            }
        }
    }
    subrole_checks(units, &interp, &report, &mut out);
    out.extend(report.warnings.iter().cloned());
    let mut seen = BTreeSet::new();
    out.retain(|d| seen.insert((d.kind, d.message.clone())));
    out
}

fn domain_checks(t: &TarskianInterpretation, out: &mut Vec<Diagnostic>) {
    for d in t.domains.values() {
        if let DomainElements::Finite(items) = &d.elements {
            if items.len() > 1 && !d.distinctness_covers_all() {
                out.push(Diagnostic::warning(
                    DiagnosticKind::DistinctnessUnstated,
                    format!("the elements of {} are not stated to be distinct", d.domain_type),
                ));
            }
        }
        if d.domain_type == d.problem_type {
            continue;
        }
        let Some(p) = &d.promotion else { continue };
        let builtin = matches!(d.domain_type.as_str(), "$int" | "$rat" | "$real");
        if p.surjectivity.is_none() && !builtin {
            out.push(Diagnostic::error(
                DiagnosticKind::PromotionNotSurjective,
                format!("no formula states that {} maps {} onto {}", p.function, d.domain_type, d.problem_type),
            ));
        }
        if p.injectivity.is_none() {
            out.push(Diagnostic::error(
                DiagnosticKind::PromotionNotInjective,
                format!("no formula states that {} is injective on {}", p.function, d.domain_type),
            ));
        }
    }
}

fn subrole_checks(units: &[AnnotatedFormula], interp: &Interpretation, report: &AssemblyReport, out: &mut Vec<Diagnostic>) {
    let views: Vec<&TarskianInterpretation> = match interp {
        Interpretation::Tarskian(t) => vec![t],
        Interpretation::Kripke(k) => k.per_world.values().map(|w| &w.tarskian).collect(),
    };
    for u in units {
        let Some((a, b)) = &u.role.args else { continue };
        let mismatch = match u.role.subrole {
            Some(Subrole::Domains) => {
                let found = views.iter().find_map(|t| t.domains.get(a));
                match found {
                    Some(d) if &d.domain_type != b => Some(format!("{} has domain type {}, not {}", a, d.domain_type, b)),
                    None if mentions_subject(report, &u.name) => Some(format!("no domain for type {}", a)),
                    _ => None,
                }
            }
            Some(Subrole::Mappings) => {
                let found = views.iter().find_map(|t| t.mappings.get(a));
                match found {
                    Some(m) if &m.result_type != b => Some(format!("{} maps into {}, not {}", a, m.result_type, b)),
                    None if mentions_subject(report, &u.name) => Some(format!("no mapping for {}", a)),
                    _ => None,
                }
            }
            _ => None,
        };
        if let Some(msg) = mismatch {
            out.push(Diagnostic::warning(DiagnosticKind::SubroleMismatch, msg).in_unit(&u.name));
        }
    }
}

/// True if the unit contributed any classified component.
fn mentions_subject(report: &AssemblyReport, unit: &str) -> bool {
    report.components().any(|c| c.unit == unit)
}
