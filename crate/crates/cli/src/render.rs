//! Plain-text summaries of assembled interpretations and verdict tables.

use std::fmt::Write;

use tptp_interp::eval::ProblemEvaluation;
use tptp_interp::interp::{
    format_tuple, DomainElements, InfiniteDescriptor, Interpretation, KripkeInterpretation, TarskianInterpretation,
};

pub fn interpretation(interp: &Interpretation) -> String {
    let mut out = String::new();
    match interp {
        Interpretation::Tarskian(t) => {
            out.push_str("Tarskian interpretation\n");
            tarskian(&mut out, t, "");
        }
        Interpretation::Kripke(k) => kripke(&mut out, k),
    }
    out
}

fn kripke(out: &mut String, k: &KripkeInterpretation) {
    out.push_str("Kripke interpretation\n");
    writeln!(out, "worlds: {}", k.worlds.join(", ")).unwrap();
    if let Some(w) = &k.local_world {
        writeln!(out, "local world: {}", w).unwrap();
    }
    let pairs: Vec<String> = k.accessibility.iter().map(|(a, b)| format!("{}->{}", a, b)).collect();
    writeln!(out, "accessible: {}", pairs.join(" ")).unwrap();
    for (w, wi) in &k.per_world {
        writeln!(out, "world {}", w).unwrap();
        for (ty, items) in &wi.existing {
            let names: Vec<String> = items.iter().map(|e| e.to_string()).collect();
            let shown = if names.is_empty() { "(none)".to_string() } else { names.join(", ") };
            writeln!(out, "  exists {}: {}", ty, shown).unwrap();
        }
        tarskian(out, &wi.tarskian, "  ");
    }
}

fn tarskian(out: &mut String, t: &TarskianInterpretation, indent: &str) {
    for d in t.domains.values() {
        let shown = match &d.elements {
            DomainElements::Finite(items) => {
                let names: Vec<String> = items.iter().map(|e| e.to_string()).collect();
                format!("{{{}}}", names.join(", "))
            }
            DomainElements::Infinite(InfiniteDescriptor::Builtin(b)) => format!("all of {}", b),
            DomainElements::Infinite(InfiniteDescriptor::TermGenerated(_)) => "generated terms".to_string(),
        };
        let via = match &d.promotion {
            Some(p) => format!(" via {}", p.function),
            None => String::new(),
        };
        writeln!(out, "{}domain {} = {}{}: {}", indent, d.problem_type, d.domain_type, via, shown).unwrap();
    }
    for m in t.mappings.values() {
        for (args, v) in &m.entries {
            if args.is_empty() {
                writeln!(out, "{}  {} = {}", indent, m.symbol, v).unwrap();
            } else {
                writeln!(out, "{}  {}({}) = {}", indent, m.symbol, format_tuple(args), v).unwrap();
            }
        }
        if !m.general_clauses.is_empty() {
            writeln!(out, "{}  {}: {} general clause(s)", indent, m.symbol, m.general_clauses.len()).unwrap();
        }
    }
    if t.herbrand {
        writeln!(out, "{}herbrand formulae: {}", indent, t.herbrand_formulae.len()).unwrap();
    }
    if !t.constraints.is_empty() {
        writeln!(out, "{}unclassified constraints: {}", indent, t.constraints.len()).unwrap();
    }
}

pub fn verdicts(e: &ProblemEvaluation) -> String {
    let width = e.verdicts.iter().map(|v| v.name.len()).max().unwrap_or(0);
    let role_width = e.verdicts.iter().map(|v| v.role.to_string().len()).max().unwrap_or(0);
    let mut out = String::new();
    for v in &e.verdicts {
        let at = match &v.world {
            Some(w) => format!(" at {}", w),
            None => String::new(),
        };
        writeln!(
            out,
            "{:<width$}  {:<role_width$}  {}{}",
            v.name,
            v.role.to_string(),
            v.verdict,
            at,
            width = width,
            role_width = role_width
        )
        .unwrap();
    }
    out
}
