//! Completeness of finite Tarskian interpretations: every symbol must be
//! mapped at every argument tuple.

use std::collections::BTreeMap;
use std::fmt;

use crate::syntax::TypeExpr;

use super::model::{format_tuple, Element, MappedValue, SymbolMapping, TarskianInterpretation};
use super::pattern::{clause_shape, match_args};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MissingEntry {
    pub symbol: String,
    pub args: Vec<Element>,
}

impl fmt::Display for MissingEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            f.write_str(&self.symbol)
        } else {
            write!(f, "{}({})", self.symbol, format_tuple(&self.args))
        }
    }
}

/// Lists every (symbol, tuple) with no entry that is not covered by an
/// unguarded general clause. Symbols come from the type declarations and the
/// mappings; promotion functions and element constants are not interpreted
/// symbols and are skipped. Argument positions over infinite domains are
/// not enumerated.
pub fn completeness_check(interp: &TarskianInterpretation) -> Vec<MissingEntry> {
    let mut signatures: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for d in &interp.type_decls {
        if d.is_type_declaration() || matches!(d.ty.as_named(), Some("$world")) {
            continue;
        }
        let (args, _) = d.ty.signature();
        if args.iter().any(|a| matches!(a, TypeExpr::Arrow(..))) {
            continue;
        }
        let arg_types: Vec<String> = args.iter().map(|a| a.as_named().unwrap_or("$i").to_string()).collect();
        signatures.insert(d.symbol.clone(), arg_types);
    }
    for (symbol, m) in &interp.mappings {
        signatures
            .entry(symbol.clone())
            .or_insert_with(|| vec!["$i".to_string(); m.arity]);
    }
    let is_element = |s: &str| {
        interp
            .domains
            .values()
            .any(|d| d.elements.finite().is_some_and(|e| e.contains(&Element::named(s))))
    };

    let mut missing = Vec::new();
    for (symbol, arg_types) in signatures {
        if interp.promotion(&symbol).is_some() || (arg_types.is_empty() && is_element(&symbol)) {
            continue;
        }
        let mapping = interp.mappings.get(&symbol);
        if mapping.is_some_and(|m| m.entries.values().any(|v| matches!(v, MappedValue::Lambda(_)))) {
            continue;
        }
        let mut columns = Vec::new();
        for ty in &arg_types {
            match interp.domain_of_type(ty).and_then(|d| d.elements.finite()) {
                Some(items) => columns.push(items.to_vec()),
                None => break,
            }
        }
        if columns.len() != arg_types.len() {
            continue;
        }
        for tuple in cartesian(&columns) {
            if !covered(interp, mapping, &symbol, &tuple) {
                missing.push(MissingEntry {
                    symbol: symbol.clone(),
                    args: tuple,
                });
            }
        }
    }
    missing
}

fn covered(interp: &TarskianInterpretation, mapping: Option<&SymbolMapping>, symbol: &str, tuple: &[Element]) -> bool {
    let Some(m) = mapping else { return false };
    if m.entries.contains_key(tuple) {
        return true;
    }
    m.general_clauses.iter().any(|c| {
        clause_shape(c, symbol).is_some_and(|shape| {
            shape.guards.is_empty()
                && match_args(interp, &shape.vars, shape.head.args(), tuple, &mut BTreeMap::new())
        })
    })
}

pub(crate) fn cartesian<T: Clone>(columns: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for col in columns {
        let mut next = Vec::with_capacity(out.len() * col.len());
        for prefix in &out {
            for e in col {
                let mut t = prefix.clone();
                t.push(e.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}
