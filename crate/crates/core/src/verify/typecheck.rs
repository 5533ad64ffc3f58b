//! Declaration checks for typed units: every symbol and type used must be
//! declared, and first-order applications must match the declared arity.

use std::collections::{BTreeMap, BTreeSet};

use crate::diag::{Diagnostic, DiagnosticKind};
use crate::interp::normalize::first_order_formula;
use crate::syntax::{AnnotatedFormula, Formula, Language, Term, TypeExpr, TypedVar, UnitBody};

const BUILTIN_TYPES: [&str; 7] = ["$i", "$o", "$int", "$rat", "$real", "$tType", "$world"];

pub fn type_check(units: &[AnnotatedFormula]) -> Vec<Diagnostic> {
    let mut symbols: BTreeMap<&str, &TypeExpr> = BTreeMap::new();
    let mut types: BTreeSet<&str> = BUILTIN_TYPES.into_iter().collect();
    for u in units {
        if let UnitBody::Type(d) = &u.body {
            if d.is_type_declaration() {
                types.insert(&d.symbol);
            } else {
                symbols.insert(&d.symbol, &d.ty);
            }
        }
    }

    let mut out = Vec::new();
    for u in units {
        match &u.body {
            UnitBody::Type(d) => {
                let mut named = BTreeSet::new();
                d.ty.collect_named(&mut named);
                for ty in named {
                    if !types.contains(ty) {
                        out.push(
                            Diagnostic::error(
                                DiagnosticKind::UndeclaredType,
                                format!("type {} of {} is not declared", ty, d.symbol),
                            )
                            .in_unit(&u.name),
                        );
                    }
                }
            }
            UnitBody::Formula(f) if u.language.is_typed() => {
                let mut uses = Uses::default();
                uses.formula(&first_order_formula(f));
                let mut reported = BTreeSet::new();
                for ty in &uses.types {
                    if !types.contains(ty.as_str()) && reported.insert(ty.clone()) {
                        out.push(
                            Diagnostic::error(DiagnosticKind::UndeclaredType, format!("type {} is not declared", ty))
                                .in_unit(&u.name),
                        );
                    }
                }
                for (symbol, arity) in &uses.symbols {
                    if !reported.insert(symbol.clone()) {
                        continue;
                    }
                    match symbols.get(symbol.as_str()) {
                        None if !uses.bound.contains(symbol) => out.push(
                            Diagnostic::error(
                                DiagnosticKind::UndeclaredSymbol,
                                format!("symbol {} is not declared", symbol),
                            )
                            .in_unit(&u.name),
                        ),
                        Some(ty) if u.language == Language::Tff => {
                            let declared = ty.signature().0.len();
                            if declared != *arity {
                                out.push(
                                    Diagnostic::error(
                                        DiagnosticKind::ArityMismatch,
                                        format!("{} is declared with {} arguments but used with {}", symbol, declared, arity),
                                    )
                                    .in_unit(&u.name),
                                );
                            }
                        }
                        _ => {}
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Symbols (with the number of arguments at their first use) and type
/// names occurring in a formula.
#[derive(Default)]
struct Uses {
    symbols: Vec<(String, usize)>,
    types: Vec<String>,
    bound: BTreeSet<String>,
}

impl Uses {
    fn symbol(&mut self, s: &str, arity: usize) {
        if !s.starts_with('$') && !self.symbols.iter().any(|(t, _)| t == s) {
            self.symbols.push((s.to_string(), arity));
        }
    }

    fn vars(&mut self, vars: &[TypedVar]) {
        for v in vars {
            self.bound.insert(v.name.clone());
            if let Some(ty) = &v.ty {
                let mut named = BTreeSet::new();
                ty.collect_named(&mut named);
                for n in named {
                    if !self.types.iter().any(|t| t == n) {
                        self.types.push(n.to_string());
                    }
                }
            }
        }
    }

    fn formula(&mut self, f: &Formula) {
        match f {
            Formula::Truth(_) => {}
            Formula::Quantified { vars, body, .. } => {
                self.vars(vars);
                self.formula(body);
            }
            Formula::Not(g) | Formula::Modal { body: g, .. } => self.formula(g),
            Formula::Binary { lhs, rhs, .. } => {
                self.formula(lhs);
                self.formula(rhs);
            }
            Formula::Equality { lhs, rhs, .. } => {
                self.term(lhs);
                self.term(rhs);
            }
            Formula::Atom { predicate, args } => {
                self.symbol(predicate, args.len());
                args.iter().for_each(|a| self.term(a));
            }
            Formula::Defined { args, .. } => args.iter().for_each(|a| self.term(a)),
            Formula::InWorld { world, body } => {
                self.term(world);
                self.formula(body);
            }
            Formula::HoApply { func, arg } => {
                self.term(func);
                self.term(arg);
            }
        }
    }

    fn term(&mut self, t: &Term) {
        match t {
            Term::Var(_) | Term::Distinct(_) | Term::Number(_) => {}
            Term::Func { symbol, args } => {
                self.symbol(symbol, args.len());
                args.iter().for_each(|a| self.term(a));
            }
            Term::Defined { args, .. } => args.iter().for_each(|a| self.term(a)),
            Term::Apply(f, a) => {
                self.term(f);
                self.term(a);
            }
            Term::Lambda { vars, body } => {
                self.vars(vars);
                self.term(body);
            }
            Term::Formula(f) => self.formula(f),
        }
    }
}
