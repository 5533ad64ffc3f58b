//! Shape of quantified mapping clauses and matching of their head arguments
//! against element tuples.

use std::collections::BTreeMap;

use crate::syntax::{Connective, Formula, Quantifier, Term, TypedVar};

use super::model::{Element, TarskianInterpretation};

/// The defining part of a clause `! [vars] : ( guards => head )`.
#[derive(Debug, Clone, PartialEq)]
pub enum Head<'a> {
    /// `f(args) = value`.
    Function {
        symbol: &'a str,
        args: &'a [Term],
        value: &'a Term,
    },
    /// `p(args)` or `~ p(args)`.
    Literal {
        symbol: &'a str,
        args: &'a [Term],
        positive: bool,
    },
    /// `p(args) <=> body`.
    Definition {
        symbol: &'a str,
        args: &'a [Term],
        body: &'a Formula,
    },
}

impl<'a> Head<'a> {
    pub fn symbol(&self) -> &'a str {
        match self {
            Head::Function { symbol, .. } | Head::Literal { symbol, .. } | Head::Definition { symbol, .. } => {
                symbol
            }
        }
    }

    pub fn args(&self) -> &'a [Term] {
        match self {
            Head::Function { args, .. } | Head::Literal { args, .. } | Head::Definition { args, .. } => args,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClauseShape<'a> {
    pub vars: Vec<&'a TypedVar>,
    pub guards: Vec<&'a Formula>,
    pub head: Head<'a>,
}

/// Decomposes a clause whose head defines `symbol`.
pub fn clause_shape<'a>(f: &'a Formula, symbol: &str) -> Option<ClauseShape<'a>> {
    let mut vars = Vec::new();
    let mut core = f;
    while let Formula::Quantified {
        quantifier: Quantifier::Forall,
        vars: vs,
        body,
    } = core
    {
        vars.extend(vs.iter());
        core = body;
    }
    let mut guards = Vec::new();
    while let Formula::Binary {
        op: Connective::Implies,
        lhs,
        rhs,
    } = core
    {
        guards.push(lhs.as_ref());
        core = rhs;
    }
    let head = head_of(core, symbol)?;
    Some(ClauseShape { vars, guards, head })
}

fn head_of<'a>(core: &'a Formula, symbol: &str) -> Option<Head<'a>> {
    match core {
        Formula::Atom { predicate, args } if predicate == symbol => Some(Head::Literal {
            symbol: predicate,
            args,
            positive: true,
        }),
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Atom { predicate, args } if predicate == symbol => Some(Head::Literal {
                symbol: predicate,
                args,
                positive: false,
            }),
            _ => None,
        },
        Formula::Binary {
            op: Connective::Iff,
            lhs,
            rhs,
        } => {
            for (a, b) in [(lhs, rhs), (rhs, lhs)] {
                if let Formula::Atom { predicate, args } = a.as_ref() {
                    if predicate == symbol {
                        return Some(Head::Definition {
                            symbol: predicate,
                            args,
                            body: b,
                        });
                    }
                }
            }
            None
        }
        Formula::Equality {
            lhs,
            rhs,
            negated: false,
        } => {
            for (a, b) in [(lhs, rhs), (rhs, lhs)] {
                if let Term::Func { symbol: s, args } = a {
                    if s == symbol {
                        return Some(Head::Function {
                            symbol: s,
                            args,
                            value: b,
                        });
                    }
                }
            }
            None
        }
        _ => None,
    }
}

/// Matches head argument patterns against an element tuple, binding clause
/// variables. Promotion applications in patterns are transparent, and a
/// variable only binds elements of the domain of its type.
pub fn match_args(
    interp: &TarskianInterpretation,
    vars: &[&TypedVar],
    patterns: &[Term],
    values: &[Element],
    bindings: &mut BTreeMap<String, Element>,
) -> bool {
    patterns.len() == values.len()
        && patterns
            .iter()
            .zip(values)
            .all(|(p, v)| match_term(interp, vars, p, v, bindings))
}

fn match_term(
    interp: &TarskianInterpretation,
    vars: &[&TypedVar],
    pattern: &Term,
    value: &Element,
    bindings: &mut BTreeMap<String, Element>,
) -> bool {
    match pattern {
        Term::Var(name) => {
            if let Some(bound) = bindings.get(name) {
                return bound == value;
            }
            let Some(var) = vars.iter().find(|v| &v.name == name) else {
                return false;
            };
            let ty = var.type_name().unwrap_or("$i");
            let fits = match interp.domain_of_type(ty) {
                Some(d) => d.contains(value),
                None => ty == "$int" && matches!(value, Element::Int(_)),
            };
            if fits {
                bindings.insert(name.clone(), value.clone());
            }
            fits
        }
        Term::Func { symbol, args } if args.len() == 1 && interp.promotion(symbol).is_some() => {
            let domain = interp.promotion(symbol).unwrap();
            domain.contains(value) && match_term(interp, vars, &args[0], value, bindings)
        }
        Term::Func { symbol, args } => match value {
            Element::Named(n) => args.is_empty() && n == symbol,
            Element::Compound(f, items) => {
                f == symbol
                    && items.len() == args.len()
                    && args
                        .iter()
                        .zip(items)
                        .all(|(a, e)| match_term(interp, vars, a, e, bindings))
            }
            _ => false,
        },
        Term::Distinct(s) => matches!(value, Element::Distinct(v) if v == s),
        Term::Number(n) => matches!((n.as_integer(), value), (Some(a), Element::Int(b)) if &a == b),
        _ => false,
    }
}
