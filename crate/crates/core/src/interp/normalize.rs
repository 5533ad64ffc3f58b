//! First-order view of higher-order syntax. Application spines whose head is
//! a symbol become ordinary applications, so `hot @ ( d2beverage @ d_coffee )`
//! and `hot(d2beverage(d_coffee))` are treated alike.

use crate::syntax::{Formula, Term};

pub fn first_order_formula(f: &Formula) -> Formula {
    match f {
        Formula::Truth(_) => f.clone(),
        Formula::Quantified {
            quantifier,
            vars,
            body,
        } => Formula::Quantified {
            quantifier: *quantifier,
            vars: vars.clone(),
            body: Box::new(first_order_formula(body)),
        },
        Formula::Not(body) => Formula::not(first_order_formula(body)),
        Formula::Binary { op, lhs, rhs } => {
            Formula::binary(*op, first_order_formula(lhs), first_order_formula(rhs))
        }
        Formula::Equality { lhs, rhs, negated } => Formula::Equality {
            lhs: first_order_term(lhs),
            rhs: first_order_term(rhs),
            negated: *negated,
        },
        Formula::Atom { predicate, args } => Formula::Atom {
            predicate: predicate.clone(),
            args: args.iter().map(first_order_term).collect(),
        },
        Formula::Defined { predicate, args } => Formula::Defined {
            predicate: predicate.clone(),
            args: args.iter().map(first_order_term).collect(),
        },
        Formula::InWorld { world, body } => Formula::InWorld {
            world: first_order_term(world),
            body: Box::new(first_order_formula(body)),
        },
        Formula::Modal { op, body } => Formula::Modal {
            op: op.clone(),
            body: Box::new(first_order_formula(body)),
        },
        Formula::HoApply { func, arg } => {
            let applied = Term::Apply(Box::new(func.clone()), Box::new(arg.clone()));
            match first_order_term(&applied) {
                Term::Func { symbol, args } => Formula::Atom {
                    predicate: symbol,
                    args,
                },
                Term::Defined { symbol, args } => Formula::Defined {
                    predicate: symbol,
                    args,
                },
                Term::Apply(func, arg) => Formula::HoApply {
                    func: *func,
                    arg: *arg,
                },
                _ => unreachable!("an application spine has at least one argument"),
            }
        }
    }
}

pub fn first_order_term(t: &Term) -> Term {
    match t {
        Term::Var(_) | Term::Distinct(_) | Term::Number(_) => t.clone(),
        Term::Func { symbol, args } => Term::Func {
            symbol: symbol.clone(),
            args: args.iter().map(first_order_term).collect(),
        },
        Term::Defined { symbol, args } => Term::Defined {
            symbol: symbol.clone(),
            args: args.iter().map(first_order_term).collect(),
        },
        Term::Apply(..) => {
            let (head, spine_args) = t.spine();
            let spine_args: Vec<Term> = spine_args.into_iter().map(first_order_term).collect();
            match head {
                Term::Func { symbol, args } => {
                    let mut all: Vec<Term> = args.iter().map(first_order_term).collect();
                    all.extend(spine_args);
                    Term::Func {
                        symbol: symbol.clone(),
                        args: all,
                    }
                }
                Term::Defined { symbol, args } => {
                    let mut all: Vec<Term> = args.iter().map(first_order_term).collect();
                    all.extend(spine_args);
                    Term::Defined {
                        symbol: symbol.clone(),
                        args: all,
                    }
                }
                other => spine_args
                    .into_iter()
                    .fold(first_order_term(other), |f, a| Term::Apply(Box::new(f), Box::new(a))),
            }
        }
        Term::Lambda { vars, body } => Term::Lambda {
            vars: vars.clone(),
            body: Box::new(first_order_term(body)),
        },
        Term::Formula(f) => match first_order_formula(f) {
            Formula::Atom { predicate, args } if args.is_empty() => Term::constant(&predicate),
            other => Term::Formula(Box::new(other)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Language};

    fn fo(text: &str) -> Formula {
        first_order_formula(&parse_formula(text, Language::Thf).unwrap())
    }

    #[test]
    fn application_spine_becomes_atom() {
        let expected = parse_formula("hot(d2beverage(d_coffee))", Language::Fof).unwrap();
        assert_eq!(fo("hot @ ( d2beverage @ d_coffee )"), expected);
    }

    #[test]
    fn equality_sides_are_flattened() {
        let expected = parse_formula("heat(d2beverage(d_coffee)) = d2beverage(d_coffee)", Language::Fof).unwrap();
        assert_eq!(fo("( heat @ ( d2beverage @ d_coffee ) ) = ( d2beverage @ d_coffee )"), expected);
    }

    #[test]
    fn variable_heads_stay_higher_order() {
        let f = fo("F @ X");
        assert!(matches!(f, Formula::HoApply { .. }));
    }

    #[test]
    fn lambda_bodies_are_flattened() {
        let Formula::Equality { rhs, .. } = fo("mix = ( ^ [F: syrup > beverage] : ( d2beverage @ d_coffee ) )") else {
            panic!()
        };
        let Term::Lambda { body, .. } = rhs else { panic!() };
        assert_eq!(*body, Term::func("d2beverage", vec![Term::constant("d_coffee")]));
    }
}
