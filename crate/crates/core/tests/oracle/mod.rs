//! A brute-force reference evaluator. Quantified variables are replaced by
//! element names one at a time until the formula is ground; ground
//! formulae are looked up in explicit tables. Shares nothing with the
//! library's evaluator beyond the AST.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;
use tptp_interp::syntax::{Connective, Formula, ModalOp, Quantifier, Term, TypedVar};

pub const UNTYPED: &str = "$i";

#[derive(Debug, Clone, Default)]
pub struct World {
    /// Elements per type, `$i` for untyped variables.
    pub domains: BTreeMap<String, Vec<String>>,
    pub funcs: HashMap<(String, Vec<String>), String>,
    pub preds: HashMap<(String, Vec<String>), bool>,
}

impl World {
    pub fn func(&mut self, symbol: &str, args: &[&str], value: &str) {
        self.funcs.insert((symbol.to_string(), strings(args)), value.to_string());
    }

    pub fn pred(&mut self, symbol: &str, args: &[&str], value: bool) {
        self.preds.insert((symbol.to_string(), strings(args)), value);
    }
}

fn strings(args: &[&str]) -> Vec<String> {
    args.iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Clone, Default)]
pub struct Oracle {
    pub worlds: BTreeMap<String, World>,
    pub access: BTreeSet<(String, String)>,
}

impl Oracle {
    pub fn single(world: World) -> Oracle {
        Oracle {
            worlds: BTreeMap::from([("w".to_string(), world)]),
            access: BTreeSet::new(),
        }
    }

    /// Truth of a closed formula at world `w`; None when a needed table
    /// entry is missing.
    pub fn eval(&self, f: &Formula, w: &str) -> Option<bool> {
        let world = &self.worlds[w];
        Some(match f {
            Formula::Truth(b) => *b,
            Formula::Not(g) => !self.eval(g, w)?,
            Formula::Binary { op, lhs, rhs } => {
                let (a, b) = (self.eval(lhs, w)?, self.eval(rhs, w)?);
                match op {
                    Connective::Or => a || b,
                    Connective::And => a && b,
                    Connective::Implies => !a || b,
                    Connective::ImpliedBy => a || !b,
                    Connective::Iff => a == b,
                    Connective::Xor => a != b,
                    Connective::Nor => !(a || b),
                    Connective::Nand => !(a && b),
                }
            }
            Formula::Equality { lhs, rhs, negated } => (self.term(lhs, world)? == self.term(rhs, world)?) != *negated,
            Formula::Atom { predicate, args } => {
                let args = args.iter().map(|a| self.term(a, world)).collect::<Option<Vec<_>>>()?;
                *world.preds.get(&(predicate.clone(), args))?
            }
            Formula::Defined { predicate, args } if predicate == "$distinct" => {
                let vals = args.iter().map(|a| self.term(a, world)).collect::<Option<Vec<_>>>()?;
                vals.iter().collect::<BTreeSet<_>>().len() == vals.len()
            }
            Formula::Quantified { quantifier, vars, body } => {
                let Some((first, rest)) = vars.split_first() else {
                    return self.eval(body, w);
                };
                let inner = if rest.is_empty() {
                    (**body).clone()
                } else {
                    Formula::Quantified {
                        quantifier: *quantifier,
                        vars: rest.to_vec(),
                        body: body.clone(),
                    }
                };
                let ty = first.type_name().unwrap_or(UNTYPED);
                let elems = world.domains.get(ty).cloned().unwrap_or_default();
                let mut results = Vec::new();
                for e in &elems {
                    results.push(self.eval(&subst(&inner, &first.name, e), w)?);
                }
                match quantifier {
                    Quantifier::Forall => results.iter().all(|b| *b),
                    Quantifier::Exists => results.iter().any(|b| *b),
                }
            }
            Formula::Modal { op, body } => {
                let mut results = Vec::new();
                for (_, v) in self.access.iter().filter(|(a, _)| a == w) {
                    results.push(self.eval(body, v)?);
                }
                match op {
                    ModalOp::Box | ModalOp::Necessary => results.iter().all(|b| *b),
                    ModalOp::Diamond | ModalOp::Possible => results.iter().any(|b| *b),
                    ModalOp::Other(_) => return None,
                }
            }
            _ => return None,
        })
    }

    fn term(&self, t: &Term, world: &World) -> Option<String> {
        match t {
            Term::Distinct(s) => Some(s.clone()),
            Term::Func { symbol, args } => {
                let args = args.iter().map(|a| self.term(a, world)).collect::<Option<Vec<_>>>()?;
                world.funcs.get(&(symbol.clone(), args)).cloned()
            }
            _ => None,
        }
    }
}

/// Replaces free occurrences of `var` by the element `elem`, written as a
/// distinct object.
pub fn subst(f: &Formula, var: &str, elem: &str) -> Formula {
    let st = |t: &Term| subst_term(t, var, elem);
    match f {
        Formula::Not(g) => Formula::Not(Box::new(subst(g, var, elem))),
        Formula::Binary { op, lhs, rhs } => Formula::Binary {
            op: *op,
            lhs: Box::new(subst(lhs, var, elem)),
            rhs: Box::new(subst(rhs, var, elem)),
        },
        Formula::Equality { lhs, rhs, negated } => Formula::Equality {
            lhs: st(lhs),
            rhs: st(rhs),
            negated: *negated,
        },
        Formula::Atom { predicate, args } => Formula::Atom {
            predicate: predicate.clone(),
            args: args.iter().map(st).collect(),
        },
        Formula::Defined { predicate, args } => Formula::Defined {
            predicate: predicate.clone(),
            args: args.iter().map(st).collect(),
        },
        Formula::Quantified { vars, .. } if vars.iter().any(|v| v.name == var) => f.clone(),
        Formula::Quantified { quantifier, vars, body } => Formula::Quantified {
            quantifier: *quantifier,
            vars: vars.clone(),
            body: Box::new(subst(body, var, elem)),
        },
        Formula::Modal { op, body } => Formula::Modal {
            op: op.clone(),
            body: Box::new(subst(body, var, elem)),
        },
        other => other.clone(),
    }
}

fn subst_term(t: &Term, var: &str, elem: &str) -> Term {
    match t {
        Term::Var(v) if v == var => Term::Distinct(elem.to_string()),
        Term::Func { symbol, args } => Term::Func {
            symbol: symbol.clone(),
            args: args.iter().map(|a| subst_term(a, var, elem)).collect(),
        },
        other => other.clone(),
    }
}

/// Reads the tables of an untyped interpretation written with distinct
/// objects: the domain axiom, ground function equations and ground
/// (negated) atoms.
pub fn world_from_formula(f: &Formula) -> World {
    let mut w = World::default();
    let mut stack = vec![f];
    while let Some(g) = stack.pop() {
        match g {
            Formula::Binary {
                op: Connective::And,
                lhs,
                rhs,
            } => {
                stack.push(rhs);
                stack.push(lhs);
            }
            Formula::Quantified {
                quantifier: Quantifier::Forall,
                vars,
                body,
            } if vars.len() == 1 => {
                let mut elems = Vec::new();
                let mut disjuncts = vec![&**body];
                while let Some(d) = disjuncts.pop() {
                    match d {
                        Formula::Binary {
                            op: Connective::Or,
                            lhs,
                            rhs,
                        } => {
                            disjuncts.push(rhs);
                            disjuncts.push(lhs);
                        }
                        Formula::Equality {
                            rhs: Term::Distinct(e),
                            negated: false,
                            ..
                        } => elems.push(e.clone()),
                        other => panic!("unexpected domain disjunct {:?}", other),
                    }
                }
                let ty = vars[0].type_name().unwrap_or(UNTYPED).to_string();
                w.domains.insert(ty, elems);
            }
            Formula::Equality {
                lhs: Term::Func { symbol, args },
                rhs: Term::Distinct(v),
                negated: false,
            } => {
                let args: Vec<String> = args.iter().map(element_name).collect();
                w.funcs.insert((symbol.clone(), args), v.clone());
            }
            Formula::Atom { predicate, args } => {
                w.preds.insert((predicate.clone(), args.iter().map(element_name).collect()), true);
            }
            Formula::Not(inner) => match &**inner {
                Formula::Atom { predicate, args } => {
                    w.preds.insert((predicate.clone(), args.iter().map(element_name).collect()), false);
                }
                other => panic!("unexpected negated conjunct {:?}", other),
            },
            Formula::Defined { .. } => {}
            other => panic!("unexpected conjunct {:?}", other),
        }
    }
    w
}

fn element_name(t: &Term) -> String {
    match t {
        Term::Distinct(s) => s.clone(),
        other => panic!("not an element: {:?}", other),
    }
}

/// Symbols a random interpretation may use, with arity and whether they
/// are predicates.
const SYMBOLS: [(&str, usize, bool); 6] = [
    ("c", 0, false),
    ("f", 1, false),
    ("g", 2, false),
    ("q", 0, true),
    ("p", 1, true),
    ("r", 2, true),
];

/// A random total untyped interpretation over at most 4 elements and at
/// most 3 symbols (at least one predicate), as oracle tables and as the
/// text of an interpretation-formula.
#[derive(Debug, Clone)]
pub struct RandomModel {
    pub elements: Vec<String>,
    pub symbols: Vec<(&'static str, usize, bool)>,
    pub world: World,
    pub text: String,
}

pub fn random_model(rng: &mut impl Rng) -> RandomModel {
    let n = rng.gen_range(1..=4);
    let elements: Vec<String> = (0..n).map(|i| format!("e{}", i)).collect();
    let mut symbols: Vec<_> = SYMBOLS.to_vec();
    symbols.shuffle(rng);
    symbols.truncate(rng.gen_range(1..=3));
    if !symbols.iter().any(|s| s.2) {
        let preds: Vec<_> = SYMBOLS.iter().filter(|s| s.2).collect();
        symbols[0] = **preds.choose(rng).unwrap();
    }
    symbols.sort();

    let mut world = World::default();
    world.domains.insert(UNTYPED.to_string(), elements.clone());
    let quoted = |e: &String| format!("\"{}\"", e);
    let domain: Vec<String> = elements.iter().map(|e| format!("X = {}", quoted(e))).collect();
    let mut conjuncts = vec![format!("( ! [X] : ( {} ) )", domain.join(" | "))];
    for &(sym, arity, is_pred) in &symbols {
        for args in tuples(&elements, arity) {
            let call = if args.is_empty() {
                sym.to_string()
            } else {
                format!("{}({})", sym, args.iter().map(quoted).collect::<Vec<_>>().join(","))
            };
            if is_pred {
                let v: bool = rng.gen();
                world.preds.insert((sym.to_string(), args.clone()), v);
                conjuncts.push(if v { call } else { format!("~ {}", call) });
            } else {
                let v = elements.choose(rng).unwrap().clone();
                conjuncts.push(format!("{} = {}", call, quoted(&v)));
                world.funcs.insert((sym.to_string(), args.clone()), v);
            }
        }
    }
    let text = format!("fof(m,interpretation,( {} )).", conjuncts.join(" & "));
    RandomModel {
        elements,
        symbols,
        world,
        text,
    }
}

fn tuples(elements: &[String], arity: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                elements.iter().map(move |e| {
                    let mut t = t.clone();
                    t.push(e.clone());
                    t
                })
            })
            .collect();
    }
    out
}

const CONNECTIVES: [Connective; 8] = [
    Connective::Or,
    Connective::And,
    Connective::Implies,
    Connective::ImpliedBy,
    Connective::Iff,
    Connective::Xor,
    Connective::Nor,
    Connective::Nand,
];

/// A random closed formula of depth at most `depth` over the model's
/// symbols.
pub fn random_formula(rng: &mut impl Rng, m: &RandomModel, depth: usize) -> Formula {
    formula(rng, m, depth, &mut Vec::new())
}

fn formula(rng: &mut impl Rng, m: &RandomModel, depth: usize, scope: &mut Vec<String>) -> Formula {
    let choice = if depth <= 1 { 0 } else { rng.gen_range(0..5) };
    match choice {
        0 => atom(rng, m, depth, scope),
        1 => Formula::not(formula(rng, m, depth - 1, scope)),
        2 => {
            let op = *CONNECTIVES.choose(rng).unwrap();
            let lhs = formula(rng, m, depth - 1, scope);
            let rhs = formula(rng, m, depth - 1, scope);
            Formula::binary(op, lhs, rhs)
        }
        _ => {
            let count = rng.gen_range(1..=2);
            let vars: Vec<TypedVar> = (0..count)
                .map(|_| TypedVar::new(&format!("X{}", rng.gen_range(0..3)), None))
                .collect();
            let mut vars_dedup: Vec<TypedVar> = Vec::new();
            for v in vars {
                if !vars_dedup.iter().any(|u| u.name == v.name) {
                    vars_dedup.push(v);
                }
            }
            let n = scope.len();
            scope.extend(vars_dedup.iter().map(|v| v.name.clone()));
            let body = formula(rng, m, depth - 1, scope);
            scope.truncate(n);
            if rng.gen() {
                Formula::forall(vars_dedup, body)
            } else {
                Formula::exists(vars_dedup, body)
            }
        }
    }
}

fn atom(rng: &mut impl Rng, m: &RandomModel, depth: usize, scope: &[String]) -> Formula {
    let preds: Vec<_> = m.symbols.iter().filter(|s| s.2).collect();
    if rng.gen_range(0..4) == 0 {
        let lhs = term(rng, m, depth, scope);
        let rhs = term(rng, m, depth, scope);
        return Formula::Equality {
            lhs,
            rhs,
            negated: rng.gen_range(0..3) == 0,
        };
    }
    let &&(sym, arity, _) = preds.choose(rng).unwrap();
    let args = (0..arity).map(|_| term(rng, m, depth, scope)).collect();
    Formula::atom(sym, args)
}

fn term(rng: &mut impl Rng, m: &RandomModel, depth: usize, scope: &[String]) -> Term {
    let funcs: Vec<_> = m.symbols.iter().filter(|s| !s.2).collect();
    let roll = rng.gen_range(0..6);
    if roll < 2 && depth > 1 && !funcs.is_empty() {
        let &&(sym, arity, _) = funcs.choose(rng).unwrap();
        let args = (0..arity).map(|_| term(rng, m, depth - 1, scope)).collect();
        return Term::func(sym, args);
    }
    if roll < 5 && !scope.is_empty() {
        return Term::var(scope.choose(rng).unwrap());
    }
    Term::Distinct(m.elements.choose(rng).unwrap().clone())
}
