use std::cell::Cell;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::interp::normalize::{first_order_formula, first_order_term};
use crate::interp::pattern::{clause_shape, match_args, Head};
use crate::interp::{
    DomainElements, Element, InfiniteDescriptor, Interpretation, KripkeInterpretation, MappedValue, SymbolMapping,
    TarskianInterpretation,
};
use crate::syntax::{print_type, Connective, Formula, Quantifier, Term, TypedVar};

use super::{Closure, Environment, Reason, Value, Verdict};

type Eval<T> = Result<T, Reason>;

const MAX_DEPTH: usize = 64;

/// Evaluates a term against a Tarskian interpretation.
pub fn eval_term(t: &Term, interp: &TarskianInterpretation, env: &Environment) -> Result<Value, Reason> {
    Engine::tarskian(interp).term(&first_order_term(t), env)
}

/// Evaluates a non-modal formula against a Tarskian interpretation.
pub fn eval_formula(f: &Formula, interp: &TarskianInterpretation, env: &Environment) -> Verdict {
    Engine::tarskian(interp).formula(&first_order_formula(f), env)
}

/// Evaluates a formula at world `w` of a Kripke interpretation.
pub fn eval_at_world(f: &Formula, interp: &KripkeInterpretation, w: &str) -> Verdict {
    if !interp.per_world.contains_key(w) {
        return Verdict::unknown(Reason::Unsupported(format!("undeclared world {}", w)));
    }
    Engine::kripke(interp).formula(&first_order_formula(f), &Environment::at_world(w))
}

/// Evaluates a formula against either kind of interpretation. A Kripke
/// interpretation needs `env.current_world`.
pub fn eval_in(f: &Formula, interp: &Interpretation, env: &Environment) -> Verdict {
    let f = first_order_formula(f);
    match interp {
        Interpretation::Tarskian(t) => Engine::tarskian(t).formula(&f, env),
        Interpretation::Kripke(k) => match &env.current_world {
            Some(w) if k.per_world.contains_key(w) => Engine::kripke(k).formula(&f, env),
            Some(w) => Verdict::unknown(Reason::Unsupported(format!("undeclared world {}", w))),
            None => Verdict::unknown(Reason::MissingLocalWorld),
        },
    }
}

struct Engine<'a> {
    base: Option<&'a TarskianInterpretation>,
    kripke: Option<&'a KripkeInterpretation>,
    depth: Cell<usize>,
}

impl<'a> Engine<'a> {
    fn tarskian(t: &'a TarskianInterpretation) -> Engine<'a> {
        Engine {
            base: Some(t),
            kripke: None,
            depth: Cell::new(0),
        }
    }

    fn kripke(k: &'a KripkeInterpretation) -> Engine<'a> {
        Engine {
            base: None,
            kripke: Some(k),
            depth: Cell::new(0),
        }
    }

    fn model(&self, env: &Environment) -> Eval<&'a TarskianInterpretation> {
        if let Some(t) = self.base {
            return Ok(t);
        }
        let k = self.kripke.expect("an engine has a Tarskian or a Kripke model");
        let w = env.current_world.as_deref().ok_or(Reason::MissingLocalWorld)?;
        k.per_world
            .get(w)
            .map(|wi| &wi.tarskian)
            .ok_or_else(|| Reason::Unsupported(format!("undeclared world {}", w)))
    }

    // ---- formulae

    fn formula(&self, f: &Formula, env: &Environment) -> Verdict {
        match f {
            Formula::Truth(b) => Verdict::truth(*b),
            Formula::Not(g) => self.formula(g, env).negate(),
            Formula::Binary { op, lhs, rhs } => self.binary(*op, lhs, rhs, env),
            Formula::Quantified {
                quantifier,
                vars,
                body,
            } => self.quantify(*quantifier, vars, body, env),
            Formula::Equality { lhs, rhs, negated } => {
                let eq = self.term(lhs, env).and_then(|l| {
                    let r = self.term(rhs, env)?;
                    same_value(&l, &r)
                });
                Verdict::from_result(eq.map(|b| b != *negated))
            }
            Formula::Atom { predicate, args } => Verdict::from_result(
                self.values(args, env)
                    .and_then(|vals| self.apply_symbol(predicate, vals, env))
                    .and_then(expect_bool),
            ),
            Formula::Defined { predicate, args } => Verdict::from_result(self.defined_predicate(predicate, args, env)),
            Formula::HoApply { func, arg } => Verdict::from_result(
                self.term(func, env)
                    .and_then(|fv| {
                        let a = self.term(arg, env)?;
                        self.apply_value(fv, vec![a], env)
                    })
                    .and_then(expect_bool),
            ),
            Formula::InWorld { world, body } => match self.world_of(world, env) {
                Ok(w) => self.formula(body, &env.in_world(&w)),
                Err(r) => Verdict::unknown(r),
            },
            Formula::Modal { op, body } => {
                let Some(k) = self.kripke else {
                    return Verdict::unknown(Reason::Unsupported(format!(
                        "modal operator {} outside a Kripke interpretation",
                        op.name()
                    )));
                };
                let Some(universal) = op.is_universal() else {
                    return Verdict::unknown(Reason::Unsupported(format!("modal operator {}", op.name())));
                };
                let Some(w) = env.current_world.as_deref() else {
                    return Verdict::unknown(Reason::MissingLocalWorld);
                };
                let mut pending = None;
                for v in k.accessible_from(w) {
                    let verdict = self.formula(body, &env.in_world(v));
                    match verdict.as_bool() {
                        Some(b) if b != universal => return verdict,
                        None => {
                            pending.get_or_insert(verdict);
                        }
                        _ => {}
                    }
                }
                pending.unwrap_or_else(|| Verdict::truth(universal))
            }
        }
    }

    fn binary(&self, op: Connective, lhs: &Formula, rhs: &Formula, env: &Environment) -> Verdict {
        let l = self.formula(lhs, env);
        match op {
            Connective::And | Connective::Nand => {
                let v = if l.is_false() { l } else { l.and(self.formula(rhs, env)) };
                if op == Connective::Nand {
                    v.negate()
                } else {
                    v
                }
            }
            Connective::Or | Connective::Nor => {
                let v = if l.is_true() { l } else { l.or(self.formula(rhs, env)) };
                if op == Connective::Nor {
                    v.negate()
                } else {
                    v
                }
            }
            Connective::Implies => {
                if l.is_false() {
                    Verdict::truth(true)
                } else {
                    l.negate().or(self.formula(rhs, env))
                }
            }
            Connective::ImpliedBy => {
                if l.is_true() {
                    l
                } else {
                    l.or(self.formula(rhs, env).negate())
                }
            }
            Connective::Iff => l.iff(self.formula(rhs, env)),
            Connective::Xor => l.iff(self.formula(rhs, env)).negate(),
        }
    }

    fn quantify(&self, q: Quantifier, vars: &[TypedVar], body: &Formula, env: &Environment) -> Verdict {
        let Some((first, rest)) = vars.split_first() else {
            return self.formula(body, env);
        };
        let values = match self.domain_values(first, env) {
            Ok(v) => v,
            Err(r) => return Verdict::unknown(r),
        };
        let decisive = q == Quantifier::Exists;
        let mut pending = None;
        for v in values {
            let verdict = self.quantify(q, rest, body, &env.bind(&first.name, v));
            match verdict.as_bool() {
                Some(b) if b == decisive => return verdict,
                None => {
                    pending.get_or_insert(verdict);
                }
                _ => {}
            }
        }
        pending.unwrap_or_else(|| Verdict::truth(!decisive))
    }

    /// The values a quantified variable ranges over; under Kripke semantics
    /// only the elements existing in the current world.
    fn domain_values(&self, var: &TypedVar, env: &Environment) -> Eval<Vec<Value>> {
        let Some(ty) = var.type_name() else {
            let shown = var.ty.as_ref().map(print_type).unwrap_or_default();
            return Err(Reason::Unsupported(format!("quantification over {}", shown)));
        };
        match ty {
            "$o" => return Ok(vec![Value::Bool(false), Value::Bool(true)]),
            "$world" => {
                return match self.kripke {
                    Some(k) => Ok(k.worlds.iter().map(|w| Value::Elem(Element::named(w))).collect()),
                    None => Err(Reason::NoDomain { ty: ty.to_string() }),
                }
            }
            _ => {}
        }
        let model = self.model(env)?;
        let Some(domain) = model.domain_of_type(ty) else {
            return Err(if matches!(ty, "$int" | "$rat" | "$real") {
                Reason::InfiniteQuantifier { ty: ty.to_string() }
            } else {
                Reason::NoDomain { ty: ty.to_string() }
            });
        };
        let DomainElements::Finite(items) = &domain.elements else {
            return Err(Reason::InfiniteQuantifier { ty: ty.to_string() });
        };
        let world = self.world_interp(env);
        Ok(items
            .iter()
            .filter(|e| world.is_none_or(|w| w.exists(&domain.domain_type, e)))
            .map(|e| Value::Elem(e.clone()))
            .collect())
    }

    fn world_interp(&self, env: &Environment) -> Option<&'a crate::interp::WorldInterpretation> {
        let k = self.kripke?;
        k.per_world.get(env.current_world.as_deref()?)
    }

    fn world_of(&self, t: &Term, env: &Environment) -> Eval<String> {
        let Some(k) = self.kripke else {
            return Err(Reason::Unsupported("$in_world outside a Kripke interpretation".into()));
        };
        let name = match t {
            Term::Var(v) => match env.bindings.get(v) {
                Some(Value::Elem(Element::Named(w))) => w.clone(),
                Some(other) => return Err(Reason::Unsupported(format!("{} is not a world", other))),
                None => return Err(Reason::UnboundVariable(v.clone())),
            },
            Term::Func { symbol, args } if args.is_empty() => symbol.clone(),
            Term::Defined { symbol, args } if args.is_empty() && symbol == "$local_world" => {
                k.local_world.clone().ok_or(Reason::MissingLocalWorld)?
            }
            _ => return Err(Reason::Unsupported("world term".into())),
        };
        if k.per_world.contains_key(&name) {
            Ok(name)
        } else {
            Err(Reason::Unsupported(format!("undeclared world {}", name)))
        }
    }

    fn defined_predicate(&self, predicate: &str, args: &[Term], env: &Environment) -> Eval<bool> {
        match predicate {
            "$distinct" => {
                let vals = self.values(args, env)?;
                for (i, a) in vals.iter().enumerate() {
                    for b in &vals[i + 1..] {
                        if same_value(a, b)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            "$less" | "$lesseq" | "$greater" | "$greatereq" => {
                let [a, b] = self.integers::<2>(predicate, args, env)?;
                Ok(match predicate {
                    "$less" => a < b,
                    "$lesseq" => a <= b,
                    "$greater" => a > b,
                    _ => a >= b,
                })
            }
            "$accessible_world" if args.len() == 2 => {
                let k = self.kripke.ok_or_else(|| Reason::Unsupported("$accessible_world".into()))?;
                let a = self.world_of(&args[0], env)?;
                let b = self.world_of(&args[1], env)?;
                Ok(k.accessibility.contains(&(a, b)))
            }
            other => Err(Reason::Unsupported(other.to_string())),
        }
    }

    // ---- terms

    fn term(&self, t: &Term, env: &Environment) -> Eval<Value> {
        match t {
            Term::Var(v) => env
                .bindings
                .get(v)
                .cloned()
                .ok_or_else(|| Reason::UnboundVariable(v.clone())),
            Term::Distinct(s) => Ok(Value::Elem(Element::Distinct(s.clone()))),
            Term::Number(n) => n
                .as_integer()
                .map(|i| Value::Elem(Element::Int(i)))
                .ok_or_else(|| Reason::Unsupported(format!("non-integer number {}", n.text))),
            Term::Defined { symbol, args } => self.arithmetic(symbol, args, env),
            Term::Func { symbol, args } => {
                let vals = self.values(args, env)?;
                let v = self.apply_symbol(symbol, vals, env)?;
                self.check_exists(v, env)
            }
            Term::Apply(func, arg) => {
                let f = self.term(func, env)?;
                let a = self.term(arg, env)?;
                self.apply_value(f, vec![a], env)
            }
            Term::Lambda { vars, body } => Ok(Value::Closure(Closure {
                vars: vars.clone(),
                body: (**body).clone(),
                env: env.clone(),
            })),
            Term::Formula(f) => decided(self.formula(f, env)).map(Value::Bool),
        }
    }

    fn values(&self, args: &[Term], env: &Environment) -> Eval<Vec<Value>> {
        args.iter().map(|a| self.term(a, env)).collect()
    }

    fn integers<const N: usize>(&self, symbol: &str, args: &[Term], env: &Environment) -> Eval<[BigInt; N]> {
        if args.len() != N {
            return Err(Reason::Unsupported(format!("{} with {} arguments", symbol, args.len())));
        }
        let mut out = Vec::with_capacity(N);
        for a in args {
            match self.term(a, env)? {
                Value::Elem(Element::Int(i)) => out.push(i),
                other => return Err(Reason::Unsupported(format!("{} applied to {}", symbol, other))),
            }
        }
        Ok(out.try_into().expect("length checked above"))
    }

    fn arithmetic(&self, symbol: &str, args: &[Term], env: &Environment) -> Eval<Value> {
        let int = |i: BigInt| Ok(Value::Elem(Element::Int(i)));
        match symbol {
            "$sum" => {
                let [a, b] = self.integers::<2>(symbol, args, env)?;
                int(a + b)
            }
            "$difference" => {
                let [a, b] = self.integers::<2>(symbol, args, env)?;
                int(a - b)
            }
            "$product" => {
                let [a, b] = self.integers::<2>(symbol, args, env)?;
                int(a * b)
            }
            "$uminus" => {
                let [a] = self.integers::<1>(symbol, args, env)?;
                int(-a)
            }
            "$local_world" if args.is_empty() => {
                let k = self.kripke.ok_or(Reason::MissingLocalWorld)?;
                let w = k.local_world.clone().ok_or(Reason::MissingLocalWorld)?;
                Ok(Value::Elem(Element::Named(w)))
            }
            other => Err(Reason::Unsupported(other.to_string())),
        }
    }

    /// Under Kripke semantics a ground term must denote an element existing
    /// in the current world.
    fn check_exists(&self, v: Value, env: &Environment) -> Eval<Value> {
        let (Some(world), Value::Elem(e)) = (self.world_interp(env), &v) else {
            return Ok(v);
        };
        let Some(domain) = world
            .tarskian
            .domains
            .values()
            .find(|d| d.elements.finite().is_some_and(|items| items.contains(e)))
        else {
            return Ok(v);
        };
        if world.exists(&domain.domain_type, e) {
            Ok(v)
        } else {
            Err(Reason::NonExistingDesignation {
                element: e.clone(),
                world: env.current_world.clone().unwrap_or_default(),
            })
        }
    }

    fn apply_symbol(&self, symbol: &str, args: Vec<Value>, env: &Environment) -> Eval<Value> {
        let model = self.model(env)?;
        if args.len() == 1 && model.promotion(symbol).is_some() {
            return Ok(args.into_iter().next().expect("one argument"));
        }
        if let Some(m) = model.mappings.get(symbol) {
            if let Some(MappedValue::Lambda(l)) = m.entries.get(&Vec::new()) {
                let lambda_env = Environment {
                    bindings: BTreeMap::new(),
                    current_world: env.current_world.clone(),
                };
                let f = self.term(&first_order_term(l), &lambda_env)?;
                return if args.is_empty() {
                    Ok(f)
                } else {
                    self.apply_value(f, args, env)
                };
            }
            let key = elements(symbol, args)?;
            if let Some(v) = m.entries.get(&key) {
                return Ok(match v {
                    MappedValue::Element(e) => Value::Elem(e.clone()),
                    MappedValue::Truth(b) => Value::Bool(*b),
                    MappedValue::Lambda(_) => unreachable!("lambda mappings are stored at the empty tuple"),
                });
            }
            if let Some(r) = self.consult(model, m, &key, env) {
                return r;
            }
            return Err(Reason::MissingEntry {
                symbol: symbol.to_string(),
                args: key,
            });
        }
        let key = elements(symbol, args)?;
        if key.is_empty() && is_enumerated(model, symbol) {
            return Ok(Value::Elem(Element::named(symbol)));
        }
        if is_constructor(model, symbol) {
            return Ok(Value::Elem(if key.is_empty() {
                Element::named(symbol)
            } else {
                Element::Compound(symbol.to_string(), key)
            }));
        }
        Err(Reason::MissingEntry {
            symbol: symbol.to_string(),
            args: key,
        })
    }

    fn apply_value(&self, f: Value, args: Vec<Value>, env: &Environment) -> Eval<Value> {
        let Value::Closure(c) = f else {
            return Err(Reason::Unsupported(format!("application of {}", f)));
        };
        let mut inner = c.env.clone();
        inner.current_world = env.current_world.clone();
        let mut args = args.into_iter();
        let mut vars = c.vars.iter();
        for v in vars.by_ref() {
            match args.next() {
                Some(a) => inner = inner.bind(&v.name, a),
                None => {
                    let mut rest = vec![v.clone()];
                    rest.extend(vars.cloned());
                    return Ok(Value::Closure(Closure {
                        vars: rest,
                        body: c.body.clone(),
                        env: inner,
                    }));
                }
            }
        }
        let result = self.term(&first_order_term(&c.body), &inner)?;
        let remaining: Vec<Value> = args.collect();
        if remaining.is_empty() {
            Ok(result)
        } else {
            self.apply_value(result, remaining, env)
        }
    }

    /// Instantiates the general clauses of `m` at the tuple. Variables not
    /// fixed by the clause head range over their (finite) domains.
    fn consult(
        &self,
        model: &TarskianInterpretation,
        m: &SymbolMapping,
        key: &[Element],
        env: &Environment,
    ) -> Option<Eval<Value>> {
        if m.general_clauses.is_empty() {
            return None;
        }
        if self.depth.get() >= MAX_DEPTH {
            return Some(Err(Reason::RecursionLimit));
        }
        self.depth.set(self.depth.get() + 1);
        let out = self.consult_clauses(model, m, key, env);
        self.depth.set(self.depth.get() - 1);
        out
    }

    fn consult_clauses(
        &self,
        model: &TarskianInterpretation,
        m: &SymbolMapping,
        key: &[Element],
        env: &Environment,
    ) -> Option<Eval<Value>> {
        let mut pending: Option<Reason> = None;
        for clause in &m.general_clauses {
            let Some(shape) = clause_shape(clause, &m.symbol) else { continue };
            let mut bindings = BTreeMap::new();
            if !match_args(model, &shape.vars, shape.head.args(), key, &mut bindings) {
                continue;
            }
            let mut base = Environment {
                bindings: BTreeMap::new(),
                current_world: env.current_world.clone(),
            };
            for (name, e) in bindings {
                base = base.with_element(&name, e);
            }
            let free: Vec<&TypedVar> = shape
                .vars
                .iter()
                .copied()
                .filter(|v| !base.bindings.contains_key(&v.name))
                .collect();
            let mut columns = Vec::new();
            for v in &free {
                match self.domain_values(v, &base) {
                    Ok(vals) => columns.push(vals),
                    Err(r) => {
                        pending.get_or_insert(r);
                        break;
                    }
                }
            }
            if columns.len() != free.len() {
                continue;
            }
            for combo in crate::interp::complete::cartesian(&columns) {
                let mut inst = base.clone();
                for (v, val) in free.iter().zip(combo) {
                    inst = inst.bind(&v.name, val);
                }
                let mut guard = Verdict::truth(true);
                for g in &shape.guards {
                    guard = guard.and(self.formula(g, &inst));
                    if guard.is_false() {
                        break;
                    }
                }
                match decided(guard) {
                    Ok(true) => {}
                    Ok(false) => continue,
                    Err(r) => {
                        pending.get_or_insert(r);
                        continue;
                    }
                }
                let decided = match &shape.head {
                    Head::Function { value, .. } => self.term(value, &inst),
                    Head::Literal { positive, .. } => Ok(Value::Bool(*positive)),
                    Head::Definition { body, .. } => decided(self.formula(body, &inst)).map(Value::Bool),
                };
                match decided {
                    Ok(v) => return Some(Ok(v)),
                    Err(r) => {
                        pending.get_or_insert(r);
                    }
                }
            }
        }
        pending.map(Err)
    }
}

fn decided(v: Verdict) -> Eval<bool> {
    match v.as_bool() {
        Some(b) => Ok(b),
        None => Err(v.reason.expect("unknown verdicts carry a reason")),
    }
}

fn expect_bool(v: Value) -> Eval<bool> {
    match v {
        Value::Bool(b) => Ok(b),
        other => Err(Reason::Unsupported(format!("{} used as a truth value", other))),
    }
}

fn same_value(a: &Value, b: &Value) -> Eval<bool> {
    match (a, b) {
        (Value::Elem(x), Value::Elem(y)) => Ok(x == y),
        (Value::Bool(x), Value::Bool(y)) => Ok(x == y),
        (Value::Closure(_), _) | (_, Value::Closure(_)) => {
            Err(Reason::Unsupported("equality of functions".into()))
        }
        _ => Ok(false),
    }
}

fn elements(symbol: &str, args: Vec<Value>) -> Eval<Vec<Element>> {
    args.into_iter()
        .map(|v| match v {
            Value::Elem(e) => Ok(e),
            other => Err(Reason::Unsupported(format!("{} as an argument of {}", other, symbol))),
        })
        .collect()
}

fn is_enumerated(model: &TarskianInterpretation, symbol: &str) -> bool {
    let e = Element::named(symbol);
    model
        .domains
        .values()
        .any(|d| d.elements.finite().is_some_and(|items| items.contains(&e)))
}

/// True when `symbol` occurs as a function in the closure formula of a
/// term-generated domain.
fn is_constructor(model: &TarskianInterpretation, symbol: &str) -> bool {
    model.domains.values().any(|d| match &d.elements {
        DomainElements::Infinite(InfiniteDescriptor::TermGenerated(f)) => {
            let mut found = false;
            f.visit(&mut |g| match g {
                Formula::Equality { lhs, rhs, .. } => {
                    found |= mentions(lhs, symbol) || mentions(rhs, symbol);
                }
                Formula::Atom { args, .. } => found |= args.iter().any(|a| mentions(a, symbol)),
                _ => {}
            });
            found
        }
        _ => false,
    })
}

fn mentions(t: &Term, symbol: &str) -> bool {
    match t {
        Term::Func { symbol: s, args } => s == symbol || args.iter().any(|a| mentions(a, symbol)),
        _ => false,
    }
}
