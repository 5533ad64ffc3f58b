//! Recognition of the component patterns that make up an
//! interpretation-formula. Matching is syntactic; equalities may be written
//! either way round.

use std::collections::{BTreeMap, BTreeSet};

use crate::syntax::{Connective, Formula, Quantifier, Term, TypeExpr, TypedVar};

/// The kind of a top-level conjunct of an interpretation-formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    DomainEnumeration,
    Distinctness,
    Surjectivity,
    Injectivity,
    FunctionMapping,
    PredicateMapping,
    ElementClosure,
    ElementExistence,
    WorldEnumeration,
    WorldDistinctness,
    AccessibilityLiteral,
    LocalWorldAssignment,
    InWorldWrapper,
    HerbrandFormula,
    Unclassified,
}

impl ComponentKind {
    pub fn name(self) -> &'static str {
        match self {
            ComponentKind::DomainEnumeration => "domain_enumeration",
            ComponentKind::Distinctness => "distinctness",
            ComponentKind::Surjectivity => "surjectivity",
            ComponentKind::Injectivity => "injectivity",
            ComponentKind::FunctionMapping => "function_mapping",
            ComponentKind::PredicateMapping => "predicate_mapping",
            ComponentKind::ElementClosure => "element_closure",
            ComponentKind::ElementExistence => "element_existence",
            ComponentKind::WorldEnumeration => "world_enumeration",
            ComponentKind::WorldDistinctness => "world_distinctness",
            ComponentKind::AccessibilityLiteral => "accessibility_literal",
            ComponentKind::LocalWorldAssignment => "local_world_assignment",
            ComponentKind::InWorldWrapper => "in_world_wrapper",
            ComponentKind::HerbrandFormula => "herbrand_formula",
            ComponentKind::Unclassified => "unclassified",
        }
    }

    /// Components that shape domains rather than map symbols.
    pub fn is_domain_part(self) -> bool {
        matches!(
            self,
            ComponentKind::DomainEnumeration
                | ComponentKind::Distinctness
                | ComponentKind::Surjectivity
                | ComponentKind::Injectivity
                | ComponentKind::ElementClosure
                | ComponentKind::ElementExistence
        )
    }

    pub fn is_world_part(self) -> bool {
        matches!(
            self,
            ComponentKind::WorldEnumeration
                | ComponentKind::WorldDistinctness
                | ComponentKind::AccessibilityLiteral
                | ComponentKind::LocalWorldAssignment
        )
    }
}

/// What the classifier knows about the surrounding signature.
#[derive(Debug, Clone, Default)]
pub struct ClassifyContext {
    /// Declared type of each symbol.
    pub types: BTreeMap<String, TypeExpr>,
    /// Type-promotion functions.
    pub promotions: BTreeSet<String>,
    /// Constants known to name domain elements.
    pub elements: BTreeSet<String>,
    /// Constructors of term-generated domains.
    pub constructors: BTreeSet<String>,
    /// Constants known to name worlds.
    pub worlds: BTreeSet<String>,
}

impl ClassifyContext {
    pub fn from_decls<'a>(decls: impl IntoIterator<Item = &'a crate::syntax::TypeDecl>) -> Self {
        let mut ctx = ClassifyContext::default();
        for d in decls {
            ctx.types.entry(d.symbol.clone()).or_insert_with(|| d.ty.clone());
            if d.ty.as_named() == Some(WORLD_TYPE) {
                ctx.worlds.insert(d.symbol.clone());
            }
        }
        ctx
    }

    fn is_world(&self, t: &Term) -> bool {
        matches!(t, Term::Func { symbol, args } if args.is_empty() && self.worlds.contains(symbol))
    }

    /// True if `t` syntactically denotes a domain element (possibly through
    /// a promotion function).
    pub fn is_element_term(&self, t: &Term) -> bool {
        match t {
            Term::Distinct(_) | Term::Number(_) => true,
            Term::Func { symbol, args } if args.is_empty() => {
                self.elements.contains(symbol) || self.constructors.contains(symbol)
            }
            Term::Func { symbol, args } if args.len() == 1 && self.promotions.contains(symbol) => {
                self.is_element_term(&args[0])
            }
            Term::Func { symbol, args } if self.constructors.contains(symbol) => {
                args.iter().all(|a| self.is_element_term(a))
            }
            _ => false,
        }
    }

    /// True if `t` is an application of an interpreted symbol, i.e. neither an
    /// element nor a promotion or constructor application.
    fn is_symbol_application(&self, t: &Term) -> bool {
        match t {
            Term::Func { symbol, .. } => {
                !self.is_element_term(t)
                    && !self.promotions.contains(symbol)
                    && !self.worlds.contains(symbol)
            }
            _ => false,
        }
    }
}

pub const WORLD_TYPE: &str = "$world";

/// Which worlds an `$in_world` wrapper addresses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WorldScope {
    One(String),
    /// `! [W: $world] : $in_world(W, ...)`.
    All,
}

/// A recognized component with the parts the assembler needs.
#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    DomainEnumeration { ty: String, elements: Vec<Term> },
    /// `$distinct(...)` or a single inequality between elements.
    Distinctness { elements: Vec<Term>, predicate: bool },
    /// `! [I1: t, I2: t] : ( ... => I1 != I2 )`.
    ImpliedDistinctness { ty: String },
    Surjectivity { function: String, problem_type: String, domain_type: String },
    Injectivity { function: String, domain_type: String },
    ElementClosure { ty: String, constants: Vec<String>, constructors: Vec<String> },
    ElementExistence { ty: String, element: Term },
    FunctionMapping { symbol: String, args: Vec<Term>, value: Term },
    PredicateMapping { symbol: String, args: Vec<Term>, value: bool },
    /// A quantified mapping clause for `symbol`.
    GeneralClause { symbol: String, predicate: bool },
    WorldEnumeration { worlds: Vec<String> },
    WorldDistinctness { worlds: Vec<String> },
    Accessibility { from: String, to: String, positive: bool },
    LocalWorld { world: String },
    InWorld { scope: WorldScope, body: Formula },
    Unclassified,
}

impl Component {
    pub fn kind(&self) -> ComponentKind {
        match self {
            Component::DomainEnumeration { .. } => ComponentKind::DomainEnumeration,
            Component::Distinctness { .. } | Component::ImpliedDistinctness { .. } => {
                ComponentKind::Distinctness
            }
            Component::Surjectivity { .. } => ComponentKind::Surjectivity,
            Component::Injectivity { .. } => ComponentKind::Injectivity,
            Component::ElementClosure { .. } => ComponentKind::ElementClosure,
            Component::ElementExistence { .. } => ComponentKind::ElementExistence,
            Component::FunctionMapping { .. } => ComponentKind::FunctionMapping,
            Component::PredicateMapping { .. } => ComponentKind::PredicateMapping,
            Component::GeneralClause { predicate: false, .. } => ComponentKind::FunctionMapping,
            Component::GeneralClause { predicate: true, .. } => ComponentKind::PredicateMapping,
            Component::WorldEnumeration { .. } => ComponentKind::WorldEnumeration,
            Component::WorldDistinctness { .. } => ComponentKind::WorldDistinctness,
            Component::Accessibility { .. } => ComponentKind::AccessibilityLiteral,
            Component::LocalWorld { .. } => ComponentKind::LocalWorldAssignment,
            Component::InWorld { .. } => ComponentKind::InWorldWrapper,
            Component::Unclassified => ComponentKind::Unclassified,
        }
    }
}

/// Classifies one top-level conjunct.
pub fn classify_component(conjunct: &Formula, ctx: &ClassifyContext) -> ComponentKind {
    recognize(conjunct, ctx).kind()
}

/// Classifies one top-level conjunct and extracts its parts.
pub fn recognize(f: &Formula, ctx: &ClassifyContext) -> Component {
    match f {
        Formula::Quantified {
            quantifier: Quantifier::Forall,
            vars,
            body,
        } => recognize_universal(f, vars, body, ctx),
        Formula::Quantified {
            quantifier: Quantifier::Exists,
            vars,
            body,
        } => recognize_existence(vars, body).unwrap_or(Component::Unclassified),
        Formula::Defined { predicate, args } if predicate == "$distinct" => {
            if !args.is_empty() && args.iter().all(|a| ctx.is_world(a)) {
                Component::WorldDistinctness {
                    worlds: args.iter().filter_map(constant_name).collect(),
                }
            } else {
                Component::Distinctness {
                    elements: args.clone(),
                    predicate: true,
                }
            }
        }
        Formula::Defined { predicate, args } if predicate == "$accessible_world" => {
            accessibility(args, true).unwrap_or(Component::Unclassified)
        }
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Defined { predicate, args } if predicate == "$accessible_world" => {
                accessibility(args, false).unwrap_or(Component::Unclassified)
            }
            Formula::Atom { predicate, args } if args.iter().all(Term::is_ground) => {
                Component::PredicateMapping {
                    symbol: predicate.clone(),
                    args: args.clone(),
                    value: false,
                }
            }
            Formula::Equality {
                lhs,
                rhs,
                negated: false,
            } => inequality(lhs, rhs, ctx),
            _ => Component::Unclassified,
        },
        Formula::Atom { predicate, args } if args.iter().all(Term::is_ground) => {
            Component::PredicateMapping {
                symbol: predicate.clone(),
                args: args.clone(),
                value: true,
            }
        }
        Formula::Equality {
            lhs,
            rhs,
            negated: true,
        } => inequality(lhs, rhs, ctx),
        Formula::Equality {
            lhs,
            rhs,
            negated: false,
        } => ground_equality(lhs, rhs, ctx),
        Formula::InWorld { world, body } => match constant_name(world) {
            Some(w) => Component::InWorld {
                scope: WorldScope::One(w),
                body: (**body).clone(),
            },
            None => Component::Unclassified,
        },
        _ => Component::Unclassified,
    }
}

fn constant_name(t: &Term) -> Option<String> {
    match t {
        Term::Func { symbol, args } if args.is_empty() => Some(symbol.clone()),
        _ => None,
    }
}

fn accessibility(args: &[Term], positive: bool) -> Option<Component> {
    match args {
        [a, b] => Some(Component::Accessibility {
            from: constant_name(a)?,
            to: constant_name(b)?,
            positive,
        }),
        _ => None,
    }
}

fn inequality(lhs: &Term, rhs: &Term, ctx: &ClassifyContext) -> Component {
    if ctx.is_world(lhs) && ctx.is_world(rhs) {
        return Component::WorldDistinctness {
            worlds: vec![constant_name(lhs).unwrap(), constant_name(rhs).unwrap()],
        };
    }
    if ctx.is_element_term(lhs) && ctx.is_element_term(rhs) {
        return Component::Distinctness {
            elements: vec![lhs.clone(), rhs.clone()],
            predicate: false,
        };
    }
    Component::Unclassified
}

fn ground_equality(lhs: &Term, rhs: &Term, ctx: &ClassifyContext) -> Component {
    for (a, b) in [(lhs, rhs), (rhs, lhs)] {
        if let Term::Defined { symbol, args } = a {
            if symbol == "$local_world" && args.is_empty() {
                if let Some(w) = constant_name(b) {
                    return Component::LocalWorld { world: w };
                }
            }
        }
    }
    if !lhs.is_ground() || !rhs.is_ground() {
        return Component::Unclassified;
    }
    // prefer the side that is not a known element as the mapped symbol
    let (app, value) = if ctx.is_symbol_application(lhs) {
        (lhs, rhs)
    } else if ctx.is_symbol_application(rhs) {
        (rhs, lhs)
    } else {
        return Component::Unclassified;
    };
    match app {
        Term::Func { symbol, args } => Component::FunctionMapping {
            symbol: symbol.clone(),
            args: args.clone(),
            value: value.clone(),
        },
        _ => Component::Unclassified,
    }
}

fn var_type(v: &TypedVar) -> Option<String> {
    v.type_name().map(str::to_string)
}

fn is_var(t: &Term, name: &str) -> bool {
    matches!(t, Term::Var(v) if v == name)
}

/// Splits `X = t` or `t = X` into `t`.
fn equated_with<'a>(f: &'a Formula, var: &str) -> Option<&'a Term> {
    match f {
        Formula::Equality {
            lhs,
            rhs,
            negated: false,
        } => {
            if is_var(lhs, var) {
                Some(rhs)
            } else if is_var(rhs, var) {
                Some(lhs)
            } else {
                None
            }
        }
        _ => None,
    }
}

fn recognize_existence(vars: &[TypedVar], body: &Formula) -> Option<Component> {
    let [v] = vars else { return None };
    let e = equated_with(body, &v.name)?;
    if !e.is_ground() {
        return None;
    }
    Some(Component::ElementExistence {
        ty: var_type(v)?,
        element: e.clone(),
    })
}

fn recognize_universal(
    whole: &Formula,
    vars: &[TypedVar],
    body: &Formula,
    ctx: &ClassifyContext,
) -> Component {
    if let [v] = vars {
        if let Some(c) = enumeration(v, body) {
            return c;
        }
        if let Some(c) = surjectivity(v, body) {
            return c;
        }
        if let Some(c) = closure(v, body) {
            return c;
        }
        if v.type_name() == Some(WORLD_TYPE) {
            if let Formula::InWorld { world, body } = body {
                if is_var(world, &v.name) {
                    return Component::InWorld {
                        scope: WorldScope::All,
                        body: (**body).clone(),
                    };
                }
            }
        }
    }
    if let [a, b] = vars {
        if let Some(c) = injectivity(a, b, body) {
            return c;
        }
        if let Some(c) = implied_distinctness(a, b, body) {
            return c;
        }
    }
    match clause_head(whole, ctx) {
        Some((symbol, predicate)) => Component::GeneralClause { symbol, predicate },
        None => Component::Unclassified,
    }
}

fn enumeration(v: &TypedVar, body: &Formula) -> Option<Component> {
    let mut elements = Vec::new();
    for d in body.disjuncts() {
        let e = equated_with(d, &v.name)?;
        if !e.is_ground() {
            return None;
        }
        elements.push(e.clone());
    }
    let ty = var_type(v)?;
    if ty == WORLD_TYPE {
        let worlds = elements.iter().map(constant_name).collect::<Option<Vec<_>>>()?;
        return Some(Component::WorldEnumeration { worlds });
    }
    Some(Component::DomainEnumeration { ty, elements })
}

fn surjectivity(v: &TypedVar, body: &Formula) -> Option<Component> {
    let Formula::Quantified {
        quantifier: Quantifier::Exists,
        vars,
        body: inner,
    } = body
    else {
        return None;
    };
    let [d] = vars.as_slice() else { return None };
    let image = equated_with(inner, &v.name)?;
    match image {
        Term::Func { symbol, args } if args.len() == 1 && is_var(&args[0], &d.name) => {
            Some(Component::Surjectivity {
                function: symbol.clone(),
                problem_type: var_type(v)?,
                domain_type: var_type(d)?,
            })
        }
        _ => None,
    }
}

fn closure(v: &TypedVar, body: &Formula) -> Option<Component> {
    let mut constants = Vec::new();
    let mut constructors = Vec::new();
    for d in body.disjuncts() {
        match d {
            Formula::Quantified {
                quantifier: Quantifier::Exists,
                vars,
                body,
            } => match equated_with(body, &v.name)? {
                Term::Func { symbol, args }
                    if args.len() == vars.len()
                        && args.iter().zip(vars).all(|(a, x)| is_var(a, &x.name)) =>
                {
                    constructors.push(symbol.clone())
                }
                _ => return None,
            },
            other => constants.push(constant_name(equated_with(other, &v.name)?)?),
        }
    }
    if constructors.is_empty() {
        return None;
    }
    Some(Component::ElementClosure {
        ty: var_type(v)?,
        constants,
        constructors,
    })
}

/// `f(D1) = f(D2) => D1 = D2`.
fn injectivity(a: &TypedVar, b: &TypedVar, body: &Formula) -> Option<Component> {
    let Formula::Binary {
        op: Connective::Implies,
        lhs,
        rhs,
    } = body
    else {
        return None;
    };
    let Formula::Equality {
        lhs: fa,
        rhs: fb,
        negated: false,
    } = lhs.as_ref()
    else {
        return None;
    };
    let vars_equal = match rhs.as_ref() {
        Formula::Equality {
            lhs: x,
            rhs: y,
            negated: false,
        } => (is_var(x, &a.name) && is_var(y, &b.name)) || (is_var(x, &b.name) && is_var(y, &a.name)),
        _ => false,
    };
    if !vars_equal || a.ty != b.ty {
        return None;
    }
    let unary = |t: &Term| match t {
        Term::Func { symbol, args } if args.len() == 1 => match &args[0] {
            Term::Var(x) => Some((symbol.clone(), x.clone())),
            _ => None,
        },
        _ => None,
    };
    let (f1, x1) = unary(fa)?;
    let (f2, x2) = unary(fb)?;
    let covers = (x1 == a.name && x2 == b.name) || (x1 == b.name && x2 == a.name);
    if f1 != f2 || !covers {
        return None;
    }
    Some(Component::Injectivity {
        function: f1,
        domain_type: var_type(a)?,
    })
}

/// `! [I1: t, I2: t] : ( guard => I1 != I2 )`.
fn implied_distinctness(a: &TypedVar, b: &TypedVar, body: &Formula) -> Option<Component> {
    let Formula::Binary {
        op: Connective::Implies,
        rhs,
        ..
    } = body
    else {
        return None;
    };
    let Formula::Equality {
        lhs: x,
        rhs: y,
        negated: true,
    } = rhs.as_ref()
    else {
        return None;
    };
    let covers = (is_var(x, &a.name) && is_var(y, &b.name)) || (is_var(x, &b.name) && is_var(y, &a.name));
    if !covers || a.ty != b.ty {
        return None;
    }
    Some(Component::ImpliedDistinctness { ty: var_type(a)? })
}

/// The symbol whose mapping a quantified clause defines, with a flag that is
/// true for predicates.
pub fn clause_head(f: &Formula, ctx: &ClassifyContext) -> Option<(String, bool)> {
    let mut core = f;
    while let Formula::Quantified {
        quantifier: Quantifier::Forall,
        body,
        ..
    } = core
    {
        core = body;
    }
    head_of_core(core, ctx)
}

fn head_of_core(core: &Formula, ctx: &ClassifyContext) -> Option<(String, bool)> {
    match core {
        Formula::Binary {
            op: Connective::Implies,
            rhs,
            ..
        } => head_of_core(rhs, ctx),
        Formula::Binary {
            op: Connective::Iff,
            lhs,
            ..
        } => head_of_core(lhs, ctx),
        Formula::Atom { predicate, .. } => Some((predicate.clone(), true)),
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Atom { predicate, .. } => Some((predicate.clone(), true)),
            _ => None,
        },
        Formula::Equality {
            lhs,
            rhs,
            negated: false,
        } => [lhs, rhs].into_iter().find_map(|side| match side {
            Term::Func { symbol, .. } if ctx.is_symbol_application(side) => Some((symbol.clone(), false)),
            _ => None,
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Language};

    fn tff(text: &str) -> Formula {
        parse_formula(text, Language::Tff).unwrap()
    }

    fn fof(text: &str) -> Formula {
        parse_formula(text, Language::Fof).unwrap()
    }

    #[test]
    fn untyped_enumeration_of_distinct_objects() {
        let f = fof(r#"! [X] : ( X = "a" | X = "f" | X = "john" | X = "gotA" )"#);
        let Component::DomainEnumeration { ty, elements } = recognize(&f, &ClassifyContext::default()) else {
            panic!()
        };
        assert_eq!(ty, "$i");
        assert_eq!(elements.len(), 4);
        assert!(elements.iter().all(|e| matches!(e, Term::Distinct(_))));
    }

    #[test]
    fn flipped_equalities_are_tolerated() {
        let f = tff("! [DC: cat] : ( d_garfield = DC | DC = d_arlene )");
        assert_eq!(classify_component(&f, &ClassifyContext::default()), ComponentKind::DomainEnumeration);
        let f = tff("! [H: human] : ? [DH: d_human] : d2human(DH) = H");
        assert_eq!(classify_component(&f, &ClassifyContext::default()), ComponentKind::Surjectivity);
    }

    #[test]
    fn distinct_predicate() {
        let f = tff("$distinct(d_garfield,d_arlene,d_nermal)");
        assert_eq!(classify_component(&f, &ClassifyContext::default()), ComponentKind::Distinctness);
    }

    #[test]
    fn surjectivity_names_the_function_and_types() {
        let f = tff("! [H: human] : ? [DH: d_human] : H = d2human(DH)");
        assert_eq!(
            recognize(&f, &ClassifyContext::default()),
            Component::Surjectivity {
                function: "d2human".into(),
                problem_type: "human".into(),
                domain_type: "d_human".into()
            }
        );
    }

    #[test]
    fn injectivity() {
        let f = tff("! [DC1: d_cat,DC2: d_cat] : ( d2cat(DC1) = d2cat(DC2) => DC1 = DC2 )");
        assert_eq!(
            recognize(&f, &ClassifyContext::default()),
            Component::Injectivity {
                function: "d2cat".into(),
                domain_type: "d_cat".into()
            }
        );
    }

    #[test]
    fn truth_constant_is_unclassified() {
        assert_eq!(
            classify_component(&Formula::Truth(true), &ClassifyContext::default()),
            ComponentKind::Unclassified
        );
    }

    #[test]
    fn peano_closure_and_clauses() {
        let ctx = ClassifyContext::default();
        let f = tff("! [I: peano] : ( I = zero | ? [P: peano] : I = s(P) )");
        assert_eq!(
            recognize(&f, &ctx),
            Component::ElementClosure {
                ty: "peano".into(),
                constants: vec!["zero".into()],
                constructors: vec!["s".into()]
            }
        );
        let f = tff("! [I1: peano,I2: peano] : ( peano_less(I1,I2) => I1 != I2 )");
        assert_eq!(recognize(&f, &ctx), Component::ImpliedDistinctness { ty: "peano".into() });
        let mut ctx = ClassifyContext::default();
        ctx.promotions.insert("peano2person".into());
        ctx.constructors.insert("s".into());
        let f = tff("! [I: peano] : child_of(peano2person(I)) = peano2person(s(I))");
        assert_eq!(
            recognize(&f, &ctx),
            Component::GeneralClause {
                symbol: "child_of".into(),
                predicate: false
            }
        );
        let f = tff("! [A: peano,D: peano] : ( is_descendant(peano2person(A),peano2person(D)) <=> peano_less(A,D) )");
        assert_eq!(
            recognize(&f, &ctx),
            Component::GeneralClause {
                symbol: "is_descendant".into(),
                predicate: true
            }
        );
    }

    #[test]
    fn guarded_integer_clause() {
        let mut ctx = ClassifyContext::default();
        ctx.promotions.insert("int2person".into());
        let f = tff("! [I: $int] : ( $greatereq(I,0) => child_of(int2person(I)) = int2person($sum(I,1)) )");
        assert_eq!(classify_component(&f, &ctx), ComponentKind::FunctionMapping);
    }

    #[test]
    fn ground_mappings_through_promotions() {
        let mut ctx = ClassifyContext::default();
        ctx.promotions.insert("d2cat".into());
        ctx.elements.insert("d_garfield".into());
        let f = tff("loves(d2cat(d_garfield)) = d2cat(d_garfield)");
        let Component::FunctionMapping { symbol, .. } = recognize(&f, &ctx) else { panic!() };
        assert_eq!(symbol, "loves");
        let f = tff("d2cat(d_garfield) = garfield");
        let Component::FunctionMapping { symbol, .. } = recognize(&f, &ctx) else { panic!() };
        assert_eq!(symbol, "garfield");
        let f = tff("~ owns(d2human(d_jon),d2cat(d_nermal))");
        assert_eq!(classify_component(&f, &ctx), ComponentKind::PredicateMapping);
    }

    #[test]
    fn world_components() {
        let mut ctx = ClassifyContext::default();
        ctx.worlds.extend(["w1".to_string(), "w2".into(), "w3".into()]);
        let cases = [
            ("! [W: $world] : ( W = w1 | W = w2 | W = w3 )", ComponentKind::WorldEnumeration),
            ("$distinct(w1,w2,w3)", ComponentKind::WorldDistinctness),
            ("$accessible_world(w1,w2)", ComponentKind::AccessibilityLiteral),
            ("~ $accessible_world(w3,w3)", ComponentKind::AccessibilityLiteral),
            ("$local_world = w1", ComponentKind::LocalWorldAssignment),
            ("$in_world(w1, rains)", ComponentKind::InWorldWrapper),
            ("! [W: $world] : $in_world(W, rains)", ComponentKind::InWorldWrapper),
            ("? [AD: adult_d] : AD = adult_1", ComponentKind::ElementExistence),
        ];
        for (text, kind) in cases {
            assert_eq!(classify_component(&tff(text), &ctx), kind, "{}", text);
        }
    }
}
