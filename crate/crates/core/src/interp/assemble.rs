//! Assembly of interpretation-formulae into structured interpretations.
//!
//! Assembly runs in two passes. The first pass finds the domain-shaping
//! components (enumerations, closures, promotion bijections) across every
//! unit, which fixes which constants name elements and which functions are
//! promotions. The second pass builds domains and mappings, per world for
//! Kripke interpretations.

use std::collections::{BTreeMap, BTreeSet};

use indexmap::IndexMap;
use thiserror::Error;

use crate::diag::{Diagnostic, DiagnosticKind};
use crate::syntax::{
    print_formula, print_term, AnnotatedFormula, BaseRole, Formula, Language, LogicSpecification,
    Subrole, Term, TypeDecl, TypeExpr,
};

use super::classify::{recognize, ClassifyContext, Component, ComponentKind, WorldScope, WORLD_TYPE};
use super::legacy::upgrade_unit;
use super::model::*;
use super::normalize::first_order_formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssemblyError {
    #[error("no interpretation-formulae among the units")]
    NoInterpretation,
    #[error("{symbol}({args}) is mapped to both {first} and {second}")]
    ConflictingEntry {
        symbol: String,
        args: String,
        first: String,
        second: String,
    },
    #[error("{term} in {unit} does not name an element of any domain")]
    UnknownElement { term: String, unit: String },
    #[error("world {world} is used but not declared")]
    MissingWorld { world: String },
}

/// What a classified conjunct is about; used to regroup conjuncts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    /// A domain, by problem type.
    Domain(String),
    Symbol(String),
    Worlds,
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classified {
    pub unit: String,
    pub language: Language,
    /// World scope of a conjunct inside an `$in_world` wrapper.
    pub scope: Option<WorldScope>,
    /// The conjunct as written.
    pub formula: Formula,
    pub kind: ComponentKind,
    pub subject: Subject,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct AssemblyReport {
    /// Top-level conjuncts that matched a component pattern.
    pub classified: Vec<Classified>,
    /// Top-level conjuncts kept as general constraints.
    pub unclassified: Vec<Classified>,
    /// Conjuncts inside `$in_world` wrappers, classified or not.
    pub nested: Vec<Classified>,
    /// Herbrand units, passed through verbatim.
    pub herbrand_units: Vec<AnnotatedFormula>,
    pub warnings: Vec<Diagnostic>,
}

impl AssemblyReport {
    /// Every conjunct that was classified, including those inside wrappers
    /// and excluding the wrappers themselves.
    pub fn components(&self) -> impl Iterator<Item = &Classified> {
        self.classified
            .iter()
            .chain(&self.unclassified)
            .chain(&self.nested)
            .filter(|c| c.kind != ComponentKind::InWorldWrapper)
    }
}

#[derive(Debug, Clone)]
struct Item {
    unit: String,
    language: Language,
    scope: Option<WorldScope>,
    original: Formula,
    normal: Formula,
}

/// Facts that hold across all worlds: which functions are promotions and
/// which constants name elements.
#[derive(Debug, Default)]
struct Signature {
    ctx: ClassifyContext,
    /// Domain type to (promotion function, problem type).
    promotion_of: BTreeMap<String, (String, String)>,
    /// Domain type of each enumerated element.
    element_type: BTreeMap<Element, String>,
    world_decls: Vec<String>,
}

impl Signature {
    fn problem_type(&self, domain_type: &str) -> String {
        self.promotion_of
            .get(domain_type)
            .map(|(_, pt)| pt.clone())
            .unwrap_or_else(|| domain_type.to_string())
    }

    fn element(&self, t: &Term) -> Option<Element> {
        match t {
            Term::Distinct(s) => Some(Element::Distinct(s.clone())),
            Term::Number(n) => n.as_integer().map(Element::Int),
            Term::Func { symbol, args } if args.is_empty() => {
                if self.ctx.elements.contains(symbol) || self.ctx.constructors.contains(symbol) {
                    Some(Element::Named(symbol.clone()))
                } else {
                    None
                }
            }
            Term::Func { symbol, args } if args.len() == 1 && self.ctx.promotions.contains(symbol) => {
                self.element(&args[0])
            }
            Term::Func { symbol, args } if self.ctx.constructors.contains(symbol) => Some(Element::Compound(
                symbol.clone(),
                args.iter().map(|a| self.element(a)).collect::<Option<Vec<_>>>()?,
            )),
            _ => None,
        }
    }
}

/// Assembles the interpretation-formulae among `units` (type declarations
/// and logic specifications are picked up from the same list).
pub fn assemble(units: &[AnnotatedFormula]) -> Result<(Interpretation, AssemblyReport), AssemblyError> {
    let units: Vec<AnnotatedFormula> = units.iter().map(upgrade_unit).collect();
    let mut report = AssemblyReport::default();
    let mut decls: Vec<TypeDecl> = Vec::new();
    let mut logic_spec: Option<LogicSpecification> = None;
    let mut items = Vec::new();
    let mut origin_units = Vec::new();
    let mut has_worlds_subrole = false;
    let mut herbrand_formulae = Vec::new();
    let mut any_interpretation = false;

    for u in &units {
        if let Some(d) = u.type_decl() {
            decls.push(d.clone());
            continue;
        }
        if u.role.base == BaseRole::Logic {
            if logic_spec.is_none() {
                logic_spec = u.logic_spec();
            }
            continue;
        }
        if u.role.base != BaseRole::Interpretation {
            continue;
        }
        any_interpretation = true;
        origin_units.push(u.name.clone());
        let Some(f) = u.formula() else { continue };
        if u.role.subrole == Some(Subrole::Herbrand) {
            herbrand_formulae.push(f.clone());
            report.herbrand_units.push(u.clone());
            for c in f.conjuncts() {
                report.classified.push(Classified {
                    unit: u.name.clone(),
                    language: u.language,
                    scope: None,
                    formula: c.clone(),
                    kind: ComponentKind::HerbrandFormula,
                    subject: Subject::None,
                });
            }
            continue;
        }
        if u.role.subrole == Some(Subrole::Worlds) {
            has_worlds_subrole = true;
        }
        for c in f.conjuncts() {
            items.push(Item {
                unit: u.name.clone(),
                language: u.language,
                scope: None,
                original: c.clone(),
                normal: first_order_formula(c),
            });
        }
    }
    if !any_interpretation {
        return Err(AssemblyError::NoInterpretation);
    }

    let mut sig = Signature {
        ctx: ClassifyContext::from_decls(&decls),
        ..Signature::default()
    };
    sig.world_decls = decls
        .iter()
        .filter(|d| d.ty.as_named() == Some(WORLD_TYPE))
        .map(|d| d.symbol.clone())
        .collect();

    // split $in_world wrappers into scoped items
    let mut top = Vec::new();
    let mut nested = Vec::new();
    let mut kripke = has_worlds_subrole || !sig.world_decls.is_empty();
    for item in items {
        match recognize(&item.normal, &sig.ctx) {
            Component::InWorld { scope, body } => {
                kripke = true;
                let original_body = wrapper_body(&item.original);
                for (o, n) in original_body.conjuncts().into_iter().zip(body.conjuncts()) {
                    nested.push(Item {
                        unit: item.unit.clone(),
                        language: item.language,
                        scope: Some(scope.clone()),
                        original: o.clone(),
                        normal: n.clone(),
                    });
                }
                top.push(item);
            }
            c => {
                if c.kind().is_world_part() {
                    kripke = true;
                }
                top.push(item);
            }
        }
    }

    let tarskian_items: Vec<&Item> = if kripke {
        top.iter()
            .filter(|i| {
                let k = recognize(&i.normal, &sig.ctx).kind();
                !k.is_world_part() && k != ComponentKind::InWorldWrapper
            })
            .chain(&nested)
            .collect()
    } else {
        top.iter().collect()
    };
    learn_signature(&mut sig, &tarskian_items, &decls);
    classify_all(&sig, &top, &nested, &mut report);

    if !kripke {
        let mut interp = build_tarskian(&sig, &tarskian_items, &decls)?;
        interp.herbrand = !herbrand_formulae.is_empty();
        interp.herbrand_formulae = herbrand_formulae;
        interp.origin_units = origin_units;
        return Ok((Interpretation::Tarskian(interp), report));
    }

    let mut k = KripkeInterpretation {
        logic_spec,
        type_decls: decls.clone(),
        origin_units,
        ..KripkeInterpretation::default()
    };
    let mut all_scope: Vec<&Item> = Vec::new();
    for item in &top {
        match recognize(&item.normal, &sig.ctx) {
            Component::WorldEnumeration { worlds } => {
                for w in worlds {
                    if !k.worlds.contains(&w) {
                        k.worlds.push(w);
                    }
                }
            }
            Component::WorldDistinctness { worlds } => {
                for (i, a) in worlds.iter().enumerate() {
                    for b in &worlds[i + 1..] {
                        k.distinct_worlds.insert(world_pair(a, b));
                    }
                }
            }
            Component::Accessibility { from, to, positive } => {
                if positive {
                    k.accessibility.insert((from, to));
                } else {
                    k.negated_accessibility.insert((from, to));
                }
            }
            Component::LocalWorld { world } => match &k.local_world {
                Some(w) if *w != world => {
                    return Err(AssemblyError::ConflictingEntry {
                        symbol: "$local_world".into(),
                        args: String::new(),
                        first: w.clone(),
                        second: world,
                    })
                }
                _ => k.local_world = Some(world),
            },
            Component::InWorld { .. } | Component::Unclassified => {}
            _ => all_scope.push(item),
        }
    }
    if k.worlds.is_empty() {
        k.worlds = sig.world_decls.clone();
    }
    let known = |w: &String| k.worlds.contains(w);
    let mut mentioned: Vec<&String> = Vec::new();
    mentioned.extend(k.accessibility.iter().chain(&k.negated_accessibility).flat_map(|(a, b)| [a, b]));
    mentioned.extend(k.local_world.iter());
    mentioned.extend(k.distinct_worlds.iter().flat_map(|(a, b)| [a, b]));
    for item in &nested {
        if let Some(WorldScope::One(w)) = &item.scope {
            mentioned.push(w);
        }
    }
    if let Some(w) = mentioned.into_iter().find(|w| !known(w)) {
        return Err(AssemblyError::MissingWorld { world: w.clone() });
    }
    k.constraints = top
        .iter()
        .filter(|i| recognize(&i.normal, &sig.ctx) == Component::Unclassified)
        .map(|i| i.normal.clone())
        .collect();

    let mut facts: BTreeMap<String, BTreeMap<String, BTreeSet<Element>>> = BTreeMap::new();
    for w in &k.worlds {
        let in_w: Vec<&Item> = all_scope
            .iter()
            .copied()
            .chain(nested.iter().filter(|i| match &i.scope {
                Some(WorldScope::One(v)) => v == w,
                Some(WorldScope::All) => true,
                None => false,
            }))
            .collect();
        let tarskian = build_tarskian(&sig, &in_w, &decls)?;
        let mut existing: BTreeMap<String, BTreeSet<Element>> = BTreeMap::new();
        for item in &in_w {
            if let Component::ElementExistence { ty, element } = recognize(&item.normal, &sig.ctx) {
                let e = sig.element(&element).ok_or_else(|| unknown(&element, item))?;
                existing.entry(ty).or_default().insert(e);
            }
        }
        facts.insert(w.clone(), existing);
        k.per_world.insert(
            w.clone(),
            WorldInterpretation {
                tarskian,
                existing: BTreeMap::new(),
            },
        );
    }
    // a domain type without any existence fact has all its elements in every world
    let stated: BTreeSet<String> = facts.values().flat_map(|m| m.keys().cloned()).collect();
    for (w, world) in k.per_world.iter_mut() {
        let mut existing = facts.remove(w).unwrap_or_default();
        for d in world.tarskian.domains.values() {
            if let Some(items) = d.elements.finite() {
                if !stated.contains(&d.domain_type) {
                    existing.insert(d.domain_type.clone(), items.iter().cloned().collect());
                } else {
                    existing.entry(d.domain_type.clone()).or_default();
                }
            }
        }
        world.existing = existing;
    }
    Ok((Interpretation::Kripke(k), report))
}

fn world_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

fn wrapper_body(f: &Formula) -> &Formula {
    match f {
        Formula::InWorld { body, .. } => body,
        Formula::Quantified { body, .. } => wrapper_body(body),
        other => other,
    }
}

fn unknown(t: &Term, item: &Item) -> AssemblyError {
    AssemblyError::UnknownElement {
        term: print_term(t, item.language),
        unit: item.unit.clone(),
    }
}

fn learn_signature(sig: &mut Signature, items: &[&Item], decls: &[TypeDecl]) {
    let mut enumerated: BTreeSet<String> = BTreeSet::new();
    let mut promotion_fns: BTreeSet<String> = BTreeSet::new();
    for item in items {
        match recognize(&item.normal, &sig.ctx) {
            Component::DomainEnumeration { ty, elements } => {
                for e in &elements {
                    if let Term::Func { symbol, args } = e {
                        if args.is_empty() {
                            sig.ctx.elements.insert(symbol.clone());
                        }
                    }
                }
                enumerated.insert(ty);
            }
            Component::ElementClosure {
                ty,
                constants,
                constructors,
            } => {
                sig.ctx.constructors.extend(constants);
                sig.ctx.constructors.extend(constructors);
                enumerated.insert(ty);
            }
            Component::Surjectivity {
                function,
                problem_type,
                domain_type,
            } => {
                sig.promotion_of
                    .insert(domain_type.clone(), (function.clone(), problem_type));
                promotion_fns.insert(function);
                enumerated.insert(domain_type);
            }
            Component::Injectivity { function, .. } => {
                promotion_fns.insert(function);
            }
            _ => {}
        }
    }
    // promotions stated only by injectivity, or not at all, are recognized
    // by their signature `domain type > problem type`
    for d in decls {
        let (args, result) = d.ty.signature();
        let (Some(arg), Some(pt)) = (args.first().and_then(|a| a.as_named()), result.as_named()) else {
            continue;
        };
        if args.len() != 1 || arg == pt || pt == "$o" || !enumerated.contains(arg) || enumerated.contains(pt) {
            continue;
        }
        if sig.promotion_of.contains_key(arg) {
            continue;
        }
        sig.promotion_of
            .insert(arg.to_string(), (d.symbol.clone(), pt.to_string()));
        promotion_fns.insert(d.symbol.clone());
    }
    sig.ctx.promotions = promotion_fns;
    for item in items {
        if let Component::DomainEnumeration { ty, elements } = recognize(&item.normal, &sig.ctx) {
            for e in &elements {
                if let Some(e) = sig.element(e) {
                    sig.element_type.insert(e, ty.clone());
                }
            }
        }
    }
}

fn subject_of(sig: &Signature, c: &Component) -> Subject {
    match c {
        Component::DomainEnumeration { ty, .. }
        | Component::ImpliedDistinctness { ty }
        | Component::ElementClosure { ty, .. }
        | Component::ElementExistence { ty, .. } => Subject::Domain(sig.problem_type(ty)),
        Component::Injectivity { domain_type, .. } => Subject::Domain(sig.problem_type(domain_type)),
        Component::Surjectivity { problem_type, .. } => Subject::Domain(problem_type.clone()),
        Component::Distinctness { elements, .. } => elements
            .iter()
            .find_map(|e| sig.element(e).and_then(|e| sig.element_type.get(&e)))
            .map(|ty| Subject::Domain(sig.problem_type(ty)))
            .unwrap_or(Subject::None),
        Component::FunctionMapping { symbol, .. }
        | Component::PredicateMapping { symbol, .. }
        | Component::GeneralClause { symbol, .. } => Subject::Symbol(symbol.clone()),
        Component::WorldEnumeration { .. }
        | Component::WorldDistinctness { .. }
        | Component::Accessibility { .. }
        | Component::LocalWorld { .. } => Subject::Worlds,
        Component::InWorld { .. } | Component::Unclassified => Subject::None,
    }
}

fn classify_all(sig: &Signature, top: &[Item], nested: &[Item], report: &mut AssemblyReport) {
    let record = |item: &Item| {
        let c = recognize(&item.normal, &sig.ctx);
        Classified {
            unit: item.unit.clone(),
            language: item.language,
            scope: item.scope.clone(),
            formula: item.original.clone(),
            kind: c.kind(),
            subject: subject_of(sig, &c),
        }
    };
    for item in top {
        let c = record(item);
        if c.kind == ComponentKind::Unclassified {
            report.warnings.push(unclassified_warning(&c));
            report.unclassified.push(c);
        } else {
            report.classified.push(c);
        }
    }
    for item in nested {
        let c = record(item);
        match c.kind {
            ComponentKind::Unclassified => report.warnings.push(unclassified_warning(&c)),
            ComponentKind::InWorldWrapper => report.warnings.push(
                Diagnostic::warning(
                    DiagnosticKind::Unsupported,
                    format!(
                        "{} is nested inside another $in_world and is ignored",
                        print_formula(&c.formula, c.language)
                    ),
                )
                .in_unit(c.unit.clone()),
            ),
            _ => {}
        }
        report.nested.push(c);
    }
}

fn unclassified_warning(c: &Classified) -> Diagnostic {
    Diagnostic::warning(
        DiagnosticKind::Unclassified,
        format!(
            "{} matches no component pattern; kept as a constraint",
            print_formula(&c.formula, c.language)
        ),
    )
    .in_unit(c.unit.clone())
}

fn build_tarskian(sig: &Signature, items: &[&Item], decls: &[TypeDecl]) -> Result<TarskianInterpretation, AssemblyError> {
    let mut t = TarskianInterpretation {
        type_decls: decls.to_vec(),
        ..TarskianInterpretation::default()
    };
    let components: Vec<(&Item, Component)> = items
        .iter()
        .map(|i| (*i, recognize(&i.normal, &sig.ctx)))
        .collect();

    // domains
    for (item, c) in &components {
        match c {
            Component::DomainEnumeration { ty, elements } => {
                let mut list: Vec<Element> = Vec::new();
                for e in elements {
                    let e = sig.element(e).ok_or_else(|| unknown(e, item))?;
                    if !list.contains(&e) {
                        list.push(e);
                    }
                }
                let distinctness = if !list.is_empty() && list.iter().all(|e| matches!(e, Element::Distinct(_))) {
                    Distinctness::DistinctObjects
                } else {
                    Distinctness::Unstated
                };
                let d = domain_entry(&mut t, sig, ty);
                if let DomainElements::Finite(existing) = &mut d.elements {
                    for e in list {
                        if !existing.contains(&e) {
                            existing.push(e);
                        }
                    }
                    if d.distinctness == Distinctness::Unstated {
                        d.distinctness = distinctness;
                    }
                }
            }
            Component::ElementClosure { ty, .. } => {
                let d = domain_entry(&mut t, sig, ty);
                d.elements = DomainElements::Infinite(InfiniteDescriptor::TermGenerated(item.normal.clone()));
            }
            Component::Surjectivity { domain_type, .. } if is_builtin_type(domain_type) => {
                let d = domain_entry(&mut t, sig, domain_type);
                d.elements = DomainElements::Infinite(InfiniteDescriptor::Builtin(domain_type.clone()));
                d.distinctness = Distinctness::ByBuiltinType;
            }
            _ => {}
        }
    }
    for (item, c) in &components {
        match c {
            Component::Surjectivity { function, domain_type, .. } => {
                let d = domain_entry(&mut t, sig, domain_type);
                promotion_entry(d, function).surjectivity = Some(item.normal.clone());
            }
            Component::Injectivity { function, domain_type } => {
                let d = domain_entry(&mut t, sig, domain_type);
                promotion_entry(d, function).injectivity = Some(item.normal.clone());
            }
            Component::ImpliedDistinctness { ty } => {
                domain_entry(&mut t, sig, ty).distinctness = Distinctness::ImpliedByFormula(item.normal.clone());
            }
            Component::Distinctness { elements, predicate } => {
                let list = elements
                    .iter()
                    .map(|e| sig.element(e).ok_or_else(|| unknown(e, item)))
                    .collect::<Result<Vec<_>, _>>()?;
                let Some(ty) = list.iter().find_map(|e| sig.element_type.get(e)) else {
                    return Err(unknown(&elements[0], item));
                };
                let d = domain_entry(&mut t, sig, ty);
                for (i, a) in list.iter().enumerate() {
                    for b in &list[i + 1..] {
                        d.distinct_pairs.insert(ordered_pair(a, b));
                    }
                }
                d.distinctness = match (&d.distinctness, predicate) {
                    (Distinctness::Unstated | Distinctness::PairwiseInequalities, true) => {
                        Distinctness::DistinctPredicate
                    }
                    (Distinctness::Unstated, false) => Distinctness::PairwiseInequalities,
                    (other, _) => other.clone(),
                };
            }
            _ => {}
        }
    }
    // promotions known from the signature but without formulae here
    for (dt, (function, _)) in &sig.promotion_of {
        if let Some(d) = t.domains.values_mut().find(|d| &d.domain_type == dt) {
            promotion_entry(d, function);
        }
    }

    // mappings
    for (item, c) in &components {
        match c {
            Component::FunctionMapping { symbol, args, value } => {
                let (key, value) = match value {
                    Term::Lambda { .. } if args.is_empty() => (Vec::new(), MappedValue::Lambda(value.clone())),
                    _ => {
                        let key = args
                            .iter()
                            .map(|a| sig.element(a).ok_or_else(|| unknown(a, item)))
                            .collect::<Result<Vec<_>, _>>()?;
                        let v = sig.element(value).ok_or_else(|| unknown(value, item))?;
                        (key, MappedValue::Element(v))
                    }
                };
                let lambda = matches!(value, MappedValue::Lambda(_));
                let m = mapping_entry(&mut t, sig, symbol, SymbolKind::Function, args.len());
                if lambda {
                    m.arity = 0;
                }
                insert_entry(m, key, value)?;
            }
            Component::PredicateMapping { symbol, args, value } => {
                let key = args
                    .iter()
                    .map(|a| sig.element(a).ok_or_else(|| unknown(a, item)))
                    .collect::<Result<Vec<_>, _>>()?;
                let m = mapping_entry(&mut t, sig, symbol, SymbolKind::Predicate, args.len());
                insert_entry(m, key, MappedValue::Truth(*value))?;
            }
            Component::GeneralClause { symbol, predicate } => {
                let kind = if *predicate {
                    SymbolKind::Predicate
                } else {
                    SymbolKind::Function
                };
                let arity = clause_arity(&item.normal, symbol);
                mapping_entry(&mut t, sig, symbol, kind, arity)
                    .general_clauses
                    .push(item.normal.clone());
            }
            Component::Unclassified => t.constraints.push(item.normal.clone()),
            _ => {}
        }
    }
    Ok(t)
}

pub(crate) fn is_builtin_type(ty: &str) -> bool {
    matches!(ty, "$int" | "$rat" | "$real")
}

fn domain_entry<'a>(t: &'a mut TarskianInterpretation, sig: &Signature, domain_type: &str) -> &'a mut DomainSpec {
    let pt = sig.problem_type(domain_type);
    t.domains.entry(pt.clone()).or_insert_with(|| DomainSpec {
        problem_type: pt,
        domain_type: domain_type.to_string(),
        elements: DomainElements::Finite(Vec::new()),
        distinctness: Distinctness::Unstated,
        distinct_pairs: BTreeSet::new(),
        promotion: None,
    })
}

fn promotion_entry<'a>(d: &'a mut DomainSpec, function: &str) -> &'a mut PromotionBijection {
    d.promotion.get_or_insert_with(|| PromotionBijection {
        function: function.to_string(),
        surjectivity: None,
        injectivity: None,
    })
}

fn mapping_entry<'a>(
    t: &'a mut TarskianInterpretation,
    sig: &Signature,
    symbol: &str,
    kind: SymbolKind,
    arity: usize,
) -> &'a mut SymbolMapping {
    let declared = sig.ctx.types.get(symbol).map(TypeExpr::signature);
    let (kind, arity, result) = match declared {
        Some((args, result)) => {
            let result = result.as_named().unwrap_or("$i").to_string();
            let kind = if result == "$o" {
                SymbolKind::Predicate
            } else {
                SymbolKind::Function
            };
            (kind, args.len(), result)
        }
        None => (
            kind,
            arity,
            if kind == SymbolKind::Predicate { "$o" } else { "$i" }.to_string(),
        ),
    };
    let result_type = match t.domains.get(&result) {
        Some(d) => d.domain_type.clone(),
        None => result,
    };
    t.mappings.entry(symbol.to_string()).or_insert_with(|| SymbolMapping {
        symbol: symbol.to_string(),
        kind,
        arity,
        result_type,
        entries: IndexMap::new(),
        general_clauses: Vec::new(),
    })
}

fn insert_entry(m: &mut SymbolMapping, key: Vec<Element>, value: MappedValue) -> Result<(), AssemblyError> {
    match m.entries.get(&key) {
        Some(existing) if *existing != value => Err(AssemblyError::ConflictingEntry {
            symbol: m.symbol.clone(),
            args: format_tuple(&key),
            first: existing.to_string(),
            second: value.to_string(),
        }),
        Some(_) => Ok(()),
        None => {
            m.entries.insert(key, value);
            Ok(())
        }
    }
}

/// Number of arguments `symbol` is applied to in a clause.
fn clause_arity(f: &Formula, symbol: &str) -> usize {
    let mut arity = 0;
    f.visit(&mut |g| match g {
        Formula::Atom { predicate, args } if predicate == symbol => arity = args.len(),
        Formula::Equality { lhs, rhs, .. } => {
            for side in [lhs, rhs] {
                if let Term::Func { symbol: s, args } = side {
                    if s == symbol {
                        arity = args.len();
                    }
                }
            }
        }
        _ => {}
    });
    arity
}
