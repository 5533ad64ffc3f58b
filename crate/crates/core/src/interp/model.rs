//! Structured Tarskian and Kripke interpretations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;

use crate::syntax::{Formula, LogicSpecification, Number, Term, TypeDecl};

/// A domain element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// A constant such as `d_garfield` or `zero`.
    Named(String),
    /// A `"double quoted"` object, payload without quotes.
    Distinct(String),
    Int(BigInt),
    /// A term-generated element such as `s(s(zero))`.
    Compound(String, Vec<Element>),
}

impl Element {
    pub fn named(name: &str) -> Element {
        Element::Named(name.to_string())
    }

    pub fn distinct(payload: &str) -> Element {
        Element::Distinct(payload.to_string())
    }

    pub fn to_term(&self) -> Term {
        match self {
            Element::Named(n) => Term::constant(n),
            Element::Distinct(s) => Term::Distinct(s.clone()),
            Element::Int(i) => Term::Number(Number::new(&i.to_string())),
            Element::Compound(f, args) => Term::func(f, args.iter().map(Element::to_term).collect()),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Named(n) => f.write_str(n),
            Element::Distinct(s) => write!(f, "\"{}\"", s),
            Element::Int(i) => write!(f, "{}", i),
            Element::Compound(name, args) => {
                write!(f, "{}(", name)?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", a)?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Formats an argument tuple as `a,b,c`.
pub fn format_tuple(args: &[Element]) -> String {
    args.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfiniteDescriptor {
    /// A defined type such as `$int`.
    Builtin(String),
    /// Elements generated by constructors; carries the closure formula.
    TermGenerated(Formula),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainElements {
    Finite(Vec<Element>),
    Infinite(InfiniteDescriptor),
}

impl DomainElements {
    pub fn finite(&self) -> Option<&[Element]> {
        match self {
            DomainElements::Finite(e) => Some(e),
            DomainElements::Infinite(_) => None,
        }
    }
}

/// How the distinctness of a domain's elements is established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinctness {
    Unstated,
    DistinctObjects,
    DistinctPredicate,
    PairwiseInequalities,
    ByBuiltinType,
    ImpliedByFormula(Formula),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromotionBijection {
    pub function: String,
    pub surjectivity: Option<Formula>,
    pub injectivity: Option<Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    pub problem_type: String,
    /// Equal to `problem_type` when the problem's type is reused.
    pub domain_type: String,
    pub elements: DomainElements,
    pub distinctness: Distinctness,
    /// Unordered element pairs stated to be unequal (smaller element first).
    pub distinct_pairs: BTreeSet<(Element, Element)>,
    pub promotion: Option<PromotionBijection>,
}

impl DomainSpec {
    pub fn is_finite(&self) -> bool {
        matches!(self.elements, DomainElements::Finite(_))
    }

    pub fn contains(&self, e: &Element) -> bool {
        match &self.elements {
            DomainElements::Finite(items) => items.contains(e),
            DomainElements::Infinite(InfiniteDescriptor::Builtin(_)) => matches!(e, Element::Int(_)),
            DomainElements::Infinite(InfiniteDescriptor::TermGenerated(_)) => {
                matches!(e, Element::Named(_) | Element::Compound(..))
            }
        }
    }

    /// True when every pair of enumerated elements is known to be unequal.
    pub fn distinctness_covers_all(&self) -> bool {
        match (&self.distinctness, &self.elements) {
            (Distinctness::DistinctObjects | Distinctness::ByBuiltinType, _) => true,
            (Distinctness::ImpliedByFormula(_), _) => true,
            (_, DomainElements::Infinite(_)) => false,
            (_, DomainElements::Finite(items)) => {
                for (i, a) in items.iter().enumerate() {
                    for b in &items[i + 1..] {
                        if !self.distinct_pairs.contains(&ordered_pair(a, b)) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

pub(crate) fn ordered_pair(a: &Element, b: &Element) -> (Element, Element) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Function,
    Predicate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MappedValue {
    Element(Element),
    Truth(bool),
    /// A lambda abstraction (higher-order mapping); only for arity 0.
    Lambda(Term),
}

impl fmt::Display for MappedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappedValue::Element(e) => write!(f, "{}", e),
            MappedValue::Truth(true) => f.write_str("$true"),
            MappedValue::Truth(false) => f.write_str("$false"),
            MappedValue::Lambda(t) => write!(f, "{}", crate::syntax::print_term(t, crate::syntax::Language::Thf)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolMapping {
    pub symbol: String,
    pub kind: SymbolKind,
    pub arity: usize,
    /// Domain type of the result, or `$o` for predicates.
    pub result_type: String,
    pub entries: IndexMap<Vec<Element>, MappedValue>,
    /// Quantified mapping formulae, consulted during evaluation.
    pub general_clauses: Vec<Formula>,
}

#[derive(Debug, Clone, Default)]
pub struct TarskianInterpretation {
    /// Keyed by problem type.
    pub domains: IndexMap<String, DomainSpec>,
    pub mappings: IndexMap<String, SymbolMapping>,
    pub herbrand: bool,
    /// Formulae of `interpretation-herbrand` units, kept verbatim.
    pub herbrand_formulae: Vec<Formula>,
    pub type_decls: Vec<TypeDecl>,
    /// Conjuncts that match no component pattern.
    pub constraints: Vec<Formula>,
    pub origin_units: Vec<String>,
}

impl PartialEq for TarskianInterpretation {
    fn eq(&self, other: &Self) -> bool {
        let decls = |t: &Self| t.type_decls.iter().cloned().collect::<std::collections::HashSet<_>>();
        self.domains == other.domains
            && self.mappings == other.mappings
            && self.herbrand == other.herbrand
            && self.herbrand_formulae == other.herbrand_formulae
            && decls(self) == decls(other)
            && self.constraints == other.constraints
    }
}

impl Eq for TarskianInterpretation {}

impl TarskianInterpretation {
    /// The domain a quantified variable of type `ty` ranges over.
    pub fn domain_of_type(&self, ty: &str) -> Option<&DomainSpec> {
        self.domains
            .get(ty)
            .or_else(|| self.domains.values().find(|d| d.domain_type == ty))
    }

    pub fn is_finite(&self) -> bool {
        self.domains.values().all(DomainSpec::is_finite)
    }

    pub fn promotion(&self, function: &str) -> Option<&DomainSpec> {
        self.domains.values().find(|d| {
            d.promotion
                .as_ref()
                .is_some_and(|p| p.function == function)
        })
    }

    /// Renders an element as a term of the problem type, applying the
    /// promotion function when there is one, e.g. `int2person(6)`.
    pub fn render(&self, problem_type: &str, e: &Element) -> String {
        match self.domains.get(problem_type).and_then(|d| d.promotion.as_ref()) {
            Some(p) => format!("{}({})", p.function, e),
            None => e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WorldInterpretation {
    pub tarskian: TarskianInterpretation,
    /// Elements that exist in the world, by domain type.
    pub existing: BTreeMap<String, BTreeSet<Element>>,
}

impl WorldInterpretation {
    pub fn exists(&self, domain_type: &str, e: &Element) -> bool {
        self.existing
            .get(domain_type)
            .is_some_and(|s| s.contains(e))
    }
}

#[derive(Debug, Clone, Default)]
pub struct KripkeInterpretation {
    pub worlds: Vec<String>,
    /// Unordered world pairs stated to be distinct.
    pub distinct_worlds: BTreeSet<(String, String)>,
    pub accessibility: BTreeSet<(String, String)>,
    pub negated_accessibility: BTreeSet<(String, String)>,
    pub local_world: Option<String>,
    pub per_world: IndexMap<String, WorldInterpretation>,
    pub logic_spec: Option<LogicSpecification>,
    pub type_decls: Vec<TypeDecl>,
    pub constraints: Vec<Formula>,
    pub origin_units: Vec<String>,
}

impl PartialEq for KripkeInterpretation {
    fn eq(&self, other: &Self) -> bool {
        let decls = |k: &Self| k.type_decls.iter().cloned().collect::<std::collections::HashSet<_>>();
        self.worlds == other.worlds
            && self.distinct_worlds == other.distinct_worlds
            && self.accessibility == other.accessibility
            && self.negated_accessibility == other.negated_accessibility
            && self.local_world == other.local_world
            && self.per_world == other.per_world
            && self.logic_spec == other.logic_spec
            && decls(self) == decls(other)
            && self.constraints == other.constraints
    }
}

impl Eq for KripkeInterpretation {}

impl KripkeInterpretation {
    pub fn accessible_from<'a>(&'a self, w: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.worlds
            .iter()
            .filter(move |v| self.accessibility.contains(&(w.to_string(), v.to_string())))
            .map(String::as_str)
    }

    pub fn worlds_are_distinct(&self) -> bool {
        for (i, a) in self.worlds.iter().enumerate() {
            for b in &self.worlds[i + 1..] {
                let pair = if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                };
                if !self.distinct_worlds.contains(&pair) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interpretation {
    Tarskian(TarskianInterpretation),
    Kripke(KripkeInterpretation),
}

impl Interpretation {
    pub fn as_tarskian(&self) -> Option<&TarskianInterpretation> {
        match self {
            Interpretation::Tarskian(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_kripke(&self) -> Option<&KripkeInterpretation> {
        match self {
            Interpretation::Kripke(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Interpretation::Tarskian(t) => t.is_finite(),
            Interpretation::Kripke(k) => k.per_world.values().all(|w| w.tarskian.is_finite()),
        }
    }
}
