//! Abstract syntax for annotated formulae.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::role::Role;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Language {
    Cnf,
    Fof,
    Tff,
    Thf,
}

impl Language {
    pub fn keyword(self) -> &'static str {
        match self {
            Language::Cnf => "cnf",
            Language::Fof => "fof",
            Language::Tff => "tff",
            Language::Thf => "thf",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Language> {
        match word {
            "cnf" => Some(Language::Cnf),
            "fof" => Some(Language::Fof),
            "tff" => Some(Language::Tff),
            "thf" => Some(Language::Thf),
            _ => None,
        }
    }

    pub fn is_typed(self) -> bool {
        matches!(self, Language::Tff | Language::Thf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Or,
    And,
    Implies,
    ImpliedBy,
    Iff,
    Xor,
    Nor,
    Nand,
}

impl Connective {
    pub fn is_associative(self) -> bool {
        matches!(self, Connective::Or | Connective::And)
    }

    pub fn glyph(self) -> &'static str {
        match self {
            Connective::Or => "|",
            Connective::And => "&",
            Connective::Implies => "=>",
            Connective::ImpliedBy => "<=",
            Connective::Iff => "<=>",
            Connective::Xor => "<~>",
            Connective::Nor => "~|",
            Connective::Nand => "~&",
        }
    }
}

/// Short-form modal connectives of the non-classical extension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModalOp {
    Box,
    Diamond,
    Necessary,
    Possible,
    Other(String),
}

impl ModalOp {
    pub fn from_name(name: &str) -> ModalOp {
        match name {
            "box" => ModalOp::Box,
            "dia" => ModalOp::Diamond,
            "necessary" => ModalOp::Necessary,
            "possible" => ModalOp::Possible,
            other => ModalOp::Other(other.to_string()),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            ModalOp::Box => "box",
            ModalOp::Diamond => "dia",
            ModalOp::Necessary => "necessary",
            ModalOp::Possible => "possible",
            ModalOp::Other(s) => s,
        }
    }

    /// `Some(true)` for box-like, `Some(false)` for diamond-like operators.
    pub fn is_universal(&self) -> Option<bool> {
        match self {
            ModalOp::Box | ModalOp::Necessary => Some(true),
            ModalOp::Diamond | ModalOp::Possible => Some(false),
            ModalOp::Other(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeExpr {
    /// `$i`, `$o`, `$int`, `$tType`, `$world` or a user type.
    Named(String),
    /// Only valid as the left operand of an arrow.
    Product(Vec<TypeExpr>),
    Arrow(Box<TypeExpr>, Box<TypeExpr>),
}

impl TypeExpr {
    pub fn named(name: &str) -> TypeExpr {
        TypeExpr::Named(name.to_string())
    }

    pub fn as_named(&self) -> Option<&str> {
        match self {
            TypeExpr::Named(n) => Some(n),
            _ => None,
        }
    }

    /// Splits a first-order signature into argument types and result type.
    pub fn signature(&self) -> (Vec<&TypeExpr>, &TypeExpr) {
        match self {
            TypeExpr::Arrow(args, result) => match args.as_ref() {
                TypeExpr::Product(items) => (items.iter().collect(), result),
                single => (vec![single], result),
            },
            other => (Vec::new(), other),
        }
    }

    pub fn is_functional(&self) -> bool {
        matches!(self, TypeExpr::Arrow(..))
    }

    pub fn collect_named<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            TypeExpr::Named(n) => {
                out.insert(n);
            }
            TypeExpr::Product(items) => items.iter().for_each(|t| t.collect_named(out)),
            TypeExpr::Arrow(a, b) => {
                a.collect_named(out);
                b.collect_named(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypedVar {
    pub name: String,
    pub ty: Option<TypeExpr>,
}

impl TypedVar {
    pub fn new(name: &str, ty: Option<TypeExpr>) -> TypedVar {
        TypedVar {
            name: name.to_string(),
            ty,
        }
    }

    /// The variable's type name; untyped variables range over `$i`.
    pub fn type_name(&self) -> Option<&str> {
        match &self.ty {
            None => Some("$i"),
            Some(t) => t.as_named(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Number {
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberKind {
    Integer,
    Rational,
    Real,
}

impl Number {
    pub fn new(text: &str) -> Number {
        Number {
            text: text.to_string(),
        }
    }

    pub fn kind(&self) -> NumberKind {
        if self.text.contains('/') {
            NumberKind::Rational
        } else if self.text.contains(['.', 'e', 'E']) {
            NumberKind::Real
        } else {
            NumberKind::Integer
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.kind() {
            NumberKind::Integer => self.text.trim_start_matches('+').parse().ok(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// A plain function symbol applied to arguments; constants have none.
    Func { symbol: String, args: Vec<Term> },
    /// Payload of a `"double quoted"` object, quotes stripped, escapes kept.
    Distinct(String),
    Number(Number),
    /// A `$`- or `$$`-prefixed function such as `$sum` or `$local_world`.
    Defined { symbol: String, args: Vec<Term> },
    /// Higher-order application `f @ a`.
    Apply(Box<Term>, Box<Term>),
    Lambda { vars: Vec<TypedVar>, body: Box<Term> },
    /// A formula used in term position (higher-order).
    Formula(Box<Formula>),
}

impl Term {
    pub fn constant(symbol: &str) -> Term {
        Term::Func {
            symbol: symbol.to_string(),
            args: Vec::new(),
        }
    }

    pub fn func(symbol: &str, args: Vec<Term>) -> Term {
        Term::Func {
            symbol: symbol.to_string(),
            args,
        }
    }

    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    /// Decomposes a higher-order application spine `((h @ a1) @ a2)` or a
    /// first-order application `h(a1, a2)` into head and arguments.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        match self {
            Term::Apply(f, a) => {
                let (head, mut args) = f.spine();
                args.push(a);
                (head, args)
            }
            other => (other, Vec::new()),
        }
    }

    pub fn is_ground(&self) -> bool {
        let mut free = BTreeSet::new();
        self.free_vars_into(&mut Vec::new(), &mut free);
        free.is_empty()
    }

    pub(crate) fn free_vars_into(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            Term::Func { args, .. } | Term::Defined { args, .. } => {
                args.iter().for_each(|a| a.free_vars_into(bound, out))
            }
            Term::Distinct(_) | Term::Number(_) => {}
            Term::Apply(f, a) => {
                f.free_vars_into(bound, out);
                a.free_vars_into(bound, out);
            }
            Term::Lambda { vars, body } => {
                let n = bound.len();
                bound.extend(vars.iter().map(|v| v.name.clone()));
                body.free_vars_into(bound, out);
                bound.truncate(n);
            }
            Term::Formula(f) => f.free_vars_into(bound, out),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `$true` / `$false`.
    Truth(bool),
    Quantified {
        quantifier: Quantifier,
        vars: Vec<TypedVar>,
        body: Box<Formula>,
    },
    Not(Box<Formula>),
    Binary {
        op: Connective,
        lhs: Box<Formula>,
        rhs: Box<Formula>,
    },
    /// `lhs = rhs`, or `lhs != rhs` when `negated`.
    Equality { lhs: Term, rhs: Term, negated: bool },
    Atom { predicate: String, args: Vec<Term> },
    /// Defined predicate such as `$distinct`, `$accessible_world` or `$less`.
    Defined { predicate: String, args: Vec<Term> },
    /// `$in_world(w, body)`.
    InWorld { world: Term, body: Box<Formula> },
    /// `{$box} @ (body)` and friends.
    Modal { op: ModalOp, body: Box<Formula> },
    /// Higher-order application in formula position, `func @ arg`.
    HoApply { func: Term, arg: Term },
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn binary(op: Connective, lhs: Formula, rhs: Formula) -> Formula {
        Formula::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    pub fn eq(lhs: Term, rhs: Term) -> Formula {
        Formula::Equality {
            lhs,
            rhs,
            negated: false,
        }
    }

    pub fn atom(predicate: &str, args: Vec<Term>) -> Formula {
        Formula::Atom {
            predicate: predicate.to_string(),
            args,
        }
    }

    pub fn forall(vars: Vec<TypedVar>, body: Formula) -> Formula {
        Formula::Quantified {
            quantifier: Quantifier::Forall,
            vars,
            body: Box::new(body),
        }
    }

    pub fn exists(vars: Vec<TypedVar>, body: Formula) -> Formula {
        Formula::Quantified {
            quantifier: Quantifier::Exists,
            vars,
            body: Box::new(body),
        }
    }

    /// Conjunction of `items`, left-nested; `$true` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Formula {
        let mut iter = items.into_iter();
        match iter.next() {
            None => Formula::Truth(true),
            Some(first) => iter.fold(first, |acc, f| Formula::binary(Connective::And, acc, f)),
        }
    }

    /// Flattens nested `&` into the list of top-level conjuncts.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_binary(Connective::And, &mut out);
        out
    }

    /// Flattens nested `|` into the list of disjuncts.
    pub fn disjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_binary(Connective::Or, &mut out);
        out
    }

    fn collect_binary<'a>(&'a self, wanted: Connective, out: &mut Vec<&'a Formula>) {
        match self {
            Formula::Binary { op, lhs, rhs } if *op == wanted => {
                lhs.collect_binary(wanted, out);
                rhs.collect_binary(wanted, out);
            }
            other => out.push(other),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.free_vars_into(&mut Vec::new(), &mut out);
        out
    }

    pub(crate) fn free_vars_into(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Truth(_) => {}
            Formula::Quantified { vars, body, .. } => {
                let n = bound.len();
                bound.extend(vars.iter().map(|v| v.name.clone()));
                body.free_vars_into(bound, out);
                bound.truncate(n);
            }
            Formula::Not(f) | Formula::Modal { body: f, .. } => f.free_vars_into(bound, out),
            Formula::Binary { lhs, rhs, .. } => {
                lhs.free_vars_into(bound, out);
                rhs.free_vars_into(bound, out);
            }
            Formula::Equality { lhs, rhs, .. } => {
                lhs.free_vars_into(bound, out);
                rhs.free_vars_into(bound, out);
            }
            Formula::Atom { args, .. } | Formula::Defined { args, .. } => {
                args.iter().for_each(|a| a.free_vars_into(bound, out))
            }
            Formula::InWorld { world, body } => {
                world.free_vars_into(bound, out);
                body.free_vars_into(bound, out);
            }
            Formula::HoApply { func, arg } => {
                func.free_vars_into(bound, out);
                arg.free_vars_into(bound, out);
            }
        }
    }

    /// True if the formula uses any modal connective.
    pub fn has_modal(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| {
            if matches!(f, Formula::Modal { .. }) {
                found = true;
            }
        });
        found
    }

    /// Calls `visit` on this formula and every subformula (not descending
    /// into terms, except formulae embedded as terms).
    pub fn visit(&self, visit: &mut dyn FnMut(&Formula)) {
        visit(self);
        match self {
            Formula::Quantified { body, .. }
            | Formula::Not(body)
            | Formula::Modal { body, .. }
            | Formula::InWorld { body, .. } => body.visit(visit),
            Formula::Binary { lhs, rhs, .. } => {
                lhs.visit(visit);
                rhs.visit(visit);
            }
            Formula::Equality { lhs, rhs, .. } => {
                visit_term_formulas(lhs, visit);
                visit_term_formulas(rhs, visit);
            }
            Formula::Atom { args, .. } | Formula::Defined { args, .. } => {
                args.iter().for_each(|a| visit_term_formulas(a, visit))
            }
            Formula::HoApply { func, arg } => {
                visit_term_formulas(func, visit);
                visit_term_formulas(arg, visit);
            }
            Formula::Truth(_) => {}
        }
    }
}

fn visit_term_formulas(t: &Term, visit: &mut dyn FnMut(&Formula)) {
    match t {
        Term::Formula(f) => f.visit(visit),
        Term::Func { args, .. } | Term::Defined { args, .. } => {
            args.iter().for_each(|a| visit_term_formulas(a, visit))
        }
        Term::Apply(f, a) => {
            visit_term_formulas(f, visit);
            visit_term_formulas(a, visit);
        }
        Term::Lambda { body, .. } => visit_term_formulas(body, visit),
        Term::Var(_) | Term::Distinct(_) | Term::Number(_) => {}
    }
}

/// `symbol: type` in a unit with role `type`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeDecl {
    pub symbol: String,
    pub ty: TypeExpr,
}

impl TypeDecl {
    /// Declares a new type (`name: $tType`).
    pub fn is_type_declaration(&self) -> bool {
        self.ty == TypeExpr::Named("$tType".to_string())
    }
}

/// Body of a `logic` unit: words, `==` assignments and `[...]` lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LogicTerm {
    Word(String),
    Assign(Box<LogicTerm>, Box<LogicTerm>),
    List(Vec<LogicTerm>),
}

pub const FOML_MODEL: &str = "$$fomlModel";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogicSpecification {
    pub name: String,
    pub body: LogicTerm,
}

impl LogicSpecification {
    pub fn is_foml_model(&self) -> bool {
        self.body == LogicTerm::Word(FOML_MODEL.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnitBody {
    Formula(Formula),
    Type(TypeDecl),
    Logic(LogicTerm),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnotatedFormula {
    pub language: Language,
    /// Name exactly as written (lower word, quoted atom or integer).
    pub name: String,
    pub role: Role,
    pub body: UnitBody,
    pub source: Option<String>,
    pub useful_info: Option<String>,
}

impl AnnotatedFormula {
    pub fn new(language: Language, name: &str, role: Role, body: UnitBody) -> Self {
        AnnotatedFormula {
            language,
            name: name.to_string(),
            role,
            body,
            source: None,
            useful_info: None,
        }
    }

    pub fn formula(&self) -> Option<&Formula> {
        match &self.body {
            UnitBody::Formula(f) => Some(f),
            _ => None,
        }
    }

    pub fn type_decl(&self) -> Option<&TypeDecl> {
        match &self.body {
            UnitBody::Type(t) => Some(t),
            _ => None,
        }
    }

    pub fn logic_spec(&self) -> Option<LogicSpecification> {
        match &self.body {
            UnitBody::Logic(body) => Some(LogicSpecification {
                name: self.name.clone(),
                body: body.clone(),
            }),
            _ => None,
        }
    }
}
