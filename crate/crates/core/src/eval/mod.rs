//! Direct evaluation of formulae against Tarskian and Kripke interpretations
//! with a three-valued outcome.

mod engine;
mod problem;

use std::collections::BTreeMap;
use std::fmt;

use crate::interp::{format_tuple, Element};
use crate::syntax::{Term, TypedVar};

pub use engine::{eval_at_world, eval_formula, eval_in, eval_term};
pub use problem::{eval_problem, Obligation, ProblemEvaluation, UnitVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruthValue {
    True,
    False,
    Unknown,
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue::True => "true",
            TruthValue::False => "false",
            TruthValue::Unknown => "unknown",
        })
    }
}

/// Why a value could not be determined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    MissingEntry { symbol: String, args: Vec<Element> },
    InfiniteQuantifier { ty: String },
    NoDomain { ty: String },
    UnboundVariable(String),
    Unsupported(String),
    /// A ground term denotes an element that does not exist in the world.
    NonExistingDesignation { element: Element, world: String },
    MissingLocalWorld,
    RecursionLimit,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::MissingEntry { symbol, args } if args.is_empty() => write!(f, "no value for {}", symbol),
            Reason::MissingEntry { symbol, args } => write!(f, "no value for {}({})", symbol, format_tuple(args)),
            Reason::InfiniteQuantifier { ty } => write!(f, "quantification over the infinite domain of {}", ty),
            Reason::NoDomain { ty } => write!(f, "no domain for type {}", ty),
            Reason::UnboundVariable(v) => write!(f, "unbound variable {}", v),
            Reason::Unsupported(what) => write!(f, "unsupported: {}", what),
            Reason::NonExistingDesignation { element, world } => {
                write!(f, "{} does not exist in world {}", element, world)
            }
            Reason::MissingLocalWorld => f.write_str("no local world is declared"),
            Reason::RecursionLimit => f.write_str("general clauses nest too deeply"),
        }
    }
}

impl Reason {
    /// Short identifier, e.g. `InfiniteQuantifier`.
    pub fn kind(&self) -> &'static str {
        match self {
            Reason::MissingEntry { .. } => "MissingEntry",
            Reason::InfiniteQuantifier { .. } => "InfiniteQuantifier",
            Reason::NoDomain { .. } => "NoDomain",
            Reason::UnboundVariable(_) => "UnboundVariable",
            Reason::Unsupported(_) => "Unsupported",
            Reason::NonExistingDesignation { .. } => "NonExistingDesignation",
            Reason::MissingLocalWorld => "MissingLocalWorld",
            Reason::RecursionLimit => "RecursionLimit",
        }
    }
}

/// A truth value; unknown verdicts always carry a reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: TruthValue,
    pub reason: Option<Reason>,
}

impl Verdict {
    pub fn truth(b: bool) -> Verdict {
        Verdict {
            value: if b { TruthValue::True } else { TruthValue::False },
            reason: None,
        }
    }

    pub fn unknown(reason: Reason) -> Verdict {
        Verdict {
            value: TruthValue::Unknown,
            reason: Some(reason),
        }
    }

    pub fn from_result(r: Result<bool, Reason>) -> Verdict {
        match r {
            Ok(b) => Verdict::truth(b),
            Err(reason) => Verdict::unknown(reason),
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self.value {
            TruthValue::True => Some(true),
            TruthValue::False => Some(false),
            TruthValue::Unknown => None,
        }
    }

    pub fn is_true(&self) -> bool {
        self.value == TruthValue::True
    }

    pub fn is_false(&self) -> bool {
        self.value == TruthValue::False
    }

    pub fn is_unknown(&self) -> bool {
        self.value == TruthValue::Unknown
    }

    pub fn negate(self) -> Verdict {
        match self.value {
            TruthValue::True => Verdict::truth(false),
            TruthValue::False => Verdict::truth(true),
            TruthValue::Unknown => self,
        }
    }

    /// Kleene conjunction; a false operand decides.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self.value, other.value) {
            (TruthValue::False, _) => self,
            (_, TruthValue::False) => other,
            (TruthValue::Unknown, _) => self,
            (_, TruthValue::Unknown) => other,
            _ => Verdict::truth(true),
        }
    }

    /// Kleene disjunction; a true operand decides.
    pub fn or(self, other: Verdict) -> Verdict {
        match (self.value, other.value) {
            (TruthValue::True, _) => self,
            (_, TruthValue::True) => other,
            (TruthValue::Unknown, _) => self,
            (_, TruthValue::Unknown) => other,
            _ => Verdict::truth(false),
        }
    }

    pub fn iff(self, other: Verdict) -> Verdict {
        match (self.as_bool(), other.as_bool()) {
            (Some(a), Some(b)) => Verdict::truth(a == b),
            (None, _) => self,
            (_, None) => other,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            Some(r) if self.value == TruthValue::Unknown => write!(f, "unknown ({})", r),
            _ => write!(f, "{}", self.value),
        }
    }
}

/// What a term denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Elem(Element),
    Bool(bool),
    Closure(Closure),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(e) => write!(f, "{}", e),
            Value::Bool(true) => f.write_str("$true"),
            Value::Bool(false) => f.write_str("$false"),
            Value::Closure(c) => {
                let names: Vec<&str> = c.vars.iter().map(|v| v.name.as_str()).collect();
                write!(f, "^ [{}] : ...", names.join(","))
            }
        }
    }
}

/// A lambda abstraction together with the bindings it was built under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub vars: Vec<TypedVar>,
    pub body: Term,
    pub env: Environment,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Environment {
    pub bindings: BTreeMap<String, Value>,
    pub current_world: Option<String>,
}

impl Environment {
    pub fn new() -> Environment {
        Environment::default()
    }

    pub fn at_world(world: &str) -> Environment {
        Environment {
            bindings: BTreeMap::new(),
            current_world: Some(world.to_string()),
        }
    }

    pub fn bind(&self, name: &str, value: Value) -> Environment {
        let mut env = self.clone();
        env.bindings.insert(name.to_string(), value);
        env
    }

    pub fn with_element(self, name: &str, e: Element) -> Environment {
        self.bind(name, Value::Elem(e))
    }

    pub fn in_world(&self, world: &str) -> Environment {
        Environment {
            bindings: self.bindings.clone(),
            current_world: Some(world.to_string()),
        }
    }
}
