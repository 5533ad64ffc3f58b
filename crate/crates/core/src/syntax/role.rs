//! Formula roles with optional subroles and subrole arguments, e.g.
//! `interpretation-domains(human, d_human)` or `conjecture-local`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseRole {
    Axiom,
    Hypothesis,
    Definition,
    Assumption,
    Lemma,
    Theorem,
    Corollary,
    Conjecture,
    NegatedConjecture,
    Plain,
    Type,
    Logic,
    Interpretation,
    FiDomain,
    FiFunctors,
    FiPredicates,
    Unknown,
    Other(String),
}

impl BaseRole {
    pub fn from_word(word: &str) -> BaseRole {
        match word {
            "axiom" => BaseRole::Axiom,
            "hypothesis" => BaseRole::Hypothesis,
            "definition" => BaseRole::Definition,
            "assumption" => BaseRole::Assumption,
            "lemma" => BaseRole::Lemma,
            "theorem" => BaseRole::Theorem,
            "corollary" => BaseRole::Corollary,
            "conjecture" => BaseRole::Conjecture,
            "negated_conjecture" => BaseRole::NegatedConjecture,
            "plain" => BaseRole::Plain,
            "type" => BaseRole::Type,
            "logic" => BaseRole::Logic,
            "interpretation" => BaseRole::Interpretation,
            "fi_domain" => BaseRole::FiDomain,
            "fi_functors" => BaseRole::FiFunctors,
            "fi_predicates" => BaseRole::FiPredicates,
            "unknown" => BaseRole::Unknown,
            other => BaseRole::Other(other.to_string()),
        }
    }

    pub fn as_str(&self) -> &str {
        match self {
            BaseRole::Axiom => "axiom",
            BaseRole::Hypothesis => "hypothesis",
            BaseRole::Definition => "definition",
            BaseRole::Assumption => "assumption",
            BaseRole::Lemma => "lemma",
            BaseRole::Theorem => "theorem",
            BaseRole::Corollary => "corollary",
            BaseRole::Conjecture => "conjecture",
            BaseRole::NegatedConjecture => "negated_conjecture",
            BaseRole::Plain => "plain",
            BaseRole::Type => "type",
            BaseRole::Logic => "logic",
            BaseRole::Interpretation => "interpretation",
            BaseRole::FiDomain => "fi_domain",
            BaseRole::FiFunctors => "fi_functors",
            BaseRole::FiPredicates => "fi_predicates",
            BaseRole::Unknown => "unknown",
            BaseRole::Other(s) => s,
        }
    }

    /// Roles whose formulae are asserted (must hold in a model).
    pub fn is_axiom_like(&self) -> bool {
        matches!(
            self,
            BaseRole::Axiom
                | BaseRole::Hypothesis
                | BaseRole::Definition
                | BaseRole::Assumption
                | BaseRole::Lemma
                | BaseRole::Theorem
                | BaseRole::Corollary
                | BaseRole::NegatedConjecture
                | BaseRole::Plain
        )
    }

    pub fn is_legacy_interpretation(&self) -> bool {
        matches!(
            self,
            BaseRole::FiDomain | BaseRole::FiFunctors | BaseRole::FiPredicates
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Subrole {
    Domains,
    Mappings,
    Worlds,
    Herbrand,
    Local,
    Global,
    Other(String),
}

impl Subrole {
    pub fn from_word(word: &str) -> Subrole {
        match word {
            "domains" => Subrole::Domains,
            "mappings" => Subrole::Mappings,
            "worlds" => Subrole::Worlds,
            "herbrand" => Subrole::Herbrand,
            "local" => Subrole::Local,
            "global" => Subrole::Global,
            other => Subrole::Other(other.to_string()),
        }
    }

    pub fn as_str(&self) -> &str {
        match self {
            Subrole::Domains => "domains",
            Subrole::Mappings => "mappings",
            Subrole::Worlds => "worlds",
            Subrole::Herbrand => "herbrand",
            Subrole::Local => "local",
            Subrole::Global => "global",
            Subrole::Other(s) => s,
        }
    }

    fn takes_args(&self) -> bool {
        matches!(self, Subrole::Domains | Subrole::Mappings)
    }
}

/// A role such as `interpretation-mappings(rains, $o)`.
///
/// For `domains` the arguments are (problem type, domain type); for
/// `mappings` they are (symbol, result domain type).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Role {
    pub base: BaseRole,
    pub subrole: Option<Subrole>,
    pub args: Option<(String, String)>,
}

impl Role {
    pub fn new(base: BaseRole) -> Role {
        Role {
            base,
            subrole: None,
            args: None,
        }
    }

    pub fn with_subrole(base: BaseRole, subrole: Subrole) -> Role {
        Role {
            base,
            subrole: Some(subrole),
            args: None,
        }
    }

    pub fn with_args(base: BaseRole, subrole: Subrole, a: &str, b: &str) -> Role {
        Role {
            base,
            subrole: Some(subrole),
            args: Some((a.to_string(), b.to_string())),
        }
    }

    pub fn is_interpretation(&self) -> bool {
        self.base == BaseRole::Interpretation || self.base.is_legacy_interpretation()
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.base.as_str())?;
        if let Some(sub) = &self.subrole {
            write!(f, "-{}", sub.as_str())?;
        }
        if let Some((a, b)) = &self.args {
            write!(f, "({}, {})", a, b)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoleError {
    #[error("malformed role {text:?}: {reason}")]
    MalformedArgs { text: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoleWarning {
    UnknownRole(String),
    UnknownSubrole(String),
}

impl fmt::Display for RoleWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RoleWarning::UnknownRole(r) => write!(f, "unknown role {:?} kept as other", r),
            RoleWarning::UnknownSubrole(r) => write!(f, "unknown subrole {:?} kept as other", r),
        }
    }
}

struct RoleScanner<'a> {
    text: &'a str,
    rest: &'a str,
}

impl<'a> RoleScanner<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if let Some(r) = self.rest.strip_prefix(c) {
            self.rest = r;
            true
        } else {
            false
        }
    }

    fn lower_word(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let first = self.rest.chars().next()?;
        if !first.is_ascii_lowercase() {
            return None;
        }
        let end = self
            .rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest.len());
        let (w, r) = self.rest.split_at(end);
        self.rest = r;
        Some(w)
    }

    /// A subrole argument: a lower word, a single-quoted atom, or a `$`/`$$` word.
    fn atomic_arg(&mut self) -> Result<&'a str, String> {
        self.skip_ws();
        let start = self.rest;
        let mut chars = self.rest.char_indices();
        let end = match chars.next() {
            Some((_, '\'')) => {
                let mut escaped = false;
                let mut end = None;
                for (i, c) in chars {
                    if escaped {
                        escaped = false;
                    } else if c == '\\' {
                        escaped = true;
                    } else if c == '\'' {
                        end = Some(i + 1);
                        break;
                    }
                }
                end.ok_or_else(|| "unterminated quoted argument".to_string())?
            }
            Some((_, c)) if c.is_ascii_lowercase() || c == '$' => {
                let body = start.trim_start_matches('$');
                let dollars = start.len() - body.len();
                if dollars > 2 || !body.starts_with(|c: char| c.is_ascii_alphabetic()) {
                    return Err(format!("bad argument near {:?}", start));
                }
                dollars
                    + body
                        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                        .unwrap_or(body.len())
            }
            _ => return Err(format!("expected a symbol or type name near {:?}", start)),
        };
        let (w, r) = self.rest.split_at(end);
        self.rest = r;
        Ok(w)
    }

    fn malformed(&self, reason: impl Into<String>) -> RoleError {
        RoleError::MalformedArgs {
            text: self.text.to_string(),
            reason: reason.into(),
        }
    }
}

/// Parses a role string into base role, optional subrole and optional
/// subrole arguments. Unknown roles and subroles are kept as `Other` and
/// reported as warnings.
pub fn parse_role(text: &str) -> Result<(Role, Vec<RoleWarning>), RoleError> {
    let mut sc = RoleScanner { text, rest: text };
    let mut warnings = Vec::new();
    let base_word = sc
        .lower_word()
        .ok_or_else(|| sc.malformed("expected a role name"))?;
    let base = BaseRole::from_word(base_word);
    if let BaseRole::Other(name) = &base {
        warnings.push(RoleWarning::UnknownRole(name.clone()));
    }
    let mut role = Role::new(base);
    if sc.eat('-') {
        let sub_word = sc
            .lower_word()
            .ok_or_else(|| sc.malformed("expected a subrole after '-'"))?;
        let sub = Subrole::from_word(sub_word);
        if let Subrole::Other(name) = &sub {
            warnings.push(RoleWarning::UnknownSubrole(name.clone()));
        }
        role.subrole = Some(sub);
    }
    if sc.eat('(') {
        let takes_args = role.subrole.as_ref().is_some_and(Subrole::takes_args);
        if !takes_args {
            return Err(sc.malformed("only the domains and mappings subroles take arguments"));
        }
        let a = sc.atomic_arg().map_err(|e| sc.malformed(e))?;
        if !sc.eat(',') {
            return Err(sc.malformed("expected ',' between the two subrole arguments"));
        }
        let b = sc.atomic_arg().map_err(|e| sc.malformed(e))?;
        if !sc.eat(')') {
            return Err(sc.malformed("expected ')' after two subrole arguments"));
        }
        role.args = Some((a.to_string(), b.to_string()));
    }
    sc.skip_ws();
    if !sc.rest.is_empty() {
        return Err(sc.malformed(format!("unexpected trailing text {:?}", sc.rest)));
    }
    Ok((role, warnings))
}
