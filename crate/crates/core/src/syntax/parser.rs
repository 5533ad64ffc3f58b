//! Recursive-descent parser for annotated formulae.

use crate::diag::{Diagnostic, DiagnosticKind, Position};

use super::ast::*;
use super::lexer::{lex, LexError, Token, TokenKind};
use super::role::{parse_role, BaseRole, RoleError, RoleWarning};

#[derive(Debug, Clone, Default)]
pub struct ParseOutput {
    pub units: Vec<AnnotatedFormula>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ParseOutput {
    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }
}

pub(super) type PResult<T> = Result<T, Diagnostic>;

/// Parses every annotated formula in `text`. A malformed unit yields one
/// diagnostic and parsing resumes at the next top-level `language(`.
pub fn parse_file(text: &str) -> ParseOutput {
    let (tokens, lex_errors) = lex(text);
    let mut out = ParseOutput::default();
    for e in &lex_errors {
        let kind = match e {
            LexError::UnterminatedQuote { .. } => DiagnosticKind::UnterminatedQuote,
            LexError::IllegalCharacter { .. } => DiagnosticKind::IllegalCharacter,
        };
        let message = match e {
            LexError::UnterminatedQuote { .. } => "unterminated quote or comment".to_string(),
            LexError::IllegalCharacter { found, .. } => format!("illegal character {:?}", found),
        };
        out.diagnostics
            .push(Diagnostic::error(kind, message).at(e.position()));
    }
    let mut p = Parser::new(text, &tokens, Language::Fof);
    while !p.at_end() {
        let start = p.pos;
        match p.unit(&mut out.diagnostics) {
            Ok(Some(unit)) => out.units.push(unit),
            Ok(None) => {}
            Err(diag) => {
                let failed_at = p.tokens.get(p.pos).map(|t| &t.kind);
                // lexical errors were already reported
                if !matches!(failed_at, Some(TokenKind::Error(_))) {
                    out.diagnostics.push(diag);
                }
                p.recover(start);
            }
        }
    }
    out.diagnostics.sort_by_key(|d| d.position);
    out
}

/// Parses a single formula in the given language.
pub fn parse_formula(text: &str, language: Language) -> PResult<Formula> {
    parse_fragment(text, language, |p| p.formula())
}

/// Parses a single term in the given language.
pub fn parse_term(text: &str, language: Language) -> PResult<Term> {
    parse_fragment(text, language, |p| p.term())
}

/// Parses a type expression such as `( human * cat ) > $o`.
pub fn parse_type(text: &str) -> PResult<TypeExpr> {
    parse_fragment(text, Language::Tff, |p| p.type_expr())
}

fn parse_fragment<T>(
    text: &str,
    language: Language,
    f: impl FnOnce(&mut Parser) -> PResult<T>,
) -> PResult<T> {
    let (tokens, errors) = lex(text);
    if let Some(e) = errors.first() {
        return Err(Diagnostic::error(DiagnosticKind::SyntaxError, e.to_string()).at(e.position()));
    }
    let mut p = Parser::new(text, &tokens, language);
    let value = f(&mut p)?;
    if !p.at_end() {
        return Err(p.unexpected("end of input"));
    }
    Ok(value)
}

pub(super) struct Parser<'a> {
    src: &'a str,
    pub(super) tokens: &'a [Token],
    pub(super) pos: usize,
    pub(super) language: Language,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, tokens: &'a [Token], language: Language) -> Self {
        Parser {
            src,
            tokens,
            pos: 0,
            language,
        }
    }

    pub(super) fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub(super) fn peek(&self) -> Option<&'a TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    pub(super) fn peek_at(&self, offset: usize) -> Option<&'a TokenKind> {
        self.tokens.get(self.pos + offset).map(|t| &t.kind)
    }

    pub(super) fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(super) fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(super) fn expect(&mut self, kind: &TokenKind) -> PResult<()> {
        if self.eat(kind) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", kind)))
        }
    }

    fn position(&self) -> Position {
        match self.tokens.get(self.pos) {
            Some(t) => t.position,
            None => self
                .tokens
                .last()
                .map(|t| Position::new(t.position.line, t.position.column + (t.span.end - t.span.start)))
                .unwrap_or(Position::new(1, 1)),
        }
    }

    pub(super) fn unexpected(&self, expected: &str) -> Diagnostic {
        let found = match self.peek() {
            Some(k) => format!("'{}'", k),
            None => "end of input".to_string(),
        };
        Diagnostic::error(
            DiagnosticKind::SyntaxError,
            format!("expected {}, found {}", expected, found),
        )
        .at(self.position())
    }

    /// Skips to the next token that starts a top-level annotated formula.
    fn recover(&mut self, start: usize) {
        let mut i = start + 1;
        while i < self.tokens.len() {
            let starts_unit = matches!(&self.tokens[i].kind, TokenKind::LowerWord(w)
                if Language::from_keyword(w).is_some() || is_other_unit_keyword(w))
                && matches!(self.tokens.get(i + 1).map(|t| &t.kind), Some(TokenKind::LParen))
                && matches!(self.tokens[i - 1].kind, TokenKind::Dot);
            if starts_unit {
                break;
            }
            i += 1;
        }
        self.pos = i;
    }

    /// Raw source text of tokens `from..to`.
    fn slice(&self, from: usize, to: usize) -> &'a str {
        if from >= to {
            return "";
        }
        &self.src[self.tokens[from].span.start..self.tokens[to - 1].span.end]
    }

    /// Advances past a balanced token run that ends before a depth-0 `,` or `)`.
    fn skip_balanced(&mut self) -> PResult<(usize, usize)> {
        let from = self.pos;
        let mut depth = 0usize;
        while let Some(k) = self.peek() {
            match k {
                TokenKind::LParen | TokenKind::LBracket | TokenKind::LBrace => depth += 1,
                TokenKind::RParen | TokenKind::RBracket | TokenKind::RBrace => {
                    if depth == 0 {
                        break;
                    }
                    depth -= 1;
                }
                TokenKind::Comma if depth == 0 => break,
                TokenKind::Dot if depth == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        if self.pos == from {
            return Err(self.unexpected("a non-empty field"));
        }
        Ok((from, self.pos))
    }

    fn unit(&mut self, diags: &mut Vec<Diagnostic>) -> PResult<Option<AnnotatedFormula>> {
        let start = self.tokens[self.pos].position;
        let keyword = match self.peek() {
            Some(TokenKind::LowerWord(w)) => w.clone(),
            _ => return Err(self.unexpected("an annotated formula")),
        };
        let language = match Language::from_keyword(&keyword) {
            Some(l) => l,
            None if keyword == "include" => {
                self.pos += 1;
                self.expect(&TokenKind::LParen)?;
                self.skip_balanced()?;
                self.expect(&TokenKind::RParen)?;
                self.expect(&TokenKind::Dot)?;
                diags.push(
                    Diagnostic::warning(DiagnosticKind::Unsupported, "include directive ignored")
                        .at(start),
                );
                return Ok(None);
            }
            None if matches!(keyword.as_str(), "dhf" | "nhf" | "tcf" | "tpi") => {
                return Err(Diagnostic::error(
                    DiagnosticKind::Unsupported,
                    format!("language {} is not supported", keyword),
                )
                .at(start));
            }
            None => return Err(self.unexpected("fof, tff, thf or cnf")),
        };
        self.pos += 1;
        self.language = language;
        self.expect(&TokenKind::LParen)?;
        let name = match self.next().map(|t| &t.kind) {
            Some(TokenKind::LowerWord(w)) | Some(TokenKind::SingleQuoted(w)) => w.clone(),
            Some(TokenKind::Number(n)) if n.chars().all(|c| c.is_ascii_digit()) => n.clone(),
            _ => {
                self.pos -= 1;
                return Err(self.unexpected("a formula name"));
            }
        };
        self.expect(&TokenKind::Comma)?;
        let role_pos = self.position();
        let (from, to) = self.skip_balanced()?;
        let role_text = self.slice(from, to);
        let role = match parse_role(role_text) {
            Ok((role, warnings)) => {
                for w in warnings {
                    let kind = match w {
                        RoleWarning::UnknownRole(_) => DiagnosticKind::UnknownRole,
                        RoleWarning::UnknownSubrole(_) => DiagnosticKind::UnknownSubrole,
                    };
                    diags.push(
                        Diagnostic::warning(kind, w.to_string())
                            .at(role_pos)
                            .in_unit(&name),
                    );
                }
                role
            }
            Err(e @ RoleError::MalformedArgs { .. }) => {
                return Err(Diagnostic::error(DiagnosticKind::MalformedArgs, e.to_string())
                    .at(role_pos)
                    .in_unit(&name));
            }
        };
        self.expect(&TokenKind::Comma)?;
        let body = match role.base {
            BaseRole::Type => UnitBody::Type(self.type_decl()?),
            BaseRole::Logic => UnitBody::Logic(self.logic_term()?),
            _ => UnitBody::Formula(self.formula()?),
        };
        let mut source = None;
        let mut useful_info = None;
        if self.eat(&TokenKind::Comma) {
            let (from, to) = self.skip_balanced()?;
            source = Some(self.slice(from, to).to_string());
            if self.eat(&TokenKind::Comma) {
                let (from, to) = self.skip_balanced()?;
                useful_info = Some(self.slice(from, to).to_string());
            }
        }
        self.expect(&TokenKind::RParen)?;
        self.expect(&TokenKind::Dot)?;
        Ok(Some(AnnotatedFormula {
            language,
            name,
            role,
            body,
            source,
            useful_info,
        }))
    }

    fn type_decl(&mut self) -> PResult<TypeDecl> {
        if self.peek() == Some(&TokenKind::LParen) {
            self.pos += 1;
            let decl = self.type_decl()?;
            self.expect(&TokenKind::RParen)?;
            return Ok(decl);
        }
        let symbol = match self.peek() {
            Some(TokenKind::LowerWord(w))
            | Some(TokenKind::SingleQuoted(w))
            | Some(TokenKind::DollarWord(w)) => w.clone(),
            _ => return Err(self.unexpected("a symbol to declare")),
        };
        self.pos += 1;
        self.expect(&TokenKind::Colon)?;
        let ty = self.type_expr()?;
        Ok(TypeDecl { symbol, ty })
    }

    pub(super) fn type_expr(&mut self) -> PResult<TypeExpr> {
        let lhs = self.type_primary()?;
        if self.eat(&TokenKind::Arrow) {
            let rhs = self.type_expr()?;
            return Ok(TypeExpr::Arrow(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn type_primary(&mut self) -> PResult<TypeExpr> {
        match self.peek() {
            Some(TokenKind::LParen) => {
                self.pos += 1;
                let first = self.type_expr()?;
                let ty = if self.peek() == Some(&TokenKind::Star) {
                    let mut items = vec![first];
                    while self.eat(&TokenKind::Star) {
                        items.push(self.type_expr()?);
                    }
                    TypeExpr::Product(items)
                } else {
                    first
                };
                self.expect(&TokenKind::RParen)?;
                Ok(ty)
            }
            Some(TokenKind::LowerWord(w))
            | Some(TokenKind::SingleQuoted(w))
            | Some(TokenKind::DollarWord(w)) => {
                self.pos += 1;
                Ok(TypeExpr::Named(w.clone()))
            }
            _ => Err(self.unexpected("a type")),
        }
    }

    fn logic_term(&mut self) -> PResult<LogicTerm> {
        let lhs = match self.peek() {
            Some(TokenKind::LBracket) => {
                self.pos += 1;
                let mut items = Vec::new();
                if !self.eat(&TokenKind::RBracket) {
                    loop {
                        items.push(self.logic_term()?);
                        if self.eat(&TokenKind::RBracket) {
                            break;
                        }
                        self.expect(&TokenKind::Comma)?;
                    }
                }
                LogicTerm::List(items)
            }
            Some(TokenKind::LParen) => {
                self.pos += 1;
                let inner = self.logic_term()?;
                self.expect(&TokenKind::RParen)?;
                inner
            }
            Some(
                TokenKind::LowerWord(w)
                | TokenKind::UpperWord(w)
                | TokenKind::SingleQuoted(w)
                | TokenKind::DollarWord(w)
                | TokenKind::DollarDollarWord(w)
                | TokenKind::Number(w),
            ) => {
                self.pos += 1;
                LogicTerm::Word(w.clone())
            }
            _ => return Err(self.unexpected("a logic specification")),
        };
        if self.eat(&TokenKind::Assign) {
            let rhs = self.logic_term()?;
            return Ok(LogicTerm::Assign(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    /// A complete formula of the current language.
    pub(super) fn formula(&mut self) -> PResult<Formula> {
        if self.language == Language::Thf {
            return self.thf_formula();
        }
        self.fo_formula()
    }

    fn fo_formula(&mut self) -> PResult<Formula> {
        let lhs = self.fo_unit()?;
        self.binary_tail(lhs, |p| p.fo_unit())
    }

    /// Parses the connective chain after `lhs`. `&` and `|` chain to the left;
    /// other connectives take exactly one right operand.
    pub(super) fn binary_tail(
        &mut self,
        lhs: Formula,
        mut operand: impl FnMut(&mut Self) -> PResult<Formula>,
    ) -> PResult<Formula> {
        let Some(op) = self.peek().and_then(connective) else {
            return Ok(lhs);
        };
        self.pos += 1;
        let mut result = Formula::binary(op, lhs, operand(self)?);
        if op.is_associative() {
            while self.eat(&op_token(op)) {
                result = Formula::binary(op, result, operand(self)?);
            }
        }
        if self.peek().and_then(connective).is_some() {
            return Err(Diagnostic::error(
                DiagnosticKind::SyntaxError,
                format!(
                    "connectives '{}' and '{}' must be separated by parentheses",
                    op.glyph(),
                    self.peek().map(|k| k.to_string()).unwrap_or_default()
                ),
            )
            .at(self.position()));
        }
        Ok(result)
    }

    fn fo_unit(&mut self) -> PResult<Formula> {
        match self.peek() {
            Some(TokenKind::Tilde) => {
                self.pos += 1;
                Ok(Formula::not(self.fo_unit()?))
            }
            Some(TokenKind::Forall) | Some(TokenKind::Exists) => {
                let quantifier = if self.next().unwrap().kind == TokenKind::Forall {
                    Quantifier::Forall
                } else {
                    Quantifier::Exists
                };
                let vars = self.var_list()?;
                self.expect(&TokenKind::Colon)?;
                let body = self.fo_unit()?;
                Ok(Formula::Quantified {
                    quantifier,
                    vars,
                    body: Box::new(body),
                })
            }
            Some(TokenKind::LParen) => {
                self.pos += 1;
                let f = self.fo_formula()?;
                self.expect(&TokenKind::RParen)?;
                Ok(f)
            }
            Some(TokenKind::ModalName(name)) => {
                if self.language != Language::Tff {
                    return Err(Diagnostic::error(
                        DiagnosticKind::Unsupported,
                        format!("modal connective {{${}}} outside typed first-order formulae", name),
                    )
                    .at(self.position()));
                }
                self.pos += 1;
                self.expect(&TokenKind::Apply)?;
                let body = self.fo_unit()?;
                Ok(Formula::Modal {
                    op: ModalOp::from_name(name),
                    body: Box::new(body),
                })
            }
            Some(TokenKind::DollarWord(w))
                if w == "$in_world" && self.peek_at(1) == Some(&TokenKind::LParen) =>
            {
                self.pos += 2;
                let world = self.term()?;
                self.expect(&TokenKind::Comma)?;
                let body = self.fo_formula()?;
                self.expect(&TokenKind::RParen)?;
                Ok(Formula::InWorld {
                    world,
                    body: Box::new(body),
                })
            }
            _ => self.fo_atomic(),
        }
    }

    fn fo_atomic(&mut self) -> PResult<Formula> {
        let at = self.position();
        let lhs = self.term()?;
        let negated = match self.peek() {
            Some(TokenKind::Eq) => false,
            Some(TokenKind::Neq) => true,
            _ => return term_to_atom(lhs).map_err(|m| m.at(at)),
        };
        self.pos += 1;
        let rhs = self.term()?;
        Ok(Formula::Equality { lhs, rhs, negated })
    }

    pub(super) fn var_list(&mut self) -> PResult<Vec<TypedVar>> {
        self.expect(&TokenKind::LBracket)?;
        let mut vars = Vec::new();
        loop {
            let name = match self.peek() {
                Some(TokenKind::UpperWord(w)) => w.clone(),
                _ => return Err(self.unexpected("a variable")),
            };
            self.pos += 1;
            let ty = if self.eat(&TokenKind::Colon) {
                Some(self.type_expr()?)
            } else {
                None
            };
            vars.push(TypedVar { name, ty });
            if self.eat(&TokenKind::RBracket) {
                return Ok(vars);
            }
            self.expect(&TokenKind::Comma)?;
        }
    }

    /// A first-order term; in THF this parses a full application expression.
    pub(super) fn term(&mut self) -> PResult<Term> {
        if self.language == Language::Thf {
            return self.thf_term();
        }
        self.fo_term()
    }

    fn fo_term(&mut self) -> PResult<Term> {
        let tok = self.next().map(|t| &t.kind);
        match tok {
            Some(TokenKind::UpperWord(v)) => Ok(Term::Var(v.clone())),
            Some(TokenKind::LowerWord(s)) | Some(TokenKind::SingleQuoted(s)) => Ok(Term::Func {
                symbol: s.clone(),
                args: self.args()?,
            }),
            Some(TokenKind::DollarWord(s)) | Some(TokenKind::DollarDollarWord(s)) => {
                Ok(Term::Defined {
                    symbol: s.clone(),
                    args: self.args()?,
                })
            }
            Some(TokenKind::DistinctObject(s)) => Ok(Term::Distinct(s.clone())),
            Some(TokenKind::Number(n)) => Ok(Term::Number(Number::new(n))),
            _ => {
                if tok.is_some() {
                    self.pos -= 1;
                }
                Err(self.unexpected("a term"))
            }
        }
    }

    pub(super) fn args(&mut self) -> PResult<Vec<Term>> {
        let mut args = Vec::new();
        if !self.eat(&TokenKind::LParen) {
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            if self.eat(&TokenKind::RParen) {
                return Ok(args);
            }
            self.expect(&TokenKind::Comma)?;
        }
    }
}

fn is_other_unit_keyword(w: &str) -> bool {
    matches!(w, "include" | "dhf" | "nhf" | "tcf" | "tpi")
}

pub(super) fn connective(kind: &TokenKind) -> Option<Connective> {
    Some(match kind {
        TokenKind::Or => Connective::Or,
        TokenKind::And => Connective::And,
        TokenKind::Implies => Connective::Implies,
        TokenKind::ImpliedBy => Connective::ImpliedBy,
        TokenKind::Iff => Connective::Iff,
        TokenKind::Xor => Connective::Xor,
        TokenKind::Nor => Connective::Nor,
        TokenKind::Nand => Connective::Nand,
        _ => return None,
    })
}

fn op_token(op: Connective) -> TokenKind {
    match op {
        Connective::Or => TokenKind::Or,
        Connective::And => TokenKind::And,
        Connective::Implies => TokenKind::Implies,
        Connective::ImpliedBy => TokenKind::ImpliedBy,
        Connective::Iff => TokenKind::Iff,
        Connective::Xor => TokenKind::Xor,
        Connective::Nor => TokenKind::Nor,
        Connective::Nand => TokenKind::Nand,
    }
}

/// Reads a term in formula position as an atom.
pub(super) fn term_to_atom(t: Term) -> Result<Formula, Diagnostic> {
    match t {
        Term::Func { symbol, args } => Ok(Formula::Atom {
            predicate: symbol,
            args,
        }),
        Term::Defined { symbol, args } if args.is_empty() && symbol == "$true" => {
            Ok(Formula::Truth(true))
        }
        Term::Defined { symbol, args } if args.is_empty() && symbol == "$false" => {
            Ok(Formula::Truth(false))
        }
        Term::Defined { symbol, args } => Ok(Formula::Defined {
            predicate: symbol,
            args,
        }),
        Term::Formula(f) => Ok(*f),
        other => Err(Diagnostic::error(
            DiagnosticKind::SyntaxError,
            format!("expected a formula, found term {:?}", other),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::role::Subrole;

    fn fof(text: &str) -> Formula {
        parse_formula(text, Language::Fof).unwrap()
    }

    #[test]
    fn interpretation_domains_unit() {
        let out = parse_file("tff(garfield_domains,interpretation-domains,$true).");
        assert!(out.diagnostics.is_empty(), "{:?}", out.diagnostics);
        assert_eq!(out.units.len(), 1);
        let u = &out.units[0];
        assert_eq!(u.role.base, BaseRole::Interpretation);
        assert_eq!(u.role.subrole, Some(Subrole::Domains));
        assert_eq!(u.formula(), Some(&Formula::Truth(true)));
    }

    #[test]
    fn minimal_axiom() {
        let out = parse_file("fof(a,axiom,$true).");
        assert!(out.diagnostics.is_empty());
        assert_eq!(out.units[0].role.base, BaseRole::Axiom);
        assert_eq!(out.units[0].role.subrole, None);
    }

    #[test]
    fn recovers_after_malformed_unit() {
        let text = "fof(a,axiom,p).\nfof(b,axiom,p & ).\nfof(c,axiom,q).\n";
        let out = parse_file(text);
        let names: Vec<_> = out.units.iter().map(|u| u.name.as_str()).collect();
        assert_eq!(names, ["a", "c"]);
        assert_eq!(out.diagnostics.len(), 1);
        assert_eq!(out.diagnostics[0].kind, DiagnosticKind::SyntaxError);
        assert_eq!(out.diagnostics[0].position, Some(Position::new(2, 17)));
    }

    #[test]
    fn illegal_character_is_reported_once() {
        let out = parse_file("fof(a,axiom,p ; q).\nfof(b,axiom,q).");
        assert_eq!(out.units.len(), 1);
        assert_eq!(out.diagnostics.len(), 1);
        assert_eq!(out.diagnostics[0].kind, DiagnosticKind::IllegalCharacter);
    }

    #[test]
    fn connective_chains() {
        let f = fof("p | q | r");
        assert_eq!(f.disjuncts().len(), 3);
        assert!(parse_formula("p | q & r", Language::Fof).is_err());
        assert!(parse_formula("p => q => r", Language::Fof).is_err());
        assert!(matches!(fof("p <~> q"), Formula::Binary { op: Connective::Xor, .. }));
    }

    #[test]
    fn quantifier_body_is_unitary() {
        let f = fof("! [X] : p(X) | q");
        assert!(matches!(f, Formula::Binary { op: Connective::Or, .. }));
    }

    #[test]
    fn equality_and_distinct_objects() {
        let f = fof("grade_of(\"john\") = \"f\"");
        assert_eq!(
            f,
            Formula::eq(
                Term::func("grade_of", vec![Term::Distinct("john".into())]),
                Term::Distinct("f".into())
            )
        );
        assert!(matches!(fof("X != Y"), Formula::Equality { negated: true, .. }));
    }

    #[test]
    fn typed_quantifier_and_types() {
        let f = parse_formula("! [H: human] : ? [DH: d_human] : H = d2human(DH)", Language::Tff)
            .unwrap();
        let Formula::Quantified { vars, .. } = f else { panic!() };
        assert_eq!(vars[0].ty, Some(TypeExpr::named("human")));
        let t = parse_type("( human * cat ) > $o").unwrap();
        let (args, result) = t.signature();
        assert_eq!(args.len(), 2);
        assert_eq!(result, &TypeExpr::named("$o"));
    }

    #[test]
    fn modal_and_world_formulae() {
        let f = parse_formula("{$possible} @ ( ~ rains )", Language::Tff).unwrap();
        assert_eq!(
            f,
            Formula::Modal {
                op: ModalOp::Possible,
                body: Box::new(Formula::not(Formula::atom("rains", vec![])))
            }
        );
        let f = parse_formula("$in_world(w1, rains & $true)", Language::Tff).unwrap();
        assert!(matches!(f, Formula::InWorld { .. }));
        assert!(parse_formula("{$box} @ p", Language::Fof).is_err());
    }

    #[test]
    fn type_and_logic_units() {
        let text = "tff(owns_decl,type,owns: ( human * cat ) > $o).\n\
                    tff(s,logic,$alethic_modal == [$domains == $varying, $terms == $local]).";
        let out = parse_file(text);
        assert!(out.diagnostics.is_empty(), "{:?}", out.diagnostics);
        assert_eq!(out.units[0].type_decl().unwrap().symbol, "owns");
        let spec = out.units[1].logic_spec().unwrap();
        assert!(!spec.is_foml_model());
        let out = parse_file("tff(s,logic,$$fomlModel).");
        assert!(out.units[0].logic_spec().unwrap().is_foml_model());
    }

    #[test]
    fn source_and_info_are_raw() {
        let out = parse_file("fof(a,axiom,p,file('x.p',a),[status(thm)]).");
        let u = &out.units[0];
        assert_eq!(u.source.as_deref(), Some("file('x.p',a)"));
        assert_eq!(u.useful_info.as_deref(), Some("[status(thm)]"));
    }

    #[test]
    fn include_and_unsupported_languages() {
        let out = parse_file("include('Axioms/SET001.ax').\nfof(a,axiom,p).");
        assert_eq!(out.units.len(), 1);
        assert_eq!(out.diagnostics[0].kind, DiagnosticKind::Unsupported);
        assert!(!out.has_errors());
        let out = parse_file("nhf(a,axiom,p).\nfof(b,axiom,p).");
        assert_eq!(out.units.len(), 1);
        assert_eq!(out.diagnostics[0].kind, DiagnosticKind::Unsupported);
    }

    #[test]
    fn malformed_role_args() {
        let out = parse_file("tff(d,interpretation-domains(human),$true).");
        assert!(out.units.is_empty());
        assert_eq!(out.diagnostics[0].kind, DiagnosticKind::MalformedArgs);
    }

    #[test]
    fn unknown_subrole_is_a_warning() {
        let out = parse_file("fof(a,axiom-sideways,p).");
        assert_eq!(out.units.len(), 1);
        assert_eq!(out.diagnostics[0].kind, DiagnosticKind::UnknownSubrole);
        assert!(!out.has_errors());
    }
}
