//! Higher-order formulae. Formulae and terms share one expression grammar in
//! THF, so input is first parsed into an untyped expression tree and then
//! read as a formula or as a term depending on its position.

use crate::diag::{Diagnostic, DiagnosticKind};

use super::ast::*;
use super::lexer::TokenKind;
use super::parser::{connective, term_to_atom, PResult, Parser};

#[derive(Debug, Clone)]
enum Expr {
    Var(String),
    /// A symbol, optionally applied first-order style `f(a, b)`.
    Word {
        symbol: String,
        defined: bool,
        args: Vec<Expr>,
    },
    Distinct(String),
    Number(String),
    Apply(Box<Expr>, Box<Expr>),
    Eq(Box<Expr>, Box<Expr>, bool),
    Binary(Connective, Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    Quantified(Quantifier, Vec<TypedVar>, Box<Expr>),
    Lambda(Vec<TypedVar>, Box<Expr>),
}

fn syntax(message: String) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::SyntaxError, message)
}

impl Expr {
    fn into_formula(self) -> PResult<Formula> {
        Ok(match self {
            Expr::Binary(op, l, r) => Formula::binary(op, l.into_formula()?, r.into_formula()?),
            Expr::Not(f) => Formula::not(f.into_formula()?),
            Expr::Quantified(quantifier, vars, body) => Formula::Quantified {
                quantifier,
                vars,
                body: Box::new(body.into_formula()?),
            },
            Expr::Eq(l, r, negated) => Formula::Equality {
                lhs: l.into_term()?,
                rhs: r.into_term()?,
                negated,
            },
            Expr::Apply(f, a) => Formula::HoApply {
                func: f.into_term()?,
                arg: a.into_term()?,
            },
            w @ Expr::Word { .. } => term_to_atom(w.into_term()?)?,
            Expr::Var(v) => {
                return Err(syntax(format!("variable {} in formula position is not supported", v)))
            }
            Expr::Lambda(..) => return Err(syntax("lambda abstraction used as a formula".into())),
            Expr::Distinct(_) | Expr::Number(_) => {
                return Err(syntax("expected a formula, found a constant".into()))
            }
        })
    }

    fn into_term(self) -> PResult<Term> {
        Ok(match self {
            Expr::Var(v) => Term::Var(v),
            Expr::Word {
                symbol,
                defined,
                args,
            } => {
                if defined && args.is_empty() && (symbol == "$true" || symbol == "$false") {
                    return Ok(Term::Formula(Box::new(Formula::Truth(symbol == "$true"))));
                }
                let args = args
                    .into_iter()
                    .map(Expr::into_term)
                    .collect::<PResult<Vec<_>>>()?;
                if defined {
                    Term::Defined { symbol, args }
                } else {
                    Term::Func { symbol, args }
                }
            }
            Expr::Distinct(s) => Term::Distinct(s),
            Expr::Number(n) => Term::Number(Number::new(&n)),
            Expr::Apply(f, a) => Term::Apply(Box::new(f.into_term()?), Box::new(a.into_term()?)),
            Expr::Lambda(vars, body) => Term::Lambda {
                vars,
                body: Box::new(body.into_term()?),
            },
            other => Term::Formula(Box::new(other.into_formula()?)),
        })
    }
}

impl Parser<'_> {
    pub(super) fn thf_formula(&mut self) -> PResult<Formula> {
        let at = self.tokens.get(self.pos).map(|t| t.position);
        let e = self.h_formula()?;
        e.into_formula().map_err(|d| match at {
            Some(p) if d.position.is_none() => d.at(p),
            _ => d,
        })
    }

    pub(super) fn thf_term(&mut self) -> PResult<Term> {
        let at = self.tokens.get(self.pos).map(|t| t.position);
        let e = self.h_formula()?;
        e.into_term().map_err(|d| match at {
            Some(p) if d.position.is_none() => d.at(p),
            _ => d,
        })
    }

    fn h_formula(&mut self) -> PResult<Expr> {
        let lhs = self.h_equality()?;
        let Some(op) = self.peek().and_then(connective) else {
            return Ok(lhs);
        };
        self.pos += 1;
        let mut result = Expr::Binary(op, Box::new(lhs), Box::new(self.h_equality()?));
        if op.is_associative() {
            while self.peek().and_then(connective) == Some(op) {
                self.pos += 1;
                result = Expr::Binary(op, Box::new(result), Box::new(self.h_equality()?));
            }
        }
        if self.peek().and_then(connective).is_some() {
            return Err(self.unexpected("')' before a different connective"));
        }
        Ok(result)
    }

    fn h_equality(&mut self) -> PResult<Expr> {
        let lhs = self.h_apply()?;
        let negated = match self.peek() {
            Some(TokenKind::Eq) => false,
            Some(TokenKind::Neq) => true,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.h_apply()?;
        Ok(Expr::Eq(Box::new(lhs), Box::new(rhs), negated))
    }

    fn h_apply(&mut self) -> PResult<Expr> {
        let mut e = self.h_unit()?;
        while self.eat(&TokenKind::Apply) {
            let arg = self.h_unit()?;
            e = Expr::Apply(Box::new(e), Box::new(arg));
        }
        Ok(e)
    }

    fn h_unit(&mut self) -> PResult<Expr> {
        let Some(kind) = self.peek() else {
            return Err(self.unexpected("a formula"));
        };
        match kind {
            TokenKind::Tilde => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.h_unit()?)))
            }
            TokenKind::Forall | TokenKind::Exists | TokenKind::Lambda => {
                self.pos += 1;
                let vars = self.var_list()?;
                self.expect(&TokenKind::Colon)?;
                let body = Box::new(self.h_unit()?);
                Ok(match kind {
                    TokenKind::Forall => Expr::Quantified(Quantifier::Forall, vars, body),
                    TokenKind::Exists => Expr::Quantified(Quantifier::Exists, vars, body),
                    _ => Expr::Lambda(vars, body),
                })
            }
            TokenKind::LParen => {
                self.pos += 1;
                let e = self.h_formula()?;
                self.expect(&TokenKind::RParen)?;
                Ok(e)
            }
            TokenKind::UpperWord(v) => {
                self.pos += 1;
                Ok(Expr::Var(v.clone()))
            }
            TokenKind::LowerWord(s) | TokenKind::SingleQuoted(s) => {
                self.pos += 1;
                Ok(Expr::Word {
                    symbol: s.clone(),
                    defined: false,
                    args: self.h_args()?,
                })
            }
            TokenKind::DollarWord(s) | TokenKind::DollarDollarWord(s) => {
                self.pos += 1;
                Ok(Expr::Word {
                    symbol: s.clone(),
                    defined: true,
                    args: self.h_args()?,
                })
            }
            TokenKind::DistinctObject(s) => {
                self.pos += 1;
                Ok(Expr::Distinct(s.clone()))
            }
            TokenKind::Number(n) => {
                self.pos += 1;
                Ok(Expr::Number(n.clone()))
            }
            TokenKind::ModalName(name) => Err(Diagnostic::error(
                DiagnosticKind::Unsupported,
                format!("modal connective {{${}}} in higher-order formulae", name),
            )
            .at(self.tokens[self.pos].position)),
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn h_args(&mut self) -> PResult<Vec<Expr>> {
        let mut args = Vec::new();
        if !self.eat(&TokenKind::LParen) {
            return Ok(args);
        }
        loop {
            args.push(self.h_formula()?);
            if self.eat(&TokenKind::RParen) {
                return Ok(args);
            }
            self.expect(&TokenKind::Comma)?;
        }
    }
}
