//! Tokenizer for the TPTP subset used by problems and interpretation-formulae.

use std::fmt;

use thiserror::Error;

use crate::diag::Position;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TokenKind {
    LowerWord(String),
    UpperWord(String),
    /// Full text including the surrounding quotes.
    SingleQuoted(String),
    /// `$word`, including the `$`.
    DollarWord(String),
    /// `$$word`, including the `$$`.
    DollarDollarWord(String),
    /// Payload of a `"double quoted"` distinct object, without the quotes.
    DistinctObject(String),
    Number(String),
    /// `{$name}` short-form modal connective; payload is `name`.
    ModalName(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Colon,
    Forall,
    Exists,
    PiQuant,
    SigmaQuant,
    Tilde,
    Or,
    And,
    Implies,
    ImpliedBy,
    Iff,
    Xor,
    Nor,
    Nand,
    Eq,
    Neq,
    Assign,
    Apply,
    Choice,
    Description,
    Lambda,
    Arrow,
    Star,
    Plus,
    Minus,
    /// A character the lexer could not start a token with.
    Error(char),
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TokenKind::LowerWord(w)
            | TokenKind::UpperWord(w)
            | TokenKind::SingleQuoted(w)
            | TokenKind::DollarWord(w)
            | TokenKind::DollarDollarWord(w)
            | TokenKind::Number(w) => return f.write_str(w),
            TokenKind::DistinctObject(w) => return write!(f, "\"{}\"", w),
            TokenKind::ModalName(w) => return write!(f, "{{${}}}", w),
            TokenKind::Error(c) => return write!(f, "{:?}", c),
            TokenKind::LParen => "(",
            TokenKind::RParen => ")",
            TokenKind::LBracket => "[",
            TokenKind::RBracket => "]",
            TokenKind::LBrace => "{",
            TokenKind::RBrace => "}",
            TokenKind::Comma => ",",
            TokenKind::Dot => ".",
            TokenKind::Colon => ":",
            TokenKind::Forall => "!",
            TokenKind::Exists => "?",
            TokenKind::PiQuant => "!>",
            TokenKind::SigmaQuant => "?*",
            TokenKind::Tilde => "~",
            TokenKind::Or => "|",
            TokenKind::And => "&",
            TokenKind::Implies => "=>",
            TokenKind::ImpliedBy => "<=",
            TokenKind::Iff => "<=>",
            TokenKind::Xor => "<~>",
            TokenKind::Nor => "~|",
            TokenKind::Nand => "~&",
            TokenKind::Eq => "=",
            TokenKind::Neq => "!=",
            TokenKind::Assign => "==",
            TokenKind::Apply => "@",
            TokenKind::Choice => "@+",
            TokenKind::Description => "@-",
            TokenKind::Lambda => "^",
            TokenKind::Arrow => ">",
            TokenKind::Star => "*",
            TokenKind::Plus => "+",
            TokenKind::Minus => "-",
        };
        f.write_str(s)
    }
}

/// Byte range of a token in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
    pub position: Position,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("{position}: unterminated quote")]
    UnterminatedQuote { position: Position },
    #[error("{position}: illegal character {found:?}")]
    IllegalCharacter { found: char, position: Position },
}

impl LexError {
    pub fn position(&self) -> Position {
        match self {
            LexError::UnterminatedQuote { position } => *position,
            LexError::IllegalCharacter { position, .. } => *position,
        }
    }
}

/// Tokenizes `text`, failing on the first lexical error.
pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let (tokens, errors) = lex(text);
    match errors.into_iter().next() {
        Some(e) => Err(e),
        None => Ok(tokens),
    }
}

/// Tokenizes `text` without stopping at errors. Illegal characters become
/// [`TokenKind::Error`] tokens so that the parser can report them and recover;
/// an unterminated quote ends the token stream.
pub fn lex(text: &str) -> (Vec<Token>, Vec<LexError>) {
    let mut lexer = Lexer::new(text);
    lexer.run();
    (lexer.tokens, lexer.errors)
}

struct Lexer<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    idx: usize,
    line: usize,
    column: usize,
    tokens: Vec<Token>,
    errors: Vec<LexError>,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            chars: src.char_indices().collect(),
            idx: 0,
            line: 1,
            column: 1,
            tokens: Vec::new(),
            errors: Vec::new(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.idx + offset).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.idx)
            .map(|&(o, _)| o)
            .unwrap_or(self.src.len())
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.idx += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn position(&self) -> Position {
        Position::new(self.line, self.column)
    }

    fn starts_with(&self, s: &str) -> bool {
        self.src[self.offset()..].starts_with(s)
    }

    fn push(&mut self, kind: TokenKind, start: usize, position: Position) {
        let end = self.offset();
        self.tokens.push(Token {
            kind,
            span: Span { start, end },
            position,
        });
    }

    fn run(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            if c == '%' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
                continue;
            }
            if c == '/' && self.peek_at(1) == Some('*') {
                let position = self.position();
                self.bump();
                self.bump();
                let mut closed = false;
                while self.peek().is_some() {
                    if self.starts_with("*/") {
                        self.bump();
                        self.bump();
                        closed = true;
                        break;
                    }
                    self.bump();
                }
                if !closed {
                    self.errors.push(LexError::UnterminatedQuote { position });
                    return;
                }
                continue;
            }
            let start = self.offset();
            let position = self.position();
            if !self.token(c, start, position) {
                return;
            }
        }
    }

    fn word(&mut self) -> String {
        let start = self.offset();
        while self.peek().is_some_and(is_word_char) {
            self.bump();
        }
        self.src[start..self.offset()].to_string()
    }

    fn quoted(&mut self, quote: char, position: Position) -> Option<String> {
        self.bump();
        let start = self.offset();
        loop {
            match self.peek() {
                None | Some('\n') => {
                    self.errors.push(LexError::UnterminatedQuote { position });
                    return None;
                }
                Some('\\') => {
                    self.bump();
                    if self.bump().is_none() {
                        self.errors.push(LexError::UnterminatedQuote { position });
                        return None;
                    }
                }
                Some(c) if c == quote => {
                    let body = self.src[start..self.offset()].to_string();
                    self.bump();
                    return Some(body);
                }
                Some(_) => {
                    self.bump();
                }
            }
        }
    }

    fn number(&mut self) -> String {
        let start = self.offset();
        if matches!(self.peek(), Some('+') | Some('-')) {
            self.bump();
        }
        let digits = |lx: &mut Self| {
            while lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                lx.bump();
            }
        };
        digits(self);
        if self.peek() == Some('/') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            digits(self);
        } else {
            if self.peek() == Some('.') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
                digits(self);
            }
            if matches!(self.peek(), Some('e') | Some('E')) {
                let sign = matches!(self.peek_at(1), Some('+') | Some('-'));
                let d = if sign { self.peek_at(2) } else { self.peek_at(1) };
                if d.is_some_and(|c| c.is_ascii_digit()) {
                    self.bump();
                    if sign {
                        self.bump();
                    }
                    digits(self);
                }
            }
        }
        self.src[start..self.offset()].to_string()
    }

    /// Lexes one token starting with `c`. Returns false when lexing must stop.
    fn token(&mut self, c: char, start: usize, position: Position) -> bool {
        use TokenKind as T;
        if c.is_ascii_lowercase() {
            let w = self.word();
            self.push(T::LowerWord(w), start, position);
            return true;
        }
        if c.is_ascii_uppercase() {
            let w = self.word();
            self.push(T::UpperWord(w), start, position);
            return true;
        }
        if c.is_ascii_digit()
            || ((c == '-' || c == '+') && self.peek_at(1).is_some_and(|d| d.is_ascii_digit()))
        {
            let n = self.number();
            self.push(T::Number(n), start, position);
            return true;
        }
        if c == '$' {
            self.bump();
            let double = if self.peek() == Some('$') {
                self.bump();
                true
            } else {
                false
            };
            if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                self.errors.push(LexError::IllegalCharacter { found: '$', position });
                self.push(T::Error('$'), start, position);
                return true;
            }
            self.word();
            let text = self.src[start..self.offset()].to_string();
            let kind = if double {
                T::DollarDollarWord(text)
            } else {
                T::DollarWord(text)
            };
            self.push(kind, start, position);
            return true;
        }
        if c == '\'' {
            return match self.quoted('\'', position) {
                Some(_) => {
                    let text = self.src[start..self.offset()].to_string();
                    self.push(T::SingleQuoted(text), start, position);
                    true
                }
                None => false,
            };
        }
        if c == '"' {
            return match self.quoted('"', position) {
                Some(body) => {
                    self.push(T::DistinctObject(body), start, position);
                    true
                }
                None => false,
            };
        }
        if c == '{' && self.peek_at(1) == Some('$') {
            // {$name}
            let save = (self.idx, self.line, self.column);
            self.bump();
            self.bump();
            let name = self.word();
            if !name.is_empty() && self.peek() == Some('}') {
                self.bump();
                self.push(T::ModalName(name), start, position);
                return true;
            }
            (self.idx, self.line, self.column) = save;
        }
        const OPERATORS: &[(&str, TokenKind)] = &[
            ("<=>", TokenKind::Iff),
            ("<~>", TokenKind::Xor),
            ("<=", TokenKind::ImpliedBy),
            ("=>", TokenKind::Implies),
            ("==", TokenKind::Assign),
            ("=", TokenKind::Eq),
            ("!=", TokenKind::Neq),
            ("!>", TokenKind::PiQuant),
            ("!", TokenKind::Forall),
            ("?*", TokenKind::SigmaQuant),
            ("?", TokenKind::Exists),
            ("~|", TokenKind::Nor),
            ("~&", TokenKind::Nand),
            ("~", TokenKind::Tilde),
            ("@+", TokenKind::Choice),
            ("@-", TokenKind::Description),
            ("@", TokenKind::Apply),
            ("|", TokenKind::Or),
            ("&", TokenKind::And),
            ("^", TokenKind::Lambda),
            (">", TokenKind::Arrow),
            ("*", TokenKind::Star),
            ("+", TokenKind::Plus),
            ("-", TokenKind::Minus),
            ("(", TokenKind::LParen),
            (")", TokenKind::RParen),
            ("[", TokenKind::LBracket),
            ("]", TokenKind::RBracket),
            ("{", TokenKind::LBrace),
            ("}", TokenKind::RBrace),
            (",", TokenKind::Comma),
            (".", TokenKind::Dot),
            (":", TokenKind::Colon),
        ];
        for (text, kind) in OPERATORS {
            if self.starts_with(text) {
                for _ in 0..text.chars().count() {
                    self.bump();
                }
                self.push(kind.clone(), start, position);
                return true;
            }
        }
        self.bump();
        self.errors.push(LexError::IllegalCharacter { found: c, position });
        self.push(T::Error(c), start, position);
        true
    }
}
