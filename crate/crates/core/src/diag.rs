//! Diagnostics shared by the parser, the assembler and the structure checks.

use std::fmt;

/// 1-based line/column of the first character of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl Position {
    pub fn new(line: usize, column: usize) -> Self {
        Position { line, column }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Warning => f.write_str("warning"),
            Severity::Error => f.write_str("error"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticKind {
    // lexing and parsing
    SyntaxError,
    UnterminatedQuote,
    IllegalCharacter,
    UnknownRole,
    UnknownSubrole,
    MalformedArgs,
    Unsupported,
    // typing
    UndeclaredSymbol,
    UndeclaredType,
    ArityMismatch,
    // interpretation structure
    DistinctnessUnstated,
    PromotionNotSurjective,
    PromotionNotInjective,
    WorldsNotDistinct,
    WorldNotTyped,
    ContradictoryAccessibility,
    SubroleMismatch,
    Unclassified,
    Assembly,
    NotCheckable,
}

impl DiagnosticKind {
    pub fn name(self) -> &'static str {
        match self {
            DiagnosticKind::SyntaxError => "SyntaxError",
            DiagnosticKind::UnterminatedQuote => "UnterminatedQuote",
            DiagnosticKind::IllegalCharacter => "IllegalCharacter",
            DiagnosticKind::UnknownRole => "UnknownRole",
            DiagnosticKind::UnknownSubrole => "UnknownSubrole",
            DiagnosticKind::MalformedArgs => "MalformedArgs",
            DiagnosticKind::Unsupported => "Unsupported",
            DiagnosticKind::UndeclaredSymbol => "UndeclaredSymbol",
            DiagnosticKind::UndeclaredType => "UndeclaredType",
            DiagnosticKind::ArityMismatch => "ArityMismatch",
            DiagnosticKind::DistinctnessUnstated => "DistinctnessUnstated",
            DiagnosticKind::PromotionNotSurjective => "PromotionNotSurjective",
            DiagnosticKind::PromotionNotInjective => "PromotionNotInjective",
            DiagnosticKind::WorldsNotDistinct => "WorldsNotDistinct",
            DiagnosticKind::WorldNotTyped => "WorldNotTyped",
            DiagnosticKind::ContradictoryAccessibility => "ContradictoryAccessibility",
            DiagnosticKind::SubroleMismatch => "SubroleMismatch",
            DiagnosticKind::Unclassified => "Unclassified",
            DiagnosticKind::Assembly => "Assembly",
            DiagnosticKind::NotCheckable => "NotCheckable",
        }
    }
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub position: Option<Position>,
    /// Name of the annotated formula the diagnostic is about, when known.
    pub unit: Option<String>,
    pub message: String,
}

impl Diagnostic {
    pub fn error(kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            kind,
            position: None,
            unit: None,
            message: message.into(),
        }
    }

    pub fn warning(kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            ..Diagnostic::error(kind, message)
        }
    }

    pub fn at(mut self, position: Position) -> Self {
        self.position = Some(position);
        self
    }

    pub fn in_unit(mut self, name: impl Into<String>) -> Self {
        self.unit = Some(name.into());
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(pos) = self.position {
            write!(f, "{}: ", pos)?;
        }
        write!(f, "{}[{}]", self.severity, self.kind)?;
        if let Some(unit) = &self.unit {
            write!(f, " in {}", unit)?;
        }
        write!(f, ": {}", self.message)
    }
}
