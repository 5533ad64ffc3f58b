//! Lexing, parsing and canonical printing of TPTP annotated formulae.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod role;
mod thf;

pub use ast::*;
pub use parser::{parse_file, parse_formula, parse_term, parse_type, ParseOutput};
pub use printer::{print_formula, print_term, print_type, print_unit, print_units};
pub use role::{parse_role, BaseRole, Role, RoleError, RoleWarning, Subrole};
