//! Reading, assembling, evaluating and verifying TPTP interpretations.

pub mod diag;
pub mod eval;
pub mod graph;
pub mod interp;
pub mod syntax;
pub mod szs;
pub mod verify;
