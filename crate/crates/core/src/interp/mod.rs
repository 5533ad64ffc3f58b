//! Interpretations: classification of interpretation-formula components,
//! assembly into Tarskian and Kripke models, granularity changes and the
//! legacy-role upgrade.

pub mod assemble;
pub mod classify;
pub mod complete;
pub mod legacy;
pub mod model;
pub mod normalize;
pub mod pattern;
pub mod regrain;

pub use assemble::{assemble, AssemblyError, AssemblyReport, Classified, Subject};
pub use classify::{classify_component, recognize, ClassifyContext, Component, ComponentKind, WorldScope};
pub use complete::{completeness_check, MissingEntry};
pub use legacy::upgrade_legacy;
pub use model::*;
pub use regrain::{regrain, Granularity};
