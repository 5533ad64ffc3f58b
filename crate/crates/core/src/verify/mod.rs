//! Verification of interpretations: declaration and structure checks,
//! model checking by direct evaluation, and emission of verification
//! problems for external provers.

mod emit;
mod structure;
mod typecheck;

use std::fmt;

use crate::diag::Diagnostic;
use crate::eval::{eval_problem, ProblemEvaluation, Reason};
use crate::interp::{assemble, DomainElements, Interpretation};
use crate::szs::SzsStatus;
use crate::syntax::AnnotatedFormula;

pub use emit::{
    emit_kripke_verification_problem, emit_satisfiability_problem, emit_verification_problem, is_modal_problem,
    EmitError, EmitOptions, Flavor, VerificationProblem,
};
pub use structure::interpretation_diagnostics;
pub use typecheck::type_check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Parse,
    TypeCheck,
    Structure,
    /// Agreement with the model finder's own model; cannot be confirmed
    /// from the outside.
    FinderValidation,
    SatisfiabilityEmitted,
    ModelChecked,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Parse => "parse",
            Stage::TypeCheck => "type_check",
            Stage::Structure => "structure",
            Stage::FinderValidation => "finder_validation",
            Stage::SatisfiabilityEmitted => "satisfiability_emitted",
            Stage::ModelChecked => "model_checked",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Passed,
    Failed,
    Undecided,
    NotCheckable,
    Emitted,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Passed => "passed",
            Outcome::Failed => "failed",
            Outcome::Undecided => "undecided",
            Outcome::NotCheckable => "not checkable",
            Outcome::Emitted => "emitted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageResult {
    pub stage: Stage,
    pub outcome: Outcome,
    pub diagnostics: Vec<Diagnostic>,
}

impl StageResult {
    /// Failed when any diagnostic is an error, passed otherwise.
    pub fn from_diagnostics(stage: Stage, diagnostics: Vec<Diagnostic>) -> StageResult {
        let outcome = if diagnostics.iter().any(Diagnostic::is_error) {
            Outcome::Failed
        } else {
            Outcome::Passed
        };
        StageResult {
            stage,
            outcome,
            diagnostics,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub stages: Vec<StageResult>,
    /// None when only structure was checked and nothing failed.
    pub szs: Option<SzsStatus>,
    pub evaluation: Option<ProblemEvaluation>,
    pub gave_up_reason: Option<Reason>,
    /// Obligations for an external prover, attached when direct evaluation
    /// could not decide.
    pub verification_problem: Option<VerificationProblem>,
    pub satisfiability_problem: Option<VerificationProblem>,
}

impl CheckReport {
    pub fn stage(&self, stage: Stage) -> Option<&StageResult> {
        self.stages.iter().find(|s| s.stage == stage)
    }

    pub fn diagnostics(&self) -> impl Iterator<Item = &Diagnostic> {
        self.stages.iter().flat_map(|s| s.diagnostics.iter())
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics().any(Diagnostic::is_error)
    }
}

/// Declaration checks on typed units and structure checks on the
/// interpretation-formulae among `units`.
pub fn check_structure(units: &[AnnotatedFormula]) -> CheckReport {
    let mut report = CheckReport {
        stages: vec![
            StageResult::from_diagnostics(Stage::TypeCheck, type_check(units)),
            StageResult::from_diagnostics(Stage::Structure, interpretation_diagnostics(units)),
        ],
        ..CheckReport::default()
    };
    if report.has_errors() {
        report.szs = Some(SzsStatus::Error);
    }
    report
}

/// Checks that the interpretation is a (counter)model of the problem.
/// Finite models are evaluated directly; otherwise the status is GaveUp and
/// the report carries a verification problem.
pub fn check_model(problem: &[AnnotatedFormula], interp_units: &[AnnotatedFormula]) -> CheckReport {
    let all: Vec<AnnotatedFormula> = problem.iter().chain(interp_units).cloned().collect();
    let mut report = check_structure(&all);
    report.szs = None;
    report.stages.push(StageResult {
        stage: Stage::FinderValidation,
        outcome: Outcome::NotCheckable,
        diagnostics: vec![Diagnostic::warning(
            crate::diag::DiagnosticKind::NotCheckable,
            "agreement with the model finder's internal model cannot be confirmed externally",
        )],
    });
    report.satisfiability_problem = Some(emit_satisfiability_problem(problem, interp_units));
    report.stages.push(StageResult {
        stage: Stage::SatisfiabilityEmitted,
        outcome: Outcome::Emitted,
        diagnostics: Vec::new(),
    });

    let interp = match assemble(interp_units) {
        Ok((i, _)) => i,
        Err(_) => {
            report.szs = Some(SzsStatus::Error);
            return report;
        }
    };
    let emitted = || {
        if is_modal_problem(problem) {
            emit_kripke_verification_problem(problem, interp_units, EmitOptions::default())
        } else {
            emit_verification_problem(problem, interp_units, EmitOptions::default())
        }
        .ok()
    };

    if let Some(reason) = undecidable(&interp) {
        report.szs = Some(SzsStatus::GaveUp);
        report.gave_up_reason = Some(reason);
        report.verification_problem = emitted();
        return report;
    }

    let evaluation = eval_problem(problem, &interp);
    let outcome = match evaluation.status {
        SzsStatus::GaveUp => Outcome::Undecided,
        SzsStatus::Error => Outcome::Failed,
        _ => Outcome::Passed,
    };
    report.stages.push(StageResult {
        stage: Stage::ModelChecked,
        outcome,
        diagnostics: Vec::new(),
    });
    report.szs = Some(evaluation.status);
    if evaluation.status == SzsStatus::GaveUp {
        report.gave_up_reason = evaluation.gave_up_reason().cloned();
        report.verification_problem = emitted();
    }
    report.evaluation = Some(evaluation);
    report
}

/// Why direct evaluation is not attempted: an infinite domain, or a
/// Herbrand interpretation.
fn undecidable(interp: &Interpretation) -> Option<Reason> {
    let tarskians: Vec<_> = match interp {
        Interpretation::Tarskian(t) => vec![t],
        Interpretation::Kripke(k) => k.per_world.values().map(|w| &w.tarskian).collect(),
    };
    for t in tarskians {
        if let Some(d) = t.domains.values().find(|d| !d.is_finite()) {
            let ty = match &d.elements {
                DomainElements::Infinite(crate::interp::InfiniteDescriptor::Builtin(b)) => b.clone(),
                _ => d.problem_type.clone(),
            };
            return Some(Reason::InfiniteQuantifier { ty });
        }
        if t.herbrand {
            return Some(Reason::Unsupported("evaluation of Herbrand interpretations".into()));
        }
    }
    None
}
