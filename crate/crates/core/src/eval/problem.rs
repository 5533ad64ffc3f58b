use crate::interp::Interpretation;
use crate::szs::SzsStatus;
use crate::syntax::{AnnotatedFormula, BaseRole, Formula, Role, Subrole, TypedVar};

use super::{eval_at_world, eval_formula, Environment, Reason, Verdict};

/// What a problem unit demands of a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obligation {
    /// Must hold; under Kripke semantics in every world when `global`,
    /// otherwise in the local world.
    Axiom { global: bool },
    Conjecture { global: bool },
    NegatedConjecture { global: bool },
}

impl Obligation {
    pub fn of_role(role: &Role) -> Option<Obligation> {
        let sub = role.subrole.as_ref();
        match role.base {
            BaseRole::Conjecture => Some(Obligation::Conjecture {
                global: sub == Some(&Subrole::Global),
            }),
            BaseRole::NegatedConjecture => Some(Obligation::NegatedConjecture {
                global: sub != Some(&Subrole::Local),
            }),
            ref b if b.is_axiom_like() => Some(Obligation::Axiom {
                global: sub != Some(&Subrole::Local),
            }),
            _ => None,
        }
    }

    pub fn is_global(self) -> bool {
        match self {
            Obligation::Axiom { global } | Obligation::Conjecture { global } | Obligation::NegatedConjecture { global } => {
                global
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitVerdict {
    pub name: String,
    pub role: Role,
    pub obligation: Obligation,
    pub verdict: Verdict,
    /// Under Kripke semantics, the world that decided the verdict.
    pub world: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemEvaluation {
    pub verdicts: Vec<UnitVerdict>,
    pub status: SzsStatus,
}

impl ProblemEvaluation {
    /// The reason of the first unknown verdict.
    pub fn gave_up_reason(&self) -> Option<&Reason> {
        self.verdicts
            .iter()
            .find(|v| v.verdict.is_unknown())
            .and_then(|v| v.verdict.reason.as_ref())
    }
}

/// Evaluates every axiom-like unit and conjecture of the problem.
///
/// The status is Error when an asserted unit is false (the interpretation
/// is not a model of them), GaveUp when a verdict is unknown,
/// CounterSatisfiable when the conjecture is false or a negated conjecture
/// holds, and Satisfiable otherwise.
pub fn eval_problem(units: &[AnnotatedFormula], interp: &Interpretation) -> ProblemEvaluation {
    let mut verdicts = Vec::new();
    for u in units {
        let (Some(obligation), Some(f)) = (Obligation::of_role(&u.role), u.formula()) else {
            continue;
        };
        let f = universal_closure(f);
        let (verdict, world) = match interp {
            Interpretation::Tarskian(t) => (eval_formula(&f, t, &Environment::new()), None),
            Interpretation::Kripke(k) if obligation.is_global() => {
                let mut acc = (Verdict::truth(true), None);
                for w in &k.worlds {
                    let v = eval_at_world(&f, k, w);
                    if v.is_false() {
                        acc = (v, Some(w.clone()));
                        break;
                    }
                    if v.is_unknown() && !acc.0.is_unknown() {
                        acc = (v, Some(w.clone()));
                    }
                }
                acc
            }
            Interpretation::Kripke(k) => match &k.local_world {
                Some(w) => (eval_at_world(&f, k, w), Some(w.clone())),
                None => (Verdict::unknown(Reason::MissingLocalWorld), None),
            },
        };
        verdicts.push(UnitVerdict {
            name: u.name.clone(),
            role: u.role.clone(),
            obligation,
            verdict,
            world,
        });
    }
    let status = status_of(&verdicts);
    ProblemEvaluation { verdicts, status }
}

fn status_of(verdicts: &[UnitVerdict]) -> SzsStatus {
    let asserted = |v: &&UnitVerdict| !matches!(v.obligation, Obligation::Conjecture { .. });
    if verdicts.iter().filter(asserted).any(|v| v.verdict.is_false()) {
        return SzsStatus::Error;
    }
    if verdicts.iter().any(|v| v.verdict.is_unknown()) {
        return SzsStatus::GaveUp;
    }
    let conjecture_false = verdicts
        .iter()
        .any(|v| matches!(v.obligation, Obligation::Conjecture { .. }) && v.verdict.is_false());
    let negated_holds = verdicts
        .iter()
        .any(|v| matches!(v.obligation, Obligation::NegatedConjecture { .. }));
    if conjecture_false || negated_holds {
        SzsStatus::CounterSatisfiable
    } else {
        SzsStatus::Satisfiable
    }
}

/// Binds free variables (as in clause form) universally.
fn universal_closure(f: &Formula) -> Formula {
    let free = f.free_vars();
    if free.is_empty() {
        f.clone()
    } else {
        Formula::forall(free.iter().map(|v| TypedVar::new(v, None)).collect(), f.clone())
    }
}
