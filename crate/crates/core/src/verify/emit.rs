//! Verification problems for external theorem provers: the problem
//! formulae become proof obligations from the interpretation-formulae.

use thiserror::Error;

use crate::syntax::{
    print_units, AnnotatedFormula, BaseRole, Formula, Language, LogicSpecification, LogicTerm, Role, Subrole,
    TypedVar, UnitBody, FOML_MODEL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Tarskian,
    KripkeFoml,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmitOptions {
    /// Emit one conjoined goal (per subrole) instead of one goal per
    /// obligation.
    pub conjoin_goals: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmitError {
    #[error("the problem has no logic specification")]
    MissingLogicSpec,
    #[error("unit {0} uses modal operators; emit a Kripke verification problem instead")]
    ModalProblem(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationProblem {
    pub units: Vec<AnnotatedFormula>,
    pub flavor: Flavor,
    pub logic_header: Option<LogicSpecification>,
}

impl VerificationProblem {
    pub fn to_text(&self) -> String {
        print_units(&self.units)
    }

    pub fn goals(&self) -> impl Iterator<Item = &AnnotatedFormula> {
        self.units.iter().filter(|u| u.role.base == BaseRole::Conjecture)
    }
}

/// True if the problem needs the Kripke form: it has a logic specification
/// or uses modal operators.
pub fn is_modal_problem(units: &[AnnotatedFormula]) -> bool {
    units.iter().any(|u| {
        u.role.base == BaseRole::Logic || u.formula().is_some_and(Formula::has_modal)
    })
}

/// Interpretation units become axioms (type declarations are kept); each
/// problem axiom and the negated conjecture become conjectures.
pub fn emit_verification_problem(
    problem: &[AnnotatedFormula],
    interp: &[AnnotatedFormula],
    opts: EmitOptions,
) -> Result<VerificationProblem, EmitError> {
    if let Some(u) = problem.iter().find(|u| u.formula().is_some_and(Formula::has_modal)) {
        return Err(EmitError::ModalProblem(u.name.clone()));
    }
    let mut units: Vec<AnnotatedFormula> = interp.iter().map(interp_as_axiom).collect();
    let mut goals = Vec::new();
    for u in problem {
        match goal_formula(u) {
            Some(f) => goals.push(goal_unit(u, f, Role::new(BaseRole::Conjecture))),
            None => units.push(u.clone()),
        }
    }
    units.extend(package_goals(goals, opts));
    Ok(VerificationProblem {
        units,
        flavor: Flavor::Tarskian,
        logic_header: None,
    })
}

/// The modal form: a single `$$fomlModel` logic specification, the
/// interpretation units as axioms, global problem axioms as
/// `conjecture-global` and local ones (and the negated conjecture) as
/// `conjecture-local`.
pub fn emit_kripke_verification_problem(
    problem: &[AnnotatedFormula],
    interp: &[AnnotatedFormula],
    opts: EmitOptions,
) -> Result<VerificationProblem, EmitError> {
    let logic = problem
        .iter()
        .find(|u| u.role.base == BaseRole::Logic)
        .ok_or(EmitError::MissingLogicSpec)?;
    let header = AnnotatedFormula::new(
        Language::Tff,
        &logic.name,
        Role::new(BaseRole::Logic),
        UnitBody::Logic(LogicTerm::Word(FOML_MODEL.to_string())),
    );
    let mut units = vec![header.clone()];
    units.extend(
        interp
            .iter()
            .filter(|u| u.role.base != BaseRole::Logic)
            .map(interp_as_axiom),
    );
    let mut goals = Vec::new();
    for u in problem {
        if u.role.base == BaseRole::Logic {
            continue;
        }
        let Some(f) = goal_formula(u) else {
            units.push(u.clone());
            continue;
        };
        let global = match u.role.base {
            BaseRole::Conjecture => u.role.subrole == Some(Subrole::Global),
            BaseRole::NegatedConjecture => false,
            _ => u.role.subrole != Some(Subrole::Local),
        };
        let sub = if global { Subrole::Global } else { Subrole::Local };
        goals.push(goal_unit(u, f, Role::with_subrole(BaseRole::Conjecture, sub)));
    }
    units.extend(package_goals(goals, opts));
    Ok(VerificationProblem {
        units,
        flavor: Flavor::KripkeFoml,
        logic_header: header.logic_spec(),
    })
}

/// A combined problem for a model finder: interpretation and problem axioms
/// together with the negated conjecture, all as axioms. A model of it
/// shows the interpretation-formulae are satisfiable alongside the
/// problem's countermodel requirements.
pub fn emit_satisfiability_problem(problem: &[AnnotatedFormula], interp: &[AnnotatedFormula]) -> VerificationProblem {
    let mut units: Vec<AnnotatedFormula> = interp.iter().map(interp_as_axiom).collect();
    let mut logic_header = None;
    for u in problem {
        match (&u.role.base, u.formula()) {
            (BaseRole::Logic, _) => {
                logic_header = u.logic_spec();
                units.insert(0, u.clone());
            }
            (BaseRole::Conjecture, Some(f)) => {
                let mut role = Role::new(BaseRole::Axiom);
                role.subrole = u.role.subrole.clone();
                units.push(goal_unit(u, Formula::not(f.clone()), role));
            }
            _ => units.push(u.clone()),
        }
    }
    let flavor = if logic_header.is_some() {
        Flavor::KripkeFoml
    } else {
        Flavor::Tarskian
    };
    VerificationProblem {
        units,
        flavor,
        logic_header,
    }
}

fn interp_as_axiom(u: &AnnotatedFormula) -> AnnotatedFormula {
    if u.role.is_interpretation() {
        AnnotatedFormula {
            role: Role::new(BaseRole::Axiom),
            ..u.clone()
        }
    } else {
        u.clone()
    }
}

/// The obligation a problem unit gives rise to, if any.
fn goal_formula(u: &AnnotatedFormula) -> Option<Formula> {
    let f = u.formula()?;
    match u.role.base {
        BaseRole::Conjecture => Some(Formula::not(f.clone())),
        ref b if b.is_axiom_like() => Some(f.clone()),
        _ => None,
    }
}

/// Clause-form obligations are closed and restated in first-order form.
fn goal_unit(u: &AnnotatedFormula, f: Formula, role: Role) -> AnnotatedFormula {
    let (language, f) = if u.language == Language::Cnf {
        let free = f.free_vars();
        let closed = if free.is_empty() {
            f
        } else {
            Formula::forall(free.iter().map(|v| TypedVar::new(v, None)).collect(), f)
        };
        (Language::Fof, closed)
    } else {
        (u.language, f)
    };
    AnnotatedFormula::new(language, &u.name, role, UnitBody::Formula(f))
}

fn package_goals(goals: Vec<AnnotatedFormula>, opts: EmitOptions) -> Vec<AnnotatedFormula> {
    if !opts.conjoin_goals || goals.len() < 2 {
        return goals;
    }
    let mut groups: Vec<(Role, Vec<AnnotatedFormula>)> = Vec::new();
    for g in goals {
        match groups.iter_mut().find(|(r, _)| *r == g.role) {
            Some((_, items)) => items.push(g),
            None => groups.push((g.role.clone(), vec![g])),
        }
    }
    let several = groups.len() > 1;
    groups
        .into_iter()
        .map(|(role, items)| {
            let language = items.iter().map(|g| g.language).max_by_key(|l| rank(*l)).unwrap_or(Language::Fof);
            let name = match (&role.subrole, several) {
                (Some(sub), true) => format!("verification_goals_{}", sub.as_str()),
                _ => "verification_goals".to_string(),
            };
            let body = Formula::conjunction(items.into_iter().filter_map(|g| g.formula().cloned()));
            AnnotatedFormula::new(language, &name, role, UnitBody::Formula(body))
        })
        .collect()
}

fn rank(l: Language) -> u8 {
    match l {
        Language::Cnf => 0,
        Language::Fof => 1,
        Language::Tff => 2,
        Language::Thf => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_file;

    fn units(text: &str) -> Vec<AnnotatedFormula> {
        let out = parse_file(text);
        assert!(out.diagnostics.is_empty(), "{:?}", out.diagnostics);
        out.units
    }

    const MODEL: &str = "fof(m,interpretation,( ( ! [X] : X = \"a\" ) & p(\"a\") )).";

    #[test]
    fn axioms_and_negated_conjecture_become_goals() {
        let vp = emit_verification_problem(
            &units("fof(a,axiom,? [X] : p(X)).\nfof(c,conjecture,~ p(\"a\"))."),
            &units(MODEL),
            EmitOptions::default(),
        )
        .unwrap();
        let text = vp.to_text();
        assert!(text.contains("fof(m,axiom,"), "{}", text);
        assert!(text.contains("fof(a,conjecture,"), "{}", text);
        assert!(text.contains("fof(c,conjecture,\n    ~ ~ p(\"a\") )."), "{}", text);
        assert_eq!(vp.goals().count(), 2);
        let back = parse_file(&text);
        assert!(back.diagnostics.is_empty());
        assert_eq!(back.units.len(), 3);
    }

    #[test]
    fn empty_problem_has_no_goals() {
        let vp = emit_verification_problem(&[], &units(MODEL), EmitOptions::default()).unwrap();
        assert_eq!(vp.goals().count(), 0);
    }

    #[test]
    fn conjoined_goals() {
        let vp = emit_verification_problem(
            &units("fof(a,axiom,? [X] : p(X)).\nfof(c,conjecture,~ p(\"a\"))."),
            &units(MODEL),
            EmitOptions { conjoin_goals: true },
        )
        .unwrap();
        assert_eq!(vp.goals().count(), 1);
        assert!(parse_file(&vp.to_text()).diagnostics.is_empty());
    }

    #[test]
    fn clauses_are_closed() {
        let vp = emit_verification_problem(&units("cnf(a,axiom,p(X) | q(X))."), &units(MODEL), EmitOptions::default()).unwrap();
        assert!(vp.to_text().contains("fof(a,conjecture,\n    ! [X] : ( p(X) | q(X) ) )."), "{}", vp.to_text());
    }

    #[test]
    fn modal_problem_needs_the_kripke_form() {
        let p = units("tff(c,conjecture,{$box} @ ( p )).");
        assert!(matches!(
            emit_verification_problem(&p, &units(MODEL), EmitOptions::default()),
            Err(EmitError::ModalProblem(_))
        ));
        assert_eq!(
            emit_kripke_verification_problem(&p, &[], EmitOptions::default()),
            Err(EmitError::MissingLogicSpec)
        );
    }
}
