//! Splitting and merging interpretation-formulae: one coarse unit, medium
//! units per component class, or fine units per domain and per symbol.

use std::fmt;
use std::str::FromStr;

use crate::syntax::{AnnotatedFormula, BaseRole, Formula, Role, Subrole, Term, TypeExpr, TypedVar, UnitBody};

use super::assemble::{assemble, AssemblyError, Classified, Subject};
use super::classify::{ComponentKind, WorldScope, WORLD_TYPE};
use super::legacy::upgrade_legacy;
use super::model::{Interpretation, TarskianInterpretation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Granularity {
    Coarse,
    Medium,
    Fine,
}

impl Granularity {
    pub const ALL: [Granularity; 3] = [Granularity::Coarse, Granularity::Medium, Granularity::Fine];
}

impl fmt::Display for Granularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Granularity::Coarse => "coarse",
            Granularity::Medium => "medium",
            Granularity::Fine => "fine",
        })
    }
}

impl FromStr for Granularity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "coarse" => Ok(Granularity::Coarse),
            "medium" => Ok(Granularity::Medium),
            "fine" => Ok(Granularity::Fine),
            other => Err(format!("unknown granularity {:?} (expected coarse, medium or fine)", other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Group {
    All,
    Worlds,
    Domains,
    Mappings,
    Domain(String),
    Symbol(String),
    Constraints,
}

impl Group {
    fn rank(&self) -> u8 {
        match self {
            Group::All => 0,
            Group::Worlds => 1,
            Group::Domains | Group::Domain(_) => 2,
            Group::Mappings | Group::Symbol(_) => 3,
            Group::Constraints => 4,
        }
    }
}

fn group_of(c: &Classified, target: Granularity) -> Group {
    match target {
        Granularity::Coarse => Group::All,
        Granularity::Medium => match &c.subject {
            Subject::Worlds => Group::Worlds,
            Subject::Domain(_) => Group::Domains,
            Subject::Symbol(_) => Group::Mappings,
            Subject::None => Group::Constraints,
        },
        Granularity::Fine => match &c.subject {
            Subject::Worlds => Group::Worlds,
            Subject::Domain(pt) => Group::Domain(pt.clone()),
            Subject::Symbol(s) => Group::Symbol(s.clone()),
            Subject::None => Group::Constraints,
        },
    }
}

/// Rewrites the interpretation-formulae among `units` at the target
/// granularity. Other units keep their positions; the new interpretation
/// units take the place of the first old one. Herbrand units are kept as is.
pub fn regrain(units: &[AnnotatedFormula], target: Granularity) -> Result<Vec<AnnotatedFormula>, AssemblyError> {
    let units = upgrade_legacy(units);
    let (interp, report) = assemble(&units)?;
    let is_regrained = |u: &AnnotatedFormula| u.role.base == BaseRole::Interpretation && u.role.subrole != Some(Subrole::Herbrand);
    let Some(first) = units.iter().find(|u| is_regrained(u)) else {
        return Ok(units);
    };
    let base = first.name.clone();

    let mut groups: Vec<(Group, Vec<&Classified>)> = Vec::new();
    for c in report.components() {
        if c.kind == ComponentKind::HerbrandFormula {
            continue;
        }
        let g = group_of(c, target);
        match groups.iter_mut().find(|(h, _)| *h == g) {
            Some((_, items)) => items.push(c),
            None => groups.push((g, vec![c])),
        }
    }
    groups.sort_by_key(|(g, _)| g.rank());

    let mut names: Vec<String> = Vec::new();
    let mut generated = Vec::new();
    for (group, items) in &groups {
        let language = items[0].language;
        let formula = wrap_scopes(items);
        let (suffix, role) = role_for(group, &interp);
        let mut name = match suffix {
            Some(s) => format!("{}_{}", base, s),
            None => base.clone(),
        };
        let stem = name.clone();
        let mut n = 2;
        while names.contains(&name) {
            name = format!("{}_{}", stem, n);
            n += 1;
        }
        names.push(name.clone());
        generated.push(AnnotatedFormula::new(language, &name, role, UnitBody::Formula(formula)));
    }

    let mut out = Vec::new();
    let mut placed = false;
    for u in &units {
        if is_regrained(u) {
            if !placed {
                out.append(&mut generated);
                placed = true;
            }
        } else {
            out.push(u.clone());
        }
    }
    Ok(out)
}

fn role_for(group: &Group, interp: &Interpretation) -> (Option<String>, Role) {
    let interp_role = |sub| Role::with_subrole(BaseRole::Interpretation, sub);
    match group {
        Group::All => (None, Role::new(BaseRole::Interpretation)),
        Group::Worlds => (Some("worlds".into()), interp_role(Subrole::Worlds)),
        Group::Domains => (Some("domains".into()), interp_role(Subrole::Domains)),
        Group::Mappings => (Some("mappings".into()), interp_role(Subrole::Mappings)),
        Group::Constraints => (Some("constraints".into()), Role::new(BaseRole::Interpretation)),
        Group::Domain(pt) => {
            let name = Some(format!("domain_{}", sanitize(pt)));
            match tarskian_views(interp).find_map(|t| t.domains.get(pt)) {
                Some(d) => (
                    name,
                    Role::with_args(BaseRole::Interpretation, Subrole::Domains, pt, &d.domain_type),
                ),
                None => (name, interp_role(Subrole::Domains)),
            }
        }
        Group::Symbol(s) => {
            let name = Some(format!("mapping_{}", sanitize(s)));
            match tarskian_views(interp).find_map(|t| t.mappings.get(s)) {
                Some(m) => (
                    name,
                    Role::with_args(BaseRole::Interpretation, Subrole::Mappings, s, &m.result_type),
                ),
                None => (name, interp_role(Subrole::Mappings)),
            }
        }
    }
}

fn tarskian_views(interp: &Interpretation) -> Box<dyn Iterator<Item = &TarskianInterpretation> + '_> {
    match interp {
        Interpretation::Tarskian(t) => Box::new(std::iter::once(t)),
        Interpretation::Kripke(k) => Box::new(k.per_world.values().map(|w| &w.tarskian)),
    }
}

fn sanitize(s: &str) -> String {
    let out: String = s
        .chars()
        .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
        .collect::<String>()
        .trim_start_matches('_')
        .to_string();
    if out.is_empty() {
        "x".to_string()
    } else {
        out.to_ascii_lowercase()
    }
}

/// Conjoins the items, regrouping conjuncts that live inside `$in_world`
/// wrappers by world scope.
fn wrap_scopes(items: &[&Classified]) -> Formula {
    let mut parts: Vec<(Option<WorldScope>, Vec<Formula>)> = Vec::new();
    for c in items {
        match parts.iter_mut().find(|(s, _)| *s == c.scope) {
            Some((_, fs)) => fs.push(c.formula.clone()),
            None => parts.push((c.scope.clone(), vec![c.formula.clone()])),
        }
    }
    let mut conjuncts = Vec::new();
    for (scope, fs) in parts {
        match scope {
            None => conjuncts.extend(fs),
            Some(WorldScope::One(w)) => conjuncts.push(Formula::InWorld {
                world: Term::constant(&w),
                body: Box::new(Formula::conjunction(fs)),
            }),
            Some(WorldScope::All) => conjuncts.push(Formula::forall(
                vec![TypedVar::new("W", Some(TypeExpr::named(WORLD_TYPE)))],
                Formula::InWorld {
                    world: Term::var("W"),
                    body: Box::new(Formula::conjunction(fs)),
                },
            )),
        }
    }
    Formula::conjunction(conjuncts)
}
