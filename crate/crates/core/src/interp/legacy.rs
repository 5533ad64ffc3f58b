//! Upgrade of the older finite-interpretation roles.

use crate::syntax::{AnnotatedFormula, BaseRole, Role, Subrole};

/// Rewrites `fi_domain` to `interpretation-domains` and `fi_functors` /
/// `fi_predicates` to `interpretation-mappings`. Other units are unchanged.
pub fn upgrade_legacy(units: &[AnnotatedFormula]) -> Vec<AnnotatedFormula> {
    units.iter().map(upgrade_unit).collect()
}

pub fn upgrade_unit(unit: &AnnotatedFormula) -> AnnotatedFormula {
    let subrole = match unit.role.base {
        BaseRole::FiDomain => Subrole::Domains,
        BaseRole::FiFunctors | BaseRole::FiPredicates => Subrole::Mappings,
        _ => return unit.clone(),
    };
    AnnotatedFormula {
        role: Role::with_subrole(BaseRole::Interpretation, subrole),
        ..unit.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_file, print_unit};

    #[test]
    fn roles_map_to_subroles() {
        let out = parse_file(
            "fof(d,fi_domain,$true).\nfof(f,fi_functors,$true).\nfof(p,fi_predicates,$true).\nfof(a,axiom,$true).",
        );
        let printed: Vec<String> = upgrade_legacy(&out.units).iter().map(print_unit).collect();
        assert_eq!(
            printed,
            vec![
                "fof(d,interpretation-domains,\n    $true ).",
                "fof(f,interpretation-mappings,\n    $true ).",
                "fof(p,interpretation-mappings,\n    $true ).",
                "fof(a,axiom,\n    $true ).",
            ]
        );
    }
}
