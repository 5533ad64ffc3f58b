//! SZS status values and the status line printed for them.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SzsStatus {
    Satisfiable,
    CounterSatisfiable,
    Theorem,
    GaveUp,
    Error,
    /// A transformation whose models extend the models of its input.
    ModelExtending,
}

impl SzsStatus {
    pub const ALL: [SzsStatus; 6] = [
        SzsStatus::Satisfiable,
        SzsStatus::CounterSatisfiable,
        SzsStatus::Theorem,
        SzsStatus::GaveUp,
        SzsStatus::Error,
        SzsStatus::ModelExtending,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SzsStatus::Satisfiable => "Satisfiable",
            SzsStatus::CounterSatisfiable => "CounterSatisfiable",
            SzsStatus::Theorem => "Theorem",
            SzsStatus::GaveUp => "GaveUp",
            SzsStatus::Error => "Error",
            SzsStatus::ModelExtending => "ModelExtending",
        }
    }

    /// The three-letter ontology abbreviation.
    pub fn abbreviation(self) -> &'static str {
        match self {
            SzsStatus::Satisfiable => "SAT",
            SzsStatus::CounterSatisfiable => "CSA",
            SzsStatus::Theorem => "THM",
            SzsStatus::GaveUp => "GUP",
            SzsStatus::Error => "ERR",
            SzsStatus::ModelExtending => "MEX",
        }
    }
}

impl fmt::Display for SzsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SzsStatus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SzsStatus::ALL
            .into_iter()
            .find(|st| st.name().eq_ignore_ascii_case(s) || st.abbreviation().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown SZS status {:?}", s))
    }
}

/// `% SZS status <Status> for <name>`
pub fn szs_report(status: SzsStatus, name: &str) -> String {
    format!("% SZS status {} for {}", status, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_lines() {
        assert_eq!(
            szs_report(SzsStatus::CounterSatisfiable, "FOF_Finite"),
            "% SZS status CounterSatisfiable for FOF_Finite"
        );
        assert_eq!(szs_report(SzsStatus::Satisfiable, "x"), "% SZS status Satisfiable for x");
        assert_eq!(szs_report(SzsStatus::ModelExtending, "t"), "% SZS status ModelExtending for t");
    }

    #[test]
    fn parses_names_and_abbreviations() {
        for st in SzsStatus::ALL {
            assert_eq!(st.name().parse::<SzsStatus>().unwrap(), st);
            assert_eq!(st.abbreviation().parse::<SzsStatus>().unwrap(), st);
        }
        assert!("Maybe".parse::<SzsStatus>().is_err());
    }
}
