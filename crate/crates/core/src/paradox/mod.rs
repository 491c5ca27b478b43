//! Checkers and exhaustive searchers for Simpson's reversal, Chung's
//! configurations and the favouring propositions, over arbitrary worlds and
//! over three-proposition cell tables.

mod cells;
mod checks;
mod profile;
mod search;

use std::fmt;
use std::str::FromStr;

use crate::logic::Formula;

pub use cells::{default_formulas, parse_cells, space_size, CellTable, CellsError, NamedCells};
pub use checks::{
    check_disjunction_principle, chung_check, proposition1_check, proposition2_audit,
    simpson_check, ChungReport, Comparison, PrincipleOutcome, PrincipleReport, Prop1Precondition,
    Prop1Verdict, Prop2Outcome, Prop2Report, SimpsonReport,
};
pub use profile::{
    antecedents, nine_antecedent_profile, Betweenness, MixedDirections, NineAntecedentProfile,
    ANTECEDENT_LABELS,
};
pub use search::{screen, search_counterexamples, verify};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChungVariant {
    Conjunctive,
    Disjunctive,
}

impl ChungVariant {
    /// `b ∧ c` or `b ∨ c`.
    pub fn combine(self, b: &Formula, c: &Formula) -> Formula {
        match self {
            ChungVariant::Conjunctive => b.clone().and(c.clone()),
            ChungVariant::Disjunctive => b.clone().or(c.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchPattern {
    Simpson,
    Chung(ChungVariant),
}

impl SearchPattern {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchPattern::Simpson => "simpson",
            SearchPattern::Chung(ChungVariant::Conjunctive) => "chung-conjunctive",
            SearchPattern::Chung(ChungVariant::Disjunctive) => "chung-disjunctive",
        }
    }
}

impl fmt::Display for SearchPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SearchPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simpson" => Ok(SearchPattern::Simpson),
            "chung-conj" | "chung-conjunctive" => {
                Ok(SearchPattern::Chung(ChungVariant::Conjunctive))
            }
            "chung-disj" | "chung-disjunctive" => {
                Ok(SearchPattern::Chung(ChungVariant::Disjunctive))
            }
            other => Err(format!(
                "unknown pattern `{other}` (expected simpson, chung-conj or chung-disj)"
            )),
        }
    }
}
