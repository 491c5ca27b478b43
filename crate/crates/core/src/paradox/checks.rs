//! Exact checkers for the three-proposition configurations: Simpson's
//! reversal, Chung's conjunctive and disjunctive configurations, transfer
//! of favouring to an exclusive disjunction, the "favoured by the
//! conjunction or the disjunction" dichotomy, and the disjunction principle
//! for defaults read as favouring.

use std::cmp::Ordering;

use crate::logic::Formula;
use crate::rational::Rational;
use crate::world::{FavourVerdict, Result, World};

use super::ChungVariant;

fn positive(w: &World, f: &Formula) -> Result<bool> {
    Ok(w.probability(f)? > Rational::default())
}

/// One strict comparison between two possibly undefined values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub left: Option<Rational>,
    pub right: Option<Rational>,
    pub expected: Ordering,
    pub holds: bool,
}

impl Comparison {
    pub fn new(left: Option<Rational>, right: Option<Rational>, expected: Ordering) -> Comparison {
        let holds = match (&left, &right) {
            (Some(l), Some(r)) => l.cmp(r) == expected,
            _ => false,
        };
        Comparison {
            left,
            right,
            expected,
            holds,
        }
    }

    pub fn is_defined(&self) -> bool {
        self.left.is_some() && self.right.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpsonReport {
    /// `p(a|b∧c) > p(a|c)`
    pub within_c: Comparison,
    /// `p(a|b∧¬c) > p(a|¬c)`
    pub within_not_c: Comparison,
    /// `p(a|b) < p(a)`
    pub marginal: Comparison,
    pub holds: bool,
}

/// Simpson's reversal: `b` raises the probability of `a` within `c` and
/// within `¬c`, yet lowers it overall. Comparisons with an undefined side
/// fail.
pub fn simpson_check(w: &World, a: &Formula, b: &Formula, c: &Formula) -> Result<SimpsonReport> {
    let not_c = c.clone().negate();
    let within_c = Comparison::new(
        w.try_conditional(a, &b.clone().and(c.clone()))?,
        w.try_conditional(a, c)?,
        Ordering::Greater,
    );
    let within_not_c = Comparison::new(
        w.try_conditional(a, &b.clone().and(not_c.clone()))?,
        w.try_conditional(a, &not_c)?,
        Ordering::Greater,
    );
    let marginal = Comparison::new(
        w.try_conditional(a, b)?,
        Some(w.probability(a)?),
        Ordering::Less,
    );
    let holds = within_c.holds && within_not_c.holds && marginal.holds;
    Ok(SimpsonReport {
        within_c,
        within_not_c,
        marginal,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChungReport {
    pub variant: ChungVariant,
    /// Every prior and the combined antecedent have positive mass.
    pub applicable: bool,
    pub prior: Rational,
    pub given_b: Option<Rational>,
    pub given_c: Option<Rational>,
    /// `p(a|b∧c)` or `p(a|b∨c)` depending on the variant.
    pub given_combined: Option<Rational>,
    pub holds: bool,
}

/// `b` and `c` each favour `a` while their conjunction (or disjunction)
/// disfavours it.
pub fn chung_check(
    w: &World,
    a: &Formula,
    b: &Formula,
    c: &Formula,
    variant: ChungVariant,
) -> Result<ChungReport> {
    let combined = variant.combine(b, c);
    let applicable =
        positive(w, a)? && positive(w, b)? && positive(w, c)? && positive(w, &combined)?;
    let prior = w.probability(a)?;
    let given_b = w.try_conditional(a, b)?;
    let given_c = w.try_conditional(a, c)?;
    let given_combined = w.try_conditional(a, &combined)?;
    let holds = applicable
        && matches!((&given_b, &given_c, &given_combined), (Some(pb), Some(pc), Some(pbc))
            if *pb > prior && *pc > prior && *pbc < prior);
    Ok(ChungReport {
        variant,
        applicable,
        prior,
        given_b,
        given_c,
        given_combined,
        holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop1Precondition {
    /// `p(a∧b) > 0`
    NotExclusive,
    /// `p(c) = 0`
    ZeroMassEvidence,
    /// `p(a|c) <= p(a)`
    AFavouredByC,
    /// `p(b|c) <= p(b)`
    BFavouredByC,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prop1Verdict {
    /// Preconditions hold and `p(a∨b|c) > p(a∨b)`.
    Confirmed(FavourVerdict),
    PreconditionFailed(Prop1Precondition),
    /// Preconditions hold but the disjunction is not favoured. Never
    /// produced by a correct arithmetic layer.
    Refuted(FavourVerdict),
}

/// Mutually exclusive `a`, `b`, each favoured by `c`: the disjunction must
/// be favoured by `c` too.
pub fn proposition1_check(
    w: &World,
    a: &Formula,
    b: &Formula,
    c: &Formula,
) -> Result<Prop1Verdict> {
    use Prop1Precondition::*;
    if positive(w, &a.clone().and(b.clone()))? {
        return Ok(Prop1Verdict::PreconditionFailed(NotExclusive));
    }
    if !positive(w, c)? {
        return Ok(Prop1Verdict::PreconditionFailed(ZeroMassEvidence));
    }
    if !w.favours(a, c)?.is_favours() {
        return Ok(Prop1Verdict::PreconditionFailed(AFavouredByC));
    }
    if !w.favours(b, c)?.is_favours() {
        return Ok(Prop1Verdict::PreconditionFailed(BFavouredByC));
    }
    let verdict = w.favours(&a.clone().or(b.clone()), c)?;
    Ok(if verdict.is_favours() {
        Prop1Verdict::Confirmed(verdict)
    } else {
        Prop1Verdict::Refuted(verdict)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop2Outcome {
    NotApplicable,
    ViaConjunction,
    ViaDisjunction,
    ViaBoth,
    /// Applicable but neither branch favours `a`. Never produced by a
    /// correct arithmetic layer.
    Violated,
}

impl Prop2Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Prop2Outcome::NotApplicable => "not-applicable",
            Prop2Outcome::ViaConjunction => "satisfied-via-conjunction",
            Prop2Outcome::ViaDisjunction => "satisfied-via-disjunction",
            Prop2Outcome::ViaBoth => "satisfied-via-both",
            Prop2Outcome::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop2Report {
    pub outcome: Prop2Outcome,
    pub by_b: FavourVerdict,
    pub by_c: FavourVerdict,
    pub by_conjunction: FavourVerdict,
    pub by_disjunction: FavourVerdict,
}

/// If `b` and `c` each favour `a`, then `b∧c` or `b∨c` favours `a`.
pub fn proposition2_audit(w: &World, a: &Formula, b: &Formula, c: &Formula) -> Result<Prop2Report> {
    let by_b = w.favours(a, b)?;
    let by_c = w.favours(a, c)?;
    let by_conjunction = w.favours(a, &b.clone().and(c.clone()))?;
    let by_disjunction = w.favours(a, &b.clone().or(c.clone()))?;
    let outcome = if !(by_b.is_favours() && by_c.is_favours()) {
        Prop2Outcome::NotApplicable
    } else {
        match (by_conjunction.is_favours(), by_disjunction.is_favours()) {
            (true, true) => Prop2Outcome::ViaBoth,
            (true, false) => Prop2Outcome::ViaConjunction,
            (false, true) => Prop2Outcome::ViaDisjunction,
            (false, false) => Prop2Outcome::Violated,
        }
    };
    Ok(Prop2Report {
        outcome,
        by_b,
        by_c,
        by_conjunction,
        by_disjunction,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrincipleOutcome {
    Holds,
    Counterexample,
    NotApplicable,
}

impl PrincipleOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            PrincipleOutcome::Holds => "holds",
            PrincipleOutcome::Counterexample => "counterexample",
            PrincipleOutcome::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipleReport {
    pub outcome: PrincipleOutcome,
    /// `p(c|a)` against `p(c)`
    pub from_a: FavourVerdict,
    /// `p(c|b)` against `p(c)`
    pub from_b: FavourVerdict,
    /// `p(c|a∨b)` against `p(c)`
    pub from_either: FavourVerdict,
}

/// "If `a` typically gives `c` and `b` typically gives `c`, then `a∨b`
/// typically gives `c`", with "typically gives" read as favouring.
pub fn check_disjunction_principle(
    w: &World,
    a: &Formula,
    b: &Formula,
    c: &Formula,
) -> Result<PrincipleReport> {
    let from_a = w.favours(c, a)?;
    let from_b = w.favours(c, b)?;
    let from_either = w.favours(c, &a.clone().or(b.clone()))?;
    let outcome = if !(from_a.is_favours() && from_b.is_favours()) {
        PrincipleOutcome::NotApplicable
    } else if from_either.is_favours() {
        PrincipleOutcome::Holds
    } else {
        PrincipleOutcome::Counterexample
    };
    Ok(PrincipleReport {
        outcome,
        from_a,
        from_b,
        from_either,
    })
}
