//! Conditionals of `a` given each of the nine antecedents built from `b`
//! and `c`, and the ordering constraints they must satisfy.

use crate::logic::Formula;
use crate::rational::Rational;
use crate::world::{IdentityReport, Result, World};

pub const ANTECEDENT_LABELS: [&str; 9] = [
    "true", "b", "!b", "c", "!c", "b & c", "b & !c", "!b & c", "!b & !c",
];

/// Positions in [`ANTECEDENT_LABELS`].
const TRUE: usize = 0;
const B: usize = 1;
const NOT_B: usize = 2;
const C: usize = 3;
const NOT_C: usize = 4;
const BC: usize = 5;
const B_NOT_C: usize = 6;
const NOT_B_C: usize = 7;
const NOT_B_NOT_C: usize = 8;
const CELLS: [usize; 4] = [BC, B_NOT_C, NOT_B_C, NOT_B_NOT_C];

/// A coarse antecedent split into two refined cells; `p(a|stratum)` must
/// lie between the two refined conditionals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Betweenness {
    pub stratum: &'static str,
    pub refined: [&'static str; 2],
    pub refined_values: [Rational; 2],
    pub value: Rational,
    pub weak: bool,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixedDirections {
    /// `p(a|b) = p(a)` or `p(a|c) = p(a)` (or one is undefined).
    Vacuous,
    Holds {
        above: Vec<&'static str>,
        below: Vec<&'static str>,
    },
    Violated {
        above: Vec<&'static str>,
        below: Vec<&'static str>,
    },
}

impl MixedDirections {
    pub fn is_violated(&self) -> bool {
        matches!(self, MixedDirections::Violated { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NineAntecedentProfile {
    /// `p(a | antecedent)` in [`ANTECEDENT_LABELS`] order; `None` where the
    /// antecedent has no mass.
    pub conditionals: [Option<Rational>; 9],
    /// One entry per stratum whose two refinements both have mass.
    pub betweenness: Vec<Betweenness>,
    /// `(antecedent, pair, report)`: disjunction identity for the pairs
    /// `(a, b)` and `(a, c)` given every antecedent with mass.
    pub identities: Vec<(&'static str, &'static str, IdentityReport)>,
    pub mixed: MixedDirections,
}

impl NineAntecedentProfile {
    pub fn prior(&self) -> &Rational {
        self.conditionals[TRUE]
            .as_ref()
            .expect("worlds have positive mass")
    }

    pub fn betweenness_holds(&self) -> bool {
        self.betweenness.iter().all(|c| c.weak)
    }

    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|(_, _, r)| r.holds)
    }

    /// Every constraint that is defined holds.
    pub fn consistent(&self) -> bool {
        self.betweenness_holds() && self.identities_hold() && !self.mixed.is_violated()
    }
}

pub fn antecedents(b: &Formula, c: &Formula) -> [Formula; 9] {
    let (nb, nc) = (b.clone().negate(), c.clone().negate());
    [
        Formula::truth(),
        b.clone(),
        nb.clone(),
        c.clone(),
        nc.clone(),
        b.clone().and(c.clone()),
        b.clone().and(nc.clone()),
        nb.clone().and(c.clone()),
        nb.and(nc),
    ]
}

pub fn nine_antecedent_profile(
    w: &World,
    a: &Formula,
    b: &Formula,
    c: &Formula,
) -> Result<NineAntecedentProfile> {
    let given = antecedents(b, c);
    let mut conditionals: [Option<Rational>; 9] = Default::default();
    for (slot, g) in conditionals.iter_mut().zip(&given) {
        *slot = w.try_conditional(a, g)?;
    }

    let mut betweenness = Vec::new();
    for (stratum, hi, lo) in [
        (C, BC, NOT_B_C),
        (NOT_C, B_NOT_C, NOT_B_NOT_C),
        (B, BC, B_NOT_C),
        (NOT_B, NOT_B_C, NOT_B_NOT_C),
    ] {
        let (Some(x), Some(y), Some(mid)) =
            (&conditionals[hi], &conditionals[lo], &conditionals[stratum])
        else {
            continue;
        };
        let (min, max) = if x <= y { (x, y) } else { (y, x) };
        betweenness.push(Betweenness {
            stratum: ANTECEDENT_LABELS[stratum],
            refined: [ANTECEDENT_LABELS[hi], ANTECEDENT_LABELS[lo]],
            refined_values: [x.clone(), y.clone()],
            value: mid.clone(),
            weak: min <= mid && mid <= max,
            strict: min < mid && mid < max,
        });
    }

    let mut identities = Vec::new();
    for (i, g) in given.iter().enumerate() {
        if conditionals[i].is_none() {
            continue;
        }
        identities.push((
            ANTECEDENT_LABELS[i],
            "a, b",
            w.check_disjunction_identity(a, b, g)?,
        ));
        identities.push((
            ANTECEDENT_LABELS[i],
            "a, c",
            w.check_disjunction_identity(a, c, g)?,
        ));
    }

    let prior = conditionals[TRUE]
        .clone()
        .expect("worlds have positive mass");
    let premise = matches!(&conditionals[B], Some(v) if *v != prior)
        && matches!(&conditionals[C], Some(v) if *v != prior);
    let mixed = if !premise {
        MixedDirections::Vacuous
    } else {
        let above: Vec<&str> = CELLS
            .iter()
            .filter(|&&i| matches!(&conditionals[i], Some(v) if *v > prior))
            .map(|&i| ANTECEDENT_LABELS[i])
            .collect();
        let below: Vec<&str> = CELLS
            .iter()
            .filter(|&&i| matches!(&conditionals[i], Some(v) if *v < prior))
            .map(|&i| ANTECEDENT_LABELS[i])
            .collect();
        if !above.is_empty() && !below.is_empty() {
            MixedDirections::Holds { above, below }
        } else {
            MixedDirections::Violated { above, below }
        }
    };

    Ok(NineAntecedentProfile {
        conditionals,
        betweenness,
        identities,
        mixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::build_two_class_world;
    use crate::logic::parse_formula;
    use crate::paradox::{default_formulas, CellTable};
    use crate::rational::ratio;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn two_class_betweenness() {
        let w = build_two_class_world(1);
        let p = nine_antecedent_profile(&w, &f("s"), &f("c1"), &f("c2")).unwrap();
        let within_c2 = p.betweenness.iter().find(|x| x.stratum == "c").unwrap();
        assert_eq!(within_c2.refined_values, [ratio(1, 1), ratio(0, 1)]);
        assert_eq!(within_c2.value, ratio(3, 5));
        assert!(within_c2.weak && within_c2.strict);
        assert!(p.consistent());
        // !c1 & !c2 is the lone outside science student.
        assert_eq!(p.conditionals[NOT_B_NOT_C], Some(ratio(1, 1)));
    }

    #[test]
    fn golden_table_mixed_directions() {
        let table = CellTable::new([2, 3, 8, 0, 0, 7, 2, 2]);
        let [a, b, c] = default_formulas();
        let p = nine_antecedent_profile(&table.to_world().unwrap(), &a, &b, &c).unwrap();
        assert_eq!(p.prior(), &ratio(13, 24));
        assert_eq!(
            p.mixed,
            MixedDirections::Holds {
                above: vec!["b & c", "!b & c"],
                below: vec!["b & !c", "!b & !c"],
            }
        );
        assert_eq!(p.conditionals[NOT_B_C], Some(ratio(4, 5)));
        assert_eq!(p.conditionals[B_NOT_C], Some(ratio(3, 10)));
        assert!(p.consistent());
        assert_eq!(p.betweenness.len(), 4);
    }

    #[test]
    fn certain_consequent_is_vacuous() {
        let w = build_two_class_world(1);
        let p = nine_antecedent_profile(&w, &f("true"), &f("c1"), &f("c2")).unwrap();
        assert!(p.conditionals.iter().flatten().all(|v| *v == ratio(1, 1)));
        assert_eq!(p.mixed, MixedDirections::Vacuous);
        assert!(p.betweenness.iter().all(|x| x.weak && !x.strict));
    }

    #[test]
    fn zero_mass_antecedents_are_undefined() {
        let table = CellTable::from_fn(|a, b, c| u32::from(b == c) * (1 + u32::from(a)));
        let [a, b, c] = default_formulas();
        let p = nine_antecedent_profile(&table.to_world().unwrap(), &a, &b, &c).unwrap();
        assert_eq!(p.conditionals[B_NOT_C], None);
        assert_eq!(p.conditionals[NOT_B_C], None);
        assert!(p.betweenness.is_empty());
        assert!(p.identities.iter().all(|(g, _, _)| *g != "b & !c"));
    }
}
