//! Finite weighted probability spaces.
//!
//! A [`World`] is a list of outcomes, each a total truth assignment over the
//! world's atoms carrying a positive rational weight. Weights need not sum
//! to one: the probability of a formula is the weight of the outcomes
//! satisfying it divided by the total weight. Repeated assignments are
//! allowed and simply add up.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::logic::{Atom, Compiled, Formula, LogicError, Universe};
use crate::rational::{compact, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorldError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: weight `{weight}` is not positive")]
    NonPositiveWeight { line: usize, weight: String },
    #[error("line {line}: atom `{name}` is not declared in the header")]
    UndeclaredAtom { line: usize, name: String },
    #[error("outcome weights sum to zero")]
    ZeroTotalWeight,
    #[error("outcome refers to atom position {0} outside the universe")]
    AtomOutOfRange(usize),
    #[error("conditioning on `{condition}`, which has probability zero")]
    ZeroMassCondition { condition: String },
    #[error(transparent)]
    Logic(#[from] LogicError),
}

pub type Result<T> = std::result::Result<T, WorldError>;

/// The set of atoms an outcome makes true, as a bitset over universe
/// positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    words: Vec<u64>,
}

impl Assignment {
    fn new(atoms: usize) -> Assignment {
        Assignment {
            words: vec![0; atoms.div_ceil(64)],
        }
    }

    pub fn get(&self, position: usize) -> bool {
        (self.words[position / 64] >> (position % 64)) & 1 == 1
    }

    fn set(&mut self, position: usize) {
        self.words[position / 64] |= 1 << (position % 64);
    }

    pub fn true_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| (bits >> b) & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub assignment: Assignment,
    pub weight: Rational,
}

#[derive(Debug, Clone)]
pub struct World {
    name: Option<String>,
    notes: Vec<String>,
    universe: Universe,
    outcomes: Vec<Outcome>,
    // Weights rescaled to integers over a common denominator; all
    // probabilities are ratios of sums of these.
    scaled: Vec<BigInt>,
    total: BigInt,
}

impl World {
    /// Builds a world from `(weight, true atom positions)` pairs.
    pub fn new<I>(universe: Universe, outcomes: I) -> Result<World>
    where
        I: IntoIterator<Item = (Rational, Vec<usize>)>,
    {
        let mut built = Vec::new();
        for (weight, positions) in outcomes {
            if !weight.is_positive() {
                return Err(WorldError::NonPositiveWeight {
                    line: built.len() + 1,
                    weight: compact(&weight),
                });
            }
            let mut assignment = Assignment::new(universe.len());
            for p in positions {
                if p >= universe.len() {
                    return Err(WorldError::AtomOutOfRange(p));
                }
                assignment.set(p);
            }
            built.push(Outcome { assignment, weight });
        }
        if built.is_empty() {
            return Err(WorldError::ZeroTotalWeight);
        }
        let common = built
            .iter()
            .fold(BigInt::one(), |acc, o| acc.lcm(o.weight.denom()));
        let scaled: Vec<BigInt> = built
            .iter()
            .map(|o| o.weight.numer() * (&common / o.weight.denom()))
            .collect();
        let total = scaled.iter().sum();
        Ok(World {
            name: None,
            notes: Vec::new(),
            universe,
            outcomes: built,
            scaled,
            total,
        })
    }

    pub fn builder(universe: Universe) -> WorldBuilder {
        WorldBuilder {
            universe,
            outcomes: Vec::new(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> World {
        self.name = Some(name.into());
        self
    }

    /// Attaches comment lines emitted at the top of the serialized file.
    pub fn with_notes<I: IntoIterator<Item = String>>(mut self, notes: I) -> World {
        self.notes.extend(notes);
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    pub fn total_weight(&self) -> Rational {
        self.outcomes.iter().map(|o| o.weight.clone()).sum()
    }

    fn compile(&self, f: &Formula) -> Result<Compiled> {
        Ok(f.compile(&self.universe)?)
    }

    fn mass_where<P: Fn(&Assignment) -> bool>(&self, predicate: P) -> BigInt {
        self.outcomes
            .iter()
            .zip(&self.scaled)
            .filter(|(o, _)| predicate(&o.assignment))
            .map(|(_, w)| w)
            .sum()
    }

    /// Probability of `event`: satisfying weight over total weight.
    pub fn probability(&self, event: &Formula) -> Result<Rational> {
        let event = self.compile(event)?;
        let mass = self.mass_where(|a| event.eval(|i| a.get(i)));
        Ok(Rational::new(mass, self.total.clone()))
    }

    /// `p(event | given)`; fails with [`WorldError::ZeroMassCondition`] when
    /// `given` has probability zero.
    pub fn conditional(&self, event: &Formula, given: &Formula) -> Result<Rational> {
        self.try_conditional(event, given)?
            .ok_or_else(|| WorldError::ZeroMassCondition {
                condition: given.to_string(),
            })
    }

    /// Like [`World::conditional`] but with `None` for a zero-mass condition.
    pub fn try_conditional(&self, event: &Formula, given: &Formula) -> Result<Option<Rational>> {
        let event = self.compile(event)?;
        let given = self.compile(given)?;
        let given_mass = self.mass_where(|a| given.eval(|i| a.get(i)));
        if given_mass.is_zero() {
            return Ok(None);
        }
        let joint = self.mass_where(|a| given.eval(|i| a.get(i)) && event.eval(|i| a.get(i)));
        Ok(Some(Rational::new(joint, given_mass)))
    }

    /// Whether `evidence` favours `hypothesis`, i.e. `p(h|e) > p(h)`.
    pub fn favours(&self, hypothesis: &Formula, evidence: &Formula) -> Result<FavourVerdict> {
        let prior = self.probability(hypothesis)?;
        let conditional = self.try_conditional(hypothesis, evidence)?;
        Ok(FavourVerdict::compare(conditional, prior))
    }

    /// Both sides of `p(a|g) + p(b|g) = p(a∧b|g) + p(a∨b|g)`.
    pub fn check_disjunction_identity(
        &self,
        a: &Formula,
        b: &Formula,
        given: &Formula,
    ) -> Result<IdentityReport> {
        let both = a.clone().and(b.clone());
        let either = a.clone().or(b.clone());
        let lhs = self.conditional(a, given)? + self.conditional(b, given)?;
        let rhs = self.conditional(&both, given)? + self.conditional(&either, given)?;
        Ok(IdentityReport {
            holds: lhs == rhs,
            lhs,
            rhs,
        })
    }

    /// Serializes to the line-oriented world file format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for note in &self.notes {
            let _ = writeln!(out, "# {note}");
        }
        let names: Vec<&str> = self.universe.iter().map(Atom::name).collect();
        let _ = writeln!(out, "atoms: {}", names.join(" "));
        for o in &self.outcomes {
            let trues: Vec<&str> = o
                .assignment
                .true_positions()
                .map(|p| self.universe.atoms()[p].name())
                .collect();
            if trues.is_empty() {
                let _ = writeln!(out, "{} :", compact(&o.weight));
            } else {
                let _ = writeln!(out, "{} : {}", compact(&o.weight), trues.join(", "));
            }
        }
        out
    }
}

pub struct WorldBuilder {
    universe: Universe,
    outcomes: Vec<(Rational, Vec<usize>)>,
}

impl WorldBuilder {
    /// Adds an outcome making exactly `true_atoms` true. Panics on names
    /// outside the universe.
    pub fn outcome(mut self, weight: Rational, true_atoms: &[&str]) -> WorldBuilder {
        let positions = true_atoms
            .iter()
            .map(|n| {
                let atom = Atom::new(n).expect("valid atom name");
                self.universe
                    .index_of(&atom)
                    .unwrap_or_else(|| panic!("atom `{n}` not in universe"))
            })
            .collect();
        self.outcomes.push((weight, positions));
        self
    }

    pub fn unit(self, count: usize, true_atoms: &[&str]) -> WorldBuilder {
        (0..count).fold(self, |b, _| b.outcome(Rational::one(), true_atoms))
    }

    pub fn build(self) -> Result<World> {
        World::new(self.universe, self.outcomes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Favours,
    Disfavours,
    Neutral,
    Undefined,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Favours => "favours",
            Relation::Disfavours => "disfavours",
            Relation::Neutral => "neutral",
            Relation::Undefined => "undefined",
        }
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of comparing a conditional probability with its prior.
/// `conditional` is `None` exactly when the relation is undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FavourVerdict {
    pub relation: Relation,
    pub conditional: Option<Rational>,
    pub prior: Rational,
}

impl FavourVerdict {
    pub fn compare(conditional: Option<Rational>, prior: Rational) -> FavourVerdict {
        let relation = match &conditional {
            None => Relation::Undefined,
            Some(c) => match c.cmp(&prior) {
                std::cmp::Ordering::Greater => Relation::Favours,
                std::cmp::Ordering::Less => Relation::Disfavours,
                std::cmp::Ordering::Equal => Relation::Neutral,
            },
        };
        FavourVerdict {
            relation,
            conditional,
            prior,
        }
    }

    pub fn is_favours(&self) -> bool {
        self.relation == Relation::Favours
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the world file format:
///
/// ```text
/// # comment
/// atoms: s c1 c2
/// 1 : s, c1, c2
/// 1/2 :
/// ```
pub fn parse_world(source: &str) -> Result<World> {
    let mut universe: Option<Universe> = None;
    let mut outcomes = Vec::new();
    let mut notes = Vec::new();
    for (index, raw) in source.lines().enumerate() {
        let line_no = index + 1;
        if universe.is_none() {
            if let Some(note) = raw.trim_start().strip_prefix('#') {
                notes.push(note.trim().to_string());
                continue;
            }
        }
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| WorldError::Syntax {
            line: line_no,
            message,
        };
        let Some(declared) = universe.as_ref() else {
            let names = line
                .strip_prefix("atoms:")
                .ok_or_else(|| syntax("expected header `atoms: ...`".into()))?;
            let names = names
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty());
            universe =
                Some(Universe::from_names(names).map_err(|e| syntax(format!("bad header: {e}")))?);
            continue;
        };
        let (weight_text, atoms_text) = line
            .split_once(':')
            .ok_or_else(|| syntax(format!("expected `<weight> : <atoms>`, found `{line}`")))?;
        let weight = parse_rational(weight_text).map_err(|e| syntax(e.to_string()))?;
        if !weight.is_positive() {
            return Err(WorldError::NonPositiveWeight {
                line: line_no,
                weight: weight_text.trim().to_string(),
            });
        }
        let mut positions = Vec::new();
        for name in atoms_text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let position = Atom::new(name)
                .ok()
                .and_then(|a| declared.index_of(&a))
                .ok_or_else(|| WorldError::UndeclaredAtom {
                    line: line_no,
                    name: name.to_string(),
                })?;
            positions.push(position);
        }
        outcomes.push((weight, positions));
    }
    let universe = universe.ok_or(WorldError::Syntax {
        line: source.lines().count().max(1),
        message: "missing header `atoms: ...`".into(),
    })?;
    Ok(World::new(universe, outcomes)?.with_notes(notes))
}
