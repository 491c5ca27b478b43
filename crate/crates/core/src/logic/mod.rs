//! Propositional formulas over named atoms.
//!
//! Formulas are parsed from a small ASCII grammar (`!`, `&`, `|`, `->`,
//! `<->`), printed back with the minimum number of parentheses, evaluated
//! under a valuation, and checked for entailment by enumerating every
//! assignment of the atoms involved.

mod parse;
mod table;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use parse::{parse_formula, parse_formula_in};
pub use table::{consistent, entails, Reasoner, TruthTable, DEFAULT_ATOM_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown atom `{name}` at position {position}")]
    UnknownAtom { name: String, position: usize },
    #[error("atom `{0}` is not part of the universe")]
    AtomNotInUniverse(Atom),
    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),
    #[error("duplicate atom `{0}` in universe")]
    DuplicateAtom(Atom),
    #[error("atom `{0}` has no truth value")]
    Unassigned(Atom),
    #[error("{count} atoms exceed the enumeration bound of {bound}")]
    AtomBound { count: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, LogicError>;

/// A propositional symbol: lowercase letters, digits and underscores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Atom> {
        let valid = !name.is_empty()
            && name
                .chars()
                .all(|ch| ch.is_ascii_lowercase() || ch.is_ascii_digit() || ch == '_')
            && name != "true"
            && name != "false";
        if valid {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(LogicError::InvalidAtom(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Atom({})", self.0)
    }
}

/// An ordered set of distinct atoms. Positions are stable and are used as
/// bit indices by truth tables and world outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Universe {
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
}

impl Universe {
    pub fn new<I: IntoIterator<Item = Atom>>(atoms: I) -> Result<Universe> {
        let mut universe = Universe::default();
        for atom in atoms {
            universe.insert(atom)?;
        }
        Ok(universe)
    }

    /// Parses whitespace-separated atom names.
    pub fn from_names<'a, I: IntoIterator<Item = &'a str>>(names: I) -> Result<Universe> {
        Universe::new(
            names
                .into_iter()
                .map(Atom::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn insert(&mut self, atom: Atom) -> Result<usize> {
        if self.index.contains_key(&atom) {
            return Err(LogicError::DuplicateAtom(atom));
        }
        let position = self.atoms.len();
        self.index.insert(atom.clone(), position);
        self.atoms.push(atom);
        Ok(position)
    }

    pub fn index_of(&self, atom: &Atom) -> Option<usize> {
        self.index.get(atom).copied()
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.index.contains_key(atom)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.iter()
    }
}

/// A propositional formula.
///
/// Conjunction and disjunction are n-ary; the parser always produces at
/// least two operands for them. Implication and biconditional are binary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Atom(Atom),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn truth() -> Formula {
        Formula::Const(true)
    }

    pub fn falsity() -> Formula {
        Formula::Const(false)
    }

    pub fn atom(atom: &Atom) -> Formula {
        Formula::Atom(atom.clone())
    }

    /// Builds an atom formula from a name, panicking on an invalid name.
    /// Intended for literals in code and tests.
    pub fn var(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("valid atom name"))
    }

    pub fn negate(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Formula {
        Formula::And(vec![self, other])
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(vec![self, other])
    }

    pub fn implies(self, other: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn iff(self, other: Formula) -> Formula {
        Formula::Iff(Box::new(self), Box::new(other))
    }

    /// Conjunction of any number of formulas; empty is `true`, a single
    /// operand is returned as is.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(operands: I) -> Formula {
        let mut operands: Vec<Formula> = operands.into_iter().collect();
        match operands.len() {
            0 => Formula::truth(),
            1 => operands.pop().unwrap(),
            _ => Formula::And(operands),
        }
    }

    /// Disjunction of any number of formulas; empty is `false`.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(operands: I) -> Formula {
        let mut operands: Vec<Formula> = operands.into_iter().collect();
        match operands.len() {
            0 => Formula::falsity(),
            1 => operands.pop().unwrap(),
            _ => Formula::Or(operands),
        }
    }

    pub fn is_truth(&self) -> bool {
        matches!(self, Formula::Const(true))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Const(_) => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(x) => x.collect_atoms(out),
            Formula::And(xs) | Formula::Or(xs) => xs.iter().for_each(|x| x.collect_atoms(out)),
            Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Classical truth value under `valuation`. Every atom must be assigned,
    /// including atoms in subformulas that would not affect the result.
    pub fn evaluate<V: Valuation + ?Sized>(&self, valuation: &V) -> Result<bool> {
        Ok(match self {
            Formula::Const(b) => *b,
            Formula::Atom(a) => valuation
                .value(a)
                .ok_or_else(|| LogicError::Unassigned(a.clone()))?,
            Formula::Not(x) => !x.evaluate(valuation)?,
            Formula::And(xs) => {
                let mut acc = true;
                for x in xs {
                    acc &= x.evaluate(valuation)?;
                }
                acc
            }
            Formula::Or(xs) => {
                let mut acc = false;
                for x in xs {
                    acc |= x.evaluate(valuation)?;
                }
                acc
            }
            Formula::Implies(l, r) => !l.evaluate(valuation)? | r.evaluate(valuation)?,
            Formula::Iff(l, r) => l.evaluate(valuation)? == r.evaluate(valuation)?,
        })
    }

    /// Resolves atoms to positions in `universe` for fast repeated evaluation.
    pub fn compile(&self, universe: &Universe) -> Result<Compiled> {
        Ok(match self {
            Formula::Const(b) => Compiled::Const(*b),
            Formula::Atom(a) => Compiled::Atom(
                universe
                    .index_of(a)
                    .ok_or_else(|| LogicError::AtomNotInUniverse(a.clone()))?,
            ),
            Formula::Not(x) => Compiled::Not(Box::new(x.compile(universe)?)),
            Formula::And(xs) => Compiled::And(
                xs.iter()
                    .map(|x| x.compile(universe))
                    .collect::<Result<_>>()?,
            ),
            Formula::Or(xs) => Compiled::Or(
                xs.iter()
                    .map(|x| x.compile(universe))
                    .collect::<Result<_>>()?,
            ),
            Formula::Implies(l, r) => Compiled::Implies(
                Box::new(l.compile(universe)?),
                Box::new(r.compile(universe)?),
            ),
            Formula::Iff(l, r) => Compiled::Iff(
                Box::new(l.compile(universe)?),
                Box::new(r.compile(universe)?),
            ),
        })
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Iff(..) => 0,
            Formula::Implies(..) => 1,
            Formula::Or(xs) if xs.len() >= 2 => 2,
            Formula::And(xs) if xs.len() >= 2 => 3,
            Formula::Or(xs) | Formula::And(xs) if xs.len() == 1 => xs[0].level(),
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Formula::Const(true) => f.write_str("true"),
            Formula::Const(false) => f.write_str("false"),
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(x) => {
                f.write_str("!")?;
                x.write_at(f, 4)
            }
            Formula::And(xs) if xs.is_empty() => f.write_str("true"),
            Formula::Or(xs) if xs.is_empty() => f.write_str("false"),
            Formula::And(xs) | Formula::Or(xs) if xs.len() == 1 => xs[0].write_at(f, min_level),
            Formula::And(xs) => write_joined(f, xs, " & ", 4),
            Formula::Or(xs) => write_joined(f, xs, " | ", 3),
            Formula::Implies(l, r) => {
                l.write_at(f, 2)?;
                f.write_str(" -> ")?;
                r.write_at(f, 1)
            }
            Formula::Iff(l, r) => {
                l.write_at(f, 0)?;
                f.write_str(" <-> ")?;
                r.write_at(f, 1)
            }
        }
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[Formula], sep: &str, level: u8) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        x.write_at(f, level)?;
    }
    Ok(())
}

/// Prints in the parser's grammar; `parse_formula(&f.to_string())` gives
/// back `f` for every formula whose n-ary nodes have two or more operands.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// A source of truth values for atoms.
pub trait Valuation {
    fn value(&self, atom: &Atom) -> Option<bool>;
}

impl Valuation for HashMap<Atom, bool> {
    fn value(&self, atom: &Atom) -> Option<bool> {
        self.get(atom).copied()
    }
}

impl Valuation for BTreeMap<Atom, bool> {
    fn value(&self, atom: &Atom) -> Option<bool> {
        self.get(atom).copied()
    }
}

/// A formula with atoms resolved to universe positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Compiled {
    Const(bool),
    Atom(usize),
    Not(Box<Compiled>),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
    Implies(Box<Compiled>, Box<Compiled>),
    Iff(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    /// Evaluates with `bit(i)` giving the value of the atom at position `i`.
    pub fn eval<F: Fn(usize) -> bool + Copy>(&self, bit: F) -> bool {
        match self {
            Compiled::Const(b) => *b,
            Compiled::Atom(i) => bit(*i),
            Compiled::Not(x) => !x.eval(bit),
            Compiled::And(xs) => xs.iter().all(|x| x.eval(bit)),
            Compiled::Or(xs) => xs.iter().any(|x| x.eval(bit)),
            Compiled::Implies(l, r) => !l.eval(bit) || r.eval(bit),
            Compiled::Iff(l, r) => l.eval(bit) == r.eval(bit),
        }
    }
}
