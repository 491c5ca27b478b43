//! Propositional Reiter default logic restricted to normal defaults.
//!
//! A theory is a set of facts plus an ordered list of rules
//! `prerequisite : justification / consequent` where the justification is
//! the consequent. Extensions are found by trying every subset of rules as
//! the generating set (see [`compute_extensions`]).

mod extensions;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::logic::{parse_formula, parse_formula_in, Atom, Formula, LogicError, Universe};

pub use extensions::{compute_extensions, query, verify_extension, Extension, QueryMode};

pub const DEFAULT_RULE_BOUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefaultError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Formula { line: usize, source: LogicError },
    #[error("line {line}: justification `{justification}` differs from consequent `{consequent}`; only normal defaults are supported")]
    NonNormal {
        line: usize,
        justification: String,
        consequent: String,
    },
    #[error("rule `{0}` is not normal")]
    NotNormal(String),
    #[error("{count} rules exceed the bound of {bound}")]
    RuleBound { count: usize, bound: usize },
    #[error(transparent)]
    Logic(#[from] LogicError),
}

pub type Result<T> = std::result::Result<T, DefaultError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefaultRule {
    pub prerequisite: Formula,
    pub justification: Formula,
    pub consequent: Formula,
}

impl DefaultRule {
    /// `prerequisite : consequent / consequent`.
    pub fn normal(prerequisite: Formula, consequent: Formula) -> DefaultRule {
        DefaultRule {
            prerequisite,
            justification: consequent.clone(),
            consequent,
        }
    }

    pub fn is_normal(&self) -> bool {
        self.justification == self.consequent
    }

    pub fn is_prerequisite_free(&self) -> bool {
        self.prerequisite.is_truth()
    }
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} : {} / {}",
            self.prerequisite, self.justification, self.consequent
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultTheory {
    universe: Universe,
    facts: Vec<Formula>,
    rules: Vec<DefaultRule>,
}

impl DefaultTheory {
    pub fn new(
        universe: Universe,
        facts: Vec<Formula>,
        rules: Vec<DefaultRule>,
    ) -> Result<DefaultTheory> {
        Self::with_rule_bound(universe, facts, rules, DEFAULT_RULE_BOUND)
    }

    pub fn with_rule_bound(
        universe: Universe,
        facts: Vec<Formula>,
        rules: Vec<DefaultRule>,
        bound: usize,
    ) -> Result<DefaultTheory> {
        if rules.len() > bound {
            return Err(DefaultError::RuleBound {
                count: rules.len(),
                bound,
            });
        }
        let formulas = facts.iter().chain(
            rules
                .iter()
                .flat_map(|r| [&r.prerequisite, &r.justification, &r.consequent]),
        );
        for f in formulas {
            if let Some(atom) = f.atoms().into_iter().find(|a| !universe.contains(a)) {
                return Err(LogicError::AtomNotInUniverse(atom).into());
            }
        }
        if let Some(rule) = rules.iter().find(|r| !r.is_normal()) {
            return Err(DefaultError::NotNormal(rule.to_string()));
        }
        Ok(DefaultTheory {
            universe,
            facts,
            rules,
        })
    }

    /// A theory whose universe is every atom mentioned, in name order.
    pub fn inferred(facts: Vec<Formula>, rules: Vec<DefaultRule>) -> Result<DefaultTheory> {
        let mut atoms = BTreeSet::new();
        for f in &facts {
            f.collect_atoms(&mut atoms);
        }
        for r in &rules {
            r.prerequisite.collect_atoms(&mut atoms);
            r.consequent.collect_atoms(&mut atoms);
        }
        DefaultTheory::new(Universe::new(atoms)?, facts, rules)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn facts(&self) -> &[Formula] {
        &self.facts
    }

    pub fn rules(&self) -> &[DefaultRule] {
        &self.rules
    }

    /// Rewrites every rule `α : β / β` with `α ≠ true` as the
    /// prerequisite-free `true : (α -> β) / (α -> β)`.
    pub fn to_consequent_form(&self) -> DefaultTheory {
        let rules = self
            .rules
            .iter()
            .map(|r| {
                if r.is_prerequisite_free() {
                    r.clone()
                } else {
                    DefaultRule::normal(
                        Formula::truth(),
                        r.prerequisite.clone().implies(r.consequent.clone()),
                    )
                }
            })
            .collect();
        DefaultTheory {
            universe: self.universe.clone(),
            facts: self.facts.clone(),
            rules,
        }
    }
}

/// Serializes to the theory file format.
impl fmt::Display for DefaultTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.universe.iter().map(Atom::name).collect();
        writeln!(f, "atoms: {}", names.join(" "))?;
        for fact in &self.facts {
            writeln!(f, "fact: {fact}")?;
        }
        for rule in &self.rules {
            writeln!(f, "default: {rule}")?;
        }
        Ok(())
    }
}

/// Rewrites `t` into consequent form; see [`DefaultTheory::to_consequent_form`].
pub fn to_consequent_form(t: &DefaultTheory) -> DefaultTheory {
    t.to_consequent_form()
}

/// Parses the theory file format:
///
/// ```text
/// atoms: emu ostrich run
/// fact: emu | ostrich
/// default: ostrich : run / run
/// ```
///
/// Without an `atoms:` line the universe is every atom mentioned.
pub fn parse_theory(source: &str) -> Result<DefaultTheory> {
    let mut universe: Option<Universe> = None;
    let mut facts = Vec::new();
    let mut rules = Vec::new();
    for (index, raw) in source.lines().enumerate() {
        let line = index + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let syntax = |message: String| DefaultError::Syntax { line, message };
        let formula = |src: &str| -> Result<Formula> {
            match &universe {
                Some(u) => parse_formula_in(src, u),
                None => parse_formula(src),
            }
            .map_err(|source| DefaultError::Formula { line, source })
        };
        let (keyword, body) = text.split_once(':').ok_or_else(|| {
            syntax(format!(
                "expected `atoms:`, `fact:` or `default:`, found `{text}`"
            ))
        })?;
        match keyword.trim() {
            "atoms" => {
                if universe.is_some() || !facts.is_empty() || !rules.is_empty() {
                    return Err(syntax("`atoms:` must come first and only once".into()));
                }
                let names = body
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty());
                universe = Some(
                    Universe::from_names(names)
                        .map_err(|source| DefaultError::Formula { line, source })?,
                );
            }
            "fact" => facts.push(formula(body)?),
            "default" => {
                let (prerequisite, rest) = body.split_once(':').ok_or_else(|| {
                    syntax("expected `<prerequisite> : <justification> / <consequent>`".into())
                })?;
                let (justification, consequent) = rest
                    .split_once('/')
                    .ok_or_else(|| syntax("expected `/` before the consequent".into()))?;
                let rule = DefaultRule {
                    prerequisite: formula(prerequisite)?,
                    justification: formula(justification)?,
                    consequent: formula(consequent)?,
                };
                if !rule.is_normal() {
                    return Err(DefaultError::NonNormal {
                        line,
                        justification: rule.justification.to_string(),
                        consequent: rule.consequent.to_string(),
                    });
                }
                rules.push(rule);
            }
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }
    match universe {
        Some(u) => DefaultTheory::new(u, facts, rules),
        None => DefaultTheory::inferred(facts, rules),
    }
}
