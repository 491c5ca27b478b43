//! Exhaustive truth tables and the entailment/consistency checks built on
//! them.
//!
//! A table over `n` atoms holds one bit per assignment (`2^n` bits); bit `m`
//! is the formula's value under the assignment where atom `i` is true iff
//! bit `i` of `m` is set. Connectives are word-wise bit operations.

use std::collections::BTreeSet;

use super::{Atom, Formula, LogicError, Result, Universe};

pub const DEFAULT_ATOM_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    atoms: usize,
    words: Vec<u64>,
}

impl TruthTable {
    fn word_count(atoms: usize) -> usize {
        if atoms <= 6 {
            1
        } else {
            1 << (atoms - 6)
        }
    }

    fn tail_mask(atoms: usize) -> u64 {
        if atoms >= 6 {
            u64::MAX
        } else {
            (1u64 << (1 << atoms)) - 1
        }
    }

    pub fn constant(atoms: usize, value: bool) -> TruthTable {
        let fill = if value { Self::tail_mask(atoms) } else { 0 };
        TruthTable {
            atoms,
            words: vec![fill; Self::word_count(atoms)],
        }
    }

    fn variable(atoms: usize, position: usize) -> TruthTable {
        const PATTERNS: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        let mask = Self::tail_mask(atoms);
        let words = (0..Self::word_count(atoms))
            .map(|w| {
                if position < 6 {
                    PATTERNS[position] & mask
                } else if (w >> (position - 6)) & 1 == 1 {
                    u64::MAX
                } else {
                    0
                }
            })
            .collect();
        TruthTable { atoms, words }
    }

    /// Truth table of `formula` over `universe`. Fails when the universe is
    /// larger than `bound` or the formula mentions an atom outside it.
    pub fn of(formula: &Formula, universe: &Universe, bound: usize) -> Result<TruthTable> {
        if universe.len() > bound {
            return Err(LogicError::AtomBound {
                count: universe.len(),
                bound,
            });
        }
        Self::build(formula, universe)
    }

    fn build(formula: &Formula, universe: &Universe) -> Result<TruthTable> {
        let n = universe.len();
        Ok(match formula {
            Formula::Const(b) => Self::constant(n, *b),
            Formula::Atom(a) => Self::variable(
                n,
                universe
                    .index_of(a)
                    .ok_or_else(|| LogicError::AtomNotInUniverse(a.clone()))?,
            ),
            Formula::Not(x) => Self::build(x, universe)?.complement(),
            Formula::And(xs) => {
                let mut acc = Self::constant(n, true);
                for x in xs {
                    acc = acc.and(&Self::build(x, universe)?);
                }
                acc
            }
            Formula::Or(xs) => {
                let mut acc = Self::constant(n, false);
                for x in xs {
                    acc = acc.or(&Self::build(x, universe)?);
                }
                acc
            }
            Formula::Implies(l, r) => Self::build(l, universe)?
                .complement()
                .or(&Self::build(r, universe)?),
            Formula::Iff(l, r) => {
                let l = Self::build(l, universe)?;
                let r = Self::build(r, universe)?;
                l.xor(&r).complement()
            }
        })
    }

    pub fn complement(mut self) -> TruthTable {
        let mask = Self::tail_mask(self.atoms);
        for w in &mut self.words {
            *w = !*w & mask;
        }
        self
    }

    pub fn and(mut self, other: &TruthTable) -> TruthTable {
        debug_assert_eq!(self.atoms, other.atoms);
        self.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a &= b);
        self
    }

    pub fn or(mut self, other: &TruthTable) -> TruthTable {
        debug_assert_eq!(self.atoms, other.atoms);
        self.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a |= b);
        self
    }

    fn xor(mut self, other: &TruthTable) -> TruthTable {
        self.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a ^= b);
        self
    }

    /// True when some assignment satisfies the table.
    pub fn is_satisfiable(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    /// True when every assignment satisfying `self` satisfies `other`.
    pub fn implies_table(&self, other: &TruthTable) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn count_models(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn get(&self, assignment: u64) -> bool {
        let assignment = assignment as usize;
        (self.words[assignment >> 6] >> (assignment & 63)) & 1 == 1
    }
}

/// Entailment and consistency by exhaustive assignment enumeration, limited
/// to `atom_bound` distinct atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reasoner {
    pub atom_bound: usize,
}

impl Default for Reasoner {
    fn default() -> Self {
        Reasoner {
            atom_bound: DEFAULT_ATOM_BOUND,
        }
    }
}

impl Reasoner {
    pub fn new(atom_bound: usize) -> Reasoner {
        Reasoner { atom_bound }
    }

    fn universe_of<'a, I: IntoIterator<Item = &'a Formula>>(
        &self,
        formulas: I,
        extra: Option<&Formula>,
    ) -> Result<Universe> {
        let mut atoms: BTreeSet<Atom> = BTreeSet::new();
        for f in formulas {
            f.collect_atoms(&mut atoms);
        }
        if let Some(f) = extra {
            f.collect_atoms(&mut atoms);
        }
        if atoms.len() > self.atom_bound {
            return Err(LogicError::AtomBound {
                count: atoms.len(),
                bound: self.atom_bound,
            });
        }
        Universe::new(atoms)
    }

    fn models<'a, I>(&self, formulas: I, universe: &Universe) -> Result<TruthTable>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        let mut acc = TruthTable::constant(universe.len(), true);
        for f in formulas {
            acc = acc.and(&TruthTable::of(f, universe, self.atom_bound)?);
        }
        Ok(acc)
    }

    pub fn entails<'a, I>(&self, premises: I, conclusion: &Formula) -> Result<bool>
    where
        I: IntoIterator<Item = &'a Formula>,
        I::IntoIter: Clone,
    {
        let premises = premises.into_iter();
        let universe = self.universe_of(premises.clone(), Some(conclusion))?;
        let models = self.models(premises, &universe)?;
        let target = TruthTable::of(conclusion, &universe, self.atom_bound)?;
        Ok(models.implies_table(&target))
    }

    pub fn consistent<'a, I>(&self, formulas: I) -> Result<bool>
    where
        I: IntoIterator<Item = &'a Formula>,
        I::IntoIter: Clone,
    {
        let formulas = formulas.into_iter();
        let universe = self.universe_of(formulas.clone(), None)?;
        Ok(self.models(formulas, &universe)?.is_satisfiable())
    }
}

/// [`Reasoner::entails`] with the default atom bound.
pub fn entails<'a, I>(premises: I, conclusion: &Formula) -> Result<bool>
where
    I: IntoIterator<Item = &'a Formula>,
    I::IntoIter: Clone,
{
    Reasoner::default().entails(premises, conclusion)
}

/// [`Reasoner::consistent`] with the default atom bound.
pub fn consistent<'a, I>(formulas: I) -> Result<bool>
where
    I: IntoIterator<Item = &'a Formula>,
    I::IntoIter: Clone,
{
    Reasoner::default().consistent(formulas)
}
