use std::fmt;

use num_traits::One;
use rand::Rng;
use thiserror::Error;

use crate::logic::{Atom, Formula, LogicError, Universe};
use crate::rational::Rational;
use crate::world::{World, WorldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellsError {
    #[error("expected `cells <a> <b> <c> : <8 counts>`: {0}")]
    Syntax(String),
    #[error("count `{0}` is not a non-negative integer")]
    BadCount(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error("all eight counts are zero")]
    Empty,
}

/// Counts of individuals for each truth combination of three propositions.
///
/// Cells are stored in the order `TTT TTF TFT TFF FTT FTF FFT FFF` over
/// `(a, b, c)`: `a` varies slowest and `c` fastest, so the index of a cell
/// is `4*!a + 2*!b + !c`. Search enumerates tables lexicographically in this
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CellTable {
    pub counts: [u32; 8],
}

impl CellTable {
    pub const fn new(counts: [u32; 8]) -> CellTable {
        CellTable { counts }
    }

    pub fn index(a: bool, b: bool, c: bool) -> usize {
        (usize::from(!a) << 2) | (usize::from(!b) << 1) | usize::from(!c)
    }

    /// Truth values `(a, b, c)` of cell `index`.
    pub fn truth_of(index: usize) -> (bool, bool, bool) {
        (index & 4 == 0, index & 2 == 0, index & 1 == 0)
    }

    pub fn from_fn<F: Fn(bool, bool, bool) -> u32>(count: F) -> CellTable {
        let mut counts = [0; 8];
        for (i, slot) in counts.iter_mut().enumerate() {
            let (a, b, c) = Self::truth_of(i);
            *slot = count(a, b, c);
        }
        CellTable { counts }
    }

    pub fn get(&self, a: bool, b: bool, c: bool) -> u32 {
        self.counts[Self::index(a, b, c)]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&n| u64::from(n)).sum()
    }

    /// A world over atoms `names` with one unit-weight outcome per counted
    /// individual.
    pub fn to_world_named(&self, names: [&Atom; 3]) -> Result<World, WorldError> {
        let universe = Universe::new(names.iter().map(|&a| a.clone()))?;
        let outcomes = self.counts.iter().enumerate().flat_map(|(i, &n)| {
            let (a, b, c) = Self::truth_of(i);
            let positions: Vec<usize> = [a, b, c]
                .iter()
                .enumerate()
                .filter(|(_, &t)| t)
                .map(|(p, _)| p)
                .collect();
            std::iter::repeat_n((Rational::one(), positions), n as usize)
        });
        Ok(World::new(universe, outcomes)?.with_name("cells"))
    }

    /// The world over atoms `a`, `b`, `c`.
    pub fn to_world(&self) -> Result<World, WorldError> {
        let [a, b, c] = default_atoms();
        self.to_world_named([&a, &b, &c])
    }

    /// Each count drawn uniformly from `0..=max_cell`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_cell: u32) -> CellTable {
        let mut counts = [0; 8];
        for slot in &mut counts {
            *slot = rng.gen_range(0..=max_cell);
        }
        CellTable { counts }
    }

    /// Every table with entries in `0..=max_cell`, in lexicographic order.
    pub fn enumerate(max_cell: u32) -> impl Iterator<Item = CellTable> {
        (0..space_size(max_cell)).map(move |i| CellTable::decode(i, max_cell))
    }

    /// The table at position `index` of the lexicographic enumeration.
    pub fn decode(mut index: u64, max_cell: u32) -> CellTable {
        let base = u64::from(max_cell) + 1;
        let mut counts = [0; 8];
        for slot in counts.iter_mut().rev() {
            *slot = (index % base) as u32;
            index /= base;
        }
        CellTable { counts }
    }

    /// Text form `cells a b c : n_TTT n_TTF n_TFT n_TFF n_FTT n_FTF n_FFT n_FFF`.
    pub fn to_text(&self, names: [&Atom; 3]) -> String {
        let counts: Vec<String> = self.counts.iter().map(u32::to_string).collect();
        format!(
            "cells {} {} {} : {}",
            names[0],
            names[1],
            names[2],
            counts.join(" ")
        )
    }
}

impl fmt::Display for CellTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = default_atoms();
        f.write_str(&self.to_text([&a, &b, &c]))
    }
}

pub(crate) fn default_atoms() -> [Atom; 3] {
    ["a", "b", "c"].map(|n| Atom::new(n).expect("fixed atom name"))
}

pub fn default_formulas() -> [Formula; 3] {
    default_atoms().map(Formula::Atom)
}

pub fn space_size(max_cell: u32) -> u64 {
    (u64::from(max_cell) + 1).pow(8)
}

/// A cell table together with the names of its three propositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCells {
    pub names: [Atom; 3],
    pub table: CellTable,
}

impl NamedCells {
    pub fn to_world(&self) -> Result<World, WorldError> {
        let [a, b, c] = &self.names;
        self.table.to_world_named([a, b, c])
    }

    pub fn formulas(&self) -> [Formula; 3] {
        self.names.clone().map(Formula::Atom)
    }
}

impl fmt::Display for NamedCells {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.names;
        f.write_str(&self.table.to_text([a, b, c]))
    }
}

/// Parses the cell-table text form. `#` starts a comment.
pub fn parse_cells(text: &str) -> Result<NamedCells, CellsError> {
    let line = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| CellsError::Syntax("no table".into()))?;
    let rest = line
        .strip_prefix("cells")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| CellsError::Syntax("missing `cells` keyword".into()))?;
    let (names, counts) = rest
        .split_once(':')
        .ok_or_else(|| CellsError::Syntax("missing `:`".into()))?;
    let names: Vec<&str> = names.split_whitespace().collect();
    let names: [&str; 3] = names.try_into().map_err(|v: Vec<&str>| {
        CellsError::Syntax(format!("expected 3 names, found {}", v.len()))
    })?;
    let names = [
        Atom::new(names[0])?,
        Atom::new(names[1])?,
        Atom::new(names[2])?,
    ];
    Universe::new(names.iter().cloned())?;
    let counts: Vec<u32> = counts
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| CellsError::BadCount(t.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let counts: [u32; 8] = counts.try_into().map_err(|v: Vec<u32>| {
        CellsError::Syntax(format!("expected 8 counts, found {}", v.len()))
    })?;
    let table = CellTable::new(counts);
    if table.total() == 0 {
        return Err(CellsError::Empty);
    }
    Ok(NamedCells { names, table })
}
