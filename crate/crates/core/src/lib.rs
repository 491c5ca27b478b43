//! Exact probabilistic favouring, paradox search and propositional
//! default logic.

pub mod construction;
pub mod defaults;
pub mod logic;
pub mod paradox;
pub mod rational;
pub mod report;
pub mod world;

pub use rational::Rational;
