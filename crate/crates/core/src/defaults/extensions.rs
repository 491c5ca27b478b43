use crate::logic::{self, Formula, Reasoner, TruthTable};

use super::{DefaultTheory, Result};

/// One Reiter extension of a normal theory: the deductive closure of the
/// facts and the consequents of the generating rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    firing_order: Vec<usize>,
    base: Vec<Formula>,
    trivial: bool,
}

impl Extension {
    /// Generating rule indices in an order where each prerequisite follows
    /// from the facts and the consequents of the rules before it.
    pub fn firing_order(&self) -> &[usize] {
        &self.firing_order
    }

    /// Generating rule indices, ascending.
    pub fn generating(&self) -> Vec<usize> {
        let mut set = self.firing_order.clone();
        set.sort_unstable();
        set
    }

    /// Facts followed by the consequents of the generating rules.
    pub fn base(&self) -> &[Formula] {
        &self.base
    }

    /// The single extension of a theory with inconsistent facts, which
    /// contains every formula.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn entails(&self, f: &Formula) -> Result<bool> {
        Ok(logic::entails(&self.base, f)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    /// Entailed by every extension.
    Skeptical,
    /// Entailed by at least one extension.
    Credulous,
}

struct Tables {
    facts: TruthTable,
    prerequisites: Vec<TruthTable>,
    justifications: Vec<TruthTable>,
    consequents: Vec<TruthTable>,
}

impl Tables {
    fn new(t: &DefaultTheory) -> Result<Tables> {
        let bound = logic::DEFAULT_ATOM_BOUND;
        let u = t.universe();
        let mut facts = TruthTable::constant(u.len(), true);
        for f in t.facts() {
            facts = facts.and(&TruthTable::of(f, u, bound)?);
        }
        let table = |f: &Formula| TruthTable::of(f, u, bound);
        Ok(Tables {
            facts,
            prerequisites: t
                .rules()
                .iter()
                .map(|r| table(&r.prerequisite))
                .collect::<logic::Result<_>>()?,
            justifications: t
                .rules()
                .iter()
                .map(|r| table(&r.justification))
                .collect::<logic::Result<_>>()?,
            consequents: t
                .rules()
                .iter()
                .map(|r| table(&r.consequent))
                .collect::<logic::Result<_>>()?,
        })
    }

    /// Firing order for `members` if every member can be fired from the
    /// facts, picking the lowest applicable index at each step.
    fn ground(&self, members: &[usize]) -> Option<Vec<usize>> {
        let mut known = self.facts.clone();
        let mut fired = Vec::with_capacity(members.len());
        let mut pending = members.to_vec();
        while !pending.is_empty() {
            let pos = pending
                .iter()
                .position(|&i| known.implies_table(&self.prerequisites[i]))?;
            let rule = pending.remove(pos);
            known = known.and(&self.consequents[rule]);
            fired.push(rule);
        }
        Some(fired)
    }

    fn extension_for(&self, members: &[usize], rule_count: usize) -> Option<Vec<usize>> {
        let mut models = self.facts.clone();
        for &i in members {
            models = models.and(&self.consequents[i]);
        }
        let applicable = |i: usize| models.clone().and(&self.justifications[i]).is_satisfiable();
        if !members.iter().all(|&i| applicable(i)) {
            return None;
        }
        let blocked = (0..rule_count)
            .filter(|i| !members.contains(i))
            .all(|i| !models.implies_table(&self.prerequisites[i]) || !applicable(i));
        if !blocked {
            return None;
        }
        self.ground(members)
    }
}

fn base_of(t: &DefaultTheory, members: &[usize]) -> Vec<Formula> {
    t.facts()
        .iter()
        .cloned()
        .chain(members.iter().map(|&i| t.rules()[i].consequent.clone()))
        .collect()
}

/// Every Reiter extension of `t`, ordered by ascending generating index set.
///
/// A subset `D` of the rules generates an extension `E = facts ∪ cons(D)`
/// when (i) the rules of `D` can be fired in some order, each prerequisite
/// following from the facts and earlier consequents; (ii) every rule of `D`
/// has its justification consistent with `E`; and (iii) every other rule
/// either has a prerequisite not entailed by `E` or a justification
/// inconsistent with `E`. All `2^|rules|` subsets are tried.
///
/// Inconsistent facts give one extension flagged [`Extension::is_trivial`].
pub fn compute_extensions(t: &DefaultTheory) -> Result<Vec<Extension>> {
    let tables = Tables::new(t)?;
    if !tables.facts.is_satisfiable() {
        return Ok(vec![Extension {
            firing_order: Vec::new(),
            base: t.facts().to_vec(),
            trivial: true,
        }]);
    }
    let n = t.rules().len();
    let mut found: Vec<Extension> = (0u32..1 << n)
        .filter_map(|mask| {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            tables.extension_for(&members, n).map(|order| Extension {
                base: base_of(t, &members),
                firing_order: order,
                trivial: false,
            })
        })
        .collect();
    found.sort_by_key(Extension::generating);
    Ok(found)
}

/// Whether `f` is entailed by every (skeptical) or some (credulous)
/// extension of `t`.
pub fn query(t: &DefaultTheory, f: &Formula, mode: QueryMode) -> Result<bool> {
    let extensions = compute_extensions(t)?;
    let mut verdicts = extensions.iter().map(|e| e.entails(f));
    match mode {
        QueryMode::Skeptical => {
            for v in verdicts.by_ref() {
                if !v? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        QueryMode::Credulous => {
            for v in verdicts {
                if v? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Re-checks that `extension` satisfies the fixed-point conditions for `t`
/// using formula-level entailment, and that its firing order is a valid
/// grounding witness.
pub fn verify_extension(t: &DefaultTheory, extension: &Extension) -> Result<bool> {
    let reasoner = Reasoner::default();
    if extension.is_trivial() {
        return Ok(!reasoner.consistent(t.facts())?);
    }
    let members = extension.generating();
    let base = base_of(t, &members);
    if base != extension.base {
        return Ok(false);
    }
    let mut known: Vec<Formula> = t.facts().to_vec();
    for &i in extension.firing_order() {
        if !reasoner.entails(&known, &t.rules()[i].prerequisite)? {
            return Ok(false);
        }
        known.push(t.rules()[i].consequent.clone());
    }
    for (i, rule) in t.rules().iter().enumerate() {
        let mut with_justification = base.clone();
        with_justification.push(rule.justification.clone());
        let consistent = reasoner.consistent(&with_justification)?;
        if members.contains(&i) {
            if !consistent {
                return Ok(false);
            }
        } else if consistent && reasoner.entails(&base, &rule.prerequisite)? {
            return Ok(false);
        }
    }
    Ok(true)
}
