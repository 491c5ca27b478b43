//! Exhaustive search of cell tables for paradox instances.
//!
//! Candidates are screened with integer cross-multiplication directly on the
//! counts, then every hit is re-checked through the rational checkers on the
//! materialized world before it is emitted.

use rayon::prelude::*;

use super::cells::{default_formulas, space_size, CellTable};
use super::checks::{chung_check, simpson_check};
use super::{ChungVariant, SearchPattern};

const BATCH: u64 = 1 << 16;

/// Count of individuals with `a` true and the total count, restricted to the
/// cells selected by `keep(b, c)`.
fn tally<F: Fn(bool, bool) -> bool>(t: &CellTable, keep: F) -> (u64, u64) {
    let mut with_a = 0u64;
    let mut total = 0u64;
    for (i, &n) in t.counts.iter().enumerate() {
        let (a, b, c) = CellTable::truth_of(i);
        if keep(b, c) {
            total += u64::from(n);
            if a {
                with_a += u64::from(n);
            }
        }
    }
    (with_a, total)
}

/// `x.0/x.1 > y.0/y.1` for positive denominators.
fn above(x: (u64, u64), y: (u64, u64)) -> bool {
    u128::from(x.0) * u128::from(y.1) > u128::from(y.0) * u128::from(x.1)
}

/// Integer-only screen equivalent to the checker for `pattern` with
/// `(a, b, c)` bound to the table's three propositions.
pub fn screen(pattern: SearchPattern, t: &CellTable) -> bool {
    let all = tally(t, |_, _| true);
    if all.1 == 0 {
        return false;
    }
    match pattern {
        SearchPattern::Simpson => {
            let bc = tally(t, |b, c| b && c);
            let c = tally(t, |_, c| c);
            let b_nc = tally(t, |b, c| b && !c);
            let nc = tally(t, |_, c| !c);
            let b = tally(t, |b, _| b);
            [bc, c, b_nc, nc, b].iter().all(|x| x.1 > 0)
                && above(bc, c)
                && above(b_nc, nc)
                && above(all, b)
        }
        SearchPattern::Chung(variant) => {
            let b = tally(t, |b, _| b);
            let c = tally(t, |_, c| c);
            let combined = match variant {
                ChungVariant::Conjunctive => tally(t, |b, c| b && c),
                ChungVariant::Disjunctive => tally(t, |b, c| b || c),
            };
            all.0 > 0
                && b.1 > 0
                && c.1 > 0
                && combined.1 > 0
                && above(b, all)
                && above(c, all)
                && above(all, combined)
        }
    }
}

/// Full rational check of `t` through the world-level checkers.
pub fn verify(pattern: SearchPattern, t: &CellTable) -> bool {
    let Ok(world) = t.to_world() else {
        return false;
    };
    let [a, b, c] = default_formulas();
    let result = match pattern {
        SearchPattern::Simpson => simpson_check(&world, &a, &b, &c).map(|r| r.holds),
        SearchPattern::Chung(v) => chung_check(&world, &a, &b, &c, v).map(|r| r.holds),
    };
    result.expect("cell worlds are over a, b, c")
}

/// The first `limit` tables with entries in `0..=max_cell`, in lexicographic
/// order, whose world matches `pattern`. The output does not depend on the
/// number of worker threads.
pub fn search_counterexamples(
    pattern: SearchPattern,
    max_cell: u32,
    limit: usize,
) -> Vec<CellTable> {
    let size = space_size(max_cell);
    let mut found = Vec::new();
    let mut start = 0;
    while start < size && found.len() < limit {
        let end = (start + BATCH).min(size);
        let hits: Vec<CellTable> = (start..end)
            .into_par_iter()
            .map(|i| CellTable::decode(i, max_cell))
            .filter(|t| screen(pattern, t))
            .collect();
        for table in hits {
            if found.len() == limit {
                break;
            }
            assert!(
                verify(pattern, &table),
                "integer screen and rational checker disagree on {table} for {pattern}"
            );
            found.push(table);
        }
        start = end;
    }
    found
}
