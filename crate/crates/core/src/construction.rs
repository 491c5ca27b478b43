//! Builders for the counterexample worlds: two classes sharing their
//! science students, the many-class generalization that drives
//! `p(s | any class)` below any target while each class keeps
//! `p(s | class)` above another, and a three-region conjunctive analogue.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::logic::{Formula, Universe};
use crate::rational::{compact, Rational};
use crate::world::{World, WorldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("targets must satisfy 0 < v2 < v1 < 1 (got v1={v1}, v2={v2})")]
    DisjunctiveTargets { v1: String, v2: String },
    #[error("targets must lie strictly between 0 and 1 (got v1={v1}, v2={v2})")]
    ConjunctiveTargets { v1: String, v2: String },
    #[error(transparent)]
    World(#[from] WorldError),
}

/// Science students shared by both classes, arts students per class, and
/// science students outside both classes.
const SHARED_SCIENCE: usize = 3;
const ARTS_PER_CLASS: usize = 2;

/// Two classes `c1`, `c2` with the same three science students and two
/// distinct arts students each, plus `extra_science` science students in
/// neither class. Arts students are the outcomes where `s` is false.
pub fn build_two_class_world(extra_science: usize) -> World {
    let universe = Universe::from_names(["s", "c1", "c2"]).expect("fixed atom names");
    World::builder(universe)
        .unit(SHARED_SCIENCE, &["s", "c1", "c2"])
        .unit(ARTS_PER_CLASS, &["c1"])
        .unit(ARTS_PER_CLASS, &["c2"])
        .unit(extra_science, &["s"])
        .build()
        .expect("two-class world has positive mass")
        .with_name("two-class")
        .with_notes([
            "construction: two-class".to_string(),
            format!("extra_science: {extra_science}"),
        ])
}

/// Targets for the many-class construction together with the derived class
/// size `k` and class count `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    v1: Rational,
    v2: Rational,
    extra_science: usize,
    k: BigInt,
    n: BigInt,
}

fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

impl ConstructionSpec {
    /// Validates `0 < v2 < v1 < 1` and takes `k`, `n` as the least integers
    /// with `k >= v1/(1-v1)` and `n >= k(1-v2)/v2`.
    pub fn new(
        v1: Rational,
        v2: Rational,
        extra_science: usize,
    ) -> Result<ConstructionSpec, ConstructionError> {
        let one = Rational::one();
        if !(v2.is_positive() && v2 < v1 && v1 < one) {
            return Err(ConstructionError::DisjunctiveTargets {
                v1: compact(&v1),
                v2: compact(&v2),
            });
        }
        let k = ceil(&(&v1 / (&one - &v1)));
        let n = ceil(&(Rational::from_integer(k.clone()) * (&one - &v2) / &v2));
        Ok(ConstructionSpec {
            v1,
            v2,
            extra_science,
            k,
            n,
        })
    }

    pub fn v1(&self) -> &Rational {
        &self.v1
    }

    pub fn v2(&self) -> &Rational {
        &self.v2
    }

    pub fn extra_science(&self) -> usize {
        self.extra_science
    }

    /// Science students per class.
    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// Number of classes.
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// `p(s | c_i) = k/(k+1)`.
    pub fn class_conditional(&self) -> Rational {
        Rational::new(self.k.clone(), &self.k + 1)
    }

    /// `p(s | c_1 ∨ … ∨ c_n) = k/(k+n)`.
    pub fn union_conditional(&self) -> Rational {
        Rational::new(self.k.clone(), &self.k + &self.n)
    }
}

/// A materialized many-class world.
#[derive(Debug, Clone)]
pub struct DisjunctiveWorld {
    pub world: World,
    pub k: usize,
    pub n: usize,
}

impl DisjunctiveWorld {
    pub fn science() -> Formula {
        Formula::var("s")
    }

    /// Membership in class `i` (1-based).
    pub fn class(&self, i: usize) -> Formula {
        assert!(
            (1..=self.n).contains(&i),
            "class {i} out of range 1..={}",
            self.n
        );
        Formula::var(&format!("c{i}"))
    }

    /// Membership in at least one class.
    pub fn any_class(&self) -> Formula {
        Formula::disjunction((1..=self.n).map(|i| self.class(i)))
    }
}

/// `k` science students in every one of `n` classes, one arts student per
/// class (no arts student in two classes), and `extra_science` science
/// students outside all classes.
///
/// Panics if `k` or `n` do not fit in memory-sized integers; targets that
/// extreme cannot be materialized anyway.
pub fn build_disjunctive_world(spec: &ConstructionSpec) -> DisjunctiveWorld {
    let k: usize = (&spec.k).try_into().expect("class size fits in usize");
    let n: usize = (&spec.n).try_into().expect("class count fits in usize");
    let mut names = vec!["s".to_string()];
    names.extend((1..=n).map(|i| format!("c{i}")));
    let universe = Universe::from_names(names.iter().map(String::as_str)).expect("generated names");
    let every_class: Vec<usize> = (0..=n).collect();
    let outcomes = std::iter::repeat_n(every_class, k)
        .chain((1..=n).map(|i| vec![i]))
        .chain(std::iter::repeat_n(vec![0], spec.extra_science))
        .map(|positions| (Rational::one(), positions));
    let world = World::new(universe, outcomes)
        .expect("disjunctive world has positive mass")
        .with_name("general")
        .with_notes([
            "construction: general".to_string(),
            format!(
                "v1: {}  v2: {}  extra_science: {}",
                compact(&spec.v1),
                compact(&spec.v2),
                spec.extra_science
            ),
            format!("k: {k}  n: {n}"),
        ]);
    DisjunctiveWorld { world, k, n }
}

/// A world over `a`, `b`, `c` with `p(c|a) = p(c|b) = v1` and
/// `p(c|a∧b) = v2`.
///
/// Region `a∧b` has weight 1 with a `v2` share of `c`; regions `a∧¬b` and
/// `¬a∧b` have weight `M` each with a share `x = v1 + (v1-v2)/M`; region
/// `¬a∧¬b` has weight 1 and no `c`. `M` is the least positive integer
/// keeping `x` within `[0, 1]`. Zero-weight parts of a region are omitted.
pub fn build_conjunctive_world(v1: Rational, v2: Rational) -> Result<World, ConstructionError> {
    let one = Rational::one();
    let inside = |v: &Rational| v.is_positive() && *v < one;
    if !inside(&v1) || !inside(&v2) {
        return Err(ConstructionError::ConjunctiveTargets {
            v1: compact(&v1),
            v2: compact(&v2),
        });
    }
    let bound = [one.clone(), (&v1 - &v2) / (&one - &v1), (&v2 - &v1) / &v1]
        .into_iter()
        .max()
        .expect("non-empty");
    let m = Rational::from_integer(ceil(&bound));
    let x = &v1 + (&v1 - &v2) / &m;

    let universe = Universe::from_names(["a", "b", "c"]).expect("fixed atom names");
    let (a, b, c) = (0, 1, 2);
    let parts = [
        (v2.clone(), vec![a, b, c]),
        (&one - &v2, vec![a, b]),
        (&m * &x, vec![a, c]),
        (&m * (&one - &x), vec![a]),
        (&m * &x, vec![b, c]),
        (&m * (&one - &x), vec![b]),
        (one.clone(), vec![]),
    ];
    let world = World::new(universe, parts.into_iter().filter(|(w, _)| !w.is_zero()))?
        .with_name("conjunctive")
        .with_notes([
            "construction: conjunctive".to_string(),
            format!("v1: {}  v2: {}", compact(&v1), compact(&v2)),
            format!("region weight M: {}", compact(&m)),
        ]);
    Ok(world)
}
