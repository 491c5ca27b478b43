use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use favour::construction::{
    build_conjunctive_world, build_disjunctive_world, build_two_class_world, ConstructionSpec,
    DisjunctiveWorld,
};
use favour::defaults::{
    compute_extensions, parse_theory, query, verify_extension, DefaultTheory, QueryMode,
};
use favour::logic::{parse_formula_in, Formula};
use favour::paradox::{
    check_disjunction_principle, chung_check, nine_antecedent_profile, parse_cells,
    proposition1_check, proposition2_audit, search_counterexamples, simpson_check, ChungVariant,
    Comparison, MixedDirections, Prop1Verdict, SearchPattern, ANTECEDENT_LABELS,
};
use favour::rational::parse_rational;
use favour::report::Report;
use favour::world::{parse_world, FavourVerdict, World};
use favour::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "favour",
    version,
    about = "Exact favouring checks, counterexample constructions, paradox searches and normal default reasoning",
    disable_help_flag = true
)]
struct Cli {
    /// Emit the report as JSON
    #[arg(long, global = true)]
    json: bool,

    /// Print help
    #[arg(long, global = true, action = ArgAction::Help)]
    help: Option<bool>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Probability of a formula, optionally conditional on evidence
    #[command(disable_help_flag = true)]
    Eval {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'h', long)]
        hypothesis: String,
        #[arg(short = 'e', long)]
        evidence: Option<String>,
    },
    /// Whether the evidence favours, disfavours or is neutral to the hypothesis
    #[command(disable_help_flag = true)]
    Favours {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'h', long)]
        hypothesis: String,
        #[arg(short = 'e', long)]
        evidence: String,
    },
    /// Simpson's reversal for a, b, c
    Simpson {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        roles: Roles,
    },
    /// Chung's configurations for a, b, c (both variants unless --pattern is given)
    Chung {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        roles: Roles,
        #[arg(long, value_parser = parse_chung)]
        pattern: Option<ChungVariant>,
    },
    /// Conditionals of a given the nine antecedents built from b and c
    Profile {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        roles: Roles,
    },
    /// Whether a and b each favouring c carries over to a | b
    Principle {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        roles: Roles,
    },
    /// Exclusive a, b each favoured by c: is a | b favoured by c
    Prop1 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        roles: Roles,
    },
    /// b and c each favour a: does b & c or b | c favour a
    Prop2 {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        roles: Roles,
    },
    /// Build a counterexample world
    #[command(subcommand)]
    Construct(Construct),
    /// Exhaustive search of cell tables
    Search {
        #[arg(long)]
        pattern: SearchPattern,
        #[arg(long, default_value_t = 4)]
        max_cell: u32,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Write the found tables, one per line
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extensions of a normal default theory
    #[command(disable_help_flag = true)]
    Extensions {
        #[arg(long)]
        theory: PathBuf,
        /// Also report whether each extension entails this formula
        #[arg(short = 'h', long)]
        hypothesis: Option<String>,
    },
    /// Skeptical or credulous entailment from a default theory
    #[command(disable_help_flag = true)]
    Query {
        #[arg(long)]
        theory: PathBuf,
        #[arg(short = 'h', long)]
        hypothesis: String,
        #[arg(long, value_enum, default_value_t = Mode::Skeptical)]
        mode: Mode,
    },
    /// Rewrite prerequisite defaults as prerequisite-free implications
    ToConsequent {
        #[arg(long)]
        theory: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Two classes sharing three science students
    TwoClass {
        #[arg(long, default_value_t = 1)]
        extra: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classes each at least v1 science, their union at most v2
    General {
        #[arg(long, value_parser = parse_rational)]
        v1: Rational,
        #[arg(long, value_parser = parse_rational)]
        v2: Rational,
        #[arg(long, default_value_t = 1)]
        extra: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// p(c|a) = p(c|b) = v1 with p(c|a & b) = v2
    Conjunctive {
        #[arg(long, value_parser = parse_rational)]
        v1: Rational,
        #[arg(long, value_parser = parse_rational)]
        v2: Rational,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Source {
    /// World file, or a file holding a cell table
    #[arg(long, required_unless_present = "cells")]
    world: Option<PathBuf>,
    /// Inline cell table, e.g. "cells a b c : 2 3 8 0 0 7 2 2"
    #[arg(long, conflicts_with = "world")]
    cells: Option<String>,
}

#[derive(Debug, Args)]
struct Roles {
    #[arg(short = 'a')]
    a: Option<String>,
    #[arg(short = 'b')]
    b: Option<String>,
    #[arg(short = 'c')]
    c: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Skeptical,
    Credulous,
}

fn parse_chung(s: &str) -> Result<ChungVariant, String> {
    match s.parse::<SearchPattern>()? {
        SearchPattern::Chung(v) => Ok(v),
        SearchPattern::Simpson => Err("expected chung-conj or chung-disj".into()),
    }
}

enum Failure {
    Usage(String),
    Input(String),
}

type Outcome<T> = Result<T, Failure>;

fn input<E: std::fmt::Display>(context: impl std::fmt::Display) -> impl FnOnce(E) -> Failure {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(input(path.display()))
}

fn write(path: &Path, contents: &str) -> Outcome<()> {
    fs::write(path, contents).map_err(input(path.display()))
}

struct Loaded {
    label: String,
    world: World,
    /// Role formulas implied by a cell table.
    roles: Option<[Formula; 3]>,
}

impl Loaded {
    fn formula(&self, flag: &str, text: &str) -> Outcome<Formula> {
        parse_formula_in(text, self.world.universe()).map_err(input(format!("{flag} `{text}`")))
    }

    fn roles(&self, roles: &Roles) -> Outcome<[Formula; 3]> {
        let mut out = Vec::with_capacity(3);
        for (i, (flag, given)) in [("-a", &roles.a), ("-b", &roles.b), ("-c", &roles.c)]
            .into_iter()
            .enumerate()
        {
            let f = match (given, &self.roles) {
                (Some(text), _) => self.formula(flag, text)?,
                (None, Some(defaults)) => defaults[i].clone(),
                (None, None) => {
                    return Err(Failure::Usage(format!(
                        "{flag} is required unless the source is a cell table"
                    )))
                }
            };
            out.push(f);
        }
        Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
    }
}

fn is_cell_table(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("cells") && l[5..].starts_with(char::is_whitespace))
}

fn load(source: &Source) -> Outcome<Loaded> {
    let (label, text) = match (&source.world, &source.cells) {
        (Some(path), _) => (path.display().to_string(), read(path)?),
        (None, Some(inline)) => ("inline cells".to_string(), inline.clone()),
        (None, None) => return Err(Failure::Usage("--world or --cells is required".into())),
    };
    if is_cell_table(&text) {
        let cells = parse_cells(&text).map_err(input(&label))?;
        let world = cells.to_world().map_err(input(&label))?;
        Ok(Loaded {
            label,
            world,
            roles: Some(cells.formulas()),
        })
    } else {
        let world = parse_world(&text).map_err(input(&label))?;
        Ok(Loaded {
            label,
            world,
            roles: None,
        })
    }
}

/// Parenthesizes formulas whose top-level operator could be misread next
/// to the conditioning bar.
fn operand(f: &Formula) -> String {
    match f {
        Formula::Or(_) | Formula::Implies(..) | Formula::Iff(..) => format!("({f})"),
        _ => f.to_string(),
    }
}

fn cond(h: &Formula, e: &Formula) -> String {
    format!("p({} | {})", operand(h), operand(e))
}

fn prob(h: &Formula) -> String {
    format!("p({})", operand(h))
}

fn verdict(report: &mut Report, name: &str, h: &Formula, e: &Formula, v: &FavourVerdict) {
    report
        .maybe_value(cond(h, e), v.conditional.as_ref())
        .value(prob(h), &v.prior)
        .result(name, v.relation.as_str());
}

fn comparison(report: &mut Report, label: &str, left: &str, right: &str, c: &Comparison) {
    let symbol = match c.expected {
        std::cmp::Ordering::Greater => ">",
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
    };
    report
        .maybe_value(left, c.left.as_ref())
        .maybe_value(right, c.right.as_ref())
        .result(format!("{label} ({left} {symbol} {right})"), c.holds);
}

fn roles_input(report: &mut Report, loaded: &Loaded, [a, b, c]: &[Formula; 3]) {
    report
        .input("world", &loaded.label)
        .input("a", a)
        .input("b", b)
        .input("c", c);
}

fn world_output(report: &mut Report, world: &World, out: Option<&Path>) -> Outcome<()> {
    match out {
        Some(path) => {
            write(path, &world.to_file_string())?;
            report.result("written", path.display());
        }
        None => {
            for line in world.to_file_string().lines() {
                report.line(line);
            }
        }
    }
    Ok(())
}

fn load_theory(path: &Path) -> Outcome<DefaultTheory> {
    parse_theory(&read(path)?).map_err(input(path.display()))
}

fn theory_formula(theory: &DefaultTheory, text: &str) -> Outcome<Formula> {
    parse_formula_in(text, theory.universe()).map_err(input(format!("--hypothesis `{text}`")))
}

/// Drops repeated values (e.g. a shared prior), keeping the first.
fn unique_values(report: &mut Report) {
    let mut seen = std::collections::HashSet::new();
    report.values.retain(|v| seen.insert(v.name.clone()));
}

fn run(command: Command) -> Outcome<Report> {
    let world_err = |label: &str| input::<favour::world::WorldError>(label.to_string());
    Ok(match command {
        Command::Eval {
            source,
            hypothesis,
            evidence,
        } => {
            let loaded = load(&source)?;
            let h = loaded.formula("--hypothesis", &hypothesis)?;
            let mut report = Report::new("eval");
            report.input("world", &loaded.label).input("hypothesis", &h);
            match evidence {
                Some(text) => {
                    let e = loaded.formula("--evidence", &text)?;
                    report.input("evidence", &e);
                    let p = loaded
                        .world
                        .try_conditional(&h, &e)
                        .map_err(world_err(&loaded.label))?;
                    report.maybe_value(cond(&h, &e), p.as_ref());
                }
                None => {
                    let p = loaded
                        .world
                        .probability(&h)
                        .map_err(world_err(&loaded.label))?;
                    report.value(prob(&h), &p);
                }
            }
            report
        }
        Command::Favours {
            source,
            hypothesis,
            evidence,
        } => {
            let loaded = load(&source)?;
            let h = loaded.formula("--hypothesis", &hypothesis)?;
            let e = loaded.formula("--evidence", &evidence)?;
            let v = loaded
                .world
                .favours(&h, &e)
                .map_err(world_err(&loaded.label))?;
            let mut report = Report::new("favours");
            report
                .input("world", &loaded.label)
                .input("hypothesis", &h)
                .input("evidence", &e);
            verdict(&mut report, "verdict", &h, &e, &v);
            report
        }
        Command::Simpson { source, roles } => {
            let loaded = load(&source)?;
            let r = loaded.roles(&roles)?;
            let [a, b, c] = &r;
            let s = simpson_check(&loaded.world, a, b, c).map_err(world_err(&loaded.label))?;
            let mut report = Report::new("simpson");
            roles_input(&mut report, &loaded, &r);
            let nc = c.clone().negate();
            let bc = b.clone().and(c.clone());
            let bnc = b.clone().and(nc.clone());
            comparison(
                &mut report,
                "within c",
                &cond(a, &bc),
                &cond(a, c),
                &s.within_c,
            );
            comparison(
                &mut report,
                "within !c",
                &cond(a, &bnc),
                &cond(a, &nc),
                &s.within_not_c,
            );
            comparison(&mut report, "marginal", &cond(a, b), &prob(a), &s.marginal);
            report.result("verdict", if s.holds { "reversal" } else { "no-reversal" });
            report
        }
        Command::Chung {
            source,
            roles,
            pattern,
        } => {
            let loaded = load(&source)?;
            let r = loaded.roles(&roles)?;
            let [a, b, c] = &r;
            let mut report = Report::new("chung");
            roles_input(&mut report, &loaded, &r);
            let variants = match pattern {
                Some(v) => vec![v],
                None => vec![ChungVariant::Conjunctive, ChungVariant::Disjunctive],
            };
            report.value(
                prob(a),
                &loaded
                    .world
                    .probability(a)
                    .map_err(world_err(&loaded.label))?,
            );
            for variant in variants {
                let name = SearchPattern::Chung(variant).as_str();
                let ch = chung_check(&loaded.world, a, b, c, variant)
                    .map_err(world_err(&loaded.label))?;
                let combined = variant.combine(b, c);
                report
                    .maybe_value(cond(a, b), ch.given_b.as_ref())
                    .maybe_value(cond(a, c), ch.given_c.as_ref())
                    .maybe_value(cond(a, &combined), ch.given_combined.as_ref())
                    .result(format!("{name} applicable"), ch.applicable)
                    .result(name, if ch.holds { "holds" } else { "fails" });
            }
            unique_values(&mut report);
            report
        }
        Command::Profile { source, roles } => {
            let loaded = load(&source)?;
            let r = loaded.roles(&roles)?;
            let [a, b, c] = &r;
            let p = nine_antecedent_profile(&loaded.world, a, b, c)
                .map_err(world_err(&loaded.label))?;
            let mut report = Report::new("profile");
            roles_input(&mut report, &loaded, &r);
            for (label, value) in ANTECEDENT_LABELS.iter().zip(&p.conditionals) {
                report.maybe_value(format!("p(a | {label})"), value.as_ref());
            }
            for bt in &p.betweenness {
                report.result(
                    format!(
                        "between p(a | {}) in [p(a | {}), p(a | {})]",
                        bt.stratum, bt.refined[0], bt.refined[1]
                    ),
                    format!("weak {} strict {}", bt.weak, bt.strict),
                );
            }
            for (given, pair, id) in &p.identities {
                report.result(
                    format!("identity {pair} given {given}"),
                    format!(
                        "{} ({} = {})",
                        id.holds,
                        favour::rational::exact(&id.lhs),
                        favour::rational::exact(&id.rhs)
                    ),
                );
            }
            let mixed = match &p.mixed {
                MixedDirections::Vacuous => "vacuous".to_string(),
                MixedDirections::Holds { above, below } => {
                    format!(
                        "holds (above: {}; below: {})",
                        above.join(", "),
                        below.join(", ")
                    )
                }
                MixedDirections::Violated { above, below } => {
                    format!(
                        "violated (above: {}; below: {})",
                        above.join(", "),
                        below.join(", ")
                    )
                }
            };
            report.result("mixed directions", mixed).result(
                "verdict",
                if p.consistent() {
                    "consistent"
                } else {
                    "inconsistent"
                },
            );
            report
        }
        Command::Principle { source, roles } => {
            let loaded = load(&source)?;
            let r = loaded.roles(&roles)?;
            let [a, b, c] = &r;
            let pr = check_disjunction_principle(&loaded.world, a, b, c)
                .map_err(world_err(&loaded.label))?;
            let mut report = Report::new("principle");
            roles_input(&mut report, &loaded, &r);
            verdict(&mut report, "a favours c", c, a, &pr.from_a);
            verdict(&mut report, "b favours c", c, b, &pr.from_b);
            let either = a.clone().or(b.clone());
            verdict(&mut report, "a | b favours c", c, &either, &pr.from_either);
            unique_values(&mut report);
            report.result("verdict", pr.outcome.as_str());
            report
        }
        Command::Prop1 { source, roles } => {
            let loaded = load(&source)?;
            let r = loaded.roles(&roles)?;
            let [a, b, c] = &r;
            let v = proposition1_check(&loaded.world, a, b, c).map_err(world_err(&loaded.label))?;
            let mut report = Report::new("prop1");
            roles_input(&mut report, &loaded, &r);
            let either = a.clone().or(b.clone());
            match v {
                Prop1Verdict::Confirmed(fv) => {
                    verdict(&mut report, "c favours a | b", &either, c, &fv);
                    report.result("verdict", "confirmed");
                }
                Prop1Verdict::Refuted(fv) => {
                    verdict(&mut report, "c favours a | b", &either, c, &fv);
                    report.result("verdict", "refuted");
                }
                Prop1Verdict::PreconditionFailed(p) => {
                    report
                        .result("verdict", "precondition-failed")
                        .result("failed precondition", format!("{p:?}"));
                }
            }
            report
        }
        Command::Prop2 { source, roles } => {
            let loaded = load(&source)?;
            let r = loaded.roles(&roles)?;
            let [a, b, c] = &r;
            let p2 =
                proposition2_audit(&loaded.world, a, b, c).map_err(world_err(&loaded.label))?;
            let mut report = Report::new("prop2");
            roles_input(&mut report, &loaded, &r);
            verdict(&mut report, "b favours a", a, b, &p2.by_b);
            verdict(&mut report, "c favours a", a, c, &p2.by_c);
            verdict(
                &mut report,
                "b & c favours a",
                a,
                &b.clone().and(c.clone()),
                &p2.by_conjunction,
            );
            verdict(
                &mut report,
                "b | c favours a",
                a,
                &b.clone().or(c.clone()),
                &p2.by_disjunction,
            );
            unique_values(&mut report);
            report.result("verdict", p2.outcome.as_str());
            report
        }
        Command::Construct(Construct::TwoClass { extra, out }) => {
            let world = build_two_class_world(extra);
            let mut report = Report::new("construct two-class");
            report.input("extra", extra);
            let [s, c1, c2] = ["s", "c1", "c2"].map(Formula::var);
            let w = |r: favour::world::Result<Rational>| {
                r.expect("two-class formulas are in the universe")
            };
            report
                .value(prob(&s), &w(world.probability(&s)))
                .value(cond(&s, &c1), &w(world.conditional(&s, &c1)))
                .value(cond(&s, &c2), &w(world.conditional(&s, &c2)));
            let either = c1.clone().or(c2.clone());
            let both = c1.clone().and(c2.clone());
            report
                .value(cond(&s, &either), &w(world.conditional(&s, &either)))
                .value(cond(&s, &both), &w(world.conditional(&s, &both)));
            for e in [&c1, &c2, &either] {
                let v = world.favours(&s, e).expect("in universe");
                report.result(format!("{e} favours s"), v.relation.as_str());
            }
            world_output(&mut report, &world, out.as_deref())?;
            report
        }
        Command::Construct(Construct::General { v1, v2, extra, out }) => {
            let spec = ConstructionSpec::new(v1, v2, extra).map_err(input("construct general"))?;
            let built = build_disjunctive_world(&spec);
            let mut report = Report::new("construct general");
            report
                .input("v1", favour::rational::exact(spec.v1()))
                .input("v2", favour::rational::exact(spec.v2()))
                .input("extra", extra);
            report.result("k", spec.k()).result("n", spec.n());
            let s = DisjunctiveWorld::science();
            let world = &built.world;
            let mut lowest: Option<Rational> = None;
            for i in 1..=built.n {
                let p = world
                    .conditional(&s, &built.class(i))
                    .expect("class atoms exist");
                if lowest.as_ref().is_none_or(|l| p < *l) {
                    lowest = Some(p);
                }
            }
            let lowest = lowest.expect("at least one class");
            let union = world
                .conditional(&s, &built.any_class())
                .expect("class atoms exist");
            report
                .value("min over i of p(s | c_i)", &lowest)
                .value("p(s | c_1 | ... | c_n)", &union)
                .value(prob(&s), &world.probability(&s).expect("s exists"))
                .result("every class at least v1", &lowest >= spec.v1())
                .result("union at most v2", &union <= spec.v2());
            world_output(&mut report, world, out.as_deref())?;
            report
        }
        Command::Construct(Construct::Conjunctive { v1, v2, out }) => {
            let world = build_conjunctive_world(v1.clone(), v2.clone())
                .map_err(input("construct conjunctive"))?;
            let mut report = Report::new("construct conjunctive");
            report
                .input("v1", favour::rational::exact(&v1))
                .input("v2", favour::rational::exact(&v2));
            let [a, b, c] = ["a", "b", "c"].map(Formula::var);
            let both = a.clone().and(b.clone());
            let get = |e: &Formula| world.conditional(&c, e).expect("a, b, c exist");
            report
                .value(cond(&c, &a), &get(&a))
                .value(cond(&c, &b), &get(&b))
                .value(cond(&c, &both), &get(&both));
            world_output(&mut report, &world, out.as_deref())?;
            report
        }
        Command::Search {
            pattern,
            max_cell,
            limit,
            out,
        } => {
            let found = search_counterexamples(pattern, max_cell, limit);
            let mut report = Report::new("search");
            report
                .input("pattern", pattern)
                .input("max-cell", max_cell)
                .input("limit", limit)
                .result("found", found.len());
            let names = ["a", "b", "c"].map(|n| favour::logic::Atom::new(n).expect("valid name"));
            let [a, b, c] = &names;
            let lines: Vec<String> = found.iter().map(|t| t.to_text([a, b, c])).collect();
            match out {
                Some(path) => {
                    let body: String = lines.iter().map(|l| format!("{l}\n")).collect();
                    write(&path, &body)?;
                    report.result("written", path.display());
                }
                None => {
                    for l in lines {
                        report.line(l);
                    }
                }
            }
            report
        }
        Command::Extensions { theory, hypothesis } => {
            let t = load_theory(&theory)?;
            let h = hypothesis
                .map(|text| theory_formula(&t, &text))
                .transpose()?;
            let exts = compute_extensions(&t).map_err(input(theory.display()))?;
            let mut report = Report::new("extensions");
            report.input("theory", theory.display());
            if let Some(h) = &h {
                report.input("hypothesis", h);
            }
            report.result("extensions", exts.len());
            for (i, ext) in exts.iter().enumerate() {
                let n = i + 1;
                let rules: Vec<String> = ext
                    .firing_order()
                    .iter()
                    .map(|&r| format!("[{}] {}", r + 1, t.rules()[r]))
                    .collect();
                report.result(
                    format!("extension {n} generating defaults"),
                    if ext.is_trivial() {
                        "none (facts are inconsistent)".to_string()
                    } else if rules.is_empty() {
                        "none".to_string()
                    } else {
                        rules.join("; ")
                    },
                );
                let base: Vec<String> = ext.base().iter().map(ToString::to_string).collect();
                report.result(format!("extension {n} base"), base.join("; "));
                let ok = verify_extension(&t, ext).map_err(input(theory.display()))?;
                report.result(format!("extension {n} verified"), ok);
                if let Some(h) = &h {
                    let entailed = ext.entails(h).map_err(input(theory.display()))?;
                    report.result(format!("extension {n} entails {h}"), entailed);
                }
            }
            report
        }
        Command::Query {
            theory,
            hypothesis,
            mode,
        } => {
            let t = load_theory(&theory)?;
            let h = theory_formula(&t, &hypothesis)?;
            let (mode, name) = match mode {
                Mode::Skeptical => (QueryMode::Skeptical, "skeptical"),
                Mode::Credulous => (QueryMode::Credulous, "credulous"),
            };
            let answer = query(&t, &h, mode).map_err(input(theory.display()))?;
            let mut report = Report::new("query");
            report
                .input("theory", theory.display())
                .input("hypothesis", &h)
                .input("mode", name)
                .result("entailed", answer);
            report
        }
        Command::ToConsequent { theory, out } => {
            let t = load_theory(&theory)?;
            let rewritten = t.to_consequent_form();
            let mut report = Report::new("to-consequent");
            report.input("theory", theory.display());
            match out {
                Some(path) => {
                    write(&path, &rewritten.to_string())?;
                    report.result("written", path.display());
                }
                None => {
                    for line in rewritten.to_string().lines() {
                        report.line(line);
                    }
                }
            }
            report
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(report) => {
            let text = if cli.json {
                report.to_json()
            } else {
                report.to_text()
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
