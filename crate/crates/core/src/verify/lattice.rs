use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_se_sets, sample_se_set, Mode};
use crate::interp::{Interpretation, ModelSet, SePair, SeSet};
use crate::prop::PropOperator;
use crate::revision::{lattice_leq, LpOperator, SelectionFunction};
use crate::semantics::answer_sets_of;
use crate::syntax::ProgramClass;

/// Outcome of a property suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub cases_checked: u64,
    pub detail: Option<String>,
}

impl SuiteReport {
    fn new(name: &str, cases: u64, failure: Option<String>) -> Self {
        SuiteReport {
            name: name.into(),
            passed: failure.is_none(),
            cases_checked: cases,
            detail: failure,
        }
    }
}

/// `(SE(P), SE(Q))` pairs with `P + Q` inconsistent: every such pair at
/// two atoms or fewer in exhaustive mode, else `count` seeded draws.
pub fn inconsistent_pairs(width: usize, mode: Mode) -> Vec<(SeSet, SeSet)> {
    match mode {
        Mode::Exhaustive => {
            let sets = enumerate_se_sets(width, ProgramClass::Glp);
            let mut out = Vec::new();
            for p in &sets {
                for q in &sets {
                    if !p.intersects_unchecked(q) {
                        out.push((p.clone(), q.clone()));
                    }
                }
            }
            out
        }
        Mode::Seeded { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(count);
            while out.len() < count {
                let p = sample_se_set(&mut rng, width, ProgramClass::Glp);
                let q = sample_se_set(&mut rng, width, ProgramClass::Glp);
                if !p.intersects_unchecked(&q) {
                    out.push((p, q));
                }
            }
            out
        }
    }
}

/// A random valid selection function given as a table.
pub fn random_selection<R: Rng + ?Sized>(
    rng: &mut R,
    width: usize,
    name: &str,
) -> SelectionFunction {
    let table: Vec<Vec<Interpretation>> = Interpretation::all(width)
        .map(|y| {
            y.subsets()
                .filter(|&x| x == y || rng.random_bool(0.5))
                .collect()
        })
        .collect();
    let table = Arc::new(table);
    SelectionFunction::from_fn(name, move |y| table[y.index()].clone())
}

/// Some `(Y, X)` with `X ∈ f2(Y) ∖ f1(Y)`.
fn separating_here(
    f1: &SelectionFunction,
    f2: &SelectionFunction,
    width: usize,
) -> Option<(Interpretation, Interpretation)> {
    Interpretation::all(width).find_map(|y| {
        f2.eval(y, width)
            .iter()
            .find(|&x| !f1.selects(x, y))
            .map(|x| (y, x))
    })
}

/// The pair used to separate selection functions: `SE(Q) = {(X,Y),(Y,Y)}`
/// and `P` with every world except `Y` as a total model, so `P + Q` is
/// inconsistent and any KM operator revises `mod(P)` by `{Y}` to `{Y}`.
pub fn separating_programs(y: Interpretation, x: Interpretation, width: usize) -> (SeSet, SeSet) {
    let mut others = ModelSet::full(width);
    others.remove(y);
    let p = SeSet::from_totals(&others);
    let q = SeSet::from_pairs(width, [SePair::new(x, y).expect("x ⊆ y"), SePair::total(y)]);
    (p, q)
}

fn answer_sets(circ: &PropOperator, f: &SelectionFunction, p: &SeSet, q: &SeSet) -> ModelSet {
    let op = LpOperator::PropBased {
        circ: circ.clone(),
        f: f.clone(),
    };
    answer_sets_of(&op.apply(p, q))
}

/// Answer sets grow along `⊑`: when `f1 ⊑ f2`, `AS(P ⋆₁ Q) ⊆ AS(P ⋆₂ Q)`
/// on every case; when not, the separating programs break inclusion.
pub fn lattice_suite(
    circ: &PropOperator,
    fs: &[SelectionFunction],
    cases: &[(SeSet, SeSet)],
    width: usize,
) -> SuiteReport {
    let table: Vec<Vec<ModelSet>> = fs
        .par_iter()
        .map(|f| {
            cases
                .iter()
                .map(|(p, q)| answer_sets(circ, f, p, q))
                .collect()
        })
        .collect();
    let mut checked = 0u64;
    for (i, f1) in fs.iter().enumerate() {
        for (j, f2) in fs.iter().enumerate() {
            if lattice_leq(f1, f2, width) {
                checked += cases.len() as u64;
                if let Some(k) =
                    (0..cases.len()).find(|&k| !table[i][k].subset_unchecked(&table[j][k]))
                {
                    return SuiteReport::new(
                        "lattice",
                        checked,
                        Some(format!(
                            "{} ⊑ {} but inclusion fails on case {k}",
                            f1.name(),
                            f2.name()
                        )),
                    );
                }
            } else {
                checked += 1;
                let (y, x) = separating_here(f1, f2, width).expect("f1 ⋢ f2");
                let (p, q) = separating_programs(y, x, width);
                if answer_sets(circ, f1, &p, &q).subset_unchecked(&answer_sets(circ, f2, &p, &q)) {
                    return SuiteReport::new(
                        "lattice",
                        checked,
                        Some(format!(
                            "{} ⋢ {} yet the separating pair keeps inclusion",
                            f1.name(),
                            f2.name()
                        )),
                    );
                }
            }
        }
    }
    SuiteReport::new("lattice", checked, None)
}

/// Only the skeptical `f` gives `AS(P ⋆ Q) ⊆ AS(Q)` on inconsistent
/// pairs.
pub fn skeptical_suite(
    circ: &PropOperator,
    fs: &[SelectionFunction],
    cases: &[(SeSet, SeSet)],
    width: usize,
) -> SuiteReport {
    let mut checked = 0u64;
    for f in fs {
        let skeptical = lattice_leq(f, &SelectionFunction::Skeptical, width);
        if skeptical {
            checked += cases.len() as u64;
            let bad = cases.par_iter().position_first(|(p, q)| {
                !answer_sets(circ, f, p, q).subset_unchecked(&answer_sets_of(q))
            });
            if let Some(k) = bad {
                return SuiteReport::new(
                    "skeptical",
                    checked,
                    Some(format!("{} fails on case {k}", f.name())),
                );
            }
        } else {
            checked += 1;
            let (y, x) =
                separating_here(f, &SelectionFunction::Skeptical, width).expect("not skeptical");
            let (p, q) = separating_programs(y, x, width);
            if answer_sets(circ, f, &p, &q).subset_unchecked(&answer_sets_of(&q)) {
                return SuiteReport::new(
                    "skeptical",
                    checked,
                    Some(format!("non-skeptical {} keeps the inclusion", f.name())),
                );
            }
        }
    }
    SuiteReport::new("skeptical", checked, None)
}

/// Only the brave `f` gives `AS(P ⋆ Q) = mod(P) ∘ mod(Q)` on
/// inconsistent pairs.
pub fn brave_suite(
    circ: &PropOperator,
    fs: &[SelectionFunction],
    cases: &[(SeSet, SeSet)],
    width: usize,
) -> SuiteReport {
    let mut checked = 0u64;
    for f in fs {
        let brave = lattice_leq(&SelectionFunction::Brave, f, width);
        if brave {
            checked += cases.len() as u64;
            let bad = cases.par_iter().position_first(|(p, q)| {
                answer_sets(circ, f, p, q) != circ.revise_unchecked(&p.models(), &q.models())
            });
            if let Some(k) = bad {
                return SuiteReport::new(
                    "brave",
                    checked,
                    Some(format!("{} fails on case {k}", f.name())),
                );
            }
        } else {
            checked += 1;
            let (y, x) = separating_here(&SelectionFunction::Brave, f, width).expect("not brave");
            let (p, q) = separating_programs(y, x, width);
            if answer_sets(circ, f, &p, &q) == circ.revise_unchecked(&p.models(), &q.models()) {
                return SuiteReport::new(
                    "brave",
                    checked,
                    Some(format!("non-brave {} matches the model revision", f.name())),
                );
            }
        }
    }
    SuiteReport::new("brave", checked, None)
}

/// `op` maps every pair of `class` inputs over `width ≤ 2` atoms to an
/// SE set of the same class.
pub fn class_preservation_suite(op: &LpOperator, class: ProgramClass, width: usize) -> SuiteReport {
    let sets = enumerate_se_sets(width, class);
    let k = sets.len();
    let bad = (0..k * k)
        .into_par_iter()
        .find_first(|&i| !class.admits(&op.apply(&sets[i / k], &sets[i % k])));
    let name = format!("{} preserves {}", op.name(), class.name());
    SuiteReport::new(
        &name,
        (k * k) as u64,
        bad.map(|i| format!("output of case {i} leaves the class")),
    )
}

/// The first pair on which two operators disagree.
pub fn separating_pair(a: &LpOperator, b: &LpOperator, width: usize) -> Option<(SeSet, SeSet)> {
    let sets = enumerate_se_sets(width, ProgramClass::Glp);
    let k = sets.len();
    (0..k * k)
        .into_par_iter()
        .find_first(|&i| a.apply(&sets[i / k], &sets[i % k]) != b.apply(&sets[i / k], &sets[i % k]))
        .map(|i| (sets[i / k].clone(), sets[i % k].clone()))
}
