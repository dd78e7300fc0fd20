use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use super::enumerate::{enumerate_se_sets, sample_se_sets, Mode};
use super::report::PostulateReport;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::SeSet;
use crate::revision::LpOperator;
use crate::semantics::se_models;
use crate::syntax::{parse_program, Program, ProgramClass, Rule};
use crate::synth::synthesize;

pub const RA_POSTULATES: [&str; 6] = ["RA1", "RA2", "RA3", "RA4", "RA5", "RA6"];

/// A strongly equivalent rewrite of `p`: rules reversed plus the
/// tautology `a :- a.` for the first atom.
pub fn mutate(p: &Program) -> Program {
    let mut rules: Vec<Rule> = p.rules().iter().rev().cloned().collect();
    if p.width() > 0 {
        rules.push(Rule::new(1, 0, 1, 0));
    }
    Program::new(p.alphabet().clone(), rules).expect("same alphabet")
}

/// Does the case violate postulate `id`? `p`, `q` and `r` are SE sets;
/// RA4 compares `p`, `q` against the strongly equivalent `p2`, `q2`.
pub fn ra_violation(
    op: &LpOperator,
    id: &str,
    p: &SeSet,
    q: &SeSet,
    r: &SeSet,
    variants: Option<(&SeSet, &SeSet)>,
) -> bool {
    match id {
        "RA4" => match variants {
            Some((p2, q2)) => p == p2 && q == q2 && op.apply(p, q) != op.apply(p2, q2),
            None => false,
        },
        "RA5" | "RA6" => {
            let pq = op.apply(p, q);
            let qr = q.intersect_unchecked(r);
            triple_violation(id, &pq, r, &op.apply(p, &qr))
        }
        _ => pair_violation(id, &op.apply(p, q), p, q),
    }
}

fn pair_violation(id: &str, pq: &SeSet, p: &SeSet, q: &SeSet) -> bool {
    match id {
        "RA1" => !pq.subset_unchecked(q),
        "RA2" => {
            let both = p.intersect_unchecked(q);
            !both.is_empty() && *pq != both
        }
        "RA3" => !q.is_empty() && pq.is_empty(),
        _ => false,
    }
}

// `pq` = P ⋆ Q, `p_qr` = P ⋆ (Q + R).
fn triple_violation(id: &str, pq: &SeSet, r: &SeSet, p_qr: &SeSet) -> bool {
    match id {
        "RA5" => !pq.and_subset_unchecked(r, p_qr),
        "RA6" => {
            pq.intersects_unchecked(r) && !(p_qr.subset_unchecked(pq) && p_qr.subset_unchecked(r))
        }
        _ => false,
    }
}

struct Space<'a> {
    op: &'a LpOperator,
    sets: Vec<SeSet>,
    /// Exhaustive runs precompute `P ⋆ Q` and the index of `Q ∩ R`.
    tables: Option<(Vec<SeSet>, Vec<usize>)>,
    exhaustive: bool,
    count: usize,
}

impl Space<'_> {
    fn n_pairs(&self) -> u64 {
        if self.exhaustive {
            (self.sets.len() as u64).pow(2)
        } else {
            self.count as u64
        }
    }

    fn n_triples(&self) -> u64 {
        if self.exhaustive {
            (self.sets.len() as u64).pow(3)
        } else {
            self.count as u64
        }
    }

    /// Indices of case `i`. Pair cases leave the third index unused.
    fn case(&self, i: u64, triple: bool) -> [usize; 3] {
        let k = self.sets.len() as u64;
        if self.exhaustive && triple {
            [
                (i / (k * k)) as usize,
                (i / k % k) as usize,
                (i % k) as usize,
            ]
        } else if self.exhaustive {
            [(i / k) as usize, (i % k) as usize, 0]
        } else {
            let i = i as usize;
            [3 * i, 3 * i + 1, 3 * i + 2]
        }
    }

    fn rev(&self, p: usize, q: usize) -> Cow<'_, SeSet> {
        match &self.tables {
            Some((rev, _)) => Cow::Borrowed(&rev[p * self.sets.len() + q]),
            None => Cow::Owned(self.op.apply(&self.sets[p], &self.sets[q])),
        }
    }

    fn rev_qr(&self, p: usize, q: usize, r: usize) -> Cow<'_, SeSet> {
        match &self.tables {
            Some((rev, inter)) => {
                let k = self.sets.len();
                Cow::Borrowed(&rev[p * k + inter[q * k + r]])
            }
            None => Cow::Owned(self.op.apply(
                &self.sets[p],
                &self.sets[q].intersect_unchecked(&self.sets[r]),
            )),
        }
    }
}

/// Checks RA1–RA6 for an LP operator. Exhaustive mode needs two atoms at
/// most and walks all 162² pairs and 162³ triples; seeded mode draws
/// `count` triples of GLP SE sets.
pub fn check_ra(
    op: &LpOperator,
    alphabet: &Arc<Alphabet>,
    mode: Mode,
) -> Result<Vec<PostulateReport>> {
    let n = alphabet.len();
    let (sets, exhaustive, count) = match mode {
        Mode::Exhaustive => {
            if n > 2 {
                return Err(Error::Usage(
                    "exhaustive RA checks need at most two atoms".into(),
                ));
            }
            (enumerate_se_sets(n, ProgramClass::Glp), true, 0)
        }
        Mode::Seeded { seed, count } => (
            sample_se_sets(n, ProgramClass::Glp, seed, 3 * count),
            false,
            count,
        ),
    };
    let tables = exhaustive.then(|| {
        let k = sets.len();
        let ids: HashMap<&SeSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let rev: Vec<SeSet> = (0..k * k)
            .into_par_iter()
            .map(|i| op.apply(&sets[i / k], &sets[i % k]))
            .collect();
        let inter: Vec<usize> = (0..k * k)
            .map(|i| ids[&sets[i / k].intersect_unchecked(&sets[i % k])])
            .collect();
        (rev, inter)
    });
    let space = Space {
        op,
        sets,
        tables,
        exhaustive,
        count,
    };
    let programs: Vec<(Program, Program, SeSet, SeSet)> = space
        .sets
        .par_iter()
        .map(|s| {
            let canon = synthesize(s, alphabet, ProgramClass::Glp).expect("well-defined");
            let mutated = mutate(&canon);
            let (sc, sm) = (se_models(&canon), se_models(&mutated));
            (canon, mutated, sc, sm)
        })
        .collect();

    let mut reports = Vec::with_capacity(6);
    for id in RA_POSTULATES {
        let triple = matches!(id, "RA5" | "RA6");
        let total = if triple {
            space.n_triples()
        } else {
            space.n_pairs()
        };
        let found = (0..total).into_par_iter().find_first(|&i| {
            let [a, b, c] = space.case(i, triple);
            match id {
                "RA4" => {
                    let (_, _, pa, pa2) = &programs[a];
                    let (_, _, qb, qb2) = &programs[b];
                    ra_violation(op, id, pa, qb, qb, Some((pa2, qb2)))
                }
                "RA5" | "RA6" => {
                    triple_violation(id, &space.rev(a, b), &space.sets[c], &space.rev_qr(a, b, c))
                }
                _ => pair_violation(id, &space.rev(a, b), &space.sets[a], &space.sets[b]),
            }
        });
        reports.push(PostulateReport::from_search(id, total, found, |i| {
            let [a, b, c] = space.case(i, triple);
            let mut w = BTreeMap::new();
            w.insert("P".into(), programs[a].0.to_string());
            w.insert("Q".into(), programs[b].0.to_string());
            if id == "RA4" {
                w.insert("P'".into(), programs[a].1.to_string());
                w.insert("Q'".into(), programs[b].1.to_string());
            }
            if triple {
                w.insert("R".into(), programs[c].0.to_string());
            }
            w
        }));
    }
    Ok(reports)
}

/// Re-evaluates a failed report's witness programs. `Ok(true)` means the
/// violation reproduces.
pub fn replay_ra(
    op: &LpOperator,
    alphabet: &Arc<Alphabet>,
    report: &PostulateReport,
) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let se = |k: &str| -> Result<Option<SeSet>> {
        w.get(k)
            .map(|t| parse_program(t, Some(alphabet)).map(|p| se_models(&p)))
            .transpose()
    };
    let full = SeSet::full(alphabet.len());
    let p = se("P")?.unwrap_or_else(|| full.clone());
    let q = se("Q")?.unwrap_or_else(|| full.clone());
    let r = se("R")?.unwrap_or(full);
    let (p2, q2) = (se("P'")?, se("Q'")?);
    let variants = p2.as_ref().zip(q2.as_ref());
    Ok(ra_violation(op, &report.postulate, &p, &q, &r, variants))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::PropOperator;
    use crate::revision::SelectionFunction;

    fn ab(n: usize) -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["p", "q", "r"].into_iter().take(n)).unwrap())
    }

    #[test]
    fn drastic_lp_passes_at_one_atom() {
        let reports = check_ra(&LpOperator::DrasticLp, &ab(1), Mode::Exhaustive).unwrap();
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
        assert_eq!(reports[0].cases_checked, 36);
        assert_eq!(reports[4].cases_checked, 216);
    }

    #[test]
    fn missing_y_fails_ra3_and_replays() {
        let f = SelectionFunction::from_fn("strict", |y| y.subsets().filter(|&x| x != y).collect());
        let op = LpOperator::PropBased {
            circ: PropOperator::Dalal,
            f,
        };
        let a = ab(2);
        let reports = check_ra(&op, &a, Mode::Exhaustive).unwrap();
        let ra3 = &reports[2];
        assert!(!ra3.passed);
        assert!(replay_ra(&op, &a, ra3).unwrap());
    }

    #[test]
    fn rhs_only_operator_fails_ra2() {
        let op = LpOperator::custom("rhs", |_, q| q.clone());
        let a = ab(1);
        let reports = check_ra(&op, &a, Mode::Exhaustive).unwrap();
        assert!(!reports[1].passed);
        assert!(replay_ra(&op, &a, &reports[1]).unwrap());
        assert!(reports[0].passed && reports[2].passed && reports[3].passed);
    }

    #[test]
    fn mutation_preserves_se_models() {
        for s in enumerate_se_sets(2, ProgramClass::Glp) {
            let p = synthesize(&s, &ab(2), ProgramClass::Glp).unwrap();
            let m = mutate(&p);
            assert_ne!(p.to_string(), m.to_string());
            assert_eq!(se_models(&m), s);
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let mode = Mode::Seeded {
            seed: 11,
            count: 200,
        };
        let op = LpOperator::skeptical(PropOperator::Dalal);
        let x = check_ra(&op, &ab(3), mode).unwrap();
        assert!(x.iter().all(|r| r.passed), "{x:?}");
        assert_eq!(x, check_ra(&op, &ab(3), mode).unwrap());
    }
}
