use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::{sample_model_set, Mode};
use super::report::PostulateReport;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::ModelSet;
use crate::prop::PropOperator;
use crate::syntax::{parse_formula, render_dnf};

pub const KM_POSTULATES: [&str; 6] = ["R1", "R2", "R3", "R4", "R5", "R6"];

/// Does `(φ, ψ1, ψ2)` violate postulate `id` for `op`? R1–R4 ignore `ψ2`.
pub fn km_violation<F>(op: &F, id: &str, phi: &ModelSet, psi1: &ModelSet, psi2: &ModelSet) -> bool
where
    F: Fn(&ModelSet, &ModelSet) -> ModelSet + ?Sized,
{
    match id {
        "R1" => !op(phi, psi1).subset_unchecked(psi1),
        "R2" => {
            let both = phi.intersect_unchecked(psi1);
            !both.is_empty() && op(phi, psi1) != both
        }
        "R3" => !psi1.is_empty() && op(phi, psi1).is_empty(),
        // Formulas are model sets, so equivalent inputs are equal inputs.
        "R4" => op(phi, psi1) != op(&phi.clone(), &psi1.clone()),
        "R5" => {
            let lhs = op(phi, psi1).intersect_unchecked(psi2);
            !lhs.subset_unchecked(&op(phi, &psi1.intersect_unchecked(psi2)))
        }
        "R6" => {
            let lhs = op(phi, psi1).intersect_unchecked(psi2);
            !lhs.is_empty() && !op(phi, &psi1.intersect_unchecked(psi2)).subset_unchecked(&lhs)
        }
        _ => false,
    }
}

/// Checks R1–R6 for a propositional operator.
pub fn check_km(
    op: &PropOperator,
    alphabet: &Alphabet,
    mode: Mode,
) -> Result<Vec<PostulateReport>> {
    check_km_fn(
        &|phi: &ModelSet, psi: &ModelSet| op.revise_unchecked(phi, psi),
        alphabet,
        mode,
    )
}

/// Checks R1–R6 for any function on model sets.
pub fn check_km_fn<F>(op: &F, alphabet: &Alphabet, mode: Mode) -> Result<Vec<PostulateReport>>
where
    F: Fn(&ModelSet, &ModelSet) -> ModelSet + Sync + ?Sized,
{
    let n = alphabet.len();
    let (pool, pairs, triples): (Vec<ModelSet>, Vec<[usize; 3]>, Vec<[usize; 3]>) = match mode {
        Mode::Exhaustive => {
            if n > 2 {
                return Err(Error::Usage(
                    "exhaustive KM checks need at most two atoms".into(),
                ));
            }
            let pool = ModelSet::enumerate_all(n);
            let k = pool.len();
            let pairs = (0..k * k).map(|i| [i / k, i % k, 0]).collect();
            let triples = (0..k * k * k)
                .map(|i| [i / (k * k), i / k % k, i % k])
                .collect();
            (pool, pairs, triples)
        }
        Mode::Seeded { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pool: Vec<ModelSet> = (0..3 * count)
                .map(|_| sample_model_set(&mut rng, n))
                .collect();
            let cases: Vec<[usize; 3]> =
                (0..count).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect();
            (pool, cases.clone(), cases)
        }
    };
    let reports = KM_POSTULATES
        .iter()
        .map(|&id| {
            let cases = if matches!(id, "R5" | "R6") {
                &triples
            } else {
                &pairs
            };
            let found = cases
                .par_iter()
                .position_first(|&[a, b, c]| km_violation(op, id, &pool[a], &pool[b], &pool[c]));
            PostulateReport::from_search(id, cases.len() as u64, found.map(|i| i as u64), |i| {
                let [a, b, c] = cases[i as usize];
                let mut w = BTreeMap::new();
                w.insert("phi".into(), render_dnf(&pool[a], alphabet));
                w.insert("psi1".into(), render_dnf(&pool[b], alphabet));
                if matches!(id, "R5" | "R6") {
                    w.insert("psi2".into(), render_dnf(&pool[c], alphabet));
                }
                w
            })
        })
        .collect();
    Ok(reports)
}

/// Re-evaluates a failed report's witness. `Ok(true)` means the violation
/// reproduces.
pub fn replay_km<F>(op: &F, alphabet: &Alphabet, report: &PostulateReport) -> Result<bool>
where
    F: Fn(&ModelSet, &ModelSet) -> ModelSet + ?Sized,
{
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let get = |k: &str| -> Result<ModelSet> {
        match w.get(k) {
            Some(t) => parse_formula(t, alphabet),
            None => Ok(ModelSet::full(alphabet.len())),
        }
    };
    Ok(km_violation(
        op,
        &report.postulate,
        &get("phi")?,
        &get("psi1")?,
        &get("psi2")?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["p", "q"]).unwrap()
    }

    #[test]
    fn shipped_operators_pass() {
        for op in [PropOperator::Drastic, PropOperator::Dalal] {
            let reports = check_km(&op, &ab(), Mode::Exhaustive).unwrap();
            assert!(reports.iter().all(|r| r.passed), "{op:?}: {reports:?}");
            assert_eq!(reports[0].cases_checked, 256);
            assert_eq!(reports[5].cases_checked, 4096);
        }
    }

    #[test]
    fn conjunction_fails_r3_and_replays() {
        let conj = |phi: &ModelSet, psi: &ModelSet| phi.intersect_unchecked(psi);
        let reports = check_km_fn(&conj, &ab(), Mode::Exhaustive).unwrap();
        let r3 = &reports[2];
        assert!(!r3.passed);
        assert!(replay_km(&conj, &ab(), r3).unwrap());
        assert!(reports[0].passed && reports[1].passed);
    }

    #[test]
    fn seeded_reports_are_stable() {
        let a = Alphabet::new(["p", "q", "r"]).unwrap();
        let mode = Mode::Seeded {
            seed: 3,
            count: 500,
        };
        let x = check_km(&PropOperator::Dalal, &a, mode).unwrap();
        assert_eq!(x, check_km(&PropOperator::Dalal, &a, mode).unwrap());
        assert!(x.iter().all(|r| r.passed));
    }
}
