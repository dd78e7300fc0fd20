use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet, SePair, SeSet};
use crate::prop::TotalPreorder;
use crate::revision::{LpOperator, PartedAssignment};

/// Reads `≤_P` off an operator: `Y ≤_P Y'` iff `Y` is a model of
/// `P ⋆ {(Y,Y),(Y',Y')}`. `P` is represented by the SE set whose pairs
/// are the totals of `models`.
pub fn extract_preorder(op: &LpOperator, models: &ModelSet) -> Result<TotalPreorder> {
    let n = models.width();
    let p = SeSet::from_totals(models);
    let worlds: Vec<Interpretation> = Interpretation::all(n).collect();
    let k = worlds.len();
    let mut le = vec![false; k * k];
    for (i, &y) in worlds.iter().enumerate() {
        for (j, &z) in worlds.iter().enumerate().skip(i) {
            let q = SeSet::from_pairs(n, [SePair::total(y), SePair::total(z)]);
            let out = op.apply(&p, &q).models();
            le[i * k + j] = out.contains(y);
            le[j * k + i] = out.contains(z);
        }
    }
    for i in 0..k {
        for j in 0..k {
            if !le[i * k + j] && !le[j * k + i] {
                return Err(Error::Extraction(format!(
                    "not total: {:b} and {:b} are incomparable",
                    worlds[i].bits(),
                    worlds[j].bits()
                )));
            }
            for l in 0..k {
                if le[i * k + j] && le[j * k + l] && !le[i * k + l] {
                    return Err(Error::Extraction(format!(
                        "not transitive through {:b}, {:b}, {:b}",
                        worlds[i].bits(),
                        worlds[j].bits(),
                        worlds[l].bits()
                    )));
                }
            }
        }
    }
    let ranks = (0..k)
        .map(|i| (0..k).filter(|&j| le[j * k + i] && !le[i * k + j]).count() as u32)
        .collect();
    Ok(TotalPreorder::from_ranks(ranks).dense())
}

/// Reads `P(Y)` off an operator: `X ∈ P(Y)` iff `(X,Y)` survives
/// `P ⋆ {(X,Y),(Y,Y)}`.
pub fn extract_here(op: &LpOperator, p: &SeSet, y: Interpretation) -> ModelSet {
    let n = p.width();
    ModelSet::from_iter(
        n,
        y.subsets().filter(|&x| {
            let pair = SePair::new(x, y).expect("x ⊆ y");
            let q = SeSet::from_pairs(n, [pair, SePair::total(y)]);
            op.apply(p, &q).contains(pair)
        }),
    )
}

/// The parted assignment an RA-compliant operator computes. Preorders for
/// every model set are extracted up front (so `width ≤ 3`), which surfaces
/// non-total or intransitive relations as errors; here-sets are extracted
/// on demand.
pub fn extract_assignment(op: &LpOperator, alphabet: &Alphabet) -> Result<PartedAssignment> {
    let n = alphabet.len();
    if n > 3 {
        return Err(Error::Usage("extraction needs at most three atoms".into()));
    }
    let mut table: HashMap<ModelSet, TotalPreorder> = HashMap::new();
    for bits in 0u64..1 << (1u32 << n) {
        let models = ModelSet::from_iter(
            n,
            Interpretation::all(n).filter(|y| bits >> y.index() & 1 == 1),
        );
        let pre = extract_preorder(op, &models)?;
        table.insert(models, pre);
    }
    let here_op = op.clone();
    Ok(PartedAssignment::new(
        format!("extracted:{}", op.name()),
        move |m| table[m].clone(),
        move |se, y| extract_here(&here_op, se, y),
    ))
}
