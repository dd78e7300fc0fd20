//! Classical models, reducts, answer sets and SE models.

use crate::error::Result;
use crate::interp::{Interpretation, ModelSet, SePair, SeSet};
use crate::syntax::{Program, Rule};

/// `{Y ∈ Ω | Y ⊨ P}`.
pub fn classical_models(p: &Program) -> ModelSet {
    let n = p.width();
    ModelSet::from_iter(
        n,
        Interpretation::all(n).filter(|&y| p.rules().iter().all(|r| r.satisfied_by(y))),
    )
}

/// `P^Y = {H⁺ ← B⁺ | H⁻ ⊆ Y, B⁻ ∩ Y = ∅}`.
pub fn reduct(p: &Program, y: Interpretation) -> Program {
    Program::from_parts(p.alphabet().clone(), reduct_rules(p.rules(), y))
}

fn reduct_rules(rules: &[Rule], y: Interpretation) -> Vec<Rule> {
    rules
        .iter()
        .filter(|r| r.head_neg.is_subset(y) && r.body_neg.intersection(y).is_empty())
        .map(|r| Rule {
            head_pos: r.head_pos,
            body_pos: r.body_pos,
            ..Rule::default()
        })
        .collect()
}

/// Classical satisfaction of a negation-free rule list.
#[inline]
fn positive_model(rules: &[Rule], x: Interpretation) -> bool {
    rules
        .iter()
        .all(|r| !r.body_pos.is_subset(x) || !r.head_pos.intersection(x).is_empty())
}

/// Answer sets as the `⊆`-minimal models of the reduct: `Y` such that
/// `Y ⊨ P^Y` and no `X ⊊ Y` satisfies `P^Y`.
pub fn answer_sets(p: &Program) -> ModelSet {
    let n = p.width();
    let mut out = ModelSet::empty(n);
    for y in Interpretation::all(n) {
        let red = reduct_rules(p.rules(), y);
        if positive_model(&red, y) && !y.subsets().any(|x| x != y && positive_model(&red, x)) {
            out.insert(y);
        }
    }
    out
}

/// Answer sets read off an SE set: `(Y, Y) ∈ S` and no `(X, Y) ∈ S` with
/// `X ⊊ Y`.
pub fn answer_sets_of(se: &SeSet) -> ModelSet {
    let mut out = ModelSet::empty(se.width());
    for y in se.models().iter() {
        if se.heres_of(y).len() == 1 {
            out.insert(y);
        }
    }
    out
}

/// `{(X, Y) | X ⊆ Y, Y ⊨ P, X ⊨ P^Y}`.
pub fn se_models(p: &Program) -> SeSet {
    let n = p.width();
    let mut out = SeSet::empty(n);
    for y in Interpretation::all(n) {
        if !p.rules().iter().all(|r| r.satisfied_by(y)) {
            continue;
        }
        let red = reduct_rules(p.rules(), y);
        for x in y.subsets() {
            if positive_model(&red, x) {
                out.insert(SePair::new(x, y).expect("x ⊆ y"));
            }
        }
    }
    out
}

/// First components of `SE(P)`.
pub fn here_projection(p: &Program) -> ModelSet {
    se_models(p).heres()
}

/// `SE(P) = SE(Q)`.
pub fn strong_equiv(p: &Program, q: &Program) -> Result<bool> {
    p.same_alphabet(q)?;
    Ok(se_models(p) == se_models(q))
}

/// `SE(P) ⊆ SE(Q)`.
pub fn se_subset(p: &Program, q: &Program) -> Result<bool> {
    p.same_alphabet(q)?;
    se_models(p).is_subset(&se_models(q))
}

/// A program is consistent iff it has an SE model.
pub fn is_consistent(p: &Program) -> bool {
    !classical_models(p).is_empty()
}
