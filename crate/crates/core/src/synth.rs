//! Programs with a prescribed set of SE models.
//!
//! Every interpretation `Y` that is not a model gets a rule firing only at
//! `Y`; every missing `(X, Y)` below a model `Y` gets a rule whose reduct
//! is present only at `Y` (GLP) or at the models between `X` and `Y`
//! (DLP, NLP) and is violated exactly by the unwanted here-worlds. The
//! output is not minimized.

use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, SeSet};
use crate::syntax::{AtomSet, Program, ProgramClass, Rule};

/// A program of class `class` over `alphabet` with `SE(P) = s`.
pub fn synthesize(s: &SeSet, alphabet: &Arc<Alphabet>, class: ProgramClass) -> Result<Program> {
    if s.width() != alphabet.len() {
        return Err(Error::AlphabetMismatch);
    }
    if !class.admits(s) {
        return Err(Error::Precondition(class.property_name()));
    }
    let n = s.width();
    let full = alphabet.full_mask();
    let co = |y: Interpretation| AtomSet::from_bits(!y.bits() & full);
    let mut rules = Vec::new();
    for y in Interpretation::all(n) {
        if !s.contains_pair(y, y) {
            rules.push(match class {
                ProgramClass::Glp => Rule {
                    head_pos: co(y),
                    head_neg: y,
                    body_pos: y,
                    body_neg: co(y),
                },
                _ => Rule {
                    body_pos: y,
                    body_neg: co(y),
                    ..Rule::default()
                },
            });
            continue;
        }
        let heres = s.heres_of(y);
        for x in y.subsets().filter(|&x| x != y && !heres.contains(x)) {
            rules.push(match class {
                ProgramClass::Glp => Rule {
                    head_pos: y.difference(x),
                    head_neg: y,
                    body_pos: x,
                    body_neg: co(y),
                },
                ProgramClass::Dlp => Rule {
                    head_pos: y.difference(x),
                    head_neg: AtomSet::EMPTY,
                    body_pos: x,
                    body_neg: co(y),
                },
                ProgramClass::Nlp => {
                    let upper = heres
                        .iter()
                        .filter(|h| x.is_subset(*h))
                        .fold(y, |acc, h| acc.intersection(h));
                    let missing = upper.difference(x);
                    debug_assert!(!missing.is_empty());
                    let atom = missing.bits().trailing_zeros();
                    Rule {
                        head_pos: AtomSet::from_bits(1 << atom),
                        head_neg: AtomSet::EMPTY,
                        body_pos: x,
                        body_neg: co(y),
                    }
                }
            });
        }
    }
    Ok(Program::from_parts(alphabet.clone(), rules))
}

/// Synthesizes in the most specific class able to express `s`.
pub fn synthesize_tightest(s: &SeSet, alphabet: &Arc<Alphabet>) -> Result<Program> {
    let class = ProgramClass::tightest_for(s).ok_or(Error::Precondition("well-defined"))?;
    synthesize(s, alphabet, class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::SePair;
    use crate::semantics::{se_models, strong_equiv};
    use crate::syntax::parse_program;

    fn ab() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["p", "q"]).unwrap())
    }

    fn total(b: u32) -> SePair {
        SePair::total(Interpretation::from_bits(b))
    }

    #[test]
    fn single_there_world() {
        let a = ab();
        let s = SeSet::from_pairs(2, [total(0b10)]);
        let r = synthesize(&s, &a, ProgramClass::Glp).unwrap();
        let expected = parse_program("q. false :- p.", Some(&a)).unwrap();
        assert!(strong_equiv(&r, &expected).unwrap());
    }

    #[test]
    fn non_complete_set_as_glp() {
        let a = ab();
        let s = SeSet::from_pairs(2, [total(0), total(0b11)]);
        let r = synthesize(&s, &a, ProgramClass::Glp).unwrap();
        assert_eq!(se_models(&r), s);
        assert_eq!(r.class(), ProgramClass::Glp);
        assert_eq!(
            synthesize(&s, &a, ProgramClass::Dlp),
            Err(Error::Precondition("complete"))
        );
    }

    #[test]
    fn class_of_output() {
        let a = ab();
        let p = parse_program("p :- not q. p ; q.", Some(&a)).unwrap();
        let s = se_models(&p);
        let d = synthesize(&s, &a, ProgramClass::Dlp).unwrap();
        assert!(d.class() <= ProgramClass::Dlp);
        assert_eq!(se_models(&d), s);
        assert!(synthesize(&s, &a, ProgramClass::Nlp).is_err());
        assert_eq!(
            synthesize_tightest(&s, &a).unwrap().class(),
            ProgramClass::Dlp
        );
    }

    #[test]
    fn empty_set_gives_inconsistent_program() {
        let a = ab();
        let r = synthesize(&SeSet::empty(2), &a, ProgramClass::Nlp).unwrap();
        assert!(se_models(&r).is_empty());
    }
}
