use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::closure::{closure, ClosureTarget};
use crate::interp::{Interpretation, ModelSet, SePair, SeSet};
use crate::syntax::{Program, ProgramClass};
use crate::synth::synthesize;

/// How a check suite chooses its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Seeded { seed: u64, count: usize },
}

/// Every SE set over `width` atoms admitted by `class`, in a fixed order.
/// The well-defined sets number `Π_Y (1 + 2^(2^|Y| − 1))`: 162 at two
/// atoms and about five million at three, so `width ≤ 2` is enforced.
pub fn enumerate_se_sets(width: usize, class: ProgramClass) -> Vec<SeSet> {
    assert!(width <= 2, "SE-set enumeration is limited to two atoms");
    let mut acc: Vec<Vec<SePair>> = vec![Vec::new()];
    for y in Interpretation::all(width) {
        let proper: Vec<Interpretation> = y.subsets().filter(|&x| x != y).collect();
        let mut next = Vec::with_capacity(acc.len() * (1 + (1 << proper.len())));
        for base in &acc {
            next.push(base.clone());
            for mask in 0u32..1 << proper.len() {
                let mut s = base.clone();
                s.push(SePair::total(y));
                for (i, &x) in proper.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        s.push(SePair::new(x, y).expect("x ⊆ y"));
                    }
                }
                next.push(s);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|pairs| SeSet::from_pairs(width, pairs))
        .filter(|s| class.admits(s))
        .collect()
}

/// Every model set over `width ≤ 2` atoms.
pub fn enumerate_model_sets(width: usize) -> Vec<ModelSet> {
    ModelSet::enumerate_all(width)
}

/// A random SE set of the given class. Up to two atoms the draw is uniform
/// over the class; above that each there-world is kept with probability
/// 1/2, each of its proper here-worlds with probability 1/2, and the
/// result is closed to the class.
pub fn sample_se_set<R: Rng + ?Sized>(rng: &mut R, width: usize, class: ProgramClass) -> SeSet {
    if width <= 2 {
        let all = enumerate_se_sets(width, class);
        return all[rng.random_range(0..all.len())].clone();
    }
    sample_se_set_open(rng, width, class)
}

fn sample_se_set_open<R: Rng + ?Sized>(rng: &mut R, width: usize, class: ProgramClass) -> SeSet {
    let mut s = SeSet::empty(width);
    for y in Interpretation::all(width) {
        if rng.random_bool(0.5) {
            s.insert(SePair::total(y));
            for x in y.subsets().filter(|&x| x != y) {
                if rng.random_bool(0.5) {
                    s.insert(SePair::new(x, y).expect("x ⊆ y"));
                }
            }
        }
    }
    let target = match class {
        ProgramClass::Glp => return s,
        ProgramClass::Dlp => ClosureTarget::Complete,
        ProgramClass::Nlp => ClosureTarget::HiClosed,
    };
    closure(&s, target).expect("sampled sets are well-defined")
}

/// A random model set; each interpretation is a member with probability
/// 1/2.
pub fn sample_model_set<R: Rng + ?Sized>(rng: &mut R, width: usize) -> ModelSet {
    ModelSet::from_iter(
        width,
        Interpretation::all(width).filter(|_| rng.random_bool(0.5)),
    )
}

/// Deterministic stream of SE sets for a seed.
pub fn sample_se_sets(width: usize, class: ProgramClass, seed: u64, count: usize) -> Vec<SeSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if width <= 2 {
        let all = enumerate_se_sets(width, class);
        return (0..count)
            .map(|_| all[rng.random_range(0..all.len())].clone())
            .collect();
    }
    (0..count)
        .map(|_| sample_se_set_open(&mut rng, width, class))
        .collect()
}

/// Programs of the given class: every one (up to strong equivalence) in
/// exhaustive mode, else a seeded stream.
pub fn sample_programs(alphabet: &Arc<Alphabet>, class: ProgramClass, mode: Mode) -> Vec<Program> {
    let sets = match mode {
        Mode::Exhaustive => enumerate_se_sets(alphabet.len(), class),
        Mode::Seeded { seed, count } => sample_se_sets(alphabet.len(), class, seed, count),
    };
    sets.iter()
        .map(|s| synthesize(s, alphabet, class).expect("sets are sampled within the class"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_at_two_atoms() {
        assert_eq!(enumerate_se_sets(2, ProgramClass::Glp).len(), 162);
        assert_eq!(enumerate_se_sets(1, ProgramClass::Glp).len(), 6);
        assert_eq!(enumerate_se_sets(0, ProgramClass::Glp).len(), 2);
        let dlp = enumerate_se_sets(2, ProgramClass::Dlp).len();
        let nlp = enumerate_se_sets(2, ProgramClass::Nlp).len();
        assert!(nlp < dlp && dlp < 162);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all = enumerate_se_sets(2, ProgramClass::Glp);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn seeded_streams_repeat() {
        let a = sample_se_sets(3, ProgramClass::Nlp, 7, 20);
        let b = sample_se_sets(3, ProgramClass::Nlp, 7, 20);
        assert_eq!(a, b);
        assert!(a.iter().all(SeSet::is_hi_closed));
        assert_ne!(a, sample_se_sets(3, ProgramClass::Nlp, 8, 20));
    }
}
