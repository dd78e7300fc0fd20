//! Selection functions ordered by inclusion, and the answer sets of the
//! revisions they give on inconsistent pairs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use se_revise::prop::PropOperator;
use se_revise::revision::SelectionFunction;
use se_revise::verify::{
    brave_suite, inconsistent_pairs, lattice_suite, random_selection, skeptical_suite, Mode,
};

fn main() {
    let width = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut fs = vec![SelectionFunction::Skeptical, SelectionFunction::Brave];
    fs.extend((0..6).map(|i| random_selection(&mut rng, width, &format!("random{i}"))));
    let cases = inconsistent_pairs(
        width,
        Mode::Seeded {
            seed: 1,
            count: 300,
        },
    );
    for circ in [PropOperator::Dalal, PropOperator::Drastic] {
        for r in [
            lattice_suite(&circ, &fs, &cases, width),
            skeptical_suite(&circ, &fs, &cases, width),
            brave_suite(&circ, &fs, &cases, width),
        ] {
            println!(
                "{} {}: {} ({} cases)",
                circ.name(),
                r.name,
                if r.passed { "pass" } else { "FAIL" },
                r.cases_checked
            );
        }
    }
}
