//! KM and RA postulate checks, exhaustive at small widths and seeded
//! above, with a failing operator whose witness is replayed.

use std::sync::Arc;

use se_revise::prop::PropOperator;
use se_revise::revision::LpOperator;
use se_revise::verify::{check_km, check_km_fn, check_ra, render_reports, replay_km, Mode};
use se_revise::{Alphabet, ModelSet};

fn main() -> se_revise::Result<()> {
    let two = Arc::new(Alphabet::new(["p", "q"])?);
    let three = Arc::new(Alphabet::new(["p", "q", "r"])?);

    println!("dalal, exhaustive over two atoms:");
    println!(
        "{}",
        render_reports(&check_km(&PropOperator::Dalal, &two, Mode::Exhaustive)?)
    );

    let conj = |phi: &ModelSet, psi: &ModelSet| phi.intersection(psi).unwrap();
    let reports = check_km_fn(&conj, &two, Mode::Exhaustive)?;
    println!("plain conjunction:");
    println!("{}", render_reports(&reports));
    for r in reports.iter().filter(|r| !r.passed) {
        println!(
            "{} witness replays: {}",
            r.postulate,
            replay_km(&conj, &two, r)?
        );
    }

    println!("cardinality, exhaustive over two atoms:");
    println!(
        "{}",
        render_reports(&check_ra(&LpOperator::Cardinality, &two, Mode::Exhaustive)?)
    );
    println!("skeptical dalal, seeded over three atoms:");
    let mode = Mode::Seeded {
        seed: 7,
        count: 500,
    };
    println!(
        "{}",
        render_reports(&check_ra(
            &LpOperator::skeptical(PropOperator::Dalal),
            &three,
            mode
        )?)
    );
    Ok(())
}
