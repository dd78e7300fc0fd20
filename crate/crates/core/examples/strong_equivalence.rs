//! Two programs with the same answer sets that are not strongly
//! equivalent, and the SE model that tells them apart.

use std::sync::Arc;

use se_revise::revision::expand;
use se_revise::semantics::{answer_sets, se_models, se_subset, strong_equiv};
use se_revise::{parse_program, Alphabet};

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q"])?);
    let p = parse_program("p.", Some(&a))?;
    let q = parse_program("p :- not q.", Some(&a))?;
    println!("AS(P) == AS(Q): {}", answer_sets(&p) == answer_sets(&q));
    println!("P ≡s Q: {}", strong_equiv(&p, &q)?);
    println!("SE(P) ⊆ SE(Q): {}", se_subset(&p, &q)?);
    let (sp, sq) = (se_models(&p), se_models(&q));
    for pair in sq.pairs().into_iter().filter(|x| !sp.contains(*x)) {
        println!(
            "only in SE(Q): ({}, {})",
            a.render(pair.here()),
            a.render(pair.there())
        );
    }
    let r = parse_program("q.", Some(&a))?;
    let (pr, qr) = (expand(&p, &r)?, expand(&q, &r)?);
    println!(
        "with q. added, answer sets differ: {}",
        answer_sets(&pr) != answer_sets(&qr)
    );
    Ok(())
}
