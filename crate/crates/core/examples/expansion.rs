//! Expansion, and the drastic and cardinality revisions that fall back
//! from it when the expansion has no SE models.

use std::sync::Arc;

use se_revise::revision::{cardinality_revise, drastic_lp_revise, expand};
use se_revise::semantics::{answer_sets, is_consistent};
use se_revise::{parse_program, Alphabet, Program};

fn report(label: &str, p: &Program) {
    let a = p.alphabet();
    let as_: Vec<String> = answer_sets(p).iter().map(|i| a.render(i)).collect();
    println!("{label}: {}", p.to_string().replace('\n', " "));
    println!("  answer sets: {}", as_.join(" "));
}

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q"])?);
    let p = parse_program("p. q.", Some(&a))?;
    let q = parse_program("false :- p, q.", Some(&a))?;
    let e = expand(&p, &q)?;
    println!("P + Q consistent: {}", is_consistent(&e));
    report("drastic", &drastic_lp_revise(&p, &q)?);
    report("cardinality", &cardinality_revise(&p, &q)?);
    let r = parse_program("q :- not p.", Some(&a))?;
    report("P + R", &expand(&p, &r)?);
    Ok(())
}
