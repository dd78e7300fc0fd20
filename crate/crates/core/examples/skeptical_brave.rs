//! The two extreme selection functions on one inconsistent pair: the
//! skeptical operator can lose every answer set, the brave one keeps
//! the propositional revision of the models.

use std::sync::Arc;

use se_revise::prop::PropOperator;
use se_revise::revision::LpOperator;
use se_revise::semantics::{answer_sets, classical_models};
use se_revise::{parse_program, Alphabet, ModelSet};

fn show(a: &Alphabet, m: &ModelSet) -> String {
    if m.is_empty() {
        return "none".into();
    }
    m.iter().map(|i| a.render(i)).collect::<Vec<_>>().join(" ")
}

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q", "r"])?);
    let p = parse_program(include_str!("programs/skeptical_p.lp"), Some(&a))?;
    let q = parse_program(include_str!("programs/skeptical_q.lp"), Some(&a))?;
    let target = PropOperator::Dalal.revise(&classical_models(&p), &classical_models(&q))?;
    println!("mod(P) ∘ mod(Q): {}", show(&a, &target));
    for op in [
        LpOperator::skeptical(PropOperator::Dalal),
        LpOperator::brave(PropOperator::Dalal),
    ] {
        let r = op.revise(&p, &q)?;
        println!("{}:", op.name());
        println!("  {}", r.to_string().replace('\n', "\n  "));
        println!("  answer sets: {}", show(&a, &answer_sets(&r)));
    }
    Ok(())
}
