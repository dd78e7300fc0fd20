//! A parted assignment loaded from JSON, the revision it induces, and a
//! membership query on the result.

use std::sync::Arc;

use se_revise::revision::{mc_se, LpOperator, PartedAssignment};
use se_revise::semantics::se_models;
use se_revise::{parse_program, Alphabet, SePair};

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q"])?);
    let assignment = PartedAssignment::from_json(include_str!("programs/two_atoms.json"), &a)?;
    let p = parse_program(include_str!("programs/ex1.lp"), Some(&a))?;
    let se = se_models(&p);
    assignment.validate(&se)?;
    let pre = assignment.preorder(&se.models());
    for y in se_revise::Interpretation::all(a.len()) {
        let here: Vec<String> = assignment
            .here_set(&se, y)
            .iter()
            .map(|x| a.render(x))
            .collect();
        println!(
            "Y = {:<6} rank {}  P(Y) = {}",
            a.render(y),
            pre.rank(y),
            here.join(" ")
        );
    }
    let op = LpOperator::parted(assignment);
    for text in ["p ; q.", "p :- q. q :- p.", "q :- p."] {
        let q = parse_program(text, Some(&a))?;
        let r = op.revise(&p, &q)?;
        println!("P * ({text}) = {}", r.to_string().replace('\n', " "));
    }
    let q = parse_program("p ; q.", Some(&a))?;
    let pair = SePair::new(
        a.parse_interpretation("{}")?,
        a.parse_interpretation("{p,q}")?,
    )?;
    println!(
        "({{}}, {{p,q}}) in SE(P * Q): {}",
        mc_se(&op, &p, &q, pair)?
    );
    Ok(())
}
