//! Recovers the preorders and here sets an operator uses by querying it
//! on probe programs.

use std::sync::Arc;

use se_revise::prop::PropOperator;
use se_revise::revision::LpOperator;
use se_revise::semantics::se_models;
use se_revise::verify::{extract_assignment, extract_here, extract_preorder};
use se_revise::{parse_program, Alphabet, Interpretation};

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q", "r"])?);
    let p = parse_program("p. q :- not r.", Some(&a))?;
    let se = se_models(&p);
    for op in [
        LpOperator::Cardinality,
        LpOperator::brave(PropOperator::Drastic),
    ] {
        let pre = extract_preorder(&op, &se.models())?;
        println!("{}:", op.name());
        for y in Interpretation::all(a.len()) {
            let here: Vec<String> = extract_here(&op, &se, y)
                .iter()
                .map(|x| a.render(x))
                .collect();
            println!(
                "  {:<8} rank {}  here {}",
                a.render(y),
                pre.rank(y),
                here.join(" ")
            );
        }
    }
    let extracted = extract_assignment(&LpOperator::Cardinality, &a)?;
    let rebuilt = LpOperator::parted(extracted);
    let q = parse_program("false :- p.", Some(&a))?;
    let same =
        se_models(&rebuilt.revise(&p, &q)?) == se_models(&LpOperator::Cardinality.revise(&p, &q)?);
    println!("extracted assignment reproduces the revision: {same}");
    Ok(())
}
