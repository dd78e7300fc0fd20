//! Revision inside the disjunctive and normal classes: the result stays
//! in the class of the inputs.

use std::sync::Arc;

use se_revise::prop::PropOperator;
use se_revise::revision::{class_revise, PartedAssignment, SelectionFunction};
use se_revise::semantics::answer_sets;
use se_revise::{parse_program, Alphabet, ProgramClass};

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q", "r"])?);
    let brave = Arc::new(PartedAssignment::from_prop(
        PropOperator::Dalal,
        SelectionFunction::Brave,
    ));
    let skeptical = Arc::new(PartedAssignment::from_prop(
        PropOperator::Dalal,
        SelectionFunction::Skeptical,
    ));
    let cases = [
        (ProgramClass::Dlp, "p ; q. r :- p.", "false :- r."),
        (ProgramClass::Nlp, "p :- not q. r :- p.", "false :- p, r."),
    ];
    for (class, p, q) in cases {
        let (p, q) = (parse_program(p, Some(&a))?, parse_program(q, Some(&a))?);
        for assignment in [&skeptical, &brave] {
            match class_revise(assignment, &p, &q, class) {
                Ok(r) => {
                    let as_: Vec<String> = answer_sets(&r).iter().map(|i| a.render(i)).collect();
                    let as_ = if as_.is_empty() {
                        "none".to_string()
                    } else {
                        as_.join(" ")
                    };
                    println!(
                        "{} {}: result is {}, answer sets {as_}",
                        class.name(),
                        assignment.name(),
                        r.class().name()
                    );
                }
                Err(e) => println!("{} {}: rejected, {e}", class.name(), assignment.name()),
            }
        }
    }
    Ok(())
}
