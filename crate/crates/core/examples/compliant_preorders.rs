//! Preorders over SE interpretations built from a parted assignment, with
//! each placement of the unselected pairs.

use std::sync::Arc;

use se_revise::revision::PartedAssignment;
use se_revise::semantics::se_models;
use se_revise::verify::{compliant_from_parted, Placement};
use se_revise::{parse_program, Alphabet};

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q"])?);
    let assignment = PartedAssignment::from_json(include_str!("programs/two_atoms.json"), &a)?;
    let se = se_models(&parse_program(include_str!("programs/ex1.lp"), Some(&a))?);
    let q = se_models(&parse_program("p ; q.", Some(&a))?);
    for placement in [Placement::Top, Placement::JustAbove, Placement::NextLevel] {
        let pre = compliant_from_parted(&assignment, &se, placement)?;
        let top = pre.ranks().values().copied().max().unwrap_or(0);
        println!("{placement:?}:");
        for level in 0..=top {
            let pairs: Vec<String> = pre
                .ranks()
                .iter()
                .filter(|(_, &r)| r == level)
                .map(|(s, _)| format!("({}, {})", a.render(s.here()), a.render(s.there())))
                .collect();
            println!("  {level}: {}", pairs.join(" "));
        }
        println!(
            "  compliance: {}",
            pre.compliance_violation(&se).unwrap_or_else(|| "ok".into())
        );
        let min: Vec<String> = pre
            .min(&q)
            .pairs()
            .iter()
            .map(|s| format!("({}, {})", a.render(s.here()), a.render(s.there())))
            .collect();
        println!("  min SE(Q): {}", min.join(" "));
    }
    Ok(())
}
