//! Dalal and drastic revision of formulas, and the faithful preorder
//! behind each.

use se_revise::prop::PropOperator;
use se_revise::{parse_formula, Alphabet, Interpretation, ModelSet};

fn show(a: &Alphabet, m: &ModelSet) -> String {
    m.iter().map(|i| a.render(i)).collect::<Vec<_>>().join(" ")
}

fn main() -> se_revise::Result<()> {
    let a = Alphabet::new(["p", "q", "r"])?;
    let phi = parse_formula("p & q & r", &a)?;
    let psi = parse_formula("~(p & q) & (p | r)", &a)?;
    for op in [PropOperator::Dalal, PropOperator::Drastic] {
        let pre = op.preorder(&phi);
        let ranks: Vec<String> = Interpretation::all(a.len())
            .map(|i| format!("{}:{}", a.render(i), pre.rank(i)))
            .collect();
        println!("{} ranks: {}", op.name(), ranks.join(" "));
        println!(
            "{} revision: {}",
            op.name(),
            show(&a, &op.revise(&phi, &psi)?)
        );
    }
    Ok(())
}
