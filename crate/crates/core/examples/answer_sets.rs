//! Classical models, reducts and answer sets of a small program.

use std::sync::Arc;

use se_revise::semantics::{answer_sets, classical_models, reduct};
use se_revise::{parse_program, Alphabet, ModelSet};

fn show(a: &Alphabet, m: &ModelSet) -> String {
    m.iter().map(|i| a.render(i)).collect::<Vec<_>>().join(" ")
}

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q", "r"])?);
    let p = parse_program("p ; q. r :- p, not q. false :- q, r.", Some(&a))?;
    println!("program:\n{p}");
    println!("models:      {}", show(&a, &classical_models(&p)));
    for y in classical_models(&p).iter() {
        let red = reduct(&p, y);
        println!(
            "reduct at {}: {}",
            a.render(y),
            red.to_string().replace('\n', " ")
        );
    }
    println!("answer sets: {}", show(&a, &answer_sets(&p)));
    Ok(())
}
