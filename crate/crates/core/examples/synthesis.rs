//! Builds programs from SE sets, in the tightest class that admits each.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use se_revise::semantics::se_models;
use se_revise::synth::synthesize_tightest;
use se_revise::verify::sample_se_set;
use se_revise::{Alphabet, ProgramClass};

fn main() -> se_revise::Result<()> {
    let a = Arc::new(Alphabet::new(["p", "q", "r"])?);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for class in [ProgramClass::Glp, ProgramClass::Dlp, ProgramClass::Nlp] {
        let s = sample_se_set(&mut rng, a.len(), class);
        let p = synthesize_tightest(&s, &a)?;
        println!(
            "sampled {} set, {} pairs -> {} program:",
            class.name(),
            s.len(),
            p.class().name()
        );
        println!("  {}", p.to_string().replace('\n', "\n  "));
        assert_eq!(se_models(&p), s);
    }
    Ok(())
}
