//! Revision of logic programs under SE-model semantics.

mod bits;

pub mod alphabet;
pub mod cli;
pub mod closure;
pub mod error;
pub mod interp;
pub mod json;
pub mod semantics;
pub mod syntax;
pub mod synth;

pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use interp::{Interpretation, ModelSet, SePair, SeProperties, SeSet};
pub use syntax::{parse_formula, parse_program, Program, ProgramClass, Rule};
pub mod prop;
pub mod revision;
pub mod verify;
