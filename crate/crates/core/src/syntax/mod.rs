//! Rules, programs and their concrete syntax.

mod formula;
mod lexer;
mod parse;
mod render;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, SeSet};

pub use formula::{parse_formula, render_dnf, Formula};
pub use parse::{parse_program, parse_program_raw, Literal, RawProgram, RawRule};
pub use render::render_program;

/// Set of atoms, same encoding as an [`Interpretation`].
pub type AtomSet = Interpretation;

/// `H⁺ ; not H⁻ :- B⁺, not B⁻.`
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rule {
    pub head_pos: AtomSet,
    pub head_neg: AtomSet,
    pub body_pos: AtomSet,
    pub body_neg: AtomSet,
}

impl Rule {
    pub fn new(head_pos: u32, head_neg: u32, body_pos: u32, body_neg: u32) -> Rule {
        Rule {
            head_pos: AtomSet::from_bits(head_pos),
            head_neg: AtomSet::from_bits(head_neg),
            body_pos: AtomSet::from_bits(body_pos),
            body_neg: AtomSet::from_bits(body_neg),
        }
    }

    /// Classical satisfaction.
    #[inline]
    pub fn satisfied_by(&self, y: Interpretation) -> bool {
        let body = self.body_pos.is_subset(y) && self.body_neg.intersection(y).is_empty();
        !body || !self.head_pos.intersection(y).is_empty() || !self.head_neg.is_subset(y)
    }

    pub fn class(&self) -> ProgramClass {
        if !self.head_neg.is_empty() {
            ProgramClass::Glp
        } else if self.head_pos.len() > 1 {
            ProgramClass::Dlp
        } else {
            ProgramClass::Nlp
        }
    }

    pub fn is_positive(&self) -> bool {
        self.head_neg.is_empty() && self.body_neg.is_empty()
    }

    fn atoms(&self) -> AtomSet {
        self.head_pos
            .union(self.head_neg)
            .union(self.body_pos)
            .union(self.body_neg)
    }
}

/// Syntactic class, ordered `Nlp < Dlp < Glp`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
pub enum ProgramClass {
    Nlp,
    Dlp,
    Glp,
}

impl ProgramClass {
    pub fn name(self) -> &'static str {
        match self {
            ProgramClass::Nlp => "NLP",
            ProgramClass::Dlp => "DLP",
            ProgramClass::Glp => "GLP",
        }
    }

    pub fn join(self, other: ProgramClass) -> ProgramClass {
        self.max(other)
    }

    /// Whether an SE set has the structure required to be expressed in
    /// this class.
    pub fn admits(self, se: &SeSet) -> bool {
        match self {
            ProgramClass::Glp => se.is_well_defined(),
            ProgramClass::Dlp => se.is_complete(),
            ProgramClass::Nlp => se.is_hi_closed(),
        }
    }

    /// The most specific class able to express `se`, if any.
    pub fn tightest_for(se: &SeSet) -> Option<ProgramClass> {
        [ProgramClass::Nlp, ProgramClass::Dlp, ProgramClass::Glp]
            .into_iter()
            .find(|c| c.admits(se))
    }

    pub(crate) fn property_name(self) -> &'static str {
        match self {
            ProgramClass::Glp => "well-defined",
            ProgramClass::Dlp => "complete",
            ProgramClass::Nlp => "closed under here-intersection",
        }
    }
}

impl fmt::Display for ProgramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ProgramClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nlp" => Ok(ProgramClass::Nlp),
            "dlp" => Ok(ProgramClass::Dlp),
            "glp" => Ok(ProgramClass::Glp),
            _ => Err(Error::InvalidOperator(s.to_string())),
        }
    }
}

/// A finite set of rules over a fixed alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Program {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule>,
    class: ProgramClass,
}

pub fn classify(p: &Program) -> ProgramClass {
    p.class
}

impl Program {
    pub fn new(alphabet: Arc<Alphabet>, rules: Vec<Rule>) -> Result<Program> {
        let full = alphabet.full_mask();
        for r in &rules {
            let extra = r.atoms().bits() & !full;
            if extra != 0 {
                return Err(Error::UnknownAtom(format!("#{}", extra.trailing_zeros())));
            }
        }
        Ok(Program::from_parts(alphabet, rules))
    }

    pub(crate) fn from_parts(alphabet: Arc<Alphabet>, rules: Vec<Rule>) -> Program {
        let class = rules
            .iter()
            .map(Rule::class)
            .max()
            .unwrap_or(ProgramClass::Nlp);
        Program {
            alphabet,
            rules,
            class,
        }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Program {
        Program::from_parts(alphabet, Vec::new())
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn width(&self) -> usize {
        self.alphabet.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Most specific syntactic class.
    pub fn class(&self) -> ProgramClass {
        self.class
    }

    /// Atoms occurring in some rule.
    pub fn occurring_atoms(&self) -> AtomSet {
        self.rules
            .iter()
            .fold(AtomSet::EMPTY, |acc, r| acc.union(r.atoms()))
    }

    /// Sorted, duplicate-free copy.
    pub fn canonical(&self) -> Program {
        let rules: BTreeSet<Rule> = self.rules.iter().copied().collect();
        Program::from_parts(self.alphabet.clone(), rules.into_iter().collect())
    }

    pub fn with_rule(&self, rule: Rule) -> Result<Program> {
        let mut rules = self.rules.clone();
        rules.push(rule);
        Program::new(self.alphabet.clone(), rules)
    }

    /// The same rules over a larger alphabet.
    pub fn extend_to(&self, alphabet: &Arc<Alphabet>) -> Result<Program> {
        if !alphabet.contains_all(&self.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let map: Vec<usize> = self
            .alphabet
            .atoms()
            .iter()
            .map(|a| alphabet.index_of(a).expect("checked above"))
            .collect();
        let remap = |s: AtomSet| {
            AtomSet::from_bits(
                (0..map.len())
                    .filter(|&i| s.contains(i))
                    .fold(0u32, |acc, i| acc | 1 << map[i]),
            )
        };
        let rules = self
            .rules
            .iter()
            .map(|r| Rule {
                head_pos: remap(r.head_pos),
                head_neg: remap(r.head_neg),
                body_pos: remap(r.body_pos),
                body_neg: remap(r.body_neg),
            })
            .collect();
        Ok(Program::from_parts(alphabet.clone(), rules))
    }

    pub(crate) fn same_alphabet(&self, other: &Program) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_program(self))
    }
}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Program({:?}) {{ {} }}",
            self.alphabet.atoms(),
            render_program(self).replace('\n', " ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prog(text: &str) -> Program {
        parse_program(text, None).unwrap()
    }

    #[test]
    fn classes_of_reference_programs() {
        assert_eq!(
            prog("p :- not q. false :- p, q.").class(),
            ProgramClass::Nlp
        );
        assert_eq!(prog("p :- not q. p ; q.").class(), ProgramClass::Dlp);
        assert_eq!(prog("p ; not p.").class(), ProgramClass::Glp);
    }

    #[test]
    fn classify_is_monotone() {
        assert!(ProgramClass::Nlp < ProgramClass::Dlp && ProgramClass::Dlp < ProgramClass::Glp);
        assert_eq!(ProgramClass::Nlp.join(ProgramClass::Glp), ProgramClass::Glp);
    }

    #[test]
    fn classical_satisfaction() {
        // ⊥ ← p, q
        let r = Rule::new(0, 0, 0b11, 0);
        assert!(!r.satisfied_by(Interpretation::from_bits(0b11)));
        assert!(r.satisfied_by(Interpretation::from_bits(0b01)));
        // p ; not q
        let r = Rule::new(0b01, 0b10, 0, 0);
        assert!(r.satisfied_by(Interpretation::from_bits(0)));
        assert!(!r.satisfied_by(Interpretation::from_bits(0b10)));
    }

    #[test]
    fn extend_keeps_names() {
        let p = prog("q :- not r.");
        let big = Arc::new(Alphabet::new(["p", "q", "r"]).unwrap());
        let e = p.extend_to(&big).unwrap();
        assert_eq!(e.to_string(), "#atoms p,q,r.\nq :- not r.");
        assert!(e.extend_to(p.alphabet()).is_err());
    }

    #[test]
    fn rejects_out_of_range_masks() {
        let a = Arc::new(Alphabet::new(["p"]).unwrap());
        assert!(Program::new(a, vec![Rule::new(0b10, 0, 0, 0)]).is_err());
    }
}
