use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::interp::Interpretation;

/// Largest supported alphabet. Every operator in this crate enumerates
/// all `3^n` SE interpretations.
pub const MAX_ATOMS: usize = 16;

const RESERVED: [&str; 3] = ["not", "true", "false"];

/// A finite, sorted set of atom names. Bit `i` of an [`Interpretation`]
/// stands for the `i`-th atom.
#[derive(Clone)]
pub struct Alphabet {
    atoms: Vec<String>,
    index: HashMap<String, usize>,
}

pub fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !RESERVED.contains(&name)
}

impl Alphabet {
    /// Builds an alphabet from atom names. Duplicates are merged and the
    /// result is sorted.
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        for a in &atoms {
            if !is_valid_atom_name(a) {
                return Err(Error::InvalidAtomName(a.clone()));
            }
        }
        atoms.sort();
        atoms.dedup();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::AlphabetTooLarge(atoms.len()));
        }
        let index = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        Ok(Alphabet { atoms, index })
    }

    pub fn empty() -> Self {
        Alphabet {
            atoms: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> &str {
        &self.atoms[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains_all(&self, other: &Alphabet) -> bool {
        other.atoms.iter().all(|a| self.index.contains_key(a))
    }

    pub fn union(&self, other: &Alphabet) -> Result<Alphabet> {
        Alphabet::new(self.atoms.iter().chain(other.atoms.iter()).cloned())
    }

    /// Number of interpretations, `2^n`.
    pub fn interpretation_count(&self) -> usize {
        1 << self.len()
    }

    /// Bitmask with one bit per atom.
    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.len()) - 1) as u32
    }

    pub fn interpretation<S: AsRef<str>>(&self, atoms: &[S]) -> Result<Interpretation> {
        let mut bits = 0u32;
        for a in atoms {
            let i = self
                .index_of(a.as_ref())
                .ok_or_else(|| Error::UnknownAtom(a.as_ref().to_string()))?;
            bits |= 1 << i;
        }
        Ok(Interpretation::from_bits(bits))
    }

    /// Parses `{p,q}`, `p,q`, `{}` or the empty string.
    pub fn parse_interpretation(&self, text: &str) -> Result<Interpretation> {
        let t = text.trim();
        let t = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(t);
        let names: Vec<&str> = t
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        self.interpretation(&names)
    }

    pub fn names_of(&self, i: Interpretation) -> Vec<&str> {
        (0..self.len())
            .filter(|&k| i.contains(k))
            .map(|k| self.atoms[k].as_str())
            .collect()
    }

    /// Renders an interpretation as `{p,q}`; the empty one is `{}`.
    pub fn render(&self, i: Interpretation) -> String {
        format!("{{{}}}", self.names_of(i).join(","))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.atoms.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{:?}", self.atoms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deduplicated() {
        let a = Alphabet::new(["r", "p", "q", "p"]).unwrap();
        assert_eq!(a.atoms(), ["p", "q", "r"]);
        assert_eq!(a.index_of("r"), Some(2));
    }

    #[test]
    fn rejects_reserved_and_malformed() {
        assert!(matches!(
            Alphabet::new(["not"]),
            Err(Error::InvalidAtomName(_))
        ));
        assert!(Alphabet::new(["P"]).is_err());
        assert!(Alphabet::new(["1a"]).is_err());
        assert!(Alphabet::new([""]).is_err());
        assert!(Alphabet::new(["a_B9"]).is_ok());
    }

    #[test]
    fn size_cap() {
        let names: Vec<String> = (0..17).map(|i| format!("a{i}")).collect();
        assert!(matches!(
            Alphabet::new(names),
            Err(Error::AlphabetTooLarge(17))
        ));
    }

    #[test]
    fn interpretation_text() {
        let a = Alphabet::new(["p", "q"]).unwrap();
        let pq = a.parse_interpretation("{q, p}").unwrap();
        assert_eq!(pq.bits(), 0b11);
        assert_eq!(a.render(pq), "{p,q}");
        assert_eq!(a.render(a.parse_interpretation("{}").unwrap()), "{}");
        assert!(a.parse_interpretation("r").is_err());
    }
}
