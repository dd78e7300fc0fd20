//! JSON forms of model sets and SE sets.

use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{ModelSet, SePair, SeProperties, SeSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub here: Vec<String>,
    pub there: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeSetJson {
    pub atoms: Vec<String>,
    pub pairs: Vec<PairJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<SeProperties>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSetJson {
    pub atoms: Vec<String>,
    pub models: Vec<Vec<String>>,
}

pub fn se_set_json(s: &SeSet, alphabet: &Alphabet) -> SeSetJson {
    SeSetJson {
        atoms: alphabet.atoms().to_vec(),
        pairs: s
            .pairs()
            .into_iter()
            .map(|p| PairJson {
                here: alphabet
                    .names_of(p.here())
                    .into_iter()
                    .map(String::from)
                    .collect(),
                there: alphabet
                    .names_of(p.there())
                    .into_iter()
                    .map(String::from)
                    .collect(),
            })
            .collect(),
        flags: Some(s.properties()),
    }
}

pub fn model_set_json(m: &ModelSet, alphabet: &Alphabet) -> ModelSetJson {
    ModelSetJson {
        atoms: alphabet.atoms().to_vec(),
        models: m
            .iter()
            .map(|i| alphabet.names_of(i).into_iter().map(String::from).collect())
            .collect(),
    }
}

/// Reads an SE set; its atoms must match `alphabet` when one is given,
/// and the stored flags are ignored.
pub fn se_set_from_json(text: &str) -> Result<(Alphabet, SeSet)> {
    let raw: SeSetJson = serde_json::from_str(text)?;
    let alphabet = Alphabet::new(&raw.atoms)?;
    if alphabet.len() != raw.atoms.len() {
        return Err(Error::Json("duplicate atoms".into()));
    }
    let mut s = SeSet::empty(alphabet.len());
    for p in &raw.pairs {
        let here = alphabet.interpretation(&p.here)?;
        let there = alphabet.interpretation(&p.there)?;
        s.insert(SePair::new(here, there)?);
    }
    Ok((alphabet, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::Interpretation;

    #[test]
    fn round_trip() {
        let a = Alphabet::new(["p", "q"]).unwrap();
        let s = SeSet::from_pairs(
            2,
            [
                SePair::total(Interpretation::from_bits(1)),
                SePair::new(Interpretation::EMPTY, Interpretation::from_bits(2)).unwrap(),
                SePair::total(Interpretation::from_bits(2)),
            ],
        );
        let text = serde_json::to_string(&se_set_json(&s, &a)).unwrap();
        assert!(text.starts_with(
            r#"{"atoms":["p","q"],"pairs":[{"here":["p"],"there":["p"]},{"here":[],"there":["q"]}"#
        ));
        let (b, t) = se_set_from_json(&text).unwrap();
        assert_eq!(b, a);
        assert_eq!(t, s);
    }

    #[test]
    fn bad_pairs_rejected() {
        let text = r#"{"atoms":["p"],"pairs":[{"here":["p"],"there":[]}]}"#;
        assert!(se_set_from_json(text).is_err());
    }
}
