use std::collections::BTreeSet;

use super::lexer::{Cursor, Tok};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Atom(String),
    True,
    False,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn parse(text: &str) -> Result<Formula> {
        let mut cur = Cursor::new(text)?;
        let f = iff(&mut cur)?;
        if *cur.peek() != Tok::Eof {
            return Err(cur.unexpected("a connective or end of input"));
        }
        Ok(f)
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::True | Formula::False => {}
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Classical models over `alphabet`.
    pub fn models(&self, alphabet: &Alphabet) -> Result<ModelSet> {
        let n = alphabet.len();
        let full = ModelSet::full(n);
        let not = |m: &ModelSet| full.difference(m);
        Ok(match self {
            Formula::Atom(a) => {
                let i = alphabet
                    .index_of(a)
                    .ok_or_else(|| Error::UnknownAtom(a.clone()))?;
                ModelSet::from_iter(n, Interpretation::all(n).filter(|m| m.contains(i)))
            }
            Formula::True => full.clone(),
            Formula::False => ModelSet::empty(n),
            Formula::Not(f) => not(&f.models(alphabet)?)?,
            Formula::And(a, b) => a.models(alphabet)?.intersection(&b.models(alphabet)?)?,
            Formula::Or(a, b) => a.models(alphabet)?.union(&b.models(alphabet)?)?,
            Formula::Implies(a, b) => not(&a.models(alphabet)?)?.union(&b.models(alphabet)?)?,
            Formula::Iff(a, b) => {
                let (ma, mb) = (a.models(alphabet)?, b.models(alphabet)?);
                let both = ma.intersection(&mb)?;
                let neither = not(&ma.union(&mb)?)?;
                both.union(&neither)?
            }
        })
    }
}

/// Parses a formula and returns its models over `alphabet`.
pub fn parse_formula(text: &str, alphabet: &Alphabet) -> Result<ModelSet> {
    Formula::parse(text)?.models(alphabet)
}

/// A disjunction with one full conjunction per model; `false` for the
/// empty set and `true` when every interpretation is a model.
pub fn render_dnf(models: &ModelSet, alphabet: &Alphabet) -> String {
    if models.is_empty() {
        return "false".into();
    }
    if models.len() == alphabet.interpretation_count() {
        return "true".into();
    }
    models
        .iter()
        .map(|m| {
            let lits: Vec<String> = (0..alphabet.len())
                .map(|i| {
                    if m.contains(i) {
                        alphabet.atom(i).to_string()
                    } else {
                        format!("~{}", alphabet.atom(i))
                    }
                })
                .collect();
            if lits.len() == 1 || models.len() == 1 {
                lits.join(" & ")
            } else {
                format!("({})", lits.join(" & "))
            }
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn iff(cur: &mut Cursor) -> Result<Formula> {
    let mut f = implies(cur)?;
    while cur.eat(&Tok::Iff) {
        f = Formula::Iff(Box::new(f), Box::new(implies(cur)?));
    }
    Ok(f)
}

fn implies(cur: &mut Cursor) -> Result<Formula> {
    let f = or(cur)?;
    if cur.eat(&Tok::Arrow) {
        return Ok(Formula::Implies(Box::new(f), Box::new(implies(cur)?)));
    }
    Ok(f)
}

fn or(cur: &mut Cursor) -> Result<Formula> {
    let mut f = and(cur)?;
    while cur.eat(&Tok::Bar) {
        f = Formula::Or(Box::new(f), Box::new(and(cur)?));
    }
    Ok(f)
}

fn and(cur: &mut Cursor) -> Result<Formula> {
    let mut f = unary(cur)?;
    while cur.eat(&Tok::Amp) {
        f = Formula::And(Box::new(f), Box::new(unary(cur)?));
    }
    Ok(f)
}

fn unary(cur: &mut Cursor) -> Result<Formula> {
    let (tok, pos) = cur.bump();
    match tok {
        Tok::Tilde => Ok(Formula::Not(Box::new(unary(cur)?))),
        Tok::Ident(a) => Ok(Formula::Atom(a)),
        Tok::True => Ok(Formula::True),
        Tok::False => Ok(Formula::False),
        Tok::LParen => {
            let f = iff(cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(f)
        }
        t => Err(pos.error(format!("expected a formula, found {}", t.describe()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn models(text: &str, atoms: &[&str]) -> Vec<String> {
        let a = Alphabet::new(atoms.iter().copied()).unwrap();
        parse_formula(text, &a)
            .unwrap()
            .iter()
            .map(|m| a.render(m))
            .collect()
    }

    #[test]
    fn reference_formulas() {
        assert_eq!(models("p <-> ~q", &["p", "q"]), ["{p}", "{q}"]);
        assert!(models("false", &["p", "q"]).is_empty());
        assert_eq!(models("p & q & ~r", &["p", "q", "r"]), ["{p,q}"]);
    }

    #[test]
    fn precedence() {
        // ~p | q -> r  parses as  ((~p) | q) -> r
        let a = Alphabet::new(["p", "q", "r"]).unwrap();
        let lhs = parse_formula("~p | q -> r", &a).unwrap();
        let rhs = parse_formula("((~p) | q) -> r", &a).unwrap();
        assert_eq!(lhs, rhs);
        let chain = parse_formula("p -> q -> r", &a).unwrap();
        assert_eq!(chain, parse_formula("p -> (q -> r)", &a).unwrap());
    }

    #[test]
    fn errors() {
        let a = Alphabet::new(["p"]).unwrap();
        assert!(matches!(parse_formula("p &", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_formula("(p", &a), Err(Error::Parse { .. })));
        assert_eq!(parse_formula("q", &a), Err(Error::UnknownAtom("q".into())));
    }

    #[test]
    fn dnf_round_trip() {
        let a = Alphabet::new(["p", "q"]).unwrap();
        for m in ModelSet::enumerate_all(2) {
            let text = render_dnf(&m, &a);
            assert_eq!(parse_formula(&text, &a).unwrap(), m, "{text}");
        }
    }
}
