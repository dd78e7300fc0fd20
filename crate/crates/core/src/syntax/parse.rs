use std::collections::BTreeSet;
use std::sync::Arc;

use super::lexer::{Cursor, Pos, Tok};
use super::{AtomSet, Program, Rule};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// A rule literal before constant elimination.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Literal {
    Atom(String),
    NotAtom(String),
    True,
    False,
    NotTrue,
    NotFalse,
}

impl Literal {
    fn atom(&self) -> Option<&str> {
        match self {
            Literal::Atom(a) | Literal::NotAtom(a) => Some(a),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRule {
    pub head: Vec<Literal>,
    pub body: Vec<Literal>,
}

/// Parsed text whose atoms have not yet been bound to an alphabet.
#[derive(Clone, Debug, Default)]
pub struct RawProgram {
    pub rules: Vec<RawRule>,
    pub declared: Vec<String>,
}

impl RawRule {
    /// Eliminates constants. `None` means the rule is a tautology and is
    /// dropped.
    pub fn normalize(&self, alphabet: &Alphabet) -> Result<Option<Rule>> {
        let mut r = Rule::default();
        let bit = |a: &str| -> Result<AtomSet> {
            alphabet
                .index_of(a)
                .map(|i| AtomSet::from_bits(1 << i))
                .ok_or_else(|| Error::UnknownAtom(a.to_string()))
        };
        for l in &self.body {
            match l {
                Literal::True | Literal::NotFalse => {}
                Literal::False | Literal::NotTrue => return Ok(None),
                Literal::Atom(a) => r.body_pos = r.body_pos.union(bit(a)?),
                Literal::NotAtom(a) => r.body_neg = r.body_neg.union(bit(a)?),
            }
        }
        for l in &self.head {
            match l {
                Literal::True | Literal::NotFalse => return Ok(None),
                Literal::False | Literal::NotTrue => {}
                Literal::Atom(a) => r.head_pos = r.head_pos.union(bit(a)?),
                Literal::NotAtom(a) => r.head_neg = r.head_neg.union(bit(a)?),
            }
        }
        Ok(Some(r))
    }
}

impl RawProgram {
    /// Atoms occurring in rules or declared by `#atoms`.
    pub fn atoms(&self) -> BTreeSet<String> {
        self.rules
            .iter()
            .flat_map(|r| r.head.iter().chain(r.body.iter()))
            .filter_map(Literal::atom)
            .map(str::to_string)
            .chain(self.declared.iter().cloned())
            .collect()
    }

    pub fn resolve(&self, alphabet: &Arc<Alphabet>) -> Result<Program> {
        for a in &self.declared {
            if alphabet.index_of(a).is_none() {
                return Err(Error::UnknownAtom(a.clone()));
            }
        }
        let mut rules = Vec::with_capacity(self.rules.len());
        for r in &self.rules {
            if let Some(n) = r.normalize(alphabet)? {
                rules.push(n);
            }
        }
        Ok(Program::from_parts(alphabet.clone(), rules))
    }
}

/// Parses program text. Without an explicit alphabet, the alphabet is the
/// set of atoms occurring in the text plus any declared by `#atoms`.
pub fn parse_program(text: &str, alphabet: Option<&Arc<Alphabet>>) -> Result<Program> {
    let raw = parse_program_raw(text)?;
    match alphabet {
        Some(a) => raw.resolve(a),
        None => raw.resolve(&Arc::new(Alphabet::new(raw.atoms())?)),
    }
}

pub fn parse_program_raw(text: &str) -> Result<RawProgram> {
    let mut cur = Cursor::new(text)?;
    let mut out = RawProgram::default();
    loop {
        match cur.peek().clone() {
            Tok::Eof => break,
            Tok::Directive(d) => {
                let pos = cur.pos();
                cur.bump();
                if d != "atoms" {
                    return Err(pos.error(format!("unknown directive `#{d}`")));
                }
                loop {
                    match cur.bump() {
                        (Tok::Ident(a), _) => out.declared.push(a),
                        (t, p) => {
                            return Err(p.error(format!("expected atom, found {}", t.describe())))
                        }
                    }
                    if !cur.eat(&Tok::Comma) {
                        break;
                    }
                }
                cur.expect(&Tok::Dot)?;
            }
            _ => out.rules.push(rule(&mut cur)?),
        }
    }
    Ok(out)
}

fn rule(cur: &mut Cursor) -> Result<RawRule> {
    let mut head = Vec::new();
    if !matches!(cur.peek(), Tok::If | Tok::Dot) {
        head.push(literal(cur)?);
        while cur.eat(&Tok::Semi) {
            head.push(literal(cur)?);
        }
    }
    let mut body = Vec::new();
    if cur.eat(&Tok::If) {
        body.push(literal(cur)?);
        while cur.eat(&Tok::Comma) {
            body.push(literal(cur)?);
        }
    } else if head.is_empty() {
        return Err(cur.unexpected("a rule"));
    }
    if !cur.eat(&Tok::Dot) {
        let wanted = if body.is_empty() {
            "`;`, `:-` or `.`"
        } else {
            "`,` or `.`"
        };
        return Err(cur.unexpected(wanted));
    }
    Ok(RawRule { head, body })
}

fn literal(cur: &mut Cursor) -> Result<Literal> {
    let negated = cur.eat(&Tok::Not);
    let (tok, pos): (Tok, Pos) = cur.bump();
    Ok(match (negated, tok) {
        (false, Tok::Ident(a)) => Literal::Atom(a),
        (true, Tok::Ident(a)) => Literal::NotAtom(a),
        (false, Tok::True) => Literal::True,
        (false, Tok::False) => Literal::False,
        (true, Tok::True) => Literal::NotTrue,
        (true, Tok::False) => Literal::NotFalse,
        (_, t) => return Err(pos.error(format!("expected literal, found {}", t.describe()))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::ProgramClass;

    #[test]
    fn parses_reference_program() {
        let p = parse_program("p :- not q.  false :- p, q.", None).unwrap();
        assert_eq!(p.alphabet().atoms(), ["p", "q"]);
        assert_eq!(
            p.rules(),
            &[Rule::new(0b01, 0, 0, 0b10), Rule::new(0, 0, 0b11, 0)]
        );
    }

    #[test]
    fn empty_program_over_given_alphabet() {
        let a = Arc::new(Alphabet::new(["p"]).unwrap());
        let p = parse_program("", Some(&a)).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.class(), ProgramClass::Nlp);
    }

    #[test]
    fn true_body_is_dropped() {
        let p = parse_program("p ; not q :- true.", None).unwrap();
        assert_eq!(p.rules(), &[Rule::new(0b01, 0b10, 0, 0)]);
        assert_eq!(p.class(), ProgramClass::Glp);
    }

    #[test]
    fn constant_table() {
        let a = Arc::new(Alphabet::new(["p", "q"]).unwrap());
        let one = |t: &str| parse_program(t, Some(&a)).unwrap().rules().to_vec();
        assert_eq!(one("p :- q, not false."), vec![Rule::new(1, 0, 2, 0)]);
        assert!(one("p :- false.").is_empty());
        assert!(one("p :- not true.").is_empty());
        assert!(one("p ; true :- q.").is_empty());
        assert!(one("p ; not false.").is_empty());
        assert_eq!(
            one("p ; false ; not true :- q."),
            vec![Rule::new(1, 0, 2, 0)]
        );
        assert_eq!(one("false :- true."), vec![Rule::default()]);
        assert_eq!(one("false."), vec![Rule::default()]);
    }

    #[test]
    fn directive_extends_alphabet() {
        let p = parse_program("#atoms r, p.\nq.", None).unwrap();
        assert_eq!(p.alphabet().atoms(), ["p", "q", "r"]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_program("p :- q\nr.", None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_program(":- .", None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_program("#foo p.", None),
            Err(Error::Parse { .. })
        ));
        let a = Arc::new(Alphabet::new(["p"]).unwrap());
        assert_eq!(
            parse_program("q.", Some(&a)),
            Err(Error::UnknownAtom("q".into()))
        );
        let names: Vec<String> = (0..17).map(|i| format!("a{i}.")).collect();
        assert_eq!(
            parse_program(&names.join(" "), None),
            Err(Error::AlphabetTooLarge(17))
        );
    }
}
