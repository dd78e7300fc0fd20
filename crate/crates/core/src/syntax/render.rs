use super::{AtomSet, Program, Rule};
use crate::alphabet::Alphabet;

/// Renders a program in the concrete syntax accepted by
/// [`parse_program`](super::parse_program). A `#atoms` line is emitted
/// only when some atom of the alphabet does not occur in any rule.
pub fn render_program(p: &Program) -> String {
    let a = p.alphabet();
    let mut lines = Vec::with_capacity(p.len() + 1);
    if p.occurring_atoms().bits() != a.full_mask() {
        lines.push(format!("#atoms {}.", a.atoms().join(",")));
    }
    lines.extend(p.rules().iter().map(|r| render_rule(r, a)));
    lines.join("\n")
}

pub(crate) fn render_rule(r: &Rule, a: &Alphabet) -> String {
    let names = |s: AtomSet, neg: bool| {
        a.names_of(s).into_iter().map(move |n| {
            if neg {
                format!("not {n}")
            } else {
                n.to_string()
            }
        })
    };
    let head: Vec<String> = names(r.head_pos, false)
        .chain(names(r.head_neg, true))
        .collect();
    let body: Vec<String> = names(r.body_pos, false)
        .chain(names(r.body_neg, true))
        .collect();
    let head = if head.is_empty() {
        "false".to_string()
    } else {
        head.join(" ; ")
    };
    if body.is_empty() {
        format!("{head}.")
    } else {
        format!("{head} :- {}.", body.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::syntax::parse_program;

    #[test]
    fn renders_reference_program() {
        let p = parse_program("p :- not q.  false :- p, q.", None).unwrap();
        assert_eq!(render_program(&p), "p :- not q.\nfalse :- p, q.");
    }

    #[test]
    fn empty_program_gets_directive() {
        let a = Arc::new(Alphabet::new(["p", "q"]).unwrap());
        assert_eq!(render_program(&Program::empty(a)), "#atoms p,q.");
        assert_eq!(
            render_program(&Program::empty(Arc::new(Alphabet::empty()))),
            ""
        );
    }

    #[test]
    fn glp_rule() {
        let p = parse_program("p ; not q :- r, not p.", None).unwrap();
        assert_eq!(render_program(&p), "p ; not q :- r, not p.");
    }
}
