//! The `se-revise` command line.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet, SeSet};
use crate::json::{model_set_json, se_set_from_json, se_set_json};
use crate::prop::{FaithfulAssignment, PropOperator};
use crate::revision::{expand, LpOperator, PartedAssignment};
use crate::semantics::{answer_sets, answer_sets_of, classical_models, se_models, se_subset};
use crate::syntax::{parse_program_raw, render_dnf, Formula, Program, ProgramClass};
use crate::synth::{synthesize, synthesize_tightest};
use crate::verify::{
    check_km, check_ra, extract_assignment, render_reports, Mode, PostulateReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "se-revise",
    version,
    about = "Revision of logic programs under SE-model semantics"
)]
pub struct Invocation {
    /// Alphabet override, e.g. `p,q,r`. Must cover every atom in the inputs.
    #[arg(long, global = true, value_delimiter = ',')]
    pub atoms: Option<Vec<String>>,
    /// JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Inputs {
    /// Input files (`.lp` programs, `.fml` formulas).
    pub files: Vec<String>,
    /// Inline input text, taken after the files.
    #[arg(short = 'e', long = "expr")]
    pub exprs: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classical models of a program, or of a formula (`.fml` or --formula).
    Models {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        formula: bool,
    },
    /// Answer sets of a program.
    AnswerSets {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// SE models of a program.
    SeModels {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Expansion P + Q.
    Expand {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = Show::Program)]
        show: Show,
    },
    /// Revision of P by Q.
    Revise {
        #[command(flatten)]
        inputs: Inputs,
        /// Operator spec, e.g. `skeptical:dalal`, `cardinality`, `dalal`.
        #[arg(long)]
        op: String,
        #[arg(long, value_enum, default_value_t = Show::Program)]
        show: Show,
    },
    /// Postulate checks for an operator.
    Check {
        #[arg(long, conflicts_with = "ra", required_unless_present = "ra")]
        km: bool,
        #[arg(long)]
        ra: bool,
        #[arg(long)]
        op: String,
        /// Every case (at most two atoms). The default below three atoms.
        #[arg(long, conflicts_with_all = ["seed", "count"])]
        exhaustive: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// The parted assignment an operator computes, at a program P.
    Extract {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        op: String,
    },
    /// A program with the SE models given as JSON.
    Synthesize {
        #[command(flatten)]
        inputs: Inputs,
        /// Target class; the tightest admissible one by default.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Strong equivalence, SE inclusion and answer sets of P and Q.
    Compare {
        #[command(flatten)]
        inputs: Inputs,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Show {
    SeModels,
    AnswerSets,
    Program,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    Glp,
    Dlp,
    Nlp,
}

impl From<ClassArg> for ProgramClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Glp => ProgramClass::Glp,
            ClassArg::Dlp => ProgramClass::Dlp,
            ClassArg::Nlp => ProgramClass::Nlp,
        }
    }
}

/// A resolved `--op` value.
#[derive(Clone, Debug)]
pub enum OperatorSpec {
    Prop(PropOperator),
    Lp(LpOperator),
}

fn read_json_arg(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))
    }
}

fn parse_prop(spec: &str, alphabet: &Alphabet) -> Result<PropOperator> {
    match spec {
        "drastic" => Ok(PropOperator::Drastic),
        "dalal" => Ok(PropOperator::Dalal),
        _ => match spec.strip_prefix("faithful:") {
            Some(arg) => Ok(PropOperator::Faithful(FaithfulAssignment::from_json(
                &read_json_arg(arg)?,
                alphabet,
            )?)),
            None => Err(Error::InvalidOperator(spec.to_string())),
        },
    }
}

/// Parses an operator spec against an alphabet. JSON arguments are file
/// paths or inline JSON.
pub fn parse_operator(spec: &str, alphabet: &Alphabet) -> Result<OperatorSpec> {
    let lp = |op| Ok(OperatorSpec::Lp(op));
    match spec {
        "drastic-lp" => return lp(LpOperator::DrasticLp),
        "cardinality" => return lp(LpOperator::Cardinality),
        _ => {}
    }
    let Some((head, rest)) = spec.split_once(':') else {
        return parse_prop(spec, alphabet).map(OperatorSpec::Prop);
    };
    match head {
        "skeptical" => lp(LpOperator::skeptical(parse_prop(rest, alphabet)?)),
        "brave" => lp(LpOperator::brave(parse_prop(rest, alphabet)?)),
        "parted" | "dlp" | "nlp" => {
            let a = Arc::new(PartedAssignment::from_json(
                &read_json_arg(rest)?,
                alphabet,
            )?);
            lp(match head {
                "parted" => LpOperator::Parted(a),
                "dlp" => LpOperator::Class {
                    assignment: a,
                    class: ProgramClass::Dlp,
                },
                _ => LpOperator::Class {
                    assignment: a,
                    class: ProgramClass::Nlp,
                },
            })
        }
        "faithful" => parse_prop(spec, alphabet).map(OperatorSpec::Prop),
        _ => Err(Error::InvalidOperator(spec.to_string())),
    }
}

enum Source {
    File(String),
    Inline(String),
}

impl Source {
    fn text(&self) -> Result<String> {
        match self {
            Source::File(p) => fs::read_to_string(p).map_err(|e| Error::Io(format!("{p}: {e}"))),
            Source::Inline(t) => Ok(t.clone()),
        }
    }

    fn is_formula_file(&self) -> bool {
        matches!(self, Source::File(p) if Path::new(p).extension().is_some_and(|e| e == "fml"))
    }
}

fn sources(inputs: &Inputs) -> Vec<Source> {
    inputs
        .files
        .iter()
        .cloned()
        .map(Source::File)
        .chain(inputs.exprs.iter().cloned().map(Source::Inline))
        .collect()
}

fn need(inputs: &[Source], k: usize, what: &str) -> Result<()> {
    if inputs.len() == k {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "{what} takes {k} input(s), got {}",
            inputs.len()
        )))
    }
}

fn alphabet_for(
    over: &Option<Vec<String>>,
    found: impl IntoIterator<Item = String>,
) -> Result<Arc<Alphabet>> {
    let found: Vec<String> = found.into_iter().collect();
    match over {
        Some(atoms) => {
            let a = Alphabet::new(atoms.iter().map(String::as_str).filter(|s| !s.is_empty()))?;
            if let Some(missing) = found.iter().find(|x| a.index_of(x).is_none()) {
                return Err(Error::UnknownAtom(missing.clone()));
            }
            Ok(Arc::new(a))
        }
        None => Ok(Arc::new(Alphabet::new(found)?)),
    }
}

fn load_programs(
    inputs: &[Source],
    atoms: &Option<Vec<String>>,
) -> Result<(Arc<Alphabet>, Vec<Program>)> {
    let raws = inputs
        .iter()
        .map(|s| parse_program_raw(&s.text()?))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = alphabet_for(atoms, raws.iter().flat_map(|r| r.atoms()))?;
    let progs = raws
        .iter()
        .map(|r| r.resolve(&alphabet))
        .collect::<Result<_>>()?;
    Ok((alphabet, progs))
}

fn load_formulas(
    inputs: &[Source],
    atoms: &Option<Vec<String>>,
) -> Result<(Arc<Alphabet>, Vec<ModelSet>)> {
    let fs = inputs
        .iter()
        .map(|s| Formula::parse(&s.text()?))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = alphabet_for(atoms, fs.iter().flat_map(|f| f.atoms()))?;
    let models = fs
        .iter()
        .map(|f| f.models(&alphabet))
        .collect::<Result<_>>()?;
    Ok((alphabet, models))
}

fn models_text(m: &ModelSet, alphabet: &Alphabet) -> String {
    if m.is_empty() {
        return "none".into();
    }
    m.iter()
        .map(|i| alphabet.render(i))
        .collect::<Vec<_>>()
        .join("\n")
}

fn se_text(s: &SeSet, alphabet: &Alphabet) -> String {
    if s.is_empty() {
        return "none".into();
    }
    s.pairs()
        .iter()
        .map(|p| {
            format!(
                "({}, {})",
                alphabet.render(p.here()),
                alphabet.render(p.there())
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

struct Out<'a> {
    json: bool,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, text: &str, value: serde_json::Value) -> Result<()> {
        let line = if self.json {
            serde_json::to_string_pretty(&value)?
        } else {
            text.to_string()
        };
        if line.is_empty() {
            return Ok(());
        }
        match writeln!(self.w, "{line}") {
            // A closed reader (`| head`) just truncates the output.
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Io(e.to_string())),
            _ => Ok(()),
        }
    }

    fn models(&mut self, m: &ModelSet, a: &Alphabet) -> Result<()> {
        self.emit(
            &models_text(m, a),
            serde_json::to_value(model_set_json(m, a))?,
        )
    }

    fn se(&mut self, s: &SeSet, a: &Alphabet) -> Result<()> {
        self.emit(&se_text(s, a), serde_json::to_value(se_set_json(s, a))?)
    }

    fn program(&mut self, p: &Program) -> Result<()> {
        let text = p.to_string();
        self.emit(
            &text,
            json!({ "atoms": p.alphabet().atoms(), "program": text }),
        )
    }

    fn show(
        &mut self,
        s: &SeSet,
        a: &Arc<Alphabet>,
        show: Show,
        class: Option<ProgramClass>,
    ) -> Result<()> {
        match show {
            Show::SeModels => self.se(s, a),
            Show::AnswerSets => self.models(&answer_sets_of(s), a),
            Show::Program => {
                let p = match class {
                    Some(c) => synthesize(s, a, c)?,
                    None => synthesize_tightest(s, a)?,
                };
                self.program(&p)
            }
        }
    }
}

/// Runs one invocation. Returns the exit status: 0 on success, 1 when a
/// postulate check fails, 2 on usage or input errors.
pub fn run(inv: &Invocation, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut o = Out {
        json: inv.json,
        w: out,
    };
    match dispatch(inv, &mut o) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(inv: &Invocation, o: &mut Out<'_>) -> Result<i32> {
    let atoms = &inv.atoms;
    match &inv.command {
        Command::Models { inputs, formula } => {
            let src = sources(inputs);
            need(&src, 1, "models")?;
            if *formula || src[0].is_formula_file() {
                let (a, ms) = load_formulas(&src, atoms)?;
                o.models(&ms[0], &a)?;
            } else {
                let (a, ps) = load_programs(&src, atoms)?;
                o.models(&classical_models(&ps[0]), &a)?;
            }
        }
        Command::AnswerSets { inputs } => {
            let src = sources(inputs);
            need(&src, 1, "answer-sets")?;
            let (a, ps) = load_programs(&src, atoms)?;
            o.models(&answer_sets(&ps[0]), &a)?;
        }
        Command::SeModels { inputs } => {
            let src = sources(inputs);
            need(&src, 1, "se-models")?;
            let (a, ps) = load_programs(&src, atoms)?;
            o.se(&se_models(&ps[0]), &a)?;
        }
        Command::Expand { inputs, show } => {
            let src = sources(inputs);
            need(&src, 2, "expand")?;
            let (a, ps) = load_programs(&src, atoms)?;
            let e = expand(&ps[0], &ps[1])?;
            if *show == Show::Program {
                o.program(&e)?;
            } else {
                o.show(&se_models(&e), &a, *show, None)?;
            }
        }
        Command::Revise { inputs, op, show } => {
            let src = sources(inputs);
            need(&src, 2, "revise")?;
            let prop = matches!(op.as_str(), "drastic" | "dalal") || op.starts_with("faithful:");
            if prop {
                let (a, ms) = load_formulas(&src, atoms)?;
                let OperatorSpec::Prop(circ) = parse_operator(op, &a)? else {
                    return Err(Error::InvalidOperator(format!(
                        "{op} does not revise formulas"
                    )));
                };
                let r = circ.revise(&ms[0], &ms[1])?;
                let dnf = render_dnf(&r, &a);
                let mut value = serde_json::to_value(model_set_json(&r, &a))?;
                value["formula"] = json!(dnf);
                let text = if *show == Show::Program {
                    dnf
                } else {
                    models_text(&r, &a)
                };
                o.emit(&text, value)?;
            } else {
                let (a, ps) = load_programs(&src, atoms)?;
                let OperatorSpec::Lp(lp) = parse_operator(op, &a)? else {
                    return Err(Error::InvalidOperator(format!(
                        "{op} does not revise programs"
                    )));
                };
                if *show == Show::Program {
                    o.program(&lp.revise(&ps[0], &ps[1])?)?;
                } else {
                    let (sp, sq) = (se_models(&ps[0]), se_models(&ps[1]));
                    lp.validate_for(&sp)?;
                    o.show(&lp.apply(&sp, &sq), &a, *show, None)?;
                }
            }
        }
        Command::Check {
            km,
            op,
            exhaustive,
            seed,
            count,
            ..
        } => {
            let a = alphabet_for(atoms, [])?;
            let mode = if *exhaustive || (seed.is_none() && count.is_none() && a.len() <= 2) {
                Mode::Exhaustive
            } else {
                Mode::Seeded {
                    seed: seed.unwrap_or(0),
                    count: count.unwrap_or(10_000),
                }
            };
            let reports: Vec<PostulateReport> = match (parse_operator(op, &a)?, km) {
                (OperatorSpec::Prop(p), true) => check_km(&p, &a, mode)?,
                (OperatorSpec::Lp(l), false) => check_ra(&l, &a, mode)?,
                (OperatorSpec::Prop(_), false) => {
                    return Err(Error::InvalidOperator(format!(
                        "{op} is propositional; use --km"
                    )))
                }
                (OperatorSpec::Lp(_), true) => {
                    return Err(Error::InvalidOperator(format!(
                        "{op} revises programs; use --ra"
                    )))
                }
            };
            o.emit(&render_reports(&reports), serde_json::to_value(&reports)?)?;
            return Ok(if reports.iter().all(|r| r.passed) {
                0
            } else {
                1
            });
        }
        Command::Extract { inputs, op } => {
            let src = sources(inputs);
            need(&src, 1, "extract")?;
            let (a, ps) = load_programs(&src, atoms)?;
            let OperatorSpec::Lp(lp) = parse_operator(op, &a)? else {
                return Err(Error::InvalidOperator(format!(
                    "{op} does not revise programs"
                )));
            };
            let assignment = extract_assignment(&lp, &a)?;
            let se = se_models(&ps[0]);
            let models = se.models();
            let pre = assignment.preorder(&models);
            let n = a.len();
            let mut ranks = BTreeMap::new();
            let mut levels: BTreeMap<u32, Vec<String>> = BTreeMap::new();
            let mut sets = BTreeMap::new();
            let mut text = vec!["preorder:".to_string()];
            for y in Interpretation::all(n) {
                ranks.insert(a.render(y), pre.rank(y));
                levels.entry(pre.rank(y)).or_default().push(a.render(y));
            }
            for (r, ys) in &levels {
                text.push(format!("  {r}: {}", ys.join(" ")));
            }
            text.push("here:".into());
            for y in Interpretation::all(n) {
                let xs: Vec<String> = assignment
                    .here_set(&se, y)
                    .iter()
                    .map(|x| a.render(x))
                    .collect();
                text.push(format!("  P({}) = {}", a.render(y), xs.join(" ")));
                sets.insert(a.render(y), xs);
            }
            let pairs: Vec<[String; 2]> = se
                .pairs()
                .iter()
                .map(|p| [a.render(p.here()), a.render(p.there())])
                .collect();
            let value = json!({
                "name": assignment.name(),
                "preorders": [{
                    "phi_models": models.iter().map(|y| a.render(y)).collect::<Vec<_>>(),
                    "ranks": ranks,
                }],
                "here": [{ "se": pairs, "sets": sets }],
            });
            o.emit(&text.join("\n"), value)?;
        }
        Command::Synthesize { inputs, class } => {
            let src = sources(inputs);
            need(&src, 1, "synthesize")?;
            let (found, s) = se_set_from_json(&src[0].text()?)?;
            let a = alphabet_for(atoms, found.atoms().iter().cloned())?;
            if a.len() != found.len() {
                return Err(Error::Usage(
                    "--atoms must equal the atoms of the SE set".into(),
                ));
            }
            let p = match class {
                Some(c) => synthesize(&s, &a, (*c).into())?,
                None => synthesize_tightest(&s, &a)?,
            };
            o.program(&p)?;
        }
        Command::Compare { inputs } => {
            let src = sources(inputs);
            need(&src, 2, "compare")?;
            let (a, ps) = load_programs(&src, atoms)?;
            let (p, q) = (&ps[0], &ps[1]);
            let pq = se_subset(p, q)?;
            let qp = se_subset(q, p)?;
            let (ap, aq) = (answer_sets(p), answer_sets(q));
            let same_as = ap == aq;
            let text = format!(
                "strongly equivalent: {}\nSE(P) ⊆ SE(Q): {}\nSE(Q) ⊆ SE(P): {}\nsame answer sets: {}",
                yes(pq && qp),
                yes(pq),
                yes(qp),
                yes(same_as)
            );
            let value = json!({
                "strongly_equivalent": pq && qp,
                "p_subset_q": pq,
                "q_subset_p": qp,
                "same_answer_sets": same_as,
                "answer_sets_p": model_set_json(&ap, &a),
                "answer_sets_q": model_set_json(&aq, &a),
            });
            o.emit(&text, value)?;
        }
    }
    Ok(0)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let inv =
            Invocation::try_parse_from(std::iter::once("se-revise").chain(args.iter().copied()))
                .unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&inv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn se_models_inline() {
        let (code, out, _) = run_args(&["se-models", "-e", "p ; q. p :- q."]);
        assert_eq!(code, 0);
        assert_eq!(out, "({p}, {p})\n({p}, {p,q})\n({p,q}, {p,q})\n");
    }

    #[test]
    fn operator_specs() {
        let a = Alphabet::new(["p"]).unwrap();
        for s in [
            "drastic",
            "dalal",
            "drastic-lp",
            "cardinality",
            "skeptical:dalal",
            "brave:drastic",
        ] {
            assert!(parse_operator(s, &a).is_ok(), "{s}");
        }
        assert!(parse_operator("bogus", &a).is_err());
        assert!(parse_operator("skeptical:bogus", &a).is_err());
        let table = r#"{"phi_models":["{p}"],"ranks":{"{p}":0,"{}":1}}"#;
        assert!(matches!(
            parse_operator(&format!("faithful:{table}"), &a),
            Ok(OperatorSpec::Prop(_))
        ));
    }

    #[test]
    fn check_exit_codes() {
        let (code, out, _) = run_args(&["check", "--km", "--op", "dalal", "--atoms", "p,q"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        let (code, _, err) = run_args(&["check", "--ra", "--op", "dalal", "--atoms", "p"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn formula_revision() {
        let (code, out, _) = run_args(&[
            "revise",
            "--op",
            "dalal",
            "-e",
            "p & q",
            "-e",
            "~p | ~q",
            "--show",
            "answer-sets",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "{p}\n{q}\n");
    }
}
