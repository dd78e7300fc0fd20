//! Expansion and revision of logic programs.

mod assignment;
mod selection;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub use assignment::{HereFn, PartedAssignment};
pub use selection::{lattice_leq, SelectionFunction};

use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet, SePair, SeSet};
use crate::prop::PropOperator;
use crate::semantics::se_models;
use crate::syntax::{Program, ProgramClass};
use crate::synth::{synthesize, synthesize_tightest};

pub type SeRevisionFn = Arc<dyn Fn(&SeSet, &SeSet) -> SeSet + Send + Sync>;

/// A logic-program revision operator, evaluated on SE sets.
#[derive(Clone)]
pub enum LpOperator {
    /// `P + Q` if consistent, else `Q`.
    DrasticLp,
    /// `⋆^{∘,f}`.
    PropBased {
        circ: PropOperator,
        f: SelectionFunction,
    },
    /// The Dalal-cored cardinality operator.
    Cardinality,
    /// The comprehension of a parted assignment.
    Parted(Arc<PartedAssignment>),
    /// A parted assignment restricted to DLP or NLP inputs.
    Class {
        assignment: Arc<PartedAssignment>,
        class: ProgramClass,
    },
    /// Anything else acting on SE sets.
    Custom { name: String, f: SeRevisionFn },
}

impl fmt::Debug for LpOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl LpOperator {
    pub fn skeptical(circ: PropOperator) -> Self {
        LpOperator::PropBased {
            circ,
            f: SelectionFunction::Skeptical,
        }
    }

    pub fn brave(circ: PropOperator) -> Self {
        LpOperator::PropBased {
            circ,
            f: SelectionFunction::Brave,
        }
    }

    pub fn parted(a: PartedAssignment) -> Self {
        LpOperator::Parted(Arc::new(a))
    }

    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(&SeSet, &SeSet) -> SeSet + Send + Sync + 'static,
    ) -> Self {
        LpOperator::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> String {
        match self {
            LpOperator::DrasticLp => "drastic-lp".into(),
            LpOperator::PropBased { circ, f } => format!("{}:{}", f.name(), circ.name()),
            LpOperator::Cardinality => "cardinality".into(),
            LpOperator::Parted(a) => format!("parted:{}", a.name()),
            LpOperator::Class { assignment, class } => {
                format!(
                    "{}:{}",
                    class.name().to_ascii_lowercase(),
                    assignment.name()
                )
            }
            LpOperator::Custom { name, .. } => name.clone(),
        }
    }

    /// The assignment whose comprehension this operator computes, where
    /// one is known without extraction.
    pub fn assignment(&self) -> Option<PartedAssignment> {
        match self {
            LpOperator::DrasticLp => Some(PartedAssignment::from_prop(
                PropOperator::Drastic,
                SelectionFunction::Skeptical,
            )),
            LpOperator::PropBased { circ, f } => {
                Some(PartedAssignment::from_prop(circ.clone(), f.clone()))
            }
            LpOperator::Parted(a) | LpOperator::Class { assignment: a, .. } => Some((**a).clone()),
            LpOperator::Cardinality | LpOperator::Custom { .. } => None,
        }
    }

    /// `SE(P ⋆ Q)` from `SE(P)` and `SE(Q)`.
    pub fn revise_se(&self, p: &SeSet, q: &SeSet) -> Result<SeSet> {
        if p.width() != q.width() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.apply(p, q))
    }

    /// [`revise_se`](Self::revise_se) without the width check and without
    /// validating selection functions or assignments.
    pub fn apply(&self, p: &SeSet, q: &SeSet) -> SeSet {
        match self {
            LpOperator::DrasticLp => {
                let both = p.intersect_unchecked(q);
                if both.is_empty() {
                    q.clone()
                } else {
                    both
                }
            }
            LpOperator::PropBased { circ, f } => {
                let both = p.intersect_unchecked(q);
                if !both.is_empty() {
                    return both;
                }
                let ys = circ.revise_unchecked(&p.models(), &q.models());
                q.filter(|pair| ys.contains(pair.there()) && f.selects(pair.here(), pair.there()))
            }
            LpOperator::Cardinality => cardinality_se(p, q),
            LpOperator::Parted(a) | LpOperator::Class { assignment: a, .. } => {
                a.comprehension(p, q)
            }
            LpOperator::Custom { f, .. } => f(p, q),
        }
    }

    /// Checks whatever this operator can check about itself for `SE(P)`:
    /// the selection function's invariants, or the assignment's conditions.
    pub fn validate_for(&self, p: &SeSet) -> Result<()> {
        match self {
            LpOperator::PropBased { f, .. } => f.validate(p.width()),
            LpOperator::Parted(a) => a.validate(p),
            LpOperator::Class { assignment, class } => {
                assignment.validate(p)?;
                assignment.validate_class(p, *class)
            }
            _ => Ok(()),
        }
    }

    /// Revises programs. The result is synthesized in the most specific
    /// class able to express it (in the operator's class for DLP/NLP
    /// operators).
    pub fn revise(&self, p: &Program, q: &Program) -> Result<Program> {
        p.same_alphabet(q)?;
        if let LpOperator::Class { class, .. } = self {
            for x in [p, q] {
                if x.class() > *class {
                    return Err(Error::ClassMismatch {
                        expected: class.name(),
                        found: x.class().name(),
                    });
                }
            }
        }
        let (sp, sq) = (se_models(p), se_models(q));
        self.validate_for(&sp)?;
        let out = self.apply(&sp, &sq);
        match self {
            LpOperator::Class { class, .. } => synthesize(&out, p.alphabet(), *class),
            _ => synthesize_tightest(&out, p.alphabet()),
        }
    }
}

/// Def. of the cardinality operator, evaluated directly.
fn cardinality_se(p: &SeSet, q: &SeSet) -> SeSet {
    let n = p.width();
    let dalal = PropOperator::Dalal;
    let mp = p.models();
    let ys = dalal.revise_unchecked(&mp, &q.models());
    let mut inner: HashMap<Interpretation, ModelSet> = HashMap::new();
    q.filter(|pair| {
        let (x, y) = (pair.here(), pair.there());
        if !ys.contains(y) {
            return false;
        }
        if x == y {
            return true;
        }
        inner
            .entry(y)
            .or_insert_with(|| {
                let closest = dalal.revise_unchecked(&ModelSet::singleton(n, y), &mp);
                let mut alpha_py = ModelSet::empty(n);
                for y2 in closest.iter() {
                    for h in p.heres_of(y2).iter() {
                        alpha_py.insert(h);
                    }
                }
                dalal.revise_unchecked(&alpha_py, &ModelSet::subsets_of(n, y))
            })
            .contains(x)
    })
}

fn join_class(p: &Program, q: &Program) -> ProgramClass {
    p.class().join(q.class())
}

/// `P + Q`, with `SE(P + Q) = SE(P) ∩ SE(Q)`.
pub fn expand(p: &Program, q: &Program) -> Result<Program> {
    p.same_alphabet(q)?;
    let s = se_models(p).intersect_unchecked(&se_models(q));
    synthesize(&s, p.alphabet(), join_class(p, q))
}

pub fn drastic_lp_revise(p: &Program, q: &Program) -> Result<Program> {
    LpOperator::DrasticLp.revise(p, q)
}

pub fn prop_based_revise(
    circ: &PropOperator,
    f: &SelectionFunction,
    p: &Program,
    q: &Program,
) -> Result<Program> {
    LpOperator::PropBased {
        circ: circ.clone(),
        f: f.clone(),
    }
    .revise(p, q)
}

pub fn cardinality_revise(p: &Program, q: &Program) -> Result<Program> {
    LpOperator::Cardinality.revise(p, q)
}

pub fn parted_revise(a: &Arc<PartedAssignment>, p: &Program, q: &Program) -> Result<Program> {
    LpOperator::Parted(a.clone()).revise(p, q)
}

pub fn class_revise(
    a: &Arc<PartedAssignment>,
    p: &Program,
    q: &Program,
    class: ProgramClass,
) -> Result<Program> {
    LpOperator::Class {
        assignment: a.clone(),
        class,
    }
    .revise(p, q)
}

/// Does `pair ∈ SE(P ⋆ Q)`?
pub fn mc_se(op: &LpOperator, p: &Program, q: &Program, pair: SePair) -> Result<bool> {
    p.same_alphabet(q)?;
    Ok(op.apply(&se_models(p), &se_models(q)).contains(pair))
}
