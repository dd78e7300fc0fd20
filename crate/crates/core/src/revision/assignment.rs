use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Deserialize;

use super::selection::SelectionFunction;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet, SePair, SeSet};
use crate::prop::{dalal_preorder, PreorderFn, PropOperator, RankTableJson, TotalPreorder};
use crate::syntax::ProgramClass;

pub type HereFn = Arc<dyn Fn(&SeSet, Interpretation) -> ModelSet + Send + Sync>;

/// A preorder provider keyed on `mod(P)` paired with a here-world provider
/// keyed on `SE(P)`. Neither provider ever sees the syntax of `P`.
pub struct PartedAssignment {
    name: String,
    preorder: PreorderFn,
    here: HereFn,
    checked: Mutex<HashMap<SeSet, Result<()>>>,
}

impl Clone for PartedAssignment {
    fn clone(&self) -> Self {
        PartedAssignment {
            name: self.name.clone(),
            preorder: self.preorder.clone(),
            here: self.here.clone(),
            checked: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for PartedAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartedAssignment({})", self.name)
    }
}

fn violation(condition: &str, detail: String) -> Error {
    Error::Assignment {
        condition: condition.into(),
        detail,
    }
}

impl PartedAssignment {
    pub fn new(
        name: impl Into<String>,
        preorder: impl Fn(&ModelSet) -> TotalPreorder + Send + Sync + 'static,
        here: impl Fn(&SeSet, Interpretation) -> ModelSet + Send + Sync + 'static,
    ) -> Self {
        PartedAssignment {
            name: name.into(),
            preorder: Arc::new(preorder),
            here: Arc::new(here),
            checked: Mutex::new(HashMap::new()),
        }
    }

    /// The assignment behind `⋆^{∘,f}`: `≤_P` is `∘`'s preorder for
    /// `mod(P)`, and `P(Y)` is `{X | (X,Y) ∈ SE(P)}` when `Y ⊨ P`, else
    /// `f(Y)`.
    pub fn from_prop(circ: PropOperator, f: SelectionFunction) -> Self {
        let name = format!("{}:{}", f.name(), circ.name());
        PartedAssignment::new(
            name,
            move |m| circ.preorder(m),
            move |se, y| {
                if se.contains_pair(y, y) {
                    se.heres_of(y)
                } else {
                    f.eval(y, se.width())
                }
            },
        )
    }

    /// Explicit tables. Model sets without a preorder table get Hamming
    /// ranks; unlisted `P(Y)` fall back to `{X | (X,Y) ∈ SE(P)}` for
    /// models and to `fallback` otherwise.
    pub fn from_tables(
        name: impl Into<String>,
        preorders: Vec<(ModelSet, TotalPreorder)>,
        heres: Vec<(SeSet, Vec<(Interpretation, ModelSet)>)>,
        fallback: SelectionFunction,
    ) -> Self {
        let pre: HashMap<ModelSet, TotalPreorder> = preorders.into_iter().collect();
        let here: HashMap<SeSet, HashMap<Interpretation, ModelSet>> = heres
            .into_iter()
            .map(|(s, t)| (s, t.into_iter().collect()))
            .collect();
        PartedAssignment::new(
            name,
            move |m| pre.get(m).cloned().unwrap_or_else(|| dalal_preorder(m)),
            move |se, y| {
                if let Some(set) = here.get(se).and_then(|t| t.get(&y)) {
                    return set.clone();
                }
                if se.contains_pair(y, y) {
                    se.heres_of(y)
                } else {
                    fallback.eval(y, se.width())
                }
            },
        )
    }

    /// Reads the JSON assignment format:
    ///
    /// ```json
    /// {"preorders": [{"phi_models": ["{p}","{q}"], "ranks": {"{p}": 0, ...}}],
    ///  "here": [{"se": [["{p}","{p}"], ...], "sets": {"{p,q}": ["{p}","{p,q}"]}}],
    ///  "fallback": "skeptical"}
    /// ```
    pub fn from_json(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let raw: AssignmentJson = serde_json::from_str(text)?;
        let n = alphabet.len();
        let mut preorders = Vec::new();
        for t in &raw.preorders {
            let (phi, pre) = t.resolve(alphabet)?;
            if let Some((c, a, b)) = pre.faithful_violation(&phi) {
                return Err(violation(
                    c,
                    format!("{} vs {}", alphabet.render(a), alphabet.render(b)),
                ));
            }
            preorders.push((phi, pre));
        }
        let mut heres = Vec::new();
        for h in &raw.here {
            let mut se = SeSet::empty(n);
            for [x, y] in &h.se {
                let x = alphabet.parse_interpretation(x)?;
                let y = alphabet.parse_interpretation(y)?;
                se.insert(SePair::new(x, y)?);
            }
            let mut sets = Vec::new();
            for (y, xs) in &h.sets {
                let y = alphabet.parse_interpretation(y)?;
                let mut m = ModelSet::empty(n);
                for x in xs {
                    m.insert(alphabet.parse_interpretation(x)?);
                }
                sets.push((y, m));
            }
            heres.push((se, sets));
        }
        let fallback = match raw.fallback.as_deref() {
            None | Some("skeptical") => SelectionFunction::Skeptical,
            Some("brave") => SelectionFunction::Brave,
            Some(other) => return Err(Error::InvalidOperator(other.to_string())),
        };
        let name = raw.name.unwrap_or_else(|| "table".into());
        Ok(PartedAssignment::from_tables(
            name, preorders, heres, fallback,
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `≤_P`, given `mod(P)`.
    pub fn preorder(&self, models: &ModelSet) -> TotalPreorder {
        (self.preorder)(models)
    }

    /// `P(Y)`, given `SE(P)`.
    pub fn here_set(&self, se: &SeSet, y: Interpretation) -> ModelSet {
        (self.here)(se, y)
    }

    /// `{(X,Y) ∈ SE(Q) | Y ∈ min(mod(Q), ≤_P), X ∈ P(Y)}`.
    pub fn comprehension(&self, p: &SeSet, q: &SeSet) -> SeSet {
        let ys = self.preorder(&p.models()).min(&q.models());
        let mut cache: HashMap<Interpretation, ModelSet> = HashMap::new();
        q.filter(|pair| {
            ys.contains(pair.there())
                && cache
                    .entry(pair.there())
                    .or_insert_with(|| self.here_set(p, pair.there()))
                    .contains(pair.here())
        })
    }

    /// Checks conditions (1), (2) and (a)–(d) for `SE(P) = se`. Results
    /// are cached per SE set.
    pub fn validate(&self, se: &SeSet) -> Result<()> {
        if let Some(r) = self.checked.lock().expect("poisoned").get(se) {
            return r.clone();
        }
        let r = self.validate_uncached(se);
        self.checked
            .lock()
            .expect("poisoned")
            .insert(se.clone(), r.clone());
        r
    }

    fn validate_uncached(&self, se: &SeSet) -> Result<()> {
        let n = se.width();
        let models = se.models();
        let pre = self.preorder(&models);
        if pre.width() != n {
            return Err(Error::AlphabetMismatch);
        }
        if let Some((c, a, b)) = pre.faithful_violation(&models) {
            return Err(violation(
                c,
                format!("Y = {:b}, Y' = {:b}", a.bits(), b.bits()),
            ));
        }
        for y in Interpretation::all(n) {
            let py = self.here_set(se, y);
            if !py.contains(y) {
                return Err(violation("a", format!("Y = {:b} is not in P(Y)", y.bits())));
            }
            if let Some(x) = py.iter().find(|x| !x.is_subset(y)) {
                return Err(violation(
                    "b",
                    format!(
                        "X = {:b} in P(Y) is not a subset of Y = {:b}",
                        x.bits(),
                        y.bits()
                    ),
                ));
            }
            let heres = se.heres_of(y);
            if let Some(x) = heres.iter().find(|x| !py.contains(*x)) {
                return Err(violation(
                    "c",
                    format!(
                        "(X, Y) = ({:b}, {:b}) is an SE model but X is not in P(Y)",
                        x.bits(),
                        y.bits()
                    ),
                ));
            }
            if models.contains(y) {
                if let Some(x) = py.iter().find(|x| !heres.contains(*x)) {
                    return Err(violation(
                        "d",
                        format!(
                            "X = {:b} in P(Y) for model Y = {:b} but (X, Y) is not an SE model",
                            x.bits(),
                            y.bits()
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Checks (f), and for NLP also (g), for `SE(P) = se`. The error
    /// carries the witness triple.
    pub fn validate_class(&self, se: &SeSet, class: ProgramClass) -> Result<()> {
        if class == ProgramClass::Glp {
            return Ok(());
        }
        let n = se.width();
        let pre = self.preorder(&se.models());
        let sets: Vec<ModelSet> = Interpretation::all(n)
            .map(|y| self.here_set(se, y))
            .collect();
        for y in Interpretation::all(n) {
            for z in Interpretation::all(n) {
                if y == z || !y.is_subset(z) || pre.rank(y) != pre.rank(z) {
                    continue;
                }
                if let Some(x) = sets[y.index()]
                    .iter()
                    .find(|x| !sets[z.index()].contains(*x))
                {
                    return Err(violation(
                        "f",
                        format!("X = {:b}, Y = {:b}, Z = {:b}", x.bits(), y.bits(), z.bits()),
                    ));
                }
            }
        }
        if class == ProgramClass::Nlp {
            for z in Interpretation::all(n) {
                let pz = &sets[z.index()];
                let xs = pz.to_vec();
                for (i, &a) in xs.iter().enumerate() {
                    for &b in &xs[i + 1..] {
                        if !pz.contains(a.intersection(b)) {
                            return Err(violation(
                                "g",
                                format!(
                                    "X = {:b}, Y = {:b}, Z = {:b}",
                                    a.bits(),
                                    b.bits(),
                                    z.bits()
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct AssignmentJson {
    name: Option<String>,
    #[serde(default)]
    preorders: Vec<RankTableJson>,
    #[serde(default)]
    here: Vec<HereTableJson>,
    fallback: Option<String>,
}

#[derive(Deserialize)]
struct HereTableJson {
    se: Vec<[String; 2]>,
    sets: std::collections::BTreeMap<String, Vec<String>>,
}
