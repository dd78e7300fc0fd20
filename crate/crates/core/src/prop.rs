//! Propositional revision over model sets.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet};

/// A total preorder over the interpretations of a fixed alphabet, given by
/// ranks (lower is more plausible).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TotalPreorder {
    ranks: Vec<u32>,
}

impl TotalPreorder {
    pub fn from_ranks(ranks: Vec<u32>) -> Self {
        assert!(ranks.len().is_power_of_two(), "one rank per interpretation");
        TotalPreorder { ranks }
    }

    pub fn from_fn(width: usize, f: impl Fn(Interpretation) -> u32) -> Self {
        TotalPreorder {
            ranks: Interpretation::all(width).map(f).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.ranks.len().trailing_zeros() as usize
    }

    #[inline]
    pub fn rank(&self, i: Interpretation) -> u32 {
        self.ranks[i.index()]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn leq(&self, i: Interpretation, j: Interpretation) -> bool {
        self.rank(i) <= self.rank(j)
    }

    /// `min(F, ≤)`: every member of `f` of minimal rank.
    pub fn min(&self, f: &ModelSet) -> ModelSet {
        let Some(best) = f.iter().map(|i| self.rank(i)).min() else {
            return ModelSet::empty(f.width());
        };
        ModelSet::from_iter(f.width(), f.iter().filter(|&i| self.rank(i) == best))
    }

    /// Same preorder with ranks renumbered `0, 1, 2, …` by level.
    pub fn dense(&self) -> TotalPreorder {
        let mut levels: Vec<u32> = self.ranks.clone();
        levels.sort_unstable();
        levels.dedup();
        TotalPreorder {
            ranks: self
                .ranks
                .iter()
                .map(|r| levels.binary_search(r).expect("present") as u32)
                .collect(),
        }
    }

    /// Checks the faithfulness conditions relative to `models`: all models
    /// share one rank and lie strictly below every non-model. Returns the
    /// label of the failing condition and a witness.
    pub fn faithful_violation(
        &self,
        models: &ModelSet,
    ) -> Option<(&'static str, Interpretation, Interpretation)> {
        let mut it = models.iter();
        let first = it.next()?;
        let r = self.rank(first);
        if let Some(y) = it.find(|&y| self.rank(y) != r) {
            return Some(("1", first, y));
        }
        Interpretation::all(models.width())
            .filter(|y| !models.contains(*y))
            .find(|&y| self.rank(y) <= r)
            .map(|y| ("2", first, y))
    }
}

impl fmt::Debug for TotalPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalPreorder{:?}", self.ranks)
    }
}

/// Popcount of the symmetric difference.
pub fn hamming(i: Interpretation, j: Interpretation) -> u32 {
    i.hamming(j)
}

/// Ranks by Hamming distance to the nearest member of `phi` (0 everywhere
/// when `phi` is empty). Multi-source breadth-first search over the cube.
pub fn dalal_preorder(phi: &ModelSet) -> TotalPreorder {
    let n = phi.width();
    let count = 1usize << n;
    if phi.is_empty() {
        return TotalPreorder::from_ranks(vec![0; count]);
    }
    let mut dist = vec![u32::MAX; count];
    let mut frontier: Vec<usize> = phi.iter().map(Interpretation::index).collect();
    for &i in &frontier {
        dist[i] = 0;
    }
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &i in &frontier {
            for b in 0..n {
                let j = i ^ (1 << b);
                if dist[j] == u32::MAX {
                    dist[j] = d;
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    TotalPreorder::from_ranks(dist)
}

/// The two-level preorder: models of `phi` at 0, the rest at 1.
pub fn drastic_preorder(phi: &ModelSet) -> TotalPreorder {
    let empty = phi.is_empty();
    TotalPreorder::from_fn(phi.width(), |i| u32::from(!empty && !phi.contains(i)))
}

pub type DistanceFn = Arc<dyn Fn(Interpretation, Interpretation) -> u32 + Send + Sync>;
pub type PreorderFn = Arc<dyn Fn(&ModelSet) -> TotalPreorder + Send + Sync>;

/// Maps each model set to a total preorder.
#[derive(Clone)]
pub struct FaithfulAssignment {
    name: String,
    provider: PreorderFn,
}

impl FaithfulAssignment {
    pub fn new(
        name: impl Into<String>,
        provider: impl Fn(&ModelSet) -> TotalPreorder + Send + Sync + 'static,
    ) -> Self {
        FaithfulAssignment {
            name: name.into(),
            provider: Arc::new(provider),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn preorder(&self, phi: &ModelSet) -> TotalPreorder {
        (self.provider)(phi)
    }

    /// Builds an assignment from explicit rank tables. Model sets without
    /// a table get Hamming-distance ranks.
    pub fn from_tables(tables: Vec<(ModelSet, TotalPreorder)>) -> Result<Self> {
        for (phi, pre) in &tables {
            if pre.width() != phi.width() {
                return Err(Error::AlphabetMismatch);
            }
            if let Some((cond, a, b)) = pre.faithful_violation(phi) {
                return Err(Error::Assignment {
                    condition: cond.into(),
                    detail: format!("interpretations {:b} and {:b}", a.bits(), b.bits()),
                });
            }
        }
        let map: HashMap<ModelSet, TotalPreorder> = tables.into_iter().collect();
        Ok(FaithfulAssignment::new("table", move |phi| {
            map.get(phi).cloned().unwrap_or_else(|| dalal_preorder(phi))
        }))
    }

    /// Parses `{"phi_models": [...], "ranks": {"{p}": 0, ...}}` or a list
    /// of such objects. Unlisted interpretations rank above every listed
    /// one.
    pub fn from_json(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text)?;
        let items = match v {
            serde_json::Value::Array(items) => items,
            other => vec![other],
        };
        let mut tables = Vec::new();
        for item in items {
            let t: RankTableJson = serde_json::from_value(item)?;
            tables.push(t.resolve(alphabet)?);
        }
        FaithfulAssignment::from_tables(tables)
    }
}

impl fmt::Debug for FaithfulAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FaithfulAssignment({})", self.name)
    }
}

#[derive(Deserialize)]
pub(crate) struct RankTableJson {
    pub phi_models: Vec<String>,
    pub ranks: BTreeMap<String, u32>,
}

impl RankTableJson {
    pub(crate) fn resolve(&self, alphabet: &Alphabet) -> Result<(ModelSet, TotalPreorder)> {
        let n = alphabet.len();
        let mut phi = ModelSet::empty(n);
        for m in &self.phi_models {
            phi.insert(alphabet.parse_interpretation(m)?);
        }
        let mut ranks = vec![None; 1 << n];
        for (k, &r) in &self.ranks {
            ranks[alphabet.parse_interpretation(k)?.index()] = Some(r);
        }
        let top = ranks.iter().flatten().max().map_or(0, |m| m + 1);
        let ranks = ranks.into_iter().map(|r| r.unwrap_or(top)).collect();
        Ok((phi, TotalPreorder::from_ranks(ranks)))
    }
}

/// A propositional revision operator.
#[derive(Clone)]
pub enum PropOperator {
    Drastic,
    Dalal,
    Distance { name: String, d: DistanceFn },
    Faithful(FaithfulAssignment),
}

impl fmt::Debug for PropOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl PropOperator {
    pub fn distance(
        name: impl Into<String>,
        d: impl Fn(Interpretation, Interpretation) -> u32 + Send + Sync + 'static,
    ) -> Self {
        PropOperator::Distance {
            name: name.into(),
            d: Arc::new(d),
        }
    }

    pub fn name(&self) -> String {
        match self {
            PropOperator::Drastic => "drastic".into(),
            PropOperator::Dalal => "dalal".into(),
            PropOperator::Distance { name, .. } => format!("distance:{name}"),
            PropOperator::Faithful(a) => format!("faithful:{}", a.name()),
        }
    }

    /// The preorder `≤_φ` the operator minimizes over.
    pub fn preorder(&self, phi: &ModelSet) -> TotalPreorder {
        match self {
            PropOperator::Drastic => drastic_preorder(phi),
            PropOperator::Dalal => dalal_preorder(phi),
            PropOperator::Distance { d, .. } => TotalPreorder::from_fn(phi.width(), |i| {
                phi.iter().map(|j| d(i, j)).min().unwrap_or(0)
            }),
            PropOperator::Faithful(a) => a.preorder(phi),
        }
    }

    /// `mod(φ ∘ ψ)`.
    pub fn revise(&self, phi: &ModelSet, psi: &ModelSet) -> Result<ModelSet> {
        if phi.width() != psi.width() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.revise_unchecked(phi, psi))
    }

    pub(crate) fn revise_unchecked(&self, phi: &ModelSet, psi: &ModelSet) -> ModelSet {
        if psi.is_empty() {
            return psi.clone();
        }
        match self {
            PropOperator::Drastic => {
                let both = phi.intersect_unchecked(psi);
                if both.is_empty() {
                    psi.clone()
                } else {
                    both
                }
            }
            _ => self.preorder(phi).min(psi),
        }
    }
}

/// `revise` as a free function.
pub fn revise(op: &PropOperator, phi: &ModelSet, psi: &ModelSet) -> Result<ModelSet> {
    op.revise(phi, psi)
}

/// Does `i ⊨ φ ∘ ψ`?
pub fn mc_prop(
    op: &PropOperator,
    phi: &ModelSet,
    psi: &ModelSet,
    i: Interpretation,
) -> Result<bool> {
    Ok(op.revise(phi, psi)?.contains(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn ab3() -> Alphabet {
        Alphabet::new(["p", "q", "r"]).unwrap()
    }

    #[test]
    fn hamming_examples() {
        let a = ab3();
        let pq = a.parse_interpretation("p,q").unwrap();
        let pqr = a.parse_interpretation("p,q,r").unwrap();
        assert_eq!(hamming(pq, pqr), 1);
        assert_eq!(hamming(pq, pq), 0);
        assert_eq!(hamming(Interpretation::EMPTY, pqr), 3);
    }

    #[test]
    fn drastic_and_dalal_on_example() {
        let a = ab3();
        let phi = parse_formula("p & q & ~r", &a).unwrap();
        let psi = parse_formula("r", &a).unwrap();
        assert_eq!(PropOperator::Drastic.revise(&phi, &psi).unwrap(), psi);
        let dal = PropOperator::Dalal.revise(&phi, &psi).unwrap();
        assert_eq!(dal.to_vec(), vec![a.parse_interpretation("p,q,r").unwrap()]);
        let pqr = a.parse_interpretation("p,q,r").unwrap();
        let pq = a.parse_interpretation("p,q").unwrap();
        assert!(mc_prop(&PropOperator::Dalal, &phi, &psi, pqr).unwrap());
        assert!(!mc_prop(&PropOperator::Drastic, &phi, &psi, pq).unwrap());
    }

    #[test]
    fn rank_table_assignment() {
        let a = Alphabet::new(["p", "q"]).unwrap();
        let json = r#"{"phi_models":["{p}","{q}"],"ranks":{"{p}":0,"{q}":0,"{p,q}":1,"{}":2}}"#;
        let op = PropOperator::Faithful(FaithfulAssignment::from_json(json, &a).unwrap());
        let phi = parse_formula("p <-> ~q", &a).unwrap();
        let psi = parse_formula("p <-> q", &a).unwrap();
        assert_eq!(
            op.revise(&phi, &psi).unwrap().to_vec(),
            vec![a.parse_interpretation("p,q").unwrap()]
        );
        let bad = r#"{"phi_models":["{p}"],"ranks":{"{p}":1,"{q}":0}}"#;
        assert!(matches!(
            FaithfulAssignment::from_json(bad, &a),
            Err(Error::Assignment { .. })
        ));
    }

    #[test]
    fn inconsistent_input() {
        let a = Alphabet::new(["p"]).unwrap();
        let none = ModelSet::empty(1);
        let all = ModelSet::full(1);
        for op in [PropOperator::Drastic, PropOperator::Dalal] {
            assert!(op.revise(&all, &none).unwrap().is_empty());
            assert_eq!(op.revise(&none, &all).unwrap(), all);
        }
        assert!(PropOperator::Dalal
            .revise(&all, &ModelSet::empty(2))
            .is_err());
        let _ = a;
    }

    #[test]
    fn dalal_ranks_match_brute_force() {
        for phi in ModelSet::enumerate_all(2) {
            let pre = dalal_preorder(&phi);
            for i in Interpretation::all(2) {
                let want = phi.iter().map(|j| i.hamming(j)).min().unwrap_or(0);
                assert_eq!(pre.rank(i), want);
            }
        }
    }
}
