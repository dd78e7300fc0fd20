use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::interp::{Interpretation, SePair, SeSet};
use crate::revision::PartedAssignment;

/// A total preorder over SE interpretations, as ranks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompliantPreorder {
    width: usize,
    ranks: BTreeMap<SePair, u32>,
}

/// Where `compliant_from_parted` puts a pair `(X,Y)` with `X ∉ P(Y)`.
/// Pairs with `X ∈ P(Y)` always sit at level `2·r(Y)`, `r` being the dense
/// rank of `Y` under `≤_P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    /// Above every selected pair.
    Top,
    /// Directly above `(Y,Y)`, at `2·r(Y) + 1`.
    JustAbove,
    /// Level with the next rank up, at `2·r(Y) + 2`.
    NextLevel,
}

impl CompliantPreorder {
    /// Ranks for every SE interpretation over `width` atoms; missing pairs
    /// are an error.
    pub fn from_ranks(width: usize, ranks: BTreeMap<SePair, u32>) -> Result<Self> {
        let all = SeSet::full(width);
        if ranks.len() != all.len() || !all.pairs().iter().all(|p| ranks.contains_key(p)) {
            return Err(Error::Usage("a rank for every SE interpretation".into()));
        }
        Ok(CompliantPreorder { width, ranks }.dense())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self, pair: SePair) -> u32 {
        self.ranks[&pair]
    }

    pub fn ranks(&self) -> &BTreeMap<SePair, u32> {
        &self.ranks
    }

    pub fn leq(&self, a: SePair, b: SePair) -> bool {
        self.rank(a) <= self.rank(b)
    }

    /// `min(S, ≤*)`.
    pub fn min(&self, s: &SeSet) -> SeSet {
        let Some(best) = s.iter_unordered().map(|p| self.rank(p)).min() else {
            return s.clone();
        };
        s.filter(|p| self.rank(p) == best)
    }

    fn dense(mut self) -> Self {
        let mut levels: Vec<u32> = self.ranks.values().copied().collect();
        levels.sort_unstable();
        levels.dedup();
        for r in self.ranks.values_mut() {
            *r = levels.binary_search(r).expect("present") as u32;
        }
        self
    }

    /// Conditions (1), (2) and (4) for `SE(P) = se`: the SE models of `P`
    /// share one rank, sit strictly below everything else, and `(Y,Y)` is
    /// never above `(X,Y)`.
    pub fn compliance_violation(&self, se: &SeSet) -> Option<String> {
        let inside: Vec<u32> = se.pairs().iter().map(|&p| self.rank(p)).collect();
        if inside.windows(2).any(|w| w[0] != w[1]) {
            return Some("(1): SE models of P are ranked differently".into());
        }
        if let Some(&r) = inside.first() {
            if let Some((p, _)) = self
                .ranks
                .iter()
                .find(|(p, s)| !se.contains(**p) && **s <= r)
            {
                return Some(format!(
                    "(2): ({:b}, {:b}) is not above the SE models of P",
                    p.here().bits(),
                    p.there().bits()
                ));
            }
        }
        for (&p, &r) in &self.ranks {
            if self.rank(SePair::total(p.there())) > r {
                return Some(format!(
                    "(4): ({:b}, {:b}) is below its total",
                    p.here().bits(),
                    p.there().bits()
                ));
            }
        }
        None
    }

    /// The σ conditions against `A` at `SE(P) = se`: totals are ordered as
    /// `≤_P`, and `(X,Y) ≤* (Y,Y)` exactly when `X ∈ P(Y)`.
    pub fn sigma_violation(&self, a: &PartedAssignment, se: &SeSet) -> Option<String> {
        let pre = a.preorder(&se.models());
        let n = self.width;
        for y in Interpretation::all(n) {
            for z in Interpretation::all(n) {
                if self.leq(SePair::total(y), SePair::total(z)) != pre.leq(y, z) {
                    return Some(format!("(i) at {:b}, {:b}", y.bits(), z.bits()));
                }
            }
            let py = a.here_set(se, y);
            for x in y.subsets() {
                let pair = SePair::new(x, y).expect("x ⊆ y");
                if self.leq(pair, SePair::total(y)) != py.contains(x) {
                    return Some(format!("(ii) at ({:b}, {:b})", x.bits(), y.bits()));
                }
            }
        }
        None
    }

    /// The first `Q` whose min-set differs from `A`'s comprehension.
    pub fn first_min_mismatch<'q>(
        &self,
        a: &PartedAssignment,
        se: &SeSet,
        qs: &'q [SeSet],
    ) -> Option<&'q SeSet> {
        qs.iter().find(|q| self.min(q) != a.comprehension(se, q))
    }
}

impl fmt::Debug for CompliantPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut levels: BTreeMap<u32, Vec<String>> = BTreeMap::new();
        for (p, r) in &self.ranks {
            levels.entry(*r).or_default().push(format!(
                "({:b},{:b})",
                p.here().bits(),
                p.there().bits()
            ));
        }
        f.debug_map().entries(levels.iter()).finish()
    }
}

/// Builds a compliant preorder from a parted assignment at `SE(P) = se`,
/// after validating the assignment there.
pub fn compliant_from_parted(
    a: &PartedAssignment,
    se: &SeSet,
    placement: Placement,
) -> Result<CompliantPreorder> {
    a.validate(se)?;
    let n = se.width();
    let pre = a.preorder(&se.models()).dense();
    let top = 2 * Interpretation::all(n)
        .map(|y| pre.rank(y))
        .max()
        .unwrap_or(0)
        + 1;
    let mut ranks = BTreeMap::new();
    for y in Interpretation::all(n) {
        let r = 2 * pre.rank(y);
        let py = a.here_set(se, y);
        for x in y.subsets() {
            let level = if py.contains(x) {
                r
            } else {
                match placement {
                    Placement::Top => top,
                    Placement::JustAbove => r + 1,
                    Placement::NextLevel => r + 2,
                }
            };
            ranks.insert(SePair::new(x, y).expect("x ⊆ y"), level);
        }
    }
    let c = CompliantPreorder { width: n, ranks }.dense();
    if let Some(v) = c
        .compliance_violation(se)
        .or_else(|| c.sigma_violation(a, se))
    {
        return Err(Error::Assignment {
            condition: "compliant".into(),
            detail: v,
        });
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::ModelSet;
    use crate::prop::PropOperator;
    use crate::revision::SelectionFunction;
    use crate::syntax::ProgramClass;
    use crate::verify::enumerate::enumerate_se_sets;

    #[test]
    fn placements_agree_on_min_sets() {
        let a = PartedAssignment::from_prop(PropOperator::Dalal, SelectionFunction::Brave);
        let qs = enumerate_se_sets(2, ProgramClass::Glp);
        for se in qs.iter().filter(|s| !s.is_empty()).step_by(7) {
            let built: Vec<_> = [Placement::Top, Placement::JustAbove, Placement::NextLevel]
                .iter()
                .map(|&pl| compliant_from_parted(&a, se, pl).unwrap())
                .collect();
            for c in &built {
                assert_eq!(c.first_min_mismatch(&a, se, &qs), None);
            }
        }
    }

    #[test]
    fn full_model_set_puts_se_models_at_zero() {
        let a = PartedAssignment::from_prop(PropOperator::Dalal, SelectionFunction::Skeptical);
        let se = SeSet::from_totals(&ModelSet::full(2));
        let c = compliant_from_parted(&a, &se, Placement::Top).unwrap();
        for p in se.pairs() {
            assert_eq!(c.rank(p), 0);
        }
    }

    #[test]
    fn missing_ranks_rejected() {
        assert!(CompliantPreorder::from_ranks(1, BTreeMap::new()).is_err());
    }
}
