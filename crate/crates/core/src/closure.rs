//! Least complete and least here-intersection-closed supersets.

use crate::error::{Error, Result};
use crate::interp::{SePair, SeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureTarget {
    Complete,
    HiClosed,
}

/// Least superset of a well-defined `s` having the target property.
pub fn closure(s: &SeSet, target: ClosureTarget) -> Result<SeSet> {
    if !s.is_well_defined() {
        return Err(Error::Precondition("well-defined"));
    }
    Ok(match target {
        ClosureTarget::Complete => complete_step(s),
        ClosureTarget::HiClosed => {
            let mut cur = complete_step(s);
            loop {
                let next = complete_step(&intersection_step(&cur));
                if next == cur {
                    break cur;
                }
                cur = next;
            }
        }
    })
}

/// Adds `(X, Z)` for every `(X, Y)` and model `Z ⊇ Y`. Closure rules never
/// add models, so one pass reaches the fixpoint.
fn complete_step(s: &SeSet) -> SeSet {
    let models = s.models().to_vec();
    let mut out = s.clone();
    for p in s.iter_unordered() {
        for &z in models.iter().filter(|z| p.there().is_subset(**z)) {
            out.insert(SePair::new(p.here(), z).expect("here ⊆ there ⊆ z"));
        }
    }
    out
}

/// Closes each `{X | (X, Z) ∈ S}` under pairwise intersection.
fn intersection_step(s: &SeSet) -> SeSet {
    let mut out = s.clone();
    for z in s.models().iter() {
        let mut heres = s.heres_of(z);
        loop {
            let cur = heres.to_vec();
            let before = heres.len();
            for (i, &a) in cur.iter().enumerate() {
                for &b in &cur[i + 1..] {
                    heres.insert(a.intersection(b));
                }
            }
            if heres.len() == before {
                break;
            }
        }
        for x in heres.iter() {
            out.insert(SePair::new(x, z).expect("x ⊆ z"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::Interpretation;

    fn pair(h: u32, t: u32) -> SePair {
        SePair::new(Interpretation::from_bits(h), Interpretation::from_bits(t)).unwrap()
    }

    #[test]
    fn complete_closure_example() {
        let s = SeSet::from_pairs(2, [pair(2, 2), pair(3, 3)]);
        let c = closure(&s, ClosureTarget::Complete).unwrap();
        assert_eq!(
            c,
            SeSet::from_pairs(2, [pair(2, 2), pair(2, 3), pair(3, 3)])
        );
        assert_eq!(closure(&c, ClosureTarget::Complete).unwrap(), c);
    }

    #[test]
    fn hi_closure_example() {
        let s = SeSet::from_pairs(
            2,
            [pair(1, 3), pair(2, 3), pair(3, 3), pair(1, 1), pair(2, 2)],
        );
        let c = closure(&s, ClosureTarget::HiClosed).unwrap();
        assert!(c.contains(pair(0, 3)));
        assert!(c.is_hi_closed());
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn rejects_ill_defined() {
        let s = SeSet::from_pairs(1, [pair(0, 1)]);
        assert!(closure(&s, ClosureTarget::Complete).is_err());
    }
}
