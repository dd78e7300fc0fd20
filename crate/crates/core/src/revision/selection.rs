use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::interp::{Interpretation, ModelSet};

type SelectFn = Arc<dyn Fn(Interpretation) -> Vec<Interpretation> + Send + Sync>;

/// Picks the admissible here-worlds for a there-world `Y`.
#[derive(Clone)]
pub enum SelectionFunction {
    /// `f(Y) = 2^Y`.
    Skeptical,
    /// `f(Y) = {Y}`.
    Brave,
    Custom {
        name: String,
        f: SelectFn,
    },
}

impl SelectionFunction {
    pub fn from_fn(
        name: impl Into<String>,
        f: impl Fn(Interpretation) -> Vec<Interpretation> + Send + Sync + 'static,
    ) -> Self {
        SelectionFunction::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            SelectionFunction::Skeptical => "skeptical",
            SelectionFunction::Brave => "brave",
            SelectionFunction::Custom { name, .. } => name,
        }
    }

    pub fn eval(&self, y: Interpretation, width: usize) -> ModelSet {
        match self {
            SelectionFunction::Skeptical => ModelSet::subsets_of(width, y),
            SelectionFunction::Brave => ModelSet::singleton(width, y),
            SelectionFunction::Custom { f, .. } => ModelSet::from_iter(width, f(y)),
        }
    }

    /// `x ∈ f(y)`.
    #[inline]
    pub fn selects(&self, x: Interpretation, y: Interpretation) -> bool {
        match self {
            SelectionFunction::Skeptical => x.is_subset(y),
            SelectionFunction::Brave => x == y,
            SelectionFunction::Custom { f, .. } => f(y).contains(&x),
        }
    }

    /// Checks `Y ∈ f(Y)` and `f(Y) ⊆ 2^Y` for every `Y`.
    pub fn validate(&self, width: usize) -> Result<()> {
        for y in Interpretation::all(width) {
            let fy = self.eval(y, width);
            if !fy.contains(y) {
                return Err(Error::Selection {
                    y: format!("{:b}", y.bits()),
                    message: "Y is not selected".into(),
                });
            }
            let stray = fy.iter().find(|x| !x.is_subset(y));
            if let Some(x) = stray {
                return Err(Error::Selection {
                    y: format!("{:b}", y.bits()),
                    message: format!("selected {:b} is not a subset of Y", x.bits()),
                });
            }
        }
        Ok(())
    }

    /// Every selection function over `width` atoms, as explicit tables.
    /// There are `Π_Y 2^(2^|Y| − 1)` of them; only sensible for `width ≤ 2`.
    pub fn enumerate_all(width: usize) -> Vec<SelectionFunction> {
        assert!(
            width <= 2,
            "selection-function enumeration is limited to two atoms"
        );
        let ys: Vec<Interpretation> = Interpretation::all(width).collect();
        let mut tables: Vec<Vec<Vec<Interpretation>>> = vec![Vec::new()];
        for &y in &ys {
            let proper: Vec<Interpretation> = y.subsets().filter(|&x| x != y).collect();
            let mut next = Vec::new();
            for t in &tables {
                for mask in 0u32..1 << proper.len() {
                    let mut fy: Vec<Interpretation> = (0..proper.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| proper[i])
                        .collect();
                    fy.push(y);
                    let mut t = t.clone();
                    t.push(fy);
                    next.push(t);
                }
            }
            tables = next;
        }
        tables
            .into_iter()
            .enumerate()
            .map(|(k, t)| {
                let t = Arc::new(t);
                SelectionFunction::from_fn(format!("f{k}"), move |y| t[y.index()].clone())
            })
            .collect()
    }
}

impl fmt::Debug for SelectionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `f1 ⊑ f2` iff `f2(Y) ⊆ f1(Y)` for every `Y`.
pub fn lattice_leq(f1: &SelectionFunction, f2: &SelectionFunction, width: usize) -> bool {
    Interpretation::all(width).all(|y| f2.eval(y, width).subset_unchecked(&f1.eval(y, width)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_examples() {
        use SelectionFunction::*;
        assert!(lattice_leq(&Skeptical, &Brave, 2));
        assert!(!lattice_leq(&Brave, &Skeptical, 1));
        assert!(lattice_leq(&Brave, &Brave, 2));
        assert!(lattice_leq(&Skeptical, &Brave, 0) && lattice_leq(&Brave, &Skeptical, 0));
    }

    #[test]
    fn thirty_two_functions_at_two_atoms() {
        let all = SelectionFunction::enumerate_all(2);
        assert_eq!(all.len(), 32);
        for f in &all {
            f.validate(2).unwrap();
        }
        let bottom = all
            .iter()
            .filter(|f| lattice_leq(f, &SelectionFunction::Skeptical, 2))
            .count();
        assert_eq!(bottom, 1);
    }

    #[test]
    fn invalid_functions() {
        let no_y = SelectionFunction::from_fn("empty", |_| vec![]);
        assert!(matches!(no_y.validate(1), Err(Error::Selection { .. })));
        let too_big = SelectionFunction::from_fn("big", |y| vec![y, Interpretation::from_bits(1)]);
        assert!(too_big.validate(1).is_err());
    }
}
