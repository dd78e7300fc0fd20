//! Interpretations, model sets and sets of SE interpretations.
//!
//! Everything here is extensional: a [`ModelSet`] is a bitset over the `2^n`
//! interpretations of an alphabet and an [`SeSet`] is a bitset over its `3^n`
//! SE interpretations. An SE interpretation `(X, Y)` is stored at the ternary
//! index whose digit for atom `i` is `[i ∈ Y] + [i ∈ X]`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A subset of the alphabet, one bit per atom.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Interpretation(u32);

impl Interpretation {
    pub const EMPTY: Interpretation = Interpretation(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        Interpretation(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn contains(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }

    #[inline]
    pub fn is_subset(self, other: Interpretation) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersection(self, other: Interpretation) -> Interpretation {
        Interpretation(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: Interpretation) -> Interpretation {
        Interpretation(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: Interpretation) -> Interpretation {
        Interpretation(self.0 & !other.0)
    }

    /// Number of atoms on which the two interpretations differ.
    #[inline]
    pub fn hamming(self, other: Interpretation) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// All subsets of `self`, in ascending numeric order.
    pub fn subsets(self) -> impl Iterator<Item = Interpretation> {
        let y = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == y {
                None
            } else {
                Some(((cur | !y).wrapping_add(1)) & y)
            };
            Some(Interpretation(cur))
        })
    }

    /// All interpretations over `n` atoms.
    pub fn all(n: usize) -> impl Iterator<Item = Interpretation> {
        (0..1u32 << n).map(Interpretation)
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{:b}", self.0)
    }
}

/// An SE interpretation `(here, there)` with `here ⊆ there`. Ordered by
/// `(there, here)`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SePair {
    there: Interpretation,
    here: Interpretation,
}

impl SePair {
    pub fn new(here: Interpretation, there: Interpretation) -> Result<Self> {
        if here.is_subset(there) {
            Ok(SePair { there, here })
        } else {
            Err(Error::NotSeInterpretation)
        }
    }

    /// `(Y, Y)`.
    pub fn total(y: Interpretation) -> Self {
        SePair { there: y, here: y }
    }

    #[inline]
    pub fn here(self) -> Interpretation {
        self.here
    }

    #[inline]
    pub fn there(self) -> Interpretation {
        self.there
    }

    #[inline]
    fn index(self) -> usize {
        ternary(self.there.0) + ternary(self.here.0)
    }

    fn decode(mut idx: usize, n: usize) -> SePair {
        let (mut here, mut there) = (0u32, 0u32);
        for i in 0..n {
            let d = idx % 3;
            idx /= 3;
            if d >= 1 {
                there |= 1 << i;
            }
            if d == 2 {
                here |= 1 << i;
            }
        }
        SePair {
            there: Interpretation(there),
            here: Interpretation(here),
        }
    }
}

impl fmt::Debug for SePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:b},{:b})", self.here.0, self.there.0)
    }
}

const fn ternary_table() -> [u32; 256] {
    let mut t = [0u32; 256];
    let mut s = 0;
    while s < 256 {
        let mut v = 0u32;
        let mut p = 1u32;
        let mut i = 0;
        while i < 8 {
            if s >> i & 1 == 1 {
                v += p;
            }
            p *= 3;
            i += 1;
        }
        t[s] = v;
        s += 1;
    }
    t
}

static TERNARY: [u32; 256] = ternary_table();

#[inline]
fn ternary(bits: u32) -> usize {
    (TERNARY[(bits & 0xff) as usize] + TERNARY[(bits >> 8 & 0xff) as usize] * 6561) as usize
}

fn pow3(n: usize) -> usize {
    3usize.pow(n as u32)
}

/// A set of interpretations over an alphabet of `width` atoms; the
/// extensional stand-in for a propositional formula.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelSet {
    width: usize,
    bits: Bits,
}

impl ModelSet {
    pub fn empty(width: usize) -> Self {
        ModelSet {
            width,
            bits: Bits::new(1 << width),
        }
    }

    pub fn full(width: usize) -> Self {
        ModelSet {
            width,
            bits: Bits::full(1 << width),
        }
    }

    pub fn from_iter<I: IntoIterator<Item = Interpretation>>(width: usize, items: I) -> Self {
        let mut m = ModelSet::empty(width);
        for i in items {
            m.insert(i);
        }
        m
    }

    pub fn singleton(width: usize, i: Interpretation) -> Self {
        ModelSet::from_iter(width, [i])
    }

    /// `{X | X ⊆ y}`.
    pub fn subsets_of(width: usize, y: Interpretation) -> Self {
        ModelSet::from_iter(width, y.subsets())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, i: Interpretation) {
        self.bits.set(i.index());
    }

    pub fn remove(&mut self, i: Interpretation) {
        self.bits.unset(i.index());
    }

    #[inline]
    pub fn contains(&self, i: Interpretation) -> bool {
        i.index() < self.bits.len() && self.bits.get(i.index())
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending numeric order.
    pub fn iter(&self) -> impl Iterator<Item = Interpretation> + '_ {
        self.bits.ones().map(|i| Interpretation(i as u32))
    }

    pub fn to_vec(&self) -> Vec<Interpretation> {
        self.iter().collect()
    }

    fn check_width(&self, other: &ModelSet) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn intersection(&self, other: &ModelSet) -> Result<ModelSet> {
        self.check_width(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub fn union(&self, other: &ModelSet) -> Result<ModelSet> {
        self.check_width(other)?;
        Ok(ModelSet {
            width: self.width,
            bits: self.bits.or(&other.bits),
        })
    }

    pub fn difference(&self, other: &ModelSet) -> Result<ModelSet> {
        self.check_width(other)?;
        Ok(ModelSet {
            width: self.width,
            bits: self.bits.and_not(&other.bits),
        })
    }

    pub fn is_subset(&self, other: &ModelSet) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn intersects(&self, other: &ModelSet) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.bits.intersects(&other.bits))
    }

    pub(crate) fn intersect_unchecked(&self, other: &ModelSet) -> ModelSet {
        ModelSet {
            width: self.width,
            bits: self.bits.and(&other.bits),
        }
    }

    pub(crate) fn subset_unchecked(&self, other: &ModelSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Every model set over `width` atoms, in the order of their bit
    /// patterns. Only sensible for tiny alphabets.
    pub fn enumerate_all(width: usize) -> Vec<ModelSet> {
        let count = 1usize << width;
        assert!(
            count <= 16,
            "model-set enumeration is limited to 4 interpretations... use width <= 2"
        );
        (0u32..1 << count)
            .map(|mask| {
                ModelSet::from_iter(
                    width,
                    (0..count as u32)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(Interpretation),
                )
            })
            .collect()
    }
}

impl fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Structural flags of an SE set.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SeProperties {
    pub well_defined: bool,
    pub complete: bool,
    pub hi_closed: bool,
}

/// A set of SE interpretations over `width` atoms.
///
/// The three structural flags are computed on first request and cached.
/// Equality, ordering and hashing only look at the pairs.
pub struct SeSet {
    width: usize,
    bits: Bits,
    well_defined: OnceLock<bool>,
    complete: OnceLock<bool>,
    hi_closed: OnceLock<bool>,
}

impl Clone for SeSet {
    fn clone(&self) -> Self {
        SeSet {
            width: self.width,
            bits: self.bits.clone(),
            well_defined: self.well_defined.clone(),
            complete: self.complete.clone(),
            hi_closed: self.hi_closed.clone(),
        }
    }
}

impl PartialEq for SeSet {
    fn eq(&self, other: &Self) -> bool {
        self.width == other.width && self.bits == other.bits
    }
}

impl Eq for SeSet {}

impl Hash for SeSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.width.hash(state);
        self.bits.hash(state);
    }
}

impl PartialOrd for SeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.width, &self.bits).cmp(&(other.width, &other.bits))
    }
}

impl SeSet {
    fn from_bits(width: usize, bits: Bits) -> Self {
        SeSet {
            width,
            bits,
            well_defined: OnceLock::new(),
            complete: OnceLock::new(),
            hi_closed: OnceLock::new(),
        }
    }

    pub fn empty(width: usize) -> Self {
        SeSet::from_bits(width, Bits::new(pow3(width)))
    }

    /// All `3^n` SE interpretations.
    pub fn full(width: usize) -> Self {
        SeSet::from_bits(width, Bits::full(pow3(width)))
    }

    pub fn from_pairs<I: IntoIterator<Item = SePair>>(width: usize, pairs: I) -> Self {
        let mut s = SeSet::empty(width);
        for p in pairs {
            s.bits.set(p.index());
        }
        s
    }

    /// `{(Y, Y) | Y ∈ worlds}`.
    pub fn from_totals(worlds: &ModelSet) -> Self {
        SeSet::from_pairs(worlds.width(), worlds.iter().map(SePair::total))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, p: SePair) {
        self.bits.set(p.index());
        self.reset_flags();
    }

    fn reset_flags(&mut self) {
        self.well_defined = OnceLock::new();
        self.complete = OnceLock::new();
        self.hi_closed = OnceLock::new();
    }

    #[inline]
    pub fn contains(&self, p: SePair) -> bool {
        let i = p.index();
        i < self.bits.len() && self.bits.get(i)
    }

    #[inline]
    pub fn contains_pair(&self, here: Interpretation, there: Interpretation) -> bool {
        here.is_subset(there) && self.contains(SePair { here, there })
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Pairs in canonical `(there, here)` order.
    pub fn pairs(&self) -> Vec<SePair> {
        let mut v: Vec<SePair> = self
            .bits
            .ones()
            .map(|i| SePair::decode(i, self.width))
            .collect();
        v.sort_unstable();
        v
    }

    /// Pairs in storage order; cheaper than [`pairs`](Self::pairs) when
    /// order is irrelevant.
    pub fn iter_unordered(&self) -> impl Iterator<Item = SePair> + '_ {
        let w = self.width;
        self.bits.ones().map(move |i| SePair::decode(i, w))
    }

    /// `{Y | (Y, Y) ∈ S}`; for SE models of a program these are its
    /// classical models.
    pub fn models(&self) -> ModelSet {
        let mut m = ModelSet::empty(self.width);
        for y in Interpretation::all(self.width) {
            if self.contains(SePair::total(y)) {
                m.insert(y);
            }
        }
        m
    }

    /// First components of all pairs.
    pub fn heres(&self) -> ModelSet {
        ModelSet::from_iter(self.width, self.iter_unordered().map(SePair::here))
    }

    /// `{X | (X, y) ∈ S}`.
    pub fn heres_of(&self, y: Interpretation) -> ModelSet {
        ModelSet::from_iter(
            self.width,
            y.subsets()
                .filter(|&x| self.contains(SePair { here: x, there: y })),
        )
    }

    fn check_width(&self, other: &SeSet) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn intersection(&self, other: &SeSet) -> Result<SeSet> {
        self.check_width(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub fn union(&self, other: &SeSet) -> Result<SeSet> {
        self.check_width(other)?;
        Ok(SeSet::from_bits(self.width, self.bits.or(&other.bits)))
    }

    pub fn is_subset(&self, other: &SeSet) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn intersects(&self, other: &SeSet) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.bits.intersects(&other.bits))
    }

    pub(crate) fn intersect_unchecked(&self, other: &SeSet) -> SeSet {
        SeSet::from_bits(self.width, self.bits.and(&other.bits))
    }

    pub(crate) fn subset_unchecked(&self, other: &SeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub(crate) fn intersects_unchecked(&self, other: &SeSet) -> bool {
        self.bits.intersects(&other.bits)
    }

    /// `(self ∩ mask) ⊆ other`.
    pub(crate) fn and_subset_unchecked(&self, mask: &SeSet, other: &SeSet) -> bool {
        self.bits.and_is_subset(&mask.bits, &other.bits)
    }

    /// Keeps the pairs satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(SePair) -> bool) -> SeSet {
        let mut bits = self.bits.clone();
        for i in self.bits.ones() {
            if !keep(SePair::decode(i, self.width)) {
                bits.unset(i);
            }
        }
        SeSet::from_bits(self.width, bits)
    }

    /// `∀(X,Y) ∈ S: (Y,Y) ∈ S`.
    pub fn is_well_defined(&self) -> bool {
        *self.well_defined.get_or_init(|| {
            self.iter_unordered()
                .all(|p| self.contains(SePair::total(p.there)))
        })
    }

    /// Well-defined, and `(X,Y), (Z,Z) ∈ S` with `Y ⊆ Z` imply `(X,Z) ∈ S`.
    pub fn is_complete(&self) -> bool {
        *self.complete.get_or_init(|| {
            if !self.is_well_defined() {
                return false;
            }
            let models = self.models().to_vec();
            self.iter_unordered().all(|p| {
                models.iter().filter(|z| p.there.is_subset(**z)).all(|&z| {
                    self.contains(SePair {
                        here: p.here,
                        there: z,
                    })
                })
            })
        })
    }

    /// Complete, and `(X,Z), (Y,Z) ∈ S` imply `(X ∩ Y, Z) ∈ S`.
    pub fn is_hi_closed(&self) -> bool {
        *self.hi_closed.get_or_init(|| {
            if !self.is_complete() {
                return false;
            }
            self.models().iter().all(|z| {
                let heres = self.heres_of(z).to_vec();
                heres.iter().enumerate().all(|(i, &x)| {
                    heres[i + 1..].iter().all(|&y| {
                        self.contains(SePair {
                            here: x.intersection(y),
                            there: z,
                        })
                    })
                })
            })
        })
    }

    pub fn properties(&self) -> SeProperties {
        SeProperties {
            well_defined: self.is_well_defined(),
            complete: self.is_complete(),
            hi_closed: self.is_hi_closed(),
        }
    }

    /// Cached flag values, `None` where not yet computed.
    pub fn cached_properties(&self) -> [Option<bool>; 3] {
        [
            self.well_defined.get().copied(),
            self.complete.get().copied(),
            self.hi_closed.get().copied(),
        ]
    }
}

impl fmt::Debug for SeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}
