//! Lattice-valued fuzzy sets on finite base sets.
//!
//! Fuzzy sets are compared extensionally: two fuzzy sets are equal when they
//! share a base set and a value lattice and agree at every point.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Frame, Result};

/// A finite base set of distinct point labels. Cloning is cheap.
#[derive(Clone)]
pub struct Base {
    labels: Arc<[String]>,
}

impl Base {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Base> {
        let mut seen = HashSet::new();
        for l in labels {
            if !seen.insert(l.as_ref()) {
                return Err(Error::DuplicateLabel(l.as_ref().to_owned()));
            }
        }
        Ok(Base {
            labels: labels.iter().map(|s| s.as_ref().to_owned()).collect(),
        })
    }

    /// Points labelled `"0"`, `"1"`, ….
    pub fn numbered(n: usize) -> Base {
        Base {
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_owned()))
    }
}

impl PartialEq for Base {
    fn eq(&self, other: &Base) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for Base {}

impl fmt::Debug for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// An ordinary subset of a base set.
#[derive(Clone, PartialEq, Eq)]
pub struct CrispSet {
    base: Base,
    members: Vec<bool>,
}

impl CrispSet {
    pub fn new(base: Base, members: Vec<bool>) -> Result<CrispSet> {
        if members.len() != base.len() {
            return Err(Error::BaseMismatch);
        }
        Ok(CrispSet { base, members })
    }

    pub fn from_labels<S: AsRef<str>>(base: Base, labels: &[S]) -> Result<CrispSet> {
        let mut members = vec![false; base.len()];
        for l in labels {
            members[base.index(l.as_ref())?] = true;
        }
        Ok(CrispSet { base, members })
    }

    pub fn empty(base: Base) -> CrispSet {
        let members = vec![false; base.len()];
        CrispSet { base, members }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.base.label(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &CrispSet) -> bool {
        self.base == other.base
            && self
                .members
                .iter()
                .zip(&other.members)
                .all(|(&a, &b)| !a || b)
    }

    /// The characteristic function: `⊤` on members, `⊥` elsewhere.
    pub fn characteristic<F: Frame>(&self, frame: Arc<F>) -> FuzzySet<F> {
        let (top, bottom) = (frame.top(), frame.bottom());
        let membership = self
            .members
            .iter()
            .map(|&m| if m { top } else { bottom })
            .collect();
        FuzzySet {
            base: self.base.clone(),
            frame,
            membership,
        }
    }
}

impl fmt::Debug for CrispSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

/// A total map between two finite base sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointMap {
    source: Base,
    target: Base,
    map: Vec<usize>,
}

impl PointMap {
    pub fn new(source: Base, target: Base, map: Vec<usize>) -> Result<PointMap> {
        if map.len() != source.len() {
            return Err(Error::BaseMismatch);
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
            return Err(Error::UnknownPoint(format!("#{bad}")));
        }
        Ok(PointMap {
            source,
            target,
            map,
        })
    }

    /// Builds a map from `(source label, target label)` pairs covering the
    /// whole source.
    pub fn from_labels<S: AsRef<str>, T: AsRef<str>>(
        source: Base,
        target: Base,
        pairs: &[(S, T)],
    ) -> Result<PointMap> {
        let mut map = vec![None; source.len()];
        for (x, y) in pairs {
            map[source.index(x.as_ref())?] = Some(target.index(y.as_ref())?);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, y)| y.ok_or_else(|| Error::UnknownPoint(source.label(i).to_owned())))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(base: Base) -> PointMap {
        let map = (0..base.len()).collect();
        PointMap {
            source: base.clone(),
            target: base,
            map,
        }
    }

    pub fn source(&self) -> &Base {
        &self.source
    }

    pub fn target(&self) -> &Base {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `then ∘ self`: first `self`, then `then`.
    pub fn then(&self, then: &PointMap) -> Result<PointMap> {
        if self.target != then.source {
            return Err(Error::BaseMismatch);
        }
        Ok(PointMap {
            source: self.source.clone(),
            target: then.target.clone(),
            map: self.map.iter().map(|&y| then.map[y]).collect(),
        })
    }
}

/// A fuzzy set `Ã : X → L`.
pub struct FuzzySet<F: Frame> {
    base: Base,
    frame: Arc<F>,
    membership: Vec<F::Elem>,
}

impl<F: Frame> Clone for FuzzySet<F> {
    fn clone(&self) -> Self {
        FuzzySet {
            base: self.base.clone(),
            frame: self.frame.clone(),
            membership: self.membership.clone(),
        }
    }
}

impl<F: Frame> PartialEq for FuzzySet<F> {
    fn eq(&self, other: &Self) -> bool {
        self.membership == other.membership
            && self.base == other.base
            && (Arc::ptr_eq(&self.frame, &other.frame) || self.frame == other.frame)
    }
}

impl<F: Frame> Eq for FuzzySet<F> {}

impl<F: Frame> fmt::Debug for FuzzySet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.base.labels().iter().zip(&self.membership))
            .finish()
    }
}

impl<F: Frame> FuzzySet<F> {
    pub fn new(base: Base, frame: Arc<F>, membership: Vec<F::Elem>) -> Result<Self> {
        if membership.len() != base.len() {
            return Err(Error::BaseMismatch);
        }
        Ok(FuzzySet {
            base,
            frame,
            membership,
        })
    }

    pub fn from_fn(base: Base, frame: Arc<F>, f: impl FnMut(usize) -> F::Elem) -> Self {
        let membership = (0..base.len()).map(f).collect();
        FuzzySet {
            base,
            frame,
            membership,
        }
    }

    pub fn constant(base: Base, frame: Arc<F>, value: F::Elem) -> Self {
        FuzzySet::from_fn(base, frame, |_| value)
    }

    /// The empty fuzzy set `∅̃`, constantly `⊥`.
    pub fn empty(base: Base, frame: Arc<F>) -> Self {
        let bottom = frame.bottom();
        FuzzySet::constant(base, frame, bottom)
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn frame(&self) -> &Arc<F> {
        &self.frame
    }

    pub fn membership(&self) -> &[F::Elem] {
        &self.membership
    }

    pub fn value(&self, i: usize) -> F::Elem {
        self.membership[i]
    }

    pub fn get(&self, label: &str) -> Result<F::Elem> {
        Ok(self.membership[self.base.index(label)?])
    }

    /// Points with membership above `⊥`.
    pub fn support(&self) -> Vec<usize> {
        let bottom = self.frame.bottom();
        (0..self.membership.len())
            .filter(|&i| self.membership[i] != bottom)
            .collect()
    }

    pub fn is_empty_set(&self) -> bool {
        self.support().is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        if !(Arc::ptr_eq(&self.frame, &other.frame) || self.frame == other.frame) {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }

    fn with_membership(&self, membership: Vec<F::Elem>) -> Self {
        FuzzySet {
            base: self.base.clone(),
            frame: self.frame.clone(),
            membership,
        }
    }

    /// The crisp α-cut `{x | Ã(x) ≥ α}`.
    pub fn alpha_cut(&self, alpha: F::Elem) -> CrispSet {
        let members = self
            .membership
            .iter()
            .map(|&v| self.frame.leq(alpha, v))
            .collect();
        CrispSet {
            base: self.base.clone(),
            members,
        }
    }

    /// The fuzzy α-cut: `Ã(x)` where `Ã(x) ≥ α`, `⊥` elsewhere.
    pub fn fuzzy_alpha_cut(&self, alpha: F::Elem) -> Self {
        let bottom = self.frame.bottom();
        let membership = self
            .membership
            .iter()
            .map(|&v| if self.frame.leq(alpha, v) { v } else { bottom })
            .collect();
        self.with_membership(membership)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |f, a, b| f.meet(a, b)))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |f, a, b| f.join(a, b)))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, F::Elem, F::Elem) -> F::Elem) -> Self {
        let membership = self
            .membership
            .iter()
            .zip(&other.membership)
            .map(|(&a, &b)| op(&self.frame, a, b))
            .collect();
        self.with_membership(membership)
    }

    /// Pointwise inclusion `Ã ⊆ B̃`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self
            .membership
            .iter()
            .zip(&other.membership)
            .all(|(&a, &b)| self.frame.leq(a, b)))
    }

    /// Image under `f`: `f(Ã)(y) = ⋁{Ã(x) | f(x) = y}`, `⊥` on empty fibres.
    pub fn image(&self, f: &PointMap) -> Result<Self> {
        if f.source != self.base {
            return Err(Error::BaseMismatch);
        }
        let membership = (0..f.target.len())
            .map(|y| {
                self.frame.join_all(
                    (0..self.base.len())
                        .filter(|&x| f.map[x] == y)
                        .map(|x| self.membership[x]),
                )
            })
            .collect();
        Ok(FuzzySet {
            base: f.target.clone(),
            frame: self.frame.clone(),
            membership,
        })
    }

    /// Every distinct fuzzy α-cut, the `⊥`-cut (the set itself) first.
    pub fn cut_family(&self) -> Vec<Self> {
        let levels = self.frame.cut_levels(&self.membership);
        let mut family: Vec<Self> = Vec::with_capacity(levels.len());
        for alpha in levels {
            let cut = self.fuzzy_alpha_cut(alpha);
            if !family.contains(&cut) {
                family.push(cut);
            }
        }
        family
    }
}
