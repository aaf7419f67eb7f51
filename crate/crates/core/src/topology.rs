//! L-topological spaces on a fuzzy carrier and subspaces cut out by fuzzy
//! α-cuts.

use std::fmt;

use crate::{Error, Frame, FuzzySet, Result};

/// `(X, Ã, τ)` with `τ` stored extensionally and deduplicated.
pub struct LTopSpace<F: Frame> {
    carrier: FuzzySet<F>,
    opens: Vec<FuzzySet<F>>,
}

impl<F: Frame> Clone for LTopSpace<F> {
    fn clone(&self) -> Self {
        LTopSpace {
            carrier: self.carrier.clone(),
            opens: self.opens.clone(),
        }
    }
}

impl<F: Frame> fmt::Debug for LTopSpace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LTopSpace")
            .field("carrier", &self.carrier)
            .field("opens", &self.opens)
            .finish()
    }
}

impl<F: Frame> PartialEq for LTopSpace<F> {
    /// Compares `τ` as a set.
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.opens.len() == other.opens.len()
            && self.opens.iter().all(|o| other.opens.contains(o))
    }
}

impl<F: Frame> LTopSpace<F> {
    /// Fails with [`Error::BaseMismatch`] or [`Error::LatticeMismatch`] when
    /// an open is not over the carrier's base and lattice. Does not check the
    /// topology conditions; see [`check_topology`].
    pub fn new(carrier: FuzzySet<F>, opens: Vec<FuzzySet<F>>) -> Result<Self> {
        let mut deduped: Vec<FuzzySet<F>> = Vec::with_capacity(opens.len());
        for o in opens {
            carrier.is_subset(&o)?;
            if !deduped.contains(&o) {
                deduped.push(o);
            }
        }
        Ok(LTopSpace {
            carrier,
            opens: deduped,
        })
    }

    /// `τ = {∅̃, Ã}`.
    pub fn indiscrete(carrier: FuzzySet<F>) -> Self {
        let empty = FuzzySet::empty(carrier.base().clone(), carrier.frame().clone());
        let mut opens = vec![empty];
        if carrier != opens[0] {
            opens.push(carrier.clone());
        }
        LTopSpace { carrier, opens }
    }

    pub fn carrier(&self) -> &FuzzySet<F> {
        &self.carrier
    }

    pub fn opens(&self) -> &[FuzzySet<F>] {
        &self.opens
    }
}

/// The first condition found to fail. Indices refer to [`LTopSpace::opens`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmpty,
    MissingCarrier,
    NotContained(usize),
    IntersectionMissing(usize, usize),
    UnionMissing(usize, usize),
}

impl TopologyViolation {
    /// The definition's condition number (0 for containment in the carrier).
    pub fn condition(&self) -> u8 {
        match self {
            TopologyViolation::NotContained(_) => 0,
            TopologyViolation::MissingEmpty | TopologyViolation::MissingCarrier => 1,
            TopologyViolation::IntersectionMissing(..) => 2,
            TopologyViolation::UnionMissing(..) => 3,
        }
    }
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::MissingEmpty => {
                write!(f, "condition 1: the empty fuzzy set is not open")
            }
            TopologyViolation::MissingCarrier => write!(f, "condition 1: the carrier is not open"),
            TopologyViolation::NotContained(i) => {
                write!(f, "open #{i} is not contained in the carrier")
            }
            TopologyViolation::IntersectionMissing(i, j) => {
                write!(
                    f,
                    "condition 2: intersection of opens #{i} and #{j} is not open"
                )
            }
            TopologyViolation::UnionMissing(i, j) => {
                write!(f, "condition 3: union of opens #{i} and #{j} is not open")
            }
        }
    }
}

/// Checks the three conditions and containment of every open in the carrier.
///
/// Unions are checked pairwise. For a finite `τ` containing `∅̃` this is
/// equivalent to closure under arbitrary unions, so the check is exact at
/// any size.
pub fn check_topology<F: Frame>(space: &LTopSpace<F>) -> Result<Option<TopologyViolation>> {
    let opens = &space.opens;
    for (i, o) in opens.iter().enumerate() {
        if !o.is_subset(&space.carrier)? {
            return Ok(Some(TopologyViolation::NotContained(i)));
        }
    }
    let empty = FuzzySet::empty(space.carrier.base().clone(), space.carrier.frame().clone());
    if !opens.contains(&empty) {
        return Ok(Some(TopologyViolation::MissingEmpty));
    }
    if !opens.contains(&space.carrier) {
        return Ok(Some(TopologyViolation::MissingCarrier));
    }
    for i in 0..opens.len() {
        for j in i + 1..opens.len() {
            if !opens.contains(&opens[i].intersect(&opens[j])?) {
                return Ok(Some(TopologyViolation::IntersectionMissing(i, j)));
            }
        }
    }
    for i in 0..opens.len() {
        for j in i + 1..opens.len() {
            if !opens.contains(&opens[i].union(&opens[j])?) {
                return Ok(Some(TopologyViolation::UnionMissing(i, j)));
            }
        }
    }
    Ok(None)
}

/// The subspace `(X, ᴬα, τ')` with `τ' = {ᴬα ∩ T | T ∈ τ}`.
///
/// Fails with [`Error::InvalidSpace`] when the input is not a topology, and
/// with [`Error::InternalInconsistency`] if the result is not one.
pub fn subspace_via_cut<F: Frame>(space: &LTopSpace<F>, alpha: F::Elem) -> Result<LTopSpace<F>> {
    if let Some(v) = check_topology(space)? {
        return Err(Error::InvalidSpace(v.to_string()));
    }
    let cut = space.carrier.fuzzy_alpha_cut(alpha);
    let opens = space
        .opens
        .iter()
        .map(|t| cut.intersect(t))
        .collect::<Result<Vec<_>>>()?;
    let sub = LTopSpace::new(cut, opens)?;
    if let Some(v) = check_topology(&sub)? {
        return Err(Error::InternalInconsistency(format!(
            "cut subspace is not a topology: {v}"
        )));
    }
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::{catalog, Base, Lattice};

    fn m5_set(l: &Arc<Lattice>, values: &[&str]) -> FuzzySet<Lattice> {
        let base = Base::new(&["p", "q", "r"][..values.len()]).unwrap();
        FuzzySet::new(base, l.clone(), l.elements_of(values).unwrap()).unwrap()
    }

    #[test]
    fn indiscrete_is_a_topology() {
        let l = Arc::new(catalog::m5());
        let a = m5_set(&l, &["a", "b", "bot"]);
        let space = LTopSpace::indiscrete(a.clone());
        assert_eq!(check_topology(&space).unwrap(), None);
        for alpha in l.elements() {
            let sub = subspace_via_cut(&space, alpha).unwrap();
            let cut = a.fuzzy_alpha_cut(alpha);
            assert_eq!(sub, LTopSpace::indiscrete(cut));
        }
    }

    #[test]
    fn all_two_valued_subsets_form_a_topology() {
        // Every fuzzy subset taking values in {⊥, Ã(x)} at each x.
        let l = Arc::new(catalog::m5());
        let a = m5_set(&l, &["a", "c", "top"]);
        let opens = (0..8u32)
            .map(|mask| {
                FuzzySet::from_fn(a.base().clone(), l.clone(), |x| {
                    if mask >> x & 1 == 1 {
                        a.value(x)
                    } else {
                        l.bottom()
                    }
                })
            })
            .collect();
        let space = LTopSpace::new(a, opens).unwrap();
        assert_eq!(space.opens().len(), 8);
        assert_eq!(check_topology(&space).unwrap(), None);
    }

    #[test]
    fn missing_empty_is_condition_one() {
        let l = Arc::new(catalog::m5());
        let a = m5_set(&l, &["a", "b"]);
        let space = LTopSpace::new(a.clone(), vec![a]).unwrap();
        let v = check_topology(&space).unwrap().unwrap();
        assert_eq!(v, TopologyViolation::MissingEmpty);
        assert_eq!(v.condition(), 1);
        assert!(matches!(
            subspace_via_cut(&space, l.bottom()),
            Err(Error::InvalidSpace(_))
        ));
    }

    #[test]
    fn missing_union_is_reported() {
        let l = Arc::new(catalog::m5());
        let a = m5_set(&l, &["a", "a"]);
        let opens = vec![
            m5_set(&l, &["bot", "bot"]),
            m5_set(&l, &["b", "bot"]),
            m5_set(&l, &["bot", "c"]),
            a.clone(),
        ];
        let space = LTopSpace::new(a, opens).unwrap();
        assert_eq!(
            check_topology(&space).unwrap(),
            Some(TopologyViolation::UnionMissing(1, 2))
        );
    }

    #[test]
    fn m5_subspace_example() {
        let l = Arc::new(catalog::m5());
        let a = m5_set(&l, &["a", "b"]);
        let space = LTopSpace::new(
            a.clone(),
            vec![m5_set(&l, &["bot", "bot"]), m5_set(&l, &["a", "bot"]), a],
        )
        .unwrap();
        assert_eq!(check_topology(&space).unwrap(), None);
        let sub = subspace_via_cut(&space, l.element("b").unwrap()).unwrap();
        let expected = [["bot", "bot"], ["a", "bot"], ["a", "b"]];
        let got: Vec<Vec<&str>> = sub
            .opens()
            .iter()
            .map(|o| o.membership().iter().map(|&e| l.label(e)).collect())
            .collect();
        assert_eq!(got, expected);
        assert_eq!(subspace_via_cut(&space, l.bottom()).unwrap(), space);
    }

    #[test]
    fn mismatched_open_is_rejected() {
        let l = Arc::new(catalog::m5());
        let a = m5_set(&l, &["a", "b"]);
        let other = m5_set(&l, &["a"]);
        assert_eq!(
            LTopSpace::new(a, vec![other]).unwrap_err(),
            Error::BaseMismatch
        );
    }
}
