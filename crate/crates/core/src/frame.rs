use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The implication used to compare membership values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Arrow {
    /// `a → b = ⊤` if `a ≤ b`, otherwise `b`.
    #[default]
    #[serde(alias = "godel")]
    GodelLike,
    /// `a → b = ⋁{c | c ∧ a ≤ b}`.
    Residuated,
}

/// A complete lattice in which binary meets distribute over joins, exposed
/// through the operations the rest of the crate needs.
///
/// Values of [`Frame::Elem`] are only meaningful relative to the frame that
/// produced them.
pub trait Frame: fmt::Debug + PartialEq {
    type Elem: Copy + Eq + Hash + fmt::Debug;

    fn leq(&self, a: Self::Elem, b: Self::Elem) -> bool;
    fn meet(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn join(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn bottom(&self) -> Self::Elem;
    fn is_chain(&self) -> bool;

    /// Largest `c` with `c ∧ a ≤ b`.
    fn residuated_impl(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem>;

    /// Thresholds that produce every distinct α-cut of a fuzzy set whose
    /// membership values are `values`. The bottom element comes first.
    fn cut_levels(&self, values: &[Self::Elem]) -> Vec<Self::Elem>;

    fn godel_arrow(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        if self.leq(a, b) {
            self.top()
        } else {
            b
        }
    }

    fn arrow(&self, kind: Arrow, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        match kind {
            Arrow::GodelLike => Ok(self.godel_arrow(a, b)),
            Arrow::Residuated => self.residuated_impl(a, b),
        }
    }

    /// Meet of all values; the empty meet is the top element.
    fn meet_all<I: IntoIterator<Item = Self::Elem>>(&self, values: I) -> Self::Elem {
        values
            .into_iter()
            .fold(self.top(), |acc, v| self.meet(acc, v))
    }

    /// Join of all values; the empty join is the bottom element.
    fn join_all<I: IntoIterator<Item = Self::Elem>>(&self, values: I) -> Self::Elem {
        values
            .into_iter()
            .fold(self.bottom(), |acc, v| self.join(acc, v))
    }
}

/// A point of the real unit interval. Never NaN; `-0.0` is normalised to `0.0`.
#[derive(Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Unit(f64);

impl Unit {
    pub const ZERO: Unit = Unit(0.0);
    pub const ONE: Unit = Unit(1.0);

    pub fn new(value: f64) -> Result<Unit> {
        if (0.0..=1.0).contains(&value) {
            Ok(Unit(value + 0.0))
        } else {
            Err(Error::BadParameters(format!("{value} is not in [0, 1]")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Eq for Unit {}

impl Hash for Unit {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl fmt::Debug for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The unit interval `[0, 1]` ordered as a chain, with `min`/`max` as
/// meet/join. Being totally ordered it is a frame, and its residuated and
/// Gödel-like arrows coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct UnitInterval;

impl Frame for UnitInterval {
    type Elem = Unit;

    fn leq(&self, a: Unit, b: Unit) -> bool {
        a.0 <= b.0
    }

    fn meet(&self, a: Unit, b: Unit) -> Unit {
        if a.0 <= b.0 {
            a
        } else {
            b
        }
    }

    fn join(&self, a: Unit, b: Unit) -> Unit {
        if a.0 >= b.0 {
            a
        } else {
            b
        }
    }

    fn top(&self) -> Unit {
        Unit::ONE
    }

    fn bottom(&self) -> Unit {
        Unit::ZERO
    }

    fn is_chain(&self) -> bool {
        true
    }

    fn residuated_impl(&self, a: Unit, b: Unit) -> Result<Unit> {
        Ok(self.godel_arrow(a, b))
    }

    // On a chain the cut at α equals the cut at the least membership value
    // above α, so the bottom, the values themselves and the top suffice.
    fn cut_levels(&self, values: &[Unit]) -> Vec<Unit> {
        let mut levels: Vec<Unit> = values.to_vec();
        levels.push(Unit::ZERO);
        levels.push(Unit::ONE);
        levels.sort_by(|a, b| a.0.total_cmp(&b.0));
        levels.dedup();
        levels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_rejects_out_of_range() {
        assert!(Unit::new(-0.1).is_err());
        assert!(Unit::new(1.5).is_err());
        assert!(Unit::new(f64::NAN).is_err());
        assert_eq!(Unit::new(-0.0).unwrap().get().to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn unit_interval_arrows_agree() {
        let f = UnitInterval;
        let pts: Vec<Unit> = [0.0, 0.2, 0.5, 1.0]
            .iter()
            .map(|&x| Unit::new(x).unwrap())
            .collect();
        for &a in &pts {
            for &b in &pts {
                assert_eq!(f.godel_arrow(a, b), f.residuated_impl(a, b).unwrap());
            }
        }
        assert_eq!(f.godel_arrow(pts[2], pts[1]), pts[1]);
        assert_eq!(f.godel_arrow(pts[1], pts[2]), Unit::ONE);
    }

    #[test]
    fn empty_folds() {
        let f = UnitInterval;
        assert_eq!(f.meet_all([]), Unit::ONE);
        assert_eq!(f.join_all([]), Unit::ZERO);
    }
}
