//! Named lattices used throughout the tests, benches and documentation.
//!
//! Element order matters: witnesses are reported as the first violation in
//! position order.

use std::sync::Arc;

use crate::group::GradedOpTable;
use crate::{Base, FuzzySet, Lattice};

fn build(elements: &[&str], covers: &[(&str, &str)]) -> Lattice {
    Lattice::new(elements, covers).expect("catalog lattice is valid")
}

/// Four-element Boolean lattice with a new top adjoined:
/// `⊥ < b, c < a < ⊤`. Semilinear but not prelinear.
pub fn m5() -> Lattice {
    build(
        &["bot", "b", "c", "a", "top"],
        &[
            ("bot", "b"),
            ("bot", "c"),
            ("b", "a"),
            ("c", "a"),
            ("a", "top"),
        ],
    )
}

/// Six-element distributive lattice that is not semilinear:
/// `⊥ < b, c`; `b < a, d`; `c < d`; `a, d < ⊤`.
pub fn n6() -> Lattice {
    build(
        &["bot", "b", "a", "c", "d", "top"],
        &[
            ("bot", "b"),
            ("bot", "c"),
            ("b", "a"),
            ("b", "d"),
            ("c", "d"),
            ("a", "top"),
            ("d", "top"),
        ],
    )
}

/// The eight-element Boolean algebra with atoms `a, b, c` and coatoms
/// `d = a ∨ b`, `e = a ∨ c`, `f = b ∨ c`.
pub fn b3() -> Lattice {
    build(
        &["bot", "a", "c", "b", "d", "e", "f", "top"],
        &[
            ("bot", "a"),
            ("bot", "b"),
            ("bot", "c"),
            ("a", "d"),
            ("b", "d"),
            ("a", "e"),
            ("c", "e"),
            ("b", "f"),
            ("c", "f"),
            ("d", "top"),
            ("e", "top"),
            ("f", "top"),
        ],
    )
}

/// The diamond: three incomparable atoms `x, y, z` between `⊥` and `⊤`.
/// Modular but not distributive.
pub fn m3() -> Lattice {
    build(
        &["bot", "x", "y", "z", "top"],
        &[
            ("bot", "x"),
            ("bot", "y"),
            ("bot", "z"),
            ("x", "top"),
            ("y", "top"),
            ("z", "top"),
        ],
    )
}

/// Value lattice of the worked fuzzy-group example:
/// `0 < l3 < l1, l2 < l4 < 1`.
pub fn group_example_lattice() -> Lattice {
    build(
        &["0", "l3", "l1", "l2", "l4", "1"],
        &[
            ("0", "l3"),
            ("l3", "l1"),
            ("l3", "l2"),
            ("l1", "l4"),
            ("l2", "l4"),
            ("l4", "1"),
        ],
    )
}

/// The Klein four-group on the support `{x1, x2, x3, x4}` with identity `x4`,
/// graded by `Ã(xᵢ) = lᵢ` and `Ã(x5) = 0` over [`group_example_lattice`].
pub fn klein_fuzzy_group() -> (FuzzySet<Lattice>, GradedOpTable<Lattice>) {
    let l = Arc::new(group_example_lattice());
    let base = Base::new(&["x1", "x2", "x3", "x4", "x5"]).expect("distinct labels");
    let membership = l
        .elements_of(&["l1", "l2", "l3", "l4", "0"])
        .expect("catalog labels");
    let a = FuzzySet::new(base, l, membership).expect("sizes agree");
    let e = 3;
    let gr = GradedOpTable::from_operation(&a, |x, y| match (x, y) {
        (x, y) if x == e => y,
        (x, y) if y == e => x,
        (x, y) if x == y => e,
        (x, y) => 3 - x - y,
    });
    (a, gr)
}
