#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use alphacut_core::generate::LatticePool;
use alphacut_core::{Base, Elem, Frame, FuzzySet, Lattice};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::Index;

fn cached(
    cell: &'static OnceLock<LatticePool>,
    init: impl FnOnce() -> LatticePool,
) -> &'static [Arc<Lattice>] {
    cell.get_or_init(init).lattices()
}

/// Distributive lattices with at most 7 elements.
pub fn frames() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<LatticePool> = OnceLock::new();
    cached(&POOL, || LatticePool::new(7, true).unwrap())
}

/// Distributive lattices with at most 6 elements.
pub fn small_frames() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<LatticePool> = OnceLock::new();
    cached(&POOL, || LatticePool::new(6, true).unwrap())
}

/// All lattices with at most 7 elements.
pub fn lattices() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<LatticePool> = OnceLock::new();
    cached(&POOL, || LatticePool::new(7, false).unwrap())
}

pub fn semilinear_frames() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<LatticePool> = OnceLock::new();
    cached(&POOL, || {
        LatticePool::new(7, true)
            .unwrap()
            .filter(|l| l.is_semilinear())
    })
}

/// Chains with 2 to 8 elements.
pub fn chains() -> &'static [Arc<Lattice>] {
    static POOL: OnceLock<LatticePool> = OnceLock::new();
    cached(&POOL, || {
        LatticePool::new(8, true).unwrap().filter(|l| l.is_chain())
    })
}

pub fn pick(l: &Lattice, i: &Index) -> Elem {
    let els: Vec<Elem> = l.elements().collect();
    els[i.index(els.len())]
}

pub fn lattice_in(pool: &'static [Arc<Lattice>]) -> impl Strategy<Value = Arc<Lattice>> {
    (0..pool.len()).prop_map(move |i| pool[i].clone())
}

/// A fuzzy set on `Base::numbered(n)` for some `n` in `sizes`.
pub fn fuzzy_set_in(
    pool: &'static [Arc<Lattice>],
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = FuzzySet<Lattice>> {
    (lattice_in(pool), vec(any::<Index>(), sizes)).prop_map(|(l, idx)| {
        FuzzySet::from_fn(Base::numbered(idx.len()), l.clone(), |x| pick(&l, &idx[x]))
    })
}
