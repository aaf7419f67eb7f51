//! Random instances for property tests and benchmarks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::enumerate::enumerate_lattices;
use crate::group::GradedOpTable;
use crate::localic::close_family;
use crate::topology::LTopSpace;
use crate::{Base, Elem, Frame, FuzzySet, Lattice, PointMap, Result};

/// Every lattice with between 2 and `max_size` elements, one per isomorphism
/// class.
#[derive(Debug, Clone)]
pub struct LatticePool {
    lattices: Vec<Arc<Lattice>>,
}

impl LatticePool {
    pub fn new(max_size: usize, distributive_only: bool) -> Result<Self> {
        let mut lattices = Vec::new();
        for n in 2..=max_size {
            lattices.extend(enumerate_lattices(n, distributive_only)?.map(Arc::new));
        }
        Ok(LatticePool { lattices })
    }

    pub fn filter(&self, keep: impl Fn(&Lattice) -> bool) -> LatticePool {
        LatticePool {
            lattices: self.lattices.iter().filter(|l| keep(l)).cloned().collect(),
        }
    }

    pub fn lattices(&self) -> &[Arc<Lattice>] {
        &self.lattices
    }

    pub fn len(&self) -> usize {
        self.lattices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattices.is_empty()
    }

    pub fn choose<R: Rng + ?Sized>(&self, rng: &mut R) -> Arc<Lattice> {
        self.lattices
            .choose(rng)
            .expect("pool is not empty")
            .clone()
    }
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, lattice: &Lattice) -> Elem {
    let els: Vec<Elem> = lattice.elements().collect();
    *els.choose(rng).expect("lattices are nonempty")
}

pub fn random_fuzzy_set<R: Rng + ?Sized>(
    rng: &mut R,
    lattice: &Arc<Lattice>,
    base: &Base,
) -> FuzzySet<Lattice> {
    FuzzySet::from_fn(base.clone(), lattice.clone(), |_| {
        random_element(rng, lattice)
    })
}

/// A random fuzzy subset of `carrier`.
pub fn random_subset<R: Rng + ?Sized>(
    rng: &mut R,
    carrier: &FuzzySet<Lattice>,
) -> FuzzySet<Lattice> {
    let l = carrier.frame().clone();
    FuzzySet::from_fn(carrier.base().clone(), l.clone(), |x| {
        l.meet(random_element(rng, &l), carrier.value(x))
    })
}

pub fn random_map<R: Rng + ?Sized>(rng: &mut R, source: &Base, target: &Base) -> PointMap {
    let map = (0..source.len())
        .map(|_| rng.gen_range(0..target.len()))
        .collect();
    PointMap::new(source.clone(), target.clone(), map).expect("targets are in range")
}

/// The topology on `carrier` generated by up to `generators` random open
/// subsets: their closure under `∩` and `⋃` together with `∅̃` and the
/// carrier.
pub fn random_topology<R: Rng + ?Sized>(
    rng: &mut R,
    carrier: &FuzzySet<Lattice>,
    generators: usize,
) -> Result<LTopSpace<Lattice>> {
    let mut family = vec![carrier.clone()];
    for _ in 0..rng.gen_range(0..=generators) {
        family.push(random_subset(rng, carrier));
    }
    LTopSpace::new(carrier.clone(), close_family(&family)?)
}

/// A classical group as a Cayley table with identity 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    pub name: &'static str,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == 0)
            .expect("groups have inverses")
    }
}

fn cyclic(name: &'static str, n: usize) -> CayleyTable {
    CayleyTable {
        name,
        table: (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect(),
    }
}

/// `C2`–`C6`, the Klein four-group and `S3`.
pub fn small_groups() -> Vec<CayleyTable> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [2, 1, 0],
        [1, 0, 2],
    ];
    let s3 = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    let composed: [usize; 3] = std::array::from_fn(|i| perms[a][perms[b][i]]);
                    perms.iter().position(|p| *p == composed).expect("closed")
                })
                .collect()
        })
        .collect();
    vec![
        cyclic("C2", 2),
        cyclic("C3", 3),
        cyclic("C4", 4),
        CayleyTable {
            name: "V4",
            table: (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        },
        cyclic("C5", 5),
        cyclic("C6", 6),
        CayleyTable {
            name: "S3",
            table: s3,
        },
    ]
}

/// A fuzzy group on the elements of `group` with values in `lattice`.
///
/// Values are drawn from `{⊥} ∪ ↑u` for a random `u > ⊥`, then raised until
/// `Ã(ab) ≥ Ã(a) ∧ Ã(b)` and `Ã(a⁻¹) = Ã(a)`. The support is then a subgroup
/// on which all pairwise meets are above `⊥`.
pub fn random_fuzzy_group<R: Rng + ?Sized>(
    rng: &mut R,
    lattice: &Arc<Lattice>,
    group: &CayleyTable,
) -> (FuzzySet<Lattice>, GradedOpTable<Lattice>) {
    let l = &**lattice;
    let n = group.order();
    let bottom = l.bottom();
    let above_bottom: Vec<Elem> = l.elements().filter(|&e| e != bottom).collect();
    let u = *above_bottom
        .choose(rng)
        .expect("lattices here have at least two elements");
    let up: Vec<Elem> = l.elements().filter(|&e| l.leq(u, e)).collect();
    let mut v: Vec<Elem> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                bottom
            } else {
                *up.choose(rng).expect("u ≤ u")
            }
        })
        .collect();
    if v.iter().all(|&x| x == bottom) {
        v[0] = u;
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            let ai = group.inverse(a);
            let j = l.join(v[a], v[ai]);
            if v[a] != j || v[ai] != j {
                v[a] = j;
                v[ai] = j;
                changed = true;
            }
            for b in 0..n {
                if v[a] == bottom || v[b] == bottom {
                    continue;
                }
                let c = group.table[a][b];
                let raised = l.join(v[c], l.meet(v[a], v[b]));
                if raised != v[c] {
                    v[c] = raised;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let carrier =
        FuzzySet::new(Base::numbered(n), lattice.clone(), v).expect("one value per element");
    let gr = GradedOpTable::from_operation(&carrier, |a, b| group.table[a][b]);
    (carrier, gr)
}
