//! Graded inclusion between fuzzy sets and the localic-frame axioms.
//!
//! For a family of fuzzy sets over a common base, the relation
//! `R(F, G) = ⋀ₓ (F(x) → G(x))` grades how far `F` is included in `G`.
//! A family closed under pointwise `∩` and arbitrary `⋃` (including the empty
//! union `∅̃`), together with `R`, is checked against nine axioms:
//!
//! 1. `R(a, a) = ⊤`
//! 2. `R(a, b) = ⊤ = R(b, a) ⇒ a = b`
//! 3. `R(a, b) ∧ R(b, c) ≤ R(a, c)`
//! 4. `R(a ∧ b, a) = ⊤ = R(a ∧ b, b)`
//! 5. `R(a, ⊤) = ⊤`
//! 6. `R(a, b) ∧ R(a, c) = R(a, b ∧ c)`
//! 7. `R(a, ⋁S) = ⊤` for `a ∈ S`
//! 8. `⋀{R(a, b) | a ∈ S} = R(⋁S, b)`
//! 9. `R(a ∧ ⋁S, ⋁{a ∧ b | b ∈ S}) = ⊤`
//!
//! The structure's top is the join of the whole family, which for a cut
//! family is the `⊥`-cut, i.e. the fuzzy set itself.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::{Arrow, Error, Frame, FuzzySet, Result, SubsetPolicy};

pub struct FuzzyRelation<F: Frame> {
    family: Vec<FuzzySet<F>>,
    arrow: Arrow,
    values: Vec<F::Elem>,
}

impl<F: Frame> fmt::Debug for FuzzyRelation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyRelation")
            .field("family", &self.family)
            .field("arrow", &self.arrow)
            .field("values", &self.values)
            .finish()
    }
}

/// `⋀ₓ (a(x) → b(x))`; `⊤` on an empty base.
pub fn inclusion_grade<F: Frame>(
    frame: &F,
    arrow: Arrow,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<F::Elem> {
    let mut acc = frame.top();
    for (&x, &y) in a.iter().zip(b) {
        acc = frame.meet(acc, frame.arrow(arrow, x, y)?);
    }
    Ok(acc)
}

impl<F: Frame> FuzzyRelation<F> {
    /// Tabulates `R` over `family`, dropping extensional duplicates.
    pub fn new(family: Vec<FuzzySet<F>>, arrow: Arrow) -> Result<Self> {
        let family = dedup(family)?;
        let n = family.len();
        let frame = family[0].frame().clone();
        let mut values = Vec::with_capacity(n * n);
        for a in &family {
            for b in &family {
                values.push(inclusion_grade(
                    &*frame,
                    arrow,
                    a.membership(),
                    b.membership(),
                )?);
            }
        }
        Ok(FuzzyRelation {
            family,
            arrow,
            values,
        })
    }

    pub fn family(&self) -> &[FuzzySet<F>] {
        &self.family
    }

    pub fn arrow(&self) -> Arrow {
        self.arrow
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn frame(&self) -> &F {
        self.family[0].frame()
    }

    pub fn value(&self, i: usize, j: usize) -> F::Elem {
        self.values[i * self.family.len() + j]
    }
}

fn dedup<F: Frame>(family: Vec<FuzzySet<F>>) -> Result<Vec<FuzzySet<F>>> {
    let first = family.first().ok_or(Error::EmptyFamily)?.clone();
    let mut out: Vec<FuzzySet<F>> = Vec::with_capacity(family.len());
    for f in family {
        // Surfaces base and lattice mismatches.
        first.is_subset(&f)?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Closes a family under pointwise `∩` and `⋃`, adjoining `∅̃`. Members keep
/// their original order; new members are appended.
pub fn close_family<F: Frame>(family: &[FuzzySet<F>]) -> Result<Vec<FuzzySet<F>>> {
    let mut out = dedup(family.to_vec())?;
    let empty = FuzzySet::empty(out[0].base().clone(), out[0].frame().clone());
    if !out.contains(&empty) {
        out.push(empty);
    }
    let mut seen = 0;
    while seen < out.len() {
        let end = out.len();
        for i in 0..end {
            for j in seen.max(i)..end {
                for candidate in [out[i].intersect(&out[j])?, out[i].union(&out[j])?] {
                    if !out.contains(&candidate) {
                        out.push(candidate);
                    }
                }
            }
        }
        seen = end;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "localic frame")]
    LocalicFrame,
    /// Every axiom except 6 holds.
    #[serde(rename = "localic preordered set")]
    LocalicPreorderedSet,
    #[serde(rename = "neither")]
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::LocalicFrame => "localic frame",
            Verdict::LocalicPreorderedSet => "localic preordered set",
            Verdict::Neither => "neither",
        })
    }
}

/// Family members (by index) and, for axioms 7–9, the subset `S` involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub members: Vec<usize>,
    pub subset: Option<Vec<usize>>,
}

impl AxiomWitness {
    fn members(members: Vec<usize>) -> Self {
        AxiomWitness {
            members,
            subset: None,
        }
    }

    fn with_subset(members: Vec<usize>, subset: &[usize]) -> Self {
        AxiomWitness {
            members,
            subset: Some(subset.to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: u8,
    /// First violation in deterministic scan order.
    pub witness: Option<AxiomWitness>,
    /// All violations; only filled in verbose mode.
    pub all: Vec<AxiomWitness>,
}

impl AxiomResult {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axioms: Vec<AxiomResult>,
    pub verdict: Verdict,
    /// Whether subsets for axioms 7–9 were enumerated rather than sampled.
    pub exhaustive: bool,
}

impl AxiomReport {
    pub fn axiom(&self, number: u8) -> &AxiomResult {
        &self.axioms[number as usize - 1]
    }

    pub fn all_except_six_hold(&self) -> bool {
        self.axioms
            .iter()
            .filter(|r| r.axiom != 6)
            .all(AxiomResult::holds)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub subsets: SubsetPolicy,
    pub verbose: bool,
}

struct Closed<'a, F: Frame> {
    rel: &'a FuzzyRelation<F>,
    index: HashMap<&'a [F::Elem], usize>,
    meet: Vec<usize>,
    join: Vec<usize>,
    empty: usize,
}

impl<'a, F: Frame> Closed<'a, F> {
    fn new(rel: &'a FuzzyRelation<F>) -> Result<Self> {
        let n = rel.len();
        let index: HashMap<&[F::Elem], usize> = rel
            .family
            .iter()
            .enumerate()
            .map(|(i, f)| (f.membership(), i))
            .collect();
        let find = |set: FuzzySet<F>, what| -> Result<usize> {
            index
                .get(set.membership())
                .copied()
                .ok_or(Error::FamilyNotClosed(what))
        };
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = find(rel.family[i].intersect(&rel.family[j])?, "intersection")?;
                join[i * n + j] = find(rel.family[i].union(&rel.family[j])?, "union")?;
            }
        }
        let f0 = &rel.family[0];
        let empty = find(
            FuzzySet::empty(f0.base().clone(), f0.frame().clone()),
            "the empty union",
        )?;
        Ok(Closed {
            rel,
            index,
            meet,
            join,
            empty,
        })
    }

    fn r(&self, i: usize, j: usize) -> F::Elem {
        self.rel.value(i, j)
    }

    fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.rel.len() + j]
    }

    fn join_all(&self, subset: impl IntoIterator<Item = usize>) -> usize {
        subset
            .into_iter()
            .fold(self.empty, |acc, i| self.join[acc * self.rel.len() + i])
    }
}

/// Checks the nine axioms on a closed family.
///
/// Fails with [`Error::FamilyNotClosed`] when some pairwise intersection or
/// union, or `∅̃`, is missing from the family.
pub fn check_localic_axioms<F: Frame>(
    rel: &FuzzyRelation<F>,
    opts: &CheckOptions,
) -> Result<AxiomReport> {
    let c = &Closed::new(rel)?;
    debug_assert_eq!(c.index.len(), rel.len());
    let frame = rel.frame();
    let top = frame.top();
    let n = rel.len();
    let subsets = opts.subsets.subsets(n);
    let structure_top = c.join_all(0..n);

    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    let triples = || pairs().flat_map(move |(i, j)| (0..n).map(move |k| (i, j, k)));

    let mut results = Vec::with_capacity(9);
    let mut record = |axiom: u8, mut violations: Box<dyn Iterator<Item = AxiomWitness> + '_>| {
        let (witness, all) = if opts.verbose {
            let all: Vec<AxiomWitness> = violations.collect();
            (all.first().cloned(), all)
        } else {
            (violations.next(), Vec::new())
        };
        results.push(AxiomResult {
            axiom,
            witness,
            all,
        });
    };

    record(
        1,
        Box::new(
            (0..n)
                .filter(|&i| c.r(i, i) != top)
                .map(|i| AxiomWitness::members(vec![i])),
        ),
    );
    record(
        2,
        Box::new(
            pairs()
                .filter(|&(i, j)| i != j && c.r(i, j) == top && c.r(j, i) == top)
                .map(|(i, j)| AxiomWitness::members(vec![i, j])),
        ),
    );
    record(
        3,
        Box::new(
            triples()
                .filter(|&(i, j, k)| !frame.leq(frame.meet(c.r(i, j), c.r(j, k)), c.r(i, k)))
                .map(|(i, j, k)| AxiomWitness::members(vec![i, j, k])),
        ),
    );
    record(
        4,
        Box::new(
            pairs()
                .filter(|&(i, j)| {
                    let m = c.meet(i, j);
                    c.r(m, i) != top || c.r(m, j) != top
                })
                .map(|(i, j)| AxiomWitness::members(vec![i, j])),
        ),
    );
    record(
        5,
        Box::new(
            (0..n)
                .filter(|&i| c.r(i, structure_top) != top)
                .map(|i| AxiomWitness::members(vec![i])),
        ),
    );
    record(
        6,
        Box::new(
            triples()
                .filter(|&(i, j, k)| frame.meet(c.r(i, j), c.r(i, k)) != c.r(i, c.meet(j, k)))
                .map(|(i, j, k)| AxiomWitness::members(vec![i, j, k])),
        ),
    );
    record(
        7,
        Box::new(subsets.iter().flat_map(|s| {
            let sup = c.join_all(s.iter().copied());
            s.iter()
                .filter(move |&&a| c.r(a, sup) != top)
                .map(move |&a| AxiomWitness::with_subset(vec![a], s))
        })),
    );
    record(
        8,
        Box::new(subsets.iter().flat_map(|s| {
            let sup = c.join_all(s.iter().copied());
            (0..n)
                .filter(move |&b| frame.meet_all(s.iter().map(|&a| c.r(a, b))) != c.r(sup, b))
                .map(move |b| AxiomWitness::with_subset(vec![b], s))
        })),
    );
    record(
        9,
        Box::new(subsets.iter().flat_map(|s| {
            let sup = c.join_all(s.iter().copied());
            (0..n)
                .filter(move |&a| {
                    let lhs = c.meet(a, sup);
                    let rhs = c.join_all(s.iter().map(|&b| c.meet(a, b)));
                    c.r(lhs, rhs) != top
                })
                .map(move |a| AxiomWitness::with_subset(vec![a], s))
        })),
    );

    let verdict = if results.iter().all(AxiomResult::holds) {
        Verdict::LocalicFrame
    } else if results
        .iter()
        .filter(|r| r.axiom != 6)
        .all(AxiomResult::holds)
    {
        Verdict::LocalicPreorderedSet
    } else {
        Verdict::Neither
    };
    Ok(AxiomReport {
        axioms: results,
        verdict,
        exhaustive: opts.subsets.is_exhaustive(n),
    })
}

/// The closed cut family of `a` with its relation: the structure whose
/// axioms [`verify_cut_family`] checks.
pub fn cut_structure<F: Frame>(a: &FuzzySet<F>, arrow: Arrow) -> Result<FuzzyRelation<F>> {
    FuzzyRelation::new(close_family(&a.cut_family())?, arrow)
}

/// Builds the cut family of `a`, closes it under `∩` and `⋃`, and checks
/// the nine axioms.
pub fn verify_cut_family<F: Frame>(
    a: &FuzzySet<F>,
    arrow: Arrow,
    opts: &CheckOptions,
) -> Result<AxiomReport> {
    check_localic_axioms(&cut_structure(a, arrow)?, opts)
}

/// Whether the closure of `family` with the Gödel arrow is a localic frame.
/// Only defined for chain-valued families.
pub fn is_graded_frame<F: Frame>(family: &[FuzzySet<F>], opts: &CheckOptions) -> Result<bool> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    if !first.frame().is_chain() {
        return Err(Error::NotAChain);
    }
    let rel = FuzzyRelation::new(close_family(family)?, Arrow::GodelLike)?;
    Ok(check_localic_axioms(&rel, opts)?.verdict == Verdict::LocalicFrame)
}
