//! Fuzzy binary operations with graded equality, fuzzy groups on a fuzzy
//! carrier, and subgroups cut out by fuzzy α-cuts.
//!
//! An operation on `(X, Ã)` assigns each triple `(x₁, x₂, x₃)` the grade
//! `gr(x₁ ⊕ x₂ ≃ x₃)` to which `x₁ ⊕ x₂` equals `x₃`.

use std::fmt;
use std::sync::Arc;

use crate::{Base, Error, Frame, FuzzySet, Result};

/// `gr` stored densely over `X³`.
pub struct GradedOpTable<F: Frame> {
    base: Base,
    frame: Arc<F>,
    grades: Vec<F::Elem>,
}

impl<F: Frame> Clone for GradedOpTable<F> {
    fn clone(&self) -> Self {
        GradedOpTable {
            base: self.base.clone(),
            frame: self.frame.clone(),
            grades: self.grades.clone(),
        }
    }
}

impl<F: Frame> PartialEq for GradedOpTable<F> {
    fn eq(&self, other: &Self) -> bool {
        self.grades == other.grades && self.base == other.base && self.frame == other.frame
    }
}

impl<F: Frame> fmt::Debug for GradedOpTable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bottom = self.frame.bottom();
        let mut list = f.debug_list();
        for (i, g) in self.grades.iter().enumerate() {
            if *g != bottom {
                let (x1, x2, x3) = self.triple(i);
                list.entry(&format_args!(
                    "{} ⊕ {} ≃ {}: {:?}",
                    self.base.label(x1),
                    self.base.label(x2),
                    self.base.label(x3),
                    g
                ));
            }
        }
        list.finish()
    }
}

impl<F: Frame> GradedOpTable<F> {
    /// The table that is `⊥` everywhere.
    pub fn new(base: Base, frame: Arc<F>) -> Self {
        let n = base.len();
        let bottom = frame.bottom();
        GradedOpTable {
            base,
            frame,
            grades: vec![bottom; n * n * n],
        }
    }

    /// Embeds a crisp operation on the support of `carrier`:
    /// `gr(a ⊕ b ≃ op(a, b)) = Ã(a) ∧ Ã(b)`, `⊥` elsewhere.
    pub fn from_operation(carrier: &FuzzySet<F>, op: impl Fn(usize, usize) -> usize) -> Self {
        let frame = carrier.frame().clone();
        let mut table = GradedOpTable::new(carrier.base().clone(), frame.clone());
        let support = carrier.support();
        for &a in &support {
            for &b in &support {
                table.set(
                    a,
                    b,
                    op(a, b),
                    frame.meet(carrier.value(a), carrier.value(b)),
                );
            }
        }
        table
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn frame(&self) -> &Arc<F> {
        &self.frame
    }

    fn at(&self, x1: usize, x2: usize, x3: usize) -> usize {
        let n = self.base.len();
        (x1 * n + x2) * n + x3
    }

    fn triple(&self, i: usize) -> (usize, usize, usize) {
        let n = self.base.len();
        (i / (n * n), i / n % n, i % n)
    }

    pub fn get(&self, x1: usize, x2: usize, x3: usize) -> F::Elem {
        self.grades[self.at(x1, x2, x3)]
    }

    pub fn set(&mut self, x1: usize, x2: usize, x3: usize, grade: F::Elem) {
        let i = self.at(x1, x2, x3);
        self.grades[i] = grade;
    }

    /// Triples with a grade above `⊥`, in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), F::Elem)> + '_ {
        let bottom = self.frame.bottom();
        self.grades
            .iter()
            .enumerate()
            .filter(move |(_, g)| **g != bottom)
            .map(|(i, &g)| (self.triple(i), g))
    }

    /// `gr'(x₁ ⊕' x₂ ≃ x₃) = gr(x₁ ⊕ x₂ ≃ x₃) ∧ B̃(x₁) ∧ B̃(x₂) ∧ B̃(x₃)`.
    pub fn restrict(&self, b: &FuzzySet<F>) -> Result<Self> {
        self.check_compatible(b)?;
        let f = &*self.frame;
        let grades = (0..self.grades.len())
            .map(|i| {
                let (x1, x2, x3) = self.triple(i);
                f.meet_all([self.grades[i], b.value(x1), b.value(x2), b.value(x3)])
            })
            .collect();
        Ok(GradedOpTable {
            base: self.base.clone(),
            frame: self.frame.clone(),
            grades,
        })
    }

    fn check_compatible(&self, a: &FuzzySet<F>) -> Result<()> {
        if *a.base() != self.base {
            return Err(Error::BaseMismatch);
        }
        if !(Arc::ptr_eq(a.frame(), &self.frame) || **a.frame() == *self.frame) {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }
}

/// Why a table is not a fuzzy binary operation on its carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpViolation {
    /// `gr(x₁ ⊕ x₂ ≃ x₃) ≰ Ã(x₁) ∧ Ã(x₂) ∧ Ã(x₃)`.
    Closure([usize; 3]),
    /// No support element receives the full grade `Ã(a₁) ∧ Ã(a₂)`.
    NoResult([usize; 2]),
    /// Two support elements receive the full grade.
    Ambiguous {
        pair: [usize; 2],
        targets: [usize; 2],
    },
    /// A support element other than the result has a grade above `⊥`.
    StrayGrade { pair: [usize; 2], target: usize },
}

impl OpViolation {
    pub fn describe(&self, base: &Base) -> String {
        let l = |i: &usize| base.label(*i).to_owned();
        match self {
            OpViolation::Closure([a, b, c]) => {
                format!("closure fails at gr({} ⊕ {} ≃ {})", l(a), l(b), l(c))
            }
            OpViolation::NoResult([a, b]) => {
                format!("{} ⊕ {} has no full-grade result", l(a), l(b))
            }
            OpViolation::Ambiguous {
                pair: [a, b],
                targets: [c, d],
            } => {
                format!(
                    "{} ⊕ {} has two full-grade results {} and {}",
                    l(a),
                    l(b),
                    l(c),
                    l(d)
                )
            }
            OpViolation::StrayGrade {
                pair: [a, b],
                target,
            } => {
                format!(
                    "{} ⊕ {} ≃ {} has a stray nonzero grade",
                    l(a),
                    l(b),
                    l(target)
                )
            }
        }
    }
}

/// Checks closure over all of `X³` and functionality over the support of
/// `Ã × Ã`.
pub fn check_fuzzy_binary_op<F: Frame>(
    a: &FuzzySet<F>,
    gr: &GradedOpTable<F>,
) -> Result<Option<OpViolation>> {
    gr.check_compatible(a)?;
    let f = &**a.frame();
    let n = a.base().len();
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                let bound = f.meet_all([a.value(x1), a.value(x2), a.value(x3)]);
                if !f.leq(gr.get(x1, x2, x3), bound) {
                    return Ok(Some(OpViolation::Closure([x1, x2, x3])));
                }
            }
        }
    }
    let support = a.support();
    let bottom = f.bottom();
    for &a1 in &support {
        for &a2 in &support {
            let full = f.meet(a.value(a1), a.value(a2));
            if full == bottom {
                continue;
            }
            let pair = [a1, a2];
            let hits: Vec<usize> = support
                .iter()
                .copied()
                .filter(|&c| gr.get(a1, a2, c) == full)
                .collect();
            match hits[..] {
                [] => return Ok(Some(OpViolation::NoResult(pair))),
                [c] => {
                    if let Some(&target) = support
                        .iter()
                        .find(|&&d| d != c && gr.get(a1, a2, d) != bottom)
                    {
                        return Ok(Some(OpViolation::StrayGrade { pair, target }));
                    }
                }
                [c, d, ..] => {
                    return Ok(Some(OpViolation::Ambiguous {
                        pair,
                        targets: [c, d],
                    }))
                }
            }
        }
    }
    Ok(None)
}

/// Why a fuzzy set with a table is not a fuzzy group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupViolation {
    EmptySupport,
    NoIdentity,
    NoInverse(usize),
    Associativity([usize; 3]),
    InvalidOperation(OpViolation),
}

impl GroupViolation {
    pub fn describe(&self, base: &Base) -> String {
        match self {
            GroupViolation::EmptySupport => "carrier has empty support".to_owned(),
            GroupViolation::NoIdentity => "no identity element".to_owned(),
            GroupViolation::NoInverse(a) => format!("{} has no inverse", base.label(*a)),
            GroupViolation::Associativity([a, b, c]) => format!(
                "associativity fails at ({}, {}, {})",
                base.label(*a),
                base.label(*b),
                base.label(*c)
            ),
            GroupViolation::InvalidOperation(v) => v.describe(base),
        }
    }
}

/// A verified fuzzy group.
pub struct FuzzyGroup<F: Frame> {
    carrier: FuzzySet<F>,
    op: GradedOpTable<F>,
    identity: usize,
    inverses: Vec<Option<usize>>,
}

impl<F: Frame> Clone for FuzzyGroup<F> {
    fn clone(&self) -> Self {
        FuzzyGroup {
            carrier: self.carrier.clone(),
            op: self.op.clone(),
            identity: self.identity,
            inverses: self.inverses.clone(),
        }
    }
}

impl<F: Frame> fmt::Debug for FuzzyGroup<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyGroup")
            .field("carrier", &self.carrier)
            .field("identity", &self.carrier.base().label(self.identity))
            .field("inverses", &self.inverses)
            .finish()
    }
}

impl<F: Frame> FuzzyGroup<F> {
    pub fn carrier(&self) -> &FuzzySet<F> {
        &self.carrier
    }

    pub fn op(&self) -> &GradedOpTable<F> {
        &self.op
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `None` off the support.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverses[a]
    }

    pub fn support(&self) -> Vec<usize> {
        self.carrier.support()
    }
}

struct Grades<'a, F: Frame> {
    a: &'a FuzzySet<F>,
    gr: &'a GradedOpTable<F>,
    support: Vec<usize>,
}

impl<F: Frame> Grades<'_, F> {
    /// `gr(x ⊕ y ≃ z) = Ã(x) ∧ Ã(y)`.
    fn full(&self, x: usize, y: usize, z: usize) -> bool {
        self.gr.get(x, y, z) == self.a.frame().meet(self.a.value(x), self.a.value(y))
    }

    fn identity_candidates(&self) -> Vec<usize> {
        self.support
            .iter()
            .copied()
            .filter(|&e| {
                self.support
                    .iter()
                    .all(|&x| self.full(x, e, x) && self.full(e, x, x))
            })
            .collect()
    }

    fn inverse(&self, x: usize, e: usize) -> Option<usize> {
        self.support.iter().copied().find(|&y| {
            self.full(x, y, e) && self.full(y, x, e) && self.a.value(x) == self.a.value(y)
        })
    }

    /// Support elements `z` with `gr(x ⊕ y ≃ z)` full.
    fn products(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.support
            .iter()
            .copied()
            .filter(move |&z| self.full(x, y, z))
    }

    fn associativity_violation(&self) -> Option<[usize; 3]> {
        for &a1 in &self.support {
            for &a2 in &self.support {
                let b1s: Vec<usize> = self.products(a1, a2).collect();
                for &a3 in &self.support {
                    let lefts: Vec<usize> = self
                        .support
                        .iter()
                        .copied()
                        .filter(|&x| b1s.iter().any(|&b1| self.full(b1, a3, x)))
                        .collect();
                    if lefts.is_empty() {
                        continue;
                    }
                    let b2s: Vec<usize> = self.products(a2, a3).collect();
                    let clash = self
                        .support
                        .iter()
                        .copied()
                        .filter(|&y| b2s.iter().any(|&b2| self.full(a1, b2, y)))
                        .any(|y| lefts.iter().any(|&x| x != y));
                    if clash {
                        return Some([a1, a2, a3]);
                    }
                }
            }
        }
        None
    }
}

/// Support elements satisfying the identity law.
pub fn identity_candidates<F: Frame>(a: &FuzzySet<F>, gr: &GradedOpTable<F>) -> Result<Vec<usize>> {
    gr.check_compatible(a)?;
    Ok(Grades {
        a,
        gr,
        support: a.support(),
    }
    .identity_candidates())
}

/// Verifies the group laws. The outer `Result` carries input errors, the
/// inner one the first law found to fail, checked in the order identity,
/// inverses, associativity, operation validity.
pub fn check_fuzzy_group<F: Frame>(
    a: &FuzzySet<F>,
    gr: &GradedOpTable<F>,
) -> Result<Result<FuzzyGroup<F>, GroupViolation>> {
    gr.check_compatible(a)?;
    let g = Grades {
        a,
        gr,
        support: a.support(),
    };
    if g.support.is_empty() {
        return Ok(Err(GroupViolation::EmptySupport));
    }
    let candidates = g.identity_candidates();
    let Some(&first) = candidates.first() else {
        return Ok(Err(GroupViolation::NoIdentity));
    };
    let inverses_for = |e: usize| -> Result<Vec<Option<usize>>, usize> {
        let mut inv = vec![None; a.base().len()];
        for &x in &g.support {
            inv[x] = Some(g.inverse(x, e).ok_or(x)?);
        }
        Ok(inv)
    };
    let found = candidates
        .iter()
        .find_map(|&e| inverses_for(e).ok().map(|inv| (e, inv)));
    let Some((identity, inverses)) = found else {
        let missing = inverses_for(first).expect_err("no candidate admits inverses");
        return Ok(Err(GroupViolation::NoInverse(missing)));
    };
    if let Some(w) = g.associativity_violation() {
        return Ok(Err(GroupViolation::Associativity(w)));
    }
    if let Some(v) = check_fuzzy_binary_op(a, gr)? {
        return Ok(Err(GroupViolation::InvalidOperation(v)));
    }
    let f = &**a.frame();
    if let Some(&x) = g
        .support
        .iter()
        .find(|&&x| !f.leq(a.value(x), a.value(identity)))
    {
        return Err(Error::InternalInconsistency(format!(
            "membership of {} exceeds that of the identity",
            a.base().label(x)
        )));
    }
    Ok(Ok(FuzzyGroup {
        carrier: a.clone(),
        op: gr.clone(),
        identity,
        inverses,
    }))
}

/// The subgroup `(X, ᴬα, ⊕')` with `⊕'` the restriction of `⊕` to the cut.
pub fn restrict_to_cut<F: Frame>(g: &FuzzyGroup<F>, alpha: F::Elem) -> Result<FuzzyGroup<F>> {
    let cut = g.carrier.fuzzy_alpha_cut(alpha);
    if cut.is_empty_set() {
        return Err(Error::EmptyCutSupport);
    }
    let op = g.op.restrict(&cut)?;
    check_fuzzy_group(&cut, &op)?.map_err(|v| {
        Error::InternalInconsistency(format!("cut is not a subgroup: {}", v.describe(cut.base())))
    })
}
