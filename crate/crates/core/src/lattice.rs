//! Finite bounded lattices given by a cover (Hasse) relation.
//!
//! A lattice is built from a list of labels and a generating relation of
//! `(lower, upper)` pairs. The order is the reflexive-transitive closure of
//! that relation; construction rejects cycles, orders without a global top or
//! bottom, and pairs without a unique meet or join. Meet and join tables are
//! computed once, so every later operation is a table lookup.
//!
//! Frame check: a finite lattice is complete, and every join is a finite fold
//! of binary joins, so `x ∧ ⋁Y = ⋁{x ∧ y}` follows by induction on `|Y|` from
//! binary distributivity `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` (the case `Y = ∅`
//! is `x ∧ ⊥ = ⊥`). [`Lattice::is_frame`] therefore checks the binary law.
//!
//! All witnesses are the first violation in lexicographic order of element
//! positions as given at construction.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::{Error, Frame, Result, SubsetPolicy};

/// An element of a particular [`Lattice`], identified by its input position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Elem {
        Elem(i as u32)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    labels: Vec<String>,
    index: HashMap<String, Elem>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    distributivity_violation: Option<[Elem; 3]>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<(&str, &str)> = self
            .covers()
            .into_iter()
            .map(|(a, b)| (self.label(a), self.label(b)))
            .collect();
        f.debug_struct("Lattice")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Lattice {
    /// Builds a lattice from labels and `(lower, upper)` pairs. The pairs
    /// need not be exactly the covers; any relation whose transitive closure
    /// is the intended strict order will do.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(elements: &[S], covers: &[(T, T)]) -> Result<Lattice> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = label_index(&labels)?;
        let n = labels.len();
        let lookup = |s: &str| {
            index
                .get(s)
                .map(|e| e.index())
                .ok_or_else(|| Error::UnknownElement(s.to_owned()))
        };
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if lo == hi {
                return Err(Error::CycleDetected(labels[lo].clone()));
            }
            up[lo].push(hi);
            indegree[hi] += 1;
        }

        // Kahn's algorithm; anything left over lies on or above a cycle.
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &j in &up[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap();
            return Err(Error::CycleDetected(labels[stuck].clone()));
        }

        // Reverse topological order: each element's up-set is known once all
        // of its upper covers are processed.
        let mut leq = vec![false; n * n];
        for &i in order.iter().rev() {
            leq[i * n + i] = true;
            for &j in &up[i] {
                for k in 0..n {
                    if leq[j * n + k] {
                        leq[i * n + k] = true;
                    }
                }
            }
        }
        Lattice::from_parts(labels, index, leq)
    }

    /// Builds a lattice from a full order matrix (`leq[i * n + j]` iff
    /// element `i` ≤ element `j`), validating that it is a partial order.
    pub fn from_order<S: AsRef<str>>(elements: &[S], leq: Vec<bool>) -> Result<Lattice> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = label_index(&labels)?;
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::BadParameters(format!(
                "order matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::BadParameters(format!(
                    "order is not reflexive at `{}`",
                    labels[i]
                )));
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CycleDetected(labels[i].clone()));
                }
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return Err(Error::BadParameters(format!(
                            "order is not transitive at `{}`",
                            labels[j]
                        )));
                    }
                }
            }
        }
        Lattice::from_parts(labels, index, leq)
    }

    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, Elem>,
        leq: Vec<bool>,
    ) -> Result<Lattice> {
        let n = labels.len();
        let le = |i: usize, j: usize| leq[i * n + j];
        let bottom = (0..n)
            .find(|&i| (0..n).all(|j| le(i, j)))
            .ok_or(Error::Unbounded("bottom"))?;
        let top = (0..n)
            .find(|&i| (0..n).all(|j| le(j, i)))
            .ok_or(Error::Unbounded("top"))?;

        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for a in 0..n {
            for b in a..n {
                let lower: Vec<usize> = (0..n).filter(|&k| le(k, a) && le(k, b)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&k| le(k, m)));
                let upper: Vec<usize> = (0..n).filter(|&k| le(a, k) && le(b, k)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&m| upper.iter().all(|&k| le(m, k)));
                let missing = |what| Error::NotALattice {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    missing: what,
                };
                let glb = Elem::from_index(glb.ok_or_else(|| missing("meet"))?);
                let lub = Elem::from_index(lub.ok_or_else(|| missing("join"))?);
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
            }
        }

        let mut lattice = Lattice {
            labels,
            index,
            leq,
            meet,
            join,
            bottom: Elem::from_index(bottom),
            top: Elem::from_index(top),
            distributivity_violation: None,
        };
        lattice.distributivity_violation = lattice.find_distributivity_violation();
        Ok(lattice)
    }

    fn find_distributivity_violation(&self) -> Option<[Elem; 3]> {
        let els: Vec<Elem> = self.elements().collect();
        for &a in &els {
            for &b in &els {
                for &c in &els {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// The `n`-element chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Result<Lattice> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| ((i - 1).to_string(), i.to_string()))
            .collect();
        Lattice::new(&labels, &covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.len()).map(Elem::from_index)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.index()]
    }

    pub fn element(&self, label: &str) -> Result<Elem> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_owned()))
    }

    /// Looks up several labels at once.
    pub fn elements_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<Elem>> {
        labels.iter().map(|l| self.element(l.as_ref())).collect()
    }

    /// The Hasse diagram: pairs `(a, b)` with `a < b` and nothing strictly
    /// between them, in lexicographic position order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq[a * n + b]
                    && !(0..n)
                        .any(|k| k != a && k != b && self.leq[a * n + k] && self.leq[k * n + b])
                {
                    out.push((Elem::from_index(a), Elem::from_index(b)));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.len();
        let mut by_size: Vec<usize> = (0..n).collect();
        // Elements with fewer elements below them come first; this is a
        // linear extension of the order.
        let below = |i: usize| (0..n).filter(|&k| self.leq[k * n + i]).count();
        by_size.sort_by_key(|&i| (below(i), i));
        let mut rank = vec![0usize; n];
        let covers = self.covers();
        for &i in &by_size {
            for &(a, b) in &covers {
                if b.index() == i {
                    rank[i] = rank[i].max(rank[a.index()] + 1);
                }
            }
        }
        rank
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_violation.is_none()
    }

    /// Frames are exactly the distributive finite lattices; see the module docs.
    pub fn is_frame(&self) -> bool {
        self.is_distributive()
    }

    /// First triple `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_violation(&self) -> Option<[Elem; 3]> {
        self.distributivity_violation
    }

    fn not_a_frame(&self) -> Error {
        let [a, b, c] = self.distributivity_violation.expect("called on a frame");
        Error::NotAFrame(
            self.label(a).to_owned(),
            self.label(b).to_owned(),
            self.label(c).to_owned(),
        )
    }

    /// Fails with [`Error::NotAFrame`] unless the lattice is distributive.
    pub fn require_frame(&self) -> Result<()> {
        if self.is_frame() {
            Ok(())
        } else {
            Err(self.not_a_frame())
        }
    }

    /// First pair `(a, b)` with `(a → b) ∨ (b → a) ≠ ⊤` for the Gödel-like arrow.
    pub fn prelinearity_violation(&self) -> Option<[Elem; 2]> {
        for a in self.elements() {
            for b in self.elements() {
                let v = self.join(self.godel_arrow(a, b), self.godel_arrow(b, a));
                if v != self.top {
                    return Some([a, b]);
                }
            }
        }
        None
    }

    pub fn is_prelinear(&self) -> bool {
        self.prelinearity_violation().is_none()
    }

    /// Pairwise-distinct triples violating
    /// `(l₁ → l₂) ∧ (l₁ → l₃) = l₁ → (l₂ ∧ l₃)` for the Gödel-like arrow, in
    /// lexicographic position order.
    ///
    /// Triples with a repeated element are excluded: with `l₂ = l₁` the
    /// identity reads `l₁ → l₃ = l₁ → (l₁ ∧ l₃)`, which fails for every
    /// incomparable pair and would make every lattice that is not a chain
    /// non-semilinear. With distinct triples, a violation is exactly
    /// `l₁ < l₂` (or `l₁ < l₃`) with the remaining element incomparable to
    /// both, and the prelinear ⇒ semilinear implication holds on frames.
    pub fn semilinearity_violations(&self) -> impl Iterator<Item = [Elem; 3]> + '_ {
        let n = self.len();
        (0..n * n * n)
            .map(move |k| [k / (n * n), (k / n) % n, k % n].map(Elem::from_index))
            .filter(|[a, b, c]| a != b && a != c && b != c)
            .filter(move |&[a, b, c]| {
                let lhs = self.meet(self.godel_arrow(a, b), self.godel_arrow(a, c));
                lhs != self.godel_arrow(a, self.meet(b, c))
            })
    }

    pub fn semilinearity_violation(&self) -> Option<[Elem; 3]> {
        self.semilinearity_violations().next()
    }

    pub fn is_semilinear(&self) -> bool {
        self.semilinearity_violation().is_none()
    }

    pub fn classify(&self) -> ClassificationReport {
        ClassificationReport {
            frame: self.distributivity_violation,
            prelinear: self.prelinearity_violation(),
            semilinear: self.semilinearity_violation(),
        }
    }

    /// Evaluates the listed properties of the Gödel-like arrow exhaustively,
    /// except the subset law, which is quantified according to `policy`.
    pub fn check_arrow_properties(&self, policy: &SubsetPolicy) -> Vec<PropertyResult> {
        let els: Vec<Elem> = self.elements().collect();
        let arrow = |a, b| self.godel_arrow(a, b);
        let mut results = Vec::with_capacity(9);
        let mut push = |property, witness| results.push(PropertyResult { property, witness });

        push(
            ArrowProperty::SelfImplication,
            els.iter()
                .find(|&&a| arrow(a, a) != self.top)
                .map(|&a| PropertyWitness::Elements(vec![a])),
        );
        push(
            ArrowProperty::Transitivity,
            first_triple(&els, |a, b, c| {
                self.leq(self.meet(arrow(a, b), arrow(b, c)), arrow(a, c))
            }),
        );
        push(
            ArrowProperty::AntitoneAntecedent,
            first_triple(&els, |a, b, x| {
                !self.leq(a, b) || self.leq(arrow(b, x), arrow(a, x))
            }),
        );
        push(
            ArrowProperty::MonotoneConsequent,
            first_triple(&els, |a, b, x| {
                !self.leq(a, b) || self.leq(arrow(x, a), arrow(x, b))
            }),
        );
        let prelinear_implies_semilinear = if self.is_prelinear() {
            self.semilinearity_violation()
                .map(|t| PropertyWitness::Elements(t.to_vec()))
        } else {
            None
        };
        push(
            ArrowProperty::PrelinearImpliesSemilinear,
            prelinear_implies_semilinear,
        );

        let mut sup_witness = None;
        'subsets: for subset in policy.subsets(els.len()) {
            if subset.is_empty() {
                continue;
            }
            let members: Vec<Elem> = subset.iter().map(|&i| els[i]).collect();
            let sup = self.join_all(members.iter().copied());
            for &b in &els {
                let lhs = self.meet_all(members.iter().map(|&a| arrow(a, b)));
                if lhs != arrow(sup, b) {
                    sup_witness = Some(PropertyWitness::Subset { members, target: b });
                    break 'subsets;
                }
            }
        }
        push(ArrowProperty::InfOverSup, sup_witness);

        push(
            ArrowProperty::OrderCharacterisation,
            first_pair(&els, |a, b| self.leq(a, b) == (arrow(a, b) == self.top)),
        );
        push(
            ArrowProperty::ModusPonens,
            first_pair(&els, |a, b| self.leq(self.meet(a, arrow(a, b)), b)),
        );
        results
    }

    /// Graphviz rendering of the Hasse diagram, ranked by height with the
    /// bottom at rank 0 (drawn at the bottom).
    pub fn to_dot(&self) -> String {
        let ranks = self.ranks();
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
        for e in self.elements() {
            let _ = writeln!(out, "  n{} [label={:?}];", e.index(), self.label(e));
        }
        let max_rank = ranks.iter().copied().max().unwrap_or(0);
        for r in 0..=max_rank {
            let members: Vec<String> = self
                .elements()
                .filter(|e| ranks[e.index()] == r)
                .map(|e| format!("n{}", e.index()))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{} -> n{};", a.index(), b.index());
        }
        out.push_str("}\n");
        out
    }
}

fn label_index(labels: &[String]) -> Result<HashMap<String, Elem>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), Elem::from_index(i)).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

fn first_pair(els: &[Elem], holds: impl Fn(Elem, Elem) -> bool) -> Option<PropertyWitness> {
    for &a in els {
        for &b in els {
            if !holds(a, b) {
                return Some(PropertyWitness::Elements(vec![a, b]));
            }
        }
    }
    None
}

fn first_triple(els: &[Elem], holds: impl Fn(Elem, Elem, Elem) -> bool) -> Option<PropertyWitness> {
    for &a in els {
        for &b in els {
            for &c in els {
                if !holds(a, b, c) {
                    return Some(PropertyWitness::Elements(vec![a, b, c]));
                }
            }
        }
    }
    None
}

impl Frame for Lattice {
    type Elem = Elem;

    fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.len() + b.index()]
    }

    fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.len() + b.index()]
    }

    fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.len() + b.index()]
    }

    fn top(&self) -> Elem {
        self.top
    }

    fn bottom(&self) -> Elem {
        self.bottom
    }

    fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    fn residuated_impl(&self, a: Elem, b: Elem) -> Result<Elem> {
        if !self.is_frame() {
            return Err(self.not_a_frame());
        }
        Ok(self.join_all(self.elements().filter(|&c| self.leq(self.meet(c, a), b))))
    }

    fn cut_levels(&self, _values: &[Elem]) -> Vec<Elem> {
        let mut levels = vec![self.bottom];
        levels.extend(self.elements().filter(|&e| e != self.bottom));
        levels
    }
}

/// Frame, prelinearity and semilinearity of a lattice. Each field holds the
/// first violation, so `None` means the property holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub frame: Option<[Elem; 3]>,
    pub prelinear: Option<[Elem; 2]>,
    pub semilinear: Option<[Elem; 3]>,
}

impl ClassificationReport {
    pub fn is_frame(&self) -> bool {
        self.frame.is_none()
    }

    pub fn is_prelinear(&self) -> bool {
        self.prelinear.is_none()
    }

    pub fn is_semilinear(&self) -> bool {
        self.semilinear.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowProperty {
    /// `a → a = ⊤`
    SelfImplication,
    /// `(a → b) ∧ (b → c) ≤ a → c`
    Transitivity,
    /// `a ≤ b ⇒ (a → x) ≥ (b → x)`
    AntitoneAntecedent,
    /// `a ≤ b ⇒ (x → a) ≤ (x → b)`
    MonotoneConsequent,
    /// prelinear ⇒ semilinear
    PrelinearImpliesSemilinear,
    /// `⋀ᵢ (aᵢ → b) = (⋁ᵢ aᵢ) → b` over nonempty families
    InfOverSup,
    /// `a ≤ b ⇔ a → b = ⊤`
    OrderCharacterisation,
    /// `a ∧ (a → b) ≤ b`
    ModusPonens,
}

impl ArrowProperty {
    /// Conventional numbering, with the prelinearity implication as "5'".
    pub fn number(self) -> &'static str {
        match self {
            ArrowProperty::SelfImplication => "1",
            ArrowProperty::Transitivity => "2",
            ArrowProperty::AntitoneAntecedent => "3",
            ArrowProperty::MonotoneConsequent => "4",
            ArrowProperty::PrelinearImpliesSemilinear => "5'",
            ArrowProperty::InfOverSup => "6",
            ArrowProperty::OrderCharacterisation => "7",
            ArrowProperty::ModusPonens => "8",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyWitness {
    Elements(Vec<Elem>),
    Subset { members: Vec<Elem>, target: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub property: ArrowProperty,
    pub witness: Option<PropertyWitness>,
}

impl PropertyResult {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn el(l: &Lattice, s: &str) -> Elem {
        l.element(s).unwrap()
    }

    #[test]
    fn two_chain_is_min_max() {
        let l = Lattice::new(&["bot", "top"], &[("bot", "top")]).unwrap();
        let (b, t) = (el(&l, "bot"), el(&l, "top"));
        assert_eq!(l.meet(b, t), b);
        assert_eq!(l.join(b, t), t);
        assert_eq!(l.bottom(), b);
        assert_eq!(l.top(), t);
    }

    #[test]
    fn rejects_unbounded() {
        let err = Lattice::new::<_, &str>(&["x", "y"], &[]).unwrap_err();
        assert!(matches!(err, Error::Unbounded(_)));
    }

    #[test]
    fn rejects_cycles() {
        let err = Lattice::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
        let err = Lattice::new(&["a"], &[("a", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
    }

    #[test]
    fn rejects_unknown_and_duplicate_labels() {
        assert_eq!(
            Lattice::new(&["a"], &[("a", "z")]).unwrap_err(),
            Error::UnknownElement("z".into())
        );
        assert_eq!(
            Lattice::new::<_, &str>(&["a", "a"], &[]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn rejects_missing_meet() {
        // Two maximal-lower-bound candidates x, y below both u and v.
        let err = Lattice::new(
            &["bot", "x", "y", "u", "v", "top"],
            &[
                ("bot", "x"),
                ("bot", "y"),
                ("x", "u"),
                ("y", "u"),
                ("x", "v"),
                ("y", "v"),
                ("u", "top"),
                ("v", "top"),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotALattice { .. }));
    }

    #[test]
    fn m5_meets_and_joins() {
        let l = catalog::m5();
        assert_eq!(l.meet(el(&l, "b"), el(&l, "c")), el(&l, "bot"));
        assert_eq!(l.join(el(&l, "b"), el(&l, "c")), el(&l, "a"));
        assert_eq!(l.meet(el(&l, "a"), el(&l, "a")), el(&l, "a"));
        assert_eq!(
            l.join_all(l.elements_of(&["b", "c", "bot"]).unwrap()),
            el(&l, "a")
        );
        assert_eq!(
            l.meet_all(l.elements_of(&["a", "b", "c"]).unwrap()),
            el(&l, "bot")
        );
        assert_eq!(l.join_all([]), l.bottom());
        assert_eq!(l.meet_all([]), l.top());
    }

    #[test]
    fn n6_meet_matches_down_set_oracle() {
        let l = catalog::n6();
        // Oracle: intersect the down-sets, then take the element above all of them.
        let down = |x: Elem| -> Vec<Elem> { l.elements().filter(|&y| l.leq(y, x)).collect() };
        for a in l.elements() {
            for b in l.elements() {
                let common: Vec<Elem> = down(a)
                    .into_iter()
                    .filter(|y| down(b).contains(y))
                    .collect();
                let max = *common
                    .iter()
                    .find(|&&m| common.iter().all(|&y| l.leq(y, m)))
                    .unwrap();
                assert_eq!(l.meet(a, b), max);
            }
        }
        assert_eq!(l.meet(el(&l, "a"), el(&l, "c")), el(&l, "bot"));
    }

    #[test]
    fn frames_and_non_frames() {
        assert!(catalog::m5().is_frame());
        assert!(catalog::n6().is_frame());
        assert!(catalog::b3().is_frame());
        let m3 = catalog::m3();
        let [a, b, c] = m3.distributivity_violation().unwrap();
        let atoms = m3.elements_of(&["x", "y", "z"]).unwrap();
        assert!(atoms.contains(&a) && atoms.contains(&b) && atoms.contains(&c));
        assert!(matches!(
            m3.residuated_impl(a, b),
            Err(Error::NotAFrame(..))
        ));
    }

    #[test]
    fn godel_arrow_examples() {
        let m5 = catalog::m5();
        assert_eq!(m5.godel_arrow(el(&m5, "b"), el(&m5, "c")), el(&m5, "c"));
        assert_eq!(m5.godel_arrow(el(&m5, "a"), el(&m5, "a")), m5.top());
        let n6 = catalog::n6();
        assert_eq!(n6.godel_arrow(el(&n6, "b"), el(&n6, "a")), n6.top());
    }

    #[test]
    fn residuated_differs_from_godel_on_m5() {
        let l = catalog::m5();
        let (b, bot) = (el(&l, "b"), el(&l, "bot"));
        // Oracle: {c | c ∧ b ≤ ⊥} = {⊥, c}.
        let qualifying: Vec<&str> = l
            .elements()
            .filter(|&c| l.meet(c, b) == bot)
            .map(|c| l.label(c))
            .collect();
        assert_eq!(qualifying, ["bot", "c"]);
        assert_eq!(l.residuated_impl(b, bot).unwrap(), el(&l, "c"));
        assert_eq!(l.godel_arrow(b, bot), bot);
        for x in l.elements() {
            assert_eq!(l.residuated_impl(bot, x).unwrap(), l.top());
        }
    }

    #[test]
    fn named_lattice_classifications() {
        let m5 = catalog::m5();
        let r = m5.classify();
        assert!(r.is_frame() && r.is_semilinear());
        assert_eq!(r.prelinear, Some([el(&m5, "b"), el(&m5, "c")]));

        let n6 = catalog::n6();
        assert_eq!(
            n6.semilinearity_violation(),
            Some([el(&n6, "b"), el(&n6, "a"), el(&n6, "c")])
        );
        let b3 = catalog::b3();
        assert_eq!(
            b3.semilinearity_violation(),
            Some([el(&b3, "a"), el(&b3, "c"), el(&b3, "d")])
        );
    }

    #[test]
    fn arrow_properties_on_m5_and_n6() {
        let policy = SubsetPolicy::default();
        for r in catalog::m5().check_arrow_properties(&policy) {
            assert!(r.holds(), "{:?}", r);
        }
        let n6 = catalog::n6();
        assert!(!n6.is_prelinear());
        let results = n6.check_arrow_properties(&policy);
        let p5 = results
            .iter()
            .find(|r| r.property == ArrowProperty::PrelinearImpliesSemilinear)
            .unwrap();
        assert!(p5.holds());
    }

    #[test]
    fn chains_pass_everything() {
        let policy = SubsetPolicy::default();
        for n in 1..=8 {
            let c = Lattice::chain(n).unwrap();
            assert!(c.is_chain() && c.is_prelinear() && c.is_semilinear());
            assert!(c
                .check_arrow_properties(&policy)
                .iter()
                .all(PropertyResult::holds));
        }
    }

    #[test]
    fn property_six_samples_above_bound() {
        let policy = SubsetPolicy::default();
        assert!(catalog::b3()
            .check_arrow_properties(&policy)
            .iter()
            .all(PropertyResult::holds));
    }

    #[test]
    fn hasse_and_dot() {
        let l = Lattice::new(
            &["bot", "mid", "top"],
            &[("bot", "mid"), ("mid", "top"), ("bot", "top")],
        )
        .unwrap();
        assert_eq!(l.covers().len(), 2);
        assert_eq!(l.ranks(), vec![0, 1, 2]);
        let dot = l.to_dot();
        assert!(dot.contains("n0 -> n1;") && dot.contains("n1 -> n2;"));
        assert!(!dot.contains("n0 -> n2;"));
        assert!(dot.contains("{ rank=same; n0; }"));
    }
}
