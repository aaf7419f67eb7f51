//! Exhaustive generation of small bounded lattices up to isomorphism.
//!
//! The interior of an `n`-element bounded lattice is an arbitrary poset on
//! `n - 2` points. Interior posets are generated once per natural labelling
//! (each new point is placed above a down-set of the earlier ones), padded
//! with `⊥` and `⊤`, filtered to lattices and deduplicated by
//! [`canonical_form`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{ClassificationReport, Error, Frame, Lattice, Result};

/// Largest size accepted by [`enumerate_lattices`] and [`search`].
pub const MAX_SIZE: usize = 8;

/// Largest lattice [`canonical_form`] accepts.
pub const MAX_CANONICAL_SIZE: usize = 16;

/// An isomorphism invariant that determines a finite poset up to
/// isomorphism: the least strict-order bit string over all linear extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    size: usize,
    bits: u128,
}

/// Order matrix with `lt[i][j]` meaning `i < j`.
struct StrictOrder {
    n: usize,
    lt: Vec<bool>,
}

impl StrictOrder {
    fn lt(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.n + j]
    }

    /// Minimum over linear extensions of the upper-triangle bit string,
    /// together with one extension attaining it.
    fn canonical(&self) -> (u128, Vec<usize>) {
        let mut best = (u128::MAX, Vec::new());
        let mut perm = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.extend(&mut perm, &mut used, 0, 0, &mut best);
        best
    }

    // `code` holds the bits of all pairs among the first `perm.len()` positions,
    // `len` their count.
    fn extend(
        &self,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        code: u128,
        len: u32,
        best: &mut (u128, Vec<usize>),
    ) {
        let total = (self.n * (self.n - 1) / 2) as u32;
        if total > len && best.0 != u128::MAX && (code << (total - len)) > best.0 {
            return;
        }
        if perm.len() == self.n {
            if code < best.0 {
                *best = (code, perm.clone());
            }
            return;
        }
        for v in 0..self.n {
            if used[v] || (0..self.n).any(|u| !used[u] && self.lt(u, v)) {
                continue;
            }
            let mut next = code;
            for &p in perm.iter() {
                next = next << 1 | self.lt(p, v) as u128;
            }
            used[v] = true;
            perm.push(v);
            self.extend(perm, used, next, len + (perm.len() - 1) as u32, best);
            perm.pop();
            used[v] = false;
        }
    }
}

/// The canonical form of a lattice, computed over all its linear extensions.
///
/// Pairs of positions are encoded grouped by the later position, so a partial
/// extension already fixes a prefix of its code and is pruned once that
/// prefix exceeds the best code found.
pub fn canonical_form(lattice: &Lattice) -> Result<CanonicalForm> {
    let n = lattice.len();
    if n > MAX_CANONICAL_SIZE {
        return Err(Error::BoundExceeded {
            n,
            max: MAX_CANONICAL_SIZE,
        });
    }
    let els: Vec<_> = lattice.elements().collect();
    let lt = els
        .iter()
        .flat_map(|&a| els.iter().map(move |&b| a != b && lattice.leq(a, b)))
        .collect();
    let (bits, _) = StrictOrder { n, lt }.canonical();
    Ok(CanonicalForm { size: n, bits })
}

/// Whether two lattices are order-isomorphic.
pub fn isomorphic(a: &Lattice, b: &Lattice) -> Result<bool> {
    Ok(a.len() == b.len() && canonical_form(a)? == canonical_form(b)?)
}

/// The lattices of a given size, one per isomorphism class, in canonical
/// order. Elements are labelled `bot`, `a`, `b`, …, `top` along a linear
/// extension.
#[derive(Debug, Clone)]
pub struct LatticeStream {
    inner: std::vec::IntoIter<Lattice>,
}

impl Iterator for LatticeStream {
    type Item = Lattice;

    fn next(&mut self) -> Option<Lattice> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for LatticeStream {}

fn check_size(n: usize) -> Result<()> {
    if !(2..=MAX_SIZE).contains(&n) {
        return Err(Error::BoundExceeded { n, max: MAX_SIZE });
    }
    Ok(())
}

/// Calls `visit` with the strict-order matrix of every naturally labelled
/// poset on `m` points.
fn natural_posets(m: usize, visit: &mut impl FnMut(&[bool])) {
    fn grow(m: usize, k: usize, lt: &mut Vec<bool>, visit: &mut impl FnMut(&[bool])) {
        if k == m {
            visit(lt);
            return;
        }
        // Candidate down-sets of {0..k}: closed under predecessors.
        for mask in 0u32..1 << k {
            let closed = (0..k)
                .filter(|&j| mask >> j & 1 == 1)
                .all(|j| (0..k).all(|i| !lt[i * m + j] || mask >> i & 1 == 1));
            if !closed {
                continue;
            }
            for i in 0..k {
                lt[i * m + k] = mask >> i & 1 == 1;
            }
            grow(m, k + 1, lt, visit);
        }
        for i in 0..k {
            lt[i * m + k] = false;
        }
    }
    let mut lt = vec![false; m * m];
    grow(m, 0, &mut lt, visit);
}

fn labels(n: usize) -> Vec<String> {
    let mut out = vec!["bot".to_owned()];
    out.extend((0..n - 2).map(|i| ((b'a' + i as u8) as char).to_string()));
    out.push("top".to_owned());
    out
}

/// All lattices with `n` elements up to isomorphism, or only the
/// distributive ones. Fails with [`Error::BoundExceeded`] unless
/// `2 <= n <= 8`.
pub fn enumerate_lattices(n: usize, distributive_only: bool) -> Result<LatticeStream> {
    check_size(n)?;
    let m = n - 2;
    let names = labels(n);
    let mut found: BTreeMap<u128, Lattice> = BTreeMap::new();
    let mut failure = None;
    natural_posets(m, &mut |interior| {
        if failure.is_some() {
            return;
        }
        // Index 0 is ⊥, 1..=m the interior, n-1 is ⊤.
        let mut lt = vec![false; n * n];
        for j in 1..n {
            lt[j] = true;
            lt[(j - 1) * n + n - 1] = true;
        }
        for i in 0..m {
            for j in 0..m {
                lt[(i + 1) * n + j + 1] = interior[i * m + j];
            }
        }
        let order = StrictOrder { n, lt };
        if !has_all_joins(&order) {
            return;
        }
        let (bits, perm) = order.canonical();
        if found.contains_key(&bits) {
            return;
        }
        let mut leq = vec![false; n * n];
        for (p, &u) in perm.iter().enumerate() {
            for (q, &v) in perm.iter().enumerate() {
                leq[p * n + q] = p == q || order.lt(u, v);
            }
        }
        match Lattice::from_order(&names, leq) {
            Ok(l) if !distributive_only || l.is_distributive() => {
                found.insert(bits, l);
            }
            Ok(_) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(Error::InternalInconsistency(format!(
            "generated order rejected: {e}"
        )));
    }
    Ok(LatticeStream {
        inner: found.into_values().collect::<Vec<_>>().into_iter(),
    })
}

/// In a finite bounded poset, the existence of all binary joins makes it a
/// lattice.
fn has_all_joins(order: &StrictOrder) -> bool {
    let n = order.n;
    let le = |i: usize, j: usize| i == j || order.lt(i, j);
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let upper: Vec<usize> = (0..n).filter(|&k| le(a, k) && le(b, k)).collect();
            upper.iter().any(|&m| upper.iter().all(|&k| le(m, k)))
        })
    })
}

/// Lattice-theoretic conditions for [`search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    NotPrelinear,
    NotSemilinear,
    PrelinearAndNotSemilinear,
    SemilinearAndNotPrelinear,
}

impl Predicate {
    pub const ALL: [Predicate; 4] = [
        Predicate::NotPrelinear,
        Predicate::NotSemilinear,
        Predicate::PrelinearAndNotSemilinear,
        Predicate::SemilinearAndNotPrelinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::NotPrelinear => "not-prelinear",
            Predicate::NotSemilinear => "not-semilinear",
            Predicate::PrelinearAndNotSemilinear => "prelinear-and-not-semilinear",
            Predicate::SemilinearAndNotPrelinear => "semilinear-and-not-prelinear",
        }
    }

    pub fn matches(self, report: &ClassificationReport) -> bool {
        let (p, s) = (report.is_prelinear(), report.is_semilinear());
        match self {
            Predicate::NotPrelinear => !p,
            Predicate::NotSemilinear => !s,
            Predicate::PrelinearAndNotSemilinear => p && !s,
            Predicate::SemilinearAndNotPrelinear => s && !p,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Predicate> {
        let norm = s.replace('_', "-");
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| Error::BadParameters(format!("unknown predicate `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct SearchHit {
    pub lattice: Lattice,
    pub report: ClassificationReport,
}

/// Every isomorphism class of size `n` whose classification satisfies
/// `predicate`.
pub fn search(n: usize, predicate: Predicate, distributive_only: bool) -> Result<Vec<SearchHit>> {
    Ok(enumerate_lattices(n, distributive_only)?
        .filter_map(|lattice| {
            let report = lattice.classify();
            predicate
                .matches(&report)
                .then_some(SearchHit { lattice, report })
        })
        .collect())
}
