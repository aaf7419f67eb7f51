//! Approximation spaces, rough membership and threshold approximations.
//!
//! Rough membership values are exact rationals, so `≥` and `>` comparisons
//! against thresholds are never subject to rounding.

use num_rational::Ratio;

use crate::{Base, CrispSet, Error, Result};

pub type Rational = Ratio<u64>;

/// A finite universe partitioned into equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    universe: Base,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl ApproximationSpace {
    /// Fails with [`Error::InvalidPartition`] on empty, overlapping or
    /// non-covering blocks and [`Error::UnknownPoint`] on foreign labels.
    pub fn new<S: AsRef<str>>(universe: Base, partition: &[Vec<S>]) -> Result<Self> {
        let mut block_of = vec![usize::MAX; universe.len()];
        let mut blocks = Vec::with_capacity(partition.len());
        for (b, block) in partition.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            let mut members = Vec::with_capacity(block.len());
            for label in block {
                let x = universe.index(label.as_ref())?;
                if block_of[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "`{}` appears in more than one block",
                        label.as_ref()
                    )));
                }
                block_of[x] = b;
                members.push(x);
            }
            blocks.push(members);
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "`{}` is in no block",
                universe.label(x)
            )));
        }
        Ok(ApproximationSpace {
            universe,
            blocks,
            block_of,
        })
    }

    /// Builds the space from a block index per point.
    pub fn from_block_indices(universe: Base, block_of: &[usize]) -> Result<Self> {
        if block_of.len() != universe.len() {
            return Err(Error::BaseMismatch);
        }
        let count = block_of.iter().max().map_or(0, |m| m + 1);
        let mut partition = vec![Vec::new(); count];
        for (x, &b) in block_of.iter().enumerate() {
            partition[b].push(universe.label(x).to_owned());
        }
        ApproximationSpace::new(universe, &partition)
    }

    pub fn universe(&self) -> &Base {
        &self.universe
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The class `[x]`.
    pub fn block_of(&self, x: usize) -> &[usize] {
        &self.blocks[self.block_of[x]]
    }

    fn check_target(&self, target: &CrispSet) -> Result<()> {
        if *target.base() != self.universe {
            return Err(Error::BaseMismatch);
        }
        Ok(())
    }
}

/// `μ_A(x) = |[x] ∩ A| / |[x]|` for every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughMembership {
    pub target: CrispSet,
    pub values: Vec<Rational>,
}

impl RoughMembership {
    pub fn value(&self, x: usize) -> Rational {
        self.values[x]
    }
}

pub fn rough_membership(space: &ApproximationSpace, target: &CrispSet) -> Result<RoughMembership> {
    space.check_target(target)?;
    let values = (0..space.universe.len())
        .map(|x| {
            let block = space.block_of(x);
            let inside = block.iter().filter(|&&y| target.contains(y)).count();
            Rational::new(inside as u64, block.len() as u64)
        })
        .collect();
    Ok(RoughMembership {
        target: target.clone(),
        values,
    })
}

fn crisp_where(base: &Base, values: &[Rational], keep: impl Fn(Rational) -> bool) -> CrispSet {
    CrispSet::new(base.clone(), values.iter().map(|&v| keep(v)).collect())
        .expect("one flag per point")
}

/// Classical lower and upper approximations:
/// `⋃{[x] | [x] ⊆ A}` and `⋃{[x] | [x] ∩ A ≠ ∅}`.
pub fn pawlak_approx(
    space: &ApproximationSpace,
    target: &CrispSet,
) -> Result<(CrispSet, CrispSet)> {
    space.check_target(target)?;
    let base = &space.universe;
    let inside = |x: usize| space.block_of(x).iter().all(|&y| target.contains(y));
    let meets = |x: usize| space.block_of(x).iter().any(|&y| target.contains(y));
    let lower = CrispSet::new(base.clone(), (0..base.len()).map(inside).collect())?;
    let upper = CrispSet::new(base.clone(), (0..base.len()).map(meets).collect())?;
    Ok((lower, upper))
}

fn check_unit(name: &str, v: Rational) -> Result<()> {
    if v > Rational::from_integer(1) {
        return Err(Error::BadParameters(format!("{name} = {v} exceeds 1")));
    }
    Ok(())
}

/// `{x | μ_A(x) ≥ α}` and `{x | μ_A(x) > β}`; requires `0 ≤ β < α ≤ 1`.
pub fn prob_approx(
    space: &ApproximationSpace,
    target: &CrispSet,
    alpha: Rational,
    beta: Rational,
) -> Result<(CrispSet, CrispSet)> {
    check_unit("alpha", alpha)?;
    if beta >= alpha {
        return Err(Error::BadParameters(format!(
            "beta = {beta} must be below alpha = {alpha}"
        )));
    }
    let mu = rough_membership(space, target)?;
    let base = &space.universe;
    Ok((
        crisp_where(base, &mu.values, |v| v >= alpha),
        crisp_where(base, &mu.values, |v| v > beta),
    ))
}

/// Grade-retaining approximations: `μ_A(x)` where `μ_A(x) ≥ α` (lower) or
/// `μ_A(x) ≥ β` (upper), `0` elsewhere; requires `0 ≤ β ≤ α ≤ 1`.
pub fn fuzzy_approx(
    space: &ApproximationSpace,
    target: &CrispSet,
    alpha: Rational,
    beta: Rational,
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    check_unit("alpha", alpha)?;
    if beta > alpha {
        return Err(Error::BadParameters(format!(
            "beta = {beta} exceeds alpha = {alpha}"
        )));
    }
    let mu = rough_membership(space, target)?;
    let keep = |t: Rational| -> Vec<Rational> {
        mu.values
            .iter()
            .map(|&v| if v >= t { v } else { Rational::from_integer(0) })
            .collect()
    };
    Ok((keep(alpha), keep(beta)))
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"0.6"` into an
/// exact rational in `[0, 1]`.
pub fn parse_threshold(s: &str) -> Result<Rational> {
    let bad = || Error::BadParameters(format!("`{s}` is not a rational in [0, 1]"));
    let t = s.trim();
    let value = if let Some((p, q)) = t.split_once('/') {
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Rational::new(p, q)
    } else {
        let (int, frac) = t.split_once('.').unwrap_or((t, ""));
        if (int.is_empty() && frac.is_empty())
            || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let int = int.trim_start_matches('0');
        let frac = frac.trim_end_matches('0');
        if int.len() + frac.len() > 18 {
            return Err(bad());
        }
        let numer: u64 = format!("0{int}{frac}").parse().map_err(|_| bad())?;
        Rational::new(numer, 10u64.pow(frac.len() as u32))
    };
    if value > Rational::from_integer(1) {
        return Err(bad());
    }
    Ok(value)
}
