//! JSON input schemas and report encodings.
//!
//! Lattice:
//! `{"elements": ["bot", "a", "top"], "covers": [["bot", "a"], ["a", "top"]]}`
//!
//! Fuzzy set, with `lattice` an inline lattice or a path resolved against
//! the directory of the containing file:
//! `{"lattice": "m5.json", "base": ["p", "q"], "membership": {"p": "a", "q": "bot"}}`
//!
//! Inside topology and group documents, opens may omit `lattice` and `base`
//! (inherited from the carrier), and points missing from `membership`
//! default to the bottom element.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::group::GradedOpTable;
use crate::lattice::{PropertyResult, PropertyWitness};
use crate::localic::{AxiomReport, AxiomWitness, FuzzyRelation};
use crate::rough::{parse_threshold, ApproximationSpace, Rational};
use crate::topology::LTopSpace;
use crate::{
    Base, ClassificationReport, CrispSet, Elem, Error, Frame, FuzzySet, Lattice, PointMap,
};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Model(#[from] Error),
}

pub type LoadResult<T> = std::result::Result<T, LoadError>;

fn schema(msg: impl Into<String>) -> LoadError {
    LoadError::Schema(msg.into())
}

fn read(path: &Path) -> LoadResult<String> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parent(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl LatticeSpec {
    pub fn build(&self) -> crate::Result<Lattice> {
        Lattice::new(&self.elements, &self.covers)
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Path(String),
    Inline(LatticeSpec),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzySetSpec {
    #[serde(default)]
    pub lattice: Option<LatticeRef>,
    #[serde(default)]
    pub base: Option<Vec<String>>,
    pub membership: Map<String, Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointMapSpec {
    #[serde(default)]
    pub target: Option<Vec<String>>,
    pub map: Map<String, Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopologySpec {
    pub carrier: FuzzySetSpec,
    pub opens: Vec<FuzzySetSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradeSpec {
    pub lhs: (String, String),
    pub rhs: String,
    pub grade: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub carrier: FuzzySetSpec,
    pub gr: Vec<GradeSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ThresholdSpec {
    Text(String),
    Number(serde_json::Number),
}

impl ThresholdSpec {
    pub fn value(&self) -> crate::Result<Rational> {
        match self {
            ThresholdSpec::Text(s) => parse_threshold(s),
            ThresholdSpec::Number(n) => parse_threshold(&n.to_string()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoughSpec {
    pub universe: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub target: Vec<String>,
    #[serde(default)]
    pub alpha: Option<ThresholdSpec>,
    #[serde(default)]
    pub beta: Option<ThresholdSpec>,
}

pub fn parse_lattice(text: &str) -> LoadResult<Lattice> {
    let spec: LatticeSpec = serde_json::from_str(text)?;
    Ok(spec.build()?)
}

pub fn load_lattice(path: &Path) -> LoadResult<Lattice> {
    parse_lattice(&read(path)?)
}

fn resolve_lattice(r: &LatticeRef, dir: &Path) -> LoadResult<Lattice> {
    match r {
        LatticeRef::Path(p) => load_lattice(&dir.join(p)),
        LatticeRef::Inline(spec) => Ok(spec.build()?),
    }
}

fn value_label(v: &Value, what: &str) -> LoadResult<String> {
    v.as_str()
        .map(str::to_owned)
        .ok_or_else(|| schema(format!("{what} must be a string, found {v}")))
}

/// Builds a fuzzy set, taking the lattice and base from `inherit` when the
/// spec omits them.
pub fn build_fuzzy_set(
    spec: &FuzzySetSpec,
    dir: &Path,
    inherit: Option<&FuzzySet<Lattice>>,
) -> LoadResult<FuzzySet<Lattice>> {
    let lattice = match (&spec.lattice, inherit) {
        (Some(r), _) => Arc::new(resolve_lattice(r, dir)?),
        (None, Some(parent)) => parent.frame().clone(),
        (None, None) => return Err(schema("fuzzy set needs a `lattice`")),
    };
    let base = match (&spec.base, inherit) {
        (Some(labels), _) => Base::new(labels)?,
        (None, Some(parent)) => parent.base().clone(),
        (None, None) => {
            let labels: Vec<&String> = spec.membership.keys().collect();
            Base::new(&labels)?
        }
    };
    let mut membership = vec![lattice.bottom(); base.len()];
    for (point, value) in &spec.membership {
        let x = base.index(point)?;
        membership[x] = lattice.element(&value_label(value, "membership value")?)?;
    }
    Ok(FuzzySet::new(base, lattice, membership)?)
}

pub fn parse_fuzzy_set(text: &str, dir: &Path) -> LoadResult<FuzzySet<Lattice>> {
    let spec: FuzzySetSpec = serde_json::from_str(text)?;
    build_fuzzy_set(&spec, dir, None)
}

pub fn load_fuzzy_set(path: &Path) -> LoadResult<FuzzySet<Lattice>> {
    parse_fuzzy_set(&read(path)?, &parent(path))
}

/// A map out of `source`. Without an explicit `target`, target points are
/// the distinct values in order of first appearance.
pub fn parse_point_map(text: &str, source: &Base) -> LoadResult<PointMap> {
    let spec: PointMapSpec = serde_json::from_str(text)?;
    let pairs: Vec<(String, String)> = spec
        .map
        .iter()
        .map(|(k, v)| Ok((k.clone(), value_label(v, "map target")?)))
        .collect::<LoadResult<_>>()?;
    let target = match spec.target {
        Some(labels) => Base::new(&labels)?,
        None => {
            let mut seen = Vec::new();
            for (_, y) in &pairs {
                if !seen.contains(y) {
                    seen.push(y.clone());
                }
            }
            Base::new(&seen)?
        }
    };
    Ok(PointMap::from_labels(source.clone(), target, &pairs)?)
}

pub fn load_point_map(path: &Path, source: &Base) -> LoadResult<PointMap> {
    parse_point_map(&read(path)?, source)
}

pub fn parse_topology(text: &str, dir: &Path) -> LoadResult<LTopSpace<Lattice>> {
    let spec: TopologySpec = serde_json::from_str(text)?;
    let carrier = build_fuzzy_set(&spec.carrier, dir, None)?;
    let opens = spec
        .opens
        .iter()
        .map(|o| build_fuzzy_set(o, dir, Some(&carrier)))
        .collect::<LoadResult<Vec<_>>>()?;
    Ok(LTopSpace::new(carrier, opens)?)
}

pub fn load_topology(path: &Path) -> LoadResult<LTopSpace<Lattice>> {
    parse_topology(&read(path)?, &parent(path))
}

/// A carrier with its operation table. Omitted triples are `⊥`; a listed
/// triple with a positive grade must lie in the support.
pub fn parse_group(
    text: &str,
    dir: &Path,
) -> LoadResult<(FuzzySet<Lattice>, GradedOpTable<Lattice>)> {
    let spec: GroupSpec = serde_json::from_str(text)?;
    let carrier = build_fuzzy_set(&spec.carrier, dir, None)?;
    let l = carrier.frame().clone();
    let base = carrier.base().clone();
    let mut table = GradedOpTable::new(base.clone(), l.clone());
    let mut seen = HashSet::new();
    for entry in &spec.gr {
        let triple = (
            base.index(&entry.lhs.0)?,
            base.index(&entry.lhs.1)?,
            base.index(&entry.rhs)?,
        );
        if !seen.insert(triple) {
            return Err(schema(format!(
                "gr({} ⊕ {} ≃ {}) is listed twice",
                entry.lhs.0, entry.lhs.1, entry.rhs
            )));
        }
        let grade = l.element(&entry.grade)?;
        let (x1, x2, x3) = triple;
        if grade != l.bottom() && [x1, x2, x3].iter().any(|&x| carrier.value(x) == l.bottom()) {
            return Err(schema(format!(
                "gr({} ⊕ {} ≃ {}) is positive outside the support",
                entry.lhs.0, entry.lhs.1, entry.rhs
            )));
        }
        table.set(x1, x2, x3, grade);
    }
    Ok((carrier, table))
}

pub fn load_group(path: &Path) -> LoadResult<(FuzzySet<Lattice>, GradedOpTable<Lattice>)> {
    parse_group(&read(path)?, &parent(path))
}

/// A parsed rough-set problem.
#[derive(Debug, Clone)]
pub struct RoughProblem {
    pub space: ApproximationSpace,
    pub target: CrispSet,
    pub alpha: Option<Rational>,
    pub beta: Option<Rational>,
}

pub fn parse_rough(text: &str) -> LoadResult<RoughProblem> {
    let spec: RoughSpec = serde_json::from_str(text)?;
    let universe = Base::new(&spec.universe)?;
    let space = ApproximationSpace::new(universe.clone(), &spec.partition)?;
    let target = CrispSet::from_labels(universe, &spec.target)?;
    Ok(RoughProblem {
        space,
        target,
        alpha: spec.alpha.as_ref().map(ThresholdSpec::value).transpose()?,
        beta: spec.beta.as_ref().map(ThresholdSpec::value).transpose()?,
    })
}

pub fn load_rough(path: &Path) -> LoadResult<RoughProblem> {
    parse_rough(&read(path)?)
}

// Encoders.

pub fn lattice_to_json(l: &Lattice) -> Value {
    let covers: Vec<Value> = l
        .covers()
        .into_iter()
        .map(|(a, b)| json!([l.label(a), l.label(b)]))
        .collect();
    json!({ "elements": l.labels(), "covers": covers })
}

fn labels(l: &Lattice, els: &[Elem]) -> Value {
    els.iter().map(|&e| Value::from(l.label(e))).collect()
}

pub fn membership_to_json(a: &FuzzySet<Lattice>) -> Value {
    let l = a.frame();
    let map: Map<String, Value> = a
        .base()
        .labels()
        .iter()
        .zip(a.membership())
        .map(|(x, &v)| (x.clone(), Value::from(l.label(v))))
        .collect();
    Value::Object(map)
}

/// A self-contained fuzzy-set document with the lattice inline.
pub fn fuzzy_set_to_json(a: &FuzzySet<Lattice>) -> Value {
    json!({
        "lattice": lattice_to_json(a.frame()),
        "base": a.base().labels(),
        "membership": membership_to_json(a),
    })
}

pub fn crisp_to_json(c: &CrispSet) -> Value {
    json!(c.labels())
}

fn optional_witness(holds: bool, witness: Option<Value>) -> Value {
    let mut m = Map::new();
    m.insert("holds".into(), holds.into());
    if let Some(w) = witness {
        m.insert("witness".into(), w);
    }
    Value::Object(m)
}

pub fn classification_to_json(l: &Lattice, r: &ClassificationReport) -> Value {
    json!({
        "size": l.len(),
        "frame": optional_witness(r.is_frame(), r.frame.map(|w| labels(l, &w))),
        "prelinear": optional_witness(r.is_prelinear(), r.prelinear.map(|w| labels(l, &w))),
        "semilinear": optional_witness(r.is_semilinear(), r.semilinear.map(|w| labels(l, &w))),
    })
}

pub fn arrow_properties_to_json(l: &Lattice, results: &[PropertyResult]) -> Value {
    let map: Map<String, Value> = results
        .iter()
        .map(|r| {
            let witness = r.witness.as_ref().map(|w| match w {
                PropertyWitness::Elements(els) => labels(l, els),
                PropertyWitness::Subset { members, target } => {
                    json!({ "subset": labels(l, members), "target": l.label(*target) })
                }
            });
            (
                r.property.number().to_owned(),
                optional_witness(r.holds(), witness),
            )
        })
        .collect();
    Value::Object(map)
}

fn axiom_witness_to_json(rel: &FuzzyRelation<Lattice>, w: &AxiomWitness) -> Value {
    let member = |i: &usize| membership_to_json(&rel.family()[*i]);
    let mut m = Map::new();
    m.insert("members".into(), w.members.iter().map(member).collect());
    if let Some(s) = &w.subset {
        m.insert("subset".into(), s.iter().map(member).collect());
    }
    Value::Object(m)
}

pub fn axiom_report_to_json(
    rel: &FuzzyRelation<Lattice>,
    report: &AxiomReport,
    verbose: bool,
) -> Value {
    let axioms: Map<String, Value> = report
        .axioms
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("pass".into(), r.holds().into());
            if let Some(w) = &r.witness {
                m.insert("witness".into(), axiom_witness_to_json(rel, w));
            }
            if verbose && !r.all.is_empty() {
                m.insert(
                    "violations".into(),
                    r.all
                        .iter()
                        .map(|w| axiom_witness_to_json(rel, w))
                        .collect(),
                );
            }
            (r.axiom.to_string(), Value::Object(m))
        })
        .collect();
    let mut out = Map::new();
    out.insert("verdict".into(), Value::from(report.verdict.to_string()));
    out.insert(
        "arrow".into(),
        serde_json::to_value(rel.arrow()).expect("plain enum"),
    );
    out.insert("exhaustive_subsets".into(), report.exhaustive.into());
    out.insert("axioms".into(), Value::Object(axioms));
    if verbose {
        out.insert(
            "family".into(),
            rel.family().iter().map(membership_to_json).collect(),
        );
        let l = rel.frame();
        let n = rel.len();
        let matrix: Vec<Value> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Value::from(l.label(rel.value(i, j))))
                    .collect()
            })
            .collect();
        out.insert("relation".into(), Value::Array(matrix));
    }
    Value::Object(out)
}

pub fn topology_to_json(space: &LTopSpace<Lattice>) -> Value {
    json!({
        "carrier": fuzzy_set_to_json(space.carrier()),
        "opens": space.opens().iter().map(membership_to_json).collect::<Vec<_>>(),
    })
}

pub fn op_table_to_json(table: &GradedOpTable<Lattice>) -> Value {
    let base = table.base();
    let l = table.frame();
    table
        .entries()
        .map(|((x1, x2, x3), g)| {
            json!({
                "lhs": [base.label(x1), base.label(x2)],
                "rhs": base.label(x3),
                "grade": l.label(g),
            })
        })
        .collect()
}

pub fn rationals_to_json(base: &Base, values: &[Rational]) -> Value {
    let map: Map<String, Value> = base
        .labels()
        .iter()
        .zip(values)
        .map(|(x, v)| (x.clone(), Value::from(v.to_string())))
        .collect();
    Value::Object(map)
}
