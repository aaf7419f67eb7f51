//! Aligned plain-text renderings of the reports.

use std::fmt::Write;

use alphacut_core::enumerate::Predicate;
use alphacut_core::group::FuzzyGroup;
use alphacut_core::lattice::{PropertyResult, PropertyWitness};
use alphacut_core::localic::{AxiomReport, AxiomWitness, FuzzyRelation};
use alphacut_core::rough::Rational;
use alphacut_core::topology::{LTopSpace, TopologyViolation};
use alphacut_core::{Base, ClassificationReport, CrispSet, Elem, FuzzySet, Lattice};
use serde_json::{json, Value};

pub fn rows(rows: &[(String, String)]) -> String {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn elems(l: &Lattice, els: &[Elem]) -> String {
    let labels: Vec<&str> = els.iter().map(|&e| l.label(e)).collect();
    format!("({})", labels.join(", "))
}

fn check<const N: usize>(l: &Lattice, witness: Option<[Elem; N]>) -> String {
    match witness {
        None => "yes".to_owned(),
        Some(w) => format!("no   witness {}", elems(l, &w)),
    }
}

pub fn classification(
    l: &Lattice,
    r: &ClassificationReport,
    properties: &[PropertyResult],
) -> String {
    let mut out = vec![
        ("size".to_owned(), l.len().to_string()),
        ("frame".to_owned(), check(l, r.frame)),
        ("prelinear".to_owned(), check(l, r.prelinear)),
        ("semilinear".to_owned(), check(l, r.semilinear)),
    ];
    for p in properties {
        let value = match &p.witness {
            None => "yes".to_owned(),
            Some(PropertyWitness::Elements(w)) => format!("no   witness {}", elems(l, w)),
            Some(PropertyWitness::Subset { members, target }) => {
                format!(
                    "no   subset {} target {}",
                    elems(l, members),
                    l.label(*target)
                )
            }
        };
        out.push((format!("property {}", p.property.number()), value));
    }
    rows(&out)
}

pub fn membership(a: &FuzzySet<Lattice>) -> String {
    let l = a.frame();
    let pairs: Vec<String> = (0..a.base().len())
        .map(|x| format!("{}: {}", a.base().label(x), l.label(a.value(x))))
        .collect();
    format!("{{{}}}", pairs.join(", "))
}

pub fn crisp(c: &CrispSet) -> String {
    format!("{{{}}}", c.labels().join(", "))
}

pub fn rationals(base: &Base, values: &[Rational]) -> String {
    let pairs: Vec<String> = base
        .labels()
        .iter()
        .zip(values)
        .map(|(x, v)| format!("{x}: {v}"))
        .collect();
    format!("{{{}}}", pairs.join(", "))
}

fn witness(rel: &FuzzyRelation<Lattice>, w: &AxiomWitness) -> String {
    let members: Vec<String> = w.members.iter().map(|&i| format!("#{i}")).collect();
    let mut s = format!("members {}", members.join(" "));
    if let Some(sub) = &w.subset {
        let subset: Vec<String> = sub.iter().map(|&i| format!("#{i}")).collect();
        let _ = write!(s, "  subset {{{}}}", subset.join(" "));
    }
    let _ = rel;
    s
}

pub fn axioms(rel: &FuzzyRelation<Lattice>, report: &AxiomReport, verbose: bool) -> String {
    let mut out = vec![
        ("verdict".to_owned(), report.verdict.to_string()),
        (
            "arrow".to_owned(),
            serde_json::to_value(rel.arrow())
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default(),
        ),
        ("family".to_owned(), format!("{} members", rel.len())),
        (
            "subsets".to_owned(),
            if report.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            }
            .to_owned(),
        ),
    ];
    for r in &report.axioms {
        let value = match &r.witness {
            None => "pass".to_owned(),
            Some(w) => format!("FAIL  {}", witness(rel, w)),
        };
        out.push((format!("axiom {}", r.axiom), value));
        if verbose {
            for w in r.all.iter().skip(1) {
                out.push((String::new(), format!("      {}", witness(rel, w))));
            }
        }
    }
    let mut text = rows(&out);
    let show_family = verbose || report.axioms.iter().any(|r| !r.holds());
    if show_family {
        for (i, f) in rel.family().iter().enumerate() {
            let _ = writeln!(text, "#{i:<3} {}", membership(f));
        }
    }
    text
}

pub fn topology(
    space: &LTopSpace<Lattice>,
    alpha: Option<&str>,
    violation: Option<&TopologyViolation>,
) -> String {
    let mut out = Vec::new();
    if let Some(a) = alpha {
        out.push(("subspace at".to_owned(), a.to_owned()));
    }
    out.push(("carrier".to_owned(), membership(space.carrier())));
    out.push(("opens".to_owned(), space.opens().len().to_string()));
    out.push((
        "L-topology".to_owned(),
        match violation {
            None => "yes".to_owned(),
            Some(v) => format!("no   {v}"),
        },
    ));
    let mut text = rows(&out);
    for (i, o) in space.opens().iter().enumerate() {
        let _ = writeln!(text, "#{i:<3} {}", membership(o));
    }
    text
}

pub fn group_json(g: &FuzzyGroup<Lattice>) -> Value {
    let base = g.carrier().base();
    let inverses: serde_json::Map<String, Value> = g
        .support()
        .into_iter()
        .map(|x| {
            let inv = g.inverse(x).expect("support elements have inverses");
            (base.label(x).to_owned(), Value::from(base.label(inv)))
        })
        .collect();
    json!({
        "group": true,
        "identity": base.label(g.identity()),
        "support": g.support().into_iter().map(|x| base.label(x)).collect::<Vec<_>>(),
        "inverses": inverses,
    })
}

pub fn group(g: &FuzzyGroup<Lattice>) -> String {
    let base = g.carrier().base();
    let support: Vec<&str> = g.support().into_iter().map(|x| base.label(x)).collect();
    let inverses: Vec<String> = g
        .support()
        .into_iter()
        .map(|x| {
            format!(
                "{}⁻¹ = {}",
                base.label(x),
                base.label(g.inverse(x).expect("support"))
            )
        })
        .collect();
    rows(&[
        ("fuzzy group".to_owned(), "yes".to_owned()),
        ("identity".to_owned(), base.label(g.identity()).to_owned()),
        ("support".to_owned(), format!("{{{}}}", support.join(", "))),
        ("inverses".to_owned(), inverses.join(", ")),
    ])
}

pub fn enumeration(
    size: usize,
    distributive: bool,
    predicate: Option<Predicate>,
    found: &[(Lattice, ClassificationReport)],
) -> String {
    let mut header = format!("{} ", found.len());
    header.push_str(if distributive {
        "distributive lattices"
    } else {
        "lattices"
    });
    let _ = write!(header, " with {size} elements");
    if let Some(p) = predicate {
        let _ = write!(header, " ({p})");
    }
    let mut text = format!("{header}\n");
    for (i, (l, r)) in found.iter().enumerate() {
        let covers: Vec<String> = l
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", l.label(a), l.label(b)))
            .collect();
        let flags = [
            ("distributive", r.is_frame()),
            ("prelinear", r.is_prelinear()),
            ("semilinear", r.is_semilinear()),
        ]
        .iter()
        .map(|(name, holds)| {
            if *holds {
                name.to_string()
            } else {
                format!("¬{name}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ");
        let _ = writeln!(text, "{:>4}  {flags}  {}", i + 1, covers.join(" "));
    }
    text
}
