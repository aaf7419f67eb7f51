//! `alphacut`: classify lattices, cut fuzzy sets and verify the structures
//! built from them.
//!
//! Exit status is 0 when the checked property holds, 1 when it fails (the
//! report carries a witness) and 2 on unreadable or invalid input.

mod text;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use alphacut_core::enumerate::{enumerate_lattices, search, Predicate};
use alphacut_core::group::{check_fuzzy_group, restrict_to_cut};
use alphacut_core::json as js;
use alphacut_core::localic::{check_localic_axioms, cut_structure, CheckOptions, Verdict};
use alphacut_core::rough::{
    fuzzy_approx, parse_threshold, pawlak_approx, prob_approx, rough_membership, Rational,
};
use alphacut_core::topology::{check_topology, subspace_via_cut};
use alphacut_core::{Arrow, Elem, Lattice, SubsetPolicy};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "alphacut",
    version,
    about = "Fuzzy alpha-cuts over finite frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for sampled subset checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest family size whose subsets are checked exhaustively.
    #[arg(long, global = true, default_value_t = 6)]
    subset_bound: usize,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Report every violation and the full relation, not just the first witness.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArrowArg {
    #[value(alias = "godel-like")]
    Godel,
    Residuated,
}

impl From<ArrowArg> for Arrow {
    fn from(a: ArrowArg) -> Arrow {
        match a {
            ArrowArg::Godel => Arrow::GodelLike,
            ArrowArg::Residuated => Arrow::Residuated,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frame, prelinearity and semilinearity of a lattice.
    Classify {
        #[arg(long)]
        lattice: PathBuf,
        /// Also evaluate the listed properties of the Gödel-like arrow.
        #[arg(long)]
        properties: bool,
    },
    /// The fuzzy (or crisp) α-cut of a fuzzy set, optionally mapped forward.
    Cut {
        #[arg(long)]
        fuzzy_set: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        crisp: bool,
        /// Point map whose image of the cut is reported.
        #[arg(long, conflicts_with = "crisp")]
        map: Option<PathBuf>,
    },
    /// Checks the localic axioms on the closed family of α-cuts.
    VerifyLocalic {
        #[arg(long)]
        fuzzy_set: PathBuf,
        #[arg(long, value_enum, default_value_t = ArrowArg::Godel)]
        arrow: ArrowArg,
    },
    /// Checks an L-topology, or the subspace cut at `--alpha`.
    CheckTopology {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Checks the fuzzy group laws.
    CheckGroup {
        #[arg(long)]
        group: PathBuf,
    },
    /// The subgroup carried by the α-cut of a fuzzy group.
    Subgroup {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        alpha: String,
    },
    /// Rough membership and the classical, probabilistic and graded approximations.
    Rough {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Lattices of a given size up to isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        distributive: bool,
        #[arg(long)]
        predicate: Option<Predicate>,
    },
    /// Graphviz Hasse diagram of a lattice.
    ExportDot {
        #[arg(long)]
        lattice: PathBuf,
    },
}

struct Report {
    holds: bool,
    json: Value,
    text: String,
}

impl Report {
    fn new(holds: bool, json: Value, text: String) -> Report {
        Report { holds, json, text }
    }
}

fn element(l: &Lattice, label: &str) -> Result<Elem> {
    l.element(label)
        .with_context(|| format!("`{label}` is not an element of the lattice"))
}

fn policy(cli: &Cli) -> SubsetPolicy {
    SubsetPolicy {
        exhaustive_max: cli.subset_bound,
        ..SubsetPolicy::with_seed(cli.seed)
    }
}

fn classify(cli: &Cli, path: &Path, properties: bool) -> Result<Report> {
    let l = js::load_lattice(path)?;
    let r = l.classify();
    let mut out = js::classification_to_json(&l, &r);
    let mut holds = r.is_frame() && r.is_prelinear() && r.is_semilinear();
    let mut results = Vec::new();
    if properties {
        results = l.check_arrow_properties(&policy(cli));
        holds &= results.iter().all(|p| p.holds());
        out["properties"] = js::arrow_properties_to_json(&l, &results);
    }
    let text = text::classification(&l, &r, &results);
    Ok(Report::new(holds, out, text))
}

fn cut(path: &Path, alpha: &str, crisp: bool, map: Option<&Path>) -> Result<Report> {
    let a = js::load_fuzzy_set(path)?;
    let alpha_el = element(a.frame(), alpha)?;
    if crisp {
        let c = a.alpha_cut(alpha_el);
        let text = format!("{alpha}-cut  {}\n", text::crisp(&c));
        return Ok(Report::new(
            true,
            json!({ "alpha": alpha, "cut": js::crisp_to_json(&c) }),
            text,
        ));
    }
    let cut = a.fuzzy_alpha_cut(alpha_el);
    let mut out = json!({ "alpha": alpha, "cut": js::membership_to_json(&cut) });
    let mut lines = vec![(format!("{alpha}-cut"), text::membership(&cut))];
    if let Some(m) = map {
        let f = js::load_point_map(m, a.base())?;
        let image = cut.image(&f)?;
        out["image"] = js::membership_to_json(&image);
        lines.push(("image".to_owned(), text::membership(&image)));
    }
    Ok(Report::new(true, out, text::rows(&lines)))
}

fn verify_localic(cli: &Cli, path: &Path, arrow: ArrowArg) -> Result<Report> {
    let a = js::load_fuzzy_set(path)?;
    let rel = cut_structure(&a, arrow.into())?;
    let opts = CheckOptions {
        subsets: policy(cli),
        verbose: cli.verbose,
    };
    let report = check_localic_axioms(&rel, &opts)?;
    let out = js::axiom_report_to_json(&rel, &report, cli.verbose);
    let text = text::axioms(&rel, &report, cli.verbose);
    Ok(Report::new(
        report.verdict == Verdict::LocalicFrame,
        out,
        text,
    ))
}

fn check_space(path: &Path, alpha: Option<&str>) -> Result<Report> {
    let mut space = js::load_topology(path)?;
    let mut out = serde_json::Map::new();
    if let Some(alpha) = alpha {
        if let Some(v) = check_topology(&space)? {
            bail!("the input is not an L-topology ({v})");
        }
        let el = element(space.carrier().frame(), alpha)?;
        space = subspace_via_cut(&space, el)?;
        out.insert("alpha".into(), alpha.into());
        out.insert("subspace".into(), js::topology_to_json(&space));
    }
    let violation = check_topology(&space)?;
    out.insert("topology".into(), violation.is_none().into());
    if let Some(v) = &violation {
        out.insert("condition".into(), v.condition().into());
        out.insert("witness".into(), v.to_string().into());
    }
    let text = text::topology(&space, alpha, violation.as_ref());
    Ok(Report::new(violation.is_none(), Value::Object(out), text))
}

fn check_group(path: &Path) -> Result<Report> {
    let (a, gr) = js::load_group(path)?;
    Ok(match check_fuzzy_group(&a, &gr)? {
        Ok(g) => {
            let out = text::group_json(&g);
            let text = text::group(&g);
            Report::new(true, out, text)
        }
        Err(v) => {
            let why = v.describe(a.base());
            let text = format!("fuzzy group  no\nviolation    {why}\n");
            Report::new(false, json!({ "group": false, "violation": why }), text)
        }
    })
}

fn subgroup(path: &Path, alpha: &str) -> Result<Report> {
    let (a, gr) = js::load_group(path)?;
    let g = match check_fuzzy_group(&a, &gr)? {
        Ok(g) => g,
        Err(v) => bail!("the input is not a fuzzy group: {}", v.describe(a.base())),
    };
    let el = element(a.frame(), alpha)?;
    let sub = restrict_to_cut(&g, el)?;
    let mut out = text::group_json(&sub);
    out["alpha"] = alpha.into();
    out["carrier"] = js::membership_to_json(sub.carrier());
    out["gr"] = js::op_table_to_json(sub.op());
    let text = format!("{alpha}-cut subgroup\n{}", text::group(&sub));
    Ok(Report::new(true, out, text))
}

fn threshold(flag: Option<&str>, fallback: Option<Rational>) -> Result<Option<Rational>> {
    Ok(match flag {
        Some(s) => Some(parse_threshold(s)?),
        None => fallback,
    })
}

fn rough(path: &Path, alpha: Option<&str>, beta: Option<&str>) -> Result<Report> {
    let p = js::load_rough(path)?;
    let alpha = threshold(alpha, p.alpha)?;
    let beta = threshold(beta, p.beta)?;
    let base = p.space.universe();
    let mu = rough_membership(&p.space, &p.target)?;
    let (lower, upper) = pawlak_approx(&p.space, &p.target)?;
    let mut out = json!({
        "membership": js::rationals_to_json(base, &mu.values),
        "pawlak": { "lower": js::crisp_to_json(&lower), "upper": js::crisp_to_json(&upper) },
    });
    let mut rows = vec![
        ("membership".to_owned(), text::rationals(base, &mu.values)),
        ("lower".to_owned(), text::crisp(&lower)),
        ("upper".to_owned(), text::crisp(&upper)),
    ];
    match (alpha, beta) {
        (Some(alpha), Some(beta)) => {
            out["alpha"] = alpha.to_string().into();
            out["beta"] = beta.to_string().into();
            if beta < alpha {
                let (pl, pu) = prob_approx(&p.space, &p.target, alpha, beta)?;
                out["probabilistic"] =
                    json!({ "lower": js::crisp_to_json(&pl), "upper": js::crisp_to_json(&pu) });
                rows.push((format!("lower ≥ {alpha}"), text::crisp(&pl)));
                rows.push((format!("upper > {beta}"), text::crisp(&pu)));
            }
            let (fl, fu) = fuzzy_approx(&p.space, &p.target, alpha, beta)?;
            out["fuzzy"] = json!({
                "lower": js::rationals_to_json(base, &fl),
                "upper": js::rationals_to_json(base, &fu),
            });
            rows.push(("fuzzy lower".to_owned(), text::rationals(base, &fl)));
            rows.push(("fuzzy upper".to_owned(), text::rationals(base, &fu)));
        }
        (None, None) => {}
        _ => bail!("thresholds need both alpha and beta"),
    }
    Ok(Report::new(true, out, text::rows(&rows)))
}

fn enumerate(size: usize, distributive: bool, predicate: Option<Predicate>) -> Result<Report> {
    let found: Vec<(Lattice, _)> = match predicate {
        Some(p) => search(size, p, distributive)?
            .into_iter()
            .map(|h| (h.lattice, h.report))
            .collect(),
        None => enumerate_lattices(size, distributive)?
            .map(|l| {
                let r = l.classify();
                (l, r)
            })
            .collect(),
    };
    let lattices: Vec<Value> = found
        .iter()
        .map(|(l, r)| {
            let mut v = js::lattice_to_json(l);
            v["classification"] = js::classification_to_json(l, r);
            v
        })
        .collect();
    let mut out = json!({ "size": size, "distributive_only": distributive });
    if let Some(p) = predicate {
        out["predicate"] = p.name().into();
    }
    out["count"] = found.len().into();
    out["lattices"] = lattices.into();
    let text = text::enumeration(size, distributive, predicate, &found);
    Ok(Report::new(true, out, text))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Classify {
            lattice,
            properties,
        } => classify(cli, lattice, *properties),
        Command::Cut {
            fuzzy_set,
            alpha,
            crisp,
            map,
        } => cut(fuzzy_set, alpha, *crisp, map.as_deref()),
        Command::VerifyLocalic { fuzzy_set, arrow } => verify_localic(cli, fuzzy_set, *arrow),
        Command::CheckTopology { space, alpha } => check_space(space, alpha.as_deref()),
        Command::CheckGroup { group } => check_group(group),
        Command::Subgroup { group, alpha } => subgroup(group, alpha),
        Command::Rough {
            problem,
            alpha,
            beta,
        } => rough(problem, alpha.as_deref(), beta.as_deref()),
        Command::Enumerate {
            size,
            distributive,
            predicate,
        } => enumerate(*size, *distributive, *predicate),
        Command::ExportDot { lattice } => {
            let l = js::load_lattice(lattice)?;
            let dot = l.to_dot();
            Ok(Report::new(true, Value::String(dot.clone()), dot))
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> io::Result<()> {
    let body = match (&cli.command, cli.format) {
        (Command::ExportDot { .. }, _) | (_, Format::Text) => report.text.clone(),
        (_, Format::Json) => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("values serialise");
            s.push('\n');
            s
        }
    };
    match &cli.output {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if report.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
