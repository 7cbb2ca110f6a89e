use std::fmt::Write as _;

use serde_json::{json, Value};

use coxeter_rh::classify::{classify_subset, SubsetClass};
use coxeter_rh::racg::{condition_ii_graph, enumerate_iaff, gamma_structure};
use coxeter_rh::relhyp::{CoreProvenance, Decision, PeripheralFamily, Status, VerificationReport};
use coxeter_rh::{Analyzer, CoxeterMatrix, GenSet, Order};

use crate::input::{generator, parse_subset, parse_types, InputDocument, Resolved};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Classifies `subset` (default `S`) and, without a subset, lists the
    /// distinguished subset families.
    Classify {
        subset: Option<String>,
        min_rank: usize,
    },
    Perp {
        subset: String,
    },
    Moussong,
    RelhypVerify {
        types: String,
    },
    RelhypMinimal,
    Decide,
    Maxparab {
        s0: String,
    },
    IsolatedFlats,
    Racg {
        min_pairs: usize,
    },
    Dot,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Perp { .. } => "perp",
            Command::Moussong => "moussong",
            Command::RelhypVerify { .. } => "relhyp-verify",
            Command::RelhypMinimal => "relhyp-minimal",
            Command::Decide => "decide",
            Command::Maxparab { .. } => "maxparab",
            Command::IsolatedFlats => "isolated-flats",
            Command::Racg { .. } => "racg",
            Command::Dot => "dot",
        }
    }
}

/// A computed report in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            render_json(&self.json)
        } else {
            self.text.clone()
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn run(command: &Command, doc: &InputDocument) -> Result<Report, CliError> {
    let input = doc.resolve()?;
    let m = &input.matrix;
    let mut report = match command {
        Command::Classify { subset, min_rank } => classify(m, subset.as_deref(), *min_rank)?,
        Command::Perp { subset } => perp(m, subset)?,
        Command::Moussong => moussong(m)?,
        Command::RelhypVerify { types } => {
            let types = parse_types(m, types)?;
            let family = Analyzer::new(m)?.verify_family(&types)?;
            family_report(m, &family)
        }
        Command::RelhypMinimal => family_report(m, &Analyzer::new(m)?.minimal_family()),
        Command::Decide => decide(m, &Analyzer::new(m)?.decide()),
        Command::Maxparab { s0 } => {
            let s0 = generator(m, s0)?;
            let mut r = family_report(m, &Analyzer::new(m)?.maxparab(s0)?);
            r.json["s0"] = json!(m.name(s0));
            r.text = format!("s0: {}\n{}", m.name(s0), r.text);
            r
        }
        Command::IsolatedFlats => isolated_flats(m)?,
        Command::Racg { min_pairs } => racg(&input, *min_pairs)?,
        Command::Dot => {
            let dot = dot(m);
            Report {
                json: json!({ "dot": dot }),
                text: dot,
            }
        }
    };
    if let Value::Object(map) = &mut report.json {
        map.insert("command".into(), json!(command.name()));
        map.insert("generators".into(), json!(m.names()));
    }
    Ok(report)
}

fn set(m: &CoxeterMatrix, j: GenSet) -> Value {
    Value::Array(j.iter().map(|i| json!(m.name(i))).collect())
}

fn sets(m: &CoxeterMatrix, js: &[GenSet]) -> Value {
    Value::Array(js.iter().map(|&j| set(m, j)).collect())
}

fn opt_set(m: &CoxeterMatrix, j: Option<GenSet>) -> Value {
    j.map_or(Value::Null, |j| set(m, j))
}

fn opt_pair(m: &CoxeterMatrix, p: Option<(GenSet, GenSet)>) -> Value {
    p.map_or(Value::Null, |(a, b)| json!([set(m, a), set(m, b)]))
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn list_text(m: &CoxeterMatrix, js: &[GenSet]) -> String {
    if js.is_empty() {
        return "(none)".into();
    }
    js.iter().map(|&j| m.format_set(j)).collect::<Vec<_>>().join(" ")
}

fn class_json(m: &CoxeterMatrix, j: GenSet, c: &SubsetClass) -> Value {
    let components: Vec<Value> = c
        .matched_components
        .iter()
        .map(|&(members, t)| json!({ "members": set(m, members), "type": t.to_string() }))
        .collect();
    json!({
        "subset": set(m, j),
        "spherical": c.spherical,
        "irreducible": c.irreducible,
        "irreducible_affine": c.irreducible_affine,
        "affine": c.affine,
        "euclidean": c.euclidean,
        "minimal_hyperbolic": c.minimal_hyperbolic,
        "matched_components": components,
    })
}

fn classify(m: &CoxeterMatrix, subset: Option<&str>, min_rank: usize) -> Result<Report, CliError> {
    let j = match subset {
        Some(s) => parse_subset(m, s)?,
        None => m.full(),
    };
    let c = classify_subset(m, j)?;
    let mut text = String::new();
    let types: Vec<String> = c
        .matched_components
        .iter()
        .map(|&(members, t)| format!("{t} on {}", m.format_set(members)))
        .collect();
    writeln!(text, "subset: {}", m.format_set(j)).unwrap();
    writeln!(
        text,
        "components: {}",
        if types.is_empty() {
            "(none)".into()
        } else {
            types.join(", ")
        }
    )
    .unwrap();
    for (name, value) in [
        ("spherical", c.spherical),
        ("irreducible", c.irreducible),
        ("irreducible affine", c.irreducible_affine),
        ("affine", c.affine),
        ("euclidean", c.euclidean),
        ("minimal hyperbolic", c.minimal_hyperbolic),
    ] {
        writeln!(text, "{name}: {value}").unwrap();
    }
    let mut json = class_json(m, j, &c);
    if subset.is_none() {
        let a = Analyzer::new(m)?;
        let atlas = a.atlas();
        let spherical = atlas.spherical_subsets();
        let affine = atlas.irreducible_affine_subsets(min_rank);
        let euclidean = atlas.maximal_euclidean_subsets();
        let minimal = atlas.minimal_hyperbolic_subsets()?;
        writeln!(text, "spherical subsets: {}", spherical.len()).unwrap();
        writeln!(
            text,
            "irreducible affine subsets (rank >= {min_rank}): {}",
            list_text(m, &affine)
        )
        .unwrap();
        writeln!(text, "maximal euclidean subsets: {}", list_text(m, &euclidean)).unwrap();
        writeln!(text, "minimal hyperbolic subsets: {}", list_text(m, &minimal)).unwrap();
        json["enumerations"] = json!({
            "spherical_subsets": sets(m, &spherical),
            "irreducible_affine_subsets": sets(m, &affine),
            "min_rank": min_rank,
            "maximal_euclidean_subsets": sets(m, &euclidean),
            "minimal_hyperbolic_subsets": sets(m, &minimal),
        });
    }
    Ok(Report { json, text })
}

fn perp(m: &CoxeterMatrix, subset: &str) -> Result<Report, CliError> {
    let j = parse_subset(m, subset)?;
    let p = m.perp(j)?;
    Ok(Report {
        json: json!({ "subset": set(m, j), "perp": set(m, p) }),
        text: format!("perp of {}: {}\n", m.format_set(j), m.format_set(p)),
    })
}

fn moussong(m: &CoxeterMatrix) -> Result<Report, CliError> {
    let v = Analyzer::new(m)?.moussong();
    let mut text = format!("hyperbolic: {}\n", v.hyperbolic);
    if let Some(j) = v.affine_witness {
        writeln!(text, "irreducible affine subset of rank >= 3: {}", m.format_set(j)).unwrap();
    }
    if let Some((j, p)) = v.perp_witness {
        writeln!(
            text,
            "non-spherical {} has non-spherical perp {}",
            m.format_set(j),
            m.format_set(p)
        )
        .unwrap();
    }
    Ok(Report {
        json: json!({
            "hyperbolic": v.hyperbolic,
            "affine_witness": opt_set(m, v.affine_witness),
            "perp_witness": opt_pair(m, v.perp_witness),
        }),
        text,
    })
}

fn provenance_json(m: &CoxeterMatrix, p: CoreProvenance) -> Value {
    match p {
        CoreProvenance::Affine(j) => json!({ "kind": "affine", "sets": [set(m, j)] }),
        CoreProvenance::Pair(a, b) => json!({ "kind": "pair", "sets": [set(m, a), set(m, b)] }),
    }
}

fn verification_json(m: &CoxeterMatrix, r: &VerificationReport) -> Value {
    let coverage: Vec<Value> = r
        .coverage
        .iter()
        .map(|c| {
            json!({
                "core": set(m, c.core.members),
                "provenance": provenance_json(m, c.core.provenance),
                "witness": opt_set(m, c.witness),
            })
        })
        .collect();
    let intersections: Vec<Value> = r
        .intersections
        .iter()
        .map(|c| {
            json!({
                "left": set(m, c.left),
                "right": set(m, c.right),
                "intersection": set(m, c.intersection),
                "spherical": c.spherical,
            })
        })
        .collect();
    json!({ "rh1": r.rh1, "rh2": r.rh2, "coverage": coverage, "intersections": intersections })
}

fn family_json(m: &CoxeterMatrix, f: &PeripheralFamily) -> Value {
    json!({
        "classes": sets(m, &f.classes),
        "verification": f.verification.as_ref().map_or(Value::Null, |r| verification_json(m, r)),
    })
}

fn family_text(m: &CoxeterMatrix, f: &PeripheralFamily) -> String {
    let mut text = format!("classes: {}\n", list_text(m, &f.classes));
    if let Some(r) = &f.verification {
        writeln!(text, "RH1: {}, RH2: {}", pass(r.rh1), pass(r.rh2)).unwrap();
        if let Some(core) = r.first_uncovered() {
            writeln!(text, "uncovered core: {}", core.describe(m)).unwrap();
        }
        if let Some(c) = r.first_rh2_violation() {
            writeln!(
                text,
                "non-spherical intersection: {} and {} meet in {}",
                m.format_set(c.left),
                m.format_set(c.right),
                m.format_set(c.intersection)
            )
            .unwrap();
        }
    }
    text
}

fn family_report(m: &CoxeterMatrix, f: &PeripheralFamily) -> Report {
    Report {
        json: family_json(m, f),
        text: family_text(m, f),
    }
}

fn decide(m: &CoxeterMatrix, d: &Decision) -> Report {
    let classes = match &d.status {
        Status::RelativelyHyperbolicProper(c) => sets(m, c),
        _ => Value::Null,
    };
    let mut text = format!("status: {}\n", d.status.label());
    text.push_str(&family_text(m, &d.minimal_family));
    for line in &d.details {
        writeln!(text, "  {line}").unwrap();
    }
    Report {
        json: json!({
            "status": d.status.label(),
            "peripheral_classes": classes,
            "minimal_family": family_json(m, &d.minimal_family),
            "details": d.details,
        }),
        text,
    }
}

fn isolated_flats(m: &CoxeterMatrix) -> Result<Report, CliError> {
    let a = Analyzer::new(m)?;
    let f = a.isolated_flats()?;
    let lemma = a.affine_lemma()?;
    let mut text = format!("isolated flats: {}\nvia: {}\n", f.holds, f.via.tag());
    if let Some((j, p)) = f.witness {
        writeln!(
            text,
            "minimal hyperbolic {} has non-spherical perp {}",
            m.format_set(j),
            m.format_set(p)
        )
        .unwrap();
    }
    if f.holds {
        text.push_str(&family_text(m, &f.family));
    }
    writeln!(
        text,
        "lemma: euclidean family valid {}, commuting pairs euclidean {}, minimal hyperbolic perps spherical {}",
        lemma.euclidean_family_valid, lemma.commuting_pairs_euclidean, lemma.minimal_hyperbolic_perps_spherical
    )
    .unwrap();
    Ok(Report {
        json: json!({
            "holds": f.holds,
            "via": f.via.tag(),
            "witness": opt_pair(m, f.witness),
            "family": family_json(m, &f.family),
            "lemma": {
                "euclidean_family_valid": lemma.euclidean_family_valid,
                "commuting_pairs_euclidean": lemma.commuting_pairs_euclidean,
                "minimal_hyperbolic_perps_spherical": lemma.minimal_hyperbolic_perps_spherical,
            },
        }),
        text,
    })
}

fn racg(input: &Resolved, min_pairs: usize) -> Result<Report, CliError> {
    let m = &input.matrix;
    let g = input
        .graph
        .as_ref()
        .ok_or_else(|| CliError::Usage("racg needs a graph or a right-angled matrix".into()))?;
    if min_pairs == 0 {
        return Err(CliError::Usage("--min-pairs must be at least 1".into()));
    }
    let cond = condition_ii_graph(g);
    let factor_names: Vec<String> = (1..=g.vertex_count()).map(|i| format!("P{i}")).collect();
    let joins = enumerate_iaff(g, min_pairs)?;
    let mut text = format!("condition (ii): {}\n", cond.holds);
    if let Some(w) = cond.witness {
        writeln!(text, "witness: {} has non-complete common neighbours", m.format_set(w)).unwrap();
    }
    writeln!(text, "join sets with at least {min_pairs} pairs: {}", joins.len()).unwrap();
    let mut entries = Vec::new();
    for e in &joins {
        let structure = gamma_structure(g, &e.join, Some(&factor_names))?.to_string();
        writeln!(
            text,
            "  {}{}: {structure}",
            m.format_set(e.join.members),
            if e.maximal { " (maximal)" } else { "" }
        )
        .unwrap();
        let pairs: Vec<Value> = e
            .join
            .pairs
            .iter()
            .map(|&(a, b)| json!([m.name(a), m.name(b)]))
            .collect();
        entries.push(json!({
            "members": set(m, e.join.members),
            "pairs": pairs,
            "maximal": e.maximal,
            "structure": structure,
        }));
    }
    let edges: Vec<Value> = g.edges().iter().map(|&(a, b)| json!([m.name(a), m.name(b)])).collect();
    Ok(Report {
        json: json!({
            "edges": edges,
            "condition_ii": { "holds": cond.holds, "witness": opt_set(m, cond.witness) },
            "min_pairs": min_pairs,
            "join_sets": entries,
        }),
        text,
    })
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Coxeter diagram in DOT: an edge per pair with `m ≥ 3`, labelled by `m`.
pub fn dot(m: &CoxeterMatrix) -> String {
    let mut out = String::from("graph coxeter {\n");
    for i in 0..m.n() {
        writeln!(out, "  {};", quote(m.name(i))).unwrap();
    }
    for i in 0..m.n() {
        for j in i + 1..m.n() {
            let label = match m.order(i, j) {
                Order::Finite(2) => continue,
                o => o.to_string(),
            };
            writeln!(
                out,
                "  {} -- {} [label=\"{label}\"];",
                quote(m.name(i)),
                quote(m.name(j))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
