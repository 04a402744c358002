//! The JAnalysis document: every invariant of one graph in a single
//! key-sorted JSON value, with a text rendering derived from it.

use serde_json::{json, Map, Value};

use crate::checker::{evaluate, Outcome, TheoremId};
use crate::colouring::{chromatic_number, Colouring};
use crate::connectivity::{
    is_chi_rainbow_connected, is_jc_rainbow_connected, ChiMode, ConnectivityReport, JcMode,
    RainbowWitness,
};
use crate::error::{Error, Result};
use crate::families::{Family, OracleValue};
use crate::graph::{decompose, degree_profile, Graph};
use crate::jcolouring::{jc_number, jstarc_number, JResult};
use crate::rainbow::{rainbow_neighbourhood_number, RainbowMode};

pub const SCHEMA: &str = "jcolour.analysis/1";
pub const NOT_ADMITTING: &str = "not admitting";
pub const CONVENTION_INFEASIBLE: &str = "convention infeasible";
pub const UNDEFINED: &str = "undefined";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub rainbow_modes: Vec<RainbowMode>,
    pub chi_modes: Vec<ChiMode>,
    pub theorems: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            rainbow_modes: RainbowMode::ALL.to_vec(),
            chi_modes: vec![ChiMode::Convention, ChiMode::Exists],
            theorems: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JAnalysis {
    pub document: Value,
    /// Whole-graph J^c-colouring when every component admits one.
    pub jc_colouring: Option<Colouring>,
    /// Whole-graph chromatic colouring, components coloured independently.
    pub chi_colouring: Colouring,
    /// Rainbow paths, in parent ids, under `jc_colouring` when present and
    /// otherwise under `chi_colouring`.
    pub witness_paths: Vec<RainbowWitness>,
}

impl JAnalysis {
    pub fn admits(&self) -> bool {
        self.jc_colouring.is_some()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.document).expect("json value");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        render_text(&self.document)
    }
}

fn j_value(r: &JResult) -> Value {
    match (&r.value, &r.witness) {
        (Some(k), Some(w)) => json!({ "value": k, "witness": w }),
        _ => json!(NOT_ADMITTING),
    }
}

fn oracle_value(v: Option<OracleValue>) -> Value {
    match v {
        Some(OracleValue::Admits(k)) => json!(k),
        Some(OracleValue::NotAdmitting) => json!(NOT_ADMITTING),
        None => Value::Null,
    }
}

fn outcome_value(o: Outcome) -> Value {
    match o {
        Outcome::Holds => json!("holds"),
        Outcome::Vacuous => json!("vacuous"),
        Outcome::Skipped(reason) => json!({ "skipped": reason }),
        Outcome::Violated(explanation) => json!({ "violated": explanation }),
    }
}

/// Glues per-component colourings into one parent-graph colouring whose
/// colour count is the largest component count.
fn combine(g: &Graph, parts: &[(&[usize], &Colouring)]) -> Colouring {
    let mut assignment = vec![0; g.order()];
    for (parent, c) in parts {
        for (i, &v) in parent.iter().enumerate() {
            assignment[v] = c.colour(i);
        }
    }
    Colouring::new(assignment).expect("components use colour prefixes")
}

fn connectivity_value(report: Result<ConnectivityReport>) -> Result<(Value, Option<ConnectivityReport>)> {
    match report {
        Ok(r) => Ok((
            json!({ "connected": r.connected, "components": r.components }),
            Some(r),
        )),
        Err(Error::NoJcColouring) => Ok((json!({ "connected": UNDEFINED }), None)),
        Err(e) => Err(e),
    }
}

/// Analyses `g`. Empty graphs are rejected.
pub fn analyze(g: &Graph, options: &AnalysisOptions) -> Result<JAnalysis> {
    g.require_nonempty()?;
    let parts = decompose(g);
    let jc = jc_number(g)?;
    let jstarc = jstarc_number(g)?;

    let mut chi_parts = Vec::with_capacity(parts.len());
    let mut components = Vec::with_capacity(parts.len());
    for (i, comp) in parts.iter().enumerate() {
        let chromatic = chromatic_number(&comp.graph)?;
        let profile = degree_profile(&comp.graph)?;
        let mut r_chi = Map::new();
        for &mode in &options.rainbow_modes {
            let v = match rainbow_neighbourhood_number(&comp.graph, mode) {
                Ok(r) => json!({
                    "value": r.r,
                    "yielding": r.yielding,
                    "colouring": r.colouring_used,
                }),
                Err(Error::ConventionInfeasible { .. }) => json!(CONVENTION_INFEASIBLE),
                Err(e) => return Err(e),
            };
            r_chi.insert(mode.name().to_string(), v);
        }
        components.push(json!({
            "index": i,
            "vertices": comp.parent,
            "n": comp.graph.order(),
            "m": comp.graph.size(),
            "degrees": profile,
            "chi": { "value": chromatic.chi, "witness": chromatic.witness },
            "r_chi": r_chi,
            "j": j_value(&jc.per_component[i]),
            "j_star": j_value(&jstarc.per_component[i]),
        }));
        chi_parts.push(chromatic.witness);
    }
    let chi_colouring = combine(
        g,
        &parts
            .iter()
            .zip(&chi_parts)
            .map(|(c, w)| (c.parent.as_slice(), w))
            .collect::<Vec<_>>(),
    );
    let jc_colouring = jc.combined_witness(&parts);

    let mut connectivity = Map::new();
    let (jc_conn, _) = connectivity_value(is_jc_rainbow_connected(g, JcMode::Exists))?;
    connectivity.insert("jc-exists".into(), jc_conn);
    let mut witness_paths = None;
    if let Some(c) = &jc_colouring {
        let (v, report) = connectivity_value(is_jc_rainbow_connected(g, JcMode::Given(c)))?;
        connectivity.insert("jc-given".into(), v);
        witness_paths = report.map(|r| r.components.into_iter().flat_map(|c| c.paths).collect());
    }
    for &mode in &options.chi_modes {
        let (v, _) = connectivity_value(is_chi_rainbow_connected(g, mode))?;
        connectivity.insert(format!("chi-{}", mode.name()), v);
    }
    let witness_paths = match witness_paths {
        Some(p) => p,
        None => paths_under(g, &chi_colouring)?,
    };

    let whole = |r: &crate::jcolouring::ComponentaResult| match r.jc {
        Some(k) => json!(k),
        None => json!(NOT_ADMITTING),
    };
    let mut doc = json!({
        "schema": SCHEMA,
        "graph": {
            "n": g.order(),
            "m": g.size(),
            "components": parts.len(),
            "edges": g.edges(),
        },
        "components": components,
        "jc": whole(&jc),
        "jstarc": whole(&jstarc),
        "jc_colouring": jc_colouring,
        "equal_across_components": jc.equal_across_components,
        "connectivity": connectivity,
    });
    if options.theorems {
        let mut theorems = Map::new();
        for t in TheoremId::ALL {
            for &mode in t.modes() {
                theorems.insert(format!("{t}/{mode}"), outcome_value(evaluate(t, mode, g)));
            }
        }
        doc["theorems"] = Value::Object(theorems);
    }
    Ok(JAnalysis {
        document: doc,
        jc_colouring,
        chi_colouring,
        witness_paths,
    })
}

/// Rainbow paths for every connected pair under `c`, in parent ids.
fn paths_under(g: &Graph, c: &Colouring) -> Result<Vec<RainbowWitness>> {
    let mut out = Vec::new();
    for comp in decompose(g).iter() {
        let local = c.restrict(&comp.parent);
        for u in comp.graph.vertices() {
            for v in u + 1..comp.graph.order() {
                if let Some(mut w) = crate::rainbow_path_exists(&comp.graph, &local, u, v)? {
                    w.pair = (comp.parent[u], comp.parent[v]);
                    w.path.iter_mut().for_each(|x| *x = comp.parent[*x]);
                    out.push(w);
                }
            }
        }
    }
    Ok(out)
}

/// [`analyze`] plus the closed-form family answers, under a `family` key.
pub fn analyze_family(family: &Family, options: &AnalysisOptions) -> Result<JAnalysis> {
    let g = family.generate()?;
    let mut a = analyze(&g, options)?;
    let oracle = family.oracle()?;
    a.document["family"] = json!({
        "spec": family.to_string(),
        "kind": family.kind(),
        "oracle": {
            "j": oracle_value(oracle.j),
            "j_star": oracle_value(oracle.j_star),
            "jc": oracle_value(oracle.jc),
            "jstarc": oracle_value(oracle.jstarc),
        },
    });
    Ok(a)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.get("value").map(scalar).unwrap_or_else(|| v.to_string()),
        other => other.to_string(),
    }
}

/// Plain-text summary rendered from an analysis document.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let g = &doc["graph"];
    if let Some(f) = doc.get("family") {
        out.push_str(&format!("family: {}\n", scalar(&f["spec"])));
    }
    out.push_str(&format!(
        "graph: n={} m={} components={}\n",
        g["n"], g["m"], g["components"]
    ));
    let empty = Vec::new();
    for c in doc["components"].as_array().unwrap_or(&empty) {
        out.push_str(&format!(
            "component {} {}: n={} m={} chi={} J={} J*={}\n",
            c["index"],
            c["vertices"],
            c["n"],
            c["m"],
            scalar(&c["chi"]),
            scalar(&c["j"]),
            scalar(&c["j_star"]),
        ));
        if let Some(r) = c["r_chi"].as_object() {
            let parts: Vec<String> = r.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
            out.push_str(&format!("  r_chi: {}\n", parts.join(" ")));
        }
    }
    match &doc["jc"] {
        Value::String(_) => out.push_str("J^c: not admitting (no J-colouring)\n"),
        v => out.push_str(&format!("J^c: {v}\n")),
    }
    out.push_str(&format!("J*^c: {}\n", scalar(&doc["jstarc"])));
    if let Some(conn) = doc["connectivity"].as_object() {
        let parts: Vec<String> = conn
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(&v["connected"])))
            .collect();
        out.push_str(&format!("rainbow connected: {}\n", parts.join(" ")));
    }
    if let Some(t) = doc.get("theorems").and_then(Value::as_object) {
        for (k, v) in t {
            let verdict = match v {
                Value::String(s) => s.clone(),
                Value::Object(m) => m.keys().next().cloned().unwrap_or_default(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {verdict}\n"));
        }
    }
    out
}
