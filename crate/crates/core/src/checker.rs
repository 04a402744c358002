//! Empirical checks of the J-colouring results over finite graph corpora.
//!
//! Each claim is evaluated per graph to one of holds / vacuous (hypothesis
//! false) / skipped (a quantity could not be computed) / violated. Claims
//! whose quantification is ambiguous are run once per reading ("mode").
//! Verdicts never presume the claim: a violation is reported with a
//! re-verifiable witness.

use std::cell::OnceCell;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::colouring::{chromatic_number, Colouring};
use crate::connectivity::{
    is_chi_rainbow_connected, is_jc_rainbow_connected, ChiMode, ComponentConnectivity,
    ConnectivityReport, JcMode,
};
use crate::error::{Error, Result};
use crate::families::{enumerate_graphs_up_to, enumerate_trees};
use crate::graph::{decompose, ComponentDecomposition, Graph};
use crate::jcolouring::{for_each_colouring, jc_number, jstarc_number, ComponentaResult, Requirement};
use crate::rainbow::{rainbow_neighbourhood_number, RainbowMode, RainbowReport};

pub const SCHEMA: &str = "jcolour.check/1";
pub const MAX_WITNESSES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
    ];

    pub fn modes(self) -> &'static [&'static str] {
        match self {
            TheoremId::T2 => &["convention", "exists-max"],
            TheoremId::T7 | TheoremId::T8 => &["exists"],
            TheoremId::T9 => &["parse-each", "parse-some"],
            TheoremId::T10 => &["chi-convention", "chi-exists"],
            _ => &["default"],
        }
    }

    pub fn claim(self) -> &'static str {
        match self {
            TheoremId::T1 => "a J-colourable component has chi <= J",
            TheoremId::T2 => "J^c-colourable iff r_chi(G_i) = n_i for every component",
            TheoremId::T3 => {
                "J^c-colourable iff every component has a chi_i-colouring in which all vertices yield"
            }
            TheoremId::T4 => "acyclic of order >= 2 implies J^c < J*^c",
            TheoremId::T5 => "J*^c <= max component Delta + 1",
            TheoremId::T6 => "J*^c > J^c implies some J-maximal component has a pendant vertex",
            TheoremId::T7 => "J >= 3 and J-rainbow connected implies min degree >= 2",
            TheoremId::T8 => {
                "J^c-rainbow connected implies every pair has a path of length >= J(G_i) - 1"
            }
            TheoremId::T9 => {
                "J^c-rainbow connected iff some J(G_i) <= 2 or components with a 3k-cycle have no pendants"
            }
            TheoremId::T10 => {
                "J^c-colourable iff chi-rainbow connected iff J^c-rainbow connected"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem `{s}` (expected T1..T10)"))
    }
}

/// Per-graph result of one claim under one mode.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Holds,
    Vacuous,
    Skipped(String),
    Violated(Value),
}

impl Outcome {
    fn from_result(r: Result<Outcome>) -> Outcome {
        r.unwrap_or_else(|e| Outcome::Skipped(e.to_string()))
    }
}

/// Lazily computed invariants of one graph, shared by all claims.
struct Facts<'g> {
    g: &'g Graph,
    parts: ComponentDecomposition,
    chi: OnceCell<Result<Vec<usize>>>,
    jc: OnceCell<Result<ComponentaResult>>,
    jstarc: OnceCell<Result<ComponentaResult>>,
    j_rainbow: OnceCell<Result<Vec<Option<ComponentConnectivity>>>>,
    chi_rainbow: [OnceCell<Result<ConnectivityReport>>; 2],
    r_chi: [OnceCell<Result<Vec<RainbowReport>>>; 2],
    all_yield: OnceCell<Result<Vec<Option<Colouring>>>>,
}

fn cached<T>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl<'g> Facts<'g> {
    fn new(g: &'g Graph) -> Self {
        Facts {
            g,
            parts: decompose(g),
            chi: OnceCell::new(),
            jc: OnceCell::new(),
            jstarc: OnceCell::new(),
            j_rainbow: OnceCell::new(),
            chi_rainbow: [OnceCell::new(), OnceCell::new()],
            r_chi: [OnceCell::new(), OnceCell::new()],
            all_yield: OnceCell::new(),
        }
    }

    fn chi(&self) -> Result<&Vec<usize>> {
        cached(&self.chi, || {
            self.parts
                .iter()
                .map(|c| chromatic_number(&c.graph).map(|x| x.chi))
                .collect()
        })
    }

    fn jc(&self) -> Result<&ComponentaResult> {
        cached(&self.jc, || jc_number(self.g))
    }

    fn jstarc(&self) -> Result<&ComponentaResult> {
        cached(&self.jstarc, || jstarc_number(self.g))
    }

    /// Exists-mode J-rainbow connectivity per component; `None` for
    /// components without a J-colouring.
    fn j_rainbow(&self) -> Result<&Vec<Option<ComponentConnectivity>>> {
        cached(&self.j_rainbow, || {
            let jc = self.jc()?;
            self.parts
                .iter()
                .zip(&jc.per_component)
                .map(|(c, j)| {
                    if !j.admits {
                        return Ok(None);
                    }
                    let report = is_jc_rainbow_connected(&c.graph, JcMode::Exists)?;
                    Ok(report.components.into_iter().next())
                })
                .collect()
        })
    }

    fn jc_rainbow_connected(&self) -> Result<bool> {
        Ok(self
            .j_rainbow()?
            .iter()
            .all(|c| c.as_ref().is_some_and(|c| c.connected)))
    }

    fn chi_rainbow(&self, mode: ChiMode) -> Result<&ConnectivityReport> {
        let slot = match mode {
            ChiMode::Convention => 0,
            ChiMode::Exists => 1,
        };
        cached(&self.chi_rainbow[slot], || is_chi_rainbow_connected(self.g, mode))
    }

    fn r_chi(&self, mode: RainbowMode) -> Result<&Vec<RainbowReport>> {
        let slot = match mode {
            RainbowMode::Convention => 0,
            _ => 1,
        };
        cached(&self.r_chi[slot], || {
            self.parts
                .iter()
                .map(|c| rainbow_neighbourhood_number(&c.graph, mode))
                .collect()
        })
    }

    fn all_yield(&self) -> Result<&Vec<Option<Colouring>>> {
        cached(&self.all_yield, || {
            let chi = self.chi()?;
            self.parts
                .iter()
                .zip(chi)
                .map(|(c, &k)| {
                    let mut found = None;
                    for_each_colouring(&c.graph, k, Some(Requirement::AllVertices), |col| {
                        found = Some(col);
                        ControlFlow::Break(())
                    })?;
                    Ok(found)
                })
                .collect()
        })
    }

    fn has_pendant(&self, i: usize) -> bool {
        let g = &self.parts.components[i].graph;
        g.vertices().any(|v| g.degree(v) == 1)
    }
}

fn evaluate_with(f: &Facts<'_>, theorem: TheoremId, mode: &str) -> Result<Outcome> {
    match theorem {
        TheoremId::T1 => t1(f),
        TheoremId::T2 => t2(
            f,
            match mode {
                "convention" => RainbowMode::Convention,
                _ => RainbowMode::ExistsMax,
            },
        ),
        TheoremId::T3 => t3(f),
        TheoremId::T4 => t4(f),
        TheoremId::T5 => t5(f),
        TheoremId::T6 => t6(f),
        TheoremId::T7 => t7(f),
        TheoremId::T8 => t8(f),
        TheoremId::T9 => t9(f, mode == "parse-some"),
        TheoremId::T10 => t10(
            f,
            match mode {
                "chi-convention" => ChiMode::Convention,
                _ => ChiMode::Exists,
            },
        ),
    }
}

fn holds_if(ok: bool, explanation: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Violated(explanation())
    }
}

fn t1(f: &Facts<'_>) -> Result<Outcome> {
    let jc = f.jc()?;
    let chi = f.chi()?;
    if !jc.per_component.iter().any(|r| r.admits) {
        return Ok(Outcome::Vacuous);
    }
    let bad = jc
        .per_component
        .iter()
        .enumerate()
        .find(|(i, r)| r.value.is_some_and(|j| chi[*i] > j));
    Ok(match bad {
        None => Outcome::Holds,
        Some((i, r)) => Outcome::Violated(json!({
            "component": f.parts.components[i].parent,
            "chi": chi[i],
            "j": r.value,
            "j_witness": r.witness,
        })),
    })
}

fn t2(f: &Facts<'_>, mode: RainbowMode) -> Result<Outcome> {
    let admits = f.jc()?.admits();
    let reports = f.r_chi(mode)?;
    let all_yield = f
        .parts
        .iter()
        .zip(reports)
        .all(|(c, r)| r.r == c.graph.order());
    Ok(holds_if(admits == all_yield, || {
        json!({
            "admits_jc": admits,
            "all_vertices_yield": all_yield,
            "components": f.parts.iter().zip(reports).map(|(c, r)| json!({
                "vertices": c.parent,
                "n": c.graph.order(),
                "r_chi": r.r,
                "colouring": r.colouring_used,
            })).collect::<Vec<_>>(),
        })
    }))
}

fn t3(f: &Facts<'_>) -> Result<Outcome> {
    let admits = f.jc()?.admits();
    let found = f.all_yield()?;
    let rhs = found.iter().all(Option::is_some);
    Ok(holds_if(admits == rhs, || {
        json!({
            "admits_jc": admits,
            "chi_colouring_with_all_yielding": rhs,
            "per_component": found,
        })
    }))
}

fn t4(f: &Facts<'_>) -> Result<Outcome> {
    if !(f.g.is_acyclic() && f.g.order() >= 2) {
        return Ok(Outcome::Vacuous);
    }
    let jc = f.jc()?;
    let jstarc = f.jstarc()?;
    let (Some(a), Some(b)) = (jc.jc, jstarc.jc) else {
        return Ok(Outcome::Skipped("J^c or J*^c undefined".into()));
    };
    Ok(holds_if(a < b, || {
        json!({
            "jc": a,
            "jstarc": b,
            "j_per_component": jc.per_component.iter().map(|r| r.value).collect::<Vec<_>>(),
            "j_star_per_component": jstarc.per_component.iter().map(|r| r.value).collect::<Vec<_>>(),
            "j_star_witnesses": jstarc.per_component.iter().map(|r| &r.witness).collect::<Vec<_>>(),
        })
    }))
}

fn t5(f: &Facts<'_>) -> Result<Outcome> {
    let jstarc = f.jstarc()?;
    let Some(value) = jstarc.jc else {
        return Ok(Outcome::Vacuous);
    };
    let bound = f.g.max_degree() + 1;
    // Independent of the solver's own degree cap: search above the bound.
    let mut above = None;
    for (i, comp) in f.parts.iter().enumerate() {
        for k in bound + 1..=comp.graph.order() {
            for_each_colouring(&comp.graph, k, Some(Requirement::InternalVertices), |c| {
                above = Some((i, c));
                ControlFlow::Break(())
            })?;
            if above.is_some() {
                break;
            }
        }
    }
    if let Some((i, c)) = above {
        return Ok(Outcome::Violated(json!({
            "component": f.parts.components[i].parent,
            "max_degree_plus_one": bound,
            "j_star_colouring": c,
        })));
    }
    Ok(holds_if(value <= bound, || {
        json!({
            "jstarc": value,
            "max_degree_plus_one": bound,
            "j_star_witnesses": jstarc.per_component.iter().map(|r| &r.witness).collect::<Vec<_>>(),
        })
    }))
}

fn t6(f: &Facts<'_>) -> Result<Outcome> {
    let jc = f.jc()?;
    let jstarc = f.jstarc()?;
    let (Some(a), Some(b)) = (jc.jc, jstarc.jc) else {
        return Ok(Outcome::Vacuous);
    };
    if b <= a {
        return Ok(Outcome::Vacuous);
    }
    let argmax = jc.argmax();
    Ok(holds_if(argmax.iter().any(|&i| f.has_pendant(i)), || {
        json!({
            "jc": a,
            "jstarc": b,
            "j_maximal_components": argmax
                .iter()
                .map(|&i| &f.parts.components[i].parent)
                .collect::<Vec<_>>(),
        })
    }))
}

fn t7(f: &Facts<'_>) -> Result<Outcome> {
    let jc = f.jc()?;
    let rainbow = f.j_rainbow()?;
    let mut any = false;
    for (i, (r, conn)) in jc.per_component.iter().zip(rainbow).enumerate() {
        let connected = conn.as_ref().is_some_and(|c| c.connected);
        if r.value.is_some_and(|j| j >= 3) && connected {
            any = true;
            let g = &f.parts.components[i].graph;
            if g.min_degree() < 2 {
                return Ok(Outcome::Violated(json!({
                    "component": f.parts.components[i].parent,
                    "j": r.value,
                    "min_degree": g.min_degree(),
                    "colouring": conn.as_ref().map(|c| &c.colouring),
                })));
            }
        }
    }
    Ok(if any { Outcome::Holds } else { Outcome::Vacuous })
}

/// Whether some simple `(u, v)`-path has at least `len` edges.
fn has_path_at_least(g: &Graph, u: usize, v: usize, len: usize) -> bool {
    fn dfs(g: &Graph, at: usize, v: usize, depth: usize, len: usize, on: &mut [bool]) -> bool {
        for &w in g.neighbours(at) {
            if w == v {
                if depth + 1 >= len {
                    return true;
                }
                continue;
            }
            if !on[w] {
                on[w] = true;
                let found = dfs(g, w, v, depth + 1, len, on);
                on[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut on = vec![false; g.order()];
    on[u] = true;
    dfs(g, u, v, 0, len, &mut on)
}

fn t8(f: &Facts<'_>) -> Result<Outcome> {
    if !f.jc()?.admits() || !f.jc_rainbow_connected()? {
        return Ok(Outcome::Vacuous);
    }
    let jc = f.jc()?;
    for (i, comp) in f.parts.iter().enumerate() {
        let j = jc.per_component[i].value.expect("admits");
        let need = j.saturating_sub(1);
        let g = &comp.graph;
        for u in g.vertices() {
            for v in u + 1..g.order() {
                if !has_path_at_least(g, u, v, need) {
                    return Ok(Outcome::Violated(json!({
                        "component": comp.parent,
                        "pair": [comp.parent[u], comp.parent[v]],
                        "j": j,
                        "required_length": need,
                    })));
                }
            }
        }
    }
    Ok(Outcome::Holds)
}

fn t9(f: &Facts<'_>, some_parse: bool) -> Result<Outcome> {
    let jc = f.jc()?;
    if !jc.admits() {
        return Ok(Outcome::Vacuous);
    }
    let connected = f.jc_rainbow_connected()?;
    let rainbow = f.j_rainbow()?;
    let rows: Vec<(usize, bool, bool)> = f
        .parts
        .iter()
        .enumerate()
        .map(|(i, c)| {
            (
                jc.per_component[i].value.expect("admits"),
                c.graph.has_cycle_length_multiple_of(3),
                f.has_pendant(i),
            )
        })
        .collect();
    let clean = |&(_, cyc, pend): &(usize, bool, bool)| !cyc || !pend;
    let condition = if some_parse {
        rows.iter().any(|r| r.0 <= 2) || rows.iter().all(clean)
    } else {
        rows.iter().all(|r| r.0 <= 2 || clean(r))
    };
    Ok(holds_if(connected == condition, || {
        json!({
            "jc_rainbow_connected": connected,
            "condition": condition,
            "components": f.parts.iter().zip(&rows).zip(rainbow).map(|((c, r), conn)| json!({
                "vertices": c.parent,
                "j": r.0,
                "has_cycle_length_multiple_of_3": r.1,
                "has_pendant": r.2,
                "rainbow_connected": conn.as_ref().map(|x| x.connected),
                "failing_pair": conn.as_ref().and_then(|x| x.failing_pair),
                "colourings_tried": conn.as_ref().map(|x| x.colourings_tried),
            })).collect::<Vec<_>>(),
        })
    }))
}

fn t10(f: &Facts<'_>, mode: ChiMode) -> Result<Outcome> {
    let admits = f.jc()?.admits();
    let chi = f.chi_rainbow(mode)?;
    let jc_connected = admits && f.jc_rainbow_connected()?;
    Ok(holds_if(admits == chi.connected && jc_connected == chi.connected, || {
        json!({
            "admits_jc": admits,
            "chi_rainbow_connected": chi.connected,
            "jc_rainbow_connected": jc_connected,
            "chi_components": chi.components.iter().map(|c| json!({
                "colouring": c.colouring,
                "connected": c.connected,
                "failing_pair": c.failing_pair,
                "paths": crate::connectivity::witness_map(&c.paths),
            })).collect::<Vec<_>>(),
        })
    }))
}

/// Evaluates one claim on one graph.
pub fn evaluate(theorem: TheoremId, mode: &str, g: &Graph) -> Outcome {
    if g.is_empty() {
        return Outcome::Skipped(Error::EmptyGraph.to_string());
    }
    Outcome::from_result(evaluate_with(&Facts::new(g), theorem, mode))
}

/// Re-runs the claim on a witness graph from scratch and confirms both the
/// refutation and any rainbow paths it cites.
pub fn reverify(theorem: TheoremId, mode: &str, witness: &Witness) -> bool {
    let fresh = evaluate(theorem, mode, &witness.graph);
    if fresh != Outcome::Violated(witness.explanation.clone()) {
        return false;
    }
    if theorem == TheoremId::T10 {
        let chi_mode = if mode == "chi-convention" {
            ChiMode::Convention
        } else {
            ChiMode::Exists
        };
        let Ok(report) = is_chi_rainbow_connected(&witness.graph, chi_mode) else {
            return false;
        };
        let parts = decompose(&witness.graph);
        for (comp, conn) in parts.iter().zip(&report.components) {
            let mut local = vec![0; witness.graph.order()];
            for (i, &v) in comp.parent.iter().enumerate() {
                local[v] = i;
            }
            for w in &conn.paths {
                let mut w = w.clone();
                w.pair = (local[w.pair.0], local[w.pair.1]);
                w.path.iter_mut().for_each(|v| *v = local[*v]);
                if !w.validate(&comp.graph, &conn.colouring) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub graph: Graph,
    pub explanation: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub mode: String,
    pub claim: String,
    pub corpus: String,
    pub tested: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub description: String,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    pub fn new(description: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Corpus {
            description: description.into(),
            graphs,
        }
    }

    /// All non-isomorphic graphs of order `1..=max_n`, by order then size.
    pub fn all_graphs(max_n: usize, connected_only: bool) -> Result<Self> {
        let mut graphs: Vec<Graph> = enumerate_graphs_up_to(max_n)?.into_iter().flatten().collect();
        if connected_only {
            graphs.retain(Graph::is_connected);
        }
        let kind = if connected_only { "connected graphs" } else { "graphs" };
        Ok(Corpus::new(format!("all non-isomorphic {kind} n<={max_n}"), graphs))
    }

    pub fn trees(min_n: usize, max_n: usize) -> Result<Self> {
        let mut graphs = Vec::new();
        for n in min_n..=max_n {
            graphs.extend(enumerate_trees(n)?);
        }
        Ok(Corpus::new(
            format!("all non-isomorphic trees {min_n}<=n<={max_n}"),
            graphs,
        ))
    }
}

/// Every (theorem, mode) pair for the given theorems, in report order.
pub fn claims(theorems: &[TheoremId]) -> Vec<(TheoremId, &'static str)> {
    let mut ids = theorems.to_vec();
    ids.sort();
    ids.dedup();
    ids.into_iter()
        .flat_map(|t| t.modes().iter().map(move |&m| (t, m)))
        .collect()
}

/// Checks `theorems` over `corpus` on `workers` threads. Outcomes are
/// reduced in corpus order, so verdicts do not depend on scheduling.
pub fn check(theorems: &[TheoremId], corpus: &Corpus, workers: usize) -> Result<Vec<TheoremVerdict>> {
    let claims = claims(theorems);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidFamily(format!("thread pool: {e}")))?;
    let outcomes: Vec<Vec<Outcome>> = pool.install(|| {
        corpus
            .graphs
            .par_iter()
            .map(|g| {
                if g.is_empty() {
                    return vec![Outcome::Skipped(Error::EmptyGraph.to_string()); claims.len()];
                }
                let facts = Facts::new(g);
                claims
                    .iter()
                    .map(|&(t, m)| Outcome::from_result(evaluate_with(&facts, t, m)))
                    .collect()
            })
            .collect()
    });
    Ok(claims
        .iter()
        .enumerate()
        .map(|(k, &(theorem, mode))| {
            let mut verdict = TheoremVerdict {
                theorem_id: theorem,
                mode: mode.to_string(),
                claim: theorem.claim().to_string(),
                corpus: corpus.description.clone(),
                tested: 0,
                vacuous: 0,
                skipped: 0,
                status: Status::Holds,
                witnesses: Vec::new(),
            };
            for (g, row) in corpus.graphs.iter().zip(&outcomes) {
                match &row[k] {
                    Outcome::Holds => verdict.tested += 1,
                    Outcome::Vacuous => verdict.vacuous += 1,
                    Outcome::Skipped(_) => verdict.skipped += 1,
                    Outcome::Violated(explanation) => {
                        verdict.tested += 1;
                        verdict.status = Status::Counterexample;
                        if verdict.witnesses.len() < MAX_WITNESSES {
                            verdict.witnesses.push(Witness {
                                graph: g.clone(),
                                explanation: explanation.clone(),
                            });
                        }
                    }
                }
            }
            verdict
        })
        .collect())
}

/// Single-claim convenience over [`check`].
pub fn check_one(theorem: TheoremId, mode: &str, corpus: &Corpus) -> Result<TheoremVerdict> {
    check(&[theorem], corpus, 1)?
        .into_iter()
        .find(|v| v.mode == mode)
        .ok_or_else(|| Error::InvalidFamily(format!("{theorem} has no mode `{mode}`")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

pub fn report_value(verdicts: &[TheoremVerdict]) -> Value {
    let mut sorted: Vec<&TheoremVerdict> = verdicts.iter().collect();
    sorted.sort_by(|a, b| (a.theorem_id, &a.mode).cmp(&(b.theorem_id, &b.mode)));
    json!({ "schema": SCHEMA, "verdicts": sorted })
}

pub fn report(verdicts: &[TheoremVerdict], format: ReportFormat) -> String {
    let value = report_value(verdicts);
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("json value");
            s.push('\n');
            s
        }
        ReportFormat::Text => render_text(&value),
    }
}

/// Plain-text table rendered from the JSON report.
pub fn render_text(report: &Value) -> String {
    let empty = Vec::new();
    let rows = report["verdicts"].as_array().unwrap_or(&empty);
    let mut out = format!(
        "{:<5} {:<15} {:>7} {:>8} {:>8}  {}\n",
        "id", "mode", "tested", "vacuous", "skipped", "status"
    );
    for v in rows {
        out.push_str(&format!(
            "{:<5} {:<15} {:>7} {:>8} {:>8}  {}\n",
            v["theorem_id"].as_str().unwrap_or("?"),
            v["mode"].as_str().unwrap_or("?"),
            v["tested"].as_u64().unwrap_or(0),
            v["vacuous"].as_u64().unwrap_or(0),
            v["skipped"].as_u64().unwrap_or(0),
            v["status"].as_str().unwrap_or("?"),
        ));
    }
    for v in rows {
        for w in v["witnesses"].as_array().unwrap_or(&empty) {
            out.push_str(&format!(
                "\n{} [{}] counterexample: n={} edges={}\n  {}\n",
                v["theorem_id"].as_str().unwrap_or("?"),
                v["mode"].as_str().unwrap_or("?"),
                w["graph"]["n"],
                w["graph"]["edges"],
                w["explanation"],
            ));
        }
    }
    out
}
