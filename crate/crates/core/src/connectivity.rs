//! Rainbow paths (simple paths whose vertices carry every colour) and the
//! J^c- and chi-rainbow connectivity predicates built on them.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::colouring::{chromatic_number, convention_colouring, require_proper, Colouring};
use crate::error::{Error, Result};
use crate::graph::{decompose, Component, Graph};
use crate::jcolouring::{for_each_colouring, is_j_colouring, j_number, Requirement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowWitness {
    pub pair: (usize, usize),
    pub path: Vec<usize>,
    pub colours_seen: Vec<usize>,
}

impl RainbowWitness {
    /// Re-checks the witness against `g` and `c` without trusting the search.
    pub fn validate(&self, g: &Graph, c: &Colouring) -> bool {
        let path = &self.path;
        let Some((&first, &last)) = path.first().zip(path.last()) else {
            return false;
        };
        if (first, last) != self.pair || path.len() < 2 {
            return false;
        }
        if path.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut seen = vec![false; g.order()];
        for &v in path {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        if !path.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        let mut colours: Vec<usize> = path.iter().map(|&v| c.colour(v)).collect();
        colours.sort_unstable();
        colours.dedup();
        colours == self.colours_seen && colours == (1..=c.ell()).collect::<Vec<_>>()
    }

    fn relabel(mut self, parent: &[usize]) -> Self {
        self.pair = (parent[self.pair.0], parent[self.pair.1]);
        for v in &mut self.path {
            *v = parent[*v];
        }
        self
    }
}

struct PathSearch<'a> {
    adj: Vec<u64>,
    colour_bit: Vec<u128>,
    full: u128,
    target: usize,
    c: &'a Colouring,
}

impl PathSearch<'_> {
    fn new<'a>(g: &Graph, c: &'a Colouring, target: usize) -> Result<PathSearch<'a>> {
        Ok(PathSearch {
            adj: g.masks()?,
            colour_bit: (0..g.order()).map(|v| 1u128 << (c.colour(v) - 1)).collect(),
            full: c.full_mask(),
            target,
            c,
        })
    }

    /// Colours collectable from `at` through unvisited vertices, or `None`
    /// when the target is unreachable.
    fn reachable_colours(&self, at: usize, visited: u64) -> Option<u128> {
        let target_bit = 1u64 << self.target;
        let mut frontier = 1u64 << at;
        let mut region = frontier;
        let mut hits_target = false;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = self.adj[v];
            hits_target |= nb & target_bit != 0;
            let fresh = nb & !visited & !region & !target_bit;
            region |= fresh;
            frontier |= fresh;
        }
        if !hits_target {
            return None;
        }
        let mut colours = self.colour_bit[self.target];
        let mut rest = region & !(1u64 << at);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            colours |= self.colour_bit[v];
        }
        Some(colours)
    }

    fn promising(&self, at: usize, visited: u64, seen: u128) -> bool {
        self.reachable_colours(at, visited)
            .is_some_and(|c| c | seen == self.full)
    }

    fn first(&self, at: usize, visited: u64, seen: u128, path: &mut Vec<usize>) -> bool {
        let mut nb = self.adj[at] & !visited;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let now = seen | self.colour_bit[w];
            if w == self.target {
                if now == self.full {
                    path.push(w);
                    return true;
                }
                continue;
            }
            let visited = visited | (1 << w);
            if self.promising(w, visited, now) {
                path.push(w);
                if self.first(w, visited, now, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    fn shortest(&self, at: usize, visited: u64, seen: u128, len: usize, best: &mut usize) {
        let missing = self.full & !seen & !self.colour_bit[self.target];
        if len + missing.count_ones() as usize + 1 >= *best {
            return;
        }
        let mut nb = self.adj[at] & !visited;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let now = seen | self.colour_bit[w];
            if w == self.target {
                if now == self.full {
                    *best = (*best).min(len + 1);
                }
                continue;
            }
            let visited = visited | (1 << w);
            if self.promising(w, visited, now) {
                self.shortest(w, visited, now, len + 1, best);
            }
        }
    }

    fn witness(&self, u: usize, path: Vec<usize>) -> RainbowWitness {
        let mut colours: Vec<usize> = path.iter().map(|&v| self.c.colour(v)).collect();
        colours.sort_unstable();
        colours.dedup();
        RainbowWitness {
            pair: (u, self.target),
            path,
            colours_seen: colours,
        }
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

/// First rainbow `(u, v)`-path in depth-first order (neighbours ascending),
/// if any. Branches are cut when the target or a missing colour is no
/// longer reachable through unvisited vertices.
pub fn rainbow_path_exists(
    g: &Graph,
    c: &Colouring,
    u: usize,
    v: usize,
) -> Result<Option<RainbowWitness>> {
    require_proper(g, c)?;
    check_pair(g, u, v)?;
    Ok(find_path(g, c, u, v))
}

fn find_path(g: &Graph, c: &Colouring, u: usize, v: usize) -> Option<RainbowWitness> {
    let search = PathSearch::new(g, c, v).ok()?;
    let seen = search.colour_bit[u];
    let visited = 1u64 << u;
    let mut path = vec![u];
    if search.promising(u, visited, seen) && search.first(u, visited, seen, &mut path) {
        Some(search.witness(u, path))
    } else {
        None
    }
}

/// Edge count of the shortest rainbow path for every pair `u < v`; `None`
/// where no rainbow path exists.
pub fn min_rainbow_path_lengths(
    g: &Graph,
    c: &Colouring,
) -> Result<BTreeMap<(usize, usize), Option<usize>>> {
    require_proper(g, c)?;
    let mut out = BTreeMap::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            let search = PathSearch::new(g, c, v)?;
            let seen = search.colour_bit[u];
            let visited = 1u64 << u;
            let mut best = usize::MAX;
            if search.promising(u, visited, seen) {
                search.shortest(u, visited, seen, 0, &mut best);
            }
            out.insert((u, v), (best != usize::MAX).then_some(best));
        }
    }
    Ok(out)
}

/// Verdict for one component; vertex ids in `paths` and `failing_pair` are
/// parent ids, the colouring is component-local.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentConnectivity {
    pub connected: bool,
    pub colouring: Colouring,
    #[serde(serialize_with = "serialize_paths")]
    pub paths: Vec<RainbowWitness>,
    pub failing_pair: Option<(usize, usize)>,
    pub colourings_tried: usize,
    /// Set when the convention colouring was infeasible and a chromatic
    /// witness stood in for it.
    pub convention_fallback: bool,
}

fn serialize_paths<S: Serializer>(paths: &[RainbowWitness], s: S) -> std::result::Result<S::Ok, S::Error> {
    witness_map(paths).serialize(s)
}

/// `"u-v" -> path` map in pair order.
pub fn witness_map(paths: &[RainbowWitness]) -> BTreeMap<String, Vec<usize>> {
    paths
        .iter()
        .map(|w| (format!("{}-{}", w.pair.0, w.pair.1), w.path.clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub components: Vec<ComponentConnectivity>,
}

impl ConnectivityReport {
    fn from_components(components: Vec<ComponentConnectivity>) -> Self {
        ConnectivityReport {
            connected: components.iter().all(|c| c.connected),
            components,
        }
    }
}

/// All pairs of `comp` under `c`; stops at the first failing pair.
fn all_pairs(comp: &Component, c: &Colouring) -> (Vec<RainbowWitness>, Option<(usize, usize)>) {
    let g = &comp.graph;
    let mut paths = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            match find_path(g, c, u, v) {
                Some(w) => paths.push(w.relabel(&comp.parent)),
                None => return (paths, Some((comp.parent[u], comp.parent[v]))),
            }
        }
    }
    (paths, None)
}

fn first_connected<I>(comp: &Component, candidates: I) -> Option<ComponentConnectivity>
where
    I: IntoIterator<Item = Colouring>,
{
    let mut first_failure = None;
    let mut tried = 0;
    for c in candidates {
        tried += 1;
        let (paths, failing) = all_pairs(comp, &c);
        let verdict = ComponentConnectivity {
            connected: failing.is_none(),
            colouring: c,
            paths,
            failing_pair: failing,
            colourings_tried: tried,
            convention_fallback: false,
        };
        if verdict.connected {
            return Some(verdict);
        }
        first_failure.get_or_insert(verdict);
    }
    first_failure.map(|mut v| {
        v.colourings_tried = tried;
        v
    })
}

fn canonical_colourings(g: &Graph, k: usize, req: Option<Requirement>) -> Result<Vec<Colouring>> {
    let mut all = Vec::new();
    for_each_colouring(g, k, req, |c| {
        all.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

/// Lazily checks candidates in batches so exists-mode stops early on
/// success without materialising every colouring of a large component.
fn exists_connected(comp: &Component, k: usize, req: Option<Requirement>) -> Result<ComponentConnectivity> {
    let g = &comp.graph;
    let mut found: Option<ComponentConnectivity> = None;
    let mut first_failure: Option<ComponentConnectivity> = None;
    let mut tried = 0;
    for_each_colouring(g, k, req, |c| {
        tried += 1;
        let (paths, failing) = all_pairs(comp, &c);
        let verdict = ComponentConnectivity {
            connected: failing.is_none(),
            colouring: c,
            paths,
            failing_pair: failing,
            colourings_tried: tried,
            convention_fallback: false,
        };
        if verdict.connected {
            found = Some(verdict);
            ControlFlow::Break(())
        } else {
            first_failure.get_or_insert(verdict);
            ControlFlow::Continue(())
        }
    })?;
    found
        .or_else(|| {
            first_failure.map(|mut v| {
                v.colourings_tried = tried;
                v
            })
        })
        .ok_or(Error::NoJcColouring)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JcMode<'a> {
    /// Evaluate under this parent-graph colouring; each component's
    /// restriction must be a J-colouring of that component.
    Given(&'a Colouring),
    /// Some maximum J-colouring per component.
    Exists,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiMode {
    Convention,
    Exists,
}

impl ChiMode {
    pub fn name(self) -> &'static str {
        match self {
            ChiMode::Convention => "convention",
            ChiMode::Exists => "exists",
        }
    }
}

fn trivial(comp: &Component) -> ComponentConnectivity {
    debug_assert_eq!(comp.graph.order(), 1);
    ComponentConnectivity {
        connected: true,
        colouring: Colouring::new(vec![1]).expect("single colour"),
        paths: Vec::new(),
        failing_pair: None,
        colourings_tried: 0,
        convention_fallback: false,
    }
}

/// J^c-rainbow connectivity. Only defined for graphs admitting a
/// J^c-colouring; single-vertex components hold vacuously.
pub fn is_jc_rainbow_connected(g: &Graph, mode: JcMode<'_>) -> Result<ConnectivityReport> {
    g.require_nonempty()?;
    let parts = decompose(g);
    if let JcMode::Given(c) = mode {
        c.check_total(g)?;
    }
    let mut out = Vec::with_capacity(parts.len());
    for comp in parts.iter() {
        let verdict = match mode {
            JcMode::Given(c) => {
                let local = c.restrict(&comp.parent);
                if !is_j_colouring(&comp.graph, &local)? {
                    return Err(Error::InvalidColouring(format!(
                        "restriction to the component of vertex {} is not a J-colouring",
                        comp.parent[0]
                    )));
                }
                if comp.graph.order() == 1 {
                    trivial(comp)
                } else {
                    first_connected(comp, [local]).expect("one candidate")
                }
            }
            JcMode::Exists => {
                let j = j_number(&comp.graph)?.value.ok_or(Error::NoJcColouring)?;
                if comp.graph.order() == 1 {
                    trivial(comp)
                } else {
                    exists_connected(comp, j, Some(Requirement::AllVertices))?
                }
            }
        };
        out.push(verdict);
    }
    Ok(ConnectivityReport::from_components(out))
}

/// chi-rainbow connectivity, each component coloured with its own chromatic
/// number of colours.
pub fn is_chi_rainbow_connected(g: &Graph, mode: ChiMode) -> Result<ConnectivityReport> {
    g.require_nonempty()?;
    let parts = decompose(g);
    let mut out = Vec::with_capacity(parts.len());
    for comp in parts.iter() {
        if comp.graph.order() == 1 {
            out.push(trivial(comp));
            continue;
        }
        let chromatic = chromatic_number(&comp.graph)?;
        let verdict = match mode {
            ChiMode::Convention => match convention_colouring(&comp.graph, chromatic.chi) {
                Ok(c) => first_connected(comp, [c]).expect("one candidate"),
                Err(Error::ConventionInfeasible { .. }) => {
                    let mut v = first_connected(comp, [chromatic.witness]).expect("one candidate");
                    v.convention_fallback = true;
                    v
                }
                Err(e) => return Err(e),
            },
            ChiMode::Exists => exists_connected(comp, chromatic.chi, None)?,
        };
        out.push(verdict);
    }
    Ok(ConnectivityReport::from_components(out))
}

/// Every canonical maximum J-colouring of a connected graph, for callers
/// that need the full candidate set (e.g. given-mode sweeps in tests).
pub fn maximum_j_colourings(g: &Graph) -> Result<Vec<Colouring>> {
    match j_number(g)?.value {
        Some(j) => canonical_colourings(g, j, Some(Requirement::AllVertices)),
        None => Ok(Vec::new()),
    }
}
