//! J- and J*-colourings of connected graphs and their per-component
//! (componenta) numbers for arbitrary graphs.
//!
//! A J-colouring is a proper colouring in which every closed neighbourhood
//! sees all colours; a J*-colouring asks this only of internal vertices
//! (degree at least 2). The J number is the largest colour count admitting
//! such a colouring; it lies between the chromatic number and
//! `min_degree + 1`, so the solver scans that window downwards.

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::{chromatic_number, enumerate_proper_colourings, first_conflict, Colouring};
use crate::error::{Error, Result};
use crate::graph::{decompose, is_internal, ComponentDecomposition, Graph};
use crate::rainbow::yields_unchecked;
use crate::search::ColourSearch;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JResult {
    pub admits: bool,
    pub value: Option<usize>,
    pub witness: Option<Colouring>,
}

impl JResult {
    pub fn none() -> Self {
        JResult {
            admits: false,
            value: None,
            witness: None,
        }
    }

    pub fn some(witness: Colouring) -> Self {
        JResult {
            admits: true,
            value: Some(witness.ell()),
            witness: Some(witness),
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    g.require_nonempty()?;
    let components = decompose(g).len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

fn satisfies(g: &Graph, c: &Colouring, must: impl Fn(usize) -> bool) -> Result<bool> {
    require_connected(g)?;
    c.check_total(g)?;
    Ok(first_conflict(g, c).is_none()
        && g.vertices()
            .filter(|&v| must(v))
            .all(|v| yields_unchecked(g, c, v)))
}

pub fn is_j_colouring(g: &Graph, c: &Colouring) -> Result<bool> {
    satisfies(g, c, |_| true)
}

pub fn is_j_star_colouring(g: &Graph, c: &Colouring) -> Result<bool> {
    satisfies(g, c, |v| is_internal(g, v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Requirement {
    AllVertices,
    InternalVertices,
}

impl Requirement {
    pub(crate) fn mask(self, g: &Graph) -> u64 {
        g.vertices()
            .filter(|&v| self == Requirement::AllVertices || is_internal(g, v))
            .fold(0, |m, v| m | (1 << v))
    }

    fn upper_bound(self, g: &Graph) -> usize {
        let bound = match self {
            Requirement::AllVertices => g.min_degree() + 1,
            Requirement::InternalVertices => g
                .vertices()
                .filter(|&v| is_internal(g, v))
                .map(|v| g.degree(v) + 1)
                .min()
                .unwrap_or(g.order()),
        };
        bound.min(g.max_degree() + 1).min(g.order())
    }
}

fn solve(g: &Graph, req: Requirement) -> Result<JResult> {
    require_connected(g)?;
    let adj = g.masks()?;
    let chi = chromatic_number(g)?.chi;
    let must = req.mask(g);
    for k in (chi..=req.upper_bound(g)).rev() {
        if let Some(a) = ColourSearch::new(&adj, k, must, true).first() {
            return Ok(JResult::some(Colouring::from_search(k, &a)));
        }
    }
    Ok(JResult::none())
}

/// `J(G)` of a connected graph.
pub fn j_number(g: &Graph) -> Result<JResult> {
    solve(g, Requirement::AllVertices)
}

/// `J*(G)` of a connected graph.
pub fn j_star_number(g: &Graph) -> Result<JResult> {
    solve(g, Requirement::InternalVertices)
}

/// Visits one representative per colour-permutation class of the
/// `k`-colourings meeting `req`, in lexicographic order.
pub(crate) fn for_each_colouring<F>(g: &Graph, k: usize, req: Option<Requirement>, mut f: F) -> Result<()>
where
    F: FnMut(Colouring) -> std::ops::ControlFlow<()>,
{
    let adj = g.masks()?;
    let must = req.map_or(0, |r| r.mask(g));
    let _ = ColourSearch::new(&adj, k, must, true).run(|a| f(Colouring::from_search(k, a)));
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentaResult {
    pub per_component: Vec<JResult>,
    pub jc: Option<usize>,
    pub equal_across_components: bool,
}

impl ComponentaResult {
    pub fn admits(&self) -> bool {
        self.jc.is_some()
    }

    /// Components whose value attains the maximum.
    pub fn argmax(&self) -> Vec<usize> {
        match self.jc {
            None => Vec::new(),
            Some(jc) => (0..self.per_component.len())
                .filter(|&i| self.per_component[i].value == Some(jc))
                .collect(),
        }
    }

    /// Parent-graph colouring with `jc` colours: each component keeps its
    /// witness, whose colours form a prefix of `1..=jc`.
    pub fn combined_witness(&self, parts: &ComponentDecomposition) -> Option<Colouring> {
        let jc = self.jc?;
        let mut assignment = vec![0; parts.vertex_map.len()];
        for (comp, result) in parts.iter().zip(&self.per_component) {
            let w = result.witness.as_ref()?;
            for (local, &v) in comp.parent.iter().enumerate() {
                assignment[v] = w.colour(local);
            }
        }
        Colouring::with_ell(jc, assignment).ok()
    }
}

fn componenta(g: &Graph, solver: fn(&Graph) -> Result<JResult>) -> Result<ComponentaResult> {
    g.require_nonempty()?;
    let parts = decompose(g);
    let per_component = parts
        .components
        .par_iter()
        .map(|c| solver(&c.graph))
        .collect::<Result<Vec<_>>>()?;
    let jc = if per_component.iter().all(|r| r.admits) {
        per_component.iter().filter_map(|r| r.value).max()
    } else {
        None
    };
    let equal_across_components = per_component
        .windows(2)
        .all(|w| w[0].value == w[1].value);
    Ok(ComponentaResult {
        per_component,
        jc,
        equal_across_components,
    })
}

/// `J^c(G)`: defined when every component admits a J-colouring.
pub fn jc_number(g: &Graph) -> Result<ComponentaResult> {
    componenta(g, j_number)
}

/// `J*^c(G)`.
pub fn jstarc_number(g: &Graph) -> Result<ComponentaResult> {
    componenta(g, j_star_number)
}

fn check_input<P>(g: &Graph, c: &Colouring, property: &P) -> Result<()>
where
    P: Fn(&Graph, &Colouring) -> bool,
{
    c.check_total(g)?;
    if first_conflict(g, c).is_some() || !property(g, c) {
        return Err(Error::PropertyFails);
    }
    Ok(())
}

fn first_with<P>(g: &Graph, k: usize, property: &P) -> Option<Colouring>
where
    P: Fn(&Graph, &Colouring) -> bool,
{
    enumerate_proper_colourings(g, k).find(|c| property(g, c))
}

/// Fewest-colour proper colouring still satisfying `property`: the
/// lexicographically first one at the smallest feasible count, or `c`
/// itself when nothing smaller exists.
pub fn minimise_colouring<P>(g: &Graph, c: &Colouring, property: P) -> Result<Colouring>
where
    P: Fn(&Graph, &Colouring) -> bool,
{
    check_input(g, c, &property)?;
    Ok((1..c.ell())
        .find_map(|k| first_with(g, k, &property))
        .unwrap_or_else(|| c.clone()))
}

/// Dual of [`minimise_colouring`]: most colours, searched from `n` down.
pub fn maximise_colouring<P>(g: &Graph, c: &Colouring, property: P) -> Result<Colouring>
where
    P: Fn(&Graph, &Colouring) -> bool,
{
    check_input(g, c, &property)?;
    Ok((c.ell() + 1..=g.order())
        .rev()
        .find_map(|k| first_with(g, k, &property))
        .unwrap_or_else(|| c.clone()))
}
