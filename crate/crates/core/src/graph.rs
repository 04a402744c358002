//! Simple undirected graphs, component decomposition and degree classes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by the bitmask-based exhaustive searches.
pub const MASK_LIMIT: usize = 64;

/// Finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Adjacency lists
/// are sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Validates and builds a graph. Duplicate edges (in either orientation)
    /// collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adjacency,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn null(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.n == 0 {
            Err(Error::EmptyGraph)
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Open-neighbourhood bitmasks, one per vertex.
    pub(crate) fn masks(&self) -> Result<Vec<u64>> {
        if self.n > MASK_LIMIT {
            return Err(Error::TooLarge {
                n: self.n,
                max: MASK_LIMIT,
            });
        }
        Ok(self
            .adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect())
    }

    /// Subgraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Disjoint union; vertices of later graphs are shifted past earlier ones.
    pub fn disjoint_union<'a, I>(parts: I) -> Graph
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let mut offset = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.n;
        }
        Graph::new(offset, edges).expect("union of valid graphs")
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && decompose(self).len() == 1
    }

    /// No cycles: a forest. The empty graph counts as acyclic.
    pub fn is_acyclic(&self) -> bool {
        self.edges.len() + component_count(self) == self.n
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether some (not necessarily induced) cycle has a length divisible
    /// by `modulus`. Exhaustive over simple cycles.
    pub fn has_cycle_length_multiple_of(&self, modulus: usize) -> bool {
        assert!(modulus > 0);
        // Each cycle is rooted at its smallest vertex and only visits larger ones.
        fn extend(
            g: &Graph,
            root: usize,
            at: usize,
            len: usize,
            on_path: &mut [bool],
            modulus: usize,
        ) -> bool {
            for &w in g.neighbours(at) {
                if w == root && len >= 3 && len.is_multiple_of(modulus) {
                    return true;
                }
                if w > root && !on_path[w] {
                    on_path[w] = true;
                    let found = extend(g, root, w, len + 1, on_path, modulus);
                    on_path[w] = false;
                    if found {
                        return true;
                    }
                }
            }
            false
        }
        let mut on_path = vec![false; self.n];
        (0..self.n).any(|root| {
            on_path[root] = true;
            let found = extend(self, root, root, 1, &mut on_path, modulus);
            on_path[root] = false;
            found
        })
    }
}

/// A maximal connected subgraph with its vertices' ids in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `parent[local] = parent vertex id`, ascending.
    pub parent: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
    /// Parent vertex id -> (component index, local id).
    pub vertex_map: Vec<(usize, usize)>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Component> {
        self.components.iter()
    }

    /// Rebuilds the parent graph from the components.
    pub fn reassemble(&self) -> Graph {
        let n = self.vertex_map.len();
        let edges = self.components.iter().flat_map(|c| {
            c.graph
                .edges()
                .iter()
                .map(move |&(u, v)| (c.parent[u], c.parent[v]))
        });
        Graph::new(n, edges).expect("components of a valid graph")
    }
}

fn component_labels(g: &Graph) -> (usize, Vec<usize>) {
    let mut label = vec![usize::MAX; g.n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..g.n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in g.neighbours(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (count, label)
}

fn component_count(g: &Graph) -> usize {
    component_labels(g).0
}

/// Splits `g` into its components, ordered by smallest parent vertex id.
pub fn decompose(g: &Graph) -> ComponentDecomposition {
    let (count, label) = component_labels(g);
    let mut members = vec![Vec::new(); count];
    let mut vertex_map = Vec::with_capacity(g.n);
    for v in 0..g.n {
        vertex_map.push((label[v], members[label[v]].len()));
        members[label[v]].push(v);
    }
    let components = members
        .into_iter()
        .map(|parent| Component {
            graph: g.induced(&parent),
            parent,
        })
        .collect();
    ComponentDecomposition {
        components,
        vertex_map,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Degree exactly 1.
    pub pendants: Vec<usize>,
    /// Degree at least 2.
    pub internal: Vec<usize>,
    /// Degree 0; neither pendant nor internal.
    pub isolated: Vec<usize>,
}

pub fn degree_profile(g: &Graph) -> Result<DegreeProfile> {
    g.require_nonempty()?;
    let mut profile = DegreeProfile {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        pendants: Vec::new(),
        internal: Vec::new(),
        isolated: Vec::new(),
    };
    for v in g.vertices() {
        match g.degree(v) {
            0 => profile.isolated.push(v),
            1 => profile.pendants.push(v),
            _ => profile.internal.push(v),
        }
    }
    Ok(profile)
}

pub(crate) fn is_internal(g: &Graph, v: usize) -> bool {
    g.degree(v) >= 2
}
