//! Named graph families, closed-form J values for them, and an enumerator
//! of all non-isomorphic small graphs.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree as a parent array: vertex `i + 1` hangs off `parents[i] <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    parents: Vec<usize>,
}

impl Tree {
    pub fn from_parents(parents: Vec<usize>) -> Result<Self> {
        for (i, &p) in parents.iter().enumerate() {
            if p > i {
                return Err(Error::InvalidFamily(format!(
                    "tree parent {p} of vertex {} must be an earlier vertex",
                    i + 1
                )));
            }
        }
        Ok(Tree { parents })
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamily("path needs at least one vertex".into()));
        }
        Ok(Tree {
            parents: (0..n - 1).collect(),
        })
    }

    pub fn star(leaves: usize) -> Self {
        Tree {
            parents: vec![0; leaves],
        }
    }

    pub fn order(&self) -> usize {
        self.parents.len() + 1
    }

    pub fn graph(&self) -> Graph {
        let edges = self.parents.iter().enumerate().map(|(i, &p)| (p, i + 1));
        Graph::new(self.order(), edges).expect("parent arrays are valid trees")
    }

    /// Parent array of a labelled tree, rooted at vertex 0 and relabelled
    /// in breadth-first order.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        if !(g.is_connected() && g.is_acyclic()) {
            return Err(Error::InvalidFamily("graph is not a tree".into()));
        }
        let mut order = vec![0];
        let mut label = vec![usize::MAX; g.order()];
        label[0] = 0;
        let mut parents = Vec::new();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbours(v) {
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    order.push(w);
                    parents.push(label[v]);
                }
            }
        }
        Tree::from_parents(parents)
    }

    fn token(&self) -> String {
        if self.parents.is_empty() {
            "path:1".into()
        } else {
            let p: Vec<String> = self.parents.iter().map(usize::to_string).collect();
            format!("tree:{}", p.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Null(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Hub joined to a rim cycle of the given length.
    Wheel(usize),
    CompleteMultipartite(Vec<usize>),
    ForestUnion(Vec<Tree>),
    DisjointUnion(Vec<Family>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match self {
            Family::Null(n) | Family::Path(n) | Family::Complete(n) if *n == 0 => {
                Err(invalid(format!("{} needs at least one vertex", self.kind())))
            }
            Family::Cycle(n) if *n < 3 => Err(invalid("cycle length must be at least 3")),
            Family::Wheel(n) if *n < 3 => Err(invalid("wheel rim must be at least 3")),
            Family::CompleteMultipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                Err(invalid("multipartite part sizes must be at least 1"))
            }
            Family::ForestUnion(trees) if trees.is_empty() => {
                Err(invalid("forest needs at least one tree"))
            }
            Family::DisjointUnion(parts) => {
                if parts.is_empty() {
                    return Err(invalid("union needs at least one part"));
                }
                parts.iter().try_for_each(Family::validate)
            }
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Family::Null(_) => "null",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Wheel(_) => "wheel",
            Family::CompleteMultipartite(_) => "complete_multipartite",
            Family::ForestUnion(_) => "forest_union",
            Family::DisjointUnion(_) => "disjoint_union",
        }
    }

    /// Parses `kind param...`; union parts are separated by `+`, forest
    /// trees are `path:N`, `star:L` or `tree:p1,p2,...`.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let (&kind, params) = tokens
            .split_first()
            .ok_or_else(|| invalid("missing family kind"))?;
        let numbers = || -> Result<Vec<usize>> {
            params
                .iter()
                .map(|p| {
                    p.parse()
                        .map_err(|_| invalid(format!("invalid parameter `{p}`")))
                })
                .collect()
        };
        let single = || -> Result<usize> {
            match numbers()?.as_slice() {
                [n] => Ok(*n),
                _ => Err(invalid(format!("{kind} takes exactly one parameter"))),
            }
        };
        let family = match kind {
            "null" => Family::Null(single()?),
            "path" => Family::Path(single()?),
            "cycle" => Family::Cycle(single()?),
            "complete" => Family::Complete(single()?),
            "wheel" => Family::Wheel(single()?),
            "complete_multipartite" => Family::CompleteMultipartite(numbers()?),
            "forest_union" => Family::ForestUnion(
                params
                    .iter()
                    .map(|t| parse_tree(t))
                    .collect::<Result<_>>()?,
            ),
            "disjoint_union" => Family::DisjointUnion(
                params
                    .split(|&t| t == "+")
                    .map(Family::from_tokens)
                    .collect::<Result<_>>()?,
            ),
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        family.validate()?;
        Ok(family)
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        Ok(self.build())
    }

    fn build(&self) -> Graph {
        let from = |n, edges: Vec<(usize, usize)>| Graph::new(n, edges).expect("family edges");
        match self {
            Family::Null(n) => Graph::null(*n),
            Family::Path(n) => from(*n, (1..*n).map(|i| (i - 1, i)).collect()),
            Family::Cycle(n) => from(*n, (0..*n).map(|i| (i, (i + 1) % n)).collect()),
            Family::Complete(n) => from(
                *n,
                (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect(),
            ),
            Family::Wheel(rim) => {
                let mut edges: Vec<_> = (1..=*rim).map(|i| (0, i)).collect();
                edges.extend((1..=*rim).map(|i| (i, i % rim + 1)));
                from(rim + 1, edges)
            }
            Family::CompleteMultipartite(parts) => {
                let mut block = Vec::new();
                for (b, &size) in parts.iter().enumerate() {
                    block.extend(std::iter::repeat_n(b, size));
                }
                let n = block.len();
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| block[u] != block[v])
                    .collect();
                from(n, edges)
            }
            Family::ForestUnion(trees) => {
                let graphs: Vec<Graph> = trees.iter().map(Tree::graph).collect();
                Graph::disjoint_union(&graphs)
            }
            Family::DisjointUnion(parts) => {
                let graphs: Vec<Graph> = parts.iter().map(Family::build).collect();
                Graph::disjoint_union(&graphs)
            }
        }
    }

    /// Closed-form values, computed without the solver.
    pub fn oracle(&self) -> Result<FamilyOracle> {
        self.validate()?;
        Ok(self.closed_form())
    }

    fn closed_form(&self) -> FamilyOracle {
        use OracleValue::{Admits, NotAdmitting};
        match self {
            Family::Null(n) => FamilyOracle {
                j: (*n == 1).then_some(Admits(1)),
                j_star: (*n == 1).then_some(Admits(1)),
                jc: Some(Admits(1)),
                jstarc: Some(Admits(1)),
            },
            Family::Complete(n) => FamilyOracle::connected(Admits(*n)),
            Family::Path(n) => FamilyOracle::connected(Admits(if *n == 1 { 1 } else { 2 })),
            Family::Cycle(n) => FamilyOracle::connected(match (n % 2, n % 3) {
                (_, 0) => Admits(3),
                (0, _) => Admits(2),
                _ => NotAdmitting,
            }),
            Family::Wheel(rim) => FamilyOracle::connected(match (rim % 2, rim % 3) {
                (_, 0) => Admits(4),
                (0, _) => Admits(3),
                _ => NotAdmitting,
            }),
            Family::CompleteMultipartite(parts) if parts.len() == 1 => {
                Family::Null(parts[0]).closed_form()
            }
            Family::CompleteMultipartite(parts) => FamilyOracle::connected(Admits(parts.len())),
            Family::ForestUnion(trees) => {
                let values: Vec<usize> = trees
                    .iter()
                    .map(|t| if t.order() == 1 { 1 } else { 2 })
                    .collect();
                FamilyOracle {
                    j: (trees.len() == 1).then(|| Admits(values[0])),
                    j_star: None,
                    jc: values.iter().max().map(|&k| Admits(k)),
                    jstarc: None,
                }
            }
            Family::DisjointUnion(parts) => {
                let oracles: Vec<FamilyOracle> = parts.iter().map(Family::closed_form).collect();
                let combine = |pick: fn(&FamilyOracle) -> Option<OracleValue>| {
                    let values: Option<Vec<OracleValue>> = oracles.iter().map(pick).collect();
                    values.map(|vs| {
                        vs.into_iter()
                            .try_fold(0, |best, v| match v {
                                Admits(k) => Some(best.max(k)),
                                NotAdmitting => None,
                            })
                            .map_or(NotAdmitting, Admits)
                    })
                };
                FamilyOracle {
                    j: None,
                    j_star: None,
                    jc: combine(|o| o.jc),
                    jstarc: combine(|o| o.jstarc),
                }
            }
        }
    }
}

fn parse_tree(token: &str) -> Result<Tree> {
    let (kind, arg) = token
        .split_once(':')
        .ok_or_else(|| invalid(format!("tree token `{token}` needs kind:arg")))?;
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| invalid(format!("invalid tree parameter `{s}`")))
    };
    match kind {
        "path" => Tree::path(num(arg)?),
        "star" => Ok(Tree::star(num(arg)?)),
        "tree" => Tree::from_parents(arg.split(',').map(num).collect::<Result<_>>()?),
        _ => Err(invalid(format!("unknown tree kind `{kind}`"))),
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Family::Null(n) | Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Wheel(n) => {
                write!(f, "{} {n}", self.kind())
            }
            Family::CompleteMultipartite(parts) => write!(f, "{} {}", self.kind(), join(parts)),
            Family::ForestUnion(trees) => {
                let tokens: Vec<String> = trees.iter().map(Tree::token).collect();
                write!(f, "{} {}", self.kind(), tokens.join(" "))
            }
            Family::DisjointUnion(parts) => {
                let parts: Vec<String> = parts.iter().map(Family::to_string).collect();
                write!(f, "{} {}", self.kind(), parts.join(" + "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleValue {
    Admits(usize),
    NotAdmitting,
}

impl OracleValue {
    pub fn value(self) -> Option<usize> {
        match self {
            OracleValue::Admits(k) => Some(k),
            OracleValue::NotAdmitting => None,
        }
    }
}

/// Closed-form answers; `None` where no closed form is carried.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyOracle {
    pub j: Option<OracleValue>,
    pub j_star: Option<OracleValue>,
    pub jc: Option<OracleValue>,
    pub jstarc: Option<OracleValue>,
}

impl FamilyOracle {
    fn connected(j: OracleValue) -> Self {
        FamilyOracle {
            j: Some(j),
            j_star: None,
            jc: Some(j),
            jstarc: None,
        }
    }
}

/// Largest order the enumerator supports.
pub const ENUMERATION_LIMIT: usize = 8;

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    // Row-major upper triangle; (0,1) is the most significant pair.
    let (u, v) = (u.min(v), u.max(v));
    let before = u * (2 * n - u - 1) / 2 + (v - u - 1);
    n * (n - 1) / 2 - 1 - before
}

fn code_of(n: usize, edges: &[(usize, usize)], perm_pos: &[usize]) -> u64 {
    edges.iter().fold(0u64, |code, &(u, v)| {
        code | 1 << pair_index(n, perm_pos[u], perm_pos[v])
    })
}

fn graph_of_code(n: usize, code: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| code >> pair_index(n, u, v) & 1 == 1);
    Graph::new(n, edges).expect("code over valid pairs")
}

/// Ordered cells of a colour refinement seeded by degree. Both the cells
/// and their order are isomorphism invariants.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut colour: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut classes = {
        let mut c = colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbours(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

/// Canonical code: the minimum edge code over all labellings that respect
/// the refined cell order.
pub fn canonical_code(g: &Graph) -> u64 {
    fn permute(
        cells: &[Vec<usize>],
        cell: usize,
        slot: usize,
        next_pos: usize,
        used: &mut Vec<bool>,
        pos: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cell == cells.len() {
            visit(pos);
            return;
        }
        if slot == cells[cell].len() {
            permute(cells, cell + 1, 0, next_pos, used, pos, visit);
            return;
        }
        for i in 0..cells[cell].len() {
            let v = cells[cell][i];
            if used[v] {
                continue;
            }
            used[v] = true;
            pos[v] = next_pos;
            permute(cells, cell, slot + 1, next_pos + 1, used, pos, visit);
            used[v] = false;
        }
    }
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let cells = refined_cells(g);
    let mut best = u64::MAX;
    let mut used = vec![false; n];
    let mut pos = vec![0; n];
    permute(&cells, 0, 0, 0, &mut used, &mut pos, &mut |p| {
        best = best.min(code_of(n, g.edges(), p));
    });
    best
}

/// Canonical labelled representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_of_code(g.order(), canonical_code(g))
}

/// Non-isomorphic graphs of each order `1..=max_n`, each order sorted by
/// (edge count, canonical code). Built by extending every graph of order
/// `n - 1` with a new vertex joined to each possible neighbour subset.
pub fn enumerate_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if !(1..=ENUMERATION_LIMIT).contains(&max_n) {
        return Err(Error::OutOfRange {
            what: "order",
            value: max_n,
            lo: 1,
            hi: ENUMERATION_LIMIT,
        });
    }
    use rayon::prelude::*;
    let mut levels = vec![vec![Graph::null(1)]];
    for n in 2..=max_n {
        let previous = levels.last().expect("non-empty");
        let mut codes: Vec<u64> = previous
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..1 << (n - 1)).map(move |subset| {
                    let edges = g.edges().iter().copied().chain(
                        (0..n - 1)
                            .filter(move |&u| subset >> u & 1 == 1)
                            .map(move |u| (u, n - 1)),
                    );
                    canonical_code(&Graph::new(n, edges).expect("extension"))
                })
            })
            .collect::<HashSet<u64>>()
            .into_iter()
            .collect();
        codes.sort_by_key(|&c| (c.count_ones(), c));
        levels.push(codes.into_iter().map(|c| graph_of_code(n, c)).collect());
    }
    Ok(levels)
}

/// All non-isomorphic graphs on `n` vertices, optionally only connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut graphs = enumerate_graphs_up_to(n)?.pop().expect("level n");
    if connected_only {
        graphs.retain(Graph::is_connected);
    }
    Ok(graphs)
}

/// All non-isomorphic trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    let mut graphs = enumerate_graphs(n, true)?;
    graphs.retain(|g| g.size() + 1 == n);
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generates_examples() {
        let c6 = Family::Cycle(6).generate().unwrap();
        assert_eq!(c6.edges(), &[(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]);

        let w6 = Family::Wheel(5).generate().unwrap();
        assert_eq!(w6.order(), 6);
        assert_eq!(w6.degree(0), 5);
        assert!((1..=5).all(|v| w6.degree(v) == 3));

        let k22 = Family::CompleteMultipartite(vec![2, 2]).generate().unwrap();
        assert_eq!(canonical_form(&k22), canonical_form(&Family::Cycle(4).generate().unwrap()));
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(Family::Cycle(2).generate().is_err());
        assert!(Family::Wheel(2).generate().is_err());
        assert!(Family::CompleteMultipartite(vec![2, 0]).generate().is_err());
        assert!(Family::Null(0).oracle().is_err());
        assert!(Tree::from_parents(vec![0, 2]).is_err());
        assert!(Family::from_tokens(&["moebius", "3"]).is_err());
        assert!(Family::from_tokens(&["cycle"]).is_err());
        assert!(Family::from_tokens(&["cycle", "x"]).is_err());
    }

    #[test]
    fn token_round_trip() {
        for tokens in [
            "cycle 6",
            "wheel 10",
            "complete_multipartite 3 3 3",
            "forest_union path:1 tree:0,0,1",
            "disjoint_union complete 4 + null 2",
        ] {
            let parts: Vec<&str> = tokens.split(' ').collect();
            let f = Family::from_tokens(&parts).unwrap();
            assert_eq!(f.to_string(), tokens);
        }
    }

    #[test]
    fn oracle_examples() {
        use OracleValue::*;
        assert_eq!(Family::Cycle(5).oracle().unwrap().j, Some(NotAdmitting));
        assert_eq!(Family::Wheel(9).oracle().unwrap().j, Some(Admits(4)));
        assert_eq!(
            Family::CompleteMultipartite(vec![3, 3, 3]).oracle().unwrap().j,
            Some(Admits(3))
        );
        assert_eq!(Family::Cycle(6).oracle().unwrap().j, Some(Admits(3)));
        let union = Family::DisjointUnion(vec![Family::Cycle(5), Family::Complete(2)]);
        assert_eq!(union.oracle().unwrap().jc, Some(NotAdmitting));
        let union = Family::DisjointUnion(vec![Family::Complete(4), Family::Null(2)]);
        assert_eq!(union.oracle().unwrap().jc, Some(Admits(4)));
    }

    #[test]
    fn small_counts() {
        let levels = enumerate_graphs_up_to(4).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11]);
        assert_eq!(enumerate_graphs(4, true).unwrap().len(), 6);
        assert!(enumerate_graphs(0, false).is_err());
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn tree_of_graph_round_trips_shape() {
        let t = Tree::of_graph(&Family::Path(4).generate().unwrap()).unwrap();
        assert_eq!(canonical_form(&t.graph()), canonical_form(&Family::Path(4).generate().unwrap()));
        assert!(Tree::of_graph(&Family::Cycle(4).generate().unwrap()).is_err());
    }
}
