//! Vertex colourings, exact chromatic number and the greedy-maximal
//! (rainbow neighbourhood convention) colouring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::ColourSearch;

/// Total map from vertices to colours `1..=ell`, using every colour.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColouring", into = "RawColouring")]
pub struct Colouring {
    ell: usize,
    assignment: Vec<usize>,
    theta: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawColouring {
    ell: usize,
    assignment: Vec<usize>,
}

impl TryFrom<RawColouring> for Colouring {
    type Error = Error;

    fn try_from(raw: RawColouring) -> Result<Self> {
        Colouring::with_ell(raw.ell, raw.assignment)
    }
}

impl From<Colouring> for RawColouring {
    fn from(c: Colouring) -> Self {
        RawColouring {
            ell: c.ell,
            assignment: c.assignment,
        }
    }
}

impl Colouring {
    /// Colour count is the largest colour used.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let ell = assignment.iter().copied().max().unwrap_or(0);
        Self::with_ell(ell, assignment)
    }

    pub fn with_ell(ell: usize, assignment: Vec<usize>) -> Result<Self> {
        let mut theta = vec![0; ell];
        for (v, &c) in assignment.iter().enumerate() {
            if c == 0 || c > ell {
                return Err(Error::InvalidColouring(format!(
                    "vertex {v} has colour {c} outside 1..={ell}"
                )));
            }
            theta[c - 1] += 1;
        }
        if let Some(j) = theta.iter().position(|&t| t == 0) {
            return Err(Error::InvalidColouring(format!(
                "colour {} of {ell} is unused",
                j + 1
            )));
        }
        Ok(Colouring {
            ell,
            assignment,
            theta,
        })
    }

    pub(crate) fn from_search(k: usize, assignment: &[u8]) -> Self {
        Self::with_ell(k, assignment.iter().map(|&c| c as usize).collect())
            .expect("search yields surjective colourings")
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Colour of `v` (its subscript under the forward colouring).
    pub fn colour(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Subscript of `v` under the inverse colouring.
    pub fn inverse_index(&self, v: usize) -> usize {
        self.ell - (self.assignment[v] - 1)
    }

    /// Per-colour vertex counts; `theta()[j - 1]` counts colour `j`.
    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    /// Vertices of each colour class, in colour order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.ell];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    /// Bitmask of colours (bit `j - 1` for colour `j`) over `vertices`.
    pub(crate) fn colour_mask<I: IntoIterator<Item = usize>>(&self, vertices: I) -> u128 {
        vertices
            .into_iter()
            .fold(0u128, |m, v| m | (1u128 << (self.assignment[v] - 1)))
    }

    pub(crate) fn full_mask(&self) -> u128 {
        if self.ell >= 128 {
            u128::MAX
        } else {
            (1u128 << self.ell) - 1
        }
    }

    pub(crate) fn check_total(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.order() {
            return Err(Error::PartialColouring {
                expected: g.order(),
                got: self.assignment.len(),
            });
        }
        if self.ell > 127 {
            return Err(Error::InvalidColouring(format!(
                "{} colours exceed the supported 127",
                self.ell
            )));
        }
        Ok(())
    }

    /// Restriction to `vertices` (parent ids), colours relabelled onto
    /// `1..=k` keeping their relative order.
    pub fn restrict(&self, vertices: &[usize]) -> Colouring {
        let mut used: Vec<usize> = vertices.iter().map(|&v| self.assignment[v]).collect();
        used.sort_unstable();
        used.dedup();
        let assignment = vertices
            .iter()
            .map(|&v| used.binary_search(&self.assignment[v]).unwrap() + 1)
            .collect();
        Colouring::with_ell(used.len(), assignment).expect("restriction is surjective")
    }
}

pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    c.check_total(g)?;
    Ok(first_conflict(g, c).is_none())
}

pub(crate) fn first_conflict(g: &Graph, c: &Colouring) -> Option<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| c.colour(u) == c.colour(v))
}

pub(crate) fn require_proper(g: &Graph, c: &Colouring) -> Result<()> {
    c.check_total(g)?;
    match first_conflict(g, c) {
        Some((u, v)) => Err(Error::ImproperColouring(u, v)),
        None => Ok(()),
    }
}

/// Relabelling `c_j -> c_{ell - (j - 1)}`.
pub fn inverse_colouring(c: &Colouring) -> Colouring {
    let assignment = c
        .assignment
        .iter()
        .map(|&j| c.ell - (j - 1))
        .collect();
    Colouring::with_ell(c.ell, assignment).expect("inverse keeps every colour")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chromatic {
    pub chi: usize,
    pub witness: Colouring,
}

/// Exact chromatic number: clique lower bound, first-fit upper bound and
/// backtracking over the gap.
pub fn chromatic_number(g: &Graph) -> Result<Chromatic> {
    g.require_nonempty()?;
    let adj = g.masks()?;
    let greedy = first_fit(g);
    let lower = clique_number(&adj);
    for k in lower..greedy.ell() {
        if let Some(a) = ColourSearch::new(&adj, k, 0, true).first() {
            return Ok(Chromatic {
                chi: k,
                witness: Colouring::from_search(k, &a),
            });
        }
    }
    Ok(Chromatic {
        chi: greedy.ell(),
        witness: greedy,
    })
}

fn first_fit(g: &Graph) -> Colouring {
    let mut colour = vec![0usize; g.order()];
    for v in g.vertices() {
        let mut taken: Vec<usize> = g
            .neighbours(v)
            .iter()
            .map(|&w| colour[w])
            .filter(|&c| c > 0)
            .collect();
        taken.sort_unstable();
        taken.dedup();
        colour[v] = taken
            .iter()
            .enumerate()
            .find(|&(i, &c)| c != i + 1)
            .map_or(taken.len() + 1, |(i, _)| i + 1);
    }
    Colouring::new(colour).expect("first-fit uses a prefix of colours")
}

pub(crate) fn clique_number(adj: &[u64]) -> usize {
    fn grow(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        grow(adj, size + 1, cand & adj[v], best);
        grow(adj, size, cand & !(1 << v), best);
    }
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut best = 0;
    grow(adj, 0, all, &mut best);
    best
}

/// Maximum independent set inside `candidates`; among maximum sets the
/// lexicographically smallest sorted vertex list.
pub(crate) fn maximum_independent_set(adj: &[u64], candidates: u64) -> u64 {
    fn branch(adj: &[u64], cand: u64, current: u64, best: &mut (u32, u64)) {
        if cand == 0 {
            if current.count_ones() > best.0 {
                *best = (current.count_ones(), current);
            }
            return;
        }
        if current.count_ones() + cand.count_ones() <= best.0 {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        branch(adj, cand & !bit & !adj[v], current | bit, best);
        branch(adj, cand & !bit, current, best);
    }
    let mut best = (0, 0);
    branch(adj, candidates, 0, &mut best);
    best.1
}

/// Greedy-maximal colouring: colour 1 on a maximum independent set, colour
/// 2 on a maximum independent set of what is left, and so on; the last
/// class takes the remainder, which must be independent and non-empty.
pub fn convention_colouring(g: &Graph, ell: usize) -> Result<Colouring> {
    g.require_nonempty()?;
    if ell == 0 {
        return Err(Error::ConventionInfeasible { ell });
    }
    let adj = g.masks()?;
    let mut remaining = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    let mut assignment = vec![0usize; g.order()];
    for j in 1..ell {
        if remaining == 0 {
            return Err(Error::ConventionInfeasible { ell });
        }
        let class = maximum_independent_set(&adj, remaining);
        paint(&mut assignment, class, j);
        remaining &= !class;
    }
    let independent = bits(remaining).all(|v| adj[v] & remaining == 0);
    if remaining == 0 || !independent {
        return Err(Error::ConventionInfeasible { ell });
    }
    paint(&mut assignment, remaining, ell);
    Colouring::with_ell(ell, assignment)
}

fn paint(assignment: &mut [usize], class: u64, colour: usize) {
    for v in bits(class) {
        assignment[v] = colour;
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Every surjective proper `k`-colouring of `g`, each exactly once, in
/// lexicographic order of assignment vectors.
pub fn enumerate_proper_colourings(g: &Graph, k: usize) -> ProperColourings {
    ProperColourings {
        neighbours: g.vertices().map(|v| g.neighbours(v).to_vec()).collect(),
        k,
        assign: vec![0; g.order()],
        counts: vec![0; k + 1],
        used: 0,
        cursor: Cursor::Fresh,
    }
}

enum Cursor {
    Fresh,
    Resume,
    Done,
}

pub struct ProperColourings {
    neighbours: Vec<Vec<usize>>,
    k: usize,
    assign: Vec<usize>,
    counts: Vec<usize>,
    used: usize,
    cursor: Cursor,
}

impl ProperColourings {
    fn unset(&mut self, i: usize) {
        let c = self.assign[i];
        if c > 0 {
            self.counts[c] -= 1;
            if self.counts[c] == 0 {
                self.used -= 1;
            }
            self.assign[i] = 0;
        }
    }

    fn admissible(&self, i: usize, c: usize) -> bool {
        let n = self.assign.len();
        if self.neighbours[i]
            .iter()
            .any(|&w| w < i && self.assign[w] == c)
        {
            return false;
        }
        let used_after = self.used + usize::from(self.counts[c] == 0);
        self.k - used_after < n - i
    }
}

impl Iterator for ProperColourings {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        let n = self.assign.len();
        let mut i = match self.cursor {
            Cursor::Done => return None,
            _ if n == 0 || self.k == 0 || self.k > n => {
                self.cursor = Cursor::Done;
                return None;
            }
            Cursor::Fresh => 0,
            Cursor::Resume => n - 1,
        };
        loop {
            let start = self.assign[i] + 1;
            self.unset(i);
            match (start..=self.k).find(|&c| self.admissible(i, c)) {
                Some(c) => {
                    self.assign[i] = c;
                    self.counts[c] += 1;
                    if self.counts[c] == 1 {
                        self.used += 1;
                    }
                    if i + 1 == n {
                        self.cursor = Cursor::Resume;
                        return Some(
                            Colouring::with_ell(self.k, self.assign.clone())
                                .expect("enumeration keeps surjectivity"),
                        );
                    }
                    i += 1;
                }
                None => {
                    if i == 0 {
                        self.cursor = Cursor::Done;
                        return None;
                    }
                    i -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::new(10, e).unwrap()
    }

    fn col(a: &[usize]) -> Colouring {
        Colouring::new(a.to_vec()).unwrap()
    }

    /// Independent subset scan: smallest k with some proper k-colouring,
    /// trying every assignment in `k^n`.
    fn brute_chromatic(g: &Graph) -> usize {
        for k in 1..=g.order() {
            let total = k.pow(g.order() as u32);
            for code in 0..total {
                let mut x = code;
                let a: Vec<usize> = (0..g.order())
                    .map(|_| {
                        let c = x % k;
                        x /= k;
                        c
                    })
                    .collect();
                if g.edges().iter().all(|&(u, v)| a[u] != a[v]) {
                    return k;
                }
            }
        }
        unreachable!()
    }

    /// Exhaustive subset oracle for the lexicographically smallest maximum
    /// independent set of the subgraph induced on `within`.
    fn brute_mis(g: &Graph, within: &[usize]) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for subset in 0u64..(1 << within.len()) {
            let set: Vec<usize> = (0..within.len())
                .filter(|i| subset >> i & 1 == 1)
                .map(|i| within[i])
                .collect();
            let independent = set
                .iter()
                .all(|&u| set.iter().all(|&v| !g.has_edge(u, v)));
            if !independent {
                continue;
            }
            best = match best {
                Some(b) if b.len() > set.len() || (b.len() == set.len() && b <= set) => Some(b),
                _ => Some(set),
            };
        }
        best.unwrap()
    }

    #[test]
    fn properness() {
        assert!(is_proper(&cycle(4), &col(&[1, 2, 1, 2])).unwrap());
        assert!(!is_proper(&complete(3), &col(&[1, 2, 1])).unwrap());
        assert!(is_proper(&cycle(6), &col(&[1, 2, 3, 1, 2, 3])).unwrap());
        assert!(matches!(
            is_proper(&cycle(4), &col(&[1, 2, 1])),
            Err(Error::PartialColouring { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn colouring_validation() {
        assert!(Colouring::with_ell(3, vec![1, 2, 1]).is_err());
        assert!(Colouring::new(vec![0, 1]).is_err());
        let c = col(&[1, 2, 3, 1]);
        assert_eq!(c.theta(), &[2, 1, 1]);
        assert_eq!(c.inverse_index(0), 3);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(4)).unwrap().chi, 4);
        assert_eq!(chromatic_number(&cycle(5)).unwrap().chi, 3);
        let p = petersen();
        assert_eq!(brute_chromatic(&p), 3);
        let chi = chromatic_number(&p).unwrap();
        assert_eq!(chi.chi, 3);
        assert!(is_proper(&p, &chi.witness).unwrap());
        assert_eq!(chi.witness.ell(), 3);
        assert_eq!(chromatic_number(&Graph::null(0)), Err(Error::EmptyGraph));
        assert_eq!(chromatic_number(&Graph::null(3)).unwrap().chi, 1);
    }

    #[test]
    fn convention_examples() {
        let c5 = cycle(5);
        assert_eq!(brute_mis(&c5, &[0, 1, 2, 3, 4]), vec![0, 2]);
        assert_eq!(brute_mis(&c5, &[1, 3, 4]), vec![1, 3]);
        let c = convention_colouring(&c5, 3).unwrap();
        assert_eq!(c.theta(), &[2, 2, 1]);
        assert_eq!(c.classes(), vec![vec![0, 2], vec![1, 3], vec![4]]);

        assert_eq!(convention_colouring(&complete(3), 3).unwrap().theta(), &[1, 1, 1]);

        let p4 = path(4);
        assert_eq!(brute_mis(&p4, &[0, 1, 2, 3]), vec![0, 2]);
        let c = convention_colouring(&p4, 2).unwrap();
        assert_eq!(c.classes(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn convention_infeasible() {
        assert_eq!(
            convention_colouring(&cycle(5), 2),
            Err(Error::ConventionInfeasible { ell: 2 })
        );
        // Two classes already exhaust C_4.
        assert_eq!(
            convention_colouring(&cycle(4), 3),
            Err(Error::ConventionInfeasible { ell: 3 })
        );
        assert_eq!(
            convention_colouring(&complete(3), 0),
            Err(Error::ConventionInfeasible { ell: 0 })
        );
    }

    #[test]
    fn convention_classes_match_mis_oracle() {
        for g in [petersen(), cycle(7), path(6), complete(4)] {
            let chi = chromatic_number(&g).unwrap().chi;
            let Ok(c) = convention_colouring(&g, chi) else { continue };
            let mut left: Vec<usize> = g.vertices().collect();
            for class in c.classes().iter().take(chi - 1) {
                assert_eq!(&brute_mis(&g, &left), class);
                left.retain(|v| !class.contains(v));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let c = Colouring::with_ell(3, vec![1, 2, 3, 1]).unwrap();
        assert_eq!(inverse_colouring(&c).assignment(), &[3, 2, 1, 3]);
        let one = col(&[1, 1, 1]);
        assert_eq!(inverse_colouring(&one), one);
        let c = col(&[1, 1, 2, 1]);
        assert_eq!(c.theta(), &[3, 1]);
        assert_eq!(inverse_colouring(&c).theta(), &[1, 3]);
        assert_eq!(inverse_colouring(&inverse_colouring(&c)), c);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_proper_colourings(&complete(3), 3).count(), 6);
        assert_eq!(enumerate_proper_colourings(&cycle(5), 2).count(), 0);
        let all: Vec<Vec<usize>> = enumerate_proper_colourings(&path(3), 2)
            .map(|c| c.assignment().to_vec())
            .collect();
        assert_eq!(all, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(enumerate_proper_colourings(&Graph::null(0), 1).count(), 0);
        assert_eq!(enumerate_proper_colourings(&Graph::null(2), 3).count(), 0);
    }

    #[test]
    fn enumeration_matches_product_scan() {
        for g in [cycle(5), path(4), petersen().induced(&[0, 1, 2, 3, 5, 6])] {
            for k in 1usize..=4 {
                let n = g.order();
                let mut expected = Vec::new();
                for code in 0..k.pow(n as u32) {
                    let mut x = code;
                    let mut a = vec![0; n];
                    for slot in a.iter_mut().rev() {
                        *slot = x % k + 1;
                        x /= k;
                    }
                    let surjective = (1..=k).all(|c| a.contains(&c));
                    if surjective && g.edges().iter().all(|&(u, v)| a[u] != a[v]) {
                        expected.push(a);
                    }
                }
                let got: Vec<Vec<usize>> = enumerate_proper_colourings(&g, k)
                    .map(|c| c.assignment().to_vec())
                    .collect();
                assert_eq!(got, expected, "k={k}");
            }
        }
    }

    #[test]
    fn colouring_json_contract() {
        let c = col(&[1, 2, 1]);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"ell":2,"assignment":[1,2,1]}"#);
        let back: Colouring = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Colouring>(r#"{"ell":3,"assignment":[1,2]}"#).is_err());
    }
}
