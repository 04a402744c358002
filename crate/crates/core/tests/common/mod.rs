//! Brute-force oracles sharing no code with the solver.

#![allow(dead_code)]

use jcolour::Graph;

/// Every map from `0..n` to `1..=k`, lexicographic.
pub fn assignments(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).checked_pow(n as u32).unwrap_or(0);
    (0..if k == 0 { 0 } else { total }).map(move |mut code| {
        let mut a = vec![0; n];
        for slot in a.iter_mut().rev() {
            *slot = (code % k as u64) as usize + 1;
            code /= k as u64;
        }
        a
    })
}

pub fn proper(g: &Graph, a: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| a[u] != a[v])
}

pub fn surjective(a: &[usize], k: usize) -> bool {
    (1..=k).all(|c| a.contains(&c))
}

pub fn yields(g: &Graph, a: &[usize], k: usize, v: usize) -> bool {
    (1..=k).all(|c| a[v] == c || g.neighbours(v).iter().any(|&w| a[w] == c))
}

pub fn chi(g: &Graph) -> usize {
    let n = g.order();
    (1..=n)
        .find(|&k| assignments(n, k).any(|a| proper(g, &a)))
        .unwrap_or(0)
}

/// Largest `k` with a surjective proper `k`-colouring in which every vertex
/// (or, with `internal_only`, every vertex of degree >= 2) yields.
pub fn j_value(g: &Graph, internal_only: bool) -> Option<usize> {
    let n = g.order();
    (1..=n).rev().find(|&k| {
        assignments(n, k).any(|a| {
            proper(g, &a)
                && surjective(&a, k)
                && g.vertices()
                    .filter(|&v| !internal_only || g.degree(v) >= 2)
                    .all(|v| yields(g, &a, k, v))
        })
    })
}

/// All simple `u`-`v` paths.
pub fn simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, path: &mut Vec<usize>, v: usize, out: &mut Vec<Vec<usize>>) {
        let at = *path.last().unwrap();
        if at == v {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbours(at) {
            if !path.contains(&w) {
                path.push(w);
                go(g, path, v, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![u], v, &mut out);
    out
}

pub fn rainbow_path_brute(g: &Graph, a: &[usize], k: usize, u: usize, v: usize) -> Option<usize> {
    simple_paths(g, u, v)
        .into_iter()
        .filter(|p| (1..=k).all(|c| p.iter().any(|&x| a[x] == c)))
        .map(|p| p.len() - 1)
        .min()
}

pub fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .all(|&u| set.iter().all(|&v| !g.has_edge(u, v)))
}

/// Size of a maximum independent subset of `within`, by subset scan.
pub fn mis_size(g: &Graph, within: &[usize]) -> usize {
    let m = within.len();
    (0u32..1 << m)
        .filter(|mask| {
            let set: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| within[i]).collect();
            independent(g, &set)
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Isomorphism-invariant key: smallest sorted edge list over all relabellings.
pub fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        // Next permutation.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}
