//! Backtracking engine for surjective proper k-colourings with an optional
//! rainbow requirement on a subset of vertices.
//!
//! Vertices are coloured in id order and colours tried ascending, so
//! solutions arrive in lexicographic order of assignment vectors. In
//! canonical mode a vertex may only open colour `used + 1`, which yields one
//! representative per colour permutation class.

use std::ops::ControlFlow;

pub(crate) struct ColourSearch<'a> {
    n: usize,
    k: usize,
    adj: &'a [u64],
    closed: Vec<u64>,
    must_yield: u64,
    canonical: bool,
    assign: Vec<u8>,
    counts: Vec<usize>,
    used: usize,
}

impl<'a> ColourSearch<'a> {
    pub(crate) fn new(adj: &'a [u64], k: usize, must_yield: u64, canonical: bool) -> Self {
        let n = adj.len();
        ColourSearch {
            n,
            k,
            adj,
            closed: adj.iter().enumerate().map(|(v, m)| m | (1 << v)).collect(),
            must_yield,
            canonical,
            assign: vec![0; n],
            counts: vec![0; k + 1],
            used: 0,
        }
    }

    /// Visits every solution until `visit` breaks.
    pub(crate) fn run<F>(&mut self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        if self.k == 0 || self.k > self.n || self.k > u8::MAX as usize {
            return ControlFlow::Continue(());
        }
        self.dfs(0, &mut visit)
    }

    pub(crate) fn first(&mut self) -> Option<Vec<u8>> {
        let mut found = None;
        let _ = self.run(|a| {
            found = Some(a.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    fn dfs<F>(&mut self, pos: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u8]) -> ControlFlow<()>,
    {
        if pos == self.n {
            return visit(&self.assign);
        }
        let top = if self.canonical {
            (self.used + 1).min(self.k)
        } else {
            self.k
        };
        let earlier = (1u64 << pos) - 1;
        for colour in 1..=top {
            let c = colour as u8;
            let mut clash = false;
            let mut nb = self.adj[pos] & earlier;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.assign[w] == c {
                    clash = true;
                    break;
                }
            }
            if clash {
                continue;
            }
            self.assign[pos] = c;
            self.counts[colour] += 1;
            let opened = self.counts[colour] == 1;
            if opened {
                self.used += 1;
            }
            if self.feasible(pos) {
                self.dfs(pos + 1, visit)?;
            }
            if opened {
                self.used -= 1;
            }
            self.counts[colour] -= 1;
            self.assign[pos] = 0;
        }
        ControlFlow::Continue(())
    }

    fn feasible(&self, pos: usize) -> bool {
        let remaining = self.n - pos - 1;
        if self.k - self.used > remaining {
            return false;
        }
        let assigned = if pos + 1 >= 64 {
            u64::MAX
        } else {
            (1u64 << (pos + 1)) - 1
        };
        let mut watch = self.closed[pos] & self.must_yield;
        while watch != 0 {
            let w = watch.trailing_zeros() as usize;
            watch &= watch - 1;
            let hood = self.closed[w];
            let mut present = 0u64;
            let mut members = hood & assigned;
            while members != 0 {
                let u = members.trailing_zeros() as usize;
                members &= members - 1;
                present |= 1 << (self.assign[u] - 1);
            }
            let missing = self.k - present.count_ones() as usize;
            if missing > (hood & !assigned).count_ones() as usize {
                return false;
            }
        }
        true
    }
}
