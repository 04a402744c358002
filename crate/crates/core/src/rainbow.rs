//! Rainbow neighbourhoods and the rainbow neighbourhood number.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::colouring::{chromatic_number, convention_colouring, require_proper, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::ColourSearch;

/// Whether the closed neighbourhood of `v` sees every colour.
pub fn yields_rainbow(g: &Graph, c: &Colouring, v: usize) -> Result<bool> {
    require_proper(g, c)?;
    g.check_vertex(v)?;
    Ok(yields_unchecked(g, c, v))
}

pub(crate) fn yields_unchecked(g: &Graph, c: &Colouring, v: usize) -> bool {
    let seen = c.colour_mask(g.neighbours(v).iter().copied().chain([v]));
    seen == c.full_mask()
}

/// How the chromatic colouring behind `r_chi` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RainbowMode {
    /// The greedy-maximal colouring with chi colours.
    Convention,
    /// Largest count over all surjective proper chi-colourings.
    ExistsMax,
    /// Smallest count over all surjective proper chi-colourings.
    ExistsMin,
}

impl RainbowMode {
    pub const ALL: [RainbowMode; 3] = [
        RainbowMode::Convention,
        RainbowMode::ExistsMax,
        RainbowMode::ExistsMin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RainbowMode::Convention => "convention",
            RainbowMode::ExistsMax => "exists-max",
            RainbowMode::ExistsMin => "exists-min",
        }
    }
}

impl std::str::FromStr for RainbowMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        RainbowMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown rainbow mode `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowReport {
    pub yielding: Vec<usize>,
    pub r: usize,
    pub colouring_used: Colouring,
}

impl RainbowReport {
    fn of(g: &Graph, c: Colouring) -> Self {
        let yielding: Vec<usize> = g.vertices().filter(|&v| yields_unchecked(g, &c, v)).collect();
        RainbowReport {
            r: yielding.len(),
            yielding,
            colouring_used: c,
        }
    }
}

/// `r_chi(G)` under the chosen mode. Exhaustive modes scan one colouring per
/// colour-permutation class; the count is invariant under relabelling.
pub fn rainbow_neighbourhood_number(g: &Graph, mode: RainbowMode) -> Result<RainbowReport> {
    g.require_nonempty()?;
    let chi = chromatic_number(g)?.chi;
    match mode {
        RainbowMode::Convention => Ok(RainbowReport::of(g, convention_colouring(g, chi)?)),
        RainbowMode::ExistsMax | RainbowMode::ExistsMin => {
            let adj = g.masks()?;
            let mut best: Option<RainbowReport> = None;
            let _ = ColourSearch::new(&adj, chi, 0, true).run(|a| {
                let report = RainbowReport::of(g, Colouring::from_search(chi, a));
                let better = match &best {
                    None => true,
                    Some(b) if mode == RainbowMode::ExistsMax => report.r > b.r,
                    Some(b) => report.r < b.r,
                };
                if better {
                    best = Some(report);
                }
                let done = match (&best, mode) {
                    (Some(b), RainbowMode::ExistsMax) => b.r == g.order(),
                    (Some(b), _) => b.r == 0,
                    _ => false,
                };
                if done {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            best.ok_or(Error::EmptyGraph)
        }
    }
}
