//! Graphviz DOT export.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::colouring::Colouring;
use crate::connectivity::RainbowWitness;
use crate::graph::Graph;

/// Fill colours for classes 1, 2, ...; class `j` uses entry `(j - 1) % 12`.
pub const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
    "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
];

/// Deterministic DOT text. Vertices carry `class="c<j>"` when coloured;
/// edges on any witness path are bold.
pub fn export_dot(g: &Graph, colouring: Option<&Colouring>, witness_paths: &[RainbowWitness]) -> String {
    let bold: BTreeSet<(usize, usize)> = witness_paths
        .iter()
        .flat_map(|w| w.path.windows(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))))
        .collect();
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in g.vertices() {
        match colouring.filter(|c| v < c.len()) {
            Some(c) => {
                let j = c.colour(v);
                writeln!(
                    out,
                    "  {v} [class=\"c{j}\", fillcolor=\"{}\", label=\"{v}:{j}\"];",
                    PALETTE[(j - 1) % PALETTE.len()]
                )
            }
            None => writeln!(out, "  {v};"),
        }
        .expect("write to string");
    }
    for &(u, v) in g.edges() {
        let style = if bold.contains(&(u, v)) { " [style=bold, penwidth=3]" } else { "" };
        writeln!(out, "  {u} -- {v}{style};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn single_vertex() {
        let c = Colouring::new(vec![1]).unwrap();
        let dot = export_dot(&Graph::null(1), Some(&c), &[]);
        assert!(dot.contains("class=\"c1\""));
        assert_eq!(dot.matches("class=").count(), 1);
    }

    #[test]
    fn k2_distinct_palette_entries() {
        let c = Colouring::new(vec![1, 2]).unwrap();
        let dot = export_dot(&Family::Complete(2).generate().unwrap(), Some(&c), &[]);
        assert!(dot.contains(PALETTE[0]) && dot.contains(PALETTE[1]));
    }

    #[test]
    fn c6_witness_is_bold() {
        let g = Family::Cycle(6).generate().unwrap();
        let c = Colouring::new(vec![1, 2, 3, 1, 2, 3]).unwrap();
        let w = crate::rainbow_path_exists(&g, &c, 0, 1).unwrap().unwrap();
        assert_eq!(w.path, vec![0, 5, 4, 3, 2, 1]);
        let dot = export_dot(&g, Some(&c), &[w]);
        assert_eq!(dot.matches("style=bold").count(), 5);
        assert!(!dot.contains("0 -- 1 [style=bold"));
        assert_eq!(dot, export_dot(&g, Some(&c), &[crate::rainbow_path_exists(&g, &c, 0, 1).unwrap().unwrap()]));
    }

    #[test]
    fn palette_cycles() {
        let g = Family::Complete(13).generate().unwrap();
        let c = Colouring::new((1..=13).collect()).unwrap();
        let dot = export_dot(&g, Some(&c), &[]);
        assert!(dot.contains(&format!("class=\"c13\", fillcolor=\"{}\"", PALETTE[0])));
    }

    #[test]
    fn uncoloured() {
        let dot = export_dot(&Family::Path(3).generate().unwrap(), None, &[]);
        assert!(!dot.contains("class="));
        assert_eq!(dot.matches(" -- ").count(), 2);
    }
}
