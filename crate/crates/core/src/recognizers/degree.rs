//! Degree-based quantities: `γ_d` and heavy seagulls.

use serde::Serialize;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Vertices of degree at least `d`.
pub fn high_degree_vertices(g: &Graph, d: usize) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) >= d).collect()
}

/// `γ_d(G)`: the maximum degree of the subgraph induced by the vertices of
/// degree at least `d`; 0 when that subgraph is empty.
pub fn gamma(g: &Graph, d: usize) -> usize {
    let high = high_degree_vertices(g, d);
    high.iter()
        .map(|v| g.neighbors(v).intersection(high).len())
        .max()
        .unwrap_or(0)
}

/// An induced path `a - v - u` with `a < u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Seagull {
    pub a: usize,
    pub v: usize,
    pub u: usize,
}

impl Seagull {
    pub fn vertex_set(&self) -> VertexSet {
        [self.a, self.v, self.u].iter().collect()
    }

    /// True iff `a - v - u` is an induced path of `g`.
    pub fn is_seagull_in(&self, g: &Graph) -> bool {
        self.a != self.u
            && g.has_edge(self.a, self.v)
            && g.has_edge(self.v, self.u)
            && !g.has_edge(self.a, self.u)
    }

    /// The same seagull read from the other end.
    pub fn reversed(&self) -> Seagull {
        Seagull { a: self.u, v: self.v, u: self.a }
    }
}

/// All seagulls `a - v - u` (with `a < u`) whose ends have degree at least
/// three in `g`, sorted by `(a, v, u)`.
pub fn heavy_seagulls(g: &Graph) -> Vec<Seagull> {
    let high = high_degree_vertices(g, 3);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let ends = g.neighbors(v).intersection(high);
        for a in ends {
            for u in ends.difference(g.closed_neighbors(a)) {
                if u > a {
                    out.push(Seagull { a, v, u });
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::generators::{complete, complete_bipartite, cycle, layered_grid, wall};

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&cycle(8), 3), 0);
        assert_eq!(gamma(&complete(4), 3), 3);
        let g = layered_grid(4, 12, 3).unwrap();
        // brute-force recount
        let high: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
        let expected = high
            .iter()
            .map(|&v| high.iter().filter(|&&u| g.has_edge(u, v)).count())
            .max()
            .unwrap_or(0);
        assert_eq!(gamma(&g, 3), expected);
        assert_eq!(gamma(&g, 3), 4);
    }

    #[test]
    fn seagulls_in_k23() {
        let s = heavy_seagulls(&complete_bipartite(2, 3));
        assert_eq!(
            s,
            vec![
                Seagull { a: 0, v: 2, u: 1 },
                Seagull { a: 0, v: 3, u: 1 },
                Seagull { a: 0, v: 4, u: 1 }
            ]
        );
        assert!(heavy_seagulls(&cycle(9)).is_empty());
    }

    #[test]
    fn wall_seagulls_match_triples() {
        let g = wall(3).unwrap();
        let n = g.n();
        let mut count = 0;
        for a in 0..n {
            for v in 0..n {
                for u in a + 1..n {
                    if v != a && v != u && g.has_edge(a, v) && g.has_edge(v, u) && !g.has_edge(a, u)
                        && g.degree(a) > 2 && g.degree(u) > 2
                    {
                        count += 1;
                    }
                }
            }
        }
        let s = heavy_seagulls(&g);
        assert!(!s.is_empty());
        assert_eq!(s.len(), count);
    }
}
