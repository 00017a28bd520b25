//! Canonical labelling by individualization and refinement, and exhaustive
//! generation of small graphs up to isomorphism.
//!
//! Refinement splits cells by neighbour counts until the ordered partition
//! is equitable. Every step appends an isomorphism-invariant record to a
//! trace; the canonical labelling is the leaf minimising (trace, adjacency
//! rows), and subtrees whose trace already exceeds the best one are cut.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Largest order for which [`graph_key`] packs a graph into a `u128`.
pub const MAX_KEY_ORDER: usize = 16;

/// Largest order accepted by the exhaustive generators.
pub const MAX_GENERATED_ORDER: usize = 10;

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best_trace: Vec<u64>,
    best_code: Vec<u128>,
    best_order: Vec<usize>,
}

const LEVEL: u64 = u64::MAX;

fn refine(g: &Graph, cells: &mut Cells, trace: &mut Vec<u64>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter: VertexSet = cells[s].iter().collect();
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let count = |v: &usize| g.neighbors(*v).intersection(splitter).len();
                let first = count(&cells[x][0]);
                if cells[x].iter().all(|v| count(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut cells[x]);
                cell.sort_by_key(|v| (count(v), *v));
                let mut groups: Cells = Vec::new();
                let mut last = usize::MAX;
                trace.extend([s as u64, x as u64]);
                for v in cell {
                    let c = count(&v);
                    if c != last {
                        groups.push(Vec::new());
                        trace.push(c as u64);
                        last = c;
                    }
                    groups.last_mut().expect("group opened").push(v);
                }
                trace.extend(groups.iter().map(|grp| grp.len() as u64));
                cells.splice(x..=x, groups);
                continue 'restart;
            }
        }
        return;
    }
}

/// Adjacency rows of `g` relabelled by `order` (position ↦ vertex).
fn code(g: &Graph, order: &[usize]) -> Vec<u128> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u128, |row, u| row | 1 << pos[u]))
        .collect()
}

/// Compares `trace` with the prefix of `best` of the same length. A longer
/// trace extending `best` compares greater.
fn prefix_cmp(trace: &[u64], best: &[u64]) -> Ordering {
    let k = trace.len().min(best.len());
    trace[..k].cmp(&best[..k]).then(if trace.len() > best.len() { Ordering::Greater } else { Ordering::Equal })
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Cells, mut trace: Vec<u64>) {
        refine(self.g, &mut cells, &mut trace);
        if !self.best_order.is_empty() && prefix_cmp(&trace, &self.best_trace) == Ordering::Greater {
            return;
        }
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = code(self.g, &order);
            let better = self.best_order.is_empty()
                || (trace.as_slice(), code.as_slice()).cmp(&(self.best_trace.as_slice(), self.best_code.as_slice()))
                    == Ordering::Less;
            if better {
                self.best_trace = trace;
                self.best_code = code;
                self.best_order = order;
            }
            return;
        };
        for i in 0..cells[target].len() {
            let mut next = cells.clone();
            let v = next[target].remove(i);
            next.insert(target, vec![v]);
            let mut t = trace.clone();
            t.extend([LEVEL, target as u64]);
            self.visit(next, t);
        }
    }
}

/// A canonical labelling: `order[i]` is the vertex placed at position `i`.
/// Isomorphic graphs get identical [`canonical_form`]s.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut s = Search { g, best_trace: Vec::new(), best_code: Vec::new(), best_order: Vec::new() };
    let mut cells: Cells = Vec::new();
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut trace = Vec::new();
    for v in by_degree {
        if cells.last().is_none_or(|c: &Vec<usize>| g.degree(c[0]) != g.degree(v)) {
            cells.push(Vec::new());
            trace.push(g.degree(v) as u64);
        }
        cells.last_mut().expect("cell opened").push(v);
    }
    s.visit(cells, trace);
    s.best_order
}

pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_labeling(g);
    let mut perm = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.permuted(&perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_form(g) == canonical_form(h)
}

/// Upper triangle of `g`, column by column as in graph6, packed into a
/// `u128`; requires `n ≤ 16`.
pub fn graph_key(g: &Graph) -> u128 {
    assert!(g.n() <= MAX_KEY_ORDER, "graph_key needs at most {MAX_KEY_ORDER} vertices");
    let mut key = 0u128;
    let mut bit = 0;
    for j in 1..g.n() {
        for i in 0..j {
            if g.has_edge(i, j) {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

pub fn graph_from_key(n: usize, key: u128) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("key decodes to a simple graph")
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GENERATED_ORDER {
        return Err(Error::InvalidParameters(format!(
            "exhaustive generation is limited to {MAX_GENERATED_ORDER} vertices, got {n}"
        )));
    }
    Ok(())
}

/// Canonical representatives of the one-vertex extensions of `parents`.
fn extend(parents: &[Graph], connected: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    for p in parents {
        let n = p.n();
        let rows: Vec<VertexSet> = (0..n).map(|v| p.neighbors(v)).collect();
        let first = usize::from(connected);
        for mask in first..1usize << n {
            let mut adj = rows.clone();
            adj.push(VertexSet::from_bits(mask as u128));
            let child = Graph::from_adjacency(adj);
            seen.insert(graph_key(&canonical_form(&child)));
        }
    }
    let mut keys: Vec<u128> = seen.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|k| graph_from_key(parents[0].n() + 1, k)).collect()
}

fn generate(n: usize, connected: bool) -> Result<Vec<Vec<Graph>>> {
    check_order(n)?;
    let mut levels = vec![vec![Graph::empty(0)?]];
    if n >= 1 {
        levels.push(vec![Graph::empty(1)?]);
    }
    for _ in 2..=n {
        let next = extend(levels.last().expect("level present"), connected);
        levels.push(next);
    }
    Ok(levels)
}

/// Every graph on `n` vertices up to isomorphism, in canonical form,
/// sorted by [`graph_key`].
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(generate(n, false)?.pop().unwrap_or_default())
}

/// Every connected graph on `n ≥ 1` vertices up to isomorphism. Each is
/// a one-vertex extension of a smaller connected graph (delete a
/// non-cut vertex), which is how they are generated.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(generate(n, true)?.pop().unwrap_or_default())
}

/// All graphs with `1 ≤ n ≤ max_n` vertices, smaller orders first.
pub fn all_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(generate(max_n, false)?.into_iter().skip(1).flatten().collect())
}

/// All connected graphs with `1 ≤ n ≤ max_n` vertices, smaller orders first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    Ok(generate(max_n, true)?.into_iter().skip(1).flatten().collect())
}
