//! Exact treewidth and tree decompositions for small graphs.
//!
//! `TW(S)` is the least width of an elimination of the vertices of `S`
//! placed first in the ordering:
//!
//! `TW(S) = min_{v ∈ S} max(TW(S ∖ v), |Q(S ∖ v, v)|)`, `TW(∅) = -1`,
//!
//! where `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from
//! `v` through `S`. Then `tw(G) = TW(V(G))`.

use std::fmt;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Default vertex cap for the exact oracle.
pub const DEFAULT_CAP: usize = 18;
/// Hard limit on the cap; the table has `2^n` one-byte entries.
pub const MAX_CAP: usize = 26;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_CAP);
    if g.n() > cap {
        return Err(Error::OracleTooLarge { n: g.n(), cap });
    }
    Ok(())
}

struct Dp {
    adj: Vec<u32>,
    table: Vec<i8>,
}

impl Dp {
    fn new(g: &Graph) -> Self {
        let adj: Vec<u32> = (0..g.n()).map(|v| g.neighbors(v).bits() as u32).collect();
        let n = g.n();
        let mut table = vec![0i8; 1usize << n];
        table[0] = -1;
        let mut dp = Dp { adj, table };
        for s in 1u32..(1u32 << n) {
            let mut best = i8::MAX;
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let without = s & !(1 << v);
                let prev = dp.table[without as usize];
                if prev >= best {
                    continue;
                }
                let q = dp.q(without, v) as i8;
                best = best.min(prev.max(q));
            }
            dp.table[s as usize] = best;
        }
        dp
    }

    fn neighbors_of(&self, x: u32) -> u32 {
        let mut out = 0;
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out
    }

    /// `|Q(s, v)|`.
    fn q(&self, s: u32, v: usize) -> u32 {
        let mut reach: u32 = 1 << v;
        loop {
            let ext = reach | (self.neighbors_of(reach) & s);
            if ext == reach {
                break;
            }
            reach = ext;
        }
        (self.neighbors_of(reach) & !(s | 1 << v)).count_ones()
    }

    /// An optimal elimination ordering, first eliminated vertex first.
    fn ordering(&self, n: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(n);
        let mut s: u32 = (1u32 << n) - 1;
        while s != 0 {
            let target = self.table[s as usize];
            let mut rest = s;
            let mut chosen = None;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let without = s & !(1 << v);
                if self.table[without as usize].max(self.q(without, v) as i8) == target {
                    chosen = Some(v);
                    break;
                }
            }
            let v = chosen.expect("some vertex attains the minimum");
            order.push(v);
            s &= !(1 << v);
        }
        order.reverse();
        order
    }
}

/// Exact treewidth, for graphs with at most [`DEFAULT_CAP`] vertices. The
/// empty graph has treewidth 0 here.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    treewidth_exact_capped(g, DEFAULT_CAP)
}

pub fn treewidth_exact_capped(g: &Graph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let dp = Dp::new(g);
    Ok(dp.table[dp.table.len() - 1] as usize)
}

/// An optimal elimination ordering (first eliminated first).
pub fn optimal_elimination_ordering(g: &Graph) -> Result<Vec<usize>> {
    check_cap(g, DEFAULT_CAP)?;
    Ok(Dp::new(g).ordering(g.n()))
}

/// A tree decomposition: node `i` carries `bags[i]`; `edges` are tree edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Maximum bag size minus one (0 for decompositions with only empty
    /// bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Bags from eliminating `order` in the filled graph: the bag of `v` is
    /// `v` plus its later neighbours, attached to the bag of the earliest of
    /// those. Nested bags are then merged into their neighbours.
    pub fn from_elimination_ordering(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::InvalidParameters(format!("{order:?} is not an ordering of 0..{n}")));
            }
            position[v] = i;
        }
        if order.len() != n {
            return Err(Error::InvalidParameters(format!("{order:?} is not an ordering of 0..{n}")));
        }
        if n == 0 {
            return Ok(TreeDecomposition { bags: vec![VertexSet::EMPTY], edges: Vec::new() });
        }
        let mut fill: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        for (i, &v) in order.iter().enumerate() {
            let later: VertexSet = fill[v].iter().filter(|&u| position[u] > i).collect();
            for u in later {
                fill[u] = fill[u].union(later.without(u));
            }
            bags.push(later.with(v));
            parent[i] = later.iter().map(|u| position[u]).min();
        }
        // Roots of different components are chained so the result is a tree.
        let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
        for w in roots.windows(2) {
            parent[w[0]] = Some(w[1]);
        }
        let edges: Vec<(usize, usize)> = (0..n).filter_map(|i| parent[i].map(|p| (i, p))).collect();
        Ok(TreeDecomposition { bags, edges }.merged())
    }

    /// Contracts every tree edge whose one bag contains the other.
    fn merged(self) -> Self {
        let mut bags: Vec<Option<VertexSet>> = self.bags.into_iter().map(Some).collect();
        let mut edges = self.edges;
        loop {
            let found = edges.iter().position(|&(x, y)| {
                let (bx, by) = (bags[x].unwrap(), bags[y].unwrap());
                bx.is_subset(by) || by.is_subset(bx)
            });
            let Some(idx) = found else { break };
            let (x, y) = edges.swap_remove(idx);
            let (bx, by) = (bags[x].unwrap(), bags[y].unwrap());
            // keep the larger bag at node y
            bags[y] = Some(if bx.is_subset(by) { by } else { bx });
            bags[x] = None;
            for e in edges.iter_mut() {
                if e.0 == x {
                    e.0 = y;
                }
                if e.1 == x {
                    e.1 = y;
                }
            }
        }
        let mut renumber = vec![usize::MAX; bags.len()];
        let mut out_bags = Vec::new();
        for (i, b) in bags.iter().enumerate() {
            if let Some(b) = b {
                renumber[i] = out_bags.len();
                out_bags.push(*b);
            }
        }
        let mut out_edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(x, y)| {
                let (a, b) = (renumber[x], renumber[y]);
                (a.min(b), a.max(b))
            })
            .collect();
        out_edges.sort_unstable();
        TreeDecomposition { bags: out_bags, edges: out_edges }
    }

    /// `i: v1 v2 ...` per bag, then `a b` per tree edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, b) in self.bags.iter().enumerate() {
            out.push_str(&format!("{i}:"));
            for v in b.iter() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Inverse of [`to_text`](Self::to_text). Bag lines must be numbered
    /// `0, 1, 2, ...` in order; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut bags = Vec::new();
        let mut edges = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let content = line.split('#').next().unwrap_or("").trim();
            if let Some((id, rest)) = content.split_once(':') {
                let id: usize = id
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(offset, format!("bad node id in `{content}`")))?;
                if id != bags.len() {
                    return Err(parse_err(offset, format!("expected node {}, found {id}", bags.len())));
                }
                let mut bag = VertexSet::EMPTY;
                for tok in rest.split_whitespace() {
                    let v: usize = tok.parse().map_err(|_| parse_err(offset, format!("bad vertex `{tok}`")))?;
                    if v >= crate::vset::MAX_VERTICES {
                        return Err(parse_err(offset, format!("vertex {v} too large")));
                    }
                    bag.insert(v);
                }
                bags.push(bag);
            } else if !content.is_empty() {
                let nums: Vec<usize> = content
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| parse_err(offset, format!("bad node id `{t}`"))))
                    .collect::<Result<_>>()?;
                if nums.len() != 2 {
                    return Err(parse_err(offset, format!("expected a tree edge `a b`, found `{content}`")));
                }
                edges.push((nums[0], nums[1]));
            }
            offset += line.len();
        }
        Ok(TreeDecomposition { bags, edges })
    }
}

impl fmt::Display for TreeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A decomposition of width `tw(G)` reconstructed from the oracle.
pub fn tree_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    let order = optimal_elimination_ordering(g)?;
    TreeDecomposition::from_elimination_ordering(g, &order)
}

/// The first failed condition of a candidate tree decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "violation")]
pub enum Violation {
    /// The node/edge structure is not a tree.
    NotATree { reason: String },
    UncoveredVertex { vertex: usize },
    UncoveredEdge { u: usize, v: usize },
    /// The nodes whose bags contain `vertex` induce a disconnected subtree.
    Disconnected { vertex: usize, nodes: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree { reason } => write!(f, "not a tree: {reason}"),
            Violation::UncoveredVertex { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Violation::UncoveredEdge { u, v } => write!(f, "edge {u}-{v} is in no bag"),
            Violation::Disconnected { vertex, nodes } => {
                write!(f, "bags containing vertex {vertex} are at disconnected nodes {nodes:?}")
            }
        }
    }
}

/// Checks the tree structure, then vertex coverage, edge coverage and
/// connectivity of each vertex's nodes, returning the first violation.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), Violation> {
    let nodes = td.bags.len();
    let not_tree = |reason: String| Err(Violation::NotATree { reason });
    if nodes == 0 {
        return not_tree("no nodes".into());
    }
    if td.edges.len() != nodes - 1 {
        return not_tree(format!("{nodes} nodes but {} edges", td.edges.len()));
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in &td.edges {
        if a >= nodes || b >= nodes || a == b {
            return not_tree(format!("bad tree edge {a}-{b}"));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let reach = |allowed: &dyn Fn(usize) -> bool, start: usize| {
        let mut seen = vec![false; nodes];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && allowed(y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    };
    if reach(&|_| true, 0).iter().any(|&s| !s) {
        return not_tree("tree is disconnected".into());
    }
    for b in &td.bags {
        if let Some(v) = b.difference(g.vertices()).min() {
            return not_tree(format!("bag mentions vertex {v}, which is not in the graph"));
        }
    }
    let all = td.bags.iter().fold(VertexSet::EMPTY, |acc, b| acc.union(*b));
    if let Some(v) = g.vertices().difference(all).min() {
        return Err(Violation::UncoveredVertex { vertex: v });
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(Violation::UncoveredEdge { u, v });
        }
    }
    for v in g.vertices() {
        let holding: Vec<usize> = (0..nodes).filter(|&i| td.bags[i].contains(v)).collect();
        let seen = reach(&|i| td.bags[i].contains(v), holding[0]);
        if holding.iter().any(|&i| !seen[i]) {
            return Err(Violation::Disconnected { vertex: v, nodes: holding });
        }
    }
    Ok(())
}
