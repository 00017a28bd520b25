//! Named graph families.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced a simple graph")
}

/// `P_n` on vertices `0 - 1 - ... - n-1`.
pub fn path_graph(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// `C_n` on vertices `0..n` in cyclic order; `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    build(n, edges)
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n).expect("vertex count within range")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    build(a + b, edges)
}

/// `K_{1,n}` with centre 0.
pub fn star(n: usize) -> Graph {
    complete_bipartite(1, n)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, edges)
}

/// The `k × k` wall.
///
/// Rows `1..=k` are horizontal paths. The first row uses the even columns
/// `0, 2, ..., 2k-2`, middle rows use columns `0..2k`, and the last row uses
/// the even columns when `k-1` is odd and the odd columns otherwise. Rungs
/// join rows `r` and `r+1` in the even columns for odd `r` and in the odd
/// columns for even `r`. Vertices are numbered row by row, left to right.
/// The result has `2k(k-1)` vertices and `2(k-1) + (k-2)(2k-1) + k(k-1)`
/// edges.
pub fn wall(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("wall needs k >= 2, got {k}")));
    }
    let cols_of = |r: usize| -> Vec<usize> {
        if r == 1 {
            (0..k).map(|i| 2 * i).collect()
        } else if r == k {
            let offset = if (k - 1) % 2 == 1 { 0 } else { 1 };
            (0..k).map(|i| 2 * i + offset).collect()
        } else {
            (0..2 * k).collect()
        }
    };
    let mut id = std::collections::HashMap::new();
    let mut n = 0;
    for r in 1..=k {
        for c in cols_of(r) {
            id.insert((r, c), n);
            n += 1;
        }
    }
    if n > crate::vset::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for r in 1..=k {
        let cols = cols_of(r);
        for w in cols.windows(2) {
            edges.push((id[&(r, w[0])], id[&(r, w[1])]));
        }
        if r < k {
            let parity = if r % 2 == 1 { 0 } else { 1 };
            for c in (0..2 * k).filter(|c| c % 2 == parity) {
                if let (Some(&u), Some(&v)) = (id.get(&(r, c)), id.get(&(r + 1, c))) {
                    edges.push((u, v));
                }
            }
        }
    }
    Ok(build(n, edges))
}

/// Replaces every edge `e` (in lexicographic edge order) by a path with
/// `lengths[e]` edges. New vertices are appended in edge order.
pub fn subdivide(g: &Graph, lengths: &[usize]) -> Result<Graph> {
    let edges: Vec<_> = g.edges().collect();
    if lengths.len() != edges.len() {
        return Err(Error::InvalidParameters(format!(
            "{} lengths given for {} edges",
            lengths.len(),
            edges.len()
        )));
    }
    if let Some(pos) = lengths.iter().position(|&l| l == 0) {
        return Err(Error::InvalidParameters(format!("edge {pos} has length 0")));
    }
    let n = g.n() + lengths.iter().map(|l| l - 1).sum::<usize>();
    if n > crate::vset::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut next = g.n();
    let mut out = Vec::new();
    for (&(u, v), &l) in edges.iter().zip(lengths) {
        let mut prev = u;
        for _ in 1..l {
            out.push((prev, next));
            prev = next;
            next += 1;
        }
        out.push((prev, v));
    }
    Ok(build(n, out))
}

/// A subdivision of `wall(k)` with explicit per-edge lengths.
pub fn wall_subdivision(k: usize, lengths: &[usize]) -> Result<Graph> {
    subdivide(&wall(k)?, lengths)
}

/// A subdivision of `wall(k)` with each edge length drawn from
/// `1..=max_length`.
pub fn random_wall_subdivision<R: Rng>(k: usize, max_length: usize, rng: &mut R) -> Result<Graph> {
    if max_length == 0 {
        return Err(Error::InvalidParameters("max_length must be >= 1".into()));
    }
    let w = wall(k)?;
    let lengths: Vec<usize> = (0..w.m()).map(|_| rng.random_range(1..=max_length)).collect();
    subdivide(&w, &lengths)
}

/// Two holes joined by two disjoint paths.
///
/// Hole `H1` is `0..h1` in cyclic order and hole `H2` is `h1..h1+h2`. A
/// path with `c1` edges joins `0` to `h1`, and a path with `c2` edges joins
/// `d1` to `h1 + d2`; interior vertices follow in that order. Both
/// attachment points split each hole into arcs of at least three edges, so
/// the result is triangle-free and sparse; a connector with two edges makes
/// its ends a heavy seagull.
pub fn linked_holes(h1: usize, h2: usize, d1: usize, d2: usize, c1: usize, c2: usize) -> Result<Graph> {
    for (h, d) in [(h1, d1), (h2, d2)] {
        if d < 3 || d + 3 > h {
            return Err(Error::InvalidParameters(format!(
                "attachment offset {d} must leave arcs of length >= 3 on a hole of length {h}"
            )));
        }
    }
    if c1 == 0 || c2 == 0 {
        return Err(Error::InvalidParameters("connector lengths must be >= 1".into()));
    }
    let n = h1 + h2 + c1 + c2 - 2;
    if n > crate::vset::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges: Vec<(usize, usize)> = (0..h1).map(|i| (i, (i + 1) % h1)).collect();
    edges.extend((0..h2).map(|i| (h1 + i, h1 + (i + 1) % h2)));
    let mut next = h1 + h2;
    attach_path(&mut edges, &mut next, 0, h1, c1);
    attach_path(&mut edges, &mut next, d1, h1 + d2, c2);
    Ok(build(n, edges))
}

/// `L(G)`; vertex `i` is the `i`-th edge of `G` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<_> = g.edges().collect();
    if edges.len() > crate::vset::MAX_VERTICES {
        return Err(Error::TooManyVertices(edges.len()));
    }
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Ok(build(edges.len(), out))
}

/// Appends a path with `len` edges from `from` to `to`, creating `len - 1`
/// interior vertices starting at id `*next`.
fn attach_path(edges: &mut Vec<(usize, usize)>, next: &mut usize, from: usize, to: usize, len: usize) {
    let mut prev = from;
    for _ in 1..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, to));
}

fn check_total(family: &'static str, n: usize) -> Result<()> {
    if n > crate::vset::MAX_VERTICES {
        return Err(Error::InvalidLengths {
            family,
            reason: format!("{n} vertices exceed the supported maximum"),
        });
    }
    Ok(())
}

/// Theta with ends `0` and `1` joined by paths of the given lengths
/// (each at least 2). Interior vertices follow in path order.
pub fn theta(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    let ls = [l1, l2, l3];
    if ls.iter().any(|&l| l < 2) {
        return Err(Error::InvalidLengths {
            family: "theta",
            reason: format!("all lengths must be at least 2, got {ls:?}"),
        });
    }
    let n = 2 + ls.iter().map(|l| l - 1).sum::<usize>();
    check_total("theta", n)?;
    let mut edges = Vec::new();
    let mut next = 2;
    for l in ls {
        attach_path(&mut edges, &mut next, 0, 1, l);
    }
    Ok(build(n, edges))
}

/// Prism with triangles `{0,1,2}` and `{3,4,5}`; path `i` joins `i` and
/// `i+3` with length `l_i >= 1`.
pub fn prism(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    let ls = [l1, l2, l3];
    if ls.contains(&0) {
        return Err(Error::InvalidLengths {
            family: "prism",
            reason: format!("all lengths must be at least 1, got {ls:?}"),
        });
    }
    let n = 6 + ls.iter().map(|l| l - 1).sum::<usize>();
    check_total("prism", n)?;
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    let mut next = 6;
    for (i, l) in ls.into_iter().enumerate() {
        attach_path(&mut edges, &mut next, i, i + 3, l);
    }
    Ok(build(n, edges))
}

/// Pyramid with apex `0` and triangle `{1,2,3}`; path `i` joins `0` and
/// `i`. Lengths are at least 1 and at most one of them equals 1.
pub fn pyramid(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    let ls = [l1, l2, l3];
    if ls.contains(&0) || ls.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::InvalidLengths {
            family: "pyramid",
            reason: format!("lengths must be >= 1 with at most one equal to 1, got {ls:?}"),
        });
    }
    let n = 4 + ls.iter().map(|l| l - 1).sum::<usize>();
    check_total("pyramid", n)?;
    let mut edges = vec![(1, 2), (1, 3), (2, 3)];
    let mut next = 4;
    for (i, l) in ls.into_iter().enumerate() {
        attach_path(&mut edges, &mut next, 0, i + 1, l);
    }
    Ok(build(n, edges))
}

/// `rows` disjoint horizontal paths on `cols` vertices each, plus one apex
/// for every column `0, spacing, 2·spacing, ...` adjacent to the vertex of
/// that column in every row. Grid vertex `(r, c)` has id `r·cols + c`;
/// apexes follow in column order.
pub fn layered_grid(rows: usize, cols: usize, spacing: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 || spacing == 0 {
        return Err(Error::InvalidParameters(format!(
            "layered grid needs rows, cols, spacing >= 1, got ({rows}, {cols}, {spacing})"
        )));
    }
    let apex_cols: Vec<usize> = (0..cols).step_by(spacing).collect();
    let n = rows * cols + apex_cols.len();
    if n > crate::vset::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 1..cols {
            edges.push((r * cols + c - 1, r * cols + c));
        }
    }
    for (i, &c) in apex_cols.iter().enumerate() {
        let apex = rows * cols + i;
        for r in 0..rows {
            edges.push((r * cols + c, apex));
        }
    }
    Ok(build(n, edges))
}

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n).expect("small");
    }
    if n == 2 {
        return path_graph(2);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(n, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_number_at_most;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn wall_counts() {
        for k in 2..=7 {
            let w = wall(k).unwrap();
            assert_eq!(w.n(), 2 * k * (k - 1));
            assert_eq!(w.m(), 2 * (k - 1) + (k - 2) * (2 * k - 1) + k * (k - 1));
            assert!(w.max_degree() <= 3);
            assert!(clique_number_at_most(&w, 2));
            assert!(w.is_connected());
        }
        let w2 = wall(2).unwrap();
        assert!(w2.is_connected() && (0..4).all(|v| w2.degree(v) == 2));
        assert_eq!(wall(5).unwrap().n(), 40);
        assert_eq!(wall(5).unwrap().m(), 55);
    }

    #[test]
    fn subdivision_identity() {
        let w = wall(3).unwrap();
        assert_eq!(wall_subdivision(3, &vec![1; w.m()]).unwrap(), w);
        let s = wall_subdivision(3, &vec![2; w.m()]).unwrap();
        assert_eq!(s.n(), w.n() + w.m());
        assert_eq!(s.m(), 2 * w.m());
    }

    #[test]
    fn random_subdivision_preserves_branch_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = wall(3).unwrap();
        let s = random_wall_subdivision(3, 3, &mut rng).unwrap();
        for v in 0..w.n() {
            assert_eq!(s.degree(v), w.degree(v));
        }
        for v in w.n()..s.n() {
            assert_eq!(s.degree(v), 2);
        }
    }

    #[test]
    fn line_graphs() {
        assert_eq!(line_graph(&path_graph(4)).unwrap(), path_graph(3));
        assert_eq!(line_graph(&complete(3)).unwrap(), complete(3));
        assert_eq!(line_graph(&star(3)).unwrap(), complete(3));
    }

    #[test]
    fn configurations() {
        assert_eq!(theta(2, 2, 2).unwrap().m(), complete_bipartite(2, 3).m());
        assert!(theta(1, 2, 2).is_err());
        let p = prism(1, 1, 1).unwrap();
        assert_eq!((p.n(), p.m()), (6, 9));
        assert!(pyramid(1, 2, 2).is_ok());
        assert!(matches!(
            pyramid(1, 1, 2),
            Err(Error::InvalidLengths { family: "pyramid", .. })
        ));
    }

    #[test]
    fn linked_holes_shape() {
        let g = linked_holes(8, 10, 4, 5, 2, 3).unwrap();
        assert_eq!(g.n(), 8 + 10 + 1 + 2);
        assert_eq!(g.m(), 8 + 10 + 2 + 3);
        assert!(clique_number_at_most(&g, 2));
        assert_eq!([0, 4, 8, 13].map(|v| g.degree(v)), [3; 4]);
        assert!(linked_holes(8, 10, 2, 5, 2, 3).is_err());
        assert!(linked_holes(8, 10, 4, 5, 0, 3).is_err());
    }

    #[test]
    fn layered_grid_shape() {
        let g = layered_grid(4, 12, 3).unwrap();
        assert_eq!(g.n(), 52);
        for apex in 48..52 {
            assert_eq!(g.degree(apex), 4);
        }
        let g = layered_grid(1, 3, 1).unwrap();
        assert_eq!(g.m(), 2 + 3);
    }

    #[test]
    fn trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..30 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.m(), n.saturating_sub(1));
            assert!(t.is_connected());
        }
    }
}
