//! Generators for the graph and hypergraph families used throughout the crate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph, SimpleGraph};

/// Vertex correspondence of a generalized power `G^{k,s}`.
///
/// Base vertex `v` becomes the `s`-set `vertex_blocks[v]`; base edge `i` (in
/// the sorted edge order of the base graph) contributes the `(k - 2s)`-set
/// `edge_blocks[i]`. Blocks are numbered consecutively: all vertex blocks in
/// base-vertex order, then all edge blocks in base-edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupMap {
    k: usize,
    s: usize,
    vertex_blocks: Vec<Vec<usize>>,
    edge_blocks: Vec<Vec<usize>>,
}

impl BlowupMap {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn vertex_blocks(&self) -> &[Vec<usize>] {
        &self.vertex_blocks
    }

    pub fn edge_blocks(&self) -> &[Vec<usize>] {
        &self.edge_blocks
    }

    /// Total number of hypergraph vertices covered by the blocks.
    pub fn vertex_count(&self) -> usize {
        self.vertex_blocks
            .iter()
            .chain(&self.edge_blocks)
            .map(Vec::len)
            .sum()
    }

    /// Base vertex whose block contains hypergraph vertex `u`, if any.
    pub fn base_vertex_of(&self, u: usize) -> Option<usize> {
        let v = u / self.s;
        (v < self.vertex_blocks.len()).then_some(v)
    }
}

/// Builds `G^{k,s}`: each vertex `v` blown up into an `s`-set, and each edge
/// `{u, v}` into the `k`-set made of both vertex blocks plus `k - 2s` fresh
/// vertices.
pub fn generalized_power(g: &SimpleGraph, k: usize, s: usize) -> Result<(Hypergraph, BlowupMap)> {
    if k < 3 {
        return Err(Error::param(format!("k = {k} must be at least 3")));
    }
    if s == 0 || 2 * s > k {
        let hint = if k % 2 == 1 && 2 * s == k + 1 {
            " (k/2 is not an integer for odd k)"
        } else {
            ""
        };
        return Err(Error::param(format!(
            "s = {s} must satisfy 1 <= s <= k/2 for k = {k}{hint}"
        )));
    }
    let extra = k - 2 * s;
    let vertex_blocks: Vec<Vec<usize>> =
        (0..g.n()).map(|v| (v * s..(v + 1) * s).collect()).collect();
    let base = g.n() * s;
    let edge_blocks: Vec<Vec<usize>> = (0..g.m())
        .map(|i| (base + i * extra..base + (i + 1) * extra).collect())
        .collect();
    let edges = g.edges().iter().zip(&edge_blocks).map(|(&(u, v), eb)| {
        let mut e = Vec::with_capacity(k);
        e.extend_from_slice(&vertex_blocks[u]);
        e.extend_from_slice(&vertex_blocks[v]);
        e.extend_from_slice(eb);
        e
    });
    let n = base + g.m() * extra;
    let h = Hypergraph::new(k, n, edges)?;
    Ok((
        h,
        BlowupMap {
            k,
            s,
            vertex_blocks,
            edge_blocks,
        },
    ))
}

fn check_s(k: usize, s: usize) -> Result<()> {
    if k < 2 || s == 0 || s >= k {
        return Err(Error::param(format!(
            "need 1 <= s <= k - 1, got k = {k}, s = {s}"
        )));
    }
    Ok(())
}

/// `k`-uniform `s`-path of length `d` on `s + d(k - s)` vertices: edge `j`
/// is the run of `k` consecutive vertices starting at `j(k - s)`.
pub fn s_path(k: usize, s: usize, d: usize) -> Result<Hypergraph> {
    check_s(k, s)?;
    if d == 0 {
        return Err(Error::param("path length d must be at least 1"));
    }
    let step = k - s;
    let n = s + d * step;
    Hypergraph::new(
        k,
        n,
        (0..d).map(|j| (j * step..j * step + k).collect::<Vec<_>>()),
    )
}

/// `k`-uniform `s`-cycle of length `d` on `d(k - s)` vertices, indices taken
/// modulo the vertex count.
pub fn s_cycle(k: usize, s: usize, d: usize) -> Result<Hypergraph> {
    check_s(k, s)?;
    let step = k - s;
    let n = d * step;
    if n < k {
        return Err(Error::param(format!(
            "s-cycle of length {d} has {n} vertices, fewer than k = {k}"
        )));
    }
    let edges = (0..d).map(|j| (0..k).map(|i| (j * step + i) % n).collect::<Vec<_>>());
    Hypergraph::new(k, n, edges).map_err(|e| match e {
        Error::DuplicateEdge(_) => Error::param(format!("s-cycle of length {d} repeats an edge")),
        other => other,
    })
}

pub fn path_graph(n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::param("path needs at least one vertex"));
    }
    SimpleGraph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle_graph(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::param(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `C_{n-1} + e`: vertex 0 is the pendant, attached to cycle vertex 1; the
/// cycle runs `1, 2, ..., n - 1, 1`.
pub fn cycle_plus_pendant(n: usize) -> Result<SimpleGraph> {
    if n < 4 {
        return Err(Error::param(format!("C_(n-1)+e needs n >= 4, got {n}")));
    }
    let cycle = (1..n).map(|i| (i, if i + 1 == n { 1 } else { i + 1 }));
    SimpleGraph::new(n, std::iter::once((0, 1)).chain(cycle))
}

/// Path on `n - 4` vertices with two pendant edges at each end.
/// Spine vertices are `0..n-4`; pendants follow, two per end.
pub fn t_graph(n: usize) -> Result<SimpleGraph> {
    if n < 6 {
        return Err(Error::param(format!("T_n needs n >= 6, got {n}")));
    }
    let spine = n - 4;
    let last = spine - 1;
    let edges = (1..spine).map(|i| (i - 1, i)).chain([
        (0, spine),
        (0, spine + 1),
        (last, spine + 2),
        (last, spine + 3),
    ]);
    SimpleGraph::new(n, edges)
}

/// Tree with spine `0..pendants.len()` and `pendants[j]` leaves hung on spine
/// vertex `j`. Leaves are numbered after the spine, in spine order.
pub fn caterpillar(pendants: &[usize]) -> Result<SimpleGraph> {
    if pendants.is_empty() {
        return Err(Error::param(
            "caterpillar spine must have at least one vertex",
        ));
    }
    let spine = pendants.len();
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for (j, &count) in pendants.iter().enumerate() {
        for _ in 0..count {
            edges.push((j, next));
            next += 1;
        }
    }
    SimpleGraph::new(next, edges)
}

/// Cycle `0..cycle_len` with a path of `tail_len` extra vertices hanging off vertex 0.
pub fn lollipop(cycle_len: usize, tail_len: usize) -> Result<SimpleGraph> {
    let cycle = cycle_graph(cycle_len)?;
    let tail = (0..tail_len).map(|i| (if i == 0 { 0 } else { cycle_len + i - 1 }, cycle_len + i));
    SimpleGraph::new(
        cycle_len + tail_len,
        cycle.edges().iter().copied().chain(tail),
    )
}

/// Replaces edge `{u, w}` by the path `u, v', w` through the fresh vertex `v' = n`.
pub fn subdivide(g: &SimpleGraph, u: usize, w: usize) -> Result<SimpleGraph> {
    if !g.has_edge(u, w) {
        return Err(Error::EdgeNotFound(u, w));
    }
    let fresh = g.n();
    let (a, b) = (u.min(w), u.max(w));
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (a, b))
        .chain([(u, fresh), (fresh, w)]);
    SimpleGraph::new(g.n() + 1, edges)
}

/// Edges lying on some internal path: a walk between vertices of degree at
/// least 3 (possibly the same vertex) whose interior vertices all have degree 2.
pub fn internal_path_edges(g: &SimpleGraph) -> Result<BTreeSet<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut internal = BTreeSet::new();
    for start in (0..g.n()).filter(|&v| g.degree(v) >= 3) {
        for &first in g.neighbors(start) {
            let mut walked = vec![key(start, first)];
            let (mut prev, mut cur) = (start, first);
            while g.degree(cur) == 2 {
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .unwrap();
                walked.push(key(cur, next));
                prev = cur;
                cur = next;
            }
            if g.degree(cur) >= 3 {
                internal.extend(walked);
            }
        }
    }
    Ok(internal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::canonical_form;

    #[test]
    fn generalized_power_small_cases() {
        let k2 = path_graph(2).unwrap();
        let (h, map) = generalized_power(&k2, 4, 2).unwrap();
        assert_eq!((h.n(), h.m()), (4, 1));
        assert_eq!(map.vertex_blocks(), &[vec![0, 1], vec![2, 3]]);
        assert!(map.edge_blocks().iter().all(Vec::is_empty));

        let (h, _) = generalized_power(&cycle_graph(3).unwrap(), 4, 2).unwrap();
        assert_eq!((h.n(), h.m()), (6, 3));

        let p3 = path_graph(3).unwrap();
        let (h, map) = generalized_power(&p3, 6, 2).unwrap();
        assert_eq!((h.n(), h.m()), (10, 2));
        assert_eq!(map.vertex_count(), 10);
        // explicit construction: blocks {0,1},{2,3},{4,5}; edge blocks {6,7},{8,9}
        let expected =
            Hypergraph::new(6, 10, [vec![0, 1, 2, 3, 6, 7], vec![2, 3, 4, 5, 8, 9]]).unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn generalized_power_parameter_errors() {
        let g = path_graph(2).unwrap();
        assert!(generalized_power(&g, 4, 3).is_err());
        assert!(generalized_power(&g, 4, 0).is_err());
        assert!(generalized_power(&g, 5, 3).is_err());
        assert!(generalized_power(&g, 2, 1).is_err());
        assert!(generalized_power(&g, 5, 2).is_ok());
    }

    #[test]
    fn degrees_follow_the_base_graph() {
        let g = cycle_plus_pendant(6).unwrap();
        for (k, s) in [(4, 2), (5, 2), (6, 1), (6, 3)] {
            let (h, map) = generalized_power(&g, k, s).unwrap();
            assert_eq!(h.n(), s * g.n() + (k - 2 * s) * g.m());
            for (v, block) in map.vertex_blocks().iter().enumerate() {
                for &u in block {
                    assert_eq!(h.degree(u).unwrap(), g.degree(v));
                }
            }
            for block in map.edge_blocks() {
                for &u in block {
                    assert_eq!(h.degree(u).unwrap(), 1);
                }
            }
            if 2 * s < k {
                let deg = h.degrees();
                assert!(h.edges().iter().all(|e| e.iter().any(|&v| deg[v] == 1)));
            }
        }
    }

    #[test]
    fn s_paths() {
        let p = s_path(4, 2, 1).unwrap();
        assert_eq!((p.n(), p.m()), (4, 1));
        let p = s_path(4, 2, 3).unwrap();
        assert_eq!((p.n(), p.m()), (8, 3));
        let p = s_path(6, 3, 2).unwrap();
        assert_eq!((p.n(), p.m()), (9, 2));
        for w in p.edges().windows(2) {
            let shared = w[0].iter().filter(|v| w[1].contains(v)).count();
            assert_eq!(shared, 3);
        }
        assert!(s_path(4, 0, 2).is_err());
        assert!(s_path(4, 4, 2).is_err());
        assert!(s_path(4, 2, 0).is_err());
    }

    #[test]
    fn s_path_matches_power_of_path() {
        for (k, s) in [(4, 1), (5, 2), (6, 1), (6, 2), (4, 2), (6, 3)] {
            for d in 1..5 {
                let (h, map) = generalized_power(&path_graph(d + 1).unwrap(), k, s).unwrap();
                let step = k - s;
                let mut perm = vec![0; h.n()];
                for (j, block) in map.vertex_blocks().iter().enumerate() {
                    for (i, &u) in block.iter().enumerate() {
                        perm[u] = j * step + i;
                    }
                }
                for (j, block) in map.edge_blocks().iter().enumerate() {
                    for (i, &u) in block.iter().enumerate() {
                        perm[u] = j * step + s + i;
                    }
                }
                assert_eq!(h.relabel(&perm).unwrap(), s_path(k, s, d).unwrap());
            }
        }
    }

    #[test]
    fn s_cycles() {
        let c = s_cycle(4, 2, 3).unwrap();
        assert_eq!((c.n(), c.m()), (6, 3));
        let (power, _) = generalized_power(&cycle_graph(3).unwrap(), 4, 2).unwrap();
        assert_eq!(c, power);
        let c = s_cycle(4, 3, 6).unwrap();
        assert_eq!((c.n(), c.m()), (6, 6));
        let c = s_cycle(4, 3, 8).unwrap();
        assert_eq!((c.n(), c.m()), (8, 8));
        assert!(s_cycle(4, 2, 2).is_err());
        assert!(s_cycle(4, 2, 1).is_err());
        for k in [4, 6] {
            for m in 3..9 {
                let (power, _) = generalized_power(&cycle_graph(m).unwrap(), k, k / 2).unwrap();
                assert_eq!(s_cycle(k, k / 2, m).unwrap(), power);
            }
        }
    }

    #[test]
    fn simple_families() {
        assert_eq!(
            path_graph(2).unwrap(),
            SimpleGraph::new(2, [(0, 1)]).unwrap()
        );
        assert_eq!(cycle_graph(3).unwrap().m(), 3);
        assert!(cycle_graph(5).unwrap().degrees().iter().all(|&d| d == 2));
        assert!(cycle_graph(2).is_err());
        assert!(path_graph(0).is_err());

        let g = cycle_plus_pendant(4).unwrap();
        let mut deg = g.degrees();
        assert_eq!((deg[0], deg[1]), (1, 3));
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![3, 2, 2, 1]);
        let g6 = cycle_plus_pendant(6).unwrap();
        assert_eq!((g6.n(), g6.m()), (6, 6));
        assert!(cycle_plus_pendant(3).is_err());
    }

    #[test]
    fn t_graphs_and_caterpillars() {
        let t6 = t_graph(6).unwrap();
        let mut deg = t6.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![3, 3, 1, 1, 1, 1]);
        let t7 = t_graph(7).unwrap();
        assert_eq!(t7.degrees().iter().filter(|&&d| d == 3).count(), 2);
        for n in 6..12 {
            let t = t_graph(n).unwrap();
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
            let mut pendants = vec![0; n - 4];
            pendants[0] = 2;
            pendants[n - 5] = 2;
            assert_eq!(caterpillar(&pendants).unwrap(), t);
        }
        assert_eq!(caterpillar(&[0, 0, 0]).unwrap(), path_graph(3).unwrap());
        assert_eq!(
            canonical_form(&caterpillar(&[2]).unwrap()),
            canonical_form(&path_graph(3).unwrap())
        );
        assert!(t_graph(5).is_err());
        assert!(caterpillar(&[]).is_err());
    }

    #[test]
    fn subdivision() {
        let k2 = path_graph(2).unwrap();
        assert_eq!(
            subdivide(&k2, 0, 1).unwrap(),
            SimpleGraph::new(3, [(0, 2), (1, 2)]).unwrap()
        );
        assert_eq!(
            canonical_form(&subdivide(&k2, 1, 0).unwrap()),
            canonical_form(&path_graph(3).unwrap())
        );
        let c4 = subdivide(&cycle_graph(3).unwrap(), 0, 2).unwrap();
        assert_eq!(
            canonical_form(&c4),
            canonical_form(&cycle_graph(4).unwrap())
        );
        let g = subdivide(&cycle_plus_pendant(4).unwrap(), 2, 3).unwrap();
        assert_eq!(
            canonical_form(&g),
            canonical_form(&cycle_plus_pendant(5).unwrap())
        );
        assert_eq!(subdivide(&k2, 0, 0), Err(Error::EdgeNotFound(0, 0)));
        assert!(subdivide(&cycle_graph(4).unwrap(), 0, 2).is_err());
    }

    #[test]
    fn lollipops() {
        let g = lollipop(3, 2).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)]);
        assert_eq!(lollipop(5, 1).unwrap().n(), 6);
        assert_eq!(
            canonical_form(&lollipop(5, 1).unwrap()),
            canonical_form(&cycle_plus_pendant(6).unwrap())
        );
    }

    #[test]
    fn internal_paths() {
        for n in 3..9 {
            assert!(internal_path_edges(&cycle_graph(n).unwrap())
                .unwrap()
                .is_empty());
        }
        for n in 4..10 {
            let g = cycle_plus_pendant(n).unwrap();
            let internal = internal_path_edges(&g).unwrap();
            let cycle: BTreeSet<_> = g.edges().iter().copied().filter(|&e| e != (0, 1)).collect();
            assert_eq!(internal, cycle);
        }
        let t8 = t_graph(8).unwrap();
        let internal = internal_path_edges(&t8).unwrap();
        assert_eq!(internal, BTreeSet::from([(0, 1), (1, 2), (2, 3)]));
        // adjacent branch vertices (l = 2)
        let t6 = t_graph(6).unwrap();
        assert_eq!(internal_path_edges(&t6).unwrap(), BTreeSet::from([(0, 1)]));
        let disconnected = SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(internal_path_edges(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn internal_paths_redetected_after_subdivision() {
        for n in 4..9 {
            let g = cycle_plus_pendant(n).unwrap();
            let sub = subdivide(&g, 1, 2).unwrap();
            assert!(sub.is_connected());
            let internal = internal_path_edges(&sub).unwrap();
            assert_eq!(internal.len(), sub.m() - 1);
            assert!(!internal.contains(&(0, 1)));
        }
    }
}
