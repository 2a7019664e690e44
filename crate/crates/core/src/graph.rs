//! Simple graphs and uniform hypergraphs.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, so two
/// graphs with the same edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(vec![e.0, e.1]));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_connected(&self) -> bool {
        bfs_order(self.n, 0, |v| self.adjacency[v].iter().copied()).len() == self.n
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(self.n, |v| self.adjacency[v].iter().copied())
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Upper-triangle adjacency bit string, bit `pair_index(i, j)` set for each edge.
    /// Only defined for `n <= 11`.
    pub fn adjacency_bits(&self) -> u64 {
        assert!(self.n <= 11, "adjacency bit string limited to 11 vertices");
        self.edges
            .iter()
            .fold(0u64, |acc, &(u, v)| acc | 1 << pair_index(u, v))
    }
}

/// Position of the pair `i < j` in row-major upper-triangle order.
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::param("relabeling is not a permutation"));
        }
    }
    Ok(())
}

fn bfs_order<F, I>(n: usize, start: usize, mut neighbors: F) -> Vec<usize>
where
    F: FnMut(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

fn components<F, I>(n: usize, mut neighbors: F) -> Vec<Vec<usize>>
where
    F: FnMut(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut comp = vec![s];
        label[s] = id;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for w in neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = id;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A `k`-uniform hypergraph on vertices `0..n`.
///
/// Each edge is a sorted array of `k` distinct vertices and the edge list is
/// kept in lexicographic order, so edge identity is the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new<I, E>(k: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<usize>>,
    {
        if k < 2 {
            return Err(Error::param(format!(
                "uniformity k = {k} must be at least 2"
            )));
        }
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let mut e: Vec<usize> = e.into();
            if e.len() != k {
                return Err(Error::InvalidEdge {
                    reason: format!("expected {k} vertices, found {}", e.len()),
                    edge: e,
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    edge: e,
                    reason: "repeated vertex".into(),
                });
            }
            if set.contains(&e) {
                return Err(Error::DuplicateEdge(e));
            }
            set.insert(e);
        }
        let edges: Vec<Vec<usize>> = set.into_iter().collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Ok(Self {
            k,
            n,
            edges,
            incidence,
        })
    }

    /// Edgeless `k`-uniform hypergraph on `n` vertices.
    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, std::iter::empty::<Vec<usize>>())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.incidence
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Whether every two vertices are joined by a walk. Breadth-first search
    /// over the vertex/edge incidence structure.
    pub fn is_connected(&self) -> bool {
        self.reach_from(0).len() == self.n
    }

    fn reach_from(&self, start: usize) -> Vec<usize> {
        let mut edge_seen = vec![false; self.m()];
        let mut vertex_seen = vec![false; self.n];
        let mut order = vec![start];
        vertex_seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &e in &self.incidence[v] {
                if std::mem::replace(&mut edge_seen[e], true) {
                    continue;
                }
                for &w in &self.edges[e] {
                    if !vertex_seen[w] {
                        vertex_seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        order
    }

    /// Vertex sets of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(self.n, |v| {
            self.incidence[v]
                .iter()
                .flat_map(move |&e| self.edges[e].iter().copied())
        })
    }

    /// Proper sub-hypergraph with the edge at `index` deleted; vertex set unchanged.
    pub fn remove_edge(&self, index: usize) -> Result<Self> {
        if index >= self.m() {
            return Err(Error::EdgeIndexOutOfRange { index, m: self.m() });
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, e)| e.clone());
        Self::new(self.k, self.n, edges)
    }

    /// Sub-hypergraph induced on `vertices` (sorted), renumbered `0..vertices.len()`.
    /// Keeps only edges lying entirely inside the set.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| index[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| index[v]).collect::<Vec<_>>());
        Self::new(self.k, vertices.len(), edges)
    }

    /// Same hypergraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        Self::new(
            self.k,
            self.n,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }
}

/// Two-part partition of a vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    part_one: Vec<usize>,
    part_two: Vec<usize>,
}

impl Bipartition {
    /// Partition of `0..n` from an indicator: `in_one[v]` puts `v` in part one.
    pub fn from_indicator(in_one: &[bool]) -> Self {
        let (one, two): (Vec<usize>, Vec<usize>) = (0..in_one.len()).partition(|&v| in_one[v]);
        Self {
            part_one: one,
            part_two: two,
        }
    }

    /// Checks that the two parts are disjoint and cover `0..n`.
    pub fn new(n: usize, part_one: Vec<usize>, part_two: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; n];
        for &v in part_one.iter().chain(&part_two) {
            if v >= n {
                return Err(Error::NotAPartition(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPartition(format!("vertex {v} listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::NotAPartition(format!("vertex {v} not covered")));
        }
        let mut part_one = part_one;
        let mut part_two = part_two;
        part_one.sort_unstable();
        part_two.sort_unstable();
        Ok(Self { part_one, part_two })
    }

    pub fn part_one(&self) -> &[usize] {
        &self.part_one
    }

    pub fn part_two(&self) -> &[usize] {
        &self.part_two
    }

    pub fn len(&self) -> usize {
        self.part_one.len() + self.part_two.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn indicator(&self) -> Vec<bool> {
        let mut ind = vec![false; self.len()];
        for &v in &self.part_one {
            ind[v] = true;
        }
        ind
    }
}
