//! Exhaustive enumeration of small graphs and the extremal search over
//! connected non-bipartite graphs.
//!
//! Isomorphism classes are represented by a canonical adjacency bit string:
//! the minimum, over all relabelings that respect a degree-based vertex
//! ordering, of the upper-triangle adjacency bits. Classes on `n` vertices
//! are produced from classes on `n - 1` vertices by adding a vertex with every
//! possible neighborhood, which reaches every graph since deleting any vertex
//! leaves a graph on `n - 1` vertices.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{pair_index, SimpleGraph};
use crate::matrix::rho_matrix;
use crate::par::*;
use crate::parity::is_bipartite;
use crate::tensor::Operator;

/// Largest order accepted by default; `big` unlocks [`BIG_MAX_ORDER`].
pub const DEFAULT_MAX_ORDER: usize = 7;
pub const BIG_MAX_ORDER: usize = 8;

/// Canonical representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    /// The canonically labeled graph.
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, edges_of_bits(self.n, self.bits))
            .expect("canonical bits form a simple graph")
    }
}

fn edges_of_bits(n: usize, bits: u64) -> impl Iterator<Item = (usize, usize)> {
    (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(move |&(i, j)| bits >> pair_index(i, j) & 1 == 1)
}

/// Canonical form of `g`; equal for two graphs iff they are isomorphic.
///
/// Vertices are first grouped by `(degree, sorted neighbor degrees)`, groups
/// ordered by that key, and only relabelings sending each group onto its
/// block of positions are searched. Limited to 10 vertices.
pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 10, "canonical form supports at most 10 vertices");
    let deg = g.degrees();
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| deg[w]).collect();
        nd.sort_unstable_by(|a, b| b.cmp(a));
        Reverse((deg[v], nd))
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_cached_key(|&v| key(v));
    // cell_of_position[p] = range of positions sharing p's key
    let keys: Vec<_> = order.iter().map(|&v| key(v)).collect();
    let mut cell_start = vec![0; n];
    for p in 1..n {
        cell_start[p] = if keys[p] == keys[p - 1] {
            cell_start[p - 1]
        } else {
            p
        };
    }

    let mut search = Search {
        g,
        order: &order,
        cell_start: &cell_start,
        position: vec![usize::MAX; n],
        used: vec![false; n],
        best: u64::MAX,
    };
    search.assign(0);
    CanonicalForm {
        n,
        bits: search.best,
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    order: &'a [usize],
    cell_start: &'a [usize],
    position: Vec<usize>,
    used: Vec<bool>,
    best: u64,
}

impl Search<'_> {
    fn assign(&mut self, p: usize) {
        let n = self.g.n();
        if p == n {
            let bits = self.g.edges().iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (self.position[u], self.position[v]);
                acc | 1 << pair_index(a.min(b), a.max(b))
            });
            self.best = self.best.min(bits);
            return;
        }
        let start = self.cell_start[p];
        let end = (start..n)
            .find(|&q| self.cell_start[q] != start)
            .unwrap_or(n);
        for slot in start..end {
            let v = self.order[slot];
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.position[v] = p;
            self.assign(p + 1);
            self.used[v] = false;
        }
    }
}

/// All graphs on `n` vertices up to isomorphism, sorted by canonical form.
pub fn graph_classes(n: usize) -> Vec<CanonicalForm> {
    assert!(
        (1..=BIG_MAX_ORDER).contains(&n),
        "graph classes supported for 1..=8 vertices"
    );
    let mut classes = vec![CanonicalForm { n: 1, bits: 0 }];
    for order in 2..=n {
        let prev = order - 1;
        let candidates: Vec<(u64, u64)> = classes
            .iter()
            .flat_map(|c| (0u64..1 << prev).map(move |s| (c.bits, s)))
            .collect();
        let mut next: Vec<CanonicalForm> = candidates
            .into_par_iter()
            .map(|(bits, neighbors)| {
                let extra = (0..prev)
                    .filter(|&i| neighbors >> i & 1 == 1)
                    .map(|i| (i, prev));
                let g = SimpleGraph::new(order, edges_of_bits(prev, bits).chain(extra))
                    .expect("augmented graph is simple");
                canonical_form(&g)
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        classes = next;
    }
    classes
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_classes(n: usize) -> Vec<CanonicalForm> {
    graph_classes(n)
        .into_iter()
        .filter(|c| c.graph().is_connected())
        .collect()
}

/// Connected non-bipartite graphs on `n` vertices up to isomorphism.
pub fn connected_nonbipartite_classes(n: usize) -> Vec<CanonicalForm> {
    connected_classes(n)
        .into_iter()
        .filter(|c| is_bipartite(&c.graph()).is_none())
        .collect()
}

fn check_order(n: usize, min: usize, big: bool) -> Result<()> {
    let max = if big {
        BIG_MAX_ORDER
    } else {
        DEFAULT_MAX_ORDER
    };
    if n < min || n > max {
        let hint = if !big && n == BIG_MAX_ORDER {
            " (pass the big flag for n = 8)"
        } else {
            ""
        };
        return Err(Error::param(format!(
            "n = {n} outside supported range {min}..={max}{hint}"
        )));
    }
    Ok(())
}

/// Every labeled graph on `n` vertices that is connected and non-bipartite,
/// in order of its adjacency bit string.
pub fn enumerate_connected_nonbipartite(
    n: usize,
    big: bool,
) -> Result<impl Iterator<Item = SimpleGraph>> {
    check_order(n, 3, big)?;
    let pairs = n * (n - 1) / 2;
    Ok((0u64..1 << pairs).filter_map(move |bits| {
        // a connected graph needs at least n - 1 edges
        if (bits.count_ones() as usize) < n - 1 {
            return None;
        }
        let g = SimpleGraph::new(n, edges_of_bits(n, bits)).ok()?;
        (g.is_connected() && is_bipartite(&g).is_none()).then_some(g)
    }))
}

/// Result of [`min_rho_search`].
#[derive(Clone, Debug, PartialEq)]
pub struct MinRhoResult {
    pub n: usize,
    pub operator: Operator,
    pub min: f64,
    /// Every class within the tie window of the minimum, sorted by canonical form.
    pub argmin: Vec<(CanonicalForm, f64)>,
    pub classes_searched: usize,
}

impl MinRhoResult {
    pub fn unique(&self) -> Option<&CanonicalForm> {
        match self.argmin.as_slice() {
            [(c, _)] => Some(c),
            _ => None,
        }
    }
}

/// Minimum matrix spectral radius over connected non-bipartite graphs on `n`
/// vertices. All classes within `tie_window` of the minimum are reported.
pub fn min_rho_search(
    n: usize,
    op: Operator,
    tol: f64,
    tie_window: f64,
    big: bool,
) -> Result<MinRhoResult> {
    check_order(n, 4, big)?;
    let classes = connected_nonbipartite_classes(n);
    let values: Vec<(CanonicalForm, f64)> = classes
        .into_par_iter()
        .map(|c| rho_matrix(&c.graph(), op, tol).map(|s| (c, s.rho)))
        .collect::<Result<_>>()?;
    let min = values.iter().map(|(_, r)| *r).fold(f64::INFINITY, f64::min);
    let mut argmin: Vec<_> = values
        .iter()
        .filter(|(_, r)| *r - min <= tie_window)
        .cloned()
        .collect();
    argmin.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(MinRhoResult {
        n,
        operator: op,
        min,
        argmin,
        classes_searched: values.len(),
    })
}
