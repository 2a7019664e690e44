//! Bipartiteness of simple graphs and odd-bipartiteness of even-uniform
//! hypergraphs, decided exactly with certificates.
//!
//! A hypergraph is odd-bipartite when its vertices split into two parts that
//! every edge meets in an odd number of vertices. With `x_v = 1` meaning
//! `v` is in part one, that is the GF(2) system `sum_{v in e} x_v = 1` for
//! every edge `e`; for even `k` the second part's parity follows.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Hypergraph, SimpleGraph};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Dense GF(2) bit vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut row = Self::zeros(len);
        for &i in indices {
            row.set(i, true);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn xor_assign(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the overlap with `other`.
    pub fn dot(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Linear system `rows * x = rhs` over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySystem {
    n: usize,
    rows: Vec<BitRow>,
    rhs: Vec<bool>,
}

impl ParitySystem {
    pub fn new(n: usize, rows: Vec<BitRow>, rhs: Vec<bool>) -> Result<Self> {
        if rows.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                expected: rows.len(),
                found: rhs.len(),
            });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        Ok(Self { n, rows, rhs })
    }

    /// One row per edge with a bit for each incident vertex, right-hand side all ones.
    pub fn odd_bipartition_system(h: &Hypergraph) -> Self {
        let rows = h
            .edges()
            .iter()
            .map(|e| BitRow::from_indices(h.n(), e))
            .collect();
        Self {
            n: h.n(),
            rows,
            rhs: vec![true; h.m()],
        }
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn rhs(&self) -> &[bool] {
        &self.rhs
    }

    pub fn is_satisfied_by(&self, x: &BitRow) -> bool {
        self.rows
            .iter()
            .zip(&self.rhs)
            .all(|(row, &b)| row.dot(x) == b)
    }
}

/// Gauss-Jordan elimination over GF(2). Returns a solution with every free
/// variable set to 0, or `None` when the system is inconsistent.
pub fn gf2_solve(sys: &ParitySystem) -> Option<BitRow> {
    let n = sys.n;
    // augmented rows: bit n holds the right-hand side
    let mut rows: Vec<BitRow> = sys
        .rows
        .iter()
        .zip(&sys.rhs)
        .map(|(r, &b)| {
            let mut a = BitRow::zeros(n + 1);
            a.words[..r.words.len()].copy_from_slice(&r.words);
            a.set(n, b);
            a
        })
        .collect();

    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot, tail) = tail.split_first_mut().expect("pivot row exists");
        let pivot = &*pivot;
        for r in head.iter_mut().chain(tail.iter_mut()) {
            if r.get(col) {
                r.xor_assign(pivot);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| r.get(n)) {
        return None;
    }
    let mut x = BitRow::zeros(n);
    for (r, &col) in pivots.iter().enumerate() {
        x.set(col, rows[r].get(n));
    }
    Some(x)
}

/// Proper 2-coloring by BFS layering in each component, or `None` if the
/// graph has an odd cycle.
pub fn is_bipartite(g: &SimpleGraph) -> Option<Bipartition> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let indicator: Vec<bool> = color.into_iter().map(Option::unwrap).collect();
    let b = Bipartition::from_indicator(&indicator);
    debug_assert!(g.edges().iter().all(|&(u, v)| indicator[u] != indicator[v]));
    Some(b)
}

/// Odd-bipartition certificate for an even-uniform hypergraph, or `None`
/// when none exists. Odd `k` is rejected since both intersections cannot be
/// odd when they sum to `k`.
pub fn odd_bipartition(h: &Hypergraph) -> Result<Option<Bipartition>> {
    if h.k() % 2 == 1 {
        return Err(Error::OddUniformity(h.k()));
    }
    let sys = ParitySystem::odd_bipartition_system(h);
    let Some(x) = gf2_solve(&sys) else {
        return Ok(None);
    };
    let b = Bipartition::from_indicator(&x.to_bools());
    assert!(
        verify_odd_bipartition(h, &b)?,
        "GF(2) solution failed odd-bipartition verification"
    );
    Ok(Some(b))
}

/// Whether every edge meets both parts of `b` in an odd number of vertices.
pub fn verify_odd_bipartition(h: &Hypergraph, b: &Bipartition) -> Result<bool> {
    if b.len() != h.n() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices, hypergraph has {}",
            b.len(),
            h.n()
        )));
    }
    let b = Bipartition::new(h.n(), b.part_one().to_vec(), b.part_two().to_vec())?;
    let in_one = b.indicator();
    Ok(h.edges().iter().all(|e| {
        let ones = e.iter().filter(|&&v| in_one[v]).count();
        ones % 2 == 1 && (e.len() - ones) % 2 == 1
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle_graph, generalized_power, path_graph, s_cycle};

    /// Exhaustive search over all 2^n part-one indicators.
    fn brute_force_consistent(sys: &ParitySystem) -> bool {
        let n = sys.variables();
        (0u64..1 << n).any(|mask| {
            let mut x = BitRow::zeros(n);
            for i in 0..n {
                x.set(i, mask >> i & 1 == 1);
            }
            sys.is_satisfied_by(&x)
        })
    }

    fn lift(m: usize) -> Hypergraph {
        generalized_power(&cycle_graph(m).unwrap(), 4, 2).unwrap().0
    }

    #[test]
    fn bipartite_graphs() {
        let b = is_bipartite(&cycle_graph(4).unwrap()).unwrap();
        assert_eq!((b.part_one().len(), b.part_two().len()), (2, 2));
        assert!(is_bipartite(&cycle_graph(3).unwrap()).is_none());
        assert!(is_bipartite(&path_graph(7).unwrap()).is_some());
        let forest = SimpleGraph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(is_bipartite(&forest).is_some());
    }

    #[test]
    fn single_row_system() {
        let h = Hypergraph::new(4, 4, [vec![0, 1, 2, 3]]).unwrap();
        let sys = ParitySystem::odd_bipartition_system(&h);
        let x = gf2_solve(&sys).unwrap();
        assert!(sys.is_satisfied_by(&x));
        assert_eq!(x.count_ones(), 1);
    }

    #[test]
    fn lifted_cycles_against_brute_force() {
        let c3 = ParitySystem::odd_bipartition_system(&lift(3));
        assert!(!brute_force_consistent(&c3));
        assert!(gf2_solve(&c3).is_none());
        let c4 = ParitySystem::odd_bipartition_system(&lift(4));
        assert!(brute_force_consistent(&c4));
        assert!(c4.is_satisfied_by(&gf2_solve(&c4).unwrap()));
    }

    #[test]
    fn odd_bipartition_examples() {
        assert!(odd_bipartition(&lift(4)).unwrap().is_some());
        assert!(odd_bipartition(&lift(3)).unwrap().is_none());
        assert!(odd_bipartition(&s_cycle(4, 3, 8).unwrap())
            .unwrap()
            .is_some());
        assert!(odd_bipartition(&s_cycle(4, 3, 6).unwrap())
            .unwrap()
            .is_none());
        let h3 = Hypergraph::new(3, 3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(odd_bipartition(&h3), Err(Error::OddUniformity(3)));
    }

    #[test]
    fn verification() {
        let h = Hypergraph::new(4, 4, [vec![0, 1, 2, 3]]).unwrap();
        let all_one = Bipartition::new(4, vec![0, 1, 2, 3], vec![]).unwrap();
        assert!(!verify_odd_bipartition(&h, &all_one).unwrap());
        let split = Bipartition::new(4, vec![2], vec![0, 1, 3]).unwrap();
        assert!(verify_odd_bipartition(&h, &split).unwrap());
        let short = Bipartition::new(3, vec![0], vec![1, 2]).unwrap();
        assert!(verify_odd_bipartition(&h, &short).is_err());
    }

    #[test]
    fn free_variables_default_to_zero() {
        let sys = ParitySystem::new(3, vec![BitRow::from_indices(3, &[1, 2])], vec![true]).unwrap();
        let x = gf2_solve(&sys).unwrap();
        assert_eq!(x.to_bools(), vec![false, true, false]);
        let empty = ParitySystem::new(5, vec![], vec![]).unwrap();
        assert_eq!(gf2_solve(&empty).unwrap().count_ones(), 0);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        // 130 variables chained x_i + x_{i+1} = 1: alternate assignment
        let n = 130;
        let rows = (0..n - 1)
            .map(|i| BitRow::from_indices(n, &[i, i + 1]))
            .collect();
        let sys = ParitySystem::new(n, rows, vec![true; n - 1]).unwrap();
        let x = gf2_solve(&sys).unwrap();
        assert!(sys.is_satisfied_by(&x));
        // close the odd cycle: inconsistent
        let mut rows: Vec<BitRow> = (0..n - 1)
            .map(|i| BitRow::from_indices(n, &[i, i + 1]))
            .collect();
        rows.push(BitRow::from_indices(n, &[0, n - 2]));
        let sys = ParitySystem::new(n, rows, vec![true; n]).unwrap();
        assert!(gf2_solve(&sys).is_none());
    }
}
