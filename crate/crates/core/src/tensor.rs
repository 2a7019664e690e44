//! Nonnegative tensors and their spectral radius.
//!
//! Hypergraph tensors are never materialized: the adjacency tensor of a
//! `k`-uniform hypergraph has entry `1/(k-1)!` on every ordering of every
//! edge, so its contraction with `x^{k-1}` at coordinate `u` collapses to
//! `sum over edges e containing u of prod_{w in e, w != u} x_w`. The signless
//! Laplacian adds `d_u x_u^{k-1}`. Small dense tensors are stored explicitly
//! for testing comparison results on arbitrary nonnegative tensors.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::constructions::BlowupMap;
use crate::error::{Error, Result};
use crate::graph::Hypergraph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Largest order and dimension accepted for a [`DenseTensor`].
pub const DENSE_MAX_ORDER: usize = 4;
pub const DENSE_MAX_DIM: usize = 6;

/// Which hypergraph operator an [`ImplicitTensor`] represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    Adjacency,
    SignlessLaplacian,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Adjacency => "adjacency",
            Operator::SignlessLaplacian => "signless-laplacian",
        }
    }
}

impl std::str::FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" | "a" | "A" => Ok(Operator::Adjacency),
            "signless-laplacian" | "q" | "Q" => Ok(Operator::SignlessLaplacian),
            other => Err(Error::param(format!("unknown operator `{other}`"))),
        }
    }
}

/// Explicit nonnegative tensor of order `k` and dimension `n`, entries in
/// row-major order of the index tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseTensor {
    order: usize,
    dim: usize,
    entries: Vec<f64>,
}

impl DenseTensor {
    pub fn new(order: usize, dim: usize, entries: Vec<f64>) -> Result<Self> {
        if !(2..=DENSE_MAX_ORDER).contains(&order) || !(1..=DENSE_MAX_DIM).contains(&dim) {
            return Err(Error::param(format!(
                "dense tensors need order in 2..={DENSE_MAX_ORDER} and dimension in 1..={DENSE_MAX_DIM}"
            )));
        }
        let size = dim.pow(order as u32);
        if entries.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: entries.len(),
            });
        }
        if let Some(index) = entries.iter().position(|&e| e < 0.0 || !e.is_finite()) {
            return Err(Error::param(format!(
                "entry {index} is negative or not finite"
            )));
        }
        Ok(Self {
            order,
            dim,
            entries,
        })
    }

    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        Self::new(order, dim, vec![0.0; dim.pow(order as u32)])
    }

    pub fn identity(order: usize, dim: usize) -> Result<Self> {
        let mut t = Self::zeros(order, dim)?;
        for i in 0..dim {
            let idx = vec![i; order];
            t.set(&idx, 1.0);
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    fn flat(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.order);
        index.iter().fold(0, |acc, &i| {
            assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, index: &[usize]) -> f64 {
        self.entries[self.flat(index)]
    }

    pub fn set(&mut self, index: &[usize], value: f64) {
        assert!(value >= 0.0, "dense tensor entries must be nonnegative");
        let f = self.flat(index);
        self.entries[f] = value;
    }

    /// Size of one slice `t[i, ..]`.
    fn slice_len(&self) -> usize {
        self.dim.pow(self.order as u32 - 1)
    }

    /// Decodes the trailing `order - 1` indices of a position within a slice.
    fn trailing(&self, mut pos: usize, out: &mut [usize]) {
        for slot in out.iter_mut().rev() {
            *slot = pos % self.dim;
            pos /= self.dim;
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Repr {
    Hypergraph {
        op: Operator,
        h: Hypergraph,
        degrees: Vec<f64>,
    },
    Dense(DenseTensor),
}

/// A nonnegative tensor accessed through its action `x -> T x^{k-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitTensor {
    repr: Repr,
}

impl ImplicitTensor {
    pub fn adjacency(h: &Hypergraph) -> Self {
        Self::of_hypergraph(h, Operator::Adjacency)
    }

    pub fn signless_laplacian(h: &Hypergraph) -> Self {
        Self::of_hypergraph(h, Operator::SignlessLaplacian)
    }

    pub fn of_hypergraph(h: &Hypergraph, op: Operator) -> Self {
        Self {
            repr: Repr::Hypergraph {
                op,
                degrees: h.degrees().into_iter().map(|d| d as f64).collect(),
                h: h.clone(),
            },
        }
    }

    pub fn dense(t: DenseTensor) -> Self {
        Self {
            repr: Repr::Dense(t),
        }
    }

    pub fn order(&self) -> usize {
        match &self.repr {
            Repr::Hypergraph { h, .. } => h.k(),
            Repr::Dense(t) => t.order,
        }
    }

    pub fn dim(&self) -> usize {
        match &self.repr {
            Repr::Hypergraph { h, .. } => h.n(),
            Repr::Dense(t) => t.dim,
        }
    }

    pub fn operator(&self) -> Option<Operator> {
        match &self.repr {
            Repr::Hypergraph { op, .. } => Some(*op),
            Repr::Dense(_) => None,
        }
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `T x^{k-1}`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        let mut y = vec![0.0; x.len()];
        self.apply_into(x, &mut y);
        Ok(y)
    }

    fn apply_into(&self, x: &[f64], y: &mut [f64]) {
        y.fill(0.0);
        match &self.repr {
            Repr::Hypergraph { op, h, degrees } => {
                let k = h.k();
                let mut prefix = vec![1.0; k + 1];
                for e in h.edges() {
                    for (i, &v) in e.iter().enumerate() {
                        prefix[i + 1] = prefix[i] * x[v];
                    }
                    // suffix product carried right to left
                    let mut suffix = 1.0;
                    for i in (0..k).rev() {
                        y[e[i]] += prefix[i] * suffix;
                        suffix *= x[e[i]];
                    }
                }
                if *op == Operator::SignlessLaplacian {
                    for ((yi, &xi), &d) in y.iter_mut().zip(x).zip(degrees) {
                        *yi += d * xi.powi(k as i32 - 1);
                    }
                }
            }
            Repr::Dense(t) => {
                let slice = t.slice_len();
                let mut idx = vec![0; t.order - 1];
                for (i, yi) in y.iter_mut().enumerate() {
                    let row = &t.entries[i * slice..(i + 1) * slice];
                    for (pos, &a) in row.iter().enumerate() {
                        if a == 0.0 {
                            continue;
                        }
                        t.trailing(pos, &mut idx);
                        *yi += a * idx.iter().map(|&j| x[j]).product::<f64>();
                    }
                }
            }
        }
    }

    /// `T x^k = sum_u x_u (T x^{k-1})_u`.
    pub fn txk(&self, x: &[f64]) -> Result<f64> {
        let y = self.apply(x)?;
        Ok(x.iter().zip(&y).map(|(a, b)| a * b).sum())
    }

    /// `r_i = sum over i_2..i_k of t_{i i_2 .. i_k}`.
    pub fn row_sums(&self) -> Vec<f64> {
        match &self.repr {
            Repr::Hypergraph { op, degrees, .. } => {
                let factor = match op {
                    Operator::Adjacency => 1.0,
                    Operator::SignlessLaplacian => 2.0,
                };
                degrees.iter().map(|d| factor * d).collect()
            }
            Repr::Dense(t) => t
                .entries
                .chunks(t.slice_len())
                .map(|row| row.iter().sum())
                .collect(),
        }
    }

    /// `s_i = (T x^{k-1})_i / x_i^{k-1}` for strictly positive `x`.
    pub fn s_ratios(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        if let Some(index) = x.iter().position(|&v| v.is_nan() || v <= 0.0) {
            return Err(Error::NonPositiveEntry { index });
        }
        let y = self.apply(x)?;
        let p = self.order() as i32 - 1;
        Ok(y.iter().zip(x).map(|(yi, xi)| yi / xi.powi(p)).collect())
    }

    /// `(min r_i, max r_i)`, which bracket the spectral radius.
    pub fn rho_bounds(&self) -> (f64, f64) {
        min_max(&self.row_sums())
    }

    /// Arcs `i -> j` of the associated digraph: some entry `t_{i i_2..i_k} > 0`
    /// with `j` among `i_2..i_k`.
    fn arcs(&self) -> Vec<(usize, usize)> {
        match &self.repr {
            Repr::Hypergraph { h, .. } => h
                .edges()
                .iter()
                .flat_map(|e| {
                    e.iter().flat_map(move |&u| {
                        e.iter().filter(move |&&w| w != u).map(move |&w| (u, w))
                    })
                })
                .collect(),
            Repr::Dense(t) => {
                let slice = t.slice_len();
                let mut idx = vec![0; t.order - 1];
                let mut arcs = Vec::new();
                for i in 0..t.dim {
                    for (pos, &a) in t.entries[i * slice..(i + 1) * slice].iter().enumerate() {
                        if a > 0.0 {
                            t.trailing(pos, &mut idx);
                            arcs.extend(idx.iter().map(|&j| (i, j)));
                        }
                    }
                }
                arcs
            }
        }
    }

    /// Whether the associated digraph is strongly connected.
    pub fn weakly_irreducible(&self) -> bool {
        let n = self.dim();
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, 0);
        let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
        for (i, j) in self.arcs() {
            g.add_edge(nodes[i], nodes[j], ());
        }
        tarjan_scc(&g).len() == 1
    }

    /// `max_i |(T x^{k-1})_i - rho x_i^{k-1}|`.
    pub fn eigen_residual(&self, x: &[f64], rho: f64) -> Result<f64> {
        let y = self.apply(x)?;
        let p = self.order() as i32 - 1;
        Ok(y.iter()
            .zip(x)
            .map(|(yi, xi)| (yi - rho * xi.powi(p)).abs())
            .fold(0.0, f64::max))
    }
}

fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// Settings for [`power_iteration_rho`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerOptions {
    /// Relative bracket width at which the iteration stops.
    pub tol: f64,
    pub max_iter: usize,
    /// Diagonal shift added to the operator during iteration.
    pub shift: f64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            shift: 1.0,
        }
    }
}

impl PowerOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

/// Outcome of a spectral radius computation.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    /// Midpoint of the final bracket.
    pub rho: f64,
    /// Positive eigenvector estimate, max entry 1.
    pub eigenvector: Vec<f64>,
    pub iterations: usize,
    /// `max s_i - min s_i` at termination.
    pub residual: f64,
    pub converged: bool,
    /// Collatz-Wielandt bracket `min s_i <= rho(T) <= max s_i` at the final vector.
    pub lower: f64,
    pub upper: f64,
}

/// Spectral radius and Perron vector of a weakly irreducible nonnegative tensor.
///
/// Iterates `x <- ((T + shift I) x^{k-1})^{[1/(k-1)]}`, normalized to max
/// entry 1, from the all-ones vector. The ratios `s_i` at every iterate
/// bracket the spectral radius; iteration stops once the bracket width of the
/// shifted operator is at most `tol` times its upper end. If `max_iter` runs
/// out, the result carries `converged = false` with a still-valid bracket.
pub fn power_iteration_rho(t: &ImplicitTensor, opts: &PowerOptions) -> Result<SpectralResult> {
    power_iteration_rho_traced(t, opts, |_, _, _| {})
}

/// [`power_iteration_rho`] reporting `(iteration, lower, upper)` of the
/// unshifted bracket at every step.
pub fn power_iteration_rho_traced<F>(
    t: &ImplicitTensor,
    opts: &PowerOptions,
    mut observe: F,
) -> Result<SpectralResult>
where
    F: FnMut(usize, f64, f64),
{
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::param("tolerance must be positive"));
    }
    if opts.max_iter == 0 {
        return Err(Error::param("max_iter must be positive"));
    }
    if !t.weakly_irreducible() {
        return Err(Error::NotWeaklyIrreducible);
    }
    let n = t.dim();
    let p = t.order() as i32 - 1;
    let root = 1.0 / p as f64;
    let mut x = vec![1.0; n];
    let mut y = vec![0.0; n];
    let (mut lower, mut upper) = (0.0, 0.0);
    let mut converged = false;
    let mut iterations = 0;
    while iterations < opts.max_iter {
        iterations += 1;
        t.apply_into(&x, &mut y);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, &xi) in y.iter_mut().zip(&x) {
            let xp = xi.powi(p);
            *yi += opts.shift * xp;
            let s = *yi / xp;
            lo = lo.min(s);
            hi = hi.max(s);
        }
        lower = lo;
        upper = hi;
        observe(iterations, lo - opts.shift, hi - opts.shift);
        if hi - lo <= opts.tol * hi {
            converged = true;
            break;
        }
        let mut max = 0.0f64;
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = yi.powf(root);
            max = max.max(*xi);
        }
        for xi in &mut x {
            *xi /= max;
        }
    }
    Ok(SpectralResult {
        rho: 0.5 * (lower + upper) - opts.shift,
        eigenvector: x,
        iterations,
        residual: upper - lower,
        converged,
        lower: lower - opts.shift,
        upper: upper - opts.shift,
    })
}

/// Spectral radius of a hypergraph operator, allowing disconnected input:
/// the maximum over connected components. Isolated vertices contribute 0.
pub fn hypergraph_rho(h: &Hypergraph, op: Operator, opts: &PowerOptions) -> Result<f64> {
    let mut best = 0.0f64;
    for comp in h.components() {
        if comp.len() == 1 {
            continue;
        }
        let sub = h.induced(&comp)?;
        let r = power_iteration_rho(&ImplicitTensor::of_hypergraph(&sub, op), opts)?;
        if !r.converged {
            return Err(Error::param(format!(
                "power iteration did not converge in {} iterations (bracket [{}, {}])",
                r.iterations, r.lower, r.upper
            )));
        }
        best = best.max(r.rho);
    }
    Ok(best)
}

/// Transfers a positive vector on the base graph to `G^{k,k/2}` by giving
/// every vertex of block `v` the value `x_v^{2/k}`.
pub fn lift_vector(x: &[f64], map: &BlowupMap) -> Result<Vec<f64>> {
    if 2 * map.s() != map.k() || map.edge_blocks().iter().any(|b| !b.is_empty()) {
        return Err(Error::param("lifting needs s = k/2 (no edge blocks)"));
    }
    if x.len() != map.vertex_blocks().len() {
        return Err(Error::DimensionMismatch {
            expected: map.vertex_blocks().len(),
            found: x.len(),
        });
    }
    if let Some(index) = x.iter().position(|&v| v.is_nan() || v <= 0.0) {
        return Err(Error::NonPositiveEntry { index });
    }
    let exponent = 2.0 / map.k() as f64;
    let mut out = vec![0.0; map.vertex_count()];
    for (block, &xv) in map.vertex_blocks().iter().zip(x) {
        let value = xv.powf(exponent);
        for &u in block {
            out[u] = value;
        }
    }
    Ok(out)
}

/// Outcome of comparing `T y^{k-1}` with `mu y^{[k-1]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsolution {
    /// `T y^{k-1} <= mu y^{[k-1]}` with some coordinate strict: `rho(T) < mu`.
    StrictlyBelow,
    /// `T y^{k-1} >= mu y^{[k-1]}` with some coordinate strict: `rho(T) > mu`.
    StrictlyAbove,
    Inconclusive,
}

/// Certifies `rho(T) < mu` or `rho(T) > mu` from a nonnegative nonzero test
/// vector `y` for a weakly irreducible `T`. Comparisons are exact.
pub fn check_subsolution(t: &ImplicitTensor, y: &[f64], mu: f64) -> Result<Subsolution> {
    t.check_len(y)?;
    if let Some(index) = y.iter().position(|&v| v.is_nan() || v < 0.0) {
        return Err(Error::NonPositiveEntry { index });
    }
    if y.iter().all(|&v| v == 0.0) {
        return Err(Error::param("test vector must be nonzero"));
    }
    if !t.weakly_irreducible() {
        return Err(Error::NotWeaklyIrreducible);
    }
    let lhs = t.apply(y)?;
    let p = t.order() as i32 - 1;
    let (mut below, mut above) = (false, false);
    for (l, &yi) in lhs.iter().zip(y) {
        let r = mu * yi.powi(p);
        below |= *l < r;
        above |= *l > r;
    }
    Ok(match (below, above) {
        (true, false) => Subsolution::StrictlyBelow,
        (false, true) => Subsolution::StrictlyAbove,
        _ => Subsolution::Inconclusive,
    })
}

/// Largest spread `max - min` of eigenvector entries within any block of `map`.
pub fn half_edge_constancy(result: &SpectralResult, map: &BlowupMap) -> f64 {
    map.vertex_blocks()
        .iter()
        .chain(map.edge_blocks())
        .filter(|b| !b.is_empty())
        .map(|b| {
            let vals: Vec<f64> = b.iter().map(|&u| result.eigenvector[u]).collect();
            let (lo, hi) = min_max(&vals);
            hi - lo
        })
        .fold(0.0, f64::max)
}
