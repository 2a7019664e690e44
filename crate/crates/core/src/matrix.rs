//! Matrix-level spectral radii of simple graphs and the limit points `alpha_n`.
//!
//! This is a separate code path from [`crate::tensor`]: it works directly on
//! adjacency lists of the base graph and is used as the reference the lifted
//! hypergraph computations are compared against.

use crate::constructions::cycle_plus_pendant;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::tensor::Operator;

/// Dominant eigenpair of a graph matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSpectrum {
    pub rho: f64,
    /// Positive Perron vector, max entry 1.
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub lower: f64,
    pub upper: f64,
}

const MATRIX_MAX_ITER: usize = 10_000_000;

fn multiply(g: &SimpleGraph, op: Operator, x: &[f64], y: &mut [f64]) {
    for (v, yv) in y.iter_mut().enumerate() {
        let mut acc: f64 = g.neighbors(v).iter().map(|&w| x[w]).sum();
        if op == Operator::SignlessLaplacian {
            acc += g.degree(v) as f64 * x[v];
        }
        *yv = acc;
    }
}

/// Shift-by-one power iteration on `A(G)` or `Q(G) = D + A` from the all-ones
/// vector. Stops once `max_i ((M+I)x)_i/x_i - min_i ((M+I)x)_i/x_i <= tol`.
pub fn rho_matrix(g: &SimpleGraph, op: Operator, tol: f64) -> Result<MatrixSpectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param("tolerance must be positive"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut x = vec![1.0; n];
    let mut y = vec![0.0; n];
    for iterations in 1..=MATRIX_MAX_ITER {
        multiply(g, op, &x, &mut y);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, &xi) in y.iter_mut().zip(&x) {
            *yi += xi;
            let r = *yi / xi;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi - lo <= tol {
            return Ok(MatrixSpectrum {
                rho: 0.5 * (lo + hi) - 1.0,
                vector: x,
                iterations,
                lower: lo - 1.0,
                upper: hi - 1.0,
            });
        }
        let max = y.iter().copied().fold(0.0, f64::max);
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = yi / max;
        }
    }
    Err(Error::param(format!(
        "matrix power iteration did not reach tolerance {tol} in {MATRIX_MAX_ITER} steps"
    )))
}

pub fn rho_adjacency_matrix(g: &SimpleGraph, tol: f64) -> Result<MatrixSpectrum> {
    rho_matrix(g, Operator::Adjacency, tol)
}

pub fn rho_signless_laplacian_matrix(g: &SimpleGraph, tol: f64) -> Result<MatrixSpectrum> {
    rho_matrix(g, Operator::SignlessLaplacian, tol)
}

/// `P_n(x) / x^{n+1} = 1 - sum_{j=2}^{n+1} x^{-j}`.
///
/// Same positive root as `P_n(x) = x^{n+1} - (1 + x + ... + x^{n-1})`, but
/// increasing in `x` with slope of order one near the root, so the residual
/// is meaningful at double precision.
fn scaled_p(n: usize, x: f64) -> f64 {
    let inv = 1.0 / x;
    let mut term = inv;
    let mut sum = 0.0;
    for _ in 0..n {
        term *= inv;
        sum += term;
    }
    1.0 - sum
}

/// Raw `P_n(x) = x^{n+1} - (1 + x + ... + x^{n-1})`.
pub fn p_n(n: usize, x: f64) -> f64 {
    let geometric: f64 = (0..n).map(|j| x.powi(j as i32)).sum();
    x.powi(n as i32 + 1) - geometric
}

/// Positive root `beta_n` of `P_n`, by bisection on `[1, 2]`.
///
/// `tol` bounds the residual of the scaled polynomial `P_n(x)/x^{n+1}`;
/// bisection continues to the limit of double precision regardless.
pub fn beta_n(n: usize, tol: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::param("beta_n is defined for n >= 1"));
    }
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    if scaled_p(n, lo) >= 0.0 {
        return Ok(lo);
    }
    if scaled_p(n, hi) <= 0.0 {
        lo = 0.5;
        hi = 4.0;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = scaled_p(n, mid);
        if f == 0.0 {
            return Ok(mid);
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = if scaled_p(n, hi).abs() < scaled_p(n, lo).abs() {
        hi
    } else {
        lo
    };
    if scaled_p(n, root).abs() > tol {
        return Err(Error::param(format!("beta_{n} residual exceeds {tol}")));
    }
    Ok(root)
}

/// `alpha_n = beta_n^{1/2} + beta_n^{-1/2}`.
pub fn alpha_n(n: usize, tol: f64) -> Result<f64> {
    let b = beta_n(n, tol)?;
    Ok(b.sqrt() + 1.0 / b.sqrt())
}

/// Golden mean `(1 + sqrt 5) / 2`.
pub fn golden_mean() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `sqrt(2 + sqrt 5) = tau^{3/2}`, the limit of `alpha_n`.
pub fn tau_threshold() -> f64 {
    (2.0 + 5f64.sqrt()).sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitPointRow {
    pub n: usize,
    pub beta: f64,
    pub alpha: f64,
}

/// `(n, beta_n, alpha_n)` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitPointTable {
    pub rows: Vec<LimitPointRow>,
    pub tau_threshold: f64,
}

impl LimitPointTable {
    pub fn compute(n_max: usize, tol: f64) -> Result<Self> {
        let rows = (1..=n_max)
            .map(|n| {
                let beta = beta_n(n, tol)?;
                Ok(LimitPointRow {
                    n,
                    beta,
                    alpha: beta.sqrt() + 1.0 / beta.sqrt(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            rows,
            tau_threshold: tau_threshold(),
        })
    }

    pub fn strictly_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].alpha < w[1].alpha)
    }

    pub fn below_threshold(&self) -> bool {
        self.rows.iter().all(|r| r.alpha < self.tau_threshold)
    }
}

/// One term of the `C_{2n+1} + e` sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct PendantCycleTerm {
    pub n: usize,
    pub rho: f64,
    /// Spectral radius of the tree obtained by deleting the edge opposite
    /// the degree-3 vertex.
    pub tree_rho: f64,
    /// Perron vector of `A(C_{2n+1} + e)`, indexed like [`cycle_plus_pendant`].
    pub vector: Vec<f64>,
}

impl PendantCycleTerm {
    pub fn gap(&self) -> f64 {
        self.rho - tau_threshold()
    }

    /// `2/(2n+1) + (rho(tree) - tau^{3/2})`, an upper bound on [`gap`](Self::gap).
    pub fn gap_bound(&self) -> f64 {
        2.0 / (2 * self.n + 1) as f64 + (self.tree_rho - tau_threshold())
    }
}

/// `rho(A(C_{2n+1} + e))` for `n = 1..=n_max`, together with the tree term
/// of the convergence bound.
pub fn pendant_cycle_rho_sequence(n_max: usize, tol: f64) -> Result<Vec<PendantCycleTerm>> {
    if n_max == 0 {
        return Err(Error::param("n_max must be at least 1"));
    }
    use crate::par::*;
    (1..=n_max)
        .into_par_iter()
        .map(|n| pendant_cycle_term(n, tol))
        .collect()
}

fn pendant_cycle_term(n: usize, tol: f64) -> Result<PendantCycleTerm> {
    let g = cycle_plus_pendant(2 * n + 2)?;
    let spectrum = rho_adjacency_matrix(&g, tol)?;
    // cycle vertices are 1..=2n+1; v_{n+1} v_{n+2} is the edge opposite vertex 1
    let cut = (n + 1, n + 2);
    let tree = SimpleGraph::new(g.n(), g.edges().iter().copied().filter(|&e| e != cut))?;
    let tree_rho = rho_adjacency_matrix(&tree, tol)?.rho;
    Ok(PendantCycleTerm {
        n,
        rho: spectrum.rho,
        tree_rho,
        vector: spectrum.vector,
    })
}
