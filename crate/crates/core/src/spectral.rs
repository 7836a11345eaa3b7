//! Spectral radius of the adjacency tensor of a uniform hypergraph.
//!
//! The tensor has entry `1/(r-1)!` on every ordering of every edge, so the
//! contraction `A x^{r-1}` reduces to a sum over incident edges of the product
//! of the other `r - 1` coordinates. It is never materialised.
//!
//! For connected inputs the tensor is weakly irreducible and the shifted
//! iteration
//!
//! ```text
//! y = A x^{r-1} + s * x^[r-1]
//! x <- normalise(y^[1/(r-1)])
//! ```
//!
//! produces per-vertex ratios `y_i / x_i^{r-1}` whose minimum and maximum
//! bracket `rho + s` and close monotonically on the spectral radius.

use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph};

/// Entries are held at or above this after each normalisation.
const MIN_ENTRY: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub shift: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions { tol: 1e-10, max_iter: 100_000, shift: 1.0 }
    }
}

impl SpectralOptions {
    pub fn with_tol(tol: f64) -> Self {
        SpectralOptions { tol, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub rho: f64,
    /// Positive eigenvector with unit `r`-norm.
    pub perron: Vec<f64>,
    /// Max-norm of `A x^{r-1} - rho x^[r-1]` at the returned vector.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Final bracket on `rho`.
    pub lower: f64,
    pub upper: f64,
}

/// `(A x^{r-1})_i`: sum over edges `e` containing `i` of the product of
/// `x_v` for `v` in `e \ {i}`. Costs `O(e(H) r)`.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(h, x)?;
    let mut out = vec![0.0; h.n()];
    let r = h.r();
    let mut prefix = vec![1.0; r + 1];
    for e in h.edges() {
        for (k, &v) in e.iter().enumerate() {
            prefix[k + 1] = prefix[k] * x[v];
        }
        let mut suffix = 1.0;
        for k in (0..r).rev() {
            out[e[k]] += prefix[k] * suffix;
            suffix *= x[e[k]];
        }
    }
    Ok(out)
}

pub fn r_norm(x: &[f64], r: usize) -> f64 {
    let r = r as f64;
    x.iter().map(|v| v.abs().powf(r)).sum::<f64>().powf(1.0 / r)
}

/// `x^T A x^{r-1} = r * sum_e prod_{v in e} x_v` for a unit `r`-norm `x`.
pub fn rayleigh(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    let norm = r_norm(x, h.r());
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NotUnitNorm { r: h.r(), norm });
    }
    Ok(tensor_form(h, x))
}

fn tensor_form(h: &Hypergraph, x: &[f64]) -> f64 {
    h.r() as f64 * h.edges().map(|e| e.iter().map(|&v| x[v]).product::<f64>()).sum::<f64>()
}

/// `max_i |(A x^{r-1})_i - rho x_i^{r-1}|`.
pub fn residual(h: &Hypergraph, rho: f64, x: &[f64]) -> Result<f64> {
    let ax = apply_adjacency(h, x)?;
    let p = (h.r() - 1) as i32;
    Ok(ax.iter().zip(x).map(|(a, xi)| (a - rho * xi.powi(p)).abs()).fold(0.0, f64::max))
}

pub fn spectral_radius(h: &Hypergraph, opts: &SpectralOptions) -> Result<SpectralReport> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::Parameter(format!("tolerance must be positive, got {}", opts.tol)));
    }
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }

    let n = h.n();
    let r = h.r();
    let p = (r - 1) as i32;
    let root = 1.0 / (r - 1) as f64;
    let shift = opts.shift;

    let mut x = vec![(n as f64).powf(-1.0 / r as f64); n];
    let mut y = vec![0.0; n];
    let (mut lower, mut upper) = (0.0, f64::INFINITY);
    let mut iterations = 0;
    let mut converged = false;

    while iterations < opts.max_iter {
        iterations += 1;
        let ax = apply_adjacency(h, &x)?;
        lower = f64::INFINITY;
        upper = 0.0;
        for i in 0..n {
            let xp = x[i].powi(p);
            y[i] = ax[i] + shift * xp;
            let ratio = y[i] / xp;
            lower = f64::min(lower, ratio);
            upper = f64::max(upper, ratio);
        }
        if upper - lower < opts.tol {
            converged = true;
            break;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi.powf(root);
        }
        normalise(&mut x, r);
    }

    let rho = 0.5 * (lower + upper) - shift;
    let residual = residual(h, rho, &x)?;
    Ok(SpectralReport {
        rho,
        perron: x,
        residual,
        iterations,
        converged,
        lower: lower - shift,
        upper: upper - shift,
    })
}

/// Adjacency-matrix spectral radius, through the `r = 2` path.
pub fn graph_spectral_radius(g: &Graph, opts: &SpectralOptions) -> Result<SpectralReport> {
    spectral_radius(&Hypergraph::from(g), opts)
}

fn normalise(x: &mut [f64], r: usize) {
    let scale = 1.0 / r_norm(x, r);
    let mut clamped = false;
    for xi in x.iter_mut() {
        *xi *= scale;
        if *xi < MIN_ENTRY {
            *xi = MIN_ENTRY;
            clamped = true;
        }
    }
    if clamped {
        let scale = 1.0 / r_norm(x, r);
        x.iter_mut().for_each(|xi| *xi *= scale);
    }
}

fn check_len(h: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::Dimension { expected: h.n(), actual: x.len() });
    }
    Ok(())
}
