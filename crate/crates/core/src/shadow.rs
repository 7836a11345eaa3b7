//! Shadow graphs and the spectral bounds that pass through them.
//!
//! For a connected linear `r`-uniform `H`, `rho(H) <= rho(shadow(H)) / (r-1)`
//! with equality exactly when `H` is regular. Combined with
//! `rho(shadow) <= n - 1` this gives `rho(H) <= (n-1)/(r-1)`, tight exactly
//! on 2-(n,r,1) designs.

use crate::chromatic::turan_graph;
use crate::designs::verify_design;
use crate::error::{Error, Result};
use crate::hypercore::{Graph, Hypergraph};
use crate::spectral::{graph_spectral_radius, spectral_radius, SpectralOptions};

/// Absolute tolerance for calling two independently computed radii equal.
pub const EQUALITY_TOL: f64 = 1e-6;

/// Replaces every edge with a clique on its vertices.
pub fn shadow(h: &Hypergraph) -> Graph {
    let mut pairs: Vec<(usize, usize)> = h
        .edges()
        .flat_map(|e| e.iter().enumerate().flat_map(move |(a, &x)| e[a + 1..].iter().map(move |&y| (x, y))))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    Graph::from_canonical(h.n(), pairs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShadowTransfer {
    pub rho: f64,
    /// `rho(shadow) / (r - 1)`.
    pub shadow_scaled: f64,
    pub gap: f64,
    pub equality: bool,
    pub regular: bool,
    pub r: usize,
}

impl ShadowTransfer {
    pub fn bound_holds(&self) -> bool {
        self.gap >= -EQUALITY_TOL
    }

    /// The equality case must coincide with regularity. At `r = 2` the
    /// shadow is the graph itself, so only the inequality is meaningful.
    pub fn equality_matches_regularity(&self) -> bool {
        self.r == 2 || self.equality == self.regular
    }

    pub fn pass(&self) -> bool {
        self.bound_holds() && self.equality_matches_regularity()
    }
}

fn require_linear_connected(h: &Hypergraph) -> Result<()> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Computes both sides of the shadow transfer bound with the same tolerance.
pub fn lconn_check(h: &Hypergraph, opts: &SpectralOptions) -> Result<ShadowTransfer> {
    require_linear_connected(h)?;
    let g = shadow(h);
    let (hyper, graph) = rayon::join(|| spectral_radius(h, opts), || graph_spectral_radius(&g, opts));
    let rho = hyper?.rho;
    let shadow_scaled = graph?.rho / (h.r() - 1) as f64;
    let gap = shadow_scaled - rho;
    Ok(ShadowTransfer {
        rho,
        shadow_scaled,
        gap,
        equality: gap.abs() <= EQUALITY_TOL,
        regular: h.degree_profile().is_regular(),
        r: h.r(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GlobalBound {
    pub rho: f64,
    /// `(n - 1) / (r - 1)`.
    pub bound: f64,
    pub is_design: bool,
    pub equality: bool,
}

impl GlobalBound {
    pub fn pass(&self, tol: f64) -> bool {
        self.rho <= self.bound + tol && self.is_design == self.equality
    }
}

pub fn global_bound_check(h: &Hypergraph, opts: &SpectralOptions) -> Result<GlobalBound> {
    require_linear_connected(h)?;
    let rho = spectral_radius(h, opts)?.rho;
    let bound = (h.n() - 1) as f64 / (h.r() - 1) as f64;
    Ok(GlobalBound {
        rho,
        bound,
        is_design: verify_design(h),
        equality: (rho - bound).abs() <= EQUALITY_TOL,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TuranBound {
    pub k: usize,
    pub n: usize,
    pub rho: f64,
    /// `n (1 - 1/k)`.
    pub bound: f64,
    pub divisible: bool,
    pub equality: bool,
    pub tol: f64,
}

impl TuranBound {
    pub fn pass(&self) -> bool {
        self.rho <= self.bound + self.tol && self.equality == self.divisible
    }
}

/// Spectral radius of the Turán graph `T_k(n)` against `n (1 - 1/k)`;
/// equality (within `tol`) is expected exactly when `k` divides `n`. The
/// iteration itself runs a hundred times tighter than `tol`.
pub fn turan_bound_check(k: usize, n: usize, tol: f64) -> Result<TuranBound> {
    if k < 2 || k > n {
        return Err(Error::Parameter(format!("need 2 <= k <= n, got k = {k}, n = {n}")));
    }
    let opts = SpectralOptions::with_tol(tol / 100.0);
    let rho = graph_spectral_radius(&turan_graph(n, k)?, &opts)?.rho;
    let bound = n as f64 * (1.0 - 1.0 / k as f64);
    Ok(TuranBound { k, n, rho, bound, divisible: n.is_multiple_of(k), equality: (rho - bound).abs() <= tol, tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs;

    fn opts() -> SpectralOptions {
        SpectralOptions::default()
    }

    fn loose_path() -> Hypergraph {
        Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap()
    }

    #[test]
    fn shadow_examples() {
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(shadow(&single), Graph::complete(3).unwrap());
        let fano = designs::steiner_triple_system(7).unwrap();
        assert_eq!(shadow(&fano), Graph::complete(7).unwrap());
        let disjoint = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(shadow(&disjoint).edges(), &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]);
    }

    #[test]
    fn shadow_edge_count_of_linear_hypergraph() {
        let h = designs::steiner_triple_system(13).unwrap();
        assert_eq!(shadow(&h).edge_count(), h.edge_count() * 3);
    }

    #[test]
    fn transfer_equality_on_regular_inputs() {
        let fano = designs::steiner_triple_system(7).unwrap();
        let t = lconn_check(&fano, &opts()).unwrap();
        assert!((t.rho - 3.0).abs() < 1e-9 && (t.shadow_scaled - 3.0).abs() < 1e-9);
        assert!(t.equality && t.regular && t.pass());

        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let t = lconn_check(&single, &opts()).unwrap();
        assert!((t.rho - 1.0).abs() < 1e-9 && (t.shadow_scaled - 1.0).abs() < 1e-9);
        assert!(t.equality && t.pass());
    }

    #[test]
    fn transfer_strict_on_loose_path() {
        let t = lconn_check(&loose_path(), &opts()).unwrap();
        assert!(t.gap > EQUALITY_TOL);
        assert!(!t.equality && !t.regular && t.pass());
    }

    #[test]
    fn transfer_rejects_nonlinear_or_disconnected() {
        let shared = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(lconn_check(&shared, &opts()), Err(Error::NotLinear));
        let disjoint = Hypergraph::new(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(lconn_check(&disjoint, &opts()), Err(Error::NotConnected));
    }

    #[test]
    fn global_bound_examples() {
        for (n, want) in [(7, 3.0), (9, 4.0)] {
            let g = global_bound_check(&designs::steiner_triple_system(n).unwrap(), &opts()).unwrap();
            assert!((g.rho - want).abs() < 1e-9);
            assert_eq!(g.bound, want);
            assert!(g.is_design && g.equality && g.pass(1e-10));
        }
        let g = global_bound_check(&loose_path(), &opts()).unwrap();
        assert!(g.rho < 2.0 && g.bound == 2.0 && !g.is_design && !g.equality && g.pass(1e-10));
    }

    #[test]
    fn turan_examples() {
        let t = turan_bound_check(2, 4, 1e-8).unwrap();
        assert!((t.rho - 2.0).abs() < 1e-9 && t.equality && t.pass());
        // K_{2,2,2}: dense eigensolve gives 4
        let t = turan_bound_check(3, 6, 1e-8).unwrap();
        assert!((t.rho - 4.0).abs() < 1e-9 && t.pass());
        // K_{2,3}: sqrt(6)
        let t = turan_bound_check(2, 5, 1e-8).unwrap();
        assert!((t.rho - 6f64.sqrt()).abs() < 1e-9);
        assert!(!t.equality && !t.divisible && t.pass());
        assert!(turan_bound_check(1, 4, 1e-8).is_err());
        assert!(turan_bound_check(5, 4, 1e-8).is_err());
    }
}
