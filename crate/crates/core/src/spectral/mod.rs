//! The signless Laplacian `Q(G) = D(G) + A(G)` and its extreme eigenpairs.

mod jacobi;
mod zykov;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub use jacobi::{eigen_symmetric, EigenDecomposition, SymmetricMatrix, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use zykov::{zykov_chain, zykov_step, zykov_step_under_join, ZykovChain};

/// Largest accepted `‖Qf − q1·f‖∞` for a returned Perron pair.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Extreme spectrum of `Q(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub q1: f64,
    pub q_min: f64,
    /// Unit eigenvector for `q1`, sign-normalized so its largest-magnitude
    /// entry is positive; nonnegative when the graph is connected.
    pub perron: Vec<f64>,
    /// `‖Q·perron − q1·perron‖∞`.
    pub residual: f64,
    /// Jacobi sweeps used.
    pub iterations: usize,
}

pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let n = g.n();
    let mut q = SymmetricMatrix::zeros(n);
    for v in 0..n {
        q.set(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        q.set(u, v, 1.0);
    }
    q
}

/// `(Q(G) f)(u) = Σ_{v ∼ u} (f(u) + f(v))`, without forming the matrix.
fn apply_q(g: &Graph, f: &[f64]) -> Vec<f64> {
    (0..g.n())
        .map(|u| bits(g.neighbors(u)).map(|v| f[u] + f[v]).sum())
        .collect()
}

pub fn spectrum(g: &Graph) -> Result<SpectralSummary> {
    let eig = eigen_symmetric(&signless_laplacian(g))?;
    let n = g.n();
    let q1 = eig.values[n - 1];
    let q_min = eig.values[0];
    let mut perron = eig.vectors[n - 1].clone();

    let lead = perron.iter().copied().fold(0.0f64, |best, x| if x.abs() > best.abs() { x } else { best });
    if lead < 0.0 {
        perron.iter_mut().for_each(|x| *x = -*x);
    }
    if g.is_connected() {
        debug_assert!(
            perron.iter().all(|&x| x > -1e-10),
            "Perron vector of a connected graph has a negative entry"
        );
        perron.iter_mut().for_each(|x| *x = x.max(0.0));
    }
    let norm = perron.iter().map(|x| x * x).sum::<f64>().sqrt();
    perron.iter_mut().for_each(|x| *x /= norm);

    let residual = apply_q(g, &perron)
        .iter()
        .zip(&perron)
        .map(|(qf, f)| (qf - q1 * f).abs())
        .fold(0.0, f64::max);
    if residual > RESIDUAL_TOL {
        return Err(Error::Residual { residual, tolerance: RESIDUAL_TOL });
    }
    Ok(SpectralSummary { q1, q_min, perron, residual, iterations: eig.sweeps })
}

/// Signless Laplacian spectral radius.
pub fn q1(g: &Graph) -> Result<f64> {
    spectrum(g).map(|s| s.q1)
}

pub fn q_min(g: &Graph) -> Result<f64> {
    spectrum(g).map(|s| s.q_min)
}

/// Vertex weights `w(u) = Σ_{v ∼ u} (f(u) + f(v))` for a nonnegative `f`;
/// zero at isolated vertices.
pub fn vertex_weights(g: &Graph, f: &[f64]) -> Result<Vec<f64>> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: f.len() });
    }
    if let Some(i) = f.iter().position(|&x| !(x >= 0.0)) {
        return Err(Error::invalid(format!("weight function is negative at vertex {i}")));
    }
    Ok(apply_q(g, f))
}
