//! Floating-point oracle: the normalized Laplacian as a dense matrix, its
//! eigenvalues by cyclic Jacobi rotations, and reconciliation against the
//! exact route.

use crate::charpoly::{exact_spectrum, ExactSpectrum};
use crate::error::{Error, Result};
use crate::graph::{Graph, Tree};

/// Off-diagonal Frobenius norm at which Jacobi iteration stops.
pub const DEFAULT_JACOBI_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 100;
/// Largest pointwise gap accepted between the exact and numeric spectra.
pub const DEFAULT_RECONCILE_TOLERANCE: f64 = 1e-9;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseSymMatrix {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.n + j] = value;
        self.entries[j * self.n + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    sum += self.get(i, j).powi(2);
                }
            }
        }
        sum.sqrt()
    }
}

/// `𝓛[v][v] = 1` when `d_v > 0` (else 0), `𝓛[u][v] = -1/√(d_u d_v)` on edges.
pub fn normalized_laplacian(g: &Graph) -> DenseSymMatrix {
    let mut m = DenseSymMatrix::zeros(g.order());
    for v in 0..g.order() {
        if g.degree(v) > 0 {
            m.set(v, v, 1.0);
        }
    }
    for &(u, v) in g.edges() {
        m.set(u, v, -1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt());
    }
    m
}

/// All eigenvalues of a symmetric matrix, in descending order, by cyclic
/// Jacobi sweeps until the off-diagonal Frobenius norm is at most `tol`.
pub fn eigenvalues_jacobi(m: &DenseSymMatrix, tol: f64) -> Result<Vec<f64>> {
    eigenvalues_jacobi_with_sweeps(m, tol, DEFAULT_MAX_SWEEPS)
}

pub fn eigenvalues_jacobi_with_sweeps(
    m: &DenseSymMatrix,
    tol: f64,
    max_sweeps: usize,
) -> Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = m.n;
    let mut a = m.clone();
    let mut converged = a.off_diagonal_norm() <= tol;
    let mut sweeps = 0;
    while !converged && sweeps < max_sweeps {
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
        converged = a.off_diagonal_norm() <= tol;
    }
    if !converged {
        return Err(Error::Numeric(format!(
            "Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {:e})",
            a.off_diagonal_norm()
        )));
    }
    let mut values: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

// One plane rotation annihilating a[p][q].
fn rotate(a: &mut DenseSymMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.n;
    for k in 0..n {
        let akp = a.entries[k * n + p];
        let akq = a.entries[k * n + q];
        a.entries[k * n + p] = c * akp - s * akq;
        a.entries[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a.entries[p * n + k];
        let aqk = a.entries[q * n + k];
        a.entries[p * n + k] = c * apk - s * aqk;
        a.entries[q * n + k] = s * apk + c * aqk;
    }
    a.set(p, q, 0.0);
}

/// Exact and numeric spectra of one tree side by side.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub exact: ExactSpectrum,
    /// Jacobi eigenvalues, descending.
    pub numeric: Vec<f64>,
    pub max_abs_residual: f64,
    pub matched: bool,
}

/// Compares the exact-route spectrum of `t` with Jacobi eigenvalues of its
/// normalized Laplacian, pointwise after sorting both in descending order.
pub fn reconcile(t: &Tree, tol: f64) -> Result<SpectrumReport> {
    let exact = exact_spectrum(t)?;
    let numeric = eigenvalues_jacobi(&normalized_laplacian(t), DEFAULT_JACOBI_TOLERANCE)?;
    let exact_values = exact.eigenvalue_list();
    if exact_values.len() != numeric.len() {
        return Err(Error::Consistency(format!(
            "exact route produced {} eigenvalues for {} vertices",
            exact_values.len(),
            numeric.len()
        )));
    }
    let max_abs_residual = exact_values
        .iter()
        .zip(&numeric)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(SpectrumReport {
        exact,
        numeric,
        max_abs_residual,
        matched: max_abs_residual <= tol,
    })
}
