//! The JSON report emitted by `compute`.

use serde::{Deserialize, Serialize};
use tree_spectra::charpoly::{expand_charpoly, ExactSpectrum};
use tree_spectra::randic::MatchingIndexVector;
use tree_spectra::Result;

/// Exact values are integer-ratio strings (`"33/20"`, `"1"`), which parse
/// back losslessly. `charpoly` lists the signed coefficients `a_0..a_n` of
/// `φ(x) = a_0 x^n - a_1 x^(n-1) + ...`; `psi` lists the coefficients of
/// `ψ(y)` from the highest power down.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub input: String,
    pub n: usize,
    pub k: usize,
    pub indices: Vec<String>,
    pub charpoly: Vec<String>,
    pub psi: Vec<String>,
    pub eigenvalues: Vec<EigenvalueRecord>,
    pub residual: f64,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    pub value: f64,
    pub sqrt_form: Option<String>,
    pub multiplicity: usize,
}

impl OutputRecord {
    pub fn new(
        input: String,
        n: usize,
        indices: &MatchingIndexVector,
        spectrum: Option<&ExactSpectrum>,
        residual: f64,
        tol: f64,
    ) -> Result<Self> {
        let charpoly = expand_charpoly(indices, n)?;
        let (psi, eigenvalues) = match spectrum {
            Some(s) => (
                s.psi
                    .coeffs()
                    .iter()
                    .rev()
                    .map(ToString::to_string)
                    .collect(),
                s.eigenvalues()
                    .into_iter()
                    .map(|e| EigenvalueRecord {
                        value: e.value,
                        sqrt_form: e.sqrt_form,
                        multiplicity: e.multiplicity,
                    })
                    .collect(),
            ),
            // a single vertex: ψ = 1 and the only eigenvalue is 0
            None => (
                vec!["1".to_string()],
                vec![EigenvalueRecord {
                    value: 0.0,
                    sqrt_form: Some("0".into()),
                    multiplicity: 1,
                }],
            ),
        };
        Ok(OutputRecord {
            input,
            n,
            k: indices.k(),
            indices: indices.values().iter().map(ToString::to_string).collect(),
            charpoly: charpoly
                .signed_coefficients()
                .iter()
                .map(ToString::to_string)
                .collect(),
            psi,
            eigenvalues,
            residual,
            matched: residual <= tol,
        })
    }
}
