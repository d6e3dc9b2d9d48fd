//! The ten starlike trees on eight vertices with their exact indices and spectra.

use crate::charpoly::{exact_spectrum, ExactSpectrum};
use crate::error::Result;
use crate::graph::{build_starlike, StarlikeSpec};
use crate::randic::{randic_indices_tree, MatchingIndexVector};

/// Branch lengths of the rows, in table order. The star `T(1,1,1,1,1,1,1)`
/// is not part of the table.
pub const STARLIKE8_PARTITIONS: [&[usize]; 10] = [
    &[1, 1, 5],
    &[1, 2, 4],
    &[1, 3, 3],
    &[2, 2, 3],
    &[1, 1, 1, 4],
    &[1, 1, 2, 3],
    &[1, 2, 2, 2],
    &[1, 1, 1, 1, 3],
    &[1, 1, 1, 2, 2],
    &[1, 1, 1, 1, 1, 2],
];

#[derive(Clone, Debug, PartialEq)]
pub struct StarlikeRow {
    pub spec: StarlikeSpec,
    /// `α = -1` indices.
    pub indices: MatchingIndexVector,
    pub spectrum: ExactSpectrum,
}

pub fn starlike8_table() -> Result<Vec<StarlikeRow>> {
    STARLIKE8_PARTITIONS
        .iter()
        .map(|lengths| {
            let spec = StarlikeSpec::new(lengths.to_vec())?;
            let tree = build_starlike(&spec);
            Ok(StarlikeRow {
                indices: randic_indices_tree(&tree, -1)?,
                spectrum: exact_spectrum(&tree)?,
                spec,
            })
        })
        .collect()
}
