//! Exact normalized-Laplacian spectra of trees.
//!
//! The characteristic polynomial of the normalized Laplacian of a tree is
//! determined by its general Randić indices for matching at `α = -1`. This
//! crate computes those indices exactly (by a tree dynamic program, with
//! brute-force enumeration as a reference), assembles the characteristic
//! polynomial and its reduced form `ψ`, isolates the roots of `ψ` with Sturm
//! sequences, and checks everything against a dense Jacobi eigensolver.
//!
//! ```
//! use tree_spectra::graph::{build_starlike, StarlikeSpec};
//! use tree_spectra::randic::randic_indices_tree;
//! use tree_spectra::charpoly::exact_spectrum;
//!
//! let tree = build_starlike(&StarlikeSpec::new(vec![1, 1, 1, 1, 3])?);
//! let indices = randic_indices_tree(&tree, -1)?;
//! let shown: Vec<String> = indices.values().iter().map(|r| r.to_string()).collect();
//! assert_eq!(shown, ["1", "33/20", "13/20"]);
//! assert_eq!(exact_spectrum(&tree)?.summary(3), "0, 2, 1^4, 1±√(13/20)");
//! # Ok::<(), tree_spectra::Error>(())
//! ```
//!
//! The guide in `book/` walks through the mathematics; its code samples are
//! compiled as doctests of this crate.

pub mod charpoly;
pub mod closed_form;
pub mod error;
pub mod graph;
pub mod io;
pub mod poly;
pub mod randic;
pub mod roots;
pub mod spectra;
pub mod table;

pub use error::{Error, Result};
pub use num_rational::BigRational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/matching-indices.md")]
    mod matching_indices {}
    #[doc = include_str!("../../../book/src/characteristic-polynomial.md")]
    mod characteristic_polynomial {}
    #[doc = include_str!("../../../book/src/starlike.md")]
    mod starlike {}
    #[doc = include_str!("../../../book/src/double-starlike.md")]
    mod double_starlike {}
    #[doc = include_str!("../../../book/src/numeric-oracle.md")]
    mod numeric_oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
