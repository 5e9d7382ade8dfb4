//! Binary matroids over GF(2), single-element coextensions by element
//! splitting, and Tutte connectivity.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf2`]: bitmask linear algebra (echelon form, rank, null spaces),
//! - [`matroid`]: binary matroids with circuits, cocircuits, duals and minors,
//! - [`coextension`]: the element split `M'_T` and the structure of its
//!   circuits, cocircuits and rank function,
//! - [`connectivity`]: exhaustive `k`-separation search,
//! - [`theorems`]: the connectivity criteria for `M'_T` and equivalence sweeps,
//! - [`graphs`]: simple graphs, n-point splitting and cycle matroids,
//! - [`format`] and [`report`]: text formats and report emission.
//!
//! ```
//! use coext::{catalog, coextension::element_split_labels, connectivity::is_n_connected};
//!
//! let fano = catalog::fano();
//! let split = element_split_labels(&fano, ["1", "2"], "a").unwrap();
//! assert_eq!(split.result.rank(), fano.rank() + 1);
//! assert!(is_n_connected(&split.result, 3).unwrap());
//! ```
//!
//! A guide with worked examples lives in `book/`; its code blocks are
//! compiled and run as doctests of this crate.

pub mod catalog;
pub mod coextension;
pub mod connectivity;
pub mod error;
pub mod format;
pub mod gf2;
pub mod graphs;
pub mod matroid;
pub mod report;
pub mod set;
pub mod theorems;

pub use error::{Error, Result};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use graphs::SimpleGraph;
pub use matroid::{BinaryMatroid, Extended};
pub use set::ElementSet;

// `cargo test --doc` runs the book's code blocks through these.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gf2.md")]
    mod gf2 {}
    #[doc = include_str!("../../../book/src/matroids.md")]
    mod matroids {}
    #[doc = include_str!("../../../book/src/element-splitting.md")]
    mod element_splitting {}
    #[doc = include_str!("../../../book/src/connectivity.md")]
    mod connectivity {}
    #[doc = include_str!("../../../book/src/criteria.md")]
    mod criteria {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
