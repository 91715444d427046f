//! Exact combinatorics of split semisimple root data.
//!
//! The crate builds root data at a chosen isogeny type (`root_datum`), acts on
//! coweights with the Weyl group (`weyl`), computes weight posets and
//! multiplicities (`weights`), classifies minimal dominant coweights and
//! decomposes arbitrary dominant coweights over them (`minimal`), counts
//! dominant step paths and folds the minuscule/quasi-minuscule tensor rules
//! (`paths`), and produces Kostka-Foulkes q-analogs together with the
//! constant-term and Whittaker prediction tables they govern (`tables`).
//!
//! All arithmetic is exact: integer coordinates, rational invariant forms,
//! big-integer products where dimensions grow. There is no floating point
//! anywhere, and every set-valued result is emitted in a canonical order so
//! that output is reproducible across runs and thread counts.

pub mod cartan;
pub mod check;
pub mod error;
pub mod minimal;
pub mod paths;
pub mod root_datum;
pub mod tables;
pub mod weights;
pub mod weyl;

mod linalg;
mod par;

pub use cartan::{CartanType, Family, Isogeny};
pub use error::{Error, Result};
pub use minimal::MinimalClass;
pub use paths::{Multiset, PathSpec};
pub use root_datum::{Coweight, Root, RootDatum};
pub use tables::{QPolynomial, SignedHalfPower};
pub use weights::WeightDiagram;
pub use weyl::WeylWord;

/// Caps the worker-thread count for parallel sweeps. A cap of 1 forces
/// sequential execution. No-op when the `parallel` feature is disabled.
///
/// Must be called before the first parallel operation; later calls fail.
pub fn configure_threads(n: usize) -> Result<()> {
    par::configure_threads(n)
}
