//! Exact equivariant sheaf cohomology on projective space.
//!
//! The crate computes Borel–Weil–Bott cohomology of twisted Schur bundles
//! `S_α Q* ⊗ O(d)` on `P^n`, builds the dual collection `W^⊥` of supernatural
//! bundles attached to a collection of line bundles `W`, evaluates the
//! spectral sequences of the two Fourier–Mukai transforms `Φ_1^W`, `Φ_2^W`
//! page by page, and decomposes cohomology tables into supernatural tables.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals.

pub mod bwb;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod ktheory;
pub mod linalg;
pub mod monad;
pub mod rational;
pub mod sheaves;
pub mod weights;

pub use bwb::{BundleExpr, CohomologyOutcome};
pub use error::{Error, ErrorKind, Result};
pub use monad::MonadData;
pub use sheaves::{CohomologyTable, SheafExpr, Window};
pub use weights::{DegreeSequence, RootSequence, Weight};

pub(crate) fn ser_bigint<S: serde::Serializer>(
    x: &num_bigint::BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}
