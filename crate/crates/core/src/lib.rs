//! Exact computations with Bott-Chern secondary forms and the Arakelov Chow
//! ring of the arithmetic grassmannian.
//!
//! Everything is computed over arbitrary-precision rationals. The crate is
//! organised bottom-up:
//!
//! * [`symfunc`]: partitions, symmetric functions in the `e`, `h`, `p` and
//!   Schur bases, Littlewood-Richardson products, symmetric group characters
//!   and reduction to the Schubert basis of a grassmannian.
//! * [`harmonic`]: harmonic numbers and the binomial/harmonic identities that
//!   appear in the closed forms.
//! * [`bottchern`]: closed-form Bott-Chern forms for flat and projectively
//!   flat bundles, together with an independent deformation-integral oracle.
//! * [`arakelov`]: the Arakelov Chow ring of `G(r, n)` with its star product
//!   and normal form.
//! * [`json`]: the JSON encodings shared with the command line tool.

pub mod arakelov;
pub mod bottchern;
mod error;
pub mod harmonic;
pub mod json;
pub mod rat;
mod report;
pub mod symfunc;

pub use error::{Error, Result};
pub use rat::Rat;
pub use report::{IdentityReport, Param};
pub use symfunc::{Basis, Partition, SymF};
