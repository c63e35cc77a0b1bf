//! Bott-Chern forms of `0 -> S -> E -> Q -> 0` with metrics on `S` and `Q`
//! induced from `E`, for `E` flat or projectively flat.
//!
//! Results are [`BCForm`]s: polynomials in the curvature scalar `ω` of a
//! projectively flat `E` (`K_E = ω Id`) and the power sum forms `p_j(Q)`.
//! The closed forms live in [`closed`]; [`oracle`] recomputes any of them
//! from the deformation integral `∫_0^1 (φ^!(u) - φ^!(0)) / u du` on a
//! commuting-eigenvalue model of the curvature matrices.

pub mod closed;
mod form;
pub mod oracle;

pub use closed::{
    bc_flat_chern, bc_flat_general, bc_flat_power, bc_flat_schur, bc_projflat_chern, bc_projflat_chern_via_twist,
    bc_projflat_general, bc_projflat_multi, bc_projflat_power, bc_twist,
};
pub use form::{BCForm, ClassSpec, Ranks};
pub use oracle::{deformation_oracle, Mode};
