//! The arithmetic Chow ring `CH(Ḡ(r, n))` of the grassmannian with its
//! invariant metrics, `n = r + s`.
//!
//! Every element is written uniquely as `Σ q_λ σ̂_λ + a(Σ r_μ s_μ(y))`, with
//! both sums over partitions in the `s x r` box. Here `σ̂_λ = s_λ(ĉ(Q̄))` is a
//! Schur polynomial in the arithmetic Chern classes of the universal
//! quotient, `y` are the Chern roots of `Q`, and `a` maps forms to classes.
//! Products of `σ̂` classes that leave the box are straightened back using
//! the relation `ĉ_t(S̄) ĉ_t(Q̄) = 1 - p_a(t)`.

mod elem;
mod straighten;
mod verify;

pub use elem::{ArakelovElem, Projection};
pub use straighten::{eta_correction, eta_correction_by_column, normal_form, relation_g, HatPoly};
pub use verify::{
    hat_chern_q, hat_chern_s, projective_height, projective_height_hand, verify_chern_product, verify_cor71,
    verify_projective_height, verify_r2_assembled,
};

use crate::{Error, Result};

fn check_ranks(r: u32, s: u32) -> Result<()> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidRanks { n: r + s, r });
    }
    Ok(())
}
