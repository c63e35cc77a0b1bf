//! Verification suites run by `bcchow verify`.

use bcchow::arakelov::{
    eta_correction, eta_correction_by_column, verify_chern_product, verify_cor71, verify_projective_height,
    verify_r2_assembled,
};
use bcchow::bottchern::{bc_flat_power, bc_projflat_multi, deformation_oracle, ClassSpec, Mode};
use bcchow::harmonic::{
    harmonic_gf_check, pa_shadow_check, verify_binomial_sum, verify_flat_chern_agreement, verify_identity_sum_with,
    verify_identity_trinomial, HarmonicTable,
};
use bcchow::symfunc::partitions_of;
use bcchow::{Basis, IdentityReport, Result, SymF};

/// Harmonic and binomial identity sweeps up to `max_n`.
pub fn identities(max_n: u32) -> Result<Vec<IdentityReport>> {
    let table = HarmonicTable::new(3 * max_n + 2);
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in 0..=max_n {
            for q in 0..=max_n {
                for s in 0..=max_n {
                    out.push(verify_identity_sum_with(&table, n, p, q, s));
                    out.push(verify_binomial_sum(n, p, q, s));
                }
            }
        }
    }
    for n in 1..=max_n {
        for s in 1..=n {
            out.push(verify_identity_trinomial(n, s)?);
        }
    }
    for k in 1..=max_n {
        out.push(harmonic_gf_check(k));
        out.push(pa_shadow_check(k));
        out.push(verify_flat_chern_agreement(k));
    }
    Ok(out)
}

/// Deformation integral against the closed forms, both modes.
pub fn oracle(max_weight: u32, max_rank: u32) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for k in 1..=max_weight {
        for lambda in partitions_of(k, None, None) {
            for r in 1..=max_rank {
                for s in 1..=max_rank {
                    let n = r + s;
                    let phi = ClassSpec::new(&SymF::basis_elem(Basis::P, lambda.clone()), n, r)?;
                    let params = [("n", n as i64), ("r", r as i64)];
                    let flat = deformation_oracle(&phi, Mode::Flat)?;
                    out.push(
                        IdentityReport::new("oracle_flat", &params, &flat, &bc_flat_power(&lambda, n, r)?)
                            .with_param("lambda", &lambda),
                    );
                    let proj = deformation_oracle(&phi, Mode::ProjFlat)?;
                    out.push(
                        IdentityReport::new("oracle_projflat", &params, &proj, &bc_projflat_multi(&lambda, n, r)?)
                            .with_param("lambda", &lambda),
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Relations of the arithmetic Chow ring for ranks up to `max_rank`.
pub fn ring(max_rank: u32) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        for s in 1..=max_rank {
            for k in 1..=r + s {
                out.push(verify_cor71(k, r, s)?);
                out.push(verify_chern_product(k, r, s)?);
            }
            out.push(verify_r2_assembled(r + s, r, s)?);
            for k in 1..=6 {
                for nu in partitions_of(k, Some(s as usize), None) {
                    if nu.first() <= r {
                        continue;
                    }
                    let params = [("r", r as i64), ("s", s as i64)];
                    let row = eta_correction(&nu, r, s)?;
                    let column = eta_correction_by_column(&nu, r, s)?;
                    out.push(IdentityReport::new("straightening_probe", &params, &row, &column).with_param("nu", &nu));
                }
            }
        }
    }
    Ok(out)
}

/// Heights of arithmetic projective spaces of dimension up to `max_n`.
pub fn heights(max_n: u32) -> Result<Vec<IdentityReport>> {
    (1..=max_n).map(verify_projective_height).collect()
}
