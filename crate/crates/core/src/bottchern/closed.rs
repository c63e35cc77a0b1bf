//! Closed forms for Bott-Chern forms with induced metrics.

use super::{BCForm, ClassSpec, Ranks};
use crate::harmonic::{harmonic, HarmonicTable};
use crate::rat::{binomial, from_bigint, int, sign};
use crate::symfunc::{Basis, Partition};
use crate::{Error, Result};

/// `E` flat, `φ = p_λ`: `k H_{k-1} p_{k-1}(Q)` for the single row
/// `λ = (k)`, zero for longer partitions.
pub fn bc_flat_power(lambda: &Partition, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    Ok(match lambda.parts() {
        &[k] => power_term(ranks, k),
        _ => BCForm::zero(ranks),
    })
}

fn power_term(ranks: Ranks, k: u32) -> BCForm {
    BCForm::term(ranks, 0, k - 1, int(k as i64) * harmonic(k - 1))
}

/// `E` flat, `φ = c_k`: `(-1)^{k-1} H_{k-1} p_{k-1}(Q)`, and zero above the
/// rank of `E`.
pub fn bc_flat_chern(k: u32, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    if k == 0 || k > n {
        return Ok(BCForm::zero(ranks));
    }
    Ok(BCForm::term(ranks, 0, k - 1, sign(k as i64 - 1) * harmonic(k - 1)))
}

/// `E` flat, `φ = s_λ`: zero unless `λ = (i, 1^{k-i})` is a hook, in which
/// case `(-1)^{k-i} H_{k-1} p_{k-1}(Q)`.
pub fn bc_flat_schur(lambda: &Partition, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    let k = lambda.weight();
    Ok(match lambda.hook_arm() {
        Some(arm) => BCForm::term(ranks, 0, k - 1, sign((k - arm) as i64) * harmonic(k - 1)),
        None => BCForm::zero(ranks),
    })
}

/// `E` flat, any homogeneous `φ`: only the coefficient of `p_k` in the power
/// sum expansion of `φ` contributes.
pub fn bc_flat_general(phi: &ClassSpec) -> Result<BCForm> {
    let k = phi.degree()?;
    let ranks = phi.ranks();
    if k == 0 {
        return Ok(BCForm::zero(ranks));
    }
    let alpha = phi.phi().coeff(&Partition::row(k));
    Ok(power_term(ranks, k).scale(&alpha))
}

/// `E` projectively flat with `K_E = ω Id`, `φ = p_k`:
/// `k H_{k-1} p_{k-1}(Q) - k Σ_{i=1}^{k-1} (ω^i / i) p_{k-1-i}(Q)`,
/// with `p_0(Q) = s`.
pub fn bc_projflat_power(k: u32, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    Ok(projflat_power(ranks, k))
}

fn projflat_power(ranks: Ranks, k: u32) -> BCForm {
    if k == 0 {
        return BCForm::zero(ranks);
    }
    let kk = int(k as i64);
    let mut out = power_term(ranks, k);
    for i in 1..k {
        let j = k - 1 - i;
        let mut c = -&kk / int(i as i64);
        if j == 0 {
            c *= int(ranks.s() as i64);
        }
        out.add_term(i, j, c);
    }
    out
}

/// `E` projectively flat, `φ = c_{m+1}`:
/// `Σ_{i=0}^{m} (-1)^{m-i} C(n,i) (H_n - H_{n-i} + H_{m-i}) ω^i p_{m-i}(Q)`.
/// Zero above the rank of `E`.
pub fn bc_projflat_chern(k: u32, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    let mut out = BCForm::zero(ranks);
    if k == 0 || k > n {
        return Ok(out);
    }
    let m = k - 1;
    let h = HarmonicTable::new(n);
    let s = int(ranks.s() as i64);
    for i in 0..=m {
        let weight = h.get(n) - h.get(n - i) + h.get(m - i);
        let mut c = sign((m - i) as i64) * from_bigint(binomial(n as i64, i as i64)) * weight;
        if m == i {
            c *= &s;
        }
        out.add_term(i, m - i, c);
    }
    Ok(out)
}

/// `E` projectively flat, `φ = p_λ` with `m` parts:
/// `n^{m-1} Σ_i ω^{k-λ_i} p̃_{λ_i}`.
pub fn bc_projflat_multi(lambda: &Partition, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    Ok(projflat_multi(ranks, lambda))
}

fn projflat_multi(ranks: Ranks, lambda: &Partition) -> BCForm {
    let mut out = BCForm::zero(ranks);
    if lambda.is_empty() {
        return out;
    }
    let k = lambda.weight();
    let factor = int(ranks.n() as i64).pow(lambda.len() as i32 - 1);
    for &part in lambda.parts() {
        out.add_scaled(&projflat_power(ranks, part).shift_omega(k - part), &factor);
    }
    out
}

/// `E` projectively flat, any homogeneous `φ`, by linearity over its power
/// sum expansion.
pub fn bc_projflat_general(phi: &ClassSpec) -> Result<BCForm> {
    phi.degree()?;
    let ranks = phi.ranks();
    debug_assert_eq!(phi.phi().basis(), Basis::P);
    let mut out = BCForm::zero(ranks);
    for (lambda, c) in phi.phi().terms() {
        out.add_scaled(&projflat_multi(ranks, lambda), c);
    }
    Ok(out)
}

/// Twisting by a hermitian line bundle with first Chern form `ω`:
/// `c̃_k(E ⊗ L) = Σ_{i=1}^k C(n-i, k-i) c̃_i(E) ω^{k-i}`, where
/// `tilde_c[i - 1]` holds `c̃_i`.
pub fn bc_twist(tilde_c: &[BCForm], n: u32, k: u32) -> Result<BCForm> {
    let Some(first) = tilde_c.first() else {
        return Err(Error::OutOfRange { index: 0, reason: "need at least one form" });
    };
    if tilde_c.len() < k as usize {
        return Err(Error::OutOfRange { index: k as i64, reason: "fewer forms than the degree" });
    }
    let mut out = BCForm::zero(first.ranks());
    for i in 1..=k {
        let c = from_bigint(binomial(n as i64 - i as i64, (k - i) as i64));
        out.add_scaled(&tilde_c[i as usize - 1].shift_omega(k - i), &c);
    }
    Ok(out)
}

/// `c̃_k` for projectively flat `E = L ⊗ C^n` computed by twisting the flat
/// sequence `E ⊗ L^*` back by `L`. The flat forms live on `Q ⊗ L^*`, whose
/// power sums are re-expanded as
/// `p_j(Q ⊗ L^*) = Σ_l C(j,l) (-ω)^{j-l} p_l(Q)`.
pub fn bc_projflat_chern_via_twist(k: u32, n: u32, r: u32) -> Result<BCForm> {
    let ranks = Ranks::new(n, r)?;
    if k == 0 {
        return Ok(BCForm::zero(ranks));
    }
    let s = int(ranks.s() as i64);
    let flat: Vec<BCForm> = (1..=k)
        .map(|i| {
            let mut form = BCForm::zero(ranks);
            if i <= n {
                let j = i - 1;
                let c = sign(j as i64) * harmonic(j);
                for l in 0..=j {
                    let mut coeff = &c * from_bigint(binomial(j as i64, l as i64)) * sign((j - l) as i64);
                    if l == 0 {
                        coeff *= &s;
                    }
                    form.add_term(j - l, l, coeff);
                }
            }
            form
        })
        .collect();
    bc_twist(&flat, n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, Rat};
    use crate::symfunc::SymF;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ranks(n: u32, r: u32) -> Ranks {
        Ranks::new(n, r).unwrap()
    }

    fn form(n: u32, r: u32, terms: &[(u32, u32, Rat)]) -> BCForm {
        let mut f = BCForm::zero(ranks(n, r));
        for (i, j, c) in terms {
            f.add_term(*i, *j, c.clone());
        }
        f
    }

    #[test]
    fn flat_power_examples() {
        assert_eq!(bc_flat_power(&p(&[3]), 4, 2).unwrap(), form(4, 2, &[(0, 2, frac(9, 2))]));
        assert!(bc_flat_power(&p(&[2, 1]), 4, 2).unwrap().is_zero());
        assert!(bc_flat_power(&p(&[1]), 4, 2).unwrap().is_zero());
        assert!(bc_flat_power(&p(&[3]), 2, 2).is_err());
    }

    #[test]
    fn flat_chern_examples() {
        assert_eq!(bc_flat_chern(2, 4, 2).unwrap(), form(4, 2, &[(0, 1, int(-1))]));
        assert_eq!(bc_flat_chern(3, 4, 2).unwrap(), form(4, 2, &[(0, 2, frac(3, 2))]));
        assert!(bc_flat_chern(1, 4, 2).unwrap().is_zero());
        assert!(bc_flat_chern(5, 4, 2).unwrap().is_zero());
    }

    #[test]
    fn flat_schur_examples() {
        assert_eq!(bc_flat_schur(&p(&[2, 1]), 4, 2).unwrap(), form(4, 2, &[(0, 2, frac(-3, 2))]));
        assert!(bc_flat_schur(&p(&[2, 2]), 4, 2).unwrap().is_zero());
        assert_eq!(bc_flat_schur(&p(&[4]), 4, 2).unwrap(), form(4, 2, &[(0, 3, frac(11, 6))]));
    }

    #[test]
    fn flat_general_examples() {
        let ch3 = ClassSpec::new(&SymF::term(Basis::P, p(&[3]), frac(1, 6)), 4, 2).unwrap();
        assert_eq!(bc_flat_general(&ch3).unwrap(), form(4, 2, &[(0, 2, frac(3, 4))]));
        let e11 = ClassSpec::new(&SymF::basis_elem(Basis::E, p(&[1, 1])), 4, 2).unwrap();
        assert!(bc_flat_general(&e11).unwrap().is_zero());
        let e2 = ClassSpec::new(&SymF::basis_elem(Basis::E, p(&[2])), 4, 2).unwrap();
        assert_eq!(bc_flat_general(&e2).unwrap(), bc_flat_chern(2, 4, 2).unwrap());
    }

    #[test]
    fn general_rejects_mixed_degree() {
        let mut f = SymF::basis_elem(Basis::P, p(&[2]));
        f.add_term(p(&[1]), int(1));
        let spec = ClassSpec::new(&f, 4, 2).unwrap();
        assert!(bc_flat_general(&spec).is_err());
        assert!(bc_projflat_general(&spec).is_err());
    }

    #[test]
    fn projflat_power_examples() {
        // s = 2
        assert_eq!(bc_projflat_power(2, 4, 2).unwrap(), form(4, 2, &[(0, 1, int(2)), (1, 0, int(-4))]));
        assert!(bc_projflat_power(1, 4, 2).unwrap().is_zero());
        assert_eq!(bc_projflat_power(2, 4, 2).unwrap().at_omega_zero(), form(4, 2, &[(0, 1, int(2))]));
    }

    #[test]
    fn projflat_chern_examples() {
        for (n, r) in [(2, 1), (4, 2), (7, 3)] {
            let s = int((n - r) as i64);
            let nn = int(n as i64);
            assert_eq!(bc_projflat_chern(2, n, r).unwrap(), form(n, r, &[(0, 1, int(-1)), (1, 0, s.clone())]));
            let c3 = form(
                n,
                r,
                &[(0, 2, frac(3, 2)), (1, 1, -(&nn + int(1))), (2, 0, (int(2) * &nn - int(1)) / int(2) * &s)],
            );
            if n >= 3 {
                assert_eq!(bc_projflat_chern(3, n, r).unwrap(), c3);
            }
        }
    }

    #[test]
    fn projflat_multi_examples() {
        let (n, r) = (5, 2);
        let nn = int(5);
        let s = int(3);
        assert_eq!(
            bc_projflat_multi(&p(&[2, 1]), n, r).unwrap(),
            form(n, r, &[(1, 1, int(2) * &nn), (2, 0, int(-2) * &nn * &s)])
        );
        assert!(bc_projflat_multi(&p(&[1, 1]), n, r).unwrap().is_zero());
        assert!(bc_projflat_multi(&p(&[2, 1]), n, r).unwrap().at_omega_zero().is_zero());
    }

    #[test]
    fn projflat_general_examples() {
        let e2 = ClassSpec::new(&SymF::basis_elem(Basis::E, p(&[2])), 5, 2).unwrap();
        assert_eq!(bc_projflat_general(&e2).unwrap(), bc_projflat_chern(2, 5, 2).unwrap());
        let p2 = ClassSpec::new(&SymF::basis_elem(Basis::P, p(&[2])), 5, 2).unwrap();
        assert_eq!(bc_projflat_general(&p2).unwrap(), bc_projflat_power(2, 5, 2).unwrap());
        let e111 = ClassSpec::new(&SymF::basis_elem(Basis::E, p(&[1, 1, 1])), 5, 2).unwrap();
        assert!(bc_projflat_general(&e111).unwrap().is_zero());
    }

    #[test]
    fn twist_examples() {
        let rk = ranks(4, 2);
        let c1 = BCForm::term(rk, 0, 0, int(3));
        let c2 = BCForm::term(rk, 0, 1, int(-1));
        assert_eq!(bc_twist(std::slice::from_ref(&c1), 4, 1).unwrap(), c1);
        assert_eq!(bc_twist(&[BCForm::zero(rk), c2.clone()], 4, 2).unwrap(), c2);
        let general = bc_twist(&[c1.clone(), c2.clone()], 4, 2).unwrap();
        assert_eq!(general, &c1.shift_omega(1).scale(&int(3)) + &c2);
        assert!(bc_twist(&[c1], 4, 2).is_err());
    }

    #[test]
    fn chern_rank_cutoff() {
        assert!(bc_projflat_chern(4, 3, 1).unwrap().is_zero());
        assert!(bc_projflat_chern_via_twist(4, 3, 1).unwrap().is_zero());
    }
}
