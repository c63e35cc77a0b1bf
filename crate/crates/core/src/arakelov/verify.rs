//! Arithmetic Chern classes of the tautological sequence and the ring
//! identities they satisfy.

use num_traits::{One, Zero};

use super::straighten::{g_formula, normal_form, HatPoly};
use super::{check_ranks, ArakelovElem};
use crate::harmonic::{harmonic, HarmonicTable};
use crate::rat::{int, sign, Rat};
use crate::symfunc::{Basis, Partition, SymF};
use crate::{Error, IdentityReport, Result};

/// `ĉ_k(Q̄) = σ̂_{(1^k)}`, zero above the rank `s`.
pub fn hat_chern_q(k: u32, r: u32, s: u32) -> Result<ArakelovElem> {
    if k > s {
        return ArakelovElem::zero(r, s);
    }
    ArakelovElem::sigma(&Partition::column(k), r, s)
}

/// `ĉ_k(S̄) = (-1)^k σ̂_{(k)} + (-1)^{k-1} a(g_k)` for `k <= r`, the solution
/// of `ĉ_t(S̄) ĉ_t(Q̄) = 1 - p_a(t)` in degree `k`.
pub fn hat_chern_s(k: u32, r: u32, s: u32) -> Result<ArakelovElem> {
    check_ranks(r, s)?;
    if k > r {
        return Err(Error::OutOfRange { index: k as i64, reason: "ĉ_k(S̄) vanishes above the rank r" });
    }
    let mut x = ArakelovElem::sigma(&Partition::row(k), r, s)?.scale(&sign(k as i64));
    if k > 0 {
        x.add_arch(&g_formula(k), &sign(k as i64 - 1));
    }
    Ok(x)
}

fn chern_s_table(r: u32, s: u32) -> Result<Vec<ArakelovElem>> {
    (0..=r).map(|k| hat_chern_s(k, r, s)).collect()
}

/// `[t^k] (1 - p_a(t)) = (-1)^{k-1} H_{k-1} a(p_{k-1}(y))` for `k >= 1`.
fn secondary_term(k: u32, r: u32, s: u32) -> Result<ArakelovElem> {
    let mut x = ArakelovElem::zero(r, s)?;
    x.add_arch(&SymF::basis_elem(Basis::P, Partition::row(k - 1)), &(sign(k as i64 - 1) * harmonic(k - 1)));
    Ok(x)
}

/// `Σ_{i+j=k} ĉ_i(S̄) ĉ_j(Q̄) = (-1)^{k-1} H_{k-1} a(p_{k-1}(y))`.
pub fn verify_chern_product(k: u32, r: u32, s: u32) -> Result<IdentityReport> {
    if k == 0 {
        return Err(Error::OutOfRange { index: 0, reason: "degree must be positive" });
    }
    let cs = chern_s_table(r, s)?;
    let mut lhs = ArakelovElem::zero(r, s)?;
    for i in 0..=k.min(r) {
        lhs.add_scaled(&cs[i as usize].star(&hat_chern_q(k - i, r, s)?)?, &Rat::one());
    }
    let rhs = secondary_term(k, r, s)?;
    Ok(IdentityReport::new("chern_product", &params(k, r, s), &lhs, &rhs))
}

fn params(k: u32, r: u32, s: u32) -> [(&'static str, i64); 3] {
    [("k", k as i64), ("r", r as i64), ("s", s as i64)]
}

/// Evaluates a polynomial in `e` at `e_j ↦ ĉ_j(S̄)`.
fn eval_in_chern_s(f: &SymF, cs: &[ArakelovElem], r: u32, s: u32) -> Result<ArakelovElem> {
    let mut out = ArakelovElem::zero(r, s)?;
    for (lambda, c) in f.to_basis(Basis::E).terms() {
        if lambda.first() > r {
            continue;
        }
        let mut term = ArakelovElem::one(r, s)?;
        for &part in lambda.parts() {
            term = term.star(&cs[part as usize])?;
        }
        out.add_scaled(&term, c);
    }
    Ok(out)
}

/// `p̂_k(S̄) + p̂_k(Q̄) = k H_{k-1} a(p_{k-1}(y))`: the trivial metric on
/// `E = C^n` gives `p̂_k(Ē) = 0`.
pub fn verify_cor71(k: u32, r: u32, s: u32) -> Result<IdentityReport> {
    check_ranks(r, s)?;
    if k == 0 || k > r + s {
        return Err(Error::OutOfRange { index: k as i64, reason: "need 1 <= k <= r + s" });
    }
    let pk = SymF::basis_elem(Basis::P, Partition::row(k));
    let cs = chern_s_table(r, s)?;
    let lhs = &eval_in_chern_s(&pk, &cs, r, s)? + &normal_form(&HatPoly::new(&pk, r, s)?);
    let rhs = secondary_term(k, r, s)?.scale(&(sign(k as i64 - 1) * int(k as i64)));
    Ok(IdentityReport::new("power_sum_sequence", &params(k, r, s), &lhs, &rhs))
}

/// `ĉ_t(S̄) ĉ_t(Q̄) (1 + p_a(t)) = 1` in degrees `1..=k`. The left side
/// reported is the sum of those components, expected to vanish.
pub fn verify_r2_assembled(k: u32, r: u32, s: u32) -> Result<IdentityReport> {
    let cs = chern_s_table(r, s)?;
    let mut pa = vec![ArakelovElem::one(r, s)?];
    for l in 1..=k {
        pa.push(secondary_term(l, r, s)?.scale(&-Rat::one()));
    }
    let mut lhs = ArakelovElem::zero(r, s)?;
    for d in 1..=k {
        for i in 0..=d.min(r) {
            for l in 0..=(d - i) {
                let q = hat_chern_q(d - i - l, r, s)?;
                lhs.add_scaled(&cs[i as usize].star(&q)?.star(&pa[l as usize])?, &Rat::one());
            }
        }
    }
    let rhs = ArakelovElem::zero(r, s)?;
    Ok(IdentityReport::new("chern_relation_assembled", &params(k, r, s), &lhs, &rhs))
}

/// `σ̂_{(1)}^{n+1}` in `CH(Ḡ(1, n+1))`, the arithmetic projective space.
pub fn projective_height(n: u32) -> Result<ArakelovElem> {
    Ok(ArakelovElem::sigma(&Partition::row(1), 1, n)?.pow(n + 1))
}

/// Coefficient `c` with `σ̂_{(1)}^{n+1} = a(c s_{(1^n)}(y))`, solved by hand
/// in `R[x]/(x^{n+1})`, `x = c_1(S)`.
///
/// With `ξ = ĉ_1(Q̄) = -ĉ_1(S̄)`, the top relation `ĉ_{n+1}(Q̄) = 0` reads
/// `ξ^{n+1} = Σ_{i=1}^n (-1)^{i+1} H_i a(p_i(y) e_1(y)^{n-i})`. Since
/// `c(Q) = 1/(1 + x t)`, `p_i(y) = -x^i`, `e_1(y) = -x` and
/// `s_{(1^n)}(y) = (-x)^n`.
pub fn projective_height_hand(n: u32) -> Rat {
    let len = n as usize + 1;
    let mul = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); len];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let monomial = |d: usize, c: Rat| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); len];
        v[d] = c;
        v
    };
    let harmonic = HarmonicTable::new(n);
    let e1 = monomial(1, -Rat::one());
    let mut total = vec![Rat::zero(); len];
    for i in 1..=n {
        let p_i = monomial(i as usize, -Rat::one());
        let mut term = p_i;
        for _ in 0..n - i {
            term = mul(&term, &e1);
        }
        let c = sign(i as i64 + 1) * harmonic.get(i);
        for (t, x) in total.iter_mut().zip(term) {
            *t += x * &c;
        }
    }
    let top = monomial(0, Rat::one());
    let column = (0..n).fold(top, |acc, _| mul(&acc, &e1));
    &total[n as usize] / &column[n as usize]
}

/// Straightened `σ̂_{(1)}^{n+1}` against `a(c s_{(1^n)})` with `c` from the
/// hand solution.
pub fn verify_projective_height(n: u32) -> Result<IdentityReport> {
    let lhs = projective_height(n)?;
    let mut rhs = ArakelovElem::zero(1, n)?;
    rhs.add_arch(&SymF::basis_elem(Basis::S, Partition::column(n)), &projective_height_hand(n));
    Ok(IdentityReport::new("projective_height", &[("n", n as i64)], &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    #[test]
    fn chern_s_degree_one() {
        for (r, s) in [(1, 1), (2, 3), (3, 2)] {
            let c1 = hat_chern_s(1, r, s).unwrap();
            assert_eq!(c1, ArakelovElem::sigma(&Partition::row(1), r, s).unwrap().scale(&-Rat::one()));
            assert!((&c1 + &hat_chern_q(1, r, s).unwrap()).is_zero());
        }
        assert!(hat_chern_s(3, 2, 2).is_err());
    }

    #[test]
    fn chern_s_degree_two() {
        let c2 = hat_chern_s(2, 2, 2).unwrap();
        assert_eq!(c2.to_string(), "sigma[2] - a[1]");
    }

    #[test]
    fn power_sum_sequence_small_cases() {
        let one = verify_cor71(1, 2, 2).unwrap();
        assert!(one.holds());
        assert_eq!(one.lhs(), "0");
        let two = verify_cor71(2, 1, 1).unwrap();
        assert!(two.holds(), "{two}");
        assert_eq!(two.rhs(), "2 * a[1]");
        assert!(verify_cor71(2, 2, 2).unwrap().holds());
        assert!(verify_cor71(5, 2, 2).is_err());
    }

    #[test]
    fn hand_solved_heights() {
        let expected = [frac(1, 1), frac(5, 2), frac(13, 3), frac(77, 12)];
        for (n, c) in (1..=4).zip(expected) {
            assert_eq!(projective_height_hand(n), c);
        }
    }
}
