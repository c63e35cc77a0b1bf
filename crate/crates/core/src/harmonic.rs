//! Harmonic numbers and the binomial/harmonic identities behind the closed
//! forms for Bott-Chern forms.

use num_traits::{One, Zero};

use crate::rat::{binomial, frac, from_bigint, int, sign, trinomial, Rat};
use crate::symfunc::{Basis, Partition, SymF};
use crate::{Error, IdentityReport, Result};

/// `H_k = 1 + 1/2 + ... + 1/k`, with `H_0 = 0`.
pub fn harmonic(k: u32) -> Rat {
    (1..=k as i64).fold(Rat::zero(), |acc, i| acc + frac(1, i))
}

/// Precomputed `H_0, ..., H_max`. Immutable once built; lookups past the
/// table fall back to direct summation.
#[derive(Clone, Debug)]
pub struct HarmonicTable {
    cache: Vec<Rat>,
}

impl HarmonicTable {
    pub fn new(max: u32) -> Self {
        let mut cache = Vec::with_capacity(max as usize + 1);
        cache.push(Rat::zero());
        for k in 1..=max as i64 {
            let next = &cache[cache.len() - 1] + frac(1, k);
            cache.push(next);
        }
        HarmonicTable { cache }
    }

    pub fn get(&self, k: u32) -> Rat {
        match self.cache.get(k as usize) {
            Some(h) => h.clone(),
            None => harmonic(k),
        }
    }

    /// `H_k` for a signed index; callers only reach negative indices through
    /// terms whose binomial factor already vanishes.
    fn at(&self, k: i64) -> Rat {
        if k < 0 {
            Rat::zero()
        } else {
            self.get(k as u32)
        }
    }
}

fn binom(n: i64, k: i64) -> Rat {
    from_bigint(binomial(n, k))
}

/// Harmonic-weighted Vandermonde sum
///
/// `Σ_{i=q-s}^{n-p} C(n-i,p) C(s+i,q) H_{s+i}
///     = C(n+s+1,p+q+1) (H_{n+s+1} - H_{p+q+1} + H_q)`.
///
/// The last term is `H_q`; with `H_p` the identity already fails at
/// `(n,p,q,s) = (2,1,0,0)`.
pub fn verify_identity_sum(n: u32, p: u32, q: u32, s: u32) -> IdentityReport {
    verify_identity_sum_with(&HarmonicTable::new(n + s + 1), n, p, q, s)
}

pub fn verify_identity_sum_with(table: &HarmonicTable, n: u32, p: u32, q: u32, s: u32) -> IdentityReport {
    let (n, p, q, s) = (n as i64, p as i64, q as i64, s as i64);
    let mut lhs = Rat::zero();
    for i in (q - s)..=(n - p) {
        lhs += binom(n - i, p) * binom(s + i, q) * table.at(s + i);
    }
    let rhs = binom(n + s + 1, p + q + 1) * (table.at(n + s + 1) - table.at(p + q + 1) + table.at(q));
    IdentityReport::new("harmonic_vandermonde", &[("n", n), ("p", p), ("q", q), ("s", s)], &lhs, &rhs)
}

/// The same sum with the harmonic factors removed:
/// `Σ_{i=q-s}^{n-p} C(n-i,p) C(s+i,q) = C(n+s+1,p+q+1)`.
pub fn verify_binomial_sum(n: u32, p: u32, q: u32, s: u32) -> IdentityReport {
    let (n, p, q, s) = (n as i64, p as i64, q as i64, s as i64);
    let lhs = ((q - s)..=(n - p)).fold(Rat::zero(), |acc, i| acc + binom(n - i, p) * binom(s + i, q));
    let rhs = binom(n + s + 1, p + q + 1);
    IdentityReport::new("binomial_vandermonde", &[("n", n), ("p", p), ("q", q), ("s", s)], &lhs, &rhs)
}

/// `Σ_{i=0}^{s} (-1)^{i+1} n!/(i!(s-i)!(n-s)!) H_{n-s+i} = 1/s` for
/// `n >= s >= 1`.
pub fn verify_identity_trinomial(n: u32, s: u32) -> Result<IdentityReport> {
    if s == 0 {
        return Err(Error::OutOfRange { index: 0, reason: "s must be positive" });
    }
    if n < s {
        return Err(Error::OutOfRange { index: n as i64, reason: "n must be at least s" });
    }
    let table = HarmonicTable::new(n);
    let (n, s) = (n as i64, s as i64);
    let lhs = (0..=s)
        .fold(Rat::zero(), |acc, i| acc + sign(i + 1) * from_bigint(trinomial(n, i, s - i)) * table.at(n - s + i));
    let rhs = frac(1, s);
    Ok(IdentityReport::new("trinomial_harmonic", &[("n", n), ("s", s)], &lhs, &rhs))
}

/// Truncated product of power series given by coefficient vectors.
fn series_mul(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `log(1 - t) / (t - 1)` through `t^order`.
pub fn harmonic_series(order: u32) -> Vec<Rat> {
    let order = order as usize;
    // log(1 - t) = -Σ t^k / k,   1/(t - 1) = -Σ t^k
    let log: Vec<Rat> = (0..=order).map(|k| if k == 0 { Rat::zero() } else { frac(-1, k as i64) }).collect();
    let inv: Vec<Rat> = vec![-Rat::one(); order + 1];
    series_mul(&log, &inv, order)
}

/// The harmonic number generating function at order `order`: the
/// coefficient of `t^order` in `log(1 - t) / (t - 1)` against `H_order`.
pub fn harmonic_gf_check(order: u32) -> IdentityReport {
    let lhs = harmonic_series(order).pop().unwrap_or_else(Rat::zero);
    let rhs = harmonic(order);
    IdentityReport::new("harmonic_generating_function", &[("order", order as i64)], &lhs, &rhs)
}

/// One-variable shadow of the arithmetic Chern correction: the coefficient of
/// `x^i t^{i+1}` in `t log(1 + x t) / (1 + x t)` against `(-1)^{i+1} H_i`.
pub fn pa_shadow_check(i: u32) -> IdentityReport {
    let order = i as usize;
    // Both factors are series in the single variable u = x t.
    let log: Vec<Rat> =
        (0..=order).map(|k| if k == 0 { Rat::zero() } else { sign(k as i64 + 1) / int(k as i64) }).collect();
    let inv: Vec<Rat> = (0..=order).map(|k| sign(k as i64)).collect();
    let lhs = series_mul(&log, &inv, order).pop().unwrap_or_else(Rat::zero);
    let rhs = sign(i as i64 + 1) * harmonic(i);
    IdentityReport::new("pa_generating_function", &[("i", i as i64)], &lhs, &rhs)
}

/// Agreement of the two flat Chern formulas: with `c_i(S)` the degree `i`
/// part of `(Σ_j c_j(Q) t^j)^{-1}`,
/// `(-1)^k p_k(Q) = Σ_{i=0}^k i c_i(S) c_{k-i}(Q)` as symmetric functions in
/// the roots of `Q`.
pub fn verify_flat_chern_agreement(k: u32) -> IdentityReport {
    // The inverse of E(t) is Σ (-1)^i h_i t^i.
    let mut rhs = SymF::zero(Basis::S);
    for i in 1..=k {
        let c_s = SymF::term(Basis::H, Partition::row(i), sign(i as i64) * int(i as i64));
        let c_q = SymF::basis_elem(Basis::E, Partition::row(k - i));
        rhs.add_scaled(&c_s.to_basis(Basis::S).mul(&c_q.to_basis(Basis::S)), &Rat::one());
    }
    let lhs = SymF::term(Basis::P, Partition::row(k), sign(k as i64)).to_basis(Basis::S);
    IdentityReport::new("flat_chern_agreement", &[("k", k as i64)], &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(harmonic(0), Rat::zero());
        assert_eq!(harmonic(2), frac(3, 2));
        assert_eq!(harmonic(5), frac(137, 60));
        let t = HarmonicTable::new(3);
        assert_eq!(t.get(5), frac(137, 60));
        assert_eq!(t.get(3), frac(11, 6));
    }

    #[test]
    fn identity_sum_examples() {
        let r = verify_identity_sum(2, 0, 0, 0);
        assert!(r.holds());
        assert_eq!(r.lhs(), "5/2");
        let r = verify_identity_sum(2, 1, 0, 0);
        assert!(r.holds());
        assert_eq!(r.lhs(), "1");
        let r = verify_identity_sum(2, 0, 1, 1);
        assert!(r.holds());
        assert_eq!(r.lhs(), "19/2");
    }

    #[test]
    fn printed_h_p_variant_fails() {
        // lhs = 1 but C(3,2)(H_3 - H_2 + H_1) = 4.
        let lhs = binom(2, 1) * harmonic(0) + binom(1, 1) * harmonic(1);
        let printed = binom(3, 2) * (harmonic(3) - harmonic(2) + harmonic(1));
        assert_ne!(lhs, printed);
    }

    #[test]
    fn empty_range_is_zero() {
        // q - s > n - p: both sides vanish.
        let r = verify_identity_sum(1, 1, 3, 0);
        assert!(r.holds());
        assert_eq!(r.lhs(), "0");
        assert!(verify_binomial_sum(1, 1, 3, 0).holds());
    }

    #[test]
    fn trinomial_examples() {
        for (n, s, value) in [(2, 1, "1"), (2, 2, "1/2"), (3, 2, "1/2")] {
            let r = verify_identity_trinomial(n, s).unwrap();
            assert!(r.holds());
            assert_eq!(r.lhs(), value);
        }
        assert!(verify_identity_trinomial(1, 2).is_err());
        assert!(verify_identity_trinomial(3, 0).is_err());
    }

    #[test]
    fn generating_function() {
        assert_eq!(harmonic_series(3), vec![int(0), int(1), frac(3, 2), frac(11, 6)]);
        assert_eq!(harmonic_gf_check(1).lhs(), "1");
        assert_eq!(harmonic_gf_check(5).lhs(), "137/60");
        assert!(harmonic_gf_check(0).holds());
        for i in 0..6 {
            assert!(pa_shadow_check(i).holds());
        }
        assert_eq!(pa_shadow_check(2).lhs(), "-3/2");
    }

    #[test]
    fn flat_chern_agreement_low_degree() {
        for k in 1..=5 {
            assert!(verify_flat_chern_agreement(k).holds(), "k = {k}");
        }
    }
}
