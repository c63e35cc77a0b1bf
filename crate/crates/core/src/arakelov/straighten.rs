//! Straightening of Schur classes that leave the box.
//!
//! For `k > r` the class `ĥ_k = h_k(ĉ(Q̄))` is purely archimedean:
//! `ĥ_k = a(g_k)`. A Schur class `s_ν(ĉ)` with `ν_1 > r` is expanded along
//! the first row of its Jacobi-Trudi matrix, whose entries `ĥ_{ν_1 - 1 + j}`
//! all have index above `r`, so `s_ν(ĉ) = a(η_ν)` for a box class `η_ν`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use super::{check_ranks, ArakelovElem};
use crate::harmonic::HarmonicTable;
use crate::rat::{sign, Rat};
use crate::symfunc::{box_reduce, jacobi_trudi, Basis, Partition, SymF};
use crate::{Error, Result};

/// Write-once cache shared across threads.
struct Memo<K, V>(OnceLock<RwLock<HashMap<K, V>>>);

impl<K: std::hash::Hash + Eq, V: Clone> Memo<K, V> {
    const fn new() -> Self {
        Memo(OnceLock::new())
    }

    fn get_or(&self, key: K, compute: impl FnOnce() -> V) -> V {
        let table = self.0.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(v) = table.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = compute();
        table.write().expect("memo lock").entry(key).or_insert(v).clone()
    }
}

static G_MEMO: Memo<(u32, u32, u32), SymF> = Memo::new();
static ETA_MEMO: Memo<(Partition, u32, u32), SymF> = Memo::new();

/// `Σ_{i=1}^{k-1} H_i p_i h_{k-1-i}`, unreduced, in power sums.
pub(crate) fn g_formula(k: u32) -> SymF {
    let harmonic = HarmonicTable::new(k);
    let mut out = SymF::zero(Basis::P);
    for i in 1..k {
        let h = SymF::basis_elem(Basis::H, Partition::row(k - 1 - i)).to_basis(Basis::P);
        let p = SymF::basis_elem(Basis::P, Partition::row(i));
        out.add_scaled(&p.mul(&h), &harmonic.get(i));
    }
    out
}

/// Box-reduced `g_k`; meaningful as `ĥ_k = a(g_k)` only for `k > r`.
pub(crate) fn g_box(k: u32, r: u32, s: u32) -> SymF {
    G_MEMO.get_or((k, r, s), || box_reduce(&g_formula(k), r, s))
}

/// The class `g_k` with `ĥ_k(ĉ(Q̄)) = a(g_k)` in `CH(Ḡ(r, r + s))`, for
/// `k > r`, as a box-reduced Schur expansion.
pub fn relation_g(k: u32, r: u32, s: u32) -> Result<SymF> {
    check_ranks(r, s)?;
    if k <= r {
        return Err(Error::OutOfRange { index: k as i64, reason: "relation_g needs k > r" });
    }
    Ok(g_box(k, r, s))
}

fn jt_matrix(nu: &Partition) -> Vec<Vec<i64>> {
    let l = nu.len();
    (0..l).map(|i| (0..l).map(|j| nu.part(i) as i64 - i as i64 + j as i64).collect()).collect()
}

fn minor(m: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, &x)| x).collect())
        .collect()
}

/// For an `h`-index matrix whose first row has every index above `r`,
/// returns `A` with `det(ĥ) = a(A)`, by expanding along the first row.
fn arch_det(m: &[Vec<i64>], r: u32, s: u32) -> SymF {
    let mut out = SymF::zero(Basis::S);
    for (j, &idx) in m[0].iter().enumerate() {
        debug_assert!(idx > r as i64);
        let cofactor = box_reduce(&jacobi_trudi(&minor(m, 0, j), Basis::H), r, s);
        if cofactor.is_zero() {
            continue;
        }
        let term = box_reduce(&g_box(idx as u32, r, s).mul(&cofactor), r, s);
        out.add_scaled(&term, &sign(j as i64));
    }
    out
}

fn check_straightenable(nu: &Partition, r: u32, s: u32) -> Result<()> {
    check_ranks(r, s)?;
    if nu.fits_box(r, s) {
        return Err(Error::InBox(nu.clone(), r, s));
    }
    if nu.len() > s as usize {
        return Err(Error::OutOfRange { index: nu.len() as i64, reason: "more than s rows, the class is zero" });
    }
    Ok(())
}

/// The box class `η_ν` with `s_ν(ĉ(Q̄)) = a(η_ν)`, for `ν` with at most `s`
/// rows and `ν_1 > r`.
pub fn eta_correction(nu: &Partition, r: u32, s: u32) -> Result<SymF> {
    check_straightenable(nu, r, s)?;
    Ok(ETA_MEMO.get_or((nu.clone(), r, s), || arch_det(&jt_matrix(nu), r, s)))
}

/// `η_ν` computed by expanding along the first column instead. Only the
/// `(1, 1)` entry `ĥ_{ν_1}` is archimedean; every other cofactor `M_{i1}`
/// keeps the first row and is archimedean itself.
pub fn eta_correction_by_column(nu: &Partition, r: u32, s: u32) -> Result<SymF> {
    check_straightenable(nu, r, s)?;
    let m = jt_matrix(nu);
    let mut out = SymF::zero(Basis::S);
    let head = box_reduce(&jacobi_trudi(&minor(&m, 0, 0), Basis::H), r, s);
    out.add_scaled(&box_reduce(&g_box(nu.first(), r, s).mul(&head), r, s), &Rat::one());
    for (i, row) in m.iter().enumerate().skip(1) {
        let idx = row[0];
        if idx < 0 {
            continue;
        }
        let h = SymF::basis_elem(Basis::H, Partition::row(idx as u32));
        let term = box_reduce(&h.mul(&arch_det(&minor(&m, i, 0), r, s)), r, s);
        out.add_scaled(&term, &sign(i as i64));
    }
    Ok(out)
}

/// A polynomial in the arithmetic Chern classes `ĉ_j(Q̄)`, written as a
/// symmetric function in the `e` basis with `e_j ↦ ĉ_j(Q̄)`. Terms with
/// `e_j`, `j > s`, vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatPoly {
    poly: SymF,
    r: u32,
    s: u32,
}

impl HatPoly {
    pub fn new(poly: &SymF, r: u32, s: u32) -> Result<Self> {
        check_ranks(r, s)?;
        let poly = poly.to_basis(Basis::E).filter(|l| l.first() <= s);
        Ok(HatPoly { poly, r, s })
    }

    pub fn poly(&self) -> &SymF {
        &self.poly
    }
}

/// The unique ring element equal to `P(ĉ(Q̄))`.
pub fn normal_form(p: &HatPoly) -> ArakelovElem {
    ArakelovElem::from_parts(&p.poly, &SymF::zero(Basis::S), p.r, p.s).expect("ranks validated")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn schur(terms: &[(&[u32], Rat)]) -> SymF {
        SymF::from_terms(Basis::S, terms.iter().map(|(l, c)| (part(l), c.clone())))
    }

    #[test]
    fn relation_g_examples() {
        assert_eq!(relation_g(2, 1, 1).unwrap(), schur(&[(&[1], int(1))]));
        assert!(relation_g(3, 3, 3).is_err());
        assert_eq!(relation_g(3, 2, 3).unwrap(), schur(&[(&[2], frac(5, 2)), (&[1, 1], frac(-1, 2))]));
        assert!(relation_g(3, 1, 1).unwrap().is_zero());
        assert!(relation_g(1, 1, 1).is_err());
    }

    #[test]
    fn g_formula_in_schur_basis() {
        assert_eq!(g_formula(3).to_basis(Basis::S), schur(&[(&[2], frac(5, 2)), (&[1, 1], frac(-1, 2))]));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_correction(&part(&[2]), 1, 1).unwrap(), schur(&[(&[1], int(1))]));
        assert_eq!(eta_correction(&part(&[2, 1]), 1, 2).unwrap(), schur(&[(&[1, 1], frac(3, 2))]));
        assert!(eta_correction(&part(&[3]), 1, 1).unwrap().is_zero());
        assert!(matches!(eta_correction(&part(&[1]), 1, 1), Err(Error::InBox(..))));
    }

    #[test]
    fn normal_form_examples() {
        let e = |parts: &[u32]| SymF::basis_elem(Basis::E, part(parts));
        assert_eq!(
            normal_form(&HatPoly::new(&e(&[1]), 1, 1).unwrap()),
            ArakelovElem::sigma(&part(&[1]), 1, 1).unwrap()
        );
        assert_eq!(
            normal_form(&HatPoly::new(&e(&[1, 1]), 1, 1).unwrap()),
            ArakelovElem::arch_schur(&part(&[1]), 1, 1).unwrap()
        );
        assert_eq!(normal_form(&HatPoly::new(&e(&[]), 2, 2).unwrap()), ArakelovElem::one(2, 2).unwrap());
        assert!(HatPoly::new(&e(&[3]), 2, 2).unwrap().poly().is_zero());
    }
}
