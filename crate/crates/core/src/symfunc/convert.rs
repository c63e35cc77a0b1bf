//! Change of basis between `e`, `h`, `p` and `s`.
//!
//! * `p <-> e` and `p <-> h`: Newton's identities.
//! * `e <-> h`: `Σ_i (-1)^i e_i h_{k-i} = 0`.
//! * `s -> p`: Frobenius, `s_λ = Σ_μ χ_λ(μ) z_μ^{-1} p_μ`; `p -> s` uses the
//!   same characters, `p_μ = Σ_λ χ_λ(μ) s_λ`.
//! * `s -> h`, `s -> e`: Jacobi-Trudi and its dual.
//! * `h -> s`, `e -> s`: products of rows (columns) by Littlewood-Richardson.

use num_traits::One;

use super::characters::mn_character;
use super::det::{h_indices, jacobi_trudi};
use super::{partitions_of, schur_product, Basis, Partition, SymF};
use crate::rat::{from_bigint, int, sign, Rat};

/// Rewrites `f` in the `target` basis. Exact; round trips are the identity.
pub fn convert_basis(f: &SymF, target: Basis) -> SymF {
    if f.basis() == target {
        return f.clone();
    }
    let mut out = SymF::zero(target);
    for (lambda, c) in f.terms() {
        out.add_scaled(&convert_elem(f.basis(), target, lambda), c);
    }
    out
}

fn convert_elem(from: Basis, to: Basis, lambda: &Partition) -> SymF {
    use Basis::*;
    match (from, to) {
        (S, P) => frobenius(lambda),
        (P, S) => {
            let mut out = SymF::zero(S);
            for nu in partitions_of(lambda.weight(), None, None) {
                let chi = mn_character(&nu, lambda).expect("weights agree");
                out.add_term(nu, int(chi));
            }
            out
        }
        (S, H) => jacobi_trudi(&h_indices(lambda), H),
        (S, E) => jacobi_trudi(&h_indices(&lambda.conjugate()), E),
        (H, S) | (E, S) => lambda.parts().iter().fold(SymF::one(S), |acc, &k| {
            let factor = if from == H { Partition::row(k) } else { Partition::column(k) };
            let mut next = SymF::zero(S);
            for (nu, c) in acc.terms() {
                next.add_scaled(&schur_product(nu, &factor), c);
            }
            next
        }),
        _ => {
            let gens = generators(from, to, lambda.first());
            lambda.parts().iter().fold(SymF::one(to), |acc, &k| acc.mul(&gens[k as usize]))
        }
    }
}

fn frobenius(lambda: &Partition) -> SymF {
    let mut out = SymF::zero(Basis::P);
    for mu in partitions_of(lambda.weight(), None, None) {
        let chi = mn_character(lambda, &mu).expect("weights agree");
        if chi != 0 {
            let coeff = int(chi) / from_bigint(mu.z());
            out.add_term(mu, coeff);
        }
    }
    out
}

/// `[g_0, ..., g_top]` where `g_k` is the degree-`k` generator of the
/// multiplicative basis `from`, written in the multiplicative basis `to`.
fn generators(from: Basis, to: Basis, top: u32) -> Vec<SymF> {
    use Basis::*;
    let elem = |k: u32| SymF::basis_elem(to, Partition::row(k));
    let mut gens = vec![SymF::one(to)];
    for k in 1..=top {
        let mut g = SymF::zero(to);
        let kk = k as i64;
        match (from, to) {
            // k e_k = Σ (-1)^{i-1} p_i e_{k-i},  k h_k = Σ p_i h_{k-i}
            (E, P) | (H, P) => {
                for i in 1..=k {
                    let c = if from == E { sign(i as i64 - 1) } else { Rat::one() };
                    g.add_scaled(&elem(i).mul(&gens[(k - i) as usize]), &(c / int(kk)));
                }
            }
            // p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
            (P, E) => {
                for i in 1..k {
                    g.add_scaled(&elem(i).mul(&gens[(k - i) as usize]), &sign(i as i64 - 1));
                }
                g.add_scaled(&elem(k), &(sign(kk - 1) * int(kk)));
            }
            // p_k = k h_k - Σ_{i<k} h_i p_{k-i}
            (P, H) => {
                for i in 1..k {
                    g.add_scaled(&elem(i).mul(&gens[(k - i) as usize]), &-Rat::one());
                }
                g.add_scaled(&elem(k), &int(kk));
            }
            // e_k = Σ (-1)^{i-1} h_i e_{k-i} and symmetrically
            (E, H) | (H, E) => {
                for i in 1..=k {
                    g.add_scaled(&elem(i).mul(&gens[(k - i) as usize]), &sign(i as i64 - 1));
                }
            }
            _ => unreachable!("{from} -> {to} is not a generator conversion"),
        }
        gens.push(g);
    }
    gens
}
