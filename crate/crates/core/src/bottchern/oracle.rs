//! Independent recomputation of Bott-Chern forms from the deformation
//! integral on a diagonal model of the curvature.
//!
//! The curvature of `S ⊕ Q` is modelled by commuting eigenvalues `a_1..a_r`
//! and `b_1..b_s`; only their power sums enter. Along the deformation
//! `K(u)` every eigenvalue `x` becomes `(1-u) x + u ω` (with `ω = 0` for a
//! flat `E`). For `φ = p_λ` the derivative term is
//! `φ^!(u) = Σ_i λ_i TrJ(K(u)^{λ_i - 1}) Π_{j≠i} Tr(K(u)^{λ_j})`, where `TrJ`
//! sums over the `S` eigenvalues only.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{BCForm, ClassSpec, Ranks};
use crate::rat::{binomial, frac, from_bigint, int, Rat};
use crate::{Error, Result};

/// Which metric structure `E` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Flat,
    ProjFlat,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Flat => "flat",
            Mode::ProjFlat => "projflat",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flat" => Ok(Mode::Flat),
            "projflat" => Ok(Mode::ProjFlat),
            _ => Err(Error::Parse(s.to_string(), "expected `flat` or `projflat`".into())),
        }
    }
}

/// A power sum of one eigenvalue block, `p_m(S)` or `p_m(Q)` with `m >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Var {
    S(u32),
    Q(u32),
}

/// `u^u (1-u)^v ω^w Π vars`, with `vars` sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
struct Mono {
    u: u32,
    v: u32,
    w: u32,
    vars: Vec<(Var, u32)>,
}

impl Mono {
    fn mul(&self, other: &Mono) -> Mono {
        let mut vars: BTreeMap<Var, u32> = self.vars.iter().copied().collect();
        for &(x, e) in &other.vars {
            *vars.entry(x).or_insert(0) += e;
        }
        Mono { u: self.u + other.u, v: self.v + other.v, w: self.w + other.w, vars: vars.into_iter().collect() }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
struct Poly(BTreeMap<Mono, Rat>);

impl Poly {
    fn constant(c: Rat) -> Poly {
        let mut p = Poly::default();
        p.add(Mono::default(), c);
        p
    }

    fn add(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(m.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&m);
        }
    }

    fn add_poly(&mut self, other: &Poly, scale: &Rat) {
        for (m, c) in &other.0 {
            self.add(m.clone(), c * scale);
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                out.add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

struct Model {
    ranks: Ranks,
    mode: Mode,
}

impl Model {
    /// `Σ_t ((1-u) x_t + u ω)^m` over the `S` block, or over both blocks.
    fn trace(&self, m: u32, whole: bool) -> Poly {
        let mut out = Poly::default();
        let lowest = if self.mode == Mode::Flat { m } else { 0 };
        for l in lowest..=m {
            let c = from_bigint(binomial(m as i64, l as i64));
            let mono = Mono { u: m - l, v: l, w: m - l, vars: Vec::new() };
            if l == 0 {
                let rank = if whole { self.ranks.n() } else { self.ranks.r() };
                out.add(mono, c * int(rank as i64));
                continue;
            }
            let blocks: &[Var] = if whole { &[Var::S(l), Var::Q(l)] } else { &[Var::S(l)] };
            for &x in blocks {
                out.add(Mono { vars: vec![(x, 1)], ..mono.clone() }, c.clone());
            }
        }
        out
    }

    fn derivative(&self, lambda: &[u32]) -> Poly {
        let mut out = Poly::default();
        for (i, &part) in lambda.iter().enumerate() {
            let mut term = self.trace(part - 1, false);
            for (j, &other) in lambda.iter().enumerate() {
                if j != i {
                    term = term.mul(&self.trace(other, true));
                }
            }
            out.add_poly(&term, &int(part as i64));
        }
        out
    }
}

/// `∫_0^1 (f(u) - f(0)) / u du`, leaving `ω` and the block power sums free.
fn integrate(f: &Poly) -> Poly {
    let mut out = Poly::default();
    for (m, c) in &f.0 {
        let (a, b) = (m.u as i64, m.v as i64);
        let weight = if a >= 1 {
            // ∫ u^{a-1} (1-u)^b du
            Rat::one() / (int(a + b) * from_bigint(binomial(a + b - 1, b)))
        } else {
            // ∫ ((1-u)^b - 1) / u du
            (1..=b).fold(Rat::zero(), |acc, l| {
                let t = from_bigint(binomial(b, l)) * frac(1, l);
                if l % 2 == 0 {
                    acc + t
                } else {
                    acc - t
                }
            })
        };
        out.add(Mono { u: 0, v: 0, ..m.clone() }, c * weight);
    }
    out
}

/// Rewrite `p_m(S) = n ω^m - p_m(Q)` (with `ω = 0` in flat mode) and read
/// off the `BCForm`.
fn to_form(f: &Poly, ranks: Ranks, mode: Mode) -> Result<BCForm> {
    let n = int(ranks.n() as i64);
    let mut flat = Poly::default();
    for (m, c) in &f.0 {
        let mut acc = Poly::constant(c.clone());
        acc = acc.mul(&Poly(BTreeMap::from([(Mono { w: m.w, ..Mono::default() }, Rat::one())])));
        for &(x, e) in &m.vars {
            let factor = match x {
                Var::Q(_) => Poly(BTreeMap::from([(Mono { vars: vec![(x, 1)], ..Mono::default() }, Rat::one())])),
                Var::S(k) => {
                    let mut p = Poly::default();
                    if mode == Mode::ProjFlat {
                        p.add(Mono { w: k, ..Mono::default() }, n.clone());
                    }
                    p.add(Mono { vars: vec![(Var::Q(k), 1)], ..Mono::default() }, -Rat::one());
                    p
                }
            };
            for _ in 0..e {
                acc = acc.mul(&factor);
            }
        }
        flat.add_poly(&acc, &Rat::one());
    }
    let mut out = BCForm::zero(ranks);
    for (m, c) in &flat.0 {
        match m.vars.as_slice() {
            [] => out.add_term(m.w, 0, c.clone()),
            [(Var::Q(j), 1)] => out.add_term(m.w, *j, c.clone()),
            _ => return Err(Error::Nonlinear(format!("{m:?}"))),
        }
    }
    Ok(out)
}

/// Bott-Chern form of `φ` computed directly from the deformation integral.
/// In flat mode the curvature scalar is absent and `p_m(S) = -p_m(Q)`.
pub fn deformation_oracle(phi: &ClassSpec, mode: Mode) -> Result<BCForm> {
    phi.degree()?;
    let model = Model { ranks: phi.ranks(), mode };
    let mut derivative = Poly::default();
    for (lambda, c) in phi.phi().terms() {
        if !lambda.is_empty() {
            derivative.add_poly(&model.derivative(lambda.parts()), c);
        }
    }
    to_form(&integrate(&derivative), phi.ranks(), mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{Basis, Partition, SymF};

    fn spec(parts: &[u32], n: u32, r: u32) -> ClassSpec {
        ClassSpec::new(&SymF::basis_elem(Basis::P, Partition::new(parts.to_vec()).unwrap()), n, r).unwrap()
    }

    #[test]
    fn flat_p2() {
        let out = deformation_oracle(&spec(&[2], 2, 1), Mode::Flat).unwrap();
        assert_eq!(out, BCForm::term(Ranks::new(2, 1).unwrap(), 0, 1, int(2)));
    }

    #[test]
    fn flat_p11_vanishes() {
        for (n, r) in [(2, 1), (5, 2)] {
            assert!(deformation_oracle(&spec(&[1, 1], n, r), Mode::Flat).unwrap().is_zero());
        }
    }

    #[test]
    fn projflat_p2() {
        let ranks = Ranks::new(2, 1).unwrap();
        let mut expected = BCForm::term(ranks, 0, 1, int(2));
        expected.add_term(1, 0, int(-2));
        assert_eq!(deformation_oracle(&spec(&[2], 2, 1), Mode::ProjFlat).unwrap(), expected);
    }

    #[test]
    fn integral_weights() {
        // ∫ u (1-u) du = 1/6 from the u^2 (1-u) term; ∫ ((1-u)^3 - 1)/u = -H_3.
        let mut f = Poly::default();
        f.add(Mono { u: 2, v: 1, ..Mono::default() }, Rat::one());
        f.add(Mono { v: 3, ..Mono::default() }, Rat::one());
        let g = integrate(&f);
        assert_eq!(g.0.get(&Mono::default()), Some(&(frac(1, 6) - frac(11, 6))));
    }

    #[test]
    fn rejects_mixed_degree() {
        let mut f = SymF::basis_elem(Basis::P, Partition::row(2));
        f.add_term(Partition::row(1), Rat::one());
        let phi = ClassSpec::new(&f, 3, 1).unwrap();
        assert!(matches!(deformation_oracle(&phi, Mode::Flat), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn mode_round_trip() {
        for mode in [Mode::Flat, Mode::ProjFlat] {
            assert_eq!(mode.to_string().parse::<Mode>().unwrap(), mode);
        }
        assert!("both".parse::<Mode>().is_err());
    }
}
