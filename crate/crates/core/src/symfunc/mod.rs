//! Symmetric functions over the rationals.
//!
//! A [`SymF`] is a finite linear combination of basis elements `e_λ`, `h_λ`,
//! `p_λ` or `s_λ`. The first three bases are multiplicative (`b_λ b_μ =
//! b_{λ∪μ}`); products of Schur functions go through the
//! Littlewood-Richardson rule. Mixing bases in arithmetic converts the right
//! operand into the basis of the left one.

mod characters;
mod convert;
mod det;
mod lr;
mod partition;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

pub use characters::mn_character;
pub use convert::convert_basis;
pub use det::jacobi_trudi;
pub use lr::{lr_coefficient, schur_product};
pub use partition::{partitions_of, Partition};

use crate::rat::Rat;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    /// Elementary symmetric functions.
    E,
    /// Complete homogeneous symmetric functions.
    H,
    /// Power sums.
    P,
    /// Schur functions.
    S,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn is_multiplicative(self) -> bool {
        self != Basis::S
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(s.to_string(), "expected one of e, h, p, s".into())),
        }
    }
}

/// A symmetric function written in one basis. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymF {
    basis: Basis,
    terms: BTreeMap<Partition, Rat>,
}

impl SymF {
    pub fn zero(basis: Basis) -> Self {
        SymF { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_elem(basis, Partition::empty())
    }

    pub fn basis_elem(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, Rat::one())
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: Rat) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, coeff);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rat)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `scale * other`, converting `other` to this basis if needed.
    pub fn add_scaled(&mut self, other: &SymF, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        if other.basis != self.basis {
            let converted = convert_basis(other, self.basis);
            return self.add_scaled(&converted, scale);
        }
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c * scale);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The set of weights `|λ|` that occur.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(Partition::weight).collect()
    }

    /// The common degree of all terms, or an error for mixed degrees.
    /// The zero function counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let degrees = self.degrees();
        match degrees.len() {
            0 => Ok(0),
            1 => Ok(*degrees.iter().next().unwrap()),
            _ => Err(Error::NotHomogeneous(degrees.into_iter().collect())),
        }
    }

    pub fn scale(&self, c: &Rat) -> SymF {
        let mut out = SymF::zero(self.basis);
        out.add_scaled(self, c);
        out
    }

    /// Keeps the terms whose partition satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> SymF {
        SymF {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| keep(l)).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn to_basis(&self, target: Basis) -> SymF {
        convert_basis(self, target)
    }

    /// Product, in the basis of `self`.
    pub fn mul(&self, other: &SymF) -> SymF {
        if other.basis != self.basis {
            return self.mul(&convert_basis(other, self.basis));
        }
        let mut out = SymF::zero(self.basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                if self.basis.is_multiplicative() {
                    out.add_term(a.union(b), c);
                } else {
                    for (nu, k) in schur_product(a, b).terms {
                        out.add_term(nu, k * &c);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SymF {
        (0..k).fold(SymF::one(self.basis), |acc, _| acc.mul(self))
    }
}

impl Add for &SymF {
    type Output = SymF;

    fn add(self, rhs: &SymF) -> SymF {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::one());
        out
    }
}

impl Sub for &SymF {
    type Output = SymF;

    fn sub(self, rhs: &SymF) -> SymF {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

impl Neg for &SymF {
    type Output = SymF;

    fn neg(self) -> SymF {
        self.scale(&-Rat::one())
    }
}

impl Mul for &SymF {
    type Output = SymF;

    fn mul(self, rhs: &SymF) -> SymF {
        SymF::mul(self, rhs)
    }
}

/// Writes `c0 * x0 + c1 * x1 - ...`, omitting unit coefficients.
pub(crate) fn write_linear<'a, T: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (T, &'a Rat)>,
) -> fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        let negative = c.is_negative();
        let abs = c.abs();
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        if abs.is_one() {
            write!(f, "{label}")?;
        } else {
            write!(f, "{abs} * {label}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis;
        write_linear(f, self.terms.iter().map(|(l, c)| (format!("{basis}{l}"), c)))
    }
}

impl fmt::Debug for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Normal form of `f` on the Schubert basis of `G(r, r + s)`: expand in
/// Schur functions of the `s` Chern roots of the quotient bundle and drop
/// `s_ν` with more than `s` rows (zero in `s` variables) or with `ν_1 > r`
/// (zero in the Chow ring).
pub fn box_reduce(f: &SymF, r: u32, s: u32) -> SymF {
    convert_basis(f, Basis::S).filter(|nu| nu.fits_box(r, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut f = SymF::basis_elem(Basis::P, p(&[2]));
        f.add_term(p(&[2]), int(-1));
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn multiplicative_product_concatenates() {
        let a = SymF::basis_elem(Basis::E, p(&[2]));
        let b = SymF::term(Basis::E, p(&[3, 1]), int(2));
        assert_eq!(&a * &b, SymF::term(Basis::E, p(&[3, 2, 1]), int(2)));
    }

    #[test]
    fn degree_queries() {
        let mut f = SymF::basis_elem(Basis::S, p(&[2]));
        assert_eq!(f.homogeneous_degree(), Ok(2));
        f.add_term(p(&[1]), int(1));
        assert_eq!(f.degrees().into_iter().collect::<Vec<_>>(), vec![1, 2]);
        assert!(f.homogeneous_degree().is_err());
    }

    #[test]
    fn display() {
        let f = SymF::from_terms(Basis::P, [(p(&[1, 1, 1]), frac(1, 3)), (p(&[3]), frac(-1, 3))]);
        assert_eq!(f.to_string(), "-1/3 * p[3] + 1/3 * p[1,1,1]");
        let g = SymF::from_terms(Basis::S, [(p(&[2]), int(1)), (p(&[1, 1]), int(1))]);
        assert_eq!(g.to_string(), "s[2] + s[1,1]");
    }

    #[test]
    fn box_reduce_examples() {
        let s2 = SymF::basis_elem(Basis::S, p(&[2]));
        assert!(box_reduce(&s2, 1, 1).is_zero());
        let s1 = SymF::basis_elem(Basis::S, p(&[1]));
        assert_eq!(box_reduce(&s1, 1, 1), s1);
        let p2 = SymF::basis_elem(Basis::P, p(&[2]));
        assert_eq!(box_reduce(&p2, 1, 2), SymF::term(Basis::S, p(&[1, 1]), int(-1)));
    }

    #[test]
    fn grassmannian_g24_degree() {
        // Four general lines in P^3 meet two lines.
        let s1 = SymF::basis_elem(Basis::S, p(&[1]));
        let prod = box_reduce(&s1.pow(4), 2, 2);
        assert_eq!(prod.coeff(&p(&[2, 2])), int(2));
    }
}
