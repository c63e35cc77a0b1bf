use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use super::check_ranks;
use super::straighten::eta_correction;
use crate::rat::Rat;
use crate::symfunc::{box_reduce, schur_product, write_linear, Basis, Partition, SymF};
use crate::{Error, Result};

/// An element `Σ q_λ σ̂_λ + a(Σ r_μ s_μ(y))` of `CH(Ḡ(r, r + s))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArakelovElem {
    r: u32,
    s: u32,
    geom: BTreeMap<Partition, Rat>,
    arch: BTreeMap<Partition, Rat>,
}

/// The two coordinate maps out of the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// Forget the archimedean part, giving the classical Schubert class.
    Zeta,
    /// The form `Σ r_μ s_μ(y)` under `a`.
    Arch,
}

fn add_to(map: &mut BTreeMap<Partition, Rat>, key: Partition, c: Rat) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_insert_with(Rat::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

impl ArakelovElem {
    pub fn zero(r: u32, s: u32) -> Result<Self> {
        check_ranks(r, s)?;
        Ok(ArakelovElem { r, s, geom: BTreeMap::new(), arch: BTreeMap::new() })
    }

    pub fn one(r: u32, s: u32) -> Result<Self> {
        Self::sigma(&Partition::empty(), r, s)
    }

    /// The lifted Schubert class `σ̂_λ`.
    pub fn sigma(lambda: &Partition, r: u32, s: u32) -> Result<Self> {
        let mut x = Self::zero(r, s)?;
        if !lambda.fits_box(r, s) {
            return Err(Error::OutOfBox(lambda.clone(), r, s));
        }
        x.geom.insert(lambda.clone(), Rat::one());
        Ok(x)
    }

    /// `a(s_μ(y))` for `μ` in the box.
    pub fn arch_schur(mu: &Partition, r: u32, s: u32) -> Result<Self> {
        let mut x = Self::zero(r, s)?;
        if !mu.fits_box(r, s) {
            return Err(Error::OutOfBox(mu.clone(), r, s));
        }
        x.arch.insert(mu.clone(), Rat::one());
        Ok(x)
    }

    /// `f(ĉ(Q̄)) + a(g(y))` for arbitrary symmetric functions `f` and `g`;
    /// `f` is straightened and `g` is reduced to the box.
    pub fn from_parts(f: &SymF, g: &SymF, r: u32, s: u32) -> Result<Self> {
        let mut x = Self::zero(r, s)?;
        for (nu, c) in f.to_basis(Basis::S).terms() {
            x.add_schur(nu, c);
        }
        x.add_arch(g, &Rat::one());
        Ok(x)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn geom(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.geom.iter()
    }

    pub fn arch(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.arch.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.geom.is_empty() && self.arch.is_empty()
    }

    /// Codimensions present: `|λ|` for geometric terms, `|μ| + 1` for
    /// archimedean ones.
    pub fn codims(&self) -> BTreeSet<u32> {
        self.geom.keys().map(Partition::weight).chain(self.arch.keys().map(|m| m.weight() + 1)).collect()
    }

    /// Keeps the part of codimension `d`.
    pub fn component(&self, d: u32) -> ArakelovElem {
        ArakelovElem {
            r: self.r,
            s: self.s,
            geom: self.geom.iter().filter(|(l, _)| l.weight() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
            arch: self.arch.iter().filter(|(m, _)| m.weight() + 1 == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn project(&self, which: Projection) -> SymF {
        let part = match which {
            Projection::Zeta => &self.geom,
            Projection::Arch => &self.arch,
        };
        SymF::from_terms(Basis::S, part.iter().map(|(l, c)| (l.clone(), c.clone())))
    }

    pub fn scale(&self, c: &Rat) -> ArakelovElem {
        let mut out = ArakelovElem { r: self.r, s: self.s, geom: BTreeMap::new(), arch: BTreeMap::new() };
        out.add_scaled(self, c);
        out
    }

    /// Adds `c * other`; both must live on the same grassmannian.
    pub fn add_scaled(&mut self, other: &ArakelovElem, c: &Rat) {
        assert_eq!((self.r, self.s), (other.r, other.s), "elements of different rings");
        for (l, x) in &other.geom {
            add_to(&mut self.geom, l.clone(), x * c);
        }
        for (m, x) in &other.arch {
            add_to(&mut self.arch, m.clone(), x * c);
        }
    }

    fn check_same_ring(&self, other: &ArakelovElem) -> Result<()> {
        if (self.r, self.s) != (other.r, other.s) {
            return Err(Error::RankMismatch(self.r, self.r + self.s, other.r, other.r + other.s));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ArakelovElem) -> Result<ArakelovElem> {
        self.check_same_ring(other)?;
        Ok(self + other)
    }

    /// Adds `c s_ν(ĉ(Q̄))`, straightening `ν` when it leaves the box.
    pub(crate) fn add_schur(&mut self, nu: &Partition, c: &Rat) {
        if nu.len() > self.s as usize {
            return;
        }
        if nu.first() <= self.r {
            add_to(&mut self.geom, nu.clone(), c.clone());
            return;
        }
        let eta = eta_correction(nu, self.r, self.s).expect("partition leaves the box");
        for (m, x) in eta.terms() {
            add_to(&mut self.arch, m.clone(), x * c);
        }
    }

    /// Adds `c a(g(y))`.
    pub(crate) fn add_arch(&mut self, g: &SymF, c: &Rat) {
        for (m, x) in box_reduce(g, self.r, self.s).terms() {
            add_to(&mut self.arch, m.clone(), x * c);
        }
    }

    /// The ring product. `a(x) y = a(x ω(y))`, and products of two
    /// archimedean classes vanish.
    pub fn star(&self, other: &ArakelovElem) -> Result<ArakelovElem> {
        self.check_same_ring(other)?;
        let mut out = ArakelovElem::zero(self.r, self.s)?;
        for (l, x) in &self.geom {
            for (m, y) in &other.geom {
                let c = x * y;
                for (nu, k) in schur_product(l, m).terms() {
                    out.add_schur(nu, &(k * &c));
                }
            }
        }
        for (a, b) in [(self, other), (other, self)] {
            for (l, x) in &a.geom {
                for (m, y) in &b.arch {
                    let c = x * y;
                    for (nu, k) in schur_product(l, m).terms() {
                        if nu.fits_box(self.r, self.s) {
                            add_to(&mut out.arch, nu.clone(), k * &c);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> ArakelovElem {
        let one = ArakelovElem::one(self.r, self.s).expect("ranks already validated");
        (0..k).fold(one, |acc, _| acc.star(self).expect("same ring"))
    }
}

impl std::ops::Add for &ArakelovElem {
    type Output = ArakelovElem;

    fn add(self, rhs: &ArakelovElem) -> ArakelovElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::one());
        out
    }
}

impl std::ops::Sub for &ArakelovElem {
    type Output = ArakelovElem;

    fn sub(self, rhs: &ArakelovElem) -> ArakelovElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

impl std::ops::Neg for &ArakelovElem {
    type Output = ArakelovElem;

    fn neg(self) -> ArakelovElem {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for ArakelovElem {
    /// `sigma[2] + 1/2 * a[1]`, geometric terms first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let geom = self.geom.iter().map(|(l, c)| (format!("sigma{l}"), c));
        let arch = self.arch.iter().map(|(m, c)| (format!("a{m}"), c));
        write_linear(f, geom.chain(arch))
    }
}

impl fmt::Debug for ArakelovElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in CH(G({}, {}))", self.r, self.r + self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sigma_one_squared_on_p1() {
        let x = ArakelovElem::sigma(&p(&[1]), 1, 1).unwrap();
        let sq = x.star(&x).unwrap();
        assert_eq!(sq, ArakelovElem::arch_schur(&p(&[1]), 1, 1).unwrap());
        assert!(sq.project(Projection::Zeta).is_zero());
        assert_eq!(x.project(Projection::Zeta), SymF::basis_elem(Basis::S, p(&[1])));
    }

    #[test]
    fn arch_classes_annihilate() {
        let a = ArakelovElem::arch_schur(&p(&[1]), 1, 1).unwrap();
        assert!(a.star(&a).unwrap().is_zero());
        assert_eq!(a.project(Projection::Arch), SymF::basis_elem(Basis::S, p(&[1])));
    }

    #[test]
    fn in_box_product_needs_no_correction() {
        let x = ArakelovElem::sigma(&p(&[1]), 2, 2).unwrap();
        let expected = &ArakelovElem::sigma(&p(&[2]), 2, 2).unwrap() + &ArakelovElem::sigma(&p(&[1, 1]), 2, 2).unwrap();
        assert_eq!(x.star(&x).unwrap(), expected);
        assert_eq!(expected.to_string(), "sigma[2] + sigma[1,1]");
    }

    #[test]
    fn unit_and_mismatch() {
        let x = ArakelovElem::sigma(&p(&[2, 1]), 2, 3).unwrap();
        let one = ArakelovElem::one(2, 3).unwrap();
        assert_eq!(one.star(&x).unwrap(), x);
        let y = ArakelovElem::sigma(&p(&[1]), 2, 2).unwrap();
        assert!(matches!(x.star(&y), Err(Error::RankMismatch(..))));
        assert!(ArakelovElem::sigma(&p(&[3]), 2, 2).is_err());
        assert!(ArakelovElem::zero(0, 2).is_err());
    }

    #[test]
    fn display_and_codims() {
        let mut x = ArakelovElem::sigma(&p(&[1]), 1, 2).unwrap().scale(&int(-2));
        x.add_arch(&SymF::basis_elem(Basis::S, p(&[1, 1])), &frac(1, 2));
        assert_eq!(x.to_string(), "-2 * sigma[1] + 1/2 * a[1,1]");
        assert_eq!(x.codims(), BTreeSet::from([1, 3]));
        assert_eq!(x.component(3).to_string(), "1/2 * a[1,1]");
        assert_eq!(ArakelovElem::zero(1, 1).unwrap().to_string(), "0");
    }
}
