use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rat::Rat;
use crate::symfunc::{Basis, SymF};
use crate::{Error, Result};

/// Ranks of `E` and `S` in a short exact sequence; `Q` has rank `n - r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ranks {
    n: u32,
    r: u32,
}

impl Ranks {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::InvalidRanks { n, r });
        }
        Ok(Ranks { n, r })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn r(self) -> u32 {
        self.r
    }

    pub fn s(self) -> u32 {
        self.n - self.r
    }
}

/// `Σ coeff · ω^i · p_j(Q)`.
///
/// A term with `j = 0` stands for `coeff · ω^i` alone: the trace of the
/// identity on `Q`, `p_0(Q) = s`, is already folded into its coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct BCForm {
    ranks: Ranks,
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BCForm {
    pub fn zero(ranks: Ranks) -> Self {
        BCForm { ranks, terms: BTreeMap::new() }
    }

    pub fn term(ranks: Ranks, omega: u32, p: u32, coeff: Rat) -> Self {
        let mut f = Self::zero(ranks);
        f.add_term(omega, p, coeff);
        f
    }

    pub fn ranks(&self) -> Ranks {
        self.ranks
    }

    pub fn add_term(&mut self, omega: u32, p: u32, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((omega, p)).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(omega, p));
        }
    }

    pub fn add_scaled(&mut self, other: &BCForm, scale: &Rat) {
        assert_eq!(self.ranks, other.ranks, "adding forms over different sequences");
        for (&(i, j), c) in &other.terms {
            self.add_term(i, j, c * scale);
        }
    }

    /// `(ω-power, p-index) -> coeff`, sorted.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, omega: u32, p: u32) -> Rat {
        self.terms.get(&(omega, p)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> BCForm {
        let mut out = BCForm::zero(self.ranks);
        out.add_scaled(self, c);
        out
    }

    /// Multiplication by `ω^t`.
    pub fn shift_omega(&self, t: u32) -> BCForm {
        BCForm { ranks: self.ranks, terms: self.terms.iter().map(|(&(i, j), c)| ((i + t, j), c.clone())).collect() }
    }

    /// Restriction to `ω = 0`, i.e. to a flat `E`.
    pub fn at_omega_zero(&self) -> BCForm {
        BCForm {
            ranks: self.ranks,
            terms: self.terms.iter().filter(|(&(i, _), _)| i == 0).map(|(&k, c)| (k, c.clone())).collect(),
        }
    }

    /// The set of total degrees `i + j` that occur.
    pub fn gradings(&self) -> std::collections::BTreeSet<u32> {
        self.terms.keys().map(|&(i, j)| i + j).collect()
    }
}

impl std::ops::Add for &BCForm {
    type Output = BCForm;

    fn add(self, rhs: &BCForm) -> BCForm {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::one());
        out
    }
}

impl std::ops::Sub for &BCForm {
    type Output = BCForm;

    fn sub(self, rhs: &BCForm) -> BCForm {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

struct Monomial(u32, u32);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.0, self.1) {
            (0, 0) => write!(f, "1"),
            (i, 0) => write!(f, "w^{i}"),
            (0, j) => write!(f, "p{j}(Q)"),
            (i, j) => write!(f, "w^{i} p{j}(Q)"),
        }
    }
}

impl fmt::Display for BCForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Coefficients are always written out: `c * w^i pj(Q)`.
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let abs = c.abs();
            if (i, j) == (0, 0) {
                write!(f, "{sep}{abs}")?;
            } else {
                write!(f, "{sep}{abs} * {}", Monomial(i, j))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BCForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={}, r={})", self.ranks.n, self.ranks.r)
    }
}

/// An invariant polynomial on `n x n` matrices, identified with a symmetric
/// function of the eigenvalues, together with the ranks of the sequence.
///
/// `e_k` vanishes on `n x n` matrices for `k > n`, so `e`-basis input drops
/// every term `e_λ` with `λ_1 > n`. The polynomial is stored in power sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    phi: SymF,
    ranks: Ranks,
}

impl ClassSpec {
    pub fn new(phi: &SymF, n: u32, r: u32) -> Result<Self> {
        let ranks = Ranks::new(n, r)?;
        let phi = if phi.basis() == Basis::E { phi.filter(|l| l.first() <= n) } else { phi.clone() };
        Ok(ClassSpec { phi: phi.to_basis(Basis::P), ranks })
    }

    /// The polynomial in the power sum basis.
    pub fn phi(&self) -> &SymF {
        &self.phi
    }

    pub fn ranks(&self) -> Ranks {
        self.ranks
    }

    pub fn degree(&self) -> Result<u32> {
        self.phi.homogeneous_degree()
    }
}
