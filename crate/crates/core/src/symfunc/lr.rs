//! Littlewood-Richardson products of Schur functions.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Basis, Partition, SymF};
use crate::rat::Rat;

/// `s_λ · s_μ` expanded in the Schur basis.
///
/// Counts Littlewood-Richardson tableaux of shape `ν/λ` and content `μ`:
/// semistandard skew fillings whose reverse reading word (rows right to
/// left, top to bottom) is a lattice word.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SymF {
    // The tableau count is symmetric in λ and μ; enumerating with the
    // shorter content keeps the search small.
    let (outer, content) = if mu.weight() <= lambda.weight() { (lambda, mu) } else { (mu, lambda) };
    let mut counts = BTreeMap::new();
    let mut search = LrSearch {
        lambda: outer,
        mu: content,
        used: vec![0; content.len() + 1],
        row_start: vec![0; content.len() + 1],
        rows: Vec::new(),
        above: Vec::new(),
        out: &mut counts,
    };
    search.row(0);
    SymF::from_terms(Basis::S, counts.into_iter().map(|(nu, k): (Partition, u64)| (nu, Rat::from_integer(k.into()))))
}

/// The single coefficient `c^ν_{λμ}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Rat {
    if lambda.weight() + mu.weight() != nu.weight() {
        return Rat::zero();
    }
    schur_product(lambda, mu).coeff(nu)
}

struct LrSearch<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    /// `used[j]`: copies of label `j` placed so far (index 0 unused).
    used: Vec<u32>,
    /// `used` as it was when the current row was started.
    row_start: Vec<u32>,
    /// Lengths of the rows of ν built so far.
    rows: Vec<u32>,
    /// Labels of the previous row, 0 marking boxes of λ.
    above: Vec<u32>,
    out: &'a mut BTreeMap<Partition, u64>,
}

impl LrSearch<'_> {
    fn row(&mut self, i: usize) {
        let done = (1..=self.mu.len()).all(|j| self.used[j] == self.mu.part(j - 1));
        if done {
            let mut parts = self.rows.clone();
            parts.extend((i..self.lambda.len()).map(|t| self.lambda.part(t)));
            *self.out.entry(Partition::from_vec_unchecked(parts)).or_insert(0) += 1;
            return;
        }
        if i >= self.lambda.len() + self.mu.len() {
            return;
        }
        let base = self.lambda.part(i);
        let mut labels = vec![0; base as usize];
        let saved = std::mem::replace(&mut self.row_start, self.used.clone());
        self.label(i, 1, &mut labels);
        self.row_start = saved;
    }

    /// Places the copies of `label` (and then larger labels) in row `i`.
    fn label(&mut self, i: usize, label: usize, labels: &mut Vec<u32>) {
        let top = (i + 1).min(self.mu.len());
        if label > top {
            let len = labels.len() as u32;
            if len == 0 {
                return;
            }
            let saved_above = std::mem::replace(&mut self.above, labels.clone());
            self.rows.push(len);
            self.row(i + 1);
            self.rows.pop();
            self.above = saved_above;
            return;
        }
        let room = self.mu.part(label - 1) - self.used[label];
        // Within a row the reverse reading word meets `label` before any
        // `label - 1` of the same row.
        let lattice = if label == 1 { u32::MAX } else { self.row_start[label - 1] - self.used[label] };
        let limit = room.min(lattice);
        let start = labels.len();
        let row_cap = if i == 0 { usize::MAX } else { self.rows[i - 1] as usize };

        self.label(i, label + 1, labels);
        let mut placed = 0;
        while placed < limit {
            let col = labels.len();
            if col >= row_cap {
                break;
            }
            if i > 0 && self.above[col] >= label as u32 {
                break;
            }
            labels.push(label as u32);
            placed += 1;
            self.used[label] += 1;
            self.label(i, label + 1, labels);
        }
        self.used[label] -= placed;
        labels.truncate(start);
    }
}
