use std::collections::HashMap;

use num_traits::One;

use super::{Basis, Partition, SymF};
use crate::rat::Rat;

/// Determinant of the square matrix whose `(i, j)` entry is the basis element
/// `b_{indices[i][j]}` of the multiplicative basis `basis`, with `b_0 = 1`
/// and `b_m = 0` for `m < 0`.
///
/// Jacobi-Trudi matrices are banded with many zeros, so the expansion runs
/// row by row over subsets of used columns instead of over permutations.
pub fn jacobi_trudi(indices: &[Vec<i64>], basis: Basis) -> SymF {
    assert!(basis.is_multiplicative(), "determinant entries must come from e, h or p");
    let n = indices.len();
    assert!(indices.iter().all(|row| row.len() == n), "matrix must be square");
    let mut layer: HashMap<u32, SymF> = HashMap::from([(0, SymF::one(basis))]);
    for row in indices {
        let mut next: HashMap<u32, SymF> = HashMap::new();
        for (mask, value) in &layer {
            for (col, &idx) in row.iter().enumerate() {
                if idx < 0 || mask & (1 << col) != 0 {
                    continue;
                }
                // Inversions gained: used columns to the right of `col`.
                let inversions = (mask >> (col + 1)).count_ones();
                let sign = if inversions % 2 == 0 { Rat::one() } else { -Rat::one() };
                let shifted = SymF::from_terms(basis, value.terms().map(|(l, c)| (l.with_part(idx as u32), c * &sign)));
                next.entry(mask | (1 << col)).or_insert_with(|| SymF::zero(basis)).add_scaled(&shifted, &Rat::one());
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << n) - 1)).unwrap_or_else(|| SymF::zero(basis))
}

/// Index matrix of `s_λ = det(h_{λ_i - i + j})`.
pub(crate) fn h_indices(lambda: &Partition) -> Vec<Vec<i64>> {
    let n = lambda.len();
    (0..n).map(|i| (0..n).map(|j| lambda.part(i) as i64 - i as i64 + j as i64).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn two_by_two() {
        // s_{21} = h_2 h_1 - h_3
        let f = jacobi_trudi(&h_indices(&p(&[2, 1])), Basis::H);
        let expected = SymF::from_terms(Basis::H, [(p(&[2, 1]), int(1)), (p(&[3]), int(-1))]);
        assert_eq!(f, expected);
    }

    #[test]
    fn empty_matrix_is_one() {
        assert_eq!(jacobi_trudi(&[], Basis::E), SymF::one(Basis::E));
    }

    #[test]
    fn column_partition() {
        // s_{111} = h_1^3 - 2 h_2 h_1 + h_3
        let f = jacobi_trudi(&h_indices(&p(&[1, 1, 1])), Basis::H);
        let expected = SymF::from_terms(Basis::H, [(p(&[1, 1, 1]), int(1)), (p(&[2, 1]), int(-2)), (p(&[3]), int(1))]);
        assert_eq!(f, expected);
    }
}
