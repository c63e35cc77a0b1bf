//! Irreducible characters of the symmetric group (Murnaghan-Nakayama).

use std::collections::HashMap;

use super::Partition;
use crate::{Error, Result};

/// `χ_λ(μ)`: the irreducible character indexed by `λ` at a permutation of
/// cycle type `μ`.
///
/// Border strips of length `μ_1, μ_2, ...` are removed recursively, each
/// contributing `(-1)^{height}`. Strips are located on the beta-set of `λ`,
/// where removing a strip of length `k` moves one bead from `b` to `b - k`
/// and its height is the number of beads jumped over.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.clone(), mu.clone()));
    }
    let mut memo = HashMap::new();
    Ok(chi(lambda.parts(), mu.parts(), &mut memo))
}

fn chi(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let m = lambda.len() as u32;
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + m - 1 - i as u32).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<u32> =
            moved.iter().enumerate().map(|(t, &x)| x - (m - 1 - t as u32)).filter(|&p| p > 0).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * chi(&shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s3_table() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), Ok(-1));
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[3])), Ok(1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), Ok(2));
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])), Ok(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), Ok(0));
    }

    #[test]
    fn trivial_and_sign() {
        for k in 1..=7 {
            for mu in partitions_of(k, None, None) {
                assert_eq!(mn_character(&Partition::row(k), &mu), Ok(1));
                let odd = mu.parts().iter().filter(|&&c| c % 2 == 0).count() % 2;
                let sign = if odd == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&Partition::column(k), &mu), Ok(sign));
            }
        }
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn empty_partition() {
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()), Ok(1));
    }
}
