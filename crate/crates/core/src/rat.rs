//! Rational scalars and the integer combinatorics built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision rational; the only coefficient type in the crate.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Binomial coefficient, zero whenever `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Multinomial `n! / (i! j! (n-i-j)!)`, zero outside the valid range.
pub fn trinomial(n: i64, i: i64, j: i64) -> BigInt {
    binomial(n, i) * binomial(n - i, j)
}

/// Parses `a` or `a/b`.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Rat::new(a, b))
        }
        None => text.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn trinomial_small() {
        assert_eq!(trinomial(3, 1, 1), BigInt::from(6));
        assert_eq!(trinomial(2, 0, 1), BigInt::from(2));
        assert_eq!(trinomial(2, 2, 1), BigInt::zero());
    }

    #[test]
    fn rat_text() {
        assert_eq!(frac(-6, 4).to_string(), "-3/2");
        assert_eq!(int(7).to_string(), "7");
        assert_eq!(parse_rat("-3/2"), Some(frac(-3, 2)));
        assert_eq!(parse_rat("4"), Some(int(4)));
        assert_eq!(parse_rat("1/0"), None);
    }
}
