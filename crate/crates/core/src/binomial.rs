//! Exact binomial coefficients.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Exact `C(a, b)` for any integers.
///
/// Zero when `b < 0` or `b > a >= 0`. A negative top argument is handled
/// through the polynomial extension `C(a, b) = a(a-1)...(a-b+1) / b!`, so
/// closed forms such as `C(d+N, N) - C(d-1, N)` stay valid polynomials in `d`
/// down to `d = 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        if b > a {
            return BigInt::zero();
        }
        return BigInt::from(num_integer::binomial(
            BigUint::from(a as u64),
            BigUint::from(b as u64),
        ));
    }
    // C(a, b) = (-1)^b C(b - a - 1, b) for a < 0
    let magnitude = binomial(b - a - 1, b);
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// `C(a, b)` as a machine integer for counts known to be small.
pub fn binomial_usize(a: i64, b: i64) -> usize {
    use num_traits::ToPrimitive;
    binomial(a, b)
        .to_usize()
        .expect("binomial coefficient does not fit a machine word")
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal's triangle by addition only; independent of the library routine.
    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for r in 1..=rows {
            let prev = &tri[r - 1];
            let mut row = vec![BigInt::one(); r + 1];
            for c in 1..r {
                row[c] = &prev[c - 1] + &prev[c];
            }
            tri.push(row);
        }
        tri
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(3, 3), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn vanishes_below_n() {
        // C(d-1, N) with d-1 < N
        for n in 1..6 {
            for d in 1..=n {
                assert_eq!(binomial(d - 1, n), BigInt::zero());
            }
        }
    }

    #[test]
    fn negative_top_is_polynomial() {
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-1, 1), BigInt::from(-1));
        assert_eq!(binomial(-1, 2), BigInt::from(1));
        assert_eq!(binomial(-3, 2), BigInt::from(6)); // (-3)(-4)/2
        assert_eq!(binomial(-2, 3), BigInt::from(-4)); // (-2)(-3)(-4)/6
    }

    #[test]
    fn matches_pascal_triangle() {
        let tri = pascal(60);
        for (a, row) in tri.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                assert_eq!(&binomial(a as i64, b as i64), v, "C({a},{b})");
            }
        }
    }

    #[test]
    fn large_value_is_exact() {
        let expected: BigInt = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
