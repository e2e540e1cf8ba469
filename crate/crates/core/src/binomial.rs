use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact `C(n, k)` with the convention that it vanishes unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    // acc * (n - i) is always divisible by (i + 1) at step i
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<BigUint>> {
        let mut rows = vec![vec![BigUint::one()]];
        for r in 1..=n {
            let prev = &rows[r - 1];
            let mut row = vec![BigUint::one(); r + 1];
            for c in 1..r {
                row[c] = &prev[c - 1] + &prev[c];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn matches_pascal_triangle() {
        let tri = pascal(60);
        for (n, row) in tri.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, k as i64), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn out_of_range_is_zero() {
        assert!(binomial(5, 6).is_zero());
        assert!(binomial(5, -1).is_zero());
        assert!(binomial(-3, 1).is_zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn large_value() {
        let expected: BigUint = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }
}
