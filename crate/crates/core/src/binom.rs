//! Binomial coefficients.
//!
//! Counting (edge counts, closed-form bounds) goes through [`big`]; ranking
//! uses [`checked`], which refuses to overflow instead of wrapping.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(n, k)` over unbounded integers.
pub fn big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for signed arguments; zero whenever `n < k`, `n < 0` or `k < 0`.
pub fn signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(big(n as u64, k as u64))
}

/// `C(n, k)` as `u64`, or `None` on overflow.
pub fn checked(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(big(10, 3), BigUint::from(120u32));
        assert_eq!(big(3, 5), BigUint::zero());
        assert_eq!(checked(52, 5), Some(2_598_960));
        assert_eq!(checked(0, 0), Some(1));
        assert_eq!(signed(-1, 2), BigInt::zero());
        assert_eq!(signed(7, 1), BigInt::from(7));
    }

    #[test]
    fn checked_detects_overflow() {
        assert!(checked(200, 100).is_none());
        assert_eq!(checked(67, 33).map(BigUint::from), Some(big(67, 33)));
    }

    #[test]
    fn pascal_rule_holds() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(big(n, k), big(n - 1, k - 1) + big(n - 1, k));
            }
        }
    }
}
