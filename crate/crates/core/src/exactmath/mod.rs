//! Exact integer and quadratic-surd arithmetic. Nothing in here consults
//! floating point to make a decision.

mod natural;
mod surd;

pub use natural::{isqrt_big, isqrt_u128, Natural};
pub use surd::{cmp_int_vs_sum_sqrt, floor_surd, surd_cmp, QuadraticSurd, Surd};

/// The unique `r` with `r² ≤ n < (r+1)²`.
pub fn isqrt(n: &Natural) -> Natural {
    n.isqrt()
}

pub fn is_perfect_square(n: &Natural) -> Option<Natural> {
    n.perfect_sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&Natural::ZERO), Natural::ZERO);
        assert_eq!(isqrt(&Natural::from(288u64)), Natural::from(16u64));
        assert_eq!(isqrt(&Natural::from(2_890_000u64)), Natural::from(1700u64));
        let n = Natural::from(4u64 * 991 * 729);
        let r = isqrt(&n);
        assert!(r.square() <= n && (&r + 1u64).square() > n);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(&Natural::ZERO), Some(Natural::ZERO));
        assert_eq!(
            is_perfect_square(&Natural::from(36u64)),
            Some(Natural::from(6u64))
        );
        assert_eq!(is_perfect_square(&Natural::from(35u64)), None);
    }

    #[test]
    fn isqrt_matches_scan_oracle_to_one_million() {
        // walk the squares alongside n
        let mut root = 0u128;
        for n in 0u128..=1_000_000 {
            while (root + 1) * (root + 1) <= n {
                root += 1;
            }
            assert_eq!(isqrt_u128(n), root, "n = {n}");
        }
    }
}
