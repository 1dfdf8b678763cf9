//! Exact counts and the multiset coefficient used by the rooted recursion.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Every count in the crate. Arbitrary precision, never negative.
pub type BigCount = BigUint;

/// `a / b`, asserting the division is exact.
///
/// Panics on a non-zero remainder or a zero divisor: both mean the caller's
/// arithmetic is wrong, and continuing would silently corrupt counts.
pub fn exact_div(a: &BigCount, b: &BigCount) -> BigCount {
    assert!(!b.is_zero(), "exact_div by zero");
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division: {a} / {b} leaves remainder {r}");
    q
}

/// Number of multisets of size `p` drawn from `base` kinds: C(base + p - 1, p).
pub fn multiset_coefficient(base: &BigCount, p: usize) -> BigCount {
    let mut f = BigCount::one();
    for q in 1..=p {
        f = multiset_coefficient_step(&f, base, q);
        if f.is_zero() {
            break;
        }
    }
    f
}

/// Advance `f_prev = multiset_coefficient(base, p - 1)` to
/// `multiset_coefficient(base, p)` as `f_prev * (base + p - 1) / p`.
///
/// The product is formed before dividing; the division is asserted exact.
pub fn multiset_coefficient_step(f_prev: &BigCount, base: &BigCount, p: usize) -> BigCount {
    assert!(p >= 1, "multiset_coefficient_step needs p >= 1");
    if f_prev.is_zero() {
        return BigCount::zero();
    }
    let numerator = f_prev * (base + (p - 1));
    exact_div(&numerator, &BigCount::from(p))
}

/// C(x + 1, 2): unordered pairs with repetition from `x` kinds.
pub fn pairs_with_repetition(x: &BigCount) -> BigCount {
    multiset_coefficient(x, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    /// Falling-product form of C(n, r), independent of the incremental step.
    fn binomial_product(n: u64, r: u64) -> BigCount {
        if r > n {
            return BigCount::zero();
        }
        let mut num = BigCount::one();
        let mut den = BigCount::one();
        for t in 0..r {
            num *= n - t;
            den *= t + 1;
        }
        num / den
    }

    #[test]
    fn empty_selection_is_unique() {
        for b in [0, 1, 5, 1000] {
            assert_eq!(multiset_coefficient(&big(b), 0), big(1));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(multiset_coefficient(&big(1), 7), big(1));
        assert_eq!(multiset_coefficient(&big(3), 2), big(6));
        assert_eq!(multiset_coefficient(&big(0), 1), big(0));
        assert_eq!(multiset_coefficient(&big(0), 9), big(0));
    }

    #[test]
    fn step_examples() {
        assert_eq!(multiset_coefficient_step(&big(1), &big(3), 1), big(3));
        assert_eq!(multiset_coefficient_step(&big(3), &big(3), 2), big(6));
    }

    #[test]
    fn long_chain_matches_product_formula() {
        // base = 5, p = 100 -> C(104, 100)
        let base = big(5);
        let prev = binomial_product(5 + 98, 99);
        let got = multiset_coefficient_step(&prev, &base, 100);
        assert_eq!(got, binomial_product(104, 100));
        assert_eq!(got, big(4_598_126));
    }

    #[test]
    fn pairs() {
        assert_eq!(pairs_with_repetition(&big(0)), big(0));
        assert_eq!(pairs_with_repetition(&big(1)), big(1));
        assert_eq!(pairs_with_repetition(&big(4)), big(10));
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn inexact_division_panics() {
        exact_div(&big(7), &big(2));
    }
}
