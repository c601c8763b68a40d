//! Small exact combinatorics used by the reordering formulas.

use num_bigint::BigUint;
use num_traits::One;

pub(crate) fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

pub(crate) fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for j in 2..=n {
        acc *= BigUint::from(j);
    }
    acc
}

/// Number of ways to pair k factors across two groups of sizes n and m,
/// with the pairs ordered: C(n,k) * C(m,k) * k!.
pub(crate) fn pairings(k: u32, n: u32, m: u32) -> BigUint {
    binomial(n, k) * binomial(m, k) * factorial(k)
}
