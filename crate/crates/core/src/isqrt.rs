//! Integer square roots by Newton iteration, checked against `r² ≤ n < (r+1)²`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Calculate `⌊√n⌋` for a machine-sized integer.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // 2^⌈bits/2⌉ is never below the root, so the iteration decreases monotonically.
    let bits = 128 - n.leading_zeros();
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    debug_assert!(x * x <= n && (x + 1).checked_mul(x + 1).is_none_or(|s| s > n));
    x
}

/// Calculate `⌊√n⌋` for an unbounded integer.
///
/// Values that fit in 128 bits take the machine-word path; larger values run
/// the same decreasing Newton iteration on big integers. The post-condition
/// `r² ≤ n < (r+1)²` is checked before returning.
pub fn isqrt(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u128() {
        return BigUint::from(isqrt_u128(small));
    }
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y: BigUint = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    assert!(
        &x * &x <= *n && (&x + 1u32) * (&x + 1u32) > *n,
        "integer square root post-condition violated"
    );
    x
}

/// Returns `Some(r)` when `n = r²`.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    if n.is_zero() {
        return Some(BigUint::zero());
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}
