use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::Neg;

/// Integer as a rational.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den` reduced. Panics on `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Extended summation `sum_{i=a}^{b} f(i)`.
///
/// For `b >= a` this is the ordinary sum, for `b == a - 1` it is zero, and
/// for `b < a - 1` it is `-(f(b+1) + ... + f(a-1))`. With this convention
/// `ext_sum(a, b) + ext_sum(b + 1, c) == ext_sum(a, c)` for all integers.
pub fn ext_sum<V, F>(a: i64, b: i64, mut f: F) -> V
where
    V: Zero + Neg<Output = V>,
    F: FnMut(i64) -> V,
{
    if a <= b {
        (a..=b).fold(V::zero(), |acc, i| acc + f(i))
    } else {
        -((b + 1)..a).fold(V::zero(), |acc, i| acc + f(i))
    }
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: i64, n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for i in 0..n as i64 {
        let f = a + i;
        if f == 0 {
            return BigRational::zero();
        }
        acc *= f;
    }
    BigRational::from_integer(acc)
}

pub fn factorial(n: u32) -> BigRational {
    pochhammer(1, n)
}

/// `binom(top, k)` extended to arbitrary integer `top` as `(top-k+1)_k / k!`.
pub fn binomial(top: i64, k: u32) -> BigRational {
    pochhammer(top - k as i64 + 1, k) / factorial(k)
}
