//! Monotone triangles, counted as `(n-1, n, n+1)`-patterns with strictly
//! increasing rows, and their relation to the strict plane partition counts.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::closedforms::tsspp_product;
use crate::counting::{enumerate_patterns, f_bruteforce, TopRowKey};
use crate::patterns::MonotoneTriangle;

/// Number of monotone triangles of size `n` whose top row is `(0, k, n+1)`.
pub fn count_monotone_triangles(n: usize, k: i64) -> u64 {
    assert!(n >= 1, "n must be positive");
    let key = TopRowKey::new(n - 1, n, n as i64 + 1, vec![k]).expect("valid key");
    enumerate_patterns(&key).filter(MonotoneTriangle::accepts).count() as u64
}

/// All monotone triangles of size `n` with top entry `k`.
pub fn monotone_triangles(n: usize, k: i64) -> Vec<MonotoneTriangle> {
    assert!(n >= 1, "n must be positive");
    let key = TopRowKey::new(n - 1, n, n as i64 + 1, vec![k]).expect("valid key");
    enumerate_patterns(&key).filter_map(|p| MonotoneTriangle::try_from(p).ok()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub n: usize,
    /// `F(n-1, n, n-1; k-1) / A(n, k)` for `k = 1..=n`.
    pub ratios: Vec<BigRational>,
    /// The common ratio if all agree.
    pub common: Option<BigRational>,
    pub tsspp: BigRational,
}

impl RatioReport {
    pub fn holds(&self) -> bool {
        self.common.as_ref() == Some(&self.tsspp)
    }
}

/// Divides the strict plane partition counts `F(n-1, n, n-1; k-1)` by the
/// monotone triangle counts and checks the quotient does not depend on `k`.
pub fn verify_ratio_independence(n: usize) -> RatioReport {
    assert!(n >= 2, "n must be at least 2");
    let ratios: Vec<BigRational> = (1..=n as i64)
        .map(|k| {
            let f = f_bruteforce(&TopRowKey::spp(n, n as i64 - 1, k - 1).expect("n >= 1"));
            let a = count_monotone_triangles(n, k);
            assert!(a > 0, "A({n}, {k}) vanished");
            f / BigRational::from_integer(BigInt::from(a))
        })
        .collect();
    let common = ratios.windows(2).all(|w| w[0] == w[1]).then(|| ratios[0].clone());
    RatioReport { n, ratios, common, tsspp: tsspp_product(n as u32) }
}
