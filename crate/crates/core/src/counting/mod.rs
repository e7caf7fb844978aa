//! Signed counting of generalized patterns with a fixed top row.
//!
//! Two independent engines compute `F(r, n, c; k_1..k_{n-r})` and its
//! `q`-analog: [`f_bruteforce`] walks every pattern, [`Recurrence`] evaluates
//! the extended-summation recursion down to the `r = 0` base case. The brute
//! force is the ground truth; the recursion is the fast path.

mod enumerate;
mod recursion;

use std::fmt;
use std::ops::{Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::LaurentPolyQ;

pub use enumerate::{count_patterns, enumerate_patterns, f_bruteforce, fq_bruteforce, PatternCursor, PatternIter};
pub use recursion::{f_recursive, fq_recursive, PlainRecurrence, QRecurrence, Recurrence};

/// `(r, n, c)` together with the top row `(k_1, ..., k_{n-r})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TopRowKey {
    pub r: usize,
    pub n: usize,
    pub c: i64,
    pub ks: Vec<i64>,
}

impl TopRowKey {
    pub fn new(r: usize, n: usize, c: i64, ks: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidKey("n must be positive".into()));
        }
        if r > n {
            return Err(Error::InvalidKey(format!("r = {r} exceeds n = {n}")));
        }
        if ks.len() != n - r {
            return Err(Error::InvalidKey(format!("expected {} top-row entries, got {}", n - r, ks.len())));
        }
        Ok(TopRowKey { r, n, c, ks })
    }

    /// `(n-1, n, c; k)`, the key counting strict plane partitions.
    pub fn spp(n: usize, c: i64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidKey("n must be positive".into()));
        }
        TopRowKey::new(n - 1, n, c, vec![k])
    }

    /// `(0, k_1, ..., k_{n-r}, c)`.
    pub fn full_top_row(&self) -> Vec<i64> {
        let mut row = Vec::with_capacity(self.ks.len() + 2);
        row.push(0);
        row.extend_from_slice(&self.ks);
        row.push(self.c);
        row
    }

    pub fn top_sum(&self) -> i64 {
        self.ks.iter().sum()
    }
}

impl fmt::Display for TopRowKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.ks.iter().map(i64::to_string).collect();
        write!(f, "({},{},{};{})", self.r, self.n, self.c, ks.join(","))
    }
}

/// Values the counting engines can produce.
///
/// The recursion sums `F(r-1; l) * w(l)` where the weight is `1` for plain
/// counts and `q^(l_1 + ... + l_m)` for generating functions.
pub trait CountValue:
    Clone + Zero + One + Neg<Output = Self> + Sub<Output = Self> + PartialEq + fmt::Debug + Send + Sync
{
    fn q_weighted(self, exponent: i64) -> Self;
}

impl CountValue for BigRational {
    fn q_weighted(self, _exponent: i64) -> Self {
        self
    }
}

impl CountValue for LaurentPolyQ {
    fn q_weighted(self, exponent: i64) -> Self {
        self.shift(exponent)
    }
}

/// `F` and `F_q` for one key.
#[derive(Clone, Debug, PartialEq)]
pub struct CountResult {
    pub plain: BigRational,
    pub q_weighted: LaurentPolyQ,
}

impl CountResult {
    pub fn bruteforce(key: &TopRowKey) -> Self {
        CountResult { plain: f_bruteforce(key), q_weighted: fq_bruteforce(key) }
    }

    /// `F_q` at `q = 1` equals `F`.
    pub fn is_consistent(&self) -> bool {
        self.q_weighted.eval_at_one() == self.plain
    }
}

/// Signed count of weakly decreasing `r`-tuples with parts in `0..=k`.
///
/// For `k < 0` this is `(-1)^r` times the number of strictly increasing
/// tuples `k < l_1 < ... < l_r < 0`; either way it equals `binom(k + r, r)`.
pub fn count_bounded_partitions(r: usize, k: i64) -> i64 {
    fn weak(len: usize, max: i64) -> i64 {
        if len == 0 {
            return 1;
        }
        (0..=max).map(|first| weak(len - 1, first)).sum()
    }
    fn strict(len: usize, above: i64, below: i64) -> i64 {
        // strictly increasing tuples of length `len` inside (above, below)
        if len == 0 {
            return 1;
        }
        ((above + 1)..below).map(|first| strict(len - 1, first, below)).sum()
    }
    if k >= 0 {
        weak(r, k)
    } else {
        let sign = if r.is_multiple_of(2) { 1 } else { -1 };
        sign * strict(r, k, 0)
    }
}
