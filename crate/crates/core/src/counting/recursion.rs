use std::collections::HashMap;

use num_rational::BigRational;

use super::{CountValue, TopRowKey};
use crate::exact::LaurentPolyQ;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct PrefixKey {
    level: usize,
    n: usize,
    c: i64,
    dim: usize,
    point: Vec<i64>,
}

/// Memoized evaluation of the top-row recursion
///
/// ```text
/// F(r; k_1..k_m) = sum_{l_1=0}^{k_1} sum_{l_2=k_1}^{k_2} ... sum_{l_{m+1}=k_m}^{c} F(r-1; l) w(l)
/// ```
///
/// with extended sums and `F(0; .) = 1`. Here `w(l) = 1` for plain counts and
/// `w(l) = q^(l_1 + ... + l_{m+1})` for generating functions.
///
/// Because every summation range depends on the `k`'s only, the nested sum
/// is a signed box sum. Each extended sum satisfies
/// `sum_{a}^{b} = S(b) - S(a-1)` with `S(x) = sum_{0}^{x}`, so the box sum
/// is an inclusion-exclusion over `2^(m+1)` corners of the memoized
/// multi-dimensional prefix sum of the level below.
#[derive(Debug, Default)]
pub struct Recurrence<V> {
    memo: HashMap<TopRowKey, V>,
    prefix: HashMap<PrefixKey, V>,
}

pub type PlainRecurrence = Recurrence<BigRational>;
pub type QRecurrence = Recurrence<LaurentPolyQ>;

impl<V: CountValue> Recurrence<V> {
    pub fn new() -> Self {
        Recurrence { memo: HashMap::new(), prefix: HashMap::new() }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn value(&mut self, key: &TopRowKey) -> V {
        if key.r == 0 {
            return V::one();
        }
        if let Some(v) = self.memo.get(key) {
            return v.clone();
        }
        let bounds = key.full_top_row();
        let dims = bounds.len() - 1;
        let mut total = V::zero();
        for mask in 0u32..(1 << dims) {
            let corner: Vec<i64> = (0..dims)
                .map(|j| if mask & (1 << j) != 0 { bounds[j] - 1 } else { bounds[j + 1] })
                .collect();
            let term = self.prefix_sum(key.r - 1, key.n, key.c, dims, corner);
            if mask.count_ones() % 2 == 0 {
                total = total + term;
            } else {
                total = total - term;
            }
        }
        self.memo.insert(key.clone(), total.clone());
        total
    }

    /// Summand of the recursion at level `level + 1`.
    fn summand(&mut self, level: usize, n: usize, c: i64, point: &[i64]) -> V {
        let key = TopRowKey { r: level, n, c, ks: point.to_vec() };
        self.value(&key).q_weighted(point.iter().sum())
    }

    /// Extended prefix sum over the first `dim` coordinates, each from 0 to `point[j]`.
    fn prefix_sum(&mut self, level: usize, n: usize, c: i64, dim: usize, point: Vec<i64>) -> V {
        if dim == 0 {
            return self.summand(level, n, c, &point);
        }
        let x = point[dim - 1];
        if x == -1 {
            return V::zero();
        }
        let key = PrefixKey { level, n, c, dim, point };
        if let Some(v) = self.prefix.get(&key) {
            return v.clone();
        }
        let mut point = key.point.clone();
        let value = if x >= 0 {
            // S(x) = S(x-1) + f(x)
            let here = self.prefix_sum(level, n, c, dim - 1, point.clone());
            point[dim - 1] = x - 1;
            self.prefix_sum(level, n, c, dim, point) + here
        } else {
            // S(x) = S(x+1) - f(x+1)
            point[dim - 1] = x + 1;
            let next = self.prefix_sum(level, n, c, dim - 1, point.clone());
            self.prefix_sum(level, n, c, dim, point) - next
        };
        self.prefix.insert(key, value.clone());
        value
    }
}

/// `F(r, n, c; ks)` through the recursion.
pub fn f_recursive(key: &TopRowKey, memo: &mut PlainRecurrence) -> BigRational {
    memo.value(key)
}

/// `F_q(r, n, c; ks)` through the `q`-weighted recursion.
pub fn fq_recursive(key: &TopRowKey, memo: &mut QRecurrence) -> LaurentPolyQ {
    memo.value(key)
}

impl<V: CountValue> Recurrence<V> {
    /// Drops all cached values.
    pub fn clear(&mut self) {
        self.memo.clear();
        self.prefix.clear();
    }
}
