use std::fmt;
use std::ops::{Add, Neg};
use std::sync::Arc;

use num_traits::Zero;

use crate::counting::CountValue;
use crate::error::{Error, Result};
use crate::exact::{ext_sum, LaurentPolyQ};

/// A total function `Z^arity -> V`.
pub struct IntFunction<V> {
    arity: usize,
    f: Arc<dyn Fn(&[i64]) -> V + Send + Sync>,
}

impl<V> Clone for IntFunction<V> {
    fn clone(&self) -> Self {
        IntFunction { arity: self.arity, f: Arc::clone(&self.f) }
    }
}

impl<V> fmt::Debug for IntFunction<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntFunction(arity = {})", self.arity)
    }
}

impl<V> IntFunction<V> {
    pub fn new<F>(arity: usize, f: F) -> Self
    where
        F: Fn(&[i64]) -> V + Send + Sync + 'static,
    {
        IntFunction { arity, f: Arc::new(f) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Panics if `x` has the wrong length.
    pub fn eval(&self, x: &[i64]) -> V {
        assert_eq!(x.len(), self.arity, "argument length does not match arity");
        (self.f)(x)
    }
}

impl<V: Zero + 'static> IntFunction<V> {
    pub fn zero(arity: usize) -> Self {
        IntFunction::new(arity, |_| V::zero())
    }
}

/// `(.., k_i, k_{i+1}, ..) -> (.., k_{i+1} + 1, k_i - 1, ..)` with 1-based `i`.
pub fn swap_shift(x: &[i64], i: usize) -> Vec<i64> {
    let mut y = x.to_vec();
    y[i - 1] = x[i] + 1;
    y[i] = x[i - 1] - 1;
    y
}

/// `D_i G = G(.., k_i, k_{i+1}, ..) + G(.., k_{i+1} + 1, k_i - 1, ..)`.
pub fn apply_d<V>(i: usize, g: &IntFunction<V>) -> Result<IntFunction<V>>
where
    V: Add<Output = V> + 'static,
{
    if i == 0 || i >= g.arity() {
        return Err(Error::IndexOutOfRange { index: i, max: g.arity().saturating_sub(1) });
    }
    let g = g.clone();
    Ok(IntFunction::new(g.arity(), move |x| g.eval(x) + g.eval(&swap_shift(x, i))))
}

/// Nested extended sums `sum_{l_1=a_1}^{b_1} ... sum_{l_m=a_m}^{b_m} f(l)`,
/// evaluated innermost-first.
pub fn nested_sum<V, F>(ranges: &[(i64, i64)], f: &mut F) -> V
where
    V: Zero + Neg<Output = V>,
    F: FnMut(&[i64]) -> V,
{
    fn go<V, F>(ranges: &[(i64, i64)], point: &mut Vec<i64>, f: &mut F) -> V
    where
        V: Zero + Neg<Output = V>,
        F: FnMut(&[i64]) -> V,
    {
        let depth = point.len();
        if depth == ranges.len() {
            return f(point);
        }
        let (a, b) = ranges[depth];
        ext_sum(a, b, |l| {
            point.push(l);
            let v = go(ranges, point, f);
            point.pop();
            v
        })
    }
    let mut point = Vec::with_capacity(ranges.len());
    go(ranges, &mut point, f)
}

/// Consecutive ranges `[k_1, k_2], [k_2, k_3], ..., [k_m, k_{m+1}]`.
pub fn phi_ranges(k: &[i64]) -> Vec<(i64, i64)> {
    k.windows(2).map(|w| (w[0], w[1])).collect()
}

/// `Phi_m G (k_1, ..., k_{m+1}) = sum_{l_1=k_1}^{k_2} ... sum_{l_m=k_m}^{k_{m+1}} G(l)`.
pub fn apply_phi<V>(g: &IntFunction<V>) -> IntFunction<V>
where
    V: Zero + Neg<Output = V> + 'static,
{
    let g = g.clone();
    IntFunction::new(g.arity() + 1, move |k| nested_sum(&phi_ranges(k), &mut |l: &[i64]| g.eval(l)))
}

/// `Phi^q_m`: as [`apply_phi`] with the extra weight `q^(l_1 + ... + l_m)`.
pub fn apply_phi_q(g: &IntFunction<LaurentPolyQ>) -> IntFunction<LaurentPolyQ> {
    apply_phi_weighted(g)
}

/// [`apply_phi`] with each summand passed through [`CountValue::q_weighted`].
pub(crate) fn apply_phi_weighted<V: CountValue + 'static>(g: &IntFunction<V>) -> IntFunction<V> {
    let g = g.clone();
    IntFunction::new(g.arity() + 1, move |k| {
        nested_sum(&phi_ranges(k), &mut |l: &[i64]| g.eval(l).q_weighted(l.iter().sum()))
    })
}
