//! Semistandard tableaux and the alternating extension `F_k` of their count
//! to arbitrary integer vectors.
//!
//! For a strictly decreasing `lambda` with `lambda_k >= -k`, `F_k(lambda)` is
//! the number of semistandard tableaux of shape
//! `(lambda_1 + 1, ..., lambda_k + k)` with entries in `1..=k`. It is extended
//! by translation invariance and by alternation under permutations.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exact::{ext_sum, int};
use crate::patterns::Partition;

/// Argument of `F_k`: any integer vector of length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LambdaVector(pub Vec<i64>);

impl LambdaVector {
    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LambdaVector {
    fn from(v: Vec<i64>) -> Self {
        LambdaVector(v)
    }
}

/// Number of semistandard tableaux of shape `shape` with entries in `1..=k`,
/// by filling cells row by row.
pub fn ssyt_bruteforce(shape: &Partition, k: usize) -> u64 {
    let parts: Vec<usize> = shape.parts().iter().map(|&p| p as usize).filter(|&p| p > 0).collect();
    if parts.len() > k {
        return 0;
    }
    let cells: Vec<(usize, usize)> = parts.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<i64>> = parts.iter().map(|&len| vec![0; len]).collect();

    fn fill(t: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<i64>>, k: i64) -> u64 {
        if t == cells.len() {
            return 1;
        }
        let (i, j) = cells[t];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=k {
            grid[i][j] = v;
            total += fill(t + 1, cells, grid, k);
        }
        total
    }
    fill(0, &cells, &mut grid, k as i64)
}

/// Sorts into strictly decreasing order; `None` if two entries coincide,
/// otherwise the sorted vector and the sign of the sorting permutation.
pub fn sort_with_sign(lambda: &[i64]) -> Option<(Vec<i64>, i64)> {
    let mut v = lambda.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] <= v[j] {
            if v[j - 1] == v[j] {
                return None;
            }
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some((v, sign))
}

/// `F_k(lambda)` from the definition: alternate into strictly decreasing
/// order, translate so that the last entry is `-k`, then count tableaux.
pub fn f_ext(lambda: &[i64]) -> i64 {
    let k = lambda.len();
    if k == 0 {
        return 1;
    }
    let Some((sorted, sign)) = sort_with_sign(lambda) else {
        return 0;
    };
    let shift = -(k as i64) - sorted[k - 1];
    let shape: Vec<i64> = sorted.iter().enumerate().map(|(i, &l)| l + shift + i as i64 + 1).collect();
    let shape = Partition::new(shape).expect("strictly decreasing entries give a partition");
    sign * ssyt_bruteforce(&shape, k) as i64
}

pub type FExtMemo = HashMap<Vec<i64>, i64>;

/// `F_k(lambda)` through the merged recursion
/// `F_k(lambda) = sum_{mu_1=lambda_k+1}^{lambda_1} ... sum_{mu_{k-1}=lambda_k+1}^{lambda_{k-1}} F_{k-1}(mu)`,
/// valid when `lambda_k` is a minimum. Other vectors first move a minimum
/// entry to the last position, which costs a sign.
pub fn f_ext_recursive(lambda: &[i64], memo: &mut FExtMemo) -> i64 {
    let k = lambda.len();
    if k <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(lambda) {
        return v;
    }
    let (argmin, _) = lambda.iter().enumerate().min_by_key(|&(i, &v)| (v, std::cmp::Reverse(i))).unwrap();
    let mut v = lambda.to_vec();
    let mut sign = 1;
    if argmin != k - 1 {
        v.swap(argmin, k - 1);
        sign = -1;
    }
    let low = v[k - 1] + 1;
    let ranges: Vec<(i64, i64)> = v[..k - 1].iter().map(|&hi| (low, hi)).collect();
    let mut mu = Vec::with_capacity(k - 1);
    let value = sign * box_sum(&ranges, &mut mu, memo);
    memo.insert(lambda.to_vec(), value);
    value
}

fn box_sum(ranges: &[(i64, i64)], mu: &mut Vec<i64>, memo: &mut FExtMemo) -> i64 {
    if mu.len() == ranges.len() {
        return f_ext_recursive(mu, memo);
    }
    let (a, b) = ranges[mu.len()];
    ext_sum(a, b, |x| {
        mu.push(x);
        let v = box_sum(ranges, mu, memo);
        mu.pop();
        v
    })
}

/// Signed sum of `F_{k-1}(mu)` over `lambda_k + 1 <= mu_i <= lambda_i` with
/// some `mu_{i'} <= lambda_{i'+1}`; it vanishes for weakly decreasing `lambda`.
pub fn sign_involution_sum(lambda: &[i64]) -> i64 {
    let k = lambda.len();
    assert!(k >= 2, "needs k >= 2");
    assert!(lambda.windows(2).all(|w| w[0] >= w[1]), "lambda must be weakly decreasing");
    let low = lambda[k - 1] + 1;
    let mut total = 0;
    let mut mu = vec![low; k - 1];
    if (0..k - 1).any(|i| lambda[i] < low) {
        return 0;
    }
    loop {
        if (0..k - 1).any(|i| mu[i] <= lambda[i + 1]) {
            total += f_ext(&mu);
        }
        // odometer step
        let mut t = 0;
        loop {
            if t == k - 1 {
                return total;
            }
            if mu[t] < lambda[t] {
                mu[t] += 1;
                break;
            }
            mu[t] = low;
            t += 1;
        }
    }
}

pub fn verify_sign_involution(lambda: &[i64]) -> bool {
    sign_involution_sum(lambda) == 0
}

/// `prod_{i<j} (lambda_i - lambda_j) / (j - i)`.
pub fn vandermonde_formula(lambda: &[i64]) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            acc = acc * int(lambda[i] - lambda[j]) / int((j - i) as i64);
        }
    }
    acc
}

/// `F_k(lambda)` agrees with the product formula.
pub fn verify_part_formula(lambda: &[i64]) -> bool {
    vandermonde_formula(lambda) == int(f_ext(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::ssyt_product;

    fn shape(p: &[i64]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(ssyt_bruteforce(&shape(&[1]), 2), 2);
        assert_eq!(ssyt_bruteforce(&shape(&[2, 1]), 3), 8);
        assert_eq!(ssyt_bruteforce(&shape(&[1, 1, 1]), 2), 0);
        assert_eq!(ssyt_bruteforce(&shape(&[]), 3), 1);
        assert_eq!(ssyt_bruteforce(&shape(&[3, 3]), 2), 1);
    }

    #[test]
    fn f_ext_examples() {
        for k in 1..=4i64 {
            let staircase: Vec<i64> = (0..k).rev().collect();
            assert_eq!(f_ext(&staircase), 1);
        }
        assert_eq!(f_ext(&[1, 2, 1]), 0);
        assert_eq!(f_ext(&[1, -1, -3]), 8);
        assert_eq!(f_ext(&[-1, 1, -3]), -8);
    }

    #[test]
    fn sorting_sign() {
        assert_eq!(sort_with_sign(&[1, 2, 3]), Some((vec![3, 2, 1], -1)));
        assert_eq!(sort_with_sign(&[3, 1, 2]), Some((vec![3, 2, 1], -1)));
        assert_eq!(sort_with_sign(&[2, 3, 1]), Some((vec![3, 2, 1], -1)));
        assert_eq!(sort_with_sign(&[2, 1, 3]), Some((vec![3, 2, 1], 1)));
        assert_eq!(sort_with_sign(&[0, 0]), None);
    }

    #[test]
    fn recursive_agrees_on_small_box() {
        let mut memo = FExtMemo::new();
        for a in -2..=3 {
            for b in -2..=3 {
                assert_eq!(f_ext_recursive(&[a, b], &mut memo), f_ext(&[a, b]));
                for c in -2..=3 {
                    assert_eq!(f_ext_recursive(&[a, b, c], &mut memo), f_ext(&[a, b, c]), "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn involution_and_formula() {
        assert!(verify_sign_involution(&[2, 0]));
        assert!(verify_sign_involution(&[3, 1, 1]));
        assert!(verify_sign_involution(&[9, 5, 1]));
        assert!(verify_part_formula(&[1, -1, -3]));
        assert!(verify_part_formula(&[2, 2, 0]));
        assert_eq!(ssyt_product(&shape(&[2, 1]), 3), int(8));
    }
}
