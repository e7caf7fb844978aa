use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::closedforms::theorem_special;
use crate::counting::{count_patterns, f_bruteforce, fq_bruteforce, TopRowKey};
use crate::error::{Error, Result};
use crate::exact::{int, pochhammer, LaurentPolyQ};

/// Univariate polynomial over the rationals, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyUni {
    coeffs: Vec<BigRational>,
}

impl PolyUni {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyUni { coeffs }
    }

    pub fn zero() -> Self {
        PolyUni { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        PolyUni::new(vec![c])
    }

    /// `a + b x`.
    pub fn linear(a: i64, b: i64) -> Self {
        PolyUni::new(vec![int(a), int(b)])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&int(x))
    }

    /// Newton interpolation through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(points: &[(i64, BigRational)]) -> Result<Self> {
        let xs: Vec<i64> = points.iter().map(|p| p.0).collect();
        for (i, x) in xs.iter().enumerate() {
            if xs[..i].contains(x) {
                return Err(Error::InvalidArgument(format!("repeated interpolation node {x}")));
            }
        }
        // divided differences, in place
        let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..dd.len() {
            for j in (level..dd.len()).rev() {
                dd[j] = (&dd[j] - &dd[j - 1]) / int(xs[j] - xs[j - level]);
            }
        }
        // Horner on the Newton basis
        let mut p = PolyUni::zero();
        for j in (0..dd.len()).rev() {
            p = &p * &PolyUni::linear(-xs[j], 1);
            p = p + PolyUni::constant(dd[j].clone());
        }
        Ok(p)
    }

    /// Distinct integer roots in increasing order. Every root is bounded by
    /// the Cauchy bound `1 + max |a_i / a_d|`, which is scanned exhaustively.
    pub fn integer_roots(&self) -> Vec<i64> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let lead = &self.coeffs[d];
        let bound = self.coeffs[..d]
            .iter()
            .map(|a| (a / lead).abs())
            .max()
            .unwrap_or_else(BigRational::zero)
            .ceil()
            .to_integer()
            + BigInt::one();
        let bound = bound.to_i64().expect("root bound fits in i64");
        (-bound..=bound).filter(|&x| self.eval_int(x).is_zero()).collect()
    }
}

impl std::ops::Add for PolyUni {
    type Output = PolyUni;
    fn add(self, rhs: PolyUni) -> PolyUni {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &PolyUni, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        PolyUni::new((0..len).map(|i| get(&self, i) + get(&rhs, i)).collect())
    }
}

impl Mul for &PolyUni {
    type Output = PolyUni;
    fn mul(self, rhs: &PolyUni) -> PolyUni {
        if self.is_zero() || rhs.is_zero() {
            return PolyUni::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyUni::new(out)
    }
}

impl fmt::Display for PolyUni {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*k"),
                _ => format!("{c}*k^{i}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn spp_count(n: usize, c: i64, k: i64) -> BigRational {
    f_bruteforce(&TopRowKey::spp(n, c, k).expect("n >= 1"))
}

/// The polynomial `F(n-1, n, c; k)` in `k`, interpolated from brute-force
/// values at `k = 0, ..., 2n-2` and checked at `k = 2n-1, 2n, -1, -2`.
pub fn interpolate_f(n: usize, c: i64) -> Result<PolyUni> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let top = 2 * n as i64 - 2;
    let points: Vec<(i64, BigRational)> = (0..=top).map(|k| (k, spp_count(n, c, k))).collect();
    let p = PolyUni::interpolate(&points)?;
    for node in [top + 1, top + 2, -1, -2] {
        let expected = spp_count(n, c, node);
        let found = p.eval_int(node);
        if found != expected {
            return Err(Error::DegreeExceeded {
                bound: top as usize,
                node,
                found: found.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(p)
}

/// `k` values where `F(n-1, n, c; k)` must vanish: `-1..=-(n-1)` and `c+1..=c+n-1`.
pub fn expected_zeros(n: usize, c: i64) -> Vec<i64> {
    let r = n as i64 - 1;
    let mut z: Vec<i64> = (-r..=-1).chain(c + 1..=c + r).collect();
    z.sort_unstable();
    z
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZerosReport {
    pub n: usize,
    pub c: i64,
    pub expected: Vec<i64>,
    /// Expected zeros at which patterns exist at all.
    pub nonempty_at: Vec<i64>,
    pub roots: Vec<i64>,
    pub degree: Option<usize>,
}

impl ZerosReport {
    pub fn holds(&self) -> bool {
        self.nonempty_at.is_empty()
            && self.roots == self.expected
            && self.degree.is_some_and(|d| d <= 2 * self.n - 2)
    }
}

pub fn zeros_report(n: usize, c: i64) -> Result<ZerosReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let expected = expected_zeros(n, c);
    let nonempty_at = expected
        .iter()
        .copied()
        .filter(|&k| count_patterns(&TopRowKey::spp(n, c, k).expect("n >= 1")) > 0)
        .collect();
    let p = interpolate_f(n, c)?;
    Ok(ZerosReport { n, c, expected, nonempty_at, roots: p.integer_roots(), degree: p.degree() })
}

/// No pattern exists at the forced zeros, and the interpolated polynomial
/// has exactly those integer roots.
pub fn verify_zeros(n: usize, c: i64) -> Result<bool> {
    Ok(zeros_report(n, c)?.holds())
}

/// `F(n-1, n, c; c) = sum_{k=0}^{c} F(n-2, n-1, c; k)`.
pub fn verify_extra(n: usize, c: i64) -> bool {
    assert!(n >= 2, "n must be at least 2");
    let lhs = spp_count(n, c, c);
    let rhs: BigRational = (0..=c).map(|k| spp_count(n - 1, c, k)).sum();
    lhs == rhs
}

/// `F_q(n-1, n, c; c) = q^{cn-c} sum_{k=0}^{c} F_q(n-2, n-1, c; k) q^k`.
pub fn verify_extra_q(n: usize, c: i64) -> bool {
    assert!(n >= 2, "n must be at least 2");
    let fq = |n: usize, k: i64| fq_bruteforce(&TopRowKey::spp(n, c, k).expect("n >= 1"));
    let lhs = fq(n, c);
    let rhs: LaurentPolyQ = (0..=c).map(|k| fq(n - 1, k).shift(k)).sum();
    lhs == rhs.shift(c * n as i64 - c)
}

/// `(1+k)_{n-1} (1+c-k)_{n-1}`.
fn zero_factor(n: usize, c: i64, k: i64) -> BigRational {
    let m = n as u32 - 1;
    pochhammer(1 + k, m) * pochhammer(1 + c - k, m)
}

/// Values of `F(n-1, n, c; k) / ((1+k)_{n-1} (1+c-k)_{n-1})` over `ks`,
/// skipping points where the divisor vanishes.
pub fn independence_quotients(n: usize, c: i64, ks: impl IntoIterator<Item = i64>) -> Result<Vec<BigRational>> {
    let p = interpolate_f(n, c)?;
    Ok(ks
        .into_iter()
        .filter_map(|k| {
            let d = zero_factor(n, c, k);
            (!d.is_zero()).then(|| p.eval_int(k) / d)
        })
        .collect())
}

/// The quotient above takes one value on `-2n..=c+2n`.
pub fn verify_independent(n: usize, c: i64) -> Result<bool> {
    let r = 2 * n as i64;
    let qs = independence_quotients(n, c, -r..=c + r)?;
    Ok(qs.windows(2).all(|w| w[0] == w[1]))
}

/// The product formula for `F(n-1, n, c; k)`, expanded as a polynomial in `k`.
pub fn special_polynomial(n: usize, c: i64) -> PolyUni {
    assert!(n >= 1, "n must be positive");
    let m = n as i64 - 1;
    // constant = value at k = 0 divided by the k-dependent part at k = 0
    let constant = theorem_special(n as u32, c, 0) / zero_factor(n, c, 0);
    let mut p = PolyUni::constant(constant);
    for i in 0..m {
        p = &p * &PolyUni::linear(1 + i, 1);
        p = &p * &PolyUni::linear(1 + c + i, -1);
    }
    p
}
