use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{binomial, ext_sum, pochhammer, q_bracket, q_poch, LaurentPolyQ};

/// The four expressions of the convolution identity used for the plain
/// Bender-Knuth count, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSides {
    /// `sum_{k=0}^{c} (1+k)_{m-1} (1+c-k)_{m-1}`
    pub pochhammer_sum: BigRational,
    /// `(1)_{m-1}^2 sum_k binom(m+k-1, m-1) binom(c-k+m-1, m-1)`
    pub binomial_sum: BigRational,
    /// `(1)_{m-1}^2 binom(c+2m-1, 2m-1)`
    pub binomial_closed: BigRational,
    /// `(1)_{m-1}^2 (c+1)_{2m-2} / (1)_{2m-2}`, the simplified last step of the chain
    pub simplified_final: BigRational,
}

impl HyperSides {
    /// The chain up to the closed binomial form holds.
    pub fn middle_holds(&self) -> bool {
        self.pochhammer_sum == self.binomial_sum && self.binomial_sum == self.binomial_closed
    }

    pub fn final_holds(&self) -> bool {
        self.binomial_closed == self.simplified_final
    }
}

pub fn hyper_sides(m: u32, c: i64) -> HyperSides {
    assert!(m >= 1, "m must be positive");
    let sq = pochhammer(1, m - 1) * pochhammer(1, m - 1);
    let k_range = 0..=c;
    let pochhammer_sum = k_range.clone().map(|k| pochhammer(1 + k, m - 1) * pochhammer(1 + c - k, m - 1)).sum();
    let binomial_sum = sq.clone()
        * k_range
            .map(|k| binomial(m as i64 + k - 1, m - 1) * binomial(c - k + m as i64 - 1, m - 1))
            .sum::<BigRational>();
    let binomial_closed = sq.clone() * binomial(c + 2 * m as i64 - 1, 2 * m - 1);
    let simplified_final = sq * pochhammer(c + 1, 2 * m - 2) / pochhammer(1, 2 * m - 2);
    HyperSides { pochhammer_sum, binomial_sum, binomial_closed, simplified_final }
}

/// The convolution identity through its closed binomial form.
pub fn verify_hyper(m: u32, c: i64) -> bool {
    hyper_sides(m, c).middle_holds()
}

fn half_exponent(numerator: i64) -> Result<i64> {
    if numerator % 2 != 0 {
        return Err(Error::HalfIntegerExponent { numerator });
    }
    Ok(numerator / 2)
}

/// `q`-Vandermonde evaluation
/// `sum_{k=0}^{c} [k+1]_{m-1} [k-c-m+1]_{m-1} q^k
///   = (-1)^{m-1} q^{(1-m)(2c+m)/2} [1]_{m-1}^2 [c+1]_{2m-1} / [1]_{2m-1}`,
/// compared after clearing the denominator.
pub fn verify_qvand(m: u32, c: i64) -> Result<bool> {
    assert!(m >= 1, "m must be positive");
    let mi = m as i64;
    let lhs: LaurentPolyQ = (0..=c).map(|k| (&q_poch(k + 1, m - 1) * &q_poch(k - c - mi + 1, m - 1)).shift(k)).sum();
    let e = half_exponent((1 - mi) * (2 * c + mi))?;
    let mut rhs = &(&q_poch(1, m - 1) * &q_poch(1, m - 1)) * &q_poch(c + 1, 2 * m - 1);
    rhs = rhs.shift(e);
    if m.is_multiple_of(2) {
        rhs = -rhs;
    }
    Ok(&lhs * &q_poch(1, 2 * m - 1) == rhs)
}

/// `sum_{x=1}^{y} [x]_n q^x = q [y]_{n+1} / [n+1]` with an extended sum on the left.
pub fn verify_qpoch_sum(n: u32, y: i64) -> bool {
    let lhs: LaurentPolyQ = ext_sum(1, y, |x| q_poch(x, n).shift(x));
    &lhs * &q_bracket(n as i64 + 1) == q_poch(y, n + 1).shift(1)
}

/// `[z]_n = (-1)^n q^{n(z + (n-1)/2)} [-z-n+1]_n`, the reflection rule used for negative arguments.
pub fn verify_qpoch_reflection(z: i64, n: u32) -> bool {
    let ni = n as i64;
    let e = ni * (2 * z + ni - 1) / 2;
    let mut rhs = q_poch(-z - ni + 1, n).shift(e);
    if n % 2 == 1 {
        rhs = -rhs;
    }
    q_poch(z, n) == rhs
}
