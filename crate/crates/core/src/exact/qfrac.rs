use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::{ext_sum, LaurentPolyQ};
use crate::error::{Error, Result};

/// `[x; q] = (1 - q^x) / (1 - q)` as a Laurent polynomial.
///
/// For negative `x` this is `-(q^x + ... + q^-1)`, which is exactly the
/// extended sum of `q^e` over `e = 0..x-1`.
pub fn q_bracket(x: i64) -> LaurentPolyQ {
    ext_sum(0, x - 1, LaurentPolyQ::q_pow)
}

/// `[x; q]_n = [x; q] [x+1; q] ... [x+n-1; q]`.
pub fn q_poch(x: i64, n: u32) -> LaurentPolyQ {
    let mut acc = LaurentPolyQ::one();
    for i in 0..n as i64 {
        if x + i == 0 {
            return LaurentPolyQ::zero();
        }
        acc = &acc * &q_bracket(x + i);
    }
    acc
}

/// Formal quotient of two Laurent polynomials.
///
/// Equality is decided by cross-multiplication, so no polynomial gcd is ever
/// needed.
#[derive(Clone, Debug)]
pub struct QFraction {
    num: LaurentPolyQ,
    den: LaurentPolyQ,
}

impl QFraction {
    pub fn new(num: LaurentPolyQ, den: LaurentPolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(QFraction { num, den })
    }

    pub fn num(&self) -> &LaurentPolyQ {
        &self.num
    }

    pub fn den(&self) -> &LaurentPolyQ {
        &self.den
    }

    /// `true` iff `self == p` as rational functions.
    pub fn equals_poly(&self, p: &LaurentPolyQ) -> bool {
        self.num == p * &self.den
    }

    pub fn exact_div(&self) -> Result<LaurentPolyQ> {
        self.num.div_exact(&self.den)
    }
}

/// Reduces a fraction known to be a Laurent polynomial.
pub fn qfrac_exact_div(f: &QFraction) -> Result<LaurentPolyQ> {
    f.exact_div()
}

impl From<LaurentPolyQ> for QFraction {
    fn from(num: LaurentPolyQ) -> Self {
        QFraction { num, den: LaurentPolyQ::one() }
    }
}

impl PartialEq for QFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Mul for QFraction {
    type Output = QFraction;
    fn mul(self, rhs: QFraction) -> QFraction {
        QFraction { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
