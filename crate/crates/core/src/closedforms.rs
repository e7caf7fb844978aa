//! Closed-form product formulas.
//!
//! Every formula is assembled literally from Pochhammer symbols (or their
//! `q`-analogs) without simplification, so a transcription slip shows up as
//! a mismatch against the enumeration oracles.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, int, pochhammer, q_poch, LaurentPolyQ, QFraction};
use crate::patterns::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormulaId {
    IntroBinomial,
    TheoremSpecial,
    TheoremMainQ,
    BenderKnuthCount,
    BenderKnuthGF,
    SSYTProduct,
    RefinedASM,
    TSSPP,
}

impl FormulaId {
    pub const ALL: [FormulaId; 8] = [
        FormulaId::IntroBinomial,
        FormulaId::TheoremSpecial,
        FormulaId::TheoremMainQ,
        FormulaId::BenderKnuthCount,
        FormulaId::BenderKnuthGF,
        FormulaId::SSYTProduct,
        FormulaId::RefinedASM,
        FormulaId::TSSPP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::IntroBinomial => "intro-binomial",
            FormulaId::TheoremSpecial => "special",
            FormulaId::TheoremMainQ => "main-q",
            FormulaId::BenderKnuthCount => "bk-count",
            FormulaId::BenderKnuthGF => "bk-gf",
            FormulaId::SSYTProduct => "ssyt",
            FormulaId::RefinedASM => "refined-asm",
            FormulaId::TSSPP => "tsspp",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown formula `{s}`")))
    }
}

fn product<I: IntoIterator<Item = BigRational>>(it: I) -> BigRational {
    it.into_iter().fold(BigRational::one(), |acc, x| acc * x)
}

fn q_product<I: IntoIterator<Item = LaurentPolyQ>>(it: I) -> LaurentPolyQ {
    it.into_iter().fold(LaurentPolyQ::one(), |acc, x| &acc * &x)
}

/// `binom(k + r, r) = (k+1)_r / r!`, valid for every integer `k`.
pub fn intro_binomial(r: u32, k: i64) -> BigRational {
    pochhammer(k + 1, r) / factorial(r)
}

/// Number of strict plane partitions with parts in `1..=n`, at most `c`
/// columns and exactly `k` parts equal to `n`; as a function of `k` it is
/// the polynomial `F(n-1, n, c; k)`.
pub fn theorem_special(n: u32, c: i64, k: i64) -> BigRational {
    assert!(n >= 1, "n must be positive");
    let m = n - 1;
    let head = pochhammer(1 + k, m) * pochhammer(1 + c - k, m) / pochhammer(1, m);
    head * product((1..=m).map(|i| pochhammer(c + i as i64 + 1, i - 1) / pochhammer(i as i64, i)))
}

/// The `q`-analog of [`theorem_special`] as a formal quotient.
pub fn theorem_main_q_fraction(n: u32, c: i64, k: i64) -> QFraction {
    assert!(n >= 1, "n must be positive");
    let m = n - 1;
    let mut num = q_poch(k + 1, m) * q_poch(1 + c - k, m);
    let mut den = q_poch(1, m);
    for i in 1..=m {
        num = &num * &q_poch(c + i as i64 + 1, i - 1);
        den = &den * &q_poch(i as i64, i);
    }
    QFraction::new(num.shift(k * n as i64), den).expect("q-Pochhammer of positive arguments is nonzero")
}

/// Generating function by norm of the strict plane partitions counted by
/// [`theorem_special`]. Fails with `NonExactDivision` if the quotient is not
/// a Laurent polynomial, which does not happen for `0 <= k <= c`.
pub fn theorem_main_q(n: u32, c: i64, k: i64) -> Result<LaurentPolyQ> {
    theorem_main_q_fraction(n, c, k).exact_div()
}

/// Number of strict plane partitions with parts at most `n` and at most `c` columns.
pub fn bender_knuth_count(n: u32, c: i64) -> BigRational {
    product((1..=n).map(|i| pochhammer(c + i as i64, i) / pochhammer(i as i64, i)))
}

/// Norm generating function of the partitions counted by [`bender_knuth_count`].
pub fn bender_knuth_gf(n: u32, c: i64) -> Result<LaurentPolyQ> {
    let num = q_product((1..=n).map(|i| q_poch(c + i as i64, i)));
    let den = q_product((1..=n).map(|i| q_poch(i as i64, i)));
    QFraction::new(num, den)?.exact_div()
}

/// `prod_{1 <= i < j <= k} (lambda_i - lambda_j + j - i) / (j - i)`, the
/// number of semistandard tableaux of shape `lambda` with entries at most `k`.
pub fn ssyt_product(lambda: &Partition, k: usize) -> BigRational {
    if lambda.length() > k {
        return BigRational::zero();
    }
    let l = lambda.padded(k);
    let mut acc = BigRational::one();
    for i in 0..k {
        for j in i + 1..k {
            let d = (j - i) as i64;
            acc = acc * int(l[i] - l[j] + d) / int(d);
        }
    }
    acc
}

/// Refined alternating sign matrix count `A(n, k)`.
pub fn refined_asm(n: u32, k: i64) -> BigRational {
    assert!(n >= 1, "n must be positive");
    let m = n - 1;
    let head = pochhammer(k, m) * pochhammer(1 + n as i64 - k, m) / pochhammer(1, m);
    head * product((1..=m).map(|i| pochhammer(1, 3 * i - 2) / pochhammer(1, n + i - 1)))
}

/// `prod_{1 <= i <= j <= n-1} (i + j + n - 2) / (i + 2j - 2)`.
pub fn tsspp_product(n: u32) -> BigRational {
    let n = n as i64;
    let mut acc = BigRational::one();
    for j in 1..n {
        for i in 1..=j {
            acc = acc * int(i + j + n - 2) / int(i + 2 * j - 2);
        }
    }
    acc
}
