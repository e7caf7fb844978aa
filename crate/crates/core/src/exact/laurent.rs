use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q` with rational coefficients.
///
/// Stored as an exponent -> coefficient map; zero coefficients are never kept,
/// so structural equality is coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolyQ {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPolyQ {
    /// `coeff * q^exp`.
    pub fn monomial(coeff: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPolyQ { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut p = LaurentPolyQ::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients starting at exponent `min_exp`.
    pub fn from_coeffs(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (min_exp + i as i64, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPolyQ {
            terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPolyQ {
            terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Value at a nonzero rational point.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        if q.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::ZeroDenominator);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += c * pow_rat(q, e);
        }
        Ok(acc)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact division in the Laurent ring.
    ///
    /// Monomials `c q^e` are units, so both operands are normalised to have a
    /// nonzero constant term and ordinary long division decides exactness.
    pub fn div_exact(&self, divisor: &LaurentPolyQ) -> Result<LaurentPolyQ> {
        let (dmin, dmax) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::ZeroDenominator),
        };
        let nmin = match self.min_exp() {
            Some(e) => e,
            None => return Ok(LaurentPolyQ::zero()),
        };
        let d = divisor.shift(-dmin);
        let ddeg = dmax - dmin;
        let lead = d.coeff(ddeg);
        let mut rem = self.shift(-nmin);
        let mut quot = LaurentPolyQ::zero();
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < ddeg {
                return Err(Error::NonExactDivision(format!("({self}) / ({divisor})")));
            }
            let t = rem.coeff(rdeg) / &lead;
            let step = rdeg - ddeg;
            for (e, c) in d.terms() {
                rem.add_term(e + step, -(c * &t));
            }
            quot.add_term(step, t);
        }
        Ok(quot.shift(nmin - dmin))
    }

    fn neg_in_place(&mut self) {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
    }
}

fn pow_rat(q: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Zero for LaurentPolyQ {
    fn zero() -> Self {
        LaurentPolyQ { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPolyQ {
    fn one() -> Self {
        Self::q_pow(0)
    }
}

impl From<BigRational> for LaurentPolyQ {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPolyQ {
    fn from(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }
}

impl AddAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn add_assign(&mut self, rhs: &LaurentPolyQ) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for LaurentPolyQ {
    fn add_assign(&mut self, rhs: LaurentPolyQ) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn sub_assign(&mut self, rhs: &LaurentPolyQ) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn add(mut self, rhs: LaurentPolyQ) -> LaurentPolyQ {
        self += rhs;
        self
    }
}

impl Add<&LaurentPolyQ> for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn add(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn sub(mut self, rhs: LaurentPolyQ) -> LaurentPolyQ {
        self -= &rhs;
        self
    }
}

impl Sub<&LaurentPolyQ> for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn sub(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn neg(mut self) -> LaurentPolyQ {
        self.neg_in_place();
        self
    }
}

impl Neg for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn neg(self) -> LaurentPolyQ {
        -self.clone()
    }
}

impl Mul<&LaurentPolyQ> for &LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn mul(self, rhs: &LaurentPolyQ) -> LaurentPolyQ {
        let mut out = LaurentPolyQ::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn mul(self, rhs: LaurentPolyQ) -> LaurentPolyQ {
        &self * &rhs
    }
}

impl<'a> std::iter::Sum<&'a LaurentPolyQ> for LaurentPolyQ {
    fn sum<I: Iterator<Item = &'a LaurentPolyQ>>(iter: I) -> Self {
        iter.fold(LaurentPolyQ::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl std::iter::Sum for LaurentPolyQ {
    fn sum<I: Iterator<Item = LaurentPolyQ>>(iter: I) -> Self {
        iter.fold(LaurentPolyQ::zero(), |acc, p| acc + p)
    }
}

/// Renders as an ascending sum of `c*q^e` terms, e.g. `-q^-1 + 2 + 1/2*q^3`.
impl fmt::Display for LaurentPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{var}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use proptest::prelude::*;

    fn poly(min: i64, cs: &[i64]) -> LaurentPolyQ {
        LaurentPolyQ::from_coeffs(min, cs)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = poly(0, &[1, 0, 2]);
        assert_eq!(p.len(), 2);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(1, &[1, 1]).to_string(), "q + q^2");
        assert_eq!(poly(-1, &[-1]).to_string(), "-q^-1");
        assert_eq!(LaurentPolyQ::zero().to_string(), "0");
        let p = LaurentPolyQ::from_terms([(0, int(2)), (3, ratio(-1, 2)), (-2, int(1))]);
        assert_eq!(p.to_string(), "q^-2 + 2 - 1/2*q^3");
        assert_eq!(LaurentPolyQ::one().to_string(), "1");
    }

    #[test]
    fn exact_division() {
        let a = poly(0, &[1, 1]);
        let sq = &a * &a;
        assert_eq!(sq.div_exact(&a).unwrap(), a);
        assert_eq!(poly(1, &[1, 0, 1]).div_exact(&LaurentPolyQ::q_pow(1)).unwrap(), poly(0, &[1, 0, 1]));
        assert!(matches!(poly(0, &[1, 0, 1]).div_exact(&a), Err(Error::NonExactDivision(_))));
        assert!(matches!(a.div_exact(&LaurentPolyQ::zero()), Err(Error::ZeroDenominator)));
        assert_eq!(
            poly(-3, &[2, 2]).div_exact(&poly(4, &[1, 1])).unwrap(),
            LaurentPolyQ::monomial(int(2), -7)
        );
    }

    #[test]
    fn evaluation() {
        let p = poly(-1, &[1, 2, 3]);
        assert_eq!(p.eval_at_one(), int(6));
        assert_eq!(p.eval(&int(2)).unwrap(), ratio(1, 2) + int(2) + int(6));
        assert!(p.eval(&int(0)).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolyQ> {
        (-4i64..4, prop::collection::vec(-3i64..4, 0..6)).prop_map(|(m, cs)| poly(m, &cs))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }
    }
}
