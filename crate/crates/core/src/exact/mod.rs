//! Exact arithmetic: rational scalars, Pochhammer symbols, the extended
//! summation convention and Laurent polynomials in `q`.

mod laurent;
mod qfrac;
mod scalar;

pub use laurent::LaurentPolyQ;
pub use qfrac::{q_bracket, q_poch, qfrac_exact_div, QFraction};
pub use scalar::{binomial, ext_sum, factorial, int, pochhammer, ratio};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
