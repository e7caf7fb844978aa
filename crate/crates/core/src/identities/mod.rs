//! The operators `D_i` and `Phi_m`, instance checks of the identities they
//! satisfy, and interpolation of `F(n-1, n, c; k)` in `k`.

mod interp;
mod lemmas;
mod operators;
mod sums;

pub use interp::{
    expected_zeros, independence_quotients, interpolate_f, special_polynomial, verify_extra, verify_extra_q,
    verify_independent, verify_zeros, zeros_report, PolyUni, ZerosReport,
};
pub use lemmas::{
    decomp_q_exponent, fund_ranges, lemma_2_sides, verify_decomp, verify_decomp_q, verify_lemma_2, verify_lemma_2q,
    verify_lemma_fund, verify_lemma_fund_q,
};
pub use operators::{apply_d, apply_phi, apply_phi_q, nested_sum, phi_ranges, swap_shift, IntFunction};
pub use sums::{hyper_sides, verify_hyper, verify_qpoch_reflection, verify_qpoch_sum, verify_qvand, HyperSides};

use num_rational::BigRational;

use crate::counting::{f_bruteforce, fq_bruteforce, TopRowKey};
use crate::exact::LaurentPolyQ;

/// `Phi_{n-r+1} F(r-1, n, c; .)` evaluated at `(0, ks, c)`, with the lower
/// level counted by brute force.
pub fn phi_of_lower_level(key: &TopRowKey) -> BigRational {
    assert!(key.r >= 1, "needs r >= 1");
    let (r, n, c) = (key.r - 1, key.n, key.c);
    let g = IntFunction::new(n - r, move |l: &[i64]| f_bruteforce(&TopRowKey { r, n, c, ks: l.to_vec() }));
    apply_phi(&g).eval(&key.full_top_row())
}

/// `q`-analog of [`phi_of_lower_level`] through `Phi^q`.
pub fn phi_q_of_lower_level(key: &TopRowKey) -> LaurentPolyQ {
    assert!(key.r >= 1, "needs r >= 1");
    let (r, n, c) = (key.r - 1, key.n, key.c);
    let g = IntFunction::new(n - r, move |l: &[i64]| fq_bruteforce(&TopRowKey { r, n, c, ks: l.to_vec() }));
    apply_phi_q(&g).eval(&key.full_top_row())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_reproduces_counts() {
        for ks in [[0, 1], [2, -1], [-2, 3]] {
            let key = TopRowKey::new(1, 3, 2, ks.to_vec()).unwrap();
            assert_eq!(phi_of_lower_level(&key), f_bruteforce(&key));
            assert_eq!(phi_q_of_lower_level(&key), fq_bruteforce(&key));
        }
        let key = TopRowKey::new(2, 3, 1, vec![1]).unwrap();
        assert_eq!(phi_of_lower_level(&key), f_bruteforce(&key));
    }
}
