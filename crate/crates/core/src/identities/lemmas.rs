use num_rational::BigRational;
use num_traits::One;

use super::operators::{apply_d, apply_phi_weighted, nested_sum, IntFunction};
use crate::counting::{f_bruteforce, fq_bruteforce, CountValue, TopRowKey};
use crate::error::{Error, Result};
use crate::exact::{ext_sum, factorial, int, pochhammer, q_bracket, q_poch, LaurentPolyQ};

/// Summation ranges of the two correction terms in the fundamental identity
/// for `D_i Phi_m G` at `k = (k_1, ..., k_{m+1})`, 1-based `i`.
///
/// Returns `(ranges for D_{i-1} G, ranges for D_i G)`; a term is `None` when
/// its operator is zero (`i = 1`, resp. `i = m`).
#[allow(clippy::type_complexity)]
pub fn fund_ranges(m: usize, i: usize, k: &[i64]) -> (Option<Vec<(i64, i64)>>, Option<Vec<(i64, i64)>>) {
    let kk = |p: usize| k[p - 1];
    let std_range = |p: usize| (kk(p), kk(p + 1));
    let first = (i >= 2).then(|| {
        (1..=m)
            .map(|p| {
                if p + 2 <= i {
                    std_range(p)
                } else if p + 1 == i {
                    (kk(i) + 1, kk(i + 1) + 1)
                } else if p == i {
                    (kk(i), kk(i + 1))
                } else if p == i + 1 {
                    (kk(i) - 1, kk(i + 2))
                } else {
                    std_range(p)
                }
            })
            .collect()
    });
    let second = (i < m).then(|| {
        (1..=m)
            .map(|p| if p == i + 1 { (kk(i) - 1, kk(i + 1) - 1) } else { std_range(p) })
            .collect()
    });
    (first, second)
}

fn lemma_fund_holds<V: CountValue + 'static>(m: usize, i: usize, g: &IntFunction<V>, k: &[i64]) -> bool {
    assert!(1 <= i && i <= m, "need 1 <= i <= m");
    assert_eq!(g.arity(), m);
    assert_eq!(k.len(), m + 1);
    let lhs = apply_d(i, &apply_phi_weighted(g)).expect("index checked above").eval(k);
    let weighted = |h: IntFunction<V>| move |l: &[i64]| h.eval(l).q_weighted(l.iter().sum());
    let (first, second) = fund_ranges(m, i, k);
    let mut rhs_twice = V::zero();
    if let Some(ranges) = first {
        let d = apply_d(i - 1, g).expect("1 <= i-1 < m");
        rhs_twice = rhs_twice + nested_sum(&ranges, &mut weighted(d));
    }
    if let Some(ranges) = second {
        let d = apply_d(i, g).expect("1 <= i < m");
        rhs_twice = rhs_twice + nested_sum(&ranges, &mut weighted(d));
    }
    // D_i Phi_m G = -(first + second) / 2
    lhs.clone() + lhs + rhs_twice == V::zero()
}

/// Fundamental identity for `D_i Phi_m G` at one sample point.
pub fn verify_lemma_fund(m: usize, i: usize, g: &IntFunction<BigRational>, sample: &[i64]) -> bool {
    lemma_fund_holds(m, i, g, sample)
}

/// The same identity for `Phi^q_m`, where every sum carries `q^(l_1 + ... + l_m)`.
pub fn verify_lemma_fund_q(m: usize, i: usize, g: &IntFunction<LaurentPolyQ>, sample: &[i64]) -> bool {
    lemma_fund_holds(m, i, g, sample)
}

/// Both sides of the double-sum identity behind the decomposition lemma.
pub fn lemma_2_sides(r: u32, d: i64, x: i64, y: i64) -> (BigRational, BigRational) {
    assert!(r >= 2, "r must be at least 2");
    let ri = r as i64;
    let lhs = ext_sum(x + d, y + d, |xp| {
        ext_sum(x - 1 + d, y - 1 + d, |yp| pochhammer(yp - xp - ri + 3, 2 * r - 3) * int(yp - xp + 1))
    });
    let rhs = pochhammer(y - x - ri + 2, 2 * r - 1) * int(y - x + 1) / int(ri * (2 * ri - 1));
    (lhs, rhs)
}

pub fn verify_lemma_2(r: u32, d: i64, x: i64, y: i64) -> bool {
    let (lhs, rhs) = lemma_2_sides(r, d, x, y);
    lhs == rhs
}

/// `q`-analog of [`verify_lemma_2`]; the right side's denominator
/// `[2r-1][2r]` is cleared by cross-multiplication.
pub fn verify_lemma_2q(r: u32, d: i64, x: i64, y: i64) -> bool {
    assert!(r >= 2, "r must be at least 2");
    let ri = r as i64;
    let one_plus = |e: i64| LaurentPolyQ::one() + LaurentPolyQ::q_pow(e);
    let lhs: LaurentPolyQ = ext_sum(x + d, y + d, |xp| {
        ext_sum(x - 1 + d, y - 1 + d, |yp| {
            (&q_poch(yp - xp - ri + 3, 2 * r - 3) * &q_bracket(yp - xp + 1))
                .shift((2 * ri - 2) * xp + xp + yp)
        })
    });
    let lhs = &(&lhs * &one_plus(ri - 1)) * &(&q_bracket(2 * ri - 1) * &q_bracket(2 * ri));
    let rhs = (&(&q_poch(y - x - ri + 2, 2 * r - 1) * &q_bracket(y - x + 1)) * &one_plus(ri))
        .shift(2 * ri * x + 2 * d * ri + ri - 2);
    lhs == &rhs + &rhs
}

/// `(k_1, ..., k_{i-1}, k_{i+2} + 2, ..., k_{n-r} + 2)`.
fn contracted(ks: &[i64], i: usize) -> Vec<i64> {
    ks[..i - 1].iter().copied().chain(ks[i + 1..].iter().map(|k| k + 2)).collect()
}

fn check_decomp_args(r: usize, n: usize, i: usize, ks: &[i64]) -> Result<()> {
    if ks.len() + r != n {
        return Err(Error::InvalidKey(format!("expected {} top-row entries, got {}", n.saturating_sub(r), ks.len())));
    }
    if i == 0 || i + 1 > ks.len() {
        return Err(Error::IndexOutOfRange { index: i, max: ks.len().saturating_sub(1) });
    }
    Ok(())
}

/// `D_i F(r, n, c; .)` at `ks`, via a caller-supplied evaluator of `F`.
fn d_of<V, F>(r: usize, n: usize, c: i64, i: usize, ks: &[i64], f: F) -> Result<V>
where
    V: std::ops::Add<Output = V>,
    F: Fn(&TopRowKey) -> V,
{
    let key = TopRowKey::new(r, n, c, ks.to_vec())?;
    let swapped = TopRowKey::new(r, n, c, super::operators::swap_shift(ks, i))?;
    Ok(f(&key) + f(&swapped))
}

/// Decomposition of `D_i F(r, n, c; .)` into an explicit factor times
/// `F(r, n-2, c+2; ...)`, both sides from the brute-force engine.
pub fn verify_decomp(r: usize, n: usize, c: i64, i: usize, ks: &[i64]) -> Result<bool> {
    check_decomp_args(r, n, i, ks)?;
    let lhs = d_of(r, n, c, i, ks, f_bruteforce)?;
    if r == 0 {
        return Ok(lhs == int(2));
    }
    let ru = r as u32;
    let (ki, kj) = (ks[i - 1], ks[i]);
    let sign = if r.is_multiple_of(2) { int(1) } else { int(-1) };
    let factor = sign * int(2) / factorial(2 * ru)
        * pochhammer(kj - ki - r as i64 + 2, 2 * ru - 1)
        * int(kj - ki + 1);
    let rest = f_bruteforce(&TopRowKey::new(r, n - 2, c + 2, contracted(ks, i))?);
    Ok(lhs == factor * rest)
}

/// Exponent `r (1 + 4i - 4n + 5r) / 2` of the `q`-decomposition.
pub fn decomp_q_exponent(r: usize, n: usize, i: usize) -> Result<i64> {
    let (r, n, i) = (r as i64, n as i64, i as i64);
    let numerator = r * (1 + 4 * i - 4 * n + 5 * r);
    if numerator % 2 != 0 {
        return Err(Error::HalfIntegerExponent { numerator });
    }
    Ok(numerator / 2)
}

/// `q`-analog of [`verify_decomp`]; the denominator `[1; q]_{2r}` is
/// cleared by cross-multiplication.
pub fn verify_decomp_q(r: usize, n: usize, c: i64, i: usize, ks: &[i64]) -> Result<bool> {
    check_decomp_args(r, n, i, ks)?;
    let lhs = d_of(r, n, c, i, ks, fq_bruteforce)?;
    if r == 0 {
        return Ok(lhs == LaurentPolyQ::from(2));
    }
    let ru = r as u32;
    let ri = r as i64;
    let (ki, kj) = (ks[i - 1], ks[i]);
    let e = decomp_q_exponent(r, n, i)?;
    let rest = fq_bruteforce(&TopRowKey::new(r, n - 2, c + 2, contracted(ks, i))?);
    let mut rhs = &(&q_poch(kj - ki - ri + 2, 2 * ru - 1) * &q_bracket(kj - ki + 1)) * &rest;
    rhs = &rhs * &(LaurentPolyQ::one() + LaurentPolyQ::q_pow(ri));
    rhs = rhs.shift(2 * ri * ki + e);
    if r % 2 == 1 {
        rhs = -rhs;
    }
    Ok(&lhs * &q_poch(1, 2 * ru) == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fund_ranges_shape() {
        let (a, b) = fund_ranges(3, 2, &[0, 1, 2, 3]);
        assert_eq!(a.unwrap(), vec![(2, 3), (1, 2), (0, 3)]);
        assert_eq!(b.unwrap(), vec![(0, 1), (1, 2), (0, 1)]);
        let (a, b) = fund_ranges(2, 1, &[0, 1, 2]);
        assert!(a.is_none());
        assert_eq!(b.unwrap(), vec![(0, 1), (-1, 0)]);
        let (a, b) = fund_ranges(1, 1, &[4, 5]);
        assert!(a.is_none() && b.is_none());
    }

    #[test]
    fn fund_on_zero_function() {
        let g = IntFunction::<BigRational>::zero(2);
        assert!(verify_lemma_fund(2, 1, &g, &[0, 1, -2]));
    }

    #[test]
    fn fund_on_polynomial_function() {
        let g = IntFunction::new(2, |l: &[i64]| int(l[0] * l[0] - 3 * l[1] + l[0] * l[1]));
        for k in [[0, 1, 2], [3, -1, 0], [-2, 2, -2]] {
            assert!(verify_lemma_fund(2, 1, &g, &k));
            assert!(verify_lemma_fund(2, 2, &g, &k));
        }
    }

    #[test]
    fn lemma_2_example() {
        assert_eq!(lemma_2_sides(2, 0, 0, 1), (int(2), int(2)));
        assert!(verify_lemma_2q(2, 0, 0, 1));
        // y - x = -1 kills the right side
        assert_eq!(lemma_2_sides(3, 1, 2, 1).1, int(0));
        assert!(verify_lemma_2(3, 1, 2, 1));
    }

    #[test]
    fn decomp_small() {
        // worked case: D_1 F(1, 3, c; k1, k2) = -(c + 3)(k2 - k1 + 1)^2
        for c in 0..=2 {
            for k1 in -1..=3 {
                for k2 in -1..=3 {
                    assert!(verify_decomp(1, 3, c, 1, &[k1, k2]).unwrap());
                    let lhs = d_of(1, 3, c, 1, &[k1, k2], f_bruteforce).unwrap();
                    assert_eq!(lhs, int(-(c + 3) * (k2 - k1 + 1) * (k2 - k1 + 1)));
                }
            }
        }
        assert!(verify_decomp(0, 3, 1, 2, &[4, -1, 2]).unwrap());
        assert!(verify_decomp_q(1, 3, 2, 1, &[0, 2]).unwrap());
        assert!(verify_decomp(1, 3, 2, 2, &[0, 2]).is_err());
    }

    #[test]
    fn q_exponent_parity() {
        assert_eq!(decomp_q_exponent(1, 3, 1).unwrap(), -1);
        for r in 0..6 {
            for n in r + 1..r + 8 {
                for i in 1..n - r {
                    assert!(decomp_q_exponent(r, n, i).is_ok());
                }
            }
        }
    }
}
