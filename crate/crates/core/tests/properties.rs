use gtkit_core::counting::{
    enumerate_patterns, f_bruteforce, f_recursive, fq_bruteforce, fq_recursive, PlainRecurrence, QRecurrence,
};
use gtkit_core::exact::{ext_sum, factorial, int, pochhammer, q_bracket, q_poch, BigRational};
use gtkit_core::identities::{
    decomp_q_exponent, interpolate_f, phi_of_lower_level, phi_q_of_lower_level, special_polynomial, verify_lemma_fund,
    verify_lemma_fund_q, verify_qpoch_reflection, IntFunction,
};
use gtkit_core::patterns::{enumerate_spps, gt_to_spp, spp_to_gt};
use gtkit_core::suites::{random_function, random_q_function};
use gtkit_core::tableaux::{f_ext, f_ext_recursive, verify_part_formula, FExtMemo};
use gtkit_core::{GtPattern, TopRowKey};
use proptest::prelude::*;

/// Keys drawn from the recursion sweep box, slightly smaller to keep cases quick.
fn arb_key() -> impl Strategy<Value = TopRowKey> {
    (0usize..=3, 0usize..=2, 0i64..=3)
        .prop_filter("n >= 1", |(r, d, _)| r + d >= 1)
        .prop_flat_map(|(r, d, c)| {
            prop::collection::vec(-2i64..=c + 2, d).prop_map(move |ks| TopRowKey::new(r, r + d, c, ks).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ext_sum_telescopes(a in -15i64..15, b in -15i64..15, c in -15i64..15) {
        let f = |x: i64| int(x * x * x - 2 * x);
        prop_assert_eq!(ext_sum(a, b, f) + ext_sum(b + 1, c, f), ext_sum(a, c, f));
    }

    #[test]
    fn pochhammer_at_one(n in 0u32..15) {
        prop_assert_eq!(pochhammer(1, n), factorial(n));
        prop_assert_eq!(q_poch(1, n).eval_at_one(), factorial(n));
    }

    #[test]
    fn bracket_counts_at_one(x in -10i64..=10) {
        prop_assert_eq!(q_bracket(x).eval_at_one(), int(x));
    }

    #[test]
    fn qpoch_reflection(z in -8i64..8, n in 0u32..6) {
        prop_assert!(verify_qpoch_reflection(z, n));
    }

    #[test]
    fn engines_agree(key in arb_key()) {
        let mut plain = PlainRecurrence::new();
        let mut q = QRecurrence::new();
        let f = f_bruteforce(&key);
        let fq = fq_bruteforce(&key);
        prop_assert_eq!(f_recursive(&key, &mut plain), f.clone());
        prop_assert_eq!(fq_recursive(&key, &mut q), fq.clone());
        prop_assert_eq!(fq.eval_at_one(), f);
    }

    #[test]
    fn memo_state_does_not_matter(keys in prop::collection::vec(arb_key(), 1..6)) {
        let mut shared = PlainRecurrence::new();
        let forward: Vec<BigRational> = keys.iter().map(|k| f_recursive(k, &mut shared)).collect();
        let mut rev = PlainRecurrence::new();
        let mut backward: Vec<BigRational> = keys.iter().rev().map(|k| f_recursive(k, &mut rev)).collect();
        backward.reverse();
        let fresh: Vec<BigRational> = keys.iter().map(|k| f_recursive(k, &mut PlainRecurrence::new())).collect();
        prop_assert_eq!(&forward, &backward);
        prop_assert_eq!(&forward, &fresh);
    }

    #[test]
    fn nested_operator_matches_lower_level(key in arb_key().prop_filter("r >= 1", |k| k.r >= 1)) {
        prop_assert_eq!(phi_of_lower_level(&key), f_bruteforce(&key));
        prop_assert_eq!(phi_q_of_lower_level(&key), fq_bruteforce(&key));
    }

    #[test]
    fn fund_on_random_tables(seed in any::<u64>(), idx in 0usize..1000, k in prop::collection::vec(-3i64..=3, 4)) {
        let m = 1 + idx % 3;
        let g = random_function(seed, idx, m);
        let gq = random_q_function(seed, idx, m);
        for i in 1..=m {
            prop_assert!(verify_lemma_fund(m, i, &g, &k[..=m]));
            prop_assert!(verify_lemma_fund_q(m, i, &gq, &k[..=m]));
        }
    }

    #[test]
    fn fund_on_polynomials(a in -3i64..=3, b in -3i64..=3, k in prop::collection::vec(-3i64..=3, 3)) {
        let g = IntFunction::new(2, move |x: &[i64]| int(a * x[0] * x[0] + b * x[0] * x[1] - x[1]));
        prop_assert!(verify_lemma_fund(2, 1, &g, &k));
        prop_assert!(verify_lemma_fund(2, 2, &g, &k));
    }

    #[test]
    fn decomp_exponent_integral(r in 0usize..20, gap in 2usize..20, i in 1usize..20) {
        let n = r + gap;
        prop_assume!(i < n - r);
        prop_assert!(decomp_q_exponent(r, n, i).is_ok());
    }

    #[test]
    fn f_ext_translation(l in prop::collection::vec(-4i64..=4, 1..=4), s in -5i64..=5) {
        let shifted: Vec<i64> = l.iter().map(|x| x + s).collect();
        prop_assert_eq!(f_ext(&shifted), f_ext(&l));
    }

    #[test]
    fn f_ext_alternates(l in prop::collection::vec(-4i64..=4, 2..=4), i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % l.len(), j % l.len());
        prop_assume!(i != j);
        let mut t = l.clone();
        t.swap(i, j);
        prop_assert_eq!(f_ext(&t), -f_ext(&l));
    }

    #[test]
    fn f_ext_paths_agree(l in prop::collection::vec(-3i64..=4, 1..=4)) {
        prop_assert_eq!(f_ext_recursive(&l, &mut FExtMemo::new()), f_ext(&l));
        prop_assert!(verify_part_formula(&l));
    }
}

#[test]
fn nonnegative_top_entries_have_no_inversions() {
    for n in 1..=4usize {
        for c in 0..=3 {
            for k in 0..=c {
                assert!(enumerate_patterns(&TopRowKey::spp(n, c, k).unwrap()).all(|p| p.sign() == 1));
            }
        }
    }
}

#[test]
fn bijection_is_exhaustive() {
    for n in 1..=4usize {
        for c in 0..=3i64 {
            let mut image = Vec::new();
            for k in 0..=c {
                for p in enumerate_patterns(&TopRowKey::spp(n, c, k).unwrap()) {
                    let g = GtPattern::from_gen(&p).unwrap();
                    assert_eq!(g.to_gen(c), p);
                    let s = gt_to_spp(&g);
                    assert_eq!(s.norm(), p.norm());
                    assert_eq!(s.count_equal(n as i64) as i64, k);
                    assert_eq!(spp_to_gt(&s, n, c).unwrap(), g);
                    image.push(s);
                }
            }
            let before = image.len();
            image.sort_by(|a, b| a.rows().cmp(b.rows()));
            image.dedup();
            assert_eq!(image.len(), before, "not injective at n={n} c={c}");
            let mut all = enumerate_spps(n as i64, c as usize);
            all.sort_by(|a, b| a.rows().cmp(b.rows()));
            assert_eq!(image, all, "image differs at n={n} c={c}");
        }
    }
}

#[test]
fn interpolant_is_the_product() {
    for n in 1..=4 {
        for c in 0..=4 {
            assert_eq!(interpolate_f(n, c).unwrap(), special_polynomial(n, c), "n={n} c={c}");
        }
    }
}

#[test]
fn initial_condition() {
    // bottom level: the top row is also the bottom row
    for n in 1..=4usize {
        let ks: Vec<i64> = (1..=n as i64).collect();
        assert_eq!(f_bruteforce(&TopRowKey::new(0, n, n as i64 + 1, ks).unwrap()), int(1));
    }
    assert_eq!(f_bruteforce(&TopRowKey::new(0, 3, 2, vec![0, 1, 2]).unwrap()), int(1));
}
