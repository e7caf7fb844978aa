//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use gtkit_core::asm::{count_monotone_triangles, verify_ratio_independence};
use gtkit_core::closedforms::{
    bender_knuth_count, bender_knuth_gf, refined_asm, theorem_main_q, theorem_main_q_fraction, theorem_special,
    tsspp_product,
};
use gtkit_core::counting::{
    count_patterns, f_bruteforce, f_recursive, fq_bruteforce, fq_recursive, PlainRecurrence, QRecurrence,
};
use gtkit_core::exact::{int, BigRational};
use gtkit_core::identities::{hyper_sides, interpolate_f};
use gtkit_core::suites::{rec_sweep_keys, run_suite, spp_generating_function, Suite, SweepConfig, Verdict};
use gtkit_core::{LaurentPolyQ, TopRowKey};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suites_pass(suites: &[Suite], cfg: &SweepConfig) -> Result<Vec<Verdict>, String> {
    let verdicts: Vec<Verdict> = suites.iter().flat_map(|&s| run_suite(s, cfg)).collect();
    if let Some(v) = verdicts.iter().find(|v| !v.passed) {
        return Err(format!("{} failed at {}", v.identity, v.counterexample.as_deref().unwrap_or("?")));
    }
    Ok(verdicts)
}

fn checked(verdicts: &[Verdict]) -> usize {
    verdicts.iter().map(|v| v.checked).sum()
}

fn criterion_1() -> Outcome {
    let keys = rec_sweep_keys();
    let mut blocks: Vec<Vec<TopRowKey>> = Vec::new();
    for key in keys.iter().cloned() {
        match blocks.last_mut() {
            Some(b) if (b[0].r, b[0].n, b[0].c) == (key.r, key.n, key.c) => b.push(key),
            _ => blocks.push(vec![key]),
        }
    }
    let bad: Vec<String> = blocks
        .par_iter()
        .flat_map_iter(|block| {
            let mut plain = PlainRecurrence::new();
            let mut q = QRecurrence::new();
            block
                .iter()
                .filter(|key| {
                    let fq = fq_bruteforce(key);
                    let f = f_bruteforce(key);
                    f_recursive(key, &mut plain) != f || fq_recursive(key, &mut q) != fq || fq.eval_at_one() != f
                })
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(bad.is_empty(), || format!("engines disagree at {}", bad.join(" ")))?;
    Ok(format!("{} keys, plain and q engines equal", keys.len()))
}

fn criterion_2() -> Outcome {
    let cases: Vec<(usize, i64, i64)> = (1..=5usize)
        .flat_map(|n| (0..=4).flat_map(move |c| (-(n as i64)..=c + n as i64).map(move |k| (n, c, k))))
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter(|&&(n, c, k)| theorem_special(n as u32, c, k) != f_bruteforce(&TopRowKey::spp(n, c, k).unwrap()))
        .map(|(n, c, k)| format!("({n},{c},{k})"))
        .collect();
    ensure(bad.is_empty(), || format!("mismatch at (n,c,k) {}", bad.join(" ")))?;
    Ok(format!("{} (n,c,k) triples", cases.len()))
}

fn criterion_3() -> Outcome {
    let cases: Vec<(usize, i64, i64)> =
        (1..=4usize).flat_map(|n| (0..=3).flat_map(move |c| (-2..=c + 2).map(move |k| (n, c, k)))).collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter(|&&(n, c, k)| {
            // the product formula carries the weight q^k of the k top-row entries
            let gf = fq_bruteforce(&TopRowKey::spp(n, c, k).unwrap()).shift(k);
            let frac_ok = theorem_main_q_fraction(n as u32, c, k).equals_poly(&gf);
            let poly_ok = !(0..=c).contains(&k) || theorem_main_q(n as u32, c, k).is_ok_and(|p| p == gf);
            !(frac_ok && poly_ok)
        })
        .map(|(n, c, k)| format!("({n},{c},{k})"))
        .collect();
    ensure(bad.is_empty(), || format!("mismatch at (n,c,k) {}", bad.join(" ")))?;
    let poly = cases.iter().filter(|&&(_, c, k)| (0..=c).contains(&k)).count();
    Ok(format!("{poly} Laurent equalities for 0<=k<=c, {} cross-multiplied for -2<=k<=c+2; compared with q^k F_q", cases.len()))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 1..=4u32 {
        for c in 0..=4i64 {
            let plain: BigRational = (0..=c).map(|k| theorem_special(n, c, k)).sum();
            ensure(plain == bender_knuth_count(n, c), || format!("count sum at n={n}, c={c}"))?;
            let mut q = LaurentPolyQ::from_coeffs(0, &[]);
            for k in 0..=c {
                q += theorem_main_q(n, c, k).map_err(|e| e.to_string())?;
            }
            let gf = bender_knuth_gf(n, c).map_err(|e| e.to_string())?;
            ensure(q == gf, || format!("q sum at n={n}, c={c}"))?;
            if n <= 3 && c <= 3 {
                ensure(gf == spp_generating_function(n as i64, c as usize), || {
                    format!("enumeration at n={n}, c={c}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("20 (n,c) sums, {count} against direct enumeration"))
}

fn criterion_5() -> Outcome {
    for n in 1..=4usize {
        for c in 0..=4i64 {
            let ni = n as i64;
            let mut zeros: Vec<i64> = (-(ni - 1)..=-1).chain(c + 1..=c + ni - 1).collect();
            zeros.sort_unstable();
            for &k in &zeros {
                let cnt = count_patterns(&TopRowKey::spp(n, c, k).unwrap());
                ensure(cnt == 0, || format!("{cnt} patterns at n={n}, c={c}, k={k}"))?;
            }
            let p = interpolate_f(n, c).map_err(|e| format!("n={n}, c={c}: {e}"))?;
            ensure(p.integer_roots() == zeros, || {
                format!("roots {:?} != {zeros:?} at n={n}, c={c}", p.integer_roots())
            })?;
            ensure(p.degree().unwrap_or(0) <= 2 * n - 2, || format!("degree {:?} at n={n}, c={c}", p.degree()))?;
        }
    }
    Ok("n<=4, c<=4: no patterns at forced zeros, roots exact, degree <= 2n-2".into())
}

fn criterion_6() -> Outcome {
    let cfg = SweepConfig::default();
    let v = suites_pass(&[Suite::Fund, Suite::Lemma2, Suite::Decomp], &cfg)?;
    Ok(format!("{} instances over {} identities, seed {}", checked(&v), v.len(), cfg.seed))
}

fn criterion_7() -> Outcome {
    let v = suites_pass(&[Suite::Hyper, Suite::Qvand, Suite::Qpoch], &SweepConfig::default())?;
    let s = hyper_sides(2, 2);
    ensure(s.simplified_final == int(6) && s.binomial_closed == int(10), || format!("{s:?}"))?;
    let note = v.iter().find(|v| v.identity == "hyper").and_then(|v| v.note.clone()).unwrap_or_default();
    ensure(note.contains("gives 6") && note.contains("sum is 10"), || format!("note missing: {note}"))?;
    Ok(format!("{} instances; final-expression discrepancy 6 != 10 at (2,2) recorded", checked(&v)))
}

fn criterion_8() -> Outcome {
    let v = suites_pass(&[Suite::Ssyt, Suite::Tableaux], &SweepConfig::default())?;
    Ok(format!("{} instances", checked(&v)))
}

fn criterion_9() -> Outcome {
    let expected: [&[u64]; 4] = [&[1], &[1, 1], &[2, 3, 2], &[7, 14, 14, 7]];
    for (idx, row) in expected.iter().enumerate() {
        let n = idx + 1;
        for (j, &want) in row.iter().enumerate() {
            let k = j as i64 + 1;
            let got = count_monotone_triangles(n, k);
            ensure(got == want, || format!("A({n},{k}) = {got}, expected {want}"))?;
            ensure(refined_asm(n as u32, k) == int(want as i64), || format!("refined formula at ({n},{k})"))?;
        }
    }
    let totals: Vec<u64> = (1..=4).map(|n| (1..=n as i64).map(|k| count_monotone_triangles(n, k)).sum()).collect();
    ensure(totals == [1, 2, 7, 42], || format!("totals {totals:?}"))?;
    for n in 2..=5 {
        let r = verify_ratio_independence(n);
        ensure(r.holds() && r.common.as_ref() == Some(&tsspp_product(n as u32)), || format!("{r:?}"))?;
    }
    ensure(verify_ratio_independence(3).common == Some(int(5)), || "ratio at n=3".into())?;
    Ok("refined counts, totals 1 2 7 42, ratio equals TSSPP count for n=2..5".into())
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gtkit"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.code() == Some(0), || format!("exit code {:?}", a.status.code()))?;
    ensure(b.status.code() == Some(0), || format!("exit code {:?}", b.status.code()))?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("two runs byte-identical ({} bytes), exit 0", a.stdout.len()))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, Option<u64>); 10] = [
        (1, "oracle equivalence", criterion_1, Some(60)),
        (2, "special closed form", criterion_2, Some(30)),
        (3, "q closed form", criterion_3, Some(60)),
        (4, "Bender-Knuth sums", criterion_4, None),
        (5, "zero structure", criterion_5, None),
        (6, "operator identities", criterion_6, None),
        (7, "hypergeometric checks", criterion_7, None),
        (8, "tableaux suite", criterion_8, None),
        (9, "monotone triangles", criterion_9, None),
        (10, "determinism", criterion_10, Some(300)),
    ];
    let mut failures = 0;
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = budget.is_some_and(|b| elapsed > Duration::from_secs(b));
        let timing = match budget {
            Some(b) => format!("{:.1}s of {b}s", elapsed.as_secs_f64()),
            None => format!("{:.1}s", elapsed.as_secs_f64()),
        };
        let (status, detail) = match outcome {
            Ok(d) if !over => ("PASS", d),
            Ok(d) => ("FAIL", format!("over time budget; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {id:>2} {status} [{name}] ({timing}): {detail}");
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
