//! Acceptance run: one PASS/FAIL line per criterion, each with its time budget.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurpath::combinat::partitions_up_to;
use schurpath::identities::{
    dual_determinant_sign, run_suite, verify_bialternant, verify_cauchy, verify_corollary,
    verify_dual_cauchy, verify_dual_determinant, verify_factorial_schur, verify_jacobi_trudi,
    verify_jacobi_trudi_with, verify_lgv_lemma, verify_main_lemma, verify_main_lemma_with,
    verify_newton, verify_vandermonde, CheckReport, Status, SuiteConfig, LGV_SCHEMES,
};
use schurpath::symfun::JacobiTrudiIndex;
use schurpath::{compute_schur, Monomial, Polynomial, SchurMethod, Variable};

struct Outcome {
    ok: bool,
    detail: String,
}

fn all_verified(reports: &[CheckReport]) -> Outcome {
    match reports.iter().find(|r| !r.is_verified()) {
        None => Outcome {
            ok: true,
            detail: format!("{} reports verified", reports.len()),
        },
        Some(r) => Outcome {
            ok: false,
            detail: r.to_string(),
        },
    }
}

fn criterion(id: &str, title: &str, budget: Duration, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let ok = outcome.ok && in_time;
    println!(
        "{} {id:>3} {title}: {} [{:.2}s, limit {}s]",
        if ok { "PASS" } else { "FAIL" },
        outcome.detail,
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    ok
}

fn random_poly(rng: &mut ChaCha8Rng) -> Polynomial {
    let terms = rng.gen_range(0..=4);
    Polynomial::from_terms((0..terms).map(|_| {
        let vars = rng.gen_range(0..=3);
        let m = Monomial::from_powers((0..vars).map(|_| {
            let v = match rng.gen_range(0..4) {
                0 => Variable::x(rng.gen_range(1..=3)),
                1 => Variable::y(rng.gen_range(1..=2)),
                2 => Variable::a(rng.gen_range(1..=2)),
                _ => Variable::t(),
            };
            (v, rng.gen_range(1..=3))
        }));
        (m, rng.gen_range(-5i64..=5))
    }))
}

fn ring_laws(cases: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for case in 0..cases {
        let (p, q, r) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        let checks = [
            ("commutative +", &p + &q == &q + &p),
            ("commutative *", &p * &q == &q * &p),
            ("associative +", (&p + &q) + &r == &p + (&q + &r)),
            ("associative *", (&p * &q) * &r == &p * (&q * &r)),
            ("distributive", &p * (&q + &r) == &p * &q + &p * &r),
            ("additive inverse", (&p + &(-&p)).is_zero()),
            ("unit", &p * Polynomial::one() == p),
            (
                "text round trip",
                p.to_string().parse::<Polynomial>().ok() == Some(p.clone()),
            ),
            (
                "exact division",
                q.is_zero() || (&p * &q).exact_div(&q).ok() == Some(p.clone()),
            ),
        ];
        if let Some((law, _)) = checks.iter().find(|(_, holds)| !holds) {
            return Outcome {
                ok: false,
                detail: format!("case {case}: {law} fails for p={p}, q={q}, r={r}"),
            };
        }
    }
    Outcome {
        ok: true,
        detail: format!("{cases} cases"),
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut ok = true;

    ok &= criterion("1", "main lemma, 1 <= m,n <= 6", secs(5), || {
        all_verified(&[verify_main_lemma(6, 6)])
    });

    ok &= criterion("2", "corollary, 1 <= t < n <= 4, m <= 5", secs(5), || {
        all_verified(&[verify_corollary(4, 5)])
    });

    ok &= criterion(
        "3",
        "vandermonde, brute force n <= 3, determinant n <= 5",
        secs(30),
        || {
            let reports: Vec<_> = (1..=5).map(verify_vandermonde).collect();
            let mut out = all_verified(&reports);
            for r in &reports[..3] {
                if r.params.get("systems").map(String::as_str) != Some("1") {
                    out = Outcome {
                        ok: false,
                        detail: format!("expected a unique system: {r}"),
                    };
                }
            }
            out
        },
    );

    ok &= criterion(
        "4",
        "four-way schur agreement, |λ| <= 6, n <= 4",
        secs(120),
        || {
            let mut reports = Vec::new();
            for n in 1..=4u32 {
                for lam in partitions_up_to(n as usize, 6) {
                    let want = compute_schur(&lam, n, SchurMethod::Tableaux).unwrap();
                    let mut methods = vec![SchurMethod::JacobiTrudi, SchurMethod::Bialternant];
                    if lam.size() <= 4 && n <= 3 {
                        methods.push(SchurMethod::Lgv);
                    }
                    for m in methods {
                        if compute_schur(&lam, n, m).as_ref() != Ok(&want) {
                            return Outcome {
                                ok: false,
                                detail: format!("{m} disagrees with tableaux at {lam}, n={n}"),
                            };
                        }
                    }
                    reports.push(verify_jacobi_trudi(&lam, n));
                    reports.push(verify_bialternant(&lam, n));
                }
            }
            all_verified(&reports)
        },
    );

    ok &= criterion("5", "reduction chain, |λ| <= 4, n <= 3", secs(30), || {
        let reports: Vec<_> = (1..=3u32)
            .flat_map(|n| {
                partitions_up_to(n as usize, 4)
                    .into_iter()
                    .map(move |l| (n, l))
            })
            .map(|(n, lam)| verify_bialternant(&lam, n))
            .collect();
        all_verified(&reports)
    });

    ok &= criterion(
        "6",
        "cauchy graded components, n <= 2 cap 4, n = 3 cap 3",
        secs(60),
        || {
            all_verified(&[
                verify_cauchy(1, 4),
                verify_cauchy(2, 4),
                verify_cauchy(3, 3),
            ])
        },
    );

    ok &= criterion("7a", "dual cauchy, n,m <= 3", secs(30), || {
        let reports: Vec<_> = (1..=3)
            .flat_map(|n| (1..=3).map(move |m| verify_dual_cauchy(n, m)))
            .collect();
        all_verified(&reports)
    });

    ok &= criterion(
        "7b",
        "dual determinant with recorded sign, n+m <= 5",
        secs(30),
        || {
            let mut reports = Vec::new();
            for n in 1..5u32 {
                for m in 1..=5 - n {
                    let r = verify_dual_determinant(n, m);
                    let recorded = r.params.get("epsilon").cloned();
                    if r.is_verified() && recorded != Some(dual_determinant_sign(n, m).to_string())
                    {
                        return Outcome {
                            ok: false,
                            detail: format!("sign not recorded: {r}"),
                        };
                    }
                    reports.push(r);
                }
            }
            all_verified(&reports)
        },
    );

    ok &= criterion(
        "8",
        "factorial schur, |λ| <= 4, n <= 3, a = 0 collapse",
        secs(30),
        || {
            let reports: Vec<_> = (1..=3u32)
                .flat_map(|n| {
                    partitions_up_to(n as usize, 4)
                        .into_iter()
                        .map(move |l| (n, l))
                })
                .map(|(n, lam)| verify_factorial_schur(&lam, n))
                .collect();
            all_verified(&reports)
        },
    );

    ok &= criterion(
        "9",
        "newton form n <= 8, divided-difference table",
        secs(5),
        || {
            let reports: Vec<_> = (0..=8).map(verify_newton).collect();
            all_verified(&reports)
        },
    );

    ok &= criterion(
        "10",
        "1000 ring-law cases, 20 lgv configurations per scheme",
        secs(60),
        || {
            let laws = ring_laws(1000);
            if !laws.ok {
                return laws;
            }
            let reports: Vec<_> = LGV_SCHEMES
                .iter()
                .enumerate()
                .map(|(i, s)| verify_lgv_lemma(s, 20, 42 + i as u64))
                .collect();
            let out = all_verified(&reports);
            Outcome {
                ok: out.ok,
                detail: format!("{}; {}", laws.detail, out.detail),
            }
        },
    );

    ok &= criterion(
        "11",
        "negative controls produce mismatches",
        secs(30),
        || {
            let tampered = verify_main_lemma_with(6, 6, true);
            let flipped = verify_jacobi_trudi_with(
                &"[2,1]".parse().unwrap(),
                3,
                JacobiTrudiIndex::RowMinusCol,
            );
            let corrupt = run_suite(&SuiteConfig {
                corrupt: true,
                ..SuiteConfig::default()
            });
            let corrupt_mismatches = corrupt
                .iter()
                .filter(|r| r.status == Status::Mismatch)
                .count();
            Outcome {
            ok: tampered.status == Status::Mismatch
                && flipped.status == Status::Mismatch
                && corrupt_mismatches >= 1,
            detail: format!(
                "tampered weights {}, flipped orientation {}, corrupted suite {corrupt_mismatches} mismatches",
                tampered.status, flipped.status
            ),
        }
        },
    );

    ok &= criterion("all", "default suite", secs(300), || {
        all_verified(&run_suite(&SuiteConfig::default()))
    });

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
