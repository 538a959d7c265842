//! Acceptance run: one line per criterion, evaluated at full scale.
//!
//! Criteria listed in `KNOWN_FAILING` are reported but do not fail the run;
//! if one of them starts passing the run fails so the list stays accurate.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use demflag::flags::{flag_transitivity_check, fusion, hook, ses_recursion, weyl, Partition};
use demflag::oracles::{
    chebyshev_gf, dimension_audit, km_determinant_poly, lpart_poly, mock_theta_from_paths,
    mock_theta_series, schur_check, HookShape, MockReading, MockThetaSelector,
};
use demflag::paths::{
    admissible_set, is_admissible, psi, psi_inverse, tau, to_syt, DyckPath, PathQuery,
};
use demflag::qseries::QPolynomial;

/// The support of `V^{1->m}_{s,n}` is not an interval for `n = m - 1`,
/// `(m - 1) | k` (e.g. `q^4 + q^6 + q^7 + q^8` at `m = 3, s = 6, n = 2`), and
/// it is a single term at `s = 2, n = 0`. The stated equivalence fails there.
const KNOWN_FAILING: &[u32] = &[7];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn first_failures(bad: &[String]) -> String {
    let shown: Vec<&str> = bad.iter().take(4).map(String::as_str).collect();
    format!("{} failing cells, first: {}", bad.len(), shown.join("; "))
}

fn criterion_1() -> Outcome {
    let poly = weyl(5, 3, 2);
    let set = admissible_set(2, 3);
    let paths: Vec<String> = PathQuery::new(5, 3)
        .admissible(&set)
        .iter()
        .map(|p| p.to_string())
        .collect();
    let ok = poly == QPolynomial::from_terms([(3, 1), (4, 1)])
        && paths == ["10111", "11011"]
        && set.pairs() == [(0, 2), (2, 3)];
    outcome(
        ok,
        format!("V = {poly}, D = {paths:?}, A = {:?}", set.pairs()),
    )
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let mut cells = 0;
    for mp in 1..=4 {
        for m in mp..=6 {
            for s in 0..=12usize {
                let total = s + mp;
                for n in 0..=total {
                    cells += 1;
                    let set = admissible_set(m, n);
                    let brute: QPolynomial = PathQuery::new(total, n)
                        .iter()
                        .filter(|p| p.starts_with_ups(mp) && is_admissible(p, &set))
                        .map(|p| QPolynomial::q_pow(p.comaj() as i64))
                        .sum();
                    let (si, ni) = (s as i64, n as i64);
                    let h = hook(mp, si, ni, m).unwrap();
                    let r = ses_recursion(mp, si, ni, m).unwrap();
                    let f = fusion(&Partition::hook(mp, s), ni, m).unwrap();
                    if h != brute || r != brute || f != brute {
                        bad.push(format!("m'={mp} m={m} s={s} n={n}"));
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        outcome(true, format!("{cells} cells, four-way agreement"))
    } else {
        outcome(false, first_failures(&bad))
    }
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut cells = 0;
    for m in 1..=6 {
        for n in 0..m {
            for k in 0..=6 {
                cells += 1;
                if km_determinant_poly(k, n, m).unwrap() != weyl((n + 2 * k) as i64, n as i64, m) {
                    bad.push(format!("k={k} n={n} m={m}"));
                }
            }
        }
    }
    if bad.is_empty() {
        outcome(true, format!("{cells} cells"))
    } else {
        outcome(false, first_failures(&bad))
    }
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for k in 0..=8 {
        for n in 0..=10 {
            if lpart_poly(k, n) != weyl((n + 2 * k) as i64, n as i64, 2) {
                bad.push(format!("k={k} n={n}"));
            }
        }
    }
    if bad.is_empty() {
        outcome(true, "99 cells")
    } else {
        outcome(false, first_failures(&bad))
    }
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=6 {
        for n in 0..=12 {
            let set = admissible_set(m, n);
            let coeffs = chebyshev_gf(m, n, 8, false).eval_q_at_one();
            for (k, c) in coeffs.iter().enumerate() {
                let count = PathQuery::new(n + 2 * k, n).admissible(&set).count();
                if *c != BigInt::from(count) {
                    bad.push(format!("general m={m} n={n} k={k}"));
                }
            }
        }
    }
    for m in 1..=8 {
        for n in 0..=m {
            let coeffs = chebyshev_gf(m, n, 8, true).eval_q_at_one();
            for (k, c) in coeffs.iter().enumerate() {
                let count = PathQuery::new(n + 2 * k, n).height_bound(m).count();
                if *c != BigInt::from(count) {
                    bad.push(format!("bounded m={m} n={n} k={k}"));
                }
            }
        }
    }
    if bad.is_empty() {
        outcome(true, "general and bounded quotients match path counts")
    } else {
        outcome(false, first_failures(&bad))
    }
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for sel in MockThetaSelector::ALL {
        let series = mock_theta_series(sel, 30);
        let literal = mock_theta_from_paths(sel, 30, MockReading::Literal);
        match sel {
            MockThetaSelector::Psi0 | MockThetaSelector::Psi1 => ok &= literal == series,
            MockThetaSelector::Phi0 | MockThetaSelector::Phi1 => {
                let half = mock_theta_from_paths(sel, 30, MockReading::HalfIndex);
                ok &= half == series;
                if literal != series {
                    let first = (0..=30).find(|&e| literal.coeff(e) != series.coeff(e));
                    notes.push(format!(
                        "finding: {} literal reading differs from q^{}",
                        sel.name(),
                        first.unwrap()
                    ));
                }
            }
        }
    }
    let detail = if notes.is_empty() {
        "all four selectors agree through q^30".to_string()
    } else {
        format!(
            "psi literal and phi half-index agree through q^30; {}",
            notes.join("; ")
        )
    };
    outcome(ok, detail)
}

fn criterion_7() -> Outcome {
    let mut degree_bad = Vec::new();
    let mut support_bad = Vec::new();
    for m in 1..=5 {
        for s in 0..=16i64 {
            for n in (s % 2..=s).step_by(2) {
                let p = weyl(s, n, m);
                if m == 1 {
                    let expected = if s == n {
                        QPolynomial::one()
                    } else {
                        QPolynomial::zero()
                    };
                    if p != expected {
                        degree_bad.push(format!("m=1 s={s} n={n}"));
                    }
                    continue;
                }
                if !p.is_monic() || p.degree().ok() != Some((s - n) * (s + n) / 4) {
                    degree_bad.push(format!("m={m} s={s} n={n}"));
                }
                let expected = n != 0 || m == 2 || s == n;
                if p.has_contiguous_support() != expected {
                    support_bad.push(format!("m={m} s={s} n={n}"));
                }
            }
        }
    }
    let detail = format!(
        "degree/monic: {}; support equivalence: {}",
        if degree_bad.is_empty() {
            "ok".to_string()
        } else {
            first_failures(&degree_bad)
        },
        if support_bad.is_empty() {
            "ok".to_string()
        } else {
            first_failures(&support_bad)
        },
    );
    outcome(degree_bad.is_empty() && support_bad.is_empty(), detail)
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for total in 0..=12usize {
        for k in 0..=total / 2 {
            let shape = HookShape::new(total - 2 * k, k);
            for m in total.max(1)..=total + 2 {
                if !schur_check(shape, m).unwrap().holds() {
                    bad.push(format!("n={} k={k} m={m}", total - 2 * k));
                }
            }
        }
    }
    let two_two = schur_check(HookShape::new(0, 2), 4).unwrap();
    let ok = bad.is_empty() && two_two.rhs == QPolynomial::from_terms([(2, 1), (4, 1)]);
    if bad.is_empty() {
        outcome(
            ok,
            format!("all shapes with n+2k <= 12; (2,2) gives {}", two_two.rhs),
        )
    } else {
        outcome(false, first_failures(&bad))
    }
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let (mut psi_checked, mut tau_checked, mut syt_checked) = (0usize, 0usize, 0usize);
    for m in 1..=14 {
        for s in m..=14 {
            for n in (m..=s).filter(|n| (s - n) % 2 == 0) {
                let shift = ((s - n) / 2) as u64;
                let set = admissible_set(m, n);
                let target = admissible_set(m, n - m);
                let target_count = PathQuery::new(s - m, n - m).admissible(&target).count();
                let mut images = HashSet::new();
                for p in PathQuery::new(s, n).admissible(&set).prefix_ups(m).iter() {
                    psi_checked += 1;
                    let q = psi(&p, m, n).unwrap();
                    let ok = is_admissible(&q, &target)
                        && q.comaj() + shift == p.comaj()
                        && psi_inverse(&q, m, n).unwrap() == p;
                    if !ok {
                        bad.push(format!("psi {p} m={m}"));
                    }
                    images.insert(q);
                }
                if num_bigint::BigUint::from(images.len()) != target_count {
                    bad.push(format!("psi not onto m={m} s={s} n={n}"));
                }
            }
        }
    }
    for m in 1..=4 {
        for j in 0..m {
            for s in j..=12 {
                for n in (s % 2..=s).step_by(2) {
                    let set = admissible_set(m, n);
                    for p in PathQuery::new(s, n).admissible(&set).prefix_ups(j).iter() {
                        tau_checked += 1;
                        let (r, t) = tau(&p, j, m).unwrap();
                        let prefix = j + 1 - r - usize::from(r == s - j);
                        let shift = if r == 0 { 0 } else { (s - j) as u64 };
                        let ok = t.len() == s - 2 * r
                            && is_admissible(&t, &set)
                            && t.starts_with_ups(prefix)
                            && p.comaj() == t.comaj() + shift;
                        if !ok {
                            bad.push(format!("tau {p} j={j} m={m}"));
                        }
                    }
                }
            }
        }
    }
    for s in 0..=12 {
        for n in (s % 2..=s).step_by(2) {
            let paths: Vec<DyckPath> = PathQuery::new(s, n).iter().collect();
            let tableaux: HashSet<_> = paths.iter().map(to_syt).collect();
            syt_checked += paths.len();
            if tableaux.len() != paths.len() {
                bad.push(format!("to_syt not injective s={s} n={n}"));
            }
            for p in &paths {
                let t = to_syt(p);
                if t.comaj() != p.comaj() || &t.to_path() != p {
                    bad.push(format!("to_syt {p}"));
                }
            }
        }
    }
    if bad.is_empty() {
        outcome(
            true,
            format!("psi on {psi_checked} paths, tau on {tau_checked}, to_syt on {syt_checked}"),
        )
    } else {
        outcome(false, first_failures(&bad))
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f1a9);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let len = rng.gen_range(1..=5);
        let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=4)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let xi = Partition::new(parts).unwrap();
        let mp = rng.gen_range(xi.largest()..=6);
        let m = rng.gen_range(mp..=6);
        for n in (xi.size() % 2..=xi.size()).step_by(2) {
            if !flag_transitivity_check(&xi, mp, m, n as i64)
                .unwrap()
                .holds()
            {
                bad.push(format!("transitivity xi={xi} m'={mp} m={m} n={n}"));
            }
        }
        if !dimension_audit(&xi, m).unwrap().holds() {
            bad.push(format!("dimension xi={xi} m={m}"));
        }
    }
    if bad.is_empty() {
        outcome(true, "200 random triples")
    } else {
        outcome(false, first_failures(&bad))
    }
}

/// Count and comaj sum over all paths of length `s` from a left-to-right
/// pass over (height, last step), independent of the enumerator.
fn comaj_sum_by_transfer(s: usize) -> (u64, u64) {
    // state[h][last_up] = (count, comaj sum)
    let mut state = vec![[(0u64, 0u64); 2]; s + 2];
    state[0][0] = (1, 0);
    for i in 1..=s {
        let mut next = vec![[(0u64, 0u64); 2]; s + 2];
        for (h, cell) in state.iter().enumerate().take(s + 1) {
            for (last_up, &(c, t)) in cell.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let up = &mut next[h + 1][1];
                up.0 += c;
                up.1 += t;
                if h > 0 {
                    let gain = if last_up == 1 {
                        (s - (i - 1)) as u64
                    } else {
                        0
                    };
                    let down = &mut next[h - 1][0];
                    down.0 += c;
                    down.1 += t + gain * c;
                }
            }
        }
        state = next;
    }
    state
        .iter()
        .flatten()
        .fold((0, 0), |(c, t), &(dc, dt)| (c + dc, t + dt))
}

fn criterion_11() -> Outcome {
    let s = 24;
    let m = 24;
    let start = Instant::now();
    let (mut words, mut total) = (0u64, 0u64);
    for n in (0..=s).step_by(2) {
        let set = admissible_set(m, n);
        let (count, sum) = PathQuery::new(s, n).admissible(&set).comaj_total();
        words += count;
        total += sum;
    }
    let elapsed = start.elapsed();
    let ok = (words, total) == comaj_sum_by_transfer(s) && elapsed < Duration::from_secs(10);
    outcome(
        ok,
        format!(
            "{words} words, comaj sum {total}, {:.2}s on one thread",
            elapsed.as_secs_f64()
        ),
    )
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        (1, "worked example", criterion_1),
        (2, "hook oracle triangle", criterion_2),
        (3, "determinant formula", criterion_3),
        (4, "level-2 partition formula", criterion_4),
        (5, "Chebyshev generating functions", criterion_5),
        (6, "mock theta coefficients", criterion_6),
        (7, "degree, monicity, support", criterion_7),
        (8, "two-row Schur identity", criterion_8),
        (9, "structural bijections", criterion_9),
        (10, "transitivity and dimension audits", criterion_10),
        (11, "enumeration throughput", criterion_11),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let known = KNOWN_FAILING.contains(&id);
        let status = match (result.passed, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "criterion {id:>2} {status:<12} {name} [{:.2}s]: {}",
            start.elapsed().as_secs_f64(),
            result.detail
        );
        if result.passed == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
