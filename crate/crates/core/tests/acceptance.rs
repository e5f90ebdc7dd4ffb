//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use zdgraph::{
    analyze, audit, build_compressed, build_explicit, degree_profile, edge_connectivity,
    exhaustive_edge_connectivity, exhaustive_vertex_connectivity, factorize, is_vertex_cut,
    predict_vertex_connectivity, vertex_connectivity, witness_cut, ConnectivityReport, Oracle,
    DEFAULT_EXHAUSTIVE_BUDGET,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn composites(from: u64, to: u64) -> impl Iterator<Item = u64> {
    (from..=to).filter(|&n| factorize(n).unwrap().is_composite())
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn computed_triple(n: u64) -> Result<(u64, u64, u64), String> {
    let row = analyze(n, Oracle::Flow);
    match (row.delta, row.kappa_e, row.kappa) {
        (Some(d), Some(e), Some(k)) => Ok((d, e, k)),
        _ => Err(format!("n={n} skipped: {:?}", row.skip_reason)),
    }
}

fn prime_squares() -> Outcome {
    let start = Instant::now();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let got = computed_triple(p * p)?;
        let want = p - 2;
        if got != (want, want, want) {
            return Err(format!("n={} computed {got:?}, want all {want}", p * p));
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("6 prime squares in {:.2?}", start.elapsed()))
}

fn prime_powers() -> Outcome {
    let start = Instant::now();
    let cases = [
        (2u64, 3u32),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 3),
        (3, 4),
        (5, 3),
        (7, 3),
    ];
    for (p, k) in cases {
        let n = p.pow(k);
        let got = computed_triple(n)?;
        let want = p - 1;
        if got != (want, want, want) {
            return Err(format!("n={n} computed {got:?}, want all {want}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "{} prime powers in {:.2?}",
        cases.len(),
        start.elapsed()
    ))
}

fn min_prime_minus_one(n: u64) -> u64 {
    factorize(n).unwrap().min_prime().unwrap() - 1
}

fn two_primes() -> Outcome {
    let ns = [6u64, 10, 12, 15, 18, 36, 45, 50, 75, 98, 200, 675];
    for n in ns {
        assert_eq!(factorize(n).unwrap().num_primes(), 2);
        let (_, _, kappa) = computed_triple(n)?;
        if kappa != min_prime_minus_one(n) {
            return Err(format!(
                "n={n} kappa {kappa}, want {}",
                min_prime_minus_one(n)
            ));
        }
    }
    Ok(format!("{} two-prime moduli", ns.len()))
}

fn many_primes() -> Outcome {
    let ns = [30u64, 60, 105, 210, 420, 770, 1155];
    for n in ns {
        let (_, kappa_e, kappa) = computed_triple(n)?;
        let want = min_prime_minus_one(n);
        if (kappa_e, kappa) != (want, want) {
            return Err(format!(
                "n={n} (kappa_e, kappa) = ({kappa_e}, {kappa}), want {want}"
            ));
        }
    }
    Ok(format!("{} multi-prime moduli", ns.len()))
}

fn full_audit() -> Outcome {
    let start = Instant::now();
    let summary = audit(4, 1000, 1, Oracle::Flow).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected = composites(4, 1000).count();
    if summary.checked != expected {
        return Err(format!(
            "checked {} of {expected} composites",
            summary.checked
        ));
    }
    let mismatched: Vec<_> = summary
        .reported
        .iter()
        .filter(|r| !r.is_skipped())
        .collect();
    if summary.mismatches != 0 {
        return Err(format!("{summary}; first: {:?}", mismatched.first()));
    }
    // computed delta, kappa_e, kappa must also agree with each other
    for n in composites(4, 1000) {
        let row = analyze(n, Oracle::Flow);
        if !row.computed_equal() {
            return Err(format!("n={n}: computed values differ: {row:?}"));
        }
    }
    within(elapsed, Duration::from_secs(300))?;
    Ok(format!("{summary} in {elapsed:.2?}"))
}

fn whitney_chain() -> Outcome {
    let mut count = 0;
    for n in composites(4, 1500) {
        let g = build_explicit(n).map_err(|e| e.to_string())?;
        let r = ConnectivityReport::compute(&g);
        if !(r.kappa <= r.kappa_e && r.kappa_e <= r.delta) {
            return Err(format!(
                "n={n}: kappa={} kappa_e={} delta={}",
                r.kappa, r.kappa_e, r.delta
            ));
        }
        count += 1;
    }
    Ok(format!("{count} composites"))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in composites(4, 60) {
        let g = build_explicit(n).unwrap();
        let flow_v = vertex_connectivity(&g).value;
        let flow_e = edge_connectivity(&g).value;
        let brute_v = exhaustive_vertex_connectivity(&g, DEFAULT_EXHAUSTIVE_BUDGET)
            .map_err(|e| format!("n={n}: {e}"))?;
        let brute_e = exhaustive_edge_connectivity(&g, DEFAULT_EXHAUSTIVE_BUDGET)
            .map_err(|e| format!("n={n}: {e}"))?;
        if (flow_v, flow_e) != (brute_v, brute_e) {
            return Err(format!(
                "n={n}: flow ({flow_v}, {flow_e}) vs exhaustive ({brute_v}, {brute_e})"
            ));
        }
        count += 1;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{count} composites in {:.2?}", start.elapsed()))
}

fn witness_soundness() -> Outcome {
    let mut count = 0;
    for n in composites(4, 1500) {
        let f = factorize(n).unwrap();
        let cut = witness_cut(&f).unwrap();
        let predicted = predict_vertex_connectivity(&f).unwrap().value;
        if cut.len() as u64 != predicted {
            return Err(format!(
                "n={n}: witness size {} vs predicted {predicted}",
                cut.len()
            ));
        }
        let g = build_explicit(n).unwrap();
        if !is_vertex_cut(&g, &cut) {
            return Err(format!("n={n}: deleting {cut:?} leaves a connected graph"));
        }
        count += 1;
    }
    Ok(format!("{count} composites"))
}

fn quotient_consistency() -> Outcome {
    for n in composites(4, 2000) {
        let f = factorize(n).unwrap();
        let c = build_compressed(n).unwrap();
        let g = build_explicit(n).unwrap();
        let mut explicit: Vec<u64> = g.degrees().map(|d| d as u64).collect();
        explicit.sort_unstable();
        if explicit != degree_profile(&c).degree_multiset() {
            return Err(format!("n={n}: degree multisets differ"));
        }
        let expected = n - f.totient() - 1;
        if g.num_vertices() as u64 != expected || c.num_vertices() != expected {
            return Err(format!("n={n}: vertex count differs from n - phi(n) - 1"));
        }
    }
    let start = Instant::now();
    let c = build_compressed(1_000_000).map_err(|e| e.to_string())?;
    let delta = degree_profile(&c).min_degree();
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    if delta != Some(1) {
        return Err(format!("n=10^6 compressed delta {delta:?}, want 1"));
    }
    Ok(format!(
        "[4, 2000] consistent; n=10^6 delta=1 in {elapsed:.2?}"
    ))
}

fn determinism() -> Outcome {
    let run = |jobs: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_zdgraph"))
            .args(["sweep", "--from", "4", "--to", "500", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("jobs={jobs}: exit {:?}", out.status));
        }
        Ok(out.stdout)
    };
    let one = run("1")?;
    let eight = run("8")?;
    if one != eight {
        return Err("jobs=1 and jobs=8 outputs differ".into());
    }
    Ok(format!("{} identical bytes", one.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 prime-square family", prime_squares),
        ("2 prime-power family", prime_powers),
        ("3 two-prime family", two_primes),
        ("4 multi-prime family", many_primes),
        ("5 full audit 4..1000", full_audit),
        ("6 Whitney chain 4..1500", whitney_chain),
        ("7 oracle cross-validation 4..60", oracle_agreement),
        ("8 witness soundness 4..1500", witness_soundness),
        ("9 quotient consistency", quotient_consistency),
        ("10 determinism across jobs", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
