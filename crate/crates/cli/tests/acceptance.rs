//! Acceptance criteria, one pass/fail line each. Runs as a plain binary so
//! every line is printed; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectcross::bounds::binomial;
use rectcross::search::respects_lower_bound;
use rectcross::{
    crossing_count, grid_exhaustive, jensen_upper, k11_candidates, local_search, responsibility, run_suite, Drawing,
    Point, RuleId, SearchParams,
};

const BIN: &str = env!("CARGO_BIN_EXE_rectcross");

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn run_bin(args: &[&str], threads: &str) -> (i32, String) {
    let out = Command::new(BIN).args(args).env("RECTCROSS_THREADS", threads).output().expect("run rectcross");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn bounds_exact() -> Verdict {
    let start = Instant::now();
    let (code, out) = run_bin(&["bounds", "--max-n", "400"], "1");
    let elapsed = start.elapsed();
    let row = |n: u64| out.lines().find(|l| l.starts_with(&format!("{n},"))).unwrap_or("").to_string();
    let b11 = row(11).split(',').nth(1) == Some("98");
    let b400 = row(400);
    let fields: Vec<&str> = b400.split(',').collect();
    let b400_ok = fields.get(1) == Some(&"315356975")
        && fields.get(4) == Some(&"315356975/1050739900")
        && fields.get(3).is_some_and(|d| d.starts_with("0.3001"));
    let choose = out.contains("choose4=1050739900") && binomial(400, 4) == 1_050_739_900u64.into();
    let upper = out.lines().any(|l| l.starts_with("nu_star:") && l.contains("upper=6467/16848 ~ 0.3838"));
    check(
        code == 0 && b11 && b400_ok && choose && upper && elapsed < Duration::from_secs(1),
        format!("b(11)={b11} b(400)={b400_ok} C(400,4)={choose} bracket={upper} in {elapsed:.2?}"),
    )
}

fn jensen() -> Verdict {
    let start = Instant::now();
    let js: Vec<u64> = (10..=12).map(|n| jensen_upper(n).unwrap().try_into().unwrap()).collect();
    let elapsed = start.elapsed();
    check(js == [63, 102, 156] && elapsed < Duration::from_secs(1), format!("j(10..=12)={js:?} in {elapsed:.2?}"))
}

fn k11() -> Verdict {
    let c = k11_candidates();
    check(c == BTreeSet::from([98, 100, 102]), format!("{c:?}"))
}

fn table_witnesses() -> Verdict {
    let expected = [0, 0, 1, 3, 9, 19, 36, 62];
    let mut found = Vec::new();
    let mut ok = true;
    let start = Instant::now();
    let mut small = Duration::ZERO;
    for (i, n) in (3..=10).enumerate() {
        let r = local_search(&SearchParams::for_n(n, 1)).unwrap();
        let recount = crossing_count(r.best.points());
        ok &= r.count == expected[i] && recount == r.count && r.best.n() == n;
        ok &= r.history.iter().flatten().all(|&c| respects_lower_bound(n, c));
        found.push(r.count);
        if n == 9 {
            small = start.elapsed();
        }
    }
    let ten = start.elapsed() - small;
    // beyond the table the search must still never undercut the recursive bound
    for n in [11, 12] {
        let p = SearchParams { restarts: 8, moves_per_restart: 20_000, ..SearchParams::for_n(n, 1) };
        let r = local_search(&p).unwrap();
        ok &= r.history.iter().flatten().all(|&c| respects_lower_bound(n, c));
    }
    ok &= small < Duration::from_secs(60) && ten < Duration::from_secs(600);
    check(ok, format!("counts n=3..=10 {found:?}; n<=9 in {small:.2?}, n=10 in {ten:.2?}"))
}

fn grid_oracle() -> Verdict {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for (n, side, expected) in [(4, 4, 0), (5, 4, 1), (6, 5, 3)] {
        let oracle = grid_exhaustive(n, side, side).unwrap().count;
        ok &= oracle == expected;
        for seed in 0..4 {
            let p = SearchParams { box_size: side, ..SearchParams::for_n(n, seed) };
            match local_search(&p) {
                Ok(r) => {
                    ok &= r.count >= oracle;
                    ok &= r.best.points().iter().all(|q: &Point| (0..side).contains(&q.x) && (0..side).contains(&q.y));
                }
                Err(e) => {
                    ok = false;
                    seen.push(format!("search error {e}"));
                }
            }
        }
        seen.push(format!("n={n} {side}x{side} min={oracle}"));
    }
    let elapsed = start.elapsed();
    check(ok && elapsed < Duration::from_secs(120), format!("{} in {elapsed:.2?}", seen.join(", ")))
}

fn lemma_suites() -> Verdict {
    let start = Instant::now();
    let summary = run_suite(&RuleId::ALL, 1000, 42);
    let elapsed = start.elapsed();
    let failing: Vec<String> = summary
        .per_rule()
        .into_iter()
        .filter(|(_, c)| c[1] > 0)
        .map(|(rule, c)| format!("{rule} {}/{}", c[1], c[0] + c[1] + c[2]))
        .collect();
    let applicable = summary.entries.iter().filter(|(_, r)| r.applicable()).count();
    check(
        summary.failures() == 0 && elapsed < Duration::from_secs(300),
        format!(
            "{} reports over {} rules, {applicable} applicable, failures {} {failing:?} in {elapsed:.2?}",
            summary.len(),
            RuleId::ALL.len(),
            summary.failures()
        ),
    )
}

fn random_drawing(rng: &mut ChaCha8Rng, n: usize, c: i64) -> Drawing {
    loop {
        let pts: Vec<Point> = (0..n).map(|_| Point::new(rng.random_range(-c..=c), rng.random_range(-c..=c))).collect();
        if let Ok(d) = Drawing::new(pts) {
            return d;
        }
    }
}

fn core_identities() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut resp_ok = 0;
    for _ in 0..10_000 {
        let n = rng.random_range(4..=10);
        let d = random_drawing(&mut rng, n, 1000);
        let sum: usize = (0..n).map(|v| responsibility(&d, v).unwrap()).sum();
        resp_ok += (sum == 4 * crossing_count(d.points())) as usize;
    }
    let convex_ok = (4..=9u64).all(|n| {
        let d = Drawing::from_coords(&(0..n as i64).map(|i| (i, i * i)).collect::<Vec<_>>()).unwrap();
        binomial(n, 4) == crossing_count(d.points()).into()
    });
    let mut invariant_ok = 0;
    for _ in 0..1000 {
        let n = rng.random_range(4..=9);
        let d = random_drawing(&mut rng, n, 1000);
        let (a, b, c, e) = loop {
            let m: [i64; 4] = std::array::from_fn(|_| rng.random_range(-7..=7));
            if m[0] * m[3] != m[1] * m[2] {
                break (m[0], m[1], m[2], m[3]);
            }
        };
        let (tx, ty) = (rng.random_range(-5000..=5000), rng.random_range(-5000..=5000));
        let mut mapped: Vec<Point> =
            d.points().iter().map(|p| Point::new(a * p.x + b * p.y + tx, c * p.x + e * p.y + ty)).collect();
        // relabel by a random permutation
        for i in (1..n).rev() {
            mapped.swap(i, rng.random_range(0..=i));
        }
        let same = Drawing::new(mapped).map(|m| crossing_count(m.points())) == Ok(crossing_count(d.points()));
        invariant_ok += same as usize;
    }
    let elapsed = start.elapsed();
    check(
        resp_ok == 10_000 && convex_ok && invariant_ok == 1000 && elapsed < Duration::from_secs(60),
        format!("responsibility {resp_ok}/10000, convex C(n,4) {convex_ok}, invariance {invariant_ok}/1000 in {elapsed:.2?}"),
    )
}

fn determinism() -> Verdict {
    let commands: [&[&str]; 3] = [
        &["verify", "--suite", "all", "--instances", "40", "--seed", "42"],
        &["search", "--n", "10", "--seed", "5"],
        &["search", "--n", "8", "--restarts", "24", "--moves", "3000", "--seed", "9"],
    ];
    let mut ok = true;
    for args in commands {
        let reference = run_bin(args, "1");
        for threads in ["1", "2", "4"] {
            ok &= run_bin(args, threads) == reference;
        }
        ok &= !reference.1.is_empty();
    }
    check(ok, "verify and search outputs byte-identical for 1, 2 and 4 threads")
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("bounds exact", bounds_exact),
        ("jensen formula", jensen),
        ("K11 candidates", k11),
        ("small-n witnesses", table_witnesses),
        ("grid oracle", grid_oracle),
        ("lemma suites", lemma_suites),
        ("core identities", core_identities),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        failed += !v.ok as usize;
        println!("criterion {} {name}: {} ({})", i + 1, if v.ok { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
