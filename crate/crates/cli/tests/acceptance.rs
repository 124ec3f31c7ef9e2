//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use insets::chebyshev::{self, Kind};
use insets::identities::IdentitySuite;
use insets::inset::{
    binomial, inset3, inset_alternating, inset_binomial_sum, inset_dp, inset_power_sum, InsetIndex,
    Nat,
};
use insets::oeis::{CacheConfig, OeisCache};
use insets::oracles::{self, LatticeMode, LatticePointQuery};
use insets::registry::{self, catalog_records, list_entries, Status};
use insets::series::GfVariable;
use insets::words::{bruteforce_histogram, enumerate, TernaryWord, WordConstraint};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn word_set(m: u32, n: u32, k: u32) -> BTreeSet<TernaryWord> {
    enumerate(&WordConstraint::new(m, n, k))
        .expect("within cap")
        .into_iter()
        .collect()
}

fn listed(words: &str) -> BTreeSet<TernaryWord> {
    words
        .split(',')
        .map(|w| w.trim().parse().expect("ternary word"))
        .collect()
}

fn values_and_words() -> Outcome {
    let start = Instant::now();
    for (m, n, k, want) in [
        (1, 3, 2, 18u32),
        (1, 3, 3, 7),
        (2, 3, 4, 8),
        (2, 2, 2, 13),
        (3, 2, 3, 19),
        (0, 0, 0, 1),
    ] {
        let got = inset3(m, n, k);
        ensure(got == Nat::from(want), || {
            format!("inset({m},{n},{k}) = {got}, want {want}")
        })?;
    }
    let lists = [
        ((0, 3, 2), "221,212,122,220,202,022"),
        ((1, 3, 2), "1022,1122,1202,1212,1220,1221,2200,2211,2210,2201,2020,2121,2021,2120,2002,2112,2012,2102"),
        ((1, 3, 3), "1222,2122,2022,2212,2202,2221,2220"),
        ((2, 3, 4), "12222,21222,22122,22212,22221,22220,22202,22022"),
    ];
    for ((m, n, k), words) in lists {
        let want = listed(words);
        ensure(word_set(m, n, k) == want, || {
            format!("words({m},{n},{k}) differ from the listed set")
        })?;
    }
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("6 values, 4 word sets ({took:.2?})"))
}

fn four_methods() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for m in 0..=12 {
        for n in 0..=12 {
            for k in 0..=m + 2 * n + 2 {
                let idx = InsetIndex::new(m, n, k);
                let a = inset_alternating(idx).map_err(|e| e.to_string())?;
                let p = inset_power_sum(idx);
                let b = inset_binomial_sum(idx);
                let d = inset_dp(idx);
                ensure(a == b && p == b && d == b, || {
                    format!("{idx}: alt={a} pow={p} sum={b} dp={d}")
                })?;
                cells += 1;
            }
        }
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!("{cells} cells ({took:.2?})"))
}

fn bijection() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for len in 0..=12u32 {
        for m in 0..=len {
            let n = len - m;
            let brute = bruteforce_histogram(m, n, 12).map_err(|e| e.to_string())?;
            for k in 0..=len + 1 {
                let listed = enumerate(&WordConstraint::new(m, n, k))
                    .map_err(|e| e.to_string())?
                    .len();
                let value = inset3(m, n, k);
                let counted = brute.get(k as usize).cloned().unwrap_or_default();
                ensure(Nat::from(listed) == value && counted == value, || {
                    format!("({m},{n},{k}): enumerate={listed} inset={value} bruteforce={counted}")
                })?;
                cells += 1;
            }
        }
    }
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("{cells} constraints ({took:.2?})"))
}

fn identity_suite() -> Outcome {
    let reports = IdentitySuite::default().verify_all(12, 12);
    ensure(reports.len() == 13, || {
        format!("{} identities in the suite", reports.len())
    })?;
    if let Some(r) = reports.iter().find(|r| !r.passed) {
        let c = r
            .counterexample
            .as_ref()
            .expect("failing report has a counterexample");
        return Err(format!(
            "{} fails at {}: {} != {}",
            r.identity, c.cell, c.lhs, c.rhs
        ));
    }
    let checked: u64 = reports.iter().map(|r| r.checked).sum();

    // binomial sum with its upper limit one short
    let faulty = IdentitySuite::new(|idx: InsetIndex| {
        (0..idx.n)
            .map(|i| {
                binomial(u64::from(idx.n), i64::from(i))
                    * binomial(u64::from(idx.m + i), i64::from(idx.k))
            })
            .sum()
    });
    let caught = faulty
        .verify_all(12, 12)
        .iter()
        .filter(|r| !r.passed)
        .count();
    ensure(caught > 0, || {
        "injected off-by-one fault went unnoticed".into()
    })?;
    Ok(format!(
        "13 identities, {checked} instances; fault caught by {caught}"
    ))
}

fn generating_functions() -> Outcome {
    let mut checked = 0;
    for v in [GfVariable::M, GfVariable::N, GfVariable::K] {
        for a in 0..=10 {
            for b in 0..=10 {
                if let Some(bad) = v.check(a, b, 30).first() {
                    return Err(format!(
                        "{v:?}({a},{b}) degree {}: {} != {}",
                        bad.degree, bad.series, bad.expected
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} expansions to order 30"))
}

fn chebyshev_polys() -> Outcome {
    for n in 0..=16 {
        let p = chebyshev::polynomial(0, n).coefficients;
        ensure(p == chebyshev::chebyshev_oracle(Kind::Second, n), || {
            format!("P_(0,{n}) != U_{n}: {p:?}")
        })?;
    }
    ensure(chebyshev::coeff(0, 4, 2) == BigInt::from(-12), || {
        "|u_(4,2)| != 12".into()
    })?;
    ensure(chebyshev::coeff(1, 4, 2) == BigInt::from(-8), || {
        "|t_(4,2)| != 8".into()
    })?;
    for m in 0..=3 {
        for n in 0..=12u32 {
            for k in (n % 2..=n).step_by(2) {
                let half_sum = (n + k) / 2;
                let words = if half_sum >= m {
                    enumerate(&WordConstraint::new(m, half_sum - m, (n - k) / 2))
                        .expect("within cap")
                        .len()
                } else {
                    0
                };
                let c = chebyshev::coeff(m, n, k);
                ensure(c.magnitude() == &Nat::from(words), || {
                    format!("|c_{m}({n},{k})| = {c}, words = {words}")
                })?;
            }
        }
    }
    for n in 0..=16 {
        let p = chebyshev::polynomial(1, n).coefficients;
        let t = chebyshev::chebyshev_oracle(Kind::First, n);
        ensure(p == t, || format!("P_(1,{n}) = {p:?} but T_{n} = {t:?}"))?;
    }
    Ok("U_n, T_n for n <= 16; word counts for m <= 3".into())
}

fn oracles() -> Outcome {
    for m in 0..=10 {
        for n in 0..=10 {
            let d = oracles::delannoy_paths(m, n).map_err(|e| e.to_string())?;
            ensure(d == inset3(m, n, n), || {
                format!("D({m},{n}) = {d} != inset({m},{n},{n})")
            })?;
        }
    }
    for dim in 1..=5 {
        for radius in 0..=8 {
            let q = |mode| LatticePointQuery { dim, radius, mode };
            let ball = oracles::lattice_points(q(LatticeMode::Ball)).map_err(|e| e.to_string())?;
            ensure(ball == inset3(radius, dim, dim), || {
                format!("ball dim={dim} r={radius}: {ball}")
            })?;
            if radius >= 1 {
                let sphere =
                    oracles::lattice_points(q(LatticeMode::Sphere)).map_err(|e| e.to_string())?;
                ensure(sphere == inset3(radius - 1, dim, dim - 1), || {
                    format!("sphere dim={dim} r={radius}: {sphere}")
                })?;
            }
        }
    }
    let w22 = oracles::weak_compositions_with_zeros(2, 2).map_err(|e| e.to_string())?;
    ensure(w22 == Nat::from(9u8), || format!("W(2,2) = {w22}"))?;

    let mut stated_failures = Vec::new();
    let mut observed_failures = 0;
    for m in 0..=8 {
        for k in 1..=6 {
            let w = oracles::weak_compositions_with_zeros(m, k).map_err(|e| e.to_string())?;
            if w != inset3(m + 1, k - 1, k) {
                stated_failures.push(format!(
                    "W({m},{k})={w} vs inset({},{},{k})={}",
                    m + 1,
                    k - 1,
                    inset3(m + 1, k - 1, k)
                ));
            }
            if m >= 1 && w != inset3(k + 1, m - 1, k) {
                observed_failures += 1;
            }
        }
    }
    println!(
        "    note: W(total, zeros) = inset(zeros+1, total-1, zeros) on the same grid: {}",
        if observed_failures == 0 {
            "holds"
        } else {
            "fails"
        }
    );
    ensure(stated_failures.is_empty(), || {
        format!(
            "W(m,k) = inset(m+1,k-1,k) fails on {} of 54 cells, first {}",
            stated_failures.len(),
            stated_failures[0]
        )
    })?;
    Ok("Delannoy, lattice balls and spheres, weak compositions".into())
}

fn registry_entries() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/oeis");
    let cache = OeisCache::new(CacheConfig::offline(dir));
    let mut validated = 0;
    let mut exempt = Vec::new();
    for e in list_entries() {
        let Some(_) = e.oeis_id else {
            exempt.push(e.key);
            continue;
        };
        let r = registry::crosscheck(e.key, &cache).map_err(|err| format!("{}: {err}", e.key))?;
        ensure(r.status == Status::Validated && r.compared >= 15, || {
            format!("{}: {r:?}", e.key)
        })?;
        ensure(r.offset == Some(e.offset), || {
            format!("{}: offset {:?} != frozen {}", e.key, r.offset, e.offset)
        })?;
        if let Some(closed) = e.closed_form {
            for i in e.start..e.start + 16 {
                ensure(closed(i) == e.value(i), || {
                    format!("{}: closed form differs at {i}", e.key)
                })?;
            }
        }
        validated += 1;
    }
    ensure(catalog_records().len() == list_entries().len(), || {
        "catalog export incomplete".into()
    })?;

    let catalan = registry::catalan_numbers(13);
    for k in 0..=12u32 {
        let v = inset3(2 * k, 1, k);
        let d = Nat::from(3 * k + 2);
        ensure(
            &v % &d == Nat::from(0u8) && &v / &d == catalan[k as usize],
            || format!("catalan_scaled at k={k}: {v}"),
        )?;
    }
    ensure(inset3(4, 1, 2) == Nat::from(16u8), || {
        "(3*2+2) C_2 != 16".into()
    })?;

    let fib = registry::generate("fibonacci", 21)
        .map_err(|e| e.to_string())?
        .values;
    for i in 2..fib.len() {
        ensure(fib[i] == &fib[i - 1] + &fib[i - 2], || {
            format!("fibonacci recurrence breaks at m={i}")
        })?;
    }
    ensure(fib[3] == Nat::from(8u8), || "F_6 != 8".into())?;
    let exempt = if exempt.is_empty() {
        String::new()
    } else {
        format!("; no OEIS id: {}", exempt.join(", "))
    };
    Ok(format!("{validated} entries validated{exempt}"))
}

fn run_cli(args: &[&str], env: &[(&str, &str)]) -> (String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_insets"));
    cmd.args(args)
        .env_remove("INSETS_FIXTURES")
        .env_remove("INSETS_OFFLINE")
        .env_remove("INSETS_REMOTE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("run insets binary");
    (
        String::from_utf8(out.stdout).expect("utf-8 output"),
        out.status.code().unwrap_or(-1),
    )
}

fn cli_contract() -> Outcome {
    let offline = [("INSETS_OFFLINE", "1")];
    let exact: &[(&str, &str)] = &[
        ("compute 1 3 2", "18\n"),
        ("compute 0 0 0", "1\n"),
        ("compute 2 3 9", "0\n"),
        ("series k 0 0 5", "1 1 1 1 1 1\n"),
        ("series n 0 0 5", "1 2 4 8 16 32\n"),
        ("poly 1 4", "1 0 -8 0 8\n"),
        ("poly 0 2", "-1 0 4\n"),
        ("poly 0 0", "1\n"),
        ("seq odd_numbers 4", "1 3 5 7\n"),
        ("seq fibonacci 4", "2 3 5 8\n"),
        (
            "verify pascal 10 10",
            "PASS pascal m_max=10 n_max=10 checked=1485\n",
        ),
        ("words 0 0 0", "\ncount: 1\n"),
    ];
    for (args, want) in exact {
        let (out, code) = run_cli(&args.split(' ').collect::<Vec<_>>(), &offline);
        ensure(code == 0 && out == *want, || {
            format!("`insets {args}` printed {out:?} (exit {code})")
        })?;
    }

    let (out, code) = run_cli(&["words", "0", "3", "2"], &offline);
    let lines: Vec<_> = out.lines().collect();
    ensure(
        code == 0 && lines.len() == 7 && lines[6] == "count: 6",
        || format!("words 0 3 2: {out:?}"),
    )?;
    let got: BTreeSet<TernaryWord> = lines[..6]
        .iter()
        .map(|w| w.parse().expect("word"))
        .collect();
    ensure(got == listed("022,122,202,212,220,221"), || {
        "words 0 3 2 set".into()
    })?;
    let (out, code) = run_cli(&["words", "2", "3", "4"], &offline);
    ensure(code == 0 && out.lines().count() == 9, || {
        format!("words 2 3 4: {out:?}")
    })?;

    let (out, code) = run_cli(&["verify", "all", "8", "8"], &offline);
    ensure(
        code == 0 && out.lines().count() == 13 && out.lines().all(|l| l.starts_with("PASS ")),
        || format!("verify all 8 8: exit {code}, {out:?}"),
    )?;
    let (out, code) = run_cli(&["series", "m", "3", "2", "10", "--check"], &offline);
    ensure(code == 0 && out.lines().last() == Some("PASS"), || {
        format!("series --check: {out:?}")
    })?;
    let (out, code) = run_cli(&["crosscheck", "delannoy"], &offline);
    ensure(
        code == 0 && out.starts_with("delannoy A008288 validated offset=0"),
        || format!("crosscheck: {out:?}"),
    )?;

    // exit status mapping
    let (_, code) = run_cli(&["verify", "bogus", "2", "2"], &offline);
    ensure(code == 2, || format!("unknown identity exits {code}"))?;
    let (_, code) = run_cli(&["compute", "1", "x", "2"], &offline);
    ensure(code == 2, || format!("malformed argument exits {code}"))?;
    let empty = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir = empty.path().to_str().expect("utf-8 temp path");
    let (_, code) = run_cli(&["--fixtures", dir, "crosscheck", "delannoy"], &offline);
    ensure(code == 3, || format!("missing fixture exits {code}"))?;
    let wrong: String = (0..30).map(|i| format!("{i} {}\n", i + 1)).collect();
    std::fs::write(empty.path().join("b008288.txt"), wrong).map_err(|e| e.to_string())?;
    let (out, code) = run_cli(&["--fixtures", dir, "crosscheck", "delannoy"], &offline);
    ensure(code == 1 && out.contains("provisional"), || {
        format!("disagreeing fixture exits {code}: {out:?}")
    })?;
    Ok(format!(
        "{} byte-exact outputs, exit statuses 0/1/2/3",
        exact.len()
    ))
}

fn main() {
    let started = Instant::now();
    let criteria: [Criterion; 9] = [
        ("worked values and word lists", values_and_words),
        ("four evaluation methods agree", four_methods),
        ("word bijection", bijection),
        ("identity suite", identity_suite),
        ("generating functions", generating_functions),
        ("Chebyshev polynomials", chebyshev_polys),
        ("oracles", oracles),
        ("sequence registry", registry_entries),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of 9 passed in {:.2?}",
        9 - failed,
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
