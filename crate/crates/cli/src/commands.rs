use std::path::PathBuf;

use serde_json::{json, Value};

use insets::chebyshev;
use insets::identities::{self, GridReport, IdentityId};
use insets::inset::{inset3, trapeze_table};
use insets::oeis::{CacheConfig, OeisCache, DEFAULT_REMOTE};
use insets::registry::{self, RegistryError, Status, ValidationReport};
use insets::series::GfVariable;
use insets::words::{self, WordConstraint};

use crate::output::{CmdResult, Failure, Format, Out};

/// Word listings longer than this need `--limit` or `--force`.
pub const WORD_LISTING_THRESHOLD: u64 = 10_000;
pub const MAX_SERIES_ORDER: usize = 512;

pub struct Context {
    format: Format,
    cache: CacheConfig,
}

impl Context {
    pub fn new(
        format: Format,
        fixtures: Option<PathBuf>,
        offline: bool,
        remote: Option<String>,
    ) -> Self {
        let dir = fixtures.unwrap_or_else(|| {
            PathBuf::from(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/../core/fixtures/oeis"
            ))
        });
        let cache = if offline {
            CacheConfig::offline(dir)
        } else {
            CacheConfig::online(dir, remote.unwrap_or_else(|| DEFAULT_REMOTE.to_string()))
        };
        Self { format, cache }
    }
}

fn strings<T: ToString>(values: impl IntoIterator<Item = T>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

pub fn compute(ctx: &Context, m: u32, n: u32, k: u32) -> CmdResult {
    let value = inset3(m, n, k);
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => out.line(&value)?,
        Format::Json => out.json(&json!({ "m": m, "n": n, "k": k, "value": value.to_string() }))?,
        Format::Csv => out.csv(
            &["m", "n", "k", "value"],
            [strings([m, n, k])
                .into_iter()
                .chain([value.to_string()])
                .collect()],
        )?,
    }
    out.finish()
}

pub fn table(ctx: &Context, n: u32, m_max: u32) -> CmdResult {
    let t = trapeze_table(n, m_max);
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => {
            for row in &t.rows {
                out.row(row)?;
            }
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = t.rows.iter().map(strings).collect();
            out.json(&json!({ "n": n, "m_max": m_max, "rows": rows }))?;
        }
        Format::Csv => {
            let records = t.rows.iter().enumerate().flat_map(|(m, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(k, v)| vec![m.to_string(), k.to_string(), v.to_string()])
            });
            out.csv(&["m", "k", "value"], records)?;
        }
    }
    out.finish()
}

pub fn words(
    ctx: &Context,
    m: u32,
    n: u32,
    k: u32,
    limit: Option<usize>,
    force: bool,
) -> CmdResult {
    let c = WordConstraint::new(m, n, k);
    let iter = words::words(&c).map_err(Failure::usage)?;
    let total = inset3(m, n, k);
    if limit.is_none() && !force && total > WORD_LISTING_THRESHOLD.into() {
        return Err(Failure::usage(format!(
            "{total} words exceed the listing threshold of {WORD_LISTING_THRESHOLD}; pass --limit N or --force"
        )));
    }
    let shown = iter.take(limit.unwrap_or(usize::MAX));
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => {
            for w in shown {
                out.line(w)?;
            }
            out.line(format_args!("count: {total}"))?;
        }
        Format::Json => {
            let listed = strings(shown);
            out.json(
                &json!({ "m": m, "n": n, "k": k, "count": total.to_string(), "words": listed }),
            )?;
        }
        Format::Csv => out.csv(&["word"], shown.map(|w| vec![w.to_string()]))?,
    }
    out.finish()
}

fn report_line(r: &GridReport) -> String {
    let head = format!(
        "{} m_max={} n_max={} checked={}",
        r.identity, r.m_max, r.n_max, r.checked
    );
    match &r.counterexample {
        None => format!("PASS {head}"),
        Some(c) => format!("FAIL {head} at {}: lhs={} rhs={}", c.cell, c.lhs, c.rhs),
    }
}

pub fn verify(ctx: &Context, identity: &str, m_max: u32, n_max: u32) -> CmdResult {
    let reports = if identity == "all" {
        identities::verify_all(m_max, n_max)
    } else {
        let id: IdentityId = identity.parse().map_err(|e| {
            let known: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
            Failure::usage(format!("{e}; expected one of: all, {}", known.join(", ")))
        })?;
        vec![identities::verify(id, m_max, n_max)]
    };
    let passed = reports.iter().all(|r| r.passed);
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => {
            for r in &reports {
                out.line(report_line(r))?;
            }
        }
        Format::Json => out.json(&json!({ "passed": passed, "reports": reports }))?,
        Format::Csv => {
            let records = reports.iter().map(|r| {
                let cell = r
                    .counterexample
                    .as_ref()
                    .map(|c| c.cell.to_string())
                    .unwrap_or_default();
                vec![
                    r.identity.to_string(),
                    r.m_max.to_string(),
                    r.n_max.to_string(),
                    r.checked.to_string(),
                    if r.passed { "PASS" } else { "FAIL" }.to_string(),
                    cell,
                ]
            });
            out.csv(
                &[
                    "identity",
                    "m_max",
                    "n_max",
                    "checked",
                    "result",
                    "counterexample",
                ],
                records,
            )?;
        }
    }
    out.finish()?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

pub fn series(
    ctx: &Context,
    v: GfVariable,
    a: u32,
    b: u32,
    order: usize,
    check: bool,
) -> CmdResult {
    if order > MAX_SERIES_ORDER {
        return Err(Failure::usage(format!(
            "order {order} exceeds the maximum of {MAX_SERIES_ORDER}"
        )));
    }
    let s = v.series(a, b, order);
    let mismatches = if check {
        v.check(a, b, order)
    } else {
        Vec::new()
    };
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => {
            out.row(&s.coefficients)?;
            if check {
                match mismatches.first() {
                    None => out.line("PASS")?,
                    Some(f) => out.line(format_args!(
                        "FAIL degree {}: coefficient={} inset={}",
                        f.degree, f.series, f.expected
                    ))?,
                }
            }
        }
        Format::Json => {
            let mut doc = json!({
                "variable": v,
                "a": a,
                "b": b,
                "order": order,
                "coefficients": strings(&s.coefficients),
            });
            if check {
                doc["check"] = json!({ "passed": mismatches.is_empty(), "mismatches": mismatches });
            }
            out.json(&doc)?;
        }
        Format::Csv => {
            if check {
                let records = s.coefficients.iter().enumerate().map(|(d, c)| {
                    let expected = v
                        .expected(a, b, d)
                        .map(|e| e.to_string())
                        .unwrap_or_default();
                    vec![d.to_string(), c.to_string(), expected]
                });
                out.csv(&["degree", "coefficient", "inset"], records)?;
            } else {
                let records = s
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(d, c)| vec![d.to_string(), c.to_string()]);
                out.csv(&["degree", "coefficient"], records)?;
            }
        }
    }
    out.finish()?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

pub fn poly(ctx: &Context, m: u32, n: u32) -> CmdResult {
    let p = chebyshev::polynomial(m, n);
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => out.row(&p.coefficients)?,
        Format::Json => out.json(&serde_json::to_value(&p).map_err(Failure::io)?)?,
        Format::Csv => {
            let records = p
                .coefficients
                .iter()
                .enumerate()
                .map(|(d, c)| vec![d.to_string(), c.to_string()]);
            out.csv(&["degree", "coefficient"], records)?;
        }
    }
    out.finish()
}

fn registry_failure(e: RegistryError) -> Failure {
    match e {
        RegistryError::UnknownKey(_) | RegistryError::NoOeisId(_) => Failure::usage(e),
        RegistryError::FixtureUnavailable { .. } | RegistryError::Fixture(_) => Failure::io(e),
    }
}

pub fn seq(ctx: &Context, key: &str, count: usize) -> CmdResult {
    if count == 0 {
        return Err(Failure::usage("count must be positive"));
    }
    let slice = registry::generate(key, count).map_err(registry_failure)?;
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => out.row(&slice.values)?,
        Format::Json => out.json(&serde_json::to_value(&slice).map_err(Failure::io)?)?,
        Format::Csv => {
            let records = slice
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(slice.start + i as u64).to_string(), v.to_string()]);
            out.csv(&["index", "value"], records)?;
        }
    }
    out.finish()
}

enum Outcome {
    Report(ValidationReport),
    Skipped(&'static str),
}

fn outcome_line(o: &Outcome) -> String {
    match o {
        Outcome::Skipped(key) => format!("{key} - skipped (no OEIS id)"),
        Outcome::Report(r) => match (&r.status, &r.mismatch) {
            (Status::Validated, _) => format!(
                "{} {} validated offset={} compared={}",
                r.key,
                r.oeis_id,
                r.offset.unwrap_or_default(),
                r.compared
            ),
            (Status::Provisional, Some(mm)) => format!(
                "{} {} provisional offset={} mismatch at index {}: generated={} fixture={}",
                r.key, r.oeis_id, mm.offset, mm.registry_index, mm.generated, mm.fixture
            ),
            (Status::Provisional, None) => format!(
                "{} {} provisional offset={} compared={} (too few terms)",
                r.key,
                r.oeis_id,
                r.offset
                    .map(|o| o.to_string())
                    .unwrap_or_else(|| "-".into()),
                r.compared
            ),
        },
    }
}

pub fn crosscheck(ctx: &Context, key: &str, refresh: bool) -> CmdResult {
    let entries: Vec<_> = if key == "all" {
        registry::list_entries().iter().collect()
    } else {
        vec![registry::find(key).map_err(registry_failure)?]
    };
    let cache = OeisCache::new(ctx.cache.clone());
    let mut outcomes = Vec::new();
    for e in entries {
        let Some(id) = e.oeis_id else {
            if key != "all" {
                return Err(registry_failure(RegistryError::NoOeisId(e.key.to_string())));
            }
            outcomes.push(Outcome::Skipped(e.key));
            continue;
        };
        if refresh {
            cache.refresh(id).map_err(Failure::io)?;
        }
        let report = registry::crosscheck(e.key, &cache).map_err(registry_failure)?;
        outcomes.push(Outcome::Report(report));
    }
    let all_validated = outcomes.iter().all(|o| {
        matches!(o, Outcome::Skipped(_))
            || matches!(o, Outcome::Report(r) if r.status == Status::Validated)
    });
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => {
            for o in &outcomes {
                out.line(outcome_line(o))?;
            }
        }
        Format::Json => {
            let results: Vec<Value> = outcomes
                .iter()
                .map(|o| match o {
                    Outcome::Report(r) => serde_json::to_value(r).map_err(Failure::io),
                    Outcome::Skipped(k) => Ok(json!({ "key": k, "status": "skipped" })),
                })
                .collect::<Result<_, _>>()?;
            out.json(&json!({ "all_validated": all_validated, "results": results }))?;
        }
        Format::Csv => {
            let records = outcomes.iter().map(|o| match o {
                Outcome::Skipped(k) => vec![
                    k.to_string(),
                    String::new(),
                    "skipped".into(),
                    String::new(),
                    String::new(),
                ],
                Outcome::Report(r) => vec![
                    r.key.clone(),
                    r.oeis_id.clone(),
                    match r.status {
                        Status::Validated => "validated".into(),
                        Status::Provisional => "provisional".into(),
                    },
                    r.offset.map(|o| o.to_string()).unwrap_or_default(),
                    r.compared.to_string(),
                ],
            });
            out.csv(&["key", "oeis_id", "status", "offset", "compared"], records)?;
        }
    }
    out.finish()?;
    if all_validated {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

pub fn catalog(ctx: &Context) -> CmdResult {
    let records = registry::catalog_records();
    let mut out = Out::new();
    match ctx.format {
        Format::Plain => {
            for r in &records {
                out.line(format_args!(
                    "{} {} start={} offset={} {}",
                    r.key,
                    r.oeis_id.unwrap_or("-"),
                    r.start,
                    r.offset,
                    r.description
                ))?;
            }
        }
        Format::Json => out.json(&serde_json::to_value(&records).map_err(Failure::io)?)?,
        Format::Csv => {
            let rows = records.iter().map(|r| {
                vec![
                    r.key.to_string(),
                    r.oeis_id.unwrap_or_default().to_string(),
                    r.start.to_string(),
                    r.offset.to_string(),
                    serde_json::to_value(r.status)
                        .ok()
                        .and_then(|v| v.as_str().map(String::from))
                        .unwrap_or_default(),
                    r.description.to_string(),
                ]
            });
            out.csv(
                &["key", "oeis_id", "start", "offset", "status", "description"],
                rows,
            )?;
        }
    }
    out.finish()
}
